#include "robin/rearrange.hpp"

#include "robin/error.hpp"
#include "robin/numerics.hpp"
#include "robin/robin_zeros.hpp"
#include "robin/special.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace robin::rearrange {

DiscreteField::DiscreteField(std::vector<Cell> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw DomainError("DiscreteField: no cells");
    for (const Cell& c : cells_) {
        if (!(c.measure > 0.0) || !std::isfinite(c.measure)) throw DomainError("DiscreteField: cell measure must be > 0");
        if (!std::isfinite(c.value)) throw DomainError("DiscreteField: cell value must be finite");
        total_ += c.measure;
    }
}

double DiscreteField::l2_squared() const {
    double sum = 0.0;
    for (const Cell& c : cells_) sum += c.value * c.value * c.measure;
    return sum;
}

double DiscreteField::max_value() const {
    return std::max_element(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
               return a.value < b.value;
           })->value;
}

double DiscreteField::min_value() const {
    return std::min_element(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
               return a.value < b.value;
           })->value;
}

double RearrangedProfile::value(double s) const {
    if (values.empty()) throw DomainError("RearrangedProfile: empty profile");
    if (!increasing) {
        if (s <= breakpoints.front()) return values.front();
        auto it = std::lower_bound(breakpoints.begin() + 1, breakpoints.end(), s);
        if (it == breakpoints.end()) return values.back();
        return values[static_cast<std::size_t>(it - breakpoints.begin() - 1)];
    }
    if (s >= breakpoints.back()) return values.back();
    auto it = std::upper_bound(breakpoints.begin() + 1, breakpoints.end(), s);
    return values[static_cast<std::size_t>(it - breakpoints.begin() - 1)];
}

double RearrangedProfile::smooth(double s) const { return closure ? closure(s) : value(s); }

void RearrangedProfile::index() {
    prefix.assign(breakpoints.size(), 0.0);
    for (std::size_t j = 0; j < values.size(); ++j) {
        prefix[j + 1] = prefix[j] + values[j] * (breakpoints[j + 1] - breakpoints[j]);
    }
}

double RearrangedProfile::cumulative(double s) const {
    if (prefix.size() == breakpoints.size() && !values.empty()) {
        if (s <= 0.0) return 0.0;
        if (s >= breakpoints.back()) return prefix.back();
        const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), s);
        const auto j = static_cast<std::size_t>(it - breakpoints.begin() - 1);
        return prefix[j] + values[j] * (s - breakpoints[j]);
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double a = breakpoints[j];
        const double b = breakpoints[j + 1];
        if (s <= a) break;
        sum += values[j] * (std::min(s, b) - a);
    }
    return sum;
}

double RearrangedProfile::l2_squared() const {
    double sum = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        sum += values[j] * values[j] * (breakpoints[j + 1] - breakpoints[j]);
    }
    return sum;
}

double distribution(const DiscreteField& field, double t) {
    if (!(t >= 0.0)) throw DomainError("distribution: level must be >= 0");
    double sum = 0.0;
    for (const Cell& c : field.cells()) {
        if (c.value > t) sum += c.measure;
    }
    return sum;
}

namespace {

RearrangedProfile build_profile(const DiscreteField& field, bool increasing) {
    std::vector<Cell> cells = field.cells();
    if (cells.empty()) throw DomainError("rearrangement: empty field");
    if (increasing) {
        std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.value < b.value; });
    } else {
        std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.value > b.value; });
    }
    RearrangedProfile p;
    p.increasing = increasing;
    p.breakpoints.push_back(0.0);
    double s = 0.0;
    for (const Cell& c : cells) {
        s += c.measure;
        if (!p.values.empty() && p.values.back() == c.value) {
            p.breakpoints.back() = s;
        } else {
            p.values.push_back(c.value);
            p.breakpoints.push_back(s);
        }
    }
    p.index();
    return p;
}

}  // namespace

RearrangedProfile decreasing_rearrangement(const DiscreteField& field) { return build_profile(field, false); }

RearrangedProfile increasing_rearrangement(const DiscreteField& field) { return build_profile(field, true); }

double integrate_product(const RearrangedProfile& a, const RearrangedProfile& b) {
    std::vector<double> cuts;
    cuts.reserve(a.breakpoints.size() + b.breakpoints.size());
    std::merge(a.breakpoints.begin(), a.breakpoints.end(), b.breakpoints.begin(), b.breakpoints.end(),
               std::back_inserter(cuts));
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const double end = std::min(a.total_measure(), b.total_measure());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = std::min(cuts[i + 1], end);
        if (hi <= lo) break;
        const double mid = 0.5 * (lo + hi);
        sum += a.value(mid) * b.value(mid) * (hi - lo);
    }
    return sum;
}

RearrangementBounds rearrangement_bounds(const DiscreteField& f, const DiscreteField& g) {
    if (f.cells().size() != g.cells().size()) throw DomainError("rearrangement_bounds: fields differ in size");
    RearrangementBounds out;
    for (std::size_t i = 0; i < f.cells().size(); ++i) {
        const Cell& a = f.cells()[i];
        const Cell& b = g.cells()[i];
        if (std::abs(a.measure - b.measure) > 1e-14 * std::max(a.measure, b.measure)) {
            throw DomainError("rearrangement_bounds: cell measures differ");
        }
        out.direct += a.value * b.value * a.measure;
    }
    const RearrangedProfile g_dec = decreasing_rearrangement(g);
    out.lower = integrate_product(increasing_rearrangement(f), g_dec);
    out.upper = integrate_product(decreasing_rearrangement(f), g_dec);
    return out;
}

double BallEigen::ball_measure() const { return dim.ball_volume * std::pow(radius, dim.n); }

double BallEigen::z(double r) const {
    const double nu = dim.nu;
    if (r < 1e-8) return scale * std::pow(0.5 * wavenumber, nu) / std::tgamma(nu + 1.0);
    return scale * std::pow(r, -nu) * special::bessel_j(nu, wavenumber * r);
}

double BallEigen::z_prime(double r) const {
    if (r == 0.0) return 0.0;
    const double nu = dim.nu;
    return -scale * wavenumber * std::pow(r, -nu) * special::bessel_j(nu + 1.0, wavenumber * r);
}

double BallEigen::z_star(double s) const {
    if (!(s >= 0.0)) throw DomainError("z_star: s must be >= 0");
    return z(std::pow(s / dim.ball_volume, 1.0 / dim.n));
}

double BallEigen::z_star_prime(double s) const {
    if (!(s > 0.0)) throw DomainError("z_star_prime: s must be > 0");
    const double r = std::pow(s / dim.ball_volume, 1.0 / dim.n);
    return z_prime(r) * r / (dim.n * s);
}

double BallEigen::l2_squared() const {
    const double nu = dim.nu;
    const double k = wavenumber;
    auto f = [nu, k](double r) {
        const double j = special::bessel_j(nu, k * r);
        return j * j * r;
    };
    return dim.n * dim.ball_volume * scale * scale * numerics::integrate(f, 0.0, radius, 1e-10);
}

BallEigen ball_eigen(const DimensionSpec& dim, double sigma, double radius, double scale) {
    if (!(radius > 0.0)) throw DomainError("ball_eigen: radius must be > 0");
    const double alpha = zeros::first_cross_zero(dim.nu, 0, sigma);
    return BallEigen{dim, radius, alpha / radius, scale};
}

RearrangedProfile ball_eigen_rearrangement(const DimensionSpec& dim, double sigma, double radius, double scale,
                                           int samples) {
    if (samples < 1) throw DomainError("ball_eigen_rearrangement: samples must be >= 1");
    const BallEigen ball = ball_eigen(dim, sigma, radius, scale);
    const double total = ball.ball_measure();
    RearrangedProfile p;
    p.breakpoints.resize(static_cast<std::size_t>(samples) + 1);
    p.values.resize(static_cast<std::size_t>(samples));
    for (int j = 0; j <= samples; ++j) p.breakpoints[static_cast<std::size_t>(j)] = total * j / samples;
    p.breakpoints.back() = total;
    for (int j = 0; j < samples; ++j) {
        p.values[static_cast<std::size_t>(j)] = ball.z_star(total * (j + 0.5) / samples);
    }
    p.closure = [ball](double s) { return ball.z_star(s); };
    p.index();
    return p;
}

double ball_ode_residual(const BallEigen& ball, double s) {
    if (!(s > 0.0)) throw DomainError("ball_ode_residual: s must be > 0");
    const int n = ball.dim.n;
    const double cn = ball.dim.ball_volume;
    const double r = std::pow(s / cn, 1.0 / n);
    auto integrand = [&ball, n, cn](double rho) { return ball.z(rho) * n * cn * std::pow(rho, n - 1); };
    const double mass = numerics::integrate(integrand, 0.0, r, 1e-10);
    const double rhs = ball.mu1() / (n * n) * std::pow(cn, -2.0 / n) * std::pow(s, 2.0 / n - 2.0) * mass;
    const double lhs = -ball.z_star_prime(s);
    return std::abs(lhs - rhs) / std::abs(rhs);
}

std::string to_string(ChitiRegime regime) {
    switch (regime) {
        case ChitiRegime::dominates: return "dominates";
        case ChitiRegime::single_crossing: return "single_crossing";
        case ChitiRegime::violation: return "violation";
    }
    return "unknown";
}

namespace {
constexpr std::size_t kChitiSamples = 4096;
}  // namespace

ChitiReport chiti_compare(const RearrangedProfile& u1_star, const DimensionSpec& dim, double sigma, double mu1,
                          double band) {
    if (!(mu1 > 0.0)) throw DomainError("chiti_compare: mu1 must be > 0");
    if (!(band >= 0.0) || !std::isfinite(band)) throw InsufficientResolution("chiti_compare: tolerance band unavailable");
    ChitiReport rep;
    rep.band = band;
    const double alpha = zeros::first_cross_zero(dim.nu, 0, sigma);
    rep.radius = alpha / std::sqrt(mu1);
    BallEigen ball = ball_eigen(dim, sigma, rep.radius, 1.0);
    rep.scale = std::sqrt(u1_star.l2_squared() / ball.l2_squared());
    ball.scale = rep.scale;
    rep.ball_measure = ball.ball_measure();
    rep.ball_exceeds_domain = rep.ball_measure > u1_star.total_measure();
    const double end = std::min(rep.ball_measure, u1_star.total_measure());

    std::size_t inside = 0;
    while (inside < u1_star.steps() && u1_star.breakpoints[inside] < end) ++inside;
    if (inside < 8) throw InsufficientResolution("chiti_compare: fewer than 8 steps inside the comparison range");

    std::vector<double> where;
    std::vector<double> diff;
    if (inside <= kChitiSamples) {
        for (std::size_t j = 0; j < inside; ++j) {
            const double s = 0.5 * (u1_star.breakpoints[j] + std::min(u1_star.breakpoints[j + 1], end));
            where.push_back(s);
            diff.push_back(ball.z_star(s) - u1_star.values[j]);
        }
    } else {
        for (std::size_t j = 0; j < kChitiSamples; ++j) {
            const double s = end * (static_cast<double>(j) + 0.5) / kChitiSamples;
            where.push_back(s);
            diff.push_back(ball.z_star(s) - u1_star.smooth(s));
        }
    }
    rep.min_difference = *std::min_element(diff.begin(), diff.end());
    rep.max_difference = *std::max_element(diff.begin(), diff.end());

    std::optional<std::size_t> first_negative;
    for (std::size_t i = 0; i < diff.size(); ++i) {
        if (diff[i] < -band) {
            if (!first_negative) first_negative = i;
        } else if (diff[i] > band && first_negative) {
            rep.max_violation = std::max(rep.max_violation, diff[i]);
        }
    }
    if (!first_negative) {
        rep.regime = ChitiRegime::dominates;
        return rep;
    }
    if (rep.max_violation > 0.0 || *first_negative == 0) {
        rep.regime = ChitiRegime::violation;
        if (*first_negative == 0) rep.max_violation = std::max(rep.max_violation, -diff[0]);
        return rep;
    }
    rep.regime = ChitiRegime::single_crossing;
    std::size_t i = *first_negative;
    while (i > 0 && diff[i - 1] < 0.0) --i;
    if (i == 0) {
        rep.crossing = where[0];
    } else {
        const double d0 = diff[i - 1];
        const double d1 = diff[i];
        rep.crossing = where[i - 1] + (where[i] - where[i - 1]) * d0 / (d0 - d1);
    }
    return rep;
}

Lemma31Report lemma31_check(const RearrangedProfile& u1_star, double mu1, const DimensionSpec& dim, double s_max,
                            int windows, double delta_fraction) {
    const double total = u1_star.total_measure();
    if (u1_star.increasing) throw DomainError("lemma31_check: expects a decreasing rearrangement");
    if (!(s_max > 0.0) || s_max > total * (1.0 + 1e-12)) throw DomainError("lemma31_check: requires 0 < s_max <= |Omega|");
    if (windows < 1) throw DomainError("lemma31_check: windows must be >= 1");
    const double delta = delta_fraction * total;
    Lemma31Report rep;
    if (!(s_max > delta)) return rep;
    const int n = dim.n;
    const double factor = mu1 / (n * n) * std::pow(dim.ball_volume, -2.0 / n);
    auto rhs = [&](double s) { return factor * std::pow(s, 2.0 / n - 2.0) * u1_star.cumulative(s); };
    const double width = (s_max - delta) / windows;
    constexpr int panels = 16;
    for (int w = 0; w < windows; ++w) {
        const double a = delta + width * w;
        const double b = w == windows - 1 ? s_max : a + width;
        const double lhs = (u1_star.smooth(a) - u1_star.smooth(b)) / (b - a);
        const double hstep = (b - a) / panels;
        double simpson = rhs(a) + rhs(b);
        for (int k = 1; k < panels; ++k) simpson += (k % 2 == 1 ? 4.0 : 2.0) * rhs(a + k * hstep);
        const double mean = simpson * hstep / 3.0 / (b - a);
        const double rel = (lhs - mean) / mean;
        if (w == 0 || rel > rep.max_violation) {
            rep.max_violation = rel;
            rep.worst_s = 0.5 * (a + b);
        }
        ++rep.windows;
    }
    return rep;
}

}  // namespace robin::rearrange
