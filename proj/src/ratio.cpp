#include "robin/ratio.hpp"

#include "robin/error.hpp"
#include "robin/robin_zeros.hpp"
#include "robin/special.hpp"

#include <cmath>
#include <sstream>

namespace robin::ratio {

namespace {

constexpr double kMaxSigma = 1e8;

double ratio_at(const DimensionSpec& dim, double sigma) {
    const double a = zeros::first_cross_zero(dim.nu, 0, sigma);
    const double b = zeros::first_cross_zero(dim.nu, 1, sigma);
    return (b * b) / (a * a);
}

}  // namespace

DimensionSpec DimensionSpec::make(int n) {
    if (n < 2) throw DomainError("DimensionSpec: dimension must be >= 2");
    return DimensionSpec{n, 0.5 * n - 1.0, special::unit_ball_volume(n)};
}

double RatioPoint::d_ratio() const {
    return 2.0 * beta * d_beta / (alpha * alpha) - 2.0 * beta * beta * d_alpha / (alpha * alpha * alpha);
}

RatioPoint ratio_point(const DimensionSpec& dim, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("ratio_point: sigma must be > 0");
    sigma = std::max(sigma, kMinSigma);
    const double nu = dim.nu;
    RatioPoint p;
    p.sigma = sigma;
    p.alpha = zeros::first_cross_zero(nu, 0, sigma);
    p.beta = zeros::first_cross_zero(nu, 1, sigma);
    p.ratio = (p.beta * p.beta) / (p.alpha * p.alpha);
    p.d_alpha = p.alpha / (sigma * sigma - 2.0 * nu * sigma + p.alpha * p.alpha);
    p.d_beta = p.beta / (sigma * sigma - 2.0 * nu * sigma - 2.0 * nu - 1.0 + p.beta * p.beta);
    return p;
}

std::vector<RatioPoint> ratio_curve(const DimensionSpec& dim, double sigma_min, double sigma_max, int steps) {
    if (!(sigma_min > 0.0) || !(sigma_max > sigma_min) || !std::isfinite(sigma_max)) {
        throw DomainError("ratio_curve: requires 0 < sigma_min < sigma_max");
    }
    if (steps < 2) throw DomainError("ratio_curve: steps must be >= 2");
    std::vector<RatioPoint> out;
    out.reserve(static_cast<std::size_t>(steps));
    const double lo = std::log(sigma_min);
    const double hi = std::log(sigma_max);
    for (int i = 0; i < steps; ++i) {
        const double sigma = i == steps - 1 ? sigma_max : std::exp(lo + (hi - lo) * i / (steps - 1));
        out.push_back(ratio_point(dim, sigma));
    }
    return out;
}

double dirichlet_ratio(const DimensionSpec& dim) {
    const double a = special::classical_zero(dim.nu, 1);
    const double b = special::classical_zero(dim.nu + 1.0, 1);
    return (b * b) / (a * a);
}

double critical_sigma(const DimensionSpec& dim, double rho, double ratio_tol) {
    const double floor_ratio = dirichlet_ratio(dim);
    if (!(rho > floor_ratio) || !std::isfinite(rho)) {
        std::ostringstream msg;
        msg << "critical_sigma: target " << rho << " must exceed the Dirichlet limit " << floor_ratio;
        throw OutOfRangeError(msg.str());
    }
    // ratio is strictly decreasing in sigma: find lo with ratio(lo) > rho > ratio(hi).
    double lo = 1.0;
    double hi = 1.0;
    double r = ratio_at(dim, 1.0);
    if (r > rho) {
        while (r > rho) {
            lo = hi;
            hi *= 2.0;
            if (hi > kMaxSigma) throw OutOfRangeError("critical_sigma: root beyond sigma = 1e8");
            r = ratio_at(dim, hi);
        }
    } else {
        while (r <= rho) {
            hi = lo;
            lo *= 0.5;
            if (lo < kMinSigma) throw OutOfRangeError("critical_sigma: root below sigma = 1e-6");
            r = ratio_at(dim, lo);
        }
    }
    double llo = std::log(lo);
    double lhi = std::log(hi);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (llo + lhi);
        const double rm = ratio_at(dim, std::exp(mid));
        if (std::abs(rm - rho) <= ratio_tol) return std::exp(mid);
        if (rm > rho) llo = mid; else lhi = mid;
        if (lhi - llo < 1e-15) return std::exp(mid);
    }
    throw ConvergenceError("critical_sigma: bisection did not reach tolerance");
}

LemmaReport lemma_checks(const DimensionSpec& dim, double sigma) {
    const RatioPoint p = ratio_point(dim, sigma);
    const double nu = dim.nu;
    const double a2 = p.alpha * p.alpha;
    const double b2 = p.beta * p.beta;
    LemmaReport rep;
    rep.sigma = p.sigma;
    rep.gap = b2 - a2;
    rep.slope_margin = b2 - a2 - (2.0 * nu + 1.0);
    rep.curvature_margin = b2 / (nu + 2.0) - a2 / (nu + 1.0);
    rep.slope_ok = rep.slope_margin > 0.0;
    rep.curvature_ok = rep.curvature_margin > 0.0;
    rep.gap_ok = rep.gap > 2.0 * nu + 1.0;
    return rep;
}

}  // namespace robin::ratio
