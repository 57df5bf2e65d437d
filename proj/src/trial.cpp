#include "robin/trial.hpp"

#include "robin/error.hpp"
#include "robin/numerics.hpp"
#include "robin/robin_zeros.hpp"
#include "robin/special.hpp"

#include <cmath>
#include <limits>

namespace robin::trial {

using special::bessel_j;

TrialFunctions::TrialFunctions(const DimensionSpec& dim, double sigma)
    : dim_(dim), sigma_(sigma) {
    if (!(sigma > 0.0)) throw DomainError("TrialFunctions: sigma must be > 0");
    alpha_ = zeros::first_cross_zero(dim.nu, 0, sigma);
    beta_ = zeros::first_cross_zero(dim.nu, 1, sigma);
}

double TrialFunctions::bessel_ratio_alpha(double r) const {
    const double x = alpha_ * r;
    const double den = bessel_j(dim_.nu, x);
    if (den == 0.0) throw DomainError("trial: J_nu(alpha r) vanishes");
    return bessel_j(dim_.nu + 1.0, x) / den;
}

double TrialFunctions::bessel_ratio_beta(double r) const {
    const double x = beta_ * r;
    return bessel_j(dim_.nu + 2.0, x) / bessel_j(dim_.nu + 1.0, x);
}

double TrialFunctions::q_second_at_origin() const {
    const double nu = dim_.nu;
    return alpha_ * alpha_ / (nu + 1.0) - beta_ * beta_ / (nu + 2.0);
}

double TrialFunctions::w_over_r(double r) const {
    const double nu = dim_.nu;
    if (r < kSeriesRadius) {
        const double c0 = std::pow(beta_, nu + 1.0) / (2.0 * (nu + 1.0) * std::pow(alpha_, nu));
        const double hb = 0.5 * beta_ * r;
        const double ha = 0.5 * alpha_ * r;
        return c0 * (1.0 - hb * hb / (nu + 2.0) + ha * ha / (nu + 1.0));
    }
    return w(r) / r;
}

double TrialFunctions::w(double r) const {
    if (!(r >= 0.0)) throw DomainError("trial: r must be >= 0");
    if (r < kSeriesRadius) return r * w_over_r(r);
    const double den = bessel_j(dim_.nu, alpha_ * r);
    if (den == 0.0) throw DomainError("trial: J_nu(alpha r) vanishes");
    return bessel_j(dim_.nu + 1.0, beta_ * r) / den;
}

double TrialFunctions::q(double r) const {
    if (r < kSeriesRadius) return 1.0 + 0.5 * q_second_at_origin() * r * r;
    return -beta_ * r * bessel_ratio_beta(r) + alpha_ * r * bessel_ratio_alpha(r) + 1.0;
}

double TrialFunctions::q_prime(double r) const {
    if (r < kSeriesRadius) return q_second_at_origin() * r;
    const double nu = dim_.nu;
    const double qq = q(r);
    return (alpha_ * alpha_ - beta_ * beta_) * r + (1.0 - qq) * (qq + 2.0 * nu + 1.0) / r +
           2.0 * alpha_ * qq * bessel_ratio_alpha(r);
}

double TrialFunctions::B(double r) const {
    const double qq = q(r);
    const double wr = w_over_r(r);
    return (qq * qq + 2.0 * dim_.nu + 1.0) * wr * wr;
}

double TrialFunctions::B_prime(double r) const {
    const double c = 2.0 * dim_.nu + 1.0;
    const double qq = q(r);
    const double wr = w_over_r(r);
    if (r < kSeriesRadius) {
        // (q-1)/r ~ q''(0) r / 2
        return 2.0 * (qq * q_prime(r) + 0.5 * q_second_at_origin() * r * (qq * qq + c)) * wr * wr;
    }
    return 2.0 * (qq * q_prime(r) + (qq - 1.0) * (qq * qq + c) / r) * wr * wr;
}

double TrialFunctions::A(double r) const {
    if (r == 0.0) return std::numeric_limits<double>::infinity();
    return q(r) / r;
}

double TrialFunctions::w_extended(double r) const { return w(std::min(r, 1.0)); }

double TrialFunctions::w_extended_prime(double r) const {
    if (r >= 1.0) return 0.0;
    if (r < kSeriesRadius) return w_over_r(r) * q(r);
    return w(r) * q(r) / r;
}

SeriesLimits series_limits(const TrialFunctions& f) {
    const double nu = f.dim().nu;
    const double a = f.alpha();
    const double b = f.beta();
    SeriesLimits s;
    s.w_slope = std::pow(b, nu + 1.0) / (2.0 * (nu + 1.0) * std::pow(a, nu));
    s.B_origin = (2.0 * nu + 2.0) * s.w_slope * s.w_slope;
    const double inf = std::numeric_limits<double>::infinity();
    s.w_slope_nu_form = nu == 0.0 ? inf : std::pow(b, nu + 1.0) / (2.0 * nu * std::pow(a, nu));
    s.B_origin_nu_form =
        nu == 0.0 ? inf : 2.0 * (nu + 1.0) * std::pow(b, 2.0 * nu + 2.0) / (4.0 * nu * nu * std::pow(a, 2.0 * nu));
    return s;
}

TrialProfile trial_profile(const DimensionSpec& dim, double sigma, int n) {
    if (n < 16) throw DomainError("trial_profile: need at least 16 samples");
    const TrialFunctions f(dim, sigma);
    TrialProfile p;
    p.dim = dim;
    p.sigma = sigma;
    p.alpha = f.alpha();
    p.beta = f.beta();
    const auto count = static_cast<std::size_t>(n);
    p.r.resize(count);
    p.w.resize(count);
    p.q.resize(count);
    p.B.resize(count);
    p.A.resize(count);
    for (int i = 0; i < n; ++i) {
        const double r = i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1);
        const auto k = static_cast<std::size_t>(i);
        p.r[k] = r;
        p.w[k] = f.w(r);
        p.q[k] = f.q(r);
        p.B[k] = f.B(r);
        p.A[k] = f.A(r);
    }
    return p;
}

double q_prime(const TrialProfile& profile, int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= profile.r.size()) throw DomainError("q_prime: index out of range");
    const double r = profile.r[static_cast<std::size_t>(i)];
    if (!(r > 0.0)) throw DomainError("q_prime: requires r > 0");
    const double nu = profile.dim.nu;
    const double a = profile.alpha;
    const double b = profile.beta;
    const double q = profile.q[static_cast<std::size_t>(i)];
    const double ja = bessel_j(nu + 1.0, a * r) / bessel_j(nu, a * r);
    return (a * a - b * b) * r + (1.0 - q) * (q + 2.0 * nu + 1.0) / r + 2.0 * a * q * ja;
}

double rayleigh_identity_residual(const TrialProfile& profile) {
    const TrialFunctions f(profile.dim, profile.sigma);
    const double nu = profile.dim.nu;
    const double a = f.alpha();
    const double b = f.beta();
    auto num = [&](double r) {
        const double j = bessel_j(nu, a * r);
        return f.B(r) * j * j * r;
    };
    auto den = [&](double r) {
        const double j = bessel_j(nu + 1.0, b * r);
        return j * j * r;
    };
    const double top = numerics::integrate(num, 0.0, 1.0, 1e-10);
    const double bottom = numerics::integrate(den, 0.0, 1.0, 1e-10);
    return std::abs(top / bottom - (b * b - a * a));
}

double gap_quotient(const DimensionSpec& dim, const RadialFunction& g, const std::function<double(double)>& weight,
                    double r_max) {
    if (!(r_max > 0.0)) throw DomainError("gap_quotient: r_max must be > 0");
    const double n = dim.n;
    auto num = [&](double r) {
        const double gv = g.value(r);
        const double gd = g.derivative(r);
        return (gd * gd + (n - 1.0) * gv * gv / (r * r)) * weight(r) * std::pow(r, n - 1.0);
    };
    auto den = [&](double r) {
        const double gv = g.value(r);
        return gv * gv * weight(r) * std::pow(r, n - 1.0);
    };
    const double bottom = numerics::integrate(den, 0.0, r_max, 1e-10);
    if (!(bottom > 0.0)) throw DomainError("gap_quotient: weighted norm of g vanishes");
    return numerics::integrate(num, 0.0, r_max, 1e-12) / bottom;
}

std::function<double(double)> ball_weight(const DimensionSpec& dim, double alpha) {
    const double nu = dim.nu;
    return [nu, alpha](double r) {
        if (r < 1e-8) {
            const double c = std::pow(0.5 * alpha, nu) / std::tgamma(nu + 1.0);
            return c * c;
        }
        const double u = std::pow(r, -nu) * bessel_j(nu, alpha * r);
        return u * u;
    };
}

RadialFunction scaled_trial(const TrialFunctions& f, double gamma) {
    return RadialFunction{[f, gamma](double r) { return f.w_extended(gamma * r); },
                          [f, gamma](double r) { return gamma * f.w_extended_prime(gamma * r); }};
}

}  // namespace robin::trial
