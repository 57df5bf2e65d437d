#include "robin/special.hpp"

#include "robin/error.hpp"
#include "robin/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace robin::special {

namespace {

constexpr double kMaxArgument = 1e6;
constexpr int kMaxSeriesTerms = 200;
constexpr double kSeriesCutoff = 1e-17;
constexpr double kRescaleAbove = 1e250;

void check_order_and_argument(double nu, double z, const char* who) {
    if (!(nu >= 0.0) || !(z >= 0.0) || !std::isfinite(nu) || !std::isfinite(z)) {
        std::ostringstream msg;
        msg << who << ": requires nu >= 0 and z >= 0 (got nu=" << nu << ", z=" << z << ")";
        throw DomainError(msg.str());
    }
    if (z > kMaxArgument) {
        std::ostringstream msg;
        msg << who << ": argument " << z << " exceeds supported range " << kMaxArgument;
        throw DomainError(msg.str());
    }
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_fn: requires x > 0");
    return std::tgamma(x);
}

double unit_ball_volume(int n) {
    if (n < 1) throw DomainError("unit_ball_volume: dimension must be positive");
    return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(1.0 + 0.5 * n);
}

namespace detail {

double series_limit(double) { return 8.0; }

double bessel_j_series(double nu, double z) {
    if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double half = 0.5 * z;
    // (z/2)^nu / Gamma(nu+1) through logs.
    double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
    if (term == 0.0) return 0.0;
    const double q = -half * half;
    double sum = term;
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (std::abs(term) < kSeriesCutoff * std::abs(sum) && k > half) break;
    }
    return sum;
}

// Miller's algorithm: recur downwards from an order well above z, then
// normalize with (z/2)^f = sum_k (f+2k) Gamma(f+k)/k! J_{f+2k}(z), where
// f is the fractional part of nu.
double bessel_j_miller(double nu, double z) {
    if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double f = nu - std::floor(nu);
    const int n = static_cast<int>(std::floor(nu));
    const double top = std::max(static_cast<double>(n), z);
    int kmax = static_cast<int>(top + 30.0 + 10.0 * std::cbrt(top));
    if (kmax % 2 != 0) ++kmax;

    // Normalization coefficients c_j for the even indices 2j, built upwards.
    // c_0 = Gamma(f+1); g_j = Gamma(f+j)/j!, c_j = (f+2j) g_j.
    const int jmax = kmax / 2;
    std::vector<double> coeff(static_cast<std::size_t>(jmax) + 1);
    coeff[0] = std::tgamma(f + 1.0);
    double g = std::tgamma(f + 1.0);  // g_1
    for (int j = 1; j <= jmax; ++j) {
        if (j > 1) g *= (f + j - 1.0) / j;
        coeff[static_cast<std::size_t>(j)] = (f + 2.0 * j) * g;
    }

    double above = 0.0;   // J_{f+k+1}
    double current = 1e-300;  // J_{f+k}, arbitrary seed
    double wanted = 0.0;
    double norm = 0.0;
    for (int k = kmax; k >= 0; --k) {
        if (k == n) wanted = current;
        if (k % 2 == 0) norm += coeff[static_cast<std::size_t>(k / 2)] * current;
        if (k == 0) break;
        const double below = (2.0 * (f + k) / z) * current - above;
        above = current;
        current = below;
        if (std::abs(current) > kRescaleAbove) {
            current /= kRescaleAbove;
            above /= kRescaleAbove;
            norm /= kRescaleAbove;
            wanted /= kRescaleAbove;
        }
    }
    if (!std::isfinite(norm) || norm == 0.0) {
        throw OverflowError("bessel_j: backward recurrence lost scale");
    }
    return wanted * std::pow(0.5 * z, f) / norm;
}

}  // namespace detail

double bessel_j(double nu, double z) {
    check_order_and_argument(nu, z, "bessel_j");
    if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (z <= detail::series_limit(nu)) return detail::bessel_j_series(nu, z);
    return detail::bessel_j_miller(nu, z);
}

double bessel_j_prime(double nu, double z) {
    check_order_and_argument(nu, z, "bessel_j_prime");
    if (z == 0.0) {
        if (nu == 0.0) return 0.0;
        if (nu == 1.0) return 0.5;
        if (nu > 1.0) return 0.0;
        throw DomainError("bessel_j_prime: derivative unbounded at z = 0 for 0 < nu < 1");
    }
    const double jn = bessel_j(nu, z);
    return -bessel_j(nu + 1.0, z) + (nu / z) * jn;
}

double small_z_leading(double nu, double z) {
    if (!(nu >= 0.0) || !(z >= 0.0) || z > 0.1) {
        throw DomainError("small_z_leading: requires nu >= 0 and 0 <= z <= 0.1");
    }
    return std::pow(0.5 * z, nu) / std::tgamma(nu + 1.0);
}

double classical_zero(double nu, int k) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("classical_zero: requires nu >= 0");
    if (k < 1) throw DomainError("classical_zero: zero index must be >= 1");
    // J_nu is positive on (0, nu] and consecutive zeros are more than 2.4
    // apart, so a scan with step 0.5 sees every sign change.
    constexpr double step = 0.5;
    double a = std::max(nu, step);
    double fa = bessel_j(nu, a);
    int found = 0;
    while (true) {
        const double b = a + step;
        const double fb = bessel_j(nu, b);
        if (fb == 0.0) {
            if (++found == k) return b;
            a = b + 1e-3 * step;
            fa = bessel_j(nu, a);
            continue;
        }
        if (std::signbit(fa) != std::signbit(fb)) {
            if (++found == k) {
                auto fn = [nu](double x) { return bessel_j(nu, x); };
                return numerics::solve_bracketed(fn, a, b, fa, fb, 1e-12, 1e-3);
            }
        }
        a = b;
        fa = fb;
        if (a > kMaxArgument) throw DomainError("classical_zero: zero beyond supported argument range");
    }
}

}  // namespace robin::special
