#pragma once

// Independent reference routines shared by the unit tests. None of them call
// into the library.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>

namespace oracle {

inline double bisect(const std::function<double(double)>& f, double a, double b, int iterations = 200) {
    double fa = f(a);
    for (int i = 0; i < iterations; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Spherical closed forms: J_{n+1/2}(x) = sqrt(2/(pi x)) * elementary.
inline double j_half(double x) { return std::sqrt(2.0 / (std::numbers::pi * x)) * std::sin(x); }
inline double j_three_halves(double x) {
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (std::sin(x) / x - std::cos(x));
}
inline double j_five_halves(double x) {
    return std::sqrt(2.0 / (std::numbers::pi * x)) * ((3.0 / (x * x) - 1.0) * std::sin(x) - 3.0 * std::cos(x) / x);
}

// First root of k J_{nu+l+1}(k) - (sigma+l) J_{nu+l}(k) using the standard library Bessel.
inline double cross_zero_std(double nu, int l, double sigma) {
    const double order = nu + l;
    auto f = [=](double k) {
        return k * std::cyl_bessel_j(order + 1.0, k) - (sigma + l) * std::cyl_bessel_j(order, k);
    };
    // The first root lies below j_{nu+l,1}; scan from the left for its sign change.
    double a = 1e-8;
    double fa = f(a);
    for (double b = 0.01; b < 100.0; b += 0.01) {
        const double fb = f(b);
        if ((fa < 0.0) != (fb < 0.0)) return bisect(f, a, b);
        a = b;
        fa = fb;
    }
    return NAN;
}

// Robin eigenvalue of the interval [0, L]: the root tau of tau tan(tau L/2) = sigma in (0, pi/L).
inline double interval_robin_tau(double sigma, double length) {
    auto f = [=](double t) { return t * std::tan(0.5 * t * length) - sigma; };
    return bisect(f, 1e-14, std::numbers::pi / length - 1e-14);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

private:
    std::mt19937_64 engine_;
};

}  // namespace oracle
