#include "robin/robin_zeros.hpp"

#include "robin/error.hpp"
#include "robin/numerics.hpp"
#include "robin/special.hpp"

#include <cmath>
#include <sstream>

namespace robin::zeros {

namespace {

constexpr double kLeftAnchor = 1e-8;
constexpr double kRightOffset = 1e-9;
constexpr double kRootTol = 1e-12;

// Unvalidated form; accepts sigma = 0.
double cross_value(double nu, int shift, double sigma, double k) {
    const double order = nu + shift;
    return k * special::bessel_j(order + 1.0, k) - (sigma + shift) * special::bessel_j(order, k);
}

double bracketed_root(double nu, int shift, double sigma, int index) {
    const double order = nu + shift;
    auto fn = [=](double k) { return cross_value(nu, shift, sigma, k); };
    const double left = index == 1 ? kLeftAnchor : special::classical_zero(order, index - 1) + kRightOffset;
    const double right = special::classical_zero(order, index) - kRightOffset;
    const double fl = fn(left);
    const double fr = fn(right);
    if (std::signbit(fl) == std::signbit(fr)) {
        std::ostringstream msg;
        msg << "cross_zero: no sign change for nu=" << nu << ", l=" << shift << ", sigma=" << sigma
            << ", m=" << index << " on [" << left << ", " << right << "]";
        throw BracketError(msg.str());
    }
    return numerics::solve_bracketed(fn, left, right, fl, fr, kRootTol, 1e-3);
}

}  // namespace

double cross_fn(double nu, int shift, double sigma, double k) {
    if (!(k > 0.0)) throw DomainError("cross_fn: requires k > 0");
    if (shift != 0 && shift != 1) throw DomainError("cross_fn: shift must be 0 or 1");
    return cross_value(nu, shift, sigma, k);
}

CrossZero cross_zero(const CrossZeroQuery& query) {
    if (!(query.nu >= 0.0)) throw DomainError("cross_zero: order must be >= 0");
    if (query.shift != 0 && query.shift != 1) throw DomainError("cross_zero: shift must be 0 or 1");
    if (!(query.sigma > 0.0) || !std::isfinite(query.sigma)) throw DomainError("cross_zero: sigma must be > 0");
    if (query.index < 1) throw DomainError("cross_zero: zero index must be >= 1");
    return CrossZero{query, bracketed_root(query.nu, query.shift, query.sigma, query.index)};
}

double first_cross_zero(double nu, int shift, double sigma) {
    return cross_zero(CrossZeroQuery{nu, shift, sigma, 1}).k;
}

double h_fn(double nu, double k) {
    if (!(nu >= 0.0)) throw DomainError("h_fn: order must be >= 0");
    if (!(k >= 0.0)) throw DomainError("h_fn: requires k >= 0");
    if (k == 0.0) return -1.0;
    if (k >= special::classical_zero(nu + 1.0, 1)) throw DomainError("h_fn: requires k < j_{nu+1,1}");
    return k * special::bessel_j(nu + 2.0, k) / special::bessel_j(nu + 1.0, k) - 1.0;
}

double k_star(double nu) {
    if (!(nu >= 0.0)) throw DomainError("k_star: order must be >= 0");
    // h(k) J_{nu+1}(k) is the cross function with l = 1 and sigma = 0.
    return bracketed_root(nu, 1, 0.0, 1);
}

bool h_is_increasing(double nu, int samples) {
    const double upper = special::classical_zero(nu + 1.0, 1);
    double previous = -1.0;
    for (int i = 1; i < samples; ++i) {
        const double k = upper * i / samples;
        const double value = k * special::bessel_j(nu + 2.0, k) / special::bessel_j(nu + 1.0, k) - 1.0;
        if (!(value > previous)) return false;
        previous = value;
    }
    return true;
}

}  // namespace robin::zeros
