#include "robin/numerics.hpp"

#include "robin/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>

namespace robin::numerics {

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    double err = 0.0;
    double l1 = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 15, 1e-12, &err, &l1);
    if (!std::isfinite(value) || err > abs_tol + 1e-11 * l1) {
        std::ostringstream msg;
        msg << "quadrature on [" << a << ", " << b << "] did not converge (error estimate " << err << ")";
        throw ConvergenceError(msg.str());
    }
    return value;
}

double solve_bracketed(const std::function<double(double)>& f, double a, double b, double fa, double fb,
                       double abs_tol, double bisect_width) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (!(std::signbit(fa) != std::signbit(fb)) || !std::isfinite(fa) || !std::isfinite(fb)) {
        std::ostringstream msg;
        msg << "no sign change on [" << a << ", " << b << "]: f(a)=" << fa << ", f(b)=" << fb;
        throw BracketError(msg.str());
    }
    while (b - a > bisect_width) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (std::signbit(fm) == std::signbit(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    std::uintmax_t max_iter = 200;
    auto stop = [abs_tol](double lo, double hi) { return hi - lo <= abs_tol; };
    const auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, stop, max_iter);
    return 0.5 * (lo + hi);
}

}  // namespace robin::numerics
