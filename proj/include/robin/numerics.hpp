#pragma once

#include <functional>

namespace robin::numerics {

/// Adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
/// Throws ConvergenceError if the error estimate exceeds abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-10);

/// Root of f on [a, b] given f(a), f(b) of opposite sign: bisection down to a
/// bracket of width bisect_width, then TOMS 748 to an absolute width abs_tol.
/// Throws BracketError if the endpoint values do not change sign.
double solve_bracketed(const std::function<double(double)>& f, double a, double b, double fa, double fb,
                       double abs_tol = 1e-12, double bisect_width = 1e-3);

}  // namespace robin::numerics
