#pragma once

// Robin cross zeros: the m-th positive root of
//     k J_{nu+l+1}(k) - (sigma + l) J_{nu+l}(k),
// whose squares for l = 0, 1 and m = 1 are the first two Robin eigenvalues
// of the unit ball in dimension N = 2 nu + 2.

namespace robin::zeros {

struct CrossZeroQuery {
    double nu = 0.0;     ///< order, >= 0
    int shift = 0;       ///< l in {0, 1}
    double sigma = 1.0;  ///< Robin parameter, > 0
    int index = 1;       ///< m >= 1
};

struct CrossZero {
    CrossZeroQuery query;
    double k = 0.0;
};

/// k J_{nu+l+1}(k) - (sigma + l) J_{nu+l}(k). Requires k > 0.
double cross_fn(double nu, int shift, double sigma, double k);

/// Solves a validated query. Throws DomainError on an invalid query and
/// BracketError if the expected sign change is missing.
CrossZero cross_zero(const CrossZeroQuery& query);

/// Shorthand for the first zero, cross_zero({nu, shift, sigma, 1}).k.
double first_cross_zero(double nu, int shift, double sigma);

/// h(k) = k J_{nu+2}(k) / J_{nu+1}(k) - 1 on [0, j_{nu+1,1}); h(0) = -1.
double h_fn(double nu, double k);

/// Unique zero of h on (0, j_{nu+1,1}); the sigma -> 0 limit of k_{nu+1,1}.
double k_star(double nu);

/// Samples h on a uniform grid of (0, j_{nu+1,1}) and reports whether it is
/// strictly increasing there.
bool h_is_increasing(double nu, int samples = 512);

}  // namespace robin::zeros
