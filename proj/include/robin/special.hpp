#pragma once

// Bessel functions of the first kind for real order nu >= 0 and real
// argument z >= 0, plus their derivatives and positive zeros.

namespace robin::special {

/// J_nu(z). Ascending series on small arguments, Miller backward recurrence
/// otherwise. Throws DomainError for nu < 0, z < 0, z > 1e6 or NaN input.
double bessel_j(double nu, double z);

/// J'_nu(z) = -J_{nu+1}(z) + (nu/z) J_nu(z).
/// At z = 0 the limit is returned for nu = 0 and nu >= 1; the derivative is
/// unbounded for 0 < nu < 1 and DomainError is thrown.
double bessel_j_prime(double nu, double z);

/// k-th positive zero j_{nu,k} of J_nu, absolute accuracy 1e-12.
double classical_zero(double nu, int k);

/// Leading small-argument term (z/2)^nu / Gamma(nu+1), for 0 <= z <= 0.1.
double small_z_leading(double nu, double z);

/// Gamma(x) for x > 0.
double gamma_fn(double x);

/// Volume of the N-dimensional unit ball, pi^{N/2} / Gamma(1 + N/2).
double unit_ball_volume(int n);

namespace detail {
// Exposed for tests: the two evaluation branches and the switch point.
double series_limit(double nu);
double bessel_j_series(double nu, double z);
double bessel_j_miller(double nu, double z);
}  // namespace detail

}  // namespace robin::special
