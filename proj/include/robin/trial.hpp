#pragma once

#include "robin/ratio.hpp"

#include <functional>
#include <vector>

namespace robin::trial {

using ratio::DimensionSpec;

/// Closed-form evaluation of the radial trial functions for fixed (nu, sigma):
///   w(r) = J_{nu+1}(beta r) / J_nu(alpha r)
///   q(r) = r w'(r) / w(r)
///   B(r) = [q^2 + 2nu + 1] (w/r)^2,  A(r) = q / r.
/// For r < kSeriesRadius the two-term small-r expansions are used instead.
class TrialFunctions {
public:
    static constexpr double kSeriesRadius = 1e-4;

    TrialFunctions(const DimensionSpec& dim, double sigma);

    const DimensionSpec& dim() const { return dim_; }
    double sigma() const { return sigma_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    double w(double r) const;
    double w_over_r(double r) const;
    double q(double r) const;
    double q_prime(double r) const;
    double B(double r) const;
    double B_prime(double r) const;
    double A(double r) const;

    /// w continued as the constant w(1) for r >= 1, and its derivative.
    double w_extended(double r) const;
    double w_extended_prime(double r) const;

    /// q''(0) = alpha^2/(nu+1) - beta^2/(nu+2).
    double q_second_at_origin() const;

private:
    double bessel_ratio_alpha(double r) const;  // J_{nu+1}(alpha r) / J_nu(alpha r)
    double bessel_ratio_beta(double r) const;   // J_{nu+2}(beta r) / J_{nu+1}(beta r)

    DimensionSpec dim_;
    double sigma_;
    double alpha_;
    double beta_;
};

struct SeriesLimits {
    double w_slope = 0.0;          ///< lim w/r = lim w' = beta^{nu+1} / (2(nu+1) alpha^nu)
    double B_origin = 0.0;         ///< (2nu+2) w_slope^2
    double w_slope_nu_form = 0.0;  ///< beta^{nu+1} / (2nu alpha^nu); infinite for nu = 0
    double B_origin_nu_form = 0.0; ///< 2(nu+1) beta^{2nu+2} / (4 nu^2 alpha^{2nu})
};

SeriesLimits series_limits(const TrialFunctions& f);

struct TrialProfile {
    DimensionSpec dim;
    double sigma = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> r;
    std::vector<double> w;
    std::vector<double> q;
    std::vector<double> B;
    std::vector<double> A;  ///< A[0] = +inf
};

/// n uniform samples r_i = i/(n-1) on [0, 1]; n >= 16.
TrialProfile trial_profile(const DimensionSpec& dim, double sigma, int n = 256);

/// q'(r_i); requires r_i > 0.
double q_prime(const TrialProfile& profile, int i);

/// |int B J_nu^2(alpha r) r dr / int w^2 J_nu^2(alpha r) r dr - (beta^2 - alpha^2)| over [0, 1].
double rayleigh_identity_residual(const TrialProfile& profile);

struct RadialFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
};

/// int (g'^2 + (N-1) g^2/r^2) weight r^{N-1} dr / int g^2 weight r^{N-1} dr on [0, r_max].
/// `weight` is the squared radial eigenfunction. Throws DomainError if the
/// denominator vanishes.
double gap_quotient(const DimensionSpec& dim, const RadialFunction& g, const std::function<double(double)>& weight,
                    double r_max);

/// Squared first Robin eigenfunction of the unit ball, r^{-2nu} J_nu(alpha r)^2.
std::function<double(double)> ball_weight(const DimensionSpec& dim, double alpha);

/// g(r) = w_extended(gamma r).
RadialFunction scaled_trial(const TrialFunctions& f, double gamma);

}  // namespace robin::trial
