#pragma once

#include <vector>

namespace robin::ratio {

struct DimensionSpec {
    int n = 2;                ///< spatial dimension N >= 2
    double nu = 0.0;          ///< N/2 - 1
    double ball_volume = 0.0; ///< volume of the unit ball in R^N

    static DimensionSpec make(int n);
};

/// One sample of sigma -> beta^2/alpha^2, where alpha and beta are the first
/// cross zeros with shift 0 and 1.
struct RatioPoint {
    double sigma = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double ratio = 0.0;
    double d_alpha = 0.0;
    double d_beta = 0.0;

    /// d(beta^2/alpha^2)/dsigma from the closed-form derivatives.
    double d_ratio() const;
};

inline constexpr double kMinSigma = 1e-6;

/// sigma below kMinSigma is clamped up to it; sigma <= 0 throws DomainError.
RatioPoint ratio_point(const DimensionSpec& dim, double sigma);

/// Log-spaced grid of `steps` points on [sigma_min, sigma_max].
std::vector<RatioPoint> ratio_curve(const DimensionSpec& dim, double sigma_min = 1e-2, double sigma_max = 1e3,
                                    int steps = 64);

/// (j_{nu+1,1} / j_{nu,1})^2, the large-sigma limit of the ratio.
double dirichlet_ratio(const DimensionSpec& dim);

/// Unique sigma with ratio(sigma) = rho. Throws OutOfRangeError when rho is not
/// above the Dirichlet limit or the root lies outside [kMinSigma, 1e8].
double critical_sigma(const DimensionSpec& dim, double rho, double ratio_tol = 1e-9);

struct LemmaReport {
    double sigma = 0.0;
    double slope_margin = 0.0;     ///< beta^2 - alpha^2 - (2nu+1); q'(1) = -slope_margin
    double curvature_margin = 0.0; ///< beta^2/(nu+2) - alpha^2/(nu+1); q''(0) = -curvature_margin
    double gap = 0.0;              ///< beta^2 - alpha^2
    bool slope_ok = false;
    bool curvature_ok = false;
    bool gap_ok = false;

    bool all_ok() const { return slope_ok && curvature_ok && gap_ok; }
};

LemmaReport lemma_checks(const DimensionSpec& dim, double sigma);

}  // namespace robin::ratio
