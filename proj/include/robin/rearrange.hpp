#pragma once

#include "robin/ratio.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace robin::rearrange {

using ratio::DimensionSpec;

struct Cell {
    double value = 0.0;
    double measure = 0.0;
};

/// Cell-valued function; every measure must be positive.
class DiscreteField {
public:
    DiscreteField() = default;
    explicit DiscreteField(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    double total_measure() const { return total_; }
    double l2_squared() const;
    double max_value() const;
    double min_value() const;

private:
    std::vector<Cell> cells_;
    double total_ = 0.0;
};

/// Step function on [0, |Omega|]: value values[j] on the j-th interval between
/// breakpoints[j] and breakpoints[j+1]. A decreasing profile is left-continuous
/// with u*(0) = values[0]; an increasing one is right-continuous with
/// f_*(|Omega|) = values.back().
struct RearrangedProfile {
    std::vector<double> breakpoints;
    std::vector<double> values;
    bool increasing = false;
    std::function<double(double)> closure;  ///< optional smooth profile
    std::vector<double> prefix;             ///< running integrals at the breakpoints, filled by index()

    void index();

    double total_measure() const { return breakpoints.back(); }
    std::size_t steps() const { return values.size(); }
    double value(double s) const;
    /// closure(s) when present, otherwise value(s).
    double smooth(double s) const;
    /// Integral of the step function over [0, s].
    double cumulative(double s) const;
    double l2_squared() const;
};

/// meas{u > t}.
double distribution(const DiscreteField& field, double t);

/// Cells sorted by value (stable for ties); equal consecutive values share a step.
RearrangedProfile decreasing_rearrangement(const DiscreteField& field);
RearrangedProfile increasing_rearrangement(const DiscreteField& field);

/// Integral over [0, |Omega|] of the product of two step profiles of equal total measure.
double integrate_product(const RearrangedProfile& a, const RearrangedProfile& b);

struct RearrangementBounds {
    double lower = 0.0;   ///< int f_* g^*
    double direct = 0.0;  ///< int f g over the cells
    double upper = 0.0;   ///< int f^* g^*
};

/// f and g must share cell measures.
RearrangementBounds rearrangement_bounds(const DiscreteField& f, const DiscreteField& g);

/// Radial profile z(r) = c r^{-nu} J_nu(k r) on the ball of radius R, with
/// k = k_{nu,1}(sigma) / R and mu1 = k^2.
struct BallEigen {
    DimensionSpec dim;
    double radius = 0.0;
    double wavenumber = 0.0;
    double scale = 1.0;

    double mu1() const { return wavenumber * wavenumber; }
    double ball_measure() const;
    double z(double r) const;
    double z_prime(double r) const;
    /// z*(s) = z((s/C_N)^{1/N}) and its derivative in s.
    double z_star(double s) const;
    double z_star_prime(double s) const;
    /// int_{B_R} z^2 dx.
    double l2_squared() const;
};

BallEigen ball_eigen(const DimensionSpec& dim, double sigma, double radius, double scale = 1.0);

/// Step profile of z* on `samples` uniform cells of [0, |B_R|] (midpoint values)
/// with the smooth z* as closure.
RearrangedProfile ball_eigen_rearrangement(const DimensionSpec& dim, double sigma, double radius, double scale = 1.0,
                                           int samples = 2048);

/// Relative residual of -(z*)'(s) = mu1 N^{-2} C_N^{-2/N} s^{2/N-2} int_0^s z*,
/// with the integral evaluated by quadrature.
double ball_ode_residual(const BallEigen& ball, double s);

enum class ChitiRegime { dominates, single_crossing, violation };
std::string to_string(ChitiRegime regime);

struct ChitiReport {
    ChitiRegime regime = ChitiRegime::dominates;
    std::optional<double> crossing;  ///< s_1 when regime is single_crossing
    double max_violation = 0.0;      ///< largest z* - u* > band after a run below -band
    double min_difference = 0.0;     ///< min of z* - u* over the samples
    double max_difference = 0.0;
    double radius = 0.0;             ///< R = k_{nu,1}(sigma) / sqrt(mu1)
    double ball_measure = 0.0;       ///< |B_R|
    double band = 0.0;
    double scale = 0.0;              ///< normalization c of z
    bool ball_exceeds_domain = false;
};

/// Compares z* (scaled so int_{B_R} z^2 = int u1*^2) with u1* on [0, min(|B_R|, |Omega|)];
/// differences within +-band count as ties. Throws InsufficientResolution when
/// fewer than 8 steps of u1* fall inside the comparison range.
ChitiReport chiti_compare(const RearrangedProfile& u1_star, const DimensionSpec& dim, double sigma, double mu1,
                          double band);

struct Lemma31Report {
    double max_violation = -1.0;  ///< max over windows of (lhs - rhs) / rhs
    double worst_s = 0.0;
    int windows = 0;
};

/// Window-averaged form of -(u*)' <= mu1 N^{-2} C_N^{-2/N} s^{2/N-2} int_0^s u* on
/// [delta_fraction |Omega|, s_max): on each window [a, b] compares
/// (u*(a) - u*(b)) / (b - a) with the mean of the right-hand side.
Lemma31Report lemma31_check(const RearrangedProfile& u1_star, double mu1, const DimensionSpec& dim, double s_max,
                            int windows = 64, double delta_fraction = 1e-3);

}  // namespace robin::rearrange
