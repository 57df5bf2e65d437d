#pragma once

#include "robin/fem/eigensolver.hpp"
#include "robin/fem/generators.hpp"
#include "robin/fem/mesh.hpp"
#include "robin/rearrange.hpp"

#include <optional>
#include <string>
#include <vector>

namespace robin::fem {

struct ReportOptions {
    int levels = 4096;  ///< level count for the rearrangement of the P1 solution
    EigenOptions eigen;
};

struct RobinEigenResult {
    double sigma = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    Eigen::VectorXd u1;          ///< vertex values, int u1^2 = 1, positive
    double u1_pM = 0.0;          ///< max over boundary vertices
    double u1_M = 0.0;           ///< max over all vertices
    double u1_m = 0.0;           ///< min over boundary vertices
    double area = 0.0;
    double superlevel = 0.0;         ///< meas{u1 > u1_pM} of the P1 interpolant
    double superlevel_lumped = 0.0;  ///< same level on the vertex-lumped field
    double R = 0.0;                  ///< k_{0,1}(sigma) / sqrt(mu1)
    double R_tilde = 0.0;            ///< sqrt(superlevel / pi)
    double gamma = 0.0;              ///< 1 / R
    double h = 0.0;                  ///< longest mesh edge
    std::size_t vertices = 0;
    double max_residual = 0.0;
    rearrange::RearrangedProfile u1_star;  ///< decreasing rearrangement of the P1 interpolant
};

/// Exact measure of {u > t} for the piecewise-linear interpolant of vertex values u.
double superlevel_measure(const Mesh& mesh, const Eigen::VectorXd& u, double t);

/// Decreasing rearrangement of the P1 interpolant from its exact distribution
/// function at `levels` uniformly spaced values. Steps carry the mid-level
/// value; the closure interpolates linearly between the level points.
rearrange::RearrangedProfile p1_rearrangement(const Mesh& mesh, const Eigen::VectorXd& u, int levels = 4096);

/// Each triangle split into k^2 sub-triangles carrying the interpolated
/// centroid value.
rearrange::DiscreteField refined_field(const Mesh& mesh, const Eigen::VectorXd& u, int subdivisions);

/// Vertex values with lumped masses as cell measures.
rearrange::DiscreteField lumped_field(const Mesh& mesh, const Eigen::VectorXd& u);

RobinEigenResult eigen_report(const Mesh& mesh, double sigma, const ReportOptions& options = {});

/// Two resolutions of the same domain; every eps_* is |Q(coarse) - Q(fine)|.
struct RefinementStudy {
    RobinEigenResult coarse;
    RobinEigenResult fine;
    double eps_mu1 = 0.0;
    double eps_mu2 = 0.0;
    double eps_ratio = 0.0;
    double eps_R = 0.0;
    double eps_R_tilde = 0.0;
    double eps_u_star = 0.0;  ///< sup |u1*_coarse - u1*_fine| on a common grid
    double eps_superlevel = 0.0;
};

RefinementStudy refinement_study(const Mesh& coarse, const Mesh& fine, double sigma, const ReportOptions& options = {});
/// Generated meshes with target edge lengths h and h/2.
RefinementStudy refinement_study(const ShapeSpec& shape, double h, double sigma, const ReportOptions& options = {});
/// The given mesh and its midpoint refinement.
RefinementStudy refinement_study(const Mesh& mesh, double sigma, const ReportOptions& options = {});

struct ComparisonReport {
    double sigma = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double ratio = 0.0;
    std::string regime;      ///< "thm11" or "thm12"
    double bound = 0.0;      ///< bound of the applicable regime
    double ball_bound = 0.0; ///< k_{1,1}^2 / k_{0,1}^2 at sigma
    double gap_bound = 0.0;  ///< (k_{1,1}^2 - k_{0,1}^2) / (R_tilde^2 mu1) + 1
    double slack = 0.0;      ///< bound - ratio
    double eps_discr = 0.0;  ///< |ratio(h) - ratio(h/2)|
    double eps_radius = 0.0; ///< |dR| + |dR_tilde|
    bool bound_ok = false;   ///< slack >= -eps_discr
    bool near_equality = false;
    double R = 0.0;
    double R_tilde = 0.0;
    double scaled_ball_ratio = 0.0;  ///< mu2/mu1 of the equal-area disk with the same sigma
};

ComparisonReport verify_theorem(const RefinementStudy& study);

struct FaberKrahnReport {
    double mu1_domain = 0.0;
    double mu1_ball = 0.0;     ///< (k_{0,1}(sigma R*) / R*)^2
    double R_star = 0.0;       ///< radius of the equal-area disk
    double margin = 0.0;       ///< mu1_domain - mu1_ball
    double eps_discr = 0.0;
    bool ok = false;           ///< margin >= -eps_discr
    double ball_measure_R = 0.0;  ///< |B_R| with R = k_{0,1}(sigma)/sqrt(mu1)
    bool ball_within_domain = false;  ///< |B_R| <= |Omega|
};

FaberKrahnReport faber_krahn_check(const RefinementStudy& study);
FaberKrahnReport faber_krahn_check(const Mesh& mesh, double sigma, const ReportOptions& options = {});

struct RearrangementChecks {
    rearrange::ChitiReport chiti;
    bool chiti_resolved = true;  ///< false when chiti_compare signalled insufficient resolution
    double lemma31_max_violation = 0.0;
    double lemma31_tolerance = 0.0;
    bool lemma31_ok = false;
};

/// Chiti comparison with band 2 eps_u_star, and the window check of the superlevel derivative bound on
/// [1e-3 |Omega|, meas{u1 > u1_pM}) with tolerance max(2 |v_h - v_{h/2}|, 2 eps_u_star / u1_M).
RearrangementChecks rearrangement_checks(const RefinementStudy& study);

struct VerifyReport {
    ComparisonReport theorem;
    RearrangementChecks rearrangement;
    FaberKrahnReport faber_krahn;
};

VerifyReport verify_domain(const RefinementStudy& study);

struct SweepRow {
    double sigma = 0.0;
    double u1_pM = 0.0;
    double u1_M = 0.0;
    double R = 0.0;
    double R_tilde = 0.0;
};

std::vector<SweepRow> sweep_boundary_max(const Mesh& mesh, const std::vector<double>& sigmas,
                                         const ReportOptions& options = {});

}  // namespace robin::fem
