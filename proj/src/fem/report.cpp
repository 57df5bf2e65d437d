#include "robin/fem/report.hpp"

#include "robin/error.hpp"
#include "robin/ratio.hpp"
#include "robin/robin_zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace robin::fem {

namespace {

constexpr int kProfileSamples = 1024;

const ratio::DimensionSpec& plane() {
    static const ratio::DimensionSpec dim = ratio::DimensionSpec::make(2);
    return dim;
}

// Area of {x in T : u(x) > t} for the linear interpolant on a triangle of area `area`.
double triangle_superlevel(double area, double a, double b, double c, double t) {
    double v[3] = {a, b, c};
    std::sort(v, v + 3);
    if (t >= v[2]) return 0.0;
    if (t < v[0]) return area;
    if (t >= v[1]) {
        const double top = v[2] - t;
        return area * top * top / ((v[2] - v[0]) * (v[2] - v[1]));
    }
    const double low = t - v[0];
    return area * (1.0 - low * low / ((v[2] - v[0]) * (v[1] - v[0])));
}

// closure is linear interpolation through the points (s_j, t_j).
struct LevelCurve {
    std::vector<double> s;
    std::vector<double> t;
    double operator()(double x) const {
        if (x <= s.front()) return t.front();
        if (x >= s.back()) return t.back();
        const auto it = std::upper_bound(s.begin(), s.end(), x);
        const auto j = static_cast<std::size_t>(it - s.begin());
        const double w = (x - s[j - 1]) / (s[j] - s[j - 1]);
        return t[j - 1] + w * (t[j] - t[j - 1]);
    }
};

double sup_difference(const rearrange::RearrangedProfile& a, const rearrange::RearrangedProfile& b) {
    const double end = std::min(a.total_measure(), b.total_measure());
    double worst = 0.0;
    for (int i = 0; i <= kProfileSamples; ++i) {
        const double s = end * i / kProfileSamples;
        worst = std::max(worst, std::abs(a.smooth(s) - b.smooth(s)));
    }
    return worst;
}

}  // namespace

double superlevel_measure(const Mesh& mesh, const Eigen::VectorXd& u, double t) {
    double sum = 0.0;
    for (std::size_t k = 0; k < mesh.triangles.size(); ++k) {
        const auto& tri = mesh.triangles[k];
        sum += triangle_superlevel(mesh.triangle_area(k), u[tri[0]], u[tri[1]], u[tri[2]], t);
    }
    return sum;
}

rearrange::RearrangedProfile p1_rearrangement(const Mesh& mesh, const Eigen::VectorXd& u, int levels) {
    if (levels < 2) throw DomainError("p1_rearrangement: need at least 2 levels");
    const double top = u.maxCoeff();
    const double bottom = u.minCoeff();
    const double total = mesh.area();
    rearrange::RearrangedProfile p;
    if (!(top > bottom)) {
        p.breakpoints = {0.0, total};
        p.values = {top};
        p.index();
        return p;
    }
    const double step = (top - bottom) / levels;
    const auto count = static_cast<std::size_t>(levels) + 1;
    std::vector<double> measure(count, 0.0);
    std::vector<double> below(count + 1, 0.0);  // measure of triangles lying entirely above level j
    for (std::size_t k = 0; k < mesh.triangles.size(); ++k) {
        const auto& tri = mesh.triangles[k];
        double v[3] = {u[tri[0]], u[tri[1]], u[tri[2]]};
        std::sort(v, v + 3);
        const double area = mesh.triangle_area(k);
        // level j has value top - j * step; it cuts the triangle when v0 <= t_j < v2
        const auto first = static_cast<long>(std::ceil((top - v[2]) / step - 1e-9));
        const auto last = static_cast<long>(std::floor((top - v[0]) / step + 1e-9));
        const long lo = std::max(0L, first);
        const long hi = std::min(static_cast<long>(levels), last);
        for (long j = lo; j <= hi; ++j) {
            measure[static_cast<std::size_t>(j)] += triangle_superlevel(area, v[0], v[1], v[2], top - step * j);
        }
        const long whole = std::max(0L, hi + 1);
        if (whole <= levels) below[static_cast<std::size_t>(whole)] += area;
    }
    LevelCurve curve;
    double acc = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        acc += below[j];
        double sj = std::min(measure[j] + acc, total);
        if (j == 0) sj = 0.0;
        if (j + 1 == count) sj = total;
        if (!curve.s.empty()) sj = std::max(sj, curve.s.back());
        const double tj = j + 1 == count ? bottom : top - step * static_cast<double>(j);
        if (!curve.s.empty() && sj == curve.s.back()) {
            curve.t.back() = tj;
            continue;
        }
        curve.s.push_back(sj);
        curve.t.push_back(tj);
    }
    // A flat top would make the first point non-zero; the curve always starts at s = 0.
    if (curve.s.front() != 0.0) {
        curve.s.insert(curve.s.begin(), 0.0);
        curve.t.insert(curve.t.begin(), top);
    }
    p.breakpoints = curve.s;
    for (std::size_t j = 0; j + 1 < curve.s.size(); ++j) p.values.push_back(0.5 * (curve.t[j] + curve.t[j + 1]));
    p.closure = curve;
    p.index();
    return p;
}

rearrange::DiscreteField refined_field(const Mesh& mesh, const Eigen::VectorXd& u, int subdivisions) {
    if (subdivisions < 1) throw DomainError("refined_field: subdivisions must be >= 1");
    const int k = subdivisions;
    std::vector<rearrange::Cell> cells;
    cells.reserve(mesh.triangles.size() * static_cast<std::size_t>(k * k));
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tri = mesh.triangles[t];
        const double u0 = u[tri[0]], u1 = u[tri[1]], u2 = u[tri[2]];
        const double measure = mesh.triangle_area(t) / (k * k);
        auto at = [&](double x, double y) { return (1.0 - x - y) * u0 + x * u1 + y * u2; };
        for (int i = 0; i < k; ++i) {
            for (int j = 0; i + j < k; ++j) {
                cells.push_back({at((i + 1.0 / 3.0) / k, (j + 1.0 / 3.0) / k), measure});
                if (i + j < k - 1) cells.push_back({at((i + 2.0 / 3.0) / k, (j + 2.0 / 3.0) / k), measure});
            }
        }
    }
    return rearrange::DiscreteField(std::move(cells));
}

rearrange::DiscreteField lumped_field(const Mesh& mesh, const Eigen::VectorXd& u) {
    const Eigen::VectorXd m = lumped_mass(mesh);
    std::vector<rearrange::Cell> cells(mesh.vertex_count());
    for (std::size_t v = 0; v < cells.size(); ++v) {
        cells[v] = {u[static_cast<Eigen::Index>(v)], m[static_cast<Eigen::Index>(v)]};
    }
    return rearrange::DiscreteField(std::move(cells));
}

RobinEigenResult eigen_report(const Mesh& mesh, double sigma, const ReportOptions& options) {
    if (!(sigma > 0.0)) throw DomainError("eigen_report: sigma must be > 0");
    const RobinSystem sys = assemble(mesh, sigma);
    const EigenPairs pairs = solve_eigs(sys.k_sigma, sys.mass, 2, options.eigen);

    RobinEigenResult r;
    r.sigma = sigma;
    r.mu1 = pairs.values[0];
    r.mu2 = pairs.values[1];
    r.u1 = pairs.vectors.col(0);
    r.max_residual = pairs.max_residual;
    r.vertices = mesh.vertex_count();
    r.h = mesh.max_edge();
    r.area = mesh.area();

    const std::vector<bool> on_boundary = mesh.boundary_flags();
    r.u1_M = r.u1.maxCoeff();
    r.u1_pM = -std::numeric_limits<double>::infinity();
    r.u1_m = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < on_boundary.size(); ++v) {
        if (!on_boundary[v]) continue;
        const double value = r.u1[static_cast<Eigen::Index>(v)];
        r.u1_pM = std::max(r.u1_pM, value);
        r.u1_m = std::min(r.u1_m, value);
    }

    r.superlevel = superlevel_measure(mesh, r.u1, r.u1_pM);
    r.superlevel_lumped = rearrange::distribution(lumped_field(mesh, r.u1), std::max(r.u1_pM, 0.0));
    const double alpha = zeros::first_cross_zero(0.0, 0, sigma);
    r.R = alpha / std::sqrt(r.mu1);
    r.gamma = 1.0 / r.R;
    r.R_tilde = std::sqrt(r.superlevel / std::numbers::pi);
    r.u1_star = p1_rearrangement(mesh, r.u1, options.levels);
    return r;
}

RefinementStudy refinement_study(const Mesh& coarse, const Mesh& fine, double sigma, const ReportOptions& options) {
    RefinementStudy s;
    s.coarse = eigen_report(coarse, sigma, options);
    s.fine = eigen_report(fine, sigma, options);
    s.eps_mu1 = std::abs(s.coarse.mu1 - s.fine.mu1);
    s.eps_mu2 = std::abs(s.coarse.mu2 - s.fine.mu2);
    s.eps_ratio = std::abs(s.coarse.mu2 / s.coarse.mu1 - s.fine.mu2 / s.fine.mu1);
    s.eps_R = std::abs(s.coarse.R - s.fine.R);
    s.eps_R_tilde = std::abs(s.coarse.R_tilde - s.fine.R_tilde);
    s.eps_superlevel = std::abs(s.coarse.superlevel - s.fine.superlevel);
    s.eps_u_star = sup_difference(s.coarse.u1_star, s.fine.u1_star);
    return s;
}

RefinementStudy refinement_study(const ShapeSpec& shape, double h, double sigma, const ReportOptions& options) {
    return refinement_study(generate(shape, h), generate(shape, 0.5 * h), sigma, options);
}

RefinementStudy refinement_study(const Mesh& mesh, double sigma, const ReportOptions& options) {
    return refinement_study(mesh, refine_midpoint(mesh), sigma, options);
}

ComparisonReport verify_theorem(const RefinementStudy& study) {
    const RobinEigenResult& f = study.fine;
    const ratio::RatioPoint p = ratio::ratio_point(plane(), f.sigma);
    ComparisonReport c;
    c.sigma = f.sigma;
    c.mu1 = f.mu1;
    c.mu2 = f.mu2;
    c.ratio = f.mu2 / f.mu1;
    c.R = f.R;
    c.R_tilde = f.R_tilde;
    c.ball_bound = p.ratio;
    c.gap_bound = (p.beta * p.beta - p.alpha * p.alpha) / (f.R_tilde * f.R_tilde * f.mu1) + 1.0;
    c.eps_discr = study.eps_ratio;
    c.eps_radius = study.eps_R + study.eps_R_tilde;
    const bool thm11 = f.R_tilde >= f.R - c.eps_radius;
    c.regime = thm11 ? "thm11" : "thm12";
    c.bound = thm11 ? c.ball_bound : c.gap_bound;
    c.slack = c.bound - c.ratio;
    c.bound_ok = c.slack >= -c.eps_discr;
    c.near_equality = std::abs(c.slack) <= 2.0 * c.eps_discr;
    const double r_star = std::sqrt(f.area / std::numbers::pi);
    c.scaled_ball_ratio = ratio::ratio_point(plane(), f.sigma * r_star).ratio;
    return c;
}

FaberKrahnReport faber_krahn_check(const RefinementStudy& study) {
    const RobinEigenResult& f = study.fine;
    FaberKrahnReport fk;
    fk.mu1_domain = f.mu1;
    fk.R_star = std::sqrt(f.area / std::numbers::pi);
    const double k_hat = zeros::first_cross_zero(0.0, 0, f.sigma * fk.R_star);
    fk.mu1_ball = (k_hat / fk.R_star) * (k_hat / fk.R_star);
    fk.margin = fk.mu1_domain - fk.mu1_ball;
    fk.eps_discr = study.eps_mu1;
    fk.ok = fk.margin >= -fk.eps_discr;
    fk.ball_measure_R = std::numbers::pi * f.R * f.R;
    fk.ball_within_domain = fk.ball_measure_R <= f.area;
    return fk;
}

FaberKrahnReport faber_krahn_check(const Mesh& mesh, double sigma, const ReportOptions& options) {
    return faber_krahn_check(refinement_study(mesh, sigma, options));
}

RearrangementChecks rearrangement_checks(const RefinementStudy& study) {
    const RobinEigenResult& f = study.fine;
    const RobinEigenResult& c = study.coarse;
    RearrangementChecks out;
    try {
        out.chiti = rearrange::chiti_compare(f.u1_star, plane(), f.sigma, f.mu1, 2.0 * study.eps_u_star);
    } catch (const InsufficientResolution&) {
        out.chiti_resolved = false;
    }
    const double vf = rearrange::lemma31_check(f.u1_star, f.mu1, plane(), std::min(f.superlevel, f.u1_star.total_measure()))
                          .max_violation;
    const double vc = rearrange::lemma31_check(c.u1_star, c.mu1, plane(), std::min(c.superlevel, c.u1_star.total_measure()))
                          .max_violation;
    out.lemma31_max_violation = vf;
    out.lemma31_tolerance = std::max(2.0 * std::abs(vf - vc), 2.0 * study.eps_u_star / f.u1_M);
    out.lemma31_ok = vf <= out.lemma31_tolerance;
    return out;
}

VerifyReport verify_domain(const RefinementStudy& study) {
    return VerifyReport{verify_theorem(study), rearrangement_checks(study), faber_krahn_check(study)};
}

std::vector<SweepRow> sweep_boundary_max(const Mesh& mesh, const std::vector<double>& sigmas,
                                         const ReportOptions& options) {
    std::vector<SweepRow> rows;
    for (double sigma : sigmas) {
        const RobinEigenResult r = eigen_report(mesh, sigma, options);
        rows.push_back({sigma, r.u1_pM, r.u1_M, r.R, r.R_tilde});
    }
    return rows;
}

}  // namespace robin::fem
