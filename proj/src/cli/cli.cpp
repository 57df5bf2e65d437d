#include "robin/cli/cli.hpp"

#include "robin/cli/format.hpp"
#include "robin/cli/svg.hpp"
#include "robin/error.hpp"
#include "robin/fem/generators.hpp"
#include "robin/fem/mesh_io.hpp"
#include "robin/fem/report.hpp"
#include "robin/ratio.hpp"
#include "robin/robin_zeros.hpp"
#include "robin/trial.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace robin::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
    std::string format = "csv";
    std::string out_path;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Common& common, std::ostream& out, const std::string& text) {
    if (common.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(common.out_path);
    if (!file) throw UsageError("cannot write " + common.out_path);
    file << text;
}

void write_json(std::string& out, const json& j, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close(2 * depth, ' ');
    if (j.is_object() || j.is_array()) {
        const bool object = j.is_object();
        if (j.empty()) {
            out += object ? "{}" : "[]";
            return;
        }
        out += object ? "{\n" : "[\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad;
            if (object) out += json(it.key()).dump() + ": ";
            write_json(out, it.value(), depth + 1);
        }
        out += "\n" + close + (object ? "}" : "]");
    } else if (j.is_number_float()) {
        const double v = j.get<double>();
        out += std::isfinite(v) ? fmt(v) : "null";
    } else {
        out += j.dump();
    }
}

std::string dump(const json& j) {
    std::string out;
    write_json(out, j, 0);
    return out + "\n";
}

void add_common(CLI::App* sub, Common& common, const std::vector<std::string>& formats) {
    common.format = formats.front();
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", common.out_path, "Write output to PATH instead of stdout");
}

// ----- zeros -----------------------------------------------------------------

struct ZerosArgs {
    int dim = 2;
    double sigma = 1.0;
    int shift = 0;
    int count = 1;
};

int cmd_zeros(const ZerosArgs& a, const Common& common, std::ostream& out) {
    const auto dim = ratio::DimensionSpec::make(a.dim);
    std::vector<zeros::CrossZero> found;
    for (int m = 1; m <= a.count; ++m) found.push_back(zeros::cross_zero({dim.nu, a.shift, a.sigma, m}));
    if (common.format == "json") {
        json j;
        j["schema"] = kSchema;
        j["command"] = "zeros";
        j["dim"] = a.dim;
        j["nu"] = round9(dim.nu);
        j["sigma"] = round9(a.sigma);
        j["l"] = a.shift;
        json rows = json::array();
        for (const auto& z : found) {
            rows.push_back({{"m", z.query.index},
                            {"k", round9(z.k)},
                            {"residual", round9(zeros::cross_fn(dim.nu, a.shift, a.sigma, z.k))}});
        }
        j["zeros"] = rows;
        emit(common, out, dump(j));
        return kOk;
    }
    std::string text = csv_row(std::vector<std::string>{"m", "k", "residual"});
    for (const auto& z : found) {
        text += csv_row(std::vector<std::string>{std::to_string(z.query.index), fmt(z.k),
                                                 fmt(zeros::cross_fn(dim.nu, a.shift, a.sigma, z.k))});
    }
    emit(common, out, text);
    return kOk;
}

// ----- ratio-curve -----------------------------------------------------------

struct CurveArgs {
    int dim = 2;
    double sigma_min = 1e-2;
    double sigma_max = 1e3;
    int steps = 64;
};

int cmd_ratio_curve(const CurveArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    if (!(a.sigma_max > a.sigma_min)) throw UsageError("--sigma-max must exceed --sigma-min");
    const auto dim = ratio::DimensionSpec::make(a.dim);
    const auto curve = ratio::ratio_curve(dim, a.sigma_min, a.sigma_max, a.steps);
    const double floor_ratio = ratio::dirichlet_ratio(dim);
    int inversions = 0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (!(curve[i].ratio < curve[i - 1].ratio)) ++inversions;
    }
    if (common.format == "svg") {
        Series s{"ratio", {}, {}};
        for (const auto& p : curve) {
            s.x.push_back(p.sigma);
            s.y.push_back(p.ratio);
        }
        PlotOptions opt;
        opt.title = "Ball eigenvalue ratio, N = " + std::to_string(a.dim);
        opt.x_label = "sigma";
        opt.y_label = "mu2 / mu1";
        opt.log_x = true;
        opt.horizontal_lines = {floor_ratio};
        emit(common, out, svg_plot({s}, opt));
    } else if (common.format == "json") {
        json j;
        j["schema"] = kSchema;
        j["command"] = "ratio-curve";
        j["dim"] = a.dim;
        j["dirichlet_ratio"] = round9(floor_ratio);
        json rows = json::array();
        for (const auto& p : curve) {
            rows.push_back({{"sigma", round9(p.sigma)},
                            {"alpha", round9(p.alpha)},
                            {"beta", round9(p.beta)},
                            {"ratio", round9(p.ratio)},
                            {"d_alpha", round9(p.d_alpha)},
                            {"d_beta", round9(p.d_beta)}});
        }
        j["points"] = rows;
        j["monotone"] = inversions == 0;
        emit(common, out, dump(j));
    } else {
        std::string text = csv_row(std::vector<std::string>{"sigma", "alpha", "beta", "ratio", "d_alpha", "d_beta"});
        for (const auto& p : curve) text += csv_row({p.sigma, p.alpha, p.beta, p.ratio, p.d_alpha, p.d_beta});
        emit(common, out, text);
    }
    if (inversions) {
        err << "ratio-curve: " << inversions << " non-decreasing step(s) in the ratio column\n";
        return kPropertyViolation;
    }
    return kOk;
}

// ----- trial -----------------------------------------------------------------

struct TrialArgs {
    int dim = 2;
    double sigma = 1.0;
    int samples = 256;
};

int cmd_trial(const TrialArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    const auto dim = ratio::DimensionSpec::make(a.dim);
    const auto profile = trial::trial_profile(dim, a.sigma, a.samples);
    const double residual = trial::rayleigh_identity_residual(profile);
    bool w_up = true, b_down = true;
    for (std::size_t i = 1; i < profile.r.size(); ++i) {
        w_up = w_up && profile.w[i] > profile.w[i - 1];
        b_down = b_down && profile.B[i] < profile.B[i - 1];
    }
    if (common.format == "svg") {
        Series w{"w(r)", profile.r, profile.w, "#1f77b4"};
        Series b{"B(r)", profile.r, profile.B, "#d62728"};
        PlotOptions opt;
        opt.title = "Trial profiles, N = " + std::to_string(a.dim) + ", sigma = " + fmt(a.sigma);
        opt.x_label = "r";
        opt.y_label = "value";
        emit(common, out, svg_plot({w, b}, opt));
    } else if (common.format == "json") {
        json j;
        j["schema"] = kSchema;
        j["command"] = "trial";
        j["dim"] = a.dim;
        j["sigma"] = round9(a.sigma);
        j["alpha"] = round9(profile.alpha);
        j["beta"] = round9(profile.beta);
        json rows = json::array();
        for (std::size_t i = 0; i < profile.r.size(); ++i) {
            rows.push_back({{"r", round9(profile.r[i])},
                            {"w", round9(profile.w[i])},
                            {"q", round9(profile.q[i])},
                            {"B", round9(profile.B[i])}});
        }
        j["samples"] = rows;
        j["rayleigh_residual"] = round9(residual);
        emit(common, out, dump(j));
    } else {
        std::string text = csv_row(std::vector<std::string>{"r", "w", "q", "B"});
        for (std::size_t i = 0; i < profile.r.size(); ++i) {
            text += csv_row({profile.r[i], profile.w[i], profile.q[i], profile.B[i]});
        }
        text += "# rayleigh_residual," + fmt(residual) + "\n";
        emit(common, out, text);
    }
    if (!w_up || !b_down || !(residual <= 1e-8)) {
        err << "trial: monotonicity or Rayleigh identity check failed\n";
        return kPropertyViolation;
    }
    return kOk;
}

// ----- FEM commands ----------------------------------------------------------

struct DomainArgs {
    std::string shape;
    std::string mesh_path;
    double h = 0.04;
};

std::string domain_name(const DomainArgs& d) { return d.mesh_path.empty() ? d.shape : d.mesh_path; }

fem::Mesh load_domain(const DomainArgs& d) {
    if (d.shape.empty() == d.mesh_path.empty()) throw UsageError("give exactly one of --shape or --mesh");
    if (!d.mesh_path.empty()) return fem::load_mesh(d.mesh_path);
    return fem::generate(fem::parse_shape(d.shape), d.h);
}

fem::RefinementStudy study_domain(const DomainArgs& d, double sigma) {
    if (d.shape.empty() == d.mesh_path.empty()) throw UsageError("give exactly one of --shape or --mesh");
    if (!d.mesh_path.empty()) return fem::refinement_study(fem::load_mesh(d.mesh_path), sigma);
    return fem::refinement_study(fem::parse_shape(d.shape), d.h, sigma);
}

int cmd_verify(const DomainArgs& d, double sigma, int dim_n, const Common& common, std::ostream& out) {
    if (dim_n != 2) throw UsageError("verify: the finite-element solver is planar, --dim must be 2");
    const fem::RefinementStudy study = study_domain(d, sigma);
    const fem::VerifyReport v = fem::verify_domain(study);
    const auto& t = v.theorem;
    const auto& r = v.rearrangement;
    json j;
    j["schema"] = kSchema;
    j["command"] = "verify";
    j["domain"] = domain_name(d);
    j["sigma"] = round9(sigma);
    j["h_target"] = round9(d.h);
    j["max_edge"] = round9(study.coarse.h);
    j["vertices"] = study.fine.vertices;
    j["mu1"] = round9(t.mu1);
    j["mu2"] = round9(t.mu2);
    j["ratio"] = round9(t.ratio);
    j["bound"] = round9(t.bound);
    j["slack"] = round9(t.slack);
    j["regime"] = t.regime;
    j["bound_ok"] = t.bound_ok;
    j["near_equality"] = t.near_equality;
    j["ball_bound"] = round9(t.ball_bound);
    j["gap_bound"] = round9(t.gap_bound);
    j["scaled_ball_ratio"] = round9(t.scaled_ball_ratio);
    j["R"] = round9(t.R);
    j["R_tilde"] = round9(t.R_tilde);
    j["chiti_regime"] = r.chiti_resolved ? rearrange::to_string(r.chiti.regime) : "unresolved";
    j["chiti_crossing"] = r.chiti.crossing ? json(round9(*r.chiti.crossing)) : json(nullptr);
    j["chiti_band"] = round9(r.chiti.band);
    j["lemma31_max_violation"] = round9(r.lemma31_max_violation);
    j["lemma31_tolerance"] = round9(r.lemma31_tolerance);
    j["faber_krahn_ok"] = v.faber_krahn.ok;
    j["faber_krahn_margin"] = round9(v.faber_krahn.margin);
    j["ball_R_within_domain"] = v.faber_krahn.ball_within_domain;
    j["eps_discr"] = {{"mu1", round9(study.eps_mu1)},
                      {"mu2", round9(study.eps_mu2)},
                      {"ratio", round9(study.eps_ratio)},
                      {"R", round9(study.eps_R)},
                      {"R_tilde", round9(study.eps_R_tilde)},
                      {"u1_star", round9(study.eps_u_star)}};
    emit(common, out, dump(j));
    return t.bound_ok ? kOk : kBoundViolation;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad number '" + item + "' in list");
        }
        if (used != item.size() || !(v > 0.0)) throw UsageError("list entries must be positive numbers");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

int cmd_sweep(const DomainArgs& d, const std::string& sigmas, const Common& common, std::ostream& out) {
    const std::vector<double> list = parse_list(sigmas);
    const auto rows = fem::sweep_boundary_max(load_domain(d), list);
    if (common.format == "json") {
        json j;
        j["schema"] = kSchema;
        j["command"] = "sweep-boundary";
        j["domain"] = domain_name(d);
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"sigma", round9(r.sigma)},
                           {"u_1pM", round9(r.u1_pM)},
                           {"u_1M", round9(r.u1_M)},
                           {"R", round9(r.R)},
                           {"R_tilde", round9(r.R_tilde)}});
        }
        j["rows"] = arr;
        emit(common, out, dump(j));
        return kOk;
    }
    std::string text = csv_row(std::vector<std::string>{"sigma", "u_1pM", "u_1M", "R", "R_tilde"});
    for (const auto& r : rows) text += csv_row({r.sigma, r.u1_pM, r.u1_M, r.R, r.R_tilde});
    emit(common, out, text);
    return kOk;
}

int cmd_critical(int dim_n, double rho, const Common& common, std::ostream& out) {
    const auto dim = ratio::DimensionSpec::make(dim_n);
    const double sigma = ratio::critical_sigma(dim, rho);
    if (common.format == "json") {
        json j;
        j["schema"] = kSchema;
        j["command"] = "critical-sigma";
        j["dim"] = dim_n;
        j["rho"] = round9(rho);
        j["sigma"] = round9(sigma);
        emit(common, out, dump(j));
    } else {
        emit(common, out, csv_row(std::vector<std::string>{"rho", "sigma"}) + csv_row({rho, sigma}));
    }
    return kOk;
}

int cmd_mesh(const DomainArgs& d, const Common& common, std::ostream& out) {
    std::ostringstream text;
    fem::write_mesh(text, load_domain(d));
    emit(common, out, text.str());
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Robin Laplacian eigenvalue ratios: ball zeros, trial functions, FEM verification", "robin"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    Common common;

    ZerosArgs za;
    auto* zeros_cmd = app.add_subcommand("zeros", "Cross zeros k_{nu+l,m} of the unit ball");
    zeros_cmd->add_option("--dim", za.dim, "Dimension N")->check(CLI::Range(2, 64));
    zeros_cmd->add_option("--sigma", za.sigma, "Robin parameter")->check(CLI::PositiveNumber);
    zeros_cmd->add_option("--l", za.shift, "Shift l")->check(CLI::IsMember({0, 1}));
    zeros_cmd->add_option("--count", za.count, "Number of zeros")->check(CLI::Range(1, 50));
    add_common(zeros_cmd, common, {"csv", "json"});

    CurveArgs ca;
    auto* curve_cmd = app.add_subcommand("ratio-curve", "Ratio k_{nu+1,1}^2/k_{nu,1}^2 over a log sigma grid");
    curve_cmd->add_option("--dim", ca.dim, "Dimension N")->check(CLI::Range(2, 64));
    curve_cmd->add_option("--sigma-min", ca.sigma_min)->check(CLI::PositiveNumber);
    curve_cmd->add_option("--sigma-max", ca.sigma_max)->check(CLI::PositiveNumber);
    curve_cmd->add_option("--steps", ca.steps)->check(CLI::Range(2, 100000));
    add_common(curve_cmd, common, {"csv", "json", "svg"});

    TrialArgs ta;
    auto* trial_cmd = app.add_subcommand("trial", "Trial profiles w, q, B on [0, 1]");
    trial_cmd->add_option("--dim", ta.dim, "Dimension N")->check(CLI::Range(2, 64));
    trial_cmd->add_option("--sigma", ta.sigma)->check(CLI::PositiveNumber);
    trial_cmd->add_option("--samples", ta.samples)->check(CLI::Range(16, 1000000));
    add_common(trial_cmd, common, {"csv", "json", "svg"});

    DomainArgs vd;
    double v_sigma = 1.0;
    int v_dim = 2;
    auto* verify_cmd = app.add_subcommand("verify", "FEM check of the ratio bounds on a planar domain");
    verify_cmd->add_option("--shape", vd.shape, "disk[:R], ellipse:a,b, rect:a,b, square[:s], perturbed:eps,k");
    verify_cmd->add_option("--mesh", vd.mesh_path, "Mesh file (robinmesh 1)");
    verify_cmd->add_option("--sigma", v_sigma)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--h", vd.h, "Coarse target edge length; the fine mesh uses h/2")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--dim", v_dim, "Dimension (2 only)");
    add_common(verify_cmd, common, {"json"});

    DomainArgs sd;
    std::string sigmas = "1,10,100,1000";
    auto* sweep_cmd = app.add_subcommand("sweep-boundary", "Boundary maximum of u1 across sigma values");
    sweep_cmd->add_option("--shape", sd.shape);
    sweep_cmd->add_option("--mesh", sd.mesh_path);
    sweep_cmd->add_option("--sigmas", sigmas, "Comma-separated sigma list");
    sweep_cmd->add_option("--h", sd.h)->check(CLI::PositiveNumber);
    add_common(sweep_cmd, common, {"csv", "json"});

    int c_dim = 2;
    double c_rho = 3.0;
    auto* crit_cmd = app.add_subcommand("critical-sigma", "Unique sigma with ratio(sigma) = rho");
    crit_cmd->add_option("--dim", c_dim)->check(CLI::Range(2, 64));
    crit_cmd->add_option("--rho", c_rho)->required()->check(CLI::PositiveNumber);
    add_common(crit_cmd, common, {"csv", "json"});

    DomainArgs md;
    auto* mesh_cmd = app.add_subcommand("mesh", "Write a generated mesh in robinmesh format");
    mesh_cmd->add_option("--shape", md.shape)->required();
    mesh_cmd->add_option("--h", md.h)->check(CLI::PositiveNumber);
    mesh_cmd->add_option("--out", common.out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (zeros_cmd->parsed()) return cmd_zeros(za, common, out);
        if (curve_cmd->parsed()) return cmd_ratio_curve(ca, common, out, err);
        if (trial_cmd->parsed()) return cmd_trial(ta, common, out, err);
        if (verify_cmd->parsed()) return cmd_verify(vd, v_sigma, v_dim, common, out);
        if (sweep_cmd->parsed()) return cmd_sweep(sd, sigmas, common, out);
        if (crit_cmd->parsed()) return cmd_critical(c_dim, c_rho, common, out);
        if (mesh_cmd->parsed()) return cmd_mesh(md, common, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const OutOfRangeError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MeshError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kFailure;
    }
    err << "error: no command given\n";
    return kUsage;
}

}  // namespace robin::cli
