#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcflab/affine.hpp"
#include "mcflab/curve_io.hpp"
#include "mcflab/fixtures.hpp"
#include "mcflab/flow.hpp"
#include "mcflab/hausdorff.hpp"
#include "mcflab/scenario.hpp"
#include "mcflab/soliton.hpp"
#include "mcflab/symmetry.hpp"

namespace {

using mcf::Json;

struct GlobalOpts {
    std::string config;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    bool json = false;
};

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mcf::ConfigError("cannot open config " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw mcf::ConfigError(std::string("bad JSON in ") + path + ": " +
                               e.what());
    }
    return j;
}

// A spec argument is either a JSON file path or a bare name.
Json spec_argument(const std::string& arg, const char* key) {
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json")
        return load_json_file(arg);
    return Json{{key, arg}};
}

std::string out_path(const GlobalOpts& g, const std::string& file) {
    if (g.out_dir.empty() || g.out_dir == ".") return file;
    std::error_code ec;
    std::filesystem::create_directories(g.out_dir, ec);
    return g.out_dir + "/" + file;
}

void emit(const GlobalOpts& g, const Json& report,
          const std::string& human_summary) {
    if (g.json) std::cout << report.dump(2) << std::endl;
    else std::cout << human_summary << std::endl;
}

int run_scenario_cmd(const GlobalOpts& g, const std::string& name, bool list) {
    if (list) {
        for (const auto& n : mcf::builtin_scenario_names()) std::cout << n << '\n';
        return 0;
    }
    mcf::ScenarioConfig cfg = g.config.empty()
                                  ? mcf::builtin_scenario(name)
                                  : mcf::ScenarioConfig::parse(load_json_file(g.config));
    if (cfg.out_dir.empty()) cfg.out_dir = g.out_dir;
    if (g.seed != 1) cfg.seed = g.seed;
    const Json report = mcf::run_scenario(cfg);
    emit(g, report,
         "scenario " + cfg.name + ": " + report.at("status").get<std::string>());
    if (!g.json) std::cout << report.at("metrics").dump(2) << std::endl;
    return report.at("status") == "pass" ? 0 : 1;
}

int run_soliton_cmd(const GlobalOpts& g, const std::string& metric_arg,
                    double u0, double v0, double angle, double length,
                    double step) {
    const Json mj = metric_arg.empty()
                        ? Json{{"family", {{"case", "I_i"},
                                           {"lambda", 1.0},
                                           {"c2", 1.0},
                                           {"form", "v"},
                                           {"Q", "w2/10"}}}}
                        : spec_argument(metric_arg, "name");
    mcf::MetricSpec ms = mcf::metric_from_json(mj);
    if (!ms.field)
        throw mcf::ConfigError("soliton integration needs a family metric");

    const double speed = std::exp(-ms.metric.rho({u0, v0}).val);
    const mcf::SolitonState init{u0, v0, speed * std::cos(angle),
                                 speed * std::sin(angle)};
    mcf::SolitonOptions opts;
    opts.step = step;
    const mcf::SolitonRun run =
        mcf::integrate_soliton(ms.metric, *ms.field, init, length, opts);

    std::vector<double> residuals(run.states.size(), 0.0);
    double max_residual = 0;
    if (run.curve.size() >= 5) {
        residuals = mcf::characterizing_residuals_pointwise(ms.metric,
                                                            *ms.field,
                                                            run.curve);
        for (double r : residuals) max_residual = std::max(max_residual, r);
    }

    const auto rec = mcf::CurveRecord::from_run(run);
    const std::string csv = out_path(g, "soliton.csv");
    const std::string jsonf = out_path(g, "soliton.json");
    mcf::export_curve_with_residual(rec, residuals, csv);
    mcf::export_curve(rec, jsonf, mcf::CurveFormat::JSON);

    Json report;
    report["points"] = run.curve.size();
    report["arclength_reached"] = run.s_reached;
    report["characterizing_residual"] = max_residual;
    report["unit_speed_defect"] = run.max_speed_defect;
    report["stop"] = run.stop == mcf::StopReason::Completed ? "completed"
                     : run.stop == mcf::StopReason::Singular ? "singular"
                                                             : "left-domain";
    report["csv"] = csv;
    report["json"] = jsonf;
    emit(g, report,
         "soliton: " + std::to_string(run.curve.size()) + " points, residual " +
             mcf::format_double(max_residual) + ", wrote " + csv);
    return run.stop == mcf::StopReason::Completed ? 0 : 1;
}

int run_flow_cmd(const GlobalOpts& g, const std::string& metric_arg,
                 const std::string& initial, double T, double dx, double dt,
                 const std::string& bc, const std::string& out,
                 const std::string& field_arg, bool closed) {
    std::ifstream probe(initial);
    if (!probe) throw mcf::ConfigError("cannot open initial data " + initial);
    std::string header;
    std::getline(probe, header);
    probe.close();
    const bool graph_mode = header == "x,u";

    const Json mj = metric_arg.empty()
                        ? Json{{"name", graph_mode ? "flat-gaussian"
                                                   : "flat-isothermal"}}
                        : spec_argument(metric_arg, "name");
    mcf::MetricSpec ms = mcf::metric_from_json(mj);

    std::optional<mcf::SurfaceField> field;
    if (ms.field) field = ms.field;
    else if (!field_arg.empty())
        field = mcf::surface_field_from_json(spec_argument(field_arg, "name"));

    std::vector<std::array<double, 4>> series;
    const std::string series_path = out + ".series.csv";

    if (graph_mode) {
        // Graph flow; Dirichlet pins the boundary to its initial values.
        std::ifstream in(initial);
        std::getline(in, header);
        std::vector<double> xs, us;
        double a, b;
        char comma;
        while (in >> a >> comma >> b) {
            xs.push_back(a);
            us.push_back(b);
        }
        if (xs.size() < 5) throw mcf::ConfigError("need >= 5 grid nodes");
        (void)dx;
        const double ua = us.front(), ub = us.back();
        const double xa = xs.front();
        mcf::GraphFlow flow(
            ms.metric, xs, us, dt,
            bc == "periodic" ? mcf::GraphBC::Periodic : mcf::GraphBC::Dirichlet,
            [ua, ub, xa](double x, double) { return x == xa ? ua : ub; });
        const int sample_every =
            std::max(1, static_cast<int>(std::llround(T / dt / 50)));
        int n = 0;
        while (flow.t() + 0.5 * dt < T) {
            flow.step();
            if (++n % sample_every == 0)
                series.push_back({flow.t(), flow.length(), flow.max_curvature(),
                                  std::numeric_limits<double>::quiet_NaN()});
        }
        std::ofstream o(out);
        if (!o) throw mcf::IOError("cannot open " + out);
        o << "x,u\n";
        for (size_t i = 0; i < flow.x().size(); ++i)
            o << mcf::format_double(flow.x()[i]) << ','
              << mcf::format_double(flow.u()[i]) << '\n';
    } else {
        const auto rec = mcf::import_curve(initial, mcf::CurveFormat::CSV);
        mcf::Curve curve = rec.to_curve(closed);
        const mcf::Curve start = curve;
        if (dt <= 0) throw mcf::ConfigError("parametric flow needs --dt > 0");
        std::vector<mcf::FlowSample> samples;
        curve = mcf::run_parametric_flow_series(ms.metric, curve, T, dt,
                                                samples);
        for (const auto& s : samples) {
            double hd = std::numeric_limits<double>::quiet_NaN();
            series.push_back({s.t, s.length, s.max_k, hd});
        }
        if (field) {
            // Final-state distance to the group-mapped initial curve.
            mcf::Curve mapped = start;
            const double s = mcf::group_time(field->lambda, T);
            for (mcf::Vec2& p : mapped.pts)
                p = mcf::flow_conformal_field(ms.metric, *field, p, s);
            const double hd = mcf::hausdorff_trimmed(
                mcf::resample_arclength(curve, 512, &ms.metric).pts,
                curve.closed,
                mcf::resample_arclength(mapped, 512, &ms.metric).pts,
                mapped.closed, curve.closed ? 0.0 : 0.15);
            if (!series.empty()) series.back()[3] = hd;
        }
        mcf::export_curve(mcf::CurveRecord::from_curve(curve, &ms.metric), out,
                          mcf::CurveFormat::CSV);
    }

    std::ofstream so(series_path);
    if (!so) throw mcf::IOError("cannot open " + series_path);
    so << "t,length,max_k,hausdorff\n";
    for (const auto& row : series)
        so << mcf::format_double(row[0]) << ',' << mcf::format_double(row[1])
           << ',' << mcf::format_double(row[2]) << ','
           << mcf::format_double(row[3]) << '\n';

    Json report;
    report["out"] = out;
    report["series"] = series_path;
    report["T"] = T;
    emit(g, report, "flow: reached T=" + mcf::format_double(T) + ", wrote " + out);
    return 0;
}

int run_verify_symmetry_cmd(const GlobalOpts& g, const std::string& metric_arg,
                            const std::string& field_arg, int jets) {
    const Json mj = metric_arg.empty()
                        ? Json{{"name", "flat-gaussian"},
                               {"domain", Json::array({Json::array({-1, 1}),
                                                       Json::array({-1, 1})})}}
                        : spec_argument(metric_arg, "name");
    mcf::MetricSpec ms = mcf::metric_from_json(mj);

    Json fj = field_arg.empty() ? Json("dilation") : Json(field_arg);
    if (field_arg.size() > 5 &&
        field_arg.substr(field_arg.size() - 5) == ".json")
        fj = load_json_file(field_arg);
    const mcf::SymmetryCandidate cand = mcf::candidate_from_json(fj);

    mcf::Rng rng(g.seed);
    const auto jet_points = mcf::sample_manifold_jets(ms.metric, jets, rng);
    const double residual =
        mcf::max_prolongation_residual(ms.metric, cand, jet_points);
    const mcf::Verdict verdict = mcf::classify_residual(residual);

    Json report;
    report["field"] = cand.name;
    report["residual_max"] = residual;
    report["verdict"] = mcf::to_string(verdict);
    std::cout << report.dump(2) << std::endl;
    return verdict == mcf::Verdict::Pass ? 0 : 1;
}

int run_affine_cmd(const GlobalOpts& g, const std::string& family_path,
                   const std::string& name) {
    mcf::AffineFamily family;
    if (!family_path.empty()) {
        const Json j = load_json_file(family_path);
        if (!j.contains("n") || !j.contains("samples"))
            throw mcf::ConfigError("family file needs 'n' and 'samples'");
        family.n = j.at("n").get<int>();
        for (const Json& row : j.at("samples")) {
            if (!row.is_array() || row.size() != 3)
                throw mcf::ConfigError("each sample is [t, R, T]");
            family.sample_t.push_back(row[0].get<double>());
            mcf::MatX R(family.n, family.n);
            for (int r = 0; r < family.n; ++r)
                for (int c = 0; c < family.n; ++c)
                    R(r, c) = row[1].at(r).at(c).get<double>();
            mcf::VecX T(family.n);
            for (int r = 0; r < family.n; ++r) T(r) = row[2].at(r).get<double>();
            family.sample_R.push_back(R);
            family.sample_T.push_back(T);
        }
    } else {
        mcf::ScenarioConfig cfg;
        cfg.name = "affine";
        cfg.kind = "affine";
        cfg.run = Json{{"families", Json::array({name})}};
        cfg.tolerances = Json::object();
        const Json rep = mcf::run_scenario(cfg);
        Json report;
        report["family"] = name;
        report["verdict"] = rep.at("verdicts").at(name);
        emit(g, report,
             "affine " + name + ": " +
                 rep.at("verdicts").at(name).get<std::string>());
        return 0;
    }

    const auto split = mcf::infinitesimal_split(family);
    const auto verdict = mcf::classify_family(family);
    Json report;
    report["verdict"] = mcf::to_string(verdict);
    report["scalar"] = split.scalar;
    report["skew_norm"] = split.skew.norm();
    report["upper_norm"] = split.upper.norm();
    std::vector<double> tr(split.translation.data(),
                           split.translation.data() + split.translation.size());
    report["translation"] = tr;
    emit(g, report, "affine: " + mcf::to_string(verdict));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mcflab: curve-shortening solitons, symmetry verification, "
                 "and affine-family classification on surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--config", g.config, "scenario config file");
    app.add_option("--out", g.out_dir, "output directory");
    app.add_option("--seed", g.seed, "random seed");
    app.add_flag("--json", g.json, "machine-readable report on stdout");

    auto* sc = app.add_subcommand("scenario", "run a named or configured scenario");
    std::string sc_name = "flat-shrinker";
    bool sc_list = false;
    sc->add_option("--name", sc_name, "built-in scenario name");
    sc->add_flag("--list", sc_list, "list built-in scenarios");

    auto* so = app.add_subcommand("soliton", "integrate a soliton initial curve");
    std::string so_metric;
    double so_u0 = 0, so_v0 = 0, so_angle = 0, so_len = 1.0, so_step = 1e-3;
    so->add_option("--metric", so_metric, "family config (json file)");
    so->add_option("--u0", so_u0, "initial u");
    so->add_option("--v0", so_v0, "initial v");
    so->add_option("--angle", so_angle, "initial tangent angle");
    so->add_option("--length", so_len, "arclength to integrate");
    so->add_option("--step", so_step, "RK4 step");

    auto* fl = app.add_subcommand("flow", "evolve a curve by its curvature");
    std::string fl_metric, fl_initial, fl_bc = "dirichlet", fl_out = "flow.csv",
                           fl_field;
    double fl_T = 0.1, fl_dx = 0, fl_dt = 0;
    bool fl_closed = false;
    fl->add_option("--metric", fl_metric, "metric config or name");
    fl->add_option("--initial", fl_initial, "initial data csv")->required();
    fl->add_option("--T", fl_T, "final time");
    fl->add_option("--dx", fl_dx, "grid spacing (informational for graphs)");
    fl->add_option("--dt", fl_dt, "time step")->required();
    fl->add_option("--bc", fl_bc, "dirichlet|periodic (graph mode)");
    fl->add_option("--out", fl_out, "output csv");
    fl->add_option("--field", fl_field,
                   "group field for the self-similarity column");
    fl->add_flag("--closed", fl_closed, "treat the initial curve as closed");

    auto* vs = app.add_subcommand("verify-symmetry",
                                  "evaluate pr^(2)v[Phi^1] on manifold jets");
    std::string vs_metric, vs_field;
    int vs_jets = 100;
    vs->add_option("--metric", vs_metric, "metric config or name");
    vs->add_option("--field", vs_field, "candidate name or json file");
    vs->add_option("--jets", vs_jets, "number of manifold jets");

    auto* af = app.add_subcommand("affine", "classify a one-parameter affine family");
    std::string af_family, af_name = "shrinker";
    af->add_option("--family", af_family, "sampled family json file");
    af->add_option("--name", af_name, "closed-form family name");

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("MCF_LAB_OUT")) g.out_dir = env;

    try {
        if (sc->parsed()) return run_scenario_cmd(g, sc_name, sc_list);
        if (so->parsed())
            return run_soliton_cmd(g, so_metric, so_u0, so_v0, so_angle,
                                   so_len, so_step);
        if (fl->parsed())
            return run_flow_cmd(g, fl_metric, fl_initial, fl_T, fl_dx, fl_dt,
                                fl_bc, out_path(g, fl_out), fl_field,
                                fl_closed);
        if (vs->parsed())
            return run_verify_symmetry_cmd(g, vs_metric, vs_field, vs_jets);
        if (af->parsed()) return run_affine_cmd(g, af_family, af_name);
    } catch (const mcf::ConfigError& e) {
        std::cerr << "config error: " << e.what() << std::endl;
        return 2;
    } catch (const mcf::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
