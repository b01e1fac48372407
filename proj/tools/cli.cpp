#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "curve_io.hpp"
#include "json_out.hpp"
#include "mgc/errors.hpp"
#include "mgc/family.hpp"
#include "mgc/frenet.hpp"
#include "mgc/mannheim.hpp"

namespace mgc::tools {

namespace {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level_from_env() {
    const char* v = std::getenv("MGC_LOG");
    if (!v) return LogLevel::Error;
    const std::string s = v;
    if (s == "debug") return LogLevel::Debug;
    if (s == "info") return LogLevel::Info;
    return LogLevel::Error;
}

struct Logger {
    std::ostream& err;
    LogLevel level = log_level_from_env();
    void info(const std::string& msg) const {
        if (level >= LogLevel::Info) err << "info: " << msg << "\n";
    }
    void debug(const std::string& msg) const {
        if (level >= LogLevel::Debug) err << "debug: " << msg << "\n";
    }
};

Interval parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::InvalidInput, "range must look like \"0:2\", got \"" + text + "\"");
    try {
        return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "bad range \"" + text + "\"");
    }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write \"" + out_path + "\"");
    f << text;
}

std::string fmt(double v) { return Json::format_double(v); }

Json vec_json(const Vec4& v) {
    return Json::array().push(Json::num(v.x1)).push(Json::num(v.x2)).push(Json::num(v.x3)).push(
        Json::num(v.x4));
}

/// Frame record with the documented field order.
Json frame_json(const FrenetApparatus& ap) {
    Json e = Json::array();
    for (int i = 0; i < 4; ++i) e.push(vec_json(ap.frame(i)));
    Json rec = Json::object();
    rec.set("s", Json::num(ap.s))
        .set("case", Json::str(to_string(ap.case_tag)))
        .set("e", std::move(e))
        .set("k", Json::array()
                      .push(Json::num(ap.k1))
                      .push(Json::num(ap.k2))
                      .push(Json::num(ap.k3)))
        .set("mu", Json::array()
                       .push(Json::integer(ap.mu1))
                       .push(Json::integer(ap.mu2))
                       .push(Json::integer(ap.mu3)))
        .set("eps", Json::array()
                        .push(Json::integer(1))
                        .push(Json::integer(ap.eps2))
                        .push(Json::integer(ap.eps3))
                        .push(Json::integer(ap.eps4)))
        .set("det", Json::num(ap.det))
        .set("u", Json::num(ap.u))
        .set("orient", Json::integer(ap.orient))
        .set("gram_residual", Json::num(ap.gram_residual))
        .set("k3_convention", Json::str("row_consistent"));
    return rec;
}

const char* kK3Note =
    "k3 carries the row-consistent sign eps4*<e3',e4>, so e3' = mu2 k2 e2 + k3 e4 holds as written";
const char* kConditionNote =
    "an alternative published form of the condition scales the k2^2 term by an extra sign that "
    "flips it when the principal normal is timelike; this tool uses the unscaled form";
const char* kSignNote =
    "the inner factor -A+AC-B^2 is negative at flagged probes: the unsigned square-root form is "
    "used there and the frame's timelike member moves from e4 to e2 (Case3)";

struct CurveInputs {
    std::string json_path;
    std::string csv_path;

    std::shared_ptr<const Curve> load(Logger& log) const {
        if (json_path.empty() == csv_path.empty())
            throw Error(ErrorCode::InvalidInput,
                        "provide exactly one of --curve or --curve-csv");
        if (!json_path.empty()) {
            log.info("loading curve definition " + json_path);
            return curve_from_json_file(json_path);
        }
        log.info("fitting sampled curve " + csv_path);
        return curve_from_csv_file(csv_path);
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--curve", json_path, "curve definition JSON file");
        cmd->add_option("--curve-csv", csv_path, "sampled curve CSV (header u,x1,x2,x3,x4)");
    }
};

void add_reduced_accuracy_note(Json& doc, const Curve& c) {
    if (c.max_exact_order() < 4)
        doc.set("reduced_accuracy_jets", Json::boolean(true));
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Logger log{err};

    CLI::App app{"Differential geometry of spacelike curves in 4-dimensional Minkowski "
                 "space-time: frames, curvatures, Mannheim partners, and an explicit "
                 "generated curve family"};
    app.name("mgc");
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write the report to this file instead of stdout")
        ->capture_default_str();
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for sample sweeps")
        ->capture_default_str();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "causal class of a vector");
    classify_cmd->fallthrough();
    std::string vector_text;
    double classify_tol = 1e-9;
    classify_cmd->add_option("--vector", vector_text, "comma-separated 4-tuple, e.g. \"1,0,0,2\"")
        ->required();
    classify_cmd->add_option("--tol", classify_tol, "relative null band")->capture_default_str();

    // frenet
    auto* frenet_cmd = app.add_subcommand("frenet", "frame and curvatures of a curve");
    frenet_cmd->fallthrough();
    CurveInputs frenet_curve;
    frenet_curve.attach(frenet_cmd);
    double at_s = 0.0;
    int grid_n = 0;
    double frenet_tol = 1e-8;
    auto* at_opt = frenet_cmd->add_option("--at", at_s, "arc length of the evaluation point");
    frenet_cmd->add_option("--grid", grid_n, "evaluate on this many arc-length samples instead");
    frenet_cmd->add_option("--tol", frenet_tol, "degeneracy tolerance")->capture_default_str();

    // mannheim
    auto* mann_cmd = app.add_subcommand("mannheim", "partner-curve analysis");
    mann_cmd->fallthrough();
    mann_cmd->require_subcommand(1);

    auto* check_cmd = mann_cmd->add_subcommand("check", "test the curvature condition");
    check_cmd->fallthrough();
    CurveInputs check_curve;
    check_curve.attach(check_cmd);
    int check_samples = 64;
    double spread_tol = 1e-3, residual_tol = 1e-6, check_ftol = 1e-8;
    check_cmd->add_option("--samples", check_samples, "grid size (>= 3)")->capture_default_str();
    check_cmd->add_option("--spread-tol", spread_tol, "allowed relative spread of alpha")
        ->capture_default_str();
    check_cmd->add_option("--residual-tol", residual_tol, "allowed normalized residual")
        ->capture_default_str();
    check_cmd->add_option("--tol", check_ftol, "frame degeneracy tolerance")->capture_default_str();

    auto* mate_cmd = mann_cmd->add_subcommand("mate", "construct the partner curve c + alpha e2");
    mate_cmd->fallthrough();
    CurveInputs mate_curve;
    mate_curve.attach(mate_cmd);
    double mate_alpha = 0.0;
    int mate_samples = 256;
    double mate_ftol = 1e-8;
    std::string mate_csv;
    mate_cmd->add_option("--alpha", mate_alpha, "partner offset constant")->required();
    mate_cmd->add_option("--samples", mate_samples, "spline nodes (>= 200)")->capture_default_str();
    mate_cmd->add_option("--csv", mate_csv, "also dump mate samples (s,x1..x4,s_star) to this file");
    mate_cmd->add_option("--tol", mate_ftol, "frame degeneracy tolerance")->capture_default_str();

    auto* verify_cmd = mann_cmd->add_subcommand("verify", "first-normal inclusion check of the pair");
    verify_cmd->fallthrough();
    CurveInputs verify_curve;
    verify_curve.attach(verify_cmd);
    double verify_alpha = 0.0;
    bool verify_auto_alpha = false;
    int verify_points = 25, verify_samples = 256;
    double pair_tol = 1e-4, verify_ftol = 1e-8;
    verify_cmd->add_option("--alpha", verify_alpha, "partner offset constant");
    verify_cmd->add_flag("--alpha-from-condition", verify_auto_alpha,
                         "use the constant admitted by the curvature condition");
    verify_cmd->add_option("--points", verify_points, "correspondence points")->capture_default_str();
    verify_cmd->add_option("--samples", verify_samples, "mate spline nodes")->capture_default_str();
    verify_cmd->add_option("--pair-tol", pair_tol, "residual bound for a Holds verdict")
        ->capture_default_str();
    verify_cmd->add_option("--tol", verify_ftol, "frame degeneracy tolerance")->capture_default_str();

    auto* thm_cmd = mann_cmd->add_subcommand("thm33", "third-normal alignment characterization");
    thm_cmd->fallthrough();
    CurveInputs thm_curve;
    thm_curve.attach(thm_cmd);
    double thm_alpha = 0.0;
    bool thm_auto_alpha = false;
    int thm_points = 25, thm_samples = 256;
    double deriv_tol = 1e-6, angle_tol = 1e-3, thm_ftol = 1e-8;
    thm_cmd->add_option("--alpha", thm_alpha, "partner offset constant");
    thm_cmd->add_flag("--alpha-from-condition", thm_auto_alpha,
                      "use the constant admitted by the curvature condition");
    thm_cmd->add_option("--points", thm_points, "probe points")->capture_default_str();
    thm_cmd->add_option("--samples", thm_samples, "mate spline nodes")->capture_default_str();
    thm_cmd->add_option("--deriv-tol", deriv_tol, "curvature-derivative bound for Holds")
        ->capture_default_str();
    thm_cmd->add_option("--angle-tol", angle_tol, "third-normal alignment tolerance")
        ->capture_default_str();
    thm_cmd->add_option("--tol", thm_ftol, "frame degeneracy tolerance")->capture_default_str();

    // family
    auto* family_cmd = app.add_subcommand("family", "explicit generated curve family");
    family_cmd->fallthrough();
    family_cmd->require_subcommand(1);

    auto* gen_cmd = family_cmd->add_subcommand("generate", "emit curve samples as CSV");
    gen_cmd->fallthrough();
    std::string gen_g, gen_h, gen_range;
    double gen_alpha = 0.0;
    int gen_samples = 200, gen_nodes = 1024;
    gen_cmd->add_option("--g", gen_g, "profile g(u)")->required();
    gen_cmd->add_option("--h", gen_h, "profile h(u)")->required();
    gen_cmd->add_option("--alpha", gen_alpha, "nonzero constant")->required();
    gen_cmd->add_option("--range", gen_range, "domain a:b")->required();
    gen_cmd->add_option("--samples", gen_samples, "CSV rows")->capture_default_str();
    gen_cmd->add_option("--nodes", gen_nodes, "quadrature cells")->capture_default_str();

    auto* fver_cmd = family_cmd->add_subcommand("verify", "check k1 = alpha (k1^2 + k2^2)");
    fver_cmd->fallthrough();
    std::string fver_g, fver_h, fver_range;
    double fver_alpha = 0.0;
    int fver_probes = 50, fver_nodes = 1024;
    double closed_tol = 1e-9, numeric_tol = 1e-4, fver_ftol = 1e-8;
    fver_cmd->add_option("--g", fver_g, "profile g(u)")->required();
    fver_cmd->add_option("--h", fver_h, "profile h(u)")->required();
    fver_cmd->add_option("--alpha", fver_alpha, "nonzero constant")->required();
    fver_cmd->add_option("--range", fver_range, "domain a:b")->required();
    fver_cmd->add_option("--probes", fver_probes, "interior probe count")->capture_default_str();
    fver_cmd->add_option("--nodes", fver_nodes, "quadrature cells")->capture_default_str();
    fver_cmd->add_option("--closed-tol", closed_tol, "closed-form residual bound")
        ->capture_default_str();
    fver_cmd->add_option("--numeric-tol", numeric_tol, "frame-pipeline residual bound")
        ->capture_default_str();
    fver_cmd->add_option("--tol", fver_ftol, "frame degeneracy tolerance")->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("mgc");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::stringstream ss;
        ss << app.help();
        out << ss.str();
        return 0;
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorCode::InvalidInput, e.what());
    }

    if (threads < 1) threads = 1;

    if (classify_cmd->parsed()) {
        const Vec4 v = vec4_from_string(vector_text);
        const CausalClass cc = classify(v, classify_tol);
        Json doc = Json::object();
        doc.set("class", Json::str(to_string(cc.kind))).set("q", Json::num(cc.q));
        emit(doc.dump() + "\n", out_path, out);
        return 0;
    }

    if (frenet_cmd->parsed()) {
        auto curve = frenet_curve.load(log);
        log.info("building arc-length map");
        auto map = std::make_shared<ArcLengthMap>(curve);
        log.info("total arc length " + fmt(map->total_length()));
        const FrenetOptions fopt{frenet_tol};

        Json doc = Json::object();
        if (grid_n > 0) {
            std::vector<double> grid(grid_n);
            for (int i = 0; i < grid_n; ++i)
                grid[i] = grid_n == 1 ? 0.0 : map->total_length() * i / (grid_n - 1);
            const auto samples = apparatus_along(*curve, *map, grid, fopt, threads);
            Json arr = Json::array();
            for (const auto& sm : samples) {
                if (sm.apparatus) {
                    Json rec = frame_json(*sm.apparatus);
                    if (sm.case_change) rec.set("case_change", Json::boolean(true));
                    if (sm.orientation_jump) rec.set("orientation_jump", Json::boolean(true));
                    arr.push(std::move(rec));
                } else {
                    arr.push(Json::object().set("s", Json::num(sm.s)).set("error", Json::str(sm.error)));
                }
            }
            doc.set("samples", std::move(arr));
        } else {
            if (at_opt->count() == 0)
                throw Error(ErrorCode::InvalidInput, "frenet needs --at or --grid");
            doc = frame_json(frenet_apparatus(*curve, *map, at_s, fopt));
        }
        add_reduced_accuracy_note(doc, *curve);
        doc.set("notes", Json::array().push(Json::str(kK3Note)));
        emit(doc.dump() + "\n", out_path, out);
        return 0;
    }

    if (check_cmd->parsed()) {
        auto curve = check_curve.load(log);
        auto map = std::make_shared<ArcLengthMap>(curve);
        const MannheimReport rep = check_condition(curve, *map, check_samples,
                                                   {spread_tol, residual_tol},
                                                   FrenetOptions{check_ftol}, threads);
        Json samples = Json::array();
        for (const auto& sm : rep.samples) {
            Json rec = Json::object();
            rec.set("s", Json::num(sm.s));
            if (sm.error.empty()) {
                rec.set("k1", Json::num(sm.k1))
                    .set("k2", Json::num(sm.k2))
                    .set("alpha", Json::num(sm.alpha))
                    .set("residual", Json::num(sm.residual));
            } else {
                rec.set("error", Json::str(sm.error));
            }
            samples.push(std::move(rec));
        }
        Json doc = Json::object();
        doc.set("verdict", Json::str(to_string(rep.verdict)))
            .set("alpha_hat", Json::num(rep.alpha_hat))
            .set("alpha_rel_spread", Json::num(rep.alpha_rel_spread))
            .set("case", Json::str(to_string(rep.case_tag)))
            .set("samples", std::move(samples))
            .set("condition", Json::str(rep.condition))
            .set("max_abs_residual", Json::num(rep.max_abs_residual))
            .set("residual_scale", Json::num(rep.residual_scale));
        add_reduced_accuracy_note(doc, *curve);
        doc.set("notes", Json::array().push(Json::str(kConditionNote)));
        emit(doc.dump() + "\n", out_path, out);
        return 0;
    }

    if (mate_cmd->parsed()) {
        auto curve = mate_curve.load(log);
        const MatePair pair = construct_mate(curve, mate_alpha, mate_samples,
                                             FrenetOptions{mate_ftol});
        const size_t n = pair.s.size();

        double min_speed = 0.0, max_speed = 0.0, max_gap = 0.0;
        for (size_t j = 0; j < n; ++j) {
            const double sp = norm(pair.mate->velocity(pair.s[j]));
            if (j == 0) min_speed = max_speed = sp;
            min_speed = std::min(min_speed, sp);
            max_speed = std::max(max_speed, sp);
        }
        // Closed-form f' against the measured spline speed on a bounded set
        // of probes.
        const int n_probe = 25;
        for (int j = 0; j < n_probe; ++j) {
            const double s = pair.s.back() * j / (n_probe - 1);
            const FrenetApparatus ap = frenet_apparatus(*curve, *pair.base_map, s,
                                                        FrenetOptions{mate_ftol});
            const double closed = mate_speed(ap, mate_alpha);
            const double measured = norm(pair.mate->velocity(s));
            max_gap = std::max(max_gap, std::fabs(closed - measured));
        }

        if (!mate_csv.empty()) {
            std::string csv = "s,x1,x2,x3,x4,s_star\n";
            for (size_t j = 0; j < n; ++j) {
                const Vec4 p = pair.mate->point(pair.s[j]);
                csv += fmt(pair.s[j]) + "," + fmt(p.x1) + "," + fmt(p.x2) + "," + fmt(p.x3) + "," +
                       fmt(p.x4) + "," + fmt(pair.s_star[j]) + "\n";
            }
            emit(csv, mate_csv, out);
        }

        Json doc = Json::object();
        doc.set("alpha", Json::num(pair.alpha))
            .set("nodes", Json::integer(static_cast<long long>(n)))
            .set("base_length", Json::num(pair.s.back()))
            .set("mate_length", Json::num(pair.s_star.back()))
            .set("min_mate_speed", Json::num(min_speed))
            .set("max_mate_speed", Json::num(max_speed))
            .set("max_fprime_gap", Json::num(max_gap));
        add_reduced_accuracy_note(doc, *curve);
        emit(doc.dump() + "\n", out_path, out);
        return 0;
    }

    if (verify_cmd->parsed() || thm_cmd->parsed()) {
        const bool is_pair = verify_cmd->parsed();
        CurveInputs& inputs = is_pair ? verify_curve : thm_curve;
        auto curve = inputs.load(log);
        const double ftol = is_pair ? verify_ftol : thm_ftol;
        const int samples = is_pair ? verify_samples : thm_samples;
        double alpha = is_pair ? verify_alpha : thm_alpha;
        const bool auto_alpha = is_pair ? verify_auto_alpha : thm_auto_alpha;

        auto map = std::make_shared<ArcLengthMap>(curve);
        if (auto_alpha) {
            const MannheimReport rep =
                check_condition(curve, *map, 33, {}, FrenetOptions{ftol}, threads);
            if (rep.verdict != Verdict::Holds)
                throw Error(ErrorCode::DegenerateDenominator,
                            "curvature condition does not admit a constant (verdict " +
                                std::string(to_string(rep.verdict)) + ")");
            alpha = rep.alpha_hat;
            log.info("alpha from condition: " + fmt(alpha));
        } else if (alpha == 0.0 && !is_pair) {
            throw Error(ErrorCode::InvalidInput, "provide --alpha or --alpha-from-condition");
        }

        const MatePair pair = construct_mate(curve, alpha, samples, FrenetOptions{ftol});

        Json doc = Json::object();
        if (is_pair) {
            const PairReport rep = verify_pair(pair, pair_tol, verify_points, FrenetOptions{ftol});
            Json pts = Json::array();
            for (const auto& pt : rep.points) {
                Json rec = Json::object();
                rec.set("s", Json::num(pt.s)).set("s_star", Json::num(pt.s_star));
                if (pt.mate_error.empty())
                    rec.set("r_e1", Json::num(pt.r_e1)).set("r_e2", Json::num(pt.r_e2));
                else
                    rec.set("error", Json::str(pt.mate_error));
                pts.push(std::move(rec));
            }
            doc.set("verdict", Json::str(to_string(rep.outcome)))
                .set("alpha", Json::num(pair.alpha))
                .set("tol", Json::num(rep.tol))
                .set("max_r_e1", Json::num(rep.max_r_e1))
                .set("max_r_e2", Json::num(rep.max_r_e2))
                .set("points", std::move(pts));
        } else {
            const Thm33Report rep =
                verify_thm33(pair, deriv_tol, thm_points, FrenetOptions{ftol}, angle_tol);
            doc.set("verdict", Json::str(to_string(rep.outcome)))
                .set("alpha", Json::num(pair.alpha))
                .set("hypothesis_met", Json::boolean(rep.hypothesis_met))
                .set("max_misalignment", Json::num(rep.max_misalignment))
                .set("max_k1_prime", Json::num(rep.max_k1_prime))
                .set("max_k2_prime", Json::num(rep.max_k2_prime))
                .set("max_identity_residual", Json::num(rep.max_identity_residual));
        }
        add_reduced_accuracy_note(doc, *curve);
        emit(doc.dump() + "\n", out_path, out);
        return 0;
    }

    if (gen_cmd->parsed()) {
        FamilyParams fp;
        fp.alpha = gen_alpha;
        fp.g = parse(gen_g, "u");
        fp.h = parse(gen_h, "u");
        fp.domain = parse_range(gen_range);
        fp.n_nodes = gen_nodes;
        if (gen_samples < 2)
            throw Error(ErrorCode::InvalidInput, "family generate needs --samples >= 2");
        auto curve = generate_curve(fp);
        log.info("family table ready");

        std::string csv = "u,x1,x2,x3,x4,f,k1_closed,ksq_closed\n";
        for (int i = 0; i < gen_samples; ++i) {
            const double u = fp.domain.lo + fp.domain.width() * i / (gen_samples - 1);
            const Vec4 p = curve->point(u);
            const double fv = f_of_u(fp.g, fp.h, u);
            csv += fmt(u) + "," + fmt(p.x1) + "," + fmt(p.x2) + "," + fmt(p.x3) + "," + fmt(p.x4) +
                   "," + fmt(fv) + "," + fmt(closed_form_k1(fp, u)) + "," +
                   fmt(closed_form_ksq_sum(fp, u)) + "\n";
        }
        emit(csv, out_path, out);
        return 0;
    }

    if (fver_cmd->parsed()) {
        FamilyParams fp;
        fp.alpha = fver_alpha;
        fp.g = parse(fver_g, "u");
        fp.h = parse(fver_h, "u");
        fp.domain = parse_range(fver_range);
        fp.n_nodes = fver_nodes;
        FamilyVerifyOptions opt;
        opt.closed_tol = closed_tol;
        opt.numeric_tol = numeric_tol;
        opt.frenet.tol = fver_ftol;
        const FamilyReport rep = verify_family(fp, fver_probes, opt);

        Json probes = Json::array();
        for (const auto& pr : rep.probes) {
            Json rec = Json::object();
            rec.set("u", Json::num(pr.u));
            if (pr.error.empty()) {
                rec.set("f", Json::num(pr.f))
                    .set("k1_closed", Json::num(pr.k1_closed))
                    .set("ksq_closed", Json::num(pr.ksq_closed))
                    .set("k1_num", Json::num(pr.k1_num))
                    .set("k2_num", Json::num(pr.k2_num))
                    .set("case", Json::str(pr.case1 ? "Case1" : "Case3"))
                    .set("res_closed", Json::num(pr.res_closed))
                    .set("res_num", Json::num(pr.res_num));
                if (pr.sign_flag) rec.set("sign_flag", Json::boolean(true));
            } else {
                rec.set("error", Json::str(pr.error));
            }
            probes.push(std::move(rec));
        }
        Json doc = Json::object();
        doc.set("verdict", Json::str(to_string(rep.verdict)))
            .set("alpha", Json::num(rep.alpha))
            .set("max_res_closed", Json::num(rep.max_res_closed))
            .set("max_res_num", Json::num(rep.max_res_num))
            .set("max_route_gap", Json::num(rep.max_route_gap))
            .set("all_case1", Json::boolean(rep.all_case1))
            .set("sign_inconsistency", Json::boolean(rep.sign_inconsistency))
            .set("errors", Json::integer(rep.n_errors))
            .set("probes", std::move(probes));
        Json notes = Json::array();
        if (rep.sign_inconsistency) notes.push(Json::str(kSignNote));
        doc.set("notes", std::move(notes));
        emit(doc.dump() + "\n", out_path, out);
        return 0;
    }

    throw Error(ErrorCode::InvalidInput, "no subcommand given");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const Error& e) {
        Json msg = Json::object();
        msg.set("error", Json::str(to_string(e.code()))).set("detail", Json::str(e.detail()));
        err << msg.dump() << "\n";
        return is_input_error(e.code()) ? 2 : 3;
    } catch (const std::exception& e) {
        Json msg = Json::object();
        msg.set("error", Json::str("internal")).set("detail", Json::str(e.what()));
        err << msg.dump() << "\n";
        return 3;
    }
}

} // namespace mgc::tools
