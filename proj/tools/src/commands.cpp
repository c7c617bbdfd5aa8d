#include "cancelfield_cli/commands.hpp"

#include "cancelfield/cancel/good_unknowns.hpp"
#include "cancelfield/cancel/guard.hpp"
#include "cancelfield/numerics/field_io.hpp"
#include "cancelfield/numerics/stencils.hpp"
#include "cancelfield/operators/verify_cases.hpp"
#include "cancelfield/solver/run.hpp"
#include "cancelfield/verify/commutator_numeric.hpp"
#include "cancelfield/verify/convergence.hpp"
#include "cancelfield/verify/radius.hpp"
#include "cancelfield/verify/solver_study.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#ifndef CANCELFIELD_VERSION
#define CANCELFIELD_VERSION "0.0.0"
#endif

namespace cancelfield::cli {

using nlohmann::json;

namespace {

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string csv_number(double d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

bool is_negative_control(const std::string& name) {
    const auto& n = ops::negative_controls();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<num::Grid2D> grids_from(const std::vector<std::int64_t>& ns, double Z) {
    std::vector<std::size_t> sizes(ns.begin(), ns.end());
    return verify::doubling_grids(sizes, Z);
}

json levels_json(const verify::ConvergenceReport& r) {
    json out = json::array();
    for (const auto& l : r.levels) {
        out.push_back({{"nx", l.nx}, {"nz", l.nz}, {"h", l.h}, {"err_max", l.err_max}, {"err_l2", l.err_l2}});
    }
    return out;
}

json study_json(const verify::ConvergenceReport& r, double lo, double hi) {
    return {{"name", r.name},
            {"order", r.order},
            {"ci95", {r.ci_low, r.ci_high}},
            {"fit_residual", r.fit_residual},
            {"accepted_range", {lo, hi}},
            {"passed", r.order_within(lo, hi)},
            {"levels", levels_json(r)}};
}

void append_levels_csv(std::string& csv, const std::string& study, const verify::ConvergenceReport& r) {
    for (const auto& l : r.levels) {
        csv += study + "," + std::to_string(l.nx) + "," + std::to_string(l.nz) + "," + csv_number(l.h) + "," +
               csv_number(l.err_max) + "," + csv_number(l.err_l2) + "\n";
    }
}

std::string field_csv(const num::ScalarField2D& s) {
    std::ostringstream os;
    num::write_csv(os, s);
    return os.str();
}

std::string field_binary(const num::ScalarField2D& s) {
    std::ostringstream os(std::ios::binary);
    num::write_binary(os, s);
    return os.str();
}

void write_field(ArtifactWriter& out, const OutputSection& o, const std::string& stem, const num::ScalarField2D& s) {
    if (o.csv) out.write(stem + ".csv", field_csv(s));
    if (o.binary) out.write(stem + ".bin", field_binary(s));
}

std::string step_tag(std::size_t step) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%06zu", step);
    return buf;
}

solver::OuterFlow outer_from(const OuterSection& o) {
    if (o.preset == "uniform") return solver::OuterFlow::uniform(o.U, o.F);
    if (o.preset == "steady_sine") return solver::OuterFlow::steady_sine(o.amplitude, o.U, o.F);
    if (o.preset == "decaying_sine") return solver::OuterFlow::decaying_sine(o.amplitude, o.gamma, o.U, o.F);
    return solver::OuterFlow::zero();
}

json field_summary(const num::ScalarField2D& s) { return {{"max_abs", s.max_abs()}, {"min_abs", s.min_abs()}}; }

json guard_json(const cancel::NonVanishingGuard& g, const num::Grid2D& grid) {
    return {{"satisfied", g.satisfied},
            {"min_abs", g.min_abs},
            {"threshold", g.threshold},
            {"at", {{"x", grid.x(g.i_min)}, {"z", grid.z(g.k_min)}}}};
}

template <class State>
json state_summary(const State& s) {
    const auto& g = s.u.grid();
    const auto omega = num::discrete_derivative(s.u, num::Dir::z, 1);
    json j = {{"t", s.t}, {"u", field_summary(s.u)}, {"w", field_summary(s.w)}};
    j["monotonicity"] = guard_json(cancel::monotonicity_guard(omega), g);
    return j;
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const CflViolation*>(&e)) return "CflViolation";
    if (dynamic_cast<const NonFinite*>(&e)) return "NonFinite";
    if (dynamic_cast<const MonotonicityViolated*>(&e)) return "MonotonicityViolated";
    if (dynamic_cast<const DegenerateMagneticField*>(&e)) return "DegenerateMagneticField";
    if (dynamic_cast<const InvalidGrid*>(&e)) return "InvalidGrid";
    if (dynamic_cast<const InsufficientGrids*>(&e)) return "InsufficientGrids";
    if (dynamic_cast<const InconsistentCase*>(&e)) return "InconsistentCase";
    if (dynamic_cast<const IterationLimitExceeded*>(&e)) return "IterationLimitExceeded";
    if (dynamic_cast<const TimeJetPresent*>(&e)) return "TimeJetPresent";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
    if (dynamic_cast<const Error*>(&e)) return "Error";
    return "std::exception";
}

} // namespace

ArtifactWriter::ArtifactWriter(std::filesystem::path root) : root_(std::move(root)) {
    std::filesystem::create_directories(root_);
}

void ArtifactWriter::write(const std::string& name, const std::string& bytes) {
    const auto p = root_ / name;
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot write '" + p.string() + "'");
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!os) throw Error("write failed for '" + p.string() + "'");
    artifacts_.push_back({{"path", name}, {"bytes", bytes.size()}, {"fnv1a64", hex64(fnv1a64(bytes))}});
}

Section run_verify_symbolic(const Config& cfg, const RunConfig& run) {
    Section s{"verify-symbolic"};
    std::vector<std::string> names = cfg.verify.cases;
    if (names.empty()) {
        names = ops::symbolic_suite();
        const auto& lemmas = ops::lemma_suite();
        names.insert(names.end(), lemmas.begin(), lemmas.end());
    }
    if (run.negative_controls || cfg.verify.negative_controls) {
        for (const auto& n : ops::negative_controls()) {
            if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
        }
    }
    json cases = json::array();
    for (const auto& name : names) {
        const auto r = ops::verify_by_name(name);
        if (!r) throw ValidationError("verify.cases", "unknown case '" + name + "'");
        const bool expect_fail = is_negative_control(name);
        const bool ok = expect_fail ? !r->proved() : r->proved();
        json j = ops::to_json(*r, run.verbosity);
        j["expected"] = expect_fail ? "failed" : "proved";
        j["ok"] = ok;
        if (expect_fail && run.verbosity == 0) {
            json off = json::array();
            for (const auto& t : r->offending) off.push_back({{"term", t.term}, {"order", t.order}});
            j["offending_terms"] = std::move(off);
        }
        s.passed = s.passed && ok;
        cases.push_back(std::move(j));
    }
    s.body["cases"] = std::move(cases);
    return s;
}

Section run_solve(const Config& cfg, const RunConfig& run, ArtifactWriter& out) {
    (void)run;
    Section s{"solve"};
    const num::Grid2D g(cfg.grid.nx, cfg.grid.nz, cfg.grid.Z);
    auto scfg = cfg.solver.to_solver_config();
    solver::RunOptions opts;
    opts.snapshot_every = cfg.output.snapshot_every;
    const bool mhd = cfg.solver.system == System::mhd;
    const bool manufactured = cfg.outer.preset == "manufactured";

    std::optional<verify::ManufacturedCase> mcase;
    if (manufactured) {
        mcase = mhd ? verify::solver_mhd_case(g.Z(), scfg.mu, scfg.kappa) : verify::solver_prandtl_case(g.Z(), scfg.mu);
        opts.forcing = verify::manufactured_forcing(*mcase);
    }
    const auto outer = manufactured ? mcase->outer() : outer_from(cfg.outer);

    const auto initial_u = [&] {
        const double delta = cfg.initial.delta;
        const bool zero = cfg.initial.profile == "zero";
        return num::ScalarField2D::sample(g, [&](double x, double z) {
            return zero ? 0.0 : outer.uE(0.0, x) * (1.0 - std::exp(-z / delta));
        });
    };
    const auto initial_f = [&] { return num::ScalarField2D::sample(g, [&](double x, double) { return outer.fE(0.0, x); }); };

    json summary;
    std::vector<solver::Snapshot> snaps;
    std::size_t steps = 0;
    if (mhd) {
        auto st = manufactured ? verify::manufactured_mhd_state(*mcase, g)
                               : solver::make_mhd_state(initial_u(), initial_f(), outer);
        auto res = solver::run(std::move(st), scfg, opts);
        summary = state_summary(res.final_state);
        summary["f"] = field_summary(res.final_state.f);
        summary["h"] = field_summary(res.final_state.h);
        summary["magnetic"] = guard_json(cancel::magnetic_guard(res.final_state.f), g);
        write_field(out, cfg.output, "u_final", res.final_state.u);
        write_field(out, cfg.output, "f_final", res.final_state.f);
        snaps = std::move(res.snapshots);
        steps = res.steps;
        if (mcase) {
            const auto uex = num::ScalarField2D::sample(g, [&](double x, double z) { return mcase->u(scfg.t_end, x, z); });
            const auto fex = num::ScalarField2D::sample(g, [&](double x, double z) { return (*mcase->f)(scfg.t_end, x, z); });
            const auto eu = verify::interior_norms(res.final_state.u - uex, verify::default_band(g));
            const auto ef = verify::interior_norms(res.final_state.f - fex, verify::default_band(g));
            summary["manufactured_error"] = {{"u", {{"max", eu.max}, {"l2", eu.l2}}}, {"f", {{"max", ef.max}, {"l2", ef.l2}}}};
        }
    } else {
        auto st = manufactured ? verify::manufactured_prandtl_state(*mcase, g) : solver::make_prandtl_state(initial_u(), outer);
        auto res = solver::run(std::move(st), scfg, opts);
        summary = state_summary(res.final_state);
        write_field(out, cfg.output, "u_final", res.final_state.u);
        snaps = std::move(res.snapshots);
        steps = res.steps;
        if (mcase) {
            const auto uex = num::ScalarField2D::sample(g, [&](double x, double z) { return mcase->u(scfg.t_end, x, z); });
            const auto eu = verify::interior_norms(res.final_state.u - uex, verify::default_band(g));
            summary["manufactured_error"] = {{"u", {{"max", eu.max}, {"l2", eu.l2}}}};
        }
    }

    json snapshot_list = json::array();
    for (const auto& sn : snaps) {
        const auto tag = step_tag(sn.step);
        write_field(out, cfg.output, "u_" + tag, sn.u);
        if (sn.f) write_field(out, cfg.output, "f_" + tag, *sn.f);
        snapshot_list.push_back({{"step", sn.step}, {"t", sn.t}});
    }
    s.body = {{"system", mhd ? "mhd" : "prandtl"},
              {"outer", outer.name},
              {"steps", steps},
              {"final", std::move(summary)},
              {"snapshots", std::move(snapshot_list)}};
    return s;
}

Section run_verify_numeric(const Config& cfg, const RunConfig& run, ArtifactWriter& out) {
    Section s{"verify-numeric"};
    const auto& v = cfg.verify;
    const double Z = cfg.grid.Z;
    const auto prandtl = verify::standard_prandtl_case(Z, cfg.solver.mu);
    const auto mhd = verify::standard_mhd_case(Z, cfg.solver.mu, cfg.solver.kappa);

    json gates = json::array();
    for (const auto& c : {prandtl, mhd, verify::solver_prandtl_case(Z, cfg.solver.mu),
                          verify::solver_mhd_case(Z, cfg.solver.mu, cfg.solver.kappa)}) {
        json j = {{"case", c.name}};
        try {
            const auto r = verify::self_consistency_gate(c, run.seed, 64, v.gate_tol);
            j["passed"] = r.passed;
            j["max_derivative_mismatch"] = r.max_derivative_mismatch;
            j["max_constraint_mismatch"] = r.max_constraint_mismatch;
            j["max_wall_value"] = r.max_wall_value;
            if (c.monotone) j["min_uz"] = r.min_uz;
            s.passed = s.passed && r.passed;
        } catch (const InconsistentCase& e) {
            j["passed"] = false;
            j["error"] = e.what();
            s.passed = false;
        }
        gates.push_back(std::move(j));
    }
    s.body["gates"] = std::move(gates);

    const auto grids = grids_from(v.grids, Z);
    const auto& finest = grids.back();
    json exact = json::array();
    for (auto id : {verify::Identity::theta_uzz, verify::Identity::f1_g1, verify::Identity::directional_g1,
                    verify::Identity::mhd_theta_h, verify::Identity::mhd_f_u1}) {
        const auto& c = verify::identity_is_mhd(id) ? mhd : prandtl;
        const auto e = verify::manufactured_residual(c, id, finest, verify::Evaluation::exact);
        const auto d = verify::manufactured_residual(c, id, finest, verify::Evaluation::discrete);
        const bool ok = e.max <= v.exact_tol;
        s.passed = s.passed && ok;
        exact.push_back({{"identity", verify::identity_name(id)},
                         {"exact_max", e.max},
                         {"discrete_max", d.max},
                         {"discrete_l2", d.l2},
                         {"passed", ok}});
    }
    s.body["identities_exact"] = {{"nx", finest.nx()}, {"nz", finest.nz()}, {"tolerance", v.exact_tol}, {"results", exact}};

    std::string csv = "theta,nx,nz,h,transported,bracket,sum\n";
    json comm = json::array();
    const auto test = verify::standard_test_field();
    for (const auto& tname : v.thetas) {
        const auto theta = *verify::theta_from_name(tname);
        const auto& c = theta == verify::ThetaChoice::mhd_h ? mhd : prandtl;
        std::vector<verify::CommutatorNorms> per_level;
        const auto rep = verify::convergence_order(std::string(tname), grids, [&](const num::Grid2D& g, double band) {
            const auto n = verify::commutator_residual_numeric(c, theta, test, g, 0.0, band);
            per_level.push_back(n);
            return verify::ErrorNorms{n.sum, n.sum};
        });
        double min_member = INFINITY;
        for (std::size_t i = 0; i < per_level.size(); ++i) {
            const auto& n = per_level[i];
            min_member = std::min({min_member, n.transported, n.bracket});
            csv += tname + "," + std::to_string(grids[i].nx()) + "," + std::to_string(grids[i].nz()) + "," +
                   csv_number(rep.levels[i].h) + "," + csv_number(n.transported) + "," + csv_number(n.bracket) + "," +
                   csv_number(n.sum) + "\n";
        }
        const bool genuine = min_member >= v.pair_min && rep.order >= v.order_min;
        // (1,0) and 0 are controls: the first leaves an order-2 term, the
        // second cancels vacuously. Neither may pass as genuine cancellation.
        const bool control = theta == verify::ThetaChoice::unit_x || theta == verify::ThetaChoice::zero;
        const bool ok = control ? !genuine : genuine;
        s.passed = s.passed && ok;
        json levels = json::array();
        for (std::size_t i = 0; i < per_level.size(); ++i) {
            levels.push_back({{"nx", grids[i].nx()},
                              {"nz", grids[i].nz()},
                              {"h", rep.levels[i].h},
                              {"transported", per_level[i].transported},
                              {"bracket", per_level[i].bracket},
                              {"sum", per_level[i].sum}});
        }
        comm.push_back({{"theta", tname},
                        {"case", c.name},
                        {"expected", control ? "no genuine cancellation" : "genuine cancellation"},
                        {"min_member", min_member},
                        {"sum_order", std::isfinite(rep.order) ? json(rep.order) : json(nullptr)},
                        {"ok", ok},
                        {"levels", std::move(levels)}});
    }
    s.body["commutator"] = std::move(comm);
    out.write("commutator.csv", csv);
    return s;
}

Section run_convergence(const Config& cfg, const RunConfig& run, ArtifactWriter& out) {
    (void)run;
    Section s{"convergence"};
    const auto& v = cfg.verify;
    const double Z = cfg.grid.Z;
    const auto prandtl = verify::standard_prandtl_case(Z, cfg.solver.mu);
    const auto mhd = verify::standard_mhd_case(Z, cfg.solver.mu, cfg.solver.kappa);

    std::vector<verify::Identity> ids;
    if (v.identities.empty()) {
        ids = {verify::Identity::theta_uzz, verify::Identity::f1_g1,        verify::Identity::directional_g1,
               verify::Identity::mhd_theta_h, verify::Identity::mhd_f_u1, verify::Identity::recovery};
    } else {
        for (const auto& n : v.identities) ids.push_back(*verify::identity_from_name(n));
    }

    std::string csv = "study,nx,nz,h,err_max,err_l2\n";
    json studies = json::array();
    const auto grids = grids_from(v.grids, Z);
    for (auto id : ids) {
        const auto& c = verify::identity_is_mhd(id) ? mhd : prandtl;
        const auto r = verify::convergence_order(c, id, grids);
        s.passed = s.passed && r.order_within(v.order_min, v.order_max);
        append_levels_csv(csv, r.name, r);
        studies.push_back(study_json(r, v.order_min, v.order_max));
    }

    const auto sgrids = grids_from(v.solver_grids, Z);
    for (const auto& c : {verify::solver_prandtl_case(Z, cfg.solver.mu),
                          verify::solver_mhd_case(Z, cfg.solver.mu, cfg.solver.kappa)}) {
        auto r = verify::solver_convergence(c, sgrids, v.solver_dt_coeff, v.solver_t_end, v.solver_scheme);
        s.passed = s.passed && r.order_within(v.order_min, v.order_max);
        append_levels_csv(csv, r.name, r);
        auto j = study_json(r, v.order_min, v.order_max);
        j["dt_coeff"] = v.solver_dt_coeff;
        j["t_end"] = v.solver_t_end;
        j["scheme"] = solver::to_string(v.solver_scheme);
        studies.push_back(std::move(j));
    }
    s.body["studies"] = std::move(studies);
    out.write("convergence.csv", csv);
    return s;
}

Section run_radius_check(const Config& cfg, const RunConfig& run, ArtifactWriter& out) {
    (void)run;
    Section s{"radius-check"};
    const auto& v = cfg.verify;
    const auto r = verify::radius_inequality_check(static_cast<unsigned>(v.m_max), v.rho, static_cast<unsigned>(v.samples));
    s.passed = r.all_le_one && r.sampled_below_closed_form && r.max_closed_form_dev <= v.closed_form_tol;
    std::string csv = "m,max_sampled,argmax_sampled,maximizer,q_at_maximizer,closed_form\n";
    for (const auto& row : r.rows) {
        csv += std::to_string(row.m) + "," + csv_number(row.max_sampled) + "," + csv_number(row.argmax_sampled) + "," +
               csv_number(row.maximizer) + "," + csv_number(row.q_at_maximizer) + "," + csv_number(row.closed_form) + "\n";
    }
    out.write("radius.csv", csv);
    s.body = {{"m_max", v.m_max},
              {"rho", r.rho},
              {"samples", r.samples},
              {"max_q", r.max_q},
              {"all_le_one", r.all_le_one},
              {"sampled_below_closed_form", r.sampled_below_closed_form},
              {"max_closed_form_deviation", r.max_closed_form_dev},
              {"tolerance", v.closed_form_tol}};
    return s;
}

namespace {

json provenance(const Config& cfg, const RunConfig& run, const std::string& toml) {
    const auto& v = cfg.verify;
    return {{"version", CANCELFIELD_VERSION},
            {"command", to_string(run.command)},
            {"config_hash", hex64(fnv1a64(toml))},
            {"seed", run.seed},
            {"verbosity", run.verbosity},
            {"negative_controls", run.negative_controls || v.negative_controls},
            {"grid", {{"nx", cfg.grid.nx}, {"nz", cfg.grid.nz}, {"Z", cfg.grid.Z}}},
            {"verify_grids", v.grids},
            {"solver_grids", v.solver_grids},
            {"thresholds",
             {{"order_min", v.order_min},
              {"order_max", v.order_max},
              {"exact_tol", v.exact_tol},
              {"pair_min", v.pair_min},
              {"gate_tol", v.gate_tol},
              {"closed_form_tol", v.closed_form_tol}}}};
}

} // namespace

int execute(const RunConfig& run, std::ostream& log, std::ostream& err) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    Config cfg;
    try {
        if (run.config_path) cfg = parse_config(*run.config_path);
    } catch (const std::exception& e) {
        err << "cancelfield: " << error_kind(e) << ": " << e.what() << "\n";
        return kError;
    }
    const std::string toml = emit_toml(cfg);

    std::optional<ArtifactWriter> out;
    json timing = json::object();
    json report = {{"provenance", provenance(cfg, run, toml)}};
    int code = kPass;
    try {
        out.emplace(run.output_dir.empty() ? std::filesystem::path(cfg.output.directory) : run.output_dir);
        std::vector<Section> sections;
        const auto timed = [&](auto&& fn) {
            const auto a = clock::now();
            sections.push_back(fn());
            timing[sections.back().name] = std::chrono::duration<double>(clock::now() - a).count();
            log << sections.back().name << ": " << (sections.back().passed ? "pass" : "FAIL") << "\n";
        };
        switch (run.command) {
        case Command::verify_symbolic: timed([&] { return run_verify_symbolic(cfg, run); }); break;
        case Command::solve: timed([&] { return run_solve(cfg, run, *out); }); break;
        case Command::verify_numeric: timed([&] { return run_verify_numeric(cfg, run, *out); }); break;
        case Command::convergence: timed([&] { return run_convergence(cfg, run, *out); }); break;
        case Command::radius_check: timed([&] { return run_radius_check(cfg, run, *out); }); break;
        case Command::report:
            timed([&] { return run_verify_symbolic(cfg, run); });
            timed([&] { return run_verify_numeric(cfg, run, *out); });
            timed([&] { return run_convergence(cfg, run, *out); });
            timed([&] { return run_radius_check(cfg, run, *out); });
            break;
        }
        bool passed = true;
        json body = json::object();
        for (auto& sec : sections) {
            passed = passed && sec.passed;
            sec.body["passed"] = sec.passed;
            body[sec.name] = std::move(sec.body);
        }
        report["passed"] = passed;
        report["sections"] = std::move(body);
        code = passed ? kPass : kFail;
    } catch (const std::exception& e) {
        err << "cancelfield: " << error_kind(e) << ": " << e.what() << "\n";
        report["passed"] = false;
        report["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
        code = kError;
    }
    if (!out) return kError;

    try {
        out->write("report.json", report.dump(2) + "\n");
        json manifest = {{"version", CANCELFIELD_VERSION},
                         {"command", to_string(run.command)},
                         {"config_path", run.config_path ? run.config_path->string() : ""},
                         {"config", toml},
                         {"config_hash", hex64(fnv1a64(toml))},
                         {"seed", run.seed},
                         {"verbosity", run.verbosity},
                         {"exit_code", code},
                         {"timing_seconds", timing},
                         {"total_seconds", std::chrono::duration<double>(clock::now() - t0).count()},
                         {"artifacts", out->artifacts()}};
        const auto bytes = manifest.dump(2) + "\n";
        std::ofstream os(out->root() / "manifest.json", std::ios::binary | std::ios::trunc);
        os << bytes;
        if (!os) throw Error("cannot write manifest.json");
    } catch (const std::exception& e) {
        err << "cancelfield: error: " << e.what() << "\n";
        return kError;
    }
    return code;
}

} // namespace cancelfield::cli
