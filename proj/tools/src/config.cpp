#include "cancelfield_cli/config.hpp"

#include "cancelfield/operators/verify_cases.hpp"
#include "cancelfield/verify/commutator_numeric.hpp"
#include "cancelfield/verify/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace cancelfield::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 6> kCommands{{
    {Command::verify_symbolic, "verify-symbolic"},
    {Command::solve, "solve"},
    {Command::verify_numeric, "verify-numeric"},
    {Command::convergence, "convergence"},
    {Command::radius_check, "radius-check"},
    {Command::report, "report"},
}};

const std::set<std::string>& known_presets() {
    static const std::set<std::string> s{"zero", "uniform", "steady_sine", "decaying_sine", "manufactured"};
    return s;
}

const std::set<std::string>& known_profiles() {
    static const std::set<std::string> s{"exponential", "zero", "manufactured"};
    return s;
}

// Pulls typed values out of one table and remembers which keys were read,
// so leftovers can be reported as unknown.
class TableReader {
public:
    TableReader(const TomlDocument& doc, const std::string& name) : name_(name) {
        auto it = doc.find(name);
        if (it != doc.end()) table_ = &it->second;
    }

    std::string path(const std::string& key) const { return name_.empty() ? key : name_ + "." + key; }

    const TomlValue* get(const std::string& key) {
        seen_.insert(key);
        if (table_ == nullptr) return nullptr;
        auto it = table_->entries.find(key);
        return it == table_->entries.end() ? nullptr : &it->second;
    }

    void read(const std::string& key, double& out) {
        if (const auto* v = get(key)) out = number(key, *v);
    }

    void read(const std::string& key, std::int64_t& out) {
        if (const auto* v = get(key)) out = integer(key, *v);
    }

    void read(const std::string& key, std::size_t& out) {
        if (const auto* v = get(key)) {
            const auto i = integer(key, *v);
            if (i < 0) throw ValidationError(path(key), "must be non-negative");
            out = static_cast<std::size_t>(i);
        }
    }

    void read(const std::string& key, bool& out) {
        if (const auto* v = get(key)) {
            if (!v->is_bool()) throw ValidationError(path(key), "expected a boolean");
            out = std::get<bool>(v->v);
        }
    }

    void read(const std::string& key, std::string& out) {
        if (const auto* v = get(key)) out = string(key, *v);
    }

    void read(const std::string& key, std::vector<std::string>& out) {
        if (const auto* v = get(key)) {
            out.clear();
            for (const auto& e : array(key, *v)) out.push_back(string(key, e));
        }
    }

    void read(const std::string& key, std::vector<std::int64_t>& out) {
        if (const auto* v = get(key)) {
            out.clear();
            for (const auto& e : array(key, *v)) out.push_back(integer(key, e));
        }
    }

    void read(const std::string& key, solver::Scheme& out) {
        if (const auto* v = get(key)) {
            const auto s = solver::scheme_from_string(string(key, *v));
            if (!s) throw ValidationError(path(key), "unknown scheme '" + string(key, *v) + "'");
            out = *s;
        }
    }

    void finish() const {
        if (table_ == nullptr) return;
        for (const auto& [key, v] : table_->entries) {
            if (seen_.count(key) == 0) {
                throw ValidationError(path(key), "unknown key '" + key + "' (line " + std::to_string(v.line) + ")");
            }
        }
    }

    double number(const std::string& key, const TomlValue& v) const {
        if (v.is_float()) return std::get<double>(v.v);
        if (v.is_int()) return static_cast<double>(std::get<std::int64_t>(v.v));
        throw ValidationError(path(key), "expected a number");
    }

    std::int64_t integer(const std::string& key, const TomlValue& v) const {
        if (!v.is_int()) throw ValidationError(path(key), "expected an integer");
        return std::get<std::int64_t>(v.v);
    }

    std::string string(const std::string& key, const TomlValue& v) const {
        if (!v.is_string()) throw ValidationError(path(key), "expected a string");
        return std::get<std::string>(v.v);
    }

    const TomlValue::Array& array(const std::string& key, const TomlValue& v) const {
        if (!v.is_array()) throw ValidationError(path(key), "expected an array");
        return std::get<TomlValue::Array>(v.v);
    }

private:
    std::string name_;
    const TomlTable* table_{nullptr};
    std::set<std::string> seen_;
};

void require(bool ok, const std::string& key, const std::string& msg) {
    if (!ok) throw ValidationError(key, msg);
}

void check_grid_list(const std::vector<std::int64_t>& ns, const std::string& key) {
    require(ns.size() >= 3, key, "needs at least 3 grids");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        require(ns[i] >= 8, key, "every grid needs N >= 8");
        if (i > 0) require(ns[i] == 2 * ns[i - 1], key, "grids must double");
    }
}

std::string fmt_double(double d) {
    if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
    if (std::isnan(d)) return "nan";
    // Shortest of %.15g..%.17g that reads back to the same double.
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, d);
        if (std::strtod(buf, nullptr) == d) break;
    }
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out.push_back(c);
        }
    }
    return out + "\"";
}

template <class T, class F>
std::string list(const std::vector<T>& v, F&& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += f(v[i]);
    }
    return out + "]";
}

} // namespace

std::string_view to_string(Command c) noexcept {
    for (const auto& [k, n] : kCommands) {
        if (k == c) return n;
    }
    return "?";
}

std::optional<Command> command_from_string(std::string_view s) noexcept {
    for (const auto& [k, n] : kCommands) {
        if (n == s) return k;
    }
    return std::nullopt;
}

solver::SolverConfig SolverSection::to_solver_config() const {
    solver::SolverConfig c;
    c.mu = mu;
    c.kappa = kappa;
    c.dt = dt;
    c.cfl = cfl;
    c.dt_max = dt_max;
    c.scheme = scheme;
    c.t_end = t_end;
    return c;
}

Config config_from_toml(const TomlDocument& doc) {
    static const std::set<std::string> tables{"", "grid", "solver", "outer", "initial", "output", "verify"};
    for (const auto& [name, tab] : doc) {
        if (tables.count(name) == 0) throw ValidationError(name, "unknown table [" + name + "]");
    }
    Config c;
    TableReader root(doc, "");
    root.finish();

    TableReader g(doc, "grid");
    g.read("nx", c.grid.nx);
    g.read("nz", c.grid.nz);
    g.read("Z", c.grid.Z);
    g.finish();
    require(c.grid.nx >= 8, "grid.nx", "must be at least 8");
    require(c.grid.nz >= 8, "grid.nz", "must be at least 8");
    require(c.grid.Z > 0 && std::isfinite(c.grid.Z), "grid.Z", "must be positive");

    TableReader s(doc, "solver");
    std::string system = "prandtl";
    s.read("system", system);
    if (system == "prandtl") {
        c.solver.system = System::prandtl;
    } else if (system == "mhd") {
        c.solver.system = System::mhd;
    } else {
        throw ValidationError("solver.system", "expected \"prandtl\" or \"mhd\", got '" + system + "'");
    }
    s.read("mu", c.solver.mu);
    s.read("kappa", c.solver.kappa);
    if (const auto* v = s.get("dt")) {
        if (v->is_string()) {
            require(std::get<std::string>(v->v) == "auto", "solver.dt", "expected a number or \"auto\"");
        } else {
            c.solver.dt = s.number("dt", *v);
            require(*c.solver.dt > 0 && std::isfinite(*c.solver.dt), "solver.dt", "must be positive");
        }
    }
    s.read("cfl", c.solver.cfl);
    s.read("dt_max", c.solver.dt_max);
    s.read("scheme", c.solver.scheme);
    s.read("t_end", c.solver.t_end);
    s.finish();
    require(c.solver.mu > 0, "solver.mu", "must be positive");
    require(c.solver.kappa > 0, "solver.kappa", "must be positive");
    require(c.solver.cfl > 0 && c.solver.cfl <= 1, "solver.cfl", "must lie in (0, 1]");
    require(c.solver.dt_max > 0, "solver.dt_max", "must be positive");
    require(c.solver.t_end >= 0 && std::isfinite(c.solver.t_end), "solver.t_end", "must be non-negative");

    TableReader o(doc, "outer");
    o.read("preset", c.outer.preset);
    o.read("U", c.outer.U);
    o.read("F", c.outer.F);
    o.read("amplitude", c.outer.amplitude);
    o.read("gamma", c.outer.gamma);
    o.finish();
    require(known_presets().count(c.outer.preset) != 0, "outer.preset", "unknown preset '" + c.outer.preset + "'");

    TableReader in(doc, "initial");
    in.read("profile", c.initial.profile);
    in.read("delta", c.initial.delta);
    in.finish();
    require(known_profiles().count(c.initial.profile) != 0, "initial.profile",
            "unknown profile '" + c.initial.profile + "'");
    require(c.initial.delta > 0, "initial.delta", "must be positive");
    require((c.outer.preset == "manufactured") == (c.initial.profile == "manufactured"), "initial.profile",
            "\"manufactured\" must be used for both outer.preset and initial.profile");

    TableReader out(doc, "output");
    out.read("snapshot_every", c.output.snapshot_every);
    out.read("directory", c.output.directory);
    out.read("csv", c.output.csv);
    out.read("binary", c.output.binary);
    out.finish();

    TableReader v(doc, "verify");
    auto& vs = c.verify;
    v.read("cases", vs.cases);
    v.read("negative_controls", vs.negative_controls);
    v.read("identities", vs.identities);
    v.read("grids", vs.grids);
    v.read("thetas", vs.thetas);
    v.read("order_min", vs.order_min);
    v.read("order_max", vs.order_max);
    v.read("exact_tol", vs.exact_tol);
    v.read("pair_min", vs.pair_min);
    v.read("gate_tol", vs.gate_tol);
    v.read("m_max", vs.m_max);
    v.read("rho", vs.rho);
    v.read("samples", vs.samples);
    v.read("closed_form_tol", vs.closed_form_tol);
    v.read("solver_grids", vs.solver_grids);
    v.read("solver_dt_coeff", vs.solver_dt_coeff);
    v.read("solver_t_end", vs.solver_t_end);
    v.read("solver_scheme", vs.solver_scheme);
    v.finish();

    for (const auto& name : vs.cases) {
        const auto& a = ops::symbolic_suite();
        const auto& b = ops::lemma_suite();
        const auto& n = ops::negative_controls();
        const bool known = std::find(a.begin(), a.end(), name) != a.end() ||
                           std::find(b.begin(), b.end(), name) != b.end() ||
                           std::find(n.begin(), n.end(), name) != n.end();
        require(known, "verify.cases", "unknown case '" + name + "'");
    }
    for (const auto& name : vs.identities) {
        require(verify::identity_from_name(name).has_value(), "verify.identities", "unknown identity '" + name + "'");
    }
    for (const auto& name : vs.thetas) {
        require(verify::theta_from_name(name).has_value(), "verify.thetas", "unknown theta '" + name + "'");
    }
    check_grid_list(vs.grids, "verify.grids");
    check_grid_list(vs.solver_grids, "verify.solver_grids");
    require(vs.order_min < vs.order_max, "verify.order_min", "must be below order_max");
    require(vs.exact_tol > 0, "verify.exact_tol", "must be positive");
    require(vs.pair_min >= 0, "verify.pair_min", "must be non-negative");
    require(vs.gate_tol > 0, "verify.gate_tol", "must be positive");
    require(vs.m_max >= 1 && vs.m_max <= 1'000'000, "verify.m_max", "must lie in [1, 1000000]");
    require(vs.rho > 0, "verify.rho", "must be positive");
    require(vs.samples >= 10 && vs.samples <= 10'000'000, "verify.samples", "must lie in [10, 10000000]");
    require(vs.closed_form_tol > 0, "verify.closed_form_tol", "must be positive");
    require(vs.solver_dt_coeff > 0, "verify.solver_dt_coeff", "must be positive");
    require(vs.solver_t_end > 0, "verify.solver_t_end", "must be positive");
    return c;
}

Config parse_config_text(std::string_view text) { return config_from_toml(parse_toml(text)); }

Config parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string emit_toml(const Config& c) {
    const auto d = [](double x) { return fmt_double(x); };
    const auto i = [](std::int64_t x) { return std::to_string(x); };
    const auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    std::ostringstream o;
    o << "[grid]\n"
      << "nx = " << c.grid.nx << "\n"
      << "nz = " << c.grid.nz << "\n"
      << "Z = " << d(c.grid.Z) << "\n\n";
    o << "[solver]\n"
      << "system = " << quote(c.solver.system == System::mhd ? "mhd" : "prandtl") << "\n"
      << "mu = " << d(c.solver.mu) << "\n"
      << "kappa = " << d(c.solver.kappa) << "\n"
      << "dt = " << (c.solver.dt ? d(*c.solver.dt) : quote("auto")) << "\n"
      << "cfl = " << d(c.solver.cfl) << "\n"
      << "dt_max = " << d(c.solver.dt_max) << "\n"
      << "scheme = " << quote(std::string(solver::to_string(c.solver.scheme))) << "\n"
      << "t_end = " << d(c.solver.t_end) << "\n\n";
    o << "[outer]\n"
      << "preset = " << quote(c.outer.preset) << "\n"
      << "U = " << d(c.outer.U) << "\n"
      << "F = " << d(c.outer.F) << "\n"
      << "amplitude = " << d(c.outer.amplitude) << "\n"
      << "gamma = " << d(c.outer.gamma) << "\n\n";
    o << "[initial]\n"
      << "profile = " << quote(c.initial.profile) << "\n"
      << "delta = " << d(c.initial.delta) << "\n\n";
    o << "[output]\n"
      << "snapshot_every = " << c.output.snapshot_every << "\n"
      << "directory = " << quote(c.output.directory) << "\n"
      << "csv = " << b(c.output.csv) << "\n"
      << "binary = " << b(c.output.binary) << "\n\n";
    const auto& v = c.verify;
    o << "[verify]\n"
      << "cases = " << list(v.cases, quote) << "\n"
      << "negative_controls = " << b(v.negative_controls) << "\n"
      << "identities = " << list(v.identities, quote) << "\n"
      << "grids = " << list(v.grids, i) << "\n"
      << "thetas = " << list(v.thetas, quote) << "\n"
      << "order_min = " << d(v.order_min) << "\n"
      << "order_max = " << d(v.order_max) << "\n"
      << "exact_tol = " << d(v.exact_tol) << "\n"
      << "pair_min = " << d(v.pair_min) << "\n"
      << "gate_tol = " << d(v.gate_tol) << "\n"
      << "m_max = " << v.m_max << "\n"
      << "rho = " << d(v.rho) << "\n"
      << "samples = " << v.samples << "\n"
      << "closed_form_tol = " << d(v.closed_form_tol) << "\n"
      << "solver_grids = " << list(v.solver_grids, i) << "\n"
      << "solver_dt_coeff = " << d(v.solver_dt_coeff) << "\n"
      << "solver_t_end = " << d(v.solver_t_end) << "\n"
      << "solver_scheme = " << quote(std::string(solver::to_string(v.solver_scheme))) << "\n";
    return o.str();
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace cancelfield::cli
