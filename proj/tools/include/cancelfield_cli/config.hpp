#pragma once

#include "cancelfield/solver/stepper.hpp"
#include "cancelfield_cli/toml.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cancelfield::cli {

enum class Command { verify_symbolic, solve, verify_numeric, convergence, radius_check, report };

std::string_view to_string(Command c) noexcept;
std::optional<Command> command_from_string(std::string_view s) noexcept;

enum class System { prandtl, mhd };

struct GridSection {
    std::size_t nx{64};
    std::size_t nz{65};
    double Z{10.0};

    bool operator==(const GridSection&) const = default;
};

struct SolverSection {
    System system{System::prandtl};
    double mu{1.0};
    double kappa{1.0};
    std::optional<double> dt; // absent or "auto": auto step
    double cfl{0.5};
    double dt_max{1e-2};
    solver::Scheme scheme{solver::Scheme::upwind1};
    double t_end{1.0};

    bool operator==(const SolverSection&) const = default;
    solver::SolverConfig to_solver_config() const;
};

// preset: zero | uniform | steady_sine | decaying_sine | manufactured
struct OuterSection {
    std::string preset{"zero"};
    double U{0.0};
    double F{0.0};
    double amplitude{0.0};
    double gamma{0.0};

    bool operator==(const OuterSection&) const = default;
};

// profile: exponential  u = u^E(0,x)(1 − e^{−z/δ}), f = f^E(0,x)
//          zero         u = 0 below the lid, f = f^E(0,x)
//          manufactured the solver's manufactured case with its forcing
struct InitialSection {
    std::string profile{"exponential"};
    double delta{1.0};

    bool operator==(const InitialSection&) const = default;
};

struct OutputSection {
    std::size_t snapshot_every{0};
    std::string directory{"out"};
    bool csv{true};
    bool binary{false};

    bool operator==(const OutputSection&) const = default;
};

struct VerifySection {
    std::vector<std::string> cases;      // empty: identity suite plus lemma instances
    bool negative_controls{false};
    std::vector<std::string> identities; // empty: all six
    std::vector<std::int64_t> grids{32, 64, 128};
    std::vector<std::string> thetas{"classical_uzz", "mhd_h"};
    double order_min{1.8};
    double order_max{2.2};
    double exact_tol{1e-12};
    double pair_min{0.01};
    double gate_tol{1e-6};
    std::int64_t m_max{1000};
    double rho{1.0};
    std::int64_t samples{1000};
    double closed_form_tol{1e-9};
    std::vector<std::int64_t> solver_grids{32, 64, 128};
    double solver_dt_coeff{0.1};
    double solver_t_end{0.5};
    solver::Scheme solver_scheme{solver::Scheme::central2};

    bool operator==(const VerifySection&) const = default;
};

struct Config {
    GridSection grid;
    SolverSection solver;
    OuterSection outer;
    InitialSection initial;
    OutputSection output;
    VerifySection verify;

    bool operator==(const Config&) const = default;
};

struct RunConfig {
    Command command{Command::report};
    std::optional<std::filesystem::path> config_path;
    std::filesystem::path output_dir; // empty: [output] directory
    int verbosity{0};
    std::uint64_t seed{20240613};
    bool negative_controls{false};
};

/// Validates a parsed document. Unknown tables and keys, wrong types and
/// out-of-range values raise ValidationError naming the key.
Config config_from_toml(const TomlDocument& doc);
Config parse_config_text(std::string_view text);
/// Throws Error if the file cannot be read.
Config parse_config(const std::filesystem::path& path);

/// Every field, defaults included, in a form parse_config_text reads back
/// to an equal Config.
std::string emit_toml(const Config& c);

/// FNV-1a 64 over bytes.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

} // namespace cancelfield::cli
