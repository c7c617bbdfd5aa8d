#include "cancelfield_cli/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace {

using namespace cancelfield;
using namespace cancelfield::cli;
namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("cancelfield_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

fs::path write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(Toml, ParsesSubset) {
    const auto doc = parse_toml(R"(
top = 1 # comment
[a]
s = "x\"y"
lit = 'c:\path'
f = -1.5e-3
i = +42
b = false
arr = [1, 2,
       3,]   # trailing comma
names = ["p", "q"]
big = 1_000
)");
    ASSERT_EQ(doc.size(), 2u);
    const auto& a = doc.at("a").entries;
    EXPECT_EQ(std::get<std::string>(a.at("s").v), "x\"y");
    EXPECT_EQ(std::get<std::string>(a.at("lit").v), "c:\\path");
    EXPECT_EQ(std::get<double>(a.at("f").v), -1.5e-3);
    EXPECT_EQ(std::get<std::int64_t>(a.at("i").v), 42);
    EXPECT_EQ(std::get<bool>(a.at("b").v), false);
    EXPECT_EQ(std::get<TomlValue::Array>(a.at("arr").v).size(), 3u);
    EXPECT_EQ(std::get<std::int64_t>(a.at("big").v), 1000);
    EXPECT_EQ(std::get<std::int64_t>(doc.at("").entries.at("top").v), 1);
}

TEST(Toml, ErrorsCarryLineAndColumn) {
    try {
        parse_toml("[grid]\nnx = 32\nnz = ?\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 6u);
    }
    EXPECT_THROW(parse_toml("a = \"open\n"), ParseError);
    EXPECT_THROW(parse_toml("a = 1\na = 2\n"), ParseError);
    EXPECT_THROW(parse_toml("[t]\n[t]\n"), ParseError);
    EXPECT_THROW(parse_toml("a = 1 b\n"), ParseError);
    EXPECT_THROW(parse_toml("a.b = 1\n"), ParseError);
    EXPECT_THROW(parse_toml("a = [[1]]\n"), ParseError);
}

TEST(Config, MinimalFillsDefaults) {
    const auto c = parse_config_text("[grid]\nnx = 32\nnz = 33\n");
    EXPECT_EQ(c.solver.cfl, 0.5);
    EXPECT_EQ(c.solver.scheme, solver::Scheme::upwind1);
    EXPECT_EQ(c.grid.Z, 10.0);
    EXPECT_FALSE(c.solver.dt.has_value());
    EXPECT_EQ(parse_config_text(""), Config{});
}

TEST(Config, UnknownKeyNamed) {
    try {
        parse_config_text("[solver]\nmhu = 1.0\n");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(e.key().find("mhu"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("mhu"), std::string::npos);
    }
    EXPECT_THROW(parse_config_text("[solvr]\n"), ValidationError);
    EXPECT_THROW(parse_config_text("stray = 1\n"), ValidationError);
}

TEST(Config, RejectsBadValues) {
    EXPECT_THROW(parse_config_text("[grid]\nnx = 4\n"), ValidationError);
    EXPECT_THROW(parse_config_text("[grid]\nnx = 32.5\n"), ValidationError);
    EXPECT_THROW(parse_config_text("[solver]\nscheme = \"weno\"\n"), ValidationError);
    EXPECT_THROW(parse_config_text("[solver]\ndt = \"soon\"\n"), ValidationError);
    EXPECT_THROW(parse_config_text("[solver]\ncfl = 2.0\n"), ValidationError);
    EXPECT_THROW(parse_config_text("[verify]\ngrids = [32, 48, 96]\n"), ValidationError);
    EXPECT_THROW(parse_config_text("[verify]\ncases = [\"nope\"]\n"), ValidationError);
    EXPECT_THROW(parse_config_text("[outer]\npreset = \"manufactured\"\n"), ValidationError);
}

TEST(Config, RoundTripIsStructurallyEqual) {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> U(0.01, 1.0);
    std::uniform_int_distribution<int> N(8, 200);
    for (int trial = 0; trial < 50; ++trial) {
        Config c;
        c.grid.nx = static_cast<std::size_t>(N(rng));
        c.grid.nz = static_cast<std::size_t>(N(rng));
        c.grid.Z = 20 * U(rng);
        c.solver.system = trial % 2 ? System::mhd : System::prandtl;
        c.solver.mu = U(rng);
        c.solver.kappa = U(rng) / 3;
        if (trial % 3 == 0) c.solver.dt = U(rng) * 1e-3;
        c.solver.cfl = U(rng);
        c.solver.scheme = trial % 2 ? solver::Scheme::central2 : solver::Scheme::upwind1;
        c.outer.preset = trial % 4 == 0 ? "decaying_sine" : "uniform";
        c.outer.amplitude = U(rng);
        c.outer.gamma = U(rng);
        c.output.snapshot_every = static_cast<std::size_t>(N(rng));
        c.output.directory = "dir with \"quotes\" and \\";
        c.verify.cases = {"theta_uzz", "lemma_generic"};
        c.verify.thetas = {"zero"};
        c.verify.rho = U(rng) * 3;
        const auto text = emit_toml(c);
        const auto back = parse_config_text(text);
        ASSERT_EQ(back, c) << text;
        ASSERT_EQ(emit_toml(back), text);
    }
}

TEST(Config, ShippedConfigsParse) {
    for (const auto& e : fs::directory_iterator(CANCELFIELD_CONFIG_DIR)) {
        if (e.path().extension() == ".toml") EXPECT_NO_THROW(parse_config(e.path())) << e.path();
    }
}

TEST(Fnv, KnownVectors) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

int exec(Command c, const fs::path& out, std::optional<fs::path> cfg, std::string* err_text = nullptr,
         bool neg = false) {
    RunConfig run;
    run.command = c;
    run.output_dir = out;
    run.config_path = std::move(cfg);
    run.negative_controls = neg;
    std::ostringstream log, err;
    const int rc = execute(run, log, err);
    if (err_text) *err_text = err.str();
    return rc;
}

TEST(Execute, VerifySymbolicPasses) {
    const auto dir = scratch("sym");
    ASSERT_EQ(exec(Command::verify_symbolic, dir / "out", std::nullopt), kPass);
    const auto report = nlohmann::json::parse(slurp(dir / "out" / "report.json"));
    EXPECT_TRUE(report["passed"].get<bool>());
    for (const auto& c : report["sections"]["verify-symbolic"]["cases"]) {
        EXPECT_EQ(c["status"], "proved") << c["identity"];
        if (c["kind"] == "exact") EXPECT_EQ(c["residual"], "0") << c["identity"];
    }
    const auto manifest = nlohmann::json::parse(slurp(dir / "out" / "manifest.json"));
    EXPECT_EQ(manifest["exit_code"], 0);
    EXPECT_EQ(manifest["config_hash"], report["provenance"]["config_hash"]);
}

TEST(Execute, NegativeControlsMustFail) {
    const auto dir = scratch("neg");
    ASSERT_EQ(exec(Command::verify_symbolic, dir / "out", std::nullopt, nullptr, true), kPass);
    const auto report = nlohmann::json::parse(slurp(dir / "out" / "report.json"));
    bool saw = false;
    for (const auto& c : report["sections"]["verify-symbolic"]["cases"]) {
        if (c["identity"] == "control_unit_field") {
            saw = true;
            EXPECT_EQ(c["status"], "failed");
            EXPECT_EQ(c["expected"], "failed");
            EXPECT_FALSE(c["offending_terms"].empty());
        }
    }
    EXPECT_TRUE(saw);
}

TEST(Execute, FailedCheckGivesExitOne) {
    const auto dir = scratch("fail");
    // Demanding order 3 from second-order stencils.
    const auto cfg = write_file(dir / "c.toml", "[verify]\nidentities = [\"f1_g1\"]\norder_min = 2.9\norder_max = 3.1\n"
                                                "solver_grids = [8, 16, 32]\n");
    EXPECT_EQ(exec(Command::convergence, dir / "out", cfg), kFail);
    const auto report = nlohmann::json::parse(slurp(dir / "out" / "report.json"));
    EXPECT_FALSE(report["passed"].get<bool>());
}

TEST(Execute, CflBlowupIsExitTwoNamingStep) {
    const auto dir = scratch("cfl");
    std::string err;
    EXPECT_EQ(exec(Command::solve, dir / "out", fs::path(CANCELFIELD_CONFIG_DIR) / "cfl_blowup.toml", &err), kError);
    EXPECT_NE(err.find("CflViolation"), std::string::npos) << err;
    EXPECT_NE(err.find("step 1"), std::string::npos) << err;
}

TEST(Execute, BadConfigIsExitTwo) {
    const auto dir = scratch("bad");
    std::string err;
    const auto cfg = write_file(dir / "c.toml", "[solver]\nmhu = 1\n");
    EXPECT_EQ(exec(Command::solve, dir / "out", cfg, &err), kError);
    EXPECT_NE(err.find("mhu"), std::string::npos);
}

TEST(Execute, SolveWritesSnapshotsDeterministically) {
    const auto dir = scratch("solve");
    const auto cfg = write_file(dir / "c.toml", R"([grid]
nx = 16
nz = 17
[solver]
system = "mhd"
t_end = 0.05
[outer]
preset = "steady_sine"
U = 1.0
F = 1.0
amplitude = 0.1
[output]
snapshot_every = 2
binary = true
)");
    ASSERT_EQ(exec(Command::solve, dir / "a", cfg), kPass);
    ASSERT_EQ(exec(Command::solve, dir / "b", cfg), kPass);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir / "a")) {
        const auto name = e.path().filename().string();
        if (name == "manifest.json") continue;
        ++files;
        EXPECT_EQ(slurp(e.path()), slurp(dir / "b" / name)) << name;
    }
    EXPECT_GT(files, 6u);
    EXPECT_TRUE(fs::exists(dir / "a" / "u_000002.bin"));
    EXPECT_TRUE(fs::exists(dir / "a" / "f_000002.csv"));
}

} // namespace

namespace {

TEST(Execute, ConfigDirectoryUsedWithoutOut) {
    const auto dir = scratch("outdir");
    const auto target = dir / "from_config";
    const auto cfg = write_file(dir / "c.toml", "[output]\ndirectory = \"" + target.string() + "\"\n");
    EXPECT_EQ(exec(Command::radius_check, fs::path{}, cfg), kPass);
    EXPECT_TRUE(fs::exists(target / "report.json"));
    EXPECT_TRUE(fs::exists(target / "radius.csv"));
}

} // namespace
