#pragma once

#include "cancelfield_cli/config.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace cancelfield::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kError = 2 };

/// Every file of a run goes through here; the manifest lists them in
/// write order with size and FNV-1a hash.
class ArtifactWriter {
public:
    explicit ArtifactWriter(std::filesystem::path root);

    const std::filesystem::path& root() const noexcept { return root_; }
    void write(const std::string& name, const std::string& bytes);
    const nlohmann::json& artifacts() const noexcept { return artifacts_; }

private:
    std::filesystem::path root_;
    nlohmann::json artifacts_ = nlohmann::json::array();
};

/// One command's findings; `passed` is false if any sub-check failed.
struct Section {
    std::string name;
    bool passed{true};
    nlohmann::json body = nlohmann::json::object();
};

Section run_verify_symbolic(const Config& cfg, const RunConfig& run);
Section run_solve(const Config& cfg, const RunConfig& run, ArtifactWriter& out);
Section run_verify_numeric(const Config& cfg, const RunConfig& run, ArtifactWriter& out);
Section run_convergence(const Config& cfg, const RunConfig& run, ArtifactWriter& out);
Section run_radius_check(const Config& cfg, const RunConfig& run, ArtifactWriter& out);

/// Runs the command, writes report.json and manifest.json under
/// run.output_dir and returns the exit code. Errors are reported on `err`
/// and give kError.
int execute(const RunConfig& run, std::ostream& log, std::ostream& err);

} // namespace cancelfield::cli
