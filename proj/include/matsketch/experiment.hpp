#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "matsketch/errors.hpp"

namespace matsketch {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct ExperimentConfig {
    std::string command;  // cx, cssp, id, coreset, kmeans, sketch-svd, lowerbound, bench-suite
    std::string norm;     // cx: spectral or frobenius
    std::string mode;
    std::string method;
    std::optional<int> k, r, n;
    std::optional<double> eps, delta, alpha, c0;
    std::uint64_t seed = 0;
    int trials = 1;
    int restarts = 5;
    std::string constraint = "none";
    std::string in;
    std::string format = "auto";
    std::string synthetic;
    bool allow_oversized = false;
};

// Runs one experiment (or the suite) and returns its report. Throws
// matsketch::Error on invalid input or numeric failure.
nlohmann::json run_experiment(const ExperimentConfig& cfg);

// FNV-1a over the report with "timing" and "determinism_hash" removed.
std::string determinism_hash(const nlohmann::json& report);

// Structured error document for the command line tool.
nlohmann::json error_report(const std::string& kind, const std::string& message);

}  // namespace matsketch
