// matsketch: column/row sampling experiments with JSON reports.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "matsketch/experiment.hpp"

using matsketch::ExperimentConfig;

namespace {

void add_common(CLI::App* sub, ExperimentConfig& cfg, std::string& out) {
    sub->add_option("-k", cfg.k, "target rank / number of clusters");
    sub->add_option("-r", cfg.r, "number of sampled columns");
    sub->add_option("--eps", cfg.eps, "accuracy parameter");
    sub->add_option("--delta", cfg.delta, "failure probability");
    sub->add_option("--mode", cfg.mode, "algorithm variant");
    sub->add_option("--method", cfg.method, "method");
    sub->add_option("--seed", cfg.seed, "base seed")->envname("MATSKETCH_SEED");
    sub->add_option("--trials", cfg.trials, "independent trials, best kept");
    sub->add_option("--c0", cfg.c0, "constant for feature reduction widths");
    sub->add_option("--in", cfg.in, "input matrix (MatrixMarket or CSV)");
    sub->add_option("--format", cfg.format, "auto, mm or csv");
    sub->add_option("--synthetic", cfg.synthetic,
                    "lowrank:m,n,k,noise | blobs:m,n,k,sep | lowerbound:n,alpha | regression:m,n,noise");
    sub->add_option("--out", out, "write the report here instead of stdout");
}

int emit(const nlohmann::json& doc, const std::string& out) {
    const std::string text = doc.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f || !(f << text)) {
        std::cout << matsketch::error_report("io", "cannot write '" + out + "'").dump(2) << "\n";
        return static_cast<int>(matsketch::ExitCode::io);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix sampling toolkit"};
    app.require_subcommand(1);
    ExperimentConfig cfg;
    std::string out;

    auto* cx = app.add_subcommand("cx", "oversampled column selection (CX)");
    cx->add_option("norm", cfg.norm, "spectral or frobenius")->required();
    auto* cssp = app.add_subcommand("cssp", "exactly-k column subset selection");
    auto* id = app.add_subcommand("id", "interpolative decomposition");
    auto* coreset = app.add_subcommand("coreset", "least-squares coreset");
    coreset->add_option("--constraint", cfg.constraint, "none or nonnegative");
    coreset->add_flag("--allow-oversized", cfg.allow_oversized, "run even when r exceeds the row count");
    auto* kmeans = app.add_subcommand("kmeans", "k-means feature reduction");
    kmeans->add_option("--restarts", cfg.restarts, "Lloyd restarts");
    auto* ssvd = app.add_subcommand("sketch-svd", "randomized low-rank bases");
    ssvd->add_flag("--allow-oversized", cfg.allow_oversized, "run even when the sketch exceeds n");
    auto* lb = app.add_subcommand("lowerbound", "lower-bound instance");
    lb->add_option("-n", cfg.n, "number of columns");
    lb->add_option("--alpha", cfg.alpha, "instance parameter");
    auto* suite = app.add_subcommand("bench-suite", "run the standard experiment list");

    for (CLI::App* s : {cx, cssp, id, coreset, kmeans, ssvd, lb, suite}) add_common(s, cfg, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << matsketch::error_report("argument", e.what()).dump(2) << "\n";
        return static_cast<int>(matsketch::ExitCode::argument);
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        return emit(matsketch::run_experiment(cfg), out);
    } catch (const matsketch::Error& e) {
        emit(matsketch::error_report(e.kind(), e.what()), "");
        return static_cast<int>(e.exit_code());
    } catch (const std::exception& e) {
        emit(matsketch::error_report("numeric", e.what()), "");
        return static_cast<int>(matsketch::ExitCode::numeric);
    }
}
