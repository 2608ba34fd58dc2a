#include "CLI11.hpp"
#include "json.hpp"

#include "catmap/cli.hpp"

#include <fstream>
#include <iostream>

namespace {

int fail_config(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    using namespace catmap;

    CLI::App app{"Hecke eigenfunction and exponential-sum checks for quantized cat maps"};
    app.require_subcommand(1);

    std::vector<std::int64_t> matrix;
    std::string primes_text;
    std::vector<std::int64_t> composites;
    std::int64_t sample = 0;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    std::string out;
    int workers = 1;
    std::int64_t bins = 32;
    std::string config_path;

    auto* o_matrix =
        app.add_option("--matrix", matrix, "cat map entries a,b,c,d (row-major)")->delimiter(',');
    auto* o_primes = app.add_option("--primes", primes_text, "odd primes: lo..hi or a comma list");
    auto* o_moduli =
        app.add_option("--N", composites, "square-free moduli for the composite suite")
            ->delimiter(',');
    auto* o_sample =
        app.add_option("--sample", sample, "sampled sweep size (0 = exhaustive where feasible)");
    auto* o_seed = app.add_option("--seed", seed, "seed recorded in every output");
    auto* o_tol = app.add_option("--tol", tol, "bound comparison tolerance");
    auto* o_out =
        app.add_option("--out", out, "output directory (default $CATMAP_OUT or ./reports)");
    auto* o_workers = app.add_option("--workers", workers, "concurrent work items");
    auto* o_bins = app.add_option("--bins", bins, "histogram bin count");
    app.add_option("--config", config_path, "JSON config file; flags take precedence")
        ->check(CLI::ExistingFile);

    app.add_subcommand("classify", "splitting type of every prime in range")->fallthrough();
    app.add_subcommand("verify-supnorm", "eigenfunction sup norms against the per-class bounds")
        ->fallthrough();
    app.add_subcommand("verify-expsums",
                       "exponential-sum bounds and the projection reconstruction")
        ->fallthrough();
    app.add_subcommand("verify-rep", "unitarity, multiplicativity and trace checks")
        ->fallthrough();
    app.add_subcommand("eigenbasis", "serialize the joint eigenbasis per prime as JSON")
        ->fallthrough();
    app.add_subcommand("composite", "tensor eigenbasis checks at square-free moduli")
        ->fallthrough();
    app.add_subcommand("histogram", "histogram of |phi(x)| over the eigenbasis")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunConfig cfg;
    bool primes_given = false;
    std::string primes_source;

    if (!config_path.empty()) {
        nlohmann::json j;
        try {
            std::ifstream f(config_path);
            f >> j;
        } catch (const std::exception& e) {
            return fail_config("config parse failed: " + std::string(e.what()));
        }
        try {
            if (j.contains("matrix")) {
                const auto m = j["matrix"].get<std::vector<std::int64_t>>();
                if (m.size() != 4) return fail_config("config matrix needs exactly 4 entries");
                cfg.matrix = {m[0], m[1], m[2], m[3]};
            }
            if (j.contains("primes")) {
                primes_given = true;
                if (j["primes"].is_string()) {
                    primes_source = j["primes"].get<std::string>();
                } else {
                    cfg.primes = j["primes"].get<std::vector<std::int64_t>>();
                    for (std::int64_t p : cfg.primes)
                        if (!is_odd_prime(p))
                            return fail_config("config prime " + std::to_string(p) +
                                               " is not an odd prime");
                }
            }
            if (j.contains("N")) cfg.composites = j["N"].get<std::vector<std::int64_t>>();
            if (j.contains("sample")) cfg.sample = j["sample"].get<std::int64_t>();
            if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
            if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
            if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
            if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
            if (j.contains("bins")) cfg.bins = j["bins"].get<std::int64_t>();
        } catch (const nlohmann::json::exception& e) {
            return fail_config("config: " + std::string(e.what()));
        }
    }

    if (o_matrix->count()) {
        if (matrix.size() != 4) return fail_config("--matrix needs exactly 4 entries");
        cfg.matrix = {matrix[0], matrix[1], matrix[2], matrix[3]};
    }
    if (o_primes->count()) {
        primes_source = primes_text;
        primes_given = true;
    }
    if (o_moduli->count()) cfg.composites = composites;
    if (o_sample->count()) cfg.sample = sample;
    if (o_seed->count()) cfg.seed = seed;
    if (o_tol->count()) cfg.tol = tol;
    if (o_out->count()) cfg.out_dir = out;
    if (o_workers->count()) cfg.workers = workers;
    if (o_bins->count()) cfg.bins = bins;

    if (!primes_source.empty()) {
        try {
            std::string warning;
            cfg.primes = parse_primes(primes_source, warning);
            if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
        } catch (const Error& e) {
            return fail_config(e.what());
        }
    }

    try {
        validate_cat_map(cfg.matrix);
    } catch (const Error& e) {
        return fail_config(e.what());
    }

    // Desk-scale defaults when no explicit range was given.
    const std::string sub = app.get_subcommands().front()->get_name();
    if (!primes_given && cfg.primes.empty()) {
        if (sub == "verify-expsums")
            cfg.primes = odd_primes_upto(3, 61);
        else if (sub == "verify-rep")
            cfg.primes = {3, 5, 7, 13, 17};
        else
            cfg.primes = odd_primes_upto(3, 200);
    }
    if (cfg.composites.empty()) cfg.composites = {15, 21, 33};

    if (sub == "classify") return run_classify(cfg);
    if (sub == "verify-supnorm") return run_verify_supnorm(cfg);
    if (sub == "verify-expsums") return run_verify_expsums(cfg);
    if (sub == "verify-rep") return run_verify_rep(cfg);
    if (sub == "eigenbasis") return run_eigenbasis(cfg);
    if (sub == "composite") return run_composite(cfg);
    return run_histogram(cfg);
}
