#pragma once

#include "catmap/composite.hpp"
#include "catmap/exp_sums.hpp"

#include <string>

namespace catmap {

// Everything a verification run needs; filled from flags and an optional
// JSON config file by the command-line front end.
struct RunConfig {
    CatMap matrix{3, 2, 4, 3};
    std::vector<std::int64_t> primes;     // resolved list, odd primes only
    std::vector<std::int64_t> composites; // square-free moduli for the tensor suite
    std::int64_t sample = 0;              // 0 = exhaustive where feasible
    std::uint64_t seed = 1;
    double tol = 1e-8;
    std::string out_dir;                  // empty = default_out_dir()
    int workers = 1;                      // concurrent work items (primes / moduli)
    std::int64_t bins = 32;               // histogram bins
};

// $CATMAP_OUT when set, otherwise "reports".
std::string default_out_dir();

// "lo..hi" enumerates the odd primes in the range (2 is skipped with a
// warning); "a,b,c" must list odd primes verbatim and throws Error
// otherwise, p = 2 included.
std::vector<std::int64_t> parse_primes(const std::string& text, std::string& warning);

std::vector<std::int64_t> odd_primes_upto(std::int64_t lo, std::int64_t hi);

// One checked quantity.  check is one of
//   upper: pass iff sup <= bound + tol      (margin = bound - sup)
//   lower: pass iff sup >= bound - tol      (margin = sup - bound)
//   equal: pass iff |sup - bound| <= tol    (margin = -|sup - bound|)
//   info : always passes, margin 0         (telemetry rows)
// so pass <=> margin >= -tol uniformly, and the formula column states what
// the bound is.
struct ReportRow {
    std::int64_t modulus = 0;
    std::string classification;
    std::string label;
    std::int64_t char_index = -1;
    std::int64_t dimension = 0;
    double sup = 0.0;
    double bound = 0.0;
    std::string check;
    std::string formula;
    double margin = 0.0;
    bool pass = true;
};

// Row builders, one per suite.  Pure given the config (all randomness is
// seeded), rows sorted by (modulus, generation order); primes outside a
// suite's domain produce info rows rather than errors.
std::vector<ReportRow> classify_rows(const RunConfig& cfg);
std::vector<ReportRow> supnorm_rows(const RunConfig& cfg);
std::vector<ReportRow> expsum_rows(const RunConfig& cfg);
std::vector<ReportRow> rep_rows(const RunConfig& cfg);
std::vector<ReportRow> composite_rows(const RunConfig& cfg);

// Fixed-header CSV (one '#' config line, then the column header), doubles as
// %.17g, LF endings; byte-identical for identical configs.
std::string render_csv(const std::vector<ReportRow>& rows, const RunConfig& cfg);

// Eigenbasis of one prime as a JSON document: metadata (matrix, p, r,
// classification, D, conjugator, character indices, phase convention, seed)
// plus every eigenspace with complex entries as [re, im] pairs.
std::string eigenbasis_json(const RunConfig& cfg, std::int64_t p);

// Histogram of |phi(x)| over all eigenbasis vectors of each prime, uniform
// bins over [0, max]; CSV columns p,bin,lo,hi,count.
std::string histogram_csv(const RunConfig& cfg);

// Subcommand drivers.  Each writes its files under out_dir and returns the
// process exit code: 0 all checks pass, 1 a bound check failed, 2 bad input.
// Progress and timing go to the console only so the files stay deterministic.
int run_classify(const RunConfig& cfg);
int run_verify_supnorm(const RunConfig& cfg);
int run_verify_expsums(const RunConfig& cfg);
int run_verify_rep(const RunConfig& cfg);
int run_eigenbasis(const RunConfig& cfg);
int run_composite(const RunConfig& cfg);
int run_histogram(const RunConfig& cfg);

} // namespace catmap
