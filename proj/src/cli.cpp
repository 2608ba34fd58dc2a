#include "catmap/cli.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

namespace catmap {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<std::int64_t> sorted_unique(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string kind_label(const PrimeContext& ctx) {
    std::string s = to_string(ctx.kind);
    if (ctx.upper_triangular) s += "-ut";
    return s;
}

ReportRow make_row(std::int64_t modulus, std::string cls, std::string label, std::int64_t chi,
                   std::int64_t dim, double sup, double bound, std::string check,
                   std::string formula, double tol) {
    ReportRow r;
    r.modulus = modulus;
    r.classification = std::move(cls);
    r.label = std::move(label);
    r.char_index = chi;
    r.dimension = dim;
    r.sup = sup;
    r.bound = bound;
    r.check = std::move(check);
    r.formula = std::move(formula);
    if (r.check == "upper")
        r.margin = bound - sup;
    else if (r.check == "lower")
        r.margin = sup - bound;
    else if (r.check == "equal")
        r.margin = -std::abs(sup - bound);
    else
        r.margin = 0.0;
    r.pass = r.check == "info" || r.margin >= -tol;
    return r;
}

std::string config_comment(const RunConfig& cfg) {
    std::string s = "# matrix=[" + std::to_string(cfg.matrix.a) + " " + std::to_string(cfg.matrix.b) +
                    " " + std::to_string(cfg.matrix.c) + " " + std::to_string(cfg.matrix.d) + "]";
    s += " seed=" + std::to_string(cfg.seed);
    s += " sample=" + std::to_string(cfg.sample);
    s += " tol=" + fmt_short(cfg.tol);
    s += " workers=" + std::to_string(cfg.workers);
    s += " bins=" + std::to_string(cfg.bins);
    return s + "\n";
}

// Fans work items out over at most `workers` threads.  Slot i holds item i's
// result, so assembly order never depends on the schedule.
template <typename Fn>
auto pooled(const std::vector<std::int64_t>& items, int workers, Fn fn)
    -> std::vector<decltype(fn(std::int64_t{}))> {
    using R = decltype(fn(std::int64_t{}));
    std::vector<R> slots(items.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) slots[i] = fn(items[i]);
        return slots;
    }
    std::size_t next = 0;
    while (next < slots.size()) {
        const std::size_t batch =
            std::min<std::size_t>(static_cast<std::size_t>(workers), slots.size() - next);
        std::vector<std::future<R>> fut;
        fut.reserve(batch);
        for (std::size_t j = 0; j < batch; ++j)
            fut.push_back(std::async(std::launch::async, fn, items[next + j]));
        for (std::size_t j = 0; j < batch; ++j) slots[next + j] = fut[j].get();
        next += batch;
    }
    return slots;
}

template <typename Fn>
std::vector<ReportRow> rows_over_moduli(const std::vector<std::int64_t>& moduli, int workers,
                                        Fn fn) {
    std::vector<ReportRow> rows;
    for (auto& slot : pooled(moduli, workers, fn))
        for (auto& r : slot) rows.push_back(std::move(r));
    return rows;
}

std::vector<ReportRow> supnorm_for_prime(const RunConfig& cfg, std::int64_t p) {
    const PrimeContext ctx = make_prime_context(cfg.matrix, p);
    const std::string cls = kind_label(ctx);
    const double tol = cfg.tol;
    std::vector<ReportRow> rows;

    switch (ctx.kind) {
        case PrimeKind::Inert: {
            const double bound = 2.0 / std::sqrt(1.0 + 1.0 / static_cast<double>(p));
            for (const auto& sp : eigenbasis(cfg.matrix, ctx)) {
                if (sp.dimension == 0) continue;
                const double sup = *std::max_element(sp.sup_norms.begin(), sp.sup_norms.end());
                rows.push_back(make_row(p, cls, "eigenspace", sp.character.index, sp.dimension,
                                        sup, bound, "upper", "2/sqrt(1+1/p)", tol));
            }
            break;
        }
        case PrimeKind::Split: {
            if (!ctx.upper_triangular) {
                for (const auto& sp : eigenbasis(cfg.matrix, ctx)) {
                    if (sp.dimension == 0) continue;
                    const double sup = *std::max_element(sp.sup_norms.begin(), sp.sup_norms.end());
                    rows.push_back(make_row(p, cls, "eigenspace", sp.character.index, sp.dimension,
                                            sup, 2.0, "upper", "2", tol));
                }
            } else {
                const SplitUtReport rep = split_ut_closed_form(cfg.matrix, ctx);
                rows.push_back(make_row(p, cls, "chi family", -1, 1, rep.chi_sup,
                                        std::sqrt(static_cast<double>(p) / (p - 1.0)), "equal",
                                        "sqrt(p/(p-1))", tol));
                rows.push_back(make_row(p, cls, "phi0", rep.two_dim_char_index, 2, rep.phi0_sup,
                                        std::sqrt(static_cast<double>(p)), "equal", "sqrt(p)",
                                        tol));
                rows.push_back(make_row(p, cls, "ut witness", rep.two_dim_char_index, 2,
                                        rep.extremal_sup, std::sqrt(p / 2.0), "lower",
                                        "sup >= sqrt(p/2)", tol));
            }
            break;
        }
        case PrimeKind::Ramified: {
            const auto cf = ramified_closed_form(cfg.matrix, ctx);
            double best = 0.0;
            for (std::size_t s = 0; s < cf.size(); ++s) {
                const bool zero = s == 0; // phi_0 leads, then the +- pairs
                const double sup = cf[s].sup_norms[0];
                best = std::max(best, sup);
                if (!ctx.upper_triangular)
                    rows.push_back(make_row(p, cls, zero ? "phi0" : "phi pair",
                                            cf[s].character.index, 1, sup,
                                            zero ? 1.0 : std::sqrt(2.0), "upper",
                                            zero ? "1" : "sqrt(2)", tol));
                else
                    rows.push_back(make_row(p, cls, zero ? "phi0" : "phi pair",
                                            cf[s].character.index, 1, sup,
                                            zero ? std::sqrt(static_cast<double>(p))
                                                 : std::sqrt(p / 2.0),
                                            "equal", zero ? "sqrt(p)" : "sqrt(p/2)", tol));
            }
            if (ctx.upper_triangular)
                rows.push_back(make_row(p, cls, "ut witness", -1, 1, best, std::sqrt(p / 2.0),
                                        "lower", "sup >= sqrt(p/2)", tol));
            break;
        }
    }
    return rows;
}

std::vector<ReportRow> expsums_for_prime(const RunConfig& cfg, std::int64_t p) {
    const PrimeContext ctx = make_prime_context(cfg.matrix, p);
    const std::string cls = kind_label(ctx);
    const double tol = cfg.tol;
    if (ctx.kind != PrimeKind::Inert)
        return {make_row(p, cls, "not applicable", -1, 0, 0.0, 0.0, "info",
                         "E_nu is defined only at inert primes", tol)};

    const ExpSumContext E = make_exp_sum_context(centralizer(cfg.matrix, ctx));
    const bool exhaustive = cfg.sample == 0 && p <= 61;
    const BoundReport rep =
        exhaustive ? verify_bounds_exhaustive(E)
                   : verify_bounds_sampled(E, cfg.sample > 0 ? cfg.sample : 10000, cfg.seed);
    const std::string mode =
        rep.exhaustive ? "exhaustive"
                       : "sampled k=" + std::to_string(rep.triples) +
                             " seed=" + std::to_string(rep.seed);

    std::vector<ReportRow> rows;
    rows.push_back(make_row(p, cls, "E generic", -1, 0, rep.max_generic, 4.0, "upper",
                            "max |E|/sqrt(p) <= 4 (" + mode + ")", tol));
    rows.push_back(make_row(p, cls, "E diagonal", -1, 0, rep.max_diagonal, 3.0, "upper",
                            "max |E|/sqrt(p) <= 3 at x = +-i (" + mode + ")", tol));
    rows.push_back(make_row(p, cls, "E origin", -1, 0, rep.max_zero, 2.0, "upper",
                            "max |E|/sqrt(p) <= 2 at (0;0) (" + mode + ")", tol));

    // Three-term reconstruction against the operator projection.
    const auto chars = characters(E.G);
    double dev = 0.0;
    std::string eq_mode;
    if (exhaustive) {
        eq_mode = "exhaustive";
        for (const auto& nu : chars) {
            const LinearOperator P = projector_matrix(E.G, nu);
            for (std::int64_t i = 0; i < p; ++i) {
                const QuantumState via = projection_via_exp_sum(nu, i, E);
                for (std::int64_t x = 0; x < p; ++x)
                    dev = std::max(dev, std::abs(via[x] - P.m.at(x, i)));
            }
        }
    } else {
        const std::int64_t pairs = 100;
        eq_mode = "sampled pairs=" + std::to_string(pairs) + " seed=" + std::to_string(cfg.seed);
        Rng rng(cfg.seed);
        for (std::int64_t n = 0; n < pairs; ++n) {
            const auto& nu = chars[rng.below(chars.size())];
            const std::int64_t i = rng.residue(p);
            const QuantumState via = projection_via_exp_sum(nu, i, E);
            const QuantumState ref = project(E.G, nu, make_delta(ctx, i));
            for (std::int64_t x = 0; x < p; ++x) dev = std::max(dev, std::abs(via[x] - ref[x]));
        }
    }
    rows.push_back(make_row(p, cls, "projection reconstruction", -1, 0, dev, 1e-9, "upper",
                            "three-term formula matches the projector (" + eq_mode + ")", tol));

    // S E(i;i) is real for every character; always swept exhaustively.
    double worst_imag = 0.0;
    for (const auto& nu : chars) {
        const PreparedCharacter pc = prepare_character(E, nu);
        for (std::int64_t i = 0; i < p; ++i)
            worst_imag = std::max(worst_imag,
                                  std::abs((ctx.fourier_scalar * exp_sum(pc, i, i, E)).imag()));
    }
    rows.push_back(make_row(p, cls, "diagonal reality", -1, 0, worst_imag, 1e-9, "upper",
                            "Im(S E(i;i)) = 0", tol));
    return rows;
}

std::vector<ReportRow> rep_for_prime(const RunConfig& cfg, std::int64_t p) {
    const PrimeContext ctx = make_prime_context(cfg.matrix, p);
    const std::string cls = kind_label(ctx);
    const double tol = cfg.tol;
    Rng rng(cfg.seed + static_cast<std::uint64_t>(p));
    std::vector<ReportRow> rows;

    double defect = unitarity_defect(build_unitary(cfg.matrix, ctx).m);
    for (int n = 0; n < 10; ++n)
        defect = std::max(defect, unitarity_defect(build_unitary(random_sl2(rng, p), ctx).m));
    rows.push_back(make_row(p, cls, "unitarity", -1, 0, defect, 1e-10 * static_cast<double>(p),
                            "upper", "max |U*U - I| <= 1e-10 p", tol));

    rows.push_back(make_row(p, cls, "multiplicativity", -1, 0,
                            check_multiplicativity(ctx, 100, cfg.seed), 1e-9, "upper",
                            "U(M1 M2) = U(M1) U(M2) on 100 seeded pairs", tol));

    double col_dev = 0.0;
    for (int n = 0; n < 20; ++n) {
        Sl2 M = random_sl2(rng, p);
        while (M.c == 0) M = random_sl2(rng, p);
        const LinearOperator U = build_unitary(M, ctx);
        for (std::int64_t i = 0; i < p; ++i) {
            const QuantumState col = delta_action(M, i, ctx);
            for (std::int64_t x = 0; x < p; ++x)
                col_dev = std::max(col_dev, std::abs(col[x] - U.m.at(x, i)));
        }
    }
    rows.push_back(make_row(p, cls, "delta action", -1, 0, col_dev, 1e-9, "upper",
                            "closed-form column matches the factored operator", tol));

    rows.push_back(make_row(p, cls, "trace identity", -1, 0,
                            std::abs(trace_unitary(Sl2{}, ctx)), static_cast<double>(p), "equal",
                            "tr U(I) = p", tol));
    rows.push_back(make_row(p, cls, "trace minus identity", -1, 0,
                            std::abs(trace_unitary(Sl2{p - 1, 0, 0, p - 1}, ctx)), 1.0, "equal",
                            "|tr U(-I)| = 1", tol));

    double tr_dev = 0.0;
    for (int n = 0; n < 50; ++n) {
        Sl2 M = random_sl2(rng, p);
        while (M.c == 0 || (M.a + M.d) % p == 2 % p) M = random_sl2(rng, p);
        tr_dev = std::max(tr_dev, std::abs(std::abs(trace_unitary(M, ctx)) - 1.0));
    }
    rows.push_back(make_row(p, cls, "trace generic", -1, 0, tr_dev, 0.0, "upper",
                            "|tr U(M)| = 1 for c != 0 and a+d != 2", tol));

    // a + d = 2 with c != 0 degenerates the Gauss sum; telemetry only.
    for (int n = 0; n < 3; ++n) {
        const std::int64_t c = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p - 1)));
        const std::int64_t a = rng.residue(p);
        const std::int64_t d = mod_norm(2 - a, p);
        const std::int64_t b = mod_mul(mod_norm(a * d - 1, p), mod_inv(c, p), p);
        rows.push_back(make_row(p, cls, "trace parabolic", -1, 0,
                                std::abs(trace_unitary(Sl2{a, b, c, d}, ctx)),
                                std::sqrt(static_cast<double>(p)), "info",
                                "|tr| = sqrt(p) when a+d = 2 and c != 0", tol));
    }
    return rows;
}

std::vector<ReportRow> composite_for_modulus(const RunConfig& cfg, std::int64_t N) {
    const CompositeContext cctx = make_composite_context(cfg.matrix, N);
    const CompositeBasis basis = composite_eigenbasis(cfg.matrix, cctx);
    const double tol = cfg.tol;

    std::string cls = "composite(";
    for (std::size_t i = 0; i < cctx.factors.size(); ++i)
        cls += (i ? "*" : "") + std::to_string(cctx.factors[i].p);
    cls += ")";

    double gram = 0.0;
    for (std::size_t i = 0; i < basis.vectors.size(); ++i)
        for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
            const cplx g = inner_product(basis.vectors[i].state, basis.vectors[j].state);
            gram = std::max(gram, std::abs(g - (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0})));
        }

    std::vector<ReportRow> rows;
    rows.push_back(make_row(N, cls, "basis size", -1, basis.num_factors,
                            static_cast<double>(basis.vectors.size()), static_cast<double>(N),
                            "equal", "one vector per residue class", tol));
    rows.push_back(make_row(N, cls, "gram defect", -1, basis.num_factors, gram, 1e-8, "upper",
                            "max |Gram - I| <= 1e-8", tol));
    rows.push_back(make_row(N, cls, "product identity", -1, basis.num_factors,
                            basis.max_product_defect, 1e-9, "upper",
                            "sup equals the product of factor sups", tol));
    rows.push_back(make_row(N, cls, "tensor ceiling", -1, basis.num_factors, basis.max_sup,
                            basis.sup_ceiling, "upper", "max sup <= 2^k", tol));
    return rows;
}

std::string out_dir(const RunConfig& cfg) {
    return cfg.out_dir.empty() ? default_out_dir() : cfg.out_dir;
}

int write_text_file(const std::string& dir, const std::string& name, const std::string& text,
                    std::string& path_out) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << dir << ": " << ec.message() << "\n";
        return 2;
    }
    path_out = dir + "/" + name;
    std::ofstream f(path_out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << path_out << "\n";
        return 2;
    }
    f << text;
    f.close();
    return f ? 0 : 2;
}

int finish_report(const RunConfig& cfg, const char* name, const std::vector<ReportRow>& rows,
                  std::chrono::steady_clock::time_point t0) {
    std::string path;
    if (write_text_file(out_dir(cfg), name, render_csv(rows, cfg), path) != 0) return 2;

    std::size_t fails = 0;
    for (const auto& r : rows)
        if (!r.pass) {
            ++fails;
            std::cout << "  FAIL " << r.modulus << " " << r.label << ": " << fmt_short(r.sup)
                      << " vs " << fmt_short(r.bound) << " [" << r.formula << "]\n";
        }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << name << ": " << rows.size() << " rows, " << fails << " failed, "
              << fmt_short(dt) << "s, " << path << "\n";
    return fails ? 1 : 0;
}

using RowsFn = std::vector<ReportRow> (*)(const RunConfig&);

int run_report(const RunConfig& cfg, const char* name, RowsFn fn) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        return finish_report(cfg, name, fn(cfg), t0);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

std::string default_out_dir() {
    const char* env = std::getenv("CATMAP_OUT");
    return env && *env ? env : "reports";
}

std::vector<std::int64_t> odd_primes_upto(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = std::max<std::int64_t>(lo, 3); p <= hi; ++p)
        if (is_odd_prime(p)) out.push_back(p);
    return out;
}

std::vector<std::int64_t> parse_primes(const std::string& text, std::string& warning) {
    warning.clear();
    const auto parse_int = [](const std::string& s) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw Error("not an integer: '" + s + "'");
        }
        if (used != s.size()) throw Error("not an integer: '" + s + "'");
        return v;
    };

    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::int64_t lo = parse_int(text.substr(0, dots));
        const std::int64_t hi = parse_int(text.substr(dots + 2));
        if (lo <= 2 && 2 <= hi) warning = "p = 2 skipped (odd primes only)";
        return odd_primes_upto(lo, hi);
    }

    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const std::int64_t v = parse_int(tok);
        if (!is_odd_prime(v)) throw Error("not an odd prime: " + tok);
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<ReportRow> classify_rows(const RunConfig& cfg) {
    std::vector<ReportRow> rows;
    for (std::int64_t p : sorted_unique(cfg.primes)) {
        const PrimeContext ctx = make_prime_context(cfg.matrix, p);
        rows.push_back(make_row(p, kind_label(ctx), "classification", -1, 0, 0.0, 0.0, "info",
                                "splitting of x^2 - tr(A) x + 1 mod p", cfg.tol));
    }
    return rows;
}

std::vector<ReportRow> supnorm_rows(const RunConfig& cfg) {
    return rows_over_moduli(sorted_unique(cfg.primes), cfg.workers,
                            [&cfg](std::int64_t p) { return supnorm_for_prime(cfg, p); });
}

std::vector<ReportRow> expsum_rows(const RunConfig& cfg) {
    return rows_over_moduli(sorted_unique(cfg.primes), cfg.workers,
                            [&cfg](std::int64_t p) { return expsums_for_prime(cfg, p); });
}

std::vector<ReportRow> rep_rows(const RunConfig& cfg) {
    return rows_over_moduli(sorted_unique(cfg.primes), cfg.workers,
                            [&cfg](std::int64_t p) { return rep_for_prime(cfg, p); });
}

std::vector<ReportRow> composite_rows(const RunConfig& cfg) {
    return rows_over_moduli(sorted_unique(cfg.composites), cfg.workers,
                            [&cfg](std::int64_t N) { return composite_for_modulus(cfg, N); });
}

std::string render_csv(const std::vector<ReportRow>& rows, const RunConfig& cfg) {
    std::string s = config_comment(cfg);
    s += "modulus,classification,label,char_index,dimension,sup,bound,check,formula,margin,pass\n";
    for (const auto& r : rows) {
        s += std::to_string(r.modulus) + ',' + r.classification + ',' + r.label + ',' +
             std::to_string(r.char_index) + ',' + std::to_string(r.dimension) + ',' + fmt(r.sup) +
             ',' + fmt(r.bound) + ',' + r.check + ',' + r.formula + ',' + fmt(r.margin) + ',' +
             (r.pass ? "true" : "false") + '\n';
    }
    return s;
}

std::string eigenbasis_json(const RunConfig& cfg, std::int64_t p) {
    const PrimeContext ctx = make_prime_context(cfg.matrix, p);
    const HeckeGroup G = centralizer(cfg.matrix, ctx);

    nlohmann::json j;
    j["matrix"] = {cfg.matrix.a, cfg.matrix.b, cfg.matrix.c, cfg.matrix.d};
    j["p"] = p;
    j["r"] = ctx.r;
    j["classification"] = kind_label(ctx);
    j["D"] = G.D;
    j["conjugator"] = {G.M.a, G.M.b, G.M.c, G.M.d};
    j["order"] = G.order();
    j["phase_convention"] = 1; // first coordinate above 1e-8 made positive real
    j["seed"] = cfg.seed;

    nlohmann::json spaces = nlohmann::json::array();
    for (const auto& nu : characters(G)) {
        const EigenspaceResult es = eigenspace(G, nu);
        nlohmann::json vecs = nlohmann::json::array();
        for (const auto& b : es.basis) {
            nlohmann::json vec = nlohmann::json::array();
            for (const auto& z : b.v) vec.push_back({z.real(), z.imag()});
            vecs.push_back(std::move(vec));
        }
        spaces.push_back({{"character", nu.index},
                          {"dimension", es.dimension},
                          {"sup_norms", es.sup_norms},
                          {"vectors", std::move(vecs)}});
    }
    j["spaces"] = std::move(spaces);
    return j.dump(2) + "\n";
}

std::string histogram_csv(const RunConfig& cfg) {
    if (cfg.bins <= 0) throw Error("bins must be positive, got " + std::to_string(cfg.bins));
    std::string out = config_comment(cfg);
    out += "p,bin,lo,hi,count\n";
    for (std::int64_t p : sorted_unique(cfg.primes)) {
        const PrimeContext ctx = make_prime_context(cfg.matrix, p);
        std::vector<double> vals;
        for (const auto& sp : eigenbasis(cfg.matrix, ctx))
            for (const auto& b : sp.basis)
                for (const auto& z : b.v) vals.push_back(std::abs(z));
        const double vmax = *std::max_element(vals.begin(), vals.end());
        std::vector<std::int64_t> count(static_cast<std::size_t>(cfg.bins), 0);
        for (double v : vals) {
            const auto bin = std::min<std::int64_t>(
                cfg.bins - 1, static_cast<std::int64_t>(v / vmax * static_cast<double>(cfg.bins)));
            ++count[static_cast<std::size_t>(bin)];
        }
        const double width = vmax / static_cast<double>(cfg.bins);
        for (std::int64_t b = 0; b < cfg.bins; ++b)
            out += std::to_string(p) + ',' + std::to_string(b) + ',' +
                   fmt(static_cast<double>(b) * width) + ',' +
                   fmt(static_cast<double>(b + 1) * width) + ',' +
                   std::to_string(count[static_cast<std::size_t>(b)]) + '\n';
    }
    return out;
}

int run_classify(const RunConfig& cfg) { return run_report(cfg, "classify.csv", classify_rows); }
int run_verify_supnorm(const RunConfig& cfg) { return run_report(cfg, "supnorm.csv", supnorm_rows); }
int run_verify_expsums(const RunConfig& cfg) { return run_report(cfg, "expsums.csv", expsum_rows); }
int run_verify_rep(const RunConfig& cfg) { return run_report(cfg, "rep.csv", rep_rows); }
int run_composite(const RunConfig& cfg) { return run_report(cfg, "composite.csv", composite_rows); }

int run_eigenbasis(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const auto primes = sorted_unique(cfg.primes);
        const auto docs = pooled(primes, cfg.workers,
                                 [&cfg](std::int64_t p) { return eigenbasis_json(cfg, p); });
        for (std::size_t i = 0; i < primes.size(); ++i) {
            std::string path;
            if (write_text_file(out_dir(cfg), "eigenbasis_p" + std::to_string(primes[i]) + ".json",
                                docs[i], path) != 0)
                return 2;
            std::cout << "wrote " << path << "\n";
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "eigenbasis: " << primes.size() << " files, " << fmt_short(dt) << "s\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_histogram(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::string path;
        if (write_text_file(out_dir(cfg), "histogram.csv", histogram_csv(cfg), path) != 0)
            return 2;
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "histogram: wrote " << path << ", " << fmt_short(dt) << "s\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace catmap
