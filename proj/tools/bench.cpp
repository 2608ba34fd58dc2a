#include "catmap/cli.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>

using namespace catmap;

namespace {

CMatrix random_matrix(std::int64_t n, Rng& rng) {
    CMatrix m(n);
    for (auto& z : m.d)
        z = cplx{double(rng.below(2000)) / 1000.0 - 1.0, double(rng.below(2000)) / 1000.0 - 1.0};
    return m;
}

template <typename F>
double time_best(F f, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = omp_get_wtime();
        f();
        const double dt = omp_get_wtime() - t0;
        if (dt < best) best = dt;
    }
    return best;
}

double vec_diff(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    double worst = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::abs(u[i] - v[i]));
    return worst;
}

void report(const char* name, double serial, double parallel, double diff) {
    std::printf("%-24s serial %8.4fs   parallel %8.4fs   speedup %5.2fx   max|diff| %g\n", name,
                serial, parallel, serial / parallel, diff);
}

} // namespace

// Times each OpenMP kernel against its serial reference on identical inputs.
// The parallel versions write disjoint output slots, so the diffs must be
// exactly zero.
int main(int argc, char** argv) {
    const std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 384;
    const std::int64_t p = argc > 2 ? std::atoll(argv[2]) : 101;
    const int threads = omp_get_max_threads();
    std::printf("threads: %d, matmul size: %lld, projector prime: %lld\n", threads,
                static_cast<long long>(n), static_cast<long long>(p));

    Rng rng(1);
    const CMatrix a = random_matrix(n, rng);
    const CMatrix b = random_matrix(n, rng);

    CMatrix prod_s, prod_p;
    const double ts = time_best([&] { prod_s = matmul_serial(a, b); }, 3);
    const double tp = time_best([&] { prod_p = matmul(a, b); }, 3);
    report("matmul", ts, tp, max_abs_diff(prod_s, prod_p));

    std::vector<cplx> x(static_cast<std::size_t>(n));
    for (auto& z : x)
        z = cplx{double(rng.below(2000)) / 1000.0 - 1.0, double(rng.below(2000)) / 1000.0 - 1.0};
    std::vector<cplx> y_s, y_p;
    const double vs = time_best([&] { y_s = matvec_serial(a, x); }, 10);
    const double vp = time_best([&] { y_p = matvec(a, x); }, 10);
    report("matvec", vs, vp, vec_diff(y_s, y_p));

    // Projector assembly, parallel over columns; single-thread run as the
    // serial reference for the same code path.
    const CatMap A{3, 2, 4, 3};
    const PrimeContext ctx = make_prime_context(A, p);
    const HeckeGroup G = centralizer(A, ctx);
    const HeckeCharacter nu = characters(G)[1];
    LinearOperator proj_s, proj_p;
    omp_set_num_threads(1);
    const double ps = time_best([&] { proj_s = projector_matrix(G, nu); }, 2);
    omp_set_num_threads(threads);
    const double pp = time_best([&] { proj_p = projector_matrix(G, nu); }, 2);
    report("projector assembly", ps, pp, max_abs_diff(proj_s.m, proj_p.m));

    // Exhaustive exponential-sum sweep, parallel over characters.
    const CatMap B{3, 2, 4, 3};
    const std::int64_t q = 61; // inert for B
    const ExpSumContext E = make_exp_sum_context(B, make_prime_context(B, q));
    BoundReport r_s, r_p;
    omp_set_num_threads(1);
    const double es = time_best([&] { r_s = verify_bounds_exhaustive(E); }, 2);
    omp_set_num_threads(threads);
    const double ep = time_best([&] { r_p = verify_bounds_exhaustive(E); }, 2);
    report("exp-sum sweep", es, ep,
           std::max({std::abs(r_s.max_generic - r_p.max_generic),
                     std::abs(r_s.max_diagonal - r_p.max_diagonal),
                     std::abs(r_s.max_zero - r_p.max_zero)}));
    return 0;
}
