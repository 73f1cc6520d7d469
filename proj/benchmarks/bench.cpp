#include <benchmark/benchmark.h>

#include <random>

#include "sparsepoly/family.hpp"
#include "sparsepoly/numeric.hpp"
#include "sparsepoly/poly.hpp"
#include "sparsepoly/roots.hpp"

using namespace sparsepoly;

namespace {

SparsePoly random_poly(std::mt19937_64& rng, long nterms, long max_exp) {
    std::uniform_int_distribution<long> deg(0, max_exp);
    std::uniform_int_distribution<long> coeff(-999, 999);
    std::vector<Term> terms;
    for (long i = 0; i < nterms; ++i)
        terms.push_back(Term{Exponent(deg(rng)), Coefficient(coeff(rng))});
    return SparsePoly::from_terms(std::move(terms));
}

void BM_sparse_mul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    long k = state.range(0);
    SparsePoly a = random_poly(rng, k, 20 * k);
    SparsePoly b = random_poly(rng, k, 20 * k);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
    state.SetComplexityN(k);
}
BENCHMARK(BM_sparse_mul)->Range(8, 512)->Complexity();

void BM_div_one_minus_z(benchmark::State& state) {
    SparsePoly one_minus_z = sub(SparsePoly::constant(1), SparsePoly::monomial(1, 1));
    std::mt19937_64 rng(2);
    SparsePoly p = random_poly(rng, state.range(0), 50 * state.range(0)) * one_minus_z;
    for (auto _ : state) benchmark::DoNotOptimize(div_one_minus_z(p));
}
BENCHMARK(BM_div_one_minus_z)->Range(8, 512);

void BM_family_build(benchmark::State& state) {
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(f_poly(3, n));
}
BENCHMARK(BM_family_build)->DenseRange(8, 24, 4);

void BM_eval_numeric(benchmark::State& state) {
    SparsePoly p = f_poly(4, 14);
    std::complex<double> x(0.83, -0.41);
    unsigned bits = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_numeric(p, x, bits));
}
BENCHMARK(BM_eval_numeric)->Arg(53)->Arg(212)->Arg(848);

void BM_sturm_count(benchmark::State& state) {
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(count_real_roots(2, n));
}
BENCHMARK(BM_sturm_count)->DenseRange(6, 14, 2);

void BM_solve_roots(benchmark::State& state) {
    long n = state.range(0);
    SparsePoly p = f_poly(3, n);
    for (auto _ : state) benchmark::DoNotOptimize(solve_roots(p, 1e-10, 7));
}
BENCHMARK(BM_solve_roots)->DenseRange(7, 13, 2);

}  // namespace

BENCHMARK_MAIN();
