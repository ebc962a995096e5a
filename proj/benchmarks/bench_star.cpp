#include <benchmark/benchmark.h>

#include "wkb/symbol.hpp"

using namespace wkb;

namespace {

// dense-ish truncated symbol of window depth d in two variables
Symbol dense_symbol(int depth) {
    const std::size_t n = 2;
    CoefficientFunction x0 = CoefficientFunction::x_var(n, 0);
    CoefficientFunction u0 = CoefficientFunction::u_var(n, 0);
    CoefficientFunction u1 = CoefficientFunction::u_var(n, 1);
    Symbol p = Symbol::one(n);
    for (int k = 1; k < depth; ++k) {
        CoefficientFunction c = (k % 2 == 0) ? x0 * u0 + u1 : u0 + x0 * x0;
        p = p + Symbol::term(c * Rational(1, k), -k);
    }
    return p.truncated_to(-depth + 1);
}

Symbol unit_symbol(int depth) {
    const std::size_t n = 2;
    CoefficientFunction x0 = CoefficientFunction::x_var(n, 0);
    CoefficientFunction u0 = CoefficientFunction::u_var(n, 0);
    Symbol p = Symbol::one(n) + Symbol::term(x0 * u0, -1) + Symbol::term(x0, -2);
    return p.truncated_to(-depth + 1);
}

} // namespace

static void BM_star(benchmark::State& state) {
    int depth = static_cast<int>(state.range(0));
    Symbol p = dense_symbol(depth);
    Symbol q = dense_symbol(depth);
    for (auto _ : state) benchmark::DoNotOptimize(star(p, q));
}
BENCHMARK(BM_star)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_invert(benchmark::State& state) {
    int depth = static_cast<int>(state.range(0));
    Symbol p = unit_symbol(depth);
    for (auto _ : state) benchmark::DoNotOptimize(invert(p));
}
BENCHMARK(BM_invert)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_adjoint(benchmark::State& state) {
    int depth = static_cast<int>(state.range(0));
    Symbol p = dense_symbol(depth);
    for (auto _ : state) benchmark::DoNotOptimize(adjoint_dx(p));
}
BENCHMARK(BM_adjoint)->Arg(4)->Arg(8);
