#include <algorithm>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "involute/completion.hpp"
#include "involute/division.hpp"
#include "involute/exec.hpp"

using namespace involute;

namespace {

ContextPtr bench_context() {
    static ContextPtr c = make_context({"a", "b", "c", "d", "e"});
    return c;
}

std::vector<Monomial> bench_set(std::size_t count, std::uint32_t max_exp) {
    auto c = bench_context();
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_exp);
    std::vector<Monomial> u;
    while (u.size() < count) {
        std::vector<std::uint32_t> e(c->size());
        for (auto& x : e) x = deg(rng);
        Monomial m(c, e);
        bool seen = false;
        for (const auto& v : u) seen = seen || v == m;
        if (!seen) u.push_back(m);
    }
    return u;
}

Exec exec_arg(benchmark::State& state) {
    if (state.range(0) == 0) return Exec::Serial;
    set_threads(max_threads());
    return Exec::Parallel;
}

}  // namespace

static void BM_SeparationTable(benchmark::State& state) {
    Exec exec = exec_arg(state);
    auto U = bench_set(static_cast<std::size_t>(state.range(1)), 6);
    for (auto _ : state) {
        auto table = nonmultiplicative_table(DivisionKind::Janet, U, exec);
        benchmark::DoNotOptimize(table);
    }
    state.SetLabel(exec == Exec::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_SeparationTable)->Args({0, 64})->Args({1, 64})->Args({0, 256})->Args({1, 256});

static void BM_CoverageOracle(benchmark::State& state) {
    Exec exec = exec_arg(state);
    auto seed = bench_set(24, 4);
    auto closed = involutive_complete(DivisionKind::Janet, seed, {}).basis;
    std::uint64_t bound = 0;
    for (const auto& m : closed) bound = std::max<std::uint64_t>(bound, m.degree());
    for (auto _ : state) {
        bool ok = is_involutive_bruteforce(DivisionKind::Janet, closed, bound + 2, exec);
        benchmark::DoNotOptimize(ok);
    }
    state.SetLabel(exec == Exec::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_CoverageOracle)->Arg(0)->Arg(1);

static void BM_JanetCompletion(benchmark::State& state) {
    auto U = bench_set(24, 4);
    for (auto _ : state) {
        auto r = involutive_complete(DivisionKind::Janet, U, {});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_JanetCompletion);

BENCHMARK_MAIN();
