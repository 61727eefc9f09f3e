#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "involute/completion.hpp"
#include "involute/division.hpp"
#include "involute/exec.hpp"

using namespace involute;

namespace {

std::vector<Monomial> random_set(const ContextPtr& c, std::mt19937_64& rng, std::size_t size,
                                 std::uint32_t max_deg) {
    std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
    std::vector<Monomial> u;
    while (u.size() < size) {
        std::vector<std::uint32_t> e(c->size());
        for (auto& x : e) x = deg(rng);
        Monomial m(c, e);
        bool seen = false;
        for (const auto& v : u) seen = seen || v == m;
        if (!seen) u.push_back(m);
    }
    return u;
}

}  // namespace

TEST_CASE("parallel kernels agree with the serial reference") {
    set_threads(2);
    auto c = make_context({"a", "b", "c", "d"});
    std::mt19937_64 rng(424242);

    for (int trial = 0; trial < 25; ++trial) {
        auto U = random_set(c, rng, 8, 5);
        for (auto kind : kAllDivisions) {
            CAPTURE(division_name(kind));

            auto serial = nonmultiplicative_table(kind, U, Exec::Serial);
            auto parallel = nonmultiplicative_table(kind, U, Exec::Parallel);
            CHECK(serial == parallel);

            auto ls = local_involutivity(kind, U, Exec::Serial);
            auto lp = local_involutivity(kind, U, Exec::Parallel);
            CHECK(ls.involutive == lp.involutive);
            CHECK(ls.parent == lp.parent);
            CHECK(ls.var == lp.var);

            std::uint64_t bound = 0;
            for (const auto& u : U) bound = std::max<std::uint64_t>(bound, u.degree());
            auto gs = involutive_coverage_gap(kind, U, bound + 2, Exec::Serial);
            auto gp = involutive_coverage_gap(kind, U, bound + 2, Exec::Parallel);
            CHECK(gs == gp);
        }
    }
}

TEST_CASE("completion is identical under the parallel kernels") {
    set_threads(2);
    auto c = make_context({"x", "y", "z"});
    std::mt19937_64 rng(515151);

    for (int trial = 0; trial < 10; ++trial) {
        auto U = random_set(c, rng, 5, 4);
        for (auto kind : {DivisionKind::Thomas, DivisionKind::Janet, DivisionKind::Div1,
                          DivisionKind::InducedDegRevLex}) {
            CompletionOptions serial;
            CompletionOptions parallel;
            parallel.exec = Exec::Parallel;
            auto a = involutive_complete(kind, U, serial);
            auto b = involutive_complete(kind, U, parallel);
            CAPTURE(division_name(kind));
            CHECK(a.basis == b.basis);
            CHECK(a.stats.prolongations_checked == b.stats.prolongations_checked);
        }
    }
}
