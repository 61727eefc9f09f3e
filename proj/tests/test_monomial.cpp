#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "involute/errors.hpp"
#include "involute/io.hpp"
#include "involute/monomial.hpp"

using namespace involute;

namespace {

ContextPtr xyz() { return make_context({"x", "y", "z"}); }

Monomial M(const ContextPtr& c, const std::string& text) { return parse_monomial(c, text); }

Monomial random_monomial(const ContextPtr& c, std::mt19937_64& rng, std::uint32_t max_deg) {
    std::uniform_int_distribution<std::uint32_t> d(0, max_deg);
    std::vector<std::uint32_t> e(c->size());
    for (auto& x : e) x = d(rng);
    return Monomial(c, e);
}

}  // namespace

TEST_CASE("variable context validates names") {
    CHECK_THROWS_AS(make_context({}), Error);
    CHECK_THROWS_AS(make_context({"x", "x"}), Error);

    std::vector<std::string> many;
    for (int i = 0; i < 65; ++i) many.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(make_context(many), Error);
    many.pop_back();
    CHECK(make_context(many)->size() == 64);

    auto c = xyz();
    CHECK(c->size() == 3);
    CHECK(c->name(0) == "x");
    CHECK(c->name(2) == "z");
    REQUIRE(c->index("z").has_value());
    CHECK(*c->index("z") == 2);
    CHECK(!c->index("w").has_value());
}

TEST_CASE("monomial construction and accessors") {
    auto c = xyz();
    CHECK(Monomial(c).is_unit());
    CHECK(Monomial(c).degree() == 0);
    CHECK(Monomial(c).support() == 0);

    Monomial u = M(c, "x^2*y");
    CHECK_FALSE(u.is_unit());
    CHECK(u.degree() == 3);
    CHECK(u.exponent(0) == 2);
    CHECK(u.exponent(1) == 1);
    CHECK(u.exponent(2) == 0);
    CHECK(u.support() == (var_bit(0) | var_bit(1)));

    CHECK(Monomial::variable(c, 2) == M(c, "z"));
    CHECK(Monomial(c, {2, 1, 0}) == u);
    CHECK_THROWS_AS(Monomial(c, {1, 2}), Error);
}

TEST_CASE("monomial arithmetic") {
    auto c = xyz();
    Monomial u = M(c, "x^2*y");
    Monomial v = M(c, "x*z");

    CHECK(u.times(v) == M(c, "x^3*y*z"));
    CHECK(u.times_var(2) == M(c, "x^2*y*z"));

    CHECK(M(c, "x*y").divides(u));
    CHECK_FALSE(M(c, "z").divides(u));
    CHECK(Monomial(c).divides(u));

    CHECK(M(c, "x*y").quotient_into(u) == M(c, "x"));
    CHECK(u.quotient_into(u).is_unit());
    CHECK_THROWS_AS(M(c, "z").quotient_into(u), Error);

    CHECK(Monomial::lcm(u, v) == M(c, "x^2*y*z"));
    CHECK(Monomial::gcd(u, v) == M(c, "x"));
    CHECK(Monomial::coprime(M(c, "x"), M(c, "y*z")));
    CHECK_FALSE(Monomial::coprime(u, v));
}

TEST_CASE("exponent overflow is detected") {
    auto c = xyz();
    std::uint32_t big = std::numeric_limits<std::uint32_t>::max();
    Monomial u(c, {big, 0, 0});
    CHECK_THROWS_AS(u.times(u), OverflowError);
    CHECK_THROWS_AS(u.times_var(0), OverflowError);
    CHECK_NOTHROW(u.times_var(1));
}

TEST_CASE("context mismatch is rejected") {
    auto c1 = xyz();
    auto c2 = make_context({"x", "y"});
    CHECK_THROWS_AS(require_same_context(Monomial(c1), Monomial(c2)), ContextMismatch);
    CHECK_THROWS_AS(Monomial(c1).times(Monomial(c2)), ContextMismatch);

    // Structurally equal contexts are interchangeable even at distinct addresses.
    auto c3 = make_context({"x", "y", "z"});
    CHECK_NOTHROW(require_same_context(Monomial(c1), Monomial(c3)));
    CHECK(M(c1, "x*y") == M(c3, "x*y"));
}

TEST_CASE("ordering names round-trip") {
    for (auto o : {Ordering::Lex, Ordering::DegLex, Ordering::DegRevLex}) {
        auto back = parse_ordering(ordering_name(o));
        REQUIRE(back.has_value());
        CHECK(*back == o);
    }
    CHECK(!parse_ordering("grevlex").has_value());
}

TEST_CASE("ordering comparisons match pinned values") {
    auto c = xyz();
    Monomial x = M(c, "x"), y5 = M(c, "y^5"), xz = M(c, "x*z"), y2 = M(c, "y^2");

    // Lexicographic: the leading variable dominates regardless of degree.
    CHECK(compare(Ordering::Lex, x, y5) > 0);
    CHECK(compare(Ordering::Lex, M(c, "x*y"), M(c, "x*z^4")) > 0);

    // Degree-lexicographic: total degree first, then lex.
    CHECK(compare(Ordering::DegLex, y5, x) > 0);
    CHECK(compare(Ordering::DegLex, xz, y2) > 0);

    // Degree-reverse-lexicographic: total degree first, then the smaller
    // exponent at the last differing position wins.
    CHECK(compare(Ordering::DegRevLex, xz, y2) < 0);
    CHECK(compare(Ordering::DegRevLex, M(c, "x^2*y"), M(c, "x*y*z")) > 0);
    CHECK(compare(Ordering::DegRevLex, M(c, "x*y*z"), M(c, "z^3")) > 0);

    for (auto o : {Ordering::Lex, Ordering::DegLex, Ordering::DegRevLex}) {
        CHECK(compare(o, x, x) == 0);
        CHECK(less(o, Monomial(c), x));
    }
}

TEST_CASE("orderings are admissible") {
    auto c = make_context({"a", "b", "c", "d"});
    std::mt19937_64 rng(20260816);
    for (auto o : {Ordering::Lex, Ordering::DegLex, Ordering::DegRevLex}) {
        for (int trial = 0; trial < 400; ++trial) {
            Monomial u = random_monomial(c, rng, 6);
            Monomial v = random_monomial(c, rng, 6);
            Monomial w = random_monomial(c, rng, 6);

            int uv = compare(o, u, v);
            CHECK(compare(o, v, u) == -uv);
            if (uv == 0) CHECK(u == v);

            // Compatibility with multiplication.
            CHECK(compare(o, u.times(w), v.times(w)) == uv);

            // The unit is the global minimum: u <= u*w always.
            CHECK(less_equal(o, u, u.times(w)));

            // Transitivity on a sorted triple.
            std::vector<Monomial> t{u, v, w};
            std::sort(t.begin(), t.end(),
                      [&](const Monomial& a, const Monomial& b) { return less(o, a, b); });
            CHECK(less_equal(o, t[0], t[1]));
            CHECK(less_equal(o, t[1], t[2]));
            CHECK(less_equal(o, t[0], t[2]));
        }
    }
}
