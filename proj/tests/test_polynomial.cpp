#include <string>
#include <vector>

#include "doctest.h"
#include "involute/errors.hpp"
#include "involute/io.hpp"
#include "involute/polynomial.hpp"

using namespace involute;

namespace {

ContextPtr xyz() { return make_context({"x", "y", "z"}); }

Polynomial P(const ContextPtr& c, Ordering o, const std::string& text) {
    return parse_polynomial(c, o, text);
}

std::vector<Polynomial> system_of(const ContextPtr& c, Ordering o,
                                  std::initializer_list<const char*> texts) {
    std::vector<Polynomial> f;
    for (auto* t : texts) f.push_back(parse_polynomial(c, o, t));
    return f;
}

}  // namespace

TEST_CASE("construction normalizes terms") {
    auto c = xyz();
    auto o = Ordering::DegLex;
    Monomial x = parse_monomial(c, "x"), y = parse_monomial(c, "y");

    Polynomial p = Polynomial::from_terms(c, o, {{Rational(1), y},
                                                 {Rational(2), x},
                                                 {Rational(-1), y},
                                                 {Rational(3), x}});
    CHECK(p == P(c, o, "5*x"));
    CHECK(p.term_count() == 1);

    Polynomial z = Polynomial::from_terms(c, o, {{Rational(1), x}, {Rational(-1), x}});
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.leading_monomial(), Error);
    CHECK_THROWS_AS(z.leading_coefficient(), Error);

    // Terms sit strictly descending under the carried ordering.
    Polynomial q = P(c, o, "x + y^2 + 1");
    REQUIRE(q.term_count() == 3);
    CHECK(q.terms()[0].mono == parse_monomial(c, "y^2"));
    CHECK(q.terms()[1].mono == x);
    CHECK(q.terms()[2].mono.is_unit());
    CHECK(q.leading_monomial() == parse_monomial(c, "y^2"));
    CHECK(q.leading_coefficient() == Rational(1));
}

TEST_CASE("arithmetic") {
    auto c = xyz();
    auto o = Ordering::DegRevLex;
    Polynomial f = P(c, o, "x^2 - y");
    Polynomial g = P(c, o, "x^2 + y - 3");

    CHECK(f.plus(g) == P(c, o, "2*x^2 - 3"));
    CHECK(f.minus(g) == P(c, o, "-2*y + 3"));
    CHECK(f.negated() == P(c, o, "-x^2 + y"));
    CHECK(f.plus(f.negated()).is_zero());
    CHECK(f.times(g) == P(c, o, "x^4 - y^2 - 3*x^2 + 3*y"));
    CHECK(f.times_term(Rational(2), parse_monomial(c, "z")) == P(c, o, "2*x^2*z - 2*y*z"));

    Polynomial h = P(c, o, "2/3*x - 4");
    CHECK(h.monic() == P(c, o, "x - 6"));
    CHECK(Polynomial(c, o).monic().is_zero());
    CHECK(h.tail() == P(c, o, "-4"));

    CHECK_THROWS_AS(f.plus(P(c, Ordering::Lex, "x")), Error);
}

TEST_CASE("normal forms") {
    auto c = xyz();
    auto o = Ordering::DegRevLex;
    auto F = system_of(c, o, {"x^2 - y", "x*y - z"});

    std::uint64_t steps = 0;
    Polynomial r = nf_conventional(P(c, o, "x^3"), F, &steps);
    CHECK(r == P(c, o, "z"));
    CHECK(steps > 0);
    CHECK(nf_conventional(P(c, o, "x^2 - y"), F).is_zero());
    CHECK(nf_conventional(P(c, o, "z^2 + 1"), F) == P(c, o, "z^2 + 1"));

    // Involutive reduction only uses multiplicative quotients: under the
    // maximal-exponent division only x is multiplicative for x^2*y, so the
    // y-multiple survives while the x-multiple reduces.
    auto G = system_of(c, o, {"x^2*y - z"});
    CHECK(nf_involutive(P(c, o, "x^3*y"), G, DivisionKind::Div2) == P(c, o, "x*z"));
    CHECK(nf_involutive(P(c, o, "x^2*y^2"), G, DivisionKind::Div2) == P(c, o, "x^2*y^2"));
    CHECK(nf_conventional(P(c, o, "x^2*y^2"), G) == P(c, o, "y*z"));

    // Every term of an involutive normal form is irreducible, including the
    // non-leading ones.
    Polynomial mixed = nf_involutive(P(c, o, "x^3*y + x^2*y^2 + x^2*y"), G, DivisionKind::Div2);
    CHECK(mixed == P(c, o, "x^2*y^2 + x*z + z"));
}

TEST_CASE("autoreduction produces the canonical interreduced set") {
    auto c = xyz();
    auto o = Ordering::DegLex;
    auto F = system_of(c, o, {"2*x^2 + y", "x^2 + y", "y"});
    auto R = autoreduce(F);
    REQUIRE(R.size() == 2);
    CHECK(R[0] == P(c, o, "y"));
    CHECK(R[1] == P(c, o, "x^2"));

    auto with_zero = system_of(c, o, {"x - x", "y"});
    CHECK(autoreduce(with_zero).size() == 1);

    // Idempotent and monic.
    auto again = autoreduce(R);
    CHECK(again == R);
}

TEST_CASE("s-polynomials cancel the lcm term") {
    auto c = xyz();
    auto o = Ordering::DegRevLex;
    Polynomial f = P(c, o, "x^2 - y");
    Polynomial g = P(c, o, "x*y - z");
    Polynomial s = s_polynomial(f, g);
    CHECK(s == P(c, o, "x*z - y^2"));

    Polynomial self = s_polynomial(f, f);
    CHECK(self.is_zero());
}

TEST_CASE("buchberger reduced bases") {
    auto c = xyz();

    SUBCASE("cyclic-3 under degrevlex") {
        auto F = system_of(c, Ordering::DegRevLex,
                           {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"});
        auto G = buchberger(F);
        auto expected = system_of(c, Ordering::DegRevLex,
                                  {"x + y + z", "y^2 + y*z + z^2", "z^3 - 1"});
        CHECK(G == expected);
    }

    SUBCASE("two-element system under deglex") {
        auto F = system_of(c, Ordering::DegLex, {"x*y - 1", "y^2 - 1"});
        auto G = buchberger(F);
        auto expected = system_of(c, Ordering::DegLex, {"x - y", "y^2 - 1"});
        CHECK(G == expected);
    }

    SUBCASE("a reduced basis is a fixed point") {
        auto G = system_of(c, Ordering::DegRevLex,
                           {"x + y + z", "y^2 + y*z + z^2", "z^3 - 1"});
        CHECK(buchberger(G) == G);
    }

    SUBCASE("principal ideal") {
        auto F = system_of(c, Ordering::Lex, {"2*x^2 - 2*y"});
        auto G = buchberger(F);
        REQUIRE(G.size() == 1);
        CHECK(G[0] == P(c, Ordering::Lex, "x^2 - y"));
    }

    SUBCASE("limits abort with a partial basis") {
        auto F = system_of(c, Ordering::DegRevLex,
                           {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"});
        CompletionLimits tight;
        tight.max_iterations = 1;
        bool threw = false;
        try {
            buchberger(F, tight);
        } catch (const GroebnerLimitExceeded& e) {
            threw = true;
            CHECK(!e.partial.empty());
        }
        CHECK(threw);
    }
}
