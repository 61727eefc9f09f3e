#pragma once

#include <span>
#include <vector>

#include "involute/completion.hpp"
#include "involute/division.hpp"
#include "involute/monomial.hpp"
#include "involute/rational.hpp"

namespace involute {

struct Term {
    Rational coef;
    Monomial mono;
};

// Sparse polynomial over the rationals with terms kept strictly descending
// under a fixed ordering. The ordering travels with the value; mixing
// orderings or contexts throws.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(ContextPtr ctx, Ordering order);  // zero

    // Sorts, merges equal monomials, drops zero coefficients.
    static Polynomial from_terms(ContextPtr ctx, Ordering order, std::vector<Term> terms);

    const ContextPtr& context() const { return ctx_; }
    Ordering order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Leading data; throw on the zero polynomial.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    const Term& leading_term() const;

    Polynomial plus(const Polynomial& other) const;
    Polynomial minus(const Polynomial& other) const;
    Polynomial negated() const;
    Polynomial times_term(const Rational& coef, const Monomial& mono) const;
    Polynomial times(const Polynomial& other) const;
    Polynomial monic() const;  // zero stays zero

    // Everything below the leading term.
    Polynomial tail() const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
    ContextPtr ctx_;
    Ordering order_ = Ordering::DegRevLex;
    std::vector<Term> terms_;
};

std::vector<Monomial> leading_monomials(std::span<const Polynomial> F);

// Involutive normal form: repeatedly clears the highest term that is an
// involutive multiple (within lm(F)) of some lm(f), f in F. Every term of
// the result is involutively irreducible.
Polynomial nf_involutive(const Polynomial& p, std::span<const Polynomial> F, DivisionKind kind,
                         std::uint64_t* reductions = nullptr);

// Ordinary full normal form modulo F.
Polynomial nf_conventional(const Polynomial& p, std::span<const Polynomial> F,
                           std::uint64_t* reductions = nullptr);

// Conventional autoreduction to the canonical interreduced monic set: no
// term of any element is divisible by the leading monomial of another.
// Zero results are dropped; output sorted ascending by leading monomial.
std::vector<Polynomial> autoreduce(std::span<const Polynomial> F);

// S-polynomial with exact cancellation of the lcm term.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger with normal pair selection (lowest lcm first) and the coprime
// criterion, then reduction to the unique monic reduced basis, sorted
// ascending by leading monomial. Limits as in completion: max_iterations
// caps treated pairs, max_degree caps new leading monomials.
struct GroebnerLimitExceeded : Error {
    GroebnerLimitExceeded(const std::string& what, std::vector<Polynomial> partial_)
        : Error(what), partial(std::move(partial_)) {}
    std::vector<Polynomial> partial;
};

std::vector<Polynomial> buchberger(std::span<const Polynomial> F,
                                   const CompletionLimits& limits = {});

}  // namespace involute
