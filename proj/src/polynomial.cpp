#include "involute/polynomial.hpp"

#include <algorithm>
#include <queue>

namespace involute {

Polynomial::Polynomial(ContextPtr ctx, Ordering order) : ctx_(std::move(ctx)), order_(order) {
    if (!ctx_) throw Error("polynomial needs a variable context");
}

Polynomial Polynomial::from_terms(ContextPtr ctx, Ordering order, std::vector<Term> terms) {
    Polynomial p(std::move(ctx), order);
    Monomial probe(p.ctx_);
    for (Term& t : terms) {
        require_same_context(probe, t.mono);
        // Callers may hand over unreduced fractions; every stored coefficient
        // must be in lowest terms or later arithmetic and comparisons break.
        if (t.coef.get_den() == 0) throw Error("coefficient has a zero denominator");
        t.coef.canonicalize();
    }
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return compare(order, a.mono, b.mono) > 0;
    });
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coef == 0) p.terms_.pop_back();
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().mono; }
const Rational& Polynomial::leading_coefficient() const { return leading_term().coef; }

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.order() != b.order()) throw Error("polynomials use different term orderings");
    Monomial ma(a.context()), mb(b.context());
    require_same_context(ma, mb);
}

}  // namespace

Polynomial Polynomial::plus(const Polynomial& other) const {
    require_compatible(*this, other);
    Polynomial r(ctx_, order_);
    std::size_t i = 0, j = 0;
    const auto& A = terms_;
    const auto& B = other.terms_;
    while (i < A.size() || j < B.size()) {
        int c = i == A.size() ? -1 : j == B.size() ? 1 : compare(order_, A[i].mono, B[j].mono);
        if (c > 0) {
            r.terms_.push_back(A[i++]);
        } else if (c < 0) {
            r.terms_.push_back(B[j++]);
        } else {
            Rational s = A[i].coef + B[j].coef;
            if (s != 0) r.terms_.push_back(Term{std::move(s), A[i].mono});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::negated() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::minus(const Polynomial& other) const { return plus(other.negated()); }

Polynomial Polynomial::times_term(const Rational& coef, const Monomial& mono) const {
    Polynomial r(ctx_, order_);
    if (coef.get_den() == 0) throw Error("coefficient has a zero denominator");
    Rational k = coef;
    k.canonicalize();
    if (k == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.coef * k, t.mono.times(mono)});
    return r;  // multiplying by a monomial preserves the term order
}

Polynomial Polynomial::times(const Polynomial& other) const {
    require_compatible(*this, other);
    Polynomial acc(ctx_, order_);
    for (const Term& t : other.terms_) acc = acc.plus(times_term(t.coef, t.mono));
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    Rational lc = r.terms_.front().coef;
    for (Term& t : r.terms_) t.coef /= lc;
    return r;
}

Polynomial Polynomial::tail() const {
    Polynomial r(ctx_, order_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (order_ != other.order_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coef != other.terms_[i].coef || terms_[i].mono != other.terms_[i].mono)
            return false;
    return true;
}

std::vector<Monomial> leading_monomials(std::span<const Polynomial> F) {
    std::vector<Monomial> lms;
    lms.reserve(F.size());
    for (const Polynomial& f : F) lms.push_back(f.leading_monomial());
    return lms;
}

namespace {

// Reduction plan shared by both normal forms: the distinct leading monomials
// of F plus, per distinct monomial, the first polynomial carrying it.
struct ReducerSet {
    std::vector<Monomial> lms;
    std::vector<const Polynomial*> polys;
};

ReducerSet reducer_set(std::span<const Polynomial> F) {
    ReducerSet r;
    for (const Polynomial& f : F) {
        if (f.is_zero()) continue;
        bool seen = false;
        for (const Monomial& m : r.lms)
            if (m == f.leading_monomial()) {
                seen = true;
                break;
            }
        if (!seen) {
            r.lms.push_back(f.leading_monomial());
            r.polys.push_back(&f);
        }
    }
    return r;
}

template <class FindReducer>
Polynomial normal_form(const Polynomial& p, const ReducerSet& R, FindReducer&& find,
                       std::uint64_t* reductions) {
    Polynomial r = p;
    std::size_t idx = 0;
    while (idx < r.terms().size()) {
        const Term& t = r.terms()[idx];
        std::optional<std::size_t> ri = find(t.mono);
        if (!ri) {
            ++idx;
            continue;
        }
        const Polynomial& f = *R.polys[*ri];
        Monomial v = R.lms[*ri].quotient_into(t.mono);
        r = r.minus(f.times_term(t.coef / f.leading_coefficient(), v));
        if (reductions) ++*reductions;
        // The cleared term cancels exactly; everything new lands below it,
        // so positions before idx stay irreducible.
    }
    return r;
}

}  // namespace

Polynomial nf_involutive(const Polynomial& p, std::span<const Polynomial> F, DivisionKind kind,
                         std::uint64_t* reductions) {
    for (const Polynomial& f : F) require_compatible(p, f);
    ReducerSet R = reducer_set(F);
    if (R.lms.empty()) return p;
    std::vector<VarSet> table = nonmultiplicative_table(kind, R.lms);
    return normal_form(
        p, R,
        [&](const Monomial& m) -> std::optional<std::size_t> {
            return find_involutive_divisor(R.lms, table, m);
        },
        reductions);
}

Polynomial nf_conventional(const Polynomial& p, std::span<const Polynomial> F,
                           std::uint64_t* reductions) {
    for (const Polynomial& f : F) require_compatible(p, f);
    ReducerSet R = reducer_set(F);
    if (R.lms.empty()) return p;
    return normal_form(
        p, R,
        [&](const Monomial& m) -> std::optional<std::size_t> {
            for (std::size_t i = 0; i < R.lms.size(); ++i)
                if (R.lms[i].divides(m)) return i;
            return std::nullopt;
        },
        reductions);
}

std::vector<Polynomial> autoreduce(std::span<const Polynomial> F) {
    std::vector<Polynomial> G;
    for (const Polynomial& f : F)
        if (!f.is_zero()) G.push_back(f.monic());

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(G.size() - 1);
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) others.push_back(G[j]);
            Polynomial r = nf_conventional(G[i], others);
            if (r == G[i]) continue;
            changed = true;
            if (r.is_zero()) {
                G.erase(G.begin() + i);
                --i;
            } else {
                G[i] = r.monic();
            }
        }
    }
    std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
        return compare(a.order(), a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return G;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    require_compatible(f, g);
    if (f.is_zero() || g.is_zero()) throw Error("s-polynomial of a zero polynomial");
    Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term(Rational(1) / f.leading_coefficient(),
                                f.leading_monomial().quotient_into(L));
    Polynomial b = g.times_term(Rational(1) / g.leading_coefficient(),
                                g.leading_monomial().quotient_into(L));
    return a.minus(b);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> F, const CompletionLimits& limits) {
    std::vector<Polynomial> G = autoreduce(F);
    if (G.empty()) return G;
    const Ordering order = G[0].order();

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    auto heap_after = [order](const Pair& a, const Pair& b) {
        int c = compare(order, a.lcm, b.lcm);
        if (c != 0) return c > 0;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(heap_after)> pairs(heap_after);
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.push(Pair{Monomial::lcm(G[i].leading_monomial(), G[j].leading_monomial()), i, j});
    };
    for (std::size_t j = 1; j < G.size(); ++j) push_pairs_for(j);

    auto partial = [&]() {
        std::vector<Polynomial> copy = G;
        std::sort(copy.begin(), copy.end(), [&](const Polynomial& a, const Polynomial& b) {
            return compare(order, a.leading_monomial(), b.leading_monomial()) < 0;
        });
        return copy;
    };

    std::uint64_t treated = 0;
    while (!pairs.empty()) {
        Pair p = pairs.top();
        pairs.pop();
        if (++treated > limits.max_iterations)
            throw GroebnerLimitExceeded("groebner basis exceeded max_iterations", partial());
        if (Monomial::coprime(G[p.i].leading_monomial(), G[p.j].leading_monomial())) continue;
        Polynomial r = nf_conventional(s_polynomial(G[p.i], G[p.j]), G);
        if (r.is_zero()) continue;
        if (r.leading_monomial().degree() > limits.max_degree)
            throw GroebnerLimitExceeded("groebner basis exceeded max_degree", partial());
        G.push_back(r.monic());
        push_pairs_for(G.size() - 1);
    }

    // Shrink to the unique reduced basis: minimal leading set, reduced tails.
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(order, a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (const Polynomial& g : G) {
        bool redundant = false;
        for (const Polynomial& kept : minimal)
            if (kept.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    return autoreduce(minimal);
}

}  // namespace involute
