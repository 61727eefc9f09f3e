#include "involute/basis.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace involute {

namespace {

Polynomial rekeyed(const Polynomial& f, Ordering order) {
    if (f.order() == order) return f;
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    return Polynomial::from_terms(f.context(), order, std::move(terms));
}

struct Triple {
    Polynomial poly;
    Monomial ancestor;
    VarSet processed = 0;
    std::uint64_t seq = 0;
};

struct Engine {
    DivisionKind kind;
    Ordering main;
    const BasisOptions& opts;

    std::vector<Triple> T;
    std::vector<Triple> Q;
    std::vector<Monomial> lms;   // leading monomials of T, same indexing
    std::vector<VarSet> table;   // nonmultiplicative sets for lms
    std::vector<Polynomial> G;   // polynomials of T, same indexing
    BasisStats stats;
    std::uint64_t iterations = 0;

  private:
    std::uint64_t next_seq = 0;

  public:
    Engine(DivisionKind kind_, Ordering main_, const BasisOptions& opts_)
        : kind(kind_), main(main_), opts(opts_) {}

    void seed(std::vector<Polynomial> inputs) {
        std::size_t lo = 0;
        for (std::size_t i = 1; i < inputs.size(); ++i)
            if (compare(main, inputs[i].leading_monomial(), inputs[lo].leading_monomial()) < 0)
                lo = i;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            Triple t{inputs[i], inputs[i].leading_monomial(), 0, next_seq++};
            if (i == lo)
                T.push_back(std::move(t));
            else
                Q.push_back(std::move(t));
        }
        refresh();
    }

    // Rebuilds the leading-monomial view and separations after T changed,
    // then drops processed marks that are no longer nonmultiplicative.
    void refresh() {
        lms.clear();
        G.clear();
        for (const Triple& t : T) {
            lms.push_back(t.poly.leading_monomial());
            G.push_back(t.poly);
        }
        table = nonmultiplicative_table(kind, lms, opts.exec);
        for (std::size_t i = 0; i < T.size(); ++i) T[i].processed &= table[i];
    }

    [[noreturn]] void bail(const char* what) {
        std::vector<Polynomial> partial = G;
        std::sort(partial.begin(), partial.end(), [&](const Polynomial& a, const Polynomial& b) {
            return compare(main, a.leading_monomial(), b.leading_monomial()) < 0;
        });
        BasisStats snapshot = stats;
        snapshot.final_size = partial.size();
        throw BasisLimitExceeded(what, std::move(partial), snapshot);
    }

    void bump_iterations() {
        if (++iterations > opts.limits.max_iterations)
            bail("involutive basis exceeded max_iterations");
    }

    void check_degree(const Monomial& m) {
        if (m.degree() > opts.limits.max_degree) bail("involutive basis exceeded max_degree");
    }

    bool criterion(const Monomial& lmg, const Monomial& ancestor) const {
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (!involutive_divides_with(table[i], lms[i], lmg)) continue;
            Monomial l = Monomial::lcm(ancestor, T[i].ancestor);
            if (compare(opts.completion_order, l, lmg) < 0) return true;
        }
        return false;
    }

    // Shared ending of both loops: a nonzero monic normal form h joins T.
    // When its leading monomial survived reduction the triple keeps the given
    // ancestry; otherwise h restarts its own lineage and every element above
    // it returns to the queue.
    void insert(Polynomial h, const Monomial& expected_lm, const Monomial& ancestor,
                VarSet processed) {
        const Monomial lmh = h.leading_monomial();
        if (lmh == expected_lm) {
            T.push_back(Triple{std::move(h), ancestor, processed, next_seq++});
        } else {
            check_degree(lmh);
            for (std::size_t i = 0; i < T.size();) {
                if (compare(main, T[i].poly.leading_monomial(), lmh) > 0) {
                    ++stats.displacements;
                    Q.push_back(std::move(T[i]));
                    T.erase(T.begin() + static_cast<std::ptrdiff_t>(i));
                } else {
                    ++i;
                }
            }
            T.push_back(Triple{std::move(h), lmh, 0, next_seq++});
        }
        refresh();
    }

    // One pass over the queue: pop lowest-leading-monomial polynomials until
    // one survives the criterion and reduces to a nonzero normal form.
    void upper_step() {
        while (!Q.empty()) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < Q.size(); ++i) {
                int c = compare(main, Q[i].poly.leading_monomial(),
                                Q[best].poly.leading_monomial());
                if (c < 0 || (c == 0 && Q[i].seq < Q[best].seq)) best = i;
            }
            Triple popped = std::move(Q[best]);
            Q.erase(Q.begin() + static_cast<std::ptrdiff_t>(best));
            bump_iterations();
            const Monomial expected = popped.poly.leading_monomial();
            if (opts.use_criterion && criterion(expected, popped.ancestor)) {
                ++stats.criterion_hits;
                continue;
            }
            ++stats.normal_forms;
            Polynomial h = nf_involutive(popped.poly, G, kind);
            if (h.is_zero()) continue;
            insert(h.monic(), expected, popped.ancestor, popped.processed);
            return;
        }
    }

    struct Candidate {
        std::size_t ti;
        std::size_t var;
        Monomial prolong;
    };

    std::optional<Candidate> pick_candidate() const {
        const Monomial* qmin = nullptr;
        for (const Triple& q : Q)
            if (!qmin || compare(main, q.poly.leading_monomial(), *qmin) < 0)
                qmin = &q.poly.leading_monomial();
        std::optional<Candidate> best;
        for (std::size_t i = 0; i < T.size(); ++i) {
            VarSet open = table[i] & ~T[i].processed;
            for (std::size_t v = 0; open != 0; ++v, open >>= 1) {
                if ((open & 1) == 0) continue;
                Monomial p = lms[i].times_var(v);
                if (qmin && compare(main, p, *qmin) >= 0) continue;
                if (best) {
                    int c = compare(opts.completion_order, p, best->prolong);
                    if (c > 0) continue;
                    if (c == 0 && (T[i].seq > T[best->ti].seq ||
                                   (T[i].seq == T[best->ti].seq && v > best->var)))
                        continue;
                }
                best = Candidate{i, v, std::move(p)};
            }
        }
        return best;
    }

    // Treat prolongations lying below everything queued, lowest first under
    // the completion ordering; each (element, variable) pair is marked
    // processed exactly once.
    void lower_loop() {
        while (std::optional<Candidate> c = pick_candidate()) {
            T[c->ti].processed |= var_bit(c->var);
            bump_iterations();
            ++stats.prolongations_examined;
            check_degree(c->prolong);
            const Monomial ancestor = T[c->ti].ancestor;
            if (opts.use_criterion && criterion(c->prolong, ancestor)) {
                ++stats.criterion_hits;
                continue;
            }
            ++stats.normal_forms;
            Polynomial prolonged = T[c->ti].poly.times_term(
                Rational(1), Monomial::variable(T[c->ti].poly.context(), c->var));
            Polynomial h = nf_involutive(prolonged, G, kind);
            if (h.is_zero()) continue;
            insert(h.monic(), c->prolong, ancestor, 0);
        }
    }
};

}  // namespace

BasisResult minimal_involutive_basis(std::span<const Polynomial> F, DivisionKind kind,
                                     Ordering main_order, const BasisOptions& options) {
    std::vector<Polynomial> inputs;
    for (const Polynomial& f : F)
        if (!f.is_zero()) inputs.push_back(rekeyed(f, main_order));
    if (options.autoreduce_input) {
        inputs = autoreduce(inputs);
    } else {
        for (Polynomial& f : inputs) f = f.monic();
    }
    if (inputs.empty()) return BasisResult{};

    Engine e(kind, main_order, options);
    e.seed(std::move(inputs));
    while (true) {
        e.upper_step();
        e.lower_loop();
        if (e.Q.empty()) break;
    }

    std::vector<Polynomial> basis = std::move(e.G);
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(main_order, a.leading_monomial(), b.leading_monomial()) < 0;
    });
    // Inserts only reduce against the basis as it stood at the time, so older
    // tails can still mention monomials that later elements reach; one more
    // sweep lands on the unique fully reduced representative per leading term.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Polynomial head = Polynomial::from_terms(basis[i].context(), main_order,
                                                     {basis[i].leading_term()});
            Polynomial reduced = head.plus(nf_involutive(basis[i].tail(), basis, kind));
            if (reduced != basis[i]) {
                basis[i] = std::move(reduced);
                changed = true;
            }
        }
    }
    e.stats.final_size = basis.size();
    return BasisResult{std::move(basis), e.stats};
}

bool is_involutive_basis(std::span<const Polynomial> G, DivisionKind kind) {
    if (G.empty()) return true;
    for (const Polynomial& g : G)
        if (g.is_zero()) return false;
    std::vector<Monomial> lms = leading_monomials(G);
    std::vector<VarSet> table = nonmultiplicative_table(kind, lms);
    for (std::size_t i = 0; i < G.size(); ++i) {
        VarSet nm = table[i];
        for (std::size_t v = 0; nm != 0; ++v, nm >>= 1) {
            if ((nm & 1) == 0) continue;
            Polynomial prolonged =
                G[i].times_term(Rational(1), Monomial::variable(G[i].context(), v));
            if (!nf_involutive(prolonged, G, kind).is_zero()) return false;
        }
    }
    return true;
}

bool same_ideal(std::span<const Polynomial> A, std::span<const Polynomial> B,
                const CompletionLimits& limits) {
    std::vector<Polynomial> ga = buchberger(A, limits);
    std::vector<Polynomial> gb = buchberger(B, limits);
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

}  // namespace involute
