#include "involute/completion.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace involute {

bool fast_path_supported(DivisionKind kind, Ordering completion_order) {
    if (is_globally_defined(kind)) return true;
    if (kind == DivisionKind::Thomas) return true;
    if (auto o = inducing_order(kind)) return *o == completion_order;
    return false;
}

namespace {

std::vector<Monomial> sorted_unique(std::span<const Monomial> input, Ordering order) {
    std::vector<Monomial> set(input.begin(), input.end());
    std::sort(set.begin(), set.end(),
              [&](const Monomial& a, const Monomial& b) { return compare(order, a, b) < 0; });
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

void require_consistent(std::span<const Monomial> U) {
    if (U.empty()) throw Error("monomial set must be nonempty");
    for (std::size_t i = 1; i < U.size(); ++i) require_same_context(U[0], U[i]);
}

// A nonmultiplicative prolongation waiting to be examined.
struct Pending {
    Monomial prolong;
    std::size_t parent;
    std::size_t var;
};

}  // namespace

CompletionResult involutive_complete(DivisionKind kind, std::span<const Monomial> input,
                                     const CompletionOptions& options) {
    require_consistent(input);
    const Ordering corder = options.completion_order;
    if (options.monotone_fast_path && !fast_path_supported(kind, corder))
        throw Error(std::string("monotone fast path is not valid for ") +
                    std::string(division_name(kind)) + " under " +
                    std::string(ordering_name(corder)));

    std::vector<Monomial> set = sorted_unique(input, corder);
    std::vector<VarSet> table = nonmultiplicative_table(kind, set, options.exec);

    // Min-queue over pending prolongations: lowest product first, ties by
    // lower parent monomial, then lower variable index. Each (parent, var)
    // pair enters once; separations only grow as the set grows, so growth
    // events enqueue exactly the fresh pairs.
    auto heap_after = [&](const Pending& a, const Pending& b) {
        int c = compare(corder, a.prolong, b.prolong);
        if (c != 0) return c > 0;
        c = compare(corder, set[a.parent], set[b.parent]);
        if (c != 0) return c > 0;
        return a.var > b.var;
    };
    std::priority_queue<Pending, std::vector<Pending>, decltype(heap_after)> queue(heap_after);

    auto enqueue_pairs = [&](std::size_t parent, VarSet vars) {
        for (std::size_t x = 0; x < set[parent].var_count(); ++x)
            if (vars & var_bit(x)) queue.push(Pending{set[parent].times_var(x), parent, x});
    };
    for (std::size_t i = 0; i < set.size(); ++i) enqueue_pairs(i, table[i]);

    CompletionStats stats;
    std::uint64_t examined = 0;
    std::optional<Monomial> bound;

    auto bail = [&](const char* which) -> CompletionLimitExceeded {
        std::vector<Monomial> partial = sorted_unique(set, corder);
        CompletionStats snap = stats;
        snap.final_size = partial.size();
        return CompletionLimitExceeded(std::string("completion exceeded ") + which, std::move(partial),
                                       snap);
    };

    while (!queue.empty()) {
        Pending p = queue.top();
        queue.pop();
        if (++examined > options.limits.max_iterations) throw bail("max_iterations");
        if (p.prolong.degree() > options.limits.max_degree) throw bail("max_degree");

        if (options.monotone_fast_path && bound && compare(corder, p.prolong, *bound) <= 0)
            continue;  // at or below the completeness bound: already covered

        ++stats.prolongations_checked;
        if (find_involutive_divisor(set, table, p.prolong)) {
            if (options.monotone_fast_path) bound = p.prolong;
            continue;
        }

        // Irreducible: adopt the prolongation and refresh separations.
        set.push_back(p.prolong);
        ++stats.elements_added;
        const Monomial& fresh = set.back();
        for (std::size_t i = 0; i + 1 < set.size(); ++i) {
            VarSet updated = pairwise_update(kind, set[i], table[i], fresh);
            VarSet grown = updated & ~table[i];
            table[i] = updated;
            if (grown) enqueue_pairs(i, grown);
        }
        table.push_back(nonmultiplicative_vars(kind, fresh, set));
        enqueue_pairs(set.size() - 1, table.back());
        if (options.monotone_fast_path) bound = p.prolong;

        if (options.paranoid) {
            std::vector<VarSet> rescan = nonmultiplicative_table(kind, set, options.exec);
            if (rescan != table)
                throw Error("incremental separations diverged from a full rescan");
        }
    }

    std::vector<Monomial> basis = sorted_unique(set, corder);
    stats.final_size = basis.size();
    return CompletionResult{std::move(basis), stats};
}

LocalInvolutivityReport local_involutivity(DivisionKind kind, std::span<const Monomial> U,
                                           Exec exec) {
    require_consistent(U);
    std::vector<VarSet> table = nonmultiplicative_table(kind, U, exec);

    struct Pair {
        std::size_t parent, var;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t x = 0; x < U[i].var_count(); ++x)
            if (table[i] & var_bit(x)) pairs.push_back({i, x});

    std::vector<char> covered(pairs.size(), 1);
    exec_for(exec, pairs.size(), [&](std::size_t k) {
        Monomial p = U[pairs[k].parent].times_var(pairs[k].var);
        covered[k] = find_involutive_divisor(U, table, p).has_value();
    });

    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (!covered[k]) return {false, pairs[k].parent, pairs[k].var};
    return {};
}

bool is_locally_involutive(DivisionKind kind, std::span<const Monomial> U, Exec exec) {
    return local_involutivity(kind, U, exec).involutive;
}

namespace {

// All exponent vectors over n variables with total degree <= bound, row-major
// into a flat buffer, in lexicographic enumeration order.
void enumerate_exponents(std::size_t n, std::uint64_t bound, std::vector<std::uint32_t>& out) {
    std::vector<std::uint32_t> cur(n, 0);
    std::uint64_t cells_cap = 100'000'000;  // keep the oracle's memory bounded
    auto emit = [&]() {
        if (out.size() + n > cells_cap) throw Error("degree bound enumeration too large");
        out.insert(out.end(), cur.begin(), cur.end());
    };
    // Odometer with degree budget.
    std::uint64_t used = 0;
    emit();
    while (true) {
        std::size_t i = n;
        while (i-- > 0) {
            if (used < bound) {
                ++cur[i];
                ++used;
                break;
            }
            used -= cur[i];
            cur[i] = 0;
            if (i == 0) return;
        }
        emit();
    }
}

}  // namespace

std::optional<Monomial> involutive_coverage_gap(DivisionKind kind, std::span<const Monomial> U,
                                                std::uint64_t degree_bound, Exec exec) {
    require_consistent(U);
    for (const Monomial& u : U)
        if (u.degree() > degree_bound)
            throw Error("degree bound is below the largest input degree");

    const std::size_t n = U[0].var_count();
    std::vector<VarSet> table = nonmultiplicative_table(kind, U, exec);

    std::vector<std::uint32_t> rows;
    enumerate_exponents(n, degree_bound, rows);
    const std::size_t count = rows.size() / n;

    auto divides_row = [&](const Monomial& u, const std::uint32_t* r) {
        for (std::size_t i = 0; i < n; ++i)
            if (u.exponent(i) > r[i]) return false;
        return true;
    };
    auto involutive_divides_row = [&](std::size_t vi, const std::uint32_t* r) {
        const Monomial& v = U[vi];
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t ev = v.exponent(i);
            if (ev > r[i]) return false;
            if (ev < r[i] && (table[vi] & var_bit(i))) return false;
        }
        return true;
    };

    std::vector<char> covered(count, 1);
    exec_for(exec, count, [&](std::size_t k) {
        const std::uint32_t* r = rows.data() + k * n;
        bool in_cone = false;
        for (const Monomial& u : U)
            if (divides_row(u, r)) {
                in_cone = true;
                break;
            }
        if (!in_cone) return;
        for (std::size_t vi = 0; vi < U.size(); ++vi)
            if (involutive_divides_row(vi, r)) return;
        covered[k] = 0;
    });

    for (std::size_t k = 0; k < count; ++k)
        if (!covered[k]) {
            const std::uint32_t* r = rows.data() + k * n;
            return Monomial(U[0].context(), std::vector<std::uint32_t>(r, r + n));
        }
    return std::nullopt;
}

bool is_involutive_bruteforce(DivisionKind kind, std::span<const Monomial> U,
                              std::uint64_t degree_bound, Exec exec) {
    return !involutive_coverage_gap(kind, U, degree_bound, exec).has_value();
}

bool is_autoreduced_involutively(DivisionKind kind, std::span<const Monomial> U) {
    require_consistent(U);
    std::vector<Monomial> set = sorted_unique(U, Ordering::DegRevLex);
    std::vector<VarSet> table = nonmultiplicative_table(kind, set);
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = 0; j < set.size(); ++j)
            if (i != j && involutive_divides_with(table[i], set[i], set[j])) return false;
    return true;
}

bool completeness_bound_check(DivisionKind kind, std::span<const Monomial> U,
                              Ordering completion_order, const Monomial& w) {
    require_consistent(U);
    std::vector<VarSet> table = nonmultiplicative_table(kind, U);
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t x = 0; x < U[i].var_count(); ++x) {
            if (!(table[i] & var_bit(x))) continue;
            Monomial p = U[i].times_var(x);
            if (compare(completion_order, p, w) > 0) continue;
            if (!find_involutive_divisor(U, table, p)) return false;
        }
    return true;
}

}  // namespace involute
