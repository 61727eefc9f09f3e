#include "involute/division.hpp"

#include <algorithm>

namespace involute {

std::string_view division_name(DivisionKind kind) {
    switch (kind) {
        case DivisionKind::Thomas: return "thomas";
        case DivisionKind::Janet: return "janet";
        case DivisionKind::Pommaret: return "pommaret";
        case DivisionKind::Div1: return "div1";
        case DivisionKind::Div2: return "div2";
        case DivisionKind::InducedLex: return "induced-lex";
        case DivisionKind::InducedDegLex: return "induced-deglex";
        case DivisionKind::InducedDegRevLex: return "induced-degrevlex";
    }
    return "?";
}

std::optional<DivisionKind> parse_division(std::string_view name) {
    for (DivisionKind kind : kAllDivisions)
        if (division_name(kind) == name) return kind;
    return std::nullopt;
}

bool is_globally_defined(DivisionKind kind) {
    return kind == DivisionKind::Pommaret || kind == DivisionKind::Div2;
}

std::optional<Ordering> inducing_order(DivisionKind kind) {
    switch (kind) {
        case DivisionKind::InducedLex: return Ordering::Lex;
        case DivisionKind::InducedDegLex: return Ordering::DegLex;
        case DivisionKind::InducedDegRevLex: return Ordering::DegRevLex;
        default: return std::nullopt;
    }
}

namespace {

// Variable i is multiplicative for u under Thomas iff u carries the maximal
// i-degree present in U.
VarSet thomas_row(const Monomial& u, std::span<const Monomial> U) {
    VarSet nm = 0;
    for (std::size_t i = 0; i < u.var_count(); ++i) {
        std::uint32_t mx = 0;
        for (const Monomial& v : U) mx = std::max(mx, v.exponent(i));
        if (u.exponent(i) < mx) nm |= var_bit(i);
    }
    return nm;
}

// Janet: variable i is judged within the group of elements sharing u's
// degrees in all more significant variables; u needs the group maximum.
VarSet janet_row(const Monomial& u, std::span<const Monomial> U) {
    VarSet nm = 0;
    for (std::size_t i = 0; i < u.var_count(); ++i) {
        std::uint32_t mx = 0;
        for (const Monomial& v : U) {
            bool in_group = true;
            for (std::size_t j = 0; j < i; ++j)
                if (v.exponent(j) != u.exponent(j)) {
                    in_group = false;
                    break;
                }
            if (in_group) mx = std::max(mx, v.exponent(i));
        }
        if (u.exponent(i) < mx) nm |= var_bit(i);
    }
    return nm;
}

// Pommaret: every variable from the least significant one present in u
// onwards is multiplicative; for the unit monomial all of them are.
VarSet pommaret_row(const Monomial& u) {
    std::size_t n = u.var_count();
    std::size_t k = n;
    for (std::size_t i = n; i-- > 0;)
        if (u.exponent(i) > 0) {
            k = i;
            break;
        }
    if (k == n) return 0;  // unit
    VarSet nm = 0;
    for (std::size_t i = 0; i < k; ++i) nm |= var_bit(i);
    return nm;
}

// Division I: a neighbour v makes all variables of lcm(u,v)/u
// nonmultiplicative for u when that quotient touches at most n/2 variables.
VarSet div1_row(const Monomial& u, std::span<const Monomial> U) {
    std::size_t n = u.var_count();
    std::size_t cap = n / 2;
    VarSet nm = 0;
    for (const Monomial& v : U) {
        if (v == u) continue;
        VarSet sup = 0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (v.exponent(i) > u.exponent(i)) {
                sup |= var_bit(i);
                ++count;
            }
        if (count >= 1 && count <= cap) nm |= sup;
    }
    return nm;
}

// Division II: multiplicative variables are those carrying u's maximal
// exponent.
VarSet div2_row(const Monomial& u) {
    std::uint32_t mx = 0;
    for (std::size_t i = 0; i < u.var_count(); ++i) mx = std::max(mx, u.exponent(i));
    VarSet nm = 0;
    for (std::size_t i = 0; i < u.var_count(); ++i)
        if (u.exponent(i) < mx) nm |= var_bit(i);
    return nm;
}

// Ordering-induced: smaller elements of U veto every variable where they
// exceed u.
VarSet induced_row(Ordering o, const Monomial& u, std::span<const Monomial> U) {
    VarSet nm = 0;
    for (const Monomial& v : U) {
        if (compare(o, v, u) >= 0) continue;
        for (std::size_t i = 0; i < u.var_count(); ++i)
            if (u.exponent(i) < v.exponent(i)) nm |= var_bit(i);
    }
    return nm;
}

VarSet row(DivisionKind kind, const Monomial& u, std::span<const Monomial> U) {
    switch (kind) {
        case DivisionKind::Thomas: return thomas_row(u, U);
        case DivisionKind::Janet: return janet_row(u, U);
        case DivisionKind::Pommaret: return pommaret_row(u);
        case DivisionKind::Div1: return div1_row(u, U);
        case DivisionKind::Div2: return div2_row(u);
        case DivisionKind::InducedLex: return induced_row(Ordering::Lex, u, U);
        case DivisionKind::InducedDegLex: return induced_row(Ordering::DegLex, u, U);
        case DivisionKind::InducedDegRevLex: return induced_row(Ordering::DegRevLex, u, U);
    }
    return 0;
}

void require_member(const Monomial& u, std::span<const Monomial> U) {
    for (const Monomial& v : U)
        if (v == u) return;
    throw Error("separation: monomial is not a member of the set");
}

}  // namespace

VarSet nonmultiplicative_vars(DivisionKind kind, const Monomial& u, std::span<const Monomial> U) {
    require_member(u, U);
    return row(kind, u, U);
}

Separation separation(DivisionKind kind, const Monomial& u, std::span<const Monomial> U) {
    VarSet nm = nonmultiplicative_vars(kind, u, U);
    return Separation{full_var_set(u.var_count()) & ~nm, nm};
}

bool is_multiplicative(DivisionKind kind, const Monomial& u, std::span<const Monomial> U,
                       std::size_t var) {
    if (var >= u.var_count()) throw Error("variable index out of range");
    return (nonmultiplicative_vars(kind, u, U) & var_bit(var)) == 0;
}

std::vector<VarSet> nonmultiplicative_table(DivisionKind kind, std::span<const Monomial> U,
                                            Exec exec) {
    std::vector<VarSet> table(U.size());
    exec_for(exec, U.size(), [&](std::size_t i) { table[i] = row(kind, U[i], U); });
    return table;
}

VarSet pairwise_update(DivisionKind kind, const Monomial& u, VarSet current_nonmult,
                       const Monomial& v) {
    require_same_context(u, v);
    if (is_globally_defined(kind)) return current_nonmult;
    if (u == v) return current_nonmult;
    const Monomial pair[2] = {u, v};
    return current_nonmult | row(kind, u, std::span<const Monomial>(pair, 2));
}

bool involutive_divides_with(VarSet nonmult_of_v, const Monomial& v, const Monomial& w) {
    require_same_context(v, w);
    for (std::size_t i = 0; i < v.var_count(); ++i) {
        std::uint32_t ev = v.exponent(i), ew = w.exponent(i);
        if (ev > ew) return false;
        if (ev < ew && (nonmult_of_v & var_bit(i))) return false;
    }
    return true;
}

bool involutive_divides(DivisionKind kind, const Monomial& v, std::span<const Monomial> U,
                        const Monomial& w) {
    return involutive_divides_with(nonmultiplicative_vars(kind, v, U), v, w);
}

std::optional<std::size_t> find_involutive_divisor(std::span<const Monomial> U,
                                                   std::span<const VarSet> nonmult,
                                                   const Monomial& w) {
    for (std::size_t i = 0; i < U.size(); ++i)
        if (involutive_divides_with(nonmult[i], U[i], w)) return i;
    return std::nullopt;
}

std::optional<std::size_t> find_involutive_divisor(DivisionKind kind, std::span<const Monomial> U,
                                                   const Monomial& w) {
    std::vector<VarSet> table = nonmultiplicative_table(kind, U);
    return find_involutive_divisor(U, table, w);
}

}  // namespace involute
