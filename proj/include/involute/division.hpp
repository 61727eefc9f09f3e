#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "involute/exec.hpp"
#include "involute/monomial.hpp"

namespace involute {

// The eight involutive divisions. The last three are induced by a monomial
// ordering: a variable is nonmultiplicative for u within U exactly when some
// smaller element of U has a higher degree in it.
enum class DivisionKind {
    Thomas,
    Janet,
    Pommaret,
    Div1,
    Div2,
    InducedLex,
    InducedDegLex,
    InducedDegRevLex,
};

inline constexpr std::array<DivisionKind, 8> kAllDivisions = {
    DivisionKind::Thomas,   DivisionKind::Janet,      DivisionKind::Pommaret,
    DivisionKind::Div1,     DivisionKind::Div2,       DivisionKind::InducedLex,
    DivisionKind::InducedDegLex, DivisionKind::InducedDegRevLex,
};

std::string_view division_name(DivisionKind kind);
std::optional<DivisionKind> parse_division(std::string_view name);

// Pommaret and Division II assign multiplicative variables from the monomial
// alone; their separations never depend on (or change with) the set.
bool is_globally_defined(DivisionKind kind);

// The ordering that an induced division reads, if any.
std::optional<Ordering> inducing_order(DivisionKind kind);

struct Separation {
    VarSet multiplicative = 0;
    VarSet nonmultiplicative = 0;
};

// Nonmultiplicative variables of u within U. u must be an element of U
// (compared by value); U is treated as a set, duplicates are harmless.
VarSet nonmultiplicative_vars(DivisionKind kind, const Monomial& u, std::span<const Monomial> U);

Separation separation(DivisionKind kind, const Monomial& u, std::span<const Monomial> U);

bool is_multiplicative(DivisionKind kind, const Monomial& u, std::span<const Monomial> U,
                       std::size_t var);

// Nonmultiplicative sets for every element of U at once. Data-parallel
// kernel: rows are independent. Serial and parallel paths agree exactly.
std::vector<VarSet> nonmultiplicative_table(DivisionKind kind, std::span<const Monomial> U,
                                            Exec exec = Exec::Serial);

// Incremental update when U grows by one element v:
//   NM(u, U + v) = NM(u, U) | NM(u, {u, v})
// This pairwise-union identity holds for all eight divisions and keeps
// separations current without rescanning the whole set.
VarSet pairwise_update(DivisionKind kind, const Monomial& u, VarSet current_nonmult,
                       const Monomial& v);

// Involutive divisibility: v | w and the quotient touches only variables
// multiplicative for v within U.
bool involutive_divides(DivisionKind kind, const Monomial& v, std::span<const Monomial> U,
                        const Monomial& w);

// Same check with the separation row already in hand.
bool involutive_divides_with(VarSet nonmult_of_v, const Monomial& v, const Monomial& w);

// Index of an element of U that involutively divides w, if any. When U is
// involutively autoreduced the divisor is unique.
std::optional<std::size_t> find_involutive_divisor(DivisionKind kind, std::span<const Monomial> U,
                                                   const Monomial& w);
std::optional<std::size_t> find_involutive_divisor(std::span<const Monomial> U,
                                                   std::span<const VarSet> nonmult, const Monomial& w);

}  // namespace involute
