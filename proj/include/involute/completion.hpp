#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "involute/division.hpp"
#include "involute/exec.hpp"
#include "involute/monomial.hpp"

namespace involute {

struct CompletionLimits {
    std::uint64_t max_degree = 50;       // total-degree cap on examined prolongations
    std::uint64_t max_iterations = 100000;  // cap on examined prolongations overall
};

struct CompletionStats {
    std::uint64_t prolongations_checked = 0;
    std::uint64_t elements_added = 0;
    std::uint64_t final_size = 0;
};

struct CompletionOptions {
    Ordering completion_order = Ordering::DegRevLex;
    CompletionLimits limits;
    // Skip divisor checks for prolongations at or below the last decided one.
    // Only sound for division/ordering pairs with a monotonicity guarantee;
    // fast_path_supported() says which. Off by default.
    bool monotone_fast_path = false;
    // Cross-check incrementally maintained separations against full rescans
    // after every insertion. For tests; expensive.
    bool paranoid = false;
    Exec exec = Exec::Serial;
};

// Completion ran into a resource cap. Carries the partial basis (sorted
// ascending under the completion ordering) and the stats so far.
struct CompletionLimitExceeded : Error {
    CompletionLimitExceeded(const std::string& what, std::vector<Monomial> partial_,
                            CompletionStats stats_)
        : Error(what), partial(std::move(partial_)), stats(stats_) {}
    std::vector<Monomial> partial;
    CompletionStats stats;
};

struct CompletionResult {
    std::vector<Monomial> basis;  // ascending under the completion ordering
    CompletionStats stats;
};

// True when the fast path is known sound: Thomas under any ordering, an
// induced division under its own ordering, and the globally defined divisions
// (whose separations never move). Janet qualifies for no ordering: inserting
// a prolongation can move a variable out of an existing multiplicative set
// and leave a fresh prolongation below the bound uncovered, even under lex.
bool fast_path_supported(DivisionKind kind, Ordering completion_order);

// Enlarges U until every nonmultiplicative prolongation of every element has
// an involutive divisor in the set. Deterministic: the pending prolongation
// with the lowest product under the completion ordering is examined first
// (ties: lower parent, then lower variable index). For an involutively
// autoreduced input the result is the minimal completion.
CompletionResult involutive_complete(DivisionKind kind, std::span<const Monomial> input,
                                     const CompletionOptions& options = {});

// Every single-variable nonmultiplicative prolongation has an involutive
// divisor in U. Witness (parent index, variable) of the first violation in
// row-major order, identical for serial and parallel runs.
struct LocalInvolutivityReport {
    bool involutive = true;
    std::optional<std::size_t> parent;
    std::optional<std::size_t> var;
};
LocalInvolutivityReport local_involutivity(DivisionKind kind, std::span<const Monomial> U,
                                           Exec exec = Exec::Serial);
bool is_locally_involutive(DivisionKind kind, std::span<const Monomial> U,
                           Exec exec = Exec::Serial);

// Exhaustive oracle: every monomial of total degree <= degree_bound lying in
// the ordinary cone of U has an involutive divisor in U. degree_bound must
// be at least the largest degree in U. Returns the first uncovered monomial
// in enumeration order if any; serial and parallel runs agree exactly.
std::optional<Monomial> involutive_coverage_gap(DivisionKind kind, std::span<const Monomial> U,
                                                std::uint64_t degree_bound,
                                                Exec exec = Exec::Serial);
bool is_involutive_bruteforce(DivisionKind kind, std::span<const Monomial> U,
                              std::uint64_t degree_bound, Exec exec = Exec::Serial);

// No element involutively divides another (distinct) element.
bool is_autoreduced_involutively(DivisionKind kind, std::span<const Monomial> U);

// Every nonmultiplicative prolongation not exceeding w under the completion
// ordering lies in the involutive cone of U.
bool completeness_bound_check(DivisionKind kind, std::span<const Monomial> U,
                              Ordering completion_order, const Monomial& w);

}  // namespace involute
