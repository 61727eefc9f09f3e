#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "involute/polynomial.hpp"

namespace involute {

struct BasisStats {
    std::uint64_t prolongations_examined = 0;
    std::uint64_t criterion_hits = 0;
    std::uint64_t normal_forms = 0;
    std::uint64_t displacements = 0;
    std::size_t final_size = 0;
};

struct BasisOptions {
    Ordering completion_order = Ordering::DegRevLex;
    bool autoreduce_input = true;
    bool use_criterion = true;
    CompletionLimits limits;
    Exec exec = Exec::Serial;
};

struct BasisResult {
    std::vector<Polynomial> basis;
    BasisStats stats;
};

struct BasisLimitExceeded : Error {
    BasisLimitExceeded(const std::string& what, std::vector<Polynomial> partial_,
                       BasisStats stats_)
        : Error(what), partial(std::move(partial_)), stats(stats_) {}
    std::vector<Polynomial> partial;
    BasisStats stats;
};

// Minimal involutive basis of the ideal generated by F: monic, tails fully
// involutively reduced, sorted ascending by leading monomial under main_order.
// The schedule pops queued polynomials lowest-leading-monomial first and
// treats nonmultiplicative prolongations lowest first under
// options.completion_order, but only while they stay below everything queued.
BasisResult minimal_involutive_basis(std::span<const Polynomial> F, DivisionKind kind,
                                     Ordering main_order, const BasisOptions& options = {});

// True when every nonmultiplicative prolongation of G reduces to zero
// involutively modulo G. Empty G passes (zero ideal); zero elements fail.
bool is_involutive_basis(std::span<const Polynomial> G, DivisionKind kind);

// Compares the ideals generated by A and B through their reduced Groebner
// bases, which are unique, so equality is decisive.
bool same_ideal(std::span<const Polynomial> A, std::span<const Polynomial> B,
                const CompletionLimits& limits = {});

}  // namespace involute
