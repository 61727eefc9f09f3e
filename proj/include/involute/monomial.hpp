#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "involute/errors.hpp"

namespace involute {

// Set of variable indices as a bitmask; bit i is the i-th context variable.
using VarSet = std::uint64_t;

inline constexpr VarSet var_bit(std::size_t i) { return VarSet{1} << i; }

inline constexpr VarSet full_var_set(std::size_t n) {
    return n >= 64 ? ~VarSet{0} : (VarSet{1} << n) - 1;
}

// Ordered list of variable names. Position 0 is the greatest variable; all
// orderings and division definitions read significance from this position.
class VariableContext {
public:
    explicit VariableContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index(std::string_view name) const;

    bool operator==(const VariableContext& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);

// A power product of context variables. Exponent arithmetic is checked and
// throws OverflowError instead of wrapping.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(ContextPtr ctx);  // the unit monomial
    Monomial(ContextPtr ctx, std::vector<std::uint32_t> exponents);

    static Monomial variable(ContextPtr ctx, std::size_t i);

    const ContextPtr& context() const { return ctx_; }
    std::size_t var_count() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    std::span<const std::uint32_t> exponents() const { return exps_; }
    std::uint64_t degree() const { return degree_; }
    bool is_unit() const { return degree_ == 0; }

    // Variables with positive exponent.
    VarSet support() const;

    Monomial times(const Monomial& other) const;
    Monomial times_var(std::size_t i) const;

    bool divides(const Monomial& other) const;
    // Requires *this | other.
    Monomial quotient_into(const Monomial& other) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const;
    bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
    ContextPtr ctx_;
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

enum class Ordering { Lex, DegLex, DegRevLex };

std::string_view ordering_name(Ordering o);
std::optional<Ordering> parse_ordering(std::string_view name);

// Three-way comparison: negative if u < v, 0 if equal, positive if u > v.
int compare(Ordering o, const Monomial& u, const Monomial& v);

inline bool less(Ordering o, const Monomial& u, const Monomial& v) { return compare(o, u, v) < 0; }
inline bool greater(Ordering o, const Monomial& u, const Monomial& v) { return compare(o, u, v) > 0; }
inline bool less_equal(Ordering o, const Monomial& u, const Monomial& v) { return compare(o, u, v) <= 0; }

// Throws ContextMismatch unless both operands live in the same context.
void require_same_context(const Monomial& a, const Monomial& b);

}  // namespace involute
