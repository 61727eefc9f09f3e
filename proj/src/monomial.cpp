#include "involute/monomial.hpp"

#include <algorithm>
#include <limits>

namespace involute {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("variable context needs at least one variable");
    if (names_.size() > 64) throw Error("variable context supports at most 64 variables");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw Error("duplicate variable name: " + names_[i]);
}

std::optional<std::size_t> VariableContext::index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const VariableContext>(std::move(names));
}

Monomial::Monomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw Error("monomial needs a variable context");
    exps_.assign(ctx_->size(), 0);
}

Monomial::Monomial(ContextPtr ctx, std::vector<std::uint32_t> exponents)
    : ctx_(std::move(ctx)), exps_(std::move(exponents)) {
    if (!ctx_) throw Error("monomial needs a variable context");
    if (exps_.size() != ctx_->size()) throw Error("exponent vector length does not match context");
    for (std::uint32_t e : exps_) degree_ += e;
}

Monomial Monomial::variable(ContextPtr ctx, std::size_t i) {
    Monomial m(std::move(ctx));
    if (i >= m.exps_.size()) throw Error("variable index out of range");
    m.exps_[i] = 1;
    m.degree_ = 1;
    return m;
}

VarSet Monomial::support() const {
    VarSet s = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i]) s |= var_bit(i);
    return s;
}

void require_same_context(const Monomial& a, const Monomial& b) {
    if (a.context() == b.context()) return;
    if (a.context() && b.context() && *a.context() == *b.context()) return;
    throw ContextMismatch("operands built over different variable contexts");
}

Monomial Monomial::times(const Monomial& other) const {
    require_same_context(*this, other);
    Monomial r(ctx_);
    constexpr std::uint64_t cap = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        std::uint64_t e = std::uint64_t(exps_[i]) + other.exps_[i];
        if (e > cap) throw OverflowError("exponent overflow in monomial product");
        r.exps_[i] = static_cast<std::uint32_t>(e);
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

Monomial Monomial::times_var(std::size_t i) const {
    Monomial r = *this;
    if (i >= r.exps_.size()) throw Error("variable index out of range");
    if (r.exps_[i] == std::numeric_limits<std::uint32_t>::max())
        throw OverflowError("exponent overflow in monomial product");
    ++r.exps_[i];
    ++r.degree_;
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    require_same_context(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient_into(const Monomial& other) const {
    require_same_context(*this, other);
    Monomial r(ctx_);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) throw Error("quotient of non-divisible monomials");
        r.exps_[i] = other.exps_[i] - exps_[i];
    }
    r.degree_ = other.degree_ - degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    Monomial r(a.ctx_);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    Monomial r(a.ctx_);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
        r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] && b.exps_[i]) return false;
    return true;
}

bool Monomial::operator==(const Monomial& other) const {
    require_same_context(*this, other);
    return exps_ == other.exps_;
}

std::string_view ordering_name(Ordering o) {
    switch (o) {
        case Ordering::Lex: return "lex";
        case Ordering::DegLex: return "deglex";
        case Ordering::DegRevLex: return "degrevlex";
    }
    return "?";
}

std::optional<Ordering> parse_ordering(std::string_view name) {
    if (name == "lex") return Ordering::Lex;
    if (name == "deglex") return Ordering::DegLex;
    if (name == "degrevlex") return Ordering::DegRevLex;
    return std::nullopt;
}

namespace {

int lex_compare(const Monomial& u, const Monomial& v) {
    for (std::size_t i = 0; i < u.var_count(); ++i)
        if (u.exponent(i) != v.exponent(i)) return u.exponent(i) > v.exponent(i) ? 1 : -1;
    return 0;
}

// Degree first; ties broken from the least significant variable backwards,
// where the smaller exponent in the last differing position wins.
int degrevlex_compare(const Monomial& u, const Monomial& v) {
    if (u.degree() != v.degree()) return u.degree() > v.degree() ? 1 : -1;
    for (std::size_t i = u.var_count(); i-- > 0;)
        if (u.exponent(i) != v.exponent(i)) return u.exponent(i) < v.exponent(i) ? 1 : -1;
    return 0;
}

}  // namespace

int compare(Ordering o, const Monomial& u, const Monomial& v) {
    require_same_context(u, v);
    switch (o) {
        case Ordering::Lex: return lex_compare(u, v);
        case Ordering::DegLex:
            if (u.degree() != v.degree()) return u.degree() > v.degree() ? 1 : -1;
            return lex_compare(u, v);
        case Ordering::DegRevLex: return degrevlex_compare(u, v);
    }
    return 0;
}

}  // namespace involute
