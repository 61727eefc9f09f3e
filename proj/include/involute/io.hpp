#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "involute/polynomial.hpp"

namespace involute {

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);

// Text forms: explicit '*' between factors, '^' for powers, rational
// coefficients like 3/2. Examples: "x^2*y", "3/2*x*y - z + 1", "1".
Polynomial parse_polynomial(const ContextPtr& ctx, Ordering order, std::string_view text,
                            std::size_t line = 1);

// A monomial is a single term with coefficient 1.
Monomial parse_monomial(const ContextPtr& ctx, std::string_view text, std::size_t line = 1);

// Problem files: '#' starts a comment, blank lines skipped, a "vars:" line
// names the variables most significant first, optional "order:" and
// "completion-order:" lines pick orderings, every other line is a polynomial.
struct Problem {
    ContextPtr ctx;
    Ordering order = Ordering::DegRevLex;
    std::optional<Ordering> completion_order;
    std::vector<Polynomial> polynomials;
    std::vector<std::size_t> lines;  // source line of each polynomial
};

Problem parse_problem_text(std::string_view text);
Problem load_problem(const std::string& path);

// For the monomial subcommands: every polynomial must be a plain monomial.
std::vector<Monomial> problem_monomials(const Problem& problem);

}  // namespace involute
