#include "involute/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "involute/rational.hpp"

namespace involute {

std::string to_string(const Monomial& m) {
    std::string s;
    const VariableContext& ctx = *m.context();
    for (std::size_t i = 0; i < m.var_count(); ++i) {
        std::uint32_t e = m.exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += ctx.name(i);
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    if (s.empty()) s = "1";
    return s;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : p.terms()) {
        bool negative = t.coef < 0;
        Rational mag = negative ? Rational(-t.coef) : t.coef;
        std::string body;
        if (t.mono.is_unit())
            body = rational_to_string(mag);
        else if (mag == 1)
            body = to_string(t.mono);
        else
            body = rational_to_string(mag) + "*" + to_string(t.mono);
        if (first)
            s += negative ? "-" + body : body;
        else
            s += (negative ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct Cursor {
    std::string_view s;
    std::size_t line;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(line, at + 1, msg);
    }

    std::string_view read_while(bool (*pred)(char)) {
        std::size_t start = pos;
        while (!eof() && pred(peek())) ++pos;
        return s.substr(start, pos - start);
    }

    std::uint64_t read_uint(const char* what) {
        std::size_t at = pos;
        std::string_view digits = read_while(digit);
        if (digits.empty()) fail(std::string("expected ") + what, at);
        std::uint64_t value = 0;
        for (char c : digits) {
            if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
                fail(std::string(what) + " is too large", at);
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return value;
    }
};

}  // namespace

Polynomial parse_polynomial(const ContextPtr& ctx, Ordering order, std::string_view text,
                            std::size_t line) {
    Cursor c{text, line};
    std::vector<Term> terms;
    c.skip_ws();
    if (c.eof()) c.fail("empty polynomial", 0);
    bool first = true;
    while (true) {
        c.skip_ws();
        int sign = 1;
        if (first) {
            if (!c.eof() && (c.peek() == '+' || c.peek() == '-')) {
                if (c.peek() == '-') sign = -1;
                ++c.pos;
            }
        } else {
            if (c.eof()) break;
            if (c.peek() == '+') {
                ++c.pos;
            } else if (c.peek() == '-') {
                sign = -1;
                ++c.pos;
            } else {
                c.fail("expected '+' or '-' between terms", c.pos);
            }
        }

        Rational coef(sign);
        std::vector<std::uint64_t> exps(ctx->size(), 0);
        while (true) {
            c.skip_ws();
            std::size_t at = c.pos;
            if (c.eof()) c.fail("expected a coefficient or variable", at);
            if (digit(c.peek())) {
                std::string token(c.read_while(digit));
                if (!c.eof() && c.peek() == '/') {
                    ++c.pos;
                    std::size_t den_at = c.pos;
                    std::string den(c.read_while(digit));
                    if (den.empty()) c.fail("expected a denominator", den_at);
                    if (den.find_first_not_of('0') == std::string::npos)
                        c.fail("zero denominator", den_at);
                    token += '/';
                    token += den;
                }
                coef *= rational_from_string(token);
            } else if (ident_start(c.peek())) {
                std::string name(c.read_while(ident_char));
                std::optional<std::size_t> idx = ctx->index(name);
                if (!idx) c.fail("unknown variable '" + name + "'", at);
                std::uint64_t e = 1;
                c.skip_ws();
                if (!c.eof() && c.peek() == '^') {
                    ++c.pos;
                    c.skip_ws();
                    e = c.read_uint("an exponent");
                }
                exps[*idx] += e;
                if (exps[*idx] > std::numeric_limits<std::uint32_t>::max())
                    c.fail("exponent is too large", at);
            } else {
                c.fail("unexpected character", at);
            }
            c.skip_ws();
            if (!c.eof() && c.peek() == '*') {
                ++c.pos;
                continue;
            }
            break;
        }

        std::vector<std::uint32_t> narrowed(exps.begin(), exps.end());
        terms.push_back(Term{std::move(coef), Monomial(ctx, std::move(narrowed))});
        first = false;
        c.skip_ws();
        if (c.eof()) break;
    }
    return Polynomial::from_terms(ctx, order, std::move(terms));
}

Monomial parse_monomial(const ContextPtr& ctx, std::string_view text, std::size_t line) {
    Polynomial p = parse_polynomial(ctx, Ordering::Lex, text, line);
    if (p.term_count() != 1 || p.leading_coefficient() != 1)
        throw ParseError(line, 0, "expected a monomial (a single term with coefficient 1)");
    return p.leading_monomial();
}

namespace {

std::string_view trimmed(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Ordering parse_ordering_or_fail(std::string_view text, std::size_t line) {
    std::optional<Ordering> o = parse_ordering(trimmed(text));
    if (!o)
        throw ParseError(line, 0,
                         "unknown ordering '" + std::string(trimmed(text)) +
                             "' (expected lex, deglex, or degrevlex)");
    return *o;
}

}  // namespace

Problem parse_problem_text(std::string_view text) {
    Problem problem;
    struct PendingLine {
        std::string text;
        std::size_t line;
    };
    std::vector<PendingLine> pending;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string_view s = trimmed(raw);
        if (s.empty()) continue;

        if (s.rfind("vars:", 0) == 0) {
            if (problem.ctx) throw ParseError(line_no, 0, "duplicate vars line");
            std::vector<std::string> names;
            std::istringstream words{std::string(s.substr(5))};
            std::string w;
            while (words >> w) {
                if (!ident_start(w[0]) ||
                    !std::all_of(w.begin(), w.end(), [](char c) { return ident_char(c); }))
                    throw ParseError(line_no, 0, "variable name '" + w + "' is not an identifier");
                names.push_back(w);
            }
            try {
                problem.ctx = make_context(std::move(names));
            } catch (const Error& e) {
                throw ParseError(line_no, 0, e.what());
            }
        } else if (s.rfind("order:", 0) == 0) {
            problem.order = parse_ordering_or_fail(s.substr(6), line_no);
        } else if (s.rfind("completion-order:", 0) == 0) {
            problem.completion_order = parse_ordering_or_fail(s.substr(17), line_no);
        } else if (s.rfind("completion_order:", 0) == 0) {
            problem.completion_order = parse_ordering_or_fail(s.substr(17), line_no);
        } else {
            pending.push_back(PendingLine{std::string(s), line_no});
        }
    }

    if (!problem.ctx) throw ParseError(1, 0, "missing vars line");
    for (const PendingLine& p : pending) {
        problem.polynomials.push_back(
            parse_polynomial(problem.ctx, problem.order, p.text, p.line));
        problem.lines.push_back(p.line);
    }
    return problem;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

std::vector<Monomial> problem_monomials(const Problem& problem) {
    std::vector<Monomial> out;
    out.reserve(problem.polynomials.size());
    for (std::size_t i = 0; i < problem.polynomials.size(); ++i) {
        const Polynomial& p = problem.polynomials[i];
        if (p.term_count() != 1 || p.leading_coefficient() != 1)
            throw ParseError(problem.lines[i], 0,
                             "expected a monomial (a single term with coefficient 1)");
        out.push_back(p.leading_monomial());
    }
    return out;
}

}  // namespace involute
