#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "involute/basis.hpp"
#include "involute/io.hpp"

namespace {

using namespace involute;

struct Flags {
    std::string problem_path;
    std::string division = "janet";
    std::string order;
    std::string completion_order;
    std::uint64_t max_degree = CompletionLimits{}.max_degree;
    std::uint64_t max_iterations = CompletionLimits{}.max_iterations;
    std::uint64_t seed = 0;
    int threads = 1;
    bool stats = false;
    bool all_divisions = false;
    bool no_autoreduce = false;
    bool no_criterion = false;
    bool verify = false;
    bool monotone_fast_path = false;
};

DivisionKind division_or_throw(const std::string& name) {
    std::optional<DivisionKind> kind = parse_division(name);
    if (!kind) throw Error("unknown division '" + name + "'");
    return *kind;
}

Ordering ordering_or_throw(const std::string& name) {
    std::optional<Ordering> order = parse_ordering(name);
    if (!order) throw Error("unknown ordering '" + name + "'");
    return *order;
}

Ordering resolve_main(const Problem& pb, const Flags& f) {
    if (!f.order.empty()) return ordering_or_throw(f.order);
    return pb.order;
}

Ordering resolve_completion(const Problem& pb, const Flags& f, Ordering main) {
    if (!f.completion_order.empty()) return ordering_or_throw(f.completion_order);
    if (pb.completion_order) return *pb.completion_order;
    return main;
}

Exec exec_of(const Flags& f) {
    if (f.threads > 1) {
        set_threads(f.threads);
        return Exec::Parallel;
    }
    return Exec::Serial;
}

CompletionLimits limits_of(const Flags& f) { return CompletionLimits{f.max_degree, f.max_iterations}; }

std::vector<Monomial> monomials_of(const Problem& pb) {
    std::vector<Monomial> all = problem_monomials(pb);
    if (all.empty()) throw Error("problem file contains no monomials");
    std::vector<Monomial> set;
    for (const Monomial& m : all) {
        bool seen = false;
        for (const Monomial& s : set)
            if (s == m) seen = true;
        if (!seen) set.push_back(m);
    }
    return set;
}

std::vector<Polynomial> polynomials_of(const Problem& pb, Ordering main) {
    if (pb.polynomials.empty()) throw Error("problem file contains no polynomials");
    std::vector<Polynomial> out;
    out.reserve(pb.polynomials.size());
    for (std::size_t i = 0; i < pb.polynomials.size(); ++i) {
        const Polynomial& p = pb.polynomials[i];
        if (p.is_zero()) throw ParseError(pb.lines[i], 0, "zero polynomial is not allowed here");
        if (p.order() == main) {
            out.push_back(p);
        } else {
            std::vector<Term> terms(p.terms().begin(), p.terms().end());
            out.push_back(Polynomial::from_terms(p.context(), main, std::move(terms)));
        }
    }
    return out;
}

void print_stats(const CompletionStats& s) {
    std::cout << "# prolongations_checked=" << s.prolongations_checked << "\n"
              << "# elements_added=" << s.elements_added << "\n"
              << "# final_size=" << s.final_size << "\n";
}

void print_stats(const BasisStats& s) {
    std::cout << "# prolongations_examined=" << s.prolongations_examined << "\n"
              << "# criterion_hits=" << s.criterion_hits << "\n"
              << "# normal_forms=" << s.normal_forms << "\n"
              << "# displacements=" << s.displacements << "\n"
              << "# final_size=" << s.final_size << "\n";
}

std::string cell_text(const VariableContext& ctx, VarSet multiplicative) {
    std::string s;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (!(multiplicative & var_bit(i))) continue;
        if (!s.empty()) s += ',';
        s += ctx.name(i);
    }
    return s.empty() ? "-" : s;
}

int cmd_separate(const Flags& f) {
    Problem pb = load_problem(f.problem_path);
    std::vector<Monomial> U = monomials_of(pb);
    std::vector<DivisionKind> kinds;
    if (f.all_divisions)
        kinds.assign(kAllDivisions.begin(), kAllDivisions.end());
    else
        kinds.push_back(division_or_throw(f.division));

    Exec exec = exec_of(f);
    std::vector<std::vector<VarSet>> tables;
    tables.reserve(kinds.size());
    for (DivisionKind kind : kinds) tables.push_back(nonmultiplicative_table(kind, U, exec));

    std::cout << "monomial";
    for (DivisionKind kind : kinds) std::cout << " | " << division_name(kind);
    std::cout << "\n";
    const VariableContext& ctx = *pb.ctx;
    VarSet all = full_var_set(ctx.size());
    for (std::size_t i = 0; i < U.size(); ++i) {
        std::cout << to_string(U[i]);
        for (std::size_t k = 0; k < kinds.size(); ++k)
            std::cout << " | " << cell_text(ctx, all & ~tables[k][i]);
        std::cout << "\n";
    }
    return 0;
}

int cmd_complete_monomials(const Flags& f) {
    Problem pb = load_problem(f.problem_path);
    std::vector<Monomial> U = monomials_of(pb);
    DivisionKind kind = division_or_throw(f.division);
    CompletionOptions opts;
    opts.completion_order = resolve_completion(pb, f, resolve_main(pb, f));
    opts.limits = limits_of(f);
    opts.monotone_fast_path = f.monotone_fast_path;
    opts.exec = exec_of(f);
    try {
        CompletionResult r = involutive_complete(kind, U, opts);
        if (f.stats) print_stats(r.stats);
        for (const Monomial& m : r.basis) std::cout << to_string(m) << "\n";
        return 0;
    } catch (const CompletionLimitExceeded& e) {
        std::cout << "# limit-exceeded: " << e.what() << "\n";
        if (f.stats) print_stats(e.stats);
        for (const Monomial& m : e.partial) std::cout << to_string(m) << "\n";
        return 2;
    }
}

int cmd_involutive_basis(const Flags& f) {
    Problem pb = load_problem(f.problem_path);
    Ordering main = resolve_main(pb, f);
    std::vector<Polynomial> F = polynomials_of(pb, main);
    DivisionKind kind = division_or_throw(f.division);
    BasisOptions opts;
    opts.completion_order = resolve_completion(pb, f, main);
    opts.autoreduce_input = !f.no_autoreduce;
    opts.use_criterion = !f.no_criterion;
    opts.limits = limits_of(f);
    opts.exec = exec_of(f);
    try {
        BasisResult r = minimal_involutive_basis(F, kind, main, opts);
        if (f.stats) print_stats(r.stats);
        for (const Polynomial& p : r.basis) std::cout << to_string(p) << "\n";
        if (f.verify) {
            bool involutive = is_involutive_basis(r.basis, kind);
            bool ideal = involutive && same_ideal(F, r.basis, opts.limits);
            if (!involutive || !ideal) {
                std::cout << "# verification: FAILED ("
                          << (!involutive ? "prolongation does not reduce to zero"
                                          : "ideal mismatch against the reduced Groebner basis")
                          << ")\n";
                return 3;
            }
            std::cout << "# verification: PASSED\n";
        }
        return 0;
    } catch (const BasisLimitExceeded& e) {
        std::cout << "# limit-exceeded: " << e.what() << "\n";
        if (f.stats) print_stats(e.stats);
        for (const Polynomial& p : e.partial) std::cout << to_string(p) << "\n";
        return 2;
    }
}

int cmd_groebner(const Flags& f) {
    Problem pb = load_problem(f.problem_path);
    Ordering main = resolve_main(pb, f);
    std::vector<Polynomial> F = polynomials_of(pb, main);
    try {
        std::vector<Polynomial> G = buchberger(F, limits_of(f));
        for (const Polynomial& p : G) std::cout << to_string(p) << "\n";
        return 0;
    } catch (const GroebnerLimitExceeded& e) {
        std::cout << "# limit-exceeded: " << e.what() << "\n";
        for (const Polynomial& p : e.partial) std::cout << to_string(p) << "\n";
        return 2;
    }
}

int cmd_verify(const Flags& f) {
    Problem pb = load_problem(f.problem_path);
    Ordering main = resolve_main(pb, f);
    std::vector<Polynomial> F = polynomials_of(pb, main);
    DivisionKind kind = division_or_throw(f.division);
    BasisOptions opts;
    opts.completion_order = resolve_completion(pb, f, main);
    opts.autoreduce_input = !f.no_autoreduce;
    opts.use_criterion = !f.no_criterion;
    opts.limits = limits_of(f);
    opts.exec = exec_of(f);
    try {
        BasisResult r = minimal_involutive_basis(F, kind, main, opts);
        bool involutive = is_involutive_basis(r.basis, kind);
        bool ideal = same_ideal(F, r.basis, opts.limits);
        std::cout << "check involutive-closure: " << (involutive ? "PASS" : "FAIL") << "\n";
        std::cout << "check ideal-equality: " << (ideal ? "PASS" : "FAIL") << "\n";
        std::cout << "verification " << (involutive && ideal ? "PASSED" : "FAILED") << "\n";
        return involutive && ideal ? 0 : 3;
    } catch (const BasisLimitExceeded& e) {
        std::cout << "# limit-exceeded: " << e.what() << "\n";
        for (const Polynomial& p : e.partial) std::cout << to_string(p) << "\n";
        return 2;
    }
}

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("problem", f.problem_path, "problem file")->required();
    cmd->add_option("--division", f.division,
                    "involutive division: thomas, janet, pommaret, div1, div2, induced-lex, "
                    "induced-deglex, induced-degrevlex");
    cmd->add_option("--order", f.order, "main ordering: lex, deglex, degrevlex");
    cmd->add_option("--completion-order", f.completion_order,
                    "ordering that schedules prolongations (defaults to the main ordering)");
    cmd->add_option("--max-degree", f.max_degree, "abort past this prolongation degree");
    cmd->add_option("--max-iterations", f.max_iterations, "abort past this many treated items");
    cmd->add_option("--seed", f.seed, "seed for randomized harnesses");
    cmd->add_option("--threads", f.threads, "worker threads for separation tables");
    cmd->add_flag("--stats", f.stats, "print a # key=value stats block");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"involutive bases of monomial and polynomial ideals"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* sep = app.add_subcommand("separate", "print multiplicative variables per element");
    add_common(sep, f);
    sep->add_flag("--all-divisions", f.all_divisions, "one column per division");

    CLI::App* comp = app.add_subcommand("complete-monomials", "involutively complete a monomial set");
    add_common(comp, f);
    comp->add_flag("--monotone-fast-path", f.monotone_fast_path,
                   "skip divisor checks below the completeness bound (monotone pairs only)");

    CLI::App* bas = app.add_subcommand("involutive-basis", "minimal involutive basis of an ideal");
    add_common(bas, f);
    bas->add_flag("--no-autoreduce", f.no_autoreduce, "skip input autoreduction");
    bas->add_flag("--no-criterion", f.no_criterion, "disable the chain criterion");
    bas->add_flag("--verify", f.verify, "re-check the result against the Groebner oracle");

    CLI::App* gro = app.add_subcommand("groebner", "reduced Groebner basis (Buchberger)");
    add_common(gro, f);

    CLI::App* ver = app.add_subcommand("verify", "compute a basis and check it against the oracle");
    add_common(ver, f);
    ver->add_flag("--no-autoreduce", f.no_autoreduce, "skip input autoreduction");
    ver->add_flag("--no-criterion", f.no_criterion, "disable the chain criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (sep->parsed()) return cmd_separate(f);
        if (comp->parsed()) return cmd_complete_monomials(f);
        if (bas->parsed()) return cmd_involutive_basis(f);
        if (gro->parsed()) return cmd_groebner(f);
        return cmd_verify(f);
    } catch (const GroebnerLimitExceeded& e) {
        std::cout << "# limit-exceeded: " << e.what() << "\n";
        for (const involute::Polynomial& p : e.partial) std::cout << involute::to_string(p) << "\n";
        return 2;
    } catch (const involute::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
