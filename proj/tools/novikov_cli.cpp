// novikov: command-line front end.
//
// Exit codes: 0 ok, 1 invariant violation, 2 parse error, 3 domain refusal.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <novikov/novikov.hpp>

namespace {

using namespace novikov;
using io::Json;

enum Exit { ok = 0, invariant = 1, parse = 2, refusal = 3 };

struct Options {
    std::string format = "table";
    std::uint64_t seed = 1;

    std::string complex_path;
    std::string at = "transcendental";
    std::string a;
    std::string a_default = "rat:1/2";
    std::int64_t dim_e = 1;
    std::string sign = "xi";
    std::string prime;
    long degree = -1;
    int max_degree = 8;
    std::string unit_spec;
    std::string lhs, rhs;
    std::string components;
    std::size_t n = 1;
    std::string emit;
    std::string matrix;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// `transcendental`, root:/rat:/int: numbers, `zero` (t -> 0 over Q) or
/// `zero:p` (t -> 0 over F_p). A number a sends t to a.
FieldTarget parse_at(const std::string& s) {
    if (s == "zero") return rationals_at_zero();
    if (s.rfind("zero:", 0) == 0) return prime_at_zero(parse_integer(s.substr(5)));
    return evaluation_target(parse_algebraic_number(s));
}

SignConvention parse_sign(const std::string& s) { return s == "minus-xi" ? SignConvention::minus_xi : SignConvention::xi; }

DeformationComplex load(const std::string& path) {
    return io::deformation_or_complex_from_json(io::parse_json_text(io::read_file(path), path));
}

std::string betti_line(const std::vector<std::int64_t>& b) {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " b" : "b") + std::to_string(i) + "=" + std::to_string(b[i]);
    return s.empty() ? "(empty complex)" : s;
}

std::string order_line(bool holds, const std::optional<LambdaPolynomial>& t) {
    std::string s = std::string("dominates: ") + (holds ? "true" : "false");
    if (holds && t) s += ", T = " + to_string(*t);
    return s;
}

void print_jumps(const JumpReport& r) {
    std::cout << "degree " << r.degree << ": generic b" << r.degree << " = " << r.generic_value
              << ", candidate " << to_string(r.candidate) << "\n";
    if (r.factors.empty()) std::cout << "  no jump points\n";
    for (const auto& f : r.factors) {
        std::cout << "  factor " << to_string(f.factor) << " (jump points a: roots of " << to_string(f.jump_polynomial)
                  << ") " << to_string(f.status);
        if (f.value) std::cout << ", b" << r.degree << " = " << *f.value;
        std::cout << "\n";
    }
}

int cmd_betti(const Options& o) {
    DeformationComplex d = load(o.complex_path);
    BettiVector b = betti(d.complex, parse_at(o.at));
    if (json_out(o)) {
        std::cout << io::dump(io::betti_to_json(b)) << "\n";
    } else {
        std::cout << "target: " << describe(b.target) << ", ideal " << ideal_of(b.target) << "\n";
        std::cout << betti_line(b.values) << "\n";
        std::cout << "euler characteristic: " << euler_characteristic(b) << "\n";
    }
    return ok;
}

int cmd_bounds(const Options& o) {
    DeformationComplex d = load(o.complex_path);
    AlgebraicNumberSpec a = parse_algebraic_number(o.a);
    BettiVector b = specialize_at_class(d, a, parse_sign(o.sign));
    BoundsReport r = zero_bounds(b, o.dim_e, a);
    if (json_out(o)) {
        std::cout << io::dump(io::bounds_to_json(r)) << "\n";
        return ok;
    }
    std::cout << "a = " << r.a << " (" << (r.classification.is_algebraic_integer ? "algebraic integer, not a unit"
                                           : r.classification.is_algebraic ? "not an algebraic integer"
                                                                           : "transcendental")
              << "), route " << to_string(r.route) << "\n";
    std::cout << "homology: " << r.target << ", " << betti_line(r.betti) << ", dim E = " << r.dim_e << "\n";
    std::cout << "prime p = " << r.p << " (" << r.prime_note << "), ideals " << r.ideal_p << " in " << r.ideal_q << "\n";
    std::cout << "zero counts:\n";
    for (std::size_t j = 0; j < r.weak.size(); ++j)
        std::cout << "  c_" << j << " >= " << r.weak_ceiling[j] << "   (b_" << j << "/dim E = " << to_string(r.weak[j]) << ")\n";
    std::cout << "alternating sums:\n";
    for (std::size_t j = 0; j < r.strong.size(); ++j)
        std::cout << "  sum_{i<=" << j << "} (-1)^i c_{" << j << "-i} >= " << r.strong_ceiling[j] << "   ("
                  << to_string(r.strong[j]) << ")\n";
    return ok;
}

int cmd_jumps(const Options& o) {
    DeformationComplex d = load(o.complex_path);
    std::vector<JumpReport> reports;
    if (o.degree >= 0) {
        reports.push_back(jump_points(d.complex, static_cast<std::size_t>(o.degree), o.max_degree));
    } else {
        for (std::size_t j = 0; j < d.complex.ranks.size(); ++j) reports.push_back(jump_points(d.complex, j, o.max_degree));
    }
    if (json_out(o)) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(io::jumps_to_json(r));
        std::cout << io::dump(arr) << "\n";
    } else {
        for (const auto& r : reports) print_jumps(r);
    }
    return ok;
}

int cmd_unit_check(const Options& o) {
    AlgebraicNumberSpec a = parse_algebraic_number(o.unit_spec);
    UnitClassification c = classify(a);
    std::string kind = !c.is_algebraic ? "transcendental"
                       : c.is_dirichlet_unit ? "unit"
                       : c.is_algebraic_integer ? "integer-not-unit"
                                                : "not-integer";
    if (json_out(o)) {
        Json j = io::classification_to_json(c);
        j["classification"] = kind;
        std::cout << io::dump(j) << "\n";
        return ok;
    }
    if (c.minimal_polynomial) std::cout << "minimal polynomial: " << to_string(*c.minimal_polynomial) << "\n";
    std::cout << "algebraic: " << yes_no(c.is_algebraic) << "\n";
    std::cout << "algebraic integer: " << yes_no(c.is_algebraic_integer) << "\n";
    std::cout << "Dirichlet unit: " << yes_no(c.is_dirichlet_unit) << "\n";
    std::cout << "classification: " << kind << "\n";
    if (!a.irreducibility_verified()) std::cout << "warning: irreducibility not verified above degree 8\n";
    return ok;
}

int cmd_verify_order(const Options& o) {
    LambdaPolynomial p = parse_coefficient_list(o.lhs), q = parse_coefficient_list(o.rhs);
    OrderVerdict v = dominates(p, q);
    MorseCheck m = morse_inequalities(p, q);
    if (m.holds != v.holds) throw PreconditionViolation("division and alternating-sum criteria disagree");
    if (json_out(o)) {
        Json j = io::order_to_json(v.holds, v.quotient);
        j["first_failing_inequality"] = m.first_failure ? Json(*m.first_failure) : Json(nullptr);
        std::cout << io::dump(j) << "\n";
        return ok;
    }
    std::cout << order_line(v.holds, v.quotient) << "\n";
    if (m.first_failure) std::cout << "first failing alternating sum: r = " << *m.first_failure << "\n";
    return ok;
}

int cmd_theorem22(const Options& o) {
    DeformationComplex d = load(o.complex_path);
    AlgebraicNumberSpec a = parse_algebraic_number(o.a);
    Integer p = o.prime.empty() ? select_prime(a).p : parse_integer(o.prime);
    PrimeComparison c = theorem22_check(d.complex, a, p);
    if (json_out(o)) {
        std::cout << io::dump(io::comparison_to_json(c, p, to_string(a))) << "\n";
    } else {
        std::cout << "p_a = " << c.ideal_p << ", q = " << c.ideal_q << "\n";
        std::cout << "P_q(lambda) = " << to_string(c.at_q) << "\n";
        std::cout << "P_p(lambda) = " << to_string(c.at_p) << "\n";
        std::cout << order_line(c.holds, c.quotient) << "\n";
    }
    return c.holds ? ok : invariant;
}

int cmd_bott_check(const Options& o) {
    auto comps = io::bott_components_from_json(io::parse_json_text(io::inline_or_file(o.components), "components"));
    BottVerdict v = bott_inequality_check(comps, parse_coefficient_list(o.rhs), parse_integer(o.prime.empty() ? "2" : o.prime));
    if (json_out(o)) {
        std::cout << io::dump(io::bott_to_json(v)) << "\n";
    } else {
        std::cout << "lhs = " << to_string(v.lhs) << "\n";
        std::cout << "rhs = " << to_string(v.rhs) << "\n";
        std::cout << order_line(v.holds, v.quotient) << "\n";
    }
    return ok;
}

void write_or_print(const std::string& path, const Json& j) {
    if (path.empty()) {
        std::cout << io::dump(j) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << io::dump(j) << "\n";
}

int cmd_example_trefoil(const Options& o) {
    AlgebraicNumberSpec a = parse_algebraic_number(o.a.empty() ? o.a_default : o.a);
    TrefoilReport r = trefoil_surgery_example(o.n, a);
    if (!o.emit.empty()) write_or_print(o.emit, io::presentation_to_json(trefoil_surgery_presentation(o.n)));
    if (json_out(o)) {
        std::cout << io::dump(io::trefoil_to_json(r)) << "\n";
        return ok;
    }
    std::cout << "N = " << r.n << ", a = " << r.a << "\n";
    std::cout << "dim H1(X;F) = " << r.h1_X_F << "\n";
    std::cout << "dim H1(M;a^xi), a generic = " << r.h1_M_generic << "\n";
    std::cout << "dim H1(M;a^xi) = " << r.h1_M_trivial << "\n";
    std::cout << "dim H1(M;a^xi (x) E) = " << r.h1_M_twisted << "\n";
    return ok;
}

int cmd_example_mapping_torus(const Options& o) {
    IntMatrix b = io::int_matrix_from_json(io::parse_json_text(io::inline_or_file(o.matrix), "matrix"));
    DeformationComplex d = mapping_torus(b);
    Json cx = io::complex_to_json(d.complex);
    std::vector<JumpReport> reports;
    for (std::size_t j = 0; j < d.complex.ranks.size(); ++j) reports.push_back(jump_points(d.complex, j, o.max_degree));
    if (json_out(o)) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(io::jumps_to_json(r));
        Json out;
        if (o.emit.empty()) out["complex"] = cx;
        out["jumps"] = std::move(arr);
        if (!o.emit.empty()) write_or_print(o.emit, cx);
        std::cout << io::dump(out) << "\n";
        return ok;
    }
    write_or_print(o.emit, cx);
    for (const auto& r : reports) print_jumps(r);
    return ok;
}

int cmd_example_random(const Options& o) {
    random::Engine rng(o.seed);
    PolyComplex c = random::random_complex(rng);
    write_or_print(o.emit, io::complex_to_json(c));
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lower bounds for zeros of closed 1-forms from twisted homology over Z[t]"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--seed", o.seed, "Seed for random generators");

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of a complex at a field target");
    betti_cmd->add_option("-c,--complex", o.complex_path, "Complex or presentation JSON")->required();
    betti_cmd->add_option("--at", o.at, "t -> number (root:POLY, rat:p/q, int:n, transcendental), zero or zero:p");

    auto* bounds_cmd = app.add_subcommand("bounds", "Zero-count bounds for a class a^xi (x) E");
    bounds_cmd->add_option("-c,--complex", o.complex_path, "Complex or presentation JSON")->required();
    bounds_cmd->add_option("--a", o.a, "The number a")->required();
    bounds_cmd->add_option("--dim-e", o.dim_e, "Rank of the bundle E");
    bounds_cmd->add_option("--sign", o.sign, "xi: t -> 1/a, minus-xi: t -> a")->check(CLI::IsMember({"xi", "minus-xi"}));

    auto* jumps_cmd = app.add_subcommand("jumps", "Jump points of the Betti numbers");
    jumps_cmd->add_option("-c,--complex", o.complex_path, "Complex or presentation JSON")->required();
    jumps_cmd->add_option("--degree", o.degree, "Homological degree (default: all)");
    jumps_cmd->add_option("--max-degree", o.max_degree, "Largest factor degree to confirm");

    auto* unit_cmd = app.add_subcommand("unit-check", "Classify a number: algebraic integer, Dirichlet unit");
    unit_cmd->add_option("spec", o.unit_spec, "root:POLY, rat:p/q, int:n or transcendental")->required();

    auto* order_cmd = app.add_subcommand("verify-order", "Check P >= Q in the (1 + lambda) order");
    order_cmd->add_option("--lhs", o.lhs, "Coefficients of P, lowest degree first")->required();
    order_cmd->add_option("--rhs", o.rhs, "Coefficients of Q, lowest degree first")->required();

    auto* t22_cmd = app.add_subcommand("theorem22", "Compare Poincare polynomials at p_a and (p, t)");
    t22_cmd->add_option("-c,--complex", o.complex_path, "Complex or presentation JSON")->required();
    t22_cmd->add_option("--a", o.a, "The number a")->required();
    t22_cmd->add_option("--p", o.prime, "Prime (default: smallest admissible)");

    auto* bott_cmd = app.add_subcommand("bott-check", "Morse-Bott inequality over Bott component data");
    bott_cmd->add_option("--components", o.components, "JSON list of {index, dims}, or @file")->required();
    bott_cmd->add_option("--rhs", o.rhs, "Betti numbers, lowest degree first")->required();
    bott_cmd->add_option("--p", o.prime, "Prime for the Z_p coefficients (default 2)");

    auto* example_cmd = app.add_subcommand("example", "Built-in families");
    example_cmd->require_subcommand(1);
    auto* trefoil_cmd = example_cmd->add_subcommand("trefoil", "Zero surgery on N trefoils, # S^1 x S^2");
    trefoil_cmd->add_option("--n", o.n, "Number of trefoils")->check(CLI::PositiveNumber);
    trefoil_cmd->add_option("--a", o.a, "The number a (default rat:1/2)");
    trefoil_cmd->add_option("--emit-complex", o.emit, "Write the rank 2 presentation to this file");
    auto* torus_cmd = example_cmd->add_subcommand("mapping-torus", "Mapping torus of an integral monodromy");
    torus_cmd->add_option("--matrix", o.matrix, "Monodromy as JSON rows, or @file")->required();
    torus_cmd->add_option("-o,--output", o.emit, "Write the complex here instead of stdout");
    torus_cmd->add_option("--max-degree", o.max_degree, "Largest factor degree to confirm");
    auto* random_cmd = example_cmd->add_subcommand("random-complex", "Random valid complex from --seed");
    random_cmd->add_option("-o,--output", o.emit, "Write the complex here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : parse;
    }

    try {
        if (betti_cmd->parsed()) return cmd_betti(o);
        if (bounds_cmd->parsed()) return cmd_bounds(o);
        if (jumps_cmd->parsed()) return cmd_jumps(o);
        if (unit_cmd->parsed()) return cmd_unit_check(o);
        if (order_cmd->parsed()) return cmd_verify_order(o);
        if (t22_cmd->parsed()) return cmd_theorem22(o);
        if (bott_cmd->parsed()) return cmd_bott_check(o);
        if (trefoil_cmd->parsed()) return cmd_example_trefoil(o);
        if (torus_cmd->parsed()) return cmd_example_mapping_torus(o);
        if (random_cmd->parsed()) return cmd_example_random(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const NotIrreducible& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const DirichletUnitRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return refusal;
    } catch (const IsAlgebraicInteger& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return refusal;
    } catch (const NonUnimodular& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return refusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invariant;
    }
    return parse;
}
