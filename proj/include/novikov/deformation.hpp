#pragma once

// Deformation complexes over Z[t] built from a chain complex over the
// negative monoid ring Z[pi_-] and an integral monodromy representation.
// A group element g with xi(g) <= 0 acts on Z[t]^m through
// t^(-xi(g)) Mon(g), Mon anti-multiplicative: Mon(g g') = Mon(g') Mon(g).

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"

namespace novikov {

struct GroupGenerator {
    std::string name;
    long xi = 0;
    IntMatrix monodromy;
};

/// Letters are indices into the generator table; the empty word is 1.
using Word = std::vector<std::size_t>;

struct GroupRingTerm {
    Integer coefficient;
    Word word;
};

/// Finite Z-linear combination of words.
struct GroupRingElement {
    std::vector<GroupRingTerm> terms;
};

struct GroupRingPresentation {
    std::size_t bundle_rank = 1;  // m
    std::vector<GroupGenerator> generators;
    std::vector<std::size_t> ranks;
    std::vector<Matrix<GroupRingElement>> boundaries;
    /// Entry text as given, kept for serialisation.
    std::vector<Matrix<std::string>> boundary_text;

    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == name) return i;
        return std::nullopt;
    }
};

/// Parses `1 - g`, `2 g h`, `-3*g^2 + h`, `0`: terms separated by + and -,
/// factors (integers, generator names, name^k) joined by `*` or whitespace.
inline GroupRingElement parse_group_ring_element(const std::string& text, const GroupRingPresentation& pres) {
    auto fail = [&](const std::string& why) { return ParseError("cannot parse group ring entry '" + text + "': " + why); };
    GroupRingElement out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_number = [&] {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return text.substr(start, i - start);
    };
    bool first = true;
    skip_ws();
    if (i == text.size()) throw fail("empty entry");
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            ++i;
            skip_ws();
        } else if (!first) {
            throw fail("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        GroupRingTerm term{Integer(1), {}};
        bool any_factor = false;
        while (i < text.size()) {
            skip_ws();
            if (i == text.size() || text[i] == '+' || text[i] == '-') break;
            if (text[i] == '*') {
                if (!any_factor) throw fail("dangling '*'");
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                term.coefficient *= Integer(read_number(), 10);
            } else if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
                std::size_t start = i;
                while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
                std::string name = text.substr(start, i - start);
                auto idx = pres.find(name);
                if (!idx) throw fail("unknown generator '" + name + "'");
                std::size_t power = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    std::string e = read_number();
                    if (e.empty() || e.size() > 4) throw fail("bad exponent");
                    power = std::stoul(e);
                }
                for (std::size_t k = 0; k < power; ++k) term.word.push_back(*idx);
            } else {
                throw fail(std::string("unexpected character '") + text[i] + "'");
            }
            any_factor = true;
        }
        if (!any_factor) throw fail("empty term");
        if (negative) term.coefficient = -term.coefficient;
        if (term.coefficient != 0) out.terms.push_back(std::move(term));
    }
    return out;
}

struct DeformationComplex {
    PolyComplex complex;
    std::size_t bundle_rank = 1;
};

inline long xi_of(const Word& w, const GroupRingPresentation& pres) {
    long s = 0;
    for (auto g : w) s += pres.generators[g].xi;
    return s;
}

inline std::string word_text(const Word& w, const GroupRingPresentation& pres) {
    if (w.empty()) return "1";
    std::string s;
    for (auto g : w) s += (s.empty() ? "" : " ") + pres.generators[g].name;
    return s;
}

/// Mon(g_1 ... g_k) = Mon(g_k) ... Mon(g_1).
inline IntMatrix monodromy_of(const Word& w, const GroupRingPresentation& pres) {
    IntegerRing zz;
    IntMatrix acc = IntMatrix::identity(pres.bundle_rank, zz);
    for (auto g : w) acc = multiply(pres.generators[g].monodromy, acc, zz);
    return acc;
}

inline void check_generators(const GroupRingPresentation& pres) {
    if (pres.bundle_rank == 0) throw PreconditionViolation("bundle rank m must be positive");
    IntegerRing zz;
    for (const auto& g : pres.generators) {
        if (g.xi > 0) throw PositiveXiWord("generator '" + g.name + "' has xi = " + std::to_string(g.xi) + " > 0");
        if (g.monodromy.rows() != pres.bundle_rank || g.monodromy.cols() != pres.bundle_rank)
            throw PreconditionViolation("monodromy of '" + g.name + "' is not " + std::to_string(pres.bundle_rank) +
                                        "x" + std::to_string(pres.bundle_rank));
        Integer det = determinant(g.monodromy, zz);
        if (det != 1 && det != -1)
            throw NonUnimodular("monodromy of '" + g.name + "' has determinant " + det.get_str());
    }
}

/// Each group ring entry sum n_w w becomes the m x m block
/// sum n_w t^(-xi(w)) Mon(w). The result is validated.
inline DeformationComplex build_deformation(const GroupRingPresentation& pres) {
    check_generators(pres);
    const std::size_t m = pres.bundle_rank;
    if (pres.ranks.empty() ? !pres.boundaries.empty() : pres.boundaries.size() != pres.ranks.size() - 1)
        throw ComplexAxiomViolation(pres.boundaries.size(), "expected one boundary per positive degree");
    PolyComplex out;
    for (auto r : pres.ranks) out.ranks.push_back(r * m);
    for (std::size_t i = 1; i <= pres.boundaries.size(); ++i) {
        const auto& d = pres.boundaries[i - 1];
        if (d.rows() != pres.ranks[i - 1] || d.cols() != pres.ranks[i])
            throw ComplexAxiomViolation(i, "boundary shape does not match ranks");
        PolyMatrix block(d.rows() * m, d.cols() * m);
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c)
                for (const auto& term : d(r, c).terms) {
                    long x = xi_of(term.word, pres);
                    if (x > 0) throw PositiveXiWord("word '" + word_text(term.word, pres) + "' has xi = " + std::to_string(x));
                    IntMatrix mon = monodromy_of(term.word, pres);
                    auto power = static_cast<std::size_t>(-x);
                    for (std::size_t a = 0; a < m; ++a)
                        for (std::size_t b = 0; b < m; ++b)
                            if (mon(a, b) != 0)
                                block(r * m + a, c * m + b) +=
                                    IntPolynomial::monomial(Integer(term.coefficient * mon(a, b)), power);
                }
        out.boundaries.push_back(std::move(block));
    }
    validate(out);
    return {std::move(out), m};
}

/// Which number t is sent to: `xi` sends t -> 1/a (homology with
/// coefficients in a^xi (x) E), `minus_xi` sends t -> a.
enum class SignConvention { xi, minus_xi };

inline FieldTarget class_target(const AlgebraicNumberSpec& a, SignConvention sign = SignConvention::xi) {
    return evaluation_target(sign == SignConvention::xi ? a.inverse() : a);
}

inline BettiVector specialize_at_class(const DeformationComplex& d, const AlgebraicNumberSpec& a,
                                       SignConvention sign = SignConvention::xi) {
    return betti(d.complex, class_target(a, sign));
}

/// t -> 0 over Q (p empty) or over F_p: the singular limit, homology of the
/// cut cobordism relative to its positive boundary.
inline BettiVector specialize_boundary_case(const DeformationComplex& d, const std::optional<Integer>& p = std::nullopt) {
    return betti(d.complex, p ? prime_at_zero(*p) : rationals_at_zero());
}

/// One cylinder generator g with xi(g) = -1 and Mon(g) = B, entry `1 - g`:
/// the complex 0 -> P^m --(I - tB)--> P^m -> 0.
inline GroupRingPresentation mapping_torus_presentation(const IntMatrix& b) {
    if (b.rows() != b.cols() || b.rows() == 0) throw PreconditionViolation("monodromy must be a nonempty square matrix");
    GroupRingPresentation pres;
    pres.bundle_rank = b.rows();
    pres.generators.push_back({"g", -1, b});
    pres.ranks = {1, 1};
    pres.boundary_text.push_back(Matrix<std::string>(1, 1, "1 - g"));
    pres.boundaries.push_back(Matrix<GroupRingElement>(1, 1, parse_group_ring_element("1 - g", pres)));
    return pres;
}

inline DeformationComplex mapping_torus(const IntMatrix& b) { return build_deformation(mapping_torus_presentation(b)); }

// ---------------------------------------------------------------------------
// Zero surgery on a connected sum of N trefoils, connected sum with S^1 x S^2.

/// Alexander polynomial of the trefoil, t^2 - t + 1.
inline IntPolynomial trefoil_alexander() { return parse_int_polynomial("t^2 - t + 1"); }

/// Integral lattice for the meridian on b^eta (+) b^-eta.
inline IntMatrix trefoil_lattice_monodromy() { return IntMatrix::from_rows({{0, -1}, {1, 1}}); }

/// 0 -> P^N --(Delta I_N)--> P^N -> 0.
inline PolyComplex alexander_block_complex(std::size_t n) {
    if (n == 0) throw PreconditionViolation("N must be positive");
    PolyMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = trefoil_alexander();
    return make_complex({n, n}, {d});
}

/// Global H_1 model of M = X # (S^1 x S^2) with the rank 2 bundle E: the
/// Alexander relation evaluated at the lattice monodromy (xi = 0 on X) next
/// to the circle generator of the S^1 x S^2 summand (xi = -1, trivial E).
inline GroupRingPresentation trefoil_surgery_presentation(std::size_t n) {
    if (n == 0) throw PreconditionViolation("N must be positive");
    GroupRingPresentation pres;
    pres.bundle_rank = 2;
    pres.generators.push_back({"s", 0, trefoil_lattice_monodromy()});
    pres.generators.push_back({"g", -1, IntMatrix::from_rows({{1, 0}, {0, 1}})});
    pres.ranks = {1, n + 1};
    Matrix<std::string> text(1, n + 1, "s s - s + 1");
    text(0, n) = "1 - g";
    Matrix<GroupRingElement> d(1, n + 1);
    for (std::size_t c = 0; c <= n; ++c) d(0, c) = parse_group_ring_element(text(0, c), pres);
    pres.boundary_text.push_back(text);
    pres.boundaries.push_back(d);
    return pres;
}

struct TrefoilReport {
    std::size_t n = 0;
    std::string a;
    std::int64_t h1_X_F = 0;          // dim H_1(X; F), F = b^eta (+) b^-eta
    std::int64_t h1_M_generic = 0;    // Novikov number: dim H_1(M; a^xi), a transcendental
    std::int64_t h1_M_trivial = 0;    // dim H_1(M; a^xi) at the given a
    std::int64_t h1_M_twisted = 0;    // dim H_1(M; a^xi (x) E) at the given a
};

/// Dimensions assembled by the Mayer-Vietoris sum
/// dim H_1(M) = dim H_1(M_+) + dim H_1(M_-), M_- modelled by mapping_torus([[1]]).
inline TrefoilReport trefoil_surgery_example(std::size_t n, const AlgebraicNumberSpec& a) {
    if (n == 0) throw PreconditionViolation("N must be positive");
    TrefoilReport r;
    r.n = n;
    r.a = to_string(a);
    PolyComplex x = alexander_block_complex(n);
    auto b = AlgebraicNumberSpec::from_minimal_polynomial(to_rational(trefoil_alexander()));
    // Line bundles b^eta and b^-eta: t -> b and t -> 1/b.
    r.h1_X_F = betti(x, evaluation_target(b)).values[1] + betti(x, evaluation_target(b.inverse())).values[1];

    auto one = AlgebraicNumberSpec::rational(1);
    std::int64_t h1_plus_trivial = betti(x, evaluation_target(one)).values[1];
    DeformationComplex circle = mapping_torus(IntMatrix::from_rows({{1}}));
    std::int64_t h1_minus_generic = specialize_at_class(circle, AlgebraicNumberSpec::transcendental()).values[1];
    std::int64_t h1_minus_at_a = specialize_at_class(circle, a).values[1];
    const std::int64_t rank_e = 2;

    r.h1_M_generic = h1_plus_trivial + h1_minus_generic;
    r.h1_M_trivial = h1_plus_trivial + h1_minus_at_a;
    r.h1_M_twisted = r.h1_X_F + rank_e * h1_minus_at_a;
    return r;
}

// ---------------------------------------------------------------------------
// Bott components.

struct BottComponentData {
    std::size_t index = 0;
    std::vector<std::int64_t> dims;  // dim H_i(Z; Z_p (x) E|_Z (x) o(Z)), i = 0, 1, ...
};

/// sum_Z sum_i lambda^(ind Z + i) dims_i.
inline LambdaPolynomial bott_polynomial(const std::vector<BottComponentData>& components) {
    LambdaPolynomial out;
    for (const auto& z : components) {
        for (std::size_t i = 0; i < z.dims.size(); ++i) {
            if (z.dims[i] < 0) throw PreconditionViolation("component dimensions must be nonnegative");
            std::size_t k = z.index + i;
            if (out.size() <= k) out.resize(k + 1, 0);
            out[k] += z.dims[i];
        }
    }
    return trimmed(std::move(out));
}

struct BottVerdict {
    bool holds = false;
    LambdaPolynomial lhs;
    LambdaPolynomial rhs;
    std::optional<LambdaPolynomial> quotient;
    Integer p;
};

inline BottVerdict bott_inequality_check(const std::vector<BottComponentData>& components,
                                         const std::vector<std::int64_t>& rhs, const Integer& p) {
    if (!is_prime(p)) throw PreconditionViolation(p.get_str() + " is not prime");
    BottVerdict v;
    v.lhs = bott_polynomial(components);
    v.rhs = trimmed(rhs);
    auto d = dominates(v.lhs, v.rhs);
    v.holds = d.holds;
    v.quotient = d.quotient;
    v.p = p;
    return v;
}

} // namespace novikov
