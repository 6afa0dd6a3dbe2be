#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "order.hpp"

namespace novikov {

/// 0 -> C_m -> ... -> C_0 -> 0 with free modules of rank ranks[i]; the
/// boundary d_i : C_i -> C_{i-1} is boundaries[i-1], shaped
/// ranks[i-1] x ranks[i].
template <class T>
struct ChainComplex {
    std::vector<std::size_t> ranks;
    std::vector<Matrix<T>> boundaries;

    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }

    /// d_i for 1 <= i <= m; nullptr outside that range (zero map).
    const Matrix<T>* boundary(std::size_t i) const {
        if (i == 0 || i > boundaries.size()) return nullptr;
        return &boundaries[i - 1];
    }
};

using PolyComplex = ChainComplex<IntPolynomial>;

/// Checks shapes and d_i o d_{i+1} = 0 for every i.
template <IntegralDomain D>
void validate(const ChainComplex<typename D::Element>& c, const D& dom) {
    if (c.ranks.empty() ? !c.boundaries.empty() : c.boundaries.size() != c.ranks.size() - 1)
        throw ComplexAxiomViolation(c.boundaries.size(), "expected one boundary per positive degree");
    for (std::size_t i = 1; i <= c.boundaries.size(); ++i) {
        const auto& d = c.boundaries[i - 1];
        if (d.rows() != c.ranks[i - 1] || d.cols() != c.ranks[i])
            throw ComplexAxiomViolation(i, "boundary shape " + std::to_string(d.rows()) + "x" +
                                               std::to_string(d.cols()) + " does not match ranks");
    }
    for (std::size_t i = 1; i < c.boundaries.size(); ++i) {
        if (!is_zero_matrix(multiply(c.boundaries[i - 1], c.boundaries[i], dom), dom))
            throw ComplexAxiomViolation(i, "d_" + std::to_string(i) + " o d_" + std::to_string(i + 1) + " != 0");
    }
}

inline void validate(const PolyComplex& c) { validate(c, PolynomialRing{}); }

/// Builds and validates a complex over Z[t].
inline PolyComplex make_complex(std::vector<std::size_t> ranks, std::vector<PolyMatrix> boundaries) {
    PolyComplex c{std::move(ranks), std::move(boundaries)};
    validate(c);
    return c;
}

struct BettiVector {
    std::vector<std::int64_t> values;
    FieldTarget target;
};

/// b_i = rank C_i - rank(d_i (x) F) - rank(d_{i+1} (x) F).
inline BettiVector betti(const PolyComplex& c, const FieldTarget& t) {
    std::vector<std::size_t> boundary_rank(c.boundaries.size() + 2, 0);
    with_field(t, [&](const auto& field) {
        for (std::size_t i = 1; i <= c.boundaries.size(); ++i)
            boundary_rank[i] = rank(specialize_matrix(c.boundaries[i - 1], field), field);
        return 0;
    });
    BettiVector out{{}, t};
    for (std::size_t i = 0; i < c.ranks.size(); ++i) {
        auto b = static_cast<std::int64_t>(c.ranks[i]) - static_cast<std::int64_t>(boundary_rank[i]) -
                 static_cast<std::int64_t>(boundary_rank[i + 1]);
        out.values.push_back(b);
    }
    return out;
}

inline LambdaPolynomial poincare(const BettiVector& b) { return trimmed(b.values); }
inline LambdaPolynomial poincare(const PolyComplex& c, const FieldTarget& t) { return poincare(betti(c, t)); }

inline std::int64_t euler_characteristic(const BettiVector& b) {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < b.values.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * b.values[i];
    return chi;
}

inline std::int64_t euler_characteristic(const PolyComplex& c, const FieldTarget& t) {
    return euler_characteristic(betti(c, t));
}

/// sum (-1)^i rank C_i.
inline std::int64_t rank_euler_characteristic(const PolyComplex& c) {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < c.ranks.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.ranks[i]);
    return chi;
}

// ---------------------------------------------------------------------------
// Comparison of the Poincare polynomials at p_a and q = (p, t).

/// The prime ideal p_a = { q in Z[t] : q(1/a) = 0 } as a field target:
/// Q[t]/(minpoly of 1/a), or Q(t) when a is transcendental.
inline FieldTarget ideal_of_inverse(const AlgebraicNumberSpec& a) { return evaluation_target(a.inverse()); }

/// p_a is contained in (p, t) iff p divides the free term of the generator
/// of p_a, the primitive minimal polynomial of 1/a.
inline bool ideal_contained_in(const AlgebraicNumberSpec& a, const Integer& p) {
    if (!a.is_algebraic()) return true;
    Integer free_term = primitive_integer_minpoly(a.inverse()).constant_term();
    return mpz_divisible_p(free_term.get_mpz_t(), p.get_mpz_t()) != 0;
}

struct PrimeComparison {
    bool holds = false;
    LambdaPolynomial at_q;       // P_{C,q}, q = (p, t)
    LambdaPolynomial at_p;       // P_{C,p_a}
    std::optional<LambdaPolynomial> quotient;
    std::string ideal_p;
    std::string ideal_q;
};

/// Checks P_{C,q} >= P_{C,p_a}. A false result means an arithmetic bug, the
/// inequality itself always holds for p_a inside q.
inline PrimeComparison theorem22_check(const PolyComplex& c, const AlgebraicNumberSpec& a, const Integer& p) {
    if (!is_prime(p)) throw PreconditionViolation(p.get_str() + " is not prime");
    if (!ideal_contained_in(a, p))
        throw PreconditionViolation("ideal of " + to_string(a) + " is not contained in (" + p.get_str() +
                                    ", t): free term of " + to_string(primitive_integer_minpoly(a.inverse())) +
                                    " is not divisible by " + p.get_str());
    FieldTarget tp = ideal_of_inverse(a);
    FieldTarget tq = prime_at_zero(p);
    PrimeComparison out;
    out.at_q = poincare(c, tq);
    out.at_p = poincare(c, tp);
    auto v = dominates(out.at_q, out.at_p);
    out.holds = v.holds;
    out.quotient = v.quotient;
    out.ideal_p = ideal_of(tp);
    out.ideal_q = ideal_of(tq);
    return out;
}

} // namespace novikov
