#pragma once

#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "factor.hpp"

namespace novikov {

struct UnitClassification {
    bool is_algebraic = false;
    bool is_algebraic_integer = false;
    bool is_dirichlet_unit = false;
    std::optional<IntPolynomial> minimal_polynomial;  // primitive, lc > 0
};

/// An algebraic number is an integer iff its primitive minimal polynomial is
/// monic, and a unit iff moreover the free term is +-1.
inline UnitClassification classify(const AlgebraicNumberSpec& a) {
    UnitClassification c;
    if (!a.is_algebraic()) return c;
    c.is_algebraic = true;
    IntPolynomial m = primitive_integer_minpoly(a);
    c.is_algebraic_integer = m.leading() == 1;
    c.is_dirichlet_unit = c.is_algebraic_integer && abs_value(m.constant_term()) == 1;
    c.minimal_polynomial = std::move(m);
    return c;
}

struct PrimeSelection {
    Integer p;
    bool all_primes_admissible = false;
    std::string note;
};

/// Smallest prime p with p_a inside (p, t): the smallest prime factor of the
/// leading coefficient of the primitive minimal polynomial of a, which is the
/// free term of that of 1/a.
inline PrimeSelection select_prime(const AlgebraicNumberSpec& a) {
    if (!a.is_algebraic()) return {Integer(2), true, "all primes admissible"};
    IntPolynomial m = primitive_integer_minpoly(a);
    Integer lc = abs_value(m.leading());
    if (lc == 1)
        throw IsAlgebraicInteger(to_string(a) + " is an algebraic integer (minimal polynomial " + to_string(m) +
                                 " is monic); no prime is admissible");
    return {smallest_prime_factor(lc), false, "p divides the leading coefficient of " + to_string(m)};
}

enum class BoundsRoute {
    direct,          // a is not an algebraic integer
    dual,            // a is an algebraic integer, 1/a is not; Poincare duality
    transcendental,  // p_a = 0
};

inline const char* to_string(BoundsRoute r) {
    switch (r) {
    case BoundsRoute::direct: return "direct";
    case BoundsRoute::dual: return "dual";
    case BoundsRoute::transcendental: return "transcendental";
    }
    return "?";
}

struct BoundsReport {
    std::vector<std::int64_t> betti;
    std::string target;
    std::int64_t dim_e = 1;
    std::string a;
    UnitClassification classification;
    BoundsRoute route = BoundsRoute::direct;
    Integer p;
    std::string prime_note;
    std::string ideal_p;
    std::string ideal_q;
    /// c_j >= b_j / dim E.
    std::vector<Rational> weak;
    /// Integrality sharpening of `weak`.
    std::vector<Integer> weak_ceiling;
    /// sum_{i<=j} (-1)^i c_{j-i} >= sum_{i<=j} (-1)^i b_{j-i} / dim E.
    std::vector<Rational> strong;
    std::vector<Integer> strong_ceiling;
};

inline BoundsReport zero_bounds(const BettiVector& b, std::int64_t dim_e, const AlgebraicNumberSpec& a) {
    if (dim_e <= 0) throw PreconditionViolation("dim E must be positive");
    for (auto v : b.values)
        if (v < 0) throw PreconditionViolation("Betti numbers must be nonnegative");
    BoundsReport r;
    r.classification = classify(a);
    if (r.classification.is_dirichlet_unit) throw DirichletUnitRefusal(to_string(*r.classification.minimal_polynomial));
    r.betti = b.values;
    r.target = describe(b.target);
    r.dim_e = dim_e;
    r.a = to_string(a);

    AlgebraicNumberSpec gate = a;
    if (!r.classification.is_algebraic) {
        r.route = BoundsRoute::transcendental;
    } else if (r.classification.is_algebraic_integer) {
        r.route = BoundsRoute::dual;
        gate = a.inverse();
    }
    PrimeSelection sel = select_prime(gate);
    r.p = sel.p;
    r.prime_note = sel.note;
    r.ideal_p = ideal_of(ideal_of_inverse(gate));
    r.ideal_q = ideal_of(prime_at_zero(sel.p));

    Rational alt = 0;
    for (auto v : b.values) {
        Rational w(Integer(static_cast<long>(v)), Integer(static_cast<long>(dim_e)));
        w.canonicalize();
        alt = w - alt;
        r.weak.push_back(w);
        r.weak_ceiling.push_back(ceil_div(w));
        r.strong.push_back(alt);
        r.strong_ceiling.push_back(ceil_div(alt));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Jump points.

enum class JumpStatus { confirmed, rejected, unconfirmed };

inline const char* to_string(JumpStatus s) {
    switch (s) {
    case JumpStatus::confirmed: return "confirmed";
    case JumpStatus::rejected: return "rejected";
    case JumpStatus::unconfirmed: return "unconfirmed";
    }
    return "?";
}

struct JumpFactor {
    IntPolynomial factor;          // in t; roots are the values t = 1/a
    IntPolynomial jump_polynomial; // reversal: roots are the jump points a
    JumpStatus status = JumpStatus::unconfirmed;
    std::optional<std::int64_t> value;  // b_j at the root field
};

struct JumpReport {
    std::size_t degree = 0;
    std::vector<std::int64_t> generic_betti;
    std::int64_t generic_value = 0;
    IntPolynomial candidate;
    std::vector<JumpFactor> factors;
};

/// Candidate = product of the generic-rank minor gcds of d_j and d_{j+1},
/// t-powers removed; irreducible factors of degree <= max_degree are
/// confirmed by specialising at their root field.
inline JumpReport jump_points(const PolyComplex& c, std::size_t j, int max_degree = 8) {
    if (j >= c.ranks.size()) throw PreconditionViolation("degree " + std::to_string(j) + " exceeds the complex");
    JumpReport r;
    r.degree = j;
    r.generic_betti = betti(c, generic_target()).values;
    r.generic_value = r.generic_betti[j];
    IntPolynomial cand(1L);
    for (std::size_t i : {j, j + 1}) {
        const PolyMatrix* d = c.boundary(i);
        if (d == nullptr) continue;
        cand = cand * minor_gcd(*d, generic_rank(*d));
    }
    r.candidate = positive_leading(primitive_part(cand.without_t_power()));

    std::vector<IntPolynomial> irreducible, undetermined;
    for (const auto& piece : squarefree_factors(r.candidate)) {
        if (piece.degree() < 1) continue;
        Factorization f = factor_squarefree(piece, max_degree);
        irreducible.insert(irreducible.end(), f.irreducible.begin(), f.irreducible.end());
        undetermined.insert(undetermined.end(), f.undetermined.begin(), f.undetermined.end());
    }
    for (const auto& f : irreducible) {
        JumpFactor jf;
        jf.factor = f;
        jf.jump_polynomial = positive_leading(f.reversed());
        jf.value = betti(c, root_target(to_rational(f))).values[j];
        jf.status = *jf.value > r.generic_value ? JumpStatus::confirmed : JumpStatus::rejected;
        r.factors.push_back(std::move(jf));
    }
    for (const auto& f : undetermined) {
        JumpFactor jf;
        jf.factor = f;
        jf.jump_polynomial = positive_leading(f.reversed());
        r.factors.push_back(std::move(jf));
    }
    std::sort(r.factors.begin(), r.factors.end(),
              [](const JumpFactor& a, const JumpFactor& b) { return canonical_less(a.factor, b.factor); });
    return r;
}

} // namespace novikov
