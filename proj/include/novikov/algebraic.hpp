#pragma once

#include <optional>
#include <string>

#include "factor.hpp"
#include "polynomial.hpp"

namespace novikov {

/// A nonzero complex number known only through its minimal polynomial over Q,
/// or a transcendental number. No complex root is ever selected: every
/// quantity computed downstream depends only on the field Q[t]/(m).
class AlgebraicNumberSpec {
public:
    static AlgebraicNumberSpec transcendental() { return AlgebraicNumberSpec(); }

    /// From any nonzero rational multiple of the minimal polynomial. Checks
    /// irreducibility for degree <= irreducibility_degree; above that the
    /// input is accepted and `irreducibility_verified()` reports false.
    static AlgebraicNumberSpec from_minimal_polynomial(const RatPolynomial& m, int irreducibility_degree = 8) {
        if (m.degree() < 1) throw PreconditionViolation("minimal polynomial must have degree >= 1");
        if (m.constant_term() == 0) {
            if (m.degree() == 1) throw PreconditionViolation("the number must be nonzero");
            throw NotIrreducible("polynomial " + to_string(m) + " is divisible by t");
        }
        AlgebraicNumberSpec a;
        a.minpoly_ = monic(m);
        switch (check_irreducible(primitive_integer(m), irreducibility_degree)) {
        case Irreducibility::reducible:
            throw NotIrreducible("polynomial " + to_string(primitive_integer(m)) + " is reducible over Q");
        case Irreducibility::irreducible:
            a.verified_ = true;
            break;
        case Irreducibility::unknown:
            a.verified_ = false;
            break;
        }
        return a;
    }

    static AlgebraicNumberSpec rational(const Rational& q) {
        if (q == 0) throw PreconditionViolation("the number must be nonzero");
        return from_minimal_polynomial(RatPolynomial(std::vector<Rational>{Rational(-q), Rational(1)}));
    }

    bool is_algebraic() const noexcept { return minpoly_.has_value(); }
    bool irreducibility_verified() const noexcept { return verified_; }

    /// Monic minimal polynomial over Q.
    const RatPolynomial& minimal_polynomial() const {
        if (!minpoly_) throw PreconditionViolation("transcendental number has no minimal polynomial");
        return *minpoly_;
    }

    /// The inverse number; its minimal polynomial is the reciprocal polynomial.
    AlgebraicNumberSpec inverse() const {
        if (!minpoly_) return *this;
        AlgebraicNumberSpec a;
        a.minpoly_ = monic(minpoly_->reversed());
        a.verified_ = verified_;
        return a;
    }

    friend bool operator==(const AlgebraicNumberSpec& a, const AlgebraicNumberSpec& b) {
        return a.minpoly_ == b.minpoly_;
    }

private:
    AlgebraicNumberSpec() = default;

    std::optional<RatPolynomial> minpoly_;
    bool verified_ = true;
};

/// Content-1 integer polynomial generating the ideal of Z[t] vanishing at a
/// (Gauss's lemma). Transcendental input has no such polynomial.
inline IntPolynomial primitive_integer_minpoly(const AlgebraicNumberSpec& a) {
    if (!a.is_algebraic()) throw PreconditionViolation("no minimal polynomial: the number is transcendental");
    return primitive_integer(a.minimal_polynomial());
}

/// Parses `root:POLY`, `rat:p/q`, `int:n` or `transcendental`.
inline AlgebraicNumberSpec parse_algebraic_number(const std::string& text) {
    if (text == "transcendental") return AlgebraicNumberSpec::transcendental();
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("expected root:POLY, rat:p/q, int:n or transcendental, got '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::string body = text.substr(colon + 1);
    if (kind == "root") return AlgebraicNumberSpec::from_minimal_polynomial(parse_rat_polynomial(body));
    if (kind == "rat") return AlgebraicNumberSpec::rational(parse_rational(body));
    if (kind == "int") return AlgebraicNumberSpec::rational(Rational(parse_integer(body)));
    throw ParseError("unknown number kind '" + kind + "'");
}

inline std::string to_string(const AlgebraicNumberSpec& a) {
    if (!a.is_algebraic()) return "transcendental";
    const auto& m = a.minimal_polynomial();
    if (m.degree() == 1) {
        Rational r = -m.constant_term();
        if (r.get_den() == 1) return "int:" + to_string(r);
        return "rat:" + to_string(r);
    }
    return "root:" + to_string(primitive_integer(m));
}

} // namespace novikov
