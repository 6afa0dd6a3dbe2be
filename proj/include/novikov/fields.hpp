#pragma once

// Coefficient domains as context objects. A domain owns the arithmetic; its
// elements are plain values. Every domain exposes the specialisation
// homomorphism Z[t] -> domain as `from_polynomial`.

#include <concepts>
#include <memory>
#include <string>
#include <variant>

#include "algebraic.hpp"
#include "polynomial.hpp"

namespace novikov {

template <class D>
concept IntegralDomain = requires(const D& d, const typename D::Element& a, const IntPolynomial& p) {
    { d.zero() } -> std::same_as<typename D::Element>;
    { d.one() } -> std::same_as<typename D::Element>;
    { d.add(a, a) } -> std::same_as<typename D::Element>;
    { d.sub(a, a) } -> std::same_as<typename D::Element>;
    { d.mul(a, a) } -> std::same_as<typename D::Element>;
    { d.neg(a) } -> std::same_as<typename D::Element>;
    { d.divide_exact(a, a) } -> std::same_as<typename D::Element>;
    { d.is_zero(a) } -> std::convertible_to<bool>;
    { d.equal(a, a) } -> std::convertible_to<bool>;
    { d.from_polynomial(p) } -> std::same_as<typename D::Element>;
};

template <class F>
concept Field = IntegralDomain<F> && requires(const F& f, const typename F::Element& a) {
    { f.inverse(a) } -> std::same_as<typename F::Element>;
};

/// Z. `from_polynomial` evaluates at t = 0.
struct IntegerRing {
    using Element = Integer;
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element divide_exact(const Element& a, const Element& b) const {
        Element q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_polynomial(const IntPolynomial& p) const { return p.constant_term(); }
};

/// Z[t] itself; exact division is polynomial long division.
struct PolynomialRing {
    using Element = IntPolynomial;
    Element zero() const { return {}; }
    Element one() const { return Element(1L); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element divide_exact(const Element& a, const Element& b) const {
        auto q = novikov::divide_exact(a, b);
        if (!q) throw std::logic_error("inexact division in Z[t]");
        return *q;
    }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_polynomial(const IntPolynomial& p) const { return p; }
};

/// Q with t -> 0: the residue field of the prime ideal (t).
struct RationalField {
    using Element = Rational;
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inverse(const Element& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    Element divide_exact(const Element& a, const Element& b) const { return mul(a, inverse(b)); }
    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_polynomial(const IntPolynomial& p) const { return Rational(p.constant_term()); }
};

/// F_p with t -> 0: the residue field of (p, t). Elements in [0, p).
class PrimeField {
public:
    using Element = Integer;

    explicit PrimeField(Integer p) : p_(std::move(p)) {
        if (!is_prime(p_)) throw PreconditionViolation("prime field modulus " + p_.get_str() + " is not prime");
    }

    const Integer& characteristic() const noexcept { return p_; }

    Element reduce(const Integer& x) const {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p_.get_mpz_t());
        return r;
    }
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return reduce(a + b); }
    Element sub(const Element& a, const Element& b) const { return reduce(a - b); }
    Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
    Element neg(const Element& a) const { return reduce(-a); }
    Element inverse(const Element& a) const {
        Integer r;
        if (a == 0 || mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0)
            throw std::domain_error("inverse of zero");
        return r;
    }
    Element divide_exact(const Element& a, const Element& b) const { return mul(a, inverse(b)); }
    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_polynomial(const IntPolynomial& p) const { return reduce(p.constant_term()); }

private:
    Integer p_;
};

/// Q[t]/(m) for an irreducible monic m, t -> the class of t. Elements are
/// residues of degree < deg m.
class NumberField {
public:
    using Element = RatPolynomial;

    explicit NumberField(RatPolynomial modulus)
        : m_(std::make_shared<const RatPolynomial>(monic(std::move(modulus)))) {
        if (m_->degree() < 1) throw PreconditionViolation("number field modulus must have degree >= 1");
    }

    const RatPolynomial& modulus() const noexcept { return *m_; }
    int degree() const noexcept { return m_->degree(); }

    Element reduce(const RatPolynomial& x) const { return x.degree() < m_->degree() ? x : x % *m_; }
    Element zero() const { return {}; }
    Element one() const { return Element(Rational(1)); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
    Element neg(const Element& a) const { return -a; }
    Element inverse(const Element& a) const {
        if (a.is_zero()) throw std::domain_error("inverse of zero");
        auto [g, s] = gcd_cofactor(a, *m_);
        if (g.degree() != 0) throw NotIrreducible("modulus " + to_string(*m_) + " has a zero divisor");
        return reduce(s);
    }
    Element divide_exact(const Element& a, const Element& b) const { return mul(a, inverse(b)); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_polynomial(const IntPolynomial& p) const { return reduce(to_rational(p)); }

private:
    std::shared_ptr<const RatPolynomial> m_;
};

/// Element of Q(t) as num/den over Z[t], gcd(num, den) = 1 and lc(den) > 0.
struct RationalFunction {
    IntPolynomial num;
    IntPolynomial den{IntPolynomial(1L)};

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// Q(t), the fraction field of Z[t]: the residue field of the zero ideal.
struct RationalFunctionField {
    using Element = RationalFunction;

    static Element normalize(IntPolynomial num, IntPolynomial den) {
        if (den.is_zero()) throw std::domain_error("zero denominator");
        if (num.is_zero()) return {};
        IntPolynomial g = gcd(num, den);
        if (den.leading() < 0) g = -g;
        return {*novikov::divide_exact(num, g), *novikov::divide_exact(den, g)};
    }

    Element zero() const { return {}; }
    Element one() const { return {IntPolynomial(1L), IntPolynomial(1L)}; }
    Element add(const Element& a, const Element& b) const {
        if (a.den == b.den) return normalize(a.num + b.num, a.den);
        return normalize(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
    Element mul(const Element& a, const Element& b) const { return normalize(a.num * b.num, a.den * b.den); }
    Element neg(const Element& a) const { return {-a.num, a.den}; }
    Element inverse(const Element& a) const {
        if (a.num.is_zero()) throw std::domain_error("inverse of zero");
        return normalize(a.den, a.num);
    }
    Element divide_exact(const Element& a, const Element& b) const { return mul(a, inverse(b)); }
    bool is_zero(const Element& a) const { return a.num.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_polynomial(const IntPolynomial& p) const { return {p, IntPolynomial(1L)}; }
};

static_assert(IntegralDomain<IntegerRing>);
static_assert(IntegralDomain<PolynomialRing>);
static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);
static_assert(Field<NumberField>);
static_assert(Field<RationalFunctionField>);

// ---------------------------------------------------------------------------
// Field targets: a specialisation Z[t] -> F identified with a prime ideal.

namespace target {

/// Q(t), t -> t; the zero ideal.
struct Generic {};
/// Q[t]/(m), t -> root of m; the ideal generated by the primitive integer form of m.
struct AtRoot {
    RatPolynomial modulus;
};
/// Q, t -> 0; the ideal (t).
struct RationalsAtZero {};
/// F_p, t -> 0; the ideal (p, t).
struct PrimeAtZero {
    Integer p;
};

} // namespace target

using FieldTarget = std::variant<target::Generic, target::AtRoot, target::RationalsAtZero, target::PrimeAtZero>;

inline FieldTarget generic_target() { return target::Generic{}; }
inline FieldTarget root_target(const RatPolynomial& m) { return target::AtRoot{monic(m)}; }
inline FieldTarget rationals_at_zero() { return target::RationalsAtZero{}; }
inline FieldTarget prime_at_zero(const Integer& p) {
    if (!is_prime(p)) throw PreconditionViolation(p.get_str() + " is not prime");
    return target::PrimeAtZero{p};
}

/// t -> the number itself (Q(t) for transcendental numbers).
inline FieldTarget evaluation_target(const AlgebraicNumberSpec& a) {
    if (!a.is_algebraic()) return generic_target();
    return root_target(a.minimal_polynomial());
}

/// Calls fn(field) with the field context realising the target.
template <class Fn>
decltype(auto) with_field(const FieldTarget& t, Fn&& fn) {
    return std::visit(
        [&](const auto& tag) -> decltype(auto) {
            using T = std::decay_t<decltype(tag)>;
            if constexpr (std::is_same_v<T, target::Generic>) {
                return fn(RationalFunctionField{});
            } else if constexpr (std::is_same_v<T, target::AtRoot>) {
                return fn(NumberField(tag.modulus));
            } else if constexpr (std::is_same_v<T, target::RationalsAtZero>) {
                return fn(RationalField{});
            } else {
                return fn(PrimeField(tag.p));
            }
        },
        t);
}

/// Human-readable field, e.g. `Q[t]/(t^2 - t + 1)`.
inline std::string describe(const FieldTarget& t) {
    return std::visit(
        [](const auto& tag) -> std::string {
            using T = std::decay_t<decltype(tag)>;
            if constexpr (std::is_same_v<T, target::Generic>) return "Q(t)";
            else if constexpr (std::is_same_v<T, target::AtRoot>) return "Q[t]/(" + to_string(primitive_integer(tag.modulus)) + ")";
            else if constexpr (std::is_same_v<T, target::RationalsAtZero>) return "Q (t -> 0)";
            else return "F_" + tag.p.get_str() + " (t -> 0)";
        },
        t);
}

/// The prime ideal of Z[t] that is the kernel of the specialisation.
inline std::string ideal_of(const FieldTarget& t) {
    return std::visit(
        [](const auto& tag) -> std::string {
            using T = std::decay_t<decltype(tag)>;
            if constexpr (std::is_same_v<T, target::Generic>) return "(0)";
            else if constexpr (std::is_same_v<T, target::AtRoot>) return "(" + to_string(primitive_integer(tag.modulus)) + ")";
            else if constexpr (std::is_same_v<T, target::RationalsAtZero>) return "(t)";
            else return "(" + tag.p.get_str() + ", t)";
        },
        t);
}

} // namespace novikov
