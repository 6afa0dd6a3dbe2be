#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace novikov {

/// Dense univariate polynomial, coefficients stored low degree first.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has empty support and degree -1.
template <class C>
class Polynomial {
public:
    using Coefficient = C;

    Polynomial() = default;
    explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(const C& constant) {  // NOLINT: implicit lift of scalars is intended
        if (constant != 0) coeffs_.push_back(constant);
    }
    Polynomial(long constant) : Polynomial(C(constant)) {}  // NOLINT

    static Polynomial monomial(const C& c, std::size_t k) {
        if (c == 0) return {};
        std::vector<C> v(k + 1, C(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial variable() { return monomial(C(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<C>& coefficients() const noexcept { return coeffs_; }

    C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }
    C leading() const { return coeffs_.empty() ? C(0) : coeffs_.back(); }
    C constant_term() const { return coeff(0); }

    /// Multiplicity of t as a factor (0 for the zero polynomial).
    std::size_t lowest_degree() const {
        std::size_t k = 0;
        while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
        return coeffs_.empty() ? 0 : k;
    }

    C evaluate(const C& x) const {
        C acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<C> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * C(static_cast<long>(i));
        return Polynomial(std::move(v));
    }

    /// Reciprocal polynomial t^deg * p(1/t).
    Polynomial reversed() const {
        std::vector<C> v(coeffs_.rbegin(), coeffs_.rend());
        return Polynomial(std::move(v));
    }

    /// Divides out t^k where k = lowest_degree().
    Polynomial without_t_power() const {
        std::size_t k = lowest_degree();
        return Polynomial(std::vector<C>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const C& s, Polynomial p) {
        if (s == 0) return {};
        for (auto& c : p.coeffs_) c *= s;
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Degree first, then coefficients compared from the top down.
    friend bool canonical_less(const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            auto k = static_cast<std::size_t>(i);
            if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
        }
        return false;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

// ---------------------------------------------------------------------------
// Q[t]: Euclidean division.

inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    int db = b.degree();
    if (a.degree() < db) return {RatPolynomial{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational lc = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        Rational c = rem[static_cast<std::size_t>(k)] / lc;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
    }
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

inline RatPolynomial operator%(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

inline RatPolynomial monic(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    return Rational(1) / p.leading() * p;
}

/// Monic gcd over Q.
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
    while (!b.is_zero()) {
        RatPolynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Extended Euclid over Q: returns (g, s) with s*a == g (mod m), g monic gcd.
inline std::pair<RatPolynomial, RatPolynomial> gcd_cofactor(const RatPolynomial& a, const RatPolynomial& m) {
    RatPolynomial r0 = a, r1 = m, s0(Rational(1)), s1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPolynomial s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    Rational inv = Rational(1) / r0.leading();
    return {inv * r0, inv * s0};
}

// ---------------------------------------------------------------------------
// Z[t]: content, primitive part, pseudo-division, exact division and gcd.

inline Integer content(const IntPolynomial& p) {
    Integer g = 0;
    for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/// p divided by its content, with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Integer c = content(p);
    if (p.leading() < 0) c = -c;
    std::vector<Integer> v = p.coefficients();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPolynomial(std::move(v));
}

inline IntPolynomial positive_leading(const IntPolynomial& p) { return p.leading() < 0 ? -p : p; }

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.emplace_back(c);
    return RatPolynomial(std::move(v));
}

/// Clears denominators: the content-1 integer polynomial proportional to p,
/// leading coefficient positive.
inline IntPolynomial primitive_integer(const RatPolynomial& p) {
    Integer l = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.push_back(c.get_num() * (l / c.get_den()));
    return primitive_part(IntPolynomial(std::move(v)));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[t].
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    int db = b.degree();
    std::vector<Integer> r = a.coefficients();
    const Integer lc = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        Integer top = r[static_cast<std::size_t>(k)];
        for (auto& x : r) x *= lc;
        if (top != 0) {
            for (int j = 0; j <= db; ++j)
                r[static_cast<std::size_t>(k - db + j)] -= top * b.coeff(static_cast<std::size_t>(j));
        }
        r.pop_back();
    }
    return IntPolynomial(std::move(r));
}

/// a / b in Z[t] if b divides a exactly, nullopt otherwise.
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return IntPolynomial{};
    int db = b.degree();
    if (a.degree() < db) return std::nullopt;
    std::vector<Integer> rem = a.coefficients();
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Integer lc = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Integer& top = rem[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        Integer c = top / lc;
        quot[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

/// gcd in the UFD Z[t]: gcd of contents times the primitive PRS gcd,
/// normalised to a positive leading coefficient. gcd(0, 0) = 0.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return positive_leading(b);
    if (b.is_zero()) return positive_leading(a);
    Integer c;
    Integer ca = content(a), cb = content(b);
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPolynomial x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.is_zero() ? r : primitive_part(r);
    }
    return c * primitive_part(x);
}

// ---------------------------------------------------------------------------
// Text form. Grammar: terms `[sign] [coeff] [*] [var [^ k]]`, whitespace free.

namespace detail {

template <class C>
std::string coefficient_text(const C& c) {
    return to_string(c);
}

} // namespace detail

/// Canonical text, highest degree first: `2*t^2 - t + 1`, `-t`, `7`, `0`.
template <class C>
std::string to_string(const Polynomial<C>& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        C c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool negative = c < 0;
        C mag = negative ? C(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string monom;
        if (k >= 1) monom = var;
        if (k >= 2) monom += "^" + std::to_string(k);
        if (k == 0) {
            out += detail::coefficient_text(mag);
        } else if (mag == 1) {
            out += monom;
        } else {
            out += detail::coefficient_text(mag) + "*" + monom;
        }
    }
    return out;
}

namespace detail {

/// Shared term scanner; `allow_fractions` enables `p/q` coefficients.
inline RatPolynomial parse_polynomial_text(const std::string& text, const std::string& var, bool allow_fractions) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty polynomial");
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("cannot parse polynomial '" + text + "': " + why);
    };
    RatPolynomial result;
    std::size_t i = 0;
    bool first = true;
    auto read_digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    };
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (!first) {
            throw fail("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        Rational coeff(1);
        bool have_coeff = false;
        std::string digits = read_digits();
        if (!digits.empty()) {
            have_coeff = true;
            coeff = Rational(Integer(digits, 10));
            if (i < s.size() && s[i] == '/') {
                if (!allow_fractions) throw fail("non-integer coefficient");
                ++i;
                std::string den = read_digits();
                if (den.empty()) throw fail("missing denominator");
                Integer d(den, 10);
                if (d == 0) throw fail("zero denominator");
                coeff = make_rational(Integer(digits, 10), d);
            }
        }
        std::size_t power = 0;
        bool have_var = false;
        if (have_coeff && i < s.size() && s[i] == '*') {
            ++i;
            if (s.compare(i, var.size(), var) != 0) throw fail("expected '" + var + "' after '*'");
        }
        if (s.compare(i, var.size(), var) == 0) {
            have_var = true;
            i += var.size();
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e = read_digits();
                if (e.empty()) throw fail("missing exponent");
                if (e.size() > 6) throw fail("exponent too large");
                power = static_cast<std::size_t>(std::stoul(e));
            }
        }
        if (!have_coeff && !have_var) throw fail("unexpected character at position " + std::to_string(i));
        if (negative) coeff = -coeff;
        result += RatPolynomial::monomial(coeff, power);
    }
    return result;
}

} // namespace detail

inline IntPolynomial parse_int_polynomial(const std::string& text, const std::string& var = "t") {
    RatPolynomial r = detail::parse_polynomial_text(text, var, false);
    std::vector<Integer> v;
    for (const auto& c : r.coefficients()) v.push_back(c.get_num());
    return IntPolynomial(std::move(v));
}

/// Variant accepting `p/q` coefficients, for minimal polynomials.
inline RatPolynomial parse_rat_polynomial(const std::string& text, const std::string& var = "t") {
    return detail::parse_polynomial_text(text, var, true);
}

} // namespace novikov
