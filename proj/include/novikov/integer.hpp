#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace novikov {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    // 2 = certainly prime, 1 = probably prime (BPSW plus Miller-Rabin rounds).
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

/// Smallest prime factor of |n|, n >= 2. Trial division, falling back to a
/// primality test so that a large prime cofactor terminates quickly.
inline Integer smallest_prime_factor(const Integer& n) {
    Integer m = abs_value(n);
    if (m < 2) throw std::domain_error("smallest_prime_factor of a unit or zero");
    if (mpz_even_p(m.get_mpz_t())) return 2;
    if (is_prime(m)) return m;
    for (Integer d = 3; d * d <= m; d += 2) {
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) return d;
    }
    return m;
}

/// Prime factorisation of |n| by trial division up to `bound`. Returns false
/// when a cofactor larger than bound^2 remains that is not provably prime.
inline bool factor_integer(const Integer& n, std::vector<std::pair<Integer, unsigned>>& out,
                           unsigned long bound = 2000000UL) {
    out.clear();
    Integer m = abs_value(n);
    if (m == 0) return false;
    auto take = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    take(Integer(2));
    for (unsigned long d = 3; d <= bound; d += 2) {
        if (m == 1) break;
        Integer dd(d);
        if (dd * dd > m) break;
        take(dd);
    }
    if (m == 1) return true;
    if (is_prime(m)) {
        out.emplace_back(m, 1);
        return true;
    }
    Integer b(bound);
    if (m <= b * b) {
        out.emplace_back(m, 1);
        return true;
    }
    return false;
}

/// All positive divisors of n != 0, ascending. Empty if n cannot be factored.
inline std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<std::pair<Integer, unsigned>> fac;
    if (!factor_integer(n, fac)) return {};
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        std::size_t current = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < current; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline Integer ceil_div(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Parses a signed decimal integer; the whole string must be consumed.
inline Integer parse_integer(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i == s.size()) throw ParseError("expected integer, got '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') throw ParseError("expected integer, got '" + s + "'");
    }
    Integer v(s.substr(i), 10);
    return neg ? Integer(-v) : v;
}

/// Parses `p/q` or `n`.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    std::string den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
        throw ParseError("denominator must be unsigned in '" + s + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return make_rational(num, den);
}

} // namespace novikov
