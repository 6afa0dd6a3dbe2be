#pragma once

// Small-degree factorisation over Z[t]: square-free decomposition, a
// degree-pattern sieve from distinct-degree factorisation modulo small primes,
// and Kronecker's interpolation search for the remaining candidate degrees.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "polynomial.hpp"

namespace novikov {

/// Pairwise coprime square-free primitive factors of p (Yun), ordered by
/// multiplicity. Constants and t-free-ness are left to the caller.
inline std::vector<IntPolynomial> squarefree_factors(const IntPolynomial& p) {
    std::vector<IntPolynomial> out;
    if (p.degree() < 1) return out;
    RatPolynomial f = monic(to_rational(p));
    RatPolynomial a = gcd(f, f.derivative());
    RatPolynomial b = divmod(f, a).first;
    RatPolynomial c = divmod(f.derivative(), a).first;
    RatPolynomial d = c - b.derivative();
    while (b.degree() > 0) {
        RatPolynomial ai = gcd(b, d);
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = c - b.derivative();
        if (ai.degree() > 0) out.push_back(primitive_integer(ai));
    }
    return out;
}

namespace detail {

using ModPoly = std::vector<std::uint64_t>;

inline void mod_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

inline ModPoly mod_reduce(const IntPolynomial& f, std::uint64_t p) {
    ModPoly r;
    Integer pp(static_cast<unsigned long>(p));
    for (const auto& c : f.coefficients()) {
        Integer m;
        mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
        r.push_back(m.get_ui());
    }
    mod_trim(r);
    return r;
}

inline ModPoly mod_sub(ModPoly a, const ModPoly& b, std::uint64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    mod_trim(a);
    return a;
}

inline ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
    std::uint64_t inv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back() * inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
        mod_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline ModPoly mod_div(ModPoly a, const ModPoly& b, std::uint64_t p) {
    std::uint64_t inv = mod_inv(b.back(), p);
    ModPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t c = a.back() * inv % p;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
        mod_trim(a);
    }
    mod_trim(q);
    return q;
}

inline ModPoly mod_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    mod_trim(r);
    return mod_rem(std::move(r), m, p);
}

inline ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    while (!b.empty()) {
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Degrees of the irreducible factors of f modulo p, or nullopt when p is
/// unsuitable (divides the leading coefficient or f is not square-free mod p).
inline std::optional<std::vector<int>> factor_degrees_mod(const IntPolynomial& f, std::uint64_t p) {
    ModPoly g = mod_reduce(f, p);
    if (static_cast<int>(g.size()) - 1 != f.degree()) return std::nullopt;
    ModPoly dg;
    for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * (i % p) % p);
    mod_trim(dg);
    if (dg.empty() || mod_gcd(g, dg, p).size() != 1) return std::nullopt;
    std::vector<int> degrees;
    ModPoly x{0, 1};
    ModPoly h = mod_rem(x, g, p);
    for (int i = 1; 2 * i <= static_cast<int>(g.size()) - 1; ++i) {
        // h <- h^p mod g
        ModPoly acc{1};
        ModPoly base = h;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) acc = mod_mulmod(acc, base, g, p);
            base = mod_mulmod(base, base, g, p);
            e >>= 1;
        }
        h = acc;
        ModPoly common = mod_gcd(g, mod_sub(h, x, p), p);
        int dc = static_cast<int>(common.size()) - 1;
        if (dc > 0) {
            for (int k = 0; k < dc / i; ++k) degrees.push_back(i);
            g = mod_div(g, common, p);
            h = mod_rem(h, g, p);
        }
    }
    if (g.size() > 1) degrees.push_back(static_cast<int>(g.size()) - 1);
    return degrees;
}

/// Degrees d in [1, deg f - 1] that a factor over Z could have, given the
/// factorisation patterns modulo several small primes.
inline std::set<int> admissible_factor_degrees(const IntPolynomial& f) {
    int n = f.degree();
    std::set<int> allowed;
    for (int d = 1; d < n; ++d) allowed.insert(d);
    static constexpr std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    int used = 0;
    for (std::uint64_t p : primes) {
        if (allowed.empty() || used >= 7) break;
        auto degs = factor_degrees_mod(f, p);
        if (!degs) continue;
        ++used;
        std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
        reach[0] = 1;
        for (int d : *degs)
            for (int s = n; s >= d; --s)
                if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = 1;
        for (auto it = allowed.begin(); it != allowed.end();)
            it = reach[static_cast<std::size_t>(*it)] ? std::next(it) : allowed.erase(it);
    }
    return allowed;
}

/// Integer polynomial of degree <= xs.size()-1 through (xs[k], ys[k]), if
/// the interpolant has integer coefficients.
inline std::optional<IntPolynomial> integer_interpolant(const std::vector<long>& xs, const std::vector<Integer>& ys) {
    std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t k = n - 1; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / Rational(xs[k] - xs[k - level]);
    RatPolynomial acc(dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        acc = acc * RatPolynomial(std::vector<Rational>{Rational(-xs[k]), Rational(1)}) + RatPolynomial(dd[k]);
    }
    std::vector<Integer> v;
    for (const auto& c : acc.coefficients()) {
        if (c.get_den() != 1) return std::nullopt;
        v.push_back(c.get_num());
    }
    return IntPolynomial(std::move(v));
}

} // namespace detail

enum class FactorSearch { irreducible, found, unknown };

struct FactorSearchResult {
    FactorSearch status = FactorSearch::unknown;
    IntPolynomial factor;  // set when status == found
};

/// Looks for a proper factor of a primitive polynomial f of degree <= max_degree.
/// `combination_budget` caps the Kronecker enumeration; exceeding it yields unknown.
inline FactorSearchResult find_proper_factor(const IntPolynomial& f, int max_degree = 8,
                                             std::size_t combination_budget = 400000) {
    int n = f.degree();
    if (n <= 1) return {FactorSearch::irreducible, {}};
    if (n > max_degree) return {FactorSearch::unknown, {}};
    if (f.constant_term() == 0) return {FactorSearch::found, IntPolynomial::variable()};
    std::set<int> degrees = detail::admissible_factor_degrees(f);
    std::vector<int> todo;
    for (int d : degrees)
        if (2 * d <= n) todo.push_back(d);
    if (todo.empty()) return {FactorSearch::irreducible, {}};

    // Evaluation points ranked by how few divisors the value has.
    struct Point {
        long x;
        Integer value;
        std::vector<Integer> divisors;
    };
    std::vector<Point> points;
    for (long k = 0; points.size() < 24 && k < 200; ++k) {
        long x = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
        Integer v = f.evaluate(Integer(x));
        if (v == 0) {
            return {FactorSearch::found, IntPolynomial(std::vector<Integer>{Integer(-x), Integer(1)})};
        }
        auto divs = positive_divisors(v);
        if (divs.empty()) continue;
        points.push_back({x, v, std::move(divs)});
    }
    std::stable_sort(points.begin(), points.end(),
                     [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });

    bool exhausted_budget = false;
    for (int d : todo) {
        std::size_t need = static_cast<std::size_t>(d) + 1;
        if (points.size() < need) {
            exhausted_budget = true;
            continue;
        }
        std::vector<long> xs;
        std::vector<const std::vector<Integer>*> divs;
        for (std::size_t k = 0; k < need; ++k) {
            xs.push_back(points[k].x);
            divs.push_back(&points[k].divisors);
        }
        // Choice k: index into +-divisors; the first value is taken positive.
        std::size_t total = 1;
        bool too_many = false;
        for (std::size_t k = 0; k < need; ++k) {
            std::size_t options = divs[k]->size() * (k == 0 ? 1 : 2);
            if (total > combination_budget / options) {
                too_many = true;
                break;
            }
            total *= options;
        }
        if (too_many) {
            exhausted_budget = true;
            continue;
        }
        std::vector<Integer> ys(need);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (std::size_t k = 0; k < need; ++k) {
                std::size_t options = divs[k]->size() * (k == 0 ? 1 : 2);
                std::size_t choice = rest % options;
                rest /= options;
                const Integer& mag = (*divs[k])[choice % divs[k]->size()];
                ys[k] = (choice >= divs[k]->size()) ? Integer(-mag) : mag;
            }
            auto g = detail::integer_interpolant(xs, ys);
            if (!g || g->degree() != d) continue;
            if (divide_exact(f, *g)) return {FactorSearch::found, primitive_part(*g)};
        }
    }
    return {exhausted_budget ? FactorSearch::unknown : FactorSearch::irreducible, {}};
}

struct Factorization {
    std::vector<IntPolynomial> irreducible;   // proven irreducible, primitive, lc > 0
    std::vector<IntPolynomial> undetermined;  // square-free pieces not split further
};

/// Irreducible factors of a square-free primitive polynomial, as far as the
/// degree budget allows. Output sorted by degree, then coefficients.
inline Factorization factor_squarefree(const IntPolynomial& f, int max_degree = 8) {
    Factorization out;
    std::vector<IntPolynomial> work{primitive_part(f)};
    while (!work.empty()) {
        IntPolynomial g = std::move(work.back());
        work.pop_back();
        if (g.degree() < 1) continue;
        auto r = find_proper_factor(g, max_degree);
        switch (r.status) {
        case FactorSearch::irreducible:
            out.irreducible.push_back(g);
            break;
        case FactorSearch::unknown:
            out.undetermined.push_back(g);
            break;
        case FactorSearch::found:
            work.push_back(r.factor);
            work.push_back(primitive_part(*divide_exact(g, r.factor)));
            break;
        }
    }
    auto by_canon = [](const IntPolynomial& a, const IntPolynomial& b) { return canonical_less(a, b); };
    std::sort(out.irreducible.begin(), out.irreducible.end(), by_canon);
    std::sort(out.undetermined.begin(), out.undetermined.end(), by_canon);
    return out;
}

enum class Irreducibility { irreducible, reducible, unknown };

inline Irreducibility check_irreducible(const IntPolynomial& f, int max_degree = 8) {
    IntPolynomial g = primitive_part(f);
    if (g.degree() < 1) return Irreducibility::reducible;
    if (gcd(g, g.derivative()).degree() > 0) return Irreducibility::reducible;
    switch (find_proper_factor(g, max_degree).status) {
    case FactorSearch::irreducible: return Irreducibility::irreducible;
    case FactorSearch::found: return Irreducibility::reducible;
    default: return Irreducibility::unknown;
    }
}

} // namespace novikov
