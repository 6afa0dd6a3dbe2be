#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bounds.hpp"
#include "complex.hpp"

namespace novikov::random {

using Engine = std::mt19937_64;

struct ComplexShape {
    std::size_t max_degrees = 5;   // number of chain groups
    std::size_t max_rank = 6;
    int max_entry_degree = 3;
    long max_coefficient = 9;
};

inline long uniform(Engine& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntPolynomial random_polynomial(Engine& rng, int max_degree, long max_coefficient) {
    std::vector<Integer> c(static_cast<std::size_t>(uniform(rng, 0, max_degree)) + 1);
    for (auto& x : c) x = uniform(rng, -max_coefficient, max_coefficient);
    return IntPolynomial(std::move(c));
}

inline bool within(const IntPolynomial& p, const ComplexShape& s) {
    if (p.degree() > s.max_entry_degree) return false;
    for (const auto& c : p.coefficients())
        if (abs_value(c) > s.max_coefficient) return false;
    return true;
}

namespace detail {

inline bool column_add(PolyMatrix& m, std::size_t to, std::size_t from, const IntPolynomial& c, const ComplexShape& s) {
    std::vector<IntPolynomial> saved(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        saved[r] = m(r, to);
        m(r, to) = m(r, to) + c * m(r, from);
        if (!within(m(r, to), s)) {
            for (std::size_t k = 0; k <= r; ++k) m(k, to) = saved[k];
            return false;
        }
    }
    return true;
}

inline bool row_add(PolyMatrix& m, std::size_t to, std::size_t from, const IntPolynomial& c, const ComplexShape& s) {
    std::vector<IntPolynomial> saved(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        saved[j] = m(to, j);
        m(to, j) = m(to, j) + c * m(from, j);
        if (!within(m(to, j), s)) {
            for (std::size_t k = 0; k <= j; ++k) m(to, k) = saved[k];
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Split complex C_i = X_i (+) Y_i with d_i = F_i : Y_i -> X_{i-1}, followed
/// by random elementary base changes (multipliers +-1, +-t) that keep every
/// entry inside the shape bounds. d o d = 0 by construction.
inline PolyComplex random_complex(Engine& rng, const ComplexShape& s = {}) {
    std::size_t n = uniform(rng, 0, 9) == 0 ? 1 : static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(s.max_degrees)));
    std::vector<std::size_t> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        long total = uniform(rng, 0, 9) == 0 ? 0 : uniform(rng, 1, static_cast<long>(s.max_rank));
        long lo = i > 0 && total > 0 && x[i - 1] > 0 ? 1 : 0;
        y[i] = i == 0 ? 0 : static_cast<std::size_t>(uniform(rng, std::min(lo, total), total));
        x[i] = static_cast<std::size_t>(total) - y[i];
    }
    PolyComplex c;
    for (std::size_t i = 0; i < n; ++i) c.ranks.push_back(x[i] + y[i]);
    for (std::size_t i = 1; i < n; ++i) {
        PolyMatrix d(c.ranks[i - 1], c.ranks[i]);
        for (std::size_t r = 0; r < x[i - 1]; ++r)
            for (std::size_t k = 0; k < y[i]; ++k)
                if (uniform(rng, 0, 3) != 0) d(r, x[i] + k) = random_polynomial(rng, s.max_entry_degree, s.max_coefficient);
        c.boundaries.push_back(std::move(d));
    }
    const IntPolynomial multipliers[] = {IntPolynomial(1L), IntPolynomial(-1L), IntPolynomial::variable(),
                                         -IntPolynomial::variable()};
    for (std::size_t i = 0; i < n; ++i) {
        if (c.ranks[i] < 2) continue;
        for (std::size_t step = 0; step < 3 * c.ranks[i]; ++step) {
            auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(c.ranks[i]) - 1));
            auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(c.ranks[i]) - 2));
            if (b >= a) ++b;
            const IntPolynomial& mult = multipliers[uniform(rng, 0, 3)];
            // Basis change U = I + mult E_{b,a} on C_i: d_i U, U^{-1} d_{i+1}.
            PolyMatrix* left = i >= 1 ? &c.boundaries[i - 1] : nullptr;
            PolyMatrix* right = i + 1 < n ? &c.boundaries[i] : nullptr;
            PolyMatrix left_saved = left ? *left : PolyMatrix{};
            if (left && !detail::column_add(*left, a, b, mult, s)) continue;
            if (right && !detail::row_add(*right, b, a, -mult, s)) {
                if (left) *left = std::move(left_saved);
                continue;
            }
        }
    }
    validate(c);
    return c;
}

/// Product of random elementary and sign matrices; determinant +-1.
inline IntMatrix random_unimodular(Engine& rng, std::size_t n, std::size_t steps = 6, long max_entry = 3) {
    IntegerRing zz;
    IntMatrix m = IntMatrix::identity(n, zz);
    if (n == 1) {
        m(0, 0) = uniform(rng, 0, 1) ? 1 : -1;
        return m;
    }
    for (std::size_t s = 0; s < steps; ++s) {
        auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
        if (b >= a) ++b;
        long k = uniform(rng, -2, 2);
        if (k == 0) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
            continue;
        }
        IntMatrix saved = m;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            m(a, j) += k * m(b, j);
            ok = abs_value(m(a, j)) <= max_entry;
        }
        if (!ok) m = std::move(saved);
    }
    if (uniform(rng, 0, 1))
        for (std::size_t j = 0; j < n; ++j) m(0, j) = -m(0, j);
    return m;
}

/// Algebraic number of degree <= max_degree whose primitive minimal
/// polynomial has leading coefficient of absolute value >= 2.
inline AlgebraicNumberSpec random_non_integer(Engine& rng, int max_degree = 3, long max_coefficient = 6) {
    while (true) {
        int d = static_cast<int>(uniform(rng, 1, max_degree));
        std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = uniform(rng, -max_coefficient, max_coefficient);
        c.back() = uniform(rng, 2, max_coefficient) * (uniform(rng, 0, 1) ? 1 : -1);
        IntPolynomial p(std::move(c));
        if (p.constant_term() == 0 || content(p) != 1) continue;
        if (check_irreducible(p) != Irreducibility::irreducible) continue;
        return AlgebraicNumberSpec::from_minimal_polynomial(to_rational(p));
    }
}

} // namespace novikov::random
