#pragma once

// Elements of Z[H], H = Z^r written additively, with a class xi in Q^r.
// The xi-degree of p is the largest level <xi, h> whose coefficient sum is
// nonzero; that sum is the xi-top coefficient.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "polynomial.hpp"

namespace novikov {

using Lattice = std::vector<long>;
using XiClass = std::vector<Rational>;

/// Canonical form: sorted lattice points, no zero coefficients.
class XiPolynomial {
public:
    XiPolynomial() = default;
    explicit XiPolynomial(std::size_t rank) : rank_(rank) {}

    XiPolynomial(std::size_t rank, const std::vector<std::pair<Lattice, Integer>>& terms) : rank_(rank) {
        for (const auto& [h, c] : terms) add_term(h, c);
    }

    /// sum c_k h^k in rank 1.
    static XiPolynomial from_univariate(const IntPolynomial& p) {
        XiPolynomial out(1);
        for (int k = 0; k <= p.degree(); ++k) out.add_term({k}, p.coeff(static_cast<std::size_t>(k)));
        return out;
    }

    void add_term(const Lattice& h, const Integer& c) {
        if (h.size() != rank_) throw PreconditionViolation("lattice point has wrong rank");
        if (c == 0) return;
        auto& slot = terms_[h];
        slot += c;
        if (slot == 0) terms_.erase(h);
    }

    std::size_t rank() const noexcept { return rank_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Lattice, Integer>& terms() const noexcept { return terms_; }

    friend XiPolynomial operator+(const XiPolynomial& a, const XiPolynomial& b) {
        check_rank(a, b);
        XiPolynomial out = a;
        for (const auto& [h, c] : b.terms_) out.add_term(h, c);
        return out;
    }

    friend XiPolynomial operator-(const XiPolynomial& a, const XiPolynomial& b) {
        check_rank(a, b);
        XiPolynomial out = a;
        for (const auto& [h, c] : b.terms_) out.add_term(h, -c);
        return out;
    }

    friend XiPolynomial operator*(const XiPolynomial& a, const XiPolynomial& b) {
        check_rank(a, b);
        XiPolynomial out(a.rank_);
        for (const auto& [h1, c1] : a.terms_)
            for (const auto& [h2, c2] : b.terms_) {
                Lattice h(a.rank_);
                for (std::size_t i = 0; i < a.rank_; ++i) h[i] = h1[i] + h2[i];
                out.add_term(h, c1 * c2);
            }
        return out;
    }

    friend bool operator==(const XiPolynomial& a, const XiPolynomial& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    static void check_rank(const XiPolynomial& a, const XiPolynomial& b) {
        if (a.rank_ != b.rank_) throw PreconditionViolation("lattice ranks differ");
    }

    std::size_t rank_ = 0;
    std::map<Lattice, Integer> terms_;
};

inline std::string to_string(const XiPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [h, c] : p.terms()) {
        std::string point = "h(";
        for (std::size_t i = 0; i < h.size(); ++i) point += (i ? "," : "") + std::to_string(h[i]);
        point += ")";
        bool neg = c < 0;
        Integer a = abs_value(c);
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        s += (a == 1 ? "" : a.get_str() + "*") + point;
    }
    return s;
}

inline Rational xi_level(const Lattice& h, const XiClass& xi) {
    if (h.size() != xi.size()) throw PreconditionViolation("class and lattice ranks differ");
    Rational s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) s += xi[i] * h[i];
    return s;
}

struct XiTop {
    Rational degree;
    Integer coefficient;
};

/// Largest level with nonzero coefficient sum; AllLevelsCancel otherwise.
inline XiTop xi_degree_and_top(const XiPolynomial& p, const XiClass& xi) {
    if (p.is_zero()) throw PreconditionViolation("the zero element has no xi-degree");
    std::map<Rational, Integer> levels;
    for (const auto& [h, c] : p.terms()) levels[xi_level(h, xi)] += c;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
        if (it->second != 0) return {it->first, it->second};
    throw AllLevelsCancel("every xi-level of " + to_string(p) + " sums to zero");
}

inline Rational xi_degree(const XiPolynomial& p, const XiClass& xi) { return xi_degree_and_top(p, xi).degree; }
inline Integer xi_top(const XiPolynomial& p, const XiClass& xi) { return xi_degree_and_top(p, xi).coefficient; }

struct XiCertificate {
    XiPolynomial element;
    Rational degree;
    Integer top;
    std::string derivation;
};

struct XiUnitVerdict {
    std::optional<XiCertificate> certificate;  // empty means unknown
    std::string note;
};

/// Searches the ideal generated by `gens` for an element with xi-top +-1:
/// the generators, their products of up to `max_word_length` factors, and
/// pairwise sums and differences. Never concludes a negative answer.
inline XiUnitVerdict xi_unit_certificate(const std::vector<XiPolynomial>& gens, const XiClass& xi,
                                         std::size_t max_word_length = 3) {
    if (gens.empty()) throw PreconditionViolation("at least one generator is required");
    auto try_element = [&](const XiPolynomial& p, const std::string& how) -> std::optional<XiCertificate> {
        if (p.is_zero()) return std::nullopt;
        try {
            XiTop t = xi_degree_and_top(p, xi);
            if (abs_value(t.coefficient) == 1) return XiCertificate{p, t.degree, t.coefficient, how};
        } catch (const AllLevelsCancel&) {
        }
        return std::nullopt;
    };

    for (std::size_t i = 0; i < gens.size(); ++i)
        if (auto c = try_element(gens[i], "g" + std::to_string(i + 1))) return {c, "generator"};

    // Rank one with a nonzero class: levels of distinct monomials differ, so
    // v(fg) = v(f) v(g) and a principal ideal is decided by its generator.
    if (gens.size() == 1 && xi.size() == 1 && xi[0] != 0) {
        Integer top;
        try {
            top = xi_top(gens[0], xi);
        } catch (const AllLevelsCancel&) {
            return {std::nullopt, "unknown: generator has no xi-top coefficient"};
        }
        return {std::nullopt, "unknown: every multiple of the generator has xi-top divisible by " +
                                  abs_value(top).get_str()};
    }

    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            std::string a = "g" + std::to_string(i + 1), b = "g" + std::to_string(j + 1);
            if (auto c = try_element(gens[i] + gens[j], a + " + " + b)) return {c, "sum"};
            if (auto c = try_element(gens[i] - gens[j], a + " - " + b)) return {c, "difference"};
        }

    // Products of generators, non-decreasing index sequences up to the budget.
    std::vector<std::pair<std::vector<std::size_t>, XiPolynomial>> layer;
    for (std::size_t i = 0; i < gens.size(); ++i) layer.push_back({{i}, gens[i]});
    for (std::size_t len = 2; len <= max_word_length; ++len) {
        std::vector<std::pair<std::vector<std::size_t>, XiPolynomial>> next;
        for (const auto& [word, p] : layer)
            for (std::size_t i = word.back(); i < gens.size(); ++i) {
                auto w = word;
                w.push_back(i);
                XiPolynomial q = p * gens[i];
                std::string how;
                for (auto k : w) how += (how.empty() ? "" : "*") + ("g" + std::to_string(k + 1));
                if (auto c = try_element(q, how)) return {c, "product"};
                next.push_back({std::move(w), std::move(q)});
            }
        layer = std::move(next);
    }
    return {std::nullopt, "unknown: no certificate within word length " + std::to_string(max_word_length)};
}

} // namespace novikov
