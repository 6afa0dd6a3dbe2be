#pragma once

// Integer polynomials in lambda (Poincare polynomials and their differences)
// and the partial order P >= Q  <=>  P - Q = (1 + lambda) T, T >= 0.

#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "polynomial.hpp"

namespace novikov {

/// Coefficients low degree first, no trailing zeros.
using LambdaPolynomial = std::vector<std::int64_t>;

inline LambdaPolynomial trimmed(LambdaPolynomial p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline std::int64_t coeff_at(std::span<const std::int64_t> p, std::size_t i) { return i < p.size() ? p[i] : 0; }

/// Canonical text with `lambda` as the indeterminate.
inline std::string to_string(const LambdaPolynomial& p, const std::string& var = "lambda") {
    std::vector<Integer> v;
    for (auto c : p) v.emplace_back(static_cast<long>(c));
    return to_string(IntPolynomial(std::move(v)), var);
}

/// Parses a comma-separated coefficient list, lowest degree first: "0,1,1".
inline LambdaPolynomial parse_coefficient_list(const std::string& text) {
    LambdaPolynomial out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        Integer v = parse_integer(t);
        if (!v.fits_slong_p()) throw ParseError("coefficient out of range: " + t);
        out.push_back(v.get_si());
    }
    if (out.empty()) throw ParseError("empty coefficient list");
    return trimmed(std::move(out));
}

struct OrderVerdict {
    bool holds = false;
    /// T with P - Q = (1 + lambda) T whenever the difference is divisible,
    /// whether or not T is nonnegative.
    std::optional<LambdaPolynomial> quotient;
};

/// P >= Q by dividing P - Q by (1 + lambda) from the top coefficient down.
inline OrderVerdict dominates(std::span<const std::int64_t> p, std::span<const std::int64_t> q) {
    std::size_t n = std::max(p.size(), q.size());
    LambdaPolynomial delta(n);
    for (std::size_t i = 0; i < n; ++i) delta[i] = coeff_at(p, i) - coeff_at(q, i);
    delta = trimmed(std::move(delta));
    if (delta.empty()) return {true, LambdaPolynomial{}};
    std::size_t d = delta.size() - 1;
    if (d == 0) return {false, std::nullopt};
    LambdaPolynomial t(d);
    t[d - 1] = delta[d];
    for (std::size_t k = d - 1; k >= 1; --k) t[k - 1] = delta[k] - t[k];
    if (delta[0] - t[0] != 0) return {false, std::nullopt};
    bool nonneg = true;
    for (auto c : t) nonneg = nonneg && c >= 0;
    return {nonneg, trimmed(std::move(t))};
}

/// Result of checking sum_{j<=r} (-1)^j p_{r-j} >= sum_{j<=r} (-1)^j q_{r-j}.
struct MorseCheck {
    bool holds = true;
    std::optional<std::size_t> first_failure;
};

/// The same order through alternating partial sums, r = 0 .. max degree + 1;
/// the last index covers the stabilised tail, where the sums alternate sign.
inline MorseCheck morse_inequalities(std::span<const std::int64_t> p, std::span<const std::int64_t> q) {
    std::size_t n = std::max(p.size(), q.size());
    std::int64_t sp = 0, sq = 0;
    for (std::size_t r = 0; r <= n; ++r) {
        sp = coeff_at(p, r) - sp;
        sq = coeff_at(q, r) - sq;
        if (sp < sq) return {false, r};
    }
    return {true, std::nullopt};
}

/// Coefficient reversal about degree n.
inline LambdaPolynomial duality_transform(std::span<const std::int64_t> p, std::size_t n) {
    LambdaPolynomial t = trimmed(LambdaPolynomial(p.begin(), p.end()));
    if (t.empty()) return {};
    if (t.size() - 1 > n)
        throw DegreeOverflow("degree " + std::to_string(t.size() - 1) + " exceeds dimension " + std::to_string(n));
    LambdaPolynomial out(n + 1, 0);
    for (std::size_t i = 0; i < t.size(); ++i) out[n - i] = t[i];
    return trimmed(std::move(out));
}

} // namespace novikov
