#pragma once

// Reference computations used only by the tests. They avoid the library's
// elimination and polynomial code so that agreement means something.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Poly = std::vector<Q>;  // low to high
using Grid = std::vector<std::vector<Z>>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Characteristic polynomial det(tI - B), Faddeev-LeVerrier.
inline Poly charpoly(const Grid& b) {
    std::size_t n = b.size();
    std::vector<std::vector<Q>> m(n, std::vector<Q>(n, 0));
    Poly c(n + 1, 0);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = B M_{k-1} + c_{n-k+1} I, with M_0 = 0.
        std::vector<std::vector<Q>> next(n, std::vector<Q>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Q s = 0;
                for (std::size_t l = 0; l < n; ++l) s += Q(b[i][l]) * m[l][j];
                next[i][j] = s + (i == j ? c[n - k + 1] : Q(0));
            }
        m = next;
        Q tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += Q(b[i][l]) * m[l][i];
        c[n - k] = -tr / Q(static_cast<long>(k));
    }
    return c;
}

/// det(I - tB) = t^n charpoly(1/t): the reversed characteristic polynomial.
inline Poly det_one_minus_tb(const Grid& b) {
    Poly c = charpoly(b);
    Poly r(c.rbegin(), c.rend());
    trim(r);
    return r;
}

/// Remainder of a by b in Q[t] by schoolbook division.
inline Poly remainder(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (a.size() >= b.size() && !a.empty()) {
        Q f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline bool divides(const Poly& b, const Poly& a) { return remainder(a, b).empty(); }

/// Rank over Q by Gaussian elimination with partial pivoting on the largest
/// absolute value (a different pivot rule from the library).
inline std::size_t rank_q(std::vector<std::vector<Q>> a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = r;
        for (std::size_t i = r; i < rows; ++i)
            if (abs(a[i][c]) > abs(a[best][c])) best = i;
        if (a[best][c] == 0) continue;
        std::swap(a[best], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Q f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Companion matrix of a monic integer polynomial given low to high.
inline Grid companion(const std::vector<long>& monic) {
    std::size_t n = monic.size() - 1;
    Grid c(n, std::vector<Z>(n, 0));
    for (std::size_t i = 1; i < n; ++i) c[i][i - 1] = 1;
    for (std::size_t i = 0; i < n; ++i) c[i][n - 1] = -monic[i];
    return c;
}

inline Grid block_diagonal(const Grid& a, const Grid& b) {
    std::size_t n = a.size() + b.size();
    Grid out(n, std::vector<Z>(n, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[i][j];
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[a.size() + i][a.size() + j] = b[i][j];
    return out;
}

/// B -> E B E^-1 for random elementary E = I + k e_{ab}; entries kept small.
inline Grid conjugate_randomly(Grid b, std::mt19937_64& rng, int steps = 3) {
    std::size_t n = b.size();
    if (n < 2) return b;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> kd(-1, 1);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = idx(rng), c = idx(rng);
        int k = kd(rng);
        if (a == c || k == 0) continue;
        Grid t = b;
        for (std::size_t j = 0; j < n; ++j) t[a][j] += k * t[c][j];
        for (std::size_t i = 0; i < n; ++i) t[i][c] -= k * t[i][a];
        bool small = true;
        for (const auto& row : t)
            for (const auto& x : row) small = small && abs(x) <= 6;
        if (small) b = t;
    }
    return b;
}

struct Run {
    int exit_code = -1;
    std::string output;
};

/// Runs a shell command, capturing stdout and stderr together.
inline Run run(const std::string& cmd) {
    Run r;
    FILE* f = popen((cmd + " 2>&1").c_str(), "r");
    if (!f) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.output.append(buf.data(), n);
    int status = pclose(f);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace oracle
