#include <gtest/gtest.h>

#include <novikov/novikov.hpp>

#include "oracles.hpp"

using namespace novikov;

namespace {

IntPolynomial P(const std::string& s) { return parse_int_polynomial(s); }

PolyMatrix row(std::initializer_list<const char*> entries) {
    PolyMatrix m(1, entries.size());
    std::size_t j = 0;
    for (const char* e : entries) m(0, j++) = P(e);
    return m;
}

PolyComplex two_term(const std::string& d) { return make_complex({1, 1}, {row({d.c_str()})}); }

PolyComplex trefoil_lattice_torus() {
    return make_complex({2, 2}, {PolyMatrix::from_rows({{P("1"), P("t")}, {P("-t"), P("1 - t")}})});
}

LambdaPolynomial L(std::initializer_list<std::int64_t> c) { return trimmed(LambdaPolynomial(c)); }

/// T_k = sum_{j<=k} (-1)^(k-j) (p_j - q_j); P >= Q iff every T_k >= 0 and
/// the sequence closes at zero past the top degree.
bool order_oracle(const LambdaPolynomial& p, const LambdaPolynomial& q) {
    std::size_t n = std::max(p.size(), q.size());
    std::int64_t t = 0;
    for (std::size_t k = 0; k < n; ++k) {
        t = coeff_at(p, k) - coeff_at(q, k) - t;
        if (t < 0) return false;
    }
    return t == 0;
}

} // namespace

TEST(Validate, ZeroCompositeIsAccepted) {
    PolyMatrix d1 = row({"0", "0"});
    PolyMatrix d2 = PolyMatrix::from_rows({{P("1")}, {P("0")}});
    EXPECT_NO_THROW(make_complex({1, 2, 1}, {d1, d2}));
}

TEST(Validate, NonzeroCompositeNamesDegree) {
    try {
        make_complex({1, 1, 1}, {row({"1"}), row({"1"})});
        FAIL() << "expected ComplexAxiomViolation";
    } catch (const ComplexAxiomViolation& e) {
        EXPECT_EQ(e.degree(), 1u);
    }
}

TEST(Validate, EmptyComplex) {
    EXPECT_NO_THROW(make_complex({}, {}));
    EXPECT_NO_THROW(make_complex({0, 0}, {PolyMatrix(0, 0)}));
}

TEST(Validate, ShapeMismatch) { EXPECT_THROW(make_complex({2, 1}, {row({"1"})}), ComplexAxiomViolation); }

TEST(Betti, InvertibleGenerically) {
    EXPECT_EQ(betti(two_term("t - 1"), generic_target()).values, (std::vector<std::int64_t>{0, 0}));
}

TEST(Betti, ZeroMapAtOne) {
    // t - 1 specialises to 0 at t = 1: both groups survive.
    EXPECT_EQ(betti(two_term("t - 1"), root_target(parse_rat_polynomial("t - 1"))).values,
              (std::vector<std::int64_t>{1, 1}));
}

TEST(Betti, RankDropAtAlexanderRoot) {
    // det(I - tB) = t^2 - t + 1 vanishes, the nonzero entry 1 keeps rank 1.
    EXPECT_EQ(betti(trefoil_lattice_torus(), root_target(parse_rat_polynomial("t^2 - t + 1"))).values,
              (std::vector<std::int64_t>{1, 1}));
}

TEST(Betti, BoundedByRanks) {
    random::Engine rng(21);
    for (int k = 0; k < 40; ++k) {
        PolyComplex c = random::random_complex(rng);
        for (const auto& t : {generic_target(), rationals_at_zero(), prime_at_zero(3)}) {
            auto b = betti(c, t).values;
            for (std::size_t i = 0; i < b.size(); ++i) {
                EXPECT_GE(b[i], 0);
                EXPECT_LE(b[i], static_cast<std::int64_t>(c.ranks[i]));
            }
        }
    }
}

TEST(Betti, MatchesIndependentRankAtRationalPoints) {
    random::Engine rng(22);
    for (int k = 0; k < 30; ++k) {
        PolyComplex c = random::random_complex(rng);
        for (const Rational& x : {Rational(2), Rational(-1, 3)}) {
            auto b = betti(c, evaluation_target(AlgebraicNumberSpec::rational(x))).values;
            std::vector<std::size_t> r(c.ranks.size() + 1, 0);
            for (std::size_t i = 1; i <= c.boundaries.size(); ++i) {
                const auto& d = c.boundaries[i - 1];
                std::vector<std::vector<oracle::Q>> m(d.rows(), std::vector<oracle::Q>(d.cols()));
                for (std::size_t a = 0; a < d.rows(); ++a)
                    for (std::size_t e = 0; e < d.cols(); ++e) {
                        Rational acc = 0;
                        for (int deg = d(a, e).degree(); deg >= 0; --deg)
                            acc = acc * x + Rational(d(a, e).coeff(static_cast<std::size_t>(deg)));
                        m[a][e] = acc;
                    }
                r[i] = oracle::rank_q(m);
            }
            for (std::size_t i = 0; i < c.ranks.size(); ++i)
                EXPECT_EQ(b[i], static_cast<std::int64_t>(c.ranks[i] - r[i] - r[i + 1]));
        }
    }
}

TEST(Betti, SpecialRanksNeverExceedGeneric) {
    random::Engine rng(23);
    for (int k = 0; k < 40; ++k) {
        PolyComplex c = random::random_complex(rng);
        auto a = random::random_non_integer(rng);
        for (const auto& d : c.boundaries) {
            std::size_t g = rank_at(d, generic_target());
            EXPECT_LE(rank_at(d, ideal_of_inverse(a)), g);
            EXPECT_LE(rank_at(d, rationals_at_zero()), g);
            EXPECT_LE(rank_at(d, prime_at_zero(select_prime(a).p)), rank_at(d, rationals_at_zero()));
        }
    }
}

TEST(Poincare, FromBettiVectors) {
    EXPECT_EQ(poincare(BettiVector{{1, 1}, generic_target()}), L({1, 1}));
    EXPECT_EQ(poincare(BettiVector{{0, 0}, generic_target()}), L({}));
    EXPECT_EQ(to_string(poincare(BettiVector{{0, 6, 0, 0}, generic_target()})), "6*lambda");
}

TEST(Order, OnePlusLambdaOverZero) {
    auto v = dominates(L({1, 1}), L({}));
    EXPECT_TRUE(v.holds);
    ASSERT_TRUE(v.quotient);
    EXPECT_EQ(*v.quotient, L({1}));
}

TEST(Order, LambdaOverOneFailsAtZero) {
    EXPECT_FALSE(dominates(L({0, 1}), L({1})).holds);
    auto m = morse_inequalities(L({0, 1}), L({1}));
    EXPECT_FALSE(m.holds);
    EXPECT_EQ(m.first_failure, 0u);
}

TEST(Order, SquareOverSumOfSquaresFails) {
    // Alternating sums r = 0, 1, 2: (1, 1, 0) against (1, -1, 2).
    EXPECT_FALSE(dominates(L({1, 2, 1}), L({1, 0, 1})).holds);
    EXPECT_EQ(morse_inequalities(L({1, 2, 1}), L({1, 0, 1})).first_failure, 2u);
}

TEST(Order, TailIsChecked) {
    // Difference lambda: partial sums 0, 1 and then -1 past the top degree.
    EXPECT_FALSE(dominates(L({0, 1}), L({})).holds);
    EXPECT_EQ(morse_inequalities(L({0, 1}), L({})).first_failure, 2u);
}

TEST(Order, PartialOrderLaws) {
    random::Engine rng(24);
    auto draw = [&] {
        LambdaPolynomial p(static_cast<std::size_t>(random::uniform(rng, 0, 4)));
        for (auto& c : p) c = random::uniform(rng, 0, 3);
        return trimmed(p);
    };
    for (int k = 0; k < 3000; ++k) {
        auto p = draw(), q = draw(), r = draw();
        EXPECT_TRUE(dominates(p, p).holds);
        if (dominates(p, q).holds && dominates(q, p).holds) EXPECT_EQ(p, q);
        if (dominates(p, q).holds && dominates(q, r).holds) EXPECT_TRUE(dominates(p, r).holds);
    }
}

TEST(Order, DivisionAlternatingSumsAndOracleAgree) {
    // All pairs with 3 coefficients in [0, 9], plus sampled pairs up to degree 8.
    for (int code = 0; code < 1000000; ++code) {
        int c = code;
        LambdaPolynomial p(3), q(3);
        for (auto& x : p) x = c % 10, c /= 10;
        for (auto& x : q) x = c % 10, c /= 10;
        bool d = dominates(p, q).holds;
        ASSERT_EQ(d, morse_inequalities(p, q).holds);
        ASSERT_EQ(d, order_oracle(p, q));
    }
    random::Engine rng(25);
    for (int k = 0; k < 200000; ++k) {
        LambdaPolynomial p(9), q(9);
        for (auto& x : p) x = random::uniform(rng, 0, 9);
        for (auto& x : q) x = random::uniform(rng, 0, 9);
        bool d = dominates(p, q).holds;
        ASSERT_EQ(d, morse_inequalities(p, q).holds);
        ASSERT_EQ(d, order_oracle(p, q));
    }
}

TEST(Theorem22, RootAtTwoWithPrimeTwo) {
    auto r = theorem22_check(two_term("t - 2"), AlgebraicNumberSpec::rational(Rational(1, 2)), 2);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.at_q, L({1, 1}));
    EXPECT_EQ(r.at_p, L({1, 1}));
    EXPECT_EQ(r.ideal_p, "(t - 2)");
    EXPECT_EQ(r.ideal_q, "(2, t)");
}

TEST(Theorem22, AcyclicComplex) {
    auto r = theorem22_check(two_term("1"), AlgebraicNumberSpec::rational(Rational(2, 3)), 3);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.at_q.empty());
    EXPECT_TRUE(r.at_p.empty());
}

TEST(Theorem22, UnitHasNoAdmissiblePrime) {
    // Free term of t^2 - t + 1 is 1: no prime divides it.
    auto a = parse_algebraic_number("root:t^2-t+1");
    for (int p : {2, 3, 5, 7}) EXPECT_THROW(theorem22_check(trefoil_lattice_torus(), a, p), PreconditionViolation);
}

TEST(Theorem22, StrictComparison) {
    // t - 2 is a unit both at t = 3 and modulo (3, t).
    auto r = theorem22_check(two_term("t - 2"), AlgebraicNumberSpec::rational(Rational(1, 3)), 3);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.at_q.empty());
    EXPECT_THROW(theorem22_check(two_term("t - 2"), AlgebraicNumberSpec::rational(Rational(1, 3)), 2), PreconditionViolation);
    auto s = theorem22_check(two_term("2"), AlgebraicNumberSpec::rational(Rational(1, 3)), 3);
    EXPECT_TRUE(s.holds);
    auto u = theorem22_check(two_term("3"), AlgebraicNumberSpec::rational(Rational(1, 3)), 3);
    EXPECT_EQ(u.at_q, L({1, 1}));
    EXPECT_TRUE(u.at_p.empty());
    ASSERT_TRUE(u.quotient);
    EXPECT_EQ(*u.quotient, L({1}));
}

TEST(Theorem22, TranscendentalAdmitsEveryPrime) {
    random::Engine rng(26);
    for (int k = 0; k < 20; ++k) {
        PolyComplex c = random::random_complex(rng);
        for (int p : {2, 3, 7}) EXPECT_TRUE(theorem22_check(c, AlgebraicNumberSpec::transcendental(), p).holds);
    }
}

TEST(Theorem22, NotPrime) {
    EXPECT_THROW(theorem22_check(two_term("1"), AlgebraicNumberSpec::rational(Rational(1, 4)), 4), PreconditionViolation);
}

TEST(Euler, EqualRanksGiveZero) {
    for (const auto& t : {generic_target(), rationals_at_zero(), prime_at_zero(2), root_target(parse_rat_polynomial("t - 2"))})
        EXPECT_EQ(euler_characteristic(two_term("t - 2"), t), 0);
}

TEST(Euler, AlternatingRankSum) {
    PolyComplex c = make_complex({2, 3, 1}, {PolyMatrix(2, 3), PolyMatrix(3, 1)});
    EXPECT_EQ(rank_euler_characteristic(c), 0);
    EXPECT_EQ(euler_characteristic(c, generic_target()), 0);
}

TEST(Euler, AlexanderBlockAtBothTargets) {
    PolyComplex c = alexander_block_complex(3);
    EXPECT_EQ(euler_characteristic(c, generic_target()), 0);
    EXPECT_EQ(euler_characteristic(c, root_target(parse_rat_polynomial("t^2 - t + 1"))), 0);
    EXPECT_EQ(betti(c, root_target(parse_rat_polynomial("t^2 - t + 1"))).values, (std::vector<std::int64_t>{3, 3}));
}

TEST(Euler, InvariantOnRandomComplexes) {
    random::Engine rng(27);
    for (int k = 0; k < 60; ++k) {
        PolyComplex c = random::random_complex(rng);
        auto a = random::random_non_integer(rng);
        std::int64_t chi = rank_euler_characteristic(c);
        for (const auto& t : {generic_target(), ideal_of_inverse(a), rationals_at_zero(), prime_at_zero(5)})
            EXPECT_EQ(euler_characteristic(c, t), chi);
    }
}

TEST(Duality, Reversal) {
    EXPECT_EQ(duality_transform(L({1, 2}), 3), L({0, 0, 2, 1}));
    EXPECT_EQ(duality_transform(L({0, 1, 1}), 3), L({0, 1, 1}));
    EXPECT_EQ(duality_transform(L({}), 5), L({}));
    EXPECT_THROW(duality_transform(L({0, 0, 1}), 1), DegreeOverflow);
}

TEST(ComplexJson, RoundTripIsIdentity) {
    const std::string text = R"({
  "ring": "Z[t]",
  "ranks": [1, 2, 1],
  "boundaries": [
    [
      ["t - 1", "0"]
    ],
    [
      ["0"],
      ["2*t^2 - t + 1"]
    ]
  ]
})";
    EXPECT_EQ(io::dump(io::complex_to_json(io::parse_complex(text))), text);
}

TEST(ComplexJson, RandomComplexesRoundTrip) {
    random::Engine rng(28);
    for (int k = 0; k < 40; ++k) {
        PolyComplex c = random::random_complex(rng);
        std::string s = io::dump(io::complex_to_json(c));
        PolyComplex back = io::parse_complex(s);
        EXPECT_EQ(back.ranks, c.ranks);
        EXPECT_EQ(back.boundaries, c.boundaries);
        EXPECT_EQ(io::dump(io::complex_to_json(back)), s);
    }
}

TEST(ComplexJson, EmptyShapes) {
    PolyComplex c = io::parse_complex(R"({"ring":"Z[t]","ranks":[0,2,0],"boundaries":[[],[[],[]]]})");
    EXPECT_EQ(c.boundaries[0].rows(), 0u);
    EXPECT_EQ(c.boundaries[0].cols(), 2u);
    EXPECT_EQ(c.boundaries[1].rows(), 2u);
    EXPECT_EQ(c.boundaries[1].cols(), 0u);
    EXPECT_EQ(betti(c, generic_target()).values, (std::vector<std::int64_t>{0, 2, 0}));
}

TEST(ComplexJson, Rejections) {
    EXPECT_THROW(io::parse_complex("{"), ParseError);
    EXPECT_THROW(io::parse_complex(R"({"ring":"Z[x]","ranks":[1],"boundaries":[]})"), ParseError);
    EXPECT_THROW(io::parse_complex(R"({"ranks":[1,1],"boundaries":[[["t","1"]]]})"), ParseError);
    EXPECT_THROW(io::parse_complex(R"({"ranks":[1,1,1],"boundaries":[[["1"]],[["1"]]]})"), ComplexAxiomViolation);
}
