#include "lawrence/laurent.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lawrence;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::vector<Term> ts;
    int k = static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i)
        ts.push_back({static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 5) - 2,
                      BigInt(static_cast<long long>(rng() % 9) - 4)});
    return LaurentPoly::from_terms(ts);
}

}  // namespace

TEST(Laurent, TextRoundTrip) {
    LaurentPoly p = LaurentPoly(1) - LaurentPoly::q() * 2 - LaurentPoly::q(2) * LaurentPoly::t();
    EXPECT_EQ(p.to_string(), "1 - 2*q - q^2*t");
    EXPECT_EQ(LaurentPoly::parse("1 - 2*q - q^2*t"), p);
    EXPECT_EQ(LaurentPoly::parse("-q^-1*t^-2 + 3"), LaurentPoly(3) - make_monomial(1, -1, -2));
    EXPECT_EQ(LaurentPoly().to_string(), "0");
    EXPECT_THROW(LaurentPoly::parse("q^"), std::invalid_argument);
    EXPECT_THROW(LaurentPoly::parse("2**q"), std::invalid_argument);
}

TEST(Laurent, RingAxiomsAgainstRationalEvaluation) {
    std::mt19937_64 rng(11);
    BigRational q0(3, 2), t0(-5, 7);
    for (int it = 0; it < 300; ++it) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b).eval(q0, t0), a.eval(q0, t0) * b.eval(q0, t0));
        EXPECT_EQ((a + b).eval(q0, t0), a.eval(q0, t0) + b.eval(q0, t0));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a - a, LaurentPoly());
        EXPECT_EQ(LaurentPoly::parse(a.to_string()), a);
    }
}

TEST(Laurent, BigCoefficients) {
    LaurentPoly x = LaurentPoly(1) + LaurentPoly::q();
    LaurentPoly p = pow(x, 80);
    BigInt central = p.terms()[40].c;
    BigInt expect = 1;
    for (int k = 1; k <= 40; ++k) expect = expect * (40 + k) / k;
    EXPECT_EQ(central, expect);
    EXPECT_GT(central, BigInt(std::numeric_limits<long long>::max()));
}

TEST(Laurent, ScalarRatio) {
    LaurentPoly r = LaurentPoly(2) - LaurentPoly::t();
    auto u = scalar_ratio(r * make_monomial(-3, 4, 2), r);
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(u->c, -3);
    EXPECT_EQ(u->dq, 4);
    EXPECT_EQ(u->dt, 2);
    EXPECT_FALSE(scalar_ratio(r + LaurentPoly(1), r).has_value());
    EXPECT_THROW(scalar_ratio(r, LaurentPoly()), std::domain_error);
}
