#include "lawrence/random.hpp"
#include "lawrence/rep.hpp"

#include <gtest/gtest.h>

using namespace lawrence;

namespace {

using Q = BigRational;
using Mat = std::vector<std::vector<Q>>;

Q det(Mat a) {
    const std::size_t n = a.size();
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Q f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

Q char_at(const Mat& m, const Q& x) {
    Mat a = m;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (auto& v : a[i]) v = -v;
        a[i][i] += x;
    }
    return det(a);
}

Mat numeric(const RepMatrix& m, const Q& q0, const Q& t0) {
    Mat r(static_cast<std::size_t>(m.d), std::vector<Q>(static_cast<std::size_t>(m.d)));
    for (int i = 0; i < m.d; ++i)
        for (int j = 0; j < m.d; ++j) r[i][j] = m.at(i, j).eval(q0, t0);
    return r;
}

// Unreduced Burau matrix from Fox derivatives of the Artin action on the free
// group, abelianized at x_i -> s. Written out independently of the library.
std::vector<int> artin_image(const std::vector<int>& w, int letter) {
    int k = std::abs(letter);
    std::vector<int> out;
    for (int x : w) {
        int a = std::abs(x);
        std::vector<int> img;
        if (letter > 0)
            img = a == k ? std::vector<int>{k, k + 1, -k} : a == k + 1 ? std::vector<int>{k} : std::vector<int>{a};
        else
            img = a == k ? std::vector<int>{k + 1} : a == k + 1 ? std::vector<int>{-(k + 1), k, k + 1} : std::vector<int>{a};
        if (x < 0) {
            std::reverse(img.begin(), img.end());
            for (int& y : img) y = -y;
        }
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Mat fox_burau(const BraidWord& w, const Q& s) {
    Mat m(static_cast<std::size_t>(w.n), std::vector<Q>(static_cast<std::size_t>(w.n), Q(0)));
    for (int i = 1; i <= w.n; ++i) {
        std::vector<int> img{i};
        for (int l : w.letters) img = artin_image(img, l);
        Q pre = 1;
        for (int x : img) {
            if (x > 0) {
                m[i - 1][x - 1] += pre;
                pre *= s;
            } else {
                pre /= s;
                m[i - 1][-x - 1] -= pre;
            }
        }
    }
    return m;
}

}  // namespace

TEST(Rep, SpecExamplesTwoStrands) {
    RepMatrix b = burau_generator(2, 1, 1);
    ASSERT_EQ(b.d, 1);
    EXPECT_EQ(b.at(0, 0), -LaurentPoly::q());
    EXPECT_EQ((b * b).at(0, 0), LaurentPoly::q(2));
    RepMatrix v = lk_generator(2, 1, 1);
    EXPECT_EQ((v * v).at(0, 0), make_monomial(1, 4, 2));
}

TEST(Rep, GeneratorsTimesInversesAreIdentity) {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            for (Family f : {Family::burau, Family::lk}) {
                EXPECT_EQ(generator(f, n, k) * generator(f, n, -k), identity_matrix(f, n));
                EXPECT_EQ(generator(f, n, -k) * generator(f, n, k), identity_matrix(f, n));
            }
}

TEST(Rep, BraidAndCommutationRelations) {
    for (int n = 3; n <= 6; ++n)
        for (Family f : {Family::burau, Family::lk})
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    RepMatrix a = generator(f, n, i), b = generator(f, n, j);
                    if (j == i + 1)
                        EXPECT_EQ(a * b * a, b * a * b) << family_name(f) << " n=" << n << " i=" << i;
                    else
                        EXPECT_EQ(a * b, b * a) << family_name(f) << " n=" << n << " i=" << i << " j=" << j;
                }
}

TEST(Rep, LkMinimalPolynomial) {
    // (x - 1)(x + q)(x + q^2 t) kills every LK generator
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k) {
            RepMatrix g = lk_generator(n, k, 1);
            auto shift = [&](const LaurentPoly& c) {
                RepMatrix r = g;
                for (int i = 0; i < r.d; ++i) r.at(i, i) += c;
                return r;
            };
            RepMatrix p = shift(LaurentPoly(-1)) * shift(LaurentPoly::q()) * shift(make_monomial(1, 2, 1));
            for (const auto& e : p.a) EXPECT_TRUE(e.is_zero());
        }
}

TEST(Rep, FullTwistScalars) {
    for (int n = 2; n <= 5; ++n) {
        auto b = is_scalar(evaluate(full_twist(n), Family::burau));
        ASSERT_TRUE(b.has_value());
        EXPECT_EQ(*b, LaurentPoly::q(n));
    }
    for (int n = 2; n <= 4; ++n) {
        auto k = is_scalar(evaluate(full_twist(n), Family::lk));
        ASSERT_TRUE(k.has_value());
        EXPECT_EQ(*k, make_monomial(1, 2 * n, 2));
    }
    EXPECT_TRUE(is_scalar(identity_matrix(Family::lk, 4))->is_one());
    EXPECT_FALSE(is_scalar(evaluate(BraidWord(3, {1}), Family::lk)).has_value());
}

TEST(Rep, EvaluateIsAHomomorphism) {
    Rng rng(3);
    for (int it = 0; it < 60; ++it) {
        int n = draw(rng, 2, 5);
        BraidWord a = random_word(rng, n, draw(rng, 0, 6)), b = random_word(rng, n, draw(rng, 0, 6));
        for (Family f : {Family::burau, Family::lk}) EXPECT_EQ(evaluate(a * b, f), evaluate(a, f) * evaluate(b, f));
    }
    EXPECT_EQ(evaluate(BraidWord(4, {}), Family::lk), identity_matrix(Family::lk, 4));
}

TEST(Rep, BurauCharacteristicPolynomialMatchesFoxCalculus) {
    Rng rng(17);
    Q q0(3, 2), t0(1);
    for (int it = 0; it < 60; ++it) {
        int n = draw(rng, 2, 5);
        BraidWord w = random_word(rng, n, draw(rng, 0, 8));
        Mat red = numeric(evaluate(w, Family::burau), q0, t0);
        Mat full = fox_burau(w, q0);
        for (Q x : {Q(2), Q(-1, 3), Q(5, 7)}) EXPECT_EQ(char_at(full, x), (x - 1) * char_at(red, x)) << w.to_string();
    }
}

TEST(Rep, DeterminantIsMonomialInWrithe) {
    Rng rng(29);
    Q q0(2), t0(3);
    for (int it = 0; it < 40; ++it) {
        int n = draw(rng, 2, 4);
        BraidWord w = random_word(rng, n, draw(rng, 0, 8));
        int e = w.writhe();
        Q pq = 1;
        for (int k = 0; k < std::abs(e); ++k) pq *= q0;
        if (e < 0) pq = 1 / pq;
        // all generators of one family are conjugate, so det depends on the writhe only
        EXPECT_EQ(det(numeric(evaluate(w, Family::burau), q0, t0)), (e % 2 ? -pq : pq));
        Q dk = det(numeric(evaluate(w, Family::lk), q0, t0));
        Q g = det(numeric(lk_generator(n, 1, 1), q0, t0));
        Q expect = 1;
        for (int k = 0; k < std::abs(e); ++k) expect *= g;
        if (e < 0) expect = 1 / expect;
        EXPECT_EQ(dk, expect);
    }
}

TEST(Rep, TrivialExamples) {
    EXPECT_TRUE(trivial(BraidWord(3, {})));
    EXPECT_FALSE(trivial(BraidWord(3, {1})));
    EXPECT_TRUE(trivial(BraidWord(3, {1, 2, 1, -2, -1, -2})));
    EXPECT_FALSE(trivial(full_twist(3)));
}

TEST(Rep, LkAgreesWithHandleReduction) {
    Rng rng(41);
    for (int it = 0; it < 200; ++it) {
        int n = draw(rng, 2, 5);
        int len = draw(rng, 0, 12);
        BraidWord w = rng() % 2 ? random_trivial_word(rng, n, len) : random_word(rng, n, len);
        EXPECT_EQ(trivial(w), handle_reduce(w).trivial) << w.to_string();
    }
}
