#include "lawrence/curves.hpp"
#include "lawrence/gates.hpp"
#include "lawrence/random.hpp"

#include <gtest/gtest.h>

using namespace lawrence;

TEST(Curves, FreeGroupActionIsAnAutomorphism) {
    // sigma_k sigma_k^-1 acts trivially on every generator
    for (int k = 1; k <= 4; ++k)
        for (int x = -5; x <= 5; ++x) {
            if (x == 0) continue;
            FreeWord w{x};
            EXPECT_EQ(fg::act(fg::act(w, k), -k), w);
            EXPECT_EQ(fg::act(fg::act(w, -k), k), w);
        }
    // the boundary word x_1 ... x_n is fixed
    FreeWord all{1, 2, 3, 4};
    for (int l : {1, -1, 2, -2, 3, -3}) EXPECT_EQ(fg::act(all, l), all);
}

TEST(Curves, IdentityBaseCase) {
    for (int n = 2; n <= 6; ++n) {
        DiskModel model(n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                IntersectionData d = intersection_data(model, standard_fork(model, i), j);
                if (i != j) {
                    EXPECT_EQ(d.size(), 0u);
                    continue;
                }
                ASSERT_EQ(d.size(), 1u);
                EXPECT_EQ(d.eps[0], 1);
                // frozen convention: the loop winds once around each of p_1..p_j and the
                // cable pair makes one full twist
                EXPECT_EQ(d.a[0], j);
                EXPECT_EQ(d.b[0][0], 2);
            }
    }
}

TEST(Curves, StandardTineCode) {
    DiskModel model(4);
    ArcCode t = tine_code(standard_fork(model, 2));
    EXPECT_EQ(t.start, (Endpoint{Endpoint::Kind::puncture, 2}));
    EXPECT_EQ(t.end, (Endpoint{Endpoint::Kind::puncture, 3}));
    EXPECT_TRUE(t.events.empty());
    EXPECT_THROW(standard_fork(model, 4), std::invalid_argument);
    EXPECT_THROW(DiskModel(1), std::invalid_argument);
}

TEST(Curves, EmptyWordAndCancellingPair) {
    DiskModel model(4);
    for (int i = 1; i <= 3; ++i) {
        Fork f = standard_fork(model, i);
        EXPECT_EQ(apply_word(model, f, BraidWord(4, {})), f);
        for (int k = 1; k <= 3; ++k) {
            EXPECT_EQ(apply_word(model, f, BraidWord(4, {k, -k})), f);
            EXPECT_EQ(apply_word(model, f, BraidWord(4, {-k, k})), f);
        }
    }
}

TEST(Curves, ImagesRespectRelators) {
    Rng rng(2);
    for (int it = 0; it < 400; ++it) {
        int n = draw(rng, 3, 5);
        BraidWord w = random_word(rng, n, draw(rng, 0, 10));
        std::vector<int> ls = w.letters;
        std::vector<int> r = random_relator(rng, n);
        ls.insert(ls.begin() + draw(rng, 0, static_cast<int>(ls.size())), r.begin(), r.end());
        BraidWord u(n, ls);
        DiskModel model(n);
        for (int i = 1; i < n; ++i) {
            Fork a = apply_word(model, standard_fork(model, i), w);
            Fork b = apply_word(model, standard_fork(model, i), u);
            ASSERT_EQ(a, b) << w.to_string() << " / " << u.to_string();
            EXPECT_TRUE(is_tight(tine_code(a)));
            EXPECT_EQ(apply_word(model, standard_noodle(model, i), w), apply_word(model, standard_noodle(model, i), u));
            for (int j = 1; j < n; ++j)
                EXPECT_EQ(intersection_data(model, a, j), intersection_data(model, b, j));
        }
    }
}

TEST(Curves, BraidRelationOnFirstFork) {
    DiskModel model(3);
    Fork f = standard_fork(model, 1);
    EXPECT_EQ(apply_word(model, f, BraidWord(3, {1, 2, 1})), apply_word(model, f, BraidWord(3, {2, 1, 2})));
}

TEST(Curves, NaturalityOfIntersectionCount) {
    Rng rng(9);
    for (int it = 0; it < 300; ++it) {
        int n = draw(rng, 2, 5);
        BraidWord w = random_word(rng, n, draw(rng, 0, 10));
        DiskModel model(n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                Noodle back = apply_word(model, standard_noodle(model, j), w.inverse());
                EXPECT_EQ(static_cast<int>(intersection_data(model, w, i, j).size()), axis_crossings(back, i))
                    << w.to_string() << " i=" << i << " j=" << j;
            }
    }
}

TEST(Curves, SignIsParityOfSelfTwist) {
    Rng rng(13);
    for (int it = 0; it < 300; ++it) {
        int n = draw(rng, 2, 5);
        BraidWord w = random_word(rng, n, draw(rng, 0, 12));
        DiskModel model(n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) EXPECT_TRUE(sign_parity_holds(intersection_data(model, w, i, j))) << w.to_string();
    }
}

TEST(Curves, AlgebraicIntersectionIsHomological) {
    // sum of signs = pairing at q = 1, which only sees the Burau matrix at q = 1
    Rng rng(31);
    for (int it = 0; it < 100; ++it) {
        int n = draw(rng, 2, 5);
        BraidWord w = random_word(rng, n, draw(rng, 0, 10));
        DiskModel model(n);
        RepMatrix b = evaluate(w, Family::burau);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                IntersectionData d = intersection_data(model, w, i, j);
                int s = 0;
                for (int e : d.eps) s += e;
                EXPECT_EQ(BigRational(s), b.at(i - 1, j - 1).eval(1, 1));
            }
    }
}

TEST(Curves, StrandMismatch) {
    DiskModel model(3);
    EXPECT_THROW(apply_word(model, standard_fork(model, 1), BraidWord(4, {1})), std::invalid_argument);
    EXPECT_THROW(intersection_data(model, standard_fork(model, 1), 3), std::invalid_argument);
}
