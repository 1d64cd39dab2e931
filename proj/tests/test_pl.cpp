#include "lawrence/pairing.hpp"
#include "lawrence/pl.hpp"
#include "lawrence/random.hpp"

#include <gtest/gtest.h>

using namespace lawrence;

TEST(Pl, TwistSwapsPunctures) {
    pl::Vec2 a = pl::twist({1.0, 0.0}, 1, 1);
    EXPECT_NEAR(a.x, 2.0, 1e-12);
    EXPECT_NEAR(a.y, 0.0, 1e-12);
    pl::Vec2 far = pl::twist({3.0, 0.5}, 1, 1);
    EXPECT_EQ(far.x, 3.0);
    EXPECT_EQ(far.y, 0.5);
    // a point just above the midpoint moves to just below it under the positive twist
    pl::Vec2 up = pl::twist({1.5, 0.1}, 1, 1);
    EXPECT_LT(up.y, 0.0);
}

TEST(Pl, IdentityData) {
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                EXPECT_EQ(pl::intersection_data(BraidWord(n, {}), i, j), intersection_data(DiskModel(n), BraidWord(n, {}), i, j));
}

TEST(Pl, AgreesWithCombinatorialEngine) {
    Rng rng(101);
    for (int it = 0; it < 25; ++it) {
        int n = draw(rng, 2, 4);
        BraidWord w = random_word(rng, n, draw(rng, 0, 7));
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                IntersectionData d = intersection_data(DiskModel(n), w, i, j);
                EXPECT_EQ(pl::intersection_data(w, i, j), d) << w.to_string() << " i=" << i << " j=" << j;
                EXPECT_EQ(pl::direct_two_cable(w, i, j), pair_cabled(d, 2)) << w.to_string();
            }
    }
}

TEST(Pl, DegenerateCableIsRejected) {
    pl::Options o;
    o.cable = 0.0;
    EXPECT_THROW(pl::intersection_data(BraidWord(3, {1}), 1, 1, o), pl::Uncertified);
}
