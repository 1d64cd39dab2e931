#pragma once

#include "braid.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

// Seeded word generators. Only raw 64-bit draws from mt19937_64 are used, reduced
// with %, so corpora are reproducible by any implementation of that engine.
namespace lawrence {

using Rng = std::mt19937_64;

inline int draw(Rng& rng, int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline BraidWord random_word(Rng& rng, int n, int len) {
    std::vector<int> ls;
    ls.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) {
        int g = draw(rng, 1, n - 1);
        ls.push_back(rng() % 2 ? g : -g);
    }
    return BraidWord(n, std::move(ls));
}

// One relator of B_n: a free cancellation, a braid relation or a commutation,
// cyclically rotated and possibly inverted.
inline std::vector<int> random_relator(Rng& rng, int n) {
    std::vector<int> r;
    int kind = n >= 3 ? draw(rng, 0, n >= 4 ? 2 : 1) : 0;
    if (kind == 0) {
        int g = draw(rng, 1, n - 1);
        r = {g, -g};
    } else if (kind == 1) {
        int k = draw(rng, 1, n - 2);
        r = {k, k + 1, k, -(k + 1), -k, -(k + 1)};
    } else {
        int a = draw(rng, 1, n - 1), b = draw(rng, 1, n - 1);
        while (std::abs(a - b) < 2) {
            a = draw(rng, 1, n - 1);
            b = draw(rng, 1, n - 1);
        }
        r = {a, b, -a, -b};
    }
    int rot = draw(rng, 0, static_cast<int>(r.size()) - 1);
    std::rotate(r.begin(), r.begin() + rot, r.end());
    if (rng() % 2) {
        std::reverse(r.begin(), r.end());
        for (int& x : r) x = -x;
    }
    return r;
}

// Trivial word built by inserting relators at random positions until the length
// reaches at least len.
inline BraidWord random_trivial_word(Rng& rng, int n, int len) {
    std::vector<int> ls;
    while (static_cast<int>(ls.size()) < len) {
        std::vector<int> r = random_relator(rng, n);
        int pos = draw(rng, 0, static_cast<int>(ls.size()));
        ls.insert(ls.begin() + pos, r.begin(), r.end());
    }
    return BraidWord(n, std::move(ls));
}

// Word written in the listed generators of B_{n,m}: sigma_1..sigma_{n-1},
// sigma_n^2 and sigma_{n+1}..sigma_{n+m-1}, each syllable with a random sign.
struct BnmWord {
    BraidWord word;
    int q_count = 0;  // signed count of sigma_n^2 syllables
    int t_count = 0;  // signed count of sigma_{n+j} letters, j >= 1
};

inline BnmWord random_bnm_word(Rng& rng, int n, int m, int syllables) {
    BnmWord out;
    std::vector<int> ls;
    int gens = (n - 1) + 1 + (m - 1);
    for (int k = 0; k < syllables; ++k) {
        int g = draw(rng, 0, gens - 1);
        int e = rng() % 2 ? 1 : -1;
        if (g < n - 1) {
            ls.push_back(e * (g + 1));
        } else if (g == n - 1) {
            ls.push_back(e * n);
            ls.push_back(e * n);
            out.q_count += e;
        } else {
            ls.push_back(e * (n + (g - (n - 1))));
            out.t_count += e;
        }
    }
    out.word = BraidWord(n + m, std::move(ls));
    return out;
}

}  // namespace lawrence
