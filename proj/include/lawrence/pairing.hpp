#pragma once

#include "curves.hpp"
#include "laurent.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace lawrence {

struct PairingMatrix {
    int n = 2;
    int m = 1;
    std::vector<LaurentPoly> entries;  // row-major (n-1)x(n-1), entry (i,j) pairs the image of fork i with noodle j

    int dim() const { return n - 1; }
    const LaurentPoly& at(int i, int j) const { return entries[static_cast<std::size_t>((i - 1) * dim() + (j - 1))]; }
    LaurentPoly& at(int i, int j) { return entries[static_cast<std::size_t>((i - 1) * dim() + (j - 1))]; }
    friend bool operator==(const PairingMatrix&, const PairingMatrix&) = default;
};

// Sum over ordered m-tuples of intersection points of sign * q^(sum a) * (-t)^(sum of b over pairs).
inline LaurentPoly pair_cabled(const IntersectionData& data, int m) {
    if (m < 1) throw std::invalid_argument("pair_cabled: m must be at least 1");
    const int l = static_cast<int>(data.size());
    if (l == 0) return LaurentPoly();
    std::map<std::pair<long long, long long>, long long> acc;
    std::vector<int> idx(static_cast<std::size_t>(m));
    auto rec = [&](auto&& self, int depth, int sign, long long qa, long long tb) -> void {
        if (depth == m) {
            acc[{qa, tb}] += (tb % 2 == 0) ? sign : -sign;
            return;
        }
        for (int i = 0; i < l; ++i) {
            long long add = 0;
            for (int u = 0; u < depth; ++u) add += data.b[static_cast<std::size_t>(idx[static_cast<std::size_t>(u)])][static_cast<std::size_t>(i)];
            idx[static_cast<std::size_t>(depth)] = i;
            self(self, depth + 1, sign * data.eps[static_cast<std::size_t>(i)], qa + data.a[static_cast<std::size_t>(i)], tb + add);
        }
    };
    rec(rec, 0, 1, 0, 0);
    std::vector<Term> terms;
    for (const auto& [k, c] : acc)
        if (c != 0) terms.push_back({k.first, k.second, BigInt(c)});
    return LaurentPoly::from_terms(std::move(terms));
}

inline unsigned default_threads() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

inline PairingMatrix pairing_matrix(const BraidWord& w, int n, int m, unsigned threads = 0) {
    if (w.n != n) throw std::invalid_argument("pairing_matrix: strand mismatch");
    if (m < 1) throw std::invalid_argument("pairing_matrix: m must be at least 1");
    DiskModel model(n);
    PairingMatrix pm;
    pm.n = n;
    pm.m = m;
    const int d = n - 1;
    pm.entries.assign(static_cast<std::size_t>(d * d), LaurentPoly());
    std::vector<Fork> forks;
    for (int i = 1; i <= d; ++i) forks.push_back(apply_word(model, standard_fork(model, i), w));

    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (int e = next++; e < d * d; e = next++) {
            try {
                int i = e / d + 1, j = e % d + 1;
                pm.at(i, j) = pair_cabled(intersection_data(model, forks[static_cast<std::size_t>(i - 1)], j), m);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    unsigned nt = std::min<unsigned>(threads == 0 ? default_threads() : threads, static_cast<unsigned>(d * d));
    if (nt <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < nt; ++k) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    return pm;
}

inline bool kernel_test(const BraidWord& w, int n, int m, unsigned threads = 0) {
    return pairing_matrix(w, n, m, threads) == pairing_matrix(BraidWord(n, {}), n, m, threads);
}

}  // namespace lawrence
