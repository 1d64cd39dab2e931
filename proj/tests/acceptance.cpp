// One line per acceptance criterion. Every comparison is exact; the limits are wall-clock seconds.
#include "lawrence/gates.hpp"
#include "lawrence/pairing.hpp"
#include "lawrence/pl.hpp"
#include "lawrence/random.hpp"
#include "lawrence/rep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace lawrence;

namespace {

int failures = 0;

void report(int id, const std::string& what, double limit, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
        err = body();
    } catch (const std::exception& e) {
        err = std::string("exception: ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = err.empty() && sec < limit;
    if (err.empty() && !ok) err = "over time limit";
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s [%.2fs / %.0fs]%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(), sec, limit,
                err.empty() ? "" : " -- ", err.c_str());
    std::fflush(stdout);
}

LaurentPoly twist_scalar(int n, int m) { return make_monomial(1, static_cast<long long>(m) * n, static_cast<long long>(m) * (m - 1)); }

// Corpus of criterion 4, reused by criterion 5.
std::vector<BraidWord> matrix_corpus() {
    Rng rng(20240401);
    std::vector<BraidWord> out;
    for (int k = 0; k < 200; ++k) {
        int n = draw(rng, 2, 4);
        out.push_back(random_word(rng, n, draw(rng, 0, 10)));
    }
    return out;
}

}  // namespace

int main() {
    report(1, "full twist acts by q^(mn) t^(m(m-1)) in Burau and LK", 5, []() -> std::string {
        const int cases[][2] = {{2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2}, {4, 2}};
        for (auto [n, m] : cases) {
            auto s = is_scalar(evaluate(full_twist(n), m == 1 ? Family::burau : Family::lk));
            if (!s || *s != twist_scalar(n, m)) return "n=" + std::to_string(n) + " m=" + std::to_string(m);
        }
        return std::string();
    });
    report(1, "full twist scales every cabled pairing entry, m in {3,4}, n in {3,4}", 60, []() -> std::string {
        for (int m : {3, 4})
            for (int n : {3, 4}) {
                PairingMatrix id = pairing_matrix(BraidWord(n, {}), n, m);
                PairingMatrix d2 = pairing_matrix(full_twist(n), n, m);
                LaurentPoly c = twist_scalar(n, m);
                for (int i = 1; i < n; ++i)
                    for (int j = 1; j < n; ++j) {
                        if (id.at(i, j).is_zero()) {
                            if (!d2.at(i, j).is_zero()) return "nonzero off-diagonal entry";
                            continue;
                        }
                        auto u = scalar_ratio(d2.at(i, j), id.at(i, j));
                        if (!u || make_monomial(u->c, u->dq, u->dt) != c)
                            return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " entry " + std::to_string(i) +
                                   "," + std::to_string(j);
                    }
            }
        return std::string();
    });
    report(2, "braid and commutation relations, Burau and LK, n <= 6", 5, []() -> std::string {
        for (int n = 2; n <= 6; ++n)
            for (Family f : {Family::burau, Family::lk}) {
                RepMatrix one = identity_matrix(f, n);
                for (int i = 1; i < n; ++i) {
                    if (!(generator(f, n, i) * generator(f, n, -i) == one)) return family_name(f) + " inverse";
                    for (int j = i + 1; j < n; ++j) {
                        RepMatrix a = generator(f, n, i), b = generator(f, n, j);
                        bool ok = j == i + 1 ? a * b * a == b * a * b : a * b == b * a;
                        if (!ok) return family_name(f) + " n=" + std::to_string(n);
                    }
                }
            }
        return std::string();
    });
    report(3, "identity braid pairing is diagonal, n <= 5, m <= 3", 10, []() -> std::string {
        for (int n = 2; n <= 5; ++n)
            for (int m = 1; m <= 3; ++m) {
                PairingMatrix p = pairing_matrix(BraidWord(n, {}), n, m);
                for (int i = 1; i < n; ++i)
                    for (int j = 1; j < n; ++j)
                        if (i != j && !p.at(i, j).is_zero()) return "n=" + std::to_string(n) + " m=" + std::to_string(m);
            }
        return std::string();
    });
    report(4, "m=1 pairing equals Burau and m=2 pairing equals LK on 200 words", 120, []() -> std::string {
        for (const auto& w : matrix_corpus()) {
            if (!matrix_gate(w, 1)) return "burau: " + w.to_string();
            if (!matrix_gate(w, 2)) return "lk: " + w.to_string();
        }
        return std::string();
    });
    report(5, "sign equals parity of b_ii; m=2 pairing equals the explicit two-cable sum", 120, []() -> std::string {
        int direct = 0;
        for (const auto& w : matrix_corpus()) {
            DiskModel model(w.n);
            for (int i = 1; i < w.n; ++i)
                for (int j = 1; j < w.n; ++j) {
                    IntersectionData d = intersection_data(model, w, i, j);
                    if (!sign_parity_holds(d)) return "parity: " + w.to_string();
                    if (w.size() <= 6) {
                        ++direct;
                        if (pl::direct_two_cable(w, i, j) != pair_cabled(d, 2)) return "two-cable: " + w.to_string();
                    }
                }
        }
        return direct > 0 ? std::string() : std::string("no short words in corpus");
    });
    report(6, "combinatorial and floating-point backends agree on 100 words", 120, []() -> std::string {
        Rng rng(777);
        for (int k = 0; k < 100; ++k) {
            int n = draw(rng, 2, 4);
            BraidWord w = random_word(rng, n, draw(rng, 0, 8));
            DiskModel model(n);
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j)
                    if (!(pl::intersection_data(w, i, j) == intersection_data(model, w, i, j)))
                        return w.to_string() + " i=" + std::to_string(i) + " j=" + std::to_string(j);
        }
        return std::string();
    });
    report(7, "LK triviality agrees with handle reduction on 1000 words", 300, []() -> std::string {
        Rng rng(4242);
        int trivial_seen = 0;
        for (int k = 0; k < 1000; ++k) {
            int n = draw(rng, 2, 5);
            int len = draw(rng, 0, 16);
            BraidWord w = rng() % 2 ? random_trivial_word(rng, n, len) : random_word(rng, n, len);
            bool t = trivial(w);
            trivial_seen += t;
            if (t != handle_reduce(w).trivial) return w.to_string();
        }
        for (int k = 0; k < 100; ++k) {
            int n = draw(rng, 2, 5);
            BraidWord w = random_word(rng, n, draw(rng, 0, 8));
            BraidWord r = random_word(rng, n, draw(rng, 0, 8));
            if (trivial(w * w.inverse() * r) != trivial(r)) return "w w^-1 r: " + w.to_string();
        }
        return trivial_seen > 0 ? std::string() : std::string("corpus has no trivial words");
    });
    report(8, "rho exponents equal letter counts on 500 words of B_{n,m}", 10, []() -> std::string {
        Rng rng(99);
        for (int k = 0; k < 500; ++k) {
            int n = draw(rng, 1, 4), m = draw(rng, 1, 3);
            if (n + m < 2) m = 2;
            BnmWord b = random_bnm_word(rng, n, m, draw(rng, 0, 12));
            RhoExponents r = rho_exponents(b.word, n, m);
            if (r.a != b.q_count || r.b != b.t_count) return b.word.to_string();
        }
        return std::string();
    });
    return failures == 0 ? 0 : 1;
}
