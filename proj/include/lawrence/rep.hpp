#pragma once

#include "braid.hpp"
#include "laurent.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lawrence {

enum class Family { burau, lk };

inline std::string family_name(Family f) { return f == Family::burau ? "burau" : "lk"; }

inline Family parse_family(const std::string& s) {
    if (s == "burau") return Family::burau;
    if (s == "lk") return Family::lk;
    throw std::invalid_argument("unknown family '" + s + "'");
}

// Dense square matrix over the Laurent ring in row-vector convention: row b holds
// the image of basis vector b, so products compose left to right along a word.
struct RepMatrix {
    Family family = Family::burau;
    int n = 2;
    int d = 0;
    std::vector<std::vector<int>> basis;  // {k} for Burau, {i, j} for LK
    std::vector<LaurentPoly> a;           // row-major d*d

    LaurentPoly& at(int r, int c) { return a[static_cast<std::size_t>(r) * d + c]; }
    const LaurentPoly& at(int r, int c) const { return a[static_cast<std::size_t>(r) * d + c]; }
    int m() const { return family == Family::burau ? 1 : 2; }

    friend bool operator==(const RepMatrix& x, const RepMatrix& y) {
        return x.family == y.family && x.n == y.n && x.a == y.a;
    }

    friend RepMatrix operator*(const RepMatrix& x, const RepMatrix& y) {
        if (x.d != y.d) throw std::invalid_argument("dimension mismatch");
        RepMatrix r = x;
        for (int i = 0; i < x.d; ++i)
            for (int j = 0; j < x.d; ++j) {
                LaurentPoly s;
                for (int k = 0; k < x.d; ++k)
                    if (!x.at(i, k).is_zero() && !y.at(k, j).is_zero()) s += x.at(i, k) * y.at(k, j);
                r.at(i, j) = std::move(s);
            }
        return r;
    }
};

inline std::vector<std::vector<int>> family_basis(Family f, int n) {
    std::vector<std::vector<int>> b;
    if (f == Family::burau) {
        for (int k = 1; k < n; ++k) b.push_back({k});
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) b.push_back({i, j});
    }
    return b;
}

inline RepMatrix identity_matrix(Family f, int n) {
    if (n < 2) throw std::invalid_argument("representation needs n >= 2");
    RepMatrix r;
    r.family = f;
    r.n = n;
    r.basis = family_basis(f, n);
    r.d = static_cast<int>(r.basis.size());
    r.a.assign(static_cast<std::size_t>(r.d) * r.d, LaurentPoly());
    for (int i = 0; i < r.d; ++i) r.at(i, i) = 1;
    return r;
}

inline int lk_index(int n, int i, int j) {
    // position of (i, j), i < j, in the lexicographic pair basis
    return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

namespace detail {

inline RepMatrix burau_positive(int n, int k) {
    RepMatrix g = identity_matrix(Family::burau, n);
    int r = k - 1;
    g.at(r, r) = -LaurentPoly::q();
    if (r > 0) g.at(r - 1, r) = 1;
    if (r < g.d - 1) g.at(r + 1, r) = LaurentPoly::q();
    return g;
}

// Action on v_{j,k}, written into row (j,k).
inline RepMatrix lk_positive(int n, int i) {
    RepMatrix g = identity_matrix(Family::lk, n);
    for (auto& row : g.a) row = LaurentPoly();
    const LaurentPoly q = LaurentPoly::q(), q2 = LaurentPoly::q(2), t = LaurentPoly::t();
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            int row = lk_index(n, j, k);
            auto put = [&](int a, int b, const LaurentPoly& c) { g.at(row, lk_index(n, a, b)) += c; };
            if (i != j - 1 && i != j && i != k - 1 && i != k) {
                put(j, k, 1);
            } else if (i == j - 1) {
                put(i, k, q);
                put(i, j, q2 - q);
                put(j, k, 1 - q);
            } else if (i == j && i != k - 1) {
                put(j + 1, k, 1);
            } else if (i == k - 1 && i != j) {
                put(j, i, q);
                put(j, k, 1 - q);
                put(i, k, -(q2 - q) * t);
            } else if (i == k) {
                put(j, k + 1, 1);
            } else {  // i == j == k-1
                put(j, k, -(t * q2));
            }
        }
    return g;
}

inline RepMatrix scaled_identity(Family f, int n, const LaurentPoly& c) {
    RepMatrix r = identity_matrix(f, n);
    for (int i = 0; i < r.d; ++i) r.at(i, i) = c;
    return r;
}

inline RepMatrix add(const RepMatrix& x, const RepMatrix& y) {
    RepMatrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

inline RepMatrix divide(const RepMatrix& x, const Monomial& u) {
    RepMatrix r = x;
    for (auto& e : r.a) {
        auto v = e.divide_monomial(u);
        if (!v) throw std::logic_error("inverse generator: inexact division");
        e = std::move(*v);
    }
    return r;
}

}  // namespace detail

// Inverses come from the minimal polynomials (x-1)(x+q) for Burau and
// (x-1)(x+q)(x+q^2 t) for LK, whose constant terms are monomials.
inline RepMatrix burau_generator(int n, int k, int sign) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("burau_generator: index out of range");
    RepMatrix g = detail::burau_positive(n, k);
    if (sign > 0) return g;
    // g^-1 = (g + (q-1) I) / q
    RepMatrix s = detail::add(g, detail::scaled_identity(Family::burau, n, LaurentPoly::q() - 1));
    return detail::divide(s, Monomial{1, 1, 0});
}

inline RepMatrix lk_generator(int n, int k, int sign) {
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("lk_generator: index out of range");
    RepMatrix g = detail::lk_positive(n, k);
    if (sign > 0) return g;
    // x^3 + c2 x^2 + c1 x - q^3 t = 0 with c2 = q + q^2 t - 1, c1 = q^3 t - q - q^2 t
    const LaurentPoly q = LaurentPoly::q(), t = LaurentPoly::t();
    LaurentPoly c2 = q + LaurentPoly::q(2) * t - 1;
    LaurentPoly c1 = LaurentPoly::q(3) * t - q - LaurentPoly::q(2) * t;
    RepMatrix g2 = g * g;
    RepMatrix sum = g2;
    for (int i = 0; i < g.d; ++i)
        for (int j = 0; j < g.d; ++j) {
            sum.at(i, j) += c2 * g.at(i, j);
            if (i == j) sum.at(i, j) += c1;
        }
    return detail::divide(sum, Monomial{1, 3, 1});
}

inline RepMatrix generator(Family f, int n, int letter) {
    int k = std::abs(letter), s = letter > 0 ? 1 : -1;
    return f == Family::burau ? burau_generator(n, k, s) : lk_generator(n, k, s);
}

// Multiplies m on the right by a generator, touching only the generator's nonzero
// entries; cheaper than a dense product for long words.
inline void right_multiply(RepMatrix& m, const RepMatrix& g) {
    std::vector<std::vector<std::pair<int, const LaurentPoly*>>> cols(g.d);
    for (int k = 0; k < g.d; ++k)
        for (int j = 0; j < g.d; ++j)
            if (!g.at(k, j).is_zero()) cols[j].push_back({k, &g.at(k, j)});
    std::vector<LaurentPoly> row(g.d);
    for (int i = 0; i < m.d; ++i) {
        for (int j = 0; j < g.d; ++j) {
            LaurentPoly s;
            for (auto& [k, c] : cols[j])
                if (!m.at(i, k).is_zero()) s += m.at(i, k) * *c;
            row[j] = std::move(s);
        }
        for (int j = 0; j < g.d; ++j) m.at(i, j) = std::move(row[j]);
    }
}

inline RepMatrix evaluate(const BraidWord& w, Family f) {
    RepMatrix m = identity_matrix(f, w.n);
    std::vector<std::optional<RepMatrix>> cache(2 * static_cast<std::size_t>(w.n));
    for (int l : w.letters) {
        std::size_t slot = static_cast<std::size_t>(std::abs(l) - 1) * 2 + (l > 0 ? 0 : 1);
        if (!cache[slot]) cache[slot] = generator(f, w.n, l);
        right_multiply(m, *cache[slot]);
    }
    return m;
}

inline std::optional<LaurentPoly> is_scalar(const RepMatrix& m) {
    if (m.d == 0) return std::nullopt;
    const LaurentPoly& c = m.at(0, 0);
    for (int i = 0; i < m.d; ++i)
        for (int j = 0; j < m.d; ++j)
            if (m.at(i, j) != (i == j ? c : LaurentPoly())) return std::nullopt;
    return c;
}

inline bool trivial(const BraidWord& w) {
    if (w.n < 2) return true;
    auto c = is_scalar(evaluate(w, Family::lk));
    return c && c->is_one();
}

}  // namespace lawrence
