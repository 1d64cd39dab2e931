#pragma once

#include "pairing.hpp"
#include "rep.hpp"

// Cross-engine identities between the curve pairing and the matrix families.
//
// m = 1: P(w) = B(w) * P(1).
// m = 2: P(w) = S * K(w) * C * P(1), where row i of S picks the basis pair
// (i, i+1) (the tine of fork i) and C[(k,l)][j] = 1 iff noodle j separates
// punctures k and l, i.e. k <= j < l.
// P(1) is the diagonal identity-braid pairing, the only unit in either identity.
namespace lawrence {

inline PairingMatrix predicted_pairing(const BraidWord& w, int m, const PairingMatrix& unit) {
    const int n = w.n, d = n - 1;
    PairingMatrix p;
    p.n = n;
    p.m = m;
    p.entries.assign(static_cast<std::size_t>(d * d), LaurentPoly());
    if (m == 1) {
        RepMatrix b = evaluate(w, Family::burau);
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) p.at(i, j) = b.at(i - 1, j - 1) * unit.at(j, j);
    } else if (m == 2) {
        RepMatrix k = evaluate(w, Family::lk);
        for (int i = 1; i <= d; ++i) {
            int row = lk_index(n, i, i + 1);
            for (int j = 1; j <= d; ++j) {
                LaurentPoly s;
                for (int a = 1; a <= j; ++a)
                    for (int b = j + 1; b <= n; ++b) s += k.at(row, lk_index(n, a, b));
                p.at(i, j) = s * unit.at(j, j);
            }
        }
    } else {
        throw std::invalid_argument("predicted_pairing: matrices exist for m = 1, 2 only");
    }
    return p;
}

inline bool matrix_gate(const BraidWord& w, int m, unsigned threads = 0) {
    PairingMatrix unit = pairing_matrix(BraidWord(w.n, {}), w.n, m, threads);
    return pairing_matrix(w, w.n, m, threads) == predicted_pairing(w, m, unit);
}

// eps_i = (-1)^{b_ii} for every intersection point.
inline bool sign_parity_holds(const IntersectionData& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d.eps[i] != ((d.b[i][i] % 2 == 0) ? 1 : -1)) return false;
    return true;
}

}  // namespace lawrence
