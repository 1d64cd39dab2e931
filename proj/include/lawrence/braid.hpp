#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lawrence {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Letters are signed generator indices: k > 0 is sigma_k, k < 0 is sigma_|k|^-1.
struct BraidWord {
    int n = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<int> ls) : n(strands), letters(std::move(ls)) {
        if (n < 1) throw std::invalid_argument("braid needs at least one strand");
        for (int l : letters)
            if (l == 0 || std::abs(l) > n - 1)
                throw std::invalid_argument("generator index " + std::to_string(l) +
                                            " out of range for n=" + std::to_string(n));
    }

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    BraidWord inverse() const {
        BraidWord r;
        r.n = n;
        r.letters.assign(letters.rbegin(), letters.rend());
        for (int& l : r.letters) l = -l;
        return r;
    }

    friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
        if (a.n != b.n) throw std::invalid_argument("strand count mismatch");
        BraidWord r = a;
        r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
        return r;
    }

    int writhe() const {
        int s = 0;
        for (int l : letters) s += l > 0 ? 1 : -1;
        return s;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? " " : "") << letters[i];
        return os.str();
    }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord parse_word(const std::string& text, int n) {
    if (n < 1) throw ParseError("strand count must be positive", 0);
    std::vector<int> ls;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ',') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (ch == '-' || ch == '+') ++i;
        std::size_t digits = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == digits || (i < text.size() && text[i] != ' ' && text[i] != ',' &&
                            text[i] != '\t' && text[i] != '\n' && text[i] != '\r'))
            throw ParseError("malformed token", start);
        if (i - digits > 9) throw ParseError("index out of range", start);
        int v = std::stoi(text.substr(start, i - start));
        if (v == 0) throw ParseError("zero is not a generator", start);
        if (std::abs(v) > n - 1)
            throw ParseError("generator " + std::to_string(v) + " exceeds n-1=" + std::to_string(n - 1),
                             start);
        ls.push_back(v);
    }
    return BraidWord(n, std::move(ls));
}

inline BraidWord free_reduce(const BraidWord& w) {
    BraidWord r;
    r.n = w.n;
    for (int l : w.letters) {
        if (!r.letters.empty() && r.letters.back() == -l)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

// images[p] is the final position (1-based) of the strand that starts at p+1.
struct Permutation {
    std::vector<int> images;

    bool is_identity() const {
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i] != static_cast<int>(i) + 1) return false;
        return true;
    }
    // (a*b) applies a first, then b.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation r;
        r.images.resize(a.images.size());
        for (std::size_t i = 0; i < a.images.size(); ++i) r.images[i] = b.images[a.images[i] - 1];
        return r;
    }
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

inline Permutation permutation(const BraidWord& w) {
    // pos_of[s] = current position of strand s; strand_at[p] = strand at position p
    std::vector<int> strand_at(w.n);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int l : w.letters) {
        int k = std::abs(l) - 1;
        std::swap(strand_at[k], strand_at[k + 1]);
    }
    Permutation p;
    p.images.resize(w.n);
    for (int pos = 0; pos < w.n; ++pos) p.images[strand_at[pos]] = pos + 1;
    return p;
}

// Signed count of crossings between the strands starting at positions i and j.
inline int crossing_number(const BraidWord& w, int i, int j) {
    if (i < 1 || j < 1 || i > w.n || j > w.n || i == j)
        throw std::invalid_argument("crossing_number: need distinct strands in 1..n");
    std::vector<int> strand_at(w.n);
    std::iota(strand_at.begin(), strand_at.end(), 1);
    int s = 0;
    for (int l : w.letters) {
        int k = std::abs(l) - 1;
        int a = strand_at[k], b = strand_at[k + 1];
        if ((a == i && b == j) || (a == j && b == i)) s += l > 0 ? 1 : -1;
        std::swap(strand_at[k], strand_at[k + 1]);
    }
    return s;
}

inline int linking_block(const BraidWord& w, const std::set<int>& block1, const std::set<int>& block2) {
    for (int x : block1)
        if (block2.count(x)) throw std::invalid_argument("linking_block: blocks overlap");
    std::vector<int> strand_at(w.n);
    std::iota(strand_at.begin(), strand_at.end(), 1);
    long long s = 0;
    for (int l : w.letters) {
        int k = std::abs(l) - 1;
        int a = strand_at[k], b = strand_at[k + 1];
        if ((block1.count(a) && block2.count(b)) || (block1.count(b) && block2.count(a)))
            s += l > 0 ? 1 : -1;
        std::swap(strand_at[k], strand_at[k + 1]);
    }
    if (s % 2 != 0) throw std::domain_error("linking_block: odd cross-block crossing sum");
    return static_cast<int>(s / 2);
}

inline BraidWord pure_gen(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pure_gen: need 1 <= i < j <= n");
    std::vector<int> ls;
    for (int k = j - 1; k > i; --k) ls.push_back(k);
    ls.push_back(i);
    ls.push_back(i);
    for (int k = i + 1; k <= j - 1; ++k) ls.push_back(-k);
    return BraidWord(n, std::move(ls));
}

inline BraidWord full_twist(int n) {
    if (n < 2) throw std::invalid_argument("full_twist: n must be at least 2");
    std::vector<int> ls;
    for (int r = 0; r < n; ++r)
        for (int k = 1; k < n; ++k) ls.push_back(k);
    return BraidWord(n, std::move(ls));
}

inline bool in_Bnm(const BraidWord& w, int n, int m) {
    if (w.n != n + m) throw std::invalid_argument("in_Bnm: word must have n+m strands");
    Permutation p = permutation(w);
    for (int s = 1; s <= n; ++s)
        if (p.images[s - 1] > n) return false;
    return true;
}

struct RhoExponents {
    int a = 0;
    int b = 0;
    friend bool operator==(const RhoExponents&, const RhoExponents&) = default;
};

// rho_{n,m}(w) = q^a t^b for w in B_{n,m}.
inline RhoExponents rho_exponents(const BraidWord& w, int n, int m) {
    if (!in_Bnm(w, n, m)) throw std::domain_error("rho_exponents: word is not in B_{n,m}");
    std::set<int> lower, upper;
    for (int s = 1; s <= n; ++s) lower.insert(s);
    for (int s = n + 1; s <= n + m; ++s) upper.insert(s);
    RhoExponents r;
    r.a = linking_block(w, lower, upper);
    for (int i = n + 1; i <= n + m; ++i)
        for (int j = i + 1; j <= n + m; ++j) r.b += crossing_number(w, i, j);
    return r;
}

struct HandleResult {
    bool trivial = false;
    BraidWord witness;
    std::size_t steps = 0;
};

struct BudgetExhausted : std::runtime_error {
    BudgetExhausted() : std::runtime_error("handle reduction step budget exhausted") {}
};

// Handle reduction. A sigma_i-handle is sigma_i^e v sigma_i^-e where v only
// uses generators of index > i. The handle whose closing letter comes first is
// always permitted, and reducing it replaces sigma_{i+1}^d in v by
// sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e.
inline HandleResult handle_reduce(const BraidWord& w, std::size_t budget = 1000000) {
    std::vector<int> cur = w.letters;
    HandleResult res;
    std::vector<int> last(static_cast<std::size_t>(std::max(w.n, 2)), -1);
    while (true) {
        std::fill(last.begin(), last.end(), -1);
        int open = -1, close = -1;
        for (int p = 0; p < static_cast<int>(cur.size()); ++p) {
            int i = std::abs(cur[p]);
            int best = -1;
            for (int k = 1; k <= i; ++k) best = std::max(best, last[k]);
            if (best >= 0 && cur[best] == -cur[p]) {
                open = best;
                close = p;
                break;
            }
            last[i] = p;
        }
        if (open < 0) break;
        if (res.steps >= budget) throw BudgetExhausted();
        ++res.steps;
        int i = std::abs(cur[open]);
        int e = cur[open] > 0 ? 1 : -1;
        std::vector<int> out(cur.begin(), cur.begin() + open);
        for (int p = open + 1; p < close; ++p) {
            int l = cur[p];
            if (std::abs(l) == i + 1) {
                int d = l > 0 ? 1 : -1;
                out.push_back(-e * (i + 1));
                out.push_back(d * i);
                out.push_back(e * (i + 1));
            } else {
                out.push_back(l);
            }
        }
        out.insert(out.end(), cur.begin() + close + 1, cur.end());
        // free cancellation keeps words short; it is itself a handle reduction step
        std::vector<int> red;
        for (int l : out) {
            if (!red.empty() && red.back() == -l)
                red.pop_back();
            else
                red.push_back(l);
        }
        cur.swap(red);
    }
    res.witness = BraidWord(w.n, cur);
    res.trivial = cur.empty();
    return res;
}

}  // namespace lawrence
