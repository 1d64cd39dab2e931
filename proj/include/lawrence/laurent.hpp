#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace lawrence {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct Term {
    std::int64_t dq = 0;
    std::int64_t dt = 0;
    BigInt c;

    friend bool operator==(const Term&, const Term&) = default;
};

struct Monomial {
    BigInt c;
    std::int64_t dq = 0;
    std::int64_t dt = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Element of Z[q^{+-1}, t^{+-1}]. Terms are kept sorted by (dq, dt) with no zero
// coefficients, so structural equality is ring equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back({0, 0, BigInt(c)});
    }

    static LaurentPoly monomial(const BigInt& c, std::int64_t dq, std::int64_t dt) {
        LaurentPoly p;
        if (c != 0) p.terms_.push_back({dq, dt, c});
        return p;
    }
    static LaurentPoly q(std::int64_t e = 1) { return monomial(1, e, 0); }
    static LaurentPoly t(std::int64_t e = 1) { return monomial(1, 0, e); }

    // Builds from arbitrary (possibly repeated, possibly zero) terms.
    static LaurentPoly from_terms(std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
            return std::tie(a.dq, a.dt) < std::tie(b.dq, b.dt);
        });
        LaurentPoly p;
        for (auto& tm : raw) {
            if (!p.terms_.empty() && p.terms_.back().dq == tm.dq && p.terms_.back().dt == tm.dt) {
                p.terms_.back().c += tm.c;
            } else {
                if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
                p.terms_.push_back(std::move(tm));
            }
        }
        if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0 && terms_[0].c == 1;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& tm : r.terms_) tm.c = -tm.c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, false);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, true);
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_monomial()) return a.times_monomial(b.terms_[0]);
        if (a.is_monomial()) return b.times_monomial(a.terms_[0]);
        std::map<std::pair<std::int64_t, std::int64_t>, BigInt> acc;
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) acc[{x.dq + y.dq, x.dt + y.dt}] += x.c * y.c;
        LaurentPoly r;
        r.terms_.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (c != 0) r.terms_.push_back({k.first, k.second, std::move(c)});
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    // Exact division by a monomial; always possible in the Laurent ring when the
    // monomial coefficient divides every coefficient.
    std::optional<LaurentPoly> divide_monomial(const Monomial& m) const {
        if (m.c == 0) throw std::domain_error("division by zero monomial");
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& tm : terms_) {
            if (tm.c % m.c != 0) return std::nullopt;
            r.terms_.push_back({tm.dq - m.dq, tm.dt - m.dt, tm.c / m.c});
        }
        return r;
    }

    // Substitution of rational values for q and t; only used as a cheap hash in
    // tests and for CSV export.
    BigRational eval(const BigRational& q0, const BigRational& t0) const {
        BigRational s = 0;
        for (const auto& tm : terms_) s += BigRational(tm.c) * rpow(q0, tm.dq) * rpow(t0, tm.dt);
        return s;
    }

    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

private:
    std::vector<Term> terms_;

    LaurentPoly times_monomial(const Term& m) const {
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& tm : terms_) r.terms_.push_back({tm.dq + m.dq, tm.dt + m.dt, tm.c * m.c});
        return r;
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool negate_b) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && std::tie(a.terms_[i].dq, a.terms_[i].dt) <
                                            std::tie(b.terms_[j].dq, b.terms_[j].dt))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() ||
                       std::tie(b.terms_[j].dq, b.terms_[j].dt) <
                           std::tie(a.terms_[i].dq, a.terms_[i].dt)) {
                Term tm = b.terms_[j++];
                if (negate_b) tm.c = -tm.c;
                r.terms_.push_back(std::move(tm));
            } else {
                BigInt c = a.terms_[i].c;
                if (negate_b) c -= b.terms_[j].c; else c += b.terms_[j].c;
                if (c != 0) r.terms_.push_back({a.terms_[i].dq, a.terms_[i].dt, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    static BigRational rpow(const BigRational& x, std::int64_t e) {
        if (e < 0) {
            if (x == 0) throw std::domain_error("negative power of zero");
            return rpow(1 / x, -e);
        }
        BigRational r = 1, b = x;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
};

inline LaurentPoly make_monomial(const BigInt& c, std::int64_t dq, std::int64_t dt) {
    return LaurentPoly::monomial(c, dq, dt);
}

inline LaurentPoly pow(const LaurentPoly& p, unsigned e) {
    LaurentPoly r = 1, b = p;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// The monomial u with p = u*r, if any.
inline std::optional<Monomial> scalar_ratio(const LaurentPoly& p, const LaurentPoly& r) {
    if (r.is_zero()) throw std::domain_error("scalar_ratio: zero denominator");
    if (p.size() != r.size()) return std::nullopt;
    if (p.is_zero()) return std::nullopt;
    const Term& a = p.terms().front();
    const Term& b = r.terms().front();
    if (a.c % b.c != 0) return std::nullopt;
    Monomial u{a.c / b.c, a.dq - b.dq, a.dt - b.dt};
    if (r * LaurentPoly::monomial(u.c, u.dq, u.dt) != p) return std::nullopt;
    return u;
}

inline std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& tm : terms_) {
        BigInt mag = tm.c < 0 ? BigInt(-tm.c) : tm.c;
        if (first) {
            if (tm.c < 0) os << "-";
        } else {
            os << (tm.c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = tm.dq != 0 || tm.dt != 0;
        bool wrote = false;
        if (mag != 1 || !has_var) {
            os << mag;
            wrote = true;
        }
        auto var = [&](char v, std::int64_t e) {
            if (e == 0) return;
            if (wrote) os << "*";
            os << v;
            if (e != 1) os << "^" << e;
            wrote = true;
        };
        var('q', tm.dq);
        var('t', tm.dt);
    }
    return os.str();
}

// Accepts the output of to_string: terms like 3, -q, 2*q^-1*t^2 joined by + or -.
inline LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    std::vector<Term> raw;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(i) + ": " + why);
    };
    auto read_int = [&](bool allow_sign) {
        std::size_t st = i;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected digits");
        return s.substr(st, i - st);
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        Term tm{0, 0, 1};
        bool any = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (any) {
                if (s[i] != '*') fail("expected *");
                ++i;
            }
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                tm.c *= BigInt(read_int(false));
            } else if (i < s.size() && (s[i] == 'q' || s[i] == 't')) {
                char v = s[i++];
                std::int64_t e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = std::stoll(read_int(true));
                }
                (v == 'q' ? tm.dq : tm.dt) += e;
            } else {
                fail("unexpected character");
            }
            any = true;
        }
        if (!any) fail("empty term");
        tm.c *= sign;
        raw.push_back(std::move(tm));
    }
    return from_terms(std::move(raw));
}

}  // namespace lawrence
