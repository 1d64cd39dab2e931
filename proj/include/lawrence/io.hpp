#pragma once

#include "braid.hpp"
#include "curves.hpp"
#include "laurent.hpp"
#include "pairing.hpp"
#include "rep.hpp"

#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

namespace lawrence {

using nlohmann::json;

// Coefficients that do not fit in 64 bits are written as decimal strings.
inline json to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& tm : p.terms()) {
        json c;
        if (tm.c >= std::numeric_limits<long long>::min() && tm.c <= std::numeric_limits<long long>::max())
            c = static_cast<long long>(tm.c);
        else
            c = tm.c.str();
        arr.push_back({{"c", c}, {"dq", tm.dq}, {"dt", tm.dt}});
    }
    return arr;
}

inline LaurentPoly poly_from_json(const json& j) {
    std::vector<Term> terms;
    for (const auto& e : j) {
        BigInt c = e.at("c").is_string() ? BigInt(e.at("c").get<std::string>()) : BigInt(e.at("c").get<long long>());
        terms.push_back({e.at("dq").get<std::int64_t>(), e.at("dt").get<std::int64_t>(), c});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

inline json to_json(const BraidWord& w) { return {{"n", w.n}, {"letters", w.letters}}; }

inline BraidWord word_from_json(const json& j) {
    return BraidWord(j.at("n").get<int>(), j.at("letters").get<std::vector<int>>());
}

inline json to_json(const RepMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.d; ++r) {
        json row = json::array();
        for (int c = 0; c < m.d; ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(row);
    }
    return {{"family", family_name(m.family)}, {"n", m.n}, {"m", m.m()}, {"basis", m.basis}, {"entries", rows}};
}

inline json to_json(const PairingMatrix& p) {
    json rows = json::array();
    json basis = json::array();
    for (int i = 1; i <= p.dim(); ++i) {
        basis.push_back(json::array({i}));
        json row = json::array();
        for (int j = 1; j <= p.dim(); ++j) row.push_back(to_json(p.at(i, j)));
        rows.push_back(row);
    }
    return {{"family", "pairing"}, {"n", p.n}, {"m", p.m}, {"basis", basis}, {"entries", rows}};
}

inline json to_json(const IntersectionData& d) {
    return {{"l", d.size()}, {"eps", d.eps}, {"a", d.a}, {"b", d.b}};
}

inline json to_json(const ArcCode& a) {
    auto ep = [](const Endpoint& e) {
        const char* kind = e.kind == Endpoint::Kind::puncture ? "puncture"
                           : e.kind == Endpoint::Kind::anchor ? "anchor"
                           : e.kind == Endpoint::Kind::top    ? "top"
                                                              : "bottom";
        return json{{"kind", kind}, {"index", e.index}};
    };
    json ev = json::array();
    for (const auto& e : a.events)
        ev.push_back({{"k", e.k}, {"ray", e.ray == Ray::lower ? "lower" : "upper"}, {"dir", e.dir}});
    return {{"start", ep(a.start)}, {"end", ep(a.end)}, {"events", ev}};
}

// Matrix evaluated at rational q0, t0, one row per line.
inline std::string to_csv(const RepMatrix& m, const BigRational& q0, const BigRational& t0) {
    std::ostringstream os;
    for (int r = 0; r < m.d; ++r) {
        for (int c = 0; c < m.d; ++c) {
            if (c) os << ',';
            os << m.at(r, c).eval(q0, t0).str();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace lawrence
