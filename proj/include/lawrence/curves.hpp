#pragma once

#include "braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Combinatorial curve engine on the n-punctured disk.
//
// Punctures p_1..p_n sit at x = 1..n on the real axis. From each puncture a lower
// ray drops to the bottom boundary and an upper ray rises to the top boundary.
// The rays cut the disk into vertical strips 0..n (strip s lies between p_s and
// p_{s+1}). The anchor sits on the bottom boundary of strip 0.
//
// An arc starting at the anchor is stored as its free-group word of lower-ray
// crossings (letter k: crossing ray k left to right, -k: right to left). Upper-ray
// crossings are implied: between two letters the arc travels over the punctures.
namespace lawrence {

using FreeWord = std::vector<int>;

namespace fg {

inline void push_reduced(FreeWord& w, int x) {
    if (!w.empty() && w.back() == -x)
        w.pop_back();
    else
        w.push_back(x);
}

inline FreeWord reduce(const FreeWord& w) {
    FreeWord r;
    for (int x : w) push_reduced(r, x);
    return r;
}

inline FreeWord inverse(const FreeWord& w) {
    FreeWord r(w.rbegin(), w.rend());
    for (int& x : r) x = -x;
    return r;
}

inline int exponent_sum(const FreeWord& w) {
    int s = 0;
    for (int x : w) s += x > 0 ? 1 : -1;
    return s;
}

// Artin action of sigma_k^e on a single letter.
inline FreeWord image(int k, int e, int x) {
    int a = std::abs(x);
    FreeWord r;
    if (e > 0) {
        if (a == k)
            r = {k, k + 1, -k};
        else if (a == k + 1)
            r = {k};
        else
            r = {a};
    } else {
        if (a == k)
            r = {k + 1};
        else if (a == k + 1)
            r = {-(k + 1), k, k + 1};
        else
            r = {a};
    }
    return x > 0 ? r : inverse(r);
}

inline FreeWord act(const FreeWord& w, int letter) {
    int k = std::abs(letter), e = letter > 0 ? 1 : -1;
    FreeWord out;
    for (int x : w)
        for (int y : image(k, e, x)) push_reduced(out, y);
    return out;
}

// Image of a path from the anchor to puncture `end`, with the endpoint correction
// that accounts for the puncture itself moving.
inline void act_on_path(FreeWord& w, int& end, int letter) {
    int k = std::abs(letter), e = letter > 0 ? 1 : -1;
    FreeWord out = act(w, letter);
    if (e > 0) {
        if (end == k) {
            push_reduced(out, k);
            end = k + 1;
        } else if (end == k + 1) {
            end = k;
        }
    } else {
        if (end == k) {
            end = k + 1;
        } else if (end == k + 1) {
            push_reduced(out, -(k + 1));
            end = k;
        }
    }
    w = std::move(out);
}

}  // namespace fg

struct DiskModel {
    int n = 2;
    explicit DiskModel(int strands) : n(strands) {
        if (n < 2) throw std::invalid_argument("disk model needs at least two punctures");
    }
};

enum class Ray : char { lower = 'L', upper = 'U' };

// Crossing of the lower or upper ray of puncture k; dir +1 means left to right.
struct WallEvent {
    int k = 0;
    Ray ray = Ray::lower;
    int dir = 1;
    friend bool operator==(const WallEvent&, const WallEvent&) = default;
};

struct Endpoint {
    enum class Kind { puncture, anchor, top, bottom };
    Kind kind = Kind::anchor;
    int index = 0;  // puncture number, or strip number for boundary points
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct ArcCode {
    std::vector<WallEvent> events;
    Endpoint start;
    Endpoint end;
    friend bool operator==(const ArcCode&, const ArcCode&) = default;
};

inline bool is_tight(const ArcCode& a) {
    for (std::size_t i = 1; i < a.events.size(); ++i)
        if (a.events[i].k == a.events[i - 1].k && a.events[i].ray == a.events[i - 1].ray &&
            a.events[i].dir == -a.events[i - 1].dir)
            return false;
    return true;
}

namespace detail {

inline int need_strip(int x) { return x > 0 ? std::abs(x) - 1 : std::abs(x); }
inline int after_strip(int x) { return x > 0 ? std::abs(x) : std::abs(x) - 1; }
inline int puncture_target(int s, int p) { return s <= p - 1 ? p - 1 : p; }

inline void horizontal(std::vector<WallEvent>& ev, std::vector<int>* lidx, int consumed, int s, int target) {
    while (s < target) {
        ev.push_back({s + 1, Ray::upper, 1});
        if (lidx) lidx->push_back(consumed);
        ++s;
    }
    while (s > target) {
        ev.push_back({s, Ray::upper, -1});
        if (lidx) lidx->push_back(consumed);
        --s;
    }
}

// Wall events of a letter sequence started in strip s. lidx[e] counts the letters
// already crossed once event e has happened. Returns the final strip.
inline int letters_code(int s, const FreeWord& w, std::vector<WallEvent>& ev, std::vector<int>& lidx) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        int x = w[i];
        horizontal(ev, &lidx, static_cast<int>(i), s, need_strip(x));
        ev.push_back({std::abs(x), Ray::lower, x > 0 ? 1 : -1});
        lidx.push_back(static_cast<int>(i) + 1);
        s = after_strip(x);
    }
    return s;
}

inline FreeWord strip_spins(FreeWord w, int p) {
    while (!w.empty() && std::abs(w.back()) == p) w.pop_back();
    return w;
}

}  // namespace detail

// A fork as two anchored paths sharing the handle: A_- ends at p_-, A_+ at p_+.
// The tine is A_-^-1 A_+ and the handle is their common initial part.
struct Fork {
    int n = 2;
    FreeWord wm;
    int pm = 1;
    FreeWord wp;
    int pp = 2;
    friend bool operator==(const Fork&, const Fork&) = default;
};

// Noodle from the bottom of strip j to the top of strip j; w is the lower-ray word
// of the path measured from the bottom endpoint.
struct Noodle {
    int n = 2;
    int j = 1;
    FreeWord w;
    friend bool operator==(const Noodle&, const Noodle&) = default;
};

inline Fork standard_fork(const DiskModel& model, int i) {
    if (i < 1 || i > model.n - 1) throw std::invalid_argument("standard_fork: index out of range");
    Fork f;
    f.n = model.n;
    for (int k = 1; k <= i; ++k) f.wm.push_back(k);
    f.wp = f.wm;
    f.pm = i;
    f.pp = i + 1;
    f.wm = detail::strip_spins(f.wm, f.pm);
    return f;
}

inline Noodle standard_noodle(const DiskModel& model, int j) {
    if (j < 1 || j > model.n - 1) throw std::invalid_argument("standard_noodle: index out of range");
    return Noodle{model.n, j, {}};
}

inline Fork apply_word(const DiskModel& model, Fork f, const BraidWord& w) {
    if (w.n != model.n || f.n != model.n) throw std::invalid_argument("apply_word: strand mismatch");
    for (int l : w.letters) {
        fg::act_on_path(f.wm, f.pm, l);
        fg::act_on_path(f.wp, f.pp, l);
    }
    f.wm = detail::strip_spins(f.wm, f.pm);
    f.wp = detail::strip_spins(f.wp, f.pp);
    return f;
}

// The homeomorphism fixes the boundary, so the path from the anchor along the
// bottom boundary (word x_1..x_j) is fixed; conjugating by it moves the noodle.
inline Noodle apply_word(const DiskModel& model, Noodle nd, const BraidWord& w) {
    if (w.n != model.n || nd.n != model.n) throw std::invalid_argument("apply_word: strand mismatch");
    FreeWord base;
    for (int k = 1; k <= nd.j; ++k) base.push_back(k);
    FreeWord full = base;
    for (int x : nd.w) fg::push_reduced(full, x);
    for (int l : w.letters) full = fg::act(full, l);
    FreeWord r = fg::inverse(base);
    for (int x : full) fg::push_reduced(r, x);
    nd.w = std::move(r);
    return nd;
}

inline ArcCode noodle_code(const Noodle& nd) {
    ArcCode a;
    a.start = {Endpoint::Kind::bottom, nd.j};
    a.end = {Endpoint::Kind::top, nd.j};
    std::vector<int> lidx;
    int s = nd.j;
    s = detail::letters_code(s, nd.w, a.events, lidx);
    detail::horizontal(a.events, nullptr, 0, s, nd.j);
    return a;
}

// Crossings of a noodle with the straight axis segment from p_i to p_{i+1}: a
// passage through strip i between the lower half (lower rays, bottom boundary)
// and the upper half (upper rays, top boundary) crosses it once.
inline int axis_crossings(const Noodle& nd, int i) {
    ArcCode a = noodle_code(nd);
    auto lower_at = [&](int t) {
        if (t == 0) return true;
        if (t == static_cast<int>(a.events.size()) + 1) return false;
        return a.events[t - 1].ray == Ray::lower;
    };
    int count = 0;
    int s = nd.j;
    for (std::size_t t = 0; t <= a.events.size(); ++t) {
        if (t > 0) {
            const WallEvent& e = a.events[t - 1];
            s = e.dir > 0 ? e.k : e.k - 1;
        }
        if (s == i && lower_at(static_cast<int>(t)) != lower_at(static_cast<int>(t) + 1)) ++count;
    }
    return count;
}

struct IntersectionData {
    std::vector<int> eps;
    std::vector<int> a;
    std::vector<std::vector<int>> b;
    std::size_t size() const { return eps.size(); }
    friend bool operator==(const IntersectionData&, const IntersectionData&) = default;
};

namespace detail {

enum class Edge { H, Tm, Tp };

struct Piece {
    Edge e = Edge::H;
    int k = -1;  // segment after event k of the edge, in edge order; -1 is the start
    friend bool operator==(const Piece&, const Piece&) = default;
};

struct Item {
    enum class Kind { ray, puncture, anchor } kind = Kind::anchor;
    int k = 0;
    Ray ray = Ray::lower;
};

struct Arc {
    std::vector<WallEvent> ev;
    Item start;
    Item end;
    std::vector<std::vector<Piece>> segs;  // pieces covered by each of the ev.size()+1 segments
};

struct EdgeCode {
    std::vector<WallEvent> ev;
    std::vector<int> lidx;
};

inline Item ray_item(const WallEvent& e) { return {Item::Kind::ray, e.k, e.ray}; }

// Clockwise position of an item on the boundary of strip s:
// 0 top, 1 upper ray s+1, 2 p_{s+1}, 3 lower ray s+1, 4 bottom, 5 lower ray s, 6 p_s, 7 upper ray s.
inline int element_in(int s, const Item& it) {
    switch (it.kind) {
        case Item::Kind::anchor:
            return 4;
        case Item::Kind::puncture:
            return it.k == s + 1 ? 2 : 6;
        case Item::Kind::ray:
            if (it.k == s + 1) return it.ray == Ray::upper ? 1 : 3;
            if (it.k != s) throw std::logic_error("ray is not on this strip");
            return it.ray == Ray::upper ? 7 : 5;
    }
    return -1;
}

inline int strip_after(const WallEvent& e) { return e.dir > 0 ? e.k : e.k - 1; }

class Tree {
public:
    Tree(FreeWord wm, int pm, FreeWord wp, int pp) : pm_(pm), pp_(pp) {
        std::size_t c = 0;
        while (c < wm.size() && c < wp.size() && wm[c] == wp[c]) ++c;
        // One path may run around the other's puncture before splitting off; the
        // junction then moves past those spins.
        if (c == wm.size() && c < wp.size()) {
            while (c < wp.size() && std::abs(wp[c]) == pm) ++c;
            wm.assign(wp.begin(), wp.begin() + static_cast<long>(c));
        } else if (c == wp.size() && c < wm.size()) {
            while (c < wm.size() && std::abs(wm[c]) == pp) ++c;
            wp.assign(wm.begin(), wm.begin() + static_cast<long>(c));
        }
        common_.assign(wm.begin(), wm.begin() + static_cast<long>(c));
        rm_.assign(wm.begin() + static_cast<long>(c), wm.end());
        rp_.assign(wp.begin() + static_cast<long>(c), wp.end());

        EdgeCode& h = edges_[0];
        int sh = letters_code(0, common_, h.ev, h.lidx);
        int s1 = rm_.empty() ? puncture_target(sh, pm_) : need_strip(rm_[0]);
        int s2 = rp_.empty() ? puncture_target(sh, pp_) : need_strip(rp_[0]);
        zs_ = std::clamp(sh, std::min(s1, s2), std::max(s1, s2));
        horizontal(h.ev, &h.lidx, static_cast<int>(common_.size()), sh, zs_);
        edges_[1] = half(rm_, pm_);
        edges_[2] = half(rp_, pp_);
        if (h.ev.empty())
            harr_ = 'A';
        else
            harr_ = h.ev.back().dir > 0 ? 'L' : 'R';
        build_arcs();
    }

    const EdgeCode& edge(Edge e) const { return edges_[static_cast<int>(e)]; }
    const Arc& arc(int which) const { return arcs_[which]; }  // 0 A_+, 1 A_-, 2 tine
    int pm() const { return pm_; }
    int pp() const { return pp_; }

    // Lower-ray word of the path from the anchor to the end of a piece.
    FreeWord prefix_word(const Piece& pc) const {
        FreeWord w = common_;
        if (pc.e == Edge::H) return w;
        const FreeWord& r = pc.e == Edge::Tp ? rp_ : rm_;
        int used = pc.k >= 0 ? edge(pc.e).lidx[static_cast<std::size_t>(pc.k)] : 0;
        w.insert(w.end(), r.begin(), r.begin() + used);
        return w;
    }

    // Which half of strip zs holds the junction z: 'L', 'R' or 'A' (anchor).
    char junction_half() const {
        char xm = exit_side(Edge::Tm, pm_), xp = exit_side(Edge::Tp, pp_);
        return xm != xp ? harr_ : xm;
    }

    ArcCode tine_code() const {
        ArcCode a;
        a.events = arcs_[2].ev;
        a.start = {Endpoint::Kind::puncture, pm_};
        a.end = {Endpoint::Kind::puncture, pp_};
        return a;
    }

private:
    int pm_, pp_;
    FreeWord common_, rm_, rp_;
    int zs_ = 0;
    char harr_ = 'A';
    EdgeCode edges_[3];
    Arc arcs_[3];

    EdgeCode half(const FreeWord& r, int p) const {
        EdgeCode ec;
        int first = r.empty() ? puncture_target(zs_, p) : need_strip(r[0]);
        horizontal(ec.ev, &ec.lidx, 0, zs_, first);
        int se = letters_code(first, r, ec.ev, ec.lidx);
        horizontal(ec.ev, &ec.lidx, static_cast<int>(r.size()), se, puncture_target(se, p));
        return ec;
    }

    char exit_side(Edge e, int p) const {
        const auto& ev = edge(e).ev;
        if (!ev.empty()) return ev.front().dir > 0 ? 'R' : 'L';
        return p == zs_ ? 'L' : 'R';
    }

    void build_arcs() {
        const auto& H = edge(Edge::H).ev;
        const auto& M = edge(Edge::Tm).ev;
        const auto& P = edge(Edge::Tp).ev;
        int LH = static_cast<int>(H.size()), LM = static_cast<int>(M.size()), LP = static_cast<int>(P.size());
        auto make = [](const std::vector<Piece>& pieces, std::size_t junction) {
            std::vector<std::vector<Piece>> segs;
            std::vector<Piece> cur{pieces[0]};
            for (std::size_t idx = 1; idx < pieces.size(); ++idx) {
                if (idx == junction) {
                    cur.push_back(pieces[idx]);
                } else {
                    segs.push_back(cur);
                    cur = {pieces[idx]};
                }
            }
            segs.push_back(cur);
            return segs;
        };
        for (int which = 0; which < 2; ++which) {
            Edge te = which == 0 ? Edge::Tp : Edge::Tm;
            const auto& T = which == 0 ? P : M;
            Arc& a = arcs_[which];
            a.ev = H;
            a.ev.insert(a.ev.end(), T.begin(), T.end());
            a.start = {Item::Kind::anchor, 0, Ray::lower};
            a.end = {Item::Kind::puncture, which == 0 ? pp_ : pm_, Ray::lower};
            std::vector<Piece> pieces;
            for (int k = -1; k < LH; ++k) pieces.push_back({Edge::H, k});
            int LT = static_cast<int>(T.size());
            for (int k = -1; k < LT; ++k) pieces.push_back({te, k});
            a.segs = make(pieces, static_cast<std::size_t>(LH + 1));
        }
        Arc& t = arcs_[2];
        for (int k = LM - 1; k >= 0; --k) t.ev.push_back({M[k].k, M[k].ray, -M[k].dir});
        t.ev.insert(t.ev.end(), P.begin(), P.end());
        t.start = {Item::Kind::puncture, pm_, Ray::lower};
        t.end = {Item::Kind::puncture, pp_, Ray::lower};
        std::vector<Piece> pieces;
        for (int k = LM - 1; k >= -1; --k) pieces.push_back({Edge::Tm, k});
        for (int k = -1; k < LP; ++k) pieces.push_back({Edge::Tp, k});
        t.segs = make(pieces, static_cast<std::size_t>(LM + 1));
        for (auto& a : arcs_)
            if (a.segs.size() != a.ev.size() + 1) throw std::logic_error("fork tree: segment count");
    }
};

inline int segment_strip(const Arc& a, std::size_t t) {
    if (t > 0) return strip_after(a.ev[t - 1]);
    if (!a.ev.empty()) return a.ev[0].dir > 0 ? a.ev[0].k - 1 : a.ev[0].k;
    int x = a.start.kind == Item::Kind::anchor ? 0 : a.start.k;
    return std::min(x, a.end.k);
}

// Item reached by following the strand through event e into strip s.
inline std::pair<Item, int> follow(const Arc& a, int e, int s) {
    bool fwd = strip_after(a.ev[static_cast<std::size_t>(e)]) == s;
    if (fwd) {
        if (e + 1 < static_cast<int>(a.ev.size())) return {ray_item(a.ev[static_cast<std::size_t>(e) + 1]), e + 1};
        return {a.end, -1};
    }
    if (e - 1 >= 0) return {ray_item(a.ev[static_cast<std::size_t>(e) - 1]), e - 1};
    return {a.start, -1};
}

// Whether event ea lies nearer to its puncture than eb, both crossing the same ray
// bordering strip s. Strands in one strip do not cross, so the order along the ray
// is read off from where the strands go next, recursing while they run parallel.
inline bool ray_nearer(const Arc& a, int ea, int eb, int s) {
    const WallEvent& w = a.ev[static_cast<std::size_t>(ea)];
    int r = element_in(s, ray_item(w));
    auto [A, ia] = follow(a, ea, s);
    auto [B, ib] = follow(a, eb, s);
    int xa = element_in(s, A), xb = element_in(s, B);
    bool b_after;
    if (xa != xb) {
        b_after = ((xb - r) % 8 + 8) % 8 < ((xa - r) % 8 + 8) % 8;
    } else {
        if (A.kind != Item::Kind::ray || ia < 0 || ib < 0) throw std::logic_error("ray order: strands merge");
        int ns = A.k == s + 1 ? A.k : A.k - 1;
        bool na = ray_nearer(a, ia, ib, ns);
        bool within_after = (xa == 3 || xa == 7) ? na : !na;
        b_after = !within_after;
    }
    return (r == 3 || r == 7) ? b_after : !b_after;
}

struct Traversal {
    std::size_t t;
    int dir;
    Piece piece;
};

class NoodleView {
public:
    NoodleView(const Tree& tr, int j) : tr_(tr), j_(j) {
        for (int w = 0; w < 3; ++w) cross_[w] = traversals(tr.arc(w));
    }

    const std::vector<Traversal>& crossings(int which) const { return cross_[which]; }

    // Whether the crossing carried by piece pa lies above the one carried by pb on N_j.
    bool above(const Piece& pa, const Piece& pb) const {
        if (pa == pb) throw std::logic_error("comparing a crossing with itself");
        int w = arc_for(pa, pb);
        const Arc& a = tr_.arc(w);
        const Traversal& ta = find(w, pa);
        const Traversal& tb = find(w, pb);
        auto [ia, ea] = left_item(a, ta);
        auto [ib, eb] = left_item(a, tb);
        int ra = rank(ia), rb = rank(ib);
        if (ra != rb) return ra > rb;
        if (ea < 0 || eb < 0) throw std::logic_error("noodle order: shared endpoint");
        bool nearer = ray_nearer(a, ea, eb, j_);
        return ia.ray == Ray::upper ? !nearer : nearer;
    }

    const Traversal& find(int which, const Piece& pc) const {
        for (const auto& tv : cross_[which])
            if (tv.piece == pc) return tv;
        throw std::logic_error("crossing not found on arc");
    }

private:
    const Tree& tr_;
    int j_;
    std::vector<Traversal> cross_[3];

    static int arc_for(const Piece& a, const Piece& b) {
        bool has_p = a.e == Edge::Tp || b.e == Edge::Tp;
        bool has_m = a.e == Edge::Tm || b.e == Edge::Tm;
        if (has_p && has_m) return 2;
        return has_m ? 1 : 0;
    }

    static int rank(const Item& it) {
        if (it.kind == Item::Kind::puncture) return 1;
        return it.ray == Ray::lower ? 0 : 2;
    }

    std::pair<Item, int> left_item(const Arc& a, const Traversal& tv) const {
        if (tv.dir > 0) {
            if (tv.t > 0) return {ray_item(a.ev[tv.t - 1]), static_cast<int>(tv.t) - 1};
            return {a.start, -1};
        }
        if (tv.t < a.ev.size()) return {ray_item(a.ev[tv.t]), static_cast<int>(tv.t)};
        return {a.end, -1};
    }

    Piece crossing_piece(const std::vector<Piece>& seg, int dir) const {
        if (seg.size() == 1) return seg[0];
        char zh = tr_.junction_half();
        char entry = dir > 0 ? 'L' : 'R';
        return zh == entry ? seg[1] : seg[0];
    }

    std::vector<Traversal> traversals(const Arc& a) const {
        std::vector<Traversal> out;
        auto on_left = [&](const Item& it) {
            return (it.kind == Item::Kind::puncture || it.kind == Item::Kind::ray) && it.k == j_;
        };
        for (std::size_t t = 0; t <= a.ev.size(); ++t) {
            if (segment_strip(a, t) != j_) continue;
            Item in = t > 0 ? ray_item(a.ev[t - 1]) : a.start;
            Item ex = t < a.ev.size() ? ray_item(a.ev[t]) : a.end;
            if (on_left(in) && !on_left(ex))
                out.push_back({t, 1, crossing_piece(a.segs[t], 1)});
            else if (on_left(ex) && !on_left(in))
                out.push_back({t, -1, crossing_piece(a.segs[t], -1)});
        }
        return out;
    }
};

}  // namespace detail

inline ArcCode tine_code(const Fork& f) {
    return detail::Tree(f.wm, f.pm, f.wp, f.pp).tine_code();
}

// Intersection data of the tine of f with the standard noodle N_j, ordered from the
// bottom of the noodle to the top.
//
// b_{ij} is the signed number of half twists of the two-point loop with the first
// cable copy at x_i and the second at x'_j. The points are moved one at a time
// (second copy out to x'_j first) and swaps are read off as the mover crossing the
// vertical line of N_j above or below the parked point. Moving one at a time
// differs from the simultaneous handle-then-tine motion by a full twist exactly
// when x_j lies on the p_+ side of the junction, where the handle crosses the
// parallel tine.
inline IntersectionData intersection_data(const DiskModel& model, const Fork& f, int j) {
    if (f.n != model.n) throw std::invalid_argument("intersection_data: strand mismatch");
    if (j < 1 || j > model.n - 1) throw std::invalid_argument("intersection_data: noodle index out of range");
    using namespace detail;
    Tree tr(f.wm, f.pm, f.wp, f.pp);
    NoodleView nv(tr, j);

    std::vector<Traversal> tine = nv.crossings(2);
    std::stable_sort(tine.begin(), tine.end(),
                     [&](const Traversal& x, const Traversal& y) { return nv.above(y.piece, x.piece); });

    IntersectionData d;
    std::size_t l = tine.size();
    for (const auto& tv : tine) {
        d.eps.push_back(tv.dir);
        d.a.push_back(fg::exponent_sum(tr.prefix_word(tv.piece)));
    }
    d.b.assign(l, std::vector<int>(l, 0));
    for (std::size_t ii = 0; ii < l; ++ii) {
        const Piece& pi = tine[ii].piece;
        int path = pi.e == Edge::Tp ? 0 : 1;
        for (std::size_t jj = 0; jj < l; ++jj) {
            const Piece& pj = tine[jj].piece;
            int ej = tine[jj].dir;
            // the pushoff x'_j sits just below x_j when the tine crosses rightward
            auto above_parked = [&](const Piece& pc) { return pc == pj ? ej > 0 : nv.above(pc, pj); };
            int tot = 1;
            bool reached = false;
            for (const auto& tv : nv.crossings(path)) {
                bool ab = above_parked(tv.piece);
                if (tv.piece == pi) {
                    if ((tv.dir > 0 && ab) || (tv.dir < 0 && !ab)) tot -= 1;
                    reached = true;
                    break;
                }
                tot += ab ? -tv.dir : tv.dir;
            }
            if (!reached) throw std::logic_error("intersection_data: crossing not on its path");
            if (pj.e == Edge::Tp) tot += 2;
            d.b[ii][jj] = tot;
        }
    }
    return d;
}

inline IntersectionData intersection_data(const DiskModel& model, const BraidWord& w, int i, int j) {
    return intersection_data(model, apply_word(model, standard_fork(model, i), w), j);
}

}  // namespace lawrence
