#pragma once

#include "braid.hpp"
#include "curves.hpp"
#include "laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Floating-point reference backend. Half twists act on polylines in the plane, the
// cabled fork is carried along explicitly, and eps, a, b are read off from winding
// angles. Every rounding step is guarded by a margin check; a failed check throws
// Uncertified instead of returning a guess.
namespace lawrence::pl {

struct Vec2 {
    double x = 0, y = 0;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

using Polyline = std::vector<Vec2>;

struct Uncertified : std::runtime_error {
    explicit Uncertified(const std::string& m) : std::runtime_error("uncertified: " + m) {}
};

struct Options {
    double tol = 1e-6;      // allowed chord deviation when refining a twisted segment
    double hmax = 0.01;     // longest chord inside a twist annulus
    double cable = 0.05;    // offset of the second cable copy
    double vertex_margin = 1e-10;
    double point_margin = 1e-9;
    double integrality = 1e-6;
};

constexpr double kInner = 0.6;
constexpr double kOuter = 1.1;
constexpr double kTop = 3.0;
constexpr double kBaseX = 0.3;
constexpr double kLeft = -1.0;
constexpr double kNoodleShift = 0.0123;

// Second copy of the fork: handle and tine pushed to the lower left.
struct CabledFork {
    int n = 2;
    Polyline H, Tm, Tp;
    Polyline H2, Tm2, Tp2;
    Vec2 b1, b2;
};

inline Vec2 twist(Vec2 p, int k, int e) {
    Vec2 c{k + 0.5, 0.0};
    Vec2 d = p - c;
    double r = norm(d);
    double ang = r <= kInner ? std::numbers::pi : r >= kOuter ? 0.0 : std::numbers::pi * (kOuter - r) / (kOuter - kInner);
    ang *= e;
    double ca = std::cos(ang), sa = std::sin(ang);
    return c + Vec2{ca * d.x - sa * d.y, sa * d.x + ca * d.y};
}

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 d = b - a;
    double dd = dot(d, d);
    double t = dd > 0 ? std::clamp(dot(p - a, d) / dd, 0.0, 1.0) : 0.0;
    return norm(a + d * t - p);
}

namespace detail {

inline void refine_into(Polyline& out, Vec2 a, Vec2 b, Vec2 fa, Vec2 fb, int k, int e, const Options& o, int depth) {
    Vec2 m = (a + b) * 0.5;
    Vec2 fm = twist(m, k, e);
    bool split = norm(fm - (fa + fb) * 0.5) > o.tol || norm(b - a) > o.hmax;
    if (split && depth < 40) {
        refine_into(out, a, m, fa, fm, k, e, o, depth + 1);
        refine_into(out, m, b, fm, fb, k, e, o, depth + 1);
    } else {
        out.push_back(fb);
    }
}

}  // namespace detail

// Image of a polyline under one half twist. Chords that meet the shearing annulus
// are subdivided until the image of each midpoint is within tol of the chord.
inline Polyline apply_twist(const Polyline& P, int k, int e, const Options& o) {
    Vec2 c{k + 0.5, 0.0};
    Polyline out;
    out.reserve(P.size());
    out.push_back(twist(P[0], k, e));
    for (std::size_t s = 0; s + 1 < P.size(); ++s) {
        Vec2 a = P[s], b = P[s + 1];
        Vec2 fb = twist(b, k, e);
        bool outside = point_segment_distance(c, a, b) >= kOuter;
        bool inside = std::max(norm(a - c), norm(b - c)) <= kInner;
        if (outside || inside)
            out.push_back(fb);
        else
            detail::refine_into(out, a, b, out.back(), fb, k, e, o, 0);
    }
    return out;
}

inline CabledFork standard_cabled_fork(int n, int i, const Options& o = {}) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("standard_cabled_fork: index out of range");
    double dl = o.cable;
    Vec2 z{i + 0.4, 0.0};
    Vec2 z2{i + 0.4 - dl, -dl};
    CabledFork f;
    f.n = n;
    f.H = {{kBaseX, -kTop}, {kBaseX, -1.5}, {i + 0.4, -1.5}, z};
    f.Tm = {z, {static_cast<double>(i), 0.0}};
    f.Tp = {z, {i + 1.0, 0.0}};
    f.H2 = {{kBaseX - dl, -kTop}, {kBaseX - dl, -1.5 + dl}, {i + 0.4 - dl, -1.5 + dl}, z2};
    f.Tm2 = {z2, {i + 0.15, -dl}, {static_cast<double>(i), 0.0}};
    f.Tp2 = {z2, {i + 0.85, -dl}, {i + 1.0, 0.0}};
    f.b1 = {kBaseX, -kTop};
    f.b2 = {kBaseX - dl, -kTop};
    return f;
}

inline CabledFork apply_word(CabledFork f, const BraidWord& w, const Options& o = {}) {
    if (w.n != f.n) throw std::invalid_argument("pl::apply_word: strand mismatch");
    for (int l : w.letters) {
        int k = std::abs(l), e = l > 0 ? 1 : -1;
        for (Polyline* p : {&f.H, &f.Tm, &f.Tp, &f.H2, &f.Tm2, &f.Tp2}) *p = apply_twist(*p, k, e, o);
    }
    return f;
}

namespace detail {

// Angle swept by the straight segment a->b as seen from p.
inline double sweep(Vec2 a, Vec2 b, Vec2 p, const Options& o) {
    if (point_segment_distance(p, a, b) <= o.point_margin) throw Uncertified("path passes too close to a point");
    return std::atan2(cross(a - p, b - p), dot(a - p, b - p));
}

inline double sweep_path(const Polyline& P, Vec2 p, const Options& o) {
    double s = 0;
    for (std::size_t k = 0; k + 1 < P.size(); ++k) s += sweep(P[k], P[k + 1], p, o);
    return s;
}

// Tine joined at the junction: reversed Tm followed by Tp. zi is the junction vertex.
struct Tine {
    Polyline P;
    std::size_t zi = 0;
};

inline Tine join(const Polyline& tm, const Polyline& tp) {
    Tine t;
    t.P.assign(tm.rbegin(), tm.rend());
    t.P.insert(t.P.end(), tp.begin() + 1, tp.end());
    t.zi = tm.size() - 1;
    return t;
}

struct Crossing {
    std::size_t s = 0;  // segment index
    double u = 0;
    double y = 0;
    int dir = 1;
    Vec2 at(const Polyline& P) const { return P[s] + (P[s + 1] - P[s]) * u; }
};

// Prefix sums of swept angle along a polyline around a fixed point.
struct Sweeper {
    const Polyline* P = nullptr;
    Vec2 p;
    std::vector<double> cum;
    const Options* o = nullptr;

    Sweeper(const Polyline& poly, Vec2 pt, const Options& opt, std::size_t skip_first = 0, std::size_t skip_last = 0)
        : P(&poly), p(pt), o(&opt) {
        cum.assign(poly.size(), 0.0);
        for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
            bool end_touch = k < skip_first || k + 1 + skip_last >= poly.size();
            double d = end_touch ? std::atan2(cross(poly[k] - p, poly[k + 1] - p), dot(poly[k] - p, poly[k + 1] - p))
                                 : sweep(poly[k], poly[k + 1], p, opt);
            cum[k + 1] = cum[k] + d;
        }
    }

    // Angle along the polyline from vertex zi to the point at crossing c.
    double from_junction(std::size_t zi, const Crossing& c) const {
        Vec2 x = c.at(*P);
        if (c.s >= zi) return cum[c.s] - cum[zi] + sweep((*P)[c.s], x, p, *o);
        return -(cum[zi] - cum[c.s + 1]) + sweep((*P)[c.s + 1], x, p, *o);
    }
};

inline std::vector<Crossing> line_crossings(const Polyline& P, double c, const Options& o) {
    std::vector<Crossing> out;
    for (std::size_t s = 0; s + 1 < P.size(); ++s) {
        double xa = P[s].x - c, xb = P[s + 1].x - c;
        if (std::abs(xa) <= o.vertex_margin || std::abs(xb) <= o.vertex_margin)
            throw Uncertified("vertex on the noodle line");
        if ((xa < 0) != (xb < 0)) {
            double u = xa / (xa - xb);
            out.push_back({s, u, P[s].y + u * (P[s + 1].y - P[s].y), xb > xa ? 1 : -1});
        }
    }
    return out;
}

inline long long certified_round(double v, const Options& o, const char* what) {
    double r = std::round(v);
    if (std::abs(v - r) > o.integrality) throw Uncertified(std::string("non-integral ") + what);
    return static_cast<long long>(r);
}

// Removes bigons between the tine and the noodle line: consecutive crossings along
// the curve with no other crossing between them on the line, cutting off a disk
// with no puncture inside.
inline std::vector<Crossing> tighten(const Tine& t, double c, const std::vector<Sweeper>& around, const Options& o) {
    std::vector<Crossing> cr = line_crossings(t.P, c, o);
    const int n = static_cast<int>(around.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a + 1 < cr.size(); ++a) {
            const Crossing& c1 = cr[a];
            const Crossing& c2 = cr[a + 1];
            double lo = std::min(c1.y, c2.y), hi = std::max(c1.y, c2.y);
            bool blocked = std::any_of(cr.begin(), cr.end(), [&](const Crossing& x) { return lo < x.y && x.y < hi; });
            if (blocked) continue;
            Vec2 x1 = c1.at(t.P), x2 = c2.at(t.P);
            bool empty = true;
            for (int p = 1; p <= n && empty; ++p) {
                const Sweeper& sw = around[static_cast<std::size_t>(p - 1)];
                double tot = sweep(x1, t.P[c1.s + 1], sw.p, o) + (sw.cum[c2.s] - sw.cum[c1.s + 1]) +
                             sweep(t.P[c2.s], x2, sw.p, o) + sweep(x2, x1, sw.p, o);
                if (std::abs(tot) >= std::numbers::pi) empty = false;
            }
            if (empty) {
                cr.erase(cr.begin() + static_cast<long>(a), cr.begin() + static_cast<long>(a) + 2);
                changed = true;
                break;
            }
        }
    }
    return cr;
}

inline Polyline return_path(Vec2 x, double c, Vec2 dest) {
    return {x, {c, kTop}, {kLeft, kTop}, {kLeft, -kTop}, dest};
}

// Geometry of one (fork image, noodle) pair, shared by both outputs below.
class Scene {
public:
    Scene(const BraidWord& w, int i, int j, const Options& o)
        : o_(o), n_(w.n), f_(apply_word(standard_cabled_fork(w.n, i, o), w, o)), c_(j + 0.5 + kNoodleShift) {
        if (j < 1 || j > n_ - 1) throw std::invalid_argument("pl: noodle index out of range");
        t1_ = join(f_.Tm, f_.Tp);
        t2_ = join(f_.Tm2, f_.Tp2);
        check_clearance();
        for (int p = 1; p <= n_; ++p) {
            Vec2 pt{static_cast<double>(p), 0.0};
            around1_.emplace_back(t1_.P, pt, o_, 1, 1);
            around2_.emplace_back(t2_.P, pt, o_, 1, 1);
            handle1_.push_back(sweep_path(f_.H, pt, o_));
            handle2_.push_back(sweep_path(f_.H2, pt, o_));
        }
        cr1_ = tighten(t1_, c_, around1_, o_);
        cr2_ = tighten(t2_, c_, around2_, o_);
        if (cr1_.size() != cr2_.size()) throw Uncertified("cable copies meet the noodle differently");
        z1_ = f_.H.back();
        z2_ = f_.H2.back();
        phase_a_ = sweep_path(f_.H2, f_.b1, o_);
        phase_b_ = sweep_path(f_.H, z2_, o_);
        t2_around_z1_ = std::make_unique<Sweeper>(t2_.P, z1_, o_);
    }

    const std::vector<Crossing>& copy1() const { return cr1_; }
    const std::vector<Crossing>& copy2() const { return cr2_; }

    // Total winding around all punctures of the loop through crossing x of one copy.
    long long a_of(int copy, const Crossing& x) const {
        const Tine& t = copy == 1 ? t1_ : t2_;
        const auto& around = copy == 1 ? around1_ : around2_;
        const auto& handle = copy == 1 ? handle1_ : handle2_;
        Vec2 base = copy == 1 ? f_.b1 : f_.b2;
        Polyline back = return_path(x.at(t.P), c_, base);
        double tot = 0;
        for (int p = 1; p <= n_; ++p) {
            auto k = static_cast<std::size_t>(p - 1);
            tot += handle[k] + around[k].from_junction(t.zi, x) + sweep_path(back, around[k].p, o_);
        }
        return certified_round(tot / (2 * std::numbers::pi), o_, "winding");
    }

    // Half twists of the two-point loop: copy 2 runs out to x2, then copy 1 to x1,
    // then the higher point returns first to the far base point.
    long long b_of(const Crossing& x1, const Crossing& x2) const {
        Vec2 p1 = x1.at(t1_.P), p2 = x2.at(t2_.P);
        if (std::abs(p1.y - p2.y) <= o_.point_margin) throw Uncertified("cable crossings coincide");
        double tot = phase_a_ + phase_b_;
        tot += t2_around_z1_->from_junction(t2_.zi, x2);
        tot += tine_around(x1, p2);
        Vec2 far = f_.b1, near = f_.b2;
        if (p1.y > p2.y) {
            tot += sweep_path(return_path(p1, c_, far), p2, o_);
            tot += sweep_path(return_path(p2, c_, near), far, o_);
        } else {
            tot += sweep_path(return_path(p2, c_, far), p1, o_);
            tot += sweep_path(return_path(p1, c_, near), far, o_);
        }
        return certified_round(tot / std::numbers::pi, o_, "relative winding");
    }

private:
    Options o_;
    int n_;
    CabledFork f_;
    double c_;
    Tine t1_, t2_;
    std::vector<Crossing> cr1_, cr2_;
    std::vector<Sweeper> around1_, around2_;
    std::vector<double> handle1_, handle2_;
    Vec2 z1_, z2_;
    double phase_a_ = 0, phase_b_ = 0;
    std::unique_ptr<Sweeper> t2_around_z1_;

    // Angle swept by copy 1 moving along its tine from the junction to x1, seen from
    // p2 on the noodle line. The angle is measured with its cut on the upward ray
    // from p2; crossings of that ray are read from the crossing list.
    double tine_around(const Crossing& x1, Vec2 p2) const {
        const Polyline& P = t1_.P;
        std::size_t zi = t1_.zi;
        auto phi = [&](Vec2 v) { return std::atan2(v.x - p2.x, -(v.y - p2.y)); };
        double cut = 0;
        for (const Crossing& k : line_crossings(P, c_, o_)) {
            if (std::abs(k.y - p2.y) <= o_.point_margin) throw Uncertified("tine meets the parked point");
            if (k.y < p2.y) continue;
            if (x1.s >= zi && k.s >= zi && k.s < x1.s) cut += k.dir;
            if (x1.s < zi && k.s > x1.s && k.s < zi) cut -= k.dir;
        }
        Vec2 p1 = x1.at(P);
        double end;
        if (p1.y > p2.y) {
            int arrive = x1.s >= zi ? x1.dir : -x1.dir;
            end = arrive > 0 ? -std::numbers::pi : std::numbers::pi;
        } else {
            end = 0.0;
        }
        return end - phi(P[zi]) - 2 * std::numbers::pi * cut;
    }

    void check_clearance() const {
        for (int p = 1; p <= n_; ++p) {
            Vec2 pt{static_cast<double>(p), 0.0};
            for (const Polyline* poly : {&f_.H, &f_.H2, &t1_.P, &t2_.P}) {
                for (std::size_t k = 0; k + 1 < poly->size(); ++k) {
                    bool touches = norm((*poly)[k] - pt) <= o_.point_margin || norm((*poly)[k + 1] - pt) <= o_.point_margin;
                    if (touches) continue;
                    if (point_segment_distance(pt, (*poly)[k], (*poly)[k + 1]) <= o_.point_margin)
                        throw Uncertified("curve passes through a puncture");
                }
            }
        }
    }
};

}  // namespace detail

// Intersection data of the image of fork i with noodle j, ordered bottom to top.
inline IntersectionData intersection_data(const BraidWord& w, int i, int j, const Options& o = {}) {
    detail::Scene sc(w, i, j, o);
    const auto& c1 = sc.copy1();
    const auto& c2 = sc.copy2();
    std::vector<std::size_t> order(c1.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return c1[x].y < c1[y].y; });
    IntersectionData d;
    std::size_t l = order.size();
    d.b.assign(l, std::vector<int>(l, 0));
    for (std::size_t ii = 0; ii < l; ++ii) {
        d.eps.push_back(c1[order[ii]].dir);
        d.a.push_back(static_cast<int>(sc.a_of(1, c1[order[ii]])));
        for (std::size_t jj = 0; jj < l; ++jj) d.b[ii][jj] = static_cast<int>(sc.b_of(c1[order[ii]], c2[order[jj]]));
    }
    return d;
}

// m = 2 pairing summed directly over pairs of points, one on each explicit cable copy.
inline LaurentPoly direct_two_cable(const BraidWord& w, int i, int j, const Options& o = {}) {
    detail::Scene sc(w, i, j, o);
    std::map<std::pair<long long, long long>, long long> acc;
    std::vector<long long> a2;
    for (const auto& x2 : sc.copy2()) a2.push_back(sc.a_of(2, x2));
    for (const auto& x1 : sc.copy1()) {
        long long a1 = sc.a_of(1, x1);
        for (std::size_t k = 0; k < sc.copy2().size(); ++k) {
            const auto& x2 = sc.copy2()[k];
            long long b = sc.b_of(x1, x2);
            int sign = x1.dir * x2.dir * (b % 2 == 0 ? 1 : -1);
            acc[{a1 + a2[k], b}] += sign;
        }
    }
    std::vector<Term> terms;
    for (const auto& [key, c] : acc)
        if (c != 0) terms.push_back({key.first, key.second, BigInt(c)});
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace lawrence::pl
