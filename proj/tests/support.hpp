#pragma once

// Seeded generators and independent oracles shared by the unit and
// acceptance tests. The oracles recompute each quantity from first
// principles (Cramer's rule, raw triangle areas, root bracketing,
// polygon areas) without calling the library routine under test.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "affang/affang.hpp"

namespace testsupport {

using affang::Point;
using affang::Vec2;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    double sign() { return (engine_() >> 63) ? 1.0 : -1.0; }
    // magnitude spread over several decades
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    Point point(double r = 10.0) { return {uniform(-r, r), uniform(-r, r)}; }
    Vec2 unit_vec() {
        const double a = uniform(0.0, 2.0 * std::numbers::pi);
        return {std::cos(a), std::sin(a)};
    }

private:
    std::mt19937_64 engine_;
};

/// Two directions at least ~12 degrees apart with lengths in [0.5, 2].
inline affang::DirectionPair random_dirs(Gen& g) {
    while (true) {
        const double a = g.uniform(0.0, 2.0 * std::numbers::pi);
        const double b = g.uniform(0.0, 2.0 * std::numbers::pi);
        if (std::abs(std::sin(b - a)) < 0.2) continue;
        const double la = g.uniform(0.5, 2.0), lb = g.uniform(0.5, 2.0);
        return {affang::DirectionVector(la * std::cos(a), la * std::sin(a)),
                affang::DirectionVector(lb * std::cos(b), lb * std::sin(b))};
    }
}

/// Direction alpha*u + beta*v with frame slope beta/alpha = m.
inline Vec2 direction_with_slope(const affang::DirectionPair& dirs, double m, double alpha) {
    return alpha * dirs.u().vec() + (alpha * m) * dirs.v().vec();
}

/// Frame slope m with |m| spread over [e^-2, e^2] and the requested sign.
inline double random_slope(Gen& g, double sign) { return sign * std::exp(g.uniform(-2.0, 2.0)); }

// ─── Oracles ────────────────────────────────────────────────────────────────

namespace oracle {

inline double tri(Point a, Point b, Point c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

/// Intersection of p + s d and q + r e by Cramer's rule.
inline Point meet(Point p, Vec2 d, Point q, Vec2 e) {
    const double den = d.x * (-e.y) - d.y * (-e.x);
    const double rx = q.x - p.x, ry = q.y - p.y;
    const double s = (rx * (-e.y) - ry * (-e.x)) / den;
    return {p.x + s * d.x, p.y + s * d.y};
}

/// Raw signed-area quotient [O P_L P_U] / [O P_L P_V] with Λ = lam + s lam_dir.
inline double sigma(Point o, Vec2 dir, Vec2 u, Vec2 v, Point lam, Vec2 lam_dir) {
    const Point pu = meet(o, u, lam, lam_dir);
    const Point pv = meet(o, v, lam, lam_dir);
    const Point pl = meet(o, dir, lam, lam_dir);
    return tri(o, pl, pu) / tri(o, pl, pv);
}

/// (alpha, beta) with d = alpha u + beta v.
inline Vec2 coords(Vec2 d, Vec2 u, Vec2 v) {
    const double den = u.x * v.y - u.y * v.x;
    return {(d.x * v.y - d.y * v.x) / den, (u.x * d.y - u.y * d.x) / den};
}

inline double frame_slope(Vec2 d, Vec2 u, Vec2 v) {
    const Vec2 c = coords(d, u, v);
    return c.y / c.x;
}

/// ½ log(m_A / m_B) from frame slopes; empty when the slopes differ in sign.
inline std::optional<double> slope_angle(Point o, Point a, Point b, Vec2 u, Vec2 v) {
    const double ma = frame_slope({a.x - o.x, a.y - o.y}, u, v);
    const double mb = frame_slope({b.x - o.x, b.y - o.y}, u, v);
    if (!(ma * mb > 0.0)) return std::nullopt;
    return 0.5 * std::log(ma / mb);
}

/// Area of the sector of XY = 1 between the rays to (x1, 1/x1) and (x2, 1/x2),
/// as the shoelace area of a fine inscribed polygon O, curve points, O.
/// Signed: positive when x2 > x1.
inline double sector_area_polygon(double x1, double x2, int n = 200000) {
    const double l1 = std::log(x1), l2 = std::log(x2);
    double twice = 0.0;
    Point prev{x1, 1.0 / x1};
    for (int i = 1; i <= n; ++i) {
        const double x = std::exp(l1 + (l2 - l1) * i / n);
        const Point cur{x, 1.0 / x};
        twice += prev.x * cur.y - prev.y * cur.x;
        prev = cur;
    }
    // the polygon O -> arc -> O is clockwise for x2 > x1
    return -0.5 * twice;
}

/// Roots of f on [lo, hi] by scanning n cells and bisecting sign changes.
inline std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi, int n = 20000) {
    std::vector<double> roots;
    double a = lo, fa = f(a);
    for (int i = 1; i <= n; ++i) {
        const double b = lo + (hi - lo) * i / n;
        const double fb = f(b);
        if (fa == 0.0) roots.push_back(a);
        if (fa * fb < 0.0) {
            double x0 = a, x1 = b, f0 = fa;
            for (int k = 0; k < 200; ++k) {
                const double m = 0.5 * (x0 + x1);
                const double fm = f(m);
                if (fm == 0.0 || x1 - x0 < 1e-15 * std::max(1.0, std::abs(m))) {
                    x0 = x1 = m;
                    break;
                }
                if (f0 * fm < 0.0) {
                    x1 = m;
                } else {
                    x0 = m;
                    f0 = fm;
                }
            }
            roots.push_back(0.5 * (x0 + x1));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

/// Hyperbola (X)(Y) = kappa where (X, Y) are the (u, v)-coordinates of
/// p - center. Secant through p with direction dir: the two intersection
/// points in frame coordinates, by root bracketing along the line.
struct FrameSecant {
    Vec2 p;   // P in frame coordinates
    Vec2 a;   // first intersection
    Vec2 b;   // second intersection
};

inline std::optional<FrameSecant> brute_secant(Point p, Vec2 dir, Point center, double kappa, Vec2 u, Vec2 v,
                                               double reach = 200.0) {
    const Vec2 w = coords({p.x - center.x, p.y - center.y}, u, v);
    const Vec2 e = coords(dir, u, v);
    auto f = [&](double s) { return (w.x + s * e.x) * (w.y + s * e.y) - kappa; };
    const double scale = std::max(1.0, std::hypot(w.x, w.y)) / std::max(std::hypot(e.x, e.y), 1e-300);
    const auto roots = bracket_roots(f, -reach * scale, reach * scale, 400000);
    if (roots.size() != 2) return std::nullopt;
    return FrameSecant{w, w + roots[0] * e, w + roots[1] * e};
}

/// S_{P,A} in frame coordinates: geometric mean of |PA x PA1| and |PA x PA2|
/// with A1 = (X, 0), A2 = (0, Y).
inline double symmetric_area(Vec2 p, Vec2 a) {
    auto cr = [](Vec2 x, Vec2 y) { return x.x * y.y - x.y * y.x; };
    const double s1 = std::abs(cr(a - p, Vec2{a.x, 0.0} - p));
    const double s2 = std::abs(cr(a - p, Vec2{0.0, a.y} - p));
    return std::sqrt(s1 * s2);
}

/// Series of log(Cr)/(-2t) through t^4.
inline double degenerate_series(double m1, double m2, double t) {
    return (m1 - m2) + (std::pow(m1, 3) - std::pow(m2, 3)) * t * t / 3.0 +
           (std::pow(m1, 5) - std::pow(m2, 5)) * std::pow(t, 4) / 5.0;
}

/// Shoelace area of a quadrilateral.
inline double quad_area(Point a, Point b, Point c, Point d) {
    const Point q[4] = {a, b, c, d};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += q[i].x * q[(i + 1) % 4].y - q[i].y * q[(i + 1) % 4].x;
    return 0.5 * std::abs(s);
}

/// Q = AC ∩ PB and R = BD ∩ PC on y = kappa/x, area of B C R Q, lines built
/// from two points each (no chord formula).
inline double progression_area(double a, double r, double p, double kappa) {
    auto on = [kappa](double x) { return Point{x, kappa / x}; };
    const Point A = on(a), B = on(a * r), C = on(a * r * r), D = on(a * r * r * r), P = on(p);
    const Point Q = meet(A, C - A, P, B - P);
    const Point R = meet(B, D - B, P, C - P);
    return quad_area(B, C, R, Q);
}

}  // namespace oracle

}  // namespace testsupport
