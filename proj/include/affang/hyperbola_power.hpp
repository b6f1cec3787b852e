#pragma once

// Power of a point with respect to a hyperbola whose asymptotes have fixed
// directions, with the radical axis / center and the chord constructions on
// xy = κ.

#include <algorithm>
#include <array>
#include <cmath>

#include "affang/error.hpp"
#include "affang/geometry.hpp"
#include "affang/tolerance.hpp"

namespace affang {

/// (X - c)(Y - d) = κ, where (X, Y) = frame(P) and (c, d) = frame(center).
/// κ is kept positive: a negative κ is absorbed by reflecting the frame's
/// first axis, which leaves the curve unchanged.
class AxisHyperbola {
public:
    AxisHyperbola(Point center, double kappa, AffineMap frame) : center_(center), kappa_(kappa), frame_(frame) {
        if (!is_finite(center) || !std::isfinite(kappa) || kappa == 0.0)
            fail(ErrorKind::InvalidArgument, "hyperbola needs a finite center and nonzero kappa");
        if (kappa_ < 0.0) {
            frame_ = compose_maps(AffineMap::linear_map(Mat2::diag(-1.0, 1.0)), frame_);
            kappa_ = -kappa_;
        }
    }

    /// Asymptotes through `center` with directions u and v.
    static AxisHyperbola from_directions(Point center, double kappa, const DirectionVector& u, const DirectionVector& v) {
        if (parallel(u, v)) fail(ErrorKind::DegenerateConfiguration, "asymptote directions are dependent");
        return {center, kappa, AffineMap::linear_map(inverse(Mat2::columns(u.vec(), v.vec())))};
    }

    /// xy = κ shifted to `center`, asymptotes along the coordinate axes.
    static AxisHyperbola standard(Point center, double kappa) { return {center, kappa, AffineMap::identity()}; }

    [[nodiscard]] Point center() const { return center_; }
    [[nodiscard]] double kappa() const { return kappa_; }
    [[nodiscard]] const AffineMap& frame() const { return frame_; }

    /// Frame coordinates of p relative to the center.
    [[nodiscard]] Vec2 local(Point p) const { return frame_.linear() * (p - center_); }
    [[nodiscard]] Point from_local(Vec2 w) const { return center_ + inverse(frame_.linear()) * w; }

    /// Frame areas are |det| times original-plane areas.
    [[nodiscard]] double area_scale() const { return std::abs(frame_.det()); }

private:
    Point center_;
    double kappa_;
    AffineMap frame_;
};

/// X·Y - κ in the hyperbola's frame; zero exactly on the curve.
inline double core_quantity(Point p, const AxisHyperbola& h) {
    const Vec2 w = h.local(p);
    return w.x * w.y - h.kappa();
}

inline bool on_curve(Point p, const AxisHyperbola& h) {
    const Vec2 w = h.local(p);
    return std::abs(w.x * w.y - h.kappa()) <= 1e-9 * (std::abs(w.x * w.y) + h.kappa());
}

struct SecantResult {
    Point a;
    Point b;
    double alpha = 0.0;  // frame abscissa of a, relative to the center
    double beta = 0.0;   // frame abscissa of b, relative to the center
    bool tangent = false;
};

/// Intersections of the line through p with direction dir and the curve.
/// A double root (discriminant below 1e-10 of the coefficient scale) is
/// reported with a == b and tangent set.
inline SecantResult secant_intersections(Point p, const DirectionVector& dir, const AxisHyperbola& h) {
    const Vec2 w = h.local(p);
    const Vec2 d = h.frame().linear() * dir.unit();
    const Vec2 du = (1.0 / norm(d)) * d;
    // (w.x + s du.x)(w.y + s du.y) = κ
    const double qa = du.x * du.y;
    const double qb = w.x * du.y + w.y * du.x;
    const double qc = w.x * w.y - h.kappa();
    if (std::abs(qa) <= tol::parallel) fail(ErrorKind::NoRealIntersection, "line is parallel to an asymptote");
    const double disc = qb * qb - 4.0 * qa * qc;
    const double disc_scale = qb * qb + std::abs(4.0 * qa * qc);
    auto point_at = [&](double s) { return w + s * du; };
    if (std::abs(disc) <= 1e-10 * disc_scale) {
        const Vec2 t = point_at(-qb / (2.0 * qa));
        const Point a = h.from_local(t);
        return {a, a, t.x, t.x, true};
    }
    if (disc < 0.0) fail(ErrorKind::NoRealIntersection, "line misses the hyperbola");
    const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    const double s1 = q / qa;
    const double s2 = (q != 0.0) ? qc / q : -s1;
    const Vec2 ta = point_at(s1), tb = point_at(s2);
    return {h.from_local(ta), h.from_local(tb), ta.x, tb.x, false};
}

struct AsymptoticProjections {
    Point a1;  // onto the first asymptote, along the second direction
    Point a2;  // onto the second asymptote, along the first direction
};

inline AsymptoticProjections asymptotic_projections(Point a, const AxisHyperbola& h) {
    if (!on_curve(a, h)) fail(ErrorKind::NotOnCurve, "point is not on the hyperbola");
    const Vec2 w = h.local(a);
    return {h.from_local({w.x, 0.0}), h.from_local({0.0, w.y})};
}

/// |PA × PA_i|, measured in the hyperbola's frame.
inline double projected_area(Point p, Point a, int which, const AxisHyperbola& h) {
    if (which != 1 && which != 2) fail(ErrorKind::InvalidArgument, "projection index must be 1 or 2");
    const auto proj = asymptotic_projections(a, h);
    const Point ai = which == 1 ? proj.a1 : proj.a2;
    return std::abs(cross(a - p, ai - p)) * h.area_scale();
}

inline double symmetric_area(Point p, Point a, const AxisHyperbola& h) {
    return std::sqrt(projected_area(p, a, 1, h) * projected_area(p, a, 2, h));
}

/// Π(P; H) = κ |core_quantity|.
inline double power(Point p, const AxisHyperbola& h) { return h.kappa() * std::abs(core_quantity(p, h)); }

struct OneSidedProducts {
    double symmetric = 0.0;  // S_{P,A} S_{P,B}
    double first = 0.0;      // S(P,A1) S(P,B1)
    double second = 0.0;     // S(P,A2) S(P,B2)
};

inline OneSidedProducts one_sided_identity(Point p, const SecantResult& secant, const AxisHyperbola& h) {
    return {symmetric_area(p, secant.a, h) * symmetric_area(p, secant.b, h),
            projected_area(p, secant.a, 1, h) * projected_area(p, secant.b, 1, h),
            projected_area(p, secant.a, 2, h) * projected_area(p, secant.b, 2, h)};
}

/// Real tangent lines from p: roots of the tangency condition q t² - 2κ t + κ p = 0
/// for the touching abscissa t (frame relative to the center). Returns the
/// discriminant κ(κ - p q) up to a positive factor.
inline double tangency_discriminant(Point p, const AxisHyperbola& h) {
    const Vec2 w = h.local(p);
    return h.kappa() * (h.kappa() - w.x * w.y);
}

// ─── Chords of xy = κ ───────────────────────────────────────────────────────

/// Line through (t1, κ/t1) and (t2, κ/t2): y = κ(t1 + t2 - x)/(t1 t2).
inline Line chord_line(double t1, double t2, double kappa = 1.0) {
    if (t1 == 0.0 || t2 == 0.0 || kappa == 0.0) fail(ErrorKind::InvalidArgument, "chord parameters must be nonzero");
    if (tol::near(t1, t2)) fail(ErrorKind::CoincidentParameters, "chord endpoints coincide");
    // κ x + t1 t2 y = κ (t1 + t2)
    return Line::from_implicit(kappa, t1 * t2, kappa * (t1 + t2));
}

/// Abscissa of L(t1,t2) ∩ L(t3,t4) on xy = 1.
inline double chord_intersection_x(double t1, double t2, double t3, double t4) {
    const double p12 = t1 * t2, p34 = t3 * t4;
    if (tol::near(p12, p34)) fail(ErrorKind::ParallelChords, "chords are parallel");
    return ((t3 + t4) * p12 - (t1 + t2) * p34) / (p12 - p34);
}

// ─── Radical axis and center ────────────────────────────────────────────────

namespace detail {

// Q(x) = g·Z + h0 + (Z.x)(Z.y) in the frame of `ref` (Z = ref.frame.linear x).
struct FramedQuadratic {
    Vec2 center;   // in ref-frame coordinates
    double kappa;  // effective κ in ref-frame scaling (sign may be negative)
};

inline FramedQuadratic in_frame_of(const AxisHyperbola& ref, const AxisHyperbola& h) {
    const Mat2 m = h.frame().linear() * inverse(ref.frame().linear());
    const double scale = std::sqrt(m.frobenius2());
    const double off = std::max(std::abs(m.b), std::abs(m.c));
    const double on = std::max(std::abs(m.a), std::abs(m.d));
    double st = 0.0;
    if (off <= 1e-9 * scale)
        st = m.a * m.d;
    else if (on <= 1e-9 * scale)
        st = m.b * m.c;
    else
        fail(ErrorKind::NonLinearDifference, "asymptote directions of the two hyperbolas differ");
    return {ref.frame().linear() * as_vec(h.center()), h.kappa() / st};
}

// Q_ref - Q_h as g·Z + h0 (the xy terms cancel).
struct LinearForm {
    Vec2 g;
    double h0;
};

inline LinearForm subtract(const FramedQuadratic& q1, const FramedQuadratic& q2) {
    // (x-a1)(y-b1) - κ1 - (x-a2)(y-b2) + κ2
    return {{q2.center.y - q1.center.y, q2.center.x - q1.center.x},
            q1.center.x * q1.center.y - q2.center.x * q2.center.y - q1.kappa + q2.kappa};
}

inline bool identical(const FramedQuadratic& a, const FramedQuadratic& b) {
    const double scale = std::max({norm(a.center), norm(b.center), 1.0});
    return norm(a.center - b.center) <= tol::rel * scale && tol::near(a.kappa, b.kappa);
}

inline bool concentric(const FramedQuadratic& a, const FramedQuadratic& b) {
    const double scale = std::max({norm(a.center), norm(b.center), 1.0});
    return norm(a.center - b.center) <= tol::rel * scale;
}

inline Line to_original_line(const AxisHyperbola& ref, const LinearForm& f) {
    // g·(M x) + h0 = 0  ->  (Mᵀ g)·x = -h0
    const Vec2 n = ref.frame().linear().transposed() * f.g;
    return Line::from_implicit(n.x, n.y, -f.h0);
}

}  // namespace detail

/// The line Q1 - Q2 = 0 where Q_i = (X - c_i)(Y - d_i) - κ_i in a shared frame.
/// When the curves meet in two real points it is their common chord.
inline Line radical_axis(const AxisHyperbola& h1, const AxisHyperbola& h2) {
    const auto q1 = detail::in_frame_of(h1, h1);
    const auto q2 = detail::in_frame_of(h1, h2);
    if (detail::identical(q1, q2)) fail(ErrorKind::IdenticalCurves, "radical axis of a curve with itself is undefined");
    if (detail::concentric(q1, q2))
        fail(ErrorKind::ConcentricCurves, "concentric hyperbolas differ by a constant; there is no radical axis");
    return detail::to_original_line(h1, detail::subtract(q1, q2));
}

/// Common point of the three pairwise radical axes.
inline Point radical_center(const AxisHyperbola& h1, const AxisHyperbola& h2, const AxisHyperbola& h3) {
    const std::array<detail::FramedQuadratic, 3> q = {detail::in_frame_of(h1, h1), detail::in_frame_of(h1, h2),
                                                      detail::in_frame_of(h1, h3)};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (detail::identical(q[i], q[j]))
                fail(ErrorKind::IdenticalCurves, "two of the hyperbolas coincide");
    const auto f12 = detail::subtract(q[0], q[1]);
    const auto f23 = detail::subtract(q[1], q[2]);
    const Mat2 sys{f12.g.x, f12.g.y, f23.g.x, f23.g.y};
    if (is_singular(sys) || detail::concentric(q[0], q[1]) || detail::concentric(q[1], q[2]))
        fail(ErrorKind::ParallelAxes, "radical axes are parallel or do not exist");
    const Vec2 z = inverse(sys) * Vec2{-f12.h0, -f23.h0};
    const Vec2 x = inverse(h1.frame().linear()) * z;
    return {x.x, x.y};
}

// ─── Geometric progression quadrilateral ────────────────────────────────────

/// A, B, C, D at x = a, ar, ar², ar³ and P at x = p on xy = κ (x > 0);
/// Q = AC ∩ PB, R = BD ∩ PC. Returns the area of quadrilateral BCRQ, which
/// does not depend on p. Any p > 0 other than the four vertices is accepted:
/// the construction stays well defined on the arc from A to D as well.
inline double progression_quadrilateral_area(double a, double r, double p, double kappa = 1.0) {
    if (!(a > 0.0) || !(r > 0.0) || r == 1.0 || !(kappa > 0.0) || !std::isfinite(a * r * p * kappa))
        fail(ErrorKind::InvalidArgument, "need a > 0, r > 0, r != 1, kappa > 0");
    const double xs[4] = {a, a * r, a * r * r, a * r * r * r};
    if (!(p > 0.0)) fail(ErrorKind::InvalidPosition, "P must lie on the x > 0 branch");
    for (double x : xs)
        if (tol::near(p, x)) fail(ErrorKind::InvalidPosition, "P coincides with one of A, B, C, D");
    auto on_curve_at = [kappa](double t) { return Point{t, kappa / t}; };
    Point q, rr;
    try {
        q = intersect_lines(chord_line(xs[0], xs[2], kappa), chord_line(p, xs[1], kappa));
        rr = intersect_lines(chord_line(xs[1], xs[3], kappa), chord_line(p, xs[2], kappa));
    } catch (const GeometryError& e) {
        fail(ErrorKind::DegenerateIntersection, e.what());
    }
    const Point quad[4] = {on_curve_at(xs[1]), on_curve_at(xs[2]), rr, q};
    double twice = 0.0;
    for (int i = 0; i < 4; ++i) twice += cross(as_vec(quad[i]), as_vec(quad[(i + 1) % 4]));
    return 0.5 * std::abs(twice);
}

/// (r+1)|r-1|³ / (2r²), the area above for κ = 1.
inline double progression_area_closed_form(double r) {
    return (r + 1.0) * std::pow(std::abs(r - 1.0), 3) / (2.0 * r * r);
}

}  // namespace affang
