#pragma once

// Planar primitives: points, directions, lines, rays, affine maps and the
// signed triangle area every other module is built on.

#include <cmath>
#include <string>

#include "affang/error.hpp"
#include "affang/tolerance.hpp"

namespace affang {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator+(Point p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }
    friend constexpr Point operator-(Point p, Vec2 v) { return {p.x - v.x, p.y - v.y}; }
    friend constexpr bool operator==(Point, Point) = default;
};

inline double distance(Point a, Point b) { return norm(a - b); }
constexpr Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
constexpr Vec2 as_vec(Point p) { return {p.x, p.y}; }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline Point checked_point(double x, double y) {
    const Point p{x, y};
    if (!is_finite(p)) fail(ErrorKind::InvalidArgument, "point coordinates must be finite");
    return p;
}

/// Nonzero, finite direction. Orientation is kept: (1,0) and (-1,0) are
/// distinct directions for rays, the same direction for lines.
class DirectionVector {
public:
    DirectionVector(double dx, double dy) : v_{dx, dy} {
        if (!std::isfinite(dx) || !std::isfinite(dy) || (dx == 0.0 && dy == 0.0))
            fail(ErrorKind::InvalidArgument, "direction must be finite and nonzero");
    }
    explicit DirectionVector(Vec2 v) : DirectionVector(v.x, v.y) {}

    [[nodiscard]] double dx() const { return v_.x; }
    [[nodiscard]] double dy() const { return v_.y; }
    [[nodiscard]] Vec2 vec() const { return v_; }
    [[nodiscard]] Vec2 unit() const { return (1.0 / norm(v_)) * v_; }
    [[nodiscard]] DirectionVector reversed() const { return DirectionVector(-v_.x, -v_.y); }

    friend bool operator==(const DirectionVector&, const DirectionVector&) = default;

private:
    Vec2 v_;
};

/// Scale-invariant parallelism test on the underlying lines.
inline bool parallel(Vec2 a, Vec2 b, double eps = tol::parallel) {
    return std::abs(cross(a, b)) <= eps * norm(a) * norm(b);
}
inline bool parallel(const DirectionVector& a, const DirectionVector& b, double eps = tol::parallel) {
    return parallel(a.vec(), b.vec(), eps);
}

/// a*x + b*y = c with (a,b) of unit norm and the first nonzero of (a,b) positive.
struct ImplicitLine {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    [[nodiscard]] double evaluate(Point p) const { return a * p.x + b * p.y - c; }
};

class Line {
public:
    Line(Point base, DirectionVector dir) : base_(base), dir_(dir) {
        if (!is_finite(base)) fail(ErrorKind::InvalidArgument, "line base point must be finite");
    }

    static Line through(Point p, Point q) {
        if (p == q) fail(ErrorKind::InvalidArgument, "a line needs two distinct points");
        return Line(p, DirectionVector(q - p));
    }

    /// Line a*x + b*y = c; (a,b) need not be normalized.
    static Line from_implicit(double a, double b, double c) {
        const double n2 = a * a + b * b;
        if (!(n2 > 0.0) || !std::isfinite(n2) || !std::isfinite(c))
            fail(ErrorKind::InvalidArgument, "implicit line needs (a,b) != (0,0)");
        const Point foot{a * c / n2, b * c / n2};
        return Line(foot, DirectionVector(-b, a));
    }

    [[nodiscard]] Point base() const { return base_; }
    [[nodiscard]] const DirectionVector& dir() const { return dir_; }
    [[nodiscard]] Point at(double s) const { return base_ + s * dir_.vec(); }

    [[nodiscard]] ImplicitLine implicit() const {
        const Vec2 n = (1.0 / norm(dir_.vec())) * Vec2{-dir_.dy(), dir_.dx()};
        const double sign = (n.x > 0.0 || (n.x == 0.0 && n.y > 0.0)) ? 1.0 : -1.0;
        const double a = sign * n.x;
        const double b = sign * n.y;
        return {a, b, a * base_.x + b * base_.y};
    }

    /// Unsigned Euclidean distance.
    [[nodiscard]] double distance_to(Point p) const { return std::abs(implicit().evaluate(p)); }

private:
    Point base_;
    DirectionVector dir_;
};

class Ray {
public:
    Ray(Point origin, DirectionVector dir) : origin_(origin), dir_(dir) {
        if (!is_finite(origin)) fail(ErrorKind::InvalidArgument, "ray origin must be finite");
    }

    static Ray through(Point origin, Point p) {
        if (origin == p) fail(ErrorKind::InvalidArgument, "ray through a point needs the point to differ from the origin");
        return Ray(origin, DirectionVector(p - origin));
    }

    [[nodiscard]] Point origin() const { return origin_; }
    [[nodiscard]] const DirectionVector& dir() const { return dir_; }
    [[nodiscard]] Point at(double s) const { return origin_ + s * dir_.vec(); }
    [[nodiscard]] Line line() const { return Line(origin_, dir_); }

private:
    Point origin_;
    DirectionVector dir_;
};

inline double signed_area(Point x, Point y, Point z) { return 0.5 * cross(y - x, z - x); }

inline Point intersect_lines(const Line& l1, const Line& l2) {
    const Vec2 d1 = l1.dir().vec();
    const Vec2 d2 = l2.dir().vec();
    const double denom = cross(d1, d2);
    if (parallel(d1, d2)) fail(ErrorKind::ParallelLines, "lines do not meet in a single point");
    const double s = cross(l2.base() - l1.base(), d2) / denom;
    return l1.at(s);
}

// ─── Affine maps ────────────────────────────────────────────────────────────

/// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static constexpr Mat2 identity() { return {}; }
    static constexpr Mat2 diag(double x, double y) { return {x, 0.0, 0.0, y}; }
    /// Matrix whose columns are c1 and c2.
    static constexpr Mat2 columns(Vec2 c1, Vec2 c2) { return {c1.x, c2.x, c1.y, c2.y}; }

    [[nodiscard]] constexpr double det() const { return a * d - b * c; }
    [[nodiscard]] double frobenius2() const { return a * a + b * b + c * c + d * d; }
    [[nodiscard]] constexpr Mat2 transposed() const { return {a, c, b, d}; }

    friend constexpr Vec2 operator*(const Mat2& m, Vec2 v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }
    friend constexpr Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

inline bool is_singular(const Mat2& m) {
    return !(std::abs(m.det()) > tol::det * m.frobenius2()) || !std::isfinite(m.det());
}

inline Mat2 inverse(const Mat2& m) {
    if (is_singular(m)) fail(ErrorKind::SingularMap, "matrix is not invertible");
    const double inv = 1.0 / m.det();
    return {m.d * inv, -m.b * inv, -m.c * inv, m.a * inv};
}

/// x -> linear * x + translation, with an invertible linear part.
class AffineMap {
public:
    AffineMap() = default;
    AffineMap(Mat2 linear, Vec2 translation) : linear_(linear), translation_(translation) {
        if (is_singular(linear_)) fail(ErrorKind::SingularMap, "linear part has (near) zero determinant");
    }

    static AffineMap identity() { return {}; }
    static AffineMap linear_map(Mat2 m) { return {m, {}}; }
    static AffineMap translation(Vec2 t) { return {Mat2::identity(), t}; }

    [[nodiscard]] const Mat2& linear() const { return linear_; }
    [[nodiscard]] Vec2 translation() const { return translation_; }
    [[nodiscard]] double det() const { return linear_.det(); }

    Point operator()(Point p) const {
        const Vec2 v = linear_ * as_vec(p) + translation_;
        return {v.x, v.y};
    }
    Vec2 operator()(Vec2 v) const { return linear_ * v; }
    DirectionVector operator()(const DirectionVector& d) const { return DirectionVector(linear_ * d.vec()); }
    Line operator()(const Line& l) const { return Line((*this)(l.base()), (*this)(l.dir())); }
    Ray operator()(const Ray& r) const { return Ray((*this)(r.origin()), (*this)(r.dir())); }

private:
    Mat2 linear_{};
    Vec2 translation_{};
};

template <typename G>
auto apply_map(const AffineMap& t, const G& g) -> decltype(t(g)) {
    return t(g);
}

inline AffineMap invert_map(const AffineMap& t) {
    const Mat2 inv = inverse(t.linear());
    return {inv, -(inv * t.translation())};
}

/// (first ∘ second): apply `second`, then `first`.
inline AffineMap compose_maps(const AffineMap& first, const AffineMap& second) {
    return {first.linear() * second.linear(), first.linear() * second.translation() + first.translation()};
}

/// Map sending A to (-1,0), B to (1,0), u to a multiple of (1,1) and v to a
/// multiple of (1,-1).
///
/// Writes (B-A)/2 = a*u + b*v; the linear part sends u to (1,1)/(2a) and v to
/// (1,-1)/(2b), and the translation moves the image of the midpoint of AB to
/// the origin. Fails when AB is parallel to u or v, or when u, v are dependent.
inline AffineMap normalize_configuration(Point A, Point B, const DirectionVector& u, const DirectionVector& v) {
    if (A == B) fail(ErrorKind::DegenerateConfiguration, "A and B coincide");
    if (parallel(u, v)) fail(ErrorKind::DegenerateConfiguration, "reference directions are dependent");
    const Vec2 half = 0.5 * (B - A);
    if (parallel(half, u.vec())) fail(ErrorKind::DegenerateConfiguration, "segment AB is parallel to u");
    if (parallel(half, v.vec())) fail(ErrorKind::DegenerateConfiguration, "segment AB is parallel to v");

    const double uv = cross(u.vec(), v.vec());
    const double a = cross(half, v.vec()) / uv;
    const double b = cross(u.vec(), half) / uv;

    const Mat2 image = Mat2::columns((0.5 / a) * Vec2{1.0, 1.0}, (0.5 / b) * Vec2{1.0, -1.0});
    const Mat2 linear = image * inverse(Mat2::columns(u.vec(), v.vec()));
    const Vec2 shift = -(linear * as_vec(midpoint(A, B)));
    return {linear, shift};
}

}  // namespace affang
