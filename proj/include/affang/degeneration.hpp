#pragma once

// Cayley–Klein degenerations: the affine angle as ½ log of a slope cross
// ratio, and the first-order limit recovering the slope difference.

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "affang/error.hpp"

namespace affang {

struct SlopePair {
    double m1;
    double m2;

    SlopePair(double first, double second) : m1(first), m2(second) {
        if (!std::isfinite(m1) || !std::isfinite(m2) || m1 == 0.0 || m2 == 0.0)
            fail(ErrorKind::InvalidArgument, "slopes must be finite and nonzero");
    }
};

inline double slope_cross_ratio_angle(double m_a, double m_b) {
    if (!(m_a * m_b > 0.0)) fail(ErrorKind::ComponentMismatch, "slopes of opposite sign (or zero)");
    return 0.5 * (std::log(std::abs(m_a)) - std::log(std::abs(m_b)));
}

namespace detail {

inline void require_off_pole(const SlopePair& m, double t) {
    for (double mi : {m.m1, m.m2}) {
        const double x = mi * t;
        if (std::abs(std::abs(x) - 1.0) <= 1e-12) fail(ErrorKind::PoleAtT, "t is at ±1/m");
    }
}

}  // namespace detail

/// (1 - m1 t)(1 + m2 t) / ((1 + m1 t)(1 - m2 t)).
inline double degenerate_cross_ratio(const SlopePair& m, double t) {
    detail::require_off_pole(m, t);
    return ((1.0 - m.m1 * t) * (1.0 + m.m2 * t)) / ((1.0 + m.m1 * t) * (1.0 - m.m2 * t));
}

/// log of the cross ratio above, as 2(atanh(m2 t) - atanh(m1 t)); accurate for
/// small t where the ratio is 1 - O(t). Requires |m t| < 1.
inline double log_degenerate_cross_ratio(const SlopePair& m, double t) {
    detail::require_off_pole(m, t);
    if (std::abs(m.m1 * t) > 1.0 || std::abs(m.m2 * t) > 1.0)
        fail(ErrorKind::InvalidArgument, "log form needs |m t| < 1");
    return 2.0 * (std::atanh(m.m2 * t) - std::atanh(m.m1 * t));
}

/// Least-squares slope of log|y| against log x over the pairs with y != 0.
inline std::optional<double> loglog_slope(std::span<const double> xs, std::span<const double> ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
        if (ys[i] == 0.0 || !(xs[i] > 0.0)) continue;
        const double lx = std::log(xs[i]), ly = std::log(std::abs(ys[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return std::nullopt;
    const double den = n * sxx - sx * sx;
    if (den == 0.0) return std::nullopt;
    return (n * sxy - sx * sy) / den;
}

struct LimitSample {
    double t;
    double value;
};

struct LimitReport {
    std::vector<LimitSample> samples;  // decreasing t
    double extrapolated_limit = 0.0;
    // log–log slope of |value - (m1 - m2)| against t; empty when every
    // residual is exactly zero
    std::optional<double> residual_order;
};

inline std::vector<double> default_t_sequence() { return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}; }

/// Samples log(Cr)/(-2t) along a decreasing t sequence and extrapolates t -> 0
/// by Richardson on the two smallest t with an O(t²) error model.
inline LimitReport first_order_limit(const SlopePair& m, std::span<const double> ts) {
    if (ts.size() < 2) fail(ErrorKind::InvalidArgument, "need at least two t values");
    const double bound = 0.5 * std::min(1.0 / std::abs(m.m1), 1.0 / std::abs(m.m2));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0.0) || !(ts[i] < bound))
            fail(ErrorKind::InvalidArgument, "t values must lie in (0, min(1/|m1|, 1/|m2|)/2)");
        if (i > 0 && !(ts[i] < ts[i - 1])) fail(ErrorKind::InvalidArgument, "t values must be strictly decreasing");
    }

    LimitReport report;
    std::vector<double> residuals;
    std::vector<double> tv;
    const double exact = m.m1 - m.m2;
    for (double t : ts) {
        const double value = log_degenerate_cross_ratio(m, t) / (-2.0 * t);
        report.samples.push_back({t, value});
        residuals.push_back(value - exact);
        tv.push_back(t);
    }
    const auto& s1 = report.samples[report.samples.size() - 2];
    const auto& s2 = report.samples.back();
    const double w1 = s1.t * s1.t, w2 = s2.t * s2.t;
    report.extrapolated_limit = (w1 * s2.value - w2 * s1.value) / (w1 - w2);
    report.residual_order = loglog_slope(tv, residuals);
    return report;
}

inline LimitReport first_order_limit(const SlopePair& m) {
    const auto ts = default_t_sequence();
    return first_order_limit(m, ts);
}

}  // namespace affang
