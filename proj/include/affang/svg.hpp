#pragma once

// SVG 1.1 rendering of sampled loci. Output is byte-deterministic for
// identical input: fixed element order, locale-free number formatting.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "affang/error.hpp"
#include "affang/geometry.hpp"
#include "affang/isoptic.hpp"

namespace affang {

struct Viewport {
    double xmin = 0.0, ymin = 0.0, xmax = 1.0, ymax = 1.0;
};

/// Bounding box of the points (and markers) grown by `margin` of its extent
/// on every side.
inline Viewport fit_viewport(std::span<const LocusSample> samples, std::span<const Point> markers, double margin = 0.05) {
    if (samples.empty() && markers.empty()) fail(ErrorKind::EmptyLocus, "nothing to fit");
    Viewport v{INFINITY, INFINITY, -INFINITY, -INFINITY};
    auto grow = [&v](Point p) {
        v.xmin = std::min(v.xmin, p.x);
        v.xmax = std::max(v.xmax, p.x);
        v.ymin = std::min(v.ymin, p.y);
        v.ymax = std::max(v.ymax, p.y);
    };
    for (const auto& s : samples) grow(s.point);
    for (const auto& m : markers) grow(m);
    const double dx = std::max(v.xmax - v.xmin, 1e-9), dy = std::max(v.ymax - v.ymin, 1e-9);
    return {v.xmin - margin * dx, v.ymin - margin * dy, v.xmax + margin * dx, v.ymax + margin * dy};
}

namespace detail {

inline std::string svg_number(double v) {
    char buf[32];
    if (std::abs(v) < 5e-5) v = 0.0;  // no "-0" or tiny exponents in attributes
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 4);
    std::string s(buf, res.ptr);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

}  // namespace detail

/// One <g> group per admissibility class present, each holding one
/// <polyline> per contiguous run on a branch; marker dots at A and B.
inline std::string render_svg(std::span<const LocusSample> samples, const Viewport& view, std::span<const Point> markers) {
    if (samples.empty()) fail(ErrorKind::EmptyLocus, "no points to render");
    if (!(view.xmax > view.xmin) || !(view.ymax > view.ymin)) fail(ErrorKind::InvalidArgument, "empty viewport");

    constexpr double width = 800.0;
    const double aspect = (view.ymax - view.ymin) / (view.xmax - view.xmin);
    const double height = std::clamp(std::round(width * aspect), 200.0, 1600.0);
    auto px = [&](Point p) {
        return Point{(p.x - view.xmin) / (view.xmax - view.xmin) * width,
                     (1.0 - (p.y - view.ymin) / (view.ymax - view.ymin)) * height};
    };
    using detail::svg_number;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + svg_number(width) + "\" height=\"" +
           svg_number(height) + "\" viewBox=\"0 0 " + svg_number(width) + " " + svg_number(height) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    struct Style {
        bool admissible;
        const char* name;
        const char* stroke;
        const char* dash;
    };
    const Style styles[] = {{true, "admissible", "#1f77b4", ""}, {false, "inadmissible", "#aaaaaa", " stroke-dasharray=\"4,3\""}};
    for (const auto& style : styles) {
        const bool present = std::any_of(samples.begin(), samples.end(), [&](const LocusSample& s) { return s.admissible == style.admissible; });
        if (!present) continue;
        out += std::string("  <g class=\"") + style.name + "\" fill=\"none\" stroke=\"" + style.stroke +
               "\" stroke-width=\"1.5\"" + style.dash + ">\n";
        std::size_t i = 0;
        while (i < samples.size()) {
            if (samples[i].admissible != style.admissible) {
                ++i;
                continue;
            }
            std::string pts;
            const int branch = samples[i].branch;
            while (i < samples.size() && samples[i].admissible == style.admissible && samples[i].branch == branch) {
                const Point p = px(samples[i].point);
                if (!pts.empty()) pts += ' ';
                pts += svg_number(p.x) + "," + svg_number(p.y);
                ++i;
            }
            out += "    <polyline points=\"" + pts + "\"/>\n";
        }
        out += "  </g>\n";
    }

    const char* labels[] = {"A", "B"};
    for (std::size_t k = 0; k < markers.size(); ++k) {
        const Point p = px(markers[k]);
        out += "  <circle class=\"marker\" cx=\"" + svg_number(p.x) + "\" cy=\"" + svg_number(p.y) +
               "\" r=\"4\" fill=\"#d62728\"/>\n";
        if (k < 2)
            out += "  <text x=\"" + svg_number(p.x + 6.0) + "\" y=\"" + svg_number(p.y - 6.0) +
                   "\" font-family=\"sans-serif\" font-size=\"14\">" + labels[k] + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace affang
