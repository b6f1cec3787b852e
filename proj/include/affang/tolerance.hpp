#pragma once

#include <algorithm>
#include <cmath>

namespace affang::tol {

inline constexpr double rel = 1e-9;
inline constexpr double abs = 1e-12;
// |d1 x d2| <= parallel * |d1| |d2|
inline constexpr double parallel = 1e-10;
// |det| <= det * ||M||_F^2
inline constexpr double det = 1e-12;

inline bool near(double a, double b, double scale = 0.0) {
    const double s = std::max({std::abs(a), std::abs(b), std::abs(scale)});
    return std::abs(a - b) <= rel * s + abs;
}

inline bool near_zero(double a, double scale) { return std::abs(a) <= rel * std::abs(scale) + abs; }

}  // namespace affang::tol
