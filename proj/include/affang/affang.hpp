#pragma once

#include "affang/affine_angle.hpp"
#include "affang/degeneration.hpp"
#include "affang/error.hpp"
#include "affang/geometry.hpp"
#include "affang/hyperbola_power.hpp"
#include "affang/isoptic.hpp"
#include "affang/svg.hpp"
#include "affang/tolerance.hpp"
