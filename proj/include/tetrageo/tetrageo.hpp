#pragma once

#include "error.hpp"
#include "geom.hpp"
#include "tetra.hpp"
#include "combinatorics.hpp"
#include "strip.hpp"
#include "unfolding.hpp"
#include "geodesics.hpp"
#include "existence.hpp"
#include "counting.hpp"
#include "projection.hpp"
#include "io.hpp"
