#pragma once

#include "monoindex/analytic_function.hpp"
#include "monoindex/grid_function.hpp"
#include "monoindex/indices.hpp"
#include "monoindex/oracles.hpp"
#include "monoindex/rearrangement.hpp"
#include "monoindex/summation.hpp"
