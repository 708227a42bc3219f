#pragma once

// Left-invariant metrics on 3-dimensional Lie groups: Milnor frames,
// curvature, local-symmetry classification, and geodesics on the universal
// cover of E_0(2).

#include "liesym/algebra.hpp"
#include "liesym/classification.hpp"
#include "liesym/curvature.hpp"
#include "liesym/errors.hpp"
#include "liesym/geodesics.hpp"
#include "liesym/linalg.hpp"
#include "liesym/milnor.hpp"
