// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Umbrella header: pulls in the whole library.

#pragma once

#include "lrough/approx.hpp"
#include "lrough/axioms.hpp"
#include "lrough/covering.hpp"
#include "lrough/error.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/io.hpp"
#include "lrough/lattice.hpp"
#include "lrough/lmatrix.hpp"
#include "lrough/reduction.hpp"
