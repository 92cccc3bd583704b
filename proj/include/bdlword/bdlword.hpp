#pragma once

// Umbrella header: exact analysis of substitution fixed points and their
// lattice-like geometric representations.

#include "bdlword/bdl.hpp"
#include "bdlword/fixed_point.hpp"
#include "bdlword/fixtures.hpp"
#include "bdlword/json_io.hpp"
#include "bdlword/linalg.hpp"
#include "bdlword/matrix.hpp"
#include "bdlword/morphic_image.hpp"
#include "bdlword/morphism.hpp"
#include "bdlword/numeric.hpp"
#include "bdlword/polynomial.hpp"
#include "bdlword/report_io.hpp"
#include "bdlword/roots.hpp"
#include "bdlword/spectral.hpp"
#include "bdlword/svg.hpp"
#include "bdlword/word.hpp"
