#pragma once

// Umbrella header: generalized reciprocal distance matrices, their
// spectra, closed forms, and spread bounds.

#include "rdalpha/bounds.hpp"
#include "rdalpha/cliques.hpp"
#include "rdalpha/closed_forms.hpp"
#include "rdalpha/distance.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/errors.hpp"
#include "rdalpha/graph.hpp"
#include "rdalpha/rd_matrices.hpp"
#include "rdalpha/symmetric_matrix.hpp"
