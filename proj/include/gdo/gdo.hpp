#pragma once

// Umbrella header.

#include "gdo/core.hpp"
#include "gdo/interactions.hpp"
#include "gdo/operator_matrix.hpp"
#include "gdo/operators.hpp"
#include "gdo/polynomials.hpp"
#include "gdo/spectra.hpp"
#include "gdo/eigensolve.hpp"
#include "gdo/models.hpp"
#include "gdo/report.hpp"
#include "gdo/config.hpp"
#include "gdo/app.hpp"
