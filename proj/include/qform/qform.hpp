#pragma once

// Everything: exact scalars and polynomials, forms, MOPS, Pearson pairs, quadratic
// decomposition, q-numerics, the family catalog and the verification suites.

#include "errors.hpp"
#include "scalar.hpp"
#include "polynomial.hpp"
#include "series.hpp"
#include "form.hpp"
#include "mops.hpp"
#include "pearson.hpp"
#include "quadratic.hpp"
#include "qnumerics.hpp"
#include "families.hpp"
#include "verify.hpp"
