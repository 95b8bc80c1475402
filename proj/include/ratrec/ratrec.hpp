#pragma once

// Umbrella header: exact recovery of denominator-bounded rationals from
// numeric approximations via continued fractions.

#include "ratrec/bigint.hpp"
#include "ratrec/bounds.hpp"
#include "ratrec/continued_fraction.hpp"
#include "ratrec/errors.hpp"
#include "ratrec/polynomial.hpp"
#include "ratrec/rational.hpp"
#include "ratrec/recovery.hpp"
#include "ratrec/validation.hpp"
