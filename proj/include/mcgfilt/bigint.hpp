#pragma once

#include <gmpxx.h>

namespace mcg {

// All user-facing coefficients are arbitrary-precision integers.
using Int = mpz_class;

}  // namespace mcg
