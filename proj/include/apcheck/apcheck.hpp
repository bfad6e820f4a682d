#pragma once

// Umbrella header.

#include "apcheck/analytic.hpp"
#include "apcheck/charlab.hpp"
#include "apcheck/chebyshev.hpp"
#include "apcheck/ecfp.hpp"
#include "apcheck/factor.hpp"
#include "apcheck/frey.hpp"
#include "apcheck/identities.hpp"
#include "apcheck/integer.hpp"
#include "apcheck/kronecker.hpp"
#include "apcheck/modp.hpp"
#include "apcheck/parallel.hpp"
#include "apcheck/primes.hpp"
#include "apcheck/report.hpp"
#include "apcheck/sieve.hpp"
#include "apcheck/summation.hpp"
#include "apcheck/verify.hpp"
