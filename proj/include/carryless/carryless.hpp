#pragma once

// Umbrella header for the arithmetic library (the CLI lives in cli.hpp).

#include "carryless/bigint.hpp"
#include "carryless/classify.hpp"
#include "carryless/crtpair.hpp"
#include "carryless/digitnum.hpp"
#include "carryless/errors.hpp"
#include "carryless/factorize.hpp"
#include "carryless/gfpoly.hpp"
#include "carryless/oeis.hpp"
#include "carryless/powers.hpp"
#include "carryless/primes.hpp"
#include "carryless/sequences.hpp"
