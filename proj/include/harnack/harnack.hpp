#pragma once
// Everything.

#include "harnack/amoeba.hpp"
#include "harnack/divisor.hpp"
#include "harnack/error.hpp"
#include "harnack/genus0.hpp"
#include "harnack/harnack_check.hpp"
#include "harnack/holes.hpp"
#include "harnack/io.hpp"
#include "harnack/isoradial.hpp"
#include "harnack/kasteleyn.hpp"
#include "harnack/lattice.hpp"
#include "harnack/legendre.hpp"
#include "harnack/numerics.hpp"
#include "harnack/ovals.hpp"
#include "harnack/parallel.hpp"
#include "harnack/polynomial.hpp"
#include "harnack/ronkin.hpp"
