#pragma once

// Exact computation in truncated p-adic modules: ultrametric arithmetic,
// pure-closure lattice algebra, Galois-type invariants, forking independence,
// the quotient pregeometry, and the brute-force property lab.

#include "padlab/context.hpp"
#include "padlab/distance.hpp"
#include "padlab/errors.hpp"
#include "padlab/exact.hpp"
#include "padlab/indep.hpp"
#include "padlab/oracle.hpp"
#include "padlab/pregeometry.hpp"
#include "padlab/problem.hpp"
#include "padlab/rng.hpp"
#include "padlab/submodule.hpp"
#include "padlab/suites.hpp"
#include "padlab/types.hpp"
#include "padlab/vector.hpp"
#include "padlab/witness.hpp"
