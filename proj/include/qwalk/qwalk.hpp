#pragma once

// Exact simulation of 2d-state discrete-time Grover walks on Z^d and
// exhaustive certification of minimal eigenstate supports.

#include "qwalk/catalog.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/eigen.hpp"
#include "qwalk/elimination.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/rational.hpp"
#include "qwalk/scalar.hpp"
#include "qwalk/search.hpp"
#include "qwalk/state.hpp"
#include "qwalk/walk.hpp"
