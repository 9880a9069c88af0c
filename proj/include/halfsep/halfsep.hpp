#pragma once

// Umbrella header for the whole library.

#include "closure.hpp"
#include "element_set.hpp"
#include "euclid.hpp"
#include "experiments.hpp"
#include "fixtures.hpp"
#include "formal_context.hpp"
#include "graph.hpp"
#include "gsp.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "oracles.hpp"
#include "partition_lattice.hpp"
#include "random.hpp"
#include "simplex.hpp"
