#pragma once

// Umbrella header: two-dimensional digital nets over Z_b, Hammersley and
// folded Hammersley constructions, dual-net weight enumeration, and exact /
// estimated discrepancy norms.

#include "zbnet/zb.hpp"
#include "zbnet/weight_functions.hpp"
#include "zbnet/netcore.hpp"
#include "zbnet/constructions.hpp"
#include "zbnet/weights.hpp"
#include "zbnet/rational.hpp"
#include "zbnet/discrepancy.hpp"
#include "zbnet/point_io.hpp"
