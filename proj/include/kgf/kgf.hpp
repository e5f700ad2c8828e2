#pragma once

// Umbrella header: k-colored skeletons with factorization tables, k-graph
// validation, path normalization, structural diagnostics, the four
// equivalence-preserving moves, and the kgf text format.

#include "kgf/analysis.hpp"
#include "kgf/delay.hpp"
#include "kgf/insplit.hpp"
#include "kgf/kgraph.hpp"
#include "kgf/move_result.hpp"
#include "kgf/paths.hpp"
#include "kgf/reduction.hpp"
#include "kgf/sink_deletion.hpp"
#include "kgf/skeleton.hpp"
#include "kgf/square_table.hpp"
#include "kgf/textio.hpp"
#include "kgf/validation.hpp"
