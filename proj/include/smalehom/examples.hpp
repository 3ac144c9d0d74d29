// Built-in example inputs: the graphs and recoding data used throughout the
// test suites and available from the command line generator.
#pragma once

#include "smalehom/sft_graph.hpp"

namespace smalehom {

Graph full_shift_graph(Index m);  // one vertex, m loops
Graph cycle_graph(Index n);       // directed n-cycle
Graph complete_graph(Index m);    // all ordered pairs, self-loops included

// The fold map: two disjoint copies of the full shift collapsing onto one.
GraphHom fold_hom(Index m);

}  // namespace smalehom
