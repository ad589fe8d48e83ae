// Exhaustive enumeration of isomorphism classes: free trees via canonical
// augmentation (one representative per class, provably duplicate-free), and
// cut-trees via half-edge distribution with canonical-code deduplication.
// Output order is deterministic: by vertex count, then canonical code.
#pragma once

#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

// One representative per isomorphism class, orders 1..n_max.
std::vector<Tree> enumerate_trees(int n_max);

// One representative per decorated-isomorphism class: every tree of order
// <= n_max carrying exactly k half-edges.
std::vector<CutTree> enumerate_cut_trees(int n_max, int k);

}  // namespace spectree
