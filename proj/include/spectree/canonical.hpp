// Canonical forms for (decorated) trees: AHU codes rooted at the centroid,
// with vertex labels carrying half-edge counts and optional vertex marks.
// Equal codes are equivalent to isomorphism of the decorated trees.
#pragma once

#include <string>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

// The one or two centroid vertices of a tree.
std::vector<int> tree_centroids(const Tree& t);

std::string canonical_code(const Tree& t);
std::string canonical_code(const CutTree& t);

// Canonical code of the pair (tree, distinguished vertex); two marks on the
// same tree get equal codes exactly when an automorphism maps one to the
// other.  Used for attachment-orbit computations during enumeration.
std::string canonical_code_marked(const Tree& t, int marked);
std::string canonical_code_marked(const CutTree& t, int marked);

bool isomorphic(const Tree& a, const Tree& b);
bool isomorphic(const CutTree& a, const CutTree& b);

}  // namespace spectree
