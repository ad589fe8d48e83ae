// Isomorphism-class enumeration of trees and cut-trees.
#include "spectree/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "spectree/canonical.hpp"

namespace spectree {

namespace {

// Sort class representatives by canonical code (vertex counts being equal).
void sort_by_code(std::vector<Tree>* level) {
  std::vector<std::pair<std::string, Tree>> keyed;
  keyed.reserve(level->size());
  for (Tree& t : *level) {
    std::string code = canonical_code(t);
    keyed.emplace_back(std::move(code), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  level->clear();
  for (auto& [code, t] : keyed) level->push_back(std::move(t));
}

}  // namespace

std::vector<Tree> enumerate_trees(int n_max) {
  if (n_max < 1) fail(Err::EmptyGraph, "enumeration needs n_max >= 1");
  std::vector<Tree> all;
  std::vector<Tree> level = {Tree::single()};
  all.push_back(level[0]);
  for (int n = 2; n <= n_max; ++n) {
    std::vector<Tree> next;
    std::set<std::string> seen;  // loud duplicate detection
    for (const Tree& parent : level) {
      // One attachment point per automorphism orbit of the parent.
      std::map<std::string, int> orbits;
      for (int v = 0; v < parent.n; ++v) {
        orbits.emplace(canonical_code_marked(parent, v), v);
      }
      for (const auto& [orbit_code, v] : orbits) {
        std::vector<std::pair<int, int>> edges = parent.edges;
        edges.emplace_back(v, n - 1);
        Tree child(n, std::move(edges));
        // Accept only when the new leaf lies in the child's canonical leaf
        // orbit; then the child arises from exactly one (parent, orbit) pair.
        std::string new_leaf_code = canonical_code_marked(child, n - 1);
        bool canonical = true;
        for (int u = 0; u < n - 1 && canonical; ++u) {
          if (child.degree(u) != 1) continue;
          if (canonical_code_marked(child, u) < new_leaf_code) canonical = false;
        }
        if (!canonical) continue;
        if (!seen.insert(canonical_code(child)).second) {
          fail(Err::Internal, "duplicate class in tree enumeration");
        }
        next.push_back(std::move(child));
      }
    }
    sort_by_code(&next);
    for (const Tree& t : next) all.push_back(t);
    level = std::move(next);
  }
  return all;
}

std::vector<CutTree> enumerate_cut_trees(int n_max, int k) {
  if (n_max < 1) fail(Err::EmptyGraph, "enumeration needs n_max >= 1");
  if (k < 0) fail(Err::WrongHalfEdgeCount, "half-edge total must be >= 0");
  std::vector<CutTree> out;
  std::vector<std::pair<int, std::string>> order_keys;
  std::set<std::string> seen;
  for (const Tree& t : enumerate_trees(n_max)) {
    // Distribute exactly k half-edges over t.n vertices (all compositions).
    std::vector<int> he(static_cast<size_t>(t.n), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == t.n - 1) {
        he[static_cast<size_t>(pos)] = remaining;
        CutTree ct(t, he);
        std::string code = canonical_code(ct);
        if (seen.insert(code).second) {
          order_keys.emplace_back(t.n, code);
          out.push_back(ct);
        }
        he[static_cast<size_t>(pos)] = 0;
        return;
      }
      for (int c = 0; c <= remaining; ++c) {
        he[static_cast<size_t>(pos)] = c;
        self(self, pos + 1, remaining - c);
      }
      he[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, k);
  }
  // Deterministic order: by n, then canonical code.
  std::vector<size_t> idx(out.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return order_keys[a] < order_keys[b];
  });
  std::vector<CutTree> sorted;
  sorted.reserve(out.size());
  for (size_t i : idx) sorted.push_back(std::move(out[i]));
  return sorted;
}

}  // namespace spectree
