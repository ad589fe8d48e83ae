// AHU canonical codes for decorated trees.
#include "spectree/canonical.hpp"

#include <algorithm>

namespace spectree {

namespace {

// Subtree sizes with an iterative post-order walk from `root`.
std::vector<int> subtree_sizes(const std::vector<std::vector<int>>& adj, int n,
                               int root, std::vector<int>* parent_out) {
  std::vector<int> parent(static_cast<size_t>(n), -2);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  std::vector<int> stack = {root};
  parent[static_cast<size_t>(root)] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[static_cast<size_t>(v)]) {
      if (parent[static_cast<size_t>(w)] == -2) {
        parent[static_cast<size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> size(static_cast<size_t>(n), 1);
  for (size_t i = order.size(); i-- > 0;) {
    int v = order[i];
    int p = parent[static_cast<size_t>(v)];
    if (p >= 0) size[static_cast<size_t>(p)] += size[static_cast<size_t>(v)];
  }
  if (parent_out) *parent_out = parent;
  return size;
}

// Code of the tree rooted at `root` with per-vertex label strings.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int n,
                        int root, const std::vector<std::string>& labels) {
  std::vector<int> parent;
  subtree_sizes(adj, n, root, &parent);
  // Reverse DFS preorder visits children before parents.
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  {
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : adj[static_cast<size_t>(v)]) {
        if (w != parent[static_cast<size_t>(v)]) {
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<std::string> code(static_cast<size_t>(n));
  for (size_t i = order.size(); i-- > 0;) {
    int v = order[i];
    std::vector<std::string> kids;
    for (int w : adj[static_cast<size_t>(v)]) {
      if (w != parent[static_cast<size_t>(v)]) {
        kids.push_back(code[static_cast<size_t>(w)]);
      }
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    s += labels[static_cast<size_t>(v)];
    s += "|";
    for (const std::string& k : kids) s += k;
    s += ")";
    code[static_cast<size_t>(v)] = std::move(s);
  }
  return code[static_cast<size_t>(root)];
}

std::string coded(const Tree& t, const std::vector<std::string>& labels) {
  std::vector<std::vector<int>> adj = t.adjacency();
  std::string best;
  bool first = true;
  for (int c : tree_centroids(t)) {
    std::string s = rooted_code(adj, t.n, c, labels);
    if (first || s < best) {
      best = std::move(s);
      first = false;
    }
  }
  return best;
}

std::vector<std::string> he_labels(const CutTree& t, int marked) {
  std::vector<std::string> labels(static_cast<size_t>(t.n()));
  for (int v = 0; v < t.n(); ++v) {
    labels[static_cast<size_t>(v)] =
        std::to_string(t.half_edges[static_cast<size_t>(v)]);
    if (v == marked) labels[static_cast<size_t>(v)] += "m";
  }
  return labels;
}

}  // namespace

std::vector<int> tree_centroids(const Tree& t) {
  std::vector<std::vector<int>> adj = t.adjacency();
  std::vector<int> parent;
  std::vector<int> size = subtree_sizes(adj, t.n, 0, &parent);
  int best = t.n + 1;
  std::vector<int> centroids;
  for (int v = 0; v < t.n; ++v) {
    int max_comp = t.n - size[static_cast<size_t>(v)];
    for (int w : adj[static_cast<size_t>(v)]) {
      if (w != parent[static_cast<size_t>(v)]) {
        max_comp = std::max(max_comp, size[static_cast<size_t>(w)]);
      }
    }
    if (max_comp < best) {
      best = max_comp;
      centroids = {v};
    } else if (max_comp == best) {
      centroids.push_back(v);
    }
  }
  return centroids;
}

std::string canonical_code(const Tree& t) {
  return canonical_code(CutTree(t));
}

std::string canonical_code(const CutTree& t) {
  return coded(t.tree, he_labels(t, -1));
}

std::string canonical_code_marked(const Tree& t, int marked) {
  return canonical_code_marked(CutTree(t), marked);
}

std::string canonical_code_marked(const CutTree& t, int marked) {
  if (marked < 0 || marked >= t.n()) {
    fail(Err::InvalidVertex, "marked vertex out of range");
  }
  return coded(t.tree, he_labels(t, marked));
}

bool isomorphic(const Tree& a, const Tree& b) {
  return a.n == b.n && canonical_code(a) == canonical_code(b);
}

bool isomorphic(const CutTree& a, const CutTree& b) {
  return a.n() == b.n() && canonical_code(a) == canonical_code(b);
}

}  // namespace spectree
