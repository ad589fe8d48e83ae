// Graph substrate implementation.
#include "spectree/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spectree {

namespace {

void check_simple_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        const char* what) {
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail(Err::InvalidVertex, std::string(what) + ": edge endpoint out of range");
    }
    if (u == v) fail(Err::NotAnEdge, std::string(what) + ": self-loop");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      fail(Err::NotAnEdge, std::string(what) + ": duplicate edge");
    }
  }
}

std::vector<std::vector<int>> build_adjacency(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  // Returns false if x and y were already connected (a cycle would form).
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[static_cast<size_t>(rx)] = ry;
    return true;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph::Graph(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
  if (n <= 0) fail(Err::EmptyGraph, "graph needs at least one vertex");
  check_simple_edges(n, edges, "graph");
}

std::vector<std::vector<int>> Graph::adjacency() const {
  return build_adjacency(n, edges);
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n) fail(Err::InvalidVertex, "degree: bad vertex");
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v || b == v) ++d;
  }
  return d;
}

bool Graph::is_connected() const {
  return connected_components(n, adjacency()).size() == 1;
}

bool Graph::is_forest() const {
  UnionFind uf(n);
  for (const auto& [u, v] : edges) {
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

Graph Graph::path(int k) {
  if (k < 1) fail(Err::EmptyGraph, "path needs at least one vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph(k, std::move(e));
}

Graph Graph::cycle(int k) {
  if (k < 3) fail(Err::NotAnEdge, "cycle needs at least three vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph(k, std::move(e));
}

Graph Graph::complete(int k) {
  if (k < 1) fail(Err::EmptyGraph, "complete graph needs a vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  }
  return Graph(k, std::move(e));
}

// ---------------------------------------------------------------------------
// Tree
// ---------------------------------------------------------------------------

Tree::Tree(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
  if (n <= 0) fail(Err::EmptyGraph, "tree needs at least one vertex");
  check_simple_edges(n, edges, "tree");
  if (static_cast<int>(edges.size()) != n - 1) {
    fail(Err::NotATree, "tree must have exactly n-1 edges");
  }
  UnionFind uf(n);
  for (const auto& [u, v] : edges) {
    if (!uf.unite(u, v)) fail(Err::NotATree, "edge set contains a cycle");
  }
}

std::vector<std::vector<int>> Tree::adjacency() const {
  return build_adjacency(n, edges);
}

int Tree::degree(int v) const {
  if (v < 0 || v >= n) fail(Err::InvalidVertex, "degree: bad vertex");
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v || b == v) ++d;
  }
  return d;
}

Tree Tree::single() { return Tree(1, {}); }

Tree Tree::path(int k) {
  Graph g = Graph::path(k);
  return Tree(g.n, g.edges);
}

Tree Tree::star(int m) {
  if (m < 0) fail(Err::InvalidVertex, "star needs a nonnegative leaf count");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
  return Tree(m + 1, std::move(e));
}

Tree tree_from_graph(const Graph& g) {
  if (!g.is_tree()) fail(Err::NotATree, "graph is not a tree");
  return Tree(g.n, g.edges);
}

// ---------------------------------------------------------------------------
// CutTree
// ---------------------------------------------------------------------------

CutTree::CutTree(Tree t)
    : tree(std::move(t)), half_edges(static_cast<size_t>(tree.n), 0) {}

CutTree::CutTree(Tree t, std::vector<int> he)
    : tree(std::move(t)), half_edges(std::move(he)) {
  if (static_cast<int>(half_edges.size()) != tree.n) {
    fail(Err::WrongHalfEdgeCount, "half-edge vector length must equal n");
  }
  for (int c : half_edges) {
    if (c < 0) fail(Err::WrongHalfEdgeCount, "negative half-edge count");
  }
}

int CutTree::total_half_edges() const {
  int s = 0;
  for (int c : half_edges) s += c;
  return s;
}

// ---------------------------------------------------------------------------
// AcyclicMatrix / DenseMatrix
// ---------------------------------------------------------------------------

AcyclicMatrix::AcyclicMatrix(int n_, std::vector<Rat> diag_,
                             std::vector<WEdge> edges_)
    : n(n_), diag(std::move(diag_)), edges(std::move(edges_)) {
  if (n <= 0) fail(Err::EmptyGraph, "matrix needs positive dimension");
  if (static_cast<int>(diag.size()) != n) {
    fail(Err::Internal, "diagonal length mismatch");
  }
  std::vector<std::pair<int, int>> support;
  support.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.w == 0) fail(Err::NotAnEdge, "zero weight on matrix edge");
    support.emplace_back(e.u, e.v);
  }
  check_simple_edges(n, support, "matrix support");
  UnionFind uf(n);
  for (const auto& [u, v] : support) {
    if (!uf.unite(u, v)) fail(Err::NotATree, "matrix support contains a cycle");
  }
}

std::vector<std::vector<std::pair<int, Rat>>> AcyclicMatrix::adjacency() const {
  std::vector<std::vector<std::pair<int, Rat>>> adj(static_cast<size_t>(n));
  for (const auto& e : edges) {
    adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.w);
    adj[static_cast<size_t>(e.v)].emplace_back(e.u, e.w);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return adj;
}

Rat AcyclicMatrix::entry(int i, int j) const {
  if (i < 0 || i >= n || j < 0 || j >= n) {
    fail(Err::InvalidVertex, "matrix entry out of range");
  }
  if (i == j) return diag[static_cast<size_t>(i)];
  for (const auto& e : edges) {
    if ((e.u == i && e.v == j) || (e.u == j && e.v == i)) return e.w;
  }
  return Rat(0);
}

bool AcyclicMatrix::all_integer() const {
  for (const Rat& d : diag) {
    if (!rat_is_integer(d)) return false;
  }
  for (const auto& e : edges) {
    if (!rat_is_integer(e.w)) return false;
  }
  return true;
}

DenseMatrix DenseMatrix::zero(int n) {
  DenseMatrix m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
  return m;
}

DenseMatrix dense_of(const AcyclicMatrix& m) {
  DenseMatrix d = DenseMatrix::zero(m.n);
  for (int i = 0; i < m.n; ++i) d.at(i, i) = m.diag[static_cast<size_t>(i)];
  for (const auto& e : m.edges) {
    d.at(e.u, e.v) = e.w;
    d.at(e.v, e.u) = e.w;
  }
  return d;
}

AcyclicMatrix acyclic_of(const DenseMatrix& d) {
  std::vector<Rat> diag(static_cast<size_t>(d.n));
  std::vector<AcyclicMatrix::WEdge> edges;
  for (int i = 0; i < d.n; ++i) {
    diag[static_cast<size_t>(i)] = d.at(i, i);
    for (int j = i + 1; j < d.n; ++j) {
      if (d.at(i, j) != d.at(j, i)) fail(Err::Internal, "matrix not symmetric");
      if (d.at(i, j) != 0) edges.push_back({i, j, d.at(i, j)});
    }
  }
  return AcyclicMatrix(d.n, std::move(diag), std::move(edges));
}

// ---------------------------------------------------------------------------
// Matrix builders
// ---------------------------------------------------------------------------

AcyclicMatrix adjacency_matrix(const CutTree& t) {
  std::vector<Rat> diag(static_cast<size_t>(t.n()), Rat(0));
  std::vector<AcyclicMatrix::WEdge> edges;
  edges.reserve(t.tree.edges.size());
  for (const auto& [u, v] : t.tree.edges) edges.push_back({u, v, Rat(1)});
  return AcyclicMatrix(t.n(), std::move(diag), std::move(edges));
}

AcyclicMatrix adjacency_matrix(const Tree& t) {
  return adjacency_matrix(CutTree(t));
}

AcyclicMatrix laplacian_matrix(const CutTree& t) {
  std::vector<Rat> diag(static_cast<size_t>(t.n()));
  for (int v = 0; v < t.n(); ++v) {
    diag[static_cast<size_t>(v)] =
        Rat(t.tree.degree(v) + t.half_edges[static_cast<size_t>(v)]);
  }
  std::vector<AcyclicMatrix::WEdge> edges;
  edges.reserve(t.tree.edges.size());
  for (const auto& [u, v] : t.tree.edges) edges.push_back({u, v, Rat(-1)});
  return AcyclicMatrix(t.n(), std::move(diag), std::move(edges));
}

AcyclicMatrix laplacian_matrix(const Tree& t) {
  return laplacian_matrix(CutTree(t));
}

DenseMatrix adjacency_dense(const Graph& g) {
  DenseMatrix d = DenseMatrix::zero(g.n);
  for (const auto& [u, v] : g.edges) {
    d.at(u, v) = Rat(1);
    d.at(v, u) = Rat(1);
  }
  return d;
}

DenseMatrix laplacian_dense(const Graph& g) {
  DenseMatrix d = DenseMatrix::zero(g.n);
  for (const auto& [u, v] : g.edges) {
    d.at(u, v) = Rat(-1);
    d.at(v, u) = Rat(-1);
    d.at(u, u) += 1;
    d.at(v, v) += 1;
  }
  return d;
}

DenseMatrix signless_laplacian(const Graph& g) {
  DenseMatrix d = DenseMatrix::zero(g.n);
  for (const auto& [u, v] : g.edges) {
    d.at(u, v) = Rat(1);
    d.at(v, u) = Rat(1);
    d.at(u, u) += 1;
    d.at(v, v) += 1;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Transformations
// ---------------------------------------------------------------------------

Graph subdivision(const Graph& g) {
  int n2 = g.n + static_cast<int>(g.edges.size());
  std::vector<std::pair<int, int>> e2;
  e2.reserve(2 * g.edges.size());
  int w = g.n;
  for (const auto& [u, v] : g.edges) {
    e2.emplace_back(u, w);
    e2.emplace_back(w, v);
    ++w;
  }
  return Graph(n2, std::move(e2));
}

Graph rooted_product(const Graph& g, const Graph& h, int root) {
  if (g.n == 0 || h.n == 0) fail(Err::EmptyGraph, "rooted product of empty graph");
  if (root < 0 || root >= h.n) fail(Err::InvalidVertex, "bad root vertex");
  if (!h.is_connected()) fail(Err::NotATree, "rooted factor must be connected");
  int N = g.n * h.n;
  std::vector<std::pair<int, int>> e;
  e.reserve(g.edges.size() + static_cast<size_t>(g.n) * h.edges.size());
  for (const auto& [i, k] : g.edges) {
    e.emplace_back(i * h.n + root, k * h.n + root);
  }
  for (int i = 0; i < g.n; ++i) {
    for (const auto& [j, l] : h.edges) {
      e.emplace_back(i * h.n + j, i * h.n + l);
    }
  }
  return Graph(N, std::move(e));
}

Tree rooted_product(const Tree& g, const Tree& h, int root) {
  return tree_from_graph(rooted_product(g.as_graph(), h.as_graph(), root));
}

// ---------------------------------------------------------------------------
// Surgery
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> connected_components(
    int n, const std::vector<std::vector<int>>& adj) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp, stack = {s};
    seen[static_cast<size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // component order follows smallest member because s ascends
}

namespace {

// Extract the sub-cut-tree induced by `verts` (sorted ascending), with
// half-edge counts taken from `he`.
CutTree induced_cut_tree(const Tree& t, const std::vector<int>& he,
                         const std::vector<int>& verts) {
  std::vector<int> index(static_cast<size_t>(t.n), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    index[static_cast<size_t>(verts[i])] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : t.edges) {
    int iu = index[static_cast<size_t>(u)];
    int iv = index[static_cast<size_t>(v)];
    if (iu >= 0 && iv >= 0) edges.emplace_back(iu, iv);
  }
  std::vector<int> sub_he(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    sub_he[i] = he[static_cast<size_t>(verts[i])];
  }
  return CutTree(Tree(static_cast<int>(verts.size()), std::move(edges)),
                 std::move(sub_he));
}

}  // namespace

std::vector<Tree> delete_vertex(const Tree& t, int v) {
  if (v < 0 || v >= t.n) fail(Err::InvalidVertex, "delete_vertex: bad vertex");
  std::vector<std::vector<int>> adj = t.adjacency();
  std::vector<std::vector<int>> pruned(static_cast<size_t>(t.n));
  for (int u = 0; u < t.n; ++u) {
    if (u == v) continue;
    for (int w : adj[static_cast<size_t>(u)]) {
      if (w != v) pruned[static_cast<size_t>(u)].push_back(w);
    }
  }
  std::vector<Tree> out;
  std::vector<int> zero_he(static_cast<size_t>(t.n), 0);
  for (const auto& comp : connected_components(t.n, pruned)) {
    if (comp.size() == 1 && comp[0] == v) continue;
    out.push_back(induced_cut_tree(t, zero_he, comp).tree);
  }
  return out;
}

std::vector<CutTree> delete_vertex_with_halfedges(const CutTree& t, int v) {
  if (v < 0 || v >= t.n()) {
    fail(Err::InvalidVertex, "delete_vertex_with_halfedges: bad vertex");
  }
  std::vector<int> he = t.half_edges;
  std::vector<std::vector<int>> adj = t.tree.adjacency();
  for (int w : adj[static_cast<size_t>(v)]) {
    ++he[static_cast<size_t>(w)];
  }
  std::vector<std::vector<int>> pruned(static_cast<size_t>(t.n()));
  for (int u = 0; u < t.n(); ++u) {
    if (u == v) continue;
    for (int w : adj[static_cast<size_t>(u)]) {
      if (w != v) pruned[static_cast<size_t>(u)].push_back(w);
    }
  }
  std::vector<CutTree> out;
  for (const auto& comp : connected_components(t.n(), pruned)) {
    if (comp.size() == 1 && comp[0] == v) continue;
    out.push_back(induced_cut_tree(t.tree, he, comp));
  }
  return out;
}

std::pair<CutTree, CutTree> cut_edge(const CutTree& t, int u, int v) {
  bool found = false;
  for (const auto& [a, b] : t.tree.edges) {
    if ((a == u && b == v) || (a == v && b == u)) {
      found = true;
      break;
    }
  }
  if (!found) fail(Err::NotAnEdge, "cut_edge: not a tree edge");
  std::vector<int> he = t.half_edges;
  ++he[static_cast<size_t>(u)];
  ++he[static_cast<size_t>(v)];
  std::vector<std::vector<int>> pruned(static_cast<size_t>(t.n()));
  for (const auto& [a, b] : t.tree.edges) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    pruned[static_cast<size_t>(a)].push_back(b);
    pruned[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<std::vector<int>> comps = connected_components(t.n(), pruned);
  if (comps.size() != 2) fail(Err::Internal, "cutting a tree edge must split it");
  return {induced_cut_tree(t.tree, he, comps[0]),
          induced_cut_tree(t.tree, he, comps[1])};
}

AcyclicMatrix principal_submatrix(const AcyclicMatrix& m,
                                  const std::vector<int>& drop) {
  std::vector<bool> dropped(static_cast<size_t>(m.n), false);
  for (int v : drop) {
    if (v < 0 || v >= m.n) fail(Err::InvalidVertex, "submatrix: bad vertex");
    dropped[static_cast<size_t>(v)] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < m.n; ++v) {
    if (!dropped[static_cast<size_t>(v)]) keep.push_back(v);
  }
  return submatrix_keep(m, keep);
}

AcyclicMatrix delete_vertex(const AcyclicMatrix& m, int v) {
  return principal_submatrix(m, {v});
}

AcyclicMatrix submatrix_keep(const AcyclicMatrix& m, const std::vector<int>& keep) {
  if (keep.empty()) fail(Err::EmptyGraph, "empty principal submatrix");
  std::vector<int> index(static_cast<size_t>(m.n), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= m.n) fail(Err::InvalidVertex, "submatrix: bad vertex");
    if (index[static_cast<size_t>(v)] != -1) {
      fail(Err::InvalidVertex, "submatrix: repeated vertex");
    }
    index[static_cast<size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Rat> diag(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    diag[i] = m.diag[static_cast<size_t>(keep[i])];
  }
  std::vector<AcyclicMatrix::WEdge> edges;
  for (const auto& e : m.edges) {
    int iu = index[static_cast<size_t>(e.u)];
    int iv = index[static_cast<size_t>(e.v)];
    if (iu >= 0 && iv >= 0) edges.push_back({iu, iv, e.w});
  }
  return AcyclicMatrix(static_cast<int>(keep.size()), std::move(diag),
                       std::move(edges));
}

}  // namespace spectree
