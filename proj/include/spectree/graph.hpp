// Graph substrate: trees, cut-trees (trees decorated with per-vertex
// half-edge counts), symmetric rational matrices with forest support, and
// plain simple graphs for the subdivision / rooted-product paths.  All types
// are immutable values validated at construction.
#pragma once

#include <utility>
#include <vector>

#include "spectree/base.hpp"

namespace spectree {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int n_, std::vector<std::pair<int, int>> edges_);  // validates simple

  std::vector<std::vector<int>> adjacency() const;
  int degree(int v) const;
  bool is_connected() const;
  bool is_forest() const;
  bool is_tree() const { return is_connected() && is_forest(); }

  static Graph path(int k);
  static Graph cycle(int k);
  static Graph complete(int k);
};

struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Tree() = default;
  Tree(int n_, std::vector<std::pair<int, int>> edges_);  // validates tree

  std::vector<std::vector<int>> adjacency() const;
  int degree(int v) const;
  Graph as_graph() const { return Graph(n, edges); }

  static Tree single();               // K_1
  static Tree path(int k);            // P_k
  static Tree star(int m);            // K_{1,m}: center 0, m leaves
};

Tree tree_from_graph(const Graph& g);  // NotATree unless g is a tree

struct CutTree {
  Tree tree;
  std::vector<int> half_edges;  // size n, counts >= 0

  CutTree() = default;
  explicit CutTree(Tree t);  // zero half-edges
  CutTree(Tree t, std::vector<int> he);

  int n() const { return tree.n; }
  int total_half_edges() const;
};

struct AcyclicMatrix {
  struct WEdge {
    int u, v;
    Rat w;
  };

  int n = 0;
  std::vector<Rat> diag;
  std::vector<WEdge> edges;

  AcyclicMatrix() = default;
  AcyclicMatrix(int n_, std::vector<Rat> diag_, std::vector<WEdge> edges_);

  // Neighbor lists with weights.
  std::vector<std::vector<std::pair<int, Rat>>> adjacency() const;
  Rat entry(int i, int j) const;
  bool all_integer() const;
};

// Dense symmetric rational matrix (fallback representation for non-forest
// supports such as signless Laplacians of cyclic graphs).
struct DenseMatrix {
  int n = 0;
  std::vector<std::vector<Rat>> a;

  static DenseMatrix zero(int n);
  Rat& at(int i, int j) { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const Rat& at(int i, int j) const {
    return a[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
};

DenseMatrix dense_of(const AcyclicMatrix& m);
// Succeeds only when the off-diagonal support of d is a simple forest.
AcyclicMatrix acyclic_of(const DenseMatrix& d);

// ---------------------------------------------------------------------------
// Matrix builders.
// ---------------------------------------------------------------------------

AcyclicMatrix adjacency_matrix(const CutTree& t);  // half-edges ignored
AcyclicMatrix adjacency_matrix(const Tree& t);
AcyclicMatrix laplacian_matrix(const CutTree& t);  // diag = deg + half-edges
AcyclicMatrix laplacian_matrix(const Tree& t);
DenseMatrix adjacency_dense(const Graph& g);
DenseMatrix laplacian_dense(const Graph& g);
DenseMatrix signless_laplacian(const Graph& g);  // D + A

// ---------------------------------------------------------------------------
// Graph transformations.
// ---------------------------------------------------------------------------

// Replace each edge uv by u-w-v; originals keep their indices, subdivision
// vertices follow in input edge order.
Graph subdivision(const Graph& g);

// g o h: one copy of h per vertex of g, copy i's root identified with vertex
// i of g; vertex (i, j) has index i*|V(h)| + j.
Graph rooted_product(const Graph& g, const Graph& h, int root);
Tree rooted_product(const Tree& g, const Tree& h, int root);

// ---------------------------------------------------------------------------
// Surgery.
// ---------------------------------------------------------------------------

// Connected components as Trees, ordered by smallest original vertex index.
std::vector<Tree> delete_vertex(const Tree& t, int v);

// Components after deleting v; every former neighbor of v gains a half-edge,
// so the direct sum of component Laplacians equals the original Laplacian
// minus row/column v.  Ordered by smallest original vertex index.
std::vector<CutTree> delete_vertex_with_halfedges(const CutTree& t, int v);

// Remove a tree edge; both endpoints gain one half-edge (Laplacian diagonals
// unchanged).  First component is the one with the smaller original index.
std::pair<CutTree, CutTree> cut_edge(const CutTree& t, int u, int v);

// Keep rows/columns not in `drop`, reindexed in ascending original order.
AcyclicMatrix principal_submatrix(const AcyclicMatrix& m,
                                  const std::vector<int>& drop);
AcyclicMatrix delete_vertex(const AcyclicMatrix& m, int v);
// Keep exactly the given vertices, in the given order.
AcyclicMatrix submatrix_keep(const AcyclicMatrix& m, const std::vector<int>& keep);

// Connected components of an adjacency structure (utility shared by the
// analysis layers): returns vertex lists sorted ascending, components ordered
// by smallest member.
std::vector<std::vector<int>> connected_components(
    int n, const std::vector<std::vector<int>>& adj);

}  // namespace spectree
