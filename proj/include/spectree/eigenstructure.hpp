// Exact eigen-structure analysis of acyclic symmetric matrices: kernels over
// Q(theta), nodal sets, the structure forest, multiplicity formulas, sign-based
// multiplicity counts, vertex classification, and the Min/Zero/Link decomposition.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spectree/algebraic.hpp"
#include "spectree/graph.hpp"

namespace spectree {

// Basis of the theta-eigenspace of an acyclic symmetric matrix, i.e. the
// nullspace of M - theta*I over the number field Q(theta).
struct KernelBasis {
    FieldPtr field;
    std::vector<std::vector<NumberFieldElement>> vectors;

    int dimension() const { return static_cast<int>(vectors.size()); }
};

// Computes the reduced-echelon nullspace of M - theta*I by exact Gaussian
// elimination over Q(theta).  Each basis vector is normalized so its first
// nonzero coordinate is 1; vectors are ordered by first-nonzero index.
// Empty basis when theta is not an eigenvalue.
KernelBasis kernel_basis(const AcyclicMatrix& m, const AlgebraicNumber& theta);

// A kernel vector whose zero coordinate set is exactly the common zero set of
// the whole eigenspace.  Deterministic: tries x(t) = sum t^(i-1) b_i for
// t = 1, 2, 3, ... and returns the first combination with minimal zero set.
// Errors: NotAnEigenvalue when the kernel is trivial.
std::vector<NumberFieldElement> generic_eigenvector(const AcyclicMatrix& m,
                                                    const AlgebraicNumber& theta);

// Nodal structure of M at theta.  N is the common zero set of the
// theta-eigenspace; N_interior are the members of N all of whose neighbors lie
// in N; boundary = N minus N_interior; E_interior are the edges with both ends
// in N.  F is the forest on V minus N_interior with the E_interior edges
// removed, and c counts its connected components.
struct NodalSets {
    std::vector<int> N;
    std::vector<int> N_interior;
    std::vector<int> boundary;
    std::vector<std::pair<int, int>> E_interior;
    std::vector<int> F_vertices;
    std::vector<std::pair<int, int>> F_edges;
    int c = 0;
    // Convention for multiplicity 0: N = V, F empty, c = 0, and this flag set.
    bool not_eigenvalue = false;
};

NodalSets nodal_sets(const AcyclicMatrix& m, const AlgebraicNumber& theta);

// Degree in F of a vertex (looks up F_edges).
int forest_degree(const NodalSets& ns, int v);

// multiplicity via c + sum over boundary u of (deg_F(u) - 2).  Returns 0 when
// theta is not an eigenvalue.
int multiplicity_by_degree_formula(const AcyclicMatrix& m, const AlgebraicNumber& theta);

// multiplicity via #components(F - boundary) - |boundary|.  Returns 0 when
// theta is not an eigenvalue.
int multiplicity_by_component_formula(const AcyclicMatrix& m, const AlgebraicNumber& theta);

// Multiplicity count from the zero pattern of a single eigenvector y with no
// two adjacent zero coordinates: s_k = number of zero coordinates of degree k,
// c = number of components of the graph of M, value = c + sum (k-2) s_k.
struct FiedlerReport {
    std::map<int, int> s;
    int c = 0;
    int value = 0;
};

// The eigenvalue is recovered from y itself (y must satisfy M y = theta y for
// a unique theta in y's field).  Errors: NotAnEigenvalue if y is not an
// eigenvector, AdjacentZeros if two zero coordinates are adjacent.
FiedlerReport fiedler_multiplicity(const AcyclicMatrix& m,
                                   const std::vector<NumberFieldElement>& y);

// Effect of deleting one vertex on the multiplicity of theta:
// +1 ParterWiener, -1 Downer, 0 Neutral.
enum class VertexClass { ParterWiener, Downer, Neutral };

const char* vertex_class_name(VertexClass c);

VertexClass classify_vertex(const AcyclicMatrix& m, const AlgebraicNumber& theta, int v);

// Decomposition of the graph of M induced by theta: link vertices are the
// nodal boundary; the components of G - links are classified as Min pieces
// (multiplicity 1 on the principal submatrix, generic eigenvector nowhere zero
// on the piece) or Zero pieces (multiplicity 0).  All structural invariants
// are verified before returning; a violation raises StructureViolation, which
// would falsify the theorem this encodes.
struct Decomposition {
    std::vector<int> link_vertices;
    std::vector<std::vector<int>> min_pieces;
    std::vector<std::vector<int>> zero_pieces;
};

Decomposition decompose(const AcyclicMatrix& m, const AlgebraicNumber& theta);

// Deletes every edge of t whose endpoints carry equal values of the
// nowhere-zero Laplacian eigenvector x and returns the resulting components
// as cut-trees (each keeps only its original half-edges; deleting an edge
// with x_u = x_v absorbs its -x_v term into the diagonal, so the restriction
// of x remains a mu-eigenvector of each component).  Every component must
// pass the mu-L-minimality test.  Errors: ZeroCoordinate if x has a zero
// entry; NotAnEigenvalue if x is not a mu-eigenvector of laplacian_matrix(t);
// MinimalityViolation if a component fails the test.
// (Defined alongside the minimality tests.)
std::vector<CutTree> laplacian_decompose(const CutTree& t, const AlgebraicNumber& mu,
                                         const std::vector<NumberFieldElement>& x);

}  // namespace spectree
