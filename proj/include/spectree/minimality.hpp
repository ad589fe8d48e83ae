// Minimality tests and growth constructions for trees and cut-trees:
// nowhere-zero eigenvector tests for adjacency and Laplacian matrices,
// exhaustive enumeration of the minimal objects, norm-divisibility and
// determinant facts, rooted-product and subdivision polynomial identities,
// and totally minimal trees.
#pragma once

#include <utility>
#include <vector>

#include "spectree/algebraic.hpp"
#include "spectree/eigenstructure.hpp"
#include "spectree/graph.hpp"
#include "spectree/polynomial.hpp"

namespace spectree {

// True iff multiplicity(A_t, lambda) = 1 and the kernel vector is
// nowhere-zero (for trees, multiplicity > 1 forces zero coordinates, so this
// test is exact).
bool is_lambda_minimal(const Tree& t, const AlgebraicNumber& lambda);

// True iff multiplicity(L_t, mu) = 1, the kernel vector is nowhere-zero, and
// the values across every tree edge differ.
bool is_L_minimal(const CutTree& t, const AlgebraicNumber& mu);

// All isomorphism classes of trees of order <= n_max passing
// is_lambda_minimal, ordered by (order, canonical code).
std::vector<Tree> enumerate_lambda_minimal(const AlgebraicNumber& lambda, int n_max);

// All decorated-isomorphism classes of k-cut-trees of order <= n_max passing
// is_L_minimal, ordered by (order, canonical code).
std::vector<CutTree> enumerate_L_minimal(const AlgebraicNumber& mu, int k, int n_max);

// Grows a larger lambda-minimal tree from a lambda-minimal tree t with
// pendant v: 2k-1 copies of t are identified at v (k carrying the eigenvector
// x with x_v = 1, k-1 carrying -x), and each negated copy's neighbor-of-v
// vertex receives two new pendant leaves of value -1.  The assembled vector
// is checked against the eigen-equation at every vertex, and the result is
// verified lambda-minimal.  Order: (2k-1)(|t|-1) + 1 + 2(k-1).
// Errors: NotMinimal, NotPendant, LambdaZero.
Tree grow_minimal(const Tree& t, int v, int k, const AlgebraicNumber& lambda);

// Alternative growth: four copies of t identified pairwise at two copies of
// the pendant v (value 1), both joined to a new center of value -lambda that
// carries p = lambda^2 + 2 pendant leaves of value -1.  Requires lambda^2 + 2
// to be a nonnegative rational integer.  Order: 4(|t|-1) + 3 + p.
// Errors: NotMinimal, NotPendant, NonIntegralPendantCount.
Tree grow_minimal_alt(const Tree& t, int v, const AlgebraicNumber& lambda);

// Laplacian growth for an integer eigenvalue s > 1 of L_t (t with a pendant
// v, neighbor u; the smallest-index pendant is used): s+1 junction vertices
// of value 1, each adjacent to two copies of t - v at their u-vertices
// (value 1-s), all junctions adjacent to one center of value 1+s.  The
// assembled vector is checked exactly and the result verified s-L-minimal.
// Order: 2(s+1)(|t|-1) + (s+1) + 1.
// Errors: NotAnEigenvalue, SOutOfRange (s <= 1), NotPendant.
Tree grow_L_minimal(const Tree& t, long s);

// Arithmetic consequences of an eigenvalue mu != 0 of the Laplacian of a
// connected graph: Norm(mu)^m divides n * (spanning tree count); for trees
// Norm(mu) divides n, and when Norm(mu) > 1 the kernel vector is
// nowhere-zero and m = 1.  The asserted divisibilities are checked on the
// spot; a violation (a theorem falsifier) raises StructureViolation.
struct NormDivisibilityReport {
    Int n;
    Int tree_count;
    int m = 0;
    Int norm;
    bool norm_power_divides = false;
    bool is_tree = false;
    // Tree-only observations (meaningful when is_tree).
    bool norm_divides_n = false;
    bool kernel_nowhere_zero = false;
    bool multiplicity_one = false;
};

NormDivisibilityReport check_norm_divisibility(const Graph& g, const AlgebraicNumber& mu);

// Determinant of the Laplacian of a cut-tree with exactly one half-edge
// (always 1).  Errors: WrongHalfEdgeCount.
Rat det_one_cut_tree(const CutTree& t);

// True iff Spec(A_t) and Spec(A_{t-v}) are disjoint for every vertex v,
// tested as gcd(char_poly(t), char_poly(t-v)) constant over the rationals.
bool is_totally_minimal(const Tree& t);

// Characteristic polynomial of the rooted product g∘h without forming the
// product: with char_poly(g) = sum a_i y^i of degree n, returns
// sum a_i * phi_h(x)^i * phi_{h-root}(x)^(n-i).
Polynomial rooted_product_charpoly(const Graph& g, const Graph& h, int root);

// (t rooted-product P_2 at an endpoint, t rooted-product P_4 at a degree-2
// vertex); both verified totally minimal.  Errors: NotTotallyMinimal.
std::pair<Tree, Tree> totally_minimal_products(const Tree& t);

// Checks that x^n * char_poly(subdivision(g))(x) and
// x^m * char_poly(signless_laplacian(g))(x^2) agree after dividing out their
// common power of x (n = |V(g)|, m = |E(g)|).
bool verify_subdivision_identity(const Graph& g);

// Smallest-order pattern realizing multiplicity exactly k: one new link
// vertex joined to k+1 disjoint copies of a minimal piece.  Adjacency case:
// piece is a lambda-minimal tree (no half-edges), attached by vertex 0.
// Laplacian case: piece is a mu-L-minimal 1-cut-tree attached by its
// half-edge vertex, the half-edge becoming the link edge (Laplacian diagonal
// preserved).  The link vertex is index 0 of the result; copy j occupies the
// following |piece| indices in original order.  The multiplicity of value in
// the result is verified to be exactly k.
// Errors: PieceNotMinimal, WrongHalfEdgeCount.
enum class MinKind { Adjacency, Laplacian };

Tree min_order_multiplicity_k(MinKind kind, const AlgebraicNumber& value, int k,
                              const CutTree& piece);

}  // namespace spectree
