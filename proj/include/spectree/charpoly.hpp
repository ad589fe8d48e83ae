// Characteristic polynomials det(xI - M), exactly.  Two independent routes:
// a pendant-vertex recursion for matrices with forest support, and a
// fraction-free (Bareiss) determinant over Z[x] for dense inputs.  The two
// are cross-checked against each other in the test suite and must never be
// merged into one code path.
#pragma once

#include "spectree/algebraic.hpp"
#include "spectree/graph.hpp"
#include "spectree/polynomial.hpp"

namespace spectree {

// det(xI - M) is monic with rational coefficients; it is reported as a
// canonical primitive integer polynomial, from which the monic rational form
// is monic() == primitive * (1 / lc).
struct CharPoly {
  Polynomial primitive;

  int degree() const { return primitive.degree(); }
  Rat scale() const { return make_rat(Int(1), primitive.lc()); }
  RatPoly monic() const {
    return RatPoly::from_int_poly(primitive) * scale();
  }
};

// Pendant-vertex recursion over the forest support (O(n^2) polynomial ops).
CharPoly char_poly(const AcyclicMatrix& m);

// Fraction-free Bareiss determinant of xI - M over the polynomial ring.
CharPoly char_poly_dense(const DenseMatrix& m);

// Largest k with minpoly(theta)^k dividing the characteristic polynomial;
// equals the eigenvalue multiplicity for symmetric M.
int multiplicity(const CharPoly& cp, const AlgebraicNumber& theta);
int multiplicity(const AcyclicMatrix& m, const AlgebraicNumber& theta);

// Determinant of a dense rational matrix (Bareiss on a cleared integer
// matrix), used for spanning-tree counts and cut-tree determinants.
Rat determinant(const DenseMatrix& m);

// Number of spanning trees (Matrix-Tree: any cofactor of the Laplacian).
Int spanning_tree_count(const Graph& g);

}  // namespace spectree
