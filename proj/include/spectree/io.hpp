// Serialization and parsing: JSON forms for all domain types, DOT export,
// the ASCII minimal-polynomial syntax used on the command line, and named
// graph shorthands (P5, K1,3, K4, C4).
#pragma once

#include <string>
#include <vector>

#include "spectree/algebraic.hpp"
#include "spectree/eigenstructure.hpp"
#include "spectree/graph.hpp"
#include "spectree/minimality.hpp"

namespace spectree {

// --- JSON (stable, machine-readable; rationals always as "num/den") --------

std::string rat_json(const Rat& q);              // "p/q"
Rat parse_rat(const std::string& s);             // accepts "p" and "p/q"

std::string polynomial_json(const Polynomial& p);       // {"coeffs":[...]}
Polynomial parse_polynomial_json(const std::string& s);

std::string algebraic_json(const AlgebraicNumber& a);
AlgebraicNumber parse_algebraic_json(const std::string& s);

std::string nf_element_json(const NumberFieldElement& a);  // {"coeffs":["p/q",...]}

std::string tree_json(const Tree& t);            // {"n":..,"edges":[[u,v],..]}
Tree parse_tree_json(const std::string& s);

std::string cut_tree_json(const CutTree& t);     // adds {"half_edges":{"v":count}}
CutTree parse_cut_tree_json(const std::string& s);

std::string acyclic_matrix_json(const AcyclicMatrix& m);
AcyclicMatrix parse_acyclic_matrix_json(const std::string& s);

// One enumeration record: {"n":..,"canonical":"..","tree":{..},
// "eigenvector":[..],"order_index":..}.  For cut-trees the "tree" object is
// the cut-tree form.  The eigenvector is the kernel vector of the minimal
// object (coefficient vectors over Q(value)).
std::string enumeration_record_json(int order_index, const CutTree& t,
                                    const std::vector<NumberFieldElement>& eigenvector);

// Full analysis report described by the structure types: nodal sets as
// sorted vertex lists, F as an edge list, decomposition as vertex-set lists,
// and the per-vertex classification.
std::string structure_report_json(const AcyclicMatrix& m, const AlgebraicNumber& theta);

// --- DOT --------------------------------------------------------------------

// Half-edges are rendered as dangling edges to point-shaped anonymous nodes.
std::string cut_tree_dot(const CutTree& t);

// Structure drawing: interior nodal vertices gray, boundary vertices red,
// Min pieces as encircled clusters.
std::string structure_dot(const AcyclicMatrix& m, const AlgebraicNumber& theta);

// --- Command-line eigenvalue and graph syntax -------------------------------

// Accepts a minimal polynomial in x ("x^2-3x+1", "x-2", "x") or a bare
// rational ("5", "3/2").  When an interval (lo, hi] is given it selects the
// root inside it; otherwise the largest real root is used.
AlgebraicNumber parse_eigenvalue(const std::string& expr);
AlgebraicNumber parse_eigenvalue(const std::string& expr, const Rat& lo, const Rat& hi);

// Polynomial in x with integer coefficients, e.g. "x^3-2x+1".
Polynomial parse_poly_expr(const std::string& expr);

// Named graphs: "P5" (path), "K1,3" (star), "K4" (complete), "C4" (cycle).
Graph parse_named_graph(const std::string& name);

}  // namespace spectree
