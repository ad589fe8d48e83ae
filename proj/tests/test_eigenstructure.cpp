// Eigen-structure layer: exact kernels over Q(theta), nodal sets, the two
// multiplicity formulas, eigenvector-based counting, vertex classification,
// and the Min/Zero/Link decomposition.  Every expected value below is frozen
// from a hand computation noted next to it.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "spectree/canonical.hpp"
#include "spectree/charpoly.hpp"
#include "spectree/eigenstructure.hpp"
#include "spectree/graph.hpp"

using namespace spectree;

namespace {

bool throws_code(Err want, const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == want;
    }
    return false;
}

AlgebraicNumber sqrt2() {
    return AlgebraicNumber(Polynomial::from_ints({-2, 0, 1}), Rat(1), Rat(2));
}

AlgebraicNumber rat(long num, long den = 1) {
    return AlgebraicNumber::from_rational(make_rat(Int(num), Int(den)));
}

}  // namespace

TEST_CASE("kernel of the star at 0: dimension 2, echelon-normalized basis") {
    // eigenspace of A(K_{1,3}) at 0 is {(0,a,b,c) : a+b+c = 0}; one basis
    // vector per free coordinate, each scaled to leading entry 1:
    // (0,1,-1,0) and (0,1,0,-1)
    AcyclicMatrix m = adjacency_matrix(Tree::star(3));
    KernelBasis kb = kernel_basis(m, rat(0));
    REQUIRE(kb.dimension() == 2);
    const auto& v1 = kb.vectors[0];
    const auto& v2 = kb.vectors[1];
    NumberFieldElement zero = NumberFieldElement::zero(kb.field);
    NumberFieldElement one = NumberFieldElement::one(kb.field);
    CHECK(v1[0] == zero);
    CHECK(v1[1] == one);
    CHECK(v1[2] == -one);
    CHECK(v1[3] == zero);
    CHECK(v2[0] == zero);
    CHECK(v2[1] == one);
    CHECK(v2[2] == zero);
    CHECK(v2[3] == -one);
}

TEST_CASE("kernel of P3 at sqrt2 is spanned by (1, sqrt2, 1)") {
    AcyclicMatrix m = adjacency_matrix(Tree::path(3));
    KernelBasis kb = kernel_basis(m, sqrt2());
    REQUIRE(kb.dimension() == 1);
    const auto& v = kb.vectors[0];
    CHECK(v[0] == NumberFieldElement::one(kb.field));
    CHECK(v[1] == NumberFieldElement::theta(kb.field));
    CHECK(v[2] == NumberFieldElement::one(kb.field));
    // non-eigenvalue: empty kernel
    CHECK(kernel_basis(m, rat(5)).dimension() == 0);
}

TEST_CASE("generic eigenvector vanishes exactly on the common zero set") {
    AcyclicMatrix m = adjacency_matrix(Tree::star(3));
    std::vector<NumberFieldElement> x = generic_eigenvector(m, rat(0));
    REQUIRE(x.size() == 4);
    CHECK(x[0].is_zero());      // the center is zero in the whole eigenspace
    CHECK(!x[1].is_zero());
    CHECK(!x[2].is_zero());
    CHECK(!x[3].is_zero());
    CHECK(throws_code(Err::NotAnEigenvalue, [&] { generic_eigenvector(m, rat(7)); }));
}

TEST_CASE("nodal sets of the star at 0") {
    // N = {center}; the center has non-nodal neighbors, so it is boundary;
    // F = whole star, one component
    AcyclicMatrix m = adjacency_matrix(Tree::star(3));
    NodalSets ns = nodal_sets(m, rat(0));
    CHECK(!ns.not_eigenvalue);
    CHECK(ns.N == std::vector<int>{0});
    CHECK(ns.N_interior.empty());
    CHECK(ns.boundary == std::vector<int>{0});
    CHECK(ns.E_interior.empty());
    CHECK(static_cast<int>(ns.F_vertices.size()) == 4);
    CHECK(static_cast<int>(ns.F_edges.size()) == 3);
    CHECK(ns.c == 1);
    CHECK(forest_degree(ns, 0) == 3);

    // multiplicity 2 both ways: 1 + (3-2) and 3 components - 1 boundary
    CHECK(multiplicity_by_degree_formula(m, rat(0)) == 2);
    CHECK(multiplicity_by_component_formula(m, rat(0)) == 2);
    CHECK(multiplicity(m, rat(0)) == 2);
}

TEST_CASE("multiplicity-0 convention: N = V, empty forest, zero formulas") {
    AcyclicMatrix m = adjacency_matrix(Tree::path(3));
    NodalSets ns = nodal_sets(m, rat(5));
    CHECK(ns.not_eigenvalue);
    CHECK(static_cast<int>(ns.N.size()) == 3);
    CHECK(ns.c == 0);
    CHECK(multiplicity_by_degree_formula(m, rat(5)) == 0);
    CHECK(multiplicity_by_component_formula(m, rat(5)) == 0);
}

TEST_CASE("nowhere-zero eigenvector: empty nodal set, formulas give 1") {
    AcyclicMatrix m = adjacency_matrix(Tree::path(2));
    NodalSets ns = nodal_sets(m, rat(1));
    CHECK(ns.N.empty());
    CHECK(ns.boundary.empty());
    CHECK(ns.c == 1);
    CHECK(multiplicity_by_degree_formula(m, rat(1)) == 1);
    CHECK(multiplicity_by_component_formula(m, rat(1)) == 1);
}

TEST_CASE("interior nodal vertices on a disconnected diagonal matrix") {
    // M = diag(1, 2) (a forest with no edges).  At theta = 1 the eigenspace
    // is span{(1,0)}: N = {1}, and vertex 1 has no neighbors, so it is
    // interior.  F drops it entirely: one component, empty boundary.
    AcyclicMatrix m(2, {Rat(1), Rat(2)}, {});
    NodalSets ns = nodal_sets(m, rat(1));
    CHECK(ns.N == std::vector<int>{1});
    CHECK(ns.N_interior == std::vector<int>{1});
    CHECK(ns.boundary.empty());
    CHECK(ns.F_vertices == std::vector<int>{0});
    CHECK(ns.c == 1);
    CHECK(multiplicity_by_degree_formula(m, rat(1)) == 1);
    CHECK(multiplicity_by_component_formula(m, rat(1)) == 1);
}

TEST_CASE("eigenvector zero-pattern count reproduces the multiplicity") {
    // star at 0 with the generic eigenvector: one zero of degree 3,
    // c=1 component: 1 + (3-2) = 2
    AcyclicMatrix m = adjacency_matrix(Tree::star(3));
    FiedlerReport fr = fiedler_multiplicity(m, generic_eigenvector(m, rat(0)));
    CHECK(fr.c == 1);
    REQUIRE(fr.s.count(3) == 1);
    CHECK(fr.s.at(3) == 1);
    CHECK(fr.value == 2);

    // P5 at 0: eigenvector (1,0,-1,0,1), zeros of degree 2 contribute nothing
    AcyclicMatrix p5 = adjacency_matrix(Tree::path(5));
    FiedlerReport fr5 = fiedler_multiplicity(p5, generic_eigenvector(p5, rat(0)));
    CHECK(fr5.value == 1);
    CHECK(fr5.s.at(2) == 2);

    // a non-generic kernel vector of the star with two adjacent zeros
    KernelBasis kb = kernel_basis(m, rat(0));
    FieldPtr F = kb.field;
    std::vector<NumberFieldElement> y = {
        NumberFieldElement::zero(F), NumberFieldElement::one(F),
        -NumberFieldElement::one(F), NumberFieldElement::zero(F)};
    CHECK(throws_code(Err::AdjacentZeros, [&] { fiedler_multiplicity(m, y); }));

    // not an eigenvector at all
    std::vector<NumberFieldElement> bad = {
        NumberFieldElement::one(F), NumberFieldElement::one(F),
        NumberFieldElement::zero(F), NumberFieldElement::zero(F)};
    CHECK(throws_code(Err::NotAnEigenvalue, [&] { fiedler_multiplicity(m, bad); }));
}

TEST_CASE("vertex classification: deletion shifts multiplicity by -1, 0, +1") {
    // star at 0: deleting the center leaves three isolated zeros (2 -> 3),
    // deleting a leaf leaves K_{1,2} (2 -> 1)
    AcyclicMatrix m = adjacency_matrix(Tree::star(3));
    CHECK(classify_vertex(m, rat(0), 0) == VertexClass::ParterWiener);
    CHECK(classify_vertex(m, rat(0), 1) == VertexClass::Downer);

    // P5 at 0 (mult 1): the inner vertex 1 splits off K1 + P3 (0 is a root of
    // both x and x(x^2-2)), multiplicity 2
    AcyclicMatrix p5 = adjacency_matrix(Tree::path(5));
    CHECK(classify_vertex(p5, rat(0), 1) == VertexClass::ParterWiener);
    CHECK(classify_vertex(p5, rat(0), 0) == VertexClass::Downer);

    // diag(1,2) at 1: deleting the non-supporting vertex keeps multiplicity
    AcyclicMatrix d(2, {Rat(1), Rat(2)}, {});
    CHECK(classify_vertex(d, rat(1), 1) == VertexClass::Neutral);
    CHECK(classify_vertex(d, rat(1), 0) == VertexClass::Downer);

    CHECK(throws_code(Err::InvalidVertex, [&] { classify_vertex(d, rat(1), 5); }));
    CHECK(vertex_class_name(VertexClass::ParterWiener) == std::string("ParterWiener"));
    CHECK(vertex_class_name(VertexClass::Downer) == std::string("Downer"));
    CHECK(vertex_class_name(VertexClass::Neutral) == std::string("Neutral"));
}

TEST_CASE("decomposition: links are the nodal boundary, pieces classify") {
    // star at 0: link {0}, three one-vertex Min pieces
    Decomposition d = decompose(adjacency_matrix(Tree::star(3)), rat(0));
    CHECK(d.link_vertices == std::vector<int>{0});
    CHECK(d.min_pieces == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(d.zero_pieces.empty());

    // P3 at sqrt2: no links, the whole path is one Min piece
    Decomposition d3 = decompose(adjacency_matrix(Tree::path(3)), sqrt2());
    CHECK(d3.link_vertices.empty());
    CHECK(d3.min_pieces == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(d3.zero_pieces.empty());

    // diag(1,2) at 1: no links, one Min piece {0} and one Zero piece {1}
    Decomposition dd = decompose(AcyclicMatrix(2, {Rat(1), Rat(2)}, {}), rat(1));
    CHECK(dd.link_vertices.empty());
    CHECK(dd.min_pieces == std::vector<std::vector<int>>{{0}});
    CHECK(dd.zero_pieces == std::vector<std::vector<int>>{{1}});

    CHECK(throws_code(Err::NotAnEigenvalue,
                      [] { decompose(adjacency_matrix(Tree::path(3)), rat(5)); }));
}

TEST_CASE("Laplacian edge-cut decomposition of P4 at 2") {
    // L(P4) eigenvector for 2 is (1,-1,-1,1); only the middle edge joins equal
    // values, so cutting it yields two plain P2 components, both 2-L-minimal
    CutTree p4(Tree::path(4));
    AcyclicMatrix l = laplacian_matrix(p4);
    std::vector<NumberFieldElement> x = generic_eigenvector(l, rat(2));
    std::vector<CutTree> parts = laplacian_decompose(p4, rat(2), x);
    REQUIRE(parts.size() == 2);
    std::string p2_code = canonical_code(CutTree(Tree::path(2)));
    CHECK(canonical_code(parts[0]) == p2_code);
    CHECK(canonical_code(parts[1]) == p2_code);
    CHECK(parts[0].total_half_edges() == 0);

    // an eigenvector with a zero coordinate is rejected: L(P3) at 1 has
    // eigenvector (1,0,-1)
    CutTree p3(Tree::path(3));
    AcyclicMatrix l3 = laplacian_matrix(p3);
    std::vector<NumberFieldElement> z = generic_eigenvector(l3, rat(1));
    CHECK(throws_code(Err::ZeroCoordinate, [&] { laplacian_decompose(p3, rat(1), z); }));

    // a non-eigenvector is rejected
    KernelBasis kb = kernel_basis(l, rat(2));
    std::vector<NumberFieldElement> bad(4, NumberFieldElement::one(kb.field));
    CHECK(throws_code(Err::NotAnEigenvalue,
                      [&] { laplacian_decompose(p4, rat(2), bad); }));
}

TEST_CASE("all multiplicity routes agree on a weighted matrix") {
    // semi-arbitrary rational-weighted path with a repeated pattern chosen so
    // an irrational eigenvalue appears: diag(0, 1/2, 0), weights (1, 1/2)
    AcyclicMatrix m(3, {Rat(0), Rat(1, 2), Rat(0)},
                    {{0, 1, Rat(1)}, {1, 2, Rat(1, 2)}});
    CharPoly cp = char_poly(m);
    for (const auto& [theta, mult] : isolate_real_roots(cp.primitive)) {
        CHECK(multiplicity(m, theta) == mult);
        CHECK(kernel_basis(m, theta).dimension() == mult);
        CHECK(multiplicity_by_degree_formula(m, theta) == mult);
        CHECK(multiplicity_by_component_formula(m, theta) == mult);
    }
}
