// Minimality layer: nowhere-zero eigenvector tests, exhaustive enumeration,
// the three growth constructions, norm-divisibility and determinant facts,
// rooted-product/subdivision identities, and smallest-order multiplicity
// patterns.  Expected values are frozen from hand computations noted inline.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <utility>
#include <vector>

#include "spectree/canonical.hpp"
#include "spectree/charpoly.hpp"
#include "spectree/graph.hpp"
#include "spectree/minimality.hpp"

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

AlgebraicNumber rat(long num, long den = 1) {
    return AlgebraicNumber::from_rational(make_rat(Int(num), Int(den)));
}

AlgebraicNumber sqrt2() {
    return AlgebraicNumber(Polynomial::from_ints({-2, 0, 1}), Rat(1), Rat(2));
}

// roots of x^2 - 3x + 1, i.e. (3 -+ sqrt5)/2 ~ 0.382 and 2.618
AlgebraicNumber half_3_minus_sqrt5() {
    return AlgebraicNumber(Polynomial::from_ints({1, -3, 1}), Rat(0), Rat(1));
}
AlgebraicNumber half_3_plus_sqrt5() {
    return AlgebraicNumber(Polynomial::from_ints({1, -3, 1}), Rat(2), Rat(3));
}

// golden ratio (1+sqrt5)/2, root of x^2 - x - 1 in (1, 2]
AlgebraicNumber golden() {
    return AlgebraicNumber(Polynomial::from_ints({-1, -1, 1}), Rat(1), Rat(2));
}

CutTree p2_with_half_edge() { return CutTree(Tree::path(2), {1, 0}); }

}  // namespace

TEST_CASE("adjacency minimality on frozen small trees") {
    CHECK(is_lambda_minimal(Tree::single(), rat(0)));
    CHECK(is_lambda_minimal(Tree::path(2), rat(1)));
    CHECK(is_lambda_minimal(Tree::path(3), sqrt2()));
    // P3 at 0: eigenvector (1,0,-1) has a zero coordinate
    CHECK(!is_lambda_minimal(Tree::path(3), rat(0)));
    // 1 is not an eigenvalue of P4 (x^4-3x^2+1 at 1 is -1)
    CHECK(!is_lambda_minimal(Tree::path(4), rat(1)));
    // multiplicity 2 at 0 on the star
    CHECK(!is_lambda_minimal(Tree::star(3), rat(0)));
}

TEST_CASE("Laplacian minimality needs nowhere-zero AND edge-distinct values") {
    CHECK(is_L_minimal(CutTree(Tree::path(2)), rat(2)));
    // 1-cut-tree P2 + half-edge: spectrum is x^2-3x+1, both roots minimal
    CHECK(is_L_minimal(p2_with_half_edge(), half_3_minus_sqrt5()));
    CHECK(is_L_minimal(p2_with_half_edge(), half_3_plus_sqrt5()));
    // P3 at 1: eigenvector (1,0,-1) has a zero
    CHECK(!is_L_minimal(CutTree(Tree::path(3)), rat(1)));
    // P3 at 3: eigenvector (1,-2,1), nowhere zero and edge-distinct
    CHECK(is_L_minimal(CutTree(Tree::path(3)), rat(3)));
    // P4 at 2: (1,-1,-1,1) is nowhere zero but constant across the middle edge
    CHECK(!is_L_minimal(CutTree(Tree::path(4)), rat(2)));
}

TEST_CASE("enumerating minimal trees: frozen class counts at small bounds") {
    // at 0 the leaf equation forces the leaf's neighbor to vanish, so the
    // one-vertex tree is the only 0-minimal tree at any bound
    std::vector<Tree> at0 = enumerate_lambda_minimal(rat(0), 10);
    REQUIRE(at0.size() == 1);
    CHECK(at0[0].n == 1);

    // at 1 up to order 6: the edge and the order-6 double star
    std::vector<Tree> at1 = enumerate_lambda_minimal(rat(1), 6);
    REQUIRE(at1.size() == 2);
    CHECK(at1[0].n == 2);
    CHECK(at1[1].n == 6);
    Tree double_star(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
    CHECK(isomorphic(at1[1], double_star));

    // Laplacian value 2 up to order 4: just the edge
    std::vector<CutTree> l2 = enumerate_L_minimal(rat(2), 0, 4);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].n() == 2);
}

TEST_CASE("pendant-identification growth produces larger minimal trees") {
    // k = 2 on the edge at 1: (2k-1)(n-1) + 1 + 2(k-1) = 6, the double star
    Tree g2 = grow_minimal(Tree::path(2), 0, 2, rat(1));
    CHECK(g2.n == 6);
    CHECK(isomorphic(g2, Tree(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}})));
    CHECK(is_lambda_minimal(g2, rat(1)));

    // k = 3 on the edge: 5*1 + 1 + 4 = 10
    Tree g3 = grow_minimal(Tree::path(2), 0, 3, rat(1));
    CHECK(g3.n == 10);
    CHECK(is_lambda_minimal(g3, rat(1)));

    // P3 at sqrt2, k = 2: 3*2 + 1 + 2 = 9
    Tree g9 = grow_minimal(Tree::path(3), 0, 2, sqrt2());
    CHECK(g9.n == 9);
    CHECK(is_lambda_minimal(g9, sqrt2()));

    CHECK(throws_code(Err::LambdaZero,
                      [] { grow_minimal(Tree::path(2), 0, 2, rat(0)); }));
    CHECK(throws_code(Err::InvalidVertex,
                      [] { grow_minimal(Tree::path(2), 9, 2, rat(1)); }));
    CHECK(throws_code(Err::NotPendant,
                      [] { grow_minimal(Tree::path(3), 1, 2, sqrt2()); }));
    CHECK(throws_code(Err::NotMinimal,
                      [] { grow_minimal(Tree::path(3), 0, 2, rat(1)); }));
}

TEST_CASE("four-copy growth with a loaded center") {
    // edge at 1: p = 1^2 + 2 = 3 pendant leaves, order 4*1 + 3 + 3 = 10
    Tree a = grow_minimal_alt(Tree::path(2), 0, rat(1));
    CHECK(a.n == 10);
    CHECK(is_lambda_minimal(a, rat(1)));

    // P3 at sqrt2: p = 4, order 4*2 + 3 + 4 = 15
    Tree b = grow_minimal_alt(Tree::path(3), 0, sqrt2());
    CHECK(b.n == 15);
    CHECK(is_lambda_minimal(b, sqrt2()));

    // lambda^2 + 2 must be a rational integer
    CHECK(throws_code(Err::NonIntegralPendantCount,
                      [] { grow_minimal_alt(Tree::path(2), 0, golden()); }));
    CHECK(throws_code(Err::NonIntegralPendantCount,
                      [] { grow_minimal_alt(Tree::path(2), 0, rat(1, 2)); }));
    CHECK(throws_code(Err::InvalidVertex,
                      [] { grow_minimal_alt(Tree::path(2), -1, rat(1)); }));
    CHECK(throws_code(Err::NotPendant,
                      [] { grow_minimal_alt(Tree::path(3), 1, sqrt2()); }));
    CHECK(throws_code(Err::NotMinimal,
                      [] { grow_minimal_alt(Tree::path(3), 0, rat(0)); }));
}

TEST_CASE("Laplacian growth for an integer eigenvalue s > 1") {
    // edge at s = 2: order 2*3*1 + 3 + 1 = 10
    Tree g = grow_L_minimal(Tree::path(2), 2);
    CHECK(g.n == 10);
    CHECK(is_L_minimal(CutTree(g), rat(2)));
    CHECK(multiplicity(laplacian_matrix(CutTree(g)), rat(2)) == 1);

    CHECK(throws_code(Err::SOutOfRange, [] { grow_L_minimal(Tree::path(2), 1); }));
    CHECK(throws_code(Err::SOutOfRange, [] { grow_L_minimal(Tree::path(2), 0); }));
    CHECK(throws_code(Err::NotPendant, [] { grow_L_minimal(Tree::single(), 2); }));
    // 5 is not a Laplacian eigenvalue of the edge (spectrum {0, 2})
    CHECK(throws_code(Err::NotAnEigenvalue, [] { grow_L_minimal(Tree::path(2), 5); }));
}

TEST_CASE("norm divisibility report on trees and a cycle") {
    // star K_{1,3}, Laplacian spectrum {0, 1, 1, 4}
    Graph star = Tree::star(3).as_graph();
    NormDivisibilityReport r4 = check_norm_divisibility(star, rat(4));
    CHECK(r4.is_tree);
    CHECK(r4.n == 4);
    CHECK(r4.tree_count == 1);
    CHECK(r4.m == 1);
    CHECK(r4.norm == 4);
    CHECK(r4.norm_divides_n);
    CHECK(r4.norm_power_divides);
    CHECK(r4.kernel_nowhere_zero);   // eigenvector (3,-1,-1,-1)
    CHECK(r4.multiplicity_one);

    NormDivisibilityReport r1 = check_norm_divisibility(star, rat(1));
    CHECK(r1.m == 2);
    CHECK(r1.norm == 1);
    CHECK(!r1.multiplicity_one);
    CHECK(!r1.kernel_nowhere_zero);  // every 1-eigenvector vanishes at the hub

    // C4, Laplacian spectrum {0, 2, 2, 4}, 4 spanning trees: 2^2 | 4*4
    NormDivisibilityReport rc = check_norm_divisibility(Graph::cycle(4), rat(2));
    CHECK(!rc.is_tree);
    CHECK(rc.m == 2);
    CHECK(rc.norm == 2);
    CHECK(rc.tree_count == 4);
    CHECK(rc.norm_power_divides);

    Graph p3 = Tree::path(3).as_graph();
    CHECK(throws_code(Err::ZeroEigenvalue, [&] { check_norm_divisibility(p3, rat(0)); }));
    CHECK(throws_code(Err::NotAnEigenvalue, [&] { check_norm_divisibility(p3, rat(7)); }));
}

TEST_CASE("one half-edge forces a unit Laplacian determinant") {
    CHECK(det_one_cut_tree(p2_with_half_edge()) == Rat(1));
    // P3 with the half-edge at the middle: det [[1,-1,0],[-1,3,-1],[0,-1,1]]
    CHECK(det_one_cut_tree(CutTree(Tree::path(3), {0, 1, 0})) == Rat(1));
    CHECK(det_one_cut_tree(CutTree(Tree::star(4), {0, 0, 1, 0, 0})) == Rat(1));
    CHECK(throws_code(Err::WrongHalfEdgeCount,
                      [] { det_one_cut_tree(CutTree(Tree::path(2))); }));
    CHECK(throws_code(Err::WrongHalfEdgeCount,
                      [] { det_one_cut_tree(CutTree(Tree::path(2), {1, 1})); }));
}

TEST_CASE("totally minimal trees: vertex-deleted spectra stay disjoint") {
    CHECK(is_totally_minimal(Tree::single()));
    CHECK(is_totally_minimal(Tree::path(2)));
    CHECK(is_totally_minimal(Tree::path(4)));
    // P3 fails: deleting the center leaves x^2, sharing the root 0 with x^3-2x
    CHECK(!is_totally_minimal(Tree::path(3)));
    CHECK(!is_totally_minimal(Tree::star(3)));
}

TEST_CASE("rooted product characteristic polynomial without the product") {
    // P2 rooted with P2 is P4: (y^2-1) specialized gives
    // (x^2-1)^2 - x^2 = x^4 - 3x^2 + 1
    Polynomial direct = Polynomial::from_ints({1, 0, -3, 0, 1});
    CHECK(rooted_product_charpoly(Tree::path(2).as_graph(),
                                  Tree::path(2).as_graph(), 0) == direct);

    // route agreement on a cycle times a path, both roots of the path
    Graph c3 = Graph::cycle(3);
    Graph p2 = Tree::path(2).as_graph();
    for (int root : {0, 1}) {
        Graph prod = rooted_product(c3, p2, root);
        Polynomial via_matrix = char_poly_dense(adjacency_dense(prod)).primitive;
        CHECK(rooted_product_charpoly(c3, p2, root) == via_matrix);
    }

    CHECK(throws_code(Err::InvalidVertex,
                      [&] { rooted_product_charpoly(c3, p2, 5); }));
    Graph disconnected(2, {});
    CHECK(throws_code(Err::NotATree,
                      [&] { rooted_product_charpoly(c3, disconnected, 0); }));
}

TEST_CASE("products of a totally minimal tree are totally minimal") {
    auto [with_p2, with_p4] = totally_minimal_products(Tree::path(4));
    CHECK(with_p2.n == 8);
    CHECK(with_p4.n == 16);
    CHECK(is_totally_minimal(with_p2));
    CHECK(is_totally_minimal(with_p4));
    CHECK(throws_code(Err::NotTotallyMinimal,
                      [] { totally_minimal_products(Tree::path(3)); }));
}

TEST_CASE("subdivision identity holds on trees and small cyclic graphs") {
    CHECK(verify_subdivision_identity(Tree::path(4).as_graph()));
    CHECK(verify_subdivision_identity(Tree::star(3).as_graph()));
    CHECK(verify_subdivision_identity(Graph::complete(3)));
    CHECK(verify_subdivision_identity(Graph::cycle(4)));
    CHECK(verify_subdivision_identity(Graph::complete(4)));
}

TEST_CASE("smallest-order pattern with multiplicity exactly k") {
    // adjacency at 1, k = 2, piece P2: hub + 3 edges, 7 vertices, mult 2
    Tree spider = min_order_multiplicity_k(MinKind::Adjacency, rat(1), 2,
                                           CutTree(Tree::path(2)));
    CHECK(spider.n == 7);
    CHECK(multiplicity(adjacency_matrix(spider), rat(1)) == 2);

    // Laplacian at (3+sqrt5)/2, k = 2, piece = P2 + half-edge: the half-edges
    // become the three link edges, 7 vertices, mult 2
    Tree lap = min_order_multiplicity_k(MinKind::Laplacian, half_3_plus_sqrt5(),
                                        2, p2_with_half_edge());
    CHECK(lap.n == 7);
    CHECK(multiplicity(laplacian_matrix(CutTree(lap)), half_3_plus_sqrt5()) == 2);

    // piece must actually be minimal for the value
    CHECK(throws_code(Err::PieceNotMinimal, [] {
        min_order_multiplicity_k(MinKind::Adjacency, rat(0), 2, CutTree(Tree::path(3)));
    }));
    // adjacency pieces carry no half-edges; Laplacian pieces exactly one
    CHECK(throws_code(Err::WrongHalfEdgeCount, [] {
        min_order_multiplicity_k(MinKind::Adjacency, rat(1), 2, p2_with_half_edge());
    }));
    CHECK(throws_code(Err::WrongHalfEdgeCount, [] {
        min_order_multiplicity_k(MinKind::Laplacian, rat(2), 2, CutTree(Tree::path(2)));
    }));
}
