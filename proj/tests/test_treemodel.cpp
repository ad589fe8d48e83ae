// Graph substrate, canonical codes, exhaustive enumeration, and the two
// characteristic-polynomial routes.  Oracles here are independent of the
// implementations under test: unlabeled tree counts come from decoding every
// Pruefer sequence, and characteristic polynomials are recomputed with the
// Leverrier-Faddeev trace recursion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spectree/canonical.hpp"
#include "spectree/charpoly.hpp"
#include "spectree/enumerate.hpp"
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

// Decode a Pruefer sequence into the labeled tree it encodes.  This is a
// textbook bijection between sequences {0..n-1}^(n-2) and labeled trees on n
// vertices, independent of the enumeration code under test.
Tree pruefer_decode(int n, const std::vector<int>& seq) {
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<size_t>(s)];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--deg[static_cast<size_t>(s)] == 1) leaves.insert(s);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Tree(n, edges);
}

// Trace-method characteristic polynomial over exact rationals: power sums
// p_k = tr(M^k) feed Newton's identities for the elementary symmetric
// functions e_k of the eigenvalues, and det(xI - M) = sum (-1)^k e_k x^(n-k).
// No elimination at all, structurally unrelated to both library routes
// (pendant recursion and Bareiss).
RatPoly charpoly_via_leverrier(const DenseMatrix& m) {
    const size_t n = static_cast<size_t>(m.n);
    std::vector<Rat> p(n + 1);
    std::vector<std::vector<Rat>> cur = m.a;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<std::vector<Rat>> next(n, std::vector<Rat>(n));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    Rat s(0);
                    for (size_t l = 0; l < n; ++l) s += cur[i][l] * m.a[l][j];
                    next[i][j] = s;
                }
            cur = next;
        }
        for (size_t i = 0; i < n; ++i) p[k] += cur[i][i];
    }
    std::vector<Rat> e(n + 1);
    e[0] = Rat(1);
    for (size_t k = 1; k <= n; ++k) {
        Rat s(0);
        for (size_t i = 1; i <= k; ++i) {
            Rat term = e[k - i] * p[i];
            if (i % 2 == 0) term = -term;
            s += term;
        }
        e[k] = s / Rat(static_cast<long>(k));
    }
    std::vector<Rat> coeffs(n + 1);
    for (size_t k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 1) ? Rat(-e[k]) : e[k];
    return RatPoly(coeffs);
}

DenseMatrix dense_from(const AcyclicMatrix& m) { return dense_of(m); }

}  // namespace

TEST_CASE("graph validation and basic predicates") {
    CHECK(throws_code(Err::EmptyGraph, [] { Graph(0, {}); }));
    CHECK(throws_code(Err::NotAnEdge, [] { Graph(2, {{0, 0}}); }));
    CHECK(throws_code(Err::NotAnEdge, [] { Graph(2, {{0, 1}, {1, 0}}); }));
    CHECK(throws_code(Err::InvalidVertex, [] { Graph(2, {{0, 2}}); }));

    Graph p4 = Graph::path(4);
    CHECK(p4.is_tree());
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    Graph c4 = Graph::cycle(4);
    CHECK(c4.is_connected());
    CHECK(!c4.is_forest());
    Graph k4 = Graph::complete(4);
    CHECK(static_cast<int>(k4.edges.size()) == 6);
    CHECK(throws_code(Err::NotATree, [&] { tree_from_graph(c4); }));

    Tree t = tree_from_graph(p4);
    CHECK(t.n == 4);
    CHECK(throws_code(Err::NotATree, [] { Tree(3, {{0, 1}}); }));
    CHECK(throws_code(Err::NotATree, [] { Tree(3, {{0, 1}, {1, 2}, {0, 2}}); }));

    CHECK(Tree::single().n == 1);
    CHECK(Tree::star(4).n == 5);
    CHECK(Tree::star(4).degree(0) == 4);
}

TEST_CASE("cut-trees carry per-vertex half-edge counts") {
    Tree p3 = Tree::path(3);
    CutTree plain(p3);
    CHECK(plain.total_half_edges() == 0);
    CutTree one(p3, {0, 1, 0});
    CHECK(one.total_half_edges() == 1);
    CHECK(throws_code(Err::WrongHalfEdgeCount, [&] { CutTree(p3, {1, 0}); }));
    CHECK(throws_code(Err::WrongHalfEdgeCount, [&] { CutTree(p3, {1, -1, 0}); }));
}

TEST_CASE("matrix builders: adjacency and Laplacian") {
    Tree p3 = Tree::path(3);
    AcyclicMatrix a = adjacency_matrix(p3);
    CHECK(a.n == 3);
    CHECK(a.entry(0, 1) == Rat(1));
    CHECK(a.entry(0, 2) == Rat(0));
    CHECK(a.entry(1, 1) == Rat(0));
    CHECK(a.all_integer());

    AcyclicMatrix l = laplacian_matrix(p3);
    CHECK(l.entry(0, 0) == Rat(1));
    CHECK(l.entry(1, 1) == Rat(2));
    CHECK(l.entry(0, 1) == Rat(-1));

    // half-edges raise only the diagonal
    AcyclicMatrix lh = laplacian_matrix(CutTree(p3, {0, 1, 0}));
    CHECK(lh.entry(1, 1) == Rat(3));
    CHECK(lh.entry(0, 0) == Rat(1));

    DenseMatrix q = signless_laplacian(Graph::cycle(3));
    CHECK(q.at(0, 0) == Rat(2));
    CHECK(q.at(0, 1) == Rat(1));

    CHECK(throws_code(Err::NotAnEdge, [] {
        AcyclicMatrix(2, {Rat(0), Rat(0)}, {{0, 1, Rat(0)}});
    }));
    CHECK(throws_code(Err::NotATree, [] {
        AcyclicMatrix(3, {Rat(0), Rat(0), Rat(0)},
                      {{0, 1, Rat(1)}, {1, 2, Rat(1)}, {0, 2, Rat(1)}});
    }));
}

TEST_CASE("surgery: vertex deletion, half-edge bookkeeping, edge cuts") {
    Tree p5 = Tree::path(5);
    std::vector<Tree> parts = delete_vertex(p5, 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].n == 2);
    CHECK(parts[1].n == 2);

    // deleting with half-edges: neighbors gain one half-edge each
    std::vector<CutTree> cparts = delete_vertex_with_halfedges(CutTree(p5), 2);
    REQUIRE(cparts.size() == 2);
    CHECK(cparts[0].total_half_edges() == 1);
    CHECK(cparts[0].half_edges[1] == 1);  // old vertex 1, neighbor of the cut
    CHECK(cparts[1].half_edges[0] == 1);  // old vertex 3

    auto [left, right] = cut_edge(CutTree(p5), 1, 2);
    CHECK(left.n() == 2);
    CHECK(right.n() == 3);
    CHECK(left.half_edges[1] == 1);
    CHECK(right.half_edges[0] == 1);
    CHECK(throws_code(Err::NotAnEdge, [&] { cut_edge(CutTree(p5), 0, 4); }));

    AcyclicMatrix m = laplacian_matrix(p5);
    AcyclicMatrix sub = delete_vertex(m, 0);
    CHECK(sub.n == 4);
    CHECK(sub.entry(0, 0) == Rat(2));  // old vertex 1 keeps its diagonal
}

TEST_CASE("canonical codes are isomorphism invariants") {
    // a fixed 9-vertex tree, relabeled 100 times
    Tree base(9, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}, {0, 7}, {7, 8}});
    std::string code = canonical_code(base);
    std::mt19937_64 rng(99);
    std::vector<int> perm(9);
    for (int i = 0; i < 9; ++i) perm[static_cast<size_t>(i)] = i;
    for (int rep = 0; rep < 100; ++rep) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : base.edges)
            edges.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
        Tree relabeled(9, edges);
        CHECK(canonical_code(relabeled) == code);
        CHECK(isomorphic(base, relabeled));
    }
    CHECK(canonical_code(Tree::path(7)) != canonical_code(Tree::star(6)));
    CHECK(!isomorphic(Tree::path(4), Tree::star(3)));

    // marked codes separate orbit-inequivalent vertices of P4 and identify
    // automorphic ones
    Tree p4 = Tree::path(4);
    CHECK(canonical_code_marked(p4, 0) == canonical_code_marked(p4, 3));
    CHECK(canonical_code_marked(p4, 1) == canonical_code_marked(p4, 2));
    CHECK(canonical_code_marked(p4, 0) != canonical_code_marked(p4, 1));

    // half-edge decoration distinguishes otherwise equal trees
    CutTree bare(p4);
    CutTree decorated(p4, {1, 0, 0, 0});
    CutTree decorated_other_end(p4, {0, 0, 0, 1});
    CHECK(canonical_code(bare) != canonical_code(decorated));
    CHECK(canonical_code(decorated) == canonical_code(decorated_other_end));
    CHECK(isomorphic(decorated, decorated_other_end));
    CHECK(!isomorphic(bare, decorated));
    CHECK(canonical_code(CutTree(p4, {0, 1, 0, 0})) != canonical_code(decorated));

    CHECK(tree_centroids(Tree::path(4)).size() == 2);
    CHECK(tree_centroids(Tree::path(5)).size() == 1);
    CHECK(tree_centroids(Tree::star(5)) == std::vector<int>{0});
}

TEST_CASE("tree enumeration counts match the Pruefer-decode oracle") {
    // count unlabeled classes independently: decode every Pruefer sequence,
    // bucket by canonical code
    std::vector<int> class_counts{1, 1, 1};  // n = 1, 2, 3
    for (int n = 4; n <= 8; ++n) {
        std::set<std::string> codes;
        std::vector<int> seq(static_cast<size_t>(n - 2));
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n - 2) {
                codes.insert(canonical_code(pruefer_decode(n, seq)));
                return;
            }
            for (int v = 0; v < n; ++v) {
                seq[static_cast<size_t>(pos)] = v;
                rec(pos + 1);
            }
        };
        rec(0);
        class_counts.push_back(static_cast<int>(codes.size()));
    }
    CHECK(class_counts == std::vector<int>{1, 1, 1, 2, 3, 6, 11, 23});

    std::vector<Tree> all = enumerate_trees(8);
    std::map<int, int> per_order;
    std::set<std::string> all_codes;
    for (const Tree& t : all) {
        ++per_order[t.n];
        CHECK(all_codes.insert(canonical_code(t)).second);  // no duplicates
    }
    for (int n = 1; n <= 8; ++n)
        CHECK(per_order[n] == class_counts[static_cast<size_t>(n - 1)]);

    // deterministic order: by vertex count, then canonical code
    for (size_t i = 0; i + 1 < all.size(); ++i) {
        CHECK(all[i].n <= all[i + 1].n);
        if (all[i].n == all[i + 1].n)
            CHECK(canonical_code(all[i]) < canonical_code(all[i + 1]));
    }
}

TEST_CASE("cut-tree enumeration: distribution of half-edges over classes") {
    // hand count of 2-half-edge placements up to automorphism:
    //   K1: {2} -> 1 class
    //   P2: {2,0}, {1,1} -> 2 classes
    //   P3 (flip symmetry): {2,0,0}, {0,2,0}, {1,1,0}, {1,0,1} -> 4 classes
    std::vector<CutTree> cts = enumerate_cut_trees(3, 2);
    std::map<int, int> per_order;
    std::set<std::string> codes;
    for (const CutTree& t : cts) {
        ++per_order[t.n()];
        CHECK(t.total_half_edges() == 2);
        CHECK(codes.insert(canonical_code(t)).second);
    }
    CHECK(per_order[1] == 1);
    CHECK(per_order[2] == 2);
    CHECK(per_order[3] == 4);

    // k = 0 reduces to plain trees
    CHECK(enumerate_cut_trees(6, 0).size() == enumerate_trees(6).size());
    CHECK(throws_code(Err::WrongHalfEdgeCount, [] { enumerate_cut_trees(3, -1); }));
    CHECK(throws_code(Err::EmptyGraph, [] { enumerate_trees(0); }));
}

TEST_CASE("leverrier oracle sanity: hand-checked 2x2") {
    // M = [[1,2],[2,3]]: char = x^2 - 4x - 1
    DenseMatrix m = DenseMatrix::zero(2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = m.at(1, 0) = Rat(2);
    m.at(1, 1) = Rat(3);
    RatPoly cp = charpoly_via_leverrier(m);
    REQUIRE(cp.degree() == 2);
    CHECK(cp.coeff(2) == Rat(1));
    CHECK(cp.coeff(1) == Rat(-4));
    CHECK(cp.coeff(0) == Rat(-1));
}

TEST_CASE("characteristic polynomial: both routes agree with the trace oracle") {
    // all trees up to 7 vertices, adjacency and Laplacian
    for (const Tree& t : enumerate_trees(7)) {
        for (bool lap : {false, true}) {
            AcyclicMatrix m = lap ? laplacian_matrix(t) : adjacency_matrix(t);
            RatPoly pendant = char_poly(m).monic();
            RatPoly bareiss = char_poly_dense(dense_from(m)).monic();
            RatPoly oracle = charpoly_via_leverrier(dense_from(m));
            CHECK(pendant == bareiss);
            CHECK(pendant == oracle);
        }
    }
    // 30 pseudorandom rational-weighted acyclic matrices
    std::mt19937_64 rng(0xABCD);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3), pick(0, 1 << 20);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 2 + static_cast<int>(pick(rng) % 6);
        std::vector<Rat> diag(static_cast<size_t>(n));
        for (Rat& d : diag) d = make_rat(Int(num(rng)), Int(den(rng)));
        std::vector<AcyclicMatrix::WEdge> edges;
        for (int v = 1; v < n; ++v) {
            if (pick(rng) % 4 == 0) continue;  // allow forests
            Rat w(0);
            while (w == 0) w = make_rat(Int(num(rng)), Int(den(rng)));
            edges.push_back({static_cast<int>(pick(rng) % v), v, w});
        }
        AcyclicMatrix m(n, diag, edges);
        RatPoly pendant = char_poly(m).monic();
        CHECK(pendant == char_poly_dense(dense_from(m)).monic());
        CHECK(pendant == charpoly_via_leverrier(dense_from(m)));
    }
}

TEST_CASE("frozen characteristic polynomials") {
    CHECK(char_poly(adjacency_matrix(Tree::path(2))).primitive ==
          Polynomial::from_ints({-1, 0, 1}));
    CHECK(char_poly(adjacency_matrix(Tree::path(4))).primitive ==
          Polynomial::from_ints({1, 0, -3, 0, 1}));
    CHECK(char_poly(laplacian_matrix(Tree::path(2))).primitive ==
          Polynomial::from_ints({0, -2, 1}));
    // L(P2 with one half-edge): diag (2,1), det(xI-L) = x^2-3x+1
    CHECK(char_poly(laplacian_matrix(CutTree(Tree::path(2), {1, 0}))).primitive ==
          Polynomial::from_ints({1, -3, 1}));
    // star K_{1,4}: x^5 - 4x^3 = x^3 (x^2-4)
    CHECK(char_poly(adjacency_matrix(Tree::star(4))).primitive ==
          Polynomial::from_ints({0, 0, 0, -4, 0, 1}));
}

TEST_CASE("multiplicity of an eigenvalue in the characteristic polynomial") {
    AcyclicMatrix star = adjacency_matrix(Tree::star(4));
    CHECK(multiplicity(star, AlgebraicNumber()) == 3);
    CHECK(multiplicity(star, AlgebraicNumber::from_rational(Rat(2))) == 1);
    CHECK(multiplicity(star, AlgebraicNumber::from_rational(Rat(1))) == 0);
    AlgebraicNumber r2(Polynomial::from_ints({-2, 0, 1}), Rat(1), Rat(2));
    CHECK(multiplicity(adjacency_matrix(Tree::path(3)), r2) == 1);
}

TEST_CASE("determinants and spanning trees") {
    DenseMatrix m = DenseMatrix::zero(2);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = m.at(1, 0) = Rat(1);
    m.at(1, 1) = Rat(2);
    CHECK(determinant(m) == Rat(0));  // 1/2*2 - 1 = 0
    m.at(1, 1) = Rat(4);
    CHECK(determinant(m) == Rat(1));

    CHECK(spanning_tree_count(Graph::complete(4)) == 16);  // Cayley 4^2
    CHECK(spanning_tree_count(Graph::complete(5)) == 125);
    CHECK(spanning_tree_count(Graph::cycle(5)) == 5);
    CHECK(spanning_tree_count(Graph::path(4)) == 1);
}

TEST_CASE("rooted products and subdivisions as graphs") {
    Graph p3 = Graph::path(3), p4 = Graph::path(4);
    Graph rp = rooted_product(p3, p4, 1);
    CHECK(rp.n == 12);
    CHECK(static_cast<int>(rp.edges.size()) == 11);
    CHECK(rp.is_tree());
    CHECK(throws_code(Err::InvalidVertex, [&] { rooted_product(p3, p4, 7); }));

    Tree tp = rooted_product(Tree::path(3), Tree::path(4), 1);
    CHECK(canonical_code(tp) == canonical_code(tree_from_graph(rp)));

    Graph s = subdivision(Graph::cycle(3));
    CHECK(s.n == 6);
    CHECK(static_cast<int>(s.edges.size()) == 6);
    CHECK(s.is_connected());
    CHECK(!s.is_forest());

    // dense <-> acyclic round trip and the cycle rejection
    AcyclicMatrix am = adjacency_matrix(Tree::path(3));
    CHECK(acyclic_of(dense_of(am)).entry(0, 1) == Rat(1));
    CHECK(throws_code(Err::NotATree, [] { acyclic_of(adjacency_dense(Graph::cycle(3))); }));
}
