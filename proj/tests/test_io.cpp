// Serialization layer: JSON round-trips for every domain type, the report
// and record shapes consumed by the CLI, DOT output, and the command-line
// eigenvalue / polynomial / named-graph syntax.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

#include "spectree/canonical.hpp"
#include "spectree/eigenstructure.hpp"
#include "spectree/graph.hpp"
#include "spectree/io.hpp"

using namespace spectree;
using Json = nlohmann::ordered_json;

namespace {

bool throws_code(Err want, const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == want;
    }
    return false;
}

}  // namespace

TEST_CASE("rationals: p/q strings both ways") {
    CHECK(rat_json(Rat(-3, 7)) == "-3/7");
    CHECK(rat_json(Rat(5)) == "5/1");
    CHECK(parse_rat("5") == Rat(5));
    CHECK(parse_rat("-3/7") == Rat(-3, 7));
    CHECK(parse_rat("4/6") == Rat(2, 3));  // canonicalized
    CHECK(throws_code(Err::ParseError, [] { parse_rat("a/b"); }));
    CHECK(throws_code(Err::ParseError, [] { parse_rat("1/0"); }));
}

TEST_CASE("polynomials survive the round trip, huge coefficients included") {
    Polynomial p = Polynomial::from_ints({1, 0, -3, 0, 1});
    CHECK(parse_polynomial_json(polynomial_json(p)) == p);

    // a coefficient beyond 2^63 must be carried as a string, not a number
    Int huge = int_pow(Int(10), 25);
    Polynomial big({huge, Int(0), Int(1)});
    std::string s = polynomial_json(big);
    CHECK(parse_polynomial_json(s) == big);
    Json j = Json::parse(s);
    REQUIRE(j.contains("coeffs"));
    CHECK(j["coeffs"][0].is_string());
    CHECK(j["coeffs"][2].is_number());
}

TEST_CASE("algebraic numbers: minpoly plus isolating interval") {
    AlgebraicNumber r2(Polynomial::from_ints({-2, 0, 1}), Rat(1), Rat(2));
    AlgebraicNumber back = parse_algebraic_json(algebraic_json(r2));
    CHECK(back == r2);
    Json j = Json::parse(algebraic_json(r2));
    CHECK(j.contains("minpoly"));
    CHECK(j.contains("interval"));
}

TEST_CASE("trees, cut-trees, and matrices round-trip through JSON") {
    Tree t(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    Tree t2 = parse_tree_json(tree_json(t));
    CHECK(t2.n == t.n);
    CHECK(t2.edges == t.edges);

    CutTree ct(t, {0, 2, 0, 0, 1});
    CutTree ct2 = parse_cut_tree_json(cut_tree_json(ct));
    CHECK(canonical_code(ct2) == canonical_code(ct));
    CHECK(ct2.half_edges == ct.half_edges);
    Json j = Json::parse(cut_tree_json(ct));
    CHECK(j["half_edges"].contains("1"));  // vertex keys are strings

    AcyclicMatrix m(3, {Rat(0), Rat(1, 2), Rat(0)},
                    {{0, 1, Rat(1)}, {1, 2, Rat(-2, 3)}});
    AcyclicMatrix m2 = parse_acyclic_matrix_json(acyclic_matrix_json(m));
    CHECK(m2.n == 3);
    CHECK(m2.entry(1, 1) == Rat(1, 2));
    CHECK(m2.entry(2, 1) == Rat(-2, 3));
    CHECK(m2.entry(0, 2) == Rat(0));

    CHECK(throws_code(Err::ParseError, [] { parse_tree_json("{\"n\":2}"); }));
    CHECK(throws_code(Err::ParseError, [] { parse_tree_json("not json"); }));
}

TEST_CASE("enumeration records and structure reports carry the right keys") {
    CutTree p2(Tree::path(2));
    AcyclicMatrix l = laplacian_matrix(p2);
    AlgebraicNumber two = AlgebraicNumber::from_rational(Rat(2));
    std::vector<NumberFieldElement> x = generic_eigenvector(l, two);
    Json rec = Json::parse(enumeration_record_json(3, p2, x));
    CHECK(rec["n"] == 2);
    CHECK(rec["order_index"] == 3);
    CHECK(rec["canonical"] == canonical_code(p2));
    CHECK(rec["tree"]["n"] == 2);
    REQUIRE(rec["eigenvector"].size() == 2);
    CHECK(rec["eigenvector"][0].contains("coeffs"));

    AcyclicMatrix a = adjacency_matrix(Tree::star(3));
    AlgebraicNumber zero;
    Json rep = Json::parse(structure_report_json(a, zero));
    CHECK(rep["multiplicity"] == 2);
    CHECK(rep["nodal"]["N"] == Json::array({0}));
    CHECK(rep["nodal"]["boundary"] == Json::array({0}));
    CHECK(rep["formulas"]["degree"] == 2);
    CHECK(rep["formulas"]["component"] == 2);
    CHECK(rep["decomposition"]["links"] == Json::array({0}));
    CHECK(rep["decomposition"]["min_pieces"].size() == 3);
    CHECK(rep["vertex_classes"].size() == 4);
    CHECK(rep["vertex_classes"][0] == "ParterWiener");
}

TEST_CASE("DOT output names every vertex and dangles half-edges") {
    CutTree ct(Tree::path(3), {1, 0, 0});
    std::string dot = cut_tree_dot(ct);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("-- h") != std::string::npos);  // anonymous half-edge stub

    AcyclicMatrix a = adjacency_matrix(Tree::star(3));
    std::string sdot = structure_dot(a, AlgebraicNumber());
    CHECK(sdot.find("cluster") != std::string::npos);
    CHECK(sdot.find("red") != std::string::npos);
}

TEST_CASE("eigenvalue expressions: minpoly syntax, intervals, root choice") {
    AlgebraicNumber r2(Polynomial::from_ints({-2, 0, 1}), Rat(1), Rat(2));
    // default picks the largest real root
    CHECK(parse_eigenvalue("x^2-2") == r2);
    CHECK(parse_eigenvalue("x^2-3x+1", Rat(0), Rat(1)) ==
          AlgebraicNumber(Polynomial::from_ints({1, -3, 1}), Rat(0), Rat(1)));
    CHECK(parse_eigenvalue("5/2") == AlgebraicNumber::from_rational(Rat(5, 2)));
    CHECK(parse_eigenvalue("x-2") == AlgebraicNumber::from_rational(Rat(2)));
    CHECK(parse_eigenvalue("x").is_zero());
    // reducible inputs resolve to the minimal polynomial of the chosen root
    CHECK(parse_eigenvalue("x^2-4") == AlgebraicNumber::from_rational(Rat(2)));
    CHECK(throws_code(Err::ParseError, [] { parse_eigenvalue("y^2-2"); }));
    CHECK(throws_code(Err::ParseError, [] { parse_eigenvalue(""); }));
    // no root in the requested interval
    CHECK(throws_code(Err::ParseError,
                      [] { parse_eigenvalue("x^2-2", Rat(5), Rat(6)); }));

    CHECK(parse_poly_expr("x^3-2x+1") == Polynomial::from_ints({1, -2, 0, 1}));
    CHECK(parse_poly_expr("2x^2 - 1") == Polynomial::from_ints({-1, 0, 2}));
}

TEST_CASE("named graphs") {
    Graph p5 = parse_named_graph("P5");
    CHECK(p5.n == 5);
    CHECK(p5.is_tree());
    Graph star = parse_named_graph("K1,3");
    CHECK(star.n == 4);
    CHECK(star.degree(0) + star.degree(1) + star.degree(2) + star.degree(3) == 6);
    Graph k4 = parse_named_graph("K4");
    CHECK(static_cast<int>(k4.edges.size()) == 6);
    Graph c4 = parse_named_graph("C4");
    CHECK(static_cast<int>(c4.edges.size()) == 4);
    CHECK(throws_code(Err::ParseError, [] { parse_named_graph("Q3"); }));
    // size suffixes are forwarded to the builders, which do their own checks
    CHECK(throws_code(Err::EmptyGraph, [] { parse_named_graph("P0"); }));
}
