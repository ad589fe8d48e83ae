// JSON serialization/parsing, DOT export, the ASCII polynomial syntax used on
// the command line, and named graph shorthands.
#include "spectree/io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

#include "spectree/canonical.hpp"
#include "spectree/charpoly.hpp"

namespace spectree {

namespace {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    fail(Err::ParseError, "expected an integer (number or decimal string)");
}

Json rat_to_json(const Rat& q) {
    return Json(q.get_num().get_str() + "/" + q.get_den().get_str());
}

Json poly_to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const Int& c : p.c) coeffs.push_back(int_to_json(c));
    Json j;
    j["coeffs"] = std::move(coeffs);
    return j;
}

Polynomial poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        fail(Err::ParseError, "polynomial: expected {\"coeffs\":[...]}");
    Polynomial p;
    for (const Json& c : j["coeffs"]) p.c.push_back(json_to_int(c));
    p.normalize();
    return p;
}

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) fail(Err::ParseError, "rational: expected a \"p/q\" string");
    return parse_rat(j.get<std::string>());
}

Json algebraic_to_json(const AlgebraicNumber& a) {
    Json j;
    j["minpoly"] = poly_to_json(a.minpoly())["coeffs"];
    j["interval"] = Json::array({rat_to_json(a.lo()), rat_to_json(a.hi())});
    return j;
}

Json nf_to_json(const NumberFieldElement& a) {
    Json coeffs = Json::array();
    for (const Rat& q : a.coeffs()) coeffs.push_back(rat_to_json(q));
    Json j;
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json tree_to_json(const Tree& t) {
    Json j;
    j["n"] = t.n;
    Json edges = Json::array();
    for (const auto& [u, v] : t.edges) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Tree tree_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        fail(Err::ParseError, "tree: expected {\"n\":..,\"edges\":[[u,v],..]}");
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) fail(Err::ParseError, "tree: bad edge entry");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Tree(j["n"].get<int>(), edges);
}

Json cut_tree_to_json(const CutTree& t) {
    Json j = tree_to_json(t.tree);
    Json he = Json::object();
    for (int v = 0; v < t.n(); ++v)
        if (t.half_edges[v] > 0) he[std::to_string(v)] = t.half_edges[v];
    j["half_edges"] = std::move(he);
    return j;
}

CutTree cut_tree_from_json(const Json& j) {
    Tree t = tree_from_json(j);
    std::vector<int> he(t.n, 0);
    if (j.contains("half_edges")) {
        for (const auto& [key, val] : j["half_edges"].items()) {
            int v = std::stoi(key);
            if (v < 0 || v >= t.n) fail(Err::ParseError, "cut-tree: half-edge vertex out of range");
            he[v] = val.get<int>();
        }
    }
    return CutTree(t, he);
}

Json matrix_to_json(const AcyclicMatrix& m) {
    Json j;
    j["n"] = m.n;
    Json diag = Json::array();
    for (const Rat& d : m.diag) diag.push_back(rat_to_json(d));
    j["diag"] = std::move(diag);
    Json edges = Json::array();
    for (const AcyclicMatrix::WEdge& e : m.edges) edges.push_back(Json::array({Json(e.u), Json(e.v), rat_to_json(e.w)}));
    j["edges"] = std::move(edges);
    return j;
}

AcyclicMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("diag") || !j.contains("edges"))
        fail(Err::ParseError, "matrix: expected {\"n\":..,\"diag\":[..],\"edges\":[[u,v,w],..]}");
    int n = j["n"].get<int>();
    std::vector<Rat> diag;
    for (const Json& d : j["diag"]) diag.push_back(rat_from_json(d));
    std::vector<AcyclicMatrix::WEdge> edges;
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) fail(Err::ParseError, "matrix: bad edge entry");
        edges.push_back(AcyclicMatrix::WEdge{e[0].get<int>(), e[1].get<int>(), rat_from_json(e[2])});
    }
    return AcyclicMatrix(n, diag, edges);
}

Json parse_or_fail(const std::string& s) {
    Json j = Json::parse(s, nullptr, false);
    if (j.is_discarded()) fail(Err::ParseError, "malformed JSON");
    return j;
}

Json vertex_list(const std::vector<int>& vs) {
    Json a = Json::array();
    for (int v : vs) a.push_back(v);
    return a;
}

Json edge_list(const std::vector<std::pair<int, int>>& es) {
    Json a = Json::array();
    for (const auto& [u, v] : es) a.push_back(Json::array({u, v}));
    return a;
}

}  // namespace

std::string rat_json(const Rat& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) fail(Err::ParseError, "empty rational");
    try {
        Rat q(t);
        if (q.get_den() == 0) fail(Err::ParseError, "zero denominator: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail(Err::ParseError, "bad rational: " + s);
    }
}

std::string polynomial_json(const Polynomial& p) { return poly_to_json(p).dump(); }

Polynomial parse_polynomial_json(const std::string& s) { return poly_from_json(parse_or_fail(s)); }

std::string algebraic_json(const AlgebraicNumber& a) { return algebraic_to_json(a).dump(); }

AlgebraicNumber parse_algebraic_json(const std::string& s) {
    Json j = parse_or_fail(s);
    if (!j.is_object() || !j.contains("minpoly") || !j.contains("interval"))
        fail(Err::ParseError, "algebraic number: expected {\"minpoly\":[..],\"interval\":[..]}");
    Polynomial p;
    for (const Json& c : j["minpoly"]) p.c.push_back(json_to_int(c));
    p.normalize();
    const Json& iv = j["interval"];
    if (!iv.is_array() || iv.size() != 2)
        fail(Err::ParseError, "algebraic number: interval must have two endpoints");
    return AlgebraicNumber(p, rat_from_json(iv[0]), rat_from_json(iv[1]));
}

std::string nf_element_json(const NumberFieldElement& a) { return nf_to_json(a).dump(); }

std::string tree_json(const Tree& t) { return tree_to_json(t).dump(); }

Tree parse_tree_json(const std::string& s) { return tree_from_json(parse_or_fail(s)); }

std::string cut_tree_json(const CutTree& t) { return cut_tree_to_json(t).dump(); }

CutTree parse_cut_tree_json(const std::string& s) { return cut_tree_from_json(parse_or_fail(s)); }

std::string acyclic_matrix_json(const AcyclicMatrix& m) { return matrix_to_json(m).dump(); }

AcyclicMatrix parse_acyclic_matrix_json(const std::string& s) {
    return matrix_from_json(parse_or_fail(s));
}

std::string enumeration_record_json(int order_index, const CutTree& t,
                                    const std::vector<NumberFieldElement>& eigenvector) {
    Json j;
    j["n"] = t.n();
    j["canonical"] = canonical_code(t);
    j["tree"] = t.total_half_edges() == 0 ? tree_to_json(t.tree) : cut_tree_to_json(t);
    Json ev = Json::array();
    for (const NumberFieldElement& c : eigenvector) ev.push_back(nf_to_json(c));
    j["eigenvector"] = std::move(ev);
    j["order_index"] = order_index;
    return j.dump();
}

std::string structure_report_json(const AcyclicMatrix& m, const AlgebraicNumber& theta) {
    Json j;
    j["n"] = m.n;
    j["theta"] = algebraic_to_json(theta);
    int mult = multiplicity(m, theta);
    j["multiplicity"] = mult;

    NodalSets ns = nodal_sets(m, theta);
    Json nodal;
    nodal["N"] = vertex_list(ns.N);
    nodal["N_interior"] = vertex_list(ns.N_interior);
    nodal["boundary"] = vertex_list(ns.boundary);
    nodal["E_interior"] = edge_list(ns.E_interior);
    nodal["F_vertices"] = vertex_list(ns.F_vertices);
    nodal["F_edges"] = edge_list(ns.F_edges);
    nodal["c"] = ns.c;
    nodal["not_eigenvalue"] = ns.not_eigenvalue;
    j["nodal"] = std::move(nodal);

    Json formulas;
    formulas["degree"] = multiplicity_by_degree_formula(m, theta);
    formulas["component"] = multiplicity_by_component_formula(m, theta);
    j["formulas"] = std::move(formulas);

    Json classes = Json::array();
    for (int v = 0; v < m.n; ++v)
        classes.push_back(vertex_class_name(classify_vertex(m, theta, v)));
    j["vertex_classes"] = std::move(classes);

    if (mult >= 1) {
        std::vector<NumberFieldElement> x = generic_eigenvector(m, theta);
        Json ev = Json::array();
        for (const NumberFieldElement& c : x) ev.push_back(nf_to_json(c));
        j["eigenvector"] = std::move(ev);

        Decomposition d = decompose(m, theta);
        Json dec;
        dec["links"] = vertex_list(d.link_vertices);
        Json mins = Json::array();
        for (const auto& piece : d.min_pieces) mins.push_back(vertex_list(piece));
        dec["min_pieces"] = std::move(mins);
        Json zeros = Json::array();
        for (const auto& piece : d.zero_pieces) zeros.push_back(vertex_list(piece));
        dec["zero_pieces"] = std::move(zeros);
        j["decomposition"] = std::move(dec);

        try {
            FiedlerReport fr = fiedler_multiplicity(m, x);
            Json f;
            Json s = Json::object();
            for (const auto& [k, cnt] : fr.s) s[std::to_string(k)] = cnt;
            f["s"] = std::move(s);
            f["c"] = fr.c;
            f["value"] = fr.value;
            j["fiedler"] = std::move(f);
        } catch (const Error& e) {
            if (e.code() != Err::AdjacentZeros) throw;
            j["fiedler"] = nullptr;  // hypothesis fails: adjacent zero coordinates
        }
    }
    return j.dump();
}

std::string cut_tree_dot(const CutTree& t) {
    std::ostringstream os;
    os << "graph cut_tree {\n";
    for (int v = 0; v < t.n(); ++v) os << "  " << v << ";\n";
    for (const auto& [u, v] : t.tree.edges) os << "  " << u << " -- " << v << ";\n";
    int anon = 0;
    for (int v = 0; v < t.n(); ++v)
        for (int i = 0; i < t.half_edges[v]; ++i) {
            os << "  h" << anon << " [shape=point, label=\"\"];\n";
            os << "  " << v << " -- h" << anon << ";\n";
            ++anon;
        }
    os << "}\n";
    return os.str();
}

std::string structure_dot(const AcyclicMatrix& m, const AlgebraicNumber& theta) {
    NodalSets ns = nodal_sets(m, theta);
    std::vector<char> interior(m.n, 0), boundary(m.n, 0);
    for (int v : ns.N_interior) interior[v] = 1;
    for (int v : ns.boundary) boundary[v] = 1;

    std::ostringstream os;
    os << "graph structure {\n  node [style=filled, fillcolor=white];\n";
    for (int v = 0; v < m.n; ++v) {
        os << "  " << v;
        if (interior[v])
            os << " [fillcolor=gray]";
        else if (boundary[v])
            os << " [fillcolor=red]";
        os << ";\n";
    }
    if (!ns.not_eigenvalue) {
        Decomposition d = decompose(m, theta);
        for (std::size_t i = 0; i < d.min_pieces.size(); ++i) {
            os << "  subgraph cluster_min_" << i << " {\n    label=\"Min\";\n   ";
            for (int v : d.min_pieces[i]) os << " " << v << ";";
            os << "\n  }\n";
        }
    }
    for (const AcyclicMatrix::WEdge& e : m.edges) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

Polynomial parse_poly_expr(const std::string& expr) {
    // Terms like "3x^2", "-x", "+5"; optional '*' between coefficient and x.
    std::string s;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail(Err::ParseError, "empty polynomial expression");

    std::vector<Int> coeffs;
    auto bump = [&](std::size_t deg, const Int& c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Int(0));
        coeffs[deg] += c;
    };

    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) fail(Err::ParseError, "dangling sign in polynomial: " + expr);

        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        bool has_coeff = !digits.empty();
        Int coeff = has_coeff ? Int(digits) : Int(1);
        if (sign < 0) coeff = -coeff;

        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            std::size_t deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string d;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) d += s[i++];
                if (d.empty()) fail(Err::ParseError, "missing exponent in polynomial: " + expr);
                deg = std::stoul(d);
            }
            bump(deg, coeff);
        } else {
            if (!has_coeff) fail(Err::ParseError, "bad term in polynomial: " + expr);
            bump(0, coeff);
        }
    }
    Polynomial p;
    p.c = std::move(coeffs);
    p.normalize();
    if (p.is_zero()) fail(Err::ParseError, "zero polynomial: " + expr);
    return p;
}

AlgebraicNumber parse_eigenvalue(const std::string& expr) {
    if (expr.find('x') == std::string::npos && expr.find('X') == std::string::npos)
        return AlgebraicNumber::from_rational(parse_rat(expr));
    Polynomial p = parse_poly_expr(expr);
    std::vector<std::pair<AlgebraicNumber, int>> roots = isolate_real_roots(p);
    if (roots.empty()) fail(Err::ParseError, "polynomial has no real roots: " + expr);
    return roots.back().first;  // largest real root by default
}

AlgebraicNumber parse_eigenvalue(const std::string& expr, const Rat& lo, const Rat& hi) {
    if (expr.find('x') == std::string::npos && expr.find('X') == std::string::npos) {
        AlgebraicNumber a = AlgebraicNumber::from_rational(parse_rat(expr));
        return a;
    }
    Polynomial p = parse_poly_expr(expr);
    AlgebraicNumber lo_a = AlgebraicNumber::from_rational(lo);
    AlgebraicNumber hi_a = AlgebraicNumber::from_rational(hi);
    std::vector<AlgebraicNumber> hits;
    for (const auto& [root, mult] : isolate_real_roots(p)) {
        if (AlgebraicNumber::compare(root, lo_a) > 0 && AlgebraicNumber::compare(root, hi_a) <= 0)
            hits.push_back(root);
    }
    if (hits.size() != 1)
        fail(Err::ParseError, "interval must isolate exactly one real root: " + expr);
    return hits[0];
}

Graph parse_named_graph(const std::string& name) {
    if (name.size() < 2) fail(Err::ParseError, "unknown graph name: " + name);
    char kind = name[0];
    std::string rest = name.substr(1);
    if (kind == 'K' && rest.find(',') != std::string::npos) {
        std::size_t comma = rest.find(',');
        if (rest.substr(0, comma) != "1")
            fail(Err::ParseError, "only K1,m stars are supported: " + name);
        int m = std::stoi(rest.substr(comma + 1));
        if (m < 1) fail(Err::ParseError, "bad star size: " + name);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= m; ++i) edges.emplace_back(0, i);
        return Graph(m + 1, edges);
    }
    int k = 0;
    try {
        k = std::stoi(rest);
    } catch (...) {
        fail(Err::ParseError, "unknown graph name: " + name);
    }
    switch (kind) {
        case 'P': return Graph::path(k);
        case 'C': return Graph::cycle(k);
        case 'K': return Graph::complete(k);
        default: fail(Err::ParseError, "unknown graph name: " + name);
    }
}

}  // namespace spectree
