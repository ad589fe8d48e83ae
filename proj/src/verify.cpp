// Batch verification suites.  Each suite sweeps an exhaustive family, checks
// the corresponding structural identity with exact arithmetic, and collects
// reproducible JSON failure instances.  Sweeps are parallelized over a fixed
// candidate list and merged in index order, so output is identical for every
// worker count.
#include "spectree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "spectree/canonical.hpp"
#include "spectree/charpoly.hpp"
#include "spectree/eigenstructure.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/io.hpp"
#include "spectree/minimality.hpp"
#include "spectree/worker.hpp"

namespace spectree {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0).count();
}

std::string failure_json(std::initializer_list<std::pair<std::string, Json>> fields) {
    Json j;
    for (const auto& [k, v] : fields) j[k] = v;
    return j.dump();
}

Json tree_fields(const Tree& t) {
    Json j;
    j["n"] = t.n;
    Json es = Json::array();
    for (auto [u, v] : t.edges) es.push_back(Json::array({u, v}));
    j["edges"] = std::move(es);
    return j;
}

// All real eigenvalues of m with multiplicities, via the exact characteristic
// polynomial and root isolation.
std::vector<std::pair<AlgebraicNumber, int>> matrix_eigenvalues(const AcyclicMatrix& m) {
    CharPoly cp = char_poly(m);
    return isolate_real_roots(cp.primitive);
}

struct CaseOutcome {
    long cases = 0;
    std::vector<std::string> failures;
};

SuiteResult merge_outcomes(std::string name, Clock::time_point t0,
                           std::vector<CaseOutcome> outs) {
    SuiteResult r;
    r.name = std::move(name);
    for (CaseOutcome& o : outs) {
        r.cases += o.cases;
        for (std::string& f : o.failures) r.failure_instances.push_back(std::move(f));
    }
    r.failures = static_cast<long>(r.failure_instances.size());
    r.seconds = seconds_since(t0);
    return r;
}

// Check the multiplicity identities + decomposition for one matrix across all
// of its real eigenvalues.
CaseOutcome check_formulas_matrix(const AcyclicMatrix& m, const std::string& origin) {
    CaseOutcome out;
    for (const auto& [theta, poly_mult] : matrix_eigenvalues(m)) {
        ++out.cases;
        int mult = multiplicity(m, theta);
        int kdim = static_cast<int>(kernel_basis(m, theta).dimension());
        int dform = multiplicity_by_degree_formula(m, theta);
        int cform = multiplicity_by_component_formula(m, theta);
        if (mult != poly_mult || mult != kdim || mult != dform || mult != cform) {
            out.failures.push_back(failure_json(
                {{"origin", origin},
                 {"matrix", Json::parse(acyclic_matrix_json(m))},
                 {"eigenvalue", Json::parse(algebraic_json(theta))},
                 {"charpoly_multiplicity", mult},
                 {"kernel_dimension", kdim},
                 {"degree_formula", dform},
                 {"component_formula", cform}}));
            continue;
        }
        if (mult >= 1) {
            try {
                (void)decompose(m, theta);
            } catch (const Error& e) {
                out.failures.push_back(failure_json(
                    {{"origin", origin},
                     {"matrix", Json::parse(acyclic_matrix_json(m))},
                     {"eigenvalue", Json::parse(algebraic_json(theta))},
                     {"decompose_error", e.what()}}));
            }
        }
    }
    return out;
}

Rat random_rat(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    int p = num(rng);
    while (nonzero && p == 0) p = num(rng);
    return Rat(p, den(rng));
}

// Pseudorandom acyclic matrix: random labeled tree (uniform attachment),
// random edge deletions to a forest, random small rational weights.
AcyclicMatrix random_acyclic(std::mt19937_64& rng, int n_max) {
    std::uniform_int_distribution<int> nd(2, n_max);
    int n = nd(rng);
    std::vector<std::pair<int, int>> tree_edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pd(0, v - 1);
        tree_edges.push_back({pd(rng), v});
    }
    std::uniform_int_distribution<int> keep(0, 3);
    std::vector<AcyclicMatrix::WEdge> edges;
    for (auto [u, v] : tree_edges) {
        if (keep(rng) == 0) continue;  // delete ~1/4 of the edges
        edges.push_back({u, v, random_rat(rng, true)});
    }
    std::vector<Rat> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = random_rat(rng, false);
    return AcyclicMatrix(n, std::move(diag), std::move(edges));
}

}  // namespace

SuiteResult run_suite_multiplicity_formulas(int tree_nmax, int weighted_count,
                                            int weighted_nmax) {
    auto t0 = Clock::now();
    std::vector<AcyclicMatrix> jobs;
    std::vector<std::string> origins;
    for (const Tree& t : enumerate_trees(tree_nmax)) {
        jobs.push_back(adjacency_matrix(t));
        origins.push_back("adjacency " + canonical_code(t));
        jobs.push_back(laplacian_matrix(t));
        origins.push_back("laplacian " + canonical_code(t));
    }
    std::mt19937_64 rng(0x5eed0001ULL);
    for (int i = 0; i < weighted_count; ++i) {
        jobs.push_back(random_acyclic(rng, weighted_nmax));
        origins.push_back("weighted #" + std::to_string(i));
    }
    auto outs = parallel_map<CaseOutcome>(static_cast<int>(jobs.size()), [&](int i) {
        return check_formulas_matrix(jobs[i], origins[i]);
    });
    return merge_outcomes("multiplicity-formulas", t0, std::move(outs));
}

SuiteResult run_suite_rooted_product(int g_nmax, int h_nmax) {
    auto t0 = Clock::now();
    std::vector<Tree> gs = enumerate_trees(g_nmax);
    std::vector<Tree> hs = enumerate_trees(h_nmax);
    auto outs = parallel_map<CaseOutcome>(static_cast<int>(gs.size()), [&](int gi) {
        CaseOutcome out;
        const Tree& g = gs[gi];
        for (const Tree& h : hs) {
            for (int root = 0; root < h.n; ++root) {
                ++out.cases;
                Polynomial viaformula =
                    rooted_product_charpoly(g.as_graph(), h.as_graph(), root);
                Tree direct = rooted_product(g, h, root);
                Polynomial direct_cp = char_poly(adjacency_matrix(direct)).primitive;
                if (!(viaformula == direct_cp)) {
                    out.failures.push_back(failure_json(
                        {{"g", tree_fields(g)},
                         {"h", tree_fields(h)},
                         {"root", root},
                         {"formula", Json::parse(polynomial_json(viaformula))},
                         {"direct", Json::parse(polynomial_json(direct_cp))}}));
                }
            }
        }
        return out;
    });
    return merge_outcomes("rooted-product", t0, std::move(outs));
}

SuiteResult run_suite_subdivision(int tree_nmax) {
    auto t0 = Clock::now();
    std::vector<Graph> jobs;
    for (const Tree& t : enumerate_trees(tree_nmax)) jobs.push_back(t.as_graph());
    jobs.push_back(Graph::complete(3));
    jobs.push_back(Graph::cycle(4));
    jobs.push_back(Graph::complete(4));
    auto outs = parallel_map<CaseOutcome>(static_cast<int>(jobs.size()), [&](int i) {
        CaseOutcome out;
        ++out.cases;
        bool ok = false;
        std::string err;
        try {
            ok = verify_subdivision_identity(jobs[i]);
        } catch (const Error& e) {
            err = e.what();
        }
        if (!ok) {
            Json gj;
            gj["n"] = jobs[i].n;
            Json es = Json::array();
            for (auto [u, v] : jobs[i].edges) es.push_back(Json::array({u, v}));
            gj["edges"] = std::move(es);
            out.failures.push_back(
                failure_json({{"graph", gj}, {"error", err.empty() ? "identity false" : err}}));
        }
        return out;
    });
    return merge_outcomes("subdivision", t0, std::move(outs));
}

SuiteResult run_suite_norm_tree(int nmax) {
    auto t0 = Clock::now();
    std::vector<Tree> trees = enumerate_trees(nmax);
    auto outs = parallel_map<CaseOutcome>(static_cast<int>(trees.size()), [&](int i) {
        CaseOutcome out;
        const Tree& t = trees[i];
        AcyclicMatrix lap = laplacian_matrix(t);
        for (const auto& [mu, mult] : matrix_eigenvalues(lap)) {
            if (!(mu.norm() > 1)) continue;
            ++out.cases;
            try {
                NormDivisibilityReport rep = check_norm_divisibility(t.as_graph(), mu);
                if (!rep.norm_divides_n || !rep.kernel_nowhere_zero || !rep.multiplicity_one) {
                    out.failures.push_back(failure_json(
                        {{"tree", tree_fields(t)},
                         {"eigenvalue", Json::parse(algebraic_json(mu))},
                         {"norm_divides_n", rep.norm_divides_n},
                         {"kernel_nowhere_zero", rep.kernel_nowhere_zero},
                         {"multiplicity_one", rep.multiplicity_one}}));
                }
            } catch (const Error& e) {
                out.failures.push_back(failure_json({{"tree", tree_fields(t)},
                                                     {"eigenvalue", Json::parse(algebraic_json(mu))},
                                                     {"error", e.what()}}));
            }
        }
        return out;
    });
    return merge_outcomes("norm-tree", t0, std::move(outs));
}

SuiteResult run_suite_norm_graph(int nmax) {
    auto t0 = Clock::now();
    SuiteResult r;
    r.name = "norm-graph";
    // Labeled connected graphs; non-tree verdicts are determined by the
    // Laplacian characteristic polynomial alone (n, t, multiplicities and
    // norms all are), so they are memoized on it.  Trees additionally involve
    // kernel coordinates and are checked individually.
    std::map<std::string, bool> nontree_memo;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
        const int m = static_cast<int>(all_pairs.size());
        for (long mask = 0; mask < (1L << m); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < m; ++b)
                if (mask & (1L << b)) edges.push_back(all_pairs[b]);
            Graph g(n, edges);
            if (!g.is_connected()) continue;
            bool is_tree = g.is_tree();
            CharPoly cp = char_poly_dense(laplacian_dense(g));
            std::string key = cp.primitive.to_string();
            if (!is_tree) {
                auto it = nontree_memo.find(key);
                if (it != nontree_memo.end()) {
                    if (!it->second) ++r.failures;  // already recorded instance
                    continue;
                }
            }
            bool ok = true;
            std::string first_error;
            for (const auto& [mu, mult] : isolate_real_roots(cp.primitive)) {
                if (mu.is_zero()) continue;
                ++r.cases;
                try {
                    (void)check_norm_divisibility(g, mu);
                } catch (const Error& e) {
                    ok = false;
                    first_error = e.what();
                    Json gj;
                    gj["n"] = g.n;
                    Json es = Json::array();
                    for (auto [u, v] : g.edges) es.push_back(Json::array({u, v}));
                    gj["edges"] = std::move(es);
                    r.failure_instances.push_back(failure_json(
                        {{"graph", gj},
                         {"eigenvalue", Json::parse(algebraic_json(mu))},
                         {"error", e.what()}}));
                    ++r.failures;
                }
            }
            if (!is_tree) nontree_memo[key] = ok;
        }
    }
    r.seconds = seconds_since(t0);
    return r;
}

SuiteResult run_suite_det_one(int nmax) {
    auto t0 = Clock::now();
    std::vector<CutTree> cts = enumerate_cut_trees(nmax, 1);
    auto outs = parallel_map<CaseOutcome>(static_cast<int>(cts.size()), [&](int i) {
        CaseOutcome out;
        ++out.cases;
        Rat d = det_one_cut_tree(cts[i]);
        if (d != 1) {
            out.failures.push_back(failure_json(
                {{"cut_tree", Json::parse(cut_tree_json(cts[i]))}, {"det", rat_json(d)}}));
        }
        return out;
    });
    return merge_outcomes("det-one", t0, std::move(outs));
}

SuiteResult run_suite_totally_minimal(int nmax) {
    auto t0 = Clock::now();
    CaseOutcome head;
    for (int p : {2, 3, 5, 7, 11}) {
        ++head.cases;
        Tree path = p == 2 ? Tree::single() : Tree::path(p - 1);
        if (!is_totally_minimal(path)) {
            head.failures.push_back(failure_json({{"path_order", p - 1}, {"error", "not totally minimal"}}));
        }
    }
    std::vector<Tree> trees = enumerate_trees(nmax);
    auto outs = parallel_map<CaseOutcome>(static_cast<int>(trees.size()), [&](int i) {
        CaseOutcome out;
        const Tree& t = trees[i];
        if (!is_totally_minimal(t)) return out;
        ++out.cases;
        try {
            auto [p2, p4] = totally_minimal_products(t);
            if (!is_totally_minimal(p2) || !is_totally_minimal(p4)) {
                out.failures.push_back(failure_json(
                    {{"tree", tree_fields(t)}, {"error", "product not totally minimal"}}));
            }
        } catch (const Error& e) {
            out.failures.push_back(failure_json({{"tree", tree_fields(t)}, {"error", e.what()}}));
        }
        return out;
    });
    outs.insert(outs.begin(), head);
    return merge_outcomes("totally-minimal", t0, std::move(outs));
}

// --- enumeration streams -----------------------------------------------------

namespace {

std::string stream_footer(const std::vector<int>& orders) {
    Json per;
    std::map<int, int> cnt;
    for (int n : orders) cnt[n]++;
    for (auto [n, c] : cnt) per[std::to_string(n)] = c;
    Json j;
    j["summary"] = Json{{"total", orders.size()}, {"per_order", per}};
    return j.dump();
}

}  // namespace

std::string lambda_minimal_stream(const AlgebraicNumber& lambda, int n_max) {
    std::vector<Tree> candidates = enumerate_trees(n_max);
    auto keep = parallel_map<char>(static_cast<int>(candidates.size()), [&](int i) {
        return static_cast<char>(is_lambda_minimal(candidates[i], lambda));
    });
    std::ostringstream os;
    std::vector<int> orders;
    int idx = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (!keep[i]) continue;
        const Tree& t = candidates[i];
        KernelBasis kb = kernel_basis(adjacency_matrix(t), lambda);
        os << enumeration_record_json(idx++, CutTree(t), kb.vectors.at(0)) << "\n";
        orders.push_back(t.n);
    }
    os << stream_footer(orders) << "\n";
    return os.str();
}

std::string l_minimal_stream(const AlgebraicNumber& mu, int k, int n_max) {
    std::vector<CutTree> candidates = enumerate_cut_trees(n_max, k);
    auto keep = parallel_map<char>(static_cast<int>(candidates.size()), [&](int i) {
        return static_cast<char>(is_L_minimal(candidates[i], mu));
    });
    std::ostringstream os;
    std::vector<int> orders;
    int idx = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (!keep[i]) continue;
        const CutTree& t = candidates[i];
        KernelBasis kb = kernel_basis(laplacian_matrix(t), mu);
        os << enumeration_record_json(idx++, t, kb.vectors.at(0)) << "\n";
        orders.push_back(t.n());
    }
    os << stream_footer(orders) << "\n";
    return os.str();
}

// --- fixture tables -----------------------------------------------------------

namespace {

Tree tree_from_row(const Json& r) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : r["edges"]) edges.push_back({e[0].get<int>(), e[1].get<int>()});
    return Tree(r["n"].get<int>(), std::move(edges));
}

CutTree cut_tree_from_row(const Json& r) {
    Tree t = tree_from_row(r);
    std::vector<int> he(t.n, 0);
    if (r.contains("half_edges"))
        for (auto it = r["half_edges"].begin(); it != r["half_edges"].end(); ++it)
            he[std::stoi(it.key())] = it.value().get<int>();
    return CutTree(t, he);
}

Json load_json(const std::string& path, std::vector<std::string>& failures) {
    std::ifstream f(path);
    if (!f) {
        failures.push_back("cannot open " + path);
        return Json();
    }
    try {
        return Json::parse(f);
    } catch (const std::exception& e) {
        failures.push_back("cannot parse " + path + ": " + e.what());
        return Json();
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string orders_string(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

}  // namespace

TableReport check_tables(const std::string& data_dir) {
    TableReport rep;
    AlgebraicNumber one = AlgebraicNumber::from_rational(Rat(1));
    AlgebraicNumber two = AlgebraicNumber::from_rational(Rat(2));
    Polynomial x2m2{std::vector<Int>{Int(-2), Int(0), Int(1)}};
    AlgebraicNumber sqrt2 = isolate_real_roots(x2m2).back().first;

    // --- eigenvalue 1 catalogue ---
    {
        auto t0 = Clock::now();
        std::vector<Tree> found = enumerate_lambda_minimal(one, 10);
        rep.lambda1_seconds = seconds_since(t0);
        rep.lambda1_classes = static_cast<int>(found.size());
        std::set<std::string> codes;
        for (const Tree& t : found) {
            rep.lambda1_orders.push_back(t.n);
            codes.insert(canonical_code(t));
        }
        Json doc = load_json(data_dir + "/catalogue_lambda1_drawings.json", rep.failures);
        if (!doc.is_null()) {
            const auto& rows = doc["rows"];
            for (size_t i : {size_t(0), size_t(1), size_t(3), size_t(4), size_t(5)}) {
                Tree t = tree_from_row(rows[i]);
                if (!is_lambda_minimal(t, one))
                    rep.failures.push_back("catalogue drawing " + std::to_string(i) +
                                           " for eigenvalue 1 is not minimal");
                else if (codes.count(canonical_code(t)))
                    ++rep.lambda1_drawings_matched;
                else
                    rep.failures.push_back("catalogue drawing " + std::to_string(i) +
                                           " for eigenvalue 1 missing from enumeration");
            }
            Tree drawn = tree_from_row(rows[2]);
            rep.lambda1_defect_detected =
                !is_lambda_minimal(drawn, one) && !codes.count(canonical_code(drawn));
            Tree corrected = tree_from_row(doc["corrected_row_3"]);
            rep.lambda1_corrected_matched =
                is_lambda_minimal(corrected, one) && codes.count(canonical_code(corrected));
            std::vector<int> stated = {2, 6, 9, 9, 10, 10};
            if (rep.lambda1_orders != stated) {
                rep.discrepancies.push_back(
                    "catalogue for eigenvalue 1: computed order multiset " +
                    orders_string(rep.lambda1_orders) + " differs from the shipped catalogue's " +
                    orders_string(stated) +
                    "; catalogue row 3 (first 9-vertex drawing) admits no nonzero eigenvector "
                    "for 1 (its own vertex labels violate the eigen-equations at two "
                    "vertices); restoring the omitted bare spine vertex yields the 10-vertex "
                    "caterpillar that the enumeration finds and the drawn values fit");
            }
        }
    }

    // --- eigenvalue sqrt(2) catalogue ---
    {
        auto t0 = Clock::now();
        std::vector<Tree> found = enumerate_lambda_minimal(sqrt2, 10);
        rep.sqrt2_seconds = seconds_since(t0);
        rep.sqrt2_classes = static_cast<int>(found.size());
        std::set<std::string> codes;
        for (const Tree& t : found) {
            rep.sqrt2_orders.push_back(t.n);
            codes.insert(canonical_code(t));
        }
        Json doc = load_json(data_dir + "/catalogue_sqrt2_drawings.json", rep.failures);
        if (!doc.is_null()) {
            int i = 0;
            for (const auto& row : doc["rows"]) {
                Tree t = tree_from_row(row);
                if (!is_lambda_minimal(t, sqrt2))
                    rep.failures.push_back("catalogue drawing " + std::to_string(i) +
                                           " for eigenvalue sqrt(2) is not minimal");
                else if (codes.count(canonical_code(t)))
                    ++rep.sqrt2_drawings_matched;
                else
                    rep.failures.push_back("catalogue drawing " + std::to_string(i) +
                                           " for eigenvalue sqrt(2) missing from enumeration");
                ++i;
            }
        }
    }

    // --- Laplacian eigenvalue 2 catalogue ---
    {
        auto t0 = Clock::now();
        std::vector<CutTree> found = enumerate_L_minimal(two, 0, 12);
        rep.mu2_seconds = seconds_since(t0);
        rep.mu2_classes = static_cast<int>(found.size());
        std::set<std::string> codes;
        for (const CutTree& t : found) {
            rep.mu2_orders.push_back(t.n());
            codes.insert(canonical_code(t));
        }
        Json doc = load_json(data_dir + "/catalogue_mu2_drawings.json", rep.failures);
        if (!doc.is_null()) {
            int i = 0;
            for (const auto& row : doc["rows"]) {
                CutTree t = cut_tree_from_row(row);
                if (!is_L_minimal(t, two))
                    rep.failures.push_back("Laplacian catalogue drawing " + std::to_string(i) +
                                           " is not minimal for 2");
                else if (codes.count(canonical_code(t)))
                    ++rep.mu2_drawings_matched;
                else
                    rep.failures.push_back("Laplacian catalogue drawing " + std::to_string(i) +
                                           " missing from enumeration");
                ++i;
            }
        }
    }

    // --- quadratic Laplacian eigenvalue spot checks ---
    {
        Json doc = load_json(data_dir + "/catalogue_quadratic_drawings.json", rep.failures);
        if (!doc.is_null()) {
            for (const auto& sec : doc["sections"]) {
                std::vector<Int> coeffs;
                for (const auto& c : sec["minpoly_coeffs"]) coeffs.push_back(Int(c.get<long>()));
                std::reverse(coeffs.begin(), coeffs.end());
                Polynomial mp{coeffs};
                auto roots = isolate_real_roots(mp);
                for (const auto& row : sec["cut_trees"]) {
                    CutTree ct = cut_tree_from_row(row);
                    for (const auto& [mu, mult] : roots) {
                        ++rep.quad_checks;
                        if (is_L_minimal(ct, mu))
                            ++rep.quad_passed;
                        else
                            rep.failures.push_back(
                                "quadratic spot check failed: " + cut_tree_json(ct) +
                                " for root of " + sec["minpoly"].get<std::string>());
                    }
                }
            }
        }
    }

    // --- no 1-cut-tree of order <= 7 even has an eigenvalue of norm > 1 (unit
    // determinant forces every eigenvalue to be a unit), so the enumerator must
    // return nothing for norm>1 values; those values are sampled from plain-tree
    // Laplacian spectra, where they do occur ---
    {
        std::vector<CutTree> cts = enumerate_cut_trees(7, 1);
        for (const CutTree& ct : cts) {
            AcyclicMatrix lap = laplacian_matrix(ct);
            for (const auto& [mu, mult] : matrix_eigenvalues(lap)) {
                ++rep.norm_gt1_checks;
                if (mu.norm() > 1) {
                    ++rep.norm_gt1_violations;
                    rep.failures.push_back("1-cut-tree has a norm>1 eigenvalue: " +
                                           cut_tree_json(ct) + " at " + algebraic_json(mu));
                }
            }
        }
        std::set<std::string> norm_gt1_minpolys;
        std::vector<AlgebraicNumber> sample_values;
        for (const Tree& t : enumerate_trees(7)) {
            if (sample_values.size() >= 3) break;
            for (const auto& [mu, mult] : matrix_eigenvalues(laplacian_matrix(t))) {
                if (!(mu.norm() > 1)) continue;
                if (norm_gt1_minpolys.insert(mu.minpoly().to_string()).second &&
                    sample_values.size() < 3)
                    sample_values.push_back(mu);
            }
        }
        for (const AlgebraicNumber& mu : sample_values) {
            ++rep.norm_gt1_enumerations;
            if (!enumerate_L_minimal(mu, 1, 7).empty()) {
                ++rep.norm_gt1_violations;
                rep.failures.push_back("enumeration for norm>1 eigenvalue " + algebraic_json(mu) +
                                       " is nonempty");
            }
        }
    }

    // --- construction closure ---
    {
        Tree p2 = Tree::path(2);
        Json doc1 = load_json(data_dir + "/catalogue_lambda1_drawings.json", rep.failures);
        if (!doc1.is_null()) {
            Tree n6 = tree_from_row(doc1["rows"][1]);
            Tree grown = grow_minimal(p2, 1, 2, one);
            rep.grow_min_matches_n6 = canonical_code(grown) == canonical_code(n6);
            if (!rep.grow_min_matches_n6)
                rep.failures.push_back("grown 6-vertex tree does not match the catalogue drawing");
        }
        Json doc3 = load_json(data_dir + "/catalogue_mu2_drawings.json", rep.failures);
        if (!doc3.is_null()) {
            Tree n10 = tree_from_row(doc3["rows"][1]);
            Tree grown = grow_L_minimal(p2, 2);
            rep.grow_l_matches_n10 = canonical_code(grown) == canonical_code(n10);
            if (!rep.grow_l_matches_n10)
                rep.failures.push_back(
                    "grown Laplacian 10-vertex tree does not match the catalogue drawing");
        }
        for (int k : {2, 3, 4}) {
            Tree t = min_order_multiplicity_k(MinKind::Adjacency, one, k, CutTree(p2));
            int m = multiplicity(adjacency_matrix(t), one);
            rep.min_order_multiplicities.push_back(m);
            if (m != k)
                rep.failures.push_back("minimum-order construction for k=" + std::to_string(k) +
                                       " has multiplicity " + std::to_string(m));
        }
    }

    // --- fixture streams (byte comparison with the shipped files) ---
    {
        rep.fixture_lambda1_equal =
            read_file(data_dir + "/stream_lambda1.jsonl") == lambda_minimal_stream(one, 10);
        rep.fixture_sqrt2_equal =
            read_file(data_dir + "/stream_sqrt2.jsonl") == lambda_minimal_stream(sqrt2, 10);
        rep.fixture_mu2_equal =
            read_file(data_dir + "/stream_mu2.jsonl") == l_minimal_stream(two, 0, 12);
        if (!rep.fixture_lambda1_equal)
            rep.failures.push_back("fixture stream mismatch: stream_lambda1.jsonl");
        if (!rep.fixture_sqrt2_equal)
            rep.failures.push_back("fixture stream mismatch: stream_sqrt2.jsonl");
        if (!rep.fixture_mu2_equal)
            rep.failures.push_back("fixture stream mismatch: stream_mu2.jsonl");
    }

    return rep;
}

}  // namespace spectree
