// Minimality tests (nowhere-zero eigenvectors), growth constructions with
// exact eigen-equation checks, exhaustive enumeration filters, and the
// arithmetic facts about norms, determinants, rooted products, and
// subdivisions.
#include "spectree/minimality.hpp"

#include <algorithm>
#include <queue>

#include "spectree/charpoly.hpp"
#include "spectree/enumerate.hpp"

namespace spectree {

namespace {

using NfVec = std::vector<NumberFieldElement>;

// Kernel basis with the char-poly multiplicity cross-checked (the two routes
// must agree for symmetric matrices; disagreement is an internal defect).
KernelBasis checked_kernel(const AcyclicMatrix& m, const AlgebraicNumber& theta, int mult) {
    KernelBasis kb = kernel_basis(m, theta);
    if (kb.dimension() != mult)
        fail(Err::Internal, "kernel dimension disagrees with char-poly multiplicity");
    return kb;
}

bool nowhere_zero(const NfVec& x) {
    for (const NumberFieldElement& c : x)
        if (c.is_zero()) return false;
    return true;
}

// Divides the whole vector by its coordinate at v, making x_v = 1.
NfVec normalized_at(NfVec x, int v) {
    NumberFieldElement inv = x[v].invert();
    for (NumberFieldElement& c : x) c = c * inv;
    return x;
}

// Exact check of A y = lambda y on a tree's adjacency structure.
void check_adjacency_eigen_equation(const Tree& t, const NfVec& y, const AlgebraicNumber& lambda) {
    const FieldPtr& field = y.at(0).field();
    NumberFieldElement th = NumberFieldElement::theta(field);
    if (!field->equals(lambda)) fail(Err::FieldMismatch, "eigen-equation check: field mismatch");
    std::vector<std::vector<int>> adj = t.adjacency();
    for (int v = 0; v < t.n; ++v) {
        NumberFieldElement s = NumberFieldElement::zero(field);
        for (int w : adj[v]) s = s + y[w];
        if (!(th * y[v]).equals(s))
            fail(Err::Internal, "assembled vector violates the eigen-equation");
    }
}

// Exact check of L y = s y on a tree (integer eigenvalue s, rational vector).
void check_laplacian_eigen_equation(const Tree& t, const std::vector<Rat>& y, long s) {
    std::vector<std::vector<int>> adj = t.adjacency();
    for (int v = 0; v < t.n; ++v) {
        Rat lhs = y[v] * static_cast<long>(adj[v].size());
        for (int w : adj[v]) lhs -= y[w];
        if (lhs != y[v] * s)
            fail(Err::Internal, "assembled vector violates the Laplacian eigen-equation");
    }
}

int smallest_index_pendant(const Tree& t) {
    std::vector<std::vector<int>> adj = t.adjacency();
    for (int v = 0; v < t.n; ++v)
        if (adj[v].size() == 1) return v;
    return -1;
}

// Offsets of the vertices of t other than v, in ascending original order.
std::vector<int> copy_offsets(const Tree& t, int v) {
    std::vector<int> off(t.n, -1);
    int idx = 0;
    for (int w = 0; w < t.n; ++w)
        if (w != v) off[w] = idx++;
    return off;
}

Polynomial monic_integer_charpoly(const DenseMatrix& m) {
    CharPoly cp = char_poly_dense(m);
    if (cp.primitive.lc() != 1)
        fail(Err::Internal, "characteristic polynomial of an integer matrix must be monic");
    return cp.primitive;
}

Graph graph_delete_vertex(const Graph& g, int v) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges) {
        if (a == v || b == v) continue;
        edges.emplace_back(a - (a > v ? 1 : 0), b - (b > v ? 1 : 0));
    }
    return Graph(g.n - 1, edges);
}

int lowest_power_of_x(const Polynomial& p) {
    for (std::size_t i = 0; i < p.c.size(); ++i)
        if (p.c[i] != 0) return static_cast<int>(i);
    return 0;
}

Polynomial shifted_down(const Polynomial& p, int k) {
    Polynomial q;
    if (static_cast<int>(p.c.size()) > k)
        q.c.assign(p.c.begin() + k, p.c.end());
    q.normalize();
    return q;
}

}  // namespace

bool is_lambda_minimal(const Tree& t, const AlgebraicNumber& lambda) {
    AcyclicMatrix a = adjacency_matrix(t);
    int mult = multiplicity(a, lambda);
    if (mult != 1) return false;
    KernelBasis kb = checked_kernel(a, lambda, 1);
    return nowhere_zero(kb.vectors[0]);
}

bool is_L_minimal(const CutTree& t, const AlgebraicNumber& mu) {
    AcyclicMatrix l = laplacian_matrix(t);
    int mult = multiplicity(l, mu);
    if (mult != 1) return false;
    KernelBasis kb = checked_kernel(l, mu, 1);
    const NfVec& x = kb.vectors[0];
    if (!nowhere_zero(x)) return false;
    for (const auto& [u, v] : t.tree.edges)
        if (x[u].equals(x[v])) return false;
    return true;
}

std::vector<Tree> enumerate_lambda_minimal(const AlgebraicNumber& lambda, int n_max) {
    std::vector<Tree> out;
    for (const Tree& t : enumerate_trees(n_max))
        if (is_lambda_minimal(t, lambda)) out.push_back(t);
    return out;
}

std::vector<CutTree> enumerate_L_minimal(const AlgebraicNumber& mu, int k, int n_max) {
    std::vector<CutTree> out;
    for (const CutTree& t : enumerate_cut_trees(n_max, k))
        if (is_L_minimal(t, mu)) out.push_back(t);
    return out;
}

Tree grow_minimal(const Tree& t, int v, int k, const AlgebraicNumber& lambda) {
    if (lambda.is_zero()) fail(Err::LambdaZero, "grow_minimal: lambda must be nonzero");
    if (k < 2) fail(Err::Internal, "grow_minimal: k must be >= 2");
    if (v < 0 || v >= t.n) fail(Err::InvalidVertex, "grow_minimal: v out of range");
    std::vector<std::vector<int>> adj = t.adjacency();
    if (adj[v].size() != 1) fail(Err::NotPendant, "grow_minimal: v is not a pendant vertex");
    if (!is_lambda_minimal(t, lambda))
        fail(Err::NotMinimal, "grow_minimal: t is not lambda-minimal");
    const int u = adj[v][0];

    AcyclicMatrix a = adjacency_matrix(t);
    KernelBasis kb = checked_kernel(a, lambda, 1);
    NfVec x = normalized_at(kb.vectors[0], v);
    const FieldPtr& field = kb.field;

    const int n1 = t.n - 1;
    const int copies = 2 * k - 1;           // first k carry +x, rest carry -x
    const int pendant_base = 1 + copies * n1;
    const int order = pendant_base + 2 * (k - 1);
    std::vector<int> off = copy_offsets(t, v);
    auto copy_index = [&](int c, int w) { return 1 + c * n1 + off[w]; };

    std::vector<std::pair<int, int>> edges;
    NfVec y(order, NumberFieldElement::zero(field));
    y[0] = NumberFieldElement::one(field);  // the shared copy of v
    for (int c = 0; c < copies; ++c) {
        bool positive = c < k;
        for (const auto& [p, q] : t.edges) {
            if (p == v || q == v) continue;
            edges.emplace_back(copy_index(c, p), copy_index(c, q));
        }
        edges.emplace_back(0, copy_index(c, u));
        for (int w = 0; w < t.n; ++w) {
            if (w == v) continue;
            y[copy_index(c, w)] = positive ? x[w] : -x[w];
        }
        if (!positive) {
            // Two new pendant leaves of value -1 on this copy's u vertex.
            int j = c - k;
            for (int b = 0; b < 2; ++b) {
                int leaf = pendant_base + 2 * j + b;
                edges.emplace_back(copy_index(c, u), leaf);
                y[leaf] = -NumberFieldElement::one(field);
            }
        }
    }

    Tree result(order, edges);
    check_adjacency_eigen_equation(result, y, lambda);
    if (!is_lambda_minimal(result, lambda))
        fail(Err::MinimalityViolation, "grow_minimal: constructed tree failed the minimality test");
    return result;
}

Tree grow_minimal_alt(const Tree& t, int v, const AlgebraicNumber& lambda) {
    if (v < 0 || v >= t.n) fail(Err::InvalidVertex, "grow_minimal_alt: v out of range");
    std::vector<std::vector<int>> adj = t.adjacency();
    if (adj[v].size() != 1) fail(Err::NotPendant, "grow_minimal_alt: v is not a pendant vertex");

    FieldPtr field = std::make_shared<const AlgebraicNumber>(lambda);
    NumberFieldElement th = NumberFieldElement::theta(field);
    NumberFieldElement psq = th * th + NumberFieldElement::from_rational(field, Rat(2));
    if (!psq.is_rational_constant())
        fail(Err::NonIntegralPendantCount, "grow_minimal_alt: lambda^2 + 2 is not rational");
    Rat pr = psq.rational_constant();
    if (!rat_is_integer(pr) || pr < 0)
        fail(Err::NonIntegralPendantCount,
             "grow_minimal_alt: lambda^2 + 2 is not a nonnegative integer");
    const long p = rat_num(pr).get_si();

    if (!is_lambda_minimal(t, lambda))
        fail(Err::NotMinimal, "grow_minimal_alt: t is not lambda-minimal");
    const int u = adj[v][0];

    AcyclicMatrix a = adjacency_matrix(t);
    KernelBasis kb = checked_kernel(a, lambda, 1);
    NfVec x = normalized_at(kb.vectors[0], v);

    // Layout: 0 and 1 are the two identified v-vertices (value 1), 2 is the
    // center (value -lambda); four copies of t - v follow, then p new
    // pendant leaves of value -1 on the center.
    const int n1 = t.n - 1;
    const int copy_base = 3;
    const int pendant_base = copy_base + 4 * n1;
    const int order = pendant_base + static_cast<int>(p);
    std::vector<int> off = copy_offsets(t, v);
    auto copy_index = [&](int c, int w) { return copy_base + c * n1 + off[w]; };

    std::vector<std::pair<int, int>> edges;
    NfVec y(order, NumberFieldElement::zero(field));
    y[0] = NumberFieldElement::one(field);
    y[1] = NumberFieldElement::one(field);
    y[2] = -th;
    edges.emplace_back(0, 2);
    edges.emplace_back(1, 2);
    for (int c = 0; c < 4; ++c) {
        int junction = c < 2 ? 0 : 1;
        for (const auto& [pp, qq] : t.edges) {
            if (pp == v || qq == v) continue;
            edges.emplace_back(copy_index(c, pp), copy_index(c, qq));
        }
        edges.emplace_back(junction, copy_index(c, u));
        for (int w = 0; w < t.n; ++w) {
            if (w == v) continue;
            y[copy_index(c, w)] = x[w];
        }
    }
    for (long j = 0; j < p; ++j) {
        int leaf = pendant_base + static_cast<int>(j);
        edges.emplace_back(2, leaf);
        y[leaf] = -NumberFieldElement::one(field);
    }

    Tree result(order, edges);
    check_adjacency_eigen_equation(result, y, lambda);
    if (!is_lambda_minimal(result, lambda))
        fail(Err::MinimalityViolation,
             "grow_minimal_alt: constructed tree failed the minimality test");
    return result;
}

Tree grow_L_minimal(const Tree& t, long s) {
    if (s <= 1) fail(Err::SOutOfRange, "grow_L_minimal: s must be an integer > 1");
    if (t.n < 2) fail(Err::NotPendant, "grow_L_minimal: t has no pendant vertex");
    AlgebraicNumber mu = AlgebraicNumber::from_rational(Rat(s));
    AcyclicMatrix l = laplacian_matrix(t);
    int mult = multiplicity(l, mu);
    if (mult < 1) fail(Err::NotAnEigenvalue, "grow_L_minimal: s is not a Laplacian eigenvalue of t");
    if (mult != 1)
        fail(Err::StructureViolation,
             "grow_L_minimal: integer Laplacian eigenvalue > 1 with multiplicity != 1");
    KernelBasis kb = checked_kernel(l, mu, 1);
    if (!nowhere_zero(kb.vectors[0]))
        fail(Err::StructureViolation,
             "grow_L_minimal: eigenvector of an integer eigenvalue > 1 has a zero coordinate");

    const int v = smallest_index_pendant(t);
    const int u = t.adjacency()[v][0];
    NfVec xf = normalized_at(kb.vectors[0], v);
    // Everything lives in a degree-1 field; work with plain rationals.
    std::vector<Rat> x(t.n);
    for (int w = 0; w < t.n; ++w) {
        if (!xf[w].is_rational_constant())
            fail(Err::Internal, "grow_L_minimal: rational eigenvector expected");
        x[w] = xf[w].rational_constant();
    }

    // Layout: center 0 (value 1+s), junctions 1..s+1 (value 1), then two
    // copies of t - v per junction (values copied from x).
    const int n1 = t.n - 1;
    const int junctions = static_cast<int>(s) + 1;
    const int copy_base = 1 + junctions;
    const int order = copy_base + 2 * junctions * n1;
    std::vector<int> off = copy_offsets(t, v);
    auto copy_index = [&](int c, int w) { return copy_base + c * n1 + off[w]; };

    std::vector<std::pair<int, int>> edges;
    std::vector<Rat> y(order);
    y[0] = Rat(1 + s);
    for (int j = 0; j < junctions; ++j) {
        edges.emplace_back(0, 1 + j);
        y[1 + j] = Rat(1);
        for (int b = 0; b < 2; ++b) {
            int c = 2 * j + b;
            for (const auto& [pp, qq] : t.edges) {
                if (pp == v || qq == v) continue;
                edges.emplace_back(copy_index(c, pp), copy_index(c, qq));
            }
            edges.emplace_back(1 + j, copy_index(c, u));
            for (int w = 0; w < t.n; ++w) {
                if (w == v) continue;
                y[copy_index(c, w)] = x[w];
            }
        }
    }

    Tree result(order, edges);
    check_laplacian_eigen_equation(result, y, s);
    if (!is_L_minimal(CutTree(result, std::vector<int>(order, 0)), mu))
        fail(Err::MinimalityViolation,
             "grow_L_minimal: constructed tree failed the L-minimality test");
    return result;
}

NormDivisibilityReport check_norm_divisibility(const Graph& g, const AlgebraicNumber& mu) {
    if (!g.is_connected()) fail(Err::Internal, "check_norm_divisibility: graph must be connected");
    if (mu.is_zero()) fail(Err::ZeroEigenvalue, "check_norm_divisibility: mu must be nonzero");

    CharPoly cp = char_poly_dense(laplacian_dense(g));
    int m = multiplicity(cp, mu);
    if (m == 0)
        fail(Err::NotAnEigenvalue, "check_norm_divisibility: mu is not a Laplacian eigenvalue");

    NormDivisibilityReport rep;
    rep.n = Int(g.n);
    rep.tree_count = spanning_tree_count(g);
    rep.m = m;
    Rat norm = mu.norm();
    if (!rat_is_integer(norm))
        fail(Err::Internal, "check_norm_divisibility: norm of a Laplacian eigenvalue must be "
                            "a rational integer");
    rep.norm = rat_num(norm);

    Int target = rep.n * rep.tree_count;
    Int norm_power = int_pow(rep.norm, static_cast<unsigned long>(m));
    rep.norm_power_divides =
        mpz_divisible_p(target.get_mpz_t(), norm_power.get_mpz_t()) != 0;
    if (!rep.norm_power_divides)
        fail(Err::StructureViolation,
             "check_norm_divisibility: Norm(mu)^m does not divide n * spanning_tree_count");

    rep.is_tree = static_cast<int>(g.edges.size()) == g.n - 1;
    if (rep.is_tree) {
        rep.norm_divides_n = mpz_divisible_p(rep.n.get_mpz_t(), rep.norm.get_mpz_t()) != 0;
        if (!rep.norm_divides_n)
            fail(Err::StructureViolation,
                 "check_norm_divisibility: Norm(mu) does not divide n for a tree");
        Tree t = tree_from_graph(g);
        KernelBasis kb = checked_kernel(laplacian_matrix(t), mu, m);
        bool nz = true;
        for (int u = 0; u < t.n && nz; ++u) {
            bool all_zero = true;
            for (const NfVec& vec : kb.vectors)
                if (!vec[u].is_zero()) {
                    all_zero = false;
                    break;
                }
            if (all_zero) nz = false;
        }
        rep.kernel_nowhere_zero = nz;
        rep.multiplicity_one = m == 1;
        if (rep.norm > 1) {
            if (!rep.multiplicity_one)
                fail(Err::StructureViolation,
                     "check_norm_divisibility: Norm(mu) > 1 on a tree with multiplicity != 1");
            if (!rep.kernel_nowhere_zero)
                fail(Err::StructureViolation,
                     "check_norm_divisibility: Norm(mu) > 1 on a tree with a kernel zero");
        }
    }
    return rep;
}

Rat det_one_cut_tree(const CutTree& t) {
    if (t.total_half_edges() != 1)
        fail(Err::WrongHalfEdgeCount, "det_one_cut_tree: exactly one half-edge required");
    return determinant(dense_of(laplacian_matrix(t)));
}

bool is_totally_minimal(const Tree& t) {
    if (t.n == 1) return true;  // deleting the vertex leaves an empty spectrum
    AcyclicMatrix a = adjacency_matrix(t);
    Polynomial phi = char_poly(a).primitive;
    for (int v = 0; v < t.n; ++v) {
        Polynomial phi_v = char_poly(delete_vertex(a, v)).primitive;
        if (poly_gcd(phi, phi_v).degree() > 0) return false;
    }
    return true;
}

Polynomial rooted_product_charpoly(const Graph& g, const Graph& h, int root) {
    if (root < 0 || root >= h.n)
        fail(Err::InvalidVertex, "rooted_product_charpoly: root out of range");
    if (!h.is_connected()) fail(Err::NotATree, "rooted_product_charpoly: h must be connected");

    Polynomial chi_g = monic_integer_charpoly(adjacency_dense(g));
    Polynomial phi_h = monic_integer_charpoly(adjacency_dense(h));
    Polynomial phi_hr = h.n == 1 ? Polynomial::constant(1)
                                 : monic_integer_charpoly(adjacency_dense(graph_delete_vertex(h, root)));

    const int n = chi_g.degree();
    std::vector<Polynomial> ph(n + 1), pr(n + 1);
    ph[0] = Polynomial::constant(1);
    pr[0] = Polynomial::constant(1);
    for (int i = 1; i <= n; ++i) {
        ph[i] = ph[i - 1] * phi_h;
        pr[i] = pr[i - 1] * phi_hr;
    }
    Polynomial result;
    for (int i = 0; i <= n; ++i) {
        Int a = chi_g.coeff(i);
        if (a == 0) continue;
        result = result + ph[i] * pr[n - i] * a;
    }
    return result;
}

std::pair<Tree, Tree> totally_minimal_products(const Tree& t) {
    if (!is_totally_minimal(t))
        fail(Err::NotTotallyMinimal, "totally_minimal_products: t is not totally minimal");
    Tree with_p2 = rooted_product(t, Tree::path(2), 0);
    Tree with_p4 = rooted_product(t, Tree::path(4), 1);
    if (!is_totally_minimal(with_p2) || !is_totally_minimal(with_p4))
        fail(Err::StructureViolation,
             "totally_minimal_products: a rooted product of a totally minimal tree failed the "
             "total-minimality test");
    return {with_p2, with_p4};
}

bool verify_subdivision_identity(const Graph& g) {
    const int n = g.n;
    const int m = static_cast<int>(g.edges.size());
    Polynomial phi_s = monic_integer_charpoly(adjacency_dense(subdivision(g)));
    Polynomial phi_q = monic_integer_charpoly(signless_laplacian(g));

    Polynomial lhs = phi_s.shifted_up(n);
    Polynomial rhs = phi_q.compose_x_squared().shifted_up(m);
    int common = std::min(lowest_power_of_x(lhs), lowest_power_of_x(rhs));
    return shifted_down(lhs, common) == shifted_down(rhs, common);
}

Tree min_order_multiplicity_k(MinKind kind, const AlgebraicNumber& value, int k,
                              const CutTree& piece) {
    if (k < 2) fail(Err::Internal, "min_order_multiplicity_k: k must be >= 2");
    int attach = 0;
    if (kind == MinKind::Adjacency) {
        if (piece.total_half_edges() != 0)
            fail(Err::WrongHalfEdgeCount,
                 "min_order_multiplicity_k: adjacency piece must have no half-edges");
        if (!is_lambda_minimal(piece.tree, value))
            fail(Err::PieceNotMinimal, "min_order_multiplicity_k: piece is not lambda-minimal");
        attach = 0;
    } else {
        if (piece.total_half_edges() != 1)
            fail(Err::WrongHalfEdgeCount,
                 "min_order_multiplicity_k: laplacian piece must have exactly one half-edge");
        if (!is_L_minimal(piece, value))
            fail(Err::PieceNotMinimal, "min_order_multiplicity_k: piece is not mu-L-minimal");
        for (int w = 0; w < piece.n(); ++w)
            if (piece.half_edges[w] == 1) attach = w;
    }

    const int np = piece.n();
    const int order = 1 + (k + 1) * np;
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j <= k; ++j) {
        int base = 1 + j * np;
        for (const auto& [p, q] : piece.tree.edges) edges.emplace_back(base + p, base + q);
        edges.emplace_back(0, base + attach);
    }
    Tree result(order, edges);

    AcyclicMatrix mm = kind == MinKind::Adjacency ? adjacency_matrix(result)
                                                  : laplacian_matrix(result);
    if (multiplicity(mm, value) != k)
        fail(Err::StructureViolation,
             "min_order_multiplicity_k: constructed tree does not have multiplicity k");
    return result;
}

// Declared with the eigen-structure interfaces; lives here because it leans
// on the L-minimality test.
std::vector<CutTree> laplacian_decompose(const CutTree& t, const AlgebraicNumber& mu,
                                         const std::vector<NumberFieldElement>& x) {
    const int n = t.n();
    if (static_cast<int>(x.size()) != n)
        fail(Err::Internal, "laplacian_decompose: eigenvector length mismatch");
    for (const NumberFieldElement& c : x)
        if (c.is_zero()) fail(Err::ZeroCoordinate, "laplacian_decompose: x has a zero coordinate");
    const FieldPtr& field = x[0].field();
    if (!field) fail(Err::FieldMismatch, "laplacian_decompose: x has no attached field");
    if (!field->equals(mu))
        fail(Err::FieldMismatch, "laplacian_decompose: x does not live in Q(mu)");

    // Exact eigenvector check against the cut-tree Laplacian.
    AcyclicMatrix l = laplacian_matrix(t);
    NumberFieldElement th = NumberFieldElement::theta(field);
    NfVec lx(n, NumberFieldElement::zero(field));
    for (int i = 0; i < n; ++i) lx[i] = x[i].scaled(l.diag[i]);
    for (const AcyclicMatrix::WEdge& e : l.edges) {
        lx[e.u] = lx[e.u] + x[e.v].scaled(e.w);
        lx[e.v] = lx[e.v] + x[e.u].scaled(e.w);
    }
    for (int i = 0; i < n; ++i)
        if (!lx[i].equals(th * x[i]))
            fail(Err::NotAnEigenvalue, "laplacian_decompose: x is not a mu-eigenvector");

    // Delete every equal-value edge outright (component diagonals drop by one
    // at the cut ends, which is exactly what keeps the restriction of x a
    // mu-eigenvector); original half-edges stay with their vertices.
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : t.tree.edges) {
        if (x[u].equals(x[v])) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<int>> comps = connected_components(n, adj);

    std::vector<CutTree> out;
    for (const std::vector<int>& comp : comps) {
        std::vector<int> back(n, -1);
        for (std::size_t i = 0; i < comp.size(); ++i) back[comp[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> comp_edges;
        for (const auto& [u, v] : t.tree.edges)
            if (back[u] >= 0 && back[v] >= 0 && !x[u].equals(x[v]))
                comp_edges.emplace_back(back[u], back[v]);
        std::vector<int> he(comp.size(), 0);
        for (std::size_t i = 0; i < comp.size(); ++i) he[i] = t.half_edges[comp[i]];
        CutTree c(Tree(static_cast<int>(comp.size()), comp_edges), he);
        if (!is_L_minimal(c, mu))
            fail(Err::MinimalityViolation,
                 "laplacian_decompose: a component failed the mu-L-minimality test");
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace spectree
