// Exact kernels over Q(theta) by Gaussian elimination, nodal sets and the
// structure forest, the two multiplicity formulas, zero-pattern multiplicity
// counts, vertex classification, and the verified Min/Zero/Link decomposition.
#include "spectree/eigenstructure.hpp"

#include <algorithm>
#include <cstddef>
#include <queue>
#include <set>

#include "spectree/charpoly.hpp"

namespace spectree {

namespace {

using NfVec = std::vector<NumberFieldElement>;
using NfMat = std::vector<NfVec>;

// Total bit size of the rational coefficients of a field element; used to
// pick elimination pivots that damp expression swell.
std::size_t nf_bits(const NumberFieldElement& a) {
    std::size_t total = 0;
    for (const Rat& q : a.coeffs()) {
        total += mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
        total += mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    }
    return total;
}

// M - theta * I as a dense matrix over Q(theta).
NfMat shifted_matrix(const AcyclicMatrix& m, const FieldPtr& field) {
    const NumberFieldElement th = NumberFieldElement::theta(field);
    NfMat a(m.n, NfVec(m.n, NumberFieldElement::zero(field)));
    for (int i = 0; i < m.n; ++i)
        a[i][i] = NumberFieldElement::from_rational(field, m.diag[i]) - th;
    for (const AcyclicMatrix::WEdge& e : m.edges) {
        NumberFieldElement w = NumberFieldElement::from_rational(field, e.w);
        a[e.u][e.v] = w;
        a[e.v][e.u] = w;
    }
    return a;
}

int first_nonzero_index(const NfVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

// Vertices where every basis vector vanishes (the common zero set).
std::vector<char> common_zero_mask(int n, const KernelBasis& kb) {
    std::vector<char> in_n(n, 1);
    for (const NfVec& vec : kb.vectors)
        for (int u = 0; u < n; ++u)
            if (!vec[u].is_zero()) in_n[u] = 0;
    return in_n;
}

// Connected components of the subgraph on `alive` vertices using the given
// edge list; components ordered by smallest member, members ascending.
std::vector<std::vector<int>> masked_components(
    int n, const std::vector<std::pair<int, int>>& edges, const std::vector<char>& alive) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        if (!alive[u] || !alive[v]) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::pair<int, int>> sorted_edge_pairs(const AcyclicMatrix& m) {
    std::vector<std::pair<int, int>> out;
    out.reserve(m.edges.size());
    for (const AcyclicMatrix::WEdge& e : m.edges) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

KernelBasis kernel_basis(const AcyclicMatrix& m, const AlgebraicNumber& theta) {
    const int n = m.n;
    FieldPtr field = std::make_shared<const AlgebraicNumber>(theta);
    NfMat a = shifted_matrix(m, field);

    std::vector<int> pivot_row_of_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int best = -1;
        std::size_t best_bits = 0;
        for (int r = rank; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            std::size_t b = nf_bits(a[r][col]);
            if (best < 0 || b < best_bits) {
                best = r;
                best_bits = b;
            }
        }
        if (best < 0) continue;
        std::swap(a[rank], a[best]);
        NumberFieldElement inv = a[rank][col].invert();
        for (int j = col; j < n; ++j) a[rank][j] = a[rank][j] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            NumberFieldElement f = a[r][col];
            for (int j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[rank][j];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }

    KernelBasis kb;
    kb.field = field;
    for (int col = 0; col < n; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        NfVec v(n, NumberFieldElement::zero(field));
        v[col] = NumberFieldElement::one(field);
        for (int j = 0; j < n; ++j) {
            int r = pivot_row_of_col[j];
            if (r >= 0 && !a[r][col].is_zero()) v[j] = -a[r][col];
        }
        int k = first_nonzero_index(v);
        NumberFieldElement inv = v[k].invert();
        for (NumberFieldElement& x : v) x = x * inv;
        kb.vectors.push_back(std::move(v));
    }
    std::stable_sort(kb.vectors.begin(), kb.vectors.end(),
                     [](const NfVec& x, const NfVec& y) {
                         return first_nonzero_index(x) < first_nonzero_index(y);
                     });
    return kb;
}

std::vector<NumberFieldElement> generic_eigenvector(const AcyclicMatrix& m,
                                                    const AlgebraicNumber& theta) {
    const int n = m.n;
    KernelBasis kb = kernel_basis(m, theta);
    const int k = kb.dimension();
    if (k == 0) fail(Err::NotAnEigenvalue, "generic_eigenvector: trivial kernel");
    std::vector<char> in_n = common_zero_mask(n, kb);

    // x(t) = sum t^(i-1) b_i; each vertex outside the common zero set rules
    // out at most k-1 values of t, so some t <= (k-1)*n + 1 always succeeds.
    for (long t = 1;; ++t) {
        NfVec x(n, NumberFieldElement::zero(kb.field));
        Rat tp(1);
        for (int i = 0; i < k; ++i) {
            for (int u = 0; u < n; ++u) x[u] = x[u] + kb.vectors[i][u].scaled(tp);
            tp *= t;
        }
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (!in_n[u] && x[u].is_zero()) ok = false;
        if (ok) return x;
    }
}

NodalSets nodal_sets(const AcyclicMatrix& m, const AlgebraicNumber& theta) {
    const int n = m.n;
    NodalSets ns;
    std::vector<std::pair<int, int>> edges = sorted_edge_pairs(m);

    KernelBasis kb = kernel_basis(m, theta);
    std::vector<char> in_n;
    if (kb.dimension() == 0) {
        ns.not_eigenvalue = true;
        in_n.assign(n, 1);
    } else {
        in_n = common_zero_mask(n, kb);
    }

    std::vector<char> interior(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int u = 0; u < n; ++u) {
        if (!in_n[u]) continue;
        bool all_in = true;
        for (int w : adj[u])
            if (!in_n[w]) {
                all_in = false;
                break;
            }
        interior[u] = all_in ? 1 : 0;
    }

    for (int u = 0; u < n; ++u) {
        if (in_n[u]) ns.N.push_back(u);
        if (interior[u]) ns.N_interior.push_back(u);
        if (in_n[u] && !interior[u]) ns.boundary.push_back(u);
        if (!interior[u]) ns.F_vertices.push_back(u);
    }
    std::vector<char> alive(n, 0);
    for (int u : ns.F_vertices) alive[u] = 1;
    for (const auto& e : edges) {
        if (in_n[e.first] && in_n[e.second])
            ns.E_interior.push_back(e);
        else
            ns.F_edges.push_back(e);
    }
    ns.c = static_cast<int>(masked_components(n, ns.F_edges, alive).size());
    return ns;
}

int forest_degree(const NodalSets& ns, int v) {
    int d = 0;
    for (const auto& e : ns.F_edges)
        if (e.first == v || e.second == v) ++d;
    return d;
}

int multiplicity_by_degree_formula(const AcyclicMatrix& m, const AlgebraicNumber& theta) {
    NodalSets ns = nodal_sets(m, theta);
    if (ns.not_eigenvalue) return 0;
    int value = ns.c;
    for (int u : ns.boundary) value += forest_degree(ns, u) - 2;
    return value;
}

int multiplicity_by_component_formula(const AcyclicMatrix& m, const AlgebraicNumber& theta) {
    NodalSets ns = nodal_sets(m, theta);
    if (ns.not_eigenvalue) return 0;
    std::vector<char> alive(m.n, 0);
    for (int u : ns.F_vertices) alive[u] = 1;
    for (int u : ns.boundary) alive[u] = 0;
    int comps = static_cast<int>(masked_components(m.n, ns.F_edges, alive).size());
    return comps - static_cast<int>(ns.boundary.size());
}

FiedlerReport fiedler_multiplicity(const AcyclicMatrix& m,
                                   const std::vector<NumberFieldElement>& y) {
    const int n = m.n;
    if (static_cast<int>(y.size()) != n)
        fail(Err::Internal, "fiedler_multiplicity: vector length mismatch");

    int base = -1;
    for (int i = 0; i < n; ++i)
        if (!y[i].is_zero()) {
            base = i;
            break;
        }
    if (base < 0) fail(Err::NotAnEigenvalue, "fiedler_multiplicity: zero vector");
    const FieldPtr& field = y[base].field();

    // (M y)_i, then the eigenvalue candidate from the first nonzero coordinate.
    NfVec my(n, NumberFieldElement::zero(field));
    for (int i = 0; i < n; ++i) my[i] = y[i].scaled(m.diag[i]);
    for (const AcyclicMatrix::WEdge& e : m.edges) {
        my[e.u] = my[e.u] + y[e.v].scaled(e.w);
        my[e.v] = my[e.v] + y[e.u].scaled(e.w);
    }
    NumberFieldElement th = my[base] / y[base];
    for (int i = 0; i < n; ++i)
        if (!my[i].equals(th * y[i]))
            fail(Err::NotAnEigenvalue, "fiedler_multiplicity: not an eigenvector");

    std::vector<int> degree(n, 0);
    for (const AcyclicMatrix::WEdge& e : m.edges) {
        ++degree[e.u];
        ++degree[e.v];
        if (y[e.u].is_zero() && y[e.v].is_zero())
            fail(Err::AdjacentZeros, "fiedler_multiplicity: adjacent zero coordinates");
    }

    FiedlerReport rep;
    for (int i = 0; i < n; ++i)
        if (y[i].is_zero()) ++rep.s[degree[i]];
    std::vector<std::pair<int, int>> edges = sorted_edge_pairs(m);
    rep.c = static_cast<int>(masked_components(n, edges, std::vector<char>(n, 1)).size());
    rep.value = rep.c;
    for (const auto& [k, count] : rep.s) rep.value += (k - 2) * count;
    return rep;
}

const char* vertex_class_name(VertexClass c) {
    switch (c) {
        case VertexClass::ParterWiener: return "ParterWiener";
        case VertexClass::Downer: return "Downer";
        case VertexClass::Neutral: return "Neutral";
    }
    return "?";
}

VertexClass classify_vertex(const AcyclicMatrix& m, const AlgebraicNumber& theta, int v) {
    if (v < 0 || v >= m.n) fail(Err::InvalidVertex, "classify_vertex: vertex out of range");
    int base = multiplicity(m, theta);
    int deleted = m.n == 1 ? 0 : multiplicity(delete_vertex(m, v), theta);
    switch (deleted - base) {
        case +1: return VertexClass::ParterWiener;
        case -1: return VertexClass::Downer;
        case 0: return VertexClass::Neutral;
    }
    fail(Err::Internal, "classify_vertex: vertex deletion changed multiplicity by more than 1");
}

Decomposition decompose(const AcyclicMatrix& m, const AlgebraicNumber& theta) {
    const int n = m.n;
    if (multiplicity(m, theta) < 1)
        fail(Err::NotAnEigenvalue, "decompose: theta is not an eigenvalue");

    NodalSets ns = nodal_sets(m, theta);
    NfVec x = generic_eigenvector(m, theta);
    std::vector<std::pair<int, int>> edges = sorted_edge_pairs(m);

    Decomposition d;
    d.link_vertices = ns.boundary;
    std::vector<char> is_link(n, 0);
    for (int u : d.link_vertices) is_link[u] = 1;

    std::vector<char> alive(n, 1);
    for (int u : d.link_vertices) alive[u] = 0;
    std::vector<std::vector<int>> pieces = masked_components(n, edges, alive);

    std::vector<int> piece_of(n, -1), min_index_of_piece(pieces.size(), -1);
    for (std::size_t p = 0; p < pieces.size(); ++p)
        for (int u : pieces[p]) piece_of[u] = static_cast<int>(p);

    for (std::size_t p = 0; p < pieces.size(); ++p) {
        const std::vector<int>& piece = pieces[p];
        AcyclicMatrix sub = submatrix_keep(m, piece);
        int mult = multiplicity(sub, theta);
        bool nowhere_zero = true;
        for (int u : piece)
            if (x[u].is_zero()) {
                nowhere_zero = false;
                break;
            }
        if (mult == 1 && nowhere_zero) {
            min_index_of_piece[p] = static_cast<int>(d.min_pieces.size());
            d.min_pieces.push_back(piece);
        } else if (mult == 0) {
            d.zero_pieces.push_back(piece);
        } else {
            fail(Err::StructureViolation,
                 "decompose: a piece is neither Min (multiplicity 1, nowhere-zero) nor Zero "
                 "(multiplicity 0)");
        }
    }

    // Every link vertex must see at least two distinct Min pieces.
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v : d.link_vertices) {
        std::set<int> min_neighbors;
        for (int w : adj[v]) {
            if (is_link[w]) continue;
            int p = piece_of[w];
            if (p >= 0 && min_index_of_piece[p] >= 0) min_neighbors.insert(p);
        }
        if (min_neighbors.size() < 2)
            fail(Err::StructureViolation,
                 "decompose: a link vertex is adjacent to fewer than two Min pieces");
    }

    // Partition sanity: links plus pieces cover every vertex exactly once.
    std::vector<int> cover(n, 0);
    for (int u : d.link_vertices) ++cover[u];
    for (const auto& piece : pieces)
        for (int u : piece) ++cover[u];
    for (int u = 0; u < n; ++u)
        if (cover[u] != 1) fail(Err::StructureViolation, "decompose: parts do not partition V");

    return d;
}

}  // namespace spectree
