// Exact characteristic polynomials and determinants.
#include "spectree/charpoly.hpp"

#include <algorithm>

namespace spectree {

namespace {

CharPoly from_monic_ratpoly(const RatPoly& monic, int n) {
  if (monic.degree() != n || monic.lc() != 1) {
    fail(Err::Internal, "characteristic polynomial must be monic of degree n");
  }
  auto [prim, scale] = monic.to_integer_scaled();
  (void)scale;
  return CharPoly{prim};
}

// Pendant recursion on one component, rooted anywhere inside it.  For vertex v
// with children c: P_v = (x - d_v) * prod P_c - sum_c w_vc^2 * Q_c * prod_{c'!=c} P_c',
// Q_v = prod_c P_c, where P is the char poly of the subtree and Q of the
// subtree minus its root.
struct TreeDP {
  const std::vector<std::vector<std::pair<int, Rat>>>& adj;
  const std::vector<Rat>& diag;
  std::vector<RatPoly> P, Q;
  std::vector<int> parent;

  TreeDP(int n, const std::vector<std::vector<std::pair<int, Rat>>>& adj_,
         const std::vector<Rat>& diag_)
      : adj(adj_),
        diag(diag_),
        P(static_cast<size_t>(n)),
        Q(static_cast<size_t>(n)),
        parent(static_cast<size_t>(n), -2) {}

  RatPoly run(int root) {
    // Iterative post-order.
    std::vector<int> order;
    std::vector<int> stack = {root};
    parent[static_cast<size_t>(root)] = -1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (const auto& [w, wt] : adj[static_cast<size_t>(v)]) {
        if (parent[static_cast<size_t>(w)] == -2) {
          parent[static_cast<size_t>(w)] = v;
          stack.push_back(w);
        }
      }
    }
    for (size_t i = order.size(); i-- > 0;) {
      int v = order[i];
      std::vector<int> kids;
      std::vector<Rat> wts;
      for (const auto& [w, wt] : adj[static_cast<size_t>(v)]) {
        if (w != parent[static_cast<size_t>(v)]) {
          kids.push_back(w);
          wts.push_back(wt);
        }
      }
      RatPoly x_minus_d(std::vector<Rat>{-diag[static_cast<size_t>(v)], Rat(1)});
      if (kids.empty()) {
        P[static_cast<size_t>(v)] = x_minus_d;
        Q[static_cast<size_t>(v)] = RatPoly::constant(Rat(1));
        continue;
      }
      size_t k = kids.size();
      // prefix[i] = prod of P over kids[0..i), suffix[i] = prod over kids[i..k)
      std::vector<RatPoly> prefix(k + 1), suffix(k + 1);
      prefix[0] = RatPoly::constant(Rat(1));
      for (size_t j = 0; j < k; ++j) {
        prefix[j + 1] = prefix[j] * P[static_cast<size_t>(kids[j])];
      }
      suffix[k] = RatPoly::constant(Rat(1));
      for (size_t j = k; j-- > 0;) {
        suffix[j] = suffix[j + 1] * P[static_cast<size_t>(kids[j])];
      }
      RatPoly acc = x_minus_d * prefix[k];
      for (size_t j = 0; j < k; ++j) {
        Rat w2 = wts[j] * wts[j];
        RatPoly others = prefix[j] * suffix[j + 1];
        acc = acc - (Q[static_cast<size_t>(kids[j])] * others) * w2;
      }
      P[static_cast<size_t>(v)] = std::move(acc);
      Q[static_cast<size_t>(v)] = prefix[k];
    }
    return P[static_cast<size_t>(root)];
  }
};

}  // namespace

CharPoly char_poly(const AcyclicMatrix& m) {
  auto wadj = m.adjacency();
  std::vector<std::vector<int>> plain(static_cast<size_t>(m.n));
  for (int v = 0; v < m.n; ++v) {
    for (const auto& [w, wt] : wadj[static_cast<size_t>(v)]) {
      plain[static_cast<size_t>(v)].push_back(w);
    }
  }
  RatPoly total = RatPoly::constant(Rat(1));
  TreeDP dp(m.n, wadj, m.diag);
  for (const auto& comp : connected_components(m.n, plain)) {
    total = total * dp.run(comp[0]);
  }
  return from_monic_ratpoly(total, m.n);
}

namespace {

// Bareiss determinant over Z[x] of the matrix xI*scale... more precisely of
// an arbitrary matrix of integer polynomials whose leading principal minors
// are all nonzero (true for xI - N: they are characteristic polynomials).
Polynomial bareiss_det(std::vector<std::vector<Polynomial>>& b) {
  size_t n = b.size();
  Polynomial prev = Polynomial::constant(Int(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (b[k][k].is_zero()) fail(Err::Internal, "zero pivot in Bareiss");
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial num = b[i][j] * b[k][k] - b[i][k] * b[k][j];
        b[i][j] = divide_exact(num, prev);
      }
    }
    prev = b[k][k];
  }
  return b[n - 1][n - 1];
}

}  // namespace

CharPoly char_poly_dense(const DenseMatrix& m) {
  if (m.n <= 0) fail(Err::EmptyGraph, "char poly of empty matrix");
  // Clear denominators: with N = l*M (integer), det(xI - M) = l^-n psi(l x)
  // where psi(y) = det(yI - N).
  Int l(1);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      l = int_lcm(l, rat_den(m.at(i, j)));
    }
  }
  std::vector<std::vector<Polynomial>> b(
      static_cast<size_t>(m.n), std::vector<Polynomial>(static_cast<size_t>(m.n)));
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      Rat scaled = m.at(i, j) * Rat(l);
      if (!rat_is_integer(scaled)) fail(Err::Internal, "denominator clearing failed");
      Int nij = rat_num(scaled);
      std::vector<Int> coeffs = {-nij};
      if (i == j) coeffs.push_back(l);  // diagonal carries l*x - n_ij... see below
      b[static_cast<size_t>(i)][static_cast<size_t>(j)] = Polynomial(std::move(coeffs));
    }
  }
  // The matrix built above is (l*x)I - N evaluated symbolically: psi(l x).
  // Its determinant equals l^n det(xI - M), already monic-scaled by l^n; so
  // det(xI - M) = bareiss / l^n, which the primitive normalization absorbs.
  Polynomial det = bareiss_det(b);
  RatPoly monic;
  {
    RatPoly d = RatPoly::from_int_poly(det);
    Rat inv_ln = make_rat(Int(1), int_pow(l, static_cast<unsigned long>(m.n)));
    monic = d * inv_ln;
  }
  return from_monic_ratpoly(monic, m.n);
}

int multiplicity(const CharPoly& cp, const AlgebraicNumber& theta) {
  return divisibility_order(cp.primitive, theta.minpoly());
}

int multiplicity(const AcyclicMatrix& m, const AlgebraicNumber& theta) {
  return multiplicity(char_poly(m), theta);
}

Rat determinant(const DenseMatrix& m) {
  if (m.n <= 0) fail(Err::EmptyGraph, "determinant of empty matrix");
  Int l(1);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      l = int_lcm(l, rat_den(m.at(i, j)));
    }
  }
  // Integer Bareiss on l*M; det(M) = det(lM) / l^n.
  std::vector<std::vector<Int>> b(static_cast<size_t>(m.n),
                                  std::vector<Int>(static_cast<size_t>(m.n)));
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      Rat scaled = m.at(i, j) * Rat(l);
      b[static_cast<size_t>(i)][static_cast<size_t>(j)] = rat_num(scaled);
    }
  }
  int sign = 1;
  Int prev(1);
  size_t n = static_cast<size_t>(m.n);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (b[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && b[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Rat(0);  // singular: column of zeros below
      std::swap(b[k], b[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        b[i][j] = int_divexact(b[i][j] * b[k][k] - b[i][k] * b[k][j], prev);
      }
    }
    prev = b[k][k];
  }
  Rat det = make_rat(b[n - 1][n - 1], int_pow(l, static_cast<unsigned long>(m.n)));
  return sign > 0 ? det : Rat(-det);
}

Int spanning_tree_count(const Graph& g) {
  if (g.n == 1) return Int(1);
  DenseMatrix lap = laplacian_dense(g);
  // Delete the last row and column, take the determinant.
  DenseMatrix red = DenseMatrix::zero(g.n - 1);
  for (int i = 0; i + 1 < g.n; ++i) {
    for (int j = 0; j + 1 < g.n; ++j) {
      red.at(i, j) = lap.at(i, j);
    }
  }
  Rat d = determinant(red);
  if (!rat_is_integer(d)) fail(Err::Internal, "spanning tree count not integral");
  return rat_num(d);
}

}  // namespace spectree
