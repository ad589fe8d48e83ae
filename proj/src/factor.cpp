// Rational factorization pipeline: squarefree reduction, factoring modulo a
// well-chosen prime (distinct-degree + equal-degree splitting), quadratic
// Hensel lifting to a power of the prime past the coefficient bound, and
// subset recombination with exact trial division.
#include "spectree/factor.hpp"

#include <algorithm>
#include <cstdint>

namespace spectree {
namespace {

// ---------------------------------------------------------------------------
// Deterministic pseudo-random stream (splitmix64) for equal-degree splitting.
// ---------------------------------------------------------------------------

struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
};

// ---------------------------------------------------------------------------
// Polynomials over F_p for a word-sized odd prime p (p^2 fits in int64).
// Coefficients ascending, reduced to [0, p), trailing zeros stripped.
// ---------------------------------------------------------------------------

using PolyP = std::vector<long>;

void ptrim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long scalar_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(Err::Internal, "scalar inverse mod p failed");
  return t < 0 ? t + p : t;
}

PolyP psub(const PolyP& a, const PolyP& b, long p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
  ptrim(r);
  return r;
}

PolyP pmul(const PolyP& a, const PolyP& b, long p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  ptrim(r);
  return r;
}

PolyP pscale(const PolyP& a, long s, long p) {
  PolyP r = a;
  for (long& x : r) x = (x * (s % p)) % p;
  ptrim(r);
  return r;
}

PolyP pmonic(const PolyP& a, long p) {
  if (a.empty()) return a;
  return pscale(a, scalar_inv(a.back(), p), p);
}

// Remainder of a by b (b nonzero).
PolyP prem(const PolyP& a, const PolyP& b, long p) {
  if (b.empty()) fail(Err::DivisionByZero, "mod-p division by zero");
  PolyP r = a;
  long binv = scalar_inv(b.back(), p);
  while (r.size() >= b.size()) {
    long coef = (r.back() * binv) % p;
    size_t shift = r.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) {
      r[shift + j] = (r[shift + j] - coef * b[j] % p + p) % p;
    }
    ptrim(r);
    if (r.size() < b.size()) break;
  }
  return r;
}

PolyP pgcd(PolyP a, PolyP b, long p) {
  while (!b.empty()) {
    PolyP r = prem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

PolyP pderiv(const PolyP& a, long p) {
  PolyP r;
  if (a.size() <= 1) return r;
  r.resize(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = (a[i] * static_cast<long>(i % static_cast<size_t>(p))) % p;
  }
  ptrim(r);
  return r;
}

// base^e mod f, with an arbitrary-precision exponent.
PolyP ppowmod(const PolyP& base, const Int& e, const PolyP& f, long p) {
  PolyP result = {1};
  PolyP b = prem(base, f, p);
  size_t nbits = (e == 0) ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nbits; i-- > 0;) {
    result = prem(pmul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      result = prem(pmul(result, b, p), f, p);
    }
  }
  return result;
}

// Extended Euclid over F_p[x]: s*a + t*b == g (g monic).
void pxgcd(const PolyP& a, const PolyP& b, long p, PolyP* g, PolyP* s, PolyP* t) {
  PolyP r0 = a, r1 = b;
  PolyP s0 = {1}, s1 = {};
  PolyP t0 = {}, t1 = {1};
  while (!r1.empty()) {
    // Compute quotient alongside the remainder.
    PolyP q;
    {
      PolyP r = r0;
      long binv = scalar_inv(r1.back(), p);
      if (r.size() >= r1.size()) q.assign(r.size() - r1.size() + 1, 0);
      while (r.size() >= r1.size()) {
        long coef = (r.back() * binv) % p;
        size_t shift = r.size() - r1.size();
        q[shift] = coef;
        for (size_t j = 0; j < r1.size(); ++j) {
          r[shift + j] = (r[shift + j] - coef * r1[j] % p + p) % p;
        }
        ptrim(r);
        if (r.size() < r1.size()) break;
      }
      PolyP r2 = std::move(r);
      r0 = std::move(r1);
      r1 = std::move(r2);
    }
    PolyP s2 = psub(s0, pmul(q, s1, p), p);
    PolyP t2 = psub(t0, pmul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  long inv = r0.empty() ? 1 : scalar_inv(r0.back(), p);
  *g = pscale(r0, inv, p);
  *s = pscale(s0, inv, p);
  *t = pscale(t0, inv, p);
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree g whose
// irreducible factors all have degree d.
void equal_degree_split(const PolyP& g, int d, long p, Rng& rng,
                        std::vector<PolyP>* out) {
  int deg = static_cast<int>(g.size()) - 1;
  if (deg == d) {
    out->push_back(g);
    return;
  }
  Int exponent = (int_pow(Int(p), static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    PolyP a(static_cast<size_t>(deg), 0);
    for (long& x : a) x = rng.below(p);
    ptrim(a);
    if (a.size() <= 1) continue;
    PolyP t = pgcd(a, g, p);
    if (t.size() > 1 && t.size() < g.size()) {
      equal_degree_split(t, d, p, rng, out);
      PolyP rest = g;
      // g / t: exact division via repeated elimination.
      {
        PolyP q;
        PolyP r = g;
        long binv = scalar_inv(t.back(), p);
        q.assign(r.size() - t.size() + 1, 0);
        while (r.size() >= t.size()) {
          long coef = (r.back() * binv) % p;
          size_t shift = r.size() - t.size();
          q[shift] = coef;
          for (size_t j = 0; j < t.size(); ++j) {
            r[shift + j] = (r[shift + j] - coef * t[j] % p + p) % p;
          }
          ptrim(r);
          if (r.size() < t.size()) break;
        }
        rest = q;
      }
      equal_degree_split(pmonic(rest, p), d, p, rng, out);
      return;
    }
    PolyP b = ppowmod(a, exponent, g, p);
    PolyP bm1 = psub(b, PolyP{1}, p);
    t = pgcd(bm1, g, p);
    if (t.size() > 1 && t.size() < g.size()) {
      equal_degree_split(t, d, p, rng, out);
      PolyP q;
      {
        PolyP r = g;
        long binv = scalar_inv(t.back(), p);
        q.assign(r.size() - t.size() + 1, 0);
        while (r.size() >= t.size()) {
          long coef = (r.back() * binv) % p;
          size_t shift = r.size() - t.size();
          q[shift] = coef;
          for (size_t j = 0; j < t.size(); ++j) {
            r[shift + j] = (r[shift + j] - coef * t[j] % p + p) % p;
          }
          ptrim(r);
          if (r.size() < t.size()) break;
        }
      }
      equal_degree_split(pmonic(q, p), d, p, rng, out);
      return;
    }
  }
}

// Full factorization of a monic squarefree f over F_p into monic irreducibles.
std::vector<PolyP> factor_mod_p(PolyP f, long p, Rng& rng) {
  std::vector<PolyP> out;
  PolyP x = {0, 1};
  PolyP h = x;
  int d = 0;
  while (static_cast<int>(f.size()) - 1 >= 2 * (d + 1)) {
    ++d;
    h = ppowmod(h, Int(p), f, p);
    PolyP g = pgcd(psub(h, x, p), f, p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, &out);
      // f /= g
      PolyP q;
      {
        PolyP r = f;
        long binv = scalar_inv(g.back(), p);
        q.assign(r.size() - g.size() + 1, 0);
        while (r.size() >= g.size()) {
          long coef = (r.back() * binv) % p;
          size_t shift = r.size() - g.size();
          q[shift] = coef;
          for (size_t j = 0; j < g.size(); ++j) {
            r[shift + j] = (r[shift + j] - coef * g[j] % p + p) % p;
          }
          ptrim(r);
          if (r.size() < g.size()) break;
        }
      }
      f = pmonic(q, p);
      h = prem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials with big-integer coefficients reduced mod M (M a prime power).
// ---------------------------------------------------------------------------

using PolyZ = std::vector<Int>;

void ztrim(PolyZ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Int zmod(const Int& a, const Int& M) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t());  // result in [0, M)
  return r;
}

PolyZ zreduce(const PolyZ& a, const Int& M) {
  PolyZ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = zmod(a[i], M);
  ztrim(r);
  return r;
}

PolyZ zadd(const PolyZ& a, const PolyZ& b, const Int& M) {
  PolyZ r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = zmod(r[i] + b[i], M);
  ztrim(r);
  return r;
}

PolyZ zsub(const PolyZ& a, const PolyZ& b, const Int& M) {
  PolyZ r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = zmod(r[i] - b[i], M);
  ztrim(r);
  return r;
}

PolyZ zmul(const PolyZ& a, const PolyZ& b, const Int& M) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  return zreduce(r, M);
}

// Division by a monic divisor h over Z/M: a == q*h + r with deg r < deg h.
void zdivmod_monic(const PolyZ& a, const PolyZ& h, const Int& M, PolyZ* q,
                   PolyZ* r) {
  if (h.empty() || h.back() != 1) fail(Err::Internal, "divisor must be monic");
  PolyZ rem = a;
  PolyZ quot;
  if (rem.size() >= h.size()) quot.assign(rem.size() - h.size() + 1, Int(0));
  while (rem.size() >= h.size()) {
    Int coef = rem.back();
    size_t shift = rem.size() - h.size();
    quot[shift] = coef;
    for (size_t j = 0; j < h.size(); ++j) {
      rem[shift + j] = zmod(rem[shift + j] - coef * h[j], M);
    }
    ztrim(rem);
    if (rem.size() < h.size()) break;
  }
  *q = zreduce(quot, M);
  *r = std::move(rem);
}

// One quadratic Hensel step: lifts (g, h, s, t) from modulus m to m^2
// while keeping f == g*h and s*g + t*h == 1, with h monic throughout.
void hensel_step(const Int& m, const PolyZ& f, PolyZ& g, PolyZ& h, PolyZ& s,
                 PolyZ& t) {
  Int M = m * m;
  PolyZ e = zsub(zreduce(f, M), zmul(g, h, M), M);
  PolyZ q, r;
  zdivmod_monic(zmul(s, e, M), h, M, &q, &r);
  PolyZ g1 = zadd(g, zadd(zmul(t, e, M), zmul(q, g, M), M), M);
  PolyZ h1 = zadd(h, r, M);
  PolyZ b = zsub(zadd(zmul(s, g1, M), zmul(t, h1, M), M), PolyZ{Int(1)}, M);
  PolyZ c, d;
  zdivmod_monic(zmul(s, b, M), h1, M, &c, &d);
  PolyZ s1 = zsub(s, d, M);
  PolyZ t1 = zsub(t, zadd(zmul(t, b, M), zmul(c, g1, M), M), M);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

PolyZ from_modp(const PolyP& a) {
  PolyZ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Int(a[i]);
  return r;
}

// Lifts the factorization f == prod(facs) (mod p) to mod p^K >= targetM.
// f must be monic and squarefree mod p; all factors monic mod p.
std::vector<PolyZ> hensel_lift_tree(const PolyZ& f, const std::vector<PolyP>& facs,
                                    long p, const Int& targetM) {
  if (facs.size() == 1) {
    return {zreduce(f, targetM)};
  }
  size_t half = facs.size() / 2;
  std::vector<PolyP> left(facs.begin(), facs.begin() + static_cast<long>(half));
  std::vector<PolyP> right(facs.begin() + static_cast<long>(half), facs.end());
  PolyP g0 = {1}, h0 = {1};
  for (const PolyP& a : left) g0 = pmul(g0, a, p);
  for (const PolyP& a : right) h0 = pmul(h0, a, p);
  PolyP gg, ss, tt;
  pxgcd(g0, h0, p, &gg, &ss, &tt);
  if (gg.size() != 1) fail(Err::Internal, "modular factors not coprime");

  PolyZ g = from_modp(g0), h = from_modp(h0);
  PolyZ s = from_modp(ss), t = from_modp(tt);
  Int m(p);
  while (m < targetM) {
    hensel_step(m, f, g, h, s, t);
    m = m * m;
  }
  g = zreduce(g, targetM);
  h = zreduce(h, targetM);
  if (g.empty() || g.back() != 1 || h.empty() || h.back() != 1) {
    fail(Err::Internal, "Hensel lift lost monicity");
  }
  std::vector<PolyZ> out = hensel_lift_tree(g, left, p, targetM);
  std::vector<PolyZ> more = hensel_lift_tree(h, right, p, targetM);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

// Symmetric representative in (-M/2, M/2].
Int symmetric_rep(const Int& a, const Int& M) {
  Int r = zmod(a, M);
  if (2 * r > M) r -= M;
  return r;
}

Polynomial to_symmetric_poly(const PolyZ& a, const Int& M) {
  std::vector<Int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = symmetric_rep(a[i], M);
  return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Zassenhaus driver for a squarefree primitive polynomial with nonzero
// constant term and positive leading coefficient.
// ---------------------------------------------------------------------------

std::vector<Polynomial> zassenhaus_squarefree(const Polynomial& s) {
  const int n = s.degree();
  if (n == 1) return {s.canonical()};

  // Monicize: G(x) = lc^(n-1) * s(x/lc) is monic with integer coefficients.
  const Int& l = s.lc();
  Polynomial G;
  G.c.resize(s.c.size());
  for (int i = 0; i <= n; ++i) {
    G.c[static_cast<size_t>(i)] =
        s.c[static_cast<size_t>(i)] * int_pow(l, static_cast<unsigned long>(n - 1 - i >= 0 ? n - 1 - i : 0));
  }
  // The leading entry above got multiplied by l^(-1)'s placeholder; fix it:
  G.c[static_cast<size_t>(n)] = Int(1);
  G.normalize();

  // Pick an odd prime p with G squarefree mod p.
  Int pz(65537);
  long p = 0;
  PolyP Gp;
  for (;;) {
    p = static_cast<long>(pz.get_si());
    Gp.assign(G.c.size(), 0);
    for (size_t i = 0; i < G.c.size(); ++i) {
      Int r = zmod(G.c[i], pz);
      Gp[i] = static_cast<long>(r.get_si());
    }
    ptrim(Gp);
    if (static_cast<int>(Gp.size()) - 1 == n) {
      PolyP d = pderiv(Gp, p);
      if (!d.empty() && pgcd(Gp, d, p).size() == 1) break;
    }
    mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
  }

  Rng rng(0x5eed5eedULL + static_cast<uint64_t>(n));
  std::vector<PolyP> modular = factor_mod_p(pmonic(Gp, p), p, rng);
  std::sort(modular.begin(), modular.end());
  if (modular.size() == 1) return {s.canonical()};

  // Coefficient bound for monic divisors of G (Mignotte-style), and the
  // lifting modulus p^K > 2*bound.
  Int norm2(0);
  for (const Int& a : G.c) norm2 += a * a;
  Int bound = int_pow(Int(2), static_cast<unsigned long>(n)) * int_sqrt_ceil(norm2) + 1;
  Int targetM(p);
  while (targetM <= 2 * bound) targetM *= p;

  PolyZ Gz(G.c.begin(), G.c.end());
  std::vector<PolyZ> lifted = hensel_lift_tree(zreduce(Gz, targetM), modular, p, targetM);

  // Subset recombination with exact trial division over Z[x].
  std::vector<int> active(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) active[i] = static_cast<int>(i);
  Polynomial Grem = G;
  std::vector<Polynomial> monic_factors;

  size_t sz = 1;
  while (2 * sz <= active.size()) {
    bool found = false;
    std::vector<size_t> idx(sz);
    for (size_t i = 0; i < sz; ++i) idx[i] = i;
    for (;;) {
      PolyZ prod = {Int(1)};
      for (size_t i : idx) {
        prod = zmul(prod, lifted[static_cast<size_t>(active[i])], targetM);
      }
      Polynomial cand = to_symmetric_poly(prod, targetM);
      if (!cand.is_zero() && cand.coeff(0) != 0) {
        Int g0 = Grem.coeff(0);
        Int c0 = cand.coeff(0);
        Int rem0;
        mpz_tdiv_r(rem0.get_mpz_t(), g0.get_mpz_t(), c0.get_mpz_t());
        if (rem0 == 0) {
          Polynomial quot;
          if (try_divide_exact(Grem, cand, &quot)) {
            monic_factors.push_back(cand);
            Grem = quot;
            std::vector<int> next_active;
            for (size_t i = 0, k = 0; i < active.size(); ++i) {
              if (k < idx.size() && idx[k] == i) {
                ++k;
                continue;
              }
              next_active.push_back(active[i]);
            }
            active = std::move(next_active);
            found = true;
            break;
          }
        }
      }
      // Next sz-combination.
      size_t i = sz;
      while (i-- > 0) {
        if (idx[i] != i + active.size() - sz) {
          ++idx[i];
          for (size_t j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          idx.clear();
          break;
        }
      }
      if (idx.empty()) break;
    }
    if (!found) ++sz;
  }
  if (Grem.degree() > 0) monic_factors.push_back(Grem);

  // Map the monic factors of G back to factors of s.
  std::vector<Polynomial> out;
  out.reserve(monic_factors.size());
  for (const Polynomial& F : monic_factors) {
    out.push_back(F.scale_argument(l).canonical());
  }
  return out;
}

bool factor_order(const std::pair<Polynomial, int>& a,
                  const std::pair<Polynomial, int>& b) {
  if (a.first.degree() != b.first.degree()) {
    return a.first.degree() < b.first.degree();
  }
  const auto& ca = a.first.c;
  const auto& cb = b.first.c;
  for (size_t i = ca.size(); i-- > 0;) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return a.second < b.second;
}

}  // namespace

std::vector<std::pair<Polynomial, int>> factor_over_rationals(const Polynomial& p) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "factor of zero");
  std::vector<std::pair<Polynomial, int>> result;
  if (p.degree() == 0) return result;
  Polynomial f = p.canonical();
  Polynomial s = squarefree_part(f);

  // Strip a root at zero so the Zassenhaus driver sees a nonzero constant term.
  if (s.coeff(0) == 0) {
    Polynomial x = Polynomial::x();
    result.emplace_back(x, divisibility_order(f, x));
    s = divide_exact(s, x).canonical();
  }
  if (s.degree() >= 1) {
    std::vector<Polynomial> irr = zassenhaus_squarefree(s);
    for (Polynomial& q : irr) {
      int mult = divisibility_order(f, q);
      if (mult <= 0) fail(Err::Internal, "factor does not divide input");
      result.emplace_back(std::move(q), mult);
    }
  }
  std::sort(result.begin(), result.end(), factor_order);
  return result;
}

bool is_irreducible(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) return false;
  auto factors = factor_over_rationals(p);
  return factors.size() == 1 && factors[0].second == 1 &&
         factors[0].first.degree() == p.degree();
}

}  // namespace spectree
