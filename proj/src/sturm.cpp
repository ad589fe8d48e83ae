// Sturm-sequence root counting and isolation.
#include "spectree/sturm.hpp"

#include <algorithm>

namespace spectree {

SturmChain::SturmChain(const Polynomial& squarefree) {
  if (squarefree.is_zero()) fail(Err::ZeroPolynomial, "Sturm chain of zero");
  seq.push_back(squarefree);
  if (squarefree.degree() == 0) return;
  seq.push_back(squarefree.derivative());
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    Polynomial r = signed_pseudo_rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    // Negate (Sturm recurrence) and strip the positive content; both keep
    // the sign pattern that the rational remainder sequence would have.
    r = -r;
    seq.push_back(r.primitive_part());
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const Polynomial& p : seq) signs.push_back(p.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const Polynomial& p : seq) signs.push_back(p.sign_at_pos_inf());
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const Polynomial& p : seq) signs.push_back(p.sign_at_neg_inf());
  return count_variations(signs);
}

Int cauchy_root_bound(const Polynomial& p) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "root bound of zero");
  if (p.degree() == 0) return Int(1);
  Int maxc(0);
  for (size_t i = 0; i + 1 < p.c.size(); ++i) {
    Int a = int_abs(p.c[i]);
    if (a > maxc) maxc = a;
  }
  Int lead = int_abs(p.lc());
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

namespace {

// Removes the factor (den*x - num) once; the argument must be squarefree and
// vanish at r.
Polynomial strip_rational_root(const Polynomial& s, const Rat& r) {
  return divide_exact(s, Polynomial::linear_with_root(r)).canonical();
}

}  // namespace

int sturm_root_count(const Polynomial& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "root count of zero");
  if (!(lo < hi)) return 0;
  Polynomial s = squarefree_part(p);
  int extra = 0;
  if (s.degree() >= 1 && s.sign_at(hi) == 0) {
    s = strip_rational_root(s, hi);
    extra = 1;
  }
  if (s.degree() >= 1 && s.sign_at(lo) == 0) {
    s = strip_rational_root(s, lo);
  }
  if (s.degree() < 1) return extra;
  SturmChain chain(s);
  return chain.variations_at(lo) - chain.variations_at(hi) + extra;
}

int count_real_roots(const Polynomial& p) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "root count of zero");
  Polynomial s = squarefree_part(p);
  if (s.degree() < 1) return 0;
  SturmChain chain(s);
  return chain.variations_at_neg_inf() - chain.variations_at_pos_inf();
}

int count_real_roots_above(const Polynomial& p, const Rat& a) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "root count of zero");
  Polynomial s = squarefree_part(p);
  if (s.degree() >= 1 && s.sign_at(a) == 0) {
    s = strip_rational_root(s, a);
  }
  if (s.degree() < 1) return 0;
  SturmChain chain(s);
  return chain.variations_at(a) - chain.variations_at_pos_inf();
}

std::vector<std::pair<Rat, Rat>> isolate_real_root_intervals(const Polynomial& p) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "isolation of zero");
  std::vector<std::pair<Rat, Rat>> out;
  Polynomial s = squarefree_part(p);
  if (s.degree() < 1) return out;
  SturmChain chain(s);
  Int bound = cauchy_root_bound(s);
  Rat lo(-bound), hi(bound);

  struct Node {
    Rat a, b;
    int va, vb;
  };
  std::vector<Node> stack;
  stack.push_back({lo, hi, chain.variations_at(lo), chain.variations_at(hi)});
  while (!stack.empty()) {
    Node nd = stack.back();
    stack.pop_back();
    int count = nd.va - nd.vb;
    if (count <= 0) continue;
    if (count == 1) {
      out.emplace_back(nd.a, nd.b);
      continue;
    }
    Rat m = (nd.a + nd.b) / 2;
    // Split points must avoid roots so every stack endpoint stays sign-definite;
    // walk toward the left endpoint until the value is nonzero.
    while (s.sign_at(m) == 0) m = (nd.a + m) / 2;
    int vm = chain.variations_at(m);
    stack.push_back({nd.a, m, nd.va, vm});
    stack.push_back({m, nd.b, vm, nd.vb});
  }
  std::sort(out.begin(), out.end(),
            [](const std::pair<Rat, Rat>& x, const std::pair<Rat, Rat>& y) {
              return x.first < y.first;
            });
  return out;
}

}  // namespace spectree
