// Sturm sequences over Z[x]: exact counting and isolation of distinct real
// roots.  All interval queries use half-open (lo, hi] semantics, and roots
// that land exactly on an endpoint are handled exactly (no perturbation).
#pragma once

#include <utility>
#include <vector>

#include "spectree/polynomial.hpp"

namespace spectree {

// Sturm chain of a squarefree polynomial; entries are primitive integer
// polynomials whose signs match the rational remainder sequence.
struct SturmChain {
  std::vector<Polynomial> seq;

  explicit SturmChain(const Polynomial& squarefree);
  int variations_at(const Rat& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
};

// Strict bound B (a positive integer) with every real root of p in (-B, B).
Int cauchy_root_bound(const Polynomial& p);

// Number of distinct real roots of p in the half-open interval (lo, hi].
// Works for any nonzero p (multiple roots counted once, endpoint roots
// resolved exactly); lo >= hi yields 0.
int sturm_root_count(const Polynomial& p, const Rat& lo, const Rat& hi);

// Number of distinct real roots of p on the whole line.
int count_real_roots(const Polynomial& p);

// Number of distinct real roots of p in (a, +inf).
int count_real_roots_above(const Polynomial& p, const Rat& a);

// Disjoint isolating intervals (lo, hi], in increasing order, one per
// distinct real root of p.  Interval endpoints are never roots.
std::vector<std::pair<Rat, Rat>> isolate_real_root_intervals(const Polynomial& p);

}  // namespace spectree
