// Factorization of integer polynomials into irreducibles over the rationals
// (modular factoring + Hensel lifting + subset recombination).  Output factors
// are canonical (primitive, positive leading coefficient) and deterministic
// across runs.
#pragma once

#include <utility>
#include <vector>

#include "spectree/polynomial.hpp"

namespace spectree {

// Irreducible factors of p with multiplicities, sorted by (degree, coefficient
// sequence).  The product of factor^mult equals p up to a rational constant.
// Constants factor to the empty list; the zero polynomial is an error.
std::vector<std::pair<Polynomial, int>> factor_over_rationals(const Polynomial& p);

// True iff the primitive part of p is irreducible over Q (degree >= 1).
bool is_irreducible(const Polynomial& p);

}  // namespace spectree
