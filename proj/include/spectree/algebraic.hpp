// Exact real algebraic numbers: an irreducible canonical minimal polynomial
// plus a rational isolating interval (lo, hi] containing exactly one real
// root.  Values are immutable; refinement returns new values.  Rationals are
// carried with a degree-1 minimal polynomial.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spectree/factor.hpp"
#include "spectree/polynomial.hpp"
#include "spectree/sturm.hpp"

namespace spectree {

class AlgebraicNumber {
 public:
  // The number 0 (minpoly x).
  AlgebraicNumber();

  // Validating constructor: canonicalizes minpoly, verifies irreducibility
  // and that (lo, hi] isolates exactly one real root.
  AlgebraicNumber(const Polynomial& minpoly, const Rat& lo, const Rat& hi);

  static AlgebraicNumber from_rational(const Rat& q);

  // Internal fast path: caller guarantees the invariants hold.
  struct Trusted {};
  AlgebraicNumber(Trusted, Polynomial minpoly, Rat lo, Rat hi)
      : f_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  const Polynomial& minpoly() const { return f_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  int degree() const { return f_.degree(); }
  bool is_rational() const { return f_.degree() == 1; }
  Rat rational_value() const;  // requires is_rational()
  bool is_zero() const;
  int sign() const;  // -1, 0, +1

  // Product of all conjugates: (-1)^d * f(0) / lc(f).
  Rat norm() const;

  // Double approximation (display only; never used in exact paths).
  double approx() const;

  // Total order on real algebraic numbers; decidable and exact.
  static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
  bool equals(const AlgebraicNumber& o) const { return compare(*this, o) == 0; }
  bool operator==(const AlgebraicNumber& o) const { return equals(o); }
  bool operator!=(const AlgebraicNumber& o) const { return !equals(o); }
  bool operator<(const AlgebraicNumber& o) const { return compare(*this, o) < 0; }

  std::string to_string() const;

 private:
  Polynomial f_;  // canonical irreducible
  Rat lo_, hi_;   // unique root of f_ in (lo_, hi_]
};

// Same root, interval of length <= width (width > 0).
AlgebraicNumber refine_interval(const AlgebraicNumber& a, const Rat& width);

// Distinct real roots of p, ascending, each tagged with its multiplicity in p
// and carrying the canonical irreducible factor it roots.
std::vector<std::pair<AlgebraicNumber, int>> isolate_real_roots(const Polynomial& p);

// All roots real / all roots real and positive.  p must be irreducible
// (canonical form is applied internally); otherwise NotIrreducible.
bool is_totally_real(const Polynomial& p);
bool is_totally_positive(const Polynomial& p);

using FieldPtr = std::shared_ptr<const AlgebraicNumber>;

// ---------------------------------------------------------------------------
// Elements of the number field Q(theta): residue classes modulo the defining
// minimal polynomial, stored as rational coefficient vectors of fixed length
// deg(minpoly).
// ---------------------------------------------------------------------------

class NumberFieldElement {
 public:
  NumberFieldElement() = default;  // detached zero (no field); invalid for ops

  static NumberFieldElement zero(const FieldPtr& field);
  static NumberFieldElement one(const FieldPtr& field);
  static NumberFieldElement theta(const FieldPtr& field);  // the root itself
  static NumberFieldElement from_rational(const FieldPtr& field, const Rat& q);
  static NumberFieldElement from_ratpoly(const FieldPtr& field, const RatPoly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  bool equals(const NumberFieldElement& o) const;
  bool operator==(const NumberFieldElement& o) const { return equals(o); }
  bool operator!=(const NumberFieldElement& o) const { return !equals(o); }

  NumberFieldElement operator+(const NumberFieldElement& o) const;
  NumberFieldElement operator-(const NumberFieldElement& o) const;
  NumberFieldElement operator-() const;
  NumberFieldElement operator*(const NumberFieldElement& o) const;
  NumberFieldElement invert() const;  // DivisionByZero on 0
  NumberFieldElement operator/(const NumberFieldElement& o) const;
  NumberFieldElement scaled(const Rat& s) const;

  // True when the element is a rational constant (all higher coeffs zero).
  bool is_rational_constant() const;
  Rat rational_constant() const;

  double approx() const;  // display only
  std::string to_string() const;

 private:
  NumberFieldElement(FieldPtr field, std::vector<Rat> c)
      : field_(std::move(field)), c_(std::move(c)) {}
  static void check_same_field(const NumberFieldElement& a,
                               const NumberFieldElement& b);

  FieldPtr field_;
  std::vector<Rat> c_;
};

// Named entry points mirroring the operation table.
inline NumberFieldElement nf_add(const NumberFieldElement& a,
                                 const NumberFieldElement& b) {
  return a + b;
}
inline NumberFieldElement nf_sub(const NumberFieldElement& a,
                                 const NumberFieldElement& b) {
  return a - b;
}
inline NumberFieldElement nf_mul(const NumberFieldElement& a,
                                 const NumberFieldElement& b) {
  return a * b;
}
inline NumberFieldElement nf_invert(const NumberFieldElement& a) {
  return a.invert();
}
inline bool nf_equals(const NumberFieldElement& a, const NumberFieldElement& b) {
  return a.equals(b);
}

}  // namespace spectree
