// Dense univariate polynomials: integer-coefficient polynomials (the main
// workhorse, kept in canonical primitive form where noted) and rational-
// coefficient polynomials (used for monic characteristic polynomials and
// arithmetic inside number fields).  Coefficients are stored in ascending
// order of degree; the zero polynomial is the empty vector.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spectree/base.hpp"

namespace spectree {

struct RatPoly;

struct Polynomial {
  std::vector<Int> c;  // c[i] multiplies x^i; empty <=> zero polynomial

  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs) : c(std::move(coeffs)) {
    normalize();
  }
  static Polynomial from_ints(std::vector<long> coeffs);
  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Int& a);
  // den*x - num, the canonical degree-1 polynomial with root num/den.
  static Polynomial linear_with_root(const Rat& r);
  static Polynomial x();  // the monomial x

  void normalize();  // strip trailing zero coefficients
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const Int& lc() const;                // leading coefficient (nonzero poly)
  Int coeff(int i) const;               // 0 outside stored range
  bool operator==(const Polynomial& o) const { return c == o.c; }
  bool operator!=(const Polynomial& o) const { return c != o.c; }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;      // sign of eval(x): -1, 0, +1
  int sign_at_pos_inf() const;          // sign as x -> +inf (0 for zero poly)
  int sign_at_neg_inf() const;

  Polynomial derivative() const;
  Int content() const;                  // gcd of coefficients, >= 0; 0 for zero
  Polynomial primitive_part() const;    // divide by content (sign preserved)
  Polynomial canonical() const;         // primitive with positive leading coeff
  bool is_canonical() const;

  Polynomial shifted_up(int k) const;   // multiply by x^k
  // p(a*x): coefficient i scaled by a^i.
  Polynomial scale_argument(const Int& a) const;
  // p(x^2): spread coefficients with zero gaps.
  Polynomial compose_x_squared() const;

  std::string to_string(const std::string& var = "x") const;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Int& s);

// Exact division: returns q with a == q*b; fails loudly if b is zero or the
// division is not exact over the integers.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
// True (and sets *q when non-null) iff a == q*b for some q in Z[x].
bool try_divide_exact(const Polynomial& a, const Polynomial& b, Polynomial* q);

// Pseudo-remainder with sign control: returns a polynomial with the same sign
// behaviour as the true rational remainder rem(a, b) (the prem multiplier
// lc(b)^k is compensated when it is negative).  Used by Sturm sequences.
Polynomial signed_pseudo_rem(const Polynomial& a, const Polynomial& b);

// GCD over Z[x], returned in canonical form (primitive, positive leading
// coefficient); gcd(0, b) == canonical(b).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'): same distinct roots, all simple.  Canonical form.
Polynomial squarefree_part(const Polynomial& p);

Polynomial poly_pow(const Polynomial& p, unsigned e);

// Largest k such that d^k divides p exactly (d nonconstant); 0 if d does not
// divide p.
int divisibility_order(const Polynomial& p, const Polynomial& d);

// ---------------------------------------------------------------------------
// Rational-coefficient polynomials.
// ---------------------------------------------------------------------------

struct RatPoly {
  std::vector<Rat> c;  // ascending; empty <=> zero

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) {
    normalize();
  }
  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(const Rat& a);
  static RatPoly x();
  static RatPoly from_int_poly(const Polynomial& p);

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rat& lc() const;
  Rat coeff(int i) const;
  bool operator==(const RatPoly& o) const { return c == o.c; }

  Rat eval(const Rat& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;  // divide by leading coefficient (nonzero poly)

  // Writes p as s * P with P an integer polynomial in canonical form
  // (primitive, positive leading coefficient) and s a positive rational.
  std::pair<Polynomial, Rat> to_integer_scaled() const;

  std::string to_string(const std::string& var = "x") const;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const Rat& s);

// Euclidean division over Q[x]: a == q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> rat_divmod(const RatPoly& a, const RatPoly& b);

// Monic gcd over Q[x].
RatPoly rat_gcd(const RatPoly& a, const RatPoly& b);

// Extended Euclid: returns (g, s, t) with s*a + t*b == g, g monic (or zero).
struct RatXgcd {
  RatPoly g, s, t;
};
RatXgcd rat_xgcd(const RatPoly& a, const RatPoly& b);

}  // namespace spectree
