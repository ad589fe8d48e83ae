// Algebraic numbers and number-field arithmetic.
#include "spectree/algebraic.hpp"

#include <sstream>

namespace spectree {

AlgebraicNumber::AlgebraicNumber()
    : f_(Polynomial::x()), lo_(Rat(-1)), hi_(Rat(0)) {}

AlgebraicNumber::AlgebraicNumber(const Polynomial& minpoly, const Rat& lo,
                                 const Rat& hi) {
  if (minpoly.is_zero()) fail(Err::ZeroPolynomial, "minimal polynomial is zero");
  Polynomial f = minpoly.canonical();
  if (f.degree() < 1 || !is_irreducible(f)) {
    fail(Err::NotIrreducible, "minimal polynomial must be irreducible");
  }
  if (!(lo < hi) || sturm_root_count(f, lo, hi) != 1) {
    fail(Err::ParseError, "interval does not isolate exactly one root of " +
                              f.to_string());
  }
  f_ = std::move(f);
  lo_ = lo;
  hi_ = hi;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& q) {
  return AlgebraicNumber(Trusted{}, Polynomial::linear_with_root(q),
                         Rat(q - 1), q);
}

Rat AlgebraicNumber::rational_value() const {
  if (f_.degree() != 1) fail(Err::Internal, "not a rational value");
  return make_rat(-f_.c[0], f_.c[1]);
}

bool AlgebraicNumber::is_zero() const {
  return f_.degree() == 1 && f_.c[0] == 0;
}

int AlgebraicNumber::sign() const {
  if (is_rational()) return sgn(rational_value());
  // Degree >= 2: the root is irrational, in particular nonzero, and rational
  // interval endpoints are never roots; bisect until zero is excluded.
  Rat lo = lo_, hi = hi_;
  int slo = f_.sign_at(lo);
  for (;;) {
    if (lo >= 0) return 1;
    if (hi <= 0) return -1;
    Rat m = (lo + hi) / 2;
    int sm = f_.sign_at(m);
    if (sm == slo) {
      lo = m;
      slo = sm;
    } else {
      hi = m;
    }
  }
}

Rat AlgebraicNumber::norm() const {
  Rat v = make_rat(f_.coeff(0), f_.lc());
  return (f_.degree() % 2 == 1) ? Rat(-v) : v;
}

double AlgebraicNumber::approx() const {
  AlgebraicNumber r = refine_interval(*this, make_rat(Int(1), int_pow(Int(2), 60)));
  Rat mid = (r.lo_ + r.hi_) / 2;
  return mid.get_d();
}

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) {
    Rat x = a.rational_value(), y = b.rational_value();
    return x < y ? -1 : (x == y ? 0 : 1);
  }
  const bool same_poly = (a.f_ == b.f_);
  Rat alo = a.lo_, ahi = a.hi_, blo = b.lo_, bhi = b.hi_;
  auto bisect = [](const Polynomial& f, Rat& lo, Rat& hi) {
    if (f.degree() == 1) {
      Rat v = make_rat(-f.c[0], f.c[1]);
      Rat w = (hi - lo) / 4;
      lo = v - w;
      hi = v;
      return;
    }
    Rat m = (lo + hi) / 2;
    if (f.sign_at(m) == f.sign_at(lo)) {
      lo = m;
    } else {
      hi = m;
    }
  };
  for (;;) {
    if (ahi <= blo) return -1;  // a <= ahi <= blo < b
    if (bhi <= alo) return 1;
    if (same_poly) {
      // Overlapping intervals for roots of the same irreducible: they are
      // equal exactly when the union still isolates a single root.
      Rat ulo = alo < blo ? alo : blo;
      Rat uhi = ahi > bhi ? ahi : bhi;
      if (sturm_root_count(a.f_, ulo, uhi) == 1) return 0;
    }
    bisect(a.f_, alo, ahi);
    bisect(b.f_, blo, bhi);
  }
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return rat_to_string(rational_value());
  std::ostringstream os;
  os << "root of " << f_.to_string() << " in (" << rat_to_string(lo_) << ", "
     << rat_to_string(hi_) << "]";
  return os.str();
}

AlgebraicNumber refine_interval(const AlgebraicNumber& a, const Rat& width) {
  if (!(width > 0)) fail(Err::ParseError, "refinement width must be positive");
  if (a.is_rational()) {
    Rat v = a.rational_value();
    Rat half = width / 2;
    return AlgebraicNumber(AlgebraicNumber::Trusted{}, a.minpoly(),
                           Rat(v - half), v);
  }
  Rat lo = a.lo(), hi = a.hi();
  const Polynomial& f = a.minpoly();
  int slo = f.sign_at(lo);
  while (hi - lo > width) {
    Rat m = (lo + hi) / 2;
    int sm = f.sign_at(m);
    if (sm == slo) {
      lo = m;
      slo = sm;
    } else {
      hi = m;
    }
  }
  return AlgebraicNumber(AlgebraicNumber::Trusted{}, f, lo, hi);
}

std::vector<std::pair<AlgebraicNumber, int>> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "root isolation of zero");
  std::vector<std::pair<AlgebraicNumber, int>> out;
  for (const auto& [irr, mult] : factor_over_rationals(p)) {
    if (irr.degree() == 1) {
      out.emplace_back(AlgebraicNumber::from_rational(make_rat(-irr.c[0], irr.c[1])),
                       mult);
      continue;
    }
    for (const auto& [lo, hi] : isolate_real_root_intervals(irr)) {
      out.emplace_back(AlgebraicNumber(AlgebraicNumber::Trusted{}, irr, lo, hi),
                       mult);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const std::pair<AlgebraicNumber, int>& x,
               const std::pair<AlgebraicNumber, int>& y) {
              return AlgebraicNumber::compare(x.first, y.first) < 0;
            });
  return out;
}

bool is_totally_real(const Polynomial& p) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "totally-real test of zero");
  Polynomial f = p.canonical();
  if (f.degree() < 1 || !is_irreducible(f)) {
    fail(Err::NotIrreducible, "totally-real test needs an irreducible input");
  }
  return count_real_roots(f) == f.degree();
}

bool is_totally_positive(const Polynomial& p) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "totally-positive test of zero");
  Polynomial f = p.canonical();
  if (f.degree() < 1 || !is_irreducible(f)) {
    fail(Err::NotIrreducible, "totally-positive test needs an irreducible input");
  }
  return count_real_roots_above(f, Rat(0)) == f.degree();
}

// ---------------------------------------------------------------------------
// NumberFieldElement
// ---------------------------------------------------------------------------

namespace {

std::vector<Rat> reduced_coeffs(const FieldPtr& field, const RatPoly& p) {
  RatPoly f = RatPoly::from_int_poly(field->minpoly());
  RatPoly r = rat_divmod(p, f).second;
  std::vector<Rat> c(static_cast<size_t>(field->minpoly().degree()), Rat(0));
  for (size_t i = 0; i < r.c.size(); ++i) c[i] = r.c[i];
  return c;
}

}  // namespace

NumberFieldElement NumberFieldElement::zero(const FieldPtr& field) {
  return NumberFieldElement(
      field, std::vector<Rat>(static_cast<size_t>(field->degree()), Rat(0)));
}

NumberFieldElement NumberFieldElement::one(const FieldPtr& field) {
  return from_rational(field, Rat(1));
}

NumberFieldElement NumberFieldElement::theta(const FieldPtr& field) {
  return from_ratpoly(field, RatPoly::x());
}

NumberFieldElement NumberFieldElement::from_rational(const FieldPtr& field,
                                                     const Rat& q) {
  std::vector<Rat> c(static_cast<size_t>(field->degree()), Rat(0));
  c[0] = q;
  return NumberFieldElement(field, std::move(c));
}

NumberFieldElement NumberFieldElement::from_ratpoly(const FieldPtr& field,
                                                    const RatPoly& p) {
  return NumberFieldElement(field, reduced_coeffs(field, p));
}

bool NumberFieldElement::is_zero() const {
  for (const Rat& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

void NumberFieldElement::check_same_field(const NumberFieldElement& a,
                                          const NumberFieldElement& b) {
  if (!a.field_ || !b.field_) fail(Err::FieldMismatch, "element has no field");
  if (a.field_ == b.field_) return;
  if (a.field_->minpoly() == b.field_->minpoly() &&
      a.field_->equals(*b.field_)) {
    return;
  }
  fail(Err::FieldMismatch, "elements belong to different fields");
}

bool NumberFieldElement::equals(const NumberFieldElement& o) const {
  check_same_field(*this, o);
  return c_ == o.c_;
}

NumberFieldElement NumberFieldElement::operator+(const NumberFieldElement& o) const {
  check_same_field(*this, o);
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  return NumberFieldElement(field_, std::move(c));
}

NumberFieldElement NumberFieldElement::operator-(const NumberFieldElement& o) const {
  check_same_field(*this, o);
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
  return NumberFieldElement(field_, std::move(c));
}

NumberFieldElement NumberFieldElement::operator-() const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return NumberFieldElement(field_, std::move(c));
}

NumberFieldElement NumberFieldElement::operator*(const NumberFieldElement& o) const {
  check_same_field(*this, o);
  RatPoly a{std::vector<Rat>(c_)};
  RatPoly b(std::vector<Rat>(o.c_));
  return NumberFieldElement(field_, reduced_coeffs(field_, a * b));
}

NumberFieldElement NumberFieldElement::invert() const {
  if (!field_) fail(Err::FieldMismatch, "element has no field");
  if (is_zero()) fail(Err::DivisionByZero, "inverting zero field element");
  RatPoly a{std::vector<Rat>(c_)};
  RatPoly f = RatPoly::from_int_poly(field_->minpoly());
  RatXgcd e = rat_xgcd(a, f);
  if (e.g.degree() != 0) {
    fail(Err::Internal, "gcd with irreducible minpoly must be constant");
  }
  // e.g is monic (the constant 1): s*a + t*f == 1, so s is the inverse mod f.
  return NumberFieldElement(field_, reduced_coeffs(field_, e.s));
}

NumberFieldElement NumberFieldElement::operator/(const NumberFieldElement& o) const {
  return *this * o.invert();
}

NumberFieldElement NumberFieldElement::scaled(const Rat& s) const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return NumberFieldElement(field_, std::move(c));
}

bool NumberFieldElement::is_rational_constant() const {
  for (size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

Rat NumberFieldElement::rational_constant() const {
  if (!is_rational_constant()) fail(Err::Internal, "not a rational constant");
  return c_.empty() ? Rat(0) : c_[0];
}

double NumberFieldElement::approx() const {
  if (!field_) return 0.0;
  double th = field_->approx();
  double acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * th + c_[i].get_d();
  }
  return acc;
}

std::string NumberFieldElement::to_string() const {
  RatPoly p{std::vector<Rat>(c_)};
  return p.to_string("t");
}

}  // namespace spectree
