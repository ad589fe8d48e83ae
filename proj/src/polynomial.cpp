// Implementation of exact integer / rational polynomial arithmetic.
#include "spectree/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace spectree {

// ---------------------------------------------------------------------------
// Polynomial (integer coefficients)
// ---------------------------------------------------------------------------

Polynomial Polynomial::from_ints(std::vector<long> coeffs) {
  std::vector<Int> v;
  v.reserve(coeffs.size());
  for (long x : coeffs) v.emplace_back(x);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::constant(const Int& a) {
  Polynomial p;
  if (a != 0) p.c.push_back(a);
  return p;
}

Polynomial Polynomial::linear_with_root(const Rat& r) {
  Polynomial p;
  p.c.resize(2);
  p.c[0] = -rat_num(r);
  p.c[1] = rat_den(r);
  return p;
}

Polynomial Polynomial::x() {
  Polynomial p;
  p.c = {Int(0), Int(1)};
  return p;
}

void Polynomial::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int& Polynomial::lc() const {
  if (c.empty()) fail(Err::ZeroPolynomial, "leading coefficient of zero");
  return c.back();
}

Int Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return Int(0);
  return c[static_cast<size_t>(i)];
}

Int Polynomial::eval(const Int& x) const {
  Int acc(0);
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * x + c[i];
  }
  return acc;
}

Rat Polynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * x + Rat(c[i]);
  }
  return acc;
}

int Polynomial::sign_at(const Rat& x) const {
  // Evaluate num-den homogeneously to stay in integers: sign of
  // sum c_i * p^i * q^(d-i) where x = p/q, q > 0.
  if (c.empty()) return 0;
  const Int& p = rat_num(x);
  const Int& q = rat_den(x);
  Int acc(0);
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * p + c[i] * int_pow(q, c.size() - 1 - i);
  }
  return sgn(acc);
}

int Polynomial::sign_at_pos_inf() const {
  if (c.empty()) return 0;
  return sgn(c.back());
}

int Polynomial::sign_at_neg_inf() const {
  if (c.empty()) return 0;
  int s = sgn(c.back());
  return (degree() % 2 == 0) ? s : -s;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  if (c.size() <= 1) return d;
  d.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) {
    d.c[i - 1] = c[i] * Int(static_cast<unsigned long>(i));
  }
  d.normalize();
  return d;
}

Int Polynomial::content() const {
  Int g(0);
  for (const Int& a : c) {
    g = int_gcd(g, a);
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (c.empty()) return Polynomial();
  Int g = content();
  Polynomial p;
  p.c.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) p.c[i] = int_divexact(c[i], g);
  return p;
}

Polynomial Polynomial::canonical() const {
  if (c.empty()) return Polynomial();
  Polynomial p = primitive_part();
  if (p.lc() < 0) {
    for (Int& a : p.c) a = -a;
  }
  return p;
}

bool Polynomial::is_canonical() const {
  if (c.empty()) return false;
  return lc() > 0 && content() == 1;
}

Polynomial Polynomial::shifted_up(int k) const {
  if (c.empty() || k == 0) return *this;
  Polynomial p;
  p.c.assign(c.size() + static_cast<size_t>(k), Int(0));
  for (size_t i = 0; i < c.size(); ++i) p.c[i + static_cast<size_t>(k)] = c[i];
  return p;
}

Polynomial Polynomial::scale_argument(const Int& a) const {
  Polynomial p;
  p.c.resize(c.size());
  Int pw(1);
  for (size_t i = 0; i < c.size(); ++i) {
    p.c[i] = c[i] * pw;
    pw *= a;
  }
  p.normalize();
  return p;
}

Polynomial Polynomial::compose_x_squared() const {
  if (c.empty()) return Polynomial();
  Polynomial p;
  p.c.assign(2 * c.size() - 1, Int(0));
  for (size_t i = 0; i < c.size(); ++i) p.c[2 * i] = c[i];
  return p;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Int a = c[i];
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int mag = int_abs(a);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.normalize();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.normalize();
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (Int& x : r.c) x = -x;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c.empty() || b.c.empty()) return Polynomial();
  Polynomial r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.normalize();
  return r;
}

Polynomial operator*(const Polynomial& a, const Int& s) {
  if (s == 0) return Polynomial();
  Polynomial r = a;
  for (Int& x : r.c) x *= s;
  return r;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  Polynomial q;
  if (!try_divide_exact(a, b, &q)) {
    fail(Err::Internal, "inexact polynomial division");
  }
  return q;
}

bool try_divide_exact(const Polynomial& a, const Polynomial& b, Polynomial* q) {
  if (b.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) {
    if (q) *q = Polynomial();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  // Long division over Q, verifying integrality of each quotient coefficient.
  std::vector<Rat> rem(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) rem[i] = Rat(a.c[i]);
  const int db = b.degree();
  const Int& blc = b.lc();
  std::vector<Int> quot(static_cast<size_t>(a.degree() - db) + 1, Int(0));
  for (int i = a.degree(); i >= db; --i) {
    Rat head = rem[static_cast<size_t>(i)];
    if (head == 0) continue;
    Rat qc = head / Rat(blc);
    if (!rat_is_integer(qc)) return false;
    quot[static_cast<size_t>(i - db)] = rat_num(qc);
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<size_t>(i - db + j)] -= qc * Rat(b.c[static_cast<size_t>(j)]);
    }
  }
  for (int i = 0; i < db; ++i) {
    if (rem[static_cast<size_t>(i)] != 0) return false;
  }
  if (q) *q = Polynomial(std::move(quot));
  return true;
}

Polynomial signed_pseudo_rem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(Err::DivisionByZero, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  Polynomial r = a;
  const int db = b.degree();
  const Int& blc = b.lc();
  int steps = 0;
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    // r <- blc * r - r.lc() * x^k * b   (drops the degree of r)
    Int rl = r.lc();
    Polynomial t;
    t.c.resize(r.c.size());
    for (size_t i = 0; i < r.c.size(); ++i) t.c[i] = r.c[i] * blc;
    for (int j = 0; j <= db; ++j) {
      t.c[static_cast<size_t>(k + j)] -= rl * b.c[static_cast<size_t>(j)];
    }
    t.normalize();
    r = std::move(t);
    ++steps;
  }
  // r == blc^steps * rem(a, b); fix the sign when the multiplier is negative.
  if (blc < 0 && steps % 2 == 1) {
    for (Int& x : r.c) x = -x;
  }
  return r;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? Polynomial() : b.canonical();
  if (b.is_zero()) return a.canonical();
  Int cont = int_gcd(a.content(), b.content());
  Polynomial f = a.primitive_part();
  Polynomial g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    Polynomial r = signed_pseudo_rem(f, g);
    f = std::move(g);
    g = r.is_zero() ? Polynomial() : r.primitive_part();
  }
  return f.canonical() * cont;  // cont > 0, so the leading sign stays positive
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "squarefree part of zero");
  if (p.degree() == 0) return Polynomial::constant(Int(1));
  Polynomial g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.canonical();
  Polynomial q;
  // gcd is computed from primitive parts; divide the canonical form of p.
  if (!try_divide_exact(p.canonical(), g, &q)) {
    fail(Err::Internal, "squarefree division failed");
  }
  return q.canonical();
}

Polynomial poly_pow(const Polynomial& p, unsigned e) {
  Polynomial r = Polynomial::constant(Int(1));
  Polynomial base = p;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

int divisibility_order(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero() || d.degree() < 1) {
    fail(Err::Internal, "divisibility order needs nonconstant divisor");
  }
  if (p.is_zero()) fail(Err::ZeroPolynomial, "divisibility order in zero");
  Polynomial rem = p.canonical();
  Polynomial div = d.canonical();
  int k = 0;
  Polynomial q;
  while (try_divide_exact(rem, div, &q)) {
    ++k;
    rem = q.canonical();
    if (rem.degree() < div.degree()) break;
  }
  return k;
}

// ---------------------------------------------------------------------------
// RatPoly (rational coefficients)
// ---------------------------------------------------------------------------

RatPoly RatPoly::constant(const Rat& a) {
  RatPoly p;
  if (a != 0) p.c.push_back(a);
  return p;
}

RatPoly RatPoly::x() {
  RatPoly p;
  p.c = {Rat(0), Rat(1)};
  return p;
}

RatPoly RatPoly::from_int_poly(const Polynomial& p) {
  RatPoly r;
  r.c.resize(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) r.c[i] = Rat(p.c[i]);
  return r;
}

void RatPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const Rat& RatPoly::lc() const {
  if (c.empty()) fail(Err::ZeroPolynomial, "leading coefficient of zero");
  return c.back();
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return Rat(0);
  return c[static_cast<size_t>(i)];
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * x + c[i];
  }
  return acc;
}

RatPoly RatPoly::derivative() const {
  RatPoly d;
  if (c.size() <= 1) return d;
  d.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) {
    d.c[i - 1] = c[i] * Rat(static_cast<unsigned long>(i));
  }
  d.normalize();
  return d;
}

RatPoly RatPoly::monic() const {
  if (c.empty()) fail(Err::ZeroPolynomial, "monic form of zero");
  RatPoly r = *this;
  Rat l = lc();
  for (Rat& x : r.c) x /= l;
  return r;
}

std::pair<Polynomial, Rat> RatPoly::to_integer_scaled() const {
  if (c.empty()) return {Polynomial(), Rat(1)};
  Int den(1);
  for (const Rat& q : c) den = int_lcm(den, rat_den(q));
  Polynomial p;
  p.c.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    p.c[i] = rat_num(c[i]) * int_divexact(den, rat_den(c[i]));
  }
  Int cont = p.content();
  int lead_sign = sgn(p.lc());
  Polynomial prim = p.canonical();
  Rat scale = make_rat(lead_sign < 0 ? Int(-cont) : cont, den);
  return {prim, scale};
}

std::string RatPoly::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rat a = c[i];
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Rat mag = rat_abs(a);
    if (i == 0) {
      os << rat_to_string(mag);
    } else {
      if (mag != 1) os << rat_to_string(mag) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.normalize();
  return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.normalize();
  return r;
}

RatPoly operator-(const RatPoly& a) {
  RatPoly r = a;
  for (Rat& x : r.c) x = -x;
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.c.empty() || b.c.empty()) return RatPoly();
  RatPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.normalize();
  return r;
}

RatPoly operator*(const RatPoly& a, const Rat& s) {
  if (s == 0) return RatPoly();
  RatPoly r = a;
  for (Rat& x : r.c) x *= s;
  return r;
}

std::pair<RatPoly, RatPoly> rat_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  RatPoly rem = a;
  RatPoly quot;
  int db = b.degree();
  if (a.degree() >= db) {
    quot.c.assign(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
    Rat binv = Rat(1) / b.lc();
    for (int i = a.degree(); i >= db; --i) {
      Rat head = rem.coeff(i);
      if (head == 0) continue;
      Rat qc = head * binv;
      quot.c[static_cast<size_t>(i - db)] = qc;
      for (int j = 0; j <= db; ++j) {
        rem.c[static_cast<size_t>(i - db + j)] -= qc * b.c[static_cast<size_t>(j)];
      }
    }
    quot.normalize();
    rem.normalize();
  }
  return {quot, rem};
}

RatPoly rat_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly f = a, g = b;
  while (!g.is_zero()) {
    RatPoly r = rat_divmod(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  if (f.is_zero()) return f;
  return f.monic();
}

RatXgcd rat_xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(Rat(1)), s1;
  RatPoly t0, t1 = RatPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = rat_divmod(r0, r1);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  RatXgcd out;
  if (r0.is_zero()) {
    out.g = r0;
    out.s = s0;
    out.t = t0;
    return out;
  }
  Rat l = r0.lc();
  Rat linv = Rat(1) / l;
  out.g = r0 * linv;
  out.s = s0 * linv;
  out.t = t0 * linv;
  return out;
}

}  // namespace spectree
