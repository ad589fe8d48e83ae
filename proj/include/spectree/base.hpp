// Core numeric types (arbitrary-precision integers and rationals) and the
// error taxonomy shared by the whole library.  All arithmetic in this project
// is exact; no floating point is used anywhere in a result-bearing path.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spectree {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Errors.  Every failure mode that callers are expected to distinguish gets
// its own code; `Error::code()` is stable API, the message text is not.
// ---------------------------------------------------------------------------

enum class Err {
  ZeroPolynomial,
  NotIrreducible,
  DivisionByZero,
  FieldMismatch,
  InvalidVertex,
  NotAnEdge,
  EmptyGraph,
  NotAnEigenvalue,
  AdjacentZeros,
  StructureViolation,
  MinimalityViolation,
  ZeroCoordinate,
  NotMinimal,
  NotTotallyMinimal,
  NotPendant,
  LambdaZero,
  NonIntegralPendantCount,
  SOutOfRange,
  ZeroEigenvalue,
  WrongHalfEdgeCount,
  PieceNotMinimal,
  ParseError,
  NotATree,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::InvalidVertex: return "InvalidVertex";
    case Err::NotAnEdge: return "NotAnEdge";
    case Err::EmptyGraph: return "EmptyGraph";
    case Err::NotAnEigenvalue: return "NotAnEigenvalue";
    case Err::AdjacentZeros: return "AdjacentZeros";
    case Err::StructureViolation: return "StructureViolation";
    case Err::MinimalityViolation: return "MinimalityViolation";
    case Err::ZeroCoordinate: return "ZeroCoordinate";
    case Err::NotMinimal: return "NotMinimal";
    case Err::NotTotallyMinimal: return "NotTotallyMinimal";
    case Err::NotPendant: return "NotPendant";
    case Err::LambdaZero: return "LambdaZero";
    case Err::NonIntegralPendantCount: return "NonIntegralPendantCount";
    case Err::SOutOfRange: return "SOutOfRange";
    case Err::ZeroEigenvalue: return "ZeroEigenvalue";
    case Err::WrongHalfEdgeCount: return "WrongHalfEdgeCount";
    case Err::PieceNotMinimal: return "PieceNotMinimal";
    case Err::ParseError: return "ParseError";
    case Err::NotATree: return "NotATree";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw Error(code, msg);
}

// ---------------------------------------------------------------------------
// Small helpers around GMP.  gmpxx's expression templates make `auto` unsafe;
// these wrappers always return materialized values.
// ---------------------------------------------------------------------------

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_pow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline Int int_abs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// Integer square root, rounded up: smallest s with s*s >= a (a >= 0).
inline Int int_sqrt_ceil(const Int& a) {
  Int s;
  mpz_sqrt(s.get_mpz_t(), a.get_mpz_t());
  if (s * s < a) s += 1;
  return s;
}

// Number of bits in |a| (0 for a == 0); used for pivot-size heuristics.
inline size_t int_bits(const Int& a) {
  if (a == 0) return 0;
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

// Exact integer division; aborts loudly if b does not divide a.
inline Int int_divexact(const Int& a, const Int& b) {
  if (b == 0) fail(Err::DivisionByZero, "integer division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) fail(Err::Internal, "inexact integer division");
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(Err::DivisionByZero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline const Int& rat_num(const Rat& q) { return q.get_num(); }
inline const Int& rat_den(const Rat& q) { return q.get_den(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline bool rat_is_integer(const Rat& q) { return rat_den(q) == 1; }

inline std::string int_to_string(const Int& a) { return a.get_str(); }

// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rat& q) {
  if (rat_is_integer(q)) return rat_num(q).get_str();
  return rat_num(q).get_str() + "/" + rat_den(q).get_str();
}

}  // namespace spectree
