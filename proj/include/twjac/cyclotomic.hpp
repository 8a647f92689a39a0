#ifndef TWJAC_CYCLOTOMIC_HPP
#define TWJAC_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "twjac/errors.hpp"

namespace twjac {

using Rat = mpq_class;

/// Univariate polynomial over Q as a dense coefficient vector, low degree
/// first.  Only what the field construction needs.
namespace upoly {
std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
/// Quotient of an exact division; throws NonExactDivision on remainder.
std::vector<Rat> exact_div(std::vector<Rat> a, const std::vector<Rat>& b);
std::vector<Rat> mod(std::vector<Rat> a, const std::vector<Rat>& b);
void trim(std::vector<Rat>& a);
}  // namespace upoly

/// Returns Phi_N, the N-th cyclotomic polynomial (monic, integer
/// coefficients), computed by recursive division of t^N - 1 by the proper
/// cyclotomic factors.
std::vector<Rat> cyclotomic_polynomial(int order);

/// Shared immutable description of Q(zeta_N) = Q[t]/(Phi_N).  One per order,
/// held in a process-wide registry so elements can share a pointer.
class CycField {
 public:
  static const CycField* get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  const std::vector<Rat>& minimal_polynomial() const { return phi_; }

  /// t^k mod Phi_N for 0 <= k < 2*degree - 1 (enough for products).
  const std::vector<Rat>& power(int k) const { return powers_[k]; }

 private:
  explicit CycField(int order);
  int order_;
  int degree_;
  std::vector<Rat> phi_;
  std::vector<std::vector<Rat>> powers_;
};

/// An exact element of Q(zeta_N), stored as the reduced residue mod Phi_N.
/// The default-constructed value is the field-agnostic zero, so containers
/// of CycRat work without threading a field through every call site.
class CycRat {
 public:
  CycRat() : field_(nullptr) {}
  CycRat(const CycField* field, Rat constant);
  CycRat(const CycField* field, std::vector<Rat> coeffs);  // reduced as given

  static CycRat zero() { return CycRat(); }
  static CycRat one(const CycField* field) { return CycRat(field, Rat(1)); }
  /// zeta^k (k may be negative).
  static CycRat zeta_pow(const CycField* field, long k);

  bool is_zero() const;
  bool is_rational() const;  // lies in Q
  Rat rational_part() const; // coefficient of t^0

  const CycField* field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  CycRat operator-() const;
  friend CycRat operator+(const CycRat& a, const CycRat& b);
  friend CycRat operator-(const CycRat& a, const CycRat& b);
  friend CycRat operator*(const CycRat& a, const CycRat& b);
  CycRat& operator+=(const CycRat& b) { return *this = *this + b; }
  CycRat& operator-=(const CycRat& b) { return *this = *this - b; }
  CycRat& operator*=(const CycRat& b) { return *this = *this * b; }

  friend bool operator==(const CycRat& a, const CycRat& b);
  friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_N.  Throws DivisionByZero on zero input.
  CycRat inverse() const;

  /// Printed as a polynomial in `z`, ascending powers: "1 - 2*z + z^2".
  std::string str() const;

 private:
  const CycField* field_;       // nullptr only for the zero element
  std::vector<Rat> coeffs_;     // size == field_->degree() when field_ set
  void normalize();
};

inline CycRat inv(const CycRat& a) { return a.inverse(); }

/// Scale by a plain rational without lifting it into the field first.
CycRat operator*(const Rat& r, const CycRat& a);

}  // namespace twjac

#endif
