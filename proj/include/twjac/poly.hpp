#ifndef TWJAC_POLY_HPP
#define TWJAC_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twjac/cyclotomic.hpp"

namespace twjac {

/// Dense exponent vector; problems are desk scale (n <= 8, three blocks).
using Expo = std::vector<int>;

/// Degrevlex, ascending.  Leading term of a poly is the map's last entry.
/// Ties: smaller total degree first; at equal degree, a < b iff the LAST
/// index where they differ has a-exponent > b-exponent.
struct DegRevLexLess {
  bool operator()(const Expo& a, const Expo& b) const;
};

int total_degree(const Expo& e);
bool expo_divides(const Expo& a, const Expo& b);  // a | b componentwise

/// Sparse multivariate polynomial over Q(zeta_N).  Immutable-by-convention
/// value type; no stored coefficient is zero.
class MultiPoly {
 public:
  using TermMap = std::map<Expo, CycRat, DegRevLexLess>;

  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, CycRat c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(int nvars, Expo e, CycRat c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  CycRat constant_term() const;
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  int degree() const;  // -1 for the zero polynomial

  const Expo& leading_monomial() const;  // requires nonzero
  const CycRat& leading_coefficient() const;
  CycRat coefficient(const Expo& e) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  friend MultiPoly operator*(const CycRat& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  void add_term(const Expo& e, const CycRat& c);  // used by builders

  /// Simultaneous substitution; unbound variables pass through.
  MultiPoly substitute(const std::map<int, MultiPoly>& bindings) const;
  /// Common special case: x_i -> scale_i * x_i for the given variables.
  MultiPoly rescale(const std::map<int, CycRat>& scales) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  TermMap terms_;
};

/// Exact division p/q; throws NonExactDivision when q does not divide p.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);

MultiPoly partial_derivative(const MultiPoly& p, int var);

/// Variable-block conventions for difference operators: the ambient has
/// 3*n slots laid out as x_1..x_n | y_1..y_n | z_1..z_n.
struct Blocks {
  int n;
  int x(int i) const { return i; }          // 0-based throughout
  int y(int i) const { return n + i; }
  int z(int i) const { return 2 * n + i; }
  int ambient() const { return 3 * n; }
};

enum class NablaMode { XToXY, YToYZ };

/// Divided-difference operator.  XToXY: replaces x_1..x_{j} by y's in the
/// left endpoint and x_1..x_{j-1} in the right, divides by y_j - x_j.
/// YToYZ does the same on the y-block, writing z's.
MultiPoly nabla(const MultiPoly& w, int j, NablaMode mode, const Blocks& blocks);

/// nabla_i^{y->(y,z)} nabla_j^{x->(x,y)} w, for 0-based i <= j.
MultiPoly double_nabla(const MultiPoly& w, int i, int j, const Blocks& blocks);

struct PotentialDiagnostics {
  bool value_at_origin_zero = false;
  bool gradient_at_origin_zero = false;
  bool pass() const { return value_at_origin_zero && gradient_at_origin_zero; }
};

/// Checks W(0) = 0 and grad W(0) = 0 over the first `n` variables.
PotentialDiagnostics validate_potential(const MultiPoly& w, int n);

/// Recursive-descent parser over + - * / ^ ( ), integer literals, `z` for
/// zeta_N, declared variable names, and parameters bound to exact scalars.
/// Divisors must be nonzero constants.
MultiPoly parse_poly(const std::string& text, const CycField* field, int nvars,
                     const std::vector<std::string>& var_names,
                     const std::map<std::string, CycRat>& parameters);

/// Parses an exact scalar expression (no variables).
CycRat parse_scalar(const std::string& text, const CycField* field);

}  // namespace twjac

#endif
