#include "twjac/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace twjac {

namespace upoly {

void trim(std::vector<Rat>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

static void divmod(std::vector<Rat> a, const std::vector<Rat>& b,
                   std::vector<Rat>& q, std::vector<Rat>& r) {
  trim(a);
  if (b.empty()) throw DivisionByZero();
  q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) trim(a);
  }
  r = std::move(a);
  trim(q);
}

std::vector<Rat> exact_div(std::vector<Rat> a, const std::vector<Rat>& b) {
  std::vector<Rat> q, r;
  divmod(std::move(a), b, q, r);
  if (!r.empty()) throw NonExactDivision("univariate");
  return q;
}

std::vector<Rat> mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  std::vector<Rat> q, r;
  divmod(std::move(a), b, q, r);
  return r;
}

}  // namespace upoly

std::vector<Rat> cyclotomic_polynomial(int order) {
  // Phi_N = (t^N - 1) / prod_{d | N, d < N} Phi_d
  std::vector<Rat> num(order + 1, Rat(0));
  num[0] = -1;
  num[order] = 1;
  std::vector<Rat> den{Rat(1)};
  for (int d = 1; d < order; ++d)
    if (order % d == 0) den = upoly::mul(den, cyclotomic_polynomial(d));
  return upoly::exact_div(std::move(num), den);
}

CycField::CycField(int order) : order_(order) {
  phi_ = cyclotomic_polynomial(order);
  degree_ = static_cast<int>(phi_.size()) - 1;
  powers_.resize(2 * degree_ > 1 ? 2 * degree_ - 1 : 1);
  std::vector<Rat> t{Rat(1)};
  for (auto& p : powers_) {
    p = upoly::mod(t, phi_);
    p.resize(degree_, Rat(0));
    t.insert(t.begin(), Rat(0));  // times t
  }
}

const CycField* CycField::get(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[order];
  if (!slot) slot.reset(new CycField(order));
  return slot.get();
}

CycRat::CycRat(const CycField* field, Rat constant) : field_(field) {
  coeffs_.assign(field->degree(), Rat(0));
  coeffs_[0] = std::move(constant);
  normalize();
}

CycRat::CycRat(const CycField* field, std::vector<Rat> coeffs) : field_(field) {
  coeffs_ = upoly::mod(std::move(coeffs), field->minimal_polynomial());
  coeffs_.resize(field->degree(), Rat(0));
  normalize();
}

void CycRat::normalize() {
  for (const auto& c : coeffs_)
    if (c != 0) return;
  field_ = nullptr;
  coeffs_.clear();
}

CycRat CycRat::zeta_pow(const CycField* field, long k) {
  long n = field->order();
  long e = ((k % n) + n) % n;
  std::vector<Rat> t(e + 1, Rat(0));
  t[e] = 1;
  return CycRat(field, std::move(t));
}

bool CycRat::is_zero() const { return field_ == nullptr; }

bool CycRat::is_rational() const {
  if (is_zero()) return true;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat CycRat::rational_part() const {
  return is_zero() ? Rat(0) : coeffs_[0];
}

CycRat CycRat::operator-() const {
  if (is_zero()) return *this;
  CycRat r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycRat operator+(const CycRat& a, const CycRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.field_ != b.field_) throw std::logic_error("CycRat field mismatch");
  CycRat r = a;
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  r.normalize();
  return r;
}

CycRat operator-(const CycRat& a, const CycRat& b) { return a + (-b); }

CycRat operator*(const CycRat& a, const CycRat& b) {
  if (a.is_zero() || b.is_zero()) return CycRat();
  if (a.field_ != b.field_) throw std::logic_error("CycRat field mismatch");
  const CycField* F = a.field_;
  int d = F->degree();
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  std::vector<Rat> out(d, Rat(0));
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& pk = F->power(k);
    for (int i = 0; i < d; ++i) out[i] += prod[k] * pk[i];
  }
  CycRat r;
  r.field_ = F;
  r.coeffs_ = std::move(out);
  r.normalize();
  return r;
}

CycRat operator*(const Rat& r, const CycRat& a) {
  if (r == 0 || a.is_zero()) return CycRat();
  CycRat out = a;
  std::vector<Rat> c = a.coeffs();
  for (auto& x : c) x *= r;
  return CycRat(a.field(), std::move(c));
}

bool operator==(const CycRat& a, const CycRat& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

CycRat CycRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Extended Euclid in Q[t]: r0 = Phi_N, r1 = this; track s with r = s*this
  // mod Phi_N.  Phi_N is irreducible, so the last nonzero remainder is a
  // nonzero constant.
  std::vector<Rat> r0 = field_->minimal_polynomial(), r1 = coeffs_;
  upoly::trim(r1);
  std::vector<Rat> s0, s1{Rat(1)};  // s0 = 0
  while (true) {
    // divide r0 by r1
    std::vector<Rat> q, rem = r0;
    q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rat(0));
    while (rem.size() >= r1.size()) {
      Rat c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      upoly::trim(rem);
    }
    // s_new = s0 - q*s1
    std::vector<Rat> snew = s0;
    std::vector<Rat> qs = upoly::mul(q, s1);
    if (snew.size() < qs.size()) snew.resize(qs.size(), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) snew[i] -= qs[i];
    upoly::trim(snew);
    if (rem.empty()) {
      // r1 is the gcd (a nonzero constant); s1 * this == r1 mod Phi
      Rat g = r1[0];
      std::vector<Rat> res = s1;
      for (auto& c : res) c /= g;
      return CycRat(field_, std::move(res));
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
}

std::string CycRat::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    Rat ab = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (ab == 1);
    if (k == 0) {
      os << ab.get_str();
    } else {
      if (!unit) os << ab.get_str() << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace twjac
