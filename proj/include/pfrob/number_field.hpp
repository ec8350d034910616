#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pfrob/errors.hpp"
#include "pfrob/rational.hpp"

namespace pfrob {

namespace poly {

// dense rational polynomials, low-to-high, no trailing zeros
using P = std::vector<Rat>;

inline void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const P& p) { return p.empty(); }

inline P mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline P sub(P a, const P& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// r mod d, quotient in *q (d nonzero, trimmed)
inline P divmod(P r, const P& d, P* q) {
  trim(r);
  std::size_t dd = d.size();
  if (q) q->assign(r.size() >= dd ? r.size() - dd + 1 : 0, Rat(0));
  while (r.size() >= dd) {
    Rat c = r.back() / d.back();
    std::size_t shift = r.size() - dd;
    if (q) (*q)[shift] = c;
    for (std::size_t t = 0; t + 1 < dd; ++t) r[shift + t] -= c * d[t];
    r.pop_back();
    trim(r);
  }
  return r;
}

}  // namespace poly

/* Elements of Q[x]/(f) for a monic integer modulus f, stored as rational
 * coefficient vectors (low-to-high) reduced to degree < deg f.  Plain
 * rationals live in the degree-1 field with modulus x.  Arithmetic mixes
 * two elements only when their moduli are identical; rationals lift into
 * any field.  f is not checked for irreducibility; a reducible modulus
 * shows up as zero_divisor_error when inverting a non-unit.
 */
class NumberFieldElement {
 public:
  // zero of Q (modulus x)
  NumberFieldElement() : modulus_{Int(0), Int(1)}, coeffs_{Rat(0)} {}

  // reduces coeffs mod modulus; accepts any coefficient count
  NumberFieldElement(std::vector<Int> modulus, std::vector<Rat> coeffs)
      : modulus_(std::move(modulus)) {
    check_modulus(modulus_);
    std::size_t d = degree();
    coeffs.resize(std::max(coeffs.size(), d), Rat(0));
    reduce(coeffs);
    coeffs.resize(d);
    coeffs_ = std::move(coeffs);
  }

  static NumberFieldElement rational(const Rat& q) {
    return NumberFieldElement({Int(0), Int(1)}, {q});
  }

  static NumberFieldElement scalar_in(const std::vector<Int>& modulus,
                                      const Rat& q) {
    return NumberFieldElement(modulus, {q});
  }

  static NumberFieldElement zero_in(const std::vector<Int>& modulus) {
    return scalar_in(modulus, Rat(0));
  }

  static NumberFieldElement one_in(const std::vector<Int>& modulus) {
    return scalar_in(modulus, Rat(1));
  }

  // residue of x, e.g. the root itself for x^2+1 or x^3-2
  static NumberFieldElement generator(const std::vector<Int>& modulus) {
    return NumberFieldElement(modulus, {Rat(0), Rat(1)});
  }

  const std::vector<Int>& modulus() const { return modulus_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return modulus_.size() - 1; }

  bool is_zero() const {
    for (const Rat& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_scalar() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  Rat scalar_value() const {
    if (!is_scalar())
      throw domain_error("element is not a scalar: " + to_string());
    return coeffs_[0];
  }

  bool is_one() const { return is_scalar() && coeffs_[0] == 1; }

  friend bool operator==(const NumberFieldElement& a,
                         const NumberFieldElement& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const NumberFieldElement& a,
                         const NumberFieldElement& b) {
    return !(a == b);
  }

  NumberFieldElement operator-() const {
    NumberFieldElement r(*this);
    for (Rat& c : r.coeffs_) c = -c;
    return r;
  }

  friend NumberFieldElement operator+(const NumberFieldElement& a,
                                      const NumberFieldElement& b) {
    check_same(a, b);
    NumberFieldElement r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
      r.coeffs_[i] += b.coeffs_[i];
    return r;
  }

  friend NumberFieldElement operator-(const NumberFieldElement& a,
                                      const NumberFieldElement& b) {
    check_same(a, b);
    NumberFieldElement r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
      r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }

  friend NumberFieldElement operator*(const NumberFieldElement& a,
                                      const NumberFieldElement& b) {
    check_same(a, b);
    std::vector<Rat> prod(2 * a.degree(), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    NumberFieldElement r(a);
    a.reduce_with(prod, a.modulus_);
    prod.resize(a.degree());
    r.coeffs_ = std::move(prod);
    return r;
  }

  NumberFieldElement& operator+=(const NumberFieldElement& b) {
    return *this = *this + b;
  }
  NumberFieldElement& operator-=(const NumberFieldElement& b) {
    return *this = *this - b;
  }
  NumberFieldElement& operator*=(const NumberFieldElement& b) {
    return *this = *this * b;
  }

  // mixed scalar forms
  friend NumberFieldElement operator*(const Rat& q,
                                      const NumberFieldElement& a) {
    NumberFieldElement r(a);
    for (Rat& c : r.coeffs_) c *= q;
    return r;
  }
  friend NumberFieldElement operator*(const NumberFieldElement& a,
                                      const Rat& q) {
    return q * a;
  }
  friend NumberFieldElement operator+(const NumberFieldElement& a,
                                      const Rat& q) {
    NumberFieldElement r(a);
    r.coeffs_[0] += q;
    return r;
  }
  friend NumberFieldElement operator+(const Rat& q,
                                      const NumberFieldElement& a) {
    return a + q;
  }
  friend NumberFieldElement operator-(const NumberFieldElement& a,
                                      const Rat& q) {
    NumberFieldElement r(a);
    r.coeffs_[0] -= q;
    return r;
  }
  friend NumberFieldElement operator-(const Rat& q,
                                      const NumberFieldElement& a) {
    return -(a - q);
  }

  std::string to_string() const;

 private:
  static void check_modulus(const std::vector<Int>& m) {
    if (m.size() < 2) throw domain_error("modulus must have degree >= 1");
    if (m.back() != 1) throw domain_error("modulus must be monic");
  }

  static void check_same(const NumberFieldElement& a,
                         const NumberFieldElement& b) {
    if (a.modulus_ != b.modulus_)
      throw domain_error("modulus mismatch: " + a.to_string() + " vs " +
                         b.to_string());
  }

  void reduce(std::vector<Rat>& c) const { reduce_with(c, modulus_); }

  // fold x^j, j >= deg f, via x^deg = -(f_0 + ... + f_{deg-1} x^{deg-1})
  static void reduce_with(std::vector<Rat>& c, const std::vector<Int>& f) {
    std::size_t d = f.size() - 1;
    for (std::size_t j = c.size(); j-- > d;) {
      if (c[j] == 0) continue;
      Rat cf = c[j];
      c[j] = 0;
      for (std::size_t t = 0; t < d; ++t) c[j - d + t] -= cf * Rat(f[t]);
    }
  }

  std::vector<Int> modulus_;
  std::vector<Rat> coeffs_;
};

inline NumberFieldElement pow(NumberFieldElement base, unsigned long e) {
  NumberFieldElement r = NumberFieldElement::one_in(base.modulus());
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline NumberFieldElement inverse(const NumberFieldElement& a) {
  if (a.is_zero()) throw division_by_zero("inverse of zero in " + a.to_string());
  // extended Euclid in Q[x]: maintain t with t * a == r (mod f)
  poly::P r0(a.modulus().begin(), a.modulus().end());
  poly::P r1(a.coeffs());
  poly::trim(r1);
  poly::P t0, t1{Rat(1)};
  while (!poly::is_zero(r1)) {
    poly::P q;
    poly::P r2 = poly::divmod(r0, r1, &q);
    poly::P t2 = poly::sub(t0, poly::mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1)
    throw zero_divisor_error("not invertible (modulus reducible): " +
                             a.to_string());
  for (Rat& c : t0) c /= r0[0];
  return NumberFieldElement(a.modulus(), std::move(t0));
}

inline NumberFieldElement operator/(const NumberFieldElement& a,
                                    const NumberFieldElement& b) {
  return a * inverse(b);
}

namespace poly {

// "x^3 - 2" style rendering, highest degree first
inline std::string to_string_int(const std::vector<Int>& f) {
  std::string s;
  for (std::size_t j = f.size(); j-- > 0;) {
    const Int& c = f[j];
    if (c == 0) continue;
    Int ac = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    if (j == 0 || ac != 1) s += ac.get_str();
    if (j >= 1) {
      s += "x";
      if (j >= 2) s += "^" + std::to_string(j);
    }
  }
  return s.empty() ? "0" : s;
}

inline std::string to_string_rat(const std::vector<Rat>& f) {
  std::string s;
  for (std::size_t j = f.size(); j-- > 0;) {
    const Rat& c = f[j];
    if (c == 0) continue;
    Rat ac = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    if (j == 0 || ac != 1) s += ac.get_str();
    if (j >= 1) {
      s += "x";
      if (j >= 2) s += "^" + std::to_string(j);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace poly

inline std::string NumberFieldElement::to_string() const {
  if (degree() == 1 && modulus_[0] == 0)  // plain rational
    return coeffs_[0].get_str();
  return poly::to_string_rat(coeffs_) + " (mod " +
         poly::to_string_int(modulus_) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const NumberFieldElement& e) {
  return os << e.to_string();
}

}  // namespace pfrob

