#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hdx/errors.hpp"

namespace hdx::algebra {

/// A finite field F_q given by full operation tables. Elements are canonical
/// indices 0..q-1; for prime fields the index is the residue, for extension
/// fields it is the base-p digit encoding of the residue polynomial.
///
/// Supported: all prime fields with p <= 31 and the extensions F4, F8, F9
/// (fixed irreducible moduli x^2+x+1, x^3+x+1, x^2+1).
class Field {
 public:
  static const Field& get(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int ext_degree() const { return m_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const {
    if (a == 0) throw Error("DivisionByZero", "inverse of 0 in F_" + std::to_string(q_));
    return inv_[a];
  }
  std::uint8_t one() const { return 1; }

 private:
  Field(int q, int p, int m);
  int q_, p_, m_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

enum class RingMode { Field, Poly, Quotient };

/// Ring context: F_q, F_q[t], or F_q[t]/(t^s). Values (Poly, Mat) are plain
/// data; every operation goes through the ring so arithmetic stays exact and
/// truncation is applied uniformly in quotient mode.
struct Ring {
  const Field* field = nullptr;
  RingMode mode = RingMode::Field;
  int trunc = 0;  // s in quotient mode

  static Ring make_field(int q) { return Ring{&Field::get(q), RingMode::Field, 0}; }
  static Ring make_poly(int q) { return Ring{&Field::get(q), RingMode::Poly, 0}; }
  static Ring make_quotient(int q, int s) { return Ring{&Field::get(q), RingMode::Quotient, s}; }

  bool same_as(const Ring& o) const {
    return field == o.field && mode == o.mode && trunc == o.trunc;
  }
  std::string str() const;
};

/// Ring element: coefficient vector, degree-indexed, no trailing zeros.
/// Field elements are degree-0 polys; quotient mode drops coefficients of
/// degree >= s at every operation. Inline storage covers every ring used
/// here (degree < 8), so arithmetic never allocates.
struct Poly {
  boost::container::small_vector<std::uint8_t, 8> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero
  std::uint8_t coeff(int k) const { return k < (int)c.size() ? c[k] : 0; }

  static Poly zero() { return {}; }
  static Poly constant(std::uint8_t a) {
    Poly p;
    if (a) p.c.push_back(a);
    return p;
  }
  /// a * t^k
  static Poly monomial(std::uint8_t a, int k) {
    Poly p;
    if (a) {
      p.c.assign(k + 1, 0);
      p.c[k] = a;
    }
    return p;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) { return a.c < b.c; }
};

Poly poly_add(const Ring& r, const Poly& a, const Poly& b);
Poly poly_neg(const Ring& r, const Poly& a);
Poly poly_mul(const Ring& r, const Poly& a, const Poly& b);
Poly poly_truncate(const Ring& r, const Poly& a);
std::string poly_str(const Poly& a);

/// Immutable square matrix over a Ring; entries in row-major order.
struct Mat {
  int n = 0;  // side length
  std::vector<Poly> e;

  static Mat identity(const Ring& r, int n);
  const Poly& at(int i, int j) const { return e[(i - 1) * n + (j - 1)]; }  // 1-based
  Poly& at(int i, int j) { return e[(i - 1) * n + (j - 1)]; }

  friend bool operator==(const Mat& a, const Mat& b) { return a.n == b.n && a.e == b.e; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b) { return a.e < b.e; }
};

/// Identity with r placed at (i, j), 1-based. When degree_capped, enforces
/// deg(r) <= j - i (entry pattern of the polynomial-entry groups).
Mat elementary_matrix(const Ring& ring, int n, int i, int j, const Poly& r,
                      bool degree_capped = false);

Mat mat_mul(const Ring& ring, const Mat& a, const Mat& b);

/// Inverse of an upper unitriangular matrix via the nilpotent series
/// I - N + N^2 - ...; throws NotUnitriangular otherwise.
Mat mat_inverse_unitriangular(const Ring& ring, const Mat& m);

bool is_upper_unitriangular(const Mat& m);

/// Entry degree pattern of the polynomial-entry group: deg(m[i][j]) <= j - i.
bool satisfies_degree_pattern(const Mat& m);

Mat commutator(const Ring& ring, const Mat& a, const Mat& b);

std::string mat_str(const Mat& m);

}  // namespace hdx::algebra
