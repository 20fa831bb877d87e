#include "hdx/algebra.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>

namespace hdx::algebra {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Fixed irreducible moduli for the supported extensions, low-degree
// coefficients first (constant term at index 0, leading 1 omitted).
std::vector<int> extension_modulus(int q) {
  switch (q) {
    case 4: return {1, 1};     // x^2 + x + 1 over F2
    case 8: return {1, 1, 0};  // x^3 + x + 1 over F2
    case 9: return {1, 0};     // x^2 + 1 over F3
    default: throw Error("UnsupportedField", "no modulus for q=" + std::to_string(q));
  }
}

}  // namespace

Field::Field(int q, int p, int m) : q_(q), p_(p), m_(m) {
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.resize(q);
  auto digits = [&](int x) {
    std::vector<int> d(m_);
    for (int i = 0; i < m_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  };
  auto undigits = [&](const std::vector<int>& d) {
    int x = 0;
    for (int i = m_ - 1; i >= 0; --i) x = x * p_ + d[i];
    return x;
  };
  std::vector<int> mod;
  if (m_ > 1) mod = extension_modulus(q);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> s(m_);
      for (int i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = (std::uint8_t)undigits(s);
      // polynomial product reduced mod the modulus
      std::vector<int> prod(2 * m_ - 1, 0);
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int k = 2 * m_ - 2; k >= m_; --k) {
        int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < m_; ++i)
          prod[k - m_ + i] = ((prod[k - m_ + i] - c * mod[i]) % p_ + p_ * p_) % p_;
      }
      std::vector<int> pr(prod.begin(), prod.begin() + m_);
      mul_[a * q + b] = (std::uint8_t)undigits(pr);
    }
    std::vector<int> n(m_);
    for (int i = 0; i < m_; ++i) n[i] = (p_ - da[i]) % p_;
    neg_[a] = (std::uint8_t)undigits(n);
  }
  inv_[0] = 0;
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = (std::uint8_t)b;
        break;
      }
  for (int a = 1; a < q; ++a)
    if (mul_[a * q + inv_[a]] != 1)
      throw InvariantError("FieldTables", "F_" + std::to_string(q) + ": missing inverse");
}

const Field& Field::get(int q) {
  static std::map<int, std::unique_ptr<Field>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  int p = 0, m = 0;
  if (is_prime(q) && q <= 31) {
    p = q;
    m = 1;
  } else if (q == 4 || q == 8) {
    p = 2;
    m = q == 4 ? 2 : 3;
  } else if (q == 9) {
    p = 3;
    m = 2;
  } else {
    throw Error("UnsupportedField", "q=" + std::to_string(q));
  }
  auto f = std::unique_ptr<Field>(new Field(q, p, m));
  const Field& ref = *f;
  cache.emplace(q, std::move(f));
  return ref;
}

std::string Ring::str() const {
  std::string base = "F" + std::to_string(field->q());
  switch (mode) {
    case RingMode::Field: return base;
    case RingMode::Poly: return base + "[t]";
    case RingMode::Quotient: return base + "[t]/(t^" + std::to_string(trunc) + ")";
  }
  return base;
}

static void normalize(Poly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

Poly poly_truncate(const Ring& r, const Poly& a) {
  Poly out = a;
  if (r.mode == RingMode::Field && out.c.size() > 1)
    throw degree_violation("nonconstant element in field mode");
  if (r.mode == RingMode::Quotient && (int)out.c.size() > r.trunc)
    out.c.resize(r.trunc);
  normalize(out);
  return out;
}

Poly poly_add(const Ring& r, const Poly& a, const Poly& b) {
  const Field& f = *r.field;
  Poly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.add(a.coeff(i), b.coeff(i));
  normalize(out);
  return poly_truncate(r, out);
}

Poly poly_neg(const Ring& r, const Poly& a) {
  const Field& f = *r.field;
  Poly out = a;
  for (auto& x : out.c) x = f.neg(x);
  return out;
}

Poly poly_mul(const Ring& r, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  const Field& f = *r.field;
  Poly out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = f.add(out.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  normalize(out);
  return poly_truncate(r, out);
}

std::string poly_str(const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    if (!a.c[k]) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0)
      os << (int)a.c[k];
    else if (a.c[k] == 1)
      os << "t" << (k > 1 ? "^" + std::to_string(k) : "");
    else
      os << (int)a.c[k] << "t" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

Mat Mat::identity(const Ring& r, int n) {
  (void)r;
  Mat m;
  m.n = n;
  m.e.assign((std::size_t)n * n, Poly::zero());
  for (int i = 1; i <= n; ++i) m.at(i, i) = Poly::constant(1);
  return m;
}

Mat elementary_matrix(const Ring& ring, int n, int i, int j, const Poly& r, bool degree_capped) {
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw index_out_of_range("elementary_matrix(" + std::to_string(i) + "," + std::to_string(j) +
                             ") with n=" + std::to_string(n));
  if (degree_capped && r.degree() > j - i)
    throw degree_violation("deg " + std::to_string(r.degree()) + " > " + std::to_string(j - i) +
                           " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  Mat m = Mat::identity(ring, n);
  m.at(i, j) = poly_truncate(ring, r);
  return m;
}

Mat mat_mul(const Ring& ring, const Mat& a, const Mat& b) {
  if (a.n != b.n) throw ring_mismatch("matrix sizes differ");
  Mat out;
  out.n = a.n;
  out.e.assign(a.e.size(), Poly::zero());
  for (int i = 1; i <= a.n; ++i)
    for (int k = 1; k <= a.n; ++k) {
      const Poly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 1; j <= a.n; ++j) {
        const Poly& y = b.at(k, j);
        if (y.is_zero()) continue;
        out.at(i, j) = poly_add(ring, out.at(i, j), poly_mul(ring, x, y));
      }
    }
  return out;
}

bool is_upper_unitriangular(const Mat& m) {
  for (int i = 1; i <= m.n; ++i) {
    if (m.at(i, i) != Poly::constant(1)) return false;
    for (int j = 1; j < i; ++j)
      if (!m.at(i, j).is_zero()) return false;
  }
  return true;
}

bool satisfies_degree_pattern(const Mat& m) {
  if (!is_upper_unitriangular(m)) return false;
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j)
      if (m.at(i, j).degree() > j - i) return false;
  return true;
}

Mat mat_inverse_unitriangular(const Ring& ring, const Mat& m) {
  if (!is_upper_unitriangular(m)) throw not_unitriangular("matrix is not upper unitriangular");
  // N = m - I is nilpotent with N^n = 0, so m^-1 = I - N + N^2 - ...
  Mat nmat = m;
  for (int i = 1; i <= m.n; ++i) nmat.at(i, i) = Poly::zero();
  Mat acc = Mat::identity(ring, m.n);
  Mat power = Mat::identity(ring, m.n);
  int sign = -1;
  for (int k = 1; k < m.n; ++k) {
    power = mat_mul(ring, power, nmat);
    for (std::size_t t = 0; t < acc.e.size(); ++t) {
      Poly term = sign < 0 ? poly_neg(ring, power.e[t]) : power.e[t];
      acc.e[t] = poly_add(ring, acc.e[t], term);
    }
    sign = -sign;
  }
  return acc;
}

Mat commutator(const Ring& ring, const Mat& a, const Mat& b) {
  Mat ai = mat_inverse_unitriangular(ring, a);
  Mat bi = mat_inverse_unitriangular(ring, b);
  return mat_mul(ring, mat_mul(ring, ai, bi), mat_mul(ring, a, b));
}

std::string mat_str(const Mat& m) {
  std::ostringstream os;
  for (int i = 1; i <= m.n; ++i) {
    os << "[";
    for (int j = 1; j <= m.n; ++j) os << (j > 1 ? " " : "") << poly_str(m.at(i, j));
    os << "]";
    if (i < m.n) os << "\n";
  }
  return os.str();
}

}  // namespace hdx::algebra
