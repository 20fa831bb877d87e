#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hdx {

/// Dense bit vector over F2. Addition is XOR; this single type carries
/// chains and cochains alike.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    if (v)
      w_[i >> 6] |= (std::uint64_t)1 << (i & 63);
    else
      w_[i >> 6] &= ~((std::uint64_t)1 << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t)1 << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    if (o.nbits_ != nbits_) throw std::invalid_argument("BitVec: size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  /// Index of the lowest set bit, or npos.
  static constexpr std::size_t npos = (std::size_t)-1;
  std::size_t first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + __builtin_ctzll(w_[i]);
    return npos;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(i * 64 + __builtin_ctzll(w));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> set_bits() const {
    std::vector<std::size_t> out;
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.nbits_ == b.nbits_ && a.w_ == b.w_;
  }
  friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

  /// Lexicographic order on the bit string (bit 0 most significant); used for
  /// deterministic witness tie-breaking.
  static bool lex_less(const BitVec& a, const BitVec& b) {
    std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < (n + 63) / 64; ++i) {
      std::uint64_t x = bitrev_cmp_key(a.w_[i]);
      std::uint64_t y = bitrev_cmp_key(b.w_[i]);
      if (x != y) return x > y;  // a 1 earlier means lex-greater support; we want fewer-first
    }
    return false;
  }

 private:
  // Reverse bits within the word so low-index bits compare first.
  static std::uint64_t bitrev_cmp_key(std::uint64_t v) {
    std::uint64_t r = 0;
    for (int i = 0; i < 64; ++i) {
      r = (r << 1) | (v & 1);
      v >>= 1;
    }
    return r;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Row-major F2 matrix with Gaussian elimination. Rows are BitVecs over the
/// column index set.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  void add_row(BitVec v) { rows_.push_back(std::move(v)); }

  /// Multiply by a column vector: (M x)_i = <row_i, x>.
  BitVec apply(const BitVec& x) const {
    BitVec out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      BitVec t = rows_[i];
      t ^= x;
      // parity of row & x
      std::size_t ones = rows_[i].popcount() + x.popcount() - t.popcount();
      out.set(i, (ones / 2) & 1);
    }
    return out;
  }

  std::size_t rank() const {
    Mat2 c = *this;
    return c.echelonize().size();
  }

  /// In-place reduction to row echelon form; returns pivot column per
  /// surviving row (rows become the reduced basis, zero rows dropped).
  std::vector<std::size_t> echelonize() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_.size(); ++c) {
      std::size_t sel = BitVec::npos;
      for (std::size_t i = r; i < rows_.size(); ++i)
        if (rows_[i].get(c)) {
          sel = i;
          break;
        }
      if (sel == BitVec::npos) continue;
      std::swap(rows_[r], rows_[sel]);
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (i != r && rows_[i].get(c)) rows_[i] ^= rows_[r];
      pivots.push_back(c);
      ++r;
    }
    rows_.resize(pivots.size(), BitVec(cols_));
    return pivots;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// A reduced basis of a subspace of F2^n supporting membership tests and
/// coset-minimum reasoning.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  /// Build from spanning vectors.
  static Subspace span(std::size_t ambient, const std::vector<BitVec>& gens) {
    Subspace s(ambient);
    for (const auto& g : gens) s.insert(g);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BitVec>& basis() const { return basis_; }

  /// Insert a vector; returns true if it enlarged the subspace.
  bool insert(BitVec v) {
    reduce(v);
    if (v.none()) return false;
    std::size_t p = v.first_set();
    // keep basis reduced: clear column p from existing rows
    for (auto& b : basis_)
      if (b.get(p)) b ^= v;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    // keep rows sorted by pivot for determinism
    for (std::size_t i = basis_.size(); i-- > 1;)
      if (pivots_[i] < pivots_[i - 1]) {
        std::swap(pivots_[i], pivots_[i - 1]);
        std::swap(basis_[i], basis_[i - 1]);
      }
    return true;
  }

  /// Reduce v modulo the subspace (row-reduced remainder).
  void reduce(BitVec& v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (v.get(pivots_[i])) v ^= basis_[i];
  }

  bool contains(const BitVec& v) const {
    BitVec t = v;
    reduce(t);
    return t.none();
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<BitVec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Solve M x = b (M given as rows over x-space). Returns false if
/// inconsistent; on success x holds one solution.
bool solve_f2(const Mat2& m, const BitVec& b, BitVec& x);

/// Basis of { x : M x = 0 }.
std::vector<BitVec> kernel_basis(const Mat2& m);

}  // namespace hdx
