#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"

namespace hdx::hom {

/// F2 chain (or cochain) supported on X(dim); bits indexed by the sorted
/// face list of that dimension.
struct ChainVector {
  int dim = 0;
  BitVec bits;
};

enum class Which { BoundarySpace, CycleSpace, CoboundarySpace, CocycleSpace };

struct SpaceBasis {
  Which which;
  int k;
  std::vector<BitVec> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Boundary/coboundary machinery bound to one complex. Holds its own copy
/// of the complex (cheap next to the incidence matrices), so callers can
/// hand it temporaries. All queries are const and parallel-safe.
class ChainOps {
 public:
  explicit ChainOps(cx::Complex x);

  const cx::Complex& complex() const { return x_; }
  int top_dim() const { return x_.top_dim(); }
  std::size_t dim_c(int k) const { return x_.num_faces(k); }

  /// Boundary of a k-chain (k >= 0); d/dim checks throw DimMismatch.
  ChainVector boundary(const ChainVector& a) const;
  /// Coboundary of a k-cochain (-1 <= k <= n-1).
  ChainVector coboundary(const ChainVector& phi) const;

  /// phi(A) = sum over faces in A of phi, for phi and A of equal dimension.
  bool pair(const ChainVector& phi, const ChainVector& a) const;

  /// Matrix of the boundary map C_k -> C_{k-1}: rows X(k-1), cols X(k).
  /// Valid for 0 <= k <= n+1 (k = n+1 gives an empty-column matrix).
  const Mat2& boundary_matrix(int k) const;

  SpaceBasis space_basis(Which which, int k) const;
  /// Subspace wrapper (reduced) for membership tests.
  Subspace space(Which which, int k) const;

  ChainVector zero(int k) const { return ChainVector{k, BitVec(dim_c(k))}; }
  ChainVector from_faces(int k, const std::vector<cx::Face>& faces) const;
  std::vector<cx::Face> support(const ChainVector& v) const;

 private:
  cx::Complex x_;
  std::vector<Mat2> bmat_;  // bmat_[k]: boundary C_k -> C_{k-1}, k = 0..n+1
};

struct FillOptions {
  int budget_log2 = 24;
  bool certifying = true;  // throw SearchSpaceTooLarge instead of going greedy
};

struct FillResult {
  bool exists = false;   // false: input not a boundary (Fill = infinity)
  BitVec chain;          // a (k+1)-chain with boundary = input
  std::size_t size = 0;  // |chain|
  bool optimal = false;  // true when found by exhaustive coset scan
};

/// Minimal-size A with boundary(A) = b, for b in Z_k. Searches the solution
/// coset (particular solution + kernel of the boundary map) exhaustively
/// within budget; in non-certifying mode falls back to greedy local
/// minimization flagged non-optimal.
FillResult fill(const ChainOps& ops, int k, const BitVec& b, const FillOptions& opt = {});

struct SysResult {
  bool infinite = false;     // Z_k = B_k
  std::size_t size = 0;      // min |A| over nonbounding cycles
  BitVec witness;
};

/// Cardinality systole: smallest nonbounding k-cycle, exhaustive over Z_k.
SysResult sys_cardinality(const ChainOps& ops, int k, int budget_log2 = 24);

}  // namespace hdx::hom
