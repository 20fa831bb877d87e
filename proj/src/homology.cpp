#include "hdx/homology.hpp"

#include <algorithm>

#include "hdx/errors.hpp"

namespace hdx::hom {

using cx::Complex;
using cx::Face;

ChainOps::ChainOps(const Complex& x) : x_(&x) {
  int n = x.top_dim();
  bmat_.reserve(n + 2);
  for (int k = 0; k <= n + 1; ++k) {
    Mat2 m(x.num_faces(k - 1), x.num_faces(k));
    if (k <= n) {
      const auto& faces = x.faces(k);
      for (std::size_t c = 0; c < faces.size(); ++c) {
        const Face& f = faces[c];
        if (k == 0) {
          m.row(0).set(c);  // every vertex maps to the empty face
          continue;
        }
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
          Face sub;
          for (std::size_t i = 0; i < f.size(); ++i)
            if (i != drop) sub.push_back(f[i]);
          std::size_t r = x.face_index(k - 1, sub);
          if (r == Complex::npos) throw InvariantError("DownwardClosure", "missing subface");
          m.row(r).flip(c);
        }
      }
    }
    bmat_.push_back(std::move(m));
  }
}

const Mat2& ChainOps::boundary_matrix(int k) const {
  if (k < 0 || k > top_dim() + 1) throw dim_mismatch("boundary matrix out of range");
  return bmat_[k];
}

ChainVector ChainOps::boundary(const ChainVector& a) const {
  if (a.dim < 0 || a.dim > top_dim()) throw dim_mismatch("boundary: bad dimension");
  if (a.bits.size() != dim_c(a.dim)) throw dim_mismatch("boundary: wrong length");
  return ChainVector{a.dim - 1, bmat_[a.dim].apply(a.bits)};
}

ChainVector ChainOps::coboundary(const ChainVector& phi) const {
  if (phi.dim < -1 || phi.dim >= top_dim()) throw dim_mismatch("coboundary: bad dimension");
  if (phi.bits.size() != dim_c(phi.dim)) throw dim_mismatch("coboundary: wrong length");
  // d_k = transpose of boundary_{k+1}
  const Mat2& m = bmat_[phi.dim + 1];
  BitVec out(m.num_cols());
  phi.bits.for_each_set([&](std::size_t r) { out ^= m.row(r); });
  return ChainVector{phi.dim + 1, out};
}

bool ChainOps::pair(const ChainVector& phi, const ChainVector& a) const {
  if (phi.dim != a.dim) throw dim_mismatch("pairing dimensions differ");
  BitVec t = phi.bits;
  t ^= a.bits;
  std::size_t ones = phi.bits.popcount() + a.bits.popcount() - t.popcount();
  return (ones / 2) & 1;
}

SpaceBasis ChainOps::space_basis(Which which, int k) const {
  SpaceBasis out;
  out.which = which;
  out.k = k;
  int n = top_dim();
  switch (which) {
    case Which::BoundarySpace: {  // B_k = im boundary_{k+1}
      if (k < -1 || k > n) throw dim_mismatch("B_k out of range");
      Subspace s(dim_c(k));
      if (k < n) {
        const Mat2& m = bmat_[k + 1];
        for (std::size_t c = 0; c < m.num_cols(); ++c) {
          BitVec col(dim_c(k));
          for (std::size_t r = 0; r < m.num_rows(); ++r)
            if (m.row(r).get(c)) col.set(r);
          s.insert(std::move(col));
        }
      }
      out.basis = s.basis();
      break;
    }
    case Which::CycleSpace: {  // Z_k = ker boundary_k
      if (k < -1 || k > n) throw dim_mismatch("Z_k out of range");
      if (k == -1) {
        // boundary of the empty face is 0
        BitVec v(dim_c(-1));
        v.set(0);
        out.basis = {v};
      } else {
        out.basis = kernel_basis(bmat_[k]);
      }
      break;
    }
    case Which::CoboundarySpace: {  // B^k = im d_{k-1} = row space of boundary_k
      if (k < -1 || k > n) throw dim_mismatch("B^k out of range");
      Subspace s(dim_c(k));
      if (k >= 0) {
        const Mat2& m = bmat_[k];
        for (std::size_t r = 0; r < m.num_rows(); ++r) s.insert(m.row(r));
      }
      out.basis = s.basis();
      break;
    }
    case Which::CocycleSpace: {  // Z^k = ker d_k = left kernel of boundary_{k+1}
      if (k < -1 || k > n) throw dim_mismatch("Z^k out of range");
      if (k == n) {
        // d_n maps into C^{n+1} = 0
        Subspace s(dim_c(k));
        for (std::size_t i = 0; i < dim_c(k); ++i) {
          BitVec v(dim_c(k));
          v.set(i);
          s.insert(std::move(v));
        }
        out.basis = s.basis();
      } else {
        const Mat2& m = bmat_[k + 1];
        Mat2 mt(m.num_cols(), m.num_rows());
        for (std::size_t r = 0; r < m.num_rows(); ++r)
          m.row(r).for_each_set([&](std::size_t c) { mt.row(c).set(r); });
        out.basis = kernel_basis(mt);
      }
      break;
    }
  }
  return out;
}

Subspace ChainOps::space(Which which, int k) const {
  auto sb = space_basis(which, k);
  return Subspace::span(dim_c(k), sb.basis);
}

ChainVector ChainOps::from_faces(int k, const std::vector<Face>& faces) const {
  ChainVector v = zero(k);
  for (const auto& f : faces) {
    std::size_t idx = x_->face_index(k, f);
    if (idx == Complex::npos) throw not_a_face("chain face not in complex");
    v.bits.flip(idx);
  }
  return v;
}

std::vector<Face> ChainOps::support(const ChainVector& v) const {
  std::vector<Face> out;
  v.bits.for_each_set([&](std::size_t i) { out.push_back(x_->faces(v.dim)[i]); });
  return out;
}

namespace {

/// Exhaustive min-|v| over { start + span(basis) } by Gray-code scan.
/// Returns the minimizer (lex-least among ties).
BitVec coset_min_scan(BitVec start, const std::vector<BitVec>& basis) {
  BitVec cur = start;
  BitVec best = cur;
  std::size_t best_w = cur.popcount();
  std::uint64_t steps = (std::uint64_t)1 << basis.size();
  for (std::uint64_t t = 1; t < steps; ++t) {
    cur ^= basis[__builtin_ctzll(t)];
    std::size_t w = cur.popcount();
    if (w < best_w || (w == best_w && BitVec::lex_less(cur, best))) {
      best_w = w;
      best = cur;
    }
  }
  return best;
}

}  // namespace

FillResult fill(const ChainOps& ops, int k, const BitVec& b, const FillOptions& opt) {
  if (k < 0 || k > ops.top_dim()) throw dim_mismatch("fill: bad dimension");
  if (b.size() != ops.dim_c(k)) throw dim_mismatch("fill: wrong length");
  FillResult res;
  if (b.none()) {
    res.exists = true;
    res.chain = BitVec(ops.dim_c(k + 1));
    res.size = 0;
    res.optimal = true;
    return res;
  }
  const Mat2& m = ops.boundary_matrix(k + 1);
  BitVec x;
  if (!solve_f2(m, b, x)) {
    res.exists = false;  // Fill = infinity
    return res;
  }
  auto kb = kernel_basis(m);
  res.exists = true;
  if ((int)kb.size() <= opt.budget_log2) {
    res.chain = coset_min_scan(x, kb);
    res.optimal = true;
  } else if (opt.certifying) {
    throw search_space_too_large("fill: kernel dimension " + std::to_string(kb.size()) +
                                 " exceeds budget 2^" + std::to_string(opt.budget_log2));
  } else {
    // greedy descent over kernel basis vectors until no single flip helps
    res.chain = x;
    bool improved = true;
    while (improved) {
      improved = false;
      for (const auto& kv : kb) {
        BitVec cand = res.chain;
        cand ^= kv;
        if (cand.popcount() < res.chain.popcount()) {
          res.chain = cand;
          improved = true;
        }
      }
    }
    res.optimal = false;
  }
  res.size = res.chain.popcount();
  return res;
}

SysResult sys_cardinality(const ChainOps& ops, int k, int budget_log2) {
  if (k < 0 || k > ops.top_dim() - 1)
    throw dim_mismatch("sys: k must be at most top_dim - 1");
  auto zb = ops.space_basis(Which::CycleSpace, k);
  Subspace bspace = ops.space(Which::BoundarySpace, k);
  SysResult res;
  if (zb.dim() == bspace.dim()) {
    res.infinite = true;  // H_k = 0
    return res;
  }
  if ((int)zb.dim() > budget_log2)
    throw search_space_too_large("sys: dim Z_k = " + std::to_string(zb.dim()) + " over budget");
  BitVec cur(ops.dim_c(k));
  std::size_t best = (std::size_t)-1;
  BitVec best_v;
  std::uint64_t steps = (std::uint64_t)1 << zb.dim();
  for (std::uint64_t t = 1; t < steps; ++t) {
    cur ^= zb.basis[__builtin_ctzll(t)];
    std::size_t w = cur.popcount();
    if (w > best) continue;
    if ((w < best || BitVec::lex_less(cur, best_v)) && !bspace.contains(cur)) {
      best = w;
      best_v = cur;
    }
  }
  res.infinite = false;
  res.size = best;
  res.witness = best_v;
  return res;
}

}  // namespace hdx::hom
