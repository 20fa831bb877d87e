#include "hdx/cones.hpp"

#include <algorithm>
#include <deque>

#include "hdx/errors.hpp"

namespace hdx::cone {

using cx::Complex;
using cx::Face;
using hom::ChainOps;
using hom::ChainVector;

BuildOutcome build_cone(const ChainOps& ops, std::int32_t apex, int k,
                        const hom::FillOptions& opt) {
  const Complex& x = ops.complex();
  if (apex < 0 || apex >= x.num_vertices()) throw index_out_of_range("apex out of range");
  if (k < -1 || k > x.top_dim()) throw dim_mismatch("cone dimension out of range");
  ConeFunction cf;
  cf.apex = apex;
  cf.max_dim = k;
  cf.tables.resize(k + 2);

  // dim -1: the empty face goes to the apex
  cf.tables[0].assign(1, BitVec(ops.dim_c(0)));
  cf.tables[0][0].set(x.face_index(0, Face{apex}));
  if (k == -1) return cf;

  // dim 0: shortest-path trees from the apex, minimal-id parents
  {
    auto adj = x.adjacency();
    int nv = x.num_vertices();
    std::vector<int> dist(nv, -1);
    dist[apex] = 0;
    std::deque<std::int32_t> q{apex};
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (auto u : adj[v])
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          q.push_back(u);
        }
    }
    std::vector<std::int32_t> parent(nv, -1);
    for (int v = 0; v < nv; ++v) {
      if (dist[v] <= 0) continue;
      for (auto u : adj[v])  // adjacency sorted: first match is minimal id
        if (dist[u] == dist[v] - 1) {
          parent[v] = u;
          break;
        }
    }
    cf.tables[1].assign(ops.dim_c(0), BitVec(ops.dim_c(1)));
    for (int v = 0; v < nv; ++v) {
      std::size_t vi = x.face_index(0, Face{v});
      if (dist[v] == -1) {
        // u not reachable from the apex: {u} + {apex} is a nonbounding 0-cycle
        ChainVector cyc = ops.zero(0);
        cyc.bits.set(vi);
        cyc.bits.flip(x.face_index(0, Face{apex}));
        return Obstruction{0, Face{v}, cyc.bits};
      }
      std::int32_t cur = v;
      while (cur != apex) {
        std::int32_t p = parent[cur];
        Face e{std::min(cur, p), std::max(cur, p)};
        cf.tables[1][vi].flip(x.face_index(1, e));
        cur = p;
      }
    }
  }

  // dims >= 1: fill tau + Cone(boundary tau)
  for (int j = 1; j <= k; ++j) {
    cf.tables[j + 1].assign(ops.dim_c(j), BitVec(ops.dim_c(j + 1)));
    const Mat2& bm = ops.boundary_matrix(j);
    for (std::size_t ti = 0; ti < ops.dim_c(j); ++ti) {
      BitVec btau(ops.dim_c(j - 1));
      for (std::size_t r = 0; r < bm.num_rows(); ++r)
        if (bm.row(r).get(ti)) btau.set(r);
      // the cycle to fill: tau itself plus the cone of its boundary
      BitVec b(ops.dim_c(j));
      b.set(ti);
      b ^= cf.apply(j - 1, btau);
      auto fr = hom::fill(ops, j, b, opt);
      if (!fr.exists) return Obstruction{j, x.faces(j)[ti], b};
      cf.tables[j + 1][ti] = fr.chain;
    }
  }
  return cf;
}

VerifyResult verify_cone(const ChainOps& ops, const ConeFunction& cone) {
  for (int j = 0; j <= cone.max_dim; ++j) {
    const Mat2& bm = ops.boundary_matrix(j);
    for (std::size_t ti = 0; ti < ops.dim_c(j); ++ti) {
      ChainVector coned{j + 1, cone.of(j, ti)};
      BitVec lhs = ops.boundary(coned).bits;
      BitVec btau(ops.dim_c(j - 1));
      for (std::size_t r = 0; r < bm.num_rows(); ++r)
        if (bm.row(r).get(ti)) btau.set(r);
      BitVec rhs = cone.apply(j - 1, btau);
      rhs.flip(ti);
      if (lhs != rhs) return VerifyResult{false, j, ti};
    }
  }
  return VerifyResult{};
}

ConeFunction act_on_cone(const ChainOps& ops, const ConeFunction& cone,
                         const std::vector<std::int32_t>& vertex_perm) {
  const Complex& x = ops.complex();
  if ((int)vertex_perm.size() != x.num_vertices())
    throw no_group_attached("vertex permutation has wrong size");
  // face index permutations per dimension, plus the inverse vertex map
  std::vector<std::int32_t> inv(vertex_perm.size());
  for (std::size_t v = 0; v < vertex_perm.size(); ++v) inv[vertex_perm[v]] = (std::int32_t)v;
  auto face_image_index = [&](int d, const Face& f, const std::vector<std::int32_t>& vmap) {
    Face g;
    g.reserve(f.size());
    for (auto v : f) g.push_back(vmap[v]);
    std::sort(g.begin(), g.end());
    std::size_t idx = x.face_index(d, g);
    if (idx == Complex::npos) throw InvariantError("Action", "permutation does not preserve faces");
    return idx;
  };
  ConeFunction out;
  out.apex = vertex_perm[cone.apex];
  out.max_dim = cone.max_dim;
  out.tables.resize(cone.tables.size());
  for (int j = -1; j <= cone.max_dim; ++j) {
    out.tables[j + 1].assign(ops.dim_c(j), BitVec(ops.dim_c(j + 1)));
    for (std::size_t ti = 0; ti < ops.dim_c(j); ++ti) {
      // (g.Cone)(tau) = g(Cone(g^{-1} tau))
      std::size_t src = j == -1 ? 0 : face_image_index(j, x.faces(j)[ti], inv);
      const BitVec& val = cone.of(j, src);
      BitVec img(ops.dim_c(j + 1));
      val.for_each_set(
          [&](std::size_t fi) { img.set(face_image_index(j + 1, x.faces(j + 1)[fi], vertex_perm)); });
      out.tables[j + 1][ti] = std::move(img);
    }
  }
  return out;
}

CradReport crad_upper(const ChainOps& ops, int k, const std::vector<std::int32_t>& apex_set,
                      const hom::FillOptions& opt) {
  CradReport rep;
  rep.k = k;
  rep.crad_upper = (std::size_t)-1;
  for (auto apex : apex_set) {
    auto outcome = build_cone(ops, apex, k, opt);
    if (std::holds_alternative<Obstruction>(outcome)) {
      rep.vol_per_apex.push_back(-1);
      continue;
    }
    const auto& cf = std::get<ConeFunction>(outcome);
    std::size_t v = cf.vol();
    rep.vol_per_apex.push_back((std::int64_t)v);
    if (v < rep.crad_upper) {
      rep.crad_upper = v;
      rep.best_apex = apex;
    }
  }
  if (rep.best_apex == -1) {
    rep.obstructed = true;
    rep.crad_upper = 0;
  }
  rep.fills_optimal = opt.certifying;
  return rep;
}

MConstants m_constants(const ChainOps& ops, int k, const hom::FillOptions& opt) {
  MConstants mc;
  mc.k = k;
  mc.m.assign(k + 2, -1);
  mc.m[0] = 1;  // M_{-1}
  for (int j = 0; j <= k; ++j) {
    std::int64_t bound = (j + 1) * mc.m[j] + 1;
    // hypothesis: Sys_j > bound
    auto sys = hom::sys_cardinality(ops, j, opt.budget_log2);
    if (!sys.infinite && (std::int64_t)sys.size <= bound) {
      mc.hypothesis_holds = false;
      mc.first_failed_dim = j;
      return mc;
    }
    // M_j = max fill over cycles of size <= bound
    auto zb = ops.space_basis(hom::Which::CycleSpace, j);
    if ((int)zb.dim() > opt.budget_log2)
      throw search_space_too_large("m_constants: dim Z_j over budget");
    std::int64_t mj = 0;
    BitVec cur(ops.dim_c(j));
    std::uint64_t steps = (std::uint64_t)1 << zb.dim();
    for (std::uint64_t t = 1; t < steps; ++t) {
      cur ^= zb.basis[__builtin_ctzll(t)];
      if ((std::int64_t)cur.popcount() > bound) continue;
      auto fr = hom::fill(ops, j, cur, opt);
      if (!fr.exists)
        throw InvariantError("MConstants", "nonbounding cycle under Sys bound");
      mj = std::max(mj, (std::int64_t)fr.size);
    }
    mc.m[j + 1] = mj;
  }
  return mc;
}

EquivalenceVerdict existence_equivalence_test(const ChainOps& ops, int k,
                                              const hom::FillOptions& opt) {
  EquivalenceVerdict v;
  v.k = k;
  for (int j = 0; j <= k; ++j) {
    std::size_t zd = ops.space_basis(hom::Which::CycleSpace, j).dim();
    std::size_t bd = ops.space_basis(hom::Which::BoundarySpace, j).dim();
    std::size_t zcd = ops.space_basis(hom::Which::CocycleSpace, j).dim();
    std::size_t bcd = ops.space_basis(hom::Which::CoboundarySpace, j).dim();
    if (zd - bd != zcd - bcd)
      throw InvariantError("RankNullity", "homology and cohomology dims differ");
    if (zd != bd) {
      v.homology_vanishes = false;
      v.first_nonzero_dim = j;
      break;
    }
  }
  // try every apex until a cone builds (vertex-transitive cases need one)
  const Complex& x = ops.complex();
  std::optional<Obstruction> last_obs;
  for (std::int32_t apex = 0; apex < x.num_vertices(); ++apex) {
    auto outcome = build_cone(ops, apex, k, opt);
    if (std::holds_alternative<ConeFunction>(outcome)) {
      v.cone_built = true;
      break;
    }
    last_obs = std::get<Obstruction>(outcome);
  }
  if (!v.cone_built) v.obstruction = last_obs;
  v.consistent = (v.cone_built == v.homology_vanishes);
  return v;
}

ChainVector contract_with_cone(const ChainOps& ops, const ConeFunction& cone,
                               const ChainVector& phi) {
  int j = phi.dim - 1;  // result dimension
  if (j < -1 || j > cone.max_dim) throw dim_mismatch("contraction: dimension out of range");
  if (phi.bits.size() != ops.dim_c(phi.dim)) throw dim_mismatch("contraction: wrong length");
  ChainVector out = ops.zero(j);
  for (std::size_t ti = 0; ti < ops.dim_c(j); ++ti) {
    const BitVec& coned = cone.of(j, ti);
    BitVec t = coned;
    t ^= phi.bits;
    std::size_t ones = coned.popcount() + phi.bits.popcount() - t.popcount();
    if ((ones / 2) & 1) out.bits.set(ti);
  }
  return out;
}

}  // namespace hdx::cone
