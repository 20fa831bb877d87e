#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hdx/homology.hpp"

namespace hdx::cone {

/// k-cone function with a fixed apex: for each j in -1..k, a table sending
/// every j-face to a (j+1)-chain, subject to the cone equation
///   boundary(Cone(tau)) = tau + Cone(boundary(tau)).
struct ConeFunction {
  std::int32_t apex = 0;
  int max_dim = -1;  // k
  // tables[j+1][face index in X(j)] = BitVec over X(j+1); tables[0] is the
  // single entry for the empty face.
  std::vector<std::vector<BitVec>> tables;

  const BitVec& of(int j, std::size_t face_idx) const { return tables[j + 1][face_idx]; }

  /// Linear extension to chains.
  BitVec apply(int j, const BitVec& chain) const {
    BitVec out(tables[j + 1].empty() ? 0 : tables[j + 1][0].size());
    chain.for_each_set([&](std::size_t i) { out ^= tables[j + 1][i]; });
    return out;
  }

  /// Max table entry size over X(k) (the paper's volume).
  std::size_t vol() const {
    std::size_t v = 0;
    for (const auto& c : tables[max_dim + 1]) v = std::max(v, c.popcount());
    return v;
  }
};

/// Witness that no cone extends past dimension `dim`: the cycle
/// tau + Cone(boundary tau) is not a boundary.
struct Obstruction {
  int dim = 0;
  cx::Face face;
  BitVec cycle;
};

using BuildOutcome = std::variant<ConeFunction, Obstruction>;

/// Inductive construction: shortest paths at dimension 0 (breadth-first,
/// lexicographically-least parent tie-break), minimal homological fillings
/// above. k may go up to top_dim; the k = top_dim case is obstructed
/// whenever the needed cycle is nonbounding (C_{n+1} = 0).
BuildOutcome build_cone(const hom::ChainOps& ops, std::int32_t apex, int k,
                        const hom::FillOptions& opt = {});

struct VerifyResult {
  bool ok = true;
  int dim = 0;               // first violated dimension when !ok
  std::size_t face_idx = 0;  // first violated face when !ok
};

/// Exhaustive cone-equation sweep over all faces of all dims <= k.
VerifyResult verify_cone(const hom::ChainOps& ops, const ConeFunction& cone);

/// Translate a cone by a vertex permutation g of the complex:
/// (g.Cone)(A) = g(Cone(g^{-1} A)). Result has apex g(apex).
ConeFunction act_on_cone(const hom::ChainOps& ops, const ConeFunction& cone,
                         const std::vector<std::int32_t>& vertex_perm);

struct CradReport {
  int k = 0;
  bool obstructed = false;            // no apex admits a k-cone
  std::size_t crad_upper = 0;         // min constructed volume over apexes
  std::int32_t best_apex = -1;
  bool fills_optimal = true;          // false when any greedy fill was used
  std::vector<std::int64_t> vol_per_apex;  // -1 marks obstructed apex
};

/// Upper bound on the k-th cone radius from constructed cones over the
/// given apex set (all vertices for the exact-radius guarantee at k = 0).
CradReport crad_upper(const hom::ChainOps& ops, int k,
                      const std::vector<std::int32_t>& apex_set, const hom::FillOptions& opt = {});

struct MConstants {
  int k = 0;
  bool hypothesis_holds = true;          // Sys_j > (j+1) M_{j-1} + 1 for all j <= k
  int first_failed_dim = -1;
  std::vector<std::int64_t> m;           // m[j+1] = M_j, j = -1..k (valid up to failure)
};

/// The recursive filling constants M_j with their hypothesis checks;
/// requires exact fills (certifying mode).
MConstants m_constants(const hom::ChainOps& ops, int k, const hom::FillOptions& opt = {});

struct EquivalenceVerdict {
  int k = 0;
  bool homology_vanishes = true;   // H_j = 0 (and H^j = 0) for 0 <= j <= k
  int first_nonzero_dim = -1;
  bool cone_built = false;
  std::optional<Obstruction> obstruction;
  bool consistent = false;  // cone exists iff homology vanishes
};

/// Both directions of the existence <-> vanishing equivalence, checked
/// computationally (rank computation vs actual construction attempt).
EquivalenceVerdict existence_equivalence_test(const hom::ChainOps& ops, int k,
                                              const hom::FillOptions& opt = {});

/// Contraction operator: (iota phi)(A) = phi(Cone(A)) for phi of dimension
/// j+1 <= cone.max_dim + 1; satisfies iota(d phi) = phi + d(iota phi).
hom::ChainVector contract_with_cone(const hom::ChainOps& ops, const ConeFunction& cone,
                                    const hom::ChainVector& phi);

}  // namespace hdx::cone
