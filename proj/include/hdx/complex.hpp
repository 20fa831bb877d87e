#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdx/groups.hpp"
#include "hdx/rational.hpp"

namespace hdx::cx {

/// A face is a sorted tuple of vertex ids; dimension = size - 1. The empty
/// face lives at dimension -1 and is always present.
using Face = std::vector<std::int32_t>;

/// Finite simplicial complex with faces listed per dimension in sorted
/// order. Optionally partite (vertex_types) when built from cosets.
class Complex {
 public:
  Complex() = default;

  /// Downward closure of the given faces (which need not be maximal only).
  static Complex from_faces(int num_vertices, const std::vector<Face>& faces);

  int top_dim() const { return (int)faces_.size() - 2; }
  int num_vertices() const { return nverts_; }
  std::size_t num_faces(int k) const {
    return (k < -1 || k > top_dim()) ? 0 : faces_[k + 1].size();
  }
  const std::vector<Face>& faces(int k) const { return faces_[k + 1]; }

  /// Index of a face in the sorted dim-k list; npos if absent.
  static constexpr std::size_t npos = (std::size_t)-1;
  std::size_t face_index(int k, const Face& f) const;
  bool has_face(const Face& f) const;

  bool is_pure() const { return pure_; }
  bool is_partite() const { return partite_; }
  const std::optional<std::vector<int>>& vertex_types() const { return types_; }
  void set_vertex_types(std::vector<int> types);

  /// Induced subcomplex of dimensions <= k.
  Complex skeleton(int k) const;

  /// 1-skeleton adjacency (vertex -> sorted neighbor list).
  std::vector<std::vector<std::int32_t>> adjacency() const;

  /// Downward closure and (when typed) partiteness; throws InvariantError on
  /// violation. Used by the file loader and after construction.
  void validate() const;

  std::string to_json() const;
  static Complex from_json(const std::string& text);

 private:
  int nverts_ = 0;
  bool pure_ = true;
  bool partite_ = false;
  std::optional<std::vector<int>> types_;
  // faces_[k+1]: sorted face tuples of dimension k; faces_[0] = { {} }.
  std::vector<std::vector<Face>> faces_;
};

/// Exact weight table: w(tau) = #{top faces containing tau} /
/// (C(n+1, k+1) * |X(n)|), per dimension. Sums to 1 in every dimension.
struct WeightTable {
  std::vector<std::vector<Rat>> w;  // w[k+1][face index]
  const Rat& at(int k, std::size_t idx) const { return w[k + 1][idx]; }
};

WeightTable weights(const Complex& x);

/// Clique closure of a graph (dimensions <= 1) up to max_dim.
Complex clique_closure(const Complex& one_skeleton, int max_dim);

/// Link of tau: faces eta disjoint from tau with tau u eta in X, relabeled to
/// a fresh complex; vertex_map sends link vertex ids back to X.
struct LinkResult {
  Complex complex;
  std::vector<std::int32_t> vertex_map;
};
LinkResult link(const Complex& x, const Face& tau);

/// Group action on a complex given as one vertex permutation per group
/// element (index-aligned with some element list).
struct ComplexAction {
  std::vector<std::vector<std::int32_t>> perms;

  Face apply(std::size_t g, const Face& f) const;
  /// Orbit of one face under the whole list; faces must exist in x.
  std::vector<Face> orbit(const Face& start) const;
};

/// Coset complex X(G, (K_i)) plus the bookkeeping needed to act on it.
struct CosetComplex {
  Complex complex;
  const groups::Group* group = nullptr;
  std::vector<groups::SubgroupHandle> subgroups;
  std::vector<groups::CosetPartition> partitions;  // per type
  std::vector<std::size_t> type_offset;            // vertex id = offset[i] + coset index
  // vertex -> (type, coset rep element)
  std::vector<int> vertex_type;
  std::vector<groups::ElementId> vertex_rep;

  std::int32_t vertex_of(int type, groups::ElementId g) const {
    return (std::int32_t)(type_offset[type] + partitions[type].coset_of[g]);
  }
  std::int32_t act_vertex(groups::ElementId g, std::int32_t v) const {
    int t = vertex_type[v];
    return vertex_of(t, group->mul(g, vertex_rep[v]));
  }
  Face act(groups::ElementId g, const Face& f) const;

  /// Materialized vertex permutations for every group element (desk scale).
  ComplexAction action() const;
};

CosetComplex build_coset_complex(const groups::Group& g,
                                 std::vector<groups::SubgroupHandle> subgroups);

/// Strong-symmetry certificate: evaluates the subgroup intersection
/// criterion for every proper tau and i outside it, independently computes
/// the orbit of G on top faces, and asserts the two verdicts agree.
struct SymmetryCertificate {
  bool criterion_holds = false;
  bool orbit_transitive = false;
  std::size_t top_face_count = 0;
  std::size_t orbit_size = 0;
  std::string first_violation;  // empty when criterion holds
};

SymmetryCertificate check_strong_symmetry(const CosetComplex& xc);

/// Orbit-only transitivity check for an explicit action (used for complexes
/// that are not coset complexes, e.g. reference complexes with a supplied
/// symmetry group).
bool top_face_transitive(const Complex& x, const ComplexAction& action);

}  // namespace hdx::cx
