#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdx/algebra.hpp"

namespace hdx::groups {

using ElementId = std::uint32_t;
constexpr ElementId kNoElement = (ElementId)-1;

/// Finite matrix group enumerated by breadth-first generator closure.
///
/// Elements are interned in BFS discovery order from the sorted generator
/// list, which makes ids (and everything downstream: coset representatives,
/// vertex ids, golden files) deterministic. Identity is always id 0.
/// Element matrices are stored packed in a flat arena and decoded on demand.
class Group {
 public:
  /// Closure of `generators` under product. Throws GroupTooLarge if more
  /// than `size_cap` elements appear.
  static Group generate_closure(const algebra::Ring& ring, std::vector<algebra::Mat> generators,
                                std::size_t size_cap = kDefaultSizeCap);

  static constexpr std::size_t kDefaultSizeCap = (std::size_t)1 << 22;

  std::size_t size() const { return count_; }
  const algebra::Ring& ring() const { return ring_; }
  const std::vector<ElementId>& generators() const { return gens_; }

  algebra::Mat matrix(ElementId id) const;
  ElementId find(const algebra::Mat& m) const;  // kNoElement if absent
  ElementId id_of(const algebra::Mat& m) const;  // throws ForeignElement if absent

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;

  /// BFS distance from the identity over the generator alphabet.
  int bfs_layer(ElementId id) const { return layer_[id]; }

  /// Serialization (version-stamped text format) for HDX_CACHE_DIR.
  void save(const std::string& path) const;
  static Group load(const std::string& path);

  /// Max coeffs kept per matrix entry in the packed encoding.
  int coeffs_per_entry() const { return coeffs_per_entry_; }

 private:
  Group(const algebra::Ring& ring, int n);

  std::vector<std::uint64_t> encode(const algebra::Mat& m) const;
  ElementId intern(const algebra::Mat& m, bool& fresh);
  ElementId lookup(const std::vector<std::uint64_t>& key) const;
  void rehash(std::size_t cap);
  void build_mul_table() const;

  algebra::Ring ring_;
  int n_ = 0;
  int coeffs_per_entry_ = 1;
  int bits_per_coeff_ = 1;
  std::size_t words_per_elem_ = 1;
  std::size_t count_ = 0;
  std::size_t size_cap_ = kDefaultSizeCap;
  std::vector<std::uint64_t> arena_;     // count_ * words_per_elem_
  std::vector<std::uint32_t> table_;     // open addressing, values are id+1
  std::vector<ElementId> gens_;
  std::vector<std::uint16_t> layer_;
  mutable std::vector<ElementId> mul_table_;  // cached when size <= kMulTableCap
  mutable std::vector<ElementId> inv_table_;
  static constexpr std::size_t kMulTableCap = 4096;
};

/// Subgroup as an explicit member set of a parent group.
struct SubgroupHandle {
  const Group* parent = nullptr;
  std::vector<ElementId> members;       // sorted
  std::vector<char> member_mask;        // size |G|
  std::vector<ElementId> generator_spec;

  bool contains(ElementId g) const { return member_mask[g] != 0; }
  std::size_t size() const { return members.size(); }
};

/// Closure of `generators` inside `parent`; throws ForeignElement if a
/// generator is not in the parent.
SubgroupHandle subgroup_closure(const Group& parent, const std::vector<ElementId>& generators);

/// Intersection of subgroups of the same parent (itself a subgroup).
SubgroupHandle subgroup_intersection(const SubgroupHandle& a, const SubgroupHandle& b);

/// Left-coset partition of the parent by k. cosets[c] lists members of coset
/// c; coset_of[g] gives the coset index of g. Cosets are ordered by their
/// minimal ElementId (the canonical representative), so indices are stable.
struct CosetPartition {
  std::vector<std::vector<ElementId>> cosets;
  std::vector<std::int32_t> coset_of;
  std::vector<ElementId> rep;  // canonical (minimal) representative per coset
};

CosetPartition enumerate_cosets(const Group& parent, const SubgroupHandle& k);

/// Exact shortest factorization length of g over the union of the given
/// subgroups minus the identity (breadth-first over the Cayley graph).
/// Returns the full distance table; entry kUnreached marks unreachable.
constexpr int kUnreached = -1;
std::vector<int> factorization_lengths(const Group& g, const std::vector<const SubgroupHandle*>& alphabet);

int min_factorization_length(const Group& g, ElementId target,
                             const std::vector<const SubgroupHandle*>& alphabet);

/// max_g min-factorization-length; throws NotGenerating if some element is
/// unreachable. This is N0' - 1 in the certificate bookkeeping.
int bounded_generation_diameter(const Group& g, const std::vector<const SubgroupHandle*>& subgroups);

/// Peel g in a Unip-type group as g = g1 * g2 * e_{1,n+1}(a) with
/// g1 in `left` (K_{0} pattern: trivial first row) and g2 in `right`
/// (K_{n-1} pattern: trivial last column). Verified by multiplication.
struct GaussPeel {
  ElementId g1, g2, residue;
  algebra::Poly corner;
};
GaussPeel gauss_peel(const Group& g, ElementId target, const SubgroupHandle& left,
                     const SubgroupHandle& right);

// ---- Standard constructions ------------------------------------------------

/// Unip_{n+1}(F_q): closure of the superdiagonal elementary matrices.
Group build_unip_fq(int n, int q, std::size_t cap = Group::kDefaultSizeCap);

/// Polynomial-entry group over F_q[t] with the degree <= j - i pattern
/// (closure of e_{i,i+1}(a + b t)).
Group build_unip_poly(int n, int q, std::size_t cap = Group::kDefaultSizeCap);

/// X^{(s)}_q group: 4x4 over F_q[t]/(t^s), generators e_{12}, e_{23}, e_{34},
/// e_{41} with linear entries. Expected to exceed desk-scale caps for most
/// (q, s); callers must handle GroupTooLarge.
Group build_xsq_group(int q, int s, std::size_t cap = Group::kDefaultSizeCap);

/// The K_{i} subgroups: for 0 <= i <= n-1, generated by e_{j,j+1}(...) for
/// j in {1..n} \ {i+1}. `linear_entries` selects a+bt generators (polynomial
/// group) versus field constants.
std::vector<SubgroupHandle> standard_subgroups(const Group& g, int n, int q, bool linear_entries);

}  // namespace hdx::groups
