#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "hdx/groups.hpp"

using namespace hdx;
using namespace hdx::algebra;
using namespace hdx::groups;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("closure of the identity is the trivial group") {
  Ring r = Ring::make_field(3);
  Group g = Group::generate_closure(r, {Mat::identity(r, 4)});
  CHECK(g.size() == 1);
  CHECK(g.generators().empty());
}

TEST_CASE("Unip_4(F_q) sizes match the free-entry count q^6") {
  for (int q : {2, 3}) {
    Group g = build_unip_fq(3, q);
    CHECK((std::int64_t)g.size() == ipow(q, 6));
    // interning is injective and identity is id 0
    CHECK(g.find(Mat::identity(g.ring(), 4)) == 0);
    // every element is unitriangular
    for (ElementId e = 0; e < g.size(); ++e) CHECK(is_upper_unitriangular(g.matrix(e)));
  }
}

TEST_CASE("group multiplication agrees with matrix multiplication") {
  Group g = build_unip_fq(3, 3);
  const Ring& r = g.ring();
  for (ElementId a = 0; a < 40; ++a)
    for (ElementId b = 0; b < 40; ++b) {
      Mat prod = mat_mul(r, g.matrix(a), g.matrix(b));
      CHECK(g.mul(a, b) == g.id_of(prod));
    }
  for (ElementId a = 0; a < g.size(); a += 17) CHECK(g.mul(a, g.inverse(a)) == 0);
}

TEST_CASE("size cap aborts closure") {
  CHECK_THROWS_AS(build_unip_fq(3, 3, 100), BudgetError);
}

TEST_CASE("standard subgroups of Unip_4(F_3)") {
  Group g = build_unip_fq(3, 3);
  auto ks = standard_subgroups(g, 3, 3, false);
  REQUIRE(ks.size() == 3);
  CHECK(ks[0].size() == 27);  // Unip_3 copy
  CHECK(ks[1].size() == 9);   // abelian e12 x e34
  CHECK(ks[2].size() == 27);
  for (const auto& k : ks) {
    CHECK(k.contains(0));
    // closed under product and inverse
    for (std::size_t i = 0; i < k.members.size(); i += 5)
      for (std::size_t j = 0; j < k.members.size(); j += 7)
        CHECK(k.contains(g.mul(k.members[i], k.members[j])));
    for (auto m : k.members) CHECK(k.contains(g.inverse(m)));
  }
  // intersection of subgroups is closed
  auto k01 = subgroup_intersection(ks[0], ks[1]);
  CHECK(k01.size() == 3);  // <e34>
  for (auto a : k01.members)
    for (auto b : k01.members) CHECK(k01.contains(g.mul(a, b)));
}

TEST_CASE("coset enumeration satisfies Lagrange and coset semantics") {
  Group g = build_unip_fq(3, 3);
  auto ks = standard_subgroups(g, 3, 3, false);
  auto p = enumerate_cosets(g, ks[0]);
  CHECK(p.cosets.size() == 27);  // 729 / 27
  // g and g*h land in the same coset for h in K
  for (ElementId e = 0; e < g.size(); e += 31)
    for (auto h : ks[0].members)
      CHECK(p.coset_of[e] == p.coset_of[g.mul(e, h)]);
  // two elements in one coset differ by a subgroup element
  for (ElementId a = 0; a < 200; a += 13)
    for (ElementId b = 0; b < 200; b += 17)
      CHECK((p.coset_of[a] == p.coset_of[b]) == ks[0].contains(g.mul(g.inverse(a), b)));
  // canonical representative is the least element id
  for (const auto& c : p.cosets) CHECK(std::is_sorted(c.begin(), c.end()));
  // full group has exactly one coset
  auto whole = subgroup_closure(g, g.generators());
  CHECK(whole.size() == g.size());
  CHECK(enumerate_cosets(g, whole).cosets.size() == 1);
}

TEST_CASE("min factorization length over K_0 u K_2") {
  Group g = build_unip_fq(3, 3);
  auto ks = standard_subgroups(g, 3, 3, false);
  std::vector<const SubgroupHandle*> alphabet{&ks[0], &ks[2]};
  auto dist = factorization_lengths(g, alphabet);
  CHECK(dist[0] == 0);  // identity
  // single letters have length 1
  for (auto m : ks[0].members)
    if (m != 0) CHECK(dist[m] == 1);
  // warm-up bound: every element is a product of at most 6 letters
  int mx = 0;
  for (auto d : dist) {
    REQUIRE(d != kUnreached);
    mx = std::max(mx, d);
  }
  CHECK(mx <= 6);
  // BFS layer property: one extra letter moves distance by at most 1
  for (ElementId e = 0; e < g.size(); e += 41)
    for (auto m : ks[2].members)
      if (m != 0) CHECK(dist[g.mul(e, m)] <= dist[e] + 1);
}

TEST_CASE("bounded generation diameter errors on non-generating sets") {
  Group g = build_unip_fq(3, 2);
  auto ks = standard_subgroups(g, 3, 2, false);
  std::vector<const SubgroupHandle*> single{&ks[1]};
  CHECK_THROWS_AS(bounded_generation_diameter(g, single), Error);
  std::vector<const SubgroupHandle*> all{&ks[0], &ks[1], &ks[2]};
  CHECK(bounded_generation_diameter(g, all) <= 6);
}

TEST_CASE("gauss peel recomposes, and the residual corner identity holds") {
  Group g = build_unip_fq(3, 5);
  auto ks = standard_subgroups(g, 3, 5, false);
  for (ElementId e = 0; e < g.size(); e += 97) {
    auto peel = gauss_peel(g, e, ks[0], ks[2]);
    CHECK(g.mul(g.mul(peel.g1, peel.g2), peel.residue) == e);
  }
  // peel of a pure corner element returns it untouched
  const Ring& r = g.ring();
  Mat corner = elementary_matrix(r, 4, 1, 4, Poly::constant(2));
  auto peel = gauss_peel(g, g.id_of(corner), ks[0], ks[2]);
  CHECK(peel.g1 == 0);
  CHECK(peel.g2 == 0);
  CHECK(peel.residue == g.id_of(corner));
  // e_{1,n+1}(a) = e_{1,n}(-a) e_{n,n+1}(-1) e_{1,n}(a) e_{n,n+1}(1)
  const Field& f = Field::get(5);
  for (int a = 0; a < 5; ++a) {
    Mat lhs = elementary_matrix(r, 4, 1, 4, Poly::constant((std::uint8_t)a));
    Mat rhs = mat_mul(r, mat_mul(r, elementary_matrix(r, 4, 1, 3, Poly::constant(f.neg(a))),
                                 elementary_matrix(r, 4, 3, 4, Poly::constant(f.neg(1)))),
                      mat_mul(r, elementary_matrix(r, 4, 1, 3, Poly::constant((std::uint8_t)a)),
                              elementary_matrix(r, 4, 3, 4, Poly::constant(1))));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("polynomial-entry group G_link over F_2 has 2^16 elements") {
  Group g = build_unip_poly(3, 2);
  CHECK(g.size() == 65536);  // 16 free coefficients
  // degree pattern enforced throughout the closure
  for (ElementId e = 0; e < g.size(); e += 997)
    CHECK(satisfies_degree_pattern(g.matrix(e)));
}

TEST_CASE("group cache round-trips") {
  Group g = build_unip_fq(3, 2);
  std::string path = "/tmp/hdx_group_cache_test.txt";
  g.save(path);
  Group h = Group::load(path);
  REQUIRE(h.size() == g.size());
  CHECK(h.generators() == g.generators());
  for (ElementId e = 0; e < g.size(); ++e) {
    CHECK(h.matrix(e) == g.matrix(e));
    CHECK(h.bfs_layer(e) == g.bfs_layer(e));
  }
  std::remove(path.c_str());
}
