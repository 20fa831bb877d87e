#include "hdx/groups.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace hdx::groups {

using algebra::Mat;
using algebra::Poly;
using algebra::Ring;

namespace {

int bits_for(int q) {
  int b = 1;
  while ((1 << b) < q) ++b;
  return b;
}

std::uint64_t fnv1a(const std::uint64_t* data, std::size_t n) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t w = data[i];
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace

Group::Group(const Ring& ring, int n) : ring_(ring), n_(n) {
  switch (ring.mode) {
    case algebra::RingMode::Field: coeffs_per_entry_ = 1; break;
    case algebra::RingMode::Poly: coeffs_per_entry_ = n; break;  // degree <= n-1 pattern, n coeffs
    case algebra::RingMode::Quotient: coeffs_per_entry_ = ring.trunc; break;
  }
  bits_per_coeff_ = bits_for(ring.field->q());
  std::size_t total_bits = (std::size_t)n * n * coeffs_per_entry_ * bits_per_coeff_;
  words_per_elem_ = (total_bits + 63) / 64;
}

std::vector<std::uint64_t> Group::encode(const Mat& m) const {
  std::vector<std::uint64_t> out(words_per_elem_, 0);
  std::size_t bit = 0;
  for (const auto& p : m.e) {
    if (p.degree() >= coeffs_per_entry_)
      throw degree_violation("entry degree " + std::to_string(p.degree()) +
                             " exceeds group encoding width");
    for (int k = 0; k < coeffs_per_entry_; ++k) {
      std::uint64_t c = p.coeff(k);
      std::size_t w = bit >> 6, off = bit & 63;
      out[w] |= c << off;
      if (off + bits_per_coeff_ > 64) out[w + 1] |= c >> (64 - off);
      bit += bits_per_coeff_;
    }
  }
  return out;
}

Mat Group::matrix(ElementId id) const {
  Mat m;
  m.n = n_;
  m.e.assign((std::size_t)n_ * n_, Poly::zero());
  const std::uint64_t* base = arena_.data() + (std::size_t)id * words_per_elem_;
  std::size_t bit = 0;
  std::uint64_t mask = ((std::uint64_t)1 << bits_per_coeff_) - 1;
  for (auto& p : m.e) {
    p.c.assign(coeffs_per_entry_, 0);
    for (int k = 0; k < coeffs_per_entry_; ++k) {
      std::size_t w = bit >> 6, off = bit & 63;
      std::uint64_t c = base[w] >> off;
      if (off + bits_per_coeff_ > 64) c |= base[w + 1] << (64 - off);
      p.c[k] = (std::uint8_t)(c & mask);
      bit += bits_per_coeff_;
    }
    while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
  }
  return m;
}

void Group::rehash(std::size_t cap) {
  std::vector<std::uint32_t> fresh(cap, 0);
  for (std::size_t id = 0; id < count_; ++id) {
    const std::uint64_t* key = arena_.data() + id * words_per_elem_;
    std::size_t h = fnv1a(key, words_per_elem_) & (cap - 1);
    while (fresh[h]) h = (h + 1) & (cap - 1);
    fresh[h] = (std::uint32_t)(id + 1);
  }
  table_ = std::move(fresh);
}

ElementId Group::lookup(const std::vector<std::uint64_t>& key) const {
  if (table_.empty()) return kNoElement;
  std::size_t cap = table_.size();
  std::size_t h = fnv1a(key.data(), words_per_elem_) & (cap - 1);
  while (table_[h]) {
    std::size_t id = table_[h] - 1;
    if (std::equal(key.begin(), key.end(), arena_.begin() + id * words_per_elem_))
      return (ElementId)id;
    h = (h + 1) & (cap - 1);
  }
  return kNoElement;
}

ElementId Group::intern(const Mat& m, bool& fresh) {
  auto key = encode(m);
  ElementId found = lookup(key);
  if (found != kNoElement) {
    fresh = false;
    return found;
  }
  if (count_ >= size_cap_)
    throw group_too_large("generator closure exceeded size cap " + std::to_string(size_cap_));
  if (table_.empty() || (count_ + 1) * 2 > table_.size())
    rehash(std::max<std::size_t>(1024, table_.size() * 2));
  arena_.insert(arena_.end(), key.begin(), key.end());
  ElementId id = (ElementId)count_++;
  std::size_t cap = table_.size();
  std::size_t h = fnv1a(key.data(), words_per_elem_) & (cap - 1);
  while (table_[h]) h = (h + 1) & (cap - 1);
  table_[h] = id + 1;
  fresh = true;
  return id;
}

Group Group::generate_closure(const Ring& ring, std::vector<Mat> generators, std::size_t size_cap) {
  if (generators.empty()) throw Error("EmptyGenerators", "need at least one generator");
  int n = generators[0].n;
  for (const auto& g : generators)
    if (g.n != n) throw ring_mismatch("generator sizes differ");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  Group g(ring, n);
  g.size_cap_ = size_cap;
  bool fresh;
  g.intern(Mat::identity(ring, n), fresh);
  g.layer_.push_back(0);
  std::vector<Mat> gen_mats;
  for (const auto& m : generators) {
    ElementId id = g.intern(m, fresh);
    if (fresh) g.layer_.push_back(1);
    if (id != 0) {  // identity can appear among generators; drop it from the alphabet
      g.gens_.push_back(id);
      gen_mats.push_back(m);
    }
  }
  // BFS over right multiplication by generators.
  for (std::size_t head = 0; head < g.count_; ++head) {
    Mat cur = g.matrix((ElementId)head);
    for (const auto& s : gen_mats) {
      Mat prod = algebra::mat_mul(ring, cur, s);
      ElementId id = g.intern(prod, fresh);
      if (fresh) g.layer_.push_back((std::uint16_t)(g.layer_[head] + 1));
      (void)id;
    }
  }
  return g;
}

ElementId Group::find(const Mat& m) const { return lookup(encode(m)); }

ElementId Group::id_of(const Mat& m) const {
  ElementId id = find(m);
  if (id == kNoElement) throw foreign_element("matrix not in group");
  return id;
}

void Group::build_mul_table() const {
  mul_table_.assign(count_ * count_, kNoElement);
  std::vector<Mat> mats(count_);
  for (std::size_t i = 0; i < count_; ++i) mats[i] = matrix((ElementId)i);
  for (std::size_t a = 0; a < count_; ++a)
    for (std::size_t b = 0; b < count_; ++b) {
      Mat prod = algebra::mat_mul(ring_, mats[a], mats[b]);
      ElementId id = lookup(encode(prod));
      if (id == kNoElement) throw InvariantError("Closure", "product escaped the group");
      mul_table_[a * count_ + b] = id;
    }
  inv_table_.assign(count_, kNoElement);
  for (std::size_t a = 0; a < count_; ++a)
    for (std::size_t b = 0; b < count_; ++b)
      if (mul_table_[a * count_ + b] == 0) {
        inv_table_[a] = (ElementId)b;
        break;
      }
}

ElementId Group::mul(ElementId a, ElementId b) const {
  if (count_ <= kMulTableCap) {
    if (mul_table_.empty()) build_mul_table();
    return mul_table_[(std::size_t)a * count_ + b];
  }
  Mat prod = algebra::mat_mul(ring_, matrix(a), matrix(b));
  ElementId id = lookup(encode(prod));
  if (id == kNoElement) throw InvariantError("Closure", "product escaped the group");
  return id;
}

ElementId Group::inverse(ElementId a) const {
  if (count_ <= kMulTableCap) {
    if (mul_table_.empty()) build_mul_table();
    return inv_table_[a];
  }
  Mat m = matrix(a);
  if (algebra::is_upper_unitriangular(m))
    return id_of(algebra::mat_inverse_unitriangular(ring_, m));
  // fall back to scanning powers: finite order
  ElementId acc = a, prev = 0;
  while (acc != 0) {
    prev = acc;
    acc = mul(acc, a);
  }
  return prev;
}

void Group::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("Io", "cannot write " + path);
  out << "hdx-group-cache v1\n";
  out << ring_.str() << "\n";
  out << n_ << " " << count_ << " " << words_per_elem_ << "\n";
  for (auto g : gens_) out << g << " ";
  out << "\n";
  out << std::hex;
  for (std::size_t i = 0; i < arena_.size(); ++i) out << arena_[i] << (i + 1 == arena_.size() ? "\n" : " ");
  out << std::dec;
  for (std::size_t i = 0; i < count_; ++i) out << layer_[i] << (i + 1 == count_ ? "\n" : " ");
}

Group Group::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("Io", "cannot read " + path);
  std::string line;
  std::getline(in, line);
  if (line != "hdx-group-cache v1") throw Error("Io", "bad cache version in " + path);
  std::string ringstr;
  std::getline(in, ringstr);
  // parse ring string: Fq | Fq[t] | Fq[t]/(t^s)
  int q = 0, s = 0;
  Ring ring;
  if (sscanf(ringstr.c_str(), "F%d[t]/(t^%d)", &q, &s) == 2)
    ring = Ring::make_quotient(q, s);
  else if (ringstr.find("[t]") != std::string::npos && sscanf(ringstr.c_str(), "F%d[t]", &q) == 1)
    ring = Ring::make_poly(q);
  else if (sscanf(ringstr.c_str(), "F%d", &q) == 1)
    ring = Ring::make_field(q);
  else
    throw Error("Io", "bad ring spec " + ringstr);
  int n;
  std::size_t count, wpe;
  in >> n >> count >> wpe;
  Group g(ring, n);
  if (wpe != g.words_per_elem_) throw Error("Io", "encoding width mismatch");
  std::getline(in, line);
  std::getline(in, line);
  {
    std::istringstream gs(line);
    ElementId id;
    while (gs >> id) g.gens_.push_back(id);
  }
  g.arena_.resize(count * wpe);
  in >> std::hex;
  for (auto& w : g.arena_) in >> w;
  in >> std::dec;
  g.count_ = count;
  g.layer_.resize(count);
  for (auto& l : g.layer_) {
    int v;
    in >> v;
    l = (std::uint16_t)v;
  }
  g.rehash(std::max<std::size_t>(1024, 2 * count));
  // round-trip sanity: identity must be id 0
  if (g.find(Mat::identity(ring, n)) != 0) throw Error("Io", "corrupt cache: identity not id 0");
  return g;
}

SubgroupHandle subgroup_closure(const Group& parent, const std::vector<ElementId>& generators) {
  for (auto g : generators)
    if (g >= parent.size()) throw foreign_element("generator id out of range");
  SubgroupHandle h;
  h.parent = &parent;
  h.generator_spec = generators;
  h.member_mask.assign(parent.size(), 0);
  std::deque<ElementId> queue;
  h.member_mask[0] = 1;
  queue.push_back(0);
  std::vector<ElementId> gens = generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  while (!queue.empty()) {
    ElementId cur = queue.front();
    queue.pop_front();
    for (auto s : gens) {
      ElementId nxt = parent.mul(cur, s);
      if (!h.member_mask[nxt]) {
        h.member_mask[nxt] = 1;
        queue.push_back(nxt);
      }
    }
  }
  for (ElementId i = 0; i < parent.size(); ++i)
    if (h.member_mask[i]) h.members.push_back(i);
  return h;
}

SubgroupHandle subgroup_intersection(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.parent != b.parent) throw foreign_element("intersection across different parents");
  SubgroupHandle h;
  h.parent = a.parent;
  h.member_mask.assign(a.parent->size(), 0);
  for (auto g : a.members)
    if (b.contains(g)) {
      h.member_mask[g] = 1;
      h.members.push_back(g);
    }
  return h;
}

CosetPartition enumerate_cosets(const Group& parent, const SubgroupHandle& k) {
  CosetPartition p;
  p.coset_of.assign(parent.size(), -1);
  for (ElementId g = 0; g < parent.size(); ++g) {
    if (p.coset_of[g] != -1) continue;
    std::int32_t idx = (std::int32_t)p.cosets.size();
    std::vector<ElementId> coset;
    coset.reserve(k.size());
    for (auto m : k.members) {
      ElementId x = parent.mul(g, m);
      if (p.coset_of[x] != -1 && p.coset_of[x] != idx)
        throw InvariantError("Cosets", "element in two cosets");
      if (p.coset_of[x] == -1) {
        p.coset_of[x] = idx;
        coset.push_back(x);
      }
    }
    std::sort(coset.begin(), coset.end());
    p.rep.push_back(coset.front());
    p.cosets.push_back(std::move(coset));
  }
  // Lagrange check
  if (p.cosets.size() * k.size() != parent.size())
    throw InvariantError("Lagrange", "|G| != |K| * #cosets");
  return p;
}

std::vector<int> factorization_lengths(const Group& g,
                                       const std::vector<const SubgroupHandle*>& alphabet) {
  std::vector<char> in_alpha(g.size(), 0);
  for (auto* k : alphabet)
    for (auto m : k->members)
      if (m != 0) in_alpha[m] = 1;
  std::vector<ElementId> letters;
  for (ElementId i = 0; i < g.size(); ++i)
    if (in_alpha[i]) letters.push_back(i);
  std::vector<int> dist(g.size(), kUnreached);
  std::deque<ElementId> queue;
  dist[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    ElementId cur = queue.front();
    queue.pop_front();
    for (auto s : letters) {
      ElementId nxt = g.mul(cur, s);
      if (dist[nxt] == kUnreached) {
        dist[nxt] = dist[cur] + 1;
        queue.push_back(nxt);
      }
    }
  }
  return dist;
}

int min_factorization_length(const Group& g, ElementId target,
                             const std::vector<const SubgroupHandle*>& alphabet) {
  auto dist = factorization_lengths(g, alphabet);
  if (dist[target] == kUnreached) throw unreachable("element not generated by alphabet");
  return dist[target];
}

int bounded_generation_diameter(const Group& g,
                                const std::vector<const SubgroupHandle*>& subgroups) {
  auto dist = factorization_lengths(g, subgroups);
  int mx = 0;
  for (auto d : dist) {
    if (d == kUnreached) throw not_generating("subgroups do not generate the group");
    mx = std::max(mx, d);
  }
  return mx;
}

GaussPeel gauss_peel(const Group& g, ElementId target, const SubgroupHandle& left,
                     const SubgroupHandle& right) {
  const Ring& ring = g.ring();
  Mat m = g.matrix(target);
  if (!algebra::is_upper_unitriangular(m)) throw shape_mismatch("peel needs a unitriangular element");
  int n1 = m.n;  // n+1
  // g1: agree with m on rows 2..n+1, identity first row.
  Mat g1 = m;
  for (int j = 2; j <= n1; ++j) g1.at(1, j) = Poly::zero();
  // g2: first-row entries at columns 2..n.
  Mat g2 = Mat::identity(ring, n1);
  for (int j = 2; j <= n1 - 1; ++j) g2.at(1, j) = m.at(1, j);
  Mat res = algebra::elementary_matrix(ring, n1, 1, n1, m.at(1, n1));
  ElementId id1 = g.find(g1), id2 = g.find(g2), idr = g.find(res);
  if (id1 == kNoElement || id2 == kNoElement || idr == kNoElement)
    throw shape_mismatch("peel factors left the group");
  if (!left.contains(id1) || !right.contains(id2))
    throw shape_mismatch("peel factors not in the given subgroups");
  if (g.mul(g.mul(id1, id2), idr) != target)
    throw InvariantError("GaussPeel", "recomposition failed");
  return GaussPeel{id1, id2, idr, m.at(1, n1)};
}

Group build_unip_fq(int n, int q, std::size_t cap) {
  Ring ring = Ring::make_field(q);
  std::vector<Mat> gens;
  for (int j = 1; j <= n; ++j)
    for (int a = 1; a < q; ++a)
      gens.push_back(algebra::elementary_matrix(ring, n + 1, j, j + 1, Poly::constant((std::uint8_t)a)));
  return Group::generate_closure(ring, std::move(gens), cap);
}

Group build_unip_poly(int n, int q, std::size_t cap) {
  Ring ring = Ring::make_poly(q);
  std::vector<Mat> gens;
  for (int j = 1; j <= n; ++j)
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        Poly r = algebra::poly_add(ring, Poly::constant((std::uint8_t)a),
                                   algebra::poly_mul(ring, Poly::monomial(1, 1),
                                                     Poly::constant((std::uint8_t)b)));
        gens.push_back(algebra::elementary_matrix(ring, n + 1, j, j + 1, r, true));
      }
  return Group::generate_closure(ring, std::move(gens), cap);
}

Group build_xsq_group(int q, int s, std::size_t cap) {
  if (s <= 4) throw Error("ConfigError", "xsq construction requires s > 4");
  Ring ring = Ring::make_quotient(q, s);
  std::vector<Mat> gens;
  auto add_gens = [&](int i, int j) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        Poly r = algebra::poly_add(ring, Poly::constant((std::uint8_t)a),
                                   Poly::monomial((std::uint8_t)b, 1));
        gens.push_back(algebra::elementary_matrix(ring, 4, i, j, r));
      }
  };
  add_gens(1, 2);
  add_gens(2, 3);
  add_gens(3, 4);
  add_gens(4, 1);
  return Group::generate_closure(ring, std::move(gens), cap);
}

std::vector<SubgroupHandle> standard_subgroups(const Group& g, int n, int q, bool linear_entries) {
  const Ring& ring = g.ring();
  std::vector<SubgroupHandle> out;
  for (int i = 0; i <= n - 1; ++i) {
    std::vector<ElementId> gens;
    for (int j = 1; j <= n; ++j) {
      if (j == i + 1) continue;
      if (linear_entries) {
        for (int a = 0; a < q; ++a)
          for (int b = 0; b < q; ++b) {
            if (a == 0 && b == 0) continue;
            Poly r = algebra::poly_add(ring, Poly::constant((std::uint8_t)a),
                                       Poly::monomial((std::uint8_t)b, 1));
            gens.push_back(g.id_of(algebra::elementary_matrix(ring, n + 1, j, j + 1, r, true)));
          }
      } else {
        for (int a = 1; a < q; ++a)
          gens.push_back(
              g.id_of(algebra::elementary_matrix(ring, n + 1, j, j + 1, Poly::constant((std::uint8_t)a))));
      }
    }
    out.push_back(subgroup_closure(g, gens));
  }
  return out;
}

}  // namespace hdx::groups
