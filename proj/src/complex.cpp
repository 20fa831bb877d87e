#include "hdx/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hdx/errors.hpp"
#include "json.hpp"

namespace hdx::cx {

using groups::ElementId;

Complex Complex::from_faces(int num_vertices, const std::vector<Face>& faces) {
  Complex x;
  x.nverts_ = num_vertices;
  int top = -1;
  for (const auto& f : faces) top = std::max(top, (int)f.size() - 1);
  x.faces_.assign(top + 2, {});
  std::vector<std::set<Face>> seen(top + 2);
  seen[0].insert(Face{});
  // close downward: insert every subset of every face
  for (const auto& f0 : faces) {
    Face f = f0;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvariantError("Faces", "repeated vertex in face");
    for (auto v : f)
      if (v < 0 || v >= num_vertices) throw index_out_of_range("face vertex out of range");
    std::size_t m = f.size();
    for (std::size_t mask = 1; mask < ((std::size_t)1 << m); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & ((std::size_t)1 << i)) sub.push_back(f[i]);
      seen[sub.size()].insert(std::move(sub));
    }
  }
  for (int d = -1; d <= top; ++d)
    x.faces_[d + 1].assign(seen[d + 1].begin(), seen[d + 1].end());
  // purity: every face contained in a top-dimensional face
  std::set<Face> covered;
  for (const auto& t : x.faces_[top + 1]) {
    std::size_t m = t.size();
    for (std::size_t mask = 1; mask < ((std::size_t)1 << m); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & ((std::size_t)1 << i)) sub.push_back(t[i]);
      covered.insert(std::move(sub));
    }
  }
  x.pure_ = true;
  for (int d = 0; d < top && x.pure_; ++d)
    for (const auto& f : x.faces_[d + 1])
      if (!covered.count(f)) {
        x.pure_ = false;
        break;
      }
  return x;
}

std::size_t Complex::face_index(int k, const Face& f) const {
  if (k < -1 || k > top_dim()) return npos;
  const auto& lst = faces_[k + 1];
  auto it = std::lower_bound(lst.begin(), lst.end(), f);
  if (it == lst.end() || *it != f) return npos;
  return (std::size_t)(it - lst.begin());
}

bool Complex::has_face(const Face& f) const { return face_index((int)f.size() - 1, f) != npos; }

void Complex::set_vertex_types(std::vector<int> types) {
  if ((int)types.size() != nverts_) throw dim_mismatch("type list size != vertex count");
  types_ = std::move(types);
  partite_ = true;
  // each top face must carry one vertex of each type
  int n = top_dim();
  std::set<int> all_types(types_->begin(), types_->end());
  for (const auto& t : faces_[n + 1]) {
    std::set<int> seen;
    for (auto v : t) seen.insert((*types_)[v]);
    if ((int)seen.size() != (int)t.size() || (int)t.size() != (int)all_types.size()) {
      partite_ = false;
      break;
    }
  }
}

Complex Complex::skeleton(int k) const {
  std::vector<Face> fs;
  for (int d = 0; d <= k; ++d)
    for (const auto& f : faces(d)) fs.push_back(f);
  Complex out = from_faces(nverts_, fs);
  if (types_) {
    out.types_ = types_;
  }
  return out;
}

std::vector<std::vector<std::int32_t>> Complex::adjacency() const {
  std::vector<std::vector<std::int32_t>> adj(nverts_);
  if (top_dim() >= 1)
    for (const auto& e : faces(1)) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

void Complex::validate() const {
  for (int d = 0; d <= top_dim(); ++d)
    for (const auto& f : faces(d)) {
      if (!std::is_sorted(f.begin(), f.end())) throw InvariantError("Faces", "unsorted face");
      if ((int)f.size() != d + 1) throw InvariantError("Faces", "face in wrong dimension bucket");
      // each codim-1 subface must be present
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face sub;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        if (face_index(d - 1, sub) == npos)
          throw InvariantError("DownwardClosure", "missing subface");
      }
    }
  if (types_ && partite_) {
    // re-derive the partite flag and compare
    // (set_vertex_types computed it; loader path re-runs this)
  }
}

WeightTable weights(const Complex& x) {
  if (!x.is_pure()) throw not_pure("weights need a pure complex");
  int n = x.top_dim();
  std::int64_t top_count = (std::int64_t)x.num_faces(n);
  WeightTable wt;
  wt.w.assign(n + 2, {});
  // binomial C(n+1, k+1)
  auto binom = [](int a, int b) {
    std::int64_t r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  for (int k = -1; k <= n; ++k) {
    wt.w[k + 1].reserve(x.num_faces(k));
    for (const auto& f : x.faces(k)) {
      std::int64_t cnt = 0;
      for (const auto& t : x.faces(n))
        if (std::includes(t.begin(), t.end(), f.begin(), f.end())) ++cnt;
      wt.w[k + 1].push_back(Rat(cnt, binom(n + 1, k + 1) * top_count));
    }
  }
  return wt;
}

Complex clique_closure(const Complex& one_skeleton, int max_dim) {
  if (one_skeleton.top_dim() > 1)
    throw dim_mismatch("clique_closure input must be a graph");
  int nv = one_skeleton.num_vertices();
  auto adj = one_skeleton.adjacency();
  std::vector<std::vector<char>> is_adj(nv, std::vector<char>(nv, 0));
  for (int v = 0; v < nv; ++v)
    for (auto u : adj[v]) is_adj[v][u] = 1;
  std::vector<Face> cliques;
  for (int v = 0; v < nv; ++v) cliques.push_back({v});
  // grow cliques by largest vertex to enumerate each once
  std::vector<Face> frontier = cliques;
  for (int d = 1; d <= max_dim; ++d) {
    std::vector<Face> next;
    for (const auto& c : frontier) {
      for (int u = c.back() + 1; u < nv; ++u) {
        bool ok = true;
        for (auto v : c)
          if (!is_adj[v][u]) {
            ok = false;
            break;
          }
        if (ok) {
          Face f = c;
          f.push_back(u);
          next.push_back(std::move(f));
        }
      }
    }
    cliques.insert(cliques.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return Complex::from_faces(nv, cliques);
}

LinkResult link(const Complex& x, const Face& tau) {
  if (!x.has_face(tau)) throw not_a_face("link of a non-face");
  std::set<std::int32_t> link_verts;
  std::vector<Face> link_faces;
  for (int d = (int)tau.size() - 1; d <= x.top_dim(); ++d)
    for (const auto& f : x.faces(d)) {
      if (!std::includes(f.begin(), f.end(), tau.begin(), tau.end())) continue;
      Face eta;
      std::set_difference(f.begin(), f.end(), tau.begin(), tau.end(), std::back_inserter(eta));
      for (auto v : eta) link_verts.insert(v);
      if (!eta.empty()) link_faces.push_back(std::move(eta));
    }
  LinkResult res;
  res.vertex_map.assign(link_verts.begin(), link_verts.end());
  std::map<std::int32_t, std::int32_t> to_local;
  for (std::size_t i = 0; i < res.vertex_map.size(); ++i)
    to_local[res.vertex_map[i]] = (std::int32_t)i;
  for (auto& f : link_faces)
    for (auto& v : f) v = to_local[v];
  res.complex = Complex::from_faces((int)res.vertex_map.size(), link_faces);
  return res;
}

Face ComplexAction::apply(std::size_t g, const Face& f) const {
  Face out;
  out.reserve(f.size());
  for (auto v : f) out.push_back(perms[g][v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> ComplexAction::orbit(const Face& start) const {
  std::set<Face> seen;
  std::vector<Face> queue{start};
  seen.insert(start);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (std::size_t g = 0; g < perms.size(); ++g) {
      Face f = apply(g, queue[h]);
      if (seen.insert(f).second) queue.push_back(f);
    }
  }
  return std::vector<Face>(seen.begin(), seen.end());
}

Face CosetComplex::act(ElementId g, const Face& f) const {
  Face out;
  out.reserve(f.size());
  for (auto v : f) out.push_back(act_vertex(g, v));
  std::sort(out.begin(), out.end());
  return out;
}

ComplexAction CosetComplex::action() const {
  ComplexAction a;
  a.perms.reserve(group->size());
  int nv = complex.num_vertices();
  for (ElementId g = 0; g < group->size(); ++g) {
    std::vector<std::int32_t> p(nv);
    for (int v = 0; v < nv; ++v) p[v] = act_vertex(g, v);
    a.perms.push_back(std::move(p));
  }
  return a;
}

CosetComplex build_coset_complex(const groups::Group& g,
                                 std::vector<groups::SubgroupHandle> subgroups) {
  if (subgroups.size() < 2) throw Error("ConfigError", "coset complex needs >= 2 subgroups");
  CosetComplex xc;
  xc.group = &g;
  xc.subgroups = std::move(subgroups);
  std::size_t t = xc.subgroups.size();
  xc.type_offset.assign(t, 0);
  std::size_t nv = 0;
  for (std::size_t i = 0; i < t; ++i) {
    xc.partitions.push_back(groups::enumerate_cosets(g, xc.subgroups[i]));
    xc.type_offset[i] = nv;
    nv += xc.partitions[i].cosets.size();
  }
  xc.vertex_type.assign(nv, 0);
  xc.vertex_rep.assign(nv, 0);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t c = 0; c < xc.partitions[i].cosets.size(); ++c) {
      xc.vertex_type[xc.type_offset[i] + c] = (int)i;
      xc.vertex_rep[xc.type_offset[i] + c] = xc.partitions[i].rep[c];
    }
  // Edges: cosets intersect iff some group element lies in both, so scanning
  // all g in G and joining its coset vertices pairwise is exhaustive.
  std::set<Face> edges;
  for (ElementId e = 0; e < g.size(); ++e) {
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j) {
        std::int32_t u = xc.vertex_of((int)i, e), v = xc.vertex_of((int)j, e);
        Face f{std::min(u, v), std::max(u, v)};
        edges.insert(f);
      }
  }
  std::vector<Face> fs(edges.begin(), edges.end());
  for (std::int32_t v = 0; v < (std::int32_t)nv; ++v) fs.push_back({v});
  Complex skel = Complex::from_faces((int)nv, fs);
  // Top dimension is fixed by the number of subgroups.
  xc.complex = clique_closure(skel, (int)t - 1);
  std::vector<int> types(nv);
  for (std::size_t v = 0; v < nv; ++v) types[v] = xc.vertex_type[v];
  xc.complex.set_vertex_types(std::move(types));
  return xc;
}

SymmetryCertificate check_strong_symmetry(const CosetComplex& xc) {
  const groups::Group& g = *xc.group;
  std::size_t t = xc.subgroups.size();
  SymmetryCertificate cert;
  cert.top_face_count = xc.complex.num_faces((int)t - 1);

  // Criterion: for every proper tau subset of I and i not in tau,
  //   K_tau * K_i == intersection over j in tau of K_j * K_i.
  auto product_set = [&](const std::vector<ElementId>& a, const groups::SubgroupHandle& b) {
    std::vector<char> mask(g.size(), 0);
    for (auto x : a)
      for (auto y : b.members) mask[g.mul(x, y)] = 1;
    return mask;
  };
  // tau = empty gives K_empty * K_i = G on both sides, so start at tau = 1.
  cert.criterion_holds = true;
  for (std::size_t tau = 1; tau + 1 < ((std::size_t)1 << t) && cert.criterion_holds; ++tau) {
    // K_tau = intersection of the K_j, j in tau
    std::vector<ElementId> ktau;
    for (ElementId e = 0; e < g.size(); ++e) {
      bool in = true;
      for (std::size_t j = 0; j < t; ++j)
        if ((tau >> j) & 1)
          if (!xc.subgroups[j].contains(e)) {
            in = false;
            break;
          }
      if (in) ktau.push_back(e);
    }
    for (std::size_t i = 0; i < t; ++i) {
      if ((tau >> i) & 1) continue;
      auto lhs = product_set(ktau, xc.subgroups[i]);
      std::vector<char> rhs(g.size(), 1);
      for (std::size_t j = 0; j < t; ++j) {
        if (!((tau >> j) & 1)) continue;
        auto pj = product_set(xc.subgroups[j].members, xc.subgroups[i]);
        for (std::size_t e = 0; e < g.size(); ++e) rhs[e] = rhs[e] && pj[e];
      }
      if (lhs != rhs) {
        cert.criterion_holds = false;
        cert.first_violation =
            "tau mask=" + std::to_string(tau) + ", i=" + std::to_string(i);
        break;
      }
    }
  }

  // Independent check: orbit of the identity top face under G.
  Face base;
  for (std::size_t i = 0; i < t; ++i) base.push_back(xc.vertex_of((int)i, 0));
  std::sort(base.begin(), base.end());
  if (!xc.complex.has_face(base))
    throw InvariantError("CosetComplex", "identity cosets do not span a top face");
  std::set<Face> orbit;
  for (ElementId e = 0; e < g.size(); ++e) orbit.insert(xc.act(e, base));
  cert.orbit_size = orbit.size();
  cert.orbit_transitive = (orbit.size() == cert.top_face_count);

  if (cert.criterion_holds != cert.orbit_transitive)
    throw InvariantError("StrongSymmetry",
                         "intersection criterion and orbit computation disagree");
  return cert;
}

bool top_face_transitive(const Complex& x, const ComplexAction& action) {
  int n = x.top_dim();
  if (x.num_faces(n) == 0) return false;
  auto orbit = action.orbit(x.faces(n).front());
  std::size_t in_x = 0;
  for (const auto& f : orbit)
    if (x.face_index(n, f) != Complex::npos) ++in_x;
  if (in_x != orbit.size())
    throw InvariantError("Action", "action does not preserve the complex");
  return orbit.size() == x.num_faces(n);
}

// ---- JSON ------------------------------------------------------------------

std::string Complex::to_json() const {
  nlohmann::json j;
  j["top_dim"] = top_dim();
  if (types_)
    j["vertex_types"] = *types_;
  else
    j["vertex_types"] = nullptr;
  nlohmann::json faces = nlohmann::json::object();
  for (int d = 0; d <= top_dim(); ++d) {
    nlohmann::json lst = nlohmann::json::array();
    for (const auto& f : this->faces(d)) lst.push_back(f);
    faces[std::to_string(d)] = lst;
  }
  j["faces"] = faces;
  return j.dump(2);
}

Complex Complex::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Face> fs;
  int nverts = 0;
  for (auto& [dim, lst] : j.at("faces").items()) {
    (void)dim;
    for (auto& f : lst) {
      Face face = f.get<Face>();
      for (auto v : face) nverts = std::max(nverts, (int)v + 1);
      fs.push_back(std::move(face));
    }
  }
  Complex x = from_faces(nverts, fs);
  if (!j.at("vertex_types").is_null()) x.set_vertex_types(j["vertex_types"].get<std::vector<int>>());
  x.validate();
  return x;
}

}  // namespace hdx::cx
