#include "hdx/reference.hpp"

#include <algorithm>
#include <numeric>

namespace hdx::ref {

using cx::Complex;
using cx::Face;

Complex boundary_delta3() {
  std::vector<Face> fs;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) fs.push_back({a, b, c});
  return Complex::from_faces(4, fs);
}

Complex octahedron() {
  // vertices 0..5, antipodal pairs (0,3), (1,4), (2,5)
  std::vector<Face> fs;
  int anti[6] = {3, 4, 5, 0, 1, 2};
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        if (anti[a] == b || anti[a] == c || anti[b] == c) continue;
        fs.push_back({a, b, c});
      }
  return Complex::from_faces(6, fs);
}

Complex torus7() {
  std::vector<Face> fs;
  for (int i = 0; i < 7; ++i) {
    Face a{i, (i + 1) % 7, (i + 3) % 7};
    Face b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    fs.push_back(a);
    fs.push_back(b);
  }
  return Complex::from_faces(7, fs);
}

Complex solid_delta3() { return Complex::from_faces(4, {{0, 1, 2, 3}}); }

Complex cycle(int m) {
  std::vector<Face> fs;
  for (int i = 0; i < m; ++i) {
    Face e{i, (i + 1) % m};
    std::sort(e.begin(), e.end());
    fs.push_back(e);
  }
  return Complex::from_faces(m, fs);
}

Complex complete_graph(int m) {
  std::vector<Face> fs;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) fs.push_back({a, b});
  return Complex::from_faces(m, fs);
}

Complex petersen() {
  std::vector<Face> fs;
  for (int i = 0; i < 5; ++i) {
    Face outer{i, (i + 1) % 5};
    std::sort(outer.begin(), outer.end());
    fs.push_back(outer);
    Face inner{5 + i, 5 + (i + 2) % 5};
    std::sort(inner.begin(), inner.end());
    fs.push_back(inner);
    fs.push_back({i, 5 + i});
  }
  return Complex::from_faces(10, fs);
}

Complex two_triangles() { return Complex::from_faces(6, {{0, 1, 2}, {3, 4, 5}}); }

Complex single_edge() { return Complex::from_faces(2, {{0, 1}}); }

cx::ComplexAction s4_action_on_delta3() {
  cx::ComplexAction a;
  std::vector<std::int32_t> p{0, 1, 2, 3};
  do {
    a.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return a;
}

}  // namespace hdx::ref
