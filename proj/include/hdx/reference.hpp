#pragma once

#include "hdx/complex.hpp"

namespace hdx::ref {

/// Boundary of the tetrahedron: 4 vertices, all 6 edges, all 4 triangles.
cx::Complex boundary_delta3();

/// Octahedron surface: antipodal pairs (0,3), (1,4), (2,5); 8 triangles.
cx::Complex octahedron();

/// The 7-vertex (Moebius/Csaszar) torus: 14 triangles on K7,
/// faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
cx::Complex torus7();

/// Full simplex on 4 vertices (clique complex of K4), pure 3-dimensional.
cx::Complex solid_delta3();

/// Cycle graph C_m as a 1-dimensional complex.
cx::Complex cycle(int m);

/// Complete graph K_m as a 1-dimensional complex.
cx::Complex complete_graph(int m);

/// Petersen graph (3-regular, girth 5) as a 1-dimensional complex.
cx::Complex petersen();

/// Two vertex-disjoint filled triangles (disconnected, H_0 nontrivial).
cx::Complex two_triangles();

/// Single edge as a 1-dimensional complex.
cx::Complex single_edge();

/// Full symmetry action of boundary_delta3: all 24 vertex permutations.
cx::ComplexAction s4_action_on_delta3();

}  // namespace hdx::ref
