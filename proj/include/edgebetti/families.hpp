#ifndef EDGEBETTI_FAMILIES_HPP
#define EDGEBETTI_FAMILIES_HPP

#include <string>
#include <string_view>

#include "edgebetti/graph.hpp"

namespace edgebetti {

/**
 * Graph families with regularity and extremal-Betti structure known in closed
 * form.
 *
 * All generators use the same vertex layout: the x-block first (x_1 -> 0),
 * then the y-block, then z, then the w-block. Vertices are labeled "x_1",
 * "y_1", "z", "w_1", ... accordingly.
 *
 * Naming note: the literature writes G_{r,1} both for the path star (r paths
 * of length two glued at z) and, in the construction of G_{r,b}, for the star
 * triangle (r triangles glued at z). These are different graphs and get
 * different constructors here; g_rb never accepts b = 1.
 */

/// r copies of P_3 sharing the endpoint z: edges {z,y_i}, {x_i,y_i}. Requires r >= 1.
Graph path_star(int r);

/// r triangles sharing the vertex z: edges {z,x_i}, {z,y_i}, {x_i,y_i}. Requires r >= 1.
Graph star_triangle(int r);

/// star_triangle(r) plus w_1..w_{b-1}, with w_j joined to z, x_1..x_j,
/// y_1..y_j and w_1..w_{j-1}. Requires 2 <= b <= r.
Graph g_rb(int r, int b);

/// Tree on x_1..x_{p-1}, y_1..y_r, z with edges {z,y_i} (i <= r),
/// {x_i,y_i} (i < r) and {x_j,y_r} (r <= j <= p-1). Requires 1 <= r < p.
Graph g_pr1(int p, int r);

/// Closed form of |E(g_rb(r, b))|: 3r + 3b(b-1)/2.
int g_rb_edge_count(int r, int b);

/// Index of a layout label in a family graph with x-block size nx and
/// y-block size ny; e.g. family_vertex(5, 5, "w", 1) == 11.
Vertex family_vertex(int nx, int ny, std::string_view block, int index = 1);

/**
 * Inline family spec, e.g. "grb:5,3", "path-star:4", "star-triangle:3",
 * "gpr1:4,2". Throws std::invalid_argument on unknown names or bad parameters.
 */
Graph family_from_spec(std::string_view spec);

} // namespace edgebetti

#endif
