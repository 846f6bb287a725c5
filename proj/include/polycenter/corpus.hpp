#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polycenter/geometry.hpp"

// Seeded polygon generators for property checks and corpus sweeps. Shapes
// are normalized to diameter about 1 before any random similarity.
namespace polycenter::corpus {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);

Similarity random_similarity(Rng& rng);
DihedralElement random_dihedral(Rng& rng, std::size_t n);

/// Star-shaped around the origin with random radii; usually non-convex.
Polygon random_polygon(Rng& rng, std::size_t n);
/// Strictly convex, no three vertices collinear: points on a random ellipse.
Polygon random_convex(Rng& rng, std::size_t n);
/// All vertices on one random line, not all coincident.
Polygon random_flat(Rng& rng, std::size_t n);
/// Non-degenerate triangle with vertices in the unit square.
Polygon random_triangle(Rng& rng);

Polygon square(Rng& rng);
Polygon non_square_rectangle(Rng& rng);
Polygon rhombus(Rng& rng);           // unequal diagonals
Polygon kite(Rng& rng);              // one mirror axis through V1 and V3
Polygon parallelogram(Rng& rng);
Polygon isosceles_triangle(Rng& rng);   // not equilateral
Polygon equilateral_triangle(Rng& rng);
Polygon regular_polygon(Rng& rng, std::size_t n);

/// Admissible tangent angles for generate_tangential: sorted, every cyclic
/// gap in [0.05, 0.85 pi].
std::vector<double> tangent_angles(Rng& rng, std::size_t n);
/// generate_tangential on random angles and radius, then a random similarity.
Polygon random_tangential(Rng& rng, std::size_t n);

/// 100 seeded n-gons: 40 convex, 40 star-shaped, 20 flat.
std::vector<Polygon> verification_corpus(std::size_t n, std::uint64_t seed = 20240611);

}  // namespace polycenter::corpus
