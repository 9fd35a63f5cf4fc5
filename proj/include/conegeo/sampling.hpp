#pragma once

#include "conegeo/cone.hpp"

#include <random>
#include <utility>

namespace conegeo {

using Rng = std::mt19937_64;

// Strictly interior point with coordinates on a moderate scale (log-uniform
// radial spread around the anchor).
Point sample_interior(const ConeSpec& cone, Rng& rng);

// Unit Euclidean vector in the ambient space, symmetric for matrix cones.
Point sample_direction(const ConeSpec& cone, Rng& rng);

// A nonzero boundary point (one active facet / null eigenvalue / light ray).
Point sample_boundary(const ConeSpec& cone, Rng& rng);

// Interior pair rescaled so that M(x/y) = M(y/x) (balanced).
std::pair<Point, Point> sample_balanced_pair(const ConeSpec& cone, Rng& rng);

// Haar-ish orthogonal matrix from the QR of a Gaussian matrix.
Matrix random_orthogonal(int n, Rng& rng);

// Symmetric positive definite matrix with log-uniform eigenvalues in
// [exp(-log_range), exp(log_range)].
Matrix random_spd(int order, double log_range, Rng& rng);

}  // namespace conegeo
