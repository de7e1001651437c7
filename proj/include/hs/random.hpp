#pragma once

#include "hs/hsder.hpp"

#include <random>

namespace hs {

using Rng = std::mt19937_64;

// Small random element: coefficients in [-2, 2] on monomials of degree <= max_degree.
Elem random_elem(const AlgebraPtr& A, Rng& rng, int max_degree);

// Phi(x_j) = x_j + random terms of positive order. For quotients the perturbation is a multiple
// of x_j (always valid for monomial ideals); candidates breaking the relations are redrawn.
HSDerivation random_hs(const AlgebraPtr& A, const Shape& shape, Rng& rng, int coeff_degree = 1);

// Random substitution map; `constant` restricts coefficients to k.
SubstMap random_subst(const AlgebraPtr& A, const Shape& source, const Shape& target, Rng& rng, bool constant);

} // namespace hs
