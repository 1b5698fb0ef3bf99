/// @file catalog.hpp
/// @brief Small named algebras used as fixtures: the pseudo H-type algebras
/// n_{2,0}, n_{1,1}, n_{0,2} on R^4 and the 3-dimensional Heisenberg algebra.
#pragma once

#include <vector>

#include "nilforge/nilpotent.hpp"

namespace nilforge::catalog {

/// J_{z1}, J_{z2} on Euclidean R^4.
std::vector<RationalMatrix> n20_generators();
/// J_{z1}, J_{z2} on R^{2,2}, skew for eta_{2,2}, with J_{z1}^2 = -I, J_{z2}^2 = I.
std::vector<RationalMatrix> n11_generators();
/// J_{z1}, J_{z2} on R^{2,2}, both squaring to I.
std::vector<RationalMatrix> n02_generators();

/// Forms (I_4, I_2).
MetricAlgebra n20();
/// Forms (eta_{2,2}, eta_{1,1}).
MetricAlgebra n11();
/// Forms (eta_{2,2}, eta_{0,2}).
MetricAlgebra n02();
/// m = 2, n = 1, C^1 = [[0,1],[-1,0]], Euclidean forms.
MetricAlgebra heisenberg();

}  // namespace nilforge::catalog
