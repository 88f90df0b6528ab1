#pragma once

#include "contactgeo/curvature.hpp"
#include "contactgeo/tensor.hpp"

namespace contactgeo {

// Lie derivative of an arbitrary-valence tensor along V, by the coordinate
// formula.
TensorField lie_derivative(const TensorField& t, const VectorField& v);

// Directional derivative V(f) of a scalar.
RationalFunction lie_derivative_scalar(const RationalFunction& f, const VectorField& v);

// Variation of the Levi-Civita connection under V, as a (1,2) tensor
// symmetric in its covariant slots:
//   (L_V Gamma)^h_{ij} = 1/2 g^{ht} ( nabla_j (L_V g)_{it}
//                                   + nabla_i (L_V g)_{jt}
//                                   - nabla_t (L_V g)_{ij} ).
TensorField lie_connection_variation(const VectorField& v, const TensorField& g);

// Residual of the commutation identity
//   (L_V R)(X, Y) Z = (nabla_X L_V Gamma)(Y, Z) - (nabla_Y L_V Gamma)(X, Z)
// as a (1,3) tensor; identically zero for every V.
TensorField lie_curvature_commutation_residual(const VectorField& v, const TensorField& g);

} // namespace contactgeo
