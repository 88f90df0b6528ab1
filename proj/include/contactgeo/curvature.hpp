#pragma once

#include "contactgeo/tensor.hpp"

namespace contactgeo {

// Levi-Civita connection coefficients Gamma^h_{ij}, symmetric in (i, j).
class ConnectionCoefficients {
public:
    explicit ConnectionCoefficients(Chart chart);

    const Chart& chart() const { return chart_; }
    const RationalFunction& gamma(size_t h, size_t i, size_t j) const;
    RationalFunction& gamma_mut(size_t h, size_t i, size_t j);

private:
    Chart chart_;
    std::vector<RationalFunction> gamma_;
};

// Determinant of a (0,2) tensor viewed as a matrix.
RationalFunction metric_determinant(const TensorField& g);

// Exact inverse of a symmetric nondegenerate (0,2) metric, as a (2,0)
// tensor with g . g^{-1} = identity. Throws DegenerateMetric when the
// determinant is identically zero; pointwise poles stay in the components.
TensorField metric_inverse(const TensorField& g);

ConnectionCoefficients christoffel(const TensorField& g);
ConnectionCoefficients christoffel(const TensorField& g, const TensorField& g_inv);

// Curvature of the Levi-Civita connection with R(X, Y) = [nabla_X, nabla_Y]
// - nabla_{[X, Y]}; component layout R.at({h, k, j, i}) is the coefficient
// of d_h in R(d_k, d_j) d_i.
TensorField riemann(const TensorField& g);
TensorField riemann_from_connection(const ConnectionCoefficients& conn);

// Ricci as the trace of Z -> R(Z, X) Y.
TensorField ricci(const TensorField& g);
TensorField ricci_from_riemann(const TensorField& riem);
RationalFunction scalar_curvature(const TensorField& g);

// Levi-Civita covariant derivative; the new covariant slot (the direction)
// is appended last.
TensorField covariant_derivative(const TensorField& t, const ConnectionCoefficients& conn);

// Exterior differential of a scalar, as a one-form.
TensorField differential(const RationalFunction& f, const Chart& chart);

VectorField gradient(const RationalFunction& f, const TensorField& g);
TensorField hessian(const RationalFunction& f, const TensorField& g);

// g^{ij} t_{ij} for a (0,2) tensor.
RationalFunction trace_with_metric_inverse(const TensorField& t, const TensorField& g_inv);

} // namespace contactgeo
