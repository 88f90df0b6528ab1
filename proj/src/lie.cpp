#include "contactgeo/lie.hpp"

#include "contactgeo/errors.hpp"

#include <algorithm>

namespace contactgeo {

RationalFunction lie_derivative_scalar(const RationalFunction& f, const VectorField& v) {
    if (v.rank() != 1 || v.slots()[0] != Variance::Upper)
        throw SlotMismatch("expected a vector field");
    RationalFunction r = RationalFunction::zero(v.chart().vars());
    for (size_t c = 0; c < v.dim(); ++c) r = r + v.at({c}) * f.partial(c);
    return r;
}

TensorField lie_derivative(const TensorField& t, const VectorField& v) {
    if (t.chart() != v.chart()) throw ChartMismatch("Lie derivative across charts");
    if (v.rank() != 1 || v.slots()[0] != Variance::Upper)
        throw SlotMismatch("expected a vector field");
    const size_t n = t.dim();
    const size_t rank = t.rank();
    TensorField r(t.chart(), t.slots());
    std::vector<size_t> out(rank, 0), in(rank, 0);
    if (rank == 0) return r;
    do {
        // transport term V^c d_c T
        RationalFunction val = RationalFunction::zero(t.chart().vars());
        for (size_t c = 0; c < n; ++c) val = val + v.at({c}) * t.at(out).partial(c);
        for (size_t s = 0; s < rank; ++s) {
            in = out;
            if (t.slots()[s] == Variance::Upper) {
                // - (d_c V^{a_s}) T^{... c ...}
                for (size_t c = 0; c < n; ++c) {
                    in[s] = c;
                    val = val - v.at({out[s]}).partial(c) * t.at(in);
                }
            } else {
                // + (d_{b_s} V^c) T_{... c ...}
                for (size_t c = 0; c < n; ++c) {
                    in[s] = c;
                    val = val + v.at({c}).partial(out[s]) * t.at(in);
                }
            }
        }
        r.at_mut(out) = std::move(val);
    } while (next_multi_index(out, n));
    return r;
}

TensorField lie_connection_variation(const VectorField& v, const TensorField& g) {
    const Chart& chart = g.chart();
    const size_t n = chart.dim();
    TensorField g_inv = metric_inverse(g);
    ConnectionCoefficients conn = christoffel(g, g_inv);
    TensorField lg = lie_derivative(g, v);
    // nabla (L_V g): slots (i, t, direction)
    TensorField dlg = covariant_derivative(lg, conn);
    TensorField r(chart, {Variance::Upper, Variance::Lower, Variance::Lower});
    Rational half(1, 2);
    for (size_t h = 0; h < n; ++h) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i; j < n; ++j) {
                RationalFunction sum = RationalFunction::zero(chart.vars());
                for (size_t t = 0; t < n; ++t) {
                    sum = sum + g_inv.at({h, t}) *
                                    (dlg.at({i, t, j}) + dlg.at({j, t, i}) - dlg.at({i, j, t}));
                }
                sum = sum.scaled(half);
                r.at_mut({h, i, j}) = sum;
                r.at_mut({h, j, i}) = std::move(sum);
            }
        }
    }
    return r;
}

TensorField lie_curvature_commutation_residual(const VectorField& v, const TensorField& g) {
    TensorField lie_r = lie_derivative(riemann(g), v);
    TensorField p = lie_connection_variation(v, g);
    TensorField dp = covariant_derivative(p, christoffel(g)); // slots (h, i, j, direction)
    TensorField res(g.chart(),
                    {Variance::Upper, Variance::Lower, Variance::Lower, Variance::Lower});
    const size_t n = g.dim();
    for (size_t h = 0; h < n; ++h)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j)
                for (size_t i = 0; i < n; ++i) {
                    res.at_mut({h, k, j, i}) =
                        lie_r.at({h, k, j, i}) - dp.at({h, j, i, k}) + dp.at({h, k, i, j});
                }
    return res;
}

} // namespace contactgeo
