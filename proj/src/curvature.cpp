#include "contactgeo/curvature.hpp"

#include "contactgeo/errors.hpp"

#include <cassert>

namespace contactgeo {

ConnectionCoefficients::ConnectionCoefficients(Chart chart)
    : chart_(std::move(chart)),
      gamma_(chart_.dim() * chart_.dim() * chart_.dim(),
             RationalFunction::zero(chart_.vars())) {}

const RationalFunction& ConnectionCoefficients::gamma(size_t h, size_t i, size_t j) const {
    size_t d = chart_.dim();
    return gamma_[(h * d + i) * d + j];
}

RationalFunction& ConnectionCoefficients::gamma_mut(size_t h, size_t i, size_t j) {
    size_t d = chart_.dim();
    return gamma_[(h * d + i) * d + j];
}

static void require_metric_shape(const TensorField& g) {
    if (g.slots() != std::vector<Variance>{Variance::Lower, Variance::Lower})
        throw SlotMismatch("expected a (0,2) tensor");
    for (size_t i = 0; i < g.dim(); ++i) {
        for (size_t j = i + 1; j < g.dim(); ++j) {
            if (g.at({i, j}) != g.at({j, i})) throw Error("metric must be symmetric");
        }
    }
}

RationalFunction metric_determinant(const TensorField& g) {
    if (g.rank() != 2) throw SlotMismatch("determinant expects a rank-2 tensor");
    const size_t n = g.dim();
    const VarsPtr& vars = g.chart().vars();
    // Gaussian elimination over the rational function field.
    std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(n, RationalFunction::zero(vars)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = g.at({i, j});
    RationalFunction det = RationalFunction::one(vars);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return RationalFunction::zero(vars);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            RationalFunction factor = a[row][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] - factor * a[col][j];
        }
    }
    return det;
}

TensorField metric_inverse(const TensorField& g) {
    require_metric_shape(g);
    const size_t n = g.dim();
    const VarsPtr& vars = g.chart().vars();
    std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(n, RationalFunction::zero(vars)));
    std::vector<std::vector<RationalFunction>> inv(n, std::vector<RationalFunction>(n, RationalFunction::zero(vars)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = g.at({i, j});
        inv[i][i] = RationalFunction::one(vars);
    }
    // Gauss-Jordan over the rational function field.
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw DegenerateMetric();
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
        }
        RationalFunction p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            RationalFunction f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] = a[row][j] - f * a[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    TensorField result(g.chart(), {Variance::Upper, Variance::Upper});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) result.at_mut({i, j}) = inv[i][j];
    return result;
}

ConnectionCoefficients christoffel(const TensorField& g) {
    return christoffel(g, metric_inverse(g));
}

ConnectionCoefficients christoffel(const TensorField& g, const TensorField& g_inv) {
    require_metric_shape(g);
    const size_t n = g.dim();
    const VarsPtr& vars = g.chart().vars();
    // dg[k][i][j] = d_k g_{ij}
    std::vector<std::vector<std::vector<RationalFunction>>> dg(
        n, std::vector<std::vector<RationalFunction>>(n, std::vector<RationalFunction>(n, RationalFunction::zero(vars))));
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) dg[k][i][j] = g.at({i, j}).partial(k);
    ConnectionCoefficients conn(g.chart());
    Rational half(1, 2);
    for (size_t h = 0; h < n; ++h) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i; j < n; ++j) {
                RationalFunction sum = RationalFunction::zero(vars);
                for (size_t t = 0; t < n; ++t) {
                    sum = sum + g_inv.at({h, t}) * (dg[i][t][j] + dg[j][t][i] - dg[t][i][j]);
                }
                sum = sum.scaled(half);
                conn.gamma_mut(h, i, j) = sum;
                conn.gamma_mut(h, j, i) = std::move(sum);
            }
        }
    }
    return conn;
}

TensorField riemann(const TensorField& g) {
    return riemann_from_connection(christoffel(g));
}

TensorField riemann_from_connection(const ConnectionCoefficients& conn) {
    const Chart& chart = conn.chart();
    const size_t n = chart.dim();
    TensorField r(chart, {Variance::Upper, Variance::Lower, Variance::Lower, Variance::Lower});
    for (size_t h = 0; h < n; ++h) {
        for (size_t k = 0; k < n; ++k) {
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue; // antisymmetric in the direction slots
                for (size_t i = 0; i < n; ++i) {
                    RationalFunction v =
                        conn.gamma(h, j, i).partial(k) - conn.gamma(h, k, i).partial(j);
                    for (size_t t = 0; t < n; ++t) {
                        v = v + conn.gamma(h, k, t) * conn.gamma(t, j, i) -
                            conn.gamma(h, j, t) * conn.gamma(t, k, i);
                    }
                    r.at_mut({h, k, j, i}) = std::move(v);
                }
            }
        }
    }
    return r;
}

TensorField ricci_from_riemann(const TensorField& riem) {
    // Ric_{ab} = R^h_{h a b}
    return contract(riem, 0, 1);
}

TensorField ricci(const TensorField& g) {
    return ricci_from_riemann(riemann(g));
}

RationalFunction scalar_curvature(const TensorField& g) {
    return trace_with_metric_inverse(ricci(g), metric_inverse(g));
}

RationalFunction trace_with_metric_inverse(const TensorField& t, const TensorField& g_inv) {
    if (t.rank() != 2) throw SlotMismatch("trace expects a rank-2 tensor");
    RationalFunction sum = RationalFunction::zero(t.chart().vars());
    for (size_t i = 0; i < t.dim(); ++i)
        for (size_t j = 0; j < t.dim(); ++j) sum = sum + g_inv.at({i, j}) * t.at({i, j});
    return sum;
}

TensorField covariant_derivative(const TensorField& t, const ConnectionCoefficients& conn) {
    if (t.chart() != conn.chart()) throw ChartMismatch("connection on a different chart");
    std::vector<Variance> slots = t.slots();
    slots.push_back(Variance::Lower);
    TensorField r(t.chart(), std::move(slots));
    const size_t n = t.dim();
    const size_t rank = t.rank();
    std::vector<size_t> out(rank + 1, 0);
    std::vector<size_t> in(rank, 0);
    do {
        size_t d = out[rank];
        std::copy(out.begin(), out.begin() + rank, in.begin());
        RationalFunction v = t.at(in).partial(d);
        for (size_t s = 0; s < rank; ++s) {
            std::copy(out.begin(), out.begin() + rank, in.begin());
            if (t.slots()[s] == Variance::Upper) {
                for (size_t c = 0; c < n; ++c) {
                    in[s] = c;
                    v = v + conn.gamma(out[s], d, c) * t.at(in);
                }
            } else {
                for (size_t c = 0; c < n; ++c) {
                    in[s] = c;
                    v = v - conn.gamma(c, d, out[s]) * t.at(in);
                }
            }
        }
        r.at_mut(out) = std::move(v);
    } while (next_multi_index(out, n));
    return r;
}

TensorField differential(const RationalFunction& f, const Chart& chart) {
    TensorField df = make_one_form(chart);
    for (size_t i = 0; i < chart.dim(); ++i) df.at_mut({i}) = f.partial(i);
    return df;
}

VectorField gradient(const RationalFunction& f, const TensorField& g) {
    return raise_slot(differential(f, g.chart()), 0, metric_inverse(g));
}

TensorField hessian(const RationalFunction& f, const TensorField& g) {
    return covariant_derivative(differential(f, g.chart()), christoffel(g));
}

} // namespace contactgeo
