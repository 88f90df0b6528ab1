#pragma once

#include "contactgeo/chart.hpp"
#include "contactgeo/rational_function.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace contactgeo {

enum class Variance : uint8_t { Upper, Lower };

// Dense tensor field on a chart: one RationalFunction per component, one
// variance flag per slot. Slot order is the component index order; a
// (1,1) endomorphism T has T.at({h, i}) = T^h_i. Values are immutable once
// built except through at_mut during construction-style filling.
class TensorField {
public:
    TensorField(Chart chart, std::vector<Variance> slots);

    const Chart& chart() const { return chart_; }
    const std::vector<Variance>& slots() const { return slots_; }
    size_t rank() const { return slots_.size(); }
    size_t dim() const { return chart_.dim(); }
    // (contravariant count, covariant count)
    std::pair<size_t, size_t> valence() const;

    const RationalFunction& at(std::span<const size_t> idx) const;
    const RationalFunction& at(std::initializer_list<size_t> idx) const;
    RationalFunction& at_mut(std::span<const size_t> idx);
    RationalFunction& at_mut(std::initializer_list<size_t> idx);

    const std::vector<RationalFunction>& components() const { return comp_; }

    bool is_zero() const;

    TensorField operator-() const;
    TensorField operator+(const TensorField& o) const;
    TensorField operator-(const TensorField& o) const;
    TensorField scaled(const RationalFunction& f) const;
    TensorField scaled(const Rational& c) const;

    bool operator==(const TensorField& o) const;
    bool operator!=(const TensorField& o) const { return !(*this == o); }

    size_t flat(std::span<const size_t> idx) const;

private:
    Chart chart_;
    std::vector<Variance> slots_;
    std::vector<RationalFunction> comp_;
};

using VectorField = TensorField; // rank 1, Upper
using ScalarField = RationalFunction;

VectorField make_vector_field(const Chart& chart);
TensorField make_one_form(const Chart& chart);
TensorField make_metric_shape(const Chart& chart);        // (Lower, Lower)
TensorField make_endomorphism_shape(const Chart& chart);  // (Upper, Lower)

// Identity as a (1,1) tensor.
TensorField kronecker_delta(const Chart& chart);

TensorField tensor_product(const TensorField& a, const TensorField& b);

// Contracts one Upper against one Lower slot; both removed.
TensorField contract(const TensorField& t, size_t slot_a, size_t slot_b);

// Reorders slots: new slot i is old slot perm[i].
TensorField permuted(const TensorField& t, std::span<const size_t> perm);

// Index gymnastics against an explicit metric / inverse metric. The slot
// keeps its position and flips variance.
TensorField raise_slot(const TensorField& t, size_t slot, const TensorField& metric_inverse);
TensorField lower_slot(const TensorField& t, size_t slot, const TensorField& metric);

// Trace of a (1,1) tensor.
RationalFunction endomorphism_trace(const TensorField& t);
// Composition of (1,1) tensors: (a b)^h_i = a^h_t b^t_i.
TensorField compose(const TensorField& a, const TensorField& b);
// a(V) for a (1,1) tensor: vector with components a^h_t V^t.
VectorField apply_endomorphism(const TensorField& a, const VectorField& v);

// Odometer over all rank-length multi-indices in [0, dim)^rank.
bool next_multi_index(std::vector<size_t>& idx, size_t dim);

} // namespace contactgeo
