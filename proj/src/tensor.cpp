#include "contactgeo/tensor.hpp"

#include "contactgeo/errors.hpp"

#include <algorithm>
#include <cassert>

namespace contactgeo {

namespace {
size_t pow_size(size_t base, size_t exp) {
    size_t r = 1;
    for (size_t i = 0; i < exp; ++i) r *= base;
    return r;
}
} // namespace

TensorField::TensorField(Chart chart, std::vector<Variance> slots)
    : chart_(std::move(chart)),
      slots_(std::move(slots)),
      comp_(pow_size(chart_.dim(), slots_.size()), RationalFunction::zero(chart_.vars())) {}

std::pair<size_t, size_t> TensorField::valence() const {
    size_t p = 0, q = 0;
    for (Variance v : slots_) (v == Variance::Upper ? p : q) += 1;
    return {p, q};
}

size_t TensorField::flat(std::span<const size_t> idx) const {
    assert(idx.size() == slots_.size());
    size_t off = 0;
    for (size_t i : idx) {
        assert(i < dim());
        off = off * dim() + i;
    }
    return off;
}

const RationalFunction& TensorField::at(std::span<const size_t> idx) const {
    return comp_[flat(idx)];
}

const RationalFunction& TensorField::at(std::initializer_list<size_t> idx) const {
    return at(std::span<const size_t>(idx.begin(), idx.size()));
}

RationalFunction& TensorField::at_mut(std::span<const size_t> idx) {
    return comp_[flat(idx)];
}

RationalFunction& TensorField::at_mut(std::initializer_list<size_t> idx) {
    return at_mut(std::span<const size_t>(idx.begin(), idx.size()));
}

bool TensorField::is_zero() const {
    return std::all_of(comp_.begin(), comp_.end(),
                       [](const RationalFunction& f) { return f.is_zero(); });
}

TensorField TensorField::operator-() const {
    TensorField r = *this;
    for (RationalFunction& f : r.comp_) f = -f;
    return r;
}

static void require_same_shape(const TensorField& a, const TensorField& b) {
    if (a.chart() != b.chart()) throw ChartMismatch("tensors live on different charts");
    if (a.slots() != b.slots()) throw SlotMismatch("tensor valences differ");
}

TensorField TensorField::operator+(const TensorField& o) const {
    require_same_shape(*this, o);
    TensorField r = *this;
    for (size_t i = 0; i < comp_.size(); ++i) r.comp_[i] = comp_[i] + o.comp_[i];
    return r;
}

TensorField TensorField::operator-(const TensorField& o) const {
    require_same_shape(*this, o);
    TensorField r = *this;
    for (size_t i = 0; i < comp_.size(); ++i) r.comp_[i] = comp_[i] - o.comp_[i];
    return r;
}

TensorField TensorField::scaled(const RationalFunction& f) const {
    TensorField r = *this;
    for (RationalFunction& c : r.comp_) c = c * f;
    return r;
}

TensorField TensorField::scaled(const Rational& c) const {
    TensorField r = *this;
    for (RationalFunction& f : r.comp_) f = f.scaled(c);
    return r;
}

bool TensorField::operator==(const TensorField& o) const {
    require_same_shape(*this, o);
    return comp_ == o.comp_;
}

VectorField make_vector_field(const Chart& chart) {
    return TensorField(chart, {Variance::Upper});
}

TensorField make_one_form(const Chart& chart) {
    return TensorField(chart, {Variance::Lower});
}

TensorField make_metric_shape(const Chart& chart) {
    return TensorField(chart, {Variance::Lower, Variance::Lower});
}

TensorField make_endomorphism_shape(const Chart& chart) {
    return TensorField(chart, {Variance::Upper, Variance::Lower});
}

TensorField kronecker_delta(const Chart& chart) {
    TensorField d = make_endomorphism_shape(chart);
    for (size_t i = 0; i < chart.dim(); ++i)
        d.at_mut({i, i}) = RationalFunction::one(chart.vars());
    return d;
}

bool next_multi_index(std::vector<size_t>& idx, size_t dim) {
    for (size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < dim) return true;
        idx[i] = 0;
    }
    return false;
}

TensorField tensor_product(const TensorField& a, const TensorField& b) {
    if (a.chart() != b.chart()) throw ChartMismatch("tensor product across charts");
    std::vector<Variance> slots = a.slots();
    slots.insert(slots.end(), b.slots().begin(), b.slots().end());
    TensorField r(a.chart(), std::move(slots));
    std::vector<size_t> idx(r.rank(), 0);
    if (r.rank() == 0) return r;
    do {
        std::span<const size_t> ia(idx.data(), a.rank());
        std::span<const size_t> ib(idx.data() + a.rank(), b.rank());
        r.at_mut(idx) = a.at(ia) * b.at(ib);
    } while (next_multi_index(idx, r.dim()));
    return r;
}

TensorField contract(const TensorField& t, size_t slot_a, size_t slot_b) {
    if (slot_a == slot_b || slot_a >= t.rank() || slot_b >= t.rank())
        throw SlotMismatch("invalid contraction slots");
    if (t.slots()[slot_a] == t.slots()[slot_b])
        throw SlotMismatch("contraction needs one contravariant and one covariant slot");
    if (slot_a > slot_b) std::swap(slot_a, slot_b);
    std::vector<Variance> slots;
    for (size_t i = 0; i < t.rank(); ++i) {
        if (i != slot_a && i != slot_b) slots.push_back(t.slots()[i]);
    }
    TensorField r(t.chart(), std::move(slots));
    std::vector<size_t> out(r.rank(), 0);
    std::vector<size_t> in(t.rank(), 0);
    do {
        RationalFunction sum = RationalFunction::zero(t.chart().vars());
        for (size_t c = 0; c < t.dim(); ++c) {
            size_t k = 0;
            for (size_t i = 0; i < t.rank(); ++i) {
                if (i == slot_a || i == slot_b)
                    in[i] = c;
                else
                    in[i] = out[k++];
            }
            sum = sum + t.at(in);
        }
        r.at_mut(out) = std::move(sum);
        if (r.rank() == 0) break;
    } while (next_multi_index(out, r.dim()));
    return r;
}

TensorField permuted(const TensorField& t, std::span<const size_t> perm) {
    if (perm.size() != t.rank()) throw SlotMismatch("permutation arity mismatch");
    std::vector<Variance> slots(t.rank());
    for (size_t i = 0; i < t.rank(); ++i) slots[i] = t.slots()[perm[i]];
    TensorField r(t.chart(), std::move(slots));
    if (t.rank() == 0) return r;
    std::vector<size_t> out(t.rank(), 0), in(t.rank(), 0);
    do {
        for (size_t i = 0; i < t.rank(); ++i) in[perm[i]] = out[i];
        r.at_mut(out) = t.at(in);
    } while (next_multi_index(out, t.dim()));
    return r;
}

namespace {

TensorField metric_pairing(const TensorField& t, size_t slot, const TensorField& m,
                           Variance expect, Variance result) {
    if (slot >= t.rank()) throw SlotMismatch("slot out of range");
    if (t.slots()[slot] != expect)
        throw SlotMismatch(expect == Variance::Lower ? "raising needs a covariant slot"
                                                     : "lowering needs a contravariant slot");
    if (t.chart() != m.chart()) throw ChartMismatch("metric lives on a different chart");
    std::vector<Variance> slots = t.slots();
    slots[slot] = result;
    TensorField r(t.chart(), std::move(slots));
    std::vector<size_t> out(t.rank(), 0), in(t.rank(), 0);
    do {
        RationalFunction sum = RationalFunction::zero(t.chart().vars());
        for (size_t c = 0; c < t.dim(); ++c) {
            in = out;
            in[slot] = c;
            sum = sum + m.at({out[slot], c}) * t.at(in);
        }
        r.at_mut(out) = std::move(sum);
    } while (next_multi_index(out, t.dim()));
    return r;
}

} // namespace

TensorField raise_slot(const TensorField& t, size_t slot, const TensorField& metric_inverse) {
    return metric_pairing(t, slot, metric_inverse, Variance::Lower, Variance::Upper);
}

TensorField lower_slot(const TensorField& t, size_t slot, const TensorField& metric) {
    return metric_pairing(t, slot, metric, Variance::Upper, Variance::Lower);
}

RationalFunction endomorphism_trace(const TensorField& t) {
    if (t.rank() != 2 || t.slots()[0] != Variance::Upper || t.slots()[1] != Variance::Lower)
        throw SlotMismatch("trace expects a (1,1) tensor");
    RationalFunction sum = RationalFunction::zero(t.chart().vars());
    for (size_t i = 0; i < t.dim(); ++i) sum = sum + t.at({i, i});
    return sum;
}

TensorField compose(const TensorField& a, const TensorField& b) {
    if (a.rank() != 2 || b.rank() != 2)
        throw SlotMismatch("compose expects (1,1) tensors");
    return contract(tensor_product(a, b), 1, 2);
}

VectorField apply_endomorphism(const TensorField& a, const VectorField& v) {
    if (v.rank() != 1 || v.slots()[0] != Variance::Upper)
        throw SlotMismatch("expected a vector field");
    return contract(tensor_product(a, v), 1, 2);
}

} // namespace contactgeo
