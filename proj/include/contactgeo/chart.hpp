#pragma once

#include "contactgeo/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace contactgeo {

// A single coordinate chart. All tensor work happens over one chart; there
// are no atlases.
class Chart {
public:
    explicit Chart(std::vector<std::string> coordinates);

    size_t dim() const { return vars_->size(); }
    const std::string& coordinate(size_t i) const { return (*vars_)[i]; }
    const VarsPtr& vars() const { return vars_; }

    std::optional<size_t> index_of(const std::string& name) const;

    bool odd_dimensional() const { return dim() % 2 == 1; }
    // n for dim = 2n + 1; requires odd dimension.
    size_t contact_n() const { return (dim() - 1) / 2; }

    bool operator==(const Chart& o) const { return same_vars(vars_, o.vars_); }
    bool operator!=(const Chart& o) const { return !(*this == o); }

private:
    VarsPtr vars_;
};

} // namespace contactgeo
