#include "contactgeo/chart.hpp"

#include "contactgeo/errors.hpp"

#include <set>

namespace contactgeo {

Chart::Chart(std::vector<std::string> coordinates) {
    if (coordinates.empty()) throw Error("chart needs at least one coordinate");
    std::set<std::string> seen;
    for (const std::string& name : coordinates) {
        if (name.empty()) throw Error("empty coordinate name");
        if (!seen.insert(name).second) throw Error("duplicate coordinate name: " + name);
    }
    vars_ = std::make_shared<const Vars>(std::move(coordinates));
}

std::optional<size_t> Chart::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_->size(); ++i) {
        if ((*vars_)[i] == name) return i;
    }
    return std::nullopt;
}

} // namespace contactgeo
