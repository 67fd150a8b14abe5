#include "nonopen/json_io.hpp"

namespace nonopen {

json vector_to_json(const Vector& v) {
    json j;
    if (const auto* s = std::get_if<SparseVector>(&v)) {
        j["kind"] = "sparse";
        json entries = json::array();
        for (const auto& e : s->entries()) entries.push_back({e.index, e.value});
        j["entries"] = std::move(entries);
    } else {
        const auto& g = as_grid(v);
        j["kind"] = "grid";
        j["M"] = g.cells();
        j["values"] = g.values();
    }
    return j;
}

Vector vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw parameter_error("vector JSON must be an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "sparse") {
        std::vector<SparseEntry> entries;
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 2)
                throw parameter_error("sparse entries must be [index, value] pairs");
            entries.push_back({e.at(0).get<std::uint64_t>(), e.at(1).get<double>()});
        }
        return SparseVector::from_entries(std::move(entries));
    }
    if (kind == "grid") {
        return GridFunction(j.at("M").get<int>(), j.at("values").get<std::vector<double>>());
    }
    throw parameter_error("unknown vector kind: " + kind);
}

} // namespace nonopen
