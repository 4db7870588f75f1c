#include "iwasawa/json_io.hpp"

#include <stdexcept>
#include <string>

namespace iwasawa {

using nlohmann::json;

namespace {

std::int64_t get_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw std::invalid_argument(std::string("missing or non-integer field \"") + field + "\"");
    return j[field].get<std::int64_t>();
}

std::uint32_t get_u32(const json& j, const char* field) {
    std::int64_t v = get_int(j, field);
    if (v < 0 || v > 0xffffffffLL)
        throw std::invalid_argument(std::string("field \"") + field + "\" out of range");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

FiniteMeasure measure_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("measure JSON must be an object");
    std::int64_t p = get_int(j, "p");
    if (p < 2) throw std::invalid_argument("field \"p\" must be a prime >= 2");
    std::uint32_t r = get_u32(j, "r");
    std::uint32_t d = get_u32(j, "d");
    FiniteMeasure mu(static_cast<std::uint64_t>(p), r, d);
    if (!j.contains("entries") || !j["entries"].is_array())
        throw std::invalid_argument("missing or non-array field \"entries\"");
    for (const json& entry : j["entries"]) {
        if (!entry.is_object() || !entry.contains("x") || !entry["x"].is_array())
            throw std::invalid_argument("entry needs a coordinate array \"x\"");
        if (entry["x"].size() != d)
            throw std::invalid_argument("entry coordinate count differs from \"d\"");
        std::vector<std::int64_t> coords;
        coords.reserve(d);
        for (const json& c : entry["x"]) {
            if (!c.is_number_integer())
                throw std::invalid_argument("coordinates must be integers");
            coords.push_back(c.get<std::int64_t>());
        }
        mu.add(Point(mu.p(), r, coords), get_int(entry, "c"));
    }
    return mu;
}

json measure_to_json(const FiniteMeasure& mu) {
    json entries = json::array();
    for (const auto& [key, c] : mu.entries()) {
        json x = json::array();
        for (std::uint64_t coord : key) x.push_back(coord);
        entries.push_back({{"x", x}, {"c", c}});
    }
    return {{"p", mu.p()}, {"r", mu.level()}, {"d", mu.dim()}, {"entries", entries}};
}

json series_to_json(const PowerSeriesTrunc& s) {
    return {{"p", s.p()}, {"r", s.level()}, {"coeffs", s.coeffs()}};
}

json laplace_to_json(std::uint64_t p, std::uint32_t r, const std::vector<Residue>& coeffs) {
    json cs = json::array();
    for (const Residue& c : coeffs) cs.push_back(c.value());
    return {{"p", p}, {"r", r}, {"coeffs", cs}};
}

namespace {

json terms_to_json(const auto& element) {
    json terms = json::array();
    for (const auto& [i, c] : element.terms()) {
        json idx = json::array();
        for (std::uint32_t e : i.exponents()) idx.push_back(e);
        terms.push_back({{"i", idx}, {"c", c}});
    }
    return terms;
}

}  // namespace

json gamma_element_to_json(const GammaElement& g) {
    return {{"k", g.degree()}, {"terms", terms_to_json(g)}};
}

json gamma_series_to_json(const GammaSeries& s) {
    json components = json::array();
    for (std::uint32_t k = 0; k <= s.cutoff(); ++k)
        components.push_back(gamma_element_to_json(s.component(k)));
    return {{"p", s.p()},      {"r", s.level()},          {"d", s.dim()},
            {"cutoff", s.cutoff()}, {"components", components}};
}

json log_element_to_json(const LogStalkElement& a) {
    return {{"k", a.degree()}, {"terms", terms_to_json(a)}};
}

FiniteTower tower_from_json(const json& j) {
    if (!j.is_object() || !j.contains("levels") || !j["levels"].is_array())
        throw std::invalid_argument("tower JSON needs a \"levels\" array");
    std::vector<TowerLevel> levels;
    for (const json& lv : j["levels"]) {
        std::int64_t p = get_int(lv, "p");
        if (p < 2) throw std::invalid_argument("level \"p\" must be a prime >= 2");
        levels.push_back({static_cast<std::uint64_t>(p), get_u32(lv, "r"), get_u32(lv, "n")});
    }
    if (!j.contains("transitions") || !j["transitions"].is_array())
        throw std::invalid_argument("tower JSON needs a \"transitions\" array");
    std::vector<IntMatrix> transitions;
    for (const json& tj : j["transitions"]) {
        if (!tj.is_array()) throw std::invalid_argument("each transition must be a matrix");
        IntMatrix t;
        for (const json& row : tj) {
            if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
            std::vector<std::int64_t> r;
            for (const json& e : row) {
                if (!e.is_number_integer())
                    throw std::invalid_argument("matrix entries must be integers");
                r.push_back(e.get<std::int64_t>());
            }
            t.push_back(std::move(r));
        }
        transitions.push_back(std::move(t));
    }
    return {std::move(levels), std::move(transitions)};
}

json verdict_to_json(const MlVerdict& v) {
    switch (v.kind) {
        case MlKind::Stabilized:
            return {{"verdict", "stabilized"}, {"s", v.step}};
        case MlKind::Zero:
            return {{"verdict", "zero"}, {"s", v.step}};
        default:
            return {{"verdict", "undetermined"}};
    }
}

}  // namespace iwasawa
