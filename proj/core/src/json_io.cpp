#include "blockers/json_io.hpp"

namespace blockers {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& what) {
    if (!ok) throw_error(errc::parse_error, what);
}

int require_int(const json& j, const char* key) {
    require(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
    const json& v = j.at(key);
    require(v.is_number_integer(), std::string("field \"") + key + "\" is not an integer");
    return v.get<int>();
}

json cell_to_json(Cell c) { return json::array({c.row, c.col}); }

Cell cell_from_json(const json& j) {
    require(j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer(),
            "cell is not a [row, col] integer pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

} // namespace

json to_json(const Permutation& p) {
    return json(p.image());
}

json to_json(const PositionSet& ps) {
    json cells = json::array();
    for (Cell c : ps.cells()) cells.push_back(cell_to_json(c));
    return json{{"n", ps.order()}, {"cells", std::move(cells)}};
}

json to_json(const FlagSpec& spec) {
    return json{{"n", spec.n}, {"m", spec.m}, {"t", spec.t}};
}

json to_json(const BlockerVerdict& v) {
    json j{{"is_blocker", v.is_blocker}, {"witness", nullptr}};
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

json to_json(const FaceReport& r) {
    json j{{"n", r.n},
           {"spec", nullptr},
           {"once_count", r.once_count},
           {"rank", r.rank},
           {"affine_dim", r.affine_dim},
           {"upper_bound", nullptr},
           {"lower_bound", nullptr},
           {"meets_upper", nullptr},
           {"within_bounds", nullptr}};
    if (r.spec) j["spec"] = to_json(*r.spec);
    if (r.upper_bound) j["upper_bound"] = *r.upper_bound;
    if (r.lower_bound) j["lower_bound"] = *r.lower_bound;
    if (r.meets_upper) j["meets_upper"] = *r.meets_upper;
    if (r.within_bounds) j["within_bounds"] = *r.within_bounds;
    return j;
}

json to_json(const CardinalityAudit& a) {
    return json{{"n", a.n},
                {"achievable", a.achievable},
                {"paper_predicate_set", a.paper_predicate_set},
                {"discrepancies", a.discrepancies},
                {"max_cardinality", a.max_cardinality}};
}

json to_json(const SearchResult& r) {
    json witnesses = json::array();
    for (const auto& [cell, perm] : r.private_witnesses)
        witnesses.push_back(json{{"cell", cell_to_json(cell)}, {"witness", to_json(perm)}});
    return json{{"blocker", to_json(r.blocker)},
                {"cardinality", r.cardinality},
                {"is_verified_minimum", r.is_verified_minimum},
                {"private_witnesses", std::move(witnesses)},
                {"symmetry_class_size", r.symmetry_class_size}};
}

json to_json(const ConjectureReport& r) {
    json j{{"n", r.n},
           {"max_found", r.max_found},
           {"target", r.target},
           {"witness", nullptr},
           {"falsified", r.falsified},
           {"complete", r.complete},
           {"nodes_expanded", r.nodes_expanded}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

Permutation permutation_from_json(const json& j) {
    require(j.is_array(), "permutation is not an array");
    std::vector<int> image;
    image.reserve(j.size());
    for (const json& v : j) {
        require(v.is_number_integer(), "permutation entry is not an integer");
        image.push_back(v.get<int>());
    }
    return Permutation(std::move(image));
}

PositionSet position_set_from_json(const json& j) {
    const int n = require_int(j, "n");
    require(j.contains("cells") && j.at("cells").is_array(), "missing \"cells\" array");
    std::vector<Cell> cells;
    cells.reserve(j.at("cells").size());
    for (const json& c : j.at("cells")) cells.push_back(cell_from_json(c));
    return PositionSet(n, std::move(cells));
}

FlagSpec flag_spec_from_json(const json& j) {
    const FlagSpec spec{require_int(j, "n"), require_int(j, "m"), require_int(j, "t")};
    spec.validate();
    return spec;
}

SearchResult search_result_from_json(const json& j) {
    require(j.is_object(), "search result is not an object");
    require(j.contains("blocker"), "missing field \"blocker\"");
    SearchResult r;
    r.blocker = position_set_from_json(j.at("blocker"));
    r.cardinality = require_int(j, "cardinality");
    require(j.contains("is_verified_minimum") && j.at("is_verified_minimum").is_boolean(),
            "missing boolean \"is_verified_minimum\"");
    r.is_verified_minimum = j.at("is_verified_minimum").get<bool>();
    r.symmetry_class_size = require_int(j, "symmetry_class_size");
    require(j.contains("private_witnesses") && j.at("private_witnesses").is_array(),
            "missing \"private_witnesses\" array");
    for (const json& w : j.at("private_witnesses")) {
        require(w.is_object() && w.contains("cell") && w.contains("witness"),
                "private witness entry needs \"cell\" and \"witness\"");
        r.private_witnesses.emplace_back(cell_from_json(w.at("cell")),
                                         permutation_from_json(w.at("witness")));
    }
    return r;
}

PositionSet load_position_set(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r'))
        ++i;
    if (i < text.size() && text[i] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw_error(errc::parse_error, e.what());
        }
        return position_set_from_json(j);
    }
    return parse_grid(text);
}

} // namespace blockers
