#include "dmm/json_io.hpp"

#include <fstream>

namespace dmm {

using nlohmann::json;

json algebra_to_json(const FiniteAlgebra& alg, const json& provenance) {
    json j;
    j["size"] = alg.size;
    j["meet"] = alg.meet;
    j["join"] = alg.join;
    j["fusion"] = alg.fusion;
    j["neg"] = alg.involutive() ? json(alg.neg) : json(nullptr);
    j["e"] = alg.e;
    j["names"] = alg.names.empty() ? json(nullptr) : json(alg.names);
    if (!provenance.is_null()) j["provenance"] = provenance;
    return j;
}

RawTables raw_from_json(const json& j) {
    RawTables r;
    try {
        r.size = j.at("size").get<int>();
        r.meet = j.at("meet").get<Table>();
        r.join = j.at("join").get<Table>();
        r.fusion = j.at("fusion").get<Table>();
        if (j.contains("neg") && !j.at("neg").is_null())
            r.neg = j.at("neg").get<std::vector<int>>();
        if (j.contains("arrow") && !j.at("arrow").is_null()) r.arrow = j.at("arrow").get<Table>();
        r.e = j.at("e").get<int>();
        if (j.contains("names") && !j.at("names").is_null())
            r.names = j.at("names").get<std::vector<std::string>>();
    } catch (const json::exception& ex) {
        throw malformed_table(std::string("bad algebra JSON: ") + ex.what());
    }
    return r;
}

json skew_order_to_json(const SkewOrderSpec& spec) {
    json j;
    j["b_size"] = spec.b_size;
    std::vector<std::vector<int>> rows;
    for (const auto& row : spec.order) rows.emplace_back(row.begin(), row.end());
    j["order"] = rows;
    return j;
}

SkewOrderSpec skew_order_from_json(const json& j) {
    SkewOrderSpec spec;
    try {
        spec.b_size = j.at("b_size").get<int>();
        auto rows = j.at("order").get<std::vector<std::vector<int>>>();
        for (const auto& row : rows) {
            std::vector<bool> r;
            for (int v : row) r.push_back(v != 0);
            spec.order.push_back(std::move(r));
        }
    } catch (const json::exception& ex) {
        throw malformed_table(std::string("bad skew order JSON: ") + ex.what());
    }
    return spec;
}

json morphism_to_json(const Morphism& m) {
    return json{{"source", m.source}, {"target", m.target}, {"map", m.map}};
}

Morphism morphism_from_json(const json& j) {
    Morphism m;
    try {
        m.source = j.value("source", "");
        m.target = j.value("target", "");
        m.map = j.at("map").get<std::vector<int>>();
    } catch (const json::exception& ex) {
        throw malformed_table(std::string("bad morphism JSON: ") + ex.what());
    }
    return m;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw malformed_table(path + ": " + ex.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace dmm
