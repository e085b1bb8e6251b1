#include "lgv/network_json.hpp"

#include <json.hpp>

namespace lgv {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> string_list(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ParseError(std::string("network file: missing or non-array \"") + field + "\"");
    std::vector<std::string> out;
    for (const auto& v : j[field]) {
        if (!v.is_string())
            throw ParseError(std::string("network file: \"") + field + "\" entries must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

} // namespace

PlanarNetwork parse_network_file(const std::string& text, const std::string& name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("network file: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("network file: top level must be an object");

    auto vertices = string_list(j, "vertices");
    auto sources = string_list(j, "sources");
    auto sinks = string_list(j, "sinks");

    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("network file: missing or non-array \"edges\"");
    std::vector<EdgeSpec> edges;
    std::size_t at = 0;
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("weight") ||
            !e["from"].is_string() || !e["to"].is_string() || !e["weight"].is_string())
            throw ParseError("network file: edge #" + std::to_string(at) +
                             " needs string fields \"from\", \"to\", \"weight\"");
        Rational w;
        try {
            w = Rational::parse(e["weight"].get<std::string>());
        } catch (const std::invalid_argument& ex) {
            throw ParseError("network file: edge #" + std::to_string(at) + ": " + ex.what());
        }
        edges.push_back({e["from"].get<std::string>(), e["to"].get<std::string>(), w});
        ++at;
    }
    return PlanarNetwork(std::move(vertices), std::move(edges), std::move(sources),
                         std::move(sinks), name);
}

std::string network_to_json(const PlanarNetwork& net) {
    ordered_json j;
    j["vertices"] = net.vertices();
    j["edges"] = ordered_json::array();
    for (const auto& e : net.edges()) {
        ordered_json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["weight"] = e.weight.str();
        j["edges"].push_back(std::move(je));
    }
    j["sources"] = net.sources();
    j["sinks"] = net.sinks();
    return j.dump(2) + "\n";
}

std::string matrix_to_json(const Matrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto entries = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        auto row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

Matrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix json: need \"rows\", \"cols\", \"entries\"");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    Matrix m(rows, cols);
    if (static_cast<int>(j["entries"].size()) != rows)
        throw ParseError("matrix json: row count mismatch");
    for (int r = 0; r < rows; ++r) {
        const auto& row = j["entries"][static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != cols)
            throw ParseError("matrix json: column count mismatch");
        for (int c = 0; c < cols; ++c)
            m(r, c) = Rational::parse(row[static_cast<std::size_t>(c)].get<std::string>());
    }
    return m;
}

} // namespace lgv
