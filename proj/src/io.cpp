#include "qga/io.hpp"

#include <fstream>
#include <sstream>

namespace qga {

Algebra parse_algebra(const json& doc) {
    if (!doc.is_object()) throw InvalidAlgebraError("document is not an object");
    Algebra a;
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw InvalidAlgebraError("missing \"vertices\" array");
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string())
            throw InvalidAlgebraError("vertex ids must be strings");
        a.quiver.add_vertex(v.get<std::string>());
    }
    if (doc.contains("arrows")) {
        if (!doc["arrows"].is_array())
            throw InvalidAlgebraError("\"arrows\" must be an array");
        for (const auto& ar : doc["arrows"]) {
            if (!ar.is_object() || !ar.contains("name") || !ar.contains("source") ||
                !ar.contains("target"))
                throw InvalidAlgebraError(
                    "arrow entries need name/source/target fields");
            int degree = 0;
            if (ar.contains("degree")) {
                if (!ar["degree"].is_number_integer())
                    throw InvalidAlgebraError("arrow degree must be an integer");
                degree = ar["degree"].get<int>();
            }
            a.quiver.add_arrow(ar["name"].get<std::string>(),
                               ar["source"].get<std::string>(),
                               ar["target"].get<std::string>(), degree);
        }
    }
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array())
            throw InvalidAlgebraError("\"relations\" must be an array");
        for (const auto& r : doc["relations"]) {
            if (!r.is_array() || r.size() != 2)
                throw InvalidAlgebraError(
                    "relations must be two-element arrays of arrow names");
            auto x = a.quiver.arrow_id(r[0].get<std::string>());
            auto y = a.quiver.arrow_id(r[1].get<std::string>());
            if (!x || !y)
                throw InvalidAlgebraError("relation refers to unknown arrow");
            a.relations.emplace_back(*x, *y);
        }
    }
    if (doc.contains("truncated") && doc["truncated"].is_boolean())
        a.truncated = doc["truncated"].get<bool>();
    if (doc.contains("bound") && doc["bound"].is_number_integer())
        a.truncation_bound = doc["bound"].get<int>();
    normalize_relations(a);
    return a;
}

Algebra parse_algebra_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidAlgebraError(std::string("JSON parse error: ") + e.what());
    }
    return parse_algebra(doc);
}

Algebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidAlgebraError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_string(ss.str());
}

json algebra_to_json(const Algebra& a) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : a.quiver.vertices()) doc["vertices"].push_back(v);
    doc["arrows"] = json::array();
    for (const auto& ar : a.quiver.arrows()) {
        json j;
        j["name"] = ar.name;
        j["source"] = a.quiver.vertex(ar.source);
        j["target"] = a.quiver.vertex(ar.target);
        j["degree"] = ar.degree;
        doc["arrows"].push_back(j);
    }
    doc["relations"] = json::array();
    for (const auto& r : a.relations)
        doc["relations"].push_back(
            {a.quiver.arrow(r.first).name, a.quiver.arrow(r.second).name});
    if (a.truncated) {
        doc["truncated"] = true;
        doc["bound"] = a.truncation_bound;
    }
    return doc;
}

std::string serialize_algebra(const Algebra& a) {
    return algebra_to_json(a).dump(2) + "\n";
}

}  // namespace qga
