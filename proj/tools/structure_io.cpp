#include "structure_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pdm::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw structure_parse_error(path + ": " + what);
}

void check_known_keys(const json& obj, std::initializer_list<const char*> known,
                      const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) fail(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
    }
}

double number_field(const json& obj, const std::string& key, const std::string& path) {
    const std::string full = path.empty() ? key : path + "." + key;
    const auto it = obj.find(key);
    if (it == obj.end()) fail(full, "missing required field");
    if (!it->is_number()) fail(full, "expected a number");
    const double v = it->get<double>();
    if (!std::isfinite(v)) fail(full, "must be finite");
    return v;
}

double positive_field(const json& obj, const std::string& key, const std::string& path) {
    const double v = number_field(obj, key, path);
    if (v <= 0.0) fail(path.empty() ? key : path + "." + key, "must be positive");
    return v;
}

Lead parse_lead(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object with mass and potential");
    check_known_keys(j, {"mass", "potential"}, path);
    return {positive_field(j, "mass", path), number_field(j, "potential", path)};
}

}  // namespace

StructureFile parse_structure_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw structure_parse_error(std::string("JSON syntax error: ") + e.what());
    }
    if (!j.is_object()) fail("top level", "expected an object");
    check_known_keys(j, {"hbar", "beta", "left_lead", "layers", "right_lead"}, "");

    StructureFile f;
    if (j.contains("hbar")) f.hbar = positive_field(j, "hbar", "");
    f.beta = number_field(j, "beta", "");
    if (!j.contains("left_lead")) fail("left_lead", "missing required field");
    if (!j.contains("right_lead")) fail("right_lead", "missing required field");
    f.structure.left_lead = parse_lead(j["left_lead"], "left_lead");
    f.structure.right_lead = parse_lead(j["right_lead"], "right_lead");

    if (j.contains("layers")) {
        const json& layers = j["layers"];
        if (!layers.is_array()) fail("layers", "expected an array");
        for (std::size_t i = 0; i < layers.size(); ++i) {
            const std::string path = "layers[" + std::to_string(i) + "]";
            const json& item = layers[i];
            if (!item.is_object()) fail(path, "expected an object");
            check_known_keys(item, {"width", "mass", "potential"}, path);
            f.structure.layers.push_back({positive_field(item, "width", path),
                                          positive_field(item, "mass", path),
                                          number_field(item, "potential", path)});
        }
    }
    f.structure.validate();
    return f;
}

StructureFile load_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw structure_parse_error("cannot open structure file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_structure_json(buffer.str());
}

}  // namespace pdm::cli
