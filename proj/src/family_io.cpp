// Family file format: {"n": 7, "k": 3, "sets": [[1,2,3], [1,4,5], ...]}.
// "k" is emitted iff the family is uniform; the reader accepts sets in any
// order and rejects duplicates and out-of-range elements.

#include "ekr/families.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace ekr {

namespace {
using nlohmann::json;
}

SetFamily family_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("family file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("sets"))
        throw std::runtime_error("family file: expected object with \"n\" and \"sets\"");
    if (!doc["n"].is_number_integer())
        throw std::runtime_error("family file: \"n\" must be an integer");
    int n = doc["n"].get<int>();
    if (n < 1 || n > kMaxGroundSet)
        throw std::runtime_error("family file: n out of [1, 63]");

    std::optional<int> k_hint;
    if (doc.contains("k")) {
        if (!doc["k"].is_number_integer())
            throw std::runtime_error("family file: \"k\" must be an integer");
        k_hint = doc["k"].get<int>();
    }

    if (!doc["sets"].is_array()) throw std::runtime_error("family file: \"sets\" must be an array");
    std::vector<Subset> members;
    for (const json& arr : doc["sets"]) {
        if (!arr.is_array()) throw std::runtime_error("family file: each set must be an array");
        std::vector<int> elems;
        for (const json& e : arr) {
            if (!e.is_number_integer())
                throw std::runtime_error("family file: elements must be integers");
            elems.push_back(e.get<int>());
        }
        try {
            members.push_back(Subset::of(n, elems));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("family file: ") + e.what());
        }
    }
    try {
        return SetFamily(n, std::move(members), k_hint);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("family file: ") + e.what());
    }
}

std::string family_to_json_text(const SetFamily& f) {
    json doc;
    doc["n"] = f.ground_set();
    if (f.is_uniform()) doc["k"] = *f.uniform_k();
    json sets = json::array();
    for (const Subset& s : f.members()) sets.push_back(s.elements());
    doc["sets"] = std::move(sets);
    return doc.dump(2) + "\n";
}

SetFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open family file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return family_from_json_text(text);
}

void save_family(const SetFamily& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write family file: " + path);
    out << family_to_json_text(f);
}

}  // namespace ekr
