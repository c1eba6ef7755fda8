#include "anticyc/json_io.hpp"


#include <fstream>
#include <stdexcept>

namespace anticyc {

namespace {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

}  // namespace

json class_to_json(const LatticeClass& x) {
    json a = json::array();
    for (const auto& c : x.coords) a.push_back(int_to_json(c));
    return a;
}

LatticeClass class_from_json(const json& j, int expected_dim) {
    if (!j.is_array()) throw std::invalid_argument("class must be a JSON array");
    std::vector<Int> coords;
    coords.reserve(j.size());
    for (const auto& e : j) coords.push_back(int_from_json(e));
    if (expected_dim >= 0 && static_cast<int>(coords.size()) != expected_dim)
        throw std::invalid_argument("class has " + std::to_string(coords.size()) +
                                    " coordinates, expected " + std::to_string(expected_dim));
    return LatticeClass{std::move(coords)};
}

json pair_to_json(const CyclePair& pair) {
    json j;
    j["n"] = pair.n;
    j["components"] = json::array();
    for (const auto& d : pair.components) j["components"].push_back(class_to_json(d));
    j["orientation"] = pair.orientation;
    j["declared_minus_two"] = json::array();
    for (const auto& d : pair.declared_minus_two)
        j["declared_minus_two"].push_back(class_to_json(d));
    j["history"] = json::array();
    for (const auto& step : pair.history)
        j["history"].push_back(
            {{"op", step.kind == BlowupStep::Kind::Corner ? "corner" : "interior"},
             {"index", step.index}});
    return j;
}

CyclePair pair_from_json(const json& j) {
    CyclePair pair;
    pair.n = j.at("n").get<int>();
    int dim = pair.n + 1;
    for (const auto& e : j.at("components")) pair.components.push_back(class_from_json(e, dim));
    pair.orientation = j.value("orientation", true);
    if (j.contains("declared_minus_two"))
        for (const auto& e : j["declared_minus_two"])
            pair.declared_minus_two.push_back(class_from_json(e, dim));
    if (j.contains("history")) {
        for (const auto& e : j["history"]) {
            BlowupStep step;
            std::string op = e.at("op").get<std::string>();
            if (op == "corner")
                step.kind = BlowupStep::Kind::Corner;
            else if (op == "interior")
                step.kind = BlowupStep::Kind::Interior;
            else
                throw std::invalid_argument("unknown history op: " + op);
            step.index = e.at("index").get<int>();
            pair.history.push_back(step);
        }
        // replay from the base pair and require agreement
        CyclePair replay;
        replay.n = 0;
        replay.components.push_back(LatticeClass{std::vector<Int>{3}});
        for (const auto& step : pair.history)
            replay = step.kind == BlowupStep::Kind::Corner
                         ? corner_blowup(replay, step.index)
                         : interior_blowup(replay, step.index);
        if (replay.n != pair.n || replay.components != pair.components)
            throw std::invalid_argument(
                "recorded history does not reproduce the stored components");
    }
    require_valid(pair);
    return pair;
}

void save_pair(const CyclePair& pair, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << pair_to_json(pair).dump(2) << "\n";
}

CyclePair load_pair(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    in >> j;
    return pair_from_json(j);
}

IntegerIsometry isometry_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a JSON array of rows");
    IntegerIsometry f;
    size_t dim = j.size();
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != dim)
            throw std::invalid_argument("matrix must be square");
        std::vector<Int> r;
        r.reserve(dim);
        for (const auto& e : row) r.push_back(int_from_json(e));
        f.matrix.push_back(std::move(r));
    }
    if (!f.preserves_pairing())
        throw std::invalid_argument("matrix does not preserve the pairing");
    return f;
}

IntegerIsometry load_isometry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    in >> j;
    return isometry_from_json(j);
}

LatticeClass parse_class_arg(const std::string& text, int dim) {
    if (!text.empty() && text.front() == '[')
        return class_from_json(json::parse(text), dim);
    std::vector<Int> coords;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty coordinate in class: " + text);
        coords.push_back(Int(tok));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (dim >= 0 && static_cast<int>(coords.size()) != dim)
        throw std::invalid_argument("class has " + std::to_string(coords.size()) +
                                    " coordinates, expected " + std::to_string(dim));
    return LatticeClass{std::move(coords)};
}

}  // namespace anticyc
