#include "pyth/json_io.hpp"

#include <sstream>

namespace pyth {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string string_member(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_string()) throw ParseError(0, std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

Poly poly_value(const Json& v, FieldSpec spec) {
    if (!v.is_string()) throw ParseError(0, "polynomial entries must be strings");
    return parse_poly(v.get<std::string>(), spec);
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

Json to_json(const Triple& q) {
    Json j = Json::object();
    j["x"] = render(q.x());
    j["y"] = render(q.y());
    j["z"] = render(q.z());
    return j;
}

Json to_json(const BerggrenWord& w) {
    Json j = Json::object();
    j["c"] = w.c.to_string();
    j["word"] = Json::array();
    for (const auto& f : w.word) j["word"].push_back(render(f));
    j["base"] = w.base ? render(*w.base) : std::string("AXIS");
    return j;
}

Json to_json(const Mat3& m) {
    Json j = Json::array();
    for (const auto& e : m.entries()) j.push_back(render(e));
    return j;
}

Json to_json(const Generator& g) {
    Json j = Json::object();
    std::visit(
        [&](const auto& gen) {
            using T = std::decay_t<decltype(gen)>;
            if constexpr (std::is_same_v<T, MfGen>) {
                j["kind"] = "Mf";
                j["f"] = render(gen.f);
            } else if constexpr (std::is_same_v<T, RfGen>) {
                j["kind"] = "Rf";
                j["f"] = render(gen.f);
            } else if constexpr (std::is_same_v<T, TcGen>) {
                j["kind"] = "Tc";
                j["c"] = gen.c.to_string();
            } else if constexpr (std::is_same_v<T, PxyGen>) {
                j["kind"] = "Pxy";
            } else if constexpr (std::is_same_v<T, UdGen>) {
                j["kind"] = "Ud";
                j["d"] = gen.d;
            } else {
                j["kind"] = "J";
            }
        },
        g);
    return j;
}

Json to_json(const GeneratorWord& word) {
    Json j = Json::array();
    for (const auto& g : word) j.push_back(to_json(g));
    return j;
}

Json to_json(const TreeNode& node) {
    Json j = Json::object();
    j["triple"] = to_json(node.triple);
    j["word"] = to_json(node.word);
    j["height"] = node.height;
    return j;
}

Json to_json(const CensusReport& report) {
    Json j = Json::object();
    j["bounds"] = {{"field", report.bounds.field.to_string()}, {"max_deg", report.bounds.max_deg}};
    j["candidates"] = report.candidates;
    Json counts = Json::object();
    for (const auto& [h, c] : report.counts_by_height) {
        counts[std::to_string(h)] = {{"primitive", c.primitive}, {"spt", c.spt}, {"tree", c.tree}};
    }
    j["counts_by_height"] = std::move(counts);
    j["violations"] = report.violations;
    return j;
}

Triple triple_from_json(const Json& j, FieldSpec spec) {
    return Triple(poly_value(member(j, "x"), spec), poly_value(member(j, "y"), spec),
                  poly_value(member(j, "z"), spec));
}

BerggrenWord word_from_json(const Json& j, FieldSpec spec) {
    FieldElement c = parse_element(string_member(j, "c"), spec);
    const Json& arr = member(j, "word");
    if (!arr.is_array()) throw ParseError(0, "'word' must be an array");
    std::vector<Poly> word;
    for (const auto& f : arr) word.push_back(poly_value(f, spec));
    const std::string base = string_member(j, "base");
    std::optional<Poly> base_poly;
    if (base != "AXIS") base_poly = parse_poly(base, spec);
    return {std::move(c), std::move(word), std::move(base_poly)};
}

Mat3 matrix_from_json(const Json& j, FieldSpec spec) {
    if (!j.is_array() || j.size() != 9) throw ParseError(0, "a matrix is an array of nine polynomial strings");
    std::vector<Poly> entries;
    for (const auto& e : j) entries.push_back(poly_value(e, spec));
    return Mat3(spec, std::move(entries));
}

Generator generator_from_json(const Json& j, FieldSpec spec) {
    const std::string kind = string_member(j, "kind");
    if (kind == "Mf") return MfGen{parse_poly(string_member(j, "f"), spec)};
    if (kind == "Rf") return RfGen{parse_poly(string_member(j, "f"), spec)};
    if (kind == "Tc") return TcGen{parse_element(string_member(j, "c"), spec)};
    if (kind == "Pxy") return PxyGen{};
    if (kind == "J") return JGen{};
    if (kind == "Ud") {
        const Json& d = member(j, "d");
        if (!d.is_number_integer()) throw ParseError(0, "'d' must be an integer");
        return UdGen{d.get<int>()};
    }
    throw ParseError(0, "unknown generator kind '" + kind + "'");
}

GeneratorWord generator_word_from_json(const Json& j, FieldSpec spec) {
    if (!j.is_array()) throw ParseError(0, "a generator word is an array");
    GeneratorWord out;
    for (const auto& g : j) out.push_back(generator_from_json(g, spec));
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON");
    }
}

std::string tree_to_dot(const std::vector<TreeNode>& nodes) {
    std::ostringstream out;
    out << "digraph berggren {\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << dot_escape(render(nodes[i].triple)) << "\"];\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].parent) continue;
        out << "  n" << *nodes[i].parent << " -> n" << i << " [label=\"M_{"
            << dot_escape(render(nodes[i].word.word.front())) << "}\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace pyth
