#include "roller/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "roller/error.hpp"

namespace roller {

std::string resolve_input(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(path)) return path;
    if (fs::is_regular_file(path + ".json")) return path + ".json";
    throw Error(Errc::MalformedInput, "no such input: " + path);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(resolve_input(path));
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::MalformedInput, path + ": " + e.what());
    }
}

bool is_pocset_json(const Json& j) { return j.is_object() && j.contains("pairs"); }
bool is_model_json(const Json& j) { return j.is_object() && j.contains("chains"); }

RawPocSet raw_pocset_from_json(const Json& j) {
    if (!is_pocset_json(j) || !j["pairs"].is_number_integer() || j["pairs"].get<long long>() < 0)
        throw Error(Errc::MalformedInput, "poc-set needs a non-negative integer \"pairs\"");
    RawPocSet raw;
    raw.pairs = j["pairs"].get<std::size_t>();
    if (j.contains("order")) {
        if (!j["order"].is_array()) throw Error(Errc::MalformedInput, "\"order\" must be a list of pairs");
        for (const auto& r : j["order"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw Error(Errc::MalformedInput, "order entry must be [\"a\",\"b\"] meaning a <= b");
            raw.order.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
    }
    return raw;
}

FinitePocSet pocset_from_json(const Json& j) { return validate_pocset(raw_pocset_from_json(j)); }

Json pocset_to_json(const FinitePocSet& P) {
    Json order = Json::array();
    const auto n = static_cast<Element>(2 * P.pairs());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (!P.less(a, b)) continue;
            bool cover = true;
            for (Element c = 0; c < n && cover; ++c)
                if (P.less(a, c) && P.less(c, b)) cover = false;
            if (!cover) continue;
            // the mirror b* < a* carries the same information
            std::pair<Element, Element> self{a, b}, mirror{star(b), star(a)};
            if (mirror < self) continue;
            order.push_back({P.name(a), P.name(b)});
        }
    Json j;
    j["pairs"] = P.pairs();
    j["order"] = order;
    return j;
}

Exact exact_from_json(const Json& j) {
    if (j.is_number_integer()) return Exact(j.get<std::int64_t>());
    if (j.is_string()) return Exact::parse(j.get<std::string>());
    throw Error(Errc::MalformedInput, "exact numbers are integers or strings such as \"-1/2\" or \"√3/2\"");
}

namespace {
Rational rational_from_json(const Json& j) {
    Exact x = exact_from_json(j);
    if (!x.is_rational()) throw Error(Errc::MalformedInput, "spacing and offset must be rational");
    return x.rational_part();
}
}  // namespace

Model model_from_json(const Json& j) {
    if (!is_model_json(j) || !j["chains"].is_array())
        throw Error(Errc::MalformedInput, "chain family needs a \"chains\" list");
    Model M;
    for (const auto& c : j["chains"]) {
        if (!c.is_string()) throw Error(Errc::MalformedInput, "chain names are strings");
        M.family.names.push_back(c.get<std::string>());
    }
    if (j.contains("geometry") && !j["geometry"].is_null()) {
        if (!j["geometry"].is_array()) throw Error(Errc::MalformedInput, "\"geometry\" must be a list");
        for (const auto& g : j["geometry"]) {
            if (!g.is_object() || !g.contains("normal")) throw Error(Errc::MalformedInput, "family needs a normal");
            WallFamily f;
            const auto& n = g["normal"];
            if (n.is_string()) f.normal = parse_exact_vec(n.get<std::string>());
            else if (n.is_array())
                for (const auto& x : n) f.normal.push_back(exact_from_json(x));
            else throw Error(Errc::MalformedInput, "normal must be a list");
            if (g.contains("spacing")) f.spacing = rational_from_json(g["spacing"]);
            if (g.contains("offset")) f.offset = rational_from_json(g["offset"]);
            M.geometry.families.push_back(std::move(f));
        }
        validate_model(M);
    }
    return M;
}

Json model_to_json(const Model& M) {
    Json j;
    j["chains"] = M.family.names;
    if (!M.geometry.families.empty()) {
        Json g = Json::array();
        for (const auto& f : M.geometry.families) {
            Json n = Json::array();
            for (const auto& x : f.normal) n.push_back(x.str());
            g.push_back({{"normal", n}, {"spacing", f.spacing.str()}, {"offset", f.offset.str()}});
        }
        j["geometry"] = g;
    }
    return j;
}

Json cubing_to_json(const FinitePocSet& P, const CubeComplex& C) {
    Json j;
    j["pairs"] = C.pairs;
    Json vs = Json::array();
    for (const auto& v : C.vertices) vs.push_back(set_str(P, v.members));
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : C.edges) es.push_back({{"u", e.u}, {"v", e.v}, {"label", P.name(e.label)}});
    j["edges"] = es;
    Json cs = Json::array();
    for (const auto& c : C.cubes) {
        Json t = Json::array();
        for (auto e : c.transverse) t.push_back(P.name(e));
        cs.push_back({{"dim", c.transverse.size()}, {"base", c.base}, {"flips", t}, {"vertices", c.vertices}});
    }
    j["cubes"] = cs;
    Json counts = Json::array();
    for (std::size_t d = 0; d <= C.dimension(); ++d) counts.push_back(C.cube_count(d));
    j["cube_counts"] = counts;
    return j;
}

std::string cubing_dot(const FinitePocSet& P, const CubeComplex& C) {
    std::ostringstream o;
    o << "graph cubing {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < C.vertices.size(); ++i)
        o << "  v" << i << " [label=\"" << set_str(P, C.vertices[i].members) << "\"];\n";
    for (const auto& e : C.edges) {
        // an edge is the wall {label, label*}: name it by its plain side
        Element w = e.label & ~1u;
        o << "  v" << e.u << " -- v" << e.v << " [label=\"" << P.name(w) << "\"];\n";
    }
    o << "}\n";
    return o.str();
}

std::string roller_dot(const RollerPoset& R) {
    std::ostringstream o;
    o << "digraph roller {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < R.classes.size(); ++i)
        o << "  c" << i << " [label=\"" << signature_str(R.classes[i]) << "\"];\n";
    for (auto [a, b] : R.hasse()) o << "  c" << a << " -> c" << b << ";\n";
    o << "}\n";
    return o.str();
}

}  // namespace roller
