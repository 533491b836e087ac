#include <charconv>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "roller/error.hpp"
#include "roller/io.hpp"
#include "roller/shadows.hpp"

using namespace roller;

namespace {

struct Config {
    std::string input;
    std::string format = "text";
    std::int64_t window = 0;
    std::uint64_t seed = 1;
    std::string direction, base, signature, cuts, ultrafilter;
    std::size_t length = 20;
    std::size_t sample = 0;
};

Json header(const std::string& cmd) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = cmd;
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

FinitePocSet need_pocset(const std::string& path) {
    auto j = read_json_file(path);
    if (!is_pocset_json(j)) throw Error(Errc::MalformedInput, path + " is not a poc-set (needs \"pairs\")");
    return pocset_from_json(j);
}

Model need_model(const std::string& path, bool geometry = true) {
    auto j = read_json_file(path);
    if (!is_model_json(j)) throw Error(Errc::MalformedInput, path + " is not a chain family (needs \"chains\")");
    auto M = model_from_json(j);
    if (geometry && M.geometry.families.empty()) throw Error(Errc::MalformedInput, path + " has no geometry");
    return M;
}

Cuts parse_cuts(const std::string& s) {
    Cuts out;
    std::size_t i = 0;
    while (i <= s.size()) {
        auto j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        std::int64_t v = 0;
        const char* b = s.data() + i;
        const char* e = s.data() + j;
        while (b < e && *b == ' ') ++b;
        if (*b == '+') ++b;
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || p != e) throw Error(Errc::MalformedInput, "bad integer list: " + s);
        out.push_back(v);
        i = j + 1;
    }
    return out;
}

std::string cuts_str(const Cuts& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

Json cuts_json(const Cuts& c) { return Json(c); }

std::string yes(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> hs_names(const ChainFamilyPocSet& F, const std::vector<ChainHalfspace>& hs) {
    std::vector<std::string> out;
    for (const auto& h : hs) out.push_back(halfspace_str(F, h));
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

// ---- poc-set commands

int cmd_validate(const Config& c) {
    auto j = read_json_file(c.input);
    if (is_pocset_json(j)) {
        auto P = pocset_from_json(j);
        if (c.format == "json") {
            auto o = header("validate");
            o["kind"] = "pocset";
            o["valid"] = true;
            o["dimension"] = dimension(P);
            o["pocset"] = pocset_to_json(P);
            emit(o);
        } else {
            std::cout << "poc-set: " << P.pairs() << " proper pairs, dimension " << dimension(P) << "\nvalid\n";
        }
        return 0;
    }
    if (is_model_json(j)) {
        auto M = model_from_json(j);
        ModelCheck chk;
        if (!M.geometry.families.empty()) chk = validate_model(M);
        if (c.format == "json") {
            auto o = header("validate");
            o["kind"] = "chain-family";
            o["valid"] = true;
            o["uniform"] = chk.uniform;
            o["warnings"] = chk.warnings;
            o["model"] = model_to_json(M);
            emit(o);
        } else {
            std::cout << "chain family: " << M.family.chains() << " chains";
            if (!M.geometry.families.empty()) std::cout << " in dimension " << M.geometry.dim() << (chk.uniform ? ", uniform" : ", not uniform");
            std::cout << "\n";
            for (const auto& w : chk.warnings) std::cout << "warning: " << w << "\n";
            std::cout << "valid\n";
        }
        return 0;
    }
    throw Error(Errc::MalformedInput, c.input + " is neither a poc-set nor a chain family");
}

int cmd_ultrafilters(const Config& c) {
    auto P = need_pocset(c.input);
    if (!c.ultrafilter.empty()) {
        // membership check for one set literal
        ElementSet s;
        std::string body = c.ultrafilter;
        if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) s[P.parse_element(tok)] = true;
        s[P.zero_star()] = true;
        auto r = is_ultrafilter(P, s);
        std::string why;
        if (!r.ok)
            why = r.axiom == "UF1" ? "UF1: pair " + P.name(r.a) + " chosen " + (s[r.a] && s[star(r.a)] ? "twice" : "never")
                                   : "UF2: " + P.name(r.a) + " <= " + P.name(star(r.b)) + " with both " + P.name(r.a) +
                                         " and " + P.name(r.b) + " chosen";
        if (c.format == "json") {
            auto o = header("ultrafilters");
            o["set"] = set_str(P, s);
            o["ultrafilter"] = r.ok;
            if (!r.ok) o["violation"] = why;
            emit(o);
        } else {
            std::cout << set_str(P, s) << (r.ok ? " is an ultrafilter\n" : " is not an ultrafilter (" + why + ")\n");
        }
        return 0;
    }
    auto us = enumerate_ultrafilters(P);
    if (c.format == "json") {
        auto o = header("ultrafilters");
        o["count"] = us.size();
        Json a = Json::array();
        for (const auto& u : us) a.push_back({{"members", set_str(P, u.members)}, {"min", set_str(P, min_set(P, u))}});
        o["ultrafilters"] = a;
        emit(o);
    } else {
        std::cout << us.size() << " ultrafilters\n";
        for (const auto& u : us) std::cout << "  " << set_str(P, u.members) << "  min " << set_str(P, min_set(P, u)) << "\n";
    }
    return 0;
}

int cmd_cubing(const Config& c) {
    auto P = need_pocset(c.input);
    auto C = build_cubing(P);
    if (c.format == "dot") {
        std::cout << cubing_dot(P, C);
    } else if (c.format == "json") {
        auto o = header("cubing");
        o.update(cubing_to_json(P, C));
        emit(o);
    } else {
        std::cout << "vertices: " << C.vertices.size() << "\nedges: " << C.edges.size() << "\ndimension: " << C.dimension()
                  << "\ncube counts:";
        for (std::size_t d = 0; d <= C.dimension(); ++d) std::cout << " " << C.cube_count(d);
        std::cout << "\n";
        for (std::size_t i = 0; i < C.vertices.size(); ++i) std::cout << "  v" << i << " " << set_str(P, C.vertices[i].members) << "\n";
        for (const auto& e : C.edges) std::cout << "  v" << e.u << " -- v" << e.v << " flip " << P.name(e.label) << "\n";
    }
    return 0;
}

int cmd_dual(const Config& c) {
    auto P = need_pocset(c.input);
    auto R = duality_roundtrip(P);
    const auto& X = R.extracted.pocset;
    if (c.format == "json") {
        auto o = header("dual");
        o["isomorphic"] = true;
        Json b = Json::object();
        for (Element e = 0; e < P.size(); ++e) b[P.name(e)] = X.name(R.bijection[e]);
        o["bijection"] = b;
        o["vertex_map"] = R.vertex_map;
        o["extracted"] = pocset_to_json(X);
        emit(o);
    } else {
        std::cout << "round trip: isomorphic\n";
        for (Element e = 0; e < P.size(); ++e) std::cout << "  " << P.name(e) << " -> " << X.name(R.bijection[e]) << "\n";
    }
    return 0;
}

// ---- boundary and rho

int cmd_boundary(const Config& c) {
    auto M = need_model(c.input, false);
    auto R = roller_boundary(M.family.chains());
    if (c.format == "dot") {
        std::cout << roller_dot(R);
    } else if (c.format == "json") {
        auto o = header("boundary");
        o["chains"] = R.k;
        Json cls = Json::array();
        for (const auto& s : R.classes) cls.push_back({{"class", signature_str(s)}, {"codim", class_codim(s).value}});
        o["classes"] = cls;
        Json h = Json::array();
        for (auto [a, b] : R.hasse()) h.push_back({signature_str(R.classes[a]), signature_str(R.classes[b])});
        o["covers"] = h;
        emit(o);
    } else {
        std::cout << R.classes.size() << " classes\n";
        for (const auto& s : R.classes) std::cout << "  " << signature_str(s) << " codim " << class_codim(s).value << "\n";
    }
    return 0;
}

int cmd_rho(const Config& c) {
    auto M = need_model(c.input);
    Direction d(parse_exact_vec(c.direction));
    if (d.v.size() != M.geometry.dim()) throw Error(Errc::MalformedInput, "direction has the wrong dimension");
    auto r = classify_direction(M.geometry, d);
    if (c.format == "json") {
        auto o = header("rho");
        o["direction"] = d.str();
        o["class"] = signature_str(r.signature);
        o["codim"] = class_codim(r.signature).value;
        emit(o);
    } else {
        std::cout << signature_str(r.signature) << "\n";
    }
    return 0;
}

int cmd_image(const Config& c) {
    auto M = need_model(c.input);
    const auto& G = M.geometry;
    if (!c.signature.empty()) {
        auto s = parse_signature(c.signature);
        if (s.size() != G.chains()) throw Error(Errc::ChainCountMismatch, "signature has " + std::to_string(s.size()) + " ends");
        bool in = in_image(G, s);
        if (c.format == "json") {
            auto o = header("image");
            o["class"] = signature_str(s);
            o["in_image"] = in;
            emit(o);
        } else {
            std::cout << signature_str(s) << (in ? " is in the image\n" : " is not in the image\n");
        }
        return 0;
    }
    if (G.dim() != 2) {
        // no circle to walk: test every class exactly
        std::vector<std::string> hit;
        for (const auto& s : all_signatures(G.chains()))
            if (in_image(G, s)) hit.push_back(signature_str(s));
        if (c.format == "json") {
            auto o = header("image");
            o["count"] = hit.size();
            o["classes"] = hit;
            emit(o);
        } else {
            std::cout << hit.size() << " classes in the image\n";
            for (const auto& h : hit) std::cout << "  " << h << "\n";
        }
        return 0;
    }
    auto img = rho_image(G);
    if (c.format == "json") {
        auto o = header("image");
        o["count"] = img.entries.size();
        o["uniform"] = img.uniform;
        Json cells = Json::array();
        for (const auto& cell : img.cells)
            cells.push_back({{"kind", cell.arc ? "arc" : "point"}, {"at", cell.at.str()}, {"class", signature_str(cell.signature)}});
        o["cells"] = cells;
        Json es = Json::array();
        for (const auto& e : img.entries) es.push_back({{"class", signature_str(e.signature)}, {"codim", class_codim(e.signature).value}});
        o["classes"] = es;
        emit(o);
    } else {
        std::cout << img.entries.size() << " classes in the image\n";
        for (const auto& e : img.entries) {
            const auto& cell = img.cells[e.cells.front()];
            std::cout << "  " << signature_str(e.signature) << " codim " << class_codim(e.signature).value << " "
                      << (cell.arc ? "arc around " : "direction ") << cell.at.str() << "\n";
        }
    }
    return 0;
}

int cmd_safe(const Config& c) {
    auto M = need_model(c.input);
    auto sigs = rho_image(M.geometry).signatures();
    auto comps = safe_components(sigs);
    if (c.format == "json") {
        auto o = header("safe");
        Json a = Json::array();
        for (const auto& comp : comps) {
            Json m = Json::array();
            for (auto i : comp) m.push_back(signature_str(sigs[i]));
            a.push_back(m);
        }
        o["components"] = a;
        emit(o);
    } else {
        std::cout << comps.size() << " comparability component" << (comps.size() == 1 ? "" : "s") << "\n";
        for (const auto& comp : comps) {
            std::vector<std::string> m;
            for (auto i : comp) m.push_back(signature_str(sigs[i]));
            std::cout << "  " << join(m) << "\n";
        }
    }
    return 0;
}

int cmd_closure(const Config& c) {
    auto M = need_model(c.input);
    auto rep = closure_check(M.geometry);
    if (c.format == "json") {
        auto o = header("closure");
        o["ok"] = rep.ok;
        Json rows = Json::array();
        for (const auto& r : rep.rows) {
            Json x = {{"class", signature_str(r.signature)}, {"ff", r.ff}};
            if (r.ff0_applies) x["ff0"] = r.ff0;
            if (!r.detail.empty()) x["detail"] = r.detail;
            rows.push_back(x);
        }
        o["rows"] = rows;
        if (!rep.ok) o["first_violation"] = rep.first_violation;
        emit(o);
    } else {
        for (const auto& r : rep.rows)
            std::cout << "  " << signature_str(r.signature) << " closure " << (r.ff ? "ok" : "FAILS")
                      << (r.ff0_applies ? (r.ff0 ? ", closed" : ", NOT closed") : "") << (r.detail.empty() ? "" : " (" + r.detail + ")")
                      << "\n";
        std::cout << (rep.ok ? "closure formula holds\n" : "violation: " + rep.first_violation + "\n");
    }
    return 0;
}

Json end_json(const LineEndMap& e) {
    return {{"line_class", signature_str(e.line_class)}, {"pushed", signature_str(e.pushed)},
            {"rho", signature_str(e.rho_of_end)}, {"commutes", e.commutes}};
}

int cmd_restrict(const Config& c) {
    auto M = need_model(c.input);
    const auto& G = M.geometry;
    Line L{parse_exact_vec(c.base), parse_exact_vec(c.direction)};
    auto R = restrict_to_line(G, L, c.window > 0 ? c.window : 3);
    auto E = line_end_incomparability(G, L);
    if (c.format == "json") {
        auto o = header("restrict");
        o["window"] = R.window;
        Json cr = Json::array(), pa = Json::array();
        for (auto i : R.crossing) cr.push_back(M.family.names[i]);
        for (std::size_t t = 0; t < R.parallel.size(); ++t)
            pa.push_back({{"chain", M.family.names[R.parallel[t]]}, {"cut", R.parallel_cuts[t]}});
        o["crossing"] = cr;
        o["parallel"] = pa;
        Json ws = Json::array();
        for (const auto& w : R.walls) {
            Json src = Json::array();
            for (const auto& s : w.sources)
                src.push_back({{"chain", M.family.names[s.family]}, {"n", s.n}, {"plain_side", s.positive ? "+" : "-"}});
            ws.push_back({{"t", w.threshold.str()}, {"sources", src}});
        }
        o["walls"] = ws;
        o["collapsed"] = R.collapsed;
        o["plus_end"] = end_json(R.plus_end);
        o["minus_end"] = end_json(R.minus_end);
        o["commutes"] = R.commutes;
        o["ends_incomparable"] = E.incomparable;
        emit(o);
    } else {
        std::vector<std::string> cr, pa;
        for (auto i : R.crossing) cr.push_back(M.family.names[i]);
        for (std::size_t t = 0; t < R.parallel.size(); ++t)
            pa.push_back(M.family.names[R.parallel[t]] + " at cut(" + std::to_string(R.parallel_cuts[t]) + ")");
        std::cout << "crossing: " << (cr.empty() ? "none" : join(cr)) << "\nparallel: " << (pa.empty() ? "none" : join(pa, ", "))
                  << "\nwalls on the line (window " << R.window << "): " << R.walls.size() << ", merged " << R.collapsed << "\n";
        for (const auto* e : {&R.plus_end, &R.minus_end})
            std::cout << (e == &R.plus_end ? "+end: " : "-end: ") << signature_str(e->line_class) << " -> "
                      << signature_str(e->pushed) << ", rho " << signature_str(e->rho_of_end) << (e->commutes ? " (commutes)" : " (DIFFERS)")
                      << "\n";
        std::cout << "ends incomparable: " << yes(E.incomparable) << "\n";
    }
    return 0;
}

// ---- shadows

ChainUltrafilter target_point(const Config& c, const Model& M) {
    if (!c.ultrafilter.empty()) return parse_chain_ultrafilter(M.family, c.ultrafilter);
    if (c.cuts.empty()) throw Error(Errc::MalformedInput, "shadows needs --cuts or --ultrafilter");
    auto cuts = parse_cuts(c.cuts);
    if (cuts.size() != M.family.chains()) throw Error(Errc::ChainCountMismatch, "expected " + std::to_string(M.family.chains()) + " cuts");
    return ChainUltrafilter::from_cuts(cuts);
}

Json ranges_json(const ChainFamilyPocSet& F, const std::vector<ChainRange>& d) {
    Json a = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i)
        a.push_back({{"chain", F.names[i]}, {"plain_max", d[i].plain_max}, {"star_min", d[i].star_min}});
    return a;
}

int cmd_shadows(const Config& c) {
    auto M = need_model(c.input);
    auto u = target_point(c, M);
    auto r = shadow_report(M.geometry, u, c.window > 0 ? c.window : 8);
    const auto& F = M.family;
    if (c.format == "svg") {
        std::cout << shadow_svg(M.geometry, r);
        return 0;
    }
    if (c.format == "json") {
        auto o = header("shadows");
        o["pi"] = cuts_json(r.pi);
        o["consistent"] = r.consistent;
        o["distance"] = r.dist;
        o["window"] = r.window;
        o["min_plus"] = hs_names(F, r.mins.plus);
        o["min_minus"] = hs_names(F, r.mins.minus);
        o["min_neutral"] = hs_names(F, r.mins.neutral);
        o["shadow_size"] = r.shadow.size();
        Json sh = Json::array();
        for (const auto& s : r.shadow) sh.push_back(cuts_json(s));
        o["shadow"] = sh;
        o["dual_shadow"] = ranges_json(F, r.dual_shadow);
        o["min_plus_in_dual"] = r.plus_in_dual;
        o["dual_in_pi"] = r.dual_in_pi;
        if (!r.consistent) {
            o["three_down"] = r.three_down;
            o["min_minus_inconsistent"] = r.minus_inconsistent;
        }
        emit(o);
        return 0;
    }
    std::cout << "pi: " << cuts_str(r.pi) << (r.consistent ? " consistent" : " inconsistent") << "\ndistance to Pi0: " << r.dist
              << " (window " << r.window << ")\nmin+: " << join(hs_names(F, r.mins.plus)) << "\nmin-: " << join(hs_names(F, r.mins.minus))
              << "\n";
    if (!r.mins.neutral.empty()) std::cout << "min0: " << join(hs_names(F, r.mins.neutral)) << "\n";
    std::cout << "shadow: " << r.shadow.size() << " points\n";
    if (r.shadow.size() <= 12)
        for (const auto& s : r.shadow) std::cout << "  " << cuts_str(s) << "\n";
    std::cout << "dual shadow:";
    for (std::size_t i = 0; i < r.dual_shadow.size(); ++i)
        std::cout << " " << F.names[i] << "[plain<=" << r.dual_shadow[i].plain_max << ", star>=" << r.dual_shadow[i].star_min << "]";
    std::cout << "\nmin+ inside dual shadow: " << yes(r.plus_in_dual) << "\ndual shadow inside pi: " << yes(r.dual_in_pi) << "\n";
    if (!r.consistent)
        std::cout << "at least three ways down: " << yes(r.three_down) << "\nmin- inconsistent: " << yes(r.minus_inconsistent) << "\n";
    return 0;
}

Json escape_json(const ChainFamilyPocSet& F, const EscapeReport& e) {
    Json o;
    o["target"] = signature_str(e.target);
    o["in_image"] = e.in_image;
    o["success"] = e.success;
    if (!e.success) {
        o["failure_step"] = e.failure_step;
        o["reason"] = e.reason;
    }
    o["start"] = cuts_json(e.start);
    o["launch_offset"] = e.launch_offset;
    o["window"] = e.window;
    Json steps = Json::array();
    for (std::size_t i = 0; i < e.ray.size(); ++i) {
        const auto& s = e.ray[i];
        Json x = {{"cuts", cuts_json(s.cuts)}, {"distance", s.dist}};
        if (i) {
            x["move"] = halfspace_str(F, s.move);
            x["move_in_min_plus"] = s.move_in_min_plus;
            x["dual_shrinks"] = s.dual_shrinks;
            x["shadow_grows"] = s.shadow_grows;
        }
        steps.push_back(x);
    }
    o["ray"] = steps;
    return o;
}

void escape_text(const ChainFamilyPocSet& F, const EscapeReport& e) {
    std::cout << "target: " << signature_str(e.target) << (e.in_image ? " (in image)" : " (not in image)") << "\nescaping ray: " << yes(e.success);
    if (!e.success) std::cout << " (fails at step " << e.failure_step << ": " << e.reason << ")";
    std::cout << "\n";
    if (e.ray.empty()) return;
    std::cout << "launch: " << cuts_str(e.ray[0].cuts) << " after " << e.launch_offset << " flow moves, window " << e.window << "\n";
    for (std::size_t i = 1; i < e.ray.size(); ++i) {
        const auto& s = e.ray[i];
        std::cout << "  " << i << ": " << cuts_str(s.cuts) << " dist " << s.dist << " flip " << halfspace_str(F, s.move)
                  << (s.move_in_min_plus ? "" : " [move not in min+]") << (s.dual_shrinks ? "" : " [dual not shrinking]")
                  << (s.shadow_grows ? "" : " [shadow not growing]") << "\n";
    }
}

int cmd_escape(const Config& c) {
    auto M = need_model(c.input);
    auto s = parse_signature(c.signature);
    if (s.size() != M.family.chains()) throw Error(Errc::ChainCountMismatch, "signature has " + std::to_string(s.size()) + " ends");
    auto e = escaping_ray(M.geometry, s, c.length, c.window > 0 ? c.window : 8);
    if (c.format == "json") {
        auto o = header("escape");
        o.update(escape_json(M.family, e));
        emit(o);
    } else {
        escape_text(M.family, e);
    }
    return 0;
}

// sampled lines through rational points, directions from a seeded generator
std::pair<std::size_t, std::size_t> sample_lines(const Geometry& G, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> c(-9, 9), den(2, 13);
    std::size_t ok = 0, tried = 0;
    while (tried < n) {
        ExactVec b, d;
        bool zero = true;
        for (std::size_t j = 0; j < G.dim(); ++j) {
            d.push_back(Exact(c(rng)));
            b.push_back(Exact(Rational(c(rng), den(rng))));
            zero = zero && d.back().is_zero();
        }
        if (zero) continue;
        try {
            ok += line_end_incomparability(G, {b, d}).incomparable;
            ++tried;
        } catch (const Error& e) {
            if (e.code() != Errc::LineInsideWall) throw;
        }
    }
    return {ok, tried};
}

int cmd_report(const Config& c) {
    auto M = need_model(c.input);
    const auto& G = M.geometry;
    std::int64_t W = c.window > 0 ? c.window : 10;
    std::vector<std::int64_t> windows;
    if ((W + 1) / 2 < W) windows.push_back((W + 1) / 2);
    windows.push_back(W);
    auto R = surjectivity_report(G, windows, c.length);
    std::pair<std::size_t, std::size_t> lines{0, 0};
    if (c.sample) lines = sample_lines(G, c.sample, c.seed);
    if (c.format == "json") {
        auto o = header("report");
        o["chains"] = G.chains();
        o["dimension"] = G.dim();
        o["uniform"] = R.uniform;
        o["warnings"] = R.warnings;
        Json cls = Json::array();
        for (const auto& r : R.classes) cls.push_back({{"class", signature_str(r.signature)}, {"codim", r.codim}, {"in_image", r.in_image}});
        o["classes"] = cls;
        o["nonprincipal"] = R.nonprincipal;
        o["nonprincipal_in_image"] = R.nonprincipal_in_image;
        Json sw = Json::array();
        for (const auto& w : R.sweep) sw.push_back({{"W", w.W}, {"max_delta", w.max_delta}, {"argmax", cuts_json(w.argmax)}});
        o["max_delta"] = sw;
        o["delta_grows"] = R.delta_grows;
        o["escaping_ray"] = R.escape.has_value();
        if (R.escape) o["escape"] = escape_json(M.family, *R.escape);
        o["contract_ok"] = R.contract_ok;
        if (c.sample) o["line_ends"] = {{"seed", c.seed}, {"sampled", lines.second}, {"incomparable", lines.first}};
        emit(o);
        return 0;
    }
    std::cout << "model: " << G.chains() << " chains in dimension " << G.dim() << (R.uniform ? ", uniform" : ", not uniform") << "\n";
    for (const auto& w : R.warnings) std::cout << "warning: " << w << "\n";
    std::cout << "non-principal classes in image: " << R.nonprincipal_in_image << " of " << R.nonprincipal << "\n";
    std::vector<std::string> missed;
    for (const auto& r : R.classes)
        if (r.codim > 0 && !r.in_image) missed.push_back(signature_str(r.signature));
    if (!missed.empty()) std::cout << "missed: " << join(missed) << "\n";
    std::cout << "max delta:";
    for (const auto& w : R.sweep) std::cout << " W=" << w.W << " -> " << w.max_delta;
    std::cout << "\ndelta grows: " << yes(R.delta_grows) << "\nescaping ray: " << yes(R.escape.has_value());
    if (R.escape) std::cout << " (" << signature_str(R.escape->target) << ", length " << R.escape->ray.size() - 1 << ")";
    std::cout << "\n";
    if (c.sample) std::cout << "line ends incomparable: " << lines.first << " of " << lines.second << " (seed " << c.seed << ")\n";
    std::cout << "criterion consistent: " << yes(R.contract_ok) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"roller: poc-sets, cubings, Roller boundaries and shadows"};
    app.require_subcommand(1);
    Config cfg;

    auto add = [&](const char* name, const char* help, std::vector<std::string> formats) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("input", cfg.input, "fixture or JSON file (.json optional)")->required();
        s->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
        return s;
    };
    const std::vector<std::string> TJ = {"text", "json"};

    auto* validate = add("validate", "check a poc-set or chain family", TJ);
    auto* ultra = add("ultrafilters", "enumerate ultrafilters, or test one set", TJ);
    ultra->add_option("--ultrafilter", cfg.ultrafilter, "set literal such as {h1,h2*}");
    auto* cubing = add("cubing", "dual cube complex", {"text", "json", "dot"});
    auto* dual = add("dual", "duality round trip with the explicit bijection", TJ);
    auto* boundary = add("boundary", "Roller boundary poset of a chain family", {"text", "json", "dot"});
    auto* rho = add("rho", "boundary class of a direction", TJ);
    rho->add_option("--direction", cfg.direction, "exact vector such as 1,0 or 1/2,√3/2")->required();
    auto* image = add("image", "image of the boundary map", TJ);
    image->add_option("--signature", cfg.signature, "test one class such as (+,0,-)");
    auto* safe = add("safe", "comparability components of the image", TJ);
    auto* closure = add("closure", "closure formula per fiber", TJ);
    auto* restrict = add("restrict", "restriction to a line", TJ);
    restrict->add_option("--base", cfg.base, "point on the line")->required();
    restrict->add_option("--direction", cfg.direction, "line direction")->required();
    restrict->add_option("--window", cfg.window, "wall indices |n| <= W")->check(CLI::PositiveNumber);
    auto* shadows = add("shadows", "distance to Pi0, min sets, shadow, dual shadow", {"text", "json", "svg"});
    shadows->add_option("--cuts", cfg.cuts, "principal point as cuts, e.g. 5,5,5");
    shadows->add_option("--ultrafilter", cfg.ultrafilter, "principal point as a chain literal");
    shadows->add_option("--window", cfg.window, "initial Pi0 window")->check(CLI::PositiveNumber);
    auto* escape = add("escape", "escaping flow ray toward a class", TJ);
    escape->add_option("--signature", cfg.signature, "target class such as (+,+,+)")->required();
    escape->add_option("--length", cfg.length, "ray length")->check(CLI::PositiveNumber);
    escape->add_option("--window", cfg.window, "initial Pi0 window")->check(CLI::PositiveNumber);
    auto* report = add("report", "surjectivity and co-compactness report", TJ);
    report->add_option("--window", cfg.window, "largest window of the max-delta sweep")->check(CLI::PositiveNumber);
    report->add_option("--length", cfg.length, "escaping ray length")->check(CLI::PositiveNumber);
    report->add_option("--sample", cfg.sample, "also test line-end incomparability on this many random lines");
    report->add_option("--seed", cfg.seed, "seed for sampled lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(cfg);
        if (*ultra) return cmd_ultrafilters(cfg);
        if (*cubing) return cmd_cubing(cfg);
        if (*dual) return cmd_dual(cfg);
        if (*boundary) return cmd_boundary(cfg);
        if (*rho) return cmd_rho(cfg);
        if (*image) return cmd_image(cfg);
        if (*safe) return cmd_safe(cfg);
        if (*closure) return cmd_closure(cfg);
        if (*restrict) return cmd_restrict(cfg);
        if (*shadows) return cmd_shadows(cfg);
        if (*escape) return cmd_escape(cfg);
        if (*report) return cmd_report(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
