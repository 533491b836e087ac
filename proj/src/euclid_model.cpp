#include "roller/euclid_model.hpp"

#include <algorithm>
#include <numeric>

#include "roller/error.hpp"

namespace roller {

namespace {

std::size_t rank_of(std::vector<ExactVec> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            Exact f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

bool parallel_vectors(const ExactVec& u, const ExactVec& v) { return rank_of({u, v}) < 2; }

Exact cross2(const ExactVec& u, const ExactVec& v) { return u[0] * v[1] - u[1] * v[0]; }

// 0 for angles in [0, pi), 1 for [pi, 2pi)
int half_of(const ExactVec& v) { return (v[1].sign() > 0 || (v[1].is_zero() && v[0].sign() > 0)) ? 0 : 1; }

bool angle_less(const Direction& a, const Direction& b) {
    int ha = half_of(a.v), hb = half_of(b.v);
    if (ha != hb) return ha < hb;
    return cross2(a.v, b.v).sign() > 0;
}

}  // namespace

bool is_uniform(const Geometry& G) {
    std::vector<ExactVec> rows;
    for (const auto& f : G.families) rows.push_back(f.normal);
    return G.dim() > 0 && rank_of(rows) == G.dim();
}

ModelCheck validate_model(const Model& M) {
    const Geometry& G = M.geometry;
    if (G.families.size() != M.family.chains())
        throw Error(Errc::MalformedInput, "geometry has " + std::to_string(G.families.size()) + " families for " +
                                              std::to_string(M.family.chains()) + " chains");
    for (std::size_t i = 0; i < G.families.size(); ++i) {
        const auto& f = G.families[i];
        if (f.normal.size() != G.dim() || f.normal.empty())
            throw Error(Errc::MalformedInput, "family " + std::to_string(i + 1) + " normal has wrong dimension");
        if (std::all_of(f.normal.begin(), f.normal.end(), [](const Exact& x) { return x.is_zero(); }))
            throw Error(Errc::MalformedInput, "family " + std::to_string(i + 1) + " has zero normal");
        if (f.spacing.sign() <= 0)
            throw Error(Errc::MalformedInput, "family " + std::to_string(i + 1) + " spacing must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (parallel_vectors(f.normal, G.families[j].normal))
                throw Error(Errc::MalformedInput, "families " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                                      " are parallel; they would nest across chains");
    }
    ModelCheck c;
    c.uniform = is_uniform(G);
    if (!c.uniform) c.warnings.push_back("NonUniformModel: normals do not span, some directions meet no family");
    return c;
}

Direction::Direction(ExactVec x) : v(std::move(x)) {
    auto it = std::find_if(v.begin(), v.end(), [](const Exact& e) { return !e.is_zero(); });
    if (it == v.end()) throw Error(Errc::ZeroDirection, "direction is zero");
    Exact f = it->abs().inverse();
    for (auto& e : v) e *= f;
}

Direction Direction::operator-() const {
    ExactVec w;
    for (const auto& e : v) w.push_back(-e);
    return Direction(w);
}

RhoResult classify_direction(const Geometry& G, const Direction& xi) {
    if (xi.v.size() != G.dim()) throw Error(Errc::MalformedInput, "direction dimension mismatch");
    RhoResult r;
    for (const auto& f : G.families) {
        int s = dot(f.normal, xi.v).sign();
        r.roles.push_back(s > 0 ? ChainRole::AllPlus : (s < 0 ? ChainRole::AllMinus : ChainRole::Parallel));
        r.signature.ends.push_back(s > 0 ? End::Plus : (s < 0 ? End::Minus : End::Fin));
    }
    return r;
}

Signature rho(const Geometry& G, const Direction& xi) { return classify_direction(G, xi).signature; }

bool in_image(const Geometry& G, const Signature& s) {
    if (s.size() != G.chains()) throw Error(Errc::ChainCountMismatch, "signature length");
    if (s == Signature::principal(s.size())) return !is_uniform(G);
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const ExactVec& n = G.families[i].normal;
        ExactVec neg;
        for (const auto& x : n) neg.push_back(-x);
        switch (s.ends[i]) {
        case End::Plus: cs.push_back({neg, Exact(-1)}); break;
        case End::Minus: cs.push_back({n, Exact(-1)}); break;
        case End::Fin:
            cs.push_back({n, Exact(0)});
            cs.push_back({neg, Exact(0)});
            break;
        }
    }
    return feasible(cs, G.dim());
}

std::vector<Signature> RhoImage::signatures() const {
    std::vector<Signature> out;
    for (const auto& e : entries) out.push_back(e.signature);
    return out;
}

RhoImage rho_image(const Geometry& G) {
    if (G.dim() != 2) throw Error(Errc::Unsupported, "rho_image needs a planar model");
    std::vector<Direction> crit;
    for (const auto& f : G.families) {
        for (const Direction& d : {Direction({-f.normal[1], f.normal[0]}), Direction({f.normal[1], -f.normal[0]})})
            if (std::find(crit.begin(), crit.end(), d) == crit.end()) crit.push_back(d);
    }
    std::sort(crit.begin(), crit.end(), angle_less);

    RhoImage img;
    img.uniform = is_uniform(G);
    const std::size_t m = crit.size();
    for (std::size_t j = 0; j < m; ++j) {
        CircleCell p;
        p.at = crit[j];
        p.signature = rho(G, p.at);
        img.cells.push_back(p);

        const Direction& u = crit[j];
        const Direction& w = crit[(j + 1) % m];
        CircleCell a;
        a.arc = true;
        a.from = u;
        a.to = w;
        if (cross2(u.v, w.v).sign() > 0) a.at = Direction({u.v[0] + w.v[0], u.v[1] + w.v[1]});
        else a.at = Direction({-u.v[1], u.v[0]});  // half circle: turn a quarter
        a.signature = rho(G, a.at);
        img.cells.push_back(a);
    }
    for (std::size_t c = 0; c < img.cells.size(); ++c) {
        auto it = std::find_if(img.entries.begin(), img.entries.end(),
                               [&](const ImageEntry& e) { return e.signature == img.cells[c].signature; });
        if (it == img.entries.end()) img.entries.push_back({img.cells[c].signature, {c}});
        else it->cells.push_back(c);
    }
    return img;
}

std::vector<std::vector<std::size_t>> safe_components(const std::vector<Signature>& image) {
    const std::size_t n = image.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (class_leq(image[i], image[j]) || class_leq(image[j], image[i])) {
                std::size_t a = find(i), b = find(j);
                if (a != b) p[std::max(a, b)] = std::min(a, b);
            }
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> slot(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (slot[r] == SIZE_MAX) {
            slot[r] = comps.size();
            comps.emplace_back();
        }
        comps[slot[r]].push_back(i);
    }
    return comps;
}

ClosureReport closure_check(const Geometry& G) {
    const RhoImage img = rho_image(G);
    const std::size_t nc = img.cells.size();
    ClosureReport rep;
    const bool uniform = is_uniform(G);
    for (const auto& e : img.entries) {
        std::vector<char> closure(nc, 0), below(nc, 0);
        for (std::size_t c : e.cells) {
            closure[c] = 1;
            if (img.cells[c].arc) {
                closure[(c + nc - 1) % nc] = 1;  // cells alternate point, arc, point...
                closure[(c + 1) % nc] = 1;
            }
        }
        for (std::size_t c = 0; c < nc; ++c)
            if (class_leq(img.cells[c].signature, e.signature)) below[c] = 1;
        ClosureRow row;
        row.signature = e.signature;
        for (std::size_t c = 0; c < nc; ++c) {
            if (closure[c] == below[c]) continue;
            row.ff = false;
            const auto& cell = img.cells[c];
            row.detail = (closure[c] ? "closure adds " : "smaller class not in closure: ") +
                         std::string(cell.arc ? "arc at " : "point ") + cell.at.str() + " " +
                         signature_str(cell.signature);
            break;
        }
        // codim-1 fibers are points only when the normals span
        row.ff0_applies = uniform && class_codim(e.signature).value == 1;
        if (row.ff0_applies) {
            for (std::size_t c = 0; c < nc; ++c) {
                bool in_fiber = std::find(e.cells.begin(), e.cells.end(), c) != e.cells.end();
                if (closure[c] && !in_fiber) row.ff0 = false;
            }
        }
        if ((!row.ff || !row.ff0) && rep.ok) {
            rep.ok = false;
            rep.first_violation = signature_str(e.signature) + ": " + (row.ff ? "fiber not closed" : row.detail);
        }
        rep.rows.push_back(row);
    }
    return rep;
}

ChainUltrafilter pullback(const Geometry& G, const Line& L, const CutState& line_state, const Exact& t0) {
    ChainUltrafilter u;
    ExactVec p = L.base;
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += t0 * L.dir[j];
    for (std::size_t i = 0; i < G.chains(); ++i) {
        const auto& f = G.families[i];
        int s = dot(f.normal, L.dir).sign();
        if (s != 0 && !line_state.is_cut()) {
            // the end lies eventually inside every h_i(n) iff it runs up the normal
            bool up = (line_state.kind == CutState::Kind::Plus) == (s > 0);
            u.chains.push_back(up ? CutState::plus() : CutState::minus());
            continue;
        }
        const ExactVec& q = s == 0 ? L.base : p;
        Exact x = (dot(f.normal, q) - Exact(f.offset)) / Exact(f.spacing);
        if (x.is_integer()) throw Error(Errc::LineInsideWall, "point lies on wall " + std::to_string(i + 1));
        u.chains.push_back(CutState::at(x.ceil()));
    }
    return u;
}

LineRestriction restrict_to_line(const Geometry& G, const Line& L, std::int64_t window) {
    if (L.base.size() != G.dim() || L.dir.size() != G.dim())
        throw Error(Errc::MalformedInput, "line dimension mismatch");
    Direction d(L.dir);  // rejects zero
    LineRestriction R;
    R.window = window;
    for (std::size_t i = 0; i < G.chains(); ++i) {
        const auto& f = G.families[i];
        Exact nd = dot(f.normal, L.dir), nb = dot(f.normal, L.base);
        if (nd.is_zero()) {
            Exact x = (nb - Exact(f.offset)) / Exact(f.spacing);
            if (x.is_integer())
                throw Error(Errc::LineInsideWall, "family " + std::to_string(i + 1) + " wall " + x.str());
            R.parallel.push_back(i);
            R.parallel_cuts.push_back(x.ceil());
            continue;
        }
        R.crossing.push_back(i);
        for (std::int64_t n = -window; n <= window; ++n) {
            Exact tau = (Exact(f.offset) + Exact(f.spacing * Rational(n)) - nb) / nd;
            auto it = std::find_if(R.walls.begin(), R.walls.end(), [&](const LineWall& w) { return w.threshold == tau; });
            LineWall::Source src{i, n, nd.sign() > 0};
            if (it == R.walls.end()) R.walls.push_back({tau, {src}});
            else it->sources.push_back(src);
        }
    }
    std::sort(R.walls.begin(), R.walls.end(), [](const LineWall& a, const LineWall& b) { return a.threshold < b.threshold; });
    R.collapsed = static_cast<std::size_t>(
        std::count_if(R.walls.begin(), R.walls.end(), [](const LineWall& w) { return w.sources.size() > 1; }));

    const std::size_t lk = R.crossing.empty() ? 0 : 1;
    auto end_map = [&](bool plus_end) {
        LineEndMap m;
        m.line_class = Signature::principal(lk);
        if (lk) m.line_class.ends[0] = plus_end ? End::Plus : End::Minus;
        CutState st = lk ? (plus_end ? CutState::plus() : CutState::minus()) : CutState::at(0);
        // with no crossing family the line has no ends in its own system; use a far point
        Exact t0 = lk ? Exact(0) : Exact(plus_end ? 1 : -1);
        m.pushed = cf_class(pullback(G, L, st, t0));
        m.rho_of_end = rho(G, plus_end ? d : -d);
        m.commutes = m.pushed == m.rho_of_end;
        return m;
    };
    R.plus_end = end_map(true);
    R.minus_end = end_map(false);
    R.commutes = R.plus_end.commutes && R.minus_end.commutes;
    return R;
}

EndCheck line_end_incomparability(const Geometry& G, const Line& L) {
    Direction d(L.dir);
    EndCheck c;
    c.uniform = is_uniform(G);
    c.plus = rho(G, d);
    c.minus = rho(G, -d);
    c.incomparable = !class_leq(c.plus, c.minus) && !class_leq(c.minus, c.plus);
    return c;
}

}  // namespace roller

namespace roller {

std::optional<Direction> realizing_direction_2d(const Geometry& G, const Signature& s) {
    for (const auto& c : rho_image(G).cells)
        if (c.signature == s) return c.at;
    return std::nullopt;
}

}  // namespace roller
