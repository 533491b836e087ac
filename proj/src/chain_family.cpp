#include "roller/chain_family.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "roller/error.hpp"

namespace roller {

ChainFamilyPocSet ChainFamilyPocSet::anonymous(std::size_t k) {
    ChainFamilyPocSet F;
    for (std::size_t i = 0; i < k; ++i) F.names.push_back("x" + std::to_string(i + 1));
    return F;
}

bool chain_leq(const ChainHalfspace& a, const ChainHalfspace& b) {
    if (a.chain != b.chain || a.star != b.star) return false;
    return a.star ? a.pos <= b.pos : a.pos >= b.pos;
}

bool CutState::contains(std::int64_t n, bool st) const {
    switch (kind) {
    case Kind::Cut: return st ? n >= cut : n < cut;
    case Kind::Plus: return !st;
    case Kind::Minus: return st;
    }
    return false;
}

bool ChainUltrafilter::principal() const {
    return std::all_of(chains.begin(), chains.end(), [](const CutState& c) { return c.is_cut(); });
}

std::vector<std::int64_t> ChainUltrafilter::cuts() const {
    std::vector<std::int64_t> out;
    for (const auto& c : chains) {
        if (!c.is_cut()) throw Error(Errc::NotPrincipal, "chain " + std::to_string(out.size() + 1) + " is an end");
        out.push_back(c.cut);
    }
    return out;
}

ChainUltrafilter ChainUltrafilter::from_cuts(const std::vector<std::int64_t>& c) {
    ChainUltrafilter u;
    for (auto x : c) u.chains.push_back(CutState::at(x));
    return u;
}

// --- literals ---

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::int64_t parse_i64(const std::string& s) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw Error(Errc::MalformedInput, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw Error(Errc::MalformedInput, "bad integer '" + s + "'");
    }
}

}  // namespace

Signature parse_signature(std::string_view text) {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw Error(Errc::MalformedInput, "signature must look like (+,0,-)");
    Signature out;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        std::string low;
        for (char c : tok) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (low == "+" || low == "plus") out.ends.push_back(End::Plus);
        else if (low == "-" || low == "minus") out.ends.push_back(End::Minus);
        else if (low == "0" || low == "fin") out.ends.push_back(End::Fin);
        else throw Error(Errc::MalformedInput, "bad signature entry '" + tok + "'");
    }
    if (out.ends.empty()) throw Error(Errc::MalformedInput, "empty signature");
    return out;
}

std::string signature_str(const Signature& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.ends.size(); ++i) {
        if (i) out += ",";
        out += s.ends[i] == End::Plus ? "+" : (s.ends[i] == End::Minus ? "-" : "0");
    }
    return out + ")";
}

std::string cut_state_str(const CutState& c) {
    switch (c.kind) {
    case CutState::Kind::Plus: return "+inf";
    case CutState::Kind::Minus: return "-inf";
    default: return "cut(" + std::to_string(c.cut) + ")";
    }
}

ChainUltrafilter parse_chain_ultrafilter(const ChainFamilyPocSet& F, std::string_view text) {
    ChainUltrafilter u;
    u.chains.assign(F.chains(), CutState::at(0));
    std::vector<char> seen(F.chains(), 0);
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (ss >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw Error(Errc::MalformedInput, "expected name:state, got '" + tok + "'");
        std::string name = tok.substr(0, colon), st = tok.substr(colon + 1);
        auto it = std::find(F.names.begin(), F.names.end(), name);
        if (it == F.names.end()) throw Error(Errc::MalformedInput, "unknown chain '" + name + "'");
        auto i = static_cast<std::size_t>(it - F.names.begin());
        if (seen[i]) throw Error(Errc::MalformedInput, "chain '" + name + "' given twice");
        seen[i] = 1;
        if (st == "+inf") u.chains[i] = CutState::plus();
        else if (st == "-inf") u.chains[i] = CutState::minus();
        else if (st.size() > 5 && st.rfind("cut(", 0) == 0 && st.back() == ')')
            u.chains[i] = CutState::at(parse_i64(st.substr(4, st.size() - 5)));
        else throw Error(Errc::MalformedInput, "bad chain state '" + st + "'");
    }
    for (std::size_t i = 0; i < F.chains(); ++i)
        if (!seen[i]) throw Error(Errc::MalformedInput, "chain '" + F.names[i] + "' missing");
    return u;
}

std::string chain_ultrafilter_str(const ChainFamilyPocSet& F, const ChainUltrafilter& u) {
    std::string out;
    for (std::size_t i = 0; i < u.chains.size(); ++i) {
        if (i) out += " ";
        out += (i < F.chains() ? F.names[i] : "x" + std::to_string(i + 1)) + ":" + cut_state_str(u.chains[i]);
    }
    return out;
}

std::string halfspace_str(const ChainFamilyPocSet& F, const ChainHalfspace& h) {
    std::string nm = h.chain < F.chains() ? F.names[h.chain] : "x" + std::to_string(h.chain + 1);
    return nm + "(" + std::to_string(h.pos) + ")" + (h.star ? "*" : "");
}

// --- operations ---

namespace {

void same_k(std::size_t a, std::size_t b) {
    if (a != b) throw Error(Errc::ChainCountMismatch, std::to_string(a) + " vs " + std::to_string(b));
}

// position on the extended line: -inf < cut(c) < +inf
std::pair<int, std::int64_t> rank(const CutState& c) {
    if (c.kind == CutState::Kind::Minus) return {0, 0};
    if (c.kind == CutState::Kind::Plus) return {2, 0};
    return {1, c.cut};
}

}  // namespace

Signature cf_class(const ChainUltrafilter& u) {
    Signature s;
    for (const auto& c : u.chains)
        s.ends.push_back(c.kind == CutState::Kind::Plus ? End::Plus
                                                        : (c.kind == CutState::Kind::Minus ? End::Minus : End::Fin));
    return s;
}

Distance delta(const ChainUltrafilter& a, const ChainUltrafilter& b) {
    if (a.chains.size() != b.chains.size()) throw Error(Errc::BackendMismatch, "chain counts differ");
    Distance d;
    for (std::size_t i = 0; i < a.chains.size(); ++i) {
        const auto &x = a.chains[i], &y = b.chains[i];
        if (x.is_cut() && y.is_cut()) d.value += static_cast<std::uint64_t>(x.cut > y.cut ? x.cut - y.cut : y.cut - x.cut);
        else if (x.kind != y.kind) d.infinite = true;
    }
    if (d.infinite) d.value = 0;
    return d;
}

ChainUltrafilter median(const ChainUltrafilter& a, const ChainUltrafilter& b, const ChainUltrafilter& c) {
    if (a.chains.size() != b.chains.size() || b.chains.size() != c.chains.size())
        throw Error(Errc::BackendMismatch, "chain counts differ");
    ChainUltrafilter m;
    for (std::size_t i = 0; i < a.chains.size(); ++i) {
        std::array<CutState, 3> v{a.chains[i], b.chains[i], c.chains[i]};
        std::sort(v.begin(), v.end(), [](const CutState& x, const CutState& y) { return rank(x) < rank(y); });
        m.chains.push_back(v[1]);
    }
    return m;
}

ChainUltrafilter cf_truncate(const ChainUltrafilter& u, const ChainHalfspace& b) {
    if (b.chain >= u.chains.size() || !u.contains(b))
        throw Error(Errc::NotMember, "chain " + std::to_string(b.chain + 1) + " position " + std::to_string(b.pos));
    ChainUltrafilter r = u;
    r.chains[b.chain] = CutState::at(b.star ? b.pos + 1 : b.pos);
    return r;
}

std::vector<ChainHalfspace> chain_min_set(const ChainUltrafilter& u) {
    std::vector<ChainHalfspace> out;
    for (std::size_t i = 0; i < u.chains.size(); ++i) {
        const auto& c = u.chains[i];
        if (!c.is_cut()) continue;  // an end has no minimal element on its chain
        out.push_back({i, c.cut - 1, false});
        out.push_back({i, c.cut, true});
    }
    return out;
}

ChainUltrafilter chain_flip(const ChainUltrafilter& u, const ChainHalfspace& a) {
    auto M = chain_min_set(u);
    if (std::find(M.begin(), M.end(), a) == M.end())
        throw Error(Errc::NotMinimal, "chain " + std::to_string(a.chain + 1) + " position " + std::to_string(a.pos));
    ChainUltrafilter r = u;
    r.chains[a.chain] = CutState::at(a.star ? a.pos + 1 : a.pos);
    return r;
}

bool class_leq(const Signature& a, const Signature& b) {
    same_k(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.ends[i] != End::Fin && a.ends[i] != b.ends[i]) return false;
    return true;
}

Codim class_codim(const Signature& s) {
    Codim c;
    for (End e : s.ends)
        if (e != End::Fin) ++c.value;
    if (c.value > 0) {
        c.witness = s;
        // drop the last end: (+,-) -> (+,0)
        for (auto it = c.witness.ends.rbegin(); it != c.witness.ends.rend(); ++it) {
            if (*it != End::Fin) {
                *it = End::Fin;
                break;
            }
        }
    }
    return c;
}

Signature class_gcd(const Signature& a, const Signature& b) {
    same_k(a.size(), b.size());
    Signature g;
    for (std::size_t i = 0; i < a.size(); ++i) g.ends.push_back(a.ends[i] == b.ends[i] ? a.ends[i] : End::Fin);
    return g;
}

ChainUltrafilter project_to_class(const Signature& s, const ChainUltrafilter& u) {
    same_k(s.size(), u.chains.size());
    ChainUltrafilter r = u;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.ends[i] == End::Plus) r.chains[i] = CutState::plus();
        else if (s.ends[i] == End::Minus) r.chains[i] = CutState::minus();
    }
    return r;
}

ChainUltrafilter flow_step(const Signature& s, const ChainUltrafilter& u) {
    same_k(s.size(), u.chains.size());
    if (!u.principal()) throw Error(Errc::NotPrincipal, "flow needs a principal ultrafilter");
    ChainUltrafilter r = u;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.ends[i] == End::Plus) ++r.chains[i].cut;
        else if (s.ends[i] == End::Minus) --r.chains[i].cut;
    }
    return r;
}

std::vector<ChainUltrafilter> average_sequence(const std::vector<ChainUltrafilter>& seq, const ChainUltrafilter& sigma) {
    if (seq.empty()) throw Error(Errc::EmptySequence, "average of an empty sequence");
    std::vector<ChainUltrafilter> out{seq.front()};
    for (std::size_t n = 1; n < seq.size(); ++n) out.push_back(median(out.back(), seq[n], sigma));
    return out;
}

Signature signature_of(const Schedule& sch, std::size_t k) {
    Signature s = Signature::principal(k);
    for (const auto& m : sch.period) {
        if (m.chain >= k) throw Error(Errc::ChainCountMismatch, "move on chain " + std::to_string(m.chain + 1));
        s.ends[m.chain] = m.dir > 0 ? End::Plus : End::Minus;
    }
    return s;
}

namespace {

void apply(ChainUltrafilter& u, const Move& m) {
    if (m.chain >= u.chains.size()) throw Error(Errc::ChainCountMismatch, "move on chain " + std::to_string(m.chain + 1));
    u.chains[m.chain].cut += m.dir > 0 ? 1 : -1;
}

const Move& move_at(const Schedule& sch, std::size_t t) {
    if (t < sch.prefix.size()) return sch.prefix[t];
    return sch.period[(t - sch.prefix.size()) % sch.period.size()];
}

}  // namespace

std::vector<ChainUltrafilter> expand_schedule(const ChainUltrafilter& start, const Schedule& sch, std::size_t steps) {
    if (!start.principal()) throw Error(Errc::NotPrincipal, "schedule start must be principal");
    std::vector<ChainUltrafilter> out{start};
    ChainUltrafilter cur = start;
    std::size_t total = sch.period.empty() ? std::min(steps, sch.prefix.size()) : steps;
    for (std::size_t t = 0; t < total; ++t) {
        apply(cur, move_at(sch, t));
        out.push_back(cur);
    }
    return out;
}

ChainUltrafilter limit_of_geodesic(const ChainUltrafilter& start, const Schedule& sch) {
    if (!start.principal()) throw Error(Errc::NotPrincipal, "schedule start must be principal");
    const std::size_t k = start.chains.size();
    // a wall is flipped twice exactly when some chain reverses direction
    std::vector<int> last_dir(k, 0);
    std::vector<std::size_t> last_step(k, 0);
    ChainUltrafilter cur = start;
    const std::size_t horizon = sch.prefix.size() + 2 * sch.period.size();
    for (std::size_t t = 0; t < horizon; ++t) {
        const Move& m = move_at(sch, t);
        if (m.chain >= k) throw Error(Errc::ChainCountMismatch, "move on chain " + std::to_string(m.chain + 1));
        int d = m.dir > 0 ? 1 : -1;
        if (last_dir[m.chain] == -d) {
            std::int64_t wall = d > 0 ? cur.chains[m.chain].cut : cur.chains[m.chain].cut - 1;
            throw Error(Errc::NotGeodesic, "steps " + std::to_string(last_step[m.chain]) + " and " +
                                               std::to_string(t + 1) + " flip h_" + std::to_string(m.chain + 1) +
                                               "(" + std::to_string(wall) + ")");
        }
        last_dir[m.chain] = d;
        last_step[m.chain] = t + 1;
        apply(cur, m);
    }
    ChainUltrafilter lim = start;
    for (const auto& m : sch.prefix) apply(lim, m);
    return project_to_class(signature_of(sch, k), lim);
}

Schedule flow_schedule(const Signature& s) {
    Schedule sch;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.ends[i] == End::Plus) sch.period.push_back({i, 1});
        else if (s.ends[i] == End::Minus) sch.period.push_back({i, -1});
    }
    return sch;
}

std::vector<Signature> all_signatures(std::size_t k) {
    std::vector<Signature> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    for (std::size_t x = 0; x < total; ++x) {
        Signature s;
        std::size_t y = x;
        for (std::size_t i = 0; i < k; ++i) {
            s.ends.insert(s.ends.begin(), static_cast<End>(y % 3));
            y /= 3;
        }
        out.push_back(s);
    }
    std::stable_sort(out.begin(), out.end(), [](const Signature& a, const Signature& b) {
        return class_codim(a).value < class_codim(b).value;
    });
    return out;
}

RollerPoset roller_boundary(std::size_t k) {
    RollerPoset R;
    R.k = k;
    R.classes = all_signatures(k);
    return R;
}

std::vector<std::pair<std::size_t, std::size_t>> RollerPoset::hasse() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = classes.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !leq(i, j)) continue;
            bool cover = true;
            for (std::size_t m = 0; m < n && cover; ++m)
                if (m != i && m != j && leq(i, m) && leq(m, j)) cover = false;
            if (cover) out.emplace_back(i, j);
        }
    }
    return out;
}

ChainWindow make_window(std::size_t k, std::int64_t W) {
    if (W < 0) throw Error(Errc::MalformedInput, "negative window");
    const auto width = static_cast<std::size_t>(2 * W + 1);
    if (k * width > kMaxPairs) throw Error(Errc::Unsupported, "window poc-set exceeds 32 pairs");
    ChainWindow w;
    w.k = k;
    w.W = W;
    std::vector<std::pair<Element, Element>> order;
    for (std::size_t i = 0; i < k; ++i)
        for (std::int64_t n = -W; n < W; ++n)
            order.emplace_back(w.element({i, n + 1, false}), w.element({i, n, false}));
    w.pocset = FinitePocSet::from_relation(k * width, order);
    return w;
}

Element ChainWindow::element(const ChainHalfspace& h) const {
    if (h.chain >= k || h.pos < -W || h.pos > W) throw Error(Errc::MalformedInput, "halfspace outside window");
    auto p = h.chain * static_cast<std::size_t>(2 * W + 1) + static_cast<std::size_t>(h.pos + W);
    return static_cast<Element>(2 * p + (h.star ? 1 : 0));
}

ChainHalfspace ChainWindow::halfspace(Element e) const {
    const auto width = static_cast<std::size_t>(2 * W + 1);
    std::size_t p = e / 2;
    return {p / width, static_cast<std::int64_t>(p % width) - W, (e & 1u) != 0};
}

Ultrafilter ChainWindow::restrict(const ChainUltrafilter& u) const {
    if (u.chains.size() != k) throw Error(Errc::BackendMismatch, "chain counts differ");
    Ultrafilter r;
    r.pairs = static_cast<std::uint32_t>(pocset.pairs());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::int64_t n = -W; n <= W; ++n) {
            ChainHalfspace h{i, n, false};
            r.members[element(u.contains(h) ? h : h.flipped())] = true;
        }
    }
    r.members[pocset.zero_star()] = true;
    return r;
}

bool window_closure_contains(const Signature& cls, const ChainUltrafilter& target, std::int64_t W) {
    same_k(cls.size(), target.chains.size());
    auto pattern = [W](const CutState& c, std::size_t) {
        std::vector<char> p;
        for (std::int64_t n = -W; n <= W; ++n) p.push_back(c.contains(n, false) ? 1 : 0);
        return p;
    };
    for (std::size_t i = 0; i < cls.size(); ++i) {
        auto want = pattern(target.chains[i], i);
        std::vector<CutState> options;
        if (cls.ends[i] == End::Plus) options = {CutState::plus()};
        else if (cls.ends[i] == End::Minus) options = {CutState::minus()};
        else
            for (std::int64_t c = -W - 1; c <= W + 1; ++c) options.push_back(CutState::at(c));
        bool any = std::any_of(options.begin(), options.end(),
                               [&](const CutState& o) { return pattern(o, i) == want; });
        if (!any) return false;
    }
    return true;
}

}  // namespace roller
