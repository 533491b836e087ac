#include "roller/poc_core.hpp"

#include <algorithm>
#include <bit>

#include "roller/error.hpp"
#include "roller/kernels.hpp"

namespace roller {

FinitePocSet::FinitePocSet(std::size_t pairs) : n_(pairs), up_(2 * pairs + 2), down_(2 * pairs + 2) {
    if (pairs > kMaxPairs) throw Error(Errc::MalformedInput, "more than 32 proper pairs");
    for (std::size_t e = 0; e < size(); ++e) {
        up_[e][e] = true;
        up_[e][zero_star()] = true;
        up_[zero()][e] = true;
    }
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b)
            if (up_[a][b]) down_[b][a] = true;
}

ElementSet FinitePocSet::proper_mask() const {
    ElementSet m;
    for (std::size_t e = 0; e < 2 * n_; ++e) m[e] = true;
    return m;
}

std::string FinitePocSet::name(Element e) const {
    if (e == zero()) return "0";
    if (e == zero_star()) return "0*";
    std::string s = "h" + std::to_string(e / 2 + 1);
    if (e & 1u) s += "*";
    return s;
}

std::optional<Element> FinitePocSet::element(std::string_view nm) const {
    if (nm == "0") return zero();
    if (nm == "0*") return zero_star();
    if (nm.size() < 2 || nm[0] != 'h') return std::nullopt;
    bool starred = nm.back() == '*';
    std::string_view digits = nm.substr(1, nm.size() - 1 - (starred ? 1 : 0));
    if (digits.empty() || digits.size() > 3) return std::nullopt;
    std::size_t k = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') return std::nullopt;
        k = k * 10 + static_cast<std::size_t>(c - '0');
    }
    if (k < 1 || k > n_) return std::nullopt;
    return static_cast<Element>(2 * (k - 1) + (starred ? 1 : 0));
}

Element FinitePocSet::parse_element(std::string_view nm) const {
    auto e = element(nm);
    if (!e) throw Error(Errc::MalformedInput, "dangling handle '" + std::string(nm) + "'");
    return *e;
}

FinitePocSet FinitePocSet::from_relation(std::size_t pairs, const std::vector<std::pair<Element, Element>>& order,
                                         bool symmetrize) {
    FinitePocSet P(pairs);
    const std::size_t N = P.size();
    for (auto [a, b] : order) {
        if (a >= N || b >= N) throw Error(Errc::MalformedInput, "element index out of range");
        P.up_[a][b] = true;
        if (symmetrize) P.up_[star(b)][star(a)] = true;
    }
    // Warshall on bit rows
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t i = 0; i < N; ++i)
            if (P.up_[i][k]) P.up_[i] |= P.up_[k];

    if (!symmetrize) {
        for (Element a = 0; a < N; ++a)
            for (Element b = 0; b < N; ++b)
                if (P.up_[a][b] && !P.up_[star(b)][star(a)])
                    throw Error(Errc::AxiomViolation, "involution not order-reversing: " + P.name(a) + " <= " +
                                                          P.name(b) + " but not " + P.name(star(b)) + " <= " +
                                                          P.name(star(a)));
    }
    for (Element h = 0; h < 2 * pairs; ++h)
        if (P.up_[h][star(h)]) throw Error(Errc::AxiomViolation, "h <= h*: " + P.name(h));
    for (Element a = 0; a < N; ++a)
        for (Element b = a + 1; b < N; ++b)
            if (P.up_[a][b] && P.up_[b][a])
                throw Error(Errc::AxiomViolation, "antisymmetry: " + P.name(a) + " <= " + P.name(b) + " <= " + P.name(a));

    for (auto& d : P.down_) d.reset();
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            if (P.up_[a][b]) P.down_[b][a] = true;
    return P;
}

FinitePocSet validate_pocset(const RawPocSet& raw) {
    if (raw.pairs > kMaxPairs) throw Error(Errc::MalformedInput, "more than 32 proper pairs");
    FinitePocSet shape(raw.pairs);
    std::vector<std::pair<Element, Element>> order;
    for (const auto& [a, b] : raw.order) order.emplace_back(shape.parse_element(a), shape.parse_element(b));
    return FinitePocSet::from_relation(raw.pairs, order, raw.symmetrize);
}

PairClass classify_pair(const FinitePocSet& P, Element h, Element k) {
    if (!P.proper(h)) throw Error(Errc::TrivialElement, P.name(h));
    if (!P.proper(k)) throw Error(Errc::TrivialElement, P.name(k));
    PairClass c;
    c.nested = true;
    if (P.leq(h, k)) {
        c.relation = Relation::HLeqK;
        c.lower = h, c.upper = k;
    } else if (P.leq(star(h), k)) {
        c.relation = Relation::HStarLeqK;
        c.lower = star(h), c.upper = k;
    } else if (P.leq(h, star(k))) {
        c.relation = Relation::HLeqKStar;
        c.lower = h, c.upper = star(k);
    } else if (P.leq(star(h), star(k))) {
        // h* <= k* is reported in its equivalent form k <= h
        c.relation = Relation::HStarLeqKStar;
        c.lower = k, c.upper = h;
    } else {
        c.nested = false;
    }
    return c;
}

bool transverse(const FinitePocSet& P, Element h, Element k) { return !classify_pair(P, h, k).nested; }

std::vector<Element> interval(const FinitePocSet& P, Element a, Element b) {
    std::vector<Element> out;
    for (Element h = 0; h < P.size(); ++h)
        if (P.leq(a, h) && P.leq(h, b)) out.push_back(h);
    return out;
}

namespace {

void clique_search(const std::vector<std::uint64_t>& adj, std::uint64_t chosen, std::uint64_t cand,
                   std::uint64_t& best) {
    if (cand == 0) {
        if (std::popcount(chosen) > std::popcount(best)) best = chosen;
        return;
    }
    if (std::popcount(chosen) + std::popcount(cand) <= std::popcount(best)) return;
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    clique_search(adj, chosen | bit, cand & adj[v], best);
    clique_search(adj, chosen, cand & ~bit, best);
}

}  // namespace

std::vector<Element> max_transverse_set(const FinitePocSet& P) {
    const std::size_t n = P.pairs();
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && transverse(P, P.plain(i), P.plain(j))) adj[i] |= std::uint64_t{1} << j;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t best = 0;
    clique_search(adj, 0, all, best);
    std::vector<Element> out;
    for (std::size_t i = 0; i < n; ++i)
        if ((best >> i) & 1u) out.push_back(P.plain(i));
    return out;
}

std::size_t dimension(const FinitePocSet& P) { return max_transverse_set(P).size(); }

bool canonical_less(const Ultrafilter& a, const Ultrafilter& b) {
    for (std::uint32_t i = 0; i < std::max(a.pairs, b.pairs); ++i) {
        bool sa = a.members[2 * i + 1], sb = b.members[2 * i + 1];
        if (sa != sb) return !sa;
    }
    return false;
}

std::vector<Element> elements_of(const ElementSet& s) {
    std::vector<Element> out;
    for (std::size_t e = 0; e < s.size(); ++e)
        if (s[e]) out.push_back(static_cast<Element>(e));
    return out;
}

std::string set_str(const FinitePocSet& P, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (Element e : elements_of(s)) {
        if (e >= P.size()) continue;
        if (!first) out += ",";
        out += P.name(e);
        first = false;
    }
    return out + "}";
}

std::optional<std::pair<Element, Element>> uf2_violation(const FinitePocSet& P, const ElementSet& s) {
    std::vector<Element> L;
    for (Element e = 0; e < P.size(); ++e)
        if (s[e]) L.push_back(e);
    for (std::size_t i = 0; i < L.size(); ++i) {
        for (std::size_t j = i; j < L.size(); ++j) {
            Element h = L[i], k = L[j];
            if (!P.leq(h, star(k))) continue;
            // h <= k* and k <= h* say the same thing; prefer a plain left element
            bool h_plain = P.proper(h) && !(h & 1u);
            bool k_plain = P.proper(k) && !(k & 1u);
            if (!h_plain && k_plain) return std::make_pair(k, h);
            return std::make_pair(h, k);
        }
    }
    return std::nullopt;
}

UfCheck is_ultrafilter(const FinitePocSet& P, const ElementSet& s) {
    UfCheck r;
    for (std::size_t i = 0; i <= P.pairs(); ++i) {
        if (s[2 * i] == s[2 * i + 1]) {
            r.ok = false;
            r.axiom = "UF1";
            r.a = r.b = static_cast<Element>(2 * i);
            return r;
        }
    }
    if (auto v = uf2_violation(P, s)) {
        r.ok = false;
        r.axiom = "UF2";
        r.a = v->first;
        r.b = v->second;
    }
    return r;
}

std::vector<std::uint64_t> conflict_masks(const FinitePocSet& P) {
    const std::size_t m = 2 * P.pairs();
    std::vector<std::uint64_t> conf(m, 0);
    for (Element e = 0; e < m; ++e)
        for (Element k = 0; k < m; ++k)
            if (P.leq(e, star(k))) conf[e] |= std::uint64_t{1} << k;
    return conf;
}

namespace {

Ultrafilter from_proper_mask(const FinitePocSet& P, std::uint64_t mask) {
    Ultrafilter u;
    u.pairs = static_cast<std::uint32_t>(P.pairs());
    for (std::size_t e = 0; e < 2 * P.pairs(); ++e)
        if ((mask >> e) & 1u) u.members[e] = true;
    u.members[P.zero_star()] = true;
    return u;
}

}  // namespace

std::vector<Ultrafilter> enumerate_by_backtracking(const FinitePocSet& P) {
    const std::size_t n = P.pairs();
    const auto conf = conflict_masks(P);
    std::vector<Ultrafilter> out;
    // explicit stack: choice[i] in {0 plain, 1 star, 2 exhausted}
    std::vector<int> choice(n + 1, -1);
    std::vector<std::uint64_t> chosen(n + 1, 0);
    std::size_t depth = 0;
    if (n == 0) {
        out.push_back(from_proper_mask(P, 0));
        return out;
    }
    while (true) {
        ++choice[depth];
        if (choice[depth] > 1) {
            choice[depth] = -1;
            if (depth == 0) break;
            --depth;
            continue;
        }
        std::size_t e = 2 * depth + static_cast<std::size_t>(choice[depth]);
        if (chosen[depth] & conf[e]) continue;
        std::uint64_t next = chosen[depth] | (std::uint64_t{1} << e);
        if (depth + 1 == n) {
            out.push_back(from_proper_mask(P, next));
            continue;
        }
        chosen[depth + 1] = next;
        ++depth;
    }
    return out;
}

std::vector<Ultrafilter> enumerate_by_scan(const FinitePocSet& P) {
    const std::size_t n = P.pairs();
    if (n > 24) throw Error(Errc::Unsupported, "sign scan limited to 24 pairs");
    const auto conf = conflict_masks(P);
    const std::uint64_t total = std::uint64_t{1} << n;
    constexpr std::uint64_t batch = 4096;
    std::vector<std::uint64_t> cand;
    std::vector<std::uint8_t> ok;
    std::vector<Ultrafilter> out;
    for (std::uint64_t base = 0; base < total; base += batch) {
        std::uint64_t cnt = std::min(batch, total - base);
        cand.assign(cnt, 0);
        ok.assign(cnt, 0);
        for (std::uint64_t t = 0; t < cnt; ++t) {
            std::uint64_t x = base + t, m = 0;
            for (std::size_t i = 0; i < n; ++i) m |= std::uint64_t{1} << (2 * i + ((x >> (n - 1 - i)) & 1u));
            cand[t] = m;
        }
        kernels::uf2_filter(cand.data(), cnt, conf.data(), 2 * n, ok.data());
        for (std::uint64_t t = 0; t < cnt; ++t)
            if (ok[t]) out.push_back(from_proper_mask(P, cand[t]));
    }
    return out;
}

std::vector<Ultrafilter> enumerate_ultrafilters(const FinitePocSet& P) {
    return P.pairs() <= 16 ? enumerate_by_scan(P) : enumerate_by_backtracking(P);
}

Ultrafilter extend_filterbase(const FinitePocSet& P, const ElementSet& base) {
    if (auto v = uf2_violation(P, base))
        throw Error(Errc::NotAFilterBase, P.name(v->first) + " <= " + P.name(star(v->second)));
    ElementSet cur = base;
    cur[P.zero_star()] = true;
    for (std::size_t i = 0; i < P.pairs(); ++i) {
        Element h = P.plain(i);
        if (cur[h] || cur[star(h)]) continue;
        bool clash = false;
        for (Element k : elements_of(cur))
            if (P.leq(h, star(k))) clash = true;
        cur[clash ? star(h) : h] = true;
    }
    Ultrafilter u;
    u.pairs = static_cast<std::uint32_t>(P.pairs());
    u.members = cur;
    return u;
}

Ultrafilter median(const Ultrafilter& a, const Ultrafilter& b, const Ultrafilter& c) {
    if (a.pairs != b.pairs || b.pairs != c.pairs) throw Error(Errc::BackendMismatch, "median over different poc-sets");
    Ultrafilter m;
    m.pairs = a.pairs;
    m.members = (a.members & b.members) | (b.members & c.members) | (a.members & c.members);
    return m;
}

std::uint64_t delta(const Ultrafilter& a, const Ultrafilter& b) {
    if (a.pairs != b.pairs) throw Error(Errc::BackendMismatch, "delta over different poc-sets");
    return (a.members & ~b.members).count();
}

ElementSet min_set(const FinitePocSet& P, const Ultrafilter& a) {
    ElementSet out;
    for (Element e = 0; e < 2 * P.pairs(); ++e)
        if (a.members[e] && (P.down(e) & a.members).count() == 1) out[e] = true;
    return out;
}

Ultrafilter flip(const FinitePocSet& P, const Ultrafilter& a, Element e) {
    if (e >= P.size() || !min_set(P, a)[e]) throw Error(Errc::NotMinimal, P.name(e));
    Ultrafilter r = a;
    r.members[e] = false;
    r.members[star(e)] = true;
    return r;
}

Ultrafilter principal_from_transverse(const FinitePocSet& P, const std::vector<Element>& A) {
    for (Element a : A)
        if (!P.proper(a)) throw Error(Errc::TrivialElement, P.name(a));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = i + 1; j < A.size(); ++j)
            if (!transverse(P, A[i], A[j])) throw Error(Errc::NotTransverse, P.name(A[i]) + "," + P.name(A[j]));
    for (std::size_t i = 0; i < P.pairs(); ++i) {
        Element h = P.plain(i);
        bool touched = false, all_transverse = true;
        for (Element a : A) {
            if (a / 2 == i) touched = true;
            else if (!transverse(P, a, h)) all_transverse = false;
        }
        if (!touched && all_transverse) throw Error(Errc::NotMaximalTransverse, P.name(h));
    }
    Ultrafilter u;
    u.pairs = static_cast<std::uint32_t>(P.pairs());
    for (Element h = 0; h < P.size(); ++h) {
        for (Element a : A) {
            if (P.leq(a, h) || P.less(star(a), h)) {
                u.members[h] = true;
                break;
            }
        }
    }
    u.members[P.zero_star()] = true;
    auto chk = is_ultrafilter(P, u.members);
    if (!chk.ok) throw Error(Errc::NotMaximalTransverse, "pi_A fails " + chk.axiom + " at " + P.name(chk.a));
    return u;
}

bool vset_nonempty(const FinitePocSet& P, const ElementSet& A, const std::vector<Ultrafilter>* restrict_to) {
    std::vector<Ultrafilter> all;
    if (!restrict_to) {
        all = enumerate_ultrafilters(P);
        restrict_to = &all;
    }
    for (const auto& u : *restrict_to)
        if ((A & ~u.members).none()) return true;
    return false;
}

bool helly_predicts_nonempty(const FinitePocSet& P, const ElementSet& A, const std::vector<Ultrafilter>* restrict_to) {
    std::vector<Ultrafilter> all;
    if (!restrict_to) {
        all = enumerate_ultrafilters(P);
        restrict_to = &all;
    }
    if (restrict_to->empty()) return false;
    if (uf2_violation(P, A)) return false;
    for (Element a : elements_of(A)) {
        bool meets = std::any_of(restrict_to->begin(), restrict_to->end(),
                                 [&](const Ultrafilter& u) { return u.members[a]; });
        if (!meets) return false;
    }
    return true;
}

RawPocSet random_pocset(std::size_t pairs, std::mt19937_64& rng) {
    const std::size_t m = pairs + 3;
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    std::vector<std::uint64_t> sets;  // index 2i plain, 2i+1 complement
    std::uniform_int_distribution<std::uint64_t> pick(1, full - 1);
    while (sets.size() < 2 * pairs) {
        std::uint64_t s = pick(rng);
        if (std::find(sets.begin(), sets.end(), s) != sets.end()) continue;
        if (std::find(sets.begin(), sets.end(), full & ~s) != sets.end()) continue;
        sets.push_back(s);
        sets.push_back(full & ~s);
    }
    auto nm = [](std::size_t e) { return "h" + std::to_string(e / 2 + 1) + ((e & 1u) ? "*" : ""); };
    auto sub = [&](std::size_t x, std::size_t y) { return (sets[x] & ~sets[y]) == 0; };
    RawPocSet raw;
    raw.pairs = pairs;
    std::bernoulli_distribution keep(0.5);
    for (std::size_t x = 0; x < sets.size(); ++x) {
        for (std::size_t y = 0; y < sets.size(); ++y) {
            if (x == y || !sub(x, y)) continue;
            bool cover = true;
            for (std::size_t z = 0; z < sets.size() && cover; ++z)
                if (z != x && z != y && sub(x, z) && sub(z, y)) cover = false;
            if (!cover) continue;
            // the closure adds the starred mirror, so drop it half the time
            bool mirror_first = std::make_pair(star(static_cast<Element>(y)), star(static_cast<Element>(x))) <
                                std::make_pair(static_cast<Element>(x), static_cast<Element>(y));
            if (mirror_first && keep(rng)) continue;
            raw.order.emplace_back(nm(x), nm(y));
        }
    }
    return raw;
}

}  // namespace roller
