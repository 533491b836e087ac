#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "roller/poc_core.hpp"

namespace roller {

// k pairwise-transverse Z-chains. Within chain i, h_i(m) <= h_i(n) iff m >= n.
struct ChainFamilyPocSet {
    std::vector<std::string> names;

    std::size_t chains() const { return names.size(); }
    static ChainFamilyPocSet anonymous(std::size_t k);  // x1..xk
};

struct ChainHalfspace {
    std::size_t chain = 0;
    std::int64_t pos = 0;
    bool star = false;

    ChainHalfspace flipped() const { return {chain, pos, !star}; }
    friend bool operator==(const ChainHalfspace&, const ChainHalfspace&) = default;
    friend auto operator<=>(const ChainHalfspace&, const ChainHalfspace&) = default;
};

bool chain_leq(const ChainHalfspace& a, const ChainHalfspace& b);

// Cut(c) holds h(n) for n < c and h(n)* for n >= c
struct CutState {
    enum class Kind : std::uint8_t { Cut, Plus, Minus };
    Kind kind = Kind::Cut;
    std::int64_t cut = 0;

    static CutState at(std::int64_t c) { return {Kind::Cut, c}; }
    static CutState plus() { return {Kind::Plus, 0}; }
    static CutState minus() { return {Kind::Minus, 0}; }
    bool is_cut() const { return kind == Kind::Cut; }
    bool contains(std::int64_t n, bool star) const;
    friend bool operator==(const CutState&, const CutState&) = default;
};

struct ChainUltrafilter {
    std::vector<CutState> chains;

    bool contains(const ChainHalfspace& h) const { return chains.at(h.chain).contains(h.pos, h.star); }
    bool principal() const;
    std::vector<std::int64_t> cuts() const;  // NotPrincipal unless all Cut
    static ChainUltrafilter from_cuts(const std::vector<std::int64_t>& c);
    friend bool operator==(const ChainUltrafilter&, const ChainUltrafilter&) = default;
};

enum class End : std::uint8_t { Fin, Plus, Minus };

struct Signature {
    std::vector<End> ends;

    std::size_t size() const { return ends.size(); }
    static Signature principal(std::size_t k) { return {std::vector<End>(k, End::Fin)}; }
    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct Distance {
    bool infinite = false;
    std::uint64_t value = 0;
    friend bool operator==(const Distance&, const Distance&) = default;
};

// literals: "(+,0,-)" and "r:+inf s:cut(0) t:cut(-3)"
Signature parse_signature(std::string_view s);
std::string signature_str(const Signature& s);
ChainUltrafilter parse_chain_ultrafilter(const ChainFamilyPocSet& F, std::string_view s);
std::string chain_ultrafilter_str(const ChainFamilyPocSet& F, const ChainUltrafilter& u);
std::string cut_state_str(const CutState& c);
std::string halfspace_str(const ChainFamilyPocSet& F, const ChainHalfspace& h);

Signature cf_class(const ChainUltrafilter& u);
Distance delta(const ChainUltrafilter& a, const ChainUltrafilter& b);
ChainUltrafilter median(const ChainUltrafilter& a, const ChainUltrafilter& b, const ChainUltrafilter& c);
ChainUltrafilter cf_truncate(const ChainUltrafilter& u, const ChainHalfspace& b);

// minimal members of a principal chain ultrafilter: per chain h_i(c-1) then h_i(c)*
std::vector<ChainHalfspace> chain_min_set(const ChainUltrafilter& u);
ChainUltrafilter chain_flip(const ChainUltrafilter& u, const ChainHalfspace& a);

bool class_leq(const Signature& a, const Signature& b);
struct Codim {
    std::size_t value = 0;
    Signature witness;  // one class below with codim value-1 (only when value > 0)
};
Codim class_codim(const Signature& s);
Signature class_gcd(const Signature& a, const Signature& b);
ChainUltrafilter project_to_class(const Signature& s, const ChainUltrafilter& u);
ChainUltrafilter flow_step(const Signature& s, const ChainUltrafilter& u);
std::vector<ChainUltrafilter> average_sequence(const std::vector<ChainUltrafilter>& seq, const ChainUltrafilter& sigma);

struct Move {
    std::size_t chain = 0;
    int dir = 1;  // +1 up, -1 down
    friend bool operator==(const Move&, const Move&) = default;
};

// start + prefix, then period repeated forever
struct Schedule {
    std::vector<Move> prefix;
    std::vector<Move> period;
};

Signature signature_of(const Schedule& sch, std::size_t k);
// the first `steps` terms after the start (start included as element 0)
std::vector<ChainUltrafilter> expand_schedule(const ChainUltrafilter& start, const Schedule& sch, std::size_t steps);
ChainUltrafilter limit_of_geodesic(const ChainUltrafilter& start, const Schedule& sch);
// elementary moves of the canonical flow, chain order inside each step
Schedule flow_schedule(const Signature& s);

struct RollerPoset {
    std::size_t k = 0;
    std::vector<Signature> classes;  // canonical order
    bool leq(std::size_t i, std::size_t j) const { return class_leq(classes[i], classes[j]); }
    std::vector<std::pair<std::size_t, std::size_t>> hasse() const;
};

RollerPoset roller_boundary(std::size_t k);
std::vector<Signature> all_signatures(std::size_t k);

// finite window: chains restricted to positions [-W, W] as a poc_core poc-set
struct ChainWindow {
    std::size_t k = 0;
    std::int64_t W = 0;
    FinitePocSet pocset;

    Element element(const ChainHalfspace& h) const;
    ChainHalfspace halfspace(Element e) const;
    Ultrafilter restrict(const ChainUltrafilter& u) const;
};

ChainWindow make_window(std::size_t k, std::int64_t W);

// does some member of class `cls` agree with `target` on every window element
bool window_closure_contains(const Signature& cls, const ChainUltrafilter& target, std::int64_t W);

}  // namespace roller
