#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace roller {

inline constexpr std::size_t kMaxPairs = 32;
inline constexpr std::size_t kMaxElements = 2 * kMaxPairs + 2;

// Canonical element order: pair i (0-based) gives 2i = h_{i+1}, 2i+1 = h_{i+1}*,
// then the trivial pair 0, 0* last.
using Element = std::uint32_t;
using ElementSet = std::bitset<kMaxElements>;

inline Element star(Element e) { return e ^ 1u; }

struct RawPocSet {
    std::size_t pairs = 0;
    // (a, b) means a <= b; names "hK" or "hK*"
    std::vector<std::pair<std::string, std::string>> order;
    // add b* <= a* for every a <= b before closing; off exposes the involution check
    bool symmetrize = true;
};

class FinitePocSet {
public:
    FinitePocSet() : FinitePocSet(0) {}
    explicit FinitePocSet(std::size_t pairs);

    std::size_t pairs() const { return n_; }
    std::size_t size() const { return 2 * n_ + 2; }
    Element plain(std::size_t i) const { return static_cast<Element>(2 * i); }
    Element zero() const { return static_cast<Element>(2 * n_); }
    Element zero_star() const { return static_cast<Element>(2 * n_ + 1); }
    bool proper(Element e) const { return e < 2 * n_; }
    bool leq(Element a, Element b) const { return up_[a][b]; }
    bool less(Element a, Element b) const { return a != b && up_[a][b]; }
    const ElementSet& up(Element a) const { return up_[a]; }
    const ElementSet& down(Element a) const { return down_[a]; }
    ElementSet proper_mask() const;

    std::string name(Element e) const;
    std::optional<Element> element(std::string_view name) const;
    Element parse_element(std::string_view name) const;  // throws MalformedInput

    // relation built from index pairs; closes and validates
    static FinitePocSet from_relation(std::size_t pairs, const std::vector<std::pair<Element, Element>>& order,
                                      bool symmetrize = true);

    friend bool operator==(const FinitePocSet& a, const FinitePocSet& b) { return a.n_ == b.n_ && a.up_ == b.up_; }

private:
    std::size_t n_;
    std::vector<ElementSet> up_;    // up_[a] = {b : a <= b}
    std::vector<ElementSet> down_;  // down_[b] = {a : a <= b}
};

FinitePocSet validate_pocset(const RawPocSet& raw);

enum class Relation { HLeqK, HStarLeqK, HLeqKStar, HStarLeqKStar };

struct PairClass {
    bool nested = false;
    Relation relation = Relation::HLeqK;
    Element lower = 0, upper = 0;  // witness lower <= upper
};

PairClass classify_pair(const FinitePocSet& P, Element h, Element k);
bool transverse(const FinitePocSet& P, Element h, Element k);
std::vector<Element> interval(const FinitePocSet& P, Element a, Element b);
std::size_t dimension(const FinitePocSet& P);
// a maximum transverse set of proper elements (plain representatives)
std::vector<Element> max_transverse_set(const FinitePocSet& P);

struct Ultrafilter {
    std::uint32_t pairs = 0;
    ElementSet members;

    bool contains(Element e) const { return members[e]; }
    friend bool operator==(const Ultrafilter&, const Ultrafilter&) = default;
};

// canonical order: first differing pair decides, plain before starred
bool canonical_less(const Ultrafilter& a, const Ultrafilter& b);

std::string set_str(const FinitePocSet& P, const ElementSet& s);
std::vector<Element> elements_of(const ElementSet& s);

struct UfCheck {
    bool ok = true;
    std::string axiom;  // "UF1" or "UF2"
    Element a = 0, b = 0;  // UF1: a names the pair; UF2: a <= star(b)
};

UfCheck is_ultrafilter(const FinitePocSet& P, const ElementSet& s);
// first UF2 violation inside s, normalized so the left element is plain when possible
std::optional<std::pair<Element, Element>> uf2_violation(const FinitePocSet& P, const ElementSet& s);

// conflict[e] over proper bits: {k : e <= k*}
std::vector<std::uint64_t> conflict_masks(const FinitePocSet& P);

std::vector<Ultrafilter> enumerate_ultrafilters(const FinitePocSet& P);
std::vector<Ultrafilter> enumerate_by_backtracking(const FinitePocSet& P);
std::vector<Ultrafilter> enumerate_by_scan(const FinitePocSet& P);

Ultrafilter extend_filterbase(const FinitePocSet& P, const ElementSet& base);
Ultrafilter median(const Ultrafilter& a, const Ultrafilter& b, const Ultrafilter& c);
std::uint64_t delta(const Ultrafilter& a, const Ultrafilter& b);
ElementSet min_set(const FinitePocSet& P, const Ultrafilter& a);
Ultrafilter flip(const FinitePocSet& P, const Ultrafilter& a, Element e);
Ultrafilter principal_from_transverse(const FinitePocSet& P, const std::vector<Element>& A);

// restrict_to may be null: the whole ultrafilter space
bool vset_nonempty(const FinitePocSet& P, const ElementSet& A, const std::vector<Ultrafilter>* restrict_to = nullptr);
// Helly side of the same question: A a filter base and each S_a meets the class
bool helly_predicts_nonempty(const FinitePocSet& P, const ElementSet& A,
                             const std::vector<Ultrafilter>* restrict_to = nullptr);

// random valid poc-set: pairs realized as subsets of a point set, ordered by inclusion
RawPocSet random_pocset(std::size_t pairs, std::mt19937_64& rng);

}  // namespace roller
