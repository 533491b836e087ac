#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "roller/chain_family.hpp"
#include "roller/euclid_model.hpp"

namespace roller {

using Cuts = std::vector<std::int64_t>;

// Cut(c) on family i is supported by the closed slab o+s(c-1) <= n.p <= o+sc
class ConsistencyOracle {
public:
    explicit ConsistencyOracle(const Geometry& G);

    bool consistent(const Cuts& c) const;           // shortcut for independent normals, interval form, else elimination
    bool consistent_general(const Cuts& c) const;   // always exact elimination
    bool interval_applies() const { return interval_; }
    bool consistent_interval(const Cuts& c) const;  // Unsupported unless interval_applies()

    // closures of a finite set of halfspaces share a point
    bool set_consistent(const std::vector<ChainHalfspace>& hs) const;
    const Geometry& geometry() const { return *G_; }

private:
    const Geometry* G_;
    bool interval_ = false;  // k = dim+1 normals summing to zero
    bool free_ = false;      // independent normals: every tuple is consistent
};

bool is_consistent(const Geometry& G, const ChainUltrafilter& u);
// all consistent tuples in [-W,W]^k, lexicographic
std::vector<Cuts> enumerate_pi0(const Geometry& G, std::int64_t W);

// Pi0 inside [-W,W]^k stored column-wise for the distance kernels
class Pi0Index {
public:
    Pi0Index(const Geometry& G, std::int64_t W);

    std::int64_t window() const { return W_; }
    std::size_t size() const { return count_; }
    std::size_t dims() const { return k_; }
    Cuts point(std::size_t j) const;

    std::int64_t dist(const Cuts& q) const;
    // minimizers in lexicographic order; WindowTooSmall if one touches the window edge
    std::vector<Cuts> nearest(const Cuts& q, std::int64_t* dist_out = nullptr) const;

private:
    std::int64_t W_;
    std::size_t k_;
    std::size_t count_ = 0;
    std::vector<std::int32_t> soa_;
};

std::int64_t dist_to_pi0(const Pi0Index& idx, const ChainUltrafilter& u);

// per chain: shadow members all contain h(n) for n <= plain_max and h(n)* for n >= star_min
struct ChainRange {
    std::int64_t plain_max = 0;
    std::int64_t star_min = 0;
    friend bool operator==(const ChainRange&, const ChainRange&) = default;
};

// a is contained in b as sets of halfspaces
bool dual_subset(const std::vector<ChainRange>& a, const std::vector<ChainRange>& b);
bool dual_contains(const std::vector<ChainRange>& d, const ChainHalfspace& h);
bool dual_inside_pi(const std::vector<ChainRange>& d, const Cuts& pi);

struct MinClasses {
    std::vector<ChainHalfspace> plus, minus, neutral;
};

MinClasses classify_min(const Pi0Index& idx, const ChainUltrafilter& u);

struct ShadowReport {
    Cuts pi;
    bool consistent = false;
    std::int64_t dist = 0;
    std::int64_t window = 0;
    MinClasses mins;
    std::vector<Cuts> shadow;
    std::vector<ChainRange> dual_shadow;
    // invariants, evaluated
    bool plus_in_dual = false;
    bool dual_in_pi = false;
    bool three_down = false;           // only meaningful when inconsistent
    bool minus_inconsistent = false;   // only meaningful when inconsistent
};

ShadowReport shadow_report(const Geometry& G, const Pi0Index& idx, const ChainUltrafilter& u);
// grows the Pi0 window until the minimizers are interior
ShadowReport shadow_report(const Geometry& G, const ChainUltrafilter& u, std::int64_t W);

// dist <= m iff dropping m elements of pi leaves a consistent set; checks m = dist and dist-1
bool level_set_holds(const Geometry& G, const Cuts& pi, std::int64_t dist);

struct RayStep {
    Cuts cuts;
    std::int64_t dist = 0;
    ChainHalfspace move;  // element flipped to reach this step
    bool move_in_min_plus = false;
    bool dual_shrinks = false;
    bool shadow_grows = false;
};

struct EscapeReport {
    Signature target;
    bool success = false;
    std::size_t failure_step = 0;  // 1-based, 0 when success
    std::string reason;
    Cuts start;
    std::size_t launch_offset = 0;  // flow moves skipped inside the plateau at distance 0
    std::vector<RayStep> ray;       // ray[0] is the launch point
    std::int64_t window = 0;
    bool in_image = false;
};

EscapeReport escaping_ray(const Geometry& G, const Signature& target, std::size_t N, std::int64_t W = 8);

struct ClassRow {
    Signature signature;
    std::size_t codim = 0;
    bool in_image = false;
};

struct WindowMax {
    std::int64_t W = 0;
    std::int64_t max_delta = 0;
    Cuts argmax;
};

struct SurjectivityReport {
    bool uniform = true;
    std::vector<std::string> warnings;
    std::vector<ClassRow> classes;
    std::size_t nonprincipal = 0;
    std::size_t nonprincipal_in_image = 0;
    std::vector<WindowMax> sweep;
    bool delta_grows = false;
    std::optional<EscapeReport> escape;  // first class with a verified ray
    bool contract_ok = false;            // growth and a missed class co-occur, or neither
};

WindowMax max_delta(const Geometry& G, std::int64_t W);
SurjectivityReport surjectivity_report(const Geometry& G, const std::vector<std::int64_t>& windows,
                                       std::size_t ray_length = 20);

struct FellowTravel {
    Signature target;
    std::size_t steps = 0;
    Exact max_gap;  // L-infinity distance between chamber centre and the straight ray
    bool within_one = false;
};

// coordinate-normal models only
FellowTravel fellow_travel(const Geometry& G, const Signature& target, std::size_t steps);

// planar rendering of walls with pi's shadow chambers filled
std::string shadow_svg(const Geometry& G, const ShadowReport& r);

}  // namespace roller
