#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roller/chain_family.hpp"
#include "roller/exact.hpp"

namespace roller {

// h_i(n) = {p : n_i.p > o_i + s_i*n}; its wall is n_i.p = o_i + s_i*n
struct WallFamily {
    ExactVec normal;
    Rational spacing{1};
    Rational offset{0};
};

struct Geometry {
    std::vector<WallFamily> families;

    std::size_t dim() const { return families.empty() ? 0 : families.front().normal.size(); }
    std::size_t chains() const { return families.size(); }
};

struct Model {
    ChainFamilyPocSet family;
    Geometry geometry;
};

struct ModelCheck {
    bool uniform = true;
    std::vector<std::string> warnings;
};

// throws MalformedInput on structural errors (zero normal, parallel families, bad spacing)
ModelCheck validate_model(const Model& M);
bool is_uniform(const Geometry& G);

// direction up to positive scaling; canonical form has first nonzero coordinate +-1
struct Direction {
    ExactVec v;
    Direction() = default;
    explicit Direction(ExactVec x);
    friend bool operator==(const Direction&, const Direction&) = default;
    Direction operator-() const;
    std::string str() const { return exact_vec_str(v); }
};

enum class ChainRole { AllPlus, AllMinus, Parallel };

struct RhoResult {
    Signature signature;
    std::vector<ChainRole> roles;
};

RhoResult classify_direction(const Geometry& G, const Direction& xi);
Signature rho(const Geometry& G, const Direction& xi);
// exact membership test in any dimension: is there xi with the sign pattern of s
bool in_image(const Geometry& G, const Signature& s);
std::optional<Direction> realizing_direction_2d(const Geometry& G, const Signature& s);

// cells of the circle of directions, counter-clockwise from angle 0
struct CircleCell {
    bool arc = false;
    Direction at;          // point cell, or a representative inside the arc
    Direction from, to;    // arc endpoints (ccw)
    Signature signature;
};

struct ImageEntry {
    Signature signature;
    std::vector<std::size_t> cells;  // indices into RhoImage::cells
};

struct RhoImage {
    std::vector<CircleCell> cells;
    std::vector<ImageEntry> entries;  // first appearance order along the circle
    bool uniform = true;

    std::vector<Signature> signatures() const;
};

RhoImage rho_image(const Geometry& G);  // planar only
std::vector<std::vector<std::size_t>> safe_components(const std::vector<Signature>& image);

struct ClosureRow {
    Signature signature;
    bool ff = true;
    bool ff0_applies = false;  // codim 1
    bool ff0 = true;
    std::string detail;
};

struct ClosureReport {
    bool ok = true;
    std::vector<ClosureRow> rows;
    std::string first_violation;
};

ClosureReport closure_check(const Geometry& G);

struct Line {
    ExactVec base;
    ExactVec dir;
};

// one restricted wall on the line: {t > threshold} in line coordinates
struct LineWall {
    Exact threshold;
    // (family, wall index, plain maps to the positive ray?)
    struct Source {
        std::size_t family;
        std::int64_t n;
        bool positive;
    };
    std::vector<Source> sources;
};

struct LineEndMap {
    Signature line_class;   // class of the end in the restricted single-chain system
    Signature pushed;       // R(i_F) of that class
    Signature rho_of_end;   // rho of the end direction
    bool commutes = false;
};

struct LineRestriction {
    std::int64_t window = 0;
    std::vector<std::size_t> crossing;        // families not parallel to the line
    std::vector<std::size_t> parallel;        // families parallel to the line
    std::vector<std::int64_t> parallel_cuts;  // cut of the line inside each parallel family
    std::vector<LineWall> walls;              // merged, increasing threshold
    std::size_t collapsed = 0;                // merged walls with more than one source
    LineEndMap plus_end, minus_end;
    bool commutes = false;
};

LineRestriction restrict_to_line(const Geometry& G, const Line& L, std::int64_t window = 3);
// pull back a line state (cut between merged walls, or an end) to the ambient chains
ChainUltrafilter pullback(const Geometry& G, const Line& L, const CutState& line_state, const Exact& t0);

struct EndCheck {
    bool uniform = true;
    bool incomparable = false;
    Signature plus, minus;
};

EndCheck line_end_incomparability(const Geometry& G, const Line& L);

}  // namespace roller
