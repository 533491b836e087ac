#pragma once

#include <string>
#include <vector>

#include "roller/poc_core.hpp"

namespace roller {

struct CubeEdge {
    std::size_t u = 0, v = 0;  // u < v
    Element label = 0;         // member of min(u) flipped to reach v
};

// stored implicitly: base vertex + transverse subset of its min set;
// vertices[mask] is the flip of base by the elements selected in mask
struct Cube {
    std::size_t base = 0;
    std::vector<Element> transverse;
    std::vector<std::size_t> vertices;
};

struct CubeComplex {
    std::size_t pairs = 0;
    std::vector<Ultrafilter> vertices;
    std::vector<CubeEdge> edges;
    std::vector<Cube> cubes;  // dimension >= 2

    std::size_t dimension() const;
    std::size_t cube_count(std::size_t d) const;
    std::vector<std::vector<std::size_t>> adjacency() const;
};

CubeComplex build_cubing(const FinitePocSet& P);

// walls recovered from the complex alone: edges are glued across squares,
// each class is cut out and the two components become a pair of halfspaces
struct ExtractedHalfspaces {
    FinitePocSet pocset;
    std::vector<std::vector<std::size_t>> sides;  // per proper element, sorted vertex indices
    std::vector<std::vector<std::size_t>> wall_edges;
};

ExtractedHalfspaces extract_halfspaces(const CubeComplex& C);

struct DualityReport {
    std::vector<Element> bijection;  // element of P -> element of the extracted poc-set
    std::vector<std::size_t> vertex_map;
    ExtractedHalfspaces extracted;
};

DualityReport duality_roundtrip(const FinitePocSet& P);

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<std::size_t>>& adj, std::size_t from);

}  // namespace roller
