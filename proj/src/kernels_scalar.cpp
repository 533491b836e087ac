#include <cstdlib>
#include <limits>

#include "roller/kernels.hpp"

namespace roller::kernels::detail {

void l1_distances_scalar(const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q,
                         std::int32_t* out) {
    for (std::size_t j = 0; j < count; ++j) out[j] = 0;
    for (std::size_t c = 0; c < dims; ++c) {
        const std::int32_t* col = soa + c * count;
        for (std::size_t j = 0; j < count; ++j) out[j] += std::abs(col[j] - q[c]);
    }
}

std::int32_t l1_min_scalar(const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q) {
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    for (std::size_t j = 0; j < count; ++j) {
        std::int32_t d = 0;
        for (std::size_t c = 0; c < dims; ++c) d += std::abs(soa[c * count + j] - q[c]);
        if (d < best) best = d;
    }
    return best;
}

void uf2_filter_scalar(const std::uint64_t* cand, std::size_t count, const std::uint64_t* conflict, std::size_t nbits,
                       std::uint8_t* ok) {
    for (std::size_t j = 0; j < count; ++j) {
        std::uint64_t m = cand[j];
        bool good = true;
        for (std::size_t e = 0; e < nbits && good; ++e)
            if (((m >> e) & 1u) && (m & conflict[e])) good = false;
        ok[j] = good ? 1 : 0;
    }
}

}  // namespace roller::kernels::detail
