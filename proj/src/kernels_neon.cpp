// aarch64 only; not built on x86 hosts
#include <arm_neon.h>

#include <limits>

#include "roller/kernels.hpp"

namespace roller::kernels::detail {

void l1_distances_neon(const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q,
                       std::int32_t* out) {
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) {
        int32x4_t acc = vdupq_n_s32(0);
        for (std::size_t c = 0; c < dims; ++c) {
            int32x4_t v = vld1q_s32(soa + c * count + j);
            acc = vaddq_s32(acc, vabdq_s32(v, vdupq_n_s32(q[c])));
        }
        vst1q_s32(out + j, acc);
    }
    for (; j < count; ++j) {
        std::int32_t d = 0;
        for (std::size_t c = 0; c < dims; ++c) {
            std::int32_t x = soa[c * count + j] - q[c];
            d += x < 0 ? -x : x;
        }
        out[j] = d;
    }
}

std::int32_t l1_min_neon(const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q) {
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    int32x4_t vbest = vdupq_n_s32(best);
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) {
        int32x4_t acc = vdupq_n_s32(0);
        for (std::size_t c = 0; c < dims; ++c)
            acc = vaddq_s32(acc, vabdq_s32(vld1q_s32(soa + c * count + j), vdupq_n_s32(q[c])));
        vbest = vminq_s32(vbest, acc);
    }
    std::int32_t v = vminvq_s32(vbest);
    best = v < best ? v : best;
    for (; j < count; ++j) {
        std::int32_t d = 0;
        for (std::size_t c = 0; c < dims; ++c) {
            std::int32_t x = soa[c * count + j] - q[c];
            d += x < 0 ? -x : x;
        }
        best = d < best ? d : best;
    }
    return best;
}

void uf2_filter_neon(const std::uint64_t* cand, std::size_t count, const std::uint64_t* conflict, std::size_t nbits,
                     std::uint8_t* ok) {
    std::size_t j = 0;
    for (; j + 2 <= count; j += 2) {
        uint64x2_t m = vld1q_u64(cand + j);
        uint64x2_t bad = vdupq_n_u64(0);
        for (std::size_t e = 0; e < nbits; ++e) {
            uint64x2_t bit = vdupq_n_u64(std::uint64_t{1} << e);
            uint64x2_t has = vceqq_u64(vandq_u64(m, bit), bit);
            uint64x2_t hit = vtstq_u64(m, vdupq_n_u64(conflict[e]));
            bad = vorrq_u64(bad, vandq_u64(has, hit));
        }
        ok[j] = vgetq_lane_u64(bad, 0) ? 0 : 1;
        ok[j + 1] = vgetq_lane_u64(bad, 1) ? 0 : 1;
    }
    if (j < count) uf2_filter_scalar(cand + j, count - j, conflict, nbits, ok + j);
}

}  // namespace roller::kernels::detail
