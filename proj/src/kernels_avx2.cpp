// compiled with -mavx2; only reached after a runtime cpu check
#include <immintrin.h>

#include <limits>

#include "roller/kernels.hpp"

namespace roller::kernels::detail {

void l1_distances_avx2(const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q,
                       std::int32_t* out) {
    std::size_t j = 0;
    for (; j + 8 <= count; j += 8) {
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t c = 0; c < dims; ++c) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(soa + c * count + j));
            __m256i d = _mm256_sub_epi32(v, _mm256_set1_epi32(q[c]));
            acc = _mm256_add_epi32(acc, _mm256_abs_epi32(d));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), acc);
    }
    if (j < count) {
        std::size_t rest = count - j;
        for (std::size_t t = 0; t < rest; ++t) out[j + t] = 0;
        for (std::size_t c = 0; c < dims; ++c) {
            const std::int32_t* col = soa + c * count + j;
            for (std::size_t t = 0; t < rest; ++t) {
                std::int32_t d = col[t] - q[c];
                out[j + t] += d < 0 ? -d : d;
            }
        }
    }
}

std::int32_t l1_min_avx2(const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q) {
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    __m256i vbest = _mm256_set1_epi32(best);
    std::size_t j = 0;
    for (; j + 8 <= count; j += 8) {
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t c = 0; c < dims; ++c) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(soa + c * count + j));
            acc = _mm256_add_epi32(acc, _mm256_abs_epi32(_mm256_sub_epi32(v, _mm256_set1_epi32(q[c]))));
        }
        vbest = _mm256_min_epi32(vbest, acc);
    }
    alignas(32) std::int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vbest);
    for (std::int32_t v : lanes) best = v < best ? v : best;
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

void uf2_filter_avx2(const std::uint64_t* cand, std::size_t count, const std::uint64_t* conflict, std::size_t nbits,
                     std::uint8_t* ok) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cand + j));
        __m256i bad = zero;
        for (std::size_t e = 0; e < nbits; ++e) {
            __m256i bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << e));
            __m256i has = _mm256_cmpeq_epi64(_mm256_and_si256(m, bit), bit);
            __m256i hit = _mm256_and_si256(m, _mm256_set1_epi64x(static_cast<long long>(conflict[e])));
            __m256i clash = _mm256_andnot_si256(_mm256_cmpeq_epi64(hit, zero), has);
            bad = _mm256_or_si256(bad, clash);
        }
        int mask = _mm256_movemask_pd(_mm256_castsi256_pd(bad));
        for (int t = 0; t < 4; ++t) ok[j + t] = (mask >> t) & 1 ? 0 : 1;
    }
    if (j < count) uf2_filter_scalar(cand + j, count - j, conflict, nbits, ok + j);
}

}  // namespace roller::kernels::detail
