#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Data-parallel inner loops. Each kernel has a scalar reference and optional
// AVX2 / NEON variants; the dispatcher picks one at runtime.
namespace roller::kernels {

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);
Isa best_isa();
std::vector<Isa> available_isas();

// Points are stored column-wise: coordinate c of point j is soa[c * count + j].
// out[j] = sum_c |soa[c*count+j] - q[c]|
void l1_distances(Isa isa, const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q,
                  std::int32_t* out);
// min over j of the same distance; INT32_MAX when count == 0
std::int32_t l1_min(Isa isa, const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q);

// Candidate bitmasks over proper poc-set elements. ok[j] = 1 iff for every set
// bit e of cand[j], (cand[j] & conflict[e]) == 0.
void uf2_filter(Isa isa, const std::uint64_t* cand, std::size_t count, const std::uint64_t* conflict,
                std::size_t nbits, std::uint8_t* ok);

inline void l1_distances(const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q,
                         std::int32_t* out) {
    l1_distances(best_isa(), soa, dims, count, q, out);
}
inline std::int32_t l1_min(const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q) {
    return l1_min(best_isa(), soa, dims, count, q);
}
inline void uf2_filter(const std::uint64_t* cand, std::size_t count, const std::uint64_t* conflict, std::size_t nbits,
                       std::uint8_t* ok) {
    uf2_filter(best_isa(), cand, count, conflict, nbits, ok);
}

namespace detail {
void l1_distances_scalar(const std::int32_t*, std::size_t, std::size_t, const std::int32_t*, std::int32_t*);
std::int32_t l1_min_scalar(const std::int32_t*, std::size_t, std::size_t, const std::int32_t*);
void uf2_filter_scalar(const std::uint64_t*, std::size_t, const std::uint64_t*, std::size_t, std::uint8_t*);
#if defined(ROLLER_HAVE_AVX2)
void l1_distances_avx2(const std::int32_t*, std::size_t, std::size_t, const std::int32_t*, std::int32_t*);
std::int32_t l1_min_avx2(const std::int32_t*, std::size_t, std::size_t, const std::int32_t*);
void uf2_filter_avx2(const std::uint64_t*, std::size_t, const std::uint64_t*, std::size_t, std::uint8_t*);
#endif
#if defined(ROLLER_HAVE_NEON)
void l1_distances_neon(const std::int32_t*, std::size_t, std::size_t, const std::int32_t*, std::int32_t*);
std::int32_t l1_min_neon(const std::int32_t*, std::size_t, std::size_t, const std::int32_t*);
void uf2_filter_neon(const std::uint64_t*, std::size_t, const std::uint64_t*, std::size_t, std::uint8_t*);
#endif
}  // namespace detail

}  // namespace roller::kernels
