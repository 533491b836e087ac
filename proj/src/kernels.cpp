#include <cstdlib>
#include <cstring>

#include "roller/kernels.hpp"

namespace roller::kernels {

const char* isa_name(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "?";
}

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(ROLLER_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(ROLLER_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

namespace {

Isa detect() {
    // ROLLER_ISA=scalar forces the reference path
    if (const char* env = std::getenv("ROLLER_ISA")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
        if (std::strcmp(env, "avx2") == 0 && isa_available(Isa::Avx2)) return Isa::Avx2;
        if (std::strcmp(env, "neon") == 0 && isa_available(Isa::Neon)) return Isa::Neon;
    }
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
}

}  // namespace

Isa best_isa() {
    static const Isa chosen = detect();
    return chosen;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa i : {Isa::Scalar, Isa::Avx2, Isa::Neon})
        if (isa_available(i)) out.push_back(i);
    return out;
}

void l1_distances(Isa isa, const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q,
                  std::int32_t* out) {
    switch (isa) {
#if defined(ROLLER_HAVE_AVX2)
    case Isa::Avx2: return detail::l1_distances_avx2(soa, dims, count, q, out);
#endif
#if defined(ROLLER_HAVE_NEON)
    case Isa::Neon: return detail::l1_distances_neon(soa, dims, count, q, out);
#endif
    default: return detail::l1_distances_scalar(soa, dims, count, q, out);
    }
}

std::int32_t l1_min(Isa isa, const std::int32_t* soa, std::size_t dims, std::size_t count, const std::int32_t* q) {
    switch (isa) {
#if defined(ROLLER_HAVE_AVX2)
    case Isa::Avx2: return detail::l1_min_avx2(soa, dims, count, q);
#endif
#if defined(ROLLER_HAVE_NEON)
    case Isa::Neon: return detail::l1_min_neon(soa, dims, count, q);
#endif
    default: return detail::l1_min_scalar(soa, dims, count, q);
    }
}

void uf2_filter(Isa isa, const std::uint64_t* cand, std::size_t count, const std::uint64_t* conflict,
                std::size_t nbits, std::uint8_t* ok) {
    switch (isa) {
#if defined(ROLLER_HAVE_AVX2)
    case Isa::Avx2: return detail::uf2_filter_avx2(cand, count, conflict, nbits, ok);
#endif
#if defined(ROLLER_HAVE_NEON)
    case Isa::Neon: return detail::uf2_filter_neon(cand, count, conflict, nbits, ok);
#endif
    default: return detail::uf2_filter_scalar(cand, count, conflict, nbits, ok);
    }
}

}  // namespace roller::kernels
