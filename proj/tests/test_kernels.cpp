#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "roller/kernels.hpp"

using namespace roller::kernels;

TEST_CASE("every available isa matches the scalar reference on l1 kernels") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int32_t> v(-1000, 1000);
    for (std::size_t dims : {1u, 2u, 3u, 4u, 7u})
        for (std::size_t count : {0u, 1u, 7u, 8u, 9u, 16u, 33u, 1001u}) {
            std::vector<std::int32_t> soa(dims * count), q(dims);
            for (auto& x : soa) x = v(rng);
            for (auto& x : q) x = v(rng);
            std::vector<std::int32_t> ref(count), got(count);
            l1_distances(Isa::Scalar, soa.data(), dims, count, q.data(), ref.data());
            // reference against the definition
            for (std::size_t j = 0; j < count; ++j) {
                std::int32_t s = 0;
                for (std::size_t c = 0; c < dims; ++c) s += std::abs(soa[c * count + j] - q[c]);
                REQUIRE(ref[j] == s);
            }
            std::int32_t mref = l1_min(Isa::Scalar, soa.data(), dims, count, q.data());
            if (count == 0) CHECK(mref == INT32_MAX);
            for (Isa isa : available_isas()) {
                CAPTURE(isa_name(isa));
                l1_distances(isa, soa.data(), dims, count, q.data(), got.data());
                CHECK(got == ref);
                CHECK(l1_min(isa, soa.data(), dims, count, q.data()) == mref);
            }
        }
}

TEST_CASE("every available isa matches the scalar reference on uf2_filter") {
    std::mt19937_64 rng(5);
    for (std::size_t nbits : {1u, 4u, 12u, 31u, 64u}) {
        std::vector<std::uint64_t> conflict(nbits);
        const std::uint64_t full = nbits == 64 ? ~0ull : ((1ull << nbits) - 1);
        for (auto& c : conflict) c = rng() & rng() & full;
        for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 100u}) {
            std::vector<std::uint64_t> cand(count);
            for (auto& c : cand) c = rng() & rng() & full;
            std::vector<std::uint8_t> ref(count), got(count);
            uf2_filter(Isa::Scalar, cand.data(), count, conflict.data(), nbits, ref.data());
            for (std::size_t j = 0; j < count; ++j) {
                bool ok = true;
                for (std::size_t e = 0; e < nbits; ++e)
                    if ((cand[j] >> e & 1) && (cand[j] & conflict[e])) ok = false;
                REQUIRE(ref[j] == ok);
            }
            for (Isa isa : available_isas()) {
                CAPTURE(isa_name(isa));
                uf2_filter(isa, cand.data(), count, conflict.data(), nbits, got.data());
                CHECK(got == ref);
            }
        }
    }
}

TEST_CASE("dispatcher reports a usable isa") {
    CHECK(isa_available(best_isa()));
    CHECK(isa_available(Isa::Scalar));
    MESSAGE("best isa: " << isa_name(best_isa()));
}
