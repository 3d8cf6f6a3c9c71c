#include <catch2/catch_amalgamated.hpp>

#include "bp/catalog.hpp"

TEST_CASE("semicoherent counts match the Dedekind-derived values") {
    // D(n) minus the two constant functions.
    const std::size_t expected[] = {0, 1, 4, 18, 166, 7579};
    for (int n = 1; n <= 5; ++n) {
        std::size_t count = 0;
        bp::for_each_semicoherent(n, [&](const std::vector<std::uint8_t>&) { ++count; });
        CHECK(count == expected[n]);
    }
}

TEST_CASE("coherent counts") {
    CHECK(bp::coherent_catalog(1).size() == 1);
    CHECK(bp::coherent_catalog(2).size() == 2);
    CHECK(bp::coherent_catalog(3).size() == 9);
    CHECK(bp::coherent_catalog(4).size() == 114);
}

TEST_CASE("enumeration bound") {
    CHECK_THROWS_AS(bp::for_each_semicoherent(7, [](const std::vector<std::uint8_t>&) {}),
                    bp::InvalidParameter);
}

TEST_CASE("random structures are deterministic per (seed, index)") {
    for (std::uint64_t i = 0; i < 10; ++i) {
        const auto a = bp::random_semicoherent(6, 7, i);
        const auto b = bp::random_semicoherent(6, 7, i);
        CHECK(a.table() == b.table());
    }
    CHECK(bp::random_semicoherent(6, 7, 1).table() != bp::random_semicoherent(6, 8, 1).table());
}
