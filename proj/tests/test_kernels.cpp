#include <doctest.h>

#include "anzahl/kernels.hpp"

using namespace anzahl;

TEST_CASE("parallel count equals the serial reference") {
    auto pred = [](std::uint64_t i) { return (i * i + 3 * i) % 7 == 2; };
    for (std::uint64_t n : {0ull, 1ull, 2ull, 97ull, 10000ull, 123457ull}) {
        std::uint64_t serial = count_matching_serial(n, pred);
        for (int jobs : {1, 2, 3, 8}) CHECK(count_matching(n, jobs, pred) == serial);
    }
}

TEST_CASE("parallel histogram equals the serial reference") {
    auto cls = [](std::uint64_t i) { return static_cast<long>((i ^ (i >> 3)) % 5); };
    for (std::uint64_t n : {0ull, 1ull, 64ull, 99991ull}) {
        auto serial = histogram_serial(n, 5, cls);
        for (int jobs : {1, 2, 4}) CHECK(histogram(n, 5, jobs, cls) == serial);
    }
}

TEST_CASE("find_first_matching returns the lowest index") {
    auto pred = [](std::uint64_t i) { return i >= 41; };
    CHECK(find_first_matching(100, pred) == 41);
    CHECK(find_first_matching(10, pred) == std::nullopt);
    CHECK(find_first_matching(0, pred) == std::nullopt);
}
