#include <doctest.h>

#include <set>

#include "anzahl/subspace.hpp"

using namespace anzahl;

TEST_CASE("echelonize produces the canonical RREF span") {
    auto f2 = construct_field(2);
    Subspace full = echelonize(f2, 2, {{1, 0}, {0, 1}});
    CHECK(full.dim() == 2);
    CHECK(full == Subspace::full(f2, 2));

    Subspace line = echelonize(f2, 2, {{1, 1}, {1, 1}});
    CHECK(line.dim() == 1);
    CHECK(line.row(0) == std::vector<int>{1, 1});

    Subspace zero = echelonize(f2, 2, {});
    CHECK(zero.dim() == 0);
    CHECK(zero == Subspace::zero(f2, 2));

    CHECK_THROWS_AS(echelonize(f2, 2, {{1, 0, 0}}), DimensionMismatch);

    // span order / scaling never matters: canonical form is unique
    auto f3 = construct_field(3);
    Subspace a = echelonize(f3, 3, {{1, 2, 0}, {0, 1, 1}});
    // rows of b: (1,2,0)+(0,1,1) and 2*(0,1,1), the same span
    Subspace b = echelonize(f3, 3, {{0, 2, 2}, {1, 0, 1}});
    CHECK(a == b);
}

TEST_CASE("enumeration counts match the Gaussian binomial exhaustively") {
    for (long qv : {2, 3, 4}) {
        auto f = construct_field(qv);
        for (long n = 0; n <= 5; ++n)
            for (long j = 0; j <= n; ++j) {
                SubspaceEnumerator en(f, n, j);
                CHECK(en.size() == gauss_count(n, j, BigInt(qv)));
            }
    }
}

TEST_CASE("enumeration basics") {
    auto f2 = construct_field(2);
    CHECK(SubspaceEnumerator(f2, 2, 1).size() == 3);
    auto f4 = construct_field(4);
    SubspaceEnumerator zero_en(f4, 3, 0);
    CHECK(zero_en.size() == 1);
    CHECK(zero_en.at(0).dim() == 0);
}

TEST_CASE("enumeration is duplicate-free and every member is valid RREF") {
    auto f3 = construct_field(3);
    SubspaceEnumerator en(f3, 4, 2);
    std::set<Subspace> seen;
    for (std::uint64_t i = 0; i < en.size_u64(); ++i) {
        Subspace s = en.at(i);
        CHECK(s.dim() == 2);
        // re-echelonizing its own rows must be the identity
        CHECK(echelonize(f3, 4, {s.row(0), s.row(1)}) == s);
        seen.insert(s);
    }
    CHECK(seen.size() == en.size_u64());
}

TEST_CASE("lattice operations satisfy the modular dimension law exhaustively in F_2^4") {
    auto f2 = construct_field(2);
    SubspaceEnumerator en(f2, 4, 2);
    const std::uint64_t total = en.size_u64();
    REQUIRE(total == 35);
    for (std::uint64_t x = 0; x < total; ++x) {
        Subspace a = en.at(x);
        CHECK(lattice_span(a, a) == a);
        CHECK(lattice_intersection(a, a) == a);
        for (std::uint64_t y = 0; y < total; ++y) {
            Subspace b = en.at(y);
            Subspace sum = lattice_span(a, b);
            Subspace meet = lattice_intersection(a, b);
            CHECK(a.dim() + b.dim() == sum.dim() + meet.dim());
            CHECK(sum.contains(a));
            CHECK(a.contains(meet));
        }
    }
}

TEST_CASE("complementary lines in F_2^2") {
    auto f2 = construct_field(2);
    Subspace a = echelonize(f2, 2, {{1, 0}});
    Subspace b = echelonize(f2, 2, {{0, 1}});
    CHECK(lattice_span(a, b) == Subspace::full(f2, 2));
    CHECK(lattice_intersection(a, b) == Subspace::zero(f2, 2));
}

TEST_CASE("superspace enumeration via the quotient") {
    auto f2 = construct_field(2);
    Subspace pi = SubspaceEnumerator(f2, 4, 1).at(0);

    SUBCASE("k = dim pi yields pi only") {
        SuperspaceEnumerator en(pi, 1);
        CHECK(en.size() == 1);
        CHECK(en.at(0) == pi);
    }
    SUBCASE("k = n yields the full space only") {
        SuperspaceEnumerator en(pi, 4);
        CHECK(en.size() == 1);
        CHECK(en.at(0) == Subspace::full(f2, 4));
    }
    SUBCASE("a point of F_2^4 lies on [3 1]_2 = 7 planes, all distinct") {
        SuperspaceEnumerator en(pi, 2);
        CHECK(en.size() == 7);
        std::set<Subspace> seen;
        for (std::uint64_t i = 0; i < en.size_u64(); ++i) {
            Subspace s = en.at(i);
            CHECK(s.dim() == 2);
            CHECK(s.contains(pi));
            seen.insert(s);
        }
        CHECK(seen.size() == 7);
    }
}

TEST_CASE("superspace count matches the quotient Gaussian binomial for every base point") {
    auto f3 = construct_field(3);
    SubspaceEnumerator points(f3, 4, 2);
    for (std::uint64_t i = 0; i < points.size_u64(); i += 7) {
        Subspace pi = points.at(i);
        SuperspaceEnumerator en(pi, 3);
        CHECK(en.size() == gauss_count(2, 1, BigInt(3)));
        for (std::uint64_t t = 0; t < en.size_u64(); ++t) CHECK(en.at(t).contains(pi));
    }
}

TEST_CASE("segre count by enumeration, for every fixed k-space of F_2^4 and every j") {
    auto f2 = construct_field(2);
    for (long k = 0; k <= 4; ++k) {
        SubspaceEnumerator fixed_en(f2, 4, k);
        for (std::uint64_t f = 0; f < fixed_en.size_u64(); ++f) {
            Subspace fixed = fixed_en.at(f);
            for (long j = 0; j <= 4; ++j) {
                SubspaceEnumerator en(f2, 4, j);
                long count = 0;
                for (std::uint64_t i = 0; i < en.size_u64(); ++i)
                    if (lattice_intersection(fixed, en.at(i)).dim() == 0) ++count;
                CHECK(BigInt(count) == segre_count(4, k, j, BigInt(2)));
            }
        }
    }
}
