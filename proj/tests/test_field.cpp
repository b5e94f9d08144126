#include <doctest.h>

#include "anzahl/field.hpp"

using namespace anzahl;

TEST_CASE("construct_field decomposes prime powers") {
    auto f4 = construct_field(4);
    CHECK(f4->characteristic() == 2);
    CHECK(f4->degree() == 2);
    CHECK(f4->order() == 4);

    auto f9 = construct_field(9);
    CHECK(f9->characteristic() == 3);
    CHECK(f9->degree() == 2);

    CHECK_THROWS_AS(construct_field(12), NotAPrimePower);
    CHECK_THROWS_AS(construct_field(1), NotAPrimePower);
}

TEST_CASE("modulus is the lowest monic irreducible") {
    // GF(4): x^2 + x + 1 is the only irreducible quadratic over GF(2).
    CHECK(construct_field(4)->modulus() == std::vector<int>{1, 1, 1});
    // GF(9): x^2 + 1 (code 1) precedes every other irreducible quadratic.
    CHECK(construct_field(9)->modulus() == std::vector<int>{1, 0, 1});
    // GF(8): x^3 + 1 factors, x^3 + x + 1 is next.
    CHECK(construct_field(8)->modulus() == std::vector<int>{1, 1, 0, 1});
}

TEST_CASE("field axioms hold exhaustively for every supported oracle order") {
    for (long order : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
        auto f = construct_field(order);
        const int n = static_cast<int>(order);
        for (int a = 0; a < n; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        }
        // associativity, commutativity, distributivity over all triples
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                if (f->add(a, b) != f->add(b, a) || f->mul(a, b) != f->mul(b, a)) ok = false;
                for (int c = 0; c < n && ok; ++c) {
                    if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c))) ok = false;
                    if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) ok = false;
                    if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) ok = false;
                }
            }
        CHECK_MESSAGE(ok, "field axioms in GF(", order, ")");
    }
}

TEST_CASE("frobenius additivity (a+b)^p = a^p + b^p") {
    for (long order : {4, 9, 8, 25}) {
        auto f = construct_field(order);
        const int n = static_cast<int>(order);
        const long p = f->characteristic();
        auto powp = [&](int x) {
            int r = 1;
            for (long t = 0; t < p; ++t) r = f->mul(r, x);
            return r;
        };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) CHECK(powp(f->add(a, b)) == f->add(powp(a), powp(b)));
    }
}

TEST_CASE("conjugation is an order-2 automorphism with fixed field GF(q)") {
    for (long order : {4, 9, 16, 25}) {
        auto f = construct_field(order);
        const int n = static_cast<int>(order);
        CHECK(f->conjugate(0) == 0);
        CHECK(f->conjugate(1) == 1);
        long fixed = 0;
        for (int a = 0; a < n; ++a) {
            CHECK(f->conjugate(f->conjugate(a)) == a);
            if (f->conjugate(a) == a) ++fixed;
            for (int b = 0; b < n; ++b) {
                CHECK(f->conjugate(f->mul(a, b)) == f->mul(f->conjugate(a), f->conjugate(b)));
                CHECK(f->conjugate(f->add(a, b)) == f->add(f->conjugate(a), f->conjugate(b)));
            }
        }
        long sqrt_order = 1;
        while (sqrt_order * sqrt_order < order) ++sqrt_order;
        CHECK(fixed == sqrt_order);
    }
    CHECK_THROWS_AS(construct_field(8)->conjugate(3), OrderNotSquare);
}

TEST_CASE("field elements are canonical values") {
    auto f4 = construct_field(4);
    FieldElement a(f4, 2), b(f4, 3);
    CHECK((a + (-a)).is_zero());
    CHECK(a * (b / b) == a);
    CHECK(a.coefficients().size() == 2);
    CHECK(FieldElement(f4, 2) == FieldElement(construct_field(4), 2));

    auto f9 = construct_field(9);
    CHECK_THROWS_AS(a + FieldElement(f9, 1), MixedFields);
    CHECK_THROWS_AS(a / FieldElement(f4, 0), DivisionByZero);
}
