#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "levigon/gf.hpp"

using levigon::Field;

TEST_CASE("prime fields behave like modular arithmetic") {
    const Field f5 = Field::make(5, 1);
    CHECK(f5.q() == 5);
    CHECK(f5.inv(2) == 3);  // 2*3 = 6 = 1 mod 5
    const Field f3 = Field::make(3, 1);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.neg(1) == 2);
}

TEST_CASE("GF(4) uses x^2+x+1 and x*x = x+1") {
    const Field f4 = Field::make(2, 2);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
    // element 2 encodes x, element 3 encodes x+1
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.add(2, 1) == 3);
}

TEST_CASE("deterministic moduli for small extensions") {
    CHECK(Field::make(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});     // x^3+x+1
    CHECK(Field::make(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1});  // x^4+x+1
    CHECK(Field::make(3, 2).modulus() == std::vector<int>{1, 0, 1});        // x^2+1
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 17), std::invalid_argument);  // 2^17 over the cap
    CHECK_THROWS_AS(Field::make(2, 2).inv(0), std::domain_error);
    CHECK_THROWS_AS(Field::make(2, 2).add(4, 0), std::invalid_argument);
}

TEST_CASE("multiplicative group of GF(8) has exponent 7") {
    const Field f8 = Field::make(2, 3);
    for (uint32_t g = 1; g < 8; ++g) CHECK(f8.pow(g, 7) == 1);
}

TEST_CASE("inverses multiply to one in GF(9)") {
    const Field f9 = Field::make(3, 2);
    for (uint32_t a = 1; a < 9; ++a) {
        CHECK(f9.mul(a, f9.inv(a)) == 1);
        CHECK(f9.inv(f9.inv(a)) == a);
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 32") {
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2},
                        {11, 1}, {13, 1}, {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3},
                        {29, 1}, {31, 1}, {2, 5}}) {
        const Field f = Field::make(p, e);
        const uint32_t q = f.q();
        for (uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
            }
        }
        // associativity and distributivity over all triples
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b)
                for (uint32_t c = 0; c < q; ++c) {
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
    }
}

TEST_CASE("multiplicative group is cyclic") {
    for (auto [p, e] : {std::pair{2, 2}, {3, 2}, {2, 3}, {5, 1}, {2, 4}, {5, 2}, {3, 3}}) {
        const Field f = Field::make(p, e);
        const uint32_t q = f.q();
        bool found = false;
        for (uint32_t g = 1; g < q && !found; ++g) {
            uint32_t x = g;
            uint32_t order = 1;
            while (x != 1) {
                x = f.mul(x, g);
                ++order;
            }
            found = order == q - 1;
        }
        CHECK(found);
    }
}

TEST_CASE("arithmetic beyond the table threshold") {
    const Field f = Field::make(257, 1);
    CHECK(f.add(200, 100) == 43);
    CHECK(f.mul(16, 16) == 256);
    CHECK(f.inv(2) == 129);
    const Field f2 = Field::make(2, 9);  // q = 512, on-the-fly reduction
    for (uint32_t a = 1; a < 512; a += 37) {
        CHECK(f2.mul(a, f2.inv(a)) == 1);
        CHECK(f2.pow(a, 511) == 1);
    }
}

TEST_CASE("prime power detection") {
    int p = 0, e = 0;
    CHECK(levigon::prime_power(8, p, e));
    CHECK(p == 2);
    CHECK(e == 3);
    CHECK(levigon::prime_power(9, p, e));
    CHECK(p == 3);
    CHECK(e == 2);
    CHECK(levigon::prime_power(13, p, e));
    CHECK(p == 13);
    CHECK(e == 1);
    CHECK_FALSE(levigon::prime_power(6, p, e));
    CHECK_FALSE(levigon::prime_power(12, p, e));
    CHECK_FALSE(levigon::prime_power(1, p, e));
}
