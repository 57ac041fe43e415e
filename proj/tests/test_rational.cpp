#include <doctest.h>

#include "birlinks/rational.hpp"

using namespace birlinks;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rat(10, 14) == Rat(5, 7));
    CHECK(Rat(-10, -14) == Rat(5, 7));
    CHECK(Rat(10, -14) == Rat(-5, 7));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(5, 3) * Rat(6, 5)) == Rat(2));
    CHECK((Rat(1, 2) - Rat(2, 3)) == Rat(-1, 6));
    CHECK((Rat(8, 21) - Rat(2, 3)) == Rat(-2, 7));
    CHECK(Rat(3, 2) > Rat(4, 3));
    CHECK(Rat(0).is_zero());
    CHECK(Rat(7, 1).is_integer());
    CHECK(Rat(22, 7).str() == "22/7");
    CHECK(Rat(-3).str() == "-3");
}

TEST_CASE("division by zero and overflow throw") {
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(INT64_MAX) * Rat(3), std::overflow_error);
}

TEST_CASE("modular helpers") {
    CHECK(mod_pos(-1, 9) == 8);
    CHECK(inv_mod(2, 9) == 5);
    CHECK(inv_mod(4, 7) == 2);
    CHECK(inv_mod(3, 8) == 3);
    CHECK_THROWS(inv_mod(3, 9));
}
