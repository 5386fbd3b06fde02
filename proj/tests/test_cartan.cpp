#include "cartan/cartan.hpp"
#include "doctest.h"

using namespace qar;
using namespace qar::cartan;

TEST_CASE("positive root counts") {
    CHECK(RootSystem(CartanType(Family::A, 2)).num_positive() == 3);
    CHECK(RootSystem(CartanType(Family::A, 7)).num_positive() == 28);
    CHECK(RootSystem(CartanType(Family::D, 4)).num_positive() == 12);
    CHECK(RootSystem(CartanType(Family::D, 7)).num_positive() == 42);
    CHECK(RootSystem(CartanType(Family::E, 6)).num_positive() == 36);
    CHECK(RootSystem(CartanType(Family::E, 7)).num_positive() == 63);
    CHECK(RootSystem(CartanType(Family::E, 8)).num_positive() == 120);
}

TEST_CASE("A2 roots and reflections") {
    RootSystem rs(CartanType(Family::A, 2));
    Root a1 = rs.simple_root(1), a2 = rs.simple_root(2);
    Root a12 = {1, 1};
    CHECK(rs.is_positive_root(a12));
    CHECK(rs.reflect(1, a2) == a12);
    CHECK(rs.apply_word({}, a1) == a1);
    // word (1,2): leftmost applied last, so s_1(s_2(alpha_1)) = alpha_2
    CHECK(rs.apply_word({1, 2}, a1) == a2);
}

TEST_CASE("invalid ranks rejected") {
    CHECK_THROWS_AS(CartanType(Family::D, 3), Error);
    CHECK_THROWS_AS(CartanType(Family::E, 9), Error);
    CHECK_THROWS_AS(CartanType(Family::A, 0), Error);
}

TEST_CASE("longest element") {
    RootSystem a1(CartanType(Family::A, 1));
    CHECK(a1.longest_element() == WeylWord{1});
    RootSystem a2(CartanType(Family::A, 2));
    CHECK(a2.longest_element().size() == 3);
    RootSystem d4(CartanType(Family::D, 4));
    CHECK(d4.longest_element().size() == 12);
}

TEST_CASE("longest element maps positives to negatives") {
    for (CartanType t : {CartanType(Family::A, 5), CartanType(Family::D, 5), CartanType(Family::E, 6)}) {
        RootSystem rs(t);
        WeylWord w0 = rs.longest_element();
        for (const Root& b : rs.positive_roots()) {
            Root img = rs.apply_word(w0, b);
            CHECK(rs.is_positive_root(negated(img)));
        }
    }
}

TEST_CASE("star involution") {
    RootSystem a2(CartanType(Family::A, 2));
    CHECK(a2.star(1) == 2);
    CHECK(a2.star(2) == 1);
    RootSystem d4(CartanType(Family::D, 4));
    for (int i = 1; i <= 4; ++i) CHECK(d4.star(i) == i);
    RootSystem d5(CartanType(Family::D, 5));  // n odd: the fork tines swap
    CHECK(d5.star(4) == 5);
    CHECK(d5.star(5) == 4);
    for (int i = 1; i <= 3; ++i) CHECK(d5.star(i) == i);
    RootSystem d6(CartanType(Family::D, 6));
    CHECK(d6.star(5) == 5);
    CHECK(d6.star(6) == 6);
    // involution + diagram automorphism
    for (CartanType t : {CartanType(Family::A, 6), CartanType(Family::D, 7), CartanType(Family::E, 6)}) {
        RootSystem rs(t);
        for (int i = 1; i <= t.rank; ++i) {
            CHECK(rs.star(rs.star(i)) == i);
            for (int j = 1; j <= t.rank; ++j)
                CHECK(rs.adjacent(i, j) == rs.adjacent(rs.star(i), rs.star(j)));
        }
    }
}

TEST_CASE("coxeter numbers") {
    CHECK(RootSystem(CartanType(Family::A, 2)).coxeter_number() == 3);
    CHECK(RootSystem(CartanType(Family::D, 4)).coxeter_number() == 6);
    CHECK(RootSystem(CartanType(Family::E, 6)).coxeter_number() == 12);
    CHECK(RootSystem(CartanType(Family::E, 7)).coxeter_number() == 18);
    CHECK(RootSystem(CartanType(Family::E, 8)).coxeter_number() == 30);
}

TEST_CASE("bilinear form") {
    RootSystem a2(CartanType(Family::A, 2));
    Root a1 = a2.simple_root(1), s2 = a2.simple_root(2);
    CHECK(a2.bilinear(a1, a1) == 2);
    CHECK(a2.bilinear(a1, s2) == -1);
    Root a12 = {1, 1};
    CHECK(a2.bilinear(a12, a1) == 1);
    for (CartanType t : {CartanType(Family::A, 4), CartanType(Family::D, 6), CartanType(Family::E, 7)}) {
        RootSystem rs(t);
        for (const Root& b : rs.positive_roots()) {
            CHECK(rs.bilinear(b, b) == 2);
            for (const Root& c : rs.positive_roots()) {
                int v = rs.bilinear(b, c);
                CHECK(v >= -2);
                CHECK(v <= 2);
                CHECK(v == rs.bilinear(c, b));
            }
        }
    }
}

TEST_CASE("reflection rejects out-of-range vertices") {
    RootSystem rs(CartanType(Family::A, 2));
    CHECK_THROWS_AS(rs.reflect(0, rs.simple_root(1)), Error);
    CHECK_THROWS_AS(rs.reflect(3, rs.simple_root(1)), Error);
    CHECK_THROWS_AS(rs.apply_word({1, 5}, rs.simple_root(1)), Error);
}
