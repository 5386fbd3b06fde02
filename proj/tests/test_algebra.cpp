#include <random>

#include "algebra/sparse.hpp"
#include "doctest.h"

using namespace qar;
using namespace qar::alg;

namespace {

std::mt19937 rng(20240811);

Laurent random_laurent(int max_deg = 3) {
    std::uniform_int_distribution<int> expd(-max_deg, max_deg);
    std::uniform_int_distribution<int> coeffd(-4, 4);
    std::uniform_int_distribution<int> terms(1, 3);
    Laurent r;
    for (int t = terms(rng); t > 0; --t) r += Laurent::monomial(coeffd(rng), expd(rng));
    return r;
}

RatFunc random_ratfunc() {
    Laurent d;
    while (d.is_zero()) d = random_laurent();
    return RatFunc(random_laurent(), d);
}

}  // namespace

TEST_CASE("laurent basics") {
    Laurent q = Laurent::q();
    CHECK((q * q - Laurent(1)).str() == "q^2 - 1");
    CHECK(Laurent::qint(3) == Laurent::q(2) + Laurent(1) + Laurent::q(-2));
    CHECK(Laurent::qint(-2) == -(Laurent::q(1) + Laurent::q(-1)));
    CHECK(Laurent::neg_q_pow(3) == Laurent::monomial(-1, 3));
    CHECK(Laurent::neg_q_pow(4) == Laurent::q(4));
    Laurent z;
    CHECK(z.is_zero());
    CHECK((z + q) == q);
    CHECK(q.eval(Rat(2, 3)) == Rat(2, 3));
    CHECK((q + Laurent::q(-1)).eval(2) == Rat(5, 2));
}

TEST_CASE("laurent gcd and exact division") {
    Laurent q = Laurent::q();
    Laurent a = (q * q - Laurent(1));          // (q-1)(q+1)
    Laurent b = (q - Laurent(1)) * Laurent::q(2);  // q^2(q-1)
    Laurent g = gcd(a, b);
    CHECK(g == q - Laurent(1));
    CHECK(exact_div(a, g) == q + Laurent(1));
    CHECK_THROWS_AS(exact_div(q + Laurent(1), q - Laurent(1)), Error);
}

TEST_CASE("ratfunc arithmetic: (q^2-1)/(q-1) = q+1") {
    RatFunc f(Laurent::q(2) - Laurent(1), Laurent::q() - Laurent(1));
    CHECK(f == RatFunc(Laurent::q() + Laurent(1)));
    CHECK(f * RatFunc(1) == f);
}

TEST_CASE("ratfunc f/f = 1 and division by zero") {
    for (int i = 0; i < 20; ++i) {
        RatFunc f = random_ratfunc();
        if (f.is_zero()) continue;
        CHECK((f / f).is_one());
    }
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(), Error);
    CHECK_THROWS_AS(RatFunc(Laurent(1), Laurent()), Error);
}

TEST_CASE("ratfunc field axioms on random inputs") {
    for (int i = 0; i < 1000; ++i) {
        RatFunc a = random_ratfunc(), b = random_ratfunc(), c = random_ratfunc();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (b + c) == (a + b) + c);
        CHECK(a + b == b + a);
        CHECK(a - a == RatFunc());
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("reduction is idempotent / canonical") {
    for (int i = 0; i < 200; ++i) {
        RatFunc a = random_ratfunc();
        RatFunc again(a.num(), a.den());
        CHECK(a == again);
        if (!a.is_zero()) {
            CHECK(a.den().low() == 0);
            CHECK(a.den().trailing() == 1);
        }
    }
}

TEST_CASE("zpoly expand and re-factor (z-q^2)(z-q^6)") {
    ZPoly p = ZPoly::z_minus_neg_q_pow(2) * ZPoly::z_minus_neg_q_pow(6);
    CHECK(p.deg() == 2);
    auto f = factor_neg_q_powers(p, 1, 16);
    CHECK(f.complete);
    CHECK(f.zpower == 0);
    std::map<int, int> want{{2, 1}, {6, 1}};
    CHECK(f.exps == want);
}

TEST_CASE("zpoly gcd/lcm") {
    ZPoly a = ZPoly::z_minus_neg_q_pow(2);
    ZPoly b = ZPoly::z_minus_neg_q_pow(6);
    CHECK(gcd(a * b, b) == b);
    CHECK(lcm(a, b) == a * b);
    ZRat r(ZPoly(1), a);
    ZRat s(ZPoly(1), b);
    ZRat sum = r + s;
    CHECK(sum.den() == a * b);
    CHECK((r * r.inv()).is_one());
}

TEST_CASE("zrat reduction keeps denominator monic") {
    ZPoly num = ZPoly::z(2) * ZPoly(RatFunc::q(3));
    ZPoly den = ZPoly::z(1) * ZPoly(RatFunc(Laurent::q() + Laurent(1)));
    ZRat f(num, den);
    CHECK(f.den().is_monic());
    CHECK(f == ZRat(ZPoly::z(1) * ZPoly(RatFunc(Laurent::q(3), Laurent::q() + Laurent(1)))));
}

TEST_CASE("nullspace: identity and zero matrix") {
    SparseMat<RatFunc> id = SparseMat<RatFunc>::identity(2);
    CHECK(nullspace(id).empty());
    SparseMat<RatFunc> zero(3, 3);
    CHECK(nullspace(zero).size() == 3);
}

TEST_CASE("nullspace: 6x6 with a known 2-dim kernel over Q(q)") {
    // rows constructed as combinations of 4 independent rows -> rank 4
    std::mt19937 gen(7);
    SparseMat<RatFunc> m(6, 6);
    std::vector<std::vector<RatFunc>> base(4, std::vector<RatFunc>(6));
    auto rnd = [&]() {
        std::uniform_int_distribution<int> d(-3, 3);
        return RatFunc(Laurent::monomial(d(gen), std::abs(d(gen))));
    };
    for (auto& row : base)
        for (auto& x : row) x = rnd();
    for (int r = 0; r < 6; ++r) {
        std::vector<RatFunc> row(6);
        if (r < 4) {
            row = base[r];
        } else {
            for (int k = 0; k < 4; ++k) {
                RatFunc c = rnd();
                for (int j = 0; j < 6; ++j) row[j] += c * base[k][j];
            }
        }
        for (int j = 0; j < 6; ++j) m.set(r, j, row[j]);
    }
    auto ker = nullspace(m);
    REQUIRE(ker.size() == 2);
    for (auto& v : ker) {
        auto mv = m.apply(v);
        for (auto& x : mv) CHECK(x.is_zero());
    }
}

TEST_CASE("rank + nullity = column count") {
    std::mt19937 gen(99);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        SparseMat<RatFunc> m(5, 7);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 7; ++c)
                if (d(gen) > 0) m.set(r, c, RatFunc(Laurent::monomial(d(gen), 1)));
        auto ker = nullspace(m);
        RowEchelon<RatFunc> ech(7);
        for (int r = 0; r < 5; ++r) {
            std::vector<RatFunc> row(7);
            for (auto& [c, v] : m.row(r)) row[c] = v;
            ech.insert(std::move(row));
        }
        CHECK(ech.rank() + static_cast<int>(ker.size()) == 7);
    }
}
