#include "denom/denom.hpp"
#include "doctest.h"
#include "qpoch/qpoch.hpp"

using namespace qar;
using namespace qar::qpoch;

TEST_CASE("scale_z shifts indices") {
    PochExpr e = PochExpr::symbol(4, 0);
    CHECK(e.scale_z(0).factors() == e.factors());
    CHECK(e.scale_z(2).factors() == PochExpr::symbol(4, 2).factors());
    PochExpr f = PochExpr::symbol(4, 3) / PochExpr::symbol(4, -1);
    auto g = f.scale_z(5);
    CHECK(g.factors().at(8) == 1);
    CHECK(g.factors().at(4) == -1);
}

TEST_CASE("basic pairing rule") {
    int n = 4;  // 4n-4 = 12
    // [0]/[12] = z - 1
    LinearFactorForm f = reduce(PochExpr::symbol(n, 0) / PochExpr::symbol(n, 12));
    CHECK(f.pure());
    CHECK(f.factors == std::map<int, int>{{0, 1}});
    // [-2]/[10] = z - (-q)^2
    f = reduce(PochExpr::symbol(n, -2) / PochExpr::symbol(n, 10));
    CHECK(f.pure());
    CHECK(f.factors == std::map<int, int>{{2, 1}});
}

TEST_CASE("telescoping over a chain gap") {
    int n = 4, D = 12;
    // [0]/[2D] = (z - 1)(z - (-q)^{-D})
    LinearFactorForm f = reduce(PochExpr::symbol(n, 0) / PochExpr::symbol(n, 2 * D));
    CHECK(f.pure());
    CHECK(f.factors == std::map<int, int>{{0, 1}, {-D, 1}});
}

TEST_CASE("unpaired symbols stay in the residual") {
    LinearFactorForm f = reduce(PochExpr::symbol(4, 0));
    CHECK(!f.pure());
    CHECK(f.factors.empty());
    LinearFactorForm g = reduce(PochExpr::symbol(4, 0) / PochExpr::symbol(4, 1));
    CHECK(!g.pure());  // different chains, cannot pair
}

TEST_CASE("reduce is confluent: factor form only depends on the product") {
    int n = 5;
    PochExpr a = a_closed(1, 1, n) * a_closed(2, 3, n);
    PochExpr b = a_closed(2, 3, n) * a_closed(1, 1, n);
    CHECK(reduce(a).factors == reduce(b).factors);
    CHECK(reduce(a).residual == reduce(b).residual);
}

TEST_CASE("equiv basics") {
    PochExpr e = a_closed(1, 1, 4);
    CHECK(equiv(e, e));
    CHECK(!equiv(e, e * PochExpr::symbol(4, 0)));
}

TEST_CASE("closed forms: spot values") {
    // a_{1,1} at n=4: [0][8][4][12] / ([2][6]^2[10])
    PochExpr e = a_closed(1, 1, 4);
    std::map<int, int> want{{0, 1}, {8, 1}, {4, 1}, {12, 1}, {2, -1}, {6, -2}, {10, -1}};
    CHECK(e.factors() == want);
    // spin clause: a_{1,n} = [n-2][3n-2] / ([n][3n-4])
    PochExpr s = a_closed(1, 4, 4);
    std::map<int, int> wants{{2, 1}, {10, 1}, {4, -1}, {8, -1}};
    CHECK(s.factors() == wants);
    CHECK(a_closed(4, 1, 4).factors() == wants);
    CHECK_THROWS_AS(a_closed(3, 4, 4), Error);   // spin-spin
    CHECK_THROWS_AS(a_closed(1, 1, 3), Error);   // rank
}

TEST_CASE("recursive equals closed for the base cases") {
    for (int n : {4, 5, 6}) {
        CHECK(a_recursive(1, 1, n).factors() == a_closed(1, 1, n).factors());
        CHECK(a_recursive(1, n, n).factors() == a_closed(1, n, n).factors());
        CHECK(a_recursive(n, 1, n).factors() == a_closed(n, 1, n).factors());
    }
}

TEST_CASE("spin recursion unfolds: a_{n,2} = a_{n,1}(-q^{-1}z) a_{n,1}((-q)z)") {
    int n = 5;
    PochExpr lhs = a_recursive(n, 2, n);
    PochExpr rhs = a_recursive(n, 1, n).scale_z(-1) * a_recursive(n, 1, n).scale_z(1);
    CHECK(lhs.factors() == rhs.factors());
}

TEST_CASE("recursion agrees with the closed form modulo units, n <= 9") {
    for (int n = 4; n <= 9; ++n) {
        for (int k = 1; k <= n - 2; ++k) {
            CHECK(equiv(a_recursive(k, n, n), a_closed(k, n, n)));
            CHECK(equiv(a_recursive(k, n - 1, n), a_closed(k, n - 1, n)));
            for (int l = 1; l <= n - 2; ++l) CHECK(equiv(a_recursive(k, l, n), a_closed(k, l, n)));
        }
    }
}

TEST_CASE("a(z) a*(q^{-2n+2} z) reduces to the d/d functional form") {
    // reduce(a_{k,l}(z) * a_{k*,l}(q^{-2n+2} z)) must match the signed factor
    // multiset of d_{k,l}(z) / d_{k*,l}(q^{2n-2} z^{-1}).
    for (int n = 4; n <= 8; ++n) {
        for (int k = 1; k <= n - 2; ++k)
            for (int l = 1; l <= n - 2; ++l) {
                int kstar = k;  // k <= n-2 is fixed by the involution
                LinearFactorForm lhs =
                    reduce(a_closed(k, l, n) * a_closed(kstar, l, n).scale_z(-(2 * n - 2)));
                CHECK(lhs.pure());
                std::map<int, int> want;
                for (auto& [s, m] : qar::denom::denom_D(k, l, n).exps) want[s] += m;
                for (auto& [s, m] : qar::denom::denom_D(kstar, l, n).exps) want[2 * n - 2 - s] -= m;
                for (auto it = want.begin(); it != want.end();)
                    it = (it->second == 0) ? want.erase(it) : std::next(it);
                CHECK(lhs.factors == want);
            }
    }
}

TEST_CASE("symbol index guard") {
    PochExpr e = PochExpr::symbol(4, 0);
    CHECK_THROWS_AS(e.scale_z(100), Error);  // beyond the 8n bound
    CHECK_THROWS_AS(PochExpr::symbol(4, 33), Error);
}
