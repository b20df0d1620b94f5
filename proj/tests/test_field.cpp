#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spencer/matrix.hpp"

using namespace spencer;

namespace {

ExactMatrix from_ints(const std::vector<std::vector<int>>& rows) {
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[0].size(); ++j) m.at(int(i), int(j)) = Scalar(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rational scalar canonical form") {
    Scalar a(2, 6);
    CHECK(a == Scalar(1, 3));
    CHECK((a + a + a).is_one());
    CHECK((a / a).is_one());
    CHECK((a - a).is_zero());
    CHECK(a.str() == "1/3");
    CHECK(Scalar(-4, 8).str() == "-1/2");
}

TEST_CASE("rational function field in a") {
    Scalar al = Scalar::alpha();
    // (a^2 + a)/1 at a = 2 -> 6
    Scalar p = al * al + al;
    CHECK(p.eval_alpha(Rat(2)) == Scalar(6));
    // 1/a at a = 0 -> pole
    Scalar inv = Scalar(1) / al;
    CHECK_THROWS_AS(inv.eval_alpha(Rat(0)), PoleAtAlpha);
    // -4/a - 1 at a = 2 -> -3
    Scalar w = Scalar(-4) / al - Scalar(1);
    CHECK(w.eval_alpha(Rat(2)) == Scalar(-3));
    // field axioms: x/x = 1 for a nontrivial rational function
    Scalar x = (al * al - Scalar(1)) / (al + Scalar(7));
    CHECK((x / x).is_one());
    // canonical form reduces common polynomial factors
    Scalar y = (al * al - Scalar(1)) / (al - Scalar(1));  // = a + 1
    CHECK(y == al + Scalar(1));
    CHECK(y.str() == "a + 1");
    // denominators stay monic
    Scalar z = Scalar(1) / (Scalar(2) * al + Scalar(2));
    CHECK(z.den().leading() == Rat(1));
}

TEST_CASE("rref identity and zero") {
    RrefResult r = rref(ExactMatrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
    RrefResult z = rref(ExactMatrix(2, 4));
    CHECK(z.rank == 0);
    CHECK(z.pivots.empty());
}

TEST_CASE("rref rank-1 example by hand elimination") {
    ExactMatrix m = from_ints({{1, 2}, {2, 4}});
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced.at(0, 0) == Scalar(1));
    CHECK(r.reduced.at(0, 1) == Scalar(2));
    CHECK(r.reduced.at(1, 0).is_zero());
    CHECK(r.reduced.at(1, 1).is_zero());
}

TEST_CASE("rref is idempotent and matches the serial reference") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coin(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        ExactMatrix m(5, 7);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 7; ++j) m.at(i, j) = Scalar(coin(rng));
        RrefResult a = rref(m);
        RrefResult b = rref_serial(m);
        CHECK(a.reduced == b.reduced);
        CHECK(a.pivots == b.pivots);
        RrefResult again = rref(a.reduced);
        CHECK(again.reduced == a.reduced);
    }
}

TEST_CASE("rank-nullity on random 4x4 rational matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        ExactMatrix m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = Scalar(num(rng), den(rng));
        auto ker = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(ker.size()) == 4);
        for (const Vec& v : ker) CHECK(vec_is_zero(m.apply(v)));
    }
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(ExactMatrix::identity(4)).empty());
    auto z = kernel_basis(ExactMatrix(2, 3));
    REQUIRE(z.size() == 3);
    // [[1,1,0],[0,0,1]] -> span{(1,-1,0)}
    auto k = kernel_basis(from_ints({{1, 1, 0}, {0, 0, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * Scalar(-1) == k[0][1]);
    CHECK(k[0][2].is_zero());
}

TEST_CASE("subspace intersection") {
    // a == b
    std::vector<Vec> a = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
    CHECK(intersect(a, a, 2).size() == 2);
    // complementary lines
    std::vector<Vec> l1 = {{Scalar(1), Scalar(0)}};
    std::vector<Vec> l2 = {{Scalar(0), Scalar(1)}};
    CHECK(intersect(l1, l2, 2).empty());
    // two planes in Q^3 in general position meet in a line
    std::vector<Vec> p1 = {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}};
    std::vector<Vec> p2 = {{Scalar(0), Scalar(1), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(3)}};
    auto line = intersect(p1, p2, 3);
    REQUIRE(line.size() == 1);
    // membership in both spans
    CHECK(solve_in_span(p1, line[0]));
    CHECK(solve_in_span(p2, line[0]));
}

TEST_CASE("grassmann dimension formula on random subspaces") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coin(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        const int ambient = 6;
        auto sample = [&](int k) {
            std::vector<Vec> v;
            for (int i = 0; i < k; ++i) {
                Vec x(ambient);
                for (int j = 0; j < ambient; ++j) x[j] = Scalar(coin(rng));
                v.push_back(std::move(x));
            }
            return v;
        };
        auto a = sample(3), b = sample(4);
        SpanBuilder sa(ambient), sb(ambient), sum(ambient);
        for (const auto& v : a) {
            sa.add(v);
            sum.add(v);
        }
        for (const auto& v : b) {
            sb.add(v);
            sum.add(v);
        }
        auto cap = intersect(a, b, ambient);
        CHECK(static_cast<int>(cap.size()) == sa.dim() + sb.dim() - sum.dim());
        for (const auto& v : cap) {
            CHECK(sa.contains(v));
            CHECK(sb.contains(v));
        }
    }
}

TEST_CASE("solve_in_span expresses and rejects") {
    std::vector<Vec> basis = {{Scalar(1), Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)}};
    Vec v = {Scalar(2), Scalar(5), Scalar(1)};
    Vec coords;
    REQUIRE(solve_in_span(basis, v, &coords));
    CHECK(coords[0] == Scalar(2));
    CHECK(coords[1] == Scalar(1));
    Vec w = {Scalar(0), Scalar(0), Scalar(5)};
    CHECK_FALSE(solve_in_span(basis, w));
}

TEST_CASE("matrices over Q(a) eliminate exactly") {
    Scalar al = Scalar::alpha();
    ExactMatrix m(2, 3);
    m.at(0, 0) = al;
    m.at(0, 1) = Scalar(1);
    m.at(0, 2) = Scalar(0);
    m.at(1, 0) = Scalar(1);
    m.at(1, 1) = al.inv();
    m.at(1, 2) = Scalar(0);
    // second row is a/1 times... rows proportional: rank 1
    CHECK(rank(m) == 1);
    auto ker = kernel_basis(m);
    CHECK(ker.size() == 2);
    for (const Vec& v : ker) CHECK(vec_is_zero(m.apply(v)));
}
