#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spencer/liesuper.hpp"

using namespace spencer;

namespace {

SuperSpace make_space(int p, int q) {
    SuperSpace v;
    for (int i = 0; i < p; ++i) v.push("u" + std::to_string(i + 1), Par::Even);
    for (int i = 0; i < q; ++i) v.push("t" + std::to_string(i + 1), Par::Odd);
    return v;
}

}  // namespace

TEST_CASE("sdim bookkeeping for dual, shift and tensor") {
    SuperSpace v = make_space(2, 1);
    CHECK(v.sdim() == SDim{2, 1});
    CHECK(dual(v).sdim() == SDim{2, 1});
    CHECK(parity_shift(make_space(3, 0)).sdim() == SDim{0, 3});
    SDim pp = parity_shift(parity_shift(v)).sdim();
    CHECK(pp == v.sdim());
    // (1|1) ox (1|1) = 2|2 and (p|0) ox (r|0) = pr|0
    CHECK(tensor(make_space(1, 1), make_space(1, 1)).sdim() == SDim{2, 2});
    CHECK(tensor(make_space(2, 0), make_space(3, 0)).sdim() == SDim{6, 0});
    // (2|1) ox (1|2) = 4|5
    CHECK(tensor(make_space(2, 1), make_space(1, 2)).sdim() == SDim{4, 5});
}

TEST_CASE("symmetric and exterior squares") {
    CHECK(sym_power(make_space(2, 0), 2).sdim() == SDim{3, 0});
    CHECK(sym_power(make_space(0, 2), 2).sdim() == SDim{1, 0});
    CHECK(sym_power(make_space(1, 1), 2).sdim() == SDim{1, 1});
    CHECK(ext_power(make_space(2, 0), 2).sdim() == SDim{1, 0});
    CHECK(ext_power(make_space(0, 2), 2).sdim() == SDim{3, 0});
    CHECK(ext_power(make_space(1, 1), 2).sdim() == SDim{1, 1});
    // S^2(p|q) = (p(p+1)/2 + q(q-1)/2 | pq), Lambda^2 mirrored
    for (int p = 0; p <= 4; ++p) {
        for (int q = 0; q <= 4; ++q) {
            SuperSpace v = make_space(p, q);
            SDim s2 = sym_power(v, 2).sdim();
            SDim l2 = ext_power(v, 2).sdim();
            CHECK(s2 == SDim{p * (p + 1) / 2 + q * (q - 1) / 2, p * q});
            CHECK(l2 == SDim{p * (p - 1) / 2 + q * (q + 1) / 2, p * q});
            // dim S^2 + dim Lambda^2 = (dim V)^2 with the super product
            int total = (p + q) * (p + q);
            CHECK(s2.total() + l2.total() == total);
        }
    }
}

TEST_CASE("parity shift exchanges S^k and Lambda^k") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int k = 0; k <= 3; ++k) {
                SuperSpace v = make_space(p, q);
                SDim lk = ext_power(v, k).sdim();
                SDim sk = sym_power(parity_shift(v), k).sdim();
                // Lambda^k(V) = Pi^k(S^k(Pi V)): equal sdim after k shifts
                SDim expect = (k % 2 == 0) ? sk : SDim{sk.odd, sk.even};
                CHECK(lk == expect);
            }
}

TEST_CASE("koszul sign primitive") {
    // swapping two odds gives -1, even-odd swap +1
    std::vector<Par> pp = {Par::Odd, Par::Odd};
    CHECK(koszul_sign(pp, {1, 0}) == -1);
    std::vector<Par> pe = {Par::Even, Par::Odd};
    CHECK(koszul_sign(pe, {1, 0}) == 1);
    std::vector<Par> ooo = {Par::Odd, Par::Odd, Par::Odd};
    CHECK(koszul_sign(ooo, {2, 1, 0}) == -1);  // three odd transpositions
    CHECK(koszul_sign(ooo, {1, 2, 0}) == 1);   // two transpositions
}

TEST_CASE("supertranspose formula and order") {
    // even A in format (0,1): [[a,b],[c,d]] -> [[a,c],[-b,d]]
    std::vector<Par> fmt = {Par::Even, Par::Odd};
    ExactMatrix a(2, 2);
    a.at(0, 0) = Scalar(1);
    a.at(0, 1) = Scalar(2);
    a.at(1, 0) = Scalar(3);
    a.at(1, 1) = Scalar(4);
    ExactMatrix st = supertranspose(a, fmt, Par::Even);
    CHECK(st.at(0, 0) == Scalar(1));
    CHECK(st.at(0, 1) == Scalar(3));
    CHECK(st.at(1, 0) == Scalar(-2));
    CHECK(st.at(1, 1) == Scalar(4));
    // even diagonal matrix: st = ordinary transpose
    ExactMatrix d(2, 2);
    d.at(0, 0) = Scalar(5);
    d.at(1, 1) = Scalar(7);
    CHECK(supertranspose(d, fmt, Par::Even) == d);
    // st is of order 4 on mixed formats: st^4 = id for parity-homogeneous parts
    auto [ev, od] = parity_parts(a, fmt);
    ExactMatrix e4 = ev;
    for (int i = 0; i < 4; ++i) e4 = supertranspose(e4, fmt, Par::Even);
    CHECK(e4 == ev);
    ExactMatrix o4 = od;
    for (int i = 0; i < 4; ++i) o4 = supertranspose(o4, fmt, Par::Odd);
    CHECK(o4 == od);
}

TEST_CASE("supertranspose is a superalgebra antiautomorphism on gl(1|1)") {
    // (XY)^{st} = (-1)^{p(X)p(Y)} Y^{st} X^{st}, hence
    // [X,Y]^{st} = -[X^{st}, Y^{st}] for homogeneous X, Y
    LieSuperAlgebra g = build_gl(1, 1);
    const auto& fmt = g.def_format;
    for (int i = 0; i < g.dim(); ++i) {
        for (int j = 0; j < g.dim(); ++j) {
            Par pi = g.space.par[i], pj = g.space.par[j];
            auto br = [&](const ExactMatrix& x, const ExactMatrix& y, Par px, Par py) {
                ExactMatrix xy = x * y, yx = y * x;
                return (is_odd(px) && is_odd(py)) ? xy + yx : xy - yx;
            };
            ExactMatrix prod = supertranspose(g.def_mats[i] * g.def_mats[j], fmt, pi + pj);
            ExactMatrix anti = supertranspose(g.def_mats[j], fmt, pj) *
                               supertranspose(g.def_mats[i], fmt, pi);
            int s = sign_pow(pi, pj);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    CHECK(prod.at(r, c) == (s < 0 ? -anti.at(r, c) : anti.at(r, c)));
            ExactMatrix lhs = supertranspose(br(g.def_mats[i], g.def_mats[j], pi, pj), fmt, pi + pj);
            ExactMatrix rhs = br(supertranspose(g.def_mats[i], fmt, pi),
                                 supertranspose(g.def_mats[j], fmt, pj), pi, pj);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) CHECK(lhs.at(r, c) == -rhs.at(r, c));
        }
    }
}

TEST_CASE("dual of tensor vs tensor of duals") {
    SuperSpace v = make_space(1, 1), w = make_space(2, 0);
    SuperSpace a = dual(tensor(v, w));
    SuperSpace b = tensor(dual(v), dual(w));
    REQUIRE(a.dim() == b.dim());
    for (int i = 0; i < a.dim(); ++i) CHECK(a.par[i] == b.par[i]);
}

TEST_CASE("wedge and sym insertion") {
    SuperSpace v = make_space(1, 2);  // u1, t1, t2
    // odd square survives in Lambda
    auto sq = wedge_insert(v, 1, {1});
    REQUIRE(sq.has_value());
    CHECK(sq->first == 1);
    CHECK(sq->second == MIdx{1, 1});
    // even square dies in Lambda
    CHECK_FALSE(wedge_insert(v, 0, {0}).has_value());
    // odd square dies in S
    CHECK_FALSE(sym_insert(v, 1, {1}).has_value());
    // odd-odd swap in Lambda is symmetric: t2 ^ t1 = + t1 ^ t2
    auto sw = wedge_insert(v, 2, {1});
    REQUIRE(sw.has_value());
    CHECK(sw->second == MIdx{1, 2});
    CHECK(sw->first == 1);
    // even-even swap in Lambda antisymmetric; need a second even slot
    SuperSpace w = make_space(2, 0);
    auto ee = wedge_insert(w, 1, {0});
    REQUIRE(ee.has_value());
    CHECK(ee->first == -1);
}
