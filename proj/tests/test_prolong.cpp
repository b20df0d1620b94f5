#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spencer/prolong.hpp"
#include "spencer/vectorial.hpp"

using namespace spencer;

namespace {

LieSuperAlgebra make_o(int n) {
    LieSuperAlgebra g = build_osp_sy(n, 0);
    return g;
}

}  // namespace

TEST_CASE("(C^2, gl(2)) first prolong is V ox S^2 V'") {
    LieSuperAlgebra gl2 = build_gl(2, 0);
    Module v = defining_module(gl2);
    GradedAlgebra g = cartan_prolong(gl2, v, 2);
    CHECK(g.sdim(1) == SDim{6, 0});
    // intersection characterization agrees
    CHECK(prolong_step_intersection_dim(g, 1) == 6);
    CHECK(prolong_step_intersection_dim(g, 2) == g.dim(2));
}

TEST_CASE("(C^n, o(n)) has vanishing first prolong") {
    for (int n = 3; n <= 5; ++n) {
        LieSuperAlgebra o = make_o(n);
        Module v = defining_module(o);
        GradedAlgebra g = cartan_prolong(o, v, 2);
        CHECK(g.dim(1) == 0);
        CHECK(g.stabilized);
        CHECK(prolong_step_intersection_dim(g, 1) == 0);
    }
}

TEST_CASE("(Pi(V), osp(Pi V)) stabilizes immediately") {
    // V = C^{2|2} with the even symmetric form on the shifted space:
    // osp^{sy}(2|2) acting on Pi(defining)
    LieSuperAlgebra osp = build_osp_sy(2, 2);
    Module v = pi_module(defining_module(osp));
    CHECK(v.is_representation());
    GradedAlgebra g = cartan_prolong(osp, v, 2);
    CHECK(g.dim(1) == 0);
    CHECK(g.stabilized);
}

TEST_CASE("(id, cosp(m-2|2n)) reconstructs osp(m|2n)") {
    const int m = 5, two_n = 2;
    LieSuperAlgebra osp_small = build_osp_sy(m - 2, two_n);
    LieSuperAlgebra cosp = build_central_extension(osp_small, "z");
    Module v = defining_module(cosp);
    GradedAlgebra g = cartan_prolong(cosp, v, 3);
    CHECK(g.stabilized);
    CHECK(g.dim(2) == 0);
    CHECK(g.sdim(1) == g.sdim(-1));  // g_1 ~ g'_{-1}
    SDim total;
    for (int d = -1; d <= 1; ++d) {
        total.even += g.sdim(d).even;
        total.odd += g.sdim(d).odd;
    }
    CHECK(total == build_osp_sy(m, two_n).sdim());
}

TEST_CASE("(id, spe(n-1)) stops at degree 0 while (id, cpe(n-1)) gives pe(n)") {
    const int n = 4;  // spe(4)-family cases
    LieSuperAlgebra spe = build_spe(n);
    Module v = defining_module(spe);
    GradedAlgebra g = cartan_prolong(spe, v, 2);
    CHECK(g.dim(1) == 0);

    LieSuperAlgebra pe = build_pe_sy(n);
    Module vp = defining_module(pe);
    GradedAlgebra gp = cartan_prolong(pe, vp, 2);
    CHECK(gp.dim(1) == 0);

    LieSuperAlgebra cpe = build_central_extension(build_pe_sy(n), "z");
    Module vc = defining_module(cpe);
    GradedAlgebra gc = cartan_prolong(cpe, vc, 3);
    CHECK(gc.stabilized);
    CHECK(gc.dim(2) == 0);
    SDim total;
    for (int d = -1; d <= 1; ++d) {
        total.even += gc.sdim(d).even;
        total.odd += gc.sdim(d).odd;
    }
    CHECK(total == build_pe_sy(n + 1).sdim());

    // <tau + n z> +) spe(n): prolong reconstructs spe(n+1)
    LieSuperAlgebra ts = build_tau_spe(n);
    Module vt = defining_module(ts);
    GradedAlgebra gt = cartan_prolong(ts, vt, 3);
    CHECK(gt.stabilized);
    SDim tot2;
    for (int d = -1; d <= 1; ++d) {
        tot2.even += gt.sdim(d).even;
        tot2.odd += gt.sdim(d).odd;
    }
    CHECK(tot2 == build_spe(n + 1).sdim());
}

TEST_CASE("vect(0|3) standard grading dimensions") {
    GradedAlgebra g = build_vect(0, 3, 6, false);
    CHECK(g.stabilized);
    SDim total;
    for (int d = -1; d <= g.cutoff; ++d) {
        total.even += g.sdim(d).even;
        total.odd += g.sdim(d).odd;
    }
    CHECK(total == SDim{12, 12});
    CHECK(g.sdim(-1) == SDim{0, 3});
    CHECK(g.sdim(0) == SDim{9, 0});  // gl(3)
    CHECK(g.check_grading());
}

TEST_CASE("svect(0|3) divergence-free dimensions") {
    GradedAlgebra g = build_vect(0, 3, 6, true);
    CHECK(g.sdim(-1) == SDim{0, 3});
    CHECK(g.sdim(0) == SDim{8, 0});  // sl(3)
    CHECK(g.sdim(1) == SDim{0, 6});
    CHECK(g.dim(2) == 0);
    CHECK(g.check_grading());
}

TEST_CASE("h(0|5) components match binomials") {
    GradedAlgebra g = build_h(0, 5, 6, false);
    CHECK(g.sdim(-1) == SDim{0, 5});
    CHECK(g.sdim(0) == SDim{10, 0});  // o(5)
    CHECK(g.sdim(1) == SDim{0, 10});
    CHECK(g.sdim(2) == SDim{5, 0});
    CHECK(g.sdim(3) == SDim{0, 1});
    CHECK(g.cutoff == 3);
    CHECK(g.stabilized);
    CHECK(g.check_grading());
    CHECK(!g.raising0.empty());
}

TEST_CASE("h-odd drops the top component") {
    GradedAlgebra g = build_h(0, 5, 6, true);
    CHECK(g.dim(3) == 0);
    CHECK(g.sdim(2) == SDim{5, 0});
    CHECK(g.check_grading());
}

TEST_CASE("prolong of (0|m id, o(m)) agrees with h(0|m) degreewise") {
    for (int m = 4; m <= 5; ++m) {
        GradedAlgebra direct = build_h(0, m, 6, false);
        LieSuperAlgebra z = direct.degree0();
        Module v = module_from_grading(direct, z);
        GradedAlgebra pro = cartan_prolong(z, v, m);
        for (int d = -1; d <= direct.cutoff; ++d) {
            CHECK(pro.sdim(d) == direct.sdim(d));
        }
        CHECK(pro.stabilized);
        // bracket tables agree under the identity basis map on g_{-1}:
        // both come out of the same degree-0 data, so comparing the
        // dimensions of [g_1, g_{-1}] images is a cheap faithfulness probe
        if (direct.dim(1) > 0) {
            CHECK(pro.has_table(1, -1));
        }
    }
}

TEST_CASE("prolong of vect(0|n) data agrees with the direct model") {
    for (int n = 3; n <= 4; ++n) {
        GradedAlgebra direct = build_vect(0, n, 6, false);
        LieSuperAlgebra z = direct.degree0();
        Module v = module_from_grading(direct, z);
        GradedAlgebra pro = cartan_prolong(z, v, n);
        for (int d = -1; d <= direct.cutoff; ++d) CHECK(pro.sdim(d) == direct.sdim(d));
    }
}

TEST_CASE("prolong of le/sle data agrees with the direct models") {
    for (int n = 2; n <= 3; ++n) {
        GradedAlgebra direct = build_le(n, 3, false);
        LieSuperAlgebra z = direct.degree0();
        Module v = module_from_grading(direct, z);
        GradedAlgebra pro = cartan_prolong(z, v, 3);
        for (int d = -1; d <= 3; ++d) CHECK(pro.sdim(d) == direct.sdim(d));
    }
    GradedAlgebra sle3 = build_le(3, 4, true);
    LieSuperAlgebra z3 = sle3.degree0();
    Module v3 = module_from_grading(sle3, z3);
    GradedAlgebra pro3 = cartan_prolong(z3, v3, 4);
    for (int d = -1; d <= 4; ++d) CHECK(pro3.sdim(d) == sle3.sdim(d));
}

TEST_CASE("truncated h(2|2) prolong agreement") {
    GradedAlgebra direct = build_h(1, 2, 4, false);
    LieSuperAlgebra z = direct.degree0();
    Module v = module_from_grading(direct, z);
    GradedAlgebra pro = cartan_prolong(z, v, 4);
    for (int d = -1; d <= 4; ++d) CHECK(pro.sdim(d) == direct.sdim(d));
}

TEST_CASE("stabilization is monotone by construction") {
    LieSuperAlgebra o4 = make_o(4);
    Module v = defining_module(o4);
    GradedAlgebra g = cartan_prolong(o4, v, 5);
    CHECK(g.stabilized);
    CHECK(g.dim(1) == 0);
    // components beyond the first zero are never materialized: cutoff stops
    CHECK(g.cutoff == 1);
}

TEST_CASE("jacobi spot check on prolong brackets") {
    LieSuperAlgebra gl2 = build_gl(2, 0);
    Module v = defining_module(gl2);
    GradedAlgebra g = cartan_prolong(gl2, v, 3);
    // [[x,y],z] = [x,[y,z]] - [y,[x,z]] sampled on degree (1,1,-1)
    const int n1 = g.dim(1);
    REQUIRE(n1 > 0);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) {
            Vec xa(n1), xb(n1);
            xa[a] = Scalar(1);
            xb[b] = Scalar(1);
            for (int j = 0; j < g.dim(-1); ++j) {
                Vec ej(g.dim(-1));
                ej[j] = Scalar(1);
                Vec lhs = g.bracket(2, g.bracket(1, xa, 1, xb), -1, ej);
                Vec t1 = g.bracket(1, xa, 0, g.bracket(1, xb, -1, ej));
                Vec t2 = g.bracket(1, xb, 0, g.bracket(1, xa, -1, ej));
                for (int k = 0; k < g.dim(1); ++k) {
                    CHECK((lhs[k] - t1[k] + t2[k]).is_zero());
                }
            }
        }
}
