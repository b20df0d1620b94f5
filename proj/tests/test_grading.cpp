#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spencer/grading.hpp"

using namespace spencer;

TEST_CASE("grassmannian grading of gl(p+q)") {
    // h = diag(1_p, 0_q): g_{-1} = Hom(C^p, C^q) of dim pq
    const int p = 2, q = 3;
    LieSuperAlgebra g = build_gl(p + q, 0);
    Vec h(g.dim());
    const int N = p + q;
    for (int i = 0; i < p; ++i) h[i * N + i] = Scalar(1);
    GradedAlgebra gr = grade_by_element(g, h);
    CHECK(gr.dim(-1) == p * q);
    CHECK(gr.dim(0) == p * p + q * q);
    CHECK(gr.dim(1) == p * q);
    CHECK(gr.check_grading());
    CHECK(gr.action_kernel().empty());
    LieSuperAlgebra z = gr.degree0();
    CHECK(z.check_jacobi().empty());
}

TEST_CASE("central element gives the trivial grading") {
    LieSuperAlgebra g = build_gl(2, 1);
    Vec h(g.dim());  // zero vector is central
    GradedAlgebra gr = grade_by_element(g, h);
    CHECK(gr.dim(0) == g.dim());
    CHECK(gr.dim(-1) == 0);
}

TEST_CASE("non-diagonalizable grading element is rejected") {
    LieSuperAlgebra g = build_gl(2, 0);
    Vec h(g.dim());
    h[1] = Scalar(1);  // E12 is nilpotent
    CHECK_THROWS_AS(grade_by_element(g, h), NotDiagonalizable);
}

TEST_CASE("osp(m|2n) grading by the first orthogonal coweight") {
    // g_0 = cosp(m-2|2n), g_{-1} = id
    const int m = 5, two_n = 2;
    LieSuperAlgebra g = build_osp_sy(m, two_n);
    GradedAlgebra gr = grade_by_element(g, g.cartan[0]);
    CHECK(gr.sdim(-1) == SDim{m - 2, two_n});
    LieSuperAlgebra osp_small = build_osp_sy(m - 2, two_n);
    CHECK(gr.dim(0) == osp_small.dim() + 1);
    CHECK(gr.sdim(1) == gr.sdim(-1));
    CHECK(gr.check_grading());
    CHECK(gr.action_kernel().empty());
    LieSuperAlgebra z = gr.degree0();
    Module v = module_from_grading(gr, z);
    CHECK(v.is_representation());
}

TEST_CASE("psq(3) block grading exposes the queer module") {
    LieSuperAlgebra g = build_psq(3);
    // grading element: image of diag(1,0,0), i.e. (2 HA1 + HA2)/3
    Vec h(g.dim());
    for (int i = 0; i < g.dim(); ++i) {
        if (g.space.labels[i] == "HA1") h[i] = Scalar(2, 3);
        if (g.space.labels[i] == "HA2") h[i] = Scalar(1, 3);
    }
    GradedAlgebra gr = grade_by_element(g, h);
    CHECK(gr.sdim(-1) == SDim{2, 2});
    CHECK(gr.sdim(1) == SDim{2, 2});
    CHECK(gr.sdim(0) == SDim{4, 4});
    CHECK(gr.check_grading());
}

TEST_CASE("degree0 extraction carries Borel data") {
    LieSuperAlgebra g = build_osp_sy(6, 2);
    GradedAlgebra gr = grade_by_element(g, g.cartan[0]);
    LieSuperAlgebra z = gr.degree0();
    CHECK(!z.cartan.empty());
    CHECK(!z.raising.empty());
    CHECK(z.check_jacobi().empty());
}
