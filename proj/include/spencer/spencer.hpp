#pragma once

#include "spencer/grading.hpp"

namespace spencer {

/// Basis element of C^{k,s} = g_{k-s} ox Lambda^s(g'_{-1}): a coefficient
/// basis index and an exterior monomial over the dual of g_{-1}.
struct CochainRef {
    int coef;
    MIdx J;
};

struct CochainSpace {
    int k = 0, s = 0;
    std::vector<CochainRef> basis;
    std::vector<Par> par;
    std::vector<Weight> weight;
    SDim sdim() const;
};

struct CohomologyClass {
    Par parity;
    Weight weight;
    Vec rep;  // representative cocycle in C^{k,s} coordinates
};

struct CohomologyReport {
    int k = 0, s = 0;
    SDim sdim;
    SDim cochain_sdim;
    std::vector<CohomologyClass> classes;
};

/// Spencer bicomplex of a depth-1 graded algebra: C^{k,s} with the
/// Chevalley-Eilenberg differential of the abelian g_{-1}, coefficients in
/// the whole graded algebra. Convention (see SIGNS.md):
///   d(m ox w) = sum_i [m, e_i] ox (e'_i ^ w).
class SpencerComplex {
  public:
    explicit SpencerComplex(const GradedAlgebra& g);

    const GradedAlgebra& graded() const { return *g_; }
    CochainSpace cochains(int k, int s) const;

    /// Full matrix of d: C^{k,s} -> C^{k,s+1}.
    ExactMatrix differential(int k, int s) const;

    /// H^{k,s} with deterministic representatives (kernel vectors reduced
    /// against the image by the fixed pivot rule), blockwise per weight.
    CohomologyReport cohomology(int k, int s) const;

    /// Action of a degree-0 element on cochains:
    ///   x.(m ox w) = [x,m] ox w + (-1)^{p(x)p(m)} m ox (x.w),
    /// with the coadjoint derivation action on Lambda(g'_{-1}).
    ExactMatrix g0_action(const Vec& x, int k, int s) const;

    /// d^2 = 0 at the given bidegree (hard assertion helper).
    bool check_d_squared(int k, int s) const;
    /// the action of every g_0 basis element commutes with d at (k,s)
    bool check_equivariance(int k, int s) const;

    /// Structure functions of orders 1..k_max: the H^{k,2} reports.
    std::vector<CohomologyReport> structure_functions(int k_max) const;

  private:
    const GradedAlgebra* g_;
    SuperSpace dual_minus1_;
    bool weighted_;

    int coef_dim(int k, int s) const;  // dim g_{k-s}, 0 beyond the cutoff
};

}  // namespace spencer
