#pragma once

#include "spencer/grading.hpp"

namespace spencer {

/// Cartan prolongation of (g_{-1}, g_0), with g_0 acting on g_{-1} through
/// the given module. Components g_i for i >= 1 are cut out of
/// Hom(g_{-1}, g_{i-1}) by the supersymmetry condition
///   X(v)(w) = (-1)^{p(v)p(w)} X(w)(v),
/// solved one weight block at a time. Brackets among all materialized
/// degrees are filled in (degree sums beyond the cutoff are omitted).
GradedAlgebra cartan_prolong(const LieSuperAlgebra& g0, const Module& g_minus1, int max_degree);

/// One prolongation step: basis of g_{i} as Hom(g_{-1}, g_{i-1}) matrices,
/// given the chain materialized in `g` up to degree i-1. Returns the new
/// component (possibly empty) as rows of Hom coordinates.
std::vector<Vec> prolong_step(const GradedAlgebra& g, int i);

/// Independent characterization (g_0 ox S^i g'_{-1}) cap (g_{-1} ox S^{i+1} g'_{-1})
/// materialized inside g_{-1} ox (g'_{-1})^{ox(i+1)}; used as a cross-check
/// of prolong_step on small instances. Returns the intersection dimension.
int prolong_step_intersection_dim(const GradedAlgebra& g, int i);

}  // namespace spencer
