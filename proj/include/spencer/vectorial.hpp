#pragma once

#include "spencer/grading.hpp"

namespace spencer {

/// Vectorial Lie superalgebras in the standard grading (every coordinate of
/// degree 1), materialized through max_degree. The polynomial part is
/// truncated; purely odd cases are finite and come out whole.
///
/// vect(a|b): all superderivations of K[x] ox Lambda(xi).
/// svect(a|b): divergence-free fields.
GradedAlgebra build_vect(int a, int b, int max_degree, bool special);

/// h(2a|b): Hamiltonian functions for the split even form
/// sum dp_i dq_i + hyperbolic pairing on the xi's; functions modulo
/// constants with the Poisson bracket, X_f of parity p(f), degree |f| - 2.
/// With h_odd set (a = 0 only), the top component (degree b-2) is removed.
GradedAlgebra build_h(int a, int b, int max_degree, bool h_odd);

/// le(n) / sle(n): functions on (x_1..x_n | xi_1..xi_n) modulo constants
/// with the odd (Buttin) bracket, Le_f of parity p(f)+1, degree |f| - 2;
/// sle is the kernel of the odd Laplacian sum d^2/dx_i dxi_i.
GradedAlgebra build_le(int n, int max_degree, bool special);

}  // namespace spencer
