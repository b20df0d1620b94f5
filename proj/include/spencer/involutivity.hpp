#pragma once

#include "spencer/spencer.hpp"

namespace spencer {

struct CutoffTooLow : std::runtime_error {
    explicit CutoffTooLow(const std::string& w) : std::runtime_error(w) {}
};

struct InvolutivityReport {
    std::vector<int> basis_order;          // basis indices of g_{-1} in scan order
    std::vector<std::map<int, SDim>> chain;  // g^r sdims per degree, r = 0..n
    bool cond1 = false, cond2 = false, cond3 = false;
    bool involutive = false;
    int scanned_to = 0;  // degrees examined up to this value
};

/// The super involutivity conditions, evaluated degree by degree:
///   g^r = ker ad_{a_1} cap ... cap ker ad_{a_r},
///   (1) g^n = g_{-1};
///   (2) ad_{a_r}(g^{r-1}) = g^{r-1} for even a_r;
///   (3) ad_{a_r}(g^{r-1}) = g^r for odd a_r.
/// The default basis order is: even elements of g_{-1} first, then odd.
InvolutivityReport is_involutive(const GradedAlgebra& g);

/// Table of sdim H^{k,s} over s <= s_max, k <= k_max (internal degree k,
/// cohomological degree s); the executable content of the vanishing theorem
/// for involutive algebras.
std::vector<std::vector<SDim>> vanishing_scan(const GradedAlgebra& g, int s_max, int k_max);

}  // namespace spencer
