#pragma once

#include <map>
#include <tuple>

#include "spencer/superspace.hpp"

namespace spencer {

struct BadParams : std::runtime_error {
    explicit BadParams(const std::string& w) : std::runtime_error(w) {}
};
struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& w) : std::runtime_error(w) {}
};

using SVec = std::vector<std::pair<int, Scalar>>;  // sparse coordinate vector

Vec densify(const SVec& s, int dim);
SVec sparsify(const Vec& v);

/// Finite dimensional Lie superalgebra given by structure constants on a
/// parity-tagged (and, for all shipped constructors, weight-aligned) basis,
/// together with Cartan and Borel data used for weight reporting.
struct LieSuperAlgebra {
    SuperSpace space;
    std::vector<std::vector<SVec>> sc;  // sc[i][j] = [e_i, e_j]

    std::vector<Vec> cartan;    // commuting diagonalizable even elements
    std::vector<Vec> raising;   // positive root vectors
    std::vector<std::string> weight_labels;  // functional names, e.g. e1,e2,d1

    // matrix realization of the defining representation, when one exists
    std::vector<ExactMatrix> def_mats;
    std::vector<Par> def_format;

    int dim() const { return space.dim(); }
    SDim sdim() const { return space.sdim(); }

    Vec bracket(const Vec& x, const Vec& y) const;
    Vec bracket_basis(int i, int j) const { return densify(sc[i][j], dim()); }

    /// Exhaustive super Jacobi check over basis triples; empty result
    /// certifies the structure constants.
    std::vector<std::tuple<int, int, int>> check_jacobi() const;
    bool check_anticommutativity() const;

    LieSuperAlgebra eval_alpha(const Rat& x) const;
};

/// g0-module given by action matrices per algebra basis element.
struct Module {
    const LieSuperAlgebra* alg = nullptr;
    SuperSpace space;
    std::vector<ExactMatrix> act;  // act[i] = rho(e_i)

    ExactMatrix action_of(const Vec& x) const;  // rho(sum x_i e_i)
    /// rho([x,y]) == rho(x)rho(y) - (-1)^{p(x)p(y)}rho(y)rho(x) on basis pairs
    bool is_representation() const;
};

Module defining_module(const LieSuperAlgebra& g);
Module dual_module(const Module& m);
Module pi_module(const Module& m);
Module tensor_module(const Module& a, const Module& b);
Module sym2_module(const Module& m);
Module ext2_module(const Module& m);
/// Submodule spanned by the given ambient vectors (must be action stable;
/// checked). Basis: rref representatives of the span.
Module sub_module(const Module& m, const std::vector<Vec>& span_vectors,
                  const std::string& label_prefix);

// ---------------------------------------------------------------- series

/// Matrix-realized classical series. Bases are weight vectors for the
/// diagonal Cartan subalgebra; raising operators sit strictly above the
/// diagonal in the chosen realization.
LieSuperAlgebra build_gl(int p, int q);
LieSuperAlgebra build_sl(int p, int q);
LieSuperAlgebra build_psl(int n);
LieSuperAlgebra build_q(int n);
LieSuperAlgebra build_sq(int n);
LieSuperAlgebra build_psq(int n);

enum class FormKind { OspSy, OspSk, PeSy, PeSk };

/// aut(B) = {X : X^{st} B + (-1)^{p(X)p(B)} B X = 0} for the canonical
/// form of the given kind; osp uses the split (antidiagonal) symmetric
/// block so the Cartan is diagonal over Q.
LieSuperAlgebra build_form_algebra(FormKind kind, int m, int two_n);

LieSuperAlgebra build_osp_sy(int m, int two_n);
LieSuperAlgebra build_osp_sk(int m, int two_n);
LieSuperAlgebra build_pe_sy(int n);
LieSuperAlgebra build_pe_sk(int n);
LieSuperAlgebra build_spe(int n);

/// Trivial central extension realized inside gl(V): the span of g and the
/// identity matrix of the defining representation.
LieSuperAlgebra build_central_extension(const LieSuperAlgebra& g, const std::string& zlabel);

/// <tau + (n-1) z> +) spe(n-1), tau = diag(1_{n-1}, -1_{n-1}), z = 1.
LieSuperAlgebra build_tau_spe(int n_minus_1);

Scalar supertrace(const ExactMatrix& a, const std::vector<Par>& format);
/// Queer trace of an element of q(n) in the (A,B;B,A) realization.
Scalar queertrace(const ExactMatrix& a, int n);

/// Build a Lie superalgebra from explicit basis matrices. Structure
/// constants come from matrix brackets; weights, Cartan and raising data
/// are derived from the diagonal torus when align_weights is set.
LieSuperAlgebra algebra_from_matrices(const std::vector<ExactMatrix>& basis,
                                      const std::vector<Par>& basis_par,
                                      const std::vector<std::string>& labels,
                                      const std::vector<Par>& format,
                                      bool align_weights = true);

}  // namespace spencer
