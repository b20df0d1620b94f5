#pragma once

#include "spencer/liesuper.hpp"

namespace spencer {

struct NotDiagonalizable : std::runtime_error {
    explicit NotDiagonalizable(const std::string& w) : std::runtime_error(w) {}
};
struct DepthExceeded : std::runtime_error {
    explicit DepthExceeded(const std::string& w) : std::runtime_error(w) {}
};
struct MissingComponent : std::runtime_error {
    explicit MissingComponent(const std::string& w) : std::runtime_error(w) {}
};

/// Z-graded Lie superalgebra of depth 1, materialized through a cutoff
/// degree. Components carry parity- and weight-tagged bases; brackets are
/// stored as sparse tables per degree pair.
struct GradedAlgebra {
    std::map<int, SuperSpace> comp;
    int cutoff = 0;          // highest materialized degree
    bool stabilized = false; // true when some g_i = 0 was reached (all higher vanish)

    std::map<std::pair<int, int>, std::vector<std::vector<SVec>>> br;

    std::vector<Vec> cartan0;   // Cartan of g_0, in comp[0] coordinates
    std::vector<Vec> raising0;  // raising operators of g_0
    std::vector<std::string> weight_labels;

    bool has(int d) const { return comp.count(d) && comp.at(d).dim() > 0; }
    int dim(int d) const { return comp.count(d) ? comp.at(d).dim() : 0; }
    SDim sdim(int d) const { return comp.count(d) ? comp.at(d).sdim() : SDim{}; }

    bool has_table(int d1, int d2) const { return br.count({d1, d2}) > 0; }
    const SVec& bracket_basis(int d1, int i, int d2, int j) const;
    /// [x, y] for x in degree d1, y in degree d2 (coordinate vectors).
    Vec bracket(int d1, const Vec& x, int d2, const Vec& y) const;

    /// Fill br[(d2,d1)] from br[(d1,d2)] via super anticommutativity for
    /// every stored pair.
    void symmetrize_tables();

    /// The degree-0 part as a standalone algebra with inherited Borel data.
    LieSuperAlgebra degree0() const;

    /// Exhaustive check that [g_i, g_j] lands in degree i+j (true by
    /// construction for the shipped builders; used in tests) and that g_{-1}
    /// is abelian.
    bool check_grading() const;

    /// Kernel of the g_0-action on g_{-1} (empty = faithful).
    std::vector<Vec> action_kernel() const;

    GradedAlgebra eval_alpha(const Rat& x) const;
};

/// Eigenspace grading by ad(h): requires exact integer eigenvalues >= -1 on
/// the basis (every shipped constructor produces weight-aligned bases, so h
/// taken from the Cartan acts diagonally).
GradedAlgebra grade_by_element(const LieSuperAlgebra& g, const Vec& h);

/// g_{-1} of a graded algebra as a module over its degree-0 part (deg0 must
/// be the algebra returned by degree0(), kept alive by the caller).
Module module_from_grading(const GradedAlgebra& g, const LieSuperAlgebra& deg0);

}  // namespace spencer
