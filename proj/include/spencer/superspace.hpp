#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spencer/matrix.hpp"

namespace spencer {

enum class Par : unsigned char { Even = 0, Odd = 1 };

inline Par operator+(Par a, Par b) {
    return static_cast<Par>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline bool is_odd(Par p) { return p == Par::Odd; }
inline int sign_pow(Par a, Par b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }  // (-1)^{p(a)p(b)}

struct SDim {
    int even = 0, odd = 0;
    int total() const { return even + odd; }
    bool operator==(const SDim& o) const = default;
    std::string str() const { return std::to_string(even) + "|" + std::to_string(odd); }
};

/// The single audited sign source. Sign accumulated when the symbols with
/// the given parities, initially in order 0,1,...,n-1, are rearranged so
/// that symbol perm[k] ends up in position k: product of (-1)^{p_i p_j}
/// over all pairs that swap their relative order.
int koszul_sign(const std::vector<Par>& parities, const std::vector<int>& perm);

using Weight = std::vector<Scalar>;

std::string weight_str(const Weight& w);

/// Parity-tagged basis with optional weight labels. The substrate every
/// functor (dual, tensor, parity shift, symmetric and exterior powers)
/// operates on.
struct SuperSpace {
    std::vector<std::string> labels;
    std::vector<Par> par;
    std::vector<Weight> weights;  // empty or one per basis element

    int dim() const { return static_cast<int>(par.size()); }
    SDim sdim() const;
    void push(std::string label, Par p, Weight w = {});
};

SuperSpace dual(const SuperSpace& v);          // labels primed, weights negated
SuperSpace parity_shift(const SuperSpace& v);  // Pi: flip all parities
SuperSpace tensor(const SuperSpace& v, const SuperSpace& w);

/// Multi-index of an exterior-power monomial e_{j1} ^ ... ^ e_{js},
/// weakly increasing; even indices may not repeat.
using MIdx = std::vector<int>;

/// Basis multi-indices of Lambda^s(V), enumerated in lexicographic order.
std::vector<MIdx> ext_basis(const SuperSpace& v, int s);
/// Basis multi-indices of S^k(V): weakly increasing, odd indices may not
/// repeat (supersymmetric monomials).
std::vector<MIdx> sym_basis(const SuperSpace& v, int s);

Par midx_parity(const SuperSpace& v, const MIdx& J);
Weight midx_weight(const SuperSpace& v, const MIdx& J);
std::string midx_label(const SuperSpace& v, const MIdx& J, const std::string& sep);

SuperSpace ext_power(const SuperSpace& v, int s);
SuperSpace sym_power(const SuperSpace& v, int s);

/// e_i ^ (monomial J) inside Lambda(V): the sorted monomial and the sign
/// from commuting e_i into place (x ^ y = -(-1)^{p(x)p(y)} y ^ x), or
/// nothing when the product vanishes (repeated even index).
std::optional<std::pair<int, MIdx>> wedge_insert(const SuperSpace& v, int i, const MIdx& J);

/// Same for the supersymmetric algebra (x y = (-1)^{p(x)p(y)} y x; odd
/// squares vanish).
std::optional<std::pair<int, MIdx>> sym_insert(const SuperSpace& v, int i, const MIdx& J);

/// Supertranspose of a homogeneous matrix A of parity pa in the given
/// row/column format: (A^{st})_{ij} = (-1)^{(p_i+p_j)(p_i+p(A))} A_{ji}.
ExactMatrix supertranspose(const ExactMatrix& a, const std::vector<Par>& format, Par pa);

/// Split a matrix into its even and odd (block-diagonal / block-off-
/// diagonal) parts with respect to a format.
std::pair<ExactMatrix, ExactMatrix> parity_parts(const ExactMatrix& a, const std::vector<Par>& format);

}  // namespace spencer
