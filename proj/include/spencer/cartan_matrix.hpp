#pragma once

#include <memory>

#include "spencer/liesuper.hpp"

namespace spencer {

struct GenerationDiverged : std::runtime_error {
    explicit GenerationDiverged(const std::string& w) : std::runtime_error(w) {}
};

/// Bracket word over Chevalley generators: a leaf (1-based generator index)
/// or a pair of subwords.
struct BWord {
    int leaf = 0;
    std::vector<BWord> parts;  // exactly two when not a leaf
    static BWord gen(int i) { return BWord{i, {}}; }
    static BWord pair(BWord a, BWord b) { return BWord{0, {std::move(a), std::move(b)}}; }
};

/// Contragredient Lie superalgebra from a Cartan matrix: Chevalley
/// generators with [h_i, x^pm_j] = +- a_ij x^pm_j, [x^+_i, x^-_j] = delta_ij h_i,
/// modulo the maximal ideal meeting the Cartan trivially. Root spaces are
/// generated height by height; generation stops when a whole height
/// vanishes and the dimension is checked against the expected one.
class CartanAlgebra {
  public:
    CartanAlgebra(std::vector<std::vector<Scalar>> cm, std::vector<Par> gen_par, SDim expected);

    const LieSuperAlgebra& algebra() const { return alg_; }
    int rank() const;

    /// Coordinates of a bracket word in the negative (side = -1) or
    /// positive (side = +1) generators; zero vector when the word dies in
    /// the algebra.
    Vec word_element(int side, const BWord& w) const;
    /// Basis index of H_i (1-based generator index).
    int h_index(int i) const;
    /// Basis index of the single generator x^{side}_i.
    int gen_index(int side, int i) const;

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    LieSuperAlgebra alg_;
};

}  // namespace spencer
