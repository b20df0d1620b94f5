#pragma once

#include "spencer/spencer.hpp"

namespace spencer {

struct NonDiagonalizableAction : std::runtime_error {
    explicit NonDiagonalizableAction(const std::string& w) : std::runtime_error(w) {}
};

/// The g_0-module carried by H^{k,s}: representatives get module
/// coordinates, the induced action matrices are assembled per g_0 basis
/// element, and the degree-0 algebra provides Cartan and raising data.
Module cohomology_module(const SpencerComplex& sc, const CohomologyReport& rep,
                         const LieSuperAlgebra& g0);

struct WeightVectorInfo {
    Weight weight;
    Par parity = Par::Even;
    Vec vec;  // module coordinates
};

/// Simultaneous eigenspace decomposition under the stored Cartan; the
/// shipped module bases are weight aligned, so this groups basis indices.
std::map<std::string, std::vector<int>> weight_spaces(const Module& m);

/// Joint kernel of the raising operators, organized by weight. Every
/// returned vector re-verifies annihilation and exact Cartan eigenvalues.
std::vector<WeightVectorInfo> highest_weight_vectors(const Module& m);

/// Smallest action-stable subspace containing the given vectors.
std::vector<Vec> submodule_generated(const Module& m, const std::vector<Vec>& gens);

/// Quotient by an action-stable subspace; complement positions are the
/// non-pivot coordinates of the subspace rref (deterministic). to_quotient
/// maps ambient vectors to quotient coordinates.
struct QuotientModule {
    Module mod;
    std::vector<int> positions;  // ambient coordinate of each quotient basis vector
    SpanBuilder sub;             // the subspace divided out
    Vec to_quotient(const Vec& v) const;
    Vec lift(const Vec& q) const;  // representative in ambient coordinates
};
QuotientModule quotient_module(const Module& m, const std::vector<Vec>& sub);

/// Superdimension of End_{g_0}(M) (1|0 = G-type, 1|1 = Q-type).
SDim endomorphism_sdim(const Module& m);

/// Constructive irreducibility: the submodule generated by every single
/// basis vector is the whole module.
bool is_irreducible(const Module& m);

struct Layer {
    SDim sdim;
    std::vector<WeightVectorInfo> hwvs;  // in the layer's quotient coordinates
    std::string type_tag;                // "G", "Q" or "(p|q)"
};

struct ModuleReport {
    SDim sdim;
    std::vector<WeightVectorInfo> hwvs;  // of the module itself
    std::vector<Layer> layers;           // iterated socle filtration
    bool split = true;
};

/// Iterated socle filtration: layer 0 is generated by all highest weight
/// vectors; the construction repeats on the quotient. split is true iff
/// the first layer is everything.
ModuleReport composition_report(const Module& m);

}  // namespace spencer
