/**
 * @file yoneda.hpp
 * @brief Representable linear functors on a finite category, natural
 *        transformation spaces by exact linear algebra, and the dimension
 *        check for the embedding of the additive completion into the functor
 *        category.
 */

#pragma once

#include "cat2vect/vectc.hpp"

namespace cat2vect {

/// Contravariant functor to finite-dimensional spaces, stored as explicit
/// dimensions and matrices: a morphism f : X -> Y yields F(f) : F(Y) -> F(X).
struct LinearFunctorData {
    FieldSpec field = FieldSpec::rationals();
    std::vector<int> dims;            // per object
    std::vector<ScalarMat> on_morph;  // per morphism

    /// F(id) = id and contravariant functoriality, checked exhaustively.
    void validate(const FinCategory& c) const;
};

/// The functor freely spanned by maps into x: its value at y has the
/// morphisms y -> x as basis, and morphisms act by precomposition.
LinearFunctorData representable(const FinCategory& c, const FieldSpec& k, int x);

/// Pointwise direct sum.
LinearFunctorData functor_biproduct(const FinCategory& c, const std::vector<LinearFunctorData>& parts);

/// Natural transformation as one matrix per object (component at y maps
/// F(y) -> G(y)).
struct NatTransData {
    std::vector<ScalarMat> components;
};

/// Basis of the space of natural transformations F => G, solving the
/// naturality constraints exactly.
std::vector<NatTransData> nat_space(const FinCategory& c, const LinearFunctorData& f,
                                    const LinearFunctorData& g);

/// Image of a sequence under the representable-functor embedding.
LinearFunctorData embed_object(const FinCategory& c, const FieldSpec& k, const SeqObject& s);

/// Image of a matrix morphism: the natural transformation whose component at
/// y is the block matrix of postcomposition maps.
NatTransData embed_matmorph(const FinCategory& c, const MatMorph& a);

struct FullyFaithfulReport {
    struct PairRow {
        int x, y;
        int hom_size;
        int nat_dim;
        bool equal;
        bool embedding_is_iso;  // images of the hom basis stay independent
    };
    std::vector<PairRow> pairs;
    bool passed = true;
};

/// dim Nat(F_x, F_y) = |Hom(x, y)| for every object pair, with the embedding
/// verified to be a linear isomorphism on each hom-space.
FullyFaithfulReport fully_faithful_check(const FinCategory& c, const FieldSpec& k);

}  // namespace cat2vect
