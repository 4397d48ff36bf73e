/**
 * @file vectc.hpp
 * @brief The free additive completion of K[C]: sequence objects, matrices of
 *        formal sums, biproducts by concatenation, isomorphism testing,
 *        structure constants and functor extension.
 *
 * Objects are finite ordered sequences of base objects; the empty sequence is
 * the unique zero object. Morphisms are |tgt| x |src| grids of LinMorph with
 * composition given by the formal matrix product over bilinear composition.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "cat2vect/kcat.hpp"

namespace cat2vect {

struct SeqObject {
    std::vector<int> entries;  // base object ids, possibly empty

    int length() const { return static_cast<int>(entries.size()); }
    bool is_zero_object() const { return entries.empty(); }
    bool operator==(const SeqObject& o) const { return entries == o.entries; }
    bool operator!=(const SeqObject& o) const { return !(*this == o); }
    std::string str(const FinCategory& c) const;
};

struct MatMorph {
    SeqObject src, tgt;
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::vector<LinMorph>> cells;  // [tgt index][src index]

    const LinMorph& at(int i, int j) const { return cells[i][j]; }
    LinMorph& at(int i, int j) { return cells[i][j]; }
    bool is_zero() const;
    bool operator==(const MatMorph& o) const;
    bool operator!=(const MatMorph& o) const { return !(*this == o); }
};

struct BiproductDiagram {
    SeqObject object;
    std::vector<MatMorph> injections;   // iota_k : part_k -> object
    std::vector<MatMorph> projections;  // pi_k : object -> part_k
};

/// The additive completion, parameterized by a KCat. All operations verify
/// shapes and endpoints; failures throw ShapeMismatch.
class VectC {
  public:
    explicit VectC(KCat kc) : kc_(std::move(kc)) {}
    VectC(FinCategory c, FieldSpec k) : kc_(std::move(c), k) {}

    const KCat& kcat() const { return kc_; }
    const FinCategory& cat() const { return kc_.cat(); }
    const FieldSpec& field() const { return kc_.field(); }

    SeqObject seq(std::vector<int> entries) const;
    MatMorph zero_morph(const SeqObject& src, const SeqObject& tgt) const;
    MatMorph identity(const SeqObject& s) const;
    /// Permutation matrix of identities realizing entry relabeling
    /// tgt[i] = src[perm[i]].
    MatMorph permutation(const SeqObject& src, const std::vector<int>& perm) const;

    MatMorph add(const MatMorph& a, const MatMorph& b) const;
    MatMorph scale(const Scalar& c, const MatMorph& a) const;
    MatMorph compose(const MatMorph& b, const MatMorph& a) const;

    /// Concatenation biproduct; the returned diagram is verified eagerly.
    BiproductDiagram concat_biproduct(const SeqObject& s, const SeqObject& t) const;
    /// Checks the defining equations of a biproduct diagram.
    bool verify_biproduct(const BiproductDiagram& d) const;

    struct InvertResult {
        enum class Status { Invertible, NotInvertible, Undetermined } status;
        std::optional<MatMorph> inverse;
    };
    /// Solves A B = id linearly, then insists on B A = id; iterates over the
    /// affine solution set up to the budget when the first solve is degenerate.
    InvertResult invert(const MatMorph& a, std::uint64_t budget = 200'000) const;

    struct IsoResult {
        enum class Status { Iso, NotIso, Unknown } status;
        std::optional<MatMorph> witness;
    };
    /// Isomorphism test between sequence objects. Decides outright when the
    /// base category is a disjoint union of one-object monoids; otherwise
    /// falls back to a budgeted exhaustive search over a prime field.
    IsoResult iso_test(const SeqObject& s, const SeqObject& t, std::uint64_t budget = 200'000) const;

  private:
    KCat kc_;
};

/// Whether C is a disjoint union of one-object full subcategories, i.e. every
/// connected component consists of a single object.
bool is_disjoint_union_of_monoids(const FinCategory& c);

/// Whether C is homogeneous: a disjoint union of one-object components whose
/// endomorphism monoids are pairwise isomorphic.
bool is_homogeneous(const FinCategory& c);

struct HomogeneousBasis {
    std::vector<int> representatives;  // one base object per component
    int rank = 0;
};

/// Basis of length-one sequences for a homogeneous C; throws NotHomogeneous.
HomogeneousBasis homogeneous_basis(const FinCategory& c);

struct IndecomposabilityVerdict {
    enum class Kind { Certified, Unknown } kind;
    std::string reason;
};

/// Per-object indecomposability of length-one sequences, certified when every
/// left-cancellable endomorphism of C is invertible.
std::vector<IndecomposabilityVerdict> indecomposable_length_one(const FinCategory& c);

/// Multiplicity vector of a sequence over a discrete category; two sequences
/// are isomorphic iff their vectors agree. Throws NotDiscrete.
std::vector<int> kv_canonical_form(const FinCategory& c, const SeqObject& s);

// ---------------------------------------------------------------------------
// structure constants

struct StructureConstants {
    FieldSpec field = FieldSpec::rationals();
    int rank = 0;
    // hom_basis[i][j]: morphism ids forming the linear basis of Hom(X_i, X_j),
    // identity first on the diagonal
    std::vector<std::vector<std::vector<int>>> hom_basis;
    // c[i][j][k][alpha][beta][gamma] with f(j,k)_beta f(i,j)_alpha =
    // sum_gamma c * f(i,k)_gamma
    std::vector<std::vector<std::vector<std::vector<std::vector<std::vector<Scalar>>>>>> table;

    Scalar c(int i, int j, int k, int alpha, int beta, int gamma) const {
        return table[i][j][k][alpha][beta][gamma];
    }
};

StructureConstants structure_constants(const FinCategory& c, const FieldSpec& k);

struct StructureAxiomReport {
    bool passed = true;
    std::string violation;  // empty when passed
};

/// Exhaustively checks the associativity and unit equations.
StructureAxiomReport verify_structure_axioms(const StructureConstants& sc);

// ---------------------------------------------------------------------------
// kernels in a one-object completion

struct KernelResult {
    bool has_kernel = false;
    std::string detail;
};

/// For an endomorphism a of the length-one sequence over a one-object C:
/// a has a kernel iff nothing nonzero right-annihilates it, and then the
/// kernel is the zero map from the empty sequence. Throws
/// NotEndomorphismOfStar otherwise.
KernelResult kernel_exists(const VectC& v, const LinMorph& a);

// ---------------------------------------------------------------------------
// functor extension

/// Assignment of a functor C -> completion-of-D on base data: each C-object
/// gets a sequence over D, each C-morphism a matrix between the images.
struct FunctorAssignment {
    std::vector<SeqObject> on_objects;   // per C-object
    std::vector<MatMorph> on_morphisms;  // per C-morphism
};

/// The linear extension to whole sequence objects and matrices.
class ExtendedFunctor {
  public:
    /// Verifies functoriality of the assignment exhaustively; throws
    /// NotFunctorial.
    ExtendedFunctor(const FinCategory& src, VectC target, FunctorAssignment f);

    SeqObject apply(const SeqObject& s) const;
    MatMorph apply(const MatMorph& a) const;
    MatMorph apply_lin(const LinMorph& f) const;  // on a length-one cell

    const VectC& target() const { return target_; }
    const FunctorAssignment& assignment() const { return assignment_; }

  private:
    FinCategory src_ = FinCategory::discrete(0);
    VectC target_;
    FunctorAssignment assignment_;
};

/// Lifts a plain endofunctor of C to the completion (object map entrywise,
/// morphism map termwise on formal sums).
ExtendedFunctor extend_cat_functor(const FinCategory& c, const FieldSpec& k, const CatFunctor& f);

/// Diagonal natural isomorphism between extended functors built from the
/// components of a base natural transformation.
MatMorph extend_nat_component(const ExtendedFunctor& fe, const ExtendedFunctor& ge,
                              const CatNatTrans& tau, const SeqObject& s);

}  // namespace cat2vect
