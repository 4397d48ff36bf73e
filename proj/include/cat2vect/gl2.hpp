/**
 * @file gl2.hpp
 * @brief 2-groups of self-equivalences of free additive completions over
 *        finite homogeneous groupoids: homotopy groups, the action of the
 *        first on the second, strict sections, classifying 3-cocycles and a
 *        brute-force enumeration oracle.
 *
 * For a homogeneous groupoid with n components and underlying group G over a
 * splitting prime, the equivalence classes of self-equivalences form the
 * wreath-style group of pairs (object permutation, per-component outer
 * classes), and the natural automorphisms of the identity form (K^*)^{r n}
 * with r the block count of K[G]. Both the closed-formula action and the
 * whiskering definition are implemented so they can be checked against each
 * other, and a strict section built from block-permutation automorphisms
 * witnesses that the 2-group splits.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "cat2vect/groupalg.hpp"
#include "cat2vect/vectc.hpp"

namespace cat2vect {

// ---------------------------------------------------------------------------
// presentation of the self-equivalence 2-group of a homogeneous groupoid

class GL2Presentation {
  public:
    /// n components with underlying group g over a splitting prime p.
    GL2Presentation(int n, GroupTable g, long long p, std::uint64_t seed = 0);

    // the block structure refers into the owned algebra
    GL2Presentation(const GL2Presentation&) = delete;
    GL2Presentation& operator=(const GL2Presentation&) = delete;

    int n() const { return n_; }
    const GroupAlgebra& algebra() const { return alg_; }
    const WedderburnData& wd() const { return wd_; }
    const BlockStructure& blocks() const { return blocks_; }

    unsigned long long pi0_order() const;
    unsigned long long pi1_order() const;

    /// Class of a self-equivalence: an object permutation together with one
    /// block permutation tuple per component. Tuples are indexed by the
    /// component's position in the *target*, which makes the closed action
    /// formula and the whiskering computation agree.
    struct Pi0 {
        std::vector<int> sigma;                          // object permutation, image form
        std::vector<std::vector<std::vector<int>>> tuples;  // [q][degree class] block perm
        bool operator==(const Pi0& o) const { return sigma == o.sigma && tuples == o.tuples; }
    };

    Pi0 pi0_identity() const;
    Pi0 pi0_mul(const Pi0& a, const Pi0& b) const;
    Pi0 pi0_inverse(const Pi0& a) const;
    std::vector<Pi0> enumerate_pi0(std::uint64_t budget = 100'000) const;

    /// Element of (K^*)^{r n}: one nonzero scalar per (block, component).
    using Pi1 = std::vector<std::vector<Scalar>>;  // [block][component]
    Pi1 pi1_identity() const;
    Pi1 pi1_mul(const Pi1& a, const Pi1& b) const;
    std::vector<Pi1> enumerate_pi1(std::uint64_t budget = 100'000) const;

    /// Closed-formula action: entry (class i row p, column q) of the result
    /// is the entry of u at row sigma_{qi}^{-1}(p), column sigma^{-1}(q).
    Pi1 act(const Pi0& g, const Pi1& u) const;

    /// A strict self-equivalence of the linearized groupoid: an object
    /// permutation plus one algebra automorphism per source component.
    struct StrictAutoequiv {
        std::vector<int> sigma;
        std::vector<AlgAutomorphism> hom_maps;  // indexed by source component
        bool operator==(const StrictAutoequiv& o) const {
            return sigma == o.sigma && hom_maps == o.hom_maps;
        }
    };

    StrictAutoequiv autoequiv_identity() const;
    StrictAutoequiv compose(const StrictAutoequiv& f, const StrictAutoequiv& g) const;
    /// The strict section: block-permutation automorphisms chosen so that the
    /// assignment is a homomorphism on the nose.
    StrictAutoequiv section(const Pi0& g) const;
    /// Projection back to the class; throws NotAutomorphism if some hom map
    /// does not permute the block idempotents.
    Pi0 class_of(const StrictAutoequiv& f) const;

    /// Natural-automorphism data: one central unit per component.
    using Units = std::vector<GroupAlgebra::Vec>;
    Units units_from_pi1(const Pi1& u) const;
    Pi1 pi1_from_units(const Units& u) const;  ///< throws NotCentral

    /// The action computed from whiskering: delta post-composes each
    /// component with the hom map, gamma pulls components back along the
    /// object permutation, and the action is gamma^{-1} after delta.
    Units act_direct(const StrictAutoequiv& f, const Units& u) const;

    struct SplitReport {
        bool section_is_homomorphism = false;
        bool projects_to_identity = false;
        bool passed() const { return section_is_homomorphism && projects_to_identity; }
        std::string failure;
    };
    /// Checks the section on every pair of classes (budget-guarded).
    SplitReport verify_split(std::uint64_t budget = 100'000) const;

    /// Section override hook used by mutation tests.
    SplitReport verify_split_with(const std::function<StrictAutoequiv(const Pi0&)>& section_fn,
                                  std::uint64_t budget = 100'000) const;

  private:
    int n_;
    GroupAlgebra alg_;
    WedderburnData wd_;
    BlockStructure blocks_;
};

// ---------------------------------------------------------------------------
// finite strict 2-groups, tabulated or generated, for cocycle work

/// Interface to a finite strict 2-group: objects form a group under the
/// tensor, 2-cells are invertible, and both compositions are exposed. Cell
/// ids are dense integers.
class Strict2Group {
  public:
    virtual ~Strict2Group() = default;

    virtual int num_objects() const = 0;
    virtual int tensor(int a, int b) const = 0;
    virtual int unit_object() const = 0;

    virtual int num_cells() const = 0;
    virtual int cell_src(int c) const = 0;
    virtual int cell_tgt(int c) const = 0;
    virtual std::vector<int> hom(int a, int b) const = 0;
    virtual int identity_cell(int a) const = 0;
    virtual int vcomp(int second, int first) const = 0;  // second after first
    virtual int vinv(int c) const = 0;
    virtual int hcomp(int c1, int c2) const = 0;  // tensor of cells

    /// Checks category axioms, strict monoidal structure, interchange and
    /// invertibility; throws NotA2Group. Pair checks are budget-sampled.
    void validate(std::uint64_t budget = 2'000'000) const;

    struct Homotopy {
        std::vector<int> obj_class;
        std::vector<int> class_rep;      // least object per class
        GroupTable pi0;
        std::vector<int> pi1_cells;      // hom(unit, unit)
        GroupTable pi1;
        std::vector<std::vector<int>> action;  // [class][pi1 index] -> pi1 index
    };
    Homotopy homotopy() const;
};

/// Strict 2-group of a crossed module: cells are pairs (e, h) from h to
/// boundary(e)*h, with the usual two compositions.
std::unique_ptr<Strict2Group> crossed_module_2group(const GroupTable& e, const GroupTable& h,
                                                    const std::vector<int>& boundary,
                                                    const std::vector<std::vector<int>>& action);

/// Skeletal split model on given homotopy data (one object per class).
std::unique_ptr<Strict2Group> skeletal_split_2group(const GroupTable& pi0, const GroupTable& pi1,
                                                    const std::vector<std::vector<int>>& action);

/// Non-skeletal split model: doubles every object so that representative
/// choices become nontrivial while the equivalence class stays split.
std::unique_ptr<Strict2Group> nonskeletal_split_2group(const GroupTable& pi0, const GroupTable& pi1,
                                                       const std::vector<std::vector<int>>& action);

/// The strict self-equivalence 2-group of the linearized homogeneous
/// groupoid, with objects all pairs (object permutation, automorphism tuple)
/// and 2-cells the unit tuples intertwining them. Feasible for tiny |G|, p.
std::unique_ptr<Strict2Group> autoequivalence_2group(int n, const GroupTable& g, long long p,
                                                     std::uint64_t budget = 4'000'000);

struct CocycleChoices {
    /// class -> representative object; the unit class is always represented
    /// by the unit object regardless of this map.
    std::map<int, int> representatives;
    /// object -> cell to its class representative; identities on the
    /// representatives themselves are forced.
    std::map<int, int> iotas;
};

struct CocycleReport {
    int pi0_order = 0;
    int pi1_order = 0;
    std::vector<int> alpha;  // flat [g1][g2][g3] -> pi1 index
    bool normalized = false;
    bool cocycle_identity = false;
    bool identity_valued = false;  // alpha == unit everywhere
    int alpha_at(int g1, int g2, int g3) const;
};

/// Classifying 3-cocycle from chosen representatives and comparison cells,
/// least-id defaults. Verifies normalization and the cocycle identity.
CocycleReport compute_cocycle(const Strict2Group& tg, const CocycleChoices& choices = {});

/// Exhaustive search for a normalized 2-cochain trivializing alpha. Returns
/// nullopt when the search space exceeds the budget.
std::optional<bool> cohomologically_trivial(const GroupTable& pi0, const GroupTable& pi1,
                                            const std::vector<std::vector<int>>& action,
                                            const std::vector<int>& alpha,
                                            std::uint64_t budget = 2'000'000);

/// Normalized 3-cocycle identity for table data.
bool cocycle_identity_holds(const GroupTable& pi0, const GroupTable& pi1,
                            const std::vector<std::vector<int>>& action,
                            const std::vector<int>& alpha);

struct PresentationTables {
    GroupTable pi0 = GroupTable::trivial();
    GroupTable pi1 = GroupTable::trivial();
    std::vector<std::vector<int>> action;
};

/// Materializes the presentation's homotopy data as plain group tables with
/// the action table, for cocycle and coboundary work. Budget-guarded.
PresentationTables presentation_tables(const GL2Presentation& pres, std::uint64_t budget = 100'000);

/// Presentation-level 2-group data (homotopy groups, action, cocycle table).
struct TwoGroupTriple {
    GroupTable pi0 = GroupTable::trivial();
    GroupTable pi1 = GroupTable::trivial();
    std::vector<std::vector<int>> action;
    std::vector<int> alpha;

    /// Action laws, automorphism property, normalization and the cocycle
    /// identity, exhaustively. Throws NotA2Group.
    void validate() const;
};

// ---------------------------------------------------------------------------
// Weyl sub-2-group and the brute-force oracle

struct WeylReport {
    int weyl_pi0 = 0;
    int weyl_pi1 = 0;
    unsigned long long gl_pi1 = 0;  // K-linear natural automorphisms of the identity
    bool injective_on_objects = false;
    bool faithful = false;
    bool full = false;
    /// For each pair of base equivalences: 2-cell count in the image vs the
    /// K-linear 2-cell count between the extensions.
    std::vector<std::array<int, 2>> cell_counts;
};

/// Embeds the self-equivalence 2-group of C into the self-equivalences of
/// the completion by linear extension and compares 2-cell counts.
WeylReport weyl_embed(const FinCategory& c, const FieldSpec& k, std::uint64_t budget = 2'000'000);

struct OracleCounts {
    unsigned long long pi0 = 0;
    unsigned long long pi1 = 0;
    unsigned long long functors = 0;  // strict linear automorphisms found
};

/// Brute-force enumeration of the strict linear automorphisms of the
/// linearized category (object bijections times unit-preserving
/// multiplicative maps on the endomorphism algebras), classified up to
/// natural isomorphism. Requires a disjoint union of one-object components.
OracleCounts enumerate_autoequiv_oracle(const FinCategory& c, long long p,
                                        std::uint64_t budget = 4'000'000);

}  // namespace cat2vect
