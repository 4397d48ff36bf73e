/**
 * @file fincat.hpp
 * @brief Finite categories as explicit composition tables, their validation,
 *        standard constructors, and brute-force self-equivalence enumeration.
 *
 * A category is stored total: every object, every morphism, the full partial
 * composition table. All three category axioms are decidable by exhaustive
 * iteration and are checked up front, so downstream code never revalidates.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cat2vect/error.hpp"
#include "cat2vect/group_table.hpp"

namespace cat2vect {

/// Unvalidated category table, as read from a file or built by hand.
struct RawCategory {
    std::string name;
    std::vector<std::string> objects;
    struct RawMorph {
        std::string id;
        int src = 0, tgt = 0;
    };
    std::vector<RawMorph> morphisms;
    std::vector<int> identity;                      // per object: morphism index
    std::vector<std::array<int, 3>> comp;           // {g, f, g∘f} triples
};

/// A validated finite category. Objects and morphisms are dense integer ids;
/// names are carried for I/O only.
class FinCategory {
  public:
    struct Morph {
        std::string name;
        int src = 0, tgt = 0;
    };

    /// Checks all category axioms; throws MissingIdentity,
    /// SrcTgtMismatch, UndefinedComposite or AssociativityViolation.
    static FinCategory validate(const RawCategory& raw);

    int num_objects() const { return static_cast<int>(object_names_.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
    const std::string& object_name(int x) const { return object_names_[x]; }
    const Morph& morph(int m) const { return morphisms_[m]; }
    int identity_of(int x) const { return identity_[x]; }
    bool is_identity(int m) const { return identity_[morphisms_[m].src] == m && morphisms_[m].src == morphisms_[m].tgt; }

    /// g∘f, or -1 when tgt(f) != src(g).
    int compose(int g, int f) const { return comp_[g][f]; }

    /// Morphism ids x -> y in increasing id order.
    const std::vector<int>& hom(int x, int y) const { return hom_[x][y]; }

    std::optional<int> find_object(const std::string& name) const;
    std::optional<int> find_morphism(const std::string& name) const;

    /// Two-sided inverse of m, or -1.
    int inverse_of(int m) const;
    bool is_groupoid() const;

    /// Connected components of the object set under "some morphism exists".
    std::vector<int> object_components() const;

    const std::string& name() const { return name_; }
    RawCategory to_raw() const;

    // standard constructors
    static FinCategory discrete(int n);
    static FinCategory terminal() { return discrete(1); }
    static FinCategory monoid_cat(const MonoidTable& m);
    static FinCategory group_cat(const GroupTable& g);
    static FinCategory disjoint_union(const std::vector<FinCategory>& parts);
    static FinCategory homogeneous_groupoid(int n, const GroupTable& g);

  private:
    FinCategory() = default;
    std::string name_;
    std::vector<std::string> object_names_;
    std::vector<Morph> morphisms_;
    std::vector<int> identity_;
    std::vector<std::vector<int>> comp_;
    std::vector<std::vector<std::vector<int>>> hom_;
};

/// Functor between explicit finite categories; preservation of src/tgt,
/// identities and composition is verified exhaustively on construction.
struct CatFunctor {
    std::vector<int> obj_map;
    std::vector<int> mor_map;

    static CatFunctor checked(const FinCategory& src, const FinCategory& tgt, std::vector<int> obj_map,
                              std::vector<int> mor_map);
    static CatFunctor identity(const FinCategory& c);
    static CatFunctor compose(const FinCategory& c, const CatFunctor& g, const CatFunctor& f);

    bool operator==(const CatFunctor& o) const { return obj_map == o.obj_map && mor_map == o.mor_map; }
};

/// Natural transformation data: one component morphism per object.
struct CatNatTrans {
    std::vector<int> components;

    bool operator==(const CatNatTrans& o) const { return components == o.components; }
};

/// Checks naturality of tau : f => g exhaustively.
bool is_natural(const FinCategory& c, const CatFunctor& f, const CatFunctor& g, const CatNatTrans& tau);

/// Result of brute-force enumeration of the self-equivalence 2-group of a
/// finite category. On a finite skeletal category every self-equivalence is
/// an isomorphism, so the search runs over strict automorphisms; non-skeletal
/// inputs are skeletalized first (least object id per iso class).
struct EquivEnumeration {
    FinCategory skeleton = FinCategory::discrete(0);
    std::vector<CatFunctor> functors;            // all strict automorphisms of the skeleton
    std::vector<int> iso_class;                  // functor index -> class index
    int pi0_order = 0;
    std::vector<std::vector<int>> pi0_table;     // class composition table
    int pi1_order = 0;                           // natural automorphisms of the identity functor
    std::vector<CatNatTrans> pi1_elements;
};

/// Enumerates all self-equivalences and natural isomorphisms between them.
/// The budget bounds the number of candidate assignments explored; exceeding
/// it throws BudgetExceeded.
EquivEnumeration enumerate_equivalences(const FinCategory& c, std::uint64_t budget = 2'000'000);

/// All natural isomorphisms f => g (for automorphisms of c).
std::vector<CatNatTrans> natural_isos(const FinCategory& c, const CatFunctor& f, const CatFunctor& g);

}  // namespace cat2vect
