/**
 * @file groupalg.hpp
 * @brief Group algebra machinery over a splitting prime field: block
 *        decomposition via central idempotents, central units, inner/outer
 *        automorphisms and permutation automorphisms of the block structure.
 *
 * A prime p with p coprime to |G| and p = 1 (mod exponent of G) makes F_p a
 * splitting field for G, so the group algebra decomposes as a product of full
 * matrix algebras. That decomposition is computed explicitly here: central
 * primitive idempotents by splitting the center with polynomial
 * factorization, block degrees from ranks, and concrete algebra isomorphisms
 * of each block with a matrix algebra, which make block-permuting
 * automorphisms constructible.
 */

#pragma once

#include <cstdint>
#include <optional>

#include "cat2vect/group_table.hpp"
#include "cat2vect/linalg.hpp"
#include "cat2vect/scalar.hpp"

namespace cat2vect {

/// K[G] for a finite group and an exact ground field. Elements are dense
/// coefficient vectors indexed by group element.
class GroupAlgebra {
  public:
    using Vec = std::vector<Scalar>;

    GroupAlgebra(GroupTable g, FieldSpec k);

    const GroupTable& group() const { return group_; }
    const FieldSpec& field() const { return field_; }
    int dim() const { return group_.order(); }

    Vec zero() const { return Vec(dim(), Scalar::zero(field_)); }
    Vec one() const;
    Vec basis_elem(int g) const;

    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec scale(const Scalar& c, const Vec& a) const;
    Vec mul(const Vec& a, const Vec& b) const;
    bool is_zero(const Vec& a) const;

    ScalarMat left_mult_matrix(const Vec& a) const;
    bool is_central(const Vec& a) const;
    std::optional<Vec> inverse(const Vec& a) const;
    bool is_unit(const Vec& a) const { return inverse(a).has_value(); }
    bool is_central_unit(const Vec& a) const { return is_central(a) && is_unit(a); }

    /// Conjugacy class sums, a basis of the center.
    std::vector<Vec> class_sums() const;

    std::string str(const Vec& a) const;

  private:
    GroupTable group_;
    FieldSpec field_;
};

/// Smallest prime p >= start with p coprime to |G| and p = 1 mod exp(G).
long long splitting_prime(const GroupTable& g, long long start = 2,
                          std::uint64_t budget = 1'000'000);

struct WedderburnData {
    int r = 0;                                  // number of blocks
    std::vector<GroupAlgebra::Vec> idempotents; // central primitive, canonical order
    std::vector<int> degrees;                   // d_i with sum d_i^2 = |G|
    std::vector<std::pair<int, int>> grouping;  // (degree d, multiplicity k), degrees increasing
    int num_degree_classes() const { return static_cast<int>(grouping.size()); }
    /// Flat block index of the p-th block (0-based) in degree class i.
    int block_index(int degree_class, int p) const;
    /// Inverse of block_index.
    std::pair<int, int> class_position(int block) const;
};

/// Block decomposition of K[G] over a splitting prime. Splits the center by
/// factoring minimal polynomials of seeded-random center elements, retrying
/// with a deterministic sweep on non-separating picks. Throws
/// NotSplittingPrime when a block dimension is not a perfect square or the
/// center does not split linearly.
WedderburnData wedderburn(const GroupAlgebra& a, std::uint64_t seed = 0);

struct CenterUnitsReport {
    int r = 0;
    bool multiplicative = false;   // (lambda mu) e and (lambda e)(mu e) agree
    bool image_central_units = false;
    bool surjectivity_checked = false;  // exhaustive check only for tiny p^|G|
    bool surjective = false;
};

/// Verifies that (K^*)^r -> Z(K[G]^*), lambda -> sum lambda_i e_i is a
/// multiplicative parameterization of the central units, exhaustively
/// checking surjectivity when the algebra is small enough to enumerate.
CenterUnitsReport center_units(const GroupAlgebra& a, const WedderburnData& wd,
                               std::uint64_t enumeration_budget = 20'000);

/// Unit-preserving multiplicative invertible linear map on K[G], stored as a
/// matrix in the group basis. Construction verifies all of that exhaustively.
class AlgAutomorphism {
  public:
    static AlgAutomorphism from_matrix(const GroupAlgebra& a, ScalarMat m);
    static AlgAutomorphism identity(const GroupAlgebra& a);
    static AlgAutomorphism conjugation_by(const GroupAlgebra& a, const GroupAlgebra::Vec& unit);

    const ScalarMat& matrix() const { return mat_; }
    GroupAlgebra::Vec apply(const GroupAlgebra::Vec& x) const { return mat_.apply(x); }
    AlgAutomorphism compose(const AlgAutomorphism& inner_first) const;
    AlgAutomorphism inverse() const;
    bool operator==(const AlgAutomorphism& o) const { return mat_ == o.mat_; }

  private:
    explicit AlgAutomorphism(ScalarMat m) : mat_(std::move(m)) {}
    ScalarMat mat_;
};

struct InnerResult {
    enum class Status { Inner, Outer, Undetermined } status;
    std::optional<GroupAlgebra::Vec> witness;  // u with phi(x) = u^{-1} x u
};

/// Decides whether phi is inner by solving u phi(x) = x u linearly and
/// searching the solution space for a unit. The search is exhaustive (hence
/// the Outer verdict definitive) whenever p^dim(solutions) fits the budget.
InnerResult is_inner(const GroupAlgebra& a, const AlgAutomorphism& phi,
                     std::uint64_t budget = 200'000);

/// Explicit per-block data: bases of the blocks e_i K[G] and algebra
/// isomorphisms of each block with a d x d matrix algebra over K. The
/// reference isomorphisms make sigma -> phi_sigma a strict homomorphism.
class BlockStructure {
  public:
    BlockStructure(const GroupAlgebra& a, const WedderburnData& wd);

    const GroupAlgebra& algebra() const { return *alg_; }
    const WedderburnData& data() const { return wd_; }

    /// Coordinates of a central element over the idempotent basis; nullopt
    /// when the element is not in the span.
    std::optional<std::vector<Scalar>> central_coordinates(const GroupAlgebra::Vec& z) const;
    GroupAlgebra::Vec from_central_coordinates(const std::vector<Scalar>& lambda) const;

    /// Automorphism permuting equal-degree blocks: block b maps onto
    /// sigma_i(b) within its degree class. Throws DegreeMismatch if a
    /// permutation crosses degree classes.
    AlgAutomorphism permutation_automorphism(const std::vector<std::vector<int>>& sigma) const;

    /// How phi permutes the primitive central idempotents; NotAutomorphism if
    /// some image is not an idempotent of the list.
    std::vector<int> idempotent_permutation(const AlgAutomorphism& phi) const;

  private:
    const GroupAlgebra* alg_;
    WedderburnData wd_;
    std::vector<std::vector<GroupAlgebra::Vec>> block_basis_;  // per block
    std::vector<ScalarMat> rho_;      // block coords -> d x d matrix entries (flattened)
    std::vector<ScalarMat> rho_inv_;  // inverse of rho
    ScalarMat center_basis_;          // idempotent coordinate solve

    GroupAlgebra::Vec block_map(int from, int to, const GroupAlgebra::Vec& x) const;
};

struct OutGroupPresentation {
    std::vector<std::pair<int, int>> grouping;  // (d_i, k_i)
    long long order = 1;                        // prod k_i!
    bool section_is_homomorphism = false;       // verified on all pairs
    bool exhaustive_cross_check_ran = false;
    bool exhaustive_cross_check_ok = false;     // |Aut|/|Inn| matches when ran
};

/// The outer automorphism group as a product of symmetric groups, with the
/// permutation-automorphism section verified. For tiny p^|G| the order is
/// cross-checked against exhaustive enumeration of all algebra automorphisms
/// modulo inner ones.
OutGroupPresentation out_group(const GroupAlgebra& a, const WedderburnData& wd,
                               std::uint64_t enumeration_budget = 20'000);

/// All unit-preserving multiplicative linear bijections of K[G], enumerated
/// by brute force over images of a generating set. Only feasible for tiny
/// p^|G|; guarded by the budget.
std::vector<AlgAutomorphism> enumerate_algebra_automorphisms(const GroupAlgebra& a,
                                                             std::uint64_t budget = 1'000'000);

}  // namespace cat2vect
