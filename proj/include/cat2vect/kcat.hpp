/**
 * @file kcat.hpp
 * @brief The free K-linear category on a finite category: formal linear
 *        combinations of parallel morphisms with bilinear composition.
 *
 * A LinMorph is a sparse formal sum of base-category morphisms that share a
 * source and a target. The zero morphism is the empty sum, so hom-spaces
 * between objects with no connecting morphisms hold exactly the zero vector.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cat2vect/fincat.hpp"
#include "cat2vect/linalg.hpp"
#include "cat2vect/scalar.hpp"

namespace cat2vect {

/// Formal K-linear combination of parallel base morphisms. Zero coefficients
/// are never stored.
struct LinMorph {
    int src = 0, tgt = 0;
    FieldSpec field = FieldSpec::rationals();
    std::map<int, Scalar> terms;  // morphism id -> nonzero coefficient

    bool is_zero() const { return terms.empty(); }
    Scalar coeff(int morph_id) const;
    bool operator==(const LinMorph& o) const;
    bool operator!=(const LinMorph& o) const { return !(*this == o); }
    std::string str(const FinCategory& c) const;
};

/// The category C with hom-sets linearized over K. Owns a copy of C.
class KCat {
  public:
    KCat(FinCategory c, FieldSpec k) : cat_(std::move(c)), field_(k) {}

    const FinCategory& cat() const { return cat_; }
    const FieldSpec& field() const { return field_; }

    LinMorph zero(int src, int tgt) const;
    LinMorph identity(int x) const;
    LinMorph of_base(int morph_id, Scalar coeff) const;
    LinMorph of_base(int morph_id) const;

    /// Throws NotParallel unless src/tgt agree.
    LinMorph add(const LinMorph& f, const LinMorph& g) const;
    LinMorph scale(const Scalar& c, const LinMorph& f) const;
    /// Bilinear extension of composition; throws NotComposable.
    LinMorph compose(const LinMorph& g, const LinMorph& f) const;

    /// Coefficient vector in the hom-basis (base morphisms in id order).
    std::vector<Scalar> to_vector(const LinMorph& f) const;
    LinMorph from_vector(int src, int tgt, const std::vector<Scalar>& v) const;

    /// Parses a formal sum literal like "2*f1 - f2 + 1/2*f3"; morphism names
    /// may be parenthesized tokens such as "(+)".
    LinMorph parse(const std::string& text) const;

  private:
    FinCategory cat_;
    FieldSpec field_;
};

/// Outcome of an isomorphism search between two base objects in K[C].
struct KcIsoResult {
    enum class Status { Iso, NotIso, Unknown } status;
    std::optional<LinMorph> witness;          // forward map when Iso
    std::optional<LinMorph> witness_inverse;  // backward map when Iso
};

/// Searches for a two-sided invertible element of Hom_{K[C]}(x, y). Fast path
/// through an invertible base morphism; otherwise enumerates candidates over
/// a prime field up to the budget, solving for a two-sided inverse linearly.
KcIsoResult iso_in_kc(const KCat& kc, int x, int y, std::uint64_t budget = 200'000);

/// Exhaustively checks that every left-cancellable endomorphism in C is
/// invertible (the hypothesis making iso classes in K[C] match those in C).
bool mono_implies_iso_check(const FinCategory& c);

/// True iff f is a monomorphism in C, checked over all of C.
bool is_mono(const FinCategory& c, int f);

}  // namespace cat2vect
