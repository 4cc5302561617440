#pragma once

#include <span>
#include <string>
#include <vector>

#include "ssn/rational.hpp"

namespace ssn {

enum class BaseSurface { Sphere, ProjectivePlane };

std::string to_string(BaseSurface base);

/// Unnormalized Seifert invariants S²(q1, ..., qk) or RP²(q1, ..., qk).
/// An ∞ entry is an index-0 (degenerate) fiber. Equality is multiset
/// equality of the coefficients.
struct SeifertInvariants {
    BaseSurface base = BaseSurface::Sphere;
    std::vector<ExtendedRational> coefficients;

    bool is_degenerate() const;
    std::string str() const;

    friend bool operator==(const SeifertInvariants& a, const SeifertInvariants& b);
};

/// Sphere-base normal form: integer b plus fractional parts in (0, 1).
struct NormalForm {
    BaseSurface base = BaseSurface::Sphere;
    Integer b;
    std::vector<ExtendedRational> fibers;  // sorted ascending

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// L(p, q) with p >= 0 and 0 <= q < p; L(1, 0) = S³, L(0, 1) = S² × S¹.
struct LensParameters {
    Integer p;
    Integer q;

    friend bool operator==(const LensParameters&, const LensParameters&) = default;
};

/// Canonical representative of L(p, q) for arbitrary integers with
/// gcd(p, q) = 1; L(-p, q) is read as L(p, -q).
LensParameters make_lens(const Integer& p, const Integer& q);

/// Unoriented homeomorphism of lens spaces: same p and q' ≡ ±q^{±1} (mod p).
bool lens_homeomorphic(const LensParameters& a, const LensParameters& b);

enum class SfsKind { LensSpace, ConnectedSumOfLensSpaces, SeifertOverS2, SeifertOverRP2 };

std::string to_string(SfsKind kind);

struct SfsClassification {
    SfsKind kind = SfsKind::SeifertOverS2;
    std::vector<LensParameters> lens;  // lens kinds only
    SeifertInvariants space;           // Seifert kinds only

    friend bool operator==(const SfsClassification&, const SfsClassification&) = default;
};

/// Two-fold branched cover of M(r1, ..., rk) (Sphere) or Mm(r1, ..., rk)
/// (ProjectivePlane): the i-th fiber has coefficient -1/ri. A ratio 0
/// yields a degenerate ∞ fiber.
SeifertInvariants montesinos_to_sfs(BaseSurface base, std::span<const ExtendedRational> ratios);

/// Orientation reversal: every coefficient negated.
SeifertInvariants reverse_orientation(const SeifertInvariants& si);

/// Integer part b = Σ floor(qi) and the nonzero fractional parts. The
/// same moves are applied over RP². Throws PreconditionError on ∞ entries.
NormalForm normal_form(const SeifertInvariants& si);

/// normal_form re-encoded as invariants {b, f1, ..., fk}. Idempotent.
SeifertInvariants normalize(const SeifertInvariants& si);

/// Same base, and equal normal forms in one of the two orientations. Over
/// RP² this is a sufficient test only: it may report false negatives.
bool is_homeomorphic(const SeifertInvariants& x, const SeifertInvariants& y);

/// Lens space of S²(q1, q2) (any number of integral entries allowed besides
/// two fibers), computed through the linear plumbing of the two fibers.
LensParameters lens_space_of(const SeifertInvariants& si);

/// Lens spaces, connected sums of lens spaces (one summand per
/// non-degenerate fiber, plus S² × S¹ for every degenerate fiber beyond
/// the first), or the generic Seifert kinds with normalized invariants.
SfsClassification recognize(const SeifertInvariants& si);

} // namespace ssn
