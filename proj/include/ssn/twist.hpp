#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssn/rational.hpp"

namespace ssn {

/// Surgery coefficients on (c1, c2) realizing a p-twist along the annulus
/// they cobound, with lk(c1, c2) = l.
struct AnnularTwistSurgeries {
    ExtendedRational c1_slope;
    ExtendedRational c2_slope;

    friend bool operator==(const AnnularTwistSurgeries&, const AnnularTwistSurgeries&) = default;
};

/// (−1/p + l, 1/p + l). Throws PreconditionError for p = 0.
AnnularTwistSurgeries annular_twist(std::int64_t p, std::int64_t l);

/// Surgery pair (a, b; x/y, s/t) on a Hopf link a ∪ b. ∞ on a component
/// means no surgery there.
struct HopfPairState {
    ExtendedRational a = ExtendedRational::infinity();
    ExtendedRational b = ExtendedRational::infinity();

    /// xs − yt for the lowest-terms representatives; defined up to sign.
    Integer determinant() const;
    bool is_trivial() const { return a.is_infinite() && b.is_infinite(); }
    std::string str() const;

    friend bool operator==(const HopfPairState&, const HopfPairState&) = default;
};

/// m-twist along a: (x/y, s/t) -> (x/(y + mx), (s + mt)/t).
HopfPairState hopf_twist_a(const HopfPairState& state, const Integer& m);

/// n-twist along b: (x/y, s/t) -> ((x + ny)/y, s/(t + ns)).
HopfPairState hopf_twist_b(const HopfPairState& state, const Integer& n);

enum class HopfComponent { A, B };

struct TwistStep {
    HopfComponent component;
    Integer count;

    friend bool operator==(const TwistStep&, const TwistStep&) = default;
};

struct TwistSequence {
    std::vector<TwistStep> steps;

    /// Components strictly alternate and only the last count may be zero.
    bool is_alternating() const;

    friend bool operator==(const TwistSequence&, const TwistSequence&) = default;
};

HopfPairState apply(const HopfPairState& state, const TwistStep& step);
HopfPairState replay(HopfPairState state, const TwistSequence& seq);

/// Alternating twists, starting with a, taking `state` to (∞, ∞). The
/// counts are Euclidean quotients on (x, y); once a = ∞ a final b-twist
/// (possibly 0) clears b. Requires |xs − yt| = 1.
TwistSequence decompose(const HopfPairState& state);

/// The sequence undoing `seq`: reversed, counts negated, zero steps dropped.
TwistSequence inverse(const TwistSequence& seq);

/// Covering slope on a seiferter c after an n-twist along c, when the arc
/// below c currently carries untangle parameter s (∞ = untouched). Under
/// the 1/k-untangle <-> k-twist correspondence the parameter becomes
/// 1/(1/s + n) and its covering slope is the negative.
ExtendedRational seiferter_twist_slope(const ExtendedRational& s, const Integer& n);

/// The untangle parameter 1/(1/s + n) reached by an n-twist.
ExtendedRational untangle_after_twist(const ExtendedRational& s, const Integer& n);

} // namespace ssn
