#include "ssn/twist.hpp"

#include <cassert>
#include <sstream>

#include "ssn/errors.hpp"

namespace ssn {

namespace {

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

int sign_of(const Integer& v) { return v.sign(); }

} // namespace

AnnularTwistSurgeries annular_twist(std::int64_t p, std::int64_t l) {
    if (p == 0) throw PreconditionError("annular_twist: p must be nonzero (0-twist is the identity)");
    ExtendedRational inv_p(Integer(1), Integer(p));
    return {-inv_p + ExtendedRational(l), inv_p + ExtendedRational(l)};
}

Integer HopfPairState::determinant() const {
    return a.numerator() * b.numerator() - a.denominator() * b.denominator();
}

std::string HopfPairState::str() const { return "(" + a.str() + ", " + b.str() + ")"; }

HopfPairState hopf_twist_a(const HopfPairState& state, const Integer& m) {
    const Integer &x = state.a.numerator(), &y = state.a.denominator();
    const Integer &s = state.b.numerator(), &t = state.b.denominator();
    return {ExtendedRational(x, Integer(y + m * x)), ExtendedRational(Integer(s + m * t), t)};
}

HopfPairState hopf_twist_b(const HopfPairState& state, const Integer& n) {
    const Integer &x = state.a.numerator(), &y = state.a.denominator();
    const Integer &s = state.b.numerator(), &t = state.b.denominator();
    return {ExtendedRational(Integer(x + n * y), y), ExtendedRational(s, Integer(t + n * s))};
}

bool TwistSequence::is_alternating() const {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i > 0 && steps[i].component == steps[i - 1].component) return false;
        if (i + 1 < steps.size() && steps[i].count == 0) return false;
    }
    return true;
}

HopfPairState apply(const HopfPairState& state, const TwistStep& step) {
    return step.component == HopfComponent::A ? hopf_twist_a(state, step.count) : hopf_twist_b(state, step.count);
}

HopfPairState replay(HopfPairState state, const TwistSequence& seq) {
    for (const auto& step : seq.steps) state = apply(state, step);
    return state;
}

TwistSequence decompose(const HopfPairState& state) {
    TwistSequence seq;
    if (state.is_trivial()) return seq;
    if (abs_value(state.determinant()) != 1)
        throw PreconditionError("decompose: Hopf pair requires |xs - yt| = 1, got " + state.determinant().str());

    Integer x = state.a.numerator(), y = state.a.denominator();
    Integer s = state.b.numerator(), t = state.b.denominator();
    auto twist_a = [&](const Integer& m) {
        y += m * x;
        s += m * t;
        seq.steps.push_back({HopfComponent::A, m});
    };
    auto twist_b = [&](const Integer& n) {
        x += n * y;
        t += n * s;
        seq.steps.push_back({HopfComponent::B, n});
    };

    // Euclid on (x, y), alternating a-twists (y mod x) and b-twists
    // (x mod y), until y = 0. After the first step |y| < |x| before every
    // b-twist and |x| < |y| before every a-twist, so the quotients are
    // nonzero; the first a-twist and the |y| = 1 endgame pick the other
    // residue when the plain quotient would be 0.
    while (true) {
        // a-twist
        Integer m;
        if (x == 0) {
            m = 1;  // |y| = 1; only b changes, keeps the count nonzero
        } else if (y == 0) {
            m = 1;  // a = ∞ but b is not: leave ∞ to restart the reduction
        } else {
            m = -(y / x);
            if (m == 0) m = -sign_of(x) * sign_of(y);
        }
        assert(!(m == 0));
        twist_a(m);
        if (y == 0) break;

        // b-twist
        Integer n;
        if (abs_value(y) == 1) {
            // Land on x = ±1 so the next a-twist clears y.
            n = (y - x) * y;
            if (n == 0) n = (-y - x) * y;
        } else {
            n = -(x / y);
        }
        assert(!(n == 0));
        twist_b(n);
    }
    // a = ±1/0 and |s| = 1: clear t.
    twist_b(-t * s);
    assert(replay(state, seq).is_trivial());
    return seq;
}

TwistSequence inverse(const TwistSequence& seq) {
    TwistSequence out;
    for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it)
        if (it->count != 0) out.steps.push_back({it->component, Integer(-it->count)});
    return out;
}

ExtendedRational untangle_after_twist(const ExtendedRational& s, const Integer& n) {
    return (s.reciprocal() + ExtendedRational(n)).reciprocal();
}

ExtendedRational seiferter_twist_slope(const ExtendedRational& s, const Integer& n) {
    return -untangle_after_twist(s, n);
}

} // namespace ssn
