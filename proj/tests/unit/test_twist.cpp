#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ssn/errors.hpp"
#include "ssn/twist.hpp"

using namespace ssn;
using Q = ExtendedRational;
using oracle::i64;

namespace {

Q r(long n, long d = 1) { return Q(Integer(n), Integer(d)); }
const Q inf = Q::infinity();

// Unreduced (x, y, s, t) with the twist maps written out directly.
struct Raw {
    i64 x, y, s, t;
    void a(i64 m) { y += m * x, s += m * t; }
    void b(i64 n) { x += n * y, t += n * s; }
    i64 det() const { return x * s - y * t; }
    HopfPairState state() const {
        auto [p, q] = oracle::reduce(x, y);
        auto [u, v] = oracle::reduce(s, t);
        return {Q(Integer(p), Integer(q)), Q(Integer(u), Integer(v))};
    }
};

TwistSequence seq(std::initializer_list<std::pair<HopfComponent, long>> steps) {
    TwistSequence out;
    for (auto [c, k] : steps) out.steps.push_back({c, Integer(k)});
    return out;
}

bool alternates_from_a(const TwistSequence& s) {
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        if (s.steps[i].component != (i % 2 ? HopfComponent::B : HopfComponent::A)) return false;
        if (s.steps[i].count == 0 && i + 1 != s.steps.size()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("hopf twist examples") {
    CHECK(hopf_twist_a({inf, inf}, Integer(5)) == HopfPairState{r(1, 5), inf});
    CHECK(hopf_twist_b({inf, r(-1)}, Integer(1)) == HopfPairState{inf, inf});
    HopfPairState x{r(3, 7), r(-2, 5)};
    CHECK(hopf_twist_a(x, Integer(0)) == x);
    CHECK(hopf_twist_b(x, Integer(0)) == x);
    CHECK(hopf_twist_a(x, Integer(2)) == HopfPairState{r(3, 13), r(8, 5)});
    CHECK(hopf_twist_b(x, Integer(-1)) == HopfPairState{r(-4, 7), r(-2, 7)});
}

TEST_CASE("twist maps match the raw integer maps and keep the determinant") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<i64> count(-4, 4), len(1, 8), start(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 20000; ++i) {
        Raw raw{start(rng), start(rng), start(rng), start(rng)};
        if ((raw.x == 0 && raw.y == 0) || (raw.s == 0 && raw.t == 0)) continue;
        HopfPairState st = raw.state();
        i64 d0 = raw.det();
        i64 abs0 = st.determinant() < 0 ? -static_cast<i64>(st.determinant()) : static_cast<i64>(st.determinant());
        for (i64 k = len(rng); k > 0; --k) {
            i64 c = count(rng);
            if (coin(rng)) {
                raw.a(c);
                st = hopf_twist_a(st, Integer(c));
            } else {
                raw.b(c);
                st = hopf_twist_b(st, Integer(c));
            }
            REQUIRE(raw.det() == d0);
            if ((raw.x == 0 && raw.y == 0) || (raw.s == 0 && raw.t == 0)) break;
            CHECK(st == raw.state());
            Integer d = st.determinant();
            CHECK((d == abs0 || d == -abs0));
        }
    }
}

TEST_CASE("decompose examples") {
    CHECK(decompose({inf, inf}).steps.empty());
    auto one = decompose({r(1), r(0)});
    CHECK(one == seq({{HopfComponent::A, -1}, {HopfComponent::B, 1}}));
    CHECK(replay({r(1), r(0)}, one).is_trivial());

    HopfPairState em3{r(-3), r(0)};
    auto s = decompose(em3);
    CHECK(replay(em3, s).is_trivial());
    CHECK(alternates_from_a(s));
    CHECK(s.is_alternating());

    CHECK_THROWS_AS(decompose({r(2), r(3)}), PreconditionError);
    CHECK_THROWS_AS(decompose({r(1, 2), r(1, 2)}), PreconditionError);
}

TEST_CASE("decompose replays to (∞, ∞) on random unimodular states") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<i64> count(-9, 9), len(1, 12);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 3000; ++i) {
        Raw raw{1, 0, 1, 0};
        for (i64 k = len(rng); k > 0; --k) coin(rng) ? raw.a(count(rng)) : raw.b(count(rng));
        HopfPairState st = raw.state();
        CHECK((st.determinant() == 1 || st.determinant() == -1));
        auto s = decompose(st);
        CHECK(alternates_from_a(s));
        CHECK(s.is_alternating());
        CHECK(replay(st, s).is_trivial());
        // the inverse sequence rebuilds the state from (∞, ∞)
        CHECK(replay({inf, inf}, inverse(s)) == st);
    }
}

TEST_CASE("is_alternating") {
    CHECK(seq({}).is_alternating());
    CHECK(seq({{HopfComponent::A, 2}, {HopfComponent::B, 0}}).is_alternating());
    CHECK_FALSE(seq({{HopfComponent::A, 2}, {HopfComponent::A, 1}}).is_alternating());
    CHECK_FALSE(seq({{HopfComponent::A, 0}, {HopfComponent::B, 1}}).is_alternating());
}

TEST_CASE("annular twist") {
    CHECK(annular_twist(1, 0) == AnnularTwistSurgeries{r(-1), r(1)});
    CHECK(annular_twist(-2, 2) == AnnularTwistSurgeries{r(5, 2), r(3, 2)});
    CHECK(annular_twist(3, 1) == AnnularTwistSurgeries{r(2, 3), r(4, 3)});
    CHECK_THROWS_AS(annular_twist(0, 3), PreconditionError);
    for (i64 p = -12; p <= 12; ++p)
        for (i64 l = -12; l <= 12; ++l) {
            if (p == 0) continue;
            auto t = annular_twist(p, l);
            CHECK(t.c1_slope + t.c2_slope == Q(2 * l));
            auto u = annular_twist(-p, l);
            CHECK(u.c1_slope == t.c2_slope);
            CHECK(u.c2_slope == t.c1_slope);
        }
}

TEST_CASE("seiferter twist bookkeeping") {
    CHECK(seiferter_twist_slope(inf, Integer(4)) == r(-1, 4));
    CHECK(untangle_after_twist(inf, Integer(4)) == r(1, 4));
    for (long a = -6; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            for (long n = -5; n <= 5; ++n)
                for (long k = -5; k <= 5; ++k) {
                    if (std::gcd(a, b) != 1) continue;
                    Q s = r(a, b);
                    CHECK(untangle_after_twist(s, Integer(0)) == s);
                    CHECK(untangle_after_twist(untangle_after_twist(s, Integer(n)), Integer(k)) ==
                          untangle_after_twist(s, Integer(n + k)));
                    CHECK(seiferter_twist_slope(s, Integer(n)) == -untangle_after_twist(s, Integer(n)));
                }
}
