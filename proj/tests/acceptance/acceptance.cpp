// Runs the eight acceptance criteria, one PASS/FAIL line each. Reference
// values come from the 64-bit oracles shared with the unit tests.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "../unit/oracles.hpp"
#include "ssn/errors.hpp"
#include "ssn/network.hpp"
#include "ssn/verify.hpp"

using namespace ssn;
using Q = ExtendedRational;
using oracle::i64;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool slope_is(const Slope& s, i64 v) { return !s.is_symbolic() && s.value() == Q(v); }

// |p| and q mod |p| for the summand L(p, q).
std::pair<i64, i64> lens_pair(i64 p, i64 q) {
    i64 ap = p < 0 ? -p : p;
    if (ap <= 1) return {ap, 0};
    return {ap, ((q % ap) + ap) % ap};
}

std::pair<i64, i64> lens_pair(const LensParameters& l) {
    return lens_pair(static_cast<i64>(l.p), static_cast<i64>(l.q));
}

// Summand lists equal up to order and orientation.
bool same_summands(std::vector<std::pair<i64, i64>> a, std::vector<std::pair<i64, i64>> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        auto it = std::find_if(b.begin(), b.end(), [&](const auto& y) { return oracle::lens_equivalent(x, y); });
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

Outcome formula_reproduction(double& worst_ms) {
    Outcome o;
    auto timed = [&](auto&& f) {
        auto t0 = Clock::now();
        auto r = f();
        worst_ms = std::max(worst_ms, ms_since(t0));
        return r;
    };
    auto a = timed([] { return em1_vertex(1, 1, 0, false); });
    o.expect(slope_is(a.vertex.slope, -28), "em1_vertex(1,1,0) slope");
    o.expect(slope_is(a.vertex.slope, oracle::gamma_em1(1, 1, 0)), "em1 oracle disagrees");
    for (i64 l = -10; l <= 10; ++l) {
        auto v = timed([l] { return em2_vertex(l, 1, 0, 0, false); });
        o.expect(slope_is(v.vertex.slope, l * (1 - l)), "em2_vertex(l,1,0,0) slope at l=" + std::to_string(l));
        o.expect(slope_is(v.vertex.slope, oracle::gamma_em2(l, 1, 0, 0)), "em2 oracle disagrees");
    }
    auto b = timed([] { return em2_vertex(2, 2, 1, 0, false); });
    o.expect(slope_is(b.vertex.slope, 31), "em2_vertex(2,2,1,0) slope");
    o.expect(worst_ms < 1.0, "a single evaluation took " + std::to_string(worst_ms) + " ms");
    return o;
}

Outcome overlap_identities() {
    Outcome o;
    int compared = 0;
    for (i64 l = -20; l <= 20; ++l)
        for (bool mo : {false, true}) {
            try {
                auto x = em1_vertex(l, 0, 0, mo, FormulaBranch::N);
                auto y = em1_vertex(l, 0, 0, mo, FormulaBranch::P);
                std::string at = " at l=" + std::to_string(l) + (mo ? " (γ-1)" : "");
                o.expect(x.vertex.slope == y.vertex.slope, "slopes differ" + at);
                o.expect(slope_is(x.vertex.slope, oracle::gamma_em1(l, 0, 0) - (mo ? 1 : 0)), "oracle slope" + at);
                o.expect(x.space == y.space, "invariants differ" + at);
                ++compared;
            } catch (const ArithmeticError&) {
                // a displayed denominator and numerator both vanish
            }
        }
    o.expect(compared >= 80, "too few comparable l values");
    return o;
}

Outcome slope_identity() {
    Outcome o;
    for (i64 l = -10; l <= 10; ++l)
        for (i64 m = -10; m <= 10; ++m) {
            std::string at = " at (" + std::to_string(l) + "," + std::to_string(m) + ")";
            o.expect(em2_slope(l, m, 0, 1) == em2_slope(l, m - 1, 1, 0), "γ identity fails" + at);
            o.expect(oracle::gamma_em2(l, m, 0, 1) == oracle::gamma_em2(l, m - 1, 1, 0), "oracle identity fails" + at);
            o.expect(em2_slope(l, m, 0, 1) == oracle::gamma_em2(l, m, 0, 1), "oracle value" + at);
        }
    return o;
}

Outcome homeomorphism_oracle() {
    Outcome o;
    int compared = 0;
    for (i64 l = -5; l <= 5; ++l)
        for (i64 m = -5; m <= 5; ++m) {
            SeifertInvariants x, y;
            try {
                x = em2_vertex(l, m, 0, 1, false).space;
                y = em2_vertex(l, m - 1, 1, 0, false).space;
            } catch (const ArithmeticError&) {
                continue;
            }
            if (x.is_degenerate() || y.is_degenerate()) continue;
            o.expect(is_homeomorphic(x, y), "not homeomorphic at (" + std::to_string(l) + "," + std::to_string(m) +
                                                "): " + x.str() + " vs " + y.str());
            ++compared;
        }
    o.expect(compared >= 60, "too few non-degenerate (l, m)");
    return o;
}

Outcome reducible_recognition() {
    Outcome o;
    for (i64 l : {2, 3, 4, 5, 6, -2, -3, -4, -5, -6}) {
        std::string at = " at l=" + std::to_string(l);
        auto c = recognize(em2_vertex(l, 1, 0, 0, false).space);
        auto t = recognize(torus_reducible_surgery(l, 1 - l).space);
        o.expect(c.kind == SfsKind::ConnectedSumOfLensSpaces, "not a connected sum" + at);
        o.expect(t.kind == SfsKind::ConnectedSumOfLensSpaces, "torus surgery not a connected sum" + at);
        std::vector<std::pair<i64, i64>> got, torus;
        for (const auto& s : c.lens) got.push_back(lens_pair(s));
        for (const auto& s : t.lens) torus.push_back(lens_pair(s));
        // L(p, q) # L(q, p) with (p, q) = (l, 1 - l)
        std::vector<std::pair<i64, i64>> expected{lens_pair(l, 1 - l), lens_pair(1 - l, l)};
        o.expect(same_summands(got, torus), "summands differ from the torus knot surgery" + at);
        o.expect(same_summands(got, expected), "summands differ from L(p,q) # L(q,p)" + at);
    }
    return o;
}

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

bool canonical_alternation(const TwistSequence& s) {
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        if (s.steps[i].component != (i % 2 ? HopfComponent::B : HopfComponent::A)) return false;
        if (s.steps[i].count == 0 && i + 1 != s.steps.size()) return false;
    }
    return true;
}

Outcome twist_calculus() {
    Outcome o;
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<i64> count(-5, 5), start(-4, 4);
    std::uniform_int_distribution<int> coin(0, 1);

    // 10⁵ single applications, in short chains from fresh states
    int applied = 0;
    while (applied < 100000) {
        Raw raw{start(rng), start(rng), start(rng), start(rng)};
        if ((raw.x == 0 && raw.y == 0) || (raw.s == 0 && raw.t == 0)) continue;
        HopfPairState st = raw.state();
        Integer d0 = st.determinant();
        i64 raw0 = raw.det();
        for (int k = 0; k < 6 && applied < 100000; ++k, ++applied) {
            i64 c = count(rng);
            if (coin(rng)) {
                raw.a(c);
                st = hopf_twist_a(st, Integer(c));
            } else {
                raw.b(c);
                st = hopf_twist_b(st, Integer(c));
            }
            Integer d = st.determinant();
            o.expect(d == d0 || d == -d0, "determinant changed at " + st.str());
            o.expect(raw.det() == raw0, "raw determinant changed");
            o.expect(st == raw.state(), "twist map disagrees with the raw map at " + st.str());
        }
    }

    std::uniform_int_distribution<i64> big(-12, 12), len(1, 10);
    for (int i = 0; i < 1000; ++i) {
        Raw raw{1, 0, 1, 0};
        for (i64 k = len(rng); k > 0; --k) coin(rng) ? raw.a(big(rng)) : raw.b(big(rng));
        HopfPairState st = raw.state();
        auto seq = decompose(st);
        o.expect(replay(st, seq).is_trivial(), "replay misses (∞, ∞) from " + st.str());
        o.expect(canonical_alternation(seq), "alternation broken for " + st.str());
    }

    auto triples = em3_parameter_search(100);
    o.expect(triples.size() == 100, "parameter search found fewer than 100 triples");
    for (const auto& [a1, a2, a3] : triples) {
        // the identity itself, evaluated on plain integers
        auto num = [](const Q& q) { return static_cast<i64>(q.numerator()); };
        auto den = [](const Q& q) { return static_cast<i64>(q.denominator()); };
        bool holds = false;
        if (num(a3) == 1 || num(a3) == -1)
            holds |= oracle::em3_identity(num(a3) * den(a3), num(a1), den(a1), num(a2), den(a2));
        if (num(a1) == 1 || num(a1) == -1)
            holds |= oracle::em3_identity(num(a1) * den(a1), num(a2), den(a2), num(a3), den(a3));
        if (num(a2) == 1 || num(a2) == -1)
            holds |= oracle::em3_identity(num(a2) * den(a2), num(a1), den(a1), num(a3), den(a3));
        std::string at = " for (" + a1.str() + ", " + a2.str() + ", " + a3.str() + ")";
        o.expect(holds, "searched triple fails the identity" + at);
        HopfPairState st = em3_hopf_pair(a1, a2, a3).state;
        Integer d = st.determinant();
        o.expect(d == 1 || d == -1, "Hopf pair determinant not ±1" + at);
        auto seq = decompose(st);
        o.expect(replay(st, seq).is_trivial(), "replay misses (∞, ∞)" + at);
        o.expect(canonical_alternation(seq), "alternation broken" + at);
    }
    return o;
}

Outcome path_soundness() {
    Outcome o;
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<i64> small(-10, 10), mm(1, 8);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 500; ++i) {
        i64 l = small(rng), k = small(rng), m = mm(rng);
        bool on_p = coin(rng), mo = coin(rng);
        i64 n = on_p ? 0 : k, p = on_p ? k : 0, sh = mo ? 1 : 0;
        std::string at = " at (l,m,n,p)=(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) +
                         "," + std::to_string(p) + ")" + (mo ? " γ-1" : "");

        auto e1 = em1_path(l, n, p, mo);
        o.expect(slope_is(e1.start.slope, oracle::gamma_em1(l, n, p) - sh), "em1 start slope" + at);
        for (const auto& s : e1.steps) {
            if (std::holds_alternative<Em1Knot>(s.vertex.knot)) {
                auto kn = std::get<Em1Knot>(s.vertex.knot);
                o.expect(slope_is(s.vertex.slope, oracle::gamma_em1(kn.l, kn.n, kn.p) - sh), "em1 step slope" + at);
            }
        }
        const auto& t1 = e1.terminal();
        o.expect(std::holds_alternative<Unknot>(t1.knot) && slope_is(t1.slope, -sh), "em1 terminal" + at);

        auto e2 = em2_path(l, m, n, p, mo);
        o.expect(slope_is(e2.start.slope, oracle::gamma_em2(l, m, n, p) - sh), "em2 start slope" + at);
        auto check_em2 = [&](const SurgeryVertex& v) {
            if (!std::holds_alternative<Em2Knot>(v.knot)) return;
            auto kn = std::get<Em2Knot>(v.knot);
            o.expect(slope_is(v.slope, oracle::gamma_em2(kn.l, kn.m, kn.n, kn.p) - sh),
                     "em2 slope at " + v.id() + at);
        };
        for (const auto& s : e2.steps) {
            check_em2(s.vertex);
            if (s.identified_with) check_em2(*s.identified_with);
            if (s.identified_with && std::holds_alternative<Em2Knot>(s.vertex.knot))
                o.expect(s.vertex.slope == s.identified_with->slope, "identified vertices disagree" + at);
        }
        const auto& t2 = e2.terminal();
        bool torus_ok = (l == 0 || l == 1) ? std::holds_alternative<Unknot>(t2.knot)
                                           : std::holds_alternative<TorusKnot>(t2.knot) &&
                                                 std::get<TorusKnot>(t2.knot) == TorusKnot{l, 1 - l};
        o.expect(torus_ok && slope_is(t2.slope, l * (1 - l) - sh), "em2 terminal" + at);
    }
    return o;
}

Outcome round_trips() {
    Outcome o;
    std::mt19937_64 rng(81);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 10000; ++i) {
        Q r(Integer(num(rng)), Integer(den(rng)));
        auto cf = cf_expand(r);
        o.expect(cf_eval(cf) == r, "cf round trip fails at " + r.str());
        std::vector<i64> terms;
        for (const auto& t : cf.terms) terms.push_back(static_cast<i64>(t));
        auto [p, q] = oracle::cf_matrix(terms);
        o.expect(r == Q(Integer(p), Integer(q)), "matrix oracle disagrees at " + r.str());
    }
    std::uniform_int_distribution<long> n2(-100, 100), d2(1, 40), len(1, 7);
    for (int i = 0; i < 10000; ++i) {
        SeifertInvariants si{i % 3 ? BaseSurface::Sphere : BaseSurface::ProjectivePlane, {}};
        for (long k = len(rng); k > 0; --k) si.coefficients.emplace_back(Integer(n2(rng)), Integer(d2(rng)));
        auto once = normalize(si);
        o.expect(normalize(once) == once, "normalize not idempotent at " + si.str());
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_ms;
        std::function<Outcome()> run;
    };
    double worst_single = 0;
    const std::vector<Criterion> criteria{
        {1, "formula reproduction", 1e9, [&] { return formula_reproduction(worst_single); }},
        {2, "overlap identities", 1000, overlap_identities},
        {3, "slope identity", 1000, slope_identity},
        {4, "homeomorphism oracle", 1000, homeomorphism_oracle},
        {5, "reducible recognition", 1000, reducible_recognition},
        {6, "twist calculus", 10000, twist_calculus},
        {7, "path soundness", 5000, path_soundness},
        {8, "round trips", 5000, round_trips},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double ms = ms_since(t0);
        if (o.ok && ms >= c.budget_ms) {
            o.ok = false;
            o.detail = "over the " + std::to_string(static_cast<int>(c.budget_ms)) + " ms budget";
        }
        std::string timing = c.id == 1 ? "worst single call " + std::to_string(worst_single) + " ms"
                                       : std::to_string(ms) + " ms";
        std::printf("%s criterion %d: %s (%s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, timing.c_str(),
                    o.ok ? "" : ": ", o.detail.c_str());
        if (!o.ok) ++failed;
    }
    return failed ? 1 : 0;
}
