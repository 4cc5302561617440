#include "ssn/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "ssn/errors.hpp"
#include "ssn/families.hpp"
#include "ssn/network.hpp"
#include "ssn/seifert.hpp"
#include "ssn/twist.hpp"

namespace ssn {

namespace {

using Q = ExtendedRational;
using Rng = std::mt19937_64;

constexpr std::size_t kMaxReported = 20;

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    // Counts one case; records `detail()` when `ok` is false.
    template <typename Detail>
    void expect(bool ok, Detail&& detail) {
        ++result_.cases;
        if (ok) return;
        ++failed_;
        if (result_.failures.size() < kMaxReported) result_.failures.push_back(detail());
    }

    CheckResult finish() {
        if (failed_ > kMaxReported) {
            std::ostringstream os;
            os << "... " << failed_ - kMaxReported << " more";
            result_.failures.push_back(os.str());
        }
        return std::move(result_);
    }

private:
    CheckResult result_;
    std::size_t failed_ = 0;
};

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Q random_rational(Rng& rng, std::int64_t bound) {
    return Q(Integer(uniform(rng, -bound, bound)), Integer(uniform(rng, 1, bound)));
}

SeifertInvariants random_invariants(Rng& rng, BaseSurface base) {
    SeifertInvariants si{base, {}};
    auto k = uniform(rng, 1, 5);
    for (std::int64_t i = 0; i < k; ++i) si.coefficients.push_back(random_rational(rng, 40));
    return si;
}

HopfPairState random_hopf_state(Rng& rng) {
    HopfPairState s;
    auto steps = uniform(rng, 1, 10);
    for (std::int64_t i = 0; i < steps; ++i) {
        Integer c = uniform(rng, -6, 6);
        s = (i % 2 == 0) ? hopf_twist_a(s, c) : hopf_twist_b(s, c);
    }
    return s;
}

std::string tuple(std::initializer_list<std::int64_t> xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto x : xs) os << (std::exchange(first, false) ? "" : ",") << x;
    os << ')';
    return os.str();
}

// --- seifert-spaces ---

CheckResult montesinos_arity(const VerifyOptions& o) {
    Check c("seifert.montesinos_to_sfs");
    Rng rng(o.seed + 1);
    for (std::size_t i = 0; i < o.fuzz; ++i) {
        std::vector<Q> ratios;
        auto k = uniform(rng, 1, 5);
        for (std::int64_t j = 0; j < k; ++j) ratios.push_back(random_rational(rng, 30));
        auto si = montesinos_to_sfs(BaseSurface::Sphere, ratios);
        bool ok = si.coefficients.size() == ratios.size();
        for (std::size_t j = 0; ok && j < ratios.size(); ++j)
            ok = ratios[j].is_zero() ? si.coefficients[j].is_infinite() : si.coefficients[j] * ratios[j] == Q(-1);
        c.expect(ok, [&] { return "montesinos_to_sfs coefficient is not -1/r for " + si.str(); });
    }
    return c.finish();
}

CheckResult normalize_idempotent(const VerifyOptions& o) {
    Check c("seifert.normalize_idempotent");
    Rng rng(o.seed + 2);
    for (std::size_t i = 0; i < o.fuzz; ++i) {
        auto si = random_invariants(rng, i % 3 == 0 ? BaseSurface::ProjectivePlane : BaseSurface::Sphere);
        auto once = normalize(si);
        c.expect(normalize(once) == once && is_homeomorphic(si, once),
                 [&] { return "normalize not idempotent on " + si.str(); });
    }
    return c.finish();
}

CheckResult homeomorphic_moves(const VerifyOptions& o) {
    Check c("seifert.is_homeomorphic_moves");
    Rng rng(o.seed + 3);
    for (std::size_t i = 0; i < o.fuzz; ++i) {
        auto x = random_invariants(rng, BaseSurface::Sphere);
        auto y = random_invariants(rng, BaseSurface::Sphere);
        auto permuted = x;
        std::shuffle(permuted.coefficients.begin(), permuted.coefficients.end(), rng);
        auto shifted = x;
        if (shifted.coefficients.size() >= 2) {
            shifted.coefficients[0] += Q(1);
            shifted.coefficients[1] -= Q(1);
        }
        c.expect(is_homeomorphic(x, x), [&] { return "not reflexive on " + x.str(); });
        c.expect(is_homeomorphic(x, y) == is_homeomorphic(y, x),
                 [&] { return "not symmetric on " + x.str() + ", " + y.str(); });
        c.expect(is_homeomorphic(x, permuted), [&] { return "permutation changed class of " + x.str(); });
        c.expect(is_homeomorphic(x, shifted), [&] { return "+1/-1 shift changed class of " + x.str(); });
        c.expect(is_homeomorphic(x, reverse_orientation(x)), [&] { return "orientation reversal on " + x.str(); });
    }
    return c.finish();
}

CheckResult recognize_normalize(const VerifyOptions& o) {
    Check c("seifert.recognize_normalize");
    Rng rng(o.seed + 4);
    for (std::size_t i = 0; i < o.fuzz; ++i) {
        auto si = random_invariants(rng, i % 4 == 0 ? BaseSurface::ProjectivePlane : BaseSurface::Sphere);
        c.expect(recognize(si) == recognize(normalize(si)), [&] { return "recognize differs after normalize: " + si.str(); });
    }
    return c.finish();
}

// --- surgery-families ---

CheckResult em1_overlap(const VerifyOptions&) {
    Check c("families.em1_overlap");
    for (std::int64_t l = -20; l <= 20; ++l)
        for (bool mo : {false, true}) {
            auto a = em1_vertex(l, 0, 0, mo, FormulaBranch::N);
            auto b = em1_vertex(l, 0, 0, mo, FormulaBranch::P);
            c.expect(a.vertex.slope == b.vertex.slope && a.space == b.space,
                     [&] {
                         return "EM1 n/p branches differ at l=" + std::to_string(l) + (mo ? " (gamma-1): " : ": ") +
                                a.space.str() + " vs " + b.space.str();
                     });
        }
    return c.finish();
}

CheckResult em2_overlap(const VerifyOptions& o) {
    Check c("families.em2_overlap");
    for (std::int64_t l = o.lo; l <= o.hi; ++l)
        for (std::int64_t m = o.lo; m <= o.hi; ++m)
            for (bool mo : {false, true}) {
                auto a = em2_vertex(l, m, 0, 0, mo, FormulaBranch::N);
                auto b = em2_vertex(l, m, 0, 0, mo, FormulaBranch::P);
                c.expect(a.vertex.slope == b.vertex.slope && a.space == b.space, [&] {
                    return "EM2 n/p branches differ at (l,m)=" + tuple({l, m}) + ": " + a.space.str() + " vs " +
                           b.space.str();
                });
            }
    return c.finish();
}

CheckResult em2_slope_identity(const VerifyOptions& o) {
    Check c("families.em2_slope_identity");
    for (std::int64_t l = o.lo; l <= o.hi; ++l)
        for (std::int64_t m = o.lo; m <= o.hi; ++m)
            c.expect(em2_slope(l, m, 0, 1) == em2_slope(l, m - 1, 1, 0), [&] {
                return "gamma(l,m,0,1) != gamma(l,m-1,1,0) at (l,m)=" + tuple({l, m});
            });
    return c.finish();
}

CheckResult em2_stair_homeomorphic(const VerifyOptions&) {
    Check c("families.em2_stair_homeomorphic");
    for (std::int64_t l = -5; l <= 5; ++l)
        for (std::int64_t m = -5; m <= 5; ++m)
            for (bool mo : {false, true}) {
                auto a = em2_vertex(l, m, 0, 1, mo).space;
                auto b = em2_vertex(l, m - 1, 1, 0, mo).space;
                if (a.is_degenerate() || b.is_degenerate()) continue;
                c.expect(is_homeomorphic(a, b), [&] {
                    return "K(l,m,0,1) vs K(l,m-1,1,0) spaces differ at (l,m)=" + tuple({l, m}) + (mo ? " (gamma-1)" : "") +
                           ": " + a.str() + " vs " + b.str();
                });
            }
    return c.finish();
}

bool lens_multiset_match(std::vector<LensParameters> a, std::vector<LensParameters> b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && lens_homeomorphic(x, b[j])) used[j] = found = true;
        if (!found) return false;
    }
    return true;
}

CheckResult em2_reducible(const VerifyOptions& o) {
    Check c("families.em2_reducible");
    for (std::int64_t l = o.lo; l <= o.hi; ++l) {
        if (l >= -1 && l <= 1) continue;
        auto em2 = em2_vertex(l, 1, 0, 0, false);
        auto torus = torus_reducible_surgery(l, 1 - l);
        auto x = recognize(em2.space), y = recognize(torus.space);
        c.expect(x.kind == SfsKind::ConnectedSumOfLensSpaces && lens_multiset_match(x.lens, y.lens) &&
                     em2.vertex.slope == torus.vertex.slope,
                 [&] { return "K(l,1,0,0)(gamma) is not T_{l,1-l}(l(1-l)) at l=" + std::to_string(l); });
    }
    return c.finish();
}

CheckResult em3_vertices(const VerifyOptions&) {
    Check c("families.em3_vertices");
    for (const auto& [a1, a2, a3] : em3_parameter_search(100)) {
        auto r = em3_vertex(a1, a2, a3);
        std::vector<Integer> indices, expected;
        for (const auto& q : r.space.coefficients) indices.push_back(q.is_infinite() ? Integer(0) : q.denominator());
        for (const Q& x : {a1 - Q(2), a2 - Q(2), a3 + Q(1)}) expected.push_back(abs(x.numerator()));
        auto d = em3_surgery_description(a1, a2, a3);
        c.expect(indices == expected && d.coefficient('k') == Q(-1), [&] {
            return "EM3 fiber indices or description wrong for " + a1.str() + ", " + a2.str() + ", " + a3.str();
        });
    }
    return c.finish();
}

// --- twist-calculus ---

CheckResult determinant_invariance(const VerifyOptions& o) {
    Check c("twist.determinant_invariance");
    Rng rng(o.seed + 5);
    for (std::size_t i = 0; i < o.fuzz; ++i) {
        HopfPairState s{random_rational(rng, 50), random_rational(rng, 50)};
        if (s.a.is_zero() && s.b.is_zero()) continue;
        Integer k = uniform(rng, -20, 20);
        auto after = (i % 2) ? hopf_twist_a(s, k) : hopf_twist_b(s, k);
        c.expect(abs(after.determinant()) == abs(s.determinant()),
                 [&] { return "determinant changed by a twist at " + s.str(); });
    }
    return c.finish();
}

CheckResult decompose_soundness(const VerifyOptions& o) {
    Check c("twist.decompose");
    Rng rng(o.seed + 6);
    for (std::size_t i = 0; i < o.fuzz; ++i) {
        auto s = random_hopf_state(rng);
        auto seq = decompose(s);
        c.expect(replay(s, seq).is_trivial() && seq.is_alternating() &&
                     (seq.steps.empty() || seq.steps.front().component == HopfComponent::A),
                 [&] { return "decompose does not replay to (inf, inf) from " + s.str(); });
        c.expect(replay(HopfPairState{}, inverse(seq)) == s, [&] { return "inverse sequence misses " + s.str(); });
    }
    return c.finish();
}

CheckResult annular_sum(const VerifyOptions& o) {
    Check c("twist.annular_twist");
    for (std::int64_t p = o.lo; p <= o.hi; ++p)
        for (std::int64_t l = o.lo; l <= o.hi; ++l) {
            if (p == 0) continue;
            auto t = annular_twist(p, l), u = annular_twist(-p, l);
            c.expect(t.c1_slope + t.c2_slope == Q(2 * l) && u.c1_slope == t.c2_slope && u.c2_slope == t.c1_slope,
                     [&] { return "annular twist slopes wrong at (p,l)=" + tuple({p, l}); });
        }
    return c.finish();
}

CheckResult seiferter_additivity(const VerifyOptions& o) {
    Check c("twist.seiferter_additivity");
    for (std::int64_t n = o.lo; n <= o.hi; ++n)
        for (std::int64_t k = o.lo; k <= o.hi; ++k) {
            Q s = Q::infinity();
            Q stepwise = untangle_after_twist(untangle_after_twist(s, n), k);
            c.expect(stepwise == untangle_after_twist(s, n + k) && untangle_after_twist(s, 0) == s,
                     [&] { return "n- and k-twists do not compose at (n,k)=" + tuple({n, k}); });
        }
    return c.finish();
}

// --- network ---

bool slope_rederived(const SurgeryVertex& v, bool minus_one) {
    Integer off = minus_one ? 1 : 0;
    if (auto k = std::get_if<Em1Knot>(&v.knot)) return v.slope == Slope(Q(em1_slope(k->l, k->n, k->p) - off));
    if (auto k = std::get_if<Em2Knot>(&v.knot)) return v.slope == Slope(Q(em2_slope(k->l, k->m, k->n, k->p) - off));
    return true;
}

bool path_sound(const NetworkPath& path, bool minus_one) {
    if (!slope_rederived(path.start, minus_one)) return false;
    if (path.start_identified_with && !slope_rederived(*path.start_identified_with, minus_one)) return false;
    for (const auto& s : path.steps) {
        if (!slope_rederived(s.vertex, minus_one)) return false;
        if (s.identified_with && !slope_rederived(*s.identified_with, minus_one)) return false;
    }
    return true;
}

CheckResult em1_paths(const VerifyOptions& o) {
    Check c("network.em1_paths");
    for (std::int64_t l = o.lo; l <= o.hi; ++l)
        for (std::int64_t n = o.lo; n <= o.hi; ++n)
            for (std::int64_t p = o.lo; p <= o.hi; ++p) {
                if (n != 0 && p != 0) continue;
                for (bool mo : {false, true}) {
                    auto path = em1_path(l, n, p, mo);
                    const auto& t = path.terminal();
                    bool ok = path_sound(path, mo) && std::holds_alternative<Unknot>(t.knot) &&
                              t.slope == Slope(mo ? -1 : 0) && path.steps.size() <= 2;
                    c.expect(ok, [&] { return "EM1 path unsound at (l,n,p)=" + tuple({l, n, p}) + (mo ? " gamma-1" : ""); });
                }
            }
    return c.finish();
}

CheckResult em2_paths(const VerifyOptions& o) {
    Check c("network.em2_paths");
    for (std::int64_t l = o.lo; l <= o.hi; ++l)
        for (std::int64_t m = 1; m <= o.hi; ++m)
            for (std::int64_t n = o.lo; n <= o.hi; ++n)
                for (std::int64_t p = o.lo; p <= o.hi; ++p) {
                    if (n != 0 && p != 0) continue;
                    bool mo = (l + m + n + p) % 2 != 0;
                    auto path = em2_path(l, m, n, p, mo);
                    const auto& t = path.terminal();
                    bool basic = is_basic(t.knot);
                    bool slope = t.slope == Slope(Q(Integer(l) * (1 - l) - (mo ? 1 : 0)));
                    std::size_t expected = ((n != 0 || p != 0) ? 1 : 0) + 2 * static_cast<std::size_t>(m - 1);
                    bool stair = true;
                    for (const auto& s : path.steps)
                        if (s.identified_with) stair = stair && s.identified_with->slope == s.vertex.slope;
                    c.expect(path_sound(path, mo) && basic && slope && stair && path.steps.size() == expected,
                             [&] { return "EM2 path unsound at (l,m,n,p)=" + tuple({l, m, n, p}); });
                }
    return c.finish();
}

CheckResult em3_paths(const VerifyOptions&) {
    Check c("network.em3_paths");
    for (const auto& [a1, a2, a3] : em3_parameter_search(100)) {
        auto pair = em3_hopf_pair(a1, a2, a3);
        auto path = em3_path(a1, a2, a3);
        HopfPairState state = pair.state;
        for (const auto& s : path.steps) {
            bool is_a = s.move.name[0] == pair.first;
            state = is_a ? hopf_twist_a(state, s.move.count) : hopf_twist_b(state, s.move.count);
        }
        c.expect(abs(pair.state.determinant()) == 1 && state.is_trivial() && is_basic(path.terminal().knot), [&] {
            return "EM3 Hopf pair fails at (" + a1.str() + ", " + a2.str() + ", " + a3.str() + "): " + pair.state.str();
        });
    }
    return c.finish();
}

using CheckFn = std::function<CheckResult(const VerifyOptions&)>;

std::vector<std::pair<std::string, CheckFn>> all_checks() {
    return {
        {"seifert.montesinos_to_sfs", montesinos_arity},
        {"seifert.normalize_idempotent", normalize_idempotent},
        {"seifert.is_homeomorphic_moves", homeomorphic_moves},
        {"seifert.recognize_normalize", recognize_normalize},
        {"families.em1_overlap", em1_overlap},
        {"families.em2_overlap", em2_overlap},
        {"families.em2_slope_identity", em2_slope_identity},
        {"families.em2_stair_homeomorphic", em2_stair_homeomorphic},
        {"families.em2_reducible", em2_reducible},
        {"families.em3_vertices", em3_vertices},
        {"twist.determinant_invariance", determinant_invariance},
        {"twist.decompose", decompose_soundness},
        {"twist.annular_twist", annular_sum},
        {"twist.seiferter_additivity", seiferter_additivity},
        {"network.em1_paths", em1_paths},
        {"network.em2_paths", em2_paths},
        {"network.em3_paths", em3_paths},
    };
}

} // namespace

std::vector<std::array<ExtendedRational, 3>> em3_parameter_search(std::size_t count) {
    std::vector<Q> values;
    for (std::int64_t den = 1; den <= 5; ++den)
        for (std::int64_t num = -9; num <= 9; ++num)
            if (gcd(Integer(num), Integer(den)) == 1) values.emplace_back(Integer(num), Integer(den));
    std::sort(values.begin(), values.end(), [](const Q& a, const Q& b) {
        Integer ha = std::max(Integer(abs(a.numerator())), a.denominator());
        Integer hb = std::max(Integer(abs(b.numerator())), b.denominator());
        return ha != hb ? ha < hb : a < b;
    });
    auto allowed = [](const Q& a1, const Q& a2, const Q& a3) {
        try {
            check_em3_parameters(a1, a2, a3);
            return true;
        } catch (const PreconditionError&) {
            return false;
        }
    };
    std::vector<std::array<Q, 3>> out;
    for (const auto& a3 : values)
        for (const auto& a1 : values)
            for (const auto& a2 : values) {
                if (out.size() >= count) return out;
                if (allowed(a1, a2, a3) && em3_trivializable(a1, a2, a3)) out.push_back({a1, a2, a3});
            }
    return out;
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    for (const auto& [name, check] : all_checks()) {
        try {
            results.push_back(check(options));
        } catch (const std::exception& e) {
            results.push_back({name, 0, {std::string("unexpected exception: ") + e.what()}});
        }
    }
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return results;
}

} // namespace ssn
