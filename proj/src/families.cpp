#include "ssn/families.hpp"

#include <array>
#include <limits>
#include <optional>
#include <sstream>

#include "ssn/errors.hpp"

namespace ssn {

namespace {

using Q = ExtendedRational;

Q frac(const Integer& num, const Integer& den) {
    if (num == 0 && den == 0) throw ArithmeticError("surgery family coefficient evaluated to 0/0");
    return Q(num, den);
}

std::int64_t to_int64(const Integer& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw PreconditionError(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

void require_np(const char* op, std::int64_t n, std::int64_t p) {
    if (n != 0 && p != 0) {
        std::ostringstream os;
        os << op << ": Q + R(∞) is a trivial knot if and only if n or p is 0 (n·p = 0), got n=" << n << ", p=" << p;
        throw PreconditionError(os.str());
    }
}

// The integer 1/r for r = ±1/k, if r has that form.
std::optional<Integer> unit_reciprocal(const Q& r) {
    if (r.is_infinite() || r.is_zero()) return std::nullopt;
    if (r.numerator() != 1 && r.numerator() != -1) return std::nullopt;
    return r.numerator() * r.denominator();
}

bool is_unit(const Integer& v) { return v == 1 || v == -1; }

// True for the n-branch formulas.
bool n_branch(const char* op, std::int64_t n, std::int64_t p, FormulaBranch branch) {
    require_np(op, n, p);
    switch (branch) {
    case FormulaBranch::Auto: return p == 0;
    case FormulaBranch::N:
        if (p != 0) throw PreconditionError(std::string(op) + ": the n-branch formula needs p = 0");
        return true;
    case FormulaBranch::P:
        if (n != 0) throw PreconditionError(std::string(op) + ": the p-branch formula needs n = 0");
        return false;
    }
    return true;
}

} // namespace

std::string to_string(const KnotId& knot) {
    std::ostringstream os;
    std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Em1Knot>) {
                os << "EM1(" << k.l << ',' << k.n << ',' << k.p << ')';
            } else if constexpr (std::is_same_v<T, Em2Knot>) {
                os << "EM2(" << k.l << ',' << k.m << ',' << k.n << ',' << k.p << ')';
            } else if constexpr (std::is_same_v<T, Em3Knot>) {
                os << "EM3(" << k.a1 << ',' << k.a2 << ',' << k.a3 << ')';
            } else if constexpr (std::is_same_v<T, TorusKnot>) {
                os << "Torus(" << k.p << ',' << k.q << ')';
            } else if constexpr (std::is_same_v<T, Unknot>) {
                os << "Unknot";
            } else {
                os << "Hopf(" << k.first << '=' << k.state.a << ',' << k.second << '=' << k.state.b << ')';
            }
        },
        knot);
    return os.str();
}

bool is_basic(const KnotId& knot) {
    return std::holds_alternative<TorusKnot>(knot) || std::holds_alternative<Unknot>(knot);
}

const ExtendedRational& Slope::value() const {
    if (!value_) throw PreconditionError("slope \"" + symbol_ + "\" has no numeric value");
    return *value_;
}

std::string Slope::str() const { return value_ ? value_->str() : symbol_; }

std::string Slope::json_str() const { return value_ ? value_->fraction_str() : symbol_; }

std::string SurgeryVertex::id() const { return to_string(knot) + "@" + slope.str(); }

Integer em1_slope(std::int64_t l_, std::int64_t n_, std::int64_t p_, FormulaBranch branch) {
    bool nb = n_branch("em1_slope", n_, p_, branch);
    Integer l = l_, n = n_, p = p_;
    if (nb) return 12 * l * l - 4 * l - 36 * l * l * n;
    return 12 * l * l - 4 * l - 4 * p * (3 * l - 1);
}

Integer em2_slope(std::int64_t l_, std::int64_t m_, std::int64_t n_, std::int64_t p_, FormulaBranch branch) {
    bool nb = n_branch("em2_slope", n_, p_, branch);
    Integer l = l_, m = m_, n = n_, p = p_;
    Integer base = l * (2 * m - 1) * (1 - l * m);
    if (nb) {
        Integer w = 2 * l * m - 1;
        return base + n * w * w;
    }
    Integer w = 2 * l * m - l - 1;
    return base + p * w * w;
}

SurgeryResult em1_vertex(std::int64_t l_, std::int64_t n_, std::int64_t p_, bool minus_one, FormulaBranch branch) {
    bool nb = n_branch("em1_vertex", n_, p_, branch);
    Integer slope = em1_slope(l_, n_, p_, branch) - (minus_one ? 1 : 0);
    Integer l = l_, n = n_, p = p_;
    SeifertInvariants space;
    if (nb) {
        if (!minus_one)
            space = {BaseSurface::ProjectivePlane,
                     {frac(-6 * l * n + 2 * l + n - 1, 9 * l * n - 3 * l + 1), frac(-1, l)}};
        else
            space = {BaseSurface::Sphere,
                     {frac(-1, 3), frac(6 * l * n - 2 * l - n + 1, 9 * l * n - 3 * l - 3 * n + 2), frac(l, l + 1)}};
    } else {
        if (!minus_one)
            space = {BaseSurface::ProjectivePlane,
                     {frac(-2 * l + 1, 3 * l - 1), frac(-3 * p + 1, 3 * l * p - l - p)}};
        else
            space = {BaseSurface::Sphere,
                     {frac(-1, 3), frac(2 * l - 1, 3 * l - 2), frac(3 * l * p - l - p, 3 * l * p - l + 2 * p - 1)}};
    }
    return {{Em1Knot{l_, n_, p_}, Slope(Q(slope))}, std::move(space)};
}

SurgeryResult em2_vertex(std::int64_t l_, std::int64_t m_, std::int64_t n_, std::int64_t p_, bool minus_one,
                         FormulaBranch branch) {
    bool nb = n_branch("em2_vertex", n_, p_, branch);
    Integer slope = em2_slope(l_, m_, n_, p_, branch) - (minus_one ? 1 : 0);
    Integer l = l_, m = m_, n = n_, p = p_;
    SeifertInvariants space{BaseSurface::Sphere, {}};
    if (nb) {
        if (!minus_one)
            space.coefficients = {frac(-1, l - 1), frac(-4 * m * n + 2 * m - 1, 2 * m * n - m - n + 1),
                                  frac(m, l * m + m - 1)};
        else
            space.coefficients = {frac(-1, l + 1), frac(4 * m * n - 2 * m + 1, 2 * m * n - m + n),
                                  frac(m, l * m - m - 1)};
    } else {
        if (!minus_one)
            space.coefficients = {frac(-1, l - 1),
                                  frac(2 * m * p - m - p, 2 * l * m * p - l * m - l * p + 2 * m * p - m - 3 * p + 1),
                                  frac(-2 * m + 1, m - 1)};
        else
            space.coefficients = {frac(-1, l + 1),
                                  frac(2 * m * p - m - p, 2 * l * m * p - 2 * m * p - l * m - l * p + m - p + 1),
                                  frac(2 * m - 1, m)};
    }
    return {{Em2Knot{l_, m_, n_, p_}, Slope(Q(slope))}, std::move(space)};
}

void check_em3_parameters(const ExtendedRational& a1, const ExtendedRational& a2, const ExtendedRational& a3) {
    const std::array<Q, 4> bad12{Q::infinity(), Q(0), Q(1), Q(2)};
    const std::array<Q, 6> bad3{Q::infinity(), Q(0), Q(1), Q(-1), Q(-1, 2), Q(2)};
    auto reject = [](const char* name, const Q& v) {
        throw PreconditionError(std::string("em3: ") + name + " = " + v.str() + " is an excluded parameter value");
    };
    for (const auto& b : bad12) {
        if (a1 == b) reject("a1", a1);
        if (a2 == b) reject("a2", a2);
    }
    for (const auto& b : bad3)
        if (a3 == b) reject("a3", a3);
}

std::vector<Em3Trivialization> em3_trivializations(const ExtendedRational& a1, const ExtendedRational& a2,
                                                   const ExtendedRational& a3) {
    check_em3_parameters(a1, a2, a3);
    std::vector<Em3Trivialization> out;
    auto case_ii = [&](const Q& first, const Q& second, bool swapped) {
        auto p = unit_reciprocal(first);
        if (!p) return;
        const Integer &al2 = second.numerator(), &be2 = second.denominator();
        const Integer &al3 = a3.numerator(), &be3 = a3.denominator();
        if (is_unit(*p * al2 * al3 + al2 * be3 + be2 * al3))
            out.push_back({Em3Case::II, to_int64(*p, "em3 parameter p"), swapped});
    };
    case_ii(a1, a2, false);
    case_ii(a2, a1, true);
    if (auto n = unit_reciprocal(a3)) {
        const Integer &al1 = a1.numerator(), &be1 = a1.denominator();
        const Integer &al2 = a2.numerator(), &be2 = a2.denominator();
        if (is_unit(*n * al1 * al2 + al1 * be2 + be1 * al2))
            out.push_back({Em3Case::I, to_int64(*n, "em3 parameter n"), false});
    }
    return out;
}

std::optional<Em3Trivialization> em3_trivializable(const ExtendedRational& a1, const ExtendedRational& a2,
                                                   const ExtendedRational& a3) {
    auto all = em3_trivializations(a1, a2, a3);
    if (all.empty()) return std::nullopt;
    return all.front();
}

namespace {

Em3Trivialization require_trivializable(const Q& a1, const Q& a2, const Q& a3) {
    auto t = em3_trivializable(a1, a2, a3);
    if (!t)
        throw PreconditionError("em3: Q(" + a1.str() + ", " + a2.str() + ", " + a3.str() +
                                ") + R(∞) is not a trivial knot (neither trivializing identity is ±1)");
    return *t;
}

} // namespace

SurgeryResult em3_vertex(const ExtendedRational& a1, const ExtendedRational& a2, const ExtendedRational& a3) {
    require_trivializable(a1, a2, a3);
    const std::array<Q, 3> ratios{a1 - Q(2), a2 - Q(2), a3 + Q(1)};
    return {{Em3Knot{a1, a2, a3}, Slope::symbol("gamma")}, montesinos_to_sfs(BaseSurface::Sphere, ratios)};
}

const ExtendedRational& SurgeryDescription::coefficient(char component) const {
    for (const auto& s : surgeries)
        if (s.component == component) return s.coefficient;
    throw PreconditionError(std::string("surgery description has no component ") + component);
}

SurgeryDescription em3_surgery_description(const ExtendedRational& a1, const ExtendedRational& a2,
                                           const ExtendedRational& a3) {
    Em3Trivialization t = require_trivializable(a1, a2, a3);
    Q c = t.which == Em3Case::I ? Q(t.parameter) : a3.reciprocal();
    return {{{'a', -a1}, {'b', -a2}, {'c', c}, {'k', Q(-1)}}};
}

SurgeryResult torus_reducible_surgery(std::int64_t p, std::int64_t q) {
    if (p == 0 || q == 0 || gcd(Integer(p), Integer(q)) != 1)
        throw PreconditionError("torus_reducible_surgery: requires gcd(p, q) = 1 with p, q nonzero");
    if ((p == 1 || p == -1) && (q == 1 || q == -1))
        throw PreconditionError("torus_reducible_surgery: T_{p,q} needs |p| >= 2 or |q| >= 2");
    Integer slope = Integer(p) * q;
    return {{TorusKnot{p, q}, Slope(Q(slope))},
            {BaseSurface::Sphere, {Q(Integer(q), Integer(p)), Q(Integer(p), Integer(q)), Q::infinity()}}};
}

} // namespace ssn
