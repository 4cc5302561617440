#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ssn/rational.hpp"
#include "ssn/seifert.hpp"
#include "ssn/twist.hpp"

namespace ssn {

// Covering knot K(l, n, p) of the tangle T(l, n, p); n·p = 0.
struct Em1Knot {
    std::int64_t l = 0, n = 0, p = 0;
    friend bool operator==(const Em1Knot&, const Em1Knot&) = default;
};

// Covering knot K(l, m, n, p) of T(l, m, n, p); n·p = 0.
struct Em2Knot {
    std::int64_t l = 0, m = 0, n = 0, p = 0;
    friend bool operator==(const Em2Knot&, const Em2Knot&) = default;
};

// Covering knot K(A, B, C) of Q(A, B, C), parameters in lowest terms.
struct Em3Knot {
    ExtendedRational a1, a2, a3;
    friend bool operator==(const Em3Knot&, const Em3Knot&) = default;
};

struct TorusKnot {
    std::int64_t p = 0, q = 0;
    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

struct Unknot {
    friend bool operator==(const Unknot&, const Unknot&) = default;
};

// A vertex on a Hopf-pair twisting sequence that is not identified with a
// named knot. It carries only the surgery pair reached so far on the two
// named seiferters.
struct HopfStageKnot {
    char first = 'a';
    char second = 'b';
    HopfPairState state;
    friend bool operator==(const HopfStageKnot&, const HopfStageKnot&) = default;
};

using KnotId = std::variant<Em1Knot, Em2Knot, Em3Knot, TorusKnot, Unknot, HopfStageKnot>;

std::string to_string(const KnotId& knot);
bool is_basic(const KnotId& knot);  // torus knot or unknot

/// Surgery slope: an exact value, or a symbol when the value is not known
/// in closed form ("gamma" for the 𝓔𝓜III covering slope).
class Slope {
public:
    Slope() : value_(ExtendedRational()) {}
    Slope(ExtendedRational value) : value_(std::move(value)) {}
    template <std::integral T>
    Slope(T value) : value_(ExtendedRational(value)) {}

    static Slope symbol(std::string name) { return Slope(std::move(name)); }

    bool is_symbolic() const { return !value_.has_value(); }
    const ExtendedRational& value() const;
    const std::string& symbol_name() const { return symbol_; }

    std::string str() const;
    std::string json_str() const;

    friend bool operator==(const Slope&, const Slope&) = default;

private:
    explicit Slope(std::string name) : symbol_(std::move(name)) {}

    std::optional<ExtendedRational> value_;
    std::string symbol_;
};

struct SurgeryVertex {
    KnotId knot;
    Slope slope;

    /// "EM1(1,1,0)@-28", "Torus(3,-2)@-6", "EM3(1/3,3,-1/3)@gamma".
    std::string id() const;

    friend bool operator==(const SurgeryVertex&, const SurgeryVertex&) = default;
};

struct SurgeryResult {
    SurgeryVertex vertex;
    SeifertInvariants space;
};

/// Which displayed formula to use. Auto takes the n-branch when p = 0; the
/// explicit branches require their other parameter to be 0.
enum class FormulaBranch { Auto, N, P };

/// γ_{l,n,p}: 12l² − 4l − 36l²n (p = 0) or 12l² − 4l − 4p(3l − 1) (n = 0).
Integer em1_slope(std::int64_t l, std::int64_t n, std::int64_t p, FormulaBranch branch = FormulaBranch::Auto);

/// γ_{l,m,n,p}: l(2m−1)(1−lm) + n(2lm−1)² (p = 0) or
/// l(2m−1)(1−lm) + p(2lm−l−1)² (n = 0).
Integer em2_slope(std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t p,
                  FormulaBranch branch = FormulaBranch::Auto);

/// (K(l, n, p), γ) over RP², or (K(l, n, p), γ − 1) over S² with a −1/3 fiber.
SurgeryResult em1_vertex(std::int64_t l, std::int64_t n, std::int64_t p, bool minus_one,
                         FormulaBranch branch = FormulaBranch::Auto);
SurgeryResult em2_vertex(std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t p, bool minus_one,
                         FormulaBranch branch = FormulaBranch::Auto);

enum class Em3Case { I, II };

/// Which trivializing condition Q(a1, a2, a3) satisfies.
///   Case I:  a3 = 1/n and n·α1α2 + α1β2 + β1α2 = ±1.
///   Case II: a1 = 1/p and p·α2α3 + α2β3 + β2α3 = ±1, or the same with a1
///            and a2 interchanged (`swapped`).
struct Em3Trivialization {
    Em3Case which = Em3Case::I;
    std::int64_t parameter = 0;  // n for case I, p for case II
    bool swapped = false;

    friend bool operator==(const Em3Trivialization&, const Em3Trivialization&) = default;
};

/// Throws PreconditionError on excluded parameters
/// (a1, a2 ∉ {∞, 0, 1, 2}; a3 ∉ {∞, 0, ±1, −1/2, 2}).
void check_em3_parameters(const ExtendedRational& a1, const ExtendedRational& a2, const ExtendedRational& a3);

/// Every satisfied condition, in the order case II, case II swapped, case I.
std::vector<Em3Trivialization> em3_trivializations(const ExtendedRational& a1, const ExtendedRational& a2,
                                                   const ExtendedRational& a3);

/// First entry of em3_trivializations, or nullopt when Q + R(∞) is not a
/// trivial knot.
std::optional<Em3Trivialization> em3_trivializable(const ExtendedRational& a1, const ExtendedRational& a2,
                                                   const ExtendedRational& a3);

/// K(a1, a2, a3)(γ): two-fold cover of M(a1 − 2, a2 − 2, a3 + 1). The slope
/// is carried as the symbol "gamma".
SurgeryResult em3_vertex(const ExtendedRational& a1, const ExtendedRational& a2, const ExtendedRational& a3);

struct LabeledSurgery {
    char component;
    ExtendedRational coefficient;
    friend bool operator==(const LabeledSurgery&, const LabeledSurgery&) = default;
};

/// Surgeries on the link a ∪ b ∪ c ∪ k producing (K(a1, a2, a3), γ).
struct SurgeryDescription {
    std::vector<LabeledSurgery> surgeries;

    const ExtendedRational& coefficient(char component) const;
};

SurgeryDescription em3_surgery_description(const ExtendedRational& a1, const ExtendedRational& a2,
                                           const ExtendedRational& a3);

/// (T_{p,q}, pq) with T_{p,q}(pq) = L(p, q) # L(q, p), carried as the
/// degenerate invariants S²(q/p, p/q, ∞).
SurgeryResult torus_reducible_surgery(std::int64_t p, std::int64_t q);

} // namespace ssn
