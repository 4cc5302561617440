#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssn {

using Integer = boost::multiprecision::cpp_int;

/// An element of Q ∪ {∞} kept in lowest terms with a non-negative
/// denominator. ∞ is (1, 0); there is a single unsigned ∞, so -∞ == ∞.
///
/// Arithmetic involving ∞ follows the projective line: x + ∞ = ∞ for finite
/// x, 1/0 = ∞, 1/∞ = 0, x·∞ = ∞ for x != 0. The undefined forms ∞ + ∞,
/// 0·∞ and 0/0 throw ArithmeticError.
class ExtendedRational {
public:
    ExtendedRational() : num_(0), den_(1) {}
    ExtendedRational(Integer value) : num_(std::move(value)), den_(1) {}
    template <std::integral T>
    ExtendedRational(T value) : num_(value), den_(1) {}
    ExtendedRational(Integer numerator, Integer denominator);

    static ExtendedRational infinity() { return ExtendedRational(Integer(1), Integer(0)); }

    /// Parses "p/q" or an integer literal; a sign is accepted on p only.
    /// "1/0" (or any "p/0" with p != 0) is ∞.
    static ExtendedRational parse(std::string_view text);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_finite() const { return den_ != 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_.sign(); }

    ExtendedRational reciprocal() const;
    ExtendedRational operator-() const;

    /// Largest integer <= this. Throws on ∞.
    Integer floor() const;
    /// this - floor(this), in [0, 1). Throws on ∞.
    ExtendedRational fractional_part() const;

    /// Compact form: "-6", "3/2", "1/0".
    std::string str() const;
    /// Always "p/q": "-6/1", "3/2", "1/0". Used for JSON.
    std::string fraction_str() const;

    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
    friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b);
    friend ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b);
    friend ExtendedRational operator/(const ExtendedRational& a, const ExtendedRational& b);

    ExtendedRational& operator+=(const ExtendedRational& o) { return *this = *this + o; }
    ExtendedRational& operator-=(const ExtendedRational& o) { return *this = *this - o; }
    ExtendedRational& operator*=(const ExtendedRational& o) { return *this = *this * o; }
    ExtendedRational& operator/=(const ExtendedRational& o) { return *this = *this / o; }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // Total order: finite values by magnitude, ∞ after every finite value.
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

private:
    struct Normalized {};
    ExtendedRational(Integer numerator, Integer denominator, Normalized)
        : num_(std::move(numerator)), den_(std::move(denominator)) {}

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

/// Terms [a1, ..., an] of r = an + 1/(a(n-1) + ... + 1/(a2 + 1/a1)).
struct ContinuedFraction {
    std::vector<Integer> terms;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Class of a curve on the boundary torus of the branched double cover of a
/// rational tangle, in the basis (meridian of R(∞), latitude lift).
struct HomologyPair {
    Integer mu_coeff;
    Integer lambda_coeff;

    friend bool operator==(const HomologyPair&, const HomologyPair&) = default;
};

/// Evaluates the nested fraction with a1 innermost. Total over Q ∪ {∞}:
/// a zero intermediate becomes ∞ at the next level and 0 after that.
ExtendedRational cf_eval(const ContinuedFraction& cf);

/// Inverse of cf_eval: integer parts are peeled from the outermost term by
/// floor division, so a1 >= 2 whenever n >= 2. Rejects ∞.
ContinuedFraction cf_expand(const ExtendedRational& r);

/// Lift of the meridian of R(p/q): -p[μ∞] + q[λ].
HomologyPair meridian_lift(const ExtendedRational& r);

/// Surgery slope on the covering knot induced by s-untangle surgery, when the
/// latitude of R(∞) lifts to a preferred longitude: -s. Rejects s = ∞.
ExtendedRational covering_slope(const ExtendedRational& s);

} // namespace ssn
