#include "ssn/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ssn/errors.hpp"

namespace ssn {

ExtendedRational::ExtendedRational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        if (num_ == 0) throw ArithmeticError("0/0 is not an element of Q ∪ {∞}");
        num_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!digits(num) || !digits(den))
        throw ParseError("expected a rational literal \"p/q\" or an integer, got \"" + std::string(text) + "\"");
    Integer p{std::string(num)};
    Integer q{std::string(den)};
    if (p == 0 && q == 0) throw ParseError("0/0 is not a rational literal");
    return ExtendedRational(negative ? Integer(-p) : p, q);
}

ExtendedRational ExtendedRational::reciprocal() const {
    if (num_ == 0) return infinity();
    if (den_ == 0) return ExtendedRational();
    return num_ < 0 ? ExtendedRational(Integer(-den_), Integer(-num_), Normalized{})
                    : ExtendedRational(den_, num_, Normalized{});
}

ExtendedRational ExtendedRational::operator-() const {
    if (is_infinite()) return *this;
    return ExtendedRational(Integer(-num_), den_, Normalized{});
}

Integer ExtendedRational::floor() const {
    if (is_infinite()) throw ArithmeticError("floor of ∞");
    Integer q = num_ / den_;  // truncates toward zero
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
}

ExtendedRational ExtendedRational::fractional_part() const {
    return ExtendedRational(Integer(num_ - floor() * den_), den_, Normalized{});
}

std::string ExtendedRational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::string ExtendedRational::fraction_str() const { return num_.str() + "/" + den_.str(); }

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) throw ArithmeticError("∞ + ∞ is undefined");
        return ExtendedRational::infinity();
    }
    return ExtendedRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b) { return a + (-b); }

ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_zero() || b.is_zero()) throw ArithmeticError("0·∞ is undefined");
        return ExtendedRational::infinity();
    }
    return ExtendedRational(a.num_ * b.num_, a.den_ * b.den_);
}

ExtendedRational operator/(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_zero() && b.is_zero()) throw ArithmeticError("0/0 is undefined");
    return a * b.reciprocal();
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() <=> b.is_infinite();
    }
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.str(); }

ExtendedRational cf_eval(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw PreconditionError("continued fraction must have at least one term");
    ExtendedRational r(cf.terms.front());
    for (auto it = cf.terms.begin() + 1; it != cf.terms.end(); ++it) r = ExtendedRational(*it) + r.reciprocal();
    return r;
}

ContinuedFraction cf_expand(const ExtendedRational& r) {
    if (r.is_infinite()) throw PreconditionError("cf_expand: ∞ has no finite continued fraction");
    // Outermost term first; every remainder after the first is > 1.
    std::vector<Integer> outer_first;
    ExtendedRational rest = r;
    for (;;) {
        Integer a = rest.floor();
        outer_first.push_back(a);
        ExtendedRational frac = rest - ExtendedRational(a);
        if (frac.is_zero()) break;
        rest = frac.reciprocal();
    }
    std::reverse(outer_first.begin(), outer_first.end());
    return ContinuedFraction{std::move(outer_first)};
}

HomologyPair meridian_lift(const ExtendedRational& r) {
    return HomologyPair{-r.numerator(), r.denominator()};
}

ExtendedRational covering_slope(const ExtendedRational& s) {
    if (s.is_infinite()) throw PreconditionError("covering_slope: replacing R(∞) by R(∞) is not a surgery");
    return -s;
}

} // namespace ssn
