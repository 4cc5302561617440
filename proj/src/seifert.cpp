#include "ssn/seifert.hpp"

#include <algorithm>
#include <sstream>

#include "ssn/errors.hpp"

namespace ssn {

namespace {

Integer mod_positive(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of a modulo m (m >= 2, gcd(a, m) = 1).
Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer old_r = mod_positive(a, m), r = m;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return mod_positive(old_s, m);
}

std::vector<ExtendedRational> sorted(std::vector<ExtendedRational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Integers c1, c2, ... with r = c1 - 1/(c2 - 1/(...)), each ci = ceil of the
// current remainder. r must be finite.
std::vector<Integer> minus_expansion(ExtendedRational r) {
    std::vector<Integer> out;
    for (;;) {
        Integer c = -(-r).floor();
        out.push_back(c);
        ExtendedRational gap = ExtendedRational(c) - r;
        if (gap.is_zero()) break;
        r = gap.reciprocal();
    }
    return out;
}

} // namespace

std::string to_string(BaseSurface base) { return base == BaseSurface::Sphere ? "S2" : "RP2"; }

std::string to_string(SfsKind kind) {
    switch (kind) {
    case SfsKind::LensSpace: return "LensSpace";
    case SfsKind::ConnectedSumOfLensSpaces: return "ConnectedSumOfLensSpaces";
    case SfsKind::SeifertOverS2: return "SeifertOverS2";
    case SfsKind::SeifertOverRP2: return "SeifertOverRP2";
    }
    return "?";
}

bool SeifertInvariants::is_degenerate() const {
    return std::any_of(coefficients.begin(), coefficients.end(), [](const auto& q) { return q.is_infinite(); });
}

std::string SeifertInvariants::str() const {
    std::ostringstream os;
    os << to_string(base) << '(';
    for (std::size_t i = 0; i < coefficients.size(); ++i) os << (i ? ", " : "") << coefficients[i];
    os << ')';
    return os.str();
}

bool operator==(const SeifertInvariants& a, const SeifertInvariants& b) {
    return a.base == b.base && sorted(a.coefficients) == sorted(b.coefficients);
}

LensParameters make_lens(const Integer& p, const Integer& q) {
    Integer pp = p, qq = q;
    if (pp < 0) {
        pp = -pp;
        qq = -qq;
    }
    if (gcd(pp, qq) != 1) throw PreconditionError("lens parameters must be coprime");
    if (pp == 0) return {0, 1};
    if (pp == 1) return {1, 0};
    return {pp, mod_positive(qq, pp)};
}

bool lens_homeomorphic(const LensParameters& a, const LensParameters& b) {
    if (a.p != b.p) return false;
    if (a.p <= 1) return true;
    const Integer& p = a.p;
    Integer inv = mod_inverse(a.q, p);
    for (const Integer& c : {a.q, Integer(p - a.q), inv, Integer(p - inv)})
        if (mod_positive(c, p) == b.q) return true;
    return false;
}

SeifertInvariants montesinos_to_sfs(BaseSurface base, std::span<const ExtendedRational> ratios) {
    SeifertInvariants si{base, {}};
    si.coefficients.reserve(ratios.size());
    for (const auto& r : ratios) si.coefficients.push_back(-r.reciprocal());
    return si;
}

SeifertInvariants reverse_orientation(const SeifertInvariants& si) {
    SeifertInvariants out{si.base, {}};
    for (const auto& q : si.coefficients) out.coefficients.push_back(-q);
    return out;
}

NormalForm normal_form(const SeifertInvariants& si) {
    NormalForm nf{si.base, 0, {}};
    for (const auto& q : si.coefficients) {
        if (q.is_infinite())
            throw PreconditionError("normalize: degenerate (∞) fiber present; use recognize");
        nf.b += q.floor();
        ExtendedRational f = q.fractional_part();
        if (!f.is_zero()) nf.fibers.push_back(std::move(f));
    }
    std::sort(nf.fibers.begin(), nf.fibers.end());
    return nf;
}

SeifertInvariants normalize(const SeifertInvariants& si) {
    NormalForm nf = normal_form(si);
    SeifertInvariants out{nf.base, {ExtendedRational(nf.b)}};
    out.coefficients.insert(out.coefficients.end(), nf.fibers.begin(), nf.fibers.end());
    return out;
}

bool is_homeomorphic(const SeifertInvariants& x, const SeifertInvariants& y) {
    if (x.base != y.base) return false;
    NormalForm nx = normal_form(x);
    return nx == normal_form(y) || nx == normal_form(reverse_orientation(y));
}

LensParameters lens_space_of(const SeifertInvariants& si) {
    if (si.base != BaseSurface::Sphere) throw PreconditionError("lens_space_of: base must be S2");
    NormalForm nf = normal_form(si);
    if (nf.fibers.size() > 2) throw PreconditionError("lens_space_of: more than two exceptional fibers");

    // Surgery picture: an unknot with coefficient b, and a meridian with
    // coefficient -1/f for each fiber. The first fiber is expanded into an
    // integral chain so that the whole picture is a linear chain ending in
    // the second fiber's rational coefficient, which is then slam-dunked
    // down the chain to a single unknot with coefficient -p/q.
    std::vector<Integer> chain;
    if (!nf.fibers.empty()) {
        chain = minus_expansion(-nf.fibers.front().reciprocal());
        std::reverse(chain.begin(), chain.end());
    }
    chain.push_back(nf.b);

    ExtendedRational x = nf.fibers.size() == 2 ? -nf.fibers.back().reciprocal() : ExtendedRational::infinity();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) x = ExtendedRational(*it) - x.reciprocal();

    // x = -p/q
    return make_lens(-x.numerator(), x.denominator());
}

SfsClassification recognize(const SeifertInvariants& si) {
    SfsClassification out;
    if (si.base == BaseSurface::ProjectivePlane) {
        out.kind = SfsKind::SeifertOverRP2;
        out.space = si.is_degenerate() ? si : normalize(si);
        return out;
    }
    if (si.is_degenerate()) {
        std::size_t degenerate = 0;
        for (const auto& q : si.coefficients) {
            if (q.is_infinite())
                ++degenerate;
            else
                out.lens.push_back(make_lens(q.denominator(), q.numerator()));
        }
        for (std::size_t i = 1; i < degenerate; ++i) out.lens.push_back({0, 1});
        if (out.lens.empty()) out.lens.push_back({1, 0});
        out.kind = out.lens.size() >= 2 ? SfsKind::ConnectedSumOfLensSpaces : SfsKind::LensSpace;
        return out;
    }
    NormalForm nf = normal_form(si);
    if (nf.fibers.size() <= 2) {
        out.kind = SfsKind::LensSpace;
        out.lens.push_back(lens_space_of(si));
        return out;
    }
    out.kind = SfsKind::SeifertOverS2;
    out.space = normalize(si);
    return out;
}

} // namespace ssn
