#pragma once

#include <string>

#include "bshodge/poly.hpp"
#include "bshodge/weyl.hpp"

namespace bshodge {

/// num * f^{-pole} * f^{-twist} for a context divisor f. Canonical form:
/// if pole > 0 then f does not divide num; the zero element has pole 0.
struct FractionElement {
    Poly num;        // polynomial in the x-variables
    int pole = 0;    // >= 0
    Rational twist;  // alpha

    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const FractionElement& a, const FractionElement& b) {
        return a.pole == b.pole && a.twist == b.twist && a.num == b.num;
    }
    std::string str(const std::vector<std::string>& names) const;
};

/// Canonicalizing constructor: cancels powers of f out of the numerator.
FractionElement make_fraction(Poly num, int pole, Rational twist, const Poly& f);

FractionElement frac_add(const FractionElement& a, const FractionElement& b, const Poly& f);
FractionElement frac_scale(const FractionElement& a, const Rational& c);
FractionElement frac_mul_poly(const FractionElement& a, const Poly& g, const Poly& f);
/// Clears the element to the given pole level; throws if pole > level.
Poly frac_cleared_numerator(const FractionElement& a, int level, const Poly& f);

/// num(x, s) * f^{-pole} * f^{s+shift}; numerator lives in n+1 variables
/// with s last. Same canonical cancellation as FractionElement.
struct SPolyFrac {
    Poly num;  // in x_1..x_n, s
    int pole = 0;
    Rational shift;  // gamma

    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const SPolyFrac& a, const SPolyFrac& b) {
        return a.pole == b.pole && a.shift == b.shift && a.num == b.num;
    }
};

SPolyFrac make_spoly_frac(Poly num, int pole, Rational shift, const Poly& f);
SPolyFrac sfrac_add(const SPolyFrac& a, const SPolyFrac& b, const Poly& f);

/// Applies a differential operator (no s, no t in the signature) to a
/// twisted fraction:
///   dx_i (N f^{-m} f^{-a}) = ((dx_i N) f - (m+a) N (dx_i f)) f^{-m-1} f^{-a}.
FractionElement act_on_fraction(const WeylElement& op, const FractionElement& u, const Poly& f);

/// Applies an operator (possibly involving s, no t) to N f^{-m} f^{s+g};
/// s acts as multiplication by s and
///   dx_i (N f^{-m} f^{s+g}) = ((dx_i N) f + (s+g-m) N (dx_i f)) f^{-m-1} f^{s+g}.
SPolyFrac act_on_spoly(const WeylElement& op, const SPolyFrac& u, const Poly& f);

/// op applied to the symbol f^{s+gamma} itself.
SPolyFrac act_on_fs(const WeylElement& op, const Poly& f, const Rational& gamma);

/// Specialize s := value; result denotes num(x, value) f^{-pole} f^{value+shift},
/// reported as a fraction with twist -(value + shift).
FractionElement specialize_s(const SPolyFrac& u, const Rational& value, const Poly& f);

}  // namespace bshodge
