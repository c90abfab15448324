#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bshodge/rational.hpp"

namespace bshodge {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial is the empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& r) {
        return r.is_zero() ? UniPoly() : UniPoly({r});
    }
    /// c * x^k
    static UniPoly monomial(const Rational& c, int k);
    /// x + shift
    static UniPoly linear(const Rational& shift) { return UniPoly({shift, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& s) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const;
    /// p(a*x + b)
    UniPoly compose_linear(const Rational& a, const Rational& b) const;
    UniPoly pow(int k) const;
    UniPoly derivative() const;

    /// Euclidean division, exact rational arithmetic: returns (q, r) with
    /// *this = q*d + r, deg r < deg d. Throws on zero divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    /// Exact quotient; throws internal_inconsistency if remainder nonzero.
    UniPoly div_exact(const UniPoly& d) const;
    bool divides(const UniPoly& d) const;  // true iff d | *this

    UniPoly monic() const;

    std::string str(const std::string& var = "s") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd via the Euclidean algorithm. gcd(0, 0) = 0.
UniPoly unipoly_gcd(UniPoly a, UniPoly b);

/// Extended gcd: returns (g, u, v) with g = u*a + v*b, g monic (or zero).
struct UniPolyXgcd {
    UniPoly g, u, v;
};
UniPolyXgcd unipoly_xgcd(const UniPoly& a, const UniPoly& b);

struct RootEntry {
    Rational root;
    int multiplicity;
    friend bool operator==(const RootEntry& a, const RootEntry& b) {
        return a.root == b.root && a.multiplicity == b.multiplicity;
    }
};

/// Rational roots of a polynomial with the rational-root-free cofactor.
/// Invariant: leading * prod (x - root)^mult * cofactor == input, with the
/// cofactor monic and without rational roots.
struct RootList {
    std::vector<RootEntry> entries;  // sorted by root, ascending
    UniPoly cofactor;                // monic, no rational roots
    Rational leading;               // leading coefficient of the input

    bool has_root(const Rational& r) const {
        for (const auto& e : entries)
            if (e.root == r) return true;
        return false;
    }
};

/// All rational roots with multiplicities, by the rational-root theorem on
/// the primitive integer form, deflating after each root. Exact; the
/// reconstruction identity is re-verified internally before returning.
RootList rational_roots(const UniPoly& p);

/// prod (x + shift_i)^mult_i; the empty product is the constant 1.
UniPoly poly_from_linear_factors(const std::vector<std::pair<Rational, int>>& entries);

}  // namespace bshodge
