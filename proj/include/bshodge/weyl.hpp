#pragma once

#include <map>
#include <string>
#include <vector>

#include "bshodge/poly.hpp"
#include "bshodge/rational.hpp"
#include "bshodge/unipoly.hpp"

namespace bshodge {

/// Which extension of the rational Weyl algebra an element lives in:
/// Q[x_1..x_n]<dx_1..dx_n>, optionally with the central variable s and
/// with the extra pair (t, dt) satisfying [dt, t] = 1.
struct AlgebraSignature {
    int n = 1;
    bool has_s = false;
    bool has_t = false;

    friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
        return a.n == b.n && a.has_s == b.has_s && a.has_t == b.has_t;
    }
    /// Number of flattened exponent positions (x..., dx..., [s], [t, dt]).
    int positions() const { return 2 * n + (has_s ? 1 : 0) + (has_t ? 2 : 0); }
    int s_position() const { return 2 * n; }
    int t_position() const { return 2 * n + (has_s ? 1 : 0); }
    int dt_position() const { return t_position() + 1; }
};

/// Normally ordered monomial x^a dx^b s^c t^d dt^e.
struct WeylMonomial {
    std::vector<int> a, b;  // length n each
    int c = 0, d = 0, e = 0;

    int total() const {
        int t = c + d + e;
        for (int v : a) t += v;
        for (int v : b) t += v;
        return t;
    }
    int diff_total() const {
        int t = e;
        for (int v : b) t += v;
        return t;
    }
    int sharp() const { return diff_total() - e + c; }  // |b| + c
    int v_weight() const { return d - e; }

    std::vector<int> flat(const AlgebraSignature& sig) const;

    friend bool operator==(const WeylMonomial& x, const WeylMonomial& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.e == y.e;
    }
};

/// Canonical tie order on monomials: total degree, then lex on the
/// flattened exponent list. Used for term storage and serialization.
struct CanonicalMonomialLess {
    bool operator()(const WeylMonomial& x, const WeylMonomial& y) const;
};

/// Element of the (extended) rational Weyl algebra, kept normally ordered:
/// every stored term is x^a dx^b s^c t^d dt^e with a rational coefficient,
/// no zero coefficients. Equality is coefficient comparison.
class WeylElement {
public:
    using TermMap = std::map<WeylMonomial, Rational, CanonicalMonomialLess>;

    WeylElement() = default;
    explicit WeylElement(AlgebraSignature sig) : sig_(sig) {}

    static WeylElement zero(const AlgebraSignature& sig) { return WeylElement(sig); }
    static WeylElement constant(const AlgebraSignature& sig, const Rational& c);
    static WeylElement monomial(const AlgebraSignature& sig, const WeylMonomial& m,
                                const Rational& c);
    static WeylElement x(const AlgebraSignature& sig, int i);
    static WeylElement dx(const AlgebraSignature& sig, int i);
    static WeylElement s(const AlgebraSignature& sig);
    static WeylElement t(const AlgebraSignature& sig);
    static WeylElement dt(const AlgebraSignature& sig);
    /// Embeds a commutative polynomial in the x-variables.
    static WeylElement from_poly(const AlgebraSignature& sig, const Poly& p);
    /// p(s) as a central polynomial element.
    static WeylElement from_unipoly_in_s(const AlgebraSignature& sig, const UniPoly& p);

    const AlgebraSignature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const WeylMonomial& m, const Rational& coef);

    WeylElement operator-() const;
    friend WeylElement operator+(const WeylElement& p, const WeylElement& q);
    friend WeylElement operator-(const WeylElement& p, const WeylElement& q);
    WeylElement operator*(const Rational& scalar) const;
    friend bool operator==(const WeylElement& p, const WeylElement& q) {
        return p.sig_ == q.sig_ && p.terms_ == q.terms_;
    }

    WeylElement pow(int k) const;

    /// Max over terms of |b| + c. Requires a nonzero element in a
    /// signature without t.
    int sharp_order() const;
    /// Max over terms of |b| + e (differential order).
    int diff_order() const;
    /// Min over terms of d - e; the element lies in V^k iff this is >= k.
    int v_weight_min() const;

    /// Substitute s := value (s is central, so this is termwise).
    WeylElement substitute_s(const Rational& value) const;
    /// Reinterpret in a signature without s; requires no s occurs.
    WeylElement drop_s() const;
    /// Embed into a larger signature (same n; adds s and/or t).
    WeylElement promoted(const AlgebraSignature& target) const;

    bool is_commutative_in_x() const;  // only x-exponents present
    Poly to_poly() const;              // requires is_commutative_in_x
    /// Requires element free of x, dx, t, dt; maps s^c terms to a UniPoly.
    UniPoly to_unipoly_in_s() const;

    /// Terms whose |b| + c equals sharp_order(); the principal symbol
    /// with respect to the total order filtration, as an element.
    WeylElement sharp_symbol() const;

    /// Canonical textual form: terms sorted descending in the canonical
    /// tie order, exponents like x1^2*dx1^3*s^1, coefficients p/q.
    /// x-names default to x1..xn with dx-names derived.
    std::string str(const std::vector<std::string>& xnames = {}) const;

private:
    AlgebraSignature sig_;
    TermMap terms_;
};

/// Normally ordered product. [dx_i, x_i] = 1, [dt, t] = 1, s central,
/// all other pairs commute.
WeylElement mul(const WeylElement& p, const WeylElement& q);

/// Left multiplication by a single monomial with coefficient; the common
/// inner loop of reduction, kept separate so it can stay allocation-light.
WeylElement monomial_mul(const AlgebraSignature& sig, const WeylMonomial& m,
                         const Rational& coef, const WeylElement& q);

}  // namespace bshodge
