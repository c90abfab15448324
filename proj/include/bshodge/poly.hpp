#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bshodge/rational.hpp"

namespace bshodge {

/// Commutative exponent vector. Compared graded-lex (total degree first,
/// then lexicographically); this is the canonical tie order used for
/// serialization everywhere.
struct Exponents {
    std::vector<int> e;

    int total() const {
        int t = 0;
        for (int x : e) t += x;
        return t;
    }
    friend bool operator==(const Exponents& a, const Exponents& b) { return a.e == b.e; }
    friend bool operator<(const Exponents& a, const Exponents& b) {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.e < b.e;  // lex tie-break, earlier variables weigh more
    }
    Exponents operator+(const Exponents& o) const {
        Exponents r = *this;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    /// Componentwise difference; only valid when o divides *this.
    Exponents operator-(const Exponents& o) const {
        Exponents r = *this;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    bool divides(const Exponents& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
};

/// Sparse multivariate polynomial over Q with a fixed variable count.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int i, int power = 1);
    static Poly term(const Exponents& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
    }
    Rational constant_value() const;
    int total_degree() const;  // -1 for zero
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    /// Greatest term in graded-lex; throws on zero.
    std::pair<Exponents, Rational> leading_term() const;

    void add_term(const Exponents& m, const Rational& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& s) const;
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Poly derivative(int var) const;
    Poly pow(int k) const;
    /// Substitute variable var := value, keeping the variable count.
    Poly substitute(int var, const Rational& value) const;
    /// Maximum exponent of one variable across all terms.
    int degree_in(int var) const;

    /// Quotient if d divides *this exactly, std::nullopt otherwise.
    std::optional<Poly> div_exact(const Poly& d) const;

    /// Extend to nvars + extra variables (new variables appended, unused).
    Poly extended(int extra) const;
    /// Drop trailing variables; requires they do not occur.
    Poly restricted(int new_nvars) const;

    Rational content() const;  // gcd of coefficient numerators / lcm of denominators (positive)

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace bshodge
