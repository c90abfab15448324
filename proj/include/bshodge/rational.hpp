#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "bshodge/errors.hpp"

namespace bshodge {

/// Exact rational number. Thin value wrapper around GMP's mpq_class that
/// keeps the canonical form invariant (gcd(|num|, den) = 1, den > 0) and
/// pins the textual form used everywhere in the engine: "p" or "p/q".
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw invalid_input("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw invalid_input("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p", "p/q". Throws invalid_input on anything else.
    static Rational from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw invalid_input("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const {
        if (is_zero()) throw invalid_input("inverse of zero rational");
        return Rational(mpq_class(1) / v_);
    }

    /// Floor as an integer (towards -infinity).
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    std::size_t hash() const {
        std::size_t h1 = std::hash<std::string>{}(v_.get_num().get_str());
        std::size_t h2 = std::hash<std::string>{}(v_.get_den().get_str());
        return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
    }

private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw invalid_input("empty rational literal");
    try {
        mpq_class q(s);
        q.canonicalize();
        if (q.get_den() <= 0) throw invalid_input("bad rational literal: " + s);
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw invalid_input("bad rational literal: " + s);
    }
}

}  // namespace bshodge

template <>
struct std::hash<bshodge::Rational> {
    std::size_t operator()(const bshodge::Rational& r) const { return r.hash(); }
};
