#include "bshodge/poly.hpp"

#include <algorithm>

namespace bshodge {

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_[Exponents{std::vector<int>(nvars, 0)}] = c;
    return p;
}

Poly Poly::variable(int nvars, int i, int power) {
    if (i < 0 || i >= nvars) throw invalid_input("variable index out of range");
    Poly p(nvars);
    Exponents m{std::vector<int>(nvars, 0)};
    m.e[static_cast<std::size_t>(i)] = power;
    p.terms_[m] = Rational(1);
    return p;
}

Poly Poly::term(const Exponents& m, const Rational& c) {
    Poly p(static_cast<int>(m.e.size()));
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw invalid_input("constant_value of a non-constant polynomial");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
}

std::pair<Exponents, Rational> Poly::leading_term() const {
    if (terms_.empty()) throw invalid_input("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

void Poly::add_term(const Exponents& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw invalid_input("polynomial variable count mismatch");
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw invalid_input("polynomial variable count mismatch");
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& s) const {
    Poly r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int k = m.e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        Exponents m2 = m;
        m2.e[static_cast<std::size_t>(var)] = k - 1;
        r.add_term(m2, c * Rational(k));
    }
    return r;
}

Poly Poly::pow(int k) const {
    Poly r = Poly::constant(nvars_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly Poly::substitute(int var, const Rational& value) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int k = m.e[static_cast<std::size_t>(var)];
        Rational factor(1);
        for (int i = 0; i < k; ++i) factor *= value;
        Exponents m2 = m;
        m2.e[static_cast<std::size_t>(var)] = 0;
        r.add_term(m2, c * factor);
    }
    return r;
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[static_cast<std::size_t>(var)]);
    return d;
}

std::optional<Poly> Poly::div_exact(const Poly& d) const {
    if (d.is_zero()) throw invalid_input("division by zero polynomial");
    Poly rem = *this;
    Poly quot(nvars_);
    auto [dlm, dlc] = d.leading_term();
    while (!rem.is_zero()) {
        auto [rlm, rlc] = rem.leading_term();
        if (!dlm.divides(rlm)) return std::nullopt;
        Exponents q = rlm - dlm;
        Rational qc = rlc / dlc;
        quot.add_term(q, qc);
        rem = rem - d * Poly::term(q, qc);
    }
    return quot;
}

Poly Poly::extended(int extra) const {
    Poly r(nvars_ + extra);
    for (const auto& [m, c] : terms_) {
        Exponents m2 = m;
        m2.e.resize(static_cast<std::size_t>(nvars_ + extra), 0);
        r.terms_.emplace(m2, c);
    }
    return r;
}

Poly Poly::restricted(int new_nvars) const {
    Poly r(new_nvars);
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = static_cast<std::size_t>(new_nvars); i < m.e.size(); ++i)
            if (m.e[i] != 0) throw invalid_input("restricted: variable occurs in polynomial");
        Exponents m2 = m;
        m2.e.resize(static_cast<std::size_t>(new_nvars));
        r.terms_.emplace(m2, c);
    }
    return r;
}

Rational Poly::content() const {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        gcd(num_gcd, num_gcd, c.numerator());
        lcm(den_lcm, den_lcm, c.denominator());
    }
    if (num_gcd == 0) return Rational(0);
    return Rational(num_gcd, den_lcm);
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i] + "^" + std::to_string(m.e[i]);
        }
        if (mono.empty()) {
            out += ac.str();
        } else {
            if (!ac.is_one()) out += ac.str() + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace bshodge
