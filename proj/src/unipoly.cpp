#include "bshodge/unipoly.hpp"

#include <algorithm>
#include <map>

namespace bshodge {

UniPoly UniPoly::monomial(const Rational& c, int k) {
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw invalid_input("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    UniPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
    // Horner on the argument a*x + b.
    UniPoly arg({b, a});
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * arg + UniPoly::constant(*it);
    return acc;
}

UniPoly UniPoly::pow(int k) const {
    UniPoly r = UniPoly::constant(Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw invalid_input("division by zero polynomial");
    UniPoly r(*this);
    std::vector<Rational> q(std::max<std::size_t>(c_.size(), 1), Rational(0));
    const Rational lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Rational factor = r.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = factor;
        r = r - d * UniPoly::monomial(factor, shift);
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::div_exact(const UniPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw internal_inconsistency("inexact polynomial division");
    return q;
}

bool UniPoly::divides(const UniPoly& d) const { return divrem(d).second.is_zero(); }

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational ac = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = ac.is_one() && k > 0;
        if (!unit) out += ac.str();
        if (k > 0) {
            if (!unit) out += "*";
            out += var + "^" + std::to_string(k);
        }
    }
    return out;
}

UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPolyXgcd unipoly_xgcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly u0 = UniPoly::constant(Rational(1)), u1;
    UniPoly v0, v1 = UniPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        UniPoly u2 = u0 - q * u1;
        UniPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {UniPoly(), UniPoly(), UniPoly()};
    Rational inv = r0.leading().inverse();
    return {r0 * inv, u0 * inv, v0 * inv};
}

namespace {

// All positive divisors of |n|, ascending. Trial division; fine at the
// coefficient sizes this engine sees.
std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::map<mpz_class, int> fact;
    for (mpz_class p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++fact[p];
            n /= p;
        }
    }
    if (n > 1) ++fact[n];
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fact) {
        std::size_t sz = divs.size();
        mpz_class pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

RootList rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw invalid_input("rational_roots of the zero polynomial");

    RootList out;
    out.leading = p.leading();
    UniPoly work = p.monic();

    // Strip roots at zero first.
    int zero_mult = 0;
    while (!work.is_zero() && work.coeff(0).is_zero()) {
        std::vector<Rational> shifted(work.coeffs().begin() + 1, work.coeffs().end());
        work = UniPoly(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) out.entries.push_back({Rational(0), zero_mult});

    if (work.degree() >= 1) {
        // Primitive integer form: clear denominators, divide by content.
        mpz_class den_lcm = 1;
        for (const auto& c : work.coeffs()) lcm(den_lcm, den_lcm, c.denominator());
        std::vector<mpz_class> ic;
        ic.reserve(work.coeffs().size());
        for (const auto& c : work.coeffs()) ic.push_back(c.numerator() * (den_lcm / c.denominator()));
        mpz_class content = 0;
        for (const auto& z : ic) gcd(content, content, z);
        for (auto& z : ic) z /= content;

        std::vector<mpz_class> num_divs = positive_divisors(ic.front());
        std::vector<mpz_class> den_divs = positive_divisors(ic.back());

        std::vector<Rational> candidates;
        for (const auto& q : den_divs)
            for (const auto& pd : num_divs) {
                if (gcd(pd, q) != 1) continue;
                candidates.emplace_back(pd, q);
                candidates.emplace_back(-pd, q);
            }
        std::sort(candidates.begin(), candidates.end());

        for (const auto& r : candidates) {
            int mult = 0;
            while (work.degree() >= 1 && work.eval(r).is_zero()) {
                work = work.div_exact(UniPoly({-r, Rational(1)}));
                ++mult;
            }
            if (mult > 0) out.entries.push_back({r, mult});
        }
    }

    std::sort(out.entries.begin(), out.entries.end(),
              [](const RootEntry& a, const RootEntry& b) { return a.root < b.root; });
    out.cofactor = work.is_zero() ? UniPoly::constant(Rational(1)) : work.monic();

    // Reconstruction identity, re-verified before returning.
    UniPoly rebuilt = out.cofactor * out.leading;
    for (const auto& e : out.entries)
        rebuilt = rebuilt * UniPoly({-e.root, Rational(1)}).pow(e.multiplicity);
    if (!(rebuilt == p)) throw internal_inconsistency("root extraction failed to reconstruct input");
    return out;
}

UniPoly poly_from_linear_factors(const std::vector<std::pair<Rational, int>>& entries) {
    UniPoly out = UniPoly::constant(Rational(1));
    for (const auto& [shift, mult] : entries)
        out = out * UniPoly::linear(shift).pow(mult);
    return out;
}

}  // namespace bshodge
