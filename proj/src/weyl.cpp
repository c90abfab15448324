#include "bshodge/weyl.hpp"

#include <algorithm>

namespace bshodge {

std::vector<int> WeylMonomial::flat(const AlgebraSignature& sig) const {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(sig.positions()));
    v.insert(v.end(), a.begin(), a.end());
    v.insert(v.end(), b.begin(), b.end());
    if (sig.has_s) v.push_back(c);
    if (sig.has_t) {
        v.push_back(d);
        v.push_back(e);
    }
    return v;
}

bool CanonicalMonomialLess::operator()(const WeylMonomial& x, const WeylMonomial& y) const {
    int tx = x.total(), ty = y.total();
    if (tx != ty) return tx < ty;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    if (x.d != y.d) return x.d < y.d;
    return x.e < y.e;
}

namespace {

WeylMonomial unit_monomial(const AlgebraSignature& sig) {
    WeylMonomial m;
    m.a.assign(static_cast<std::size_t>(sig.n), 0);
    m.b.assign(static_cast<std::size_t>(sig.n), 0);
    return m;
}

// binom(m, k) * binom(n, k) * k!  -- the coefficient of x^{n-k} dx^{m-k}
// in the normal ordering of dx^m x^n.
Rational reorder_coeff(int m, int n, int k) {
    mpz_class bm, bn, kf;
    mpz_bin_uiui(bm.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    mpz_bin_uiui(bn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(bm * bn * kf);
}

}  // namespace

WeylElement WeylElement::constant(const AlgebraSignature& sig, const Rational& c) {
    WeylElement r(sig);
    r.add_term(unit_monomial(sig), c);
    return r;
}

WeylElement WeylElement::monomial(const AlgebraSignature& sig, const WeylMonomial& m,
                                  const Rational& c) {
    WeylElement r(sig);
    r.add_term(m, c);
    return r;
}

WeylElement WeylElement::x(const AlgebraSignature& sig, int i) {
    WeylMonomial m = unit_monomial(sig);
    m.a[static_cast<std::size_t>(i)] = 1;
    return monomial(sig, m, Rational(1));
}

WeylElement WeylElement::dx(const AlgebraSignature& sig, int i) {
    WeylMonomial m = unit_monomial(sig);
    m.b[static_cast<std::size_t>(i)] = 1;
    return monomial(sig, m, Rational(1));
}

WeylElement WeylElement::s(const AlgebraSignature& sig) {
    if (!sig.has_s) throw invalid_input("signature has no s");
    WeylMonomial m = unit_monomial(sig);
    m.c = 1;
    return monomial(sig, m, Rational(1));
}

WeylElement WeylElement::t(const AlgebraSignature& sig) {
    if (!sig.has_t) throw invalid_input("signature has no t");
    WeylMonomial m = unit_monomial(sig);
    m.d = 1;
    return monomial(sig, m, Rational(1));
}

WeylElement WeylElement::dt(const AlgebraSignature& sig) {
    if (!sig.has_t) throw invalid_input("signature has no t");
    WeylMonomial m = unit_monomial(sig);
    m.e = 1;
    return monomial(sig, m, Rational(1));
}

WeylElement WeylElement::from_poly(const AlgebraSignature& sig, const Poly& p) {
    if (p.nvars() != sig.n) throw invalid_input("polynomial does not match signature");
    WeylElement r(sig);
    for (const auto& [m, c] : p.terms()) {
        WeylMonomial wm = unit_monomial(sig);
        wm.a = m.e;
        r.add_term(wm, c);
    }
    return r;
}

WeylElement WeylElement::from_unipoly_in_s(const AlgebraSignature& sig, const UniPoly& p) {
    if (!sig.has_s) throw invalid_input("signature has no s");
    WeylElement r(sig);
    for (int k = 0; k <= p.degree(); ++k) {
        WeylMonomial m = unit_monomial(sig);
        m.c = k;
        r.add_term(m, p.coeff(k));
    }
    return r;
}

void WeylElement::add_term(const WeylMonomial& m, const Rational& coef) {
    if (coef.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

WeylElement operator+(const WeylElement& p, const WeylElement& q) {
    if (!(p.sig_ == q.sig_)) throw invalid_input("signature mismatch in addition");
    WeylElement r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

WeylElement operator-(const WeylElement& p, const WeylElement& q) { return p + (-q); }

WeylElement WeylElement::operator*(const Rational& scalar) const {
    WeylElement r(sig_);
    if (scalar.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scalar);
    return r;
}

WeylElement monomial_mul(const AlgebraSignature& sig, const WeylMonomial& m1,
                         const Rational& coef, const WeylElement& q) {
    WeylElement out(sig);
    const int n = sig.n;
    for (const auto& [m2, c2] : q.terms()) {
        // Move dx^{b1} across x^{a2} variable by variable, and dt^{e1}
        // across t^{d2}; different variables commute, s is central.
        std::vector<int> k(static_cast<std::size_t>(n), 0);
        std::vector<int> kmax(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            kmax[static_cast<std::size_t>(i)] =
                std::min(m1.b[static_cast<std::size_t>(i)], m2.a[static_cast<std::size_t>(i)]);
        int kt_max = std::min(m1.e, m2.d);

        bool done = false;
        while (!done) {
            for (int kt = 0; kt <= kt_max; ++kt) {
                Rational c = coef * c2;
                for (int i = 0; i < n; ++i)
                    c *= reorder_coeff(m1.b[static_cast<std::size_t>(i)],
                                       m2.a[static_cast<std::size_t>(i)],
                                       k[static_cast<std::size_t>(i)]);
                c *= reorder_coeff(m1.e, m2.d, kt);
                WeylMonomial m;
                m.a.resize(static_cast<std::size_t>(n));
                m.b.resize(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    m.a[static_cast<std::size_t>(i)] = m1.a[static_cast<std::size_t>(i)] +
                                                       m2.a[static_cast<std::size_t>(i)] -
                                                       k[static_cast<std::size_t>(i)];
                    m.b[static_cast<std::size_t>(i)] = m1.b[static_cast<std::size_t>(i)] +
                                                       m2.b[static_cast<std::size_t>(i)] -
                                                       k[static_cast<std::size_t>(i)];
                }
                m.c = m1.c + m2.c;
                m.d = m1.d + m2.d - kt;
                m.e = m1.e + m2.e - kt;
                out.add_term(m, c);
            }
            // odometer over the per-variable contraction orders
            done = true;
            for (int i = 0; i < n; ++i) {
                auto idx = static_cast<std::size_t>(i);
                if (k[idx] < kmax[idx]) {
                    ++k[idx];
                    std::fill(k.begin(), k.begin() + i, 0);
                    done = false;
                    break;
                }
            }
        }
    }
    return out;
}

WeylElement mul(const WeylElement& p, const WeylElement& q) {
    if (!(p.signature() == q.signature())) throw invalid_input("signature mismatch in product");
    WeylElement out(p.signature());
    for (const auto& [m1, c1] : p.terms()) out = out + monomial_mul(p.signature(), m1, c1, q);
    return out;
}

WeylElement WeylElement::pow(int k) const {
    WeylElement r = constant(sig_, Rational(1));
    for (int i = 0; i < k; ++i) r = mul(r, *this);
    return r;
}

int WeylElement::sharp_order() const {
    if (terms_.empty()) throw invalid_input("sharp_order of the zero element");
    if (sig_.has_t) throw invalid_input("sharp_order undefined in a t-signature");
    int v = 0;
    for (const auto& [m, c] : terms_) v = std::max(v, m.sharp());
    return v;
}

int WeylElement::diff_order() const {
    if (terms_.empty()) throw invalid_input("diff_order of the zero element");
    int v = 0;
    for (const auto& [m, c] : terms_) v = std::max(v, m.diff_total());
    return v;
}

int WeylElement::v_weight_min() const {
    if (terms_.empty()) throw invalid_input("v_weight of the zero element");
    if (!sig_.has_t) throw invalid_input("v_weight needs a t-signature");
    int v = terms_.begin()->first.v_weight();
    for (const auto& [m, c] : terms_) v = std::min(v, m.v_weight());
    return v;
}

WeylElement WeylElement::substitute_s(const Rational& value) const {
    WeylElement r(sig_);
    for (const auto& [m, c] : terms_) {
        Rational factor(1);
        for (int i = 0; i < m.c; ++i) factor *= value;
        WeylMonomial m2 = m;
        m2.c = 0;
        r.add_term(m2, c * factor);
    }
    return r;
}

WeylElement WeylElement::drop_s() const {
    AlgebraSignature sig2{sig_.n, false, sig_.has_t};
    WeylElement r(sig2);
    for (const auto& [m, c] : terms_) {
        if (m.c != 0) throw invalid_input("drop_s: element involves s");
        r.add_term(m, c);
    }
    return r;
}

WeylElement WeylElement::promoted(const AlgebraSignature& target) const {
    if (target.n != sig_.n || (sig_.has_s && !target.has_s) || (sig_.has_t && !target.has_t))
        throw invalid_input("promoted: target signature does not contain source");
    WeylElement r(target);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

bool WeylElement::is_commutative_in_x() const {
    for (const auto& [m, c] : terms_)
        if (m.c != 0 || m.d != 0 || m.e != 0 ||
            std::any_of(m.b.begin(), m.b.end(), [](int v) { return v != 0; }))
            return false;
    return true;
}

Poly WeylElement::to_poly() const {
    if (!is_commutative_in_x()) throw invalid_input("to_poly: element is not a polynomial in x");
    Poly p(sig_.n);
    for (const auto& [m, c] : terms_) p.add_term(Exponents{m.a}, c);
    return p;
}

UniPoly WeylElement::to_unipoly_in_s() const {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : terms_) {
        if (m.d != 0 || m.e != 0 ||
            std::any_of(m.a.begin(), m.a.end(), [](int v) { return v != 0; }) ||
            std::any_of(m.b.begin(), m.b.end(), [](int v) { return v != 0; }))
            throw invalid_input("to_unipoly_in_s: element involves x, dx, t or dt");
        if (static_cast<int>(coeffs.size()) <= m.c) coeffs.resize(static_cast<std::size_t>(m.c) + 1);
        coeffs[static_cast<std::size_t>(m.c)] = c;
    }
    return UniPoly(std::move(coeffs));
}

WeylElement WeylElement::sharp_symbol() const {
    int k = sharp_order();
    WeylElement r(sig_);
    for (const auto& [m, c] : terms_)
        if (m.sharp() == k) r.add_term(m, c);
    return r;
}

std::string WeylElement::str(const std::vector<std::string>& xnames) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> xs, dxs;
    for (int i = 0; i < sig_.n; ++i) {
        std::string base = xnames.empty() ? ("x" + std::to_string(i + 1))
                                          : xnames[static_cast<std::size_t>(i)];
        xs.push_back(base);
        dxs.push_back("d" + base);
    }
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
        auto append = [&mono](const std::string& nm, int exp) {
            if (exp == 0) return;
            if (!mono.empty()) mono += "*";
            mono += nm + "^" + std::to_string(exp);
        };
        for (int i = 0; i < sig_.n; ++i) append(xs[static_cast<std::size_t>(i)], m.a[static_cast<std::size_t>(i)]);
        for (int i = 0; i < sig_.n; ++i) append(dxs[static_cast<std::size_t>(i)], m.b[static_cast<std::size_t>(i)]);
        append("s", m.c);
        append("t", m.d);
        append("dt", m.e);
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
