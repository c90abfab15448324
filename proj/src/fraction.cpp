#include "bshodge/fraction.hpp"

namespace bshodge {

namespace {

// Cancels f out of num while the pole allows it.
void canonicalize(Poly& num, int& pole, const Poly& f) {
    if (num.is_zero()) {
        pole = 0;
        return;
    }
    while (pole > 0) {
        auto q = num.div_exact(f);
        if (!q) break;
        num = *q;
        --pole;
        if (num.is_zero()) {
            pole = 0;
            return;
        }
    }
}

}  // namespace

FractionElement make_fraction(Poly num, int pole, Rational twist, const Poly& f) {
    if (pole < 0) throw invalid_input("negative pole order");
    canonicalize(num, pole, f);
    return FractionElement{std::move(num), pole, std::move(twist)};
}

FractionElement frac_add(const FractionElement& a, const FractionElement& b, const Poly& f) {
    if (!(a.twist == b.twist)) throw invalid_input("twist mismatch in fraction addition");
    int pole = std::max(a.pole, b.pole);
    Poly num = a.num * f.pow(pole - a.pole) + b.num * f.pow(pole - b.pole);
    return make_fraction(std::move(num), pole, a.twist, f);
}

FractionElement frac_scale(const FractionElement& a, const Rational& c) {
    if (c.is_zero()) return FractionElement{Poly(a.num.nvars()), 0, a.twist};
    return FractionElement{a.num * c, a.pole, a.twist};
}

FractionElement frac_mul_poly(const FractionElement& a, const Poly& g, const Poly& f) {
    return make_fraction(a.num * g, a.pole, a.twist, f);
}

Poly frac_cleared_numerator(const FractionElement& a, int level, const Poly& f) {
    if (a.pole > level) throw invalid_input("pole exceeds pole_level");
    return a.num * f.pow(level - a.pole);
}

std::string FractionElement::str(const std::vector<std::string>& names) const {
    Rational expo = -(Rational(pole) + twist);
    std::string body = num.term_count() > 1 ? "(" + num.str(names) + ")" : num.str(names);
    if (expo.is_zero()) return body;
    return body + "*f^(" + expo.str() + ")";
}

SPolyFrac make_spoly_frac(Poly num, int pole, Rational shift, const Poly& f) {
    if (pole < 0) throw invalid_input("negative pole order");
    Poly f_ext = f.extended(1);
    canonicalize(num, pole, f_ext);
    return SPolyFrac{std::move(num), pole, std::move(shift)};
}

SPolyFrac sfrac_add(const SPolyFrac& a, const SPolyFrac& b, const Poly& f) {
    if (!(a.shift == b.shift)) throw invalid_input("shift mismatch in fraction addition");
    Poly f_ext = f.extended(1);
    int pole = std::max(a.pole, b.pole);
    Poly num = a.num * f_ext.pow(pole - a.pole) + b.num * f_ext.pow(pole - b.pole);
    return make_spoly_frac(std::move(num), pole, a.shift, f);
}

FractionElement act_on_fraction(const WeylElement& op, const FractionElement& u, const Poly& f) {
    const auto& sig = op.signature();
    if (sig.has_s || sig.has_t)
        throw invalid_input("act_on_fraction needs a plain differential operator");
    if (sig.n != f.nvars()) throw invalid_input("operator/divisor variable mismatch");

    FractionElement acc{Poly(f.nvars()), 0, u.twist};
    for (const auto& [m, c] : op.terms()) {
        Poly num = u.num;
        int pole = u.pole;
        for (int i = 0; i < sig.n; ++i) {
            for (int rep = 0; rep < m.b[static_cast<std::size_t>(i)]; ++rep) {
                Rational w = -(Rational(pole) + u.twist);
                num = num.derivative(i) * f + num * f.derivative(i) * w;
                ++pole;
            }
        }
        for (int i = 0; i < sig.n; ++i)
            if (m.a[static_cast<std::size_t>(i)] > 0)
                num = num * Poly::variable(f.nvars(), i, m.a[static_cast<std::size_t>(i)]);
        acc = frac_add(acc, make_fraction(num * c, pole, u.twist, f), f);
    }
    return acc;
}

SPolyFrac act_on_spoly(const WeylElement& op, const SPolyFrac& u, const Poly& f) {
    const auto& sig = op.signature();
    if (sig.has_t) throw invalid_input("act_on_spoly does not accept t-operators");
    if (sig.n != f.nvars()) throw invalid_input("operator/divisor variable mismatch");

    const int n = f.nvars();
    Poly f_ext = f.extended(1);
    Poly s_var = Poly::variable(n + 1, n);

    SPolyFrac acc{Poly(n + 1), 0, u.shift};
    for (const auto& [m, c] : op.terms()) {
        Poly num = u.num;
        int pole = u.pole;
        if (m.c > 0) num = num * s_var.pow(m.c);
        for (int i = 0; i < n; ++i) {
            for (int rep = 0; rep < m.b[static_cast<std::size_t>(i)]; ++rep) {
                Poly w = s_var + Poly::constant(n + 1, u.shift - Rational(pole));
                num = num.derivative(i) * f_ext + num * f_ext.derivative(i) * w;
                ++pole;
            }
        }
        for (int i = 0; i < n; ++i)
            if (m.a[static_cast<std::size_t>(i)] > 0)
                num = num * Poly::variable(n + 1, i, m.a[static_cast<std::size_t>(i)]);
        acc = sfrac_add(acc, make_spoly_frac(num * c, pole, u.shift, f), f);
    }
    return acc;
}

SPolyFrac act_on_fs(const WeylElement& op, const Poly& f, const Rational& gamma) {
    if (f.is_zero()) throw invalid_input("act_on_fs with zero divisor");
    SPolyFrac unit{Poly::constant(f.nvars() + 1, Rational(1)), 0, gamma};
    return act_on_spoly(op, unit, f);
}

FractionElement specialize_s(const SPolyFrac& u, const Rational& value, const Poly& f) {
    int n = f.nvars();
    Poly num = u.num.substitute(n, value).restricted(n);
    return make_fraction(std::move(num), u.pole, -(value + u.shift), f);
}

}  // namespace bshodge
