#include "bshodge/groebner.hpp"

#include <algorithm>
#include <set>

namespace bshodge {

namespace {

bool mono_divides(const WeylMonomial& d, const WeylMonomial& m) {
    for (std::size_t i = 0; i < d.a.size(); ++i)
        if (d.a[i] > m.a[i] || d.b[i] > m.b[i]) return false;
    return d.c <= m.c && d.d <= m.d && d.e <= m.e;
}

WeylMonomial mono_lcm(const WeylMonomial& x, const WeylMonomial& y) {
    WeylMonomial r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) {
        r.a[i] = std::max(x.a[i], y.a[i]);
        r.b[i] = std::max(x.b[i], y.b[i]);
    }
    r.c = std::max(x.c, y.c);
    r.d = std::max(x.d, y.d);
    r.e = std::max(x.e, y.e);
    return r;
}

WeylMonomial mono_quot(const WeylMonomial& m, const WeylMonomial& d) {
    WeylMonomial r = m;
    for (std::size_t i = 0; i < r.a.size(); ++i) {
        r.a[i] -= d.a[i];
        r.b[i] -= d.b[i];
    }
    r.c -= d.c;
    r.d -= d.d;
    r.e -= d.e;
    return r;
}

struct WorkItem {
    WeylElement g;
    std::vector<WeylElement> cert;
    WeylMonomial lm;
    Rational lc;
};

std::pair<WeylMonomial, Rational> leading_term(const WeylElement& g, const AlgebraSignature& sig,
                                               const MonomialOrder& order) {
    auto it = g.terms().begin();
    WeylMonomial best = it->first;
    Rational coef = it->second;
    for (++it; it != g.terms().end(); ++it) {
        if (order.less(sig, best, it->first)) {
            best = it->first;
            coef = it->second;
        }
    }
    return {best, coef};
}

// Positive scalar r with element/r integral of content one.
Rational element_content(const WeylElement& g) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : g.terms()) {
        gcd(num_gcd, num_gcd, c.numerator());
        lcm(den_lcm, den_lcm, c.denominator());
    }
    if (num_gcd == 0) return Rational(1);
    return Rational(num_gcd, den_lcm);
}

void normalize_item(WorkItem& item, const AlgebraSignature& sig, const MonomialOrder& order) {
    Rational scale = element_content(item.g).inverse();
    auto [lm, lc] = leading_term(item.g, sig, order);
    if ((lc * scale).sign() < 0) scale = -scale;
    item.g = item.g * scale;
    for (auto& c : item.cert) c = c * scale;
    item.lm = lm;
    item.lc = lc * scale;
}

// Full normal form with cofactors against a fixed reducing set.
struct Reduction {
    WeylElement remainder;
    std::vector<WeylElement> cofactors;  // one per reducing item
};

Reduction reduce_full(const WeylElement& p, const std::vector<WorkItem>& items,
                      const std::vector<std::size_t>& active, const AlgebraSignature& sig,
                      const MonomialOrder& order) {
    Reduction out;
    out.remainder = p;
    out.cofactors.assign(items.size(), WeylElement::zero(sig));
    while (!out.remainder.is_zero()) {
        // Largest reducible term; smallest-index divisor for determinism.
        bool found = false;
        WeylMonomial mono;
        Rational coef;
        std::size_t reducer = 0;
        for (const auto& [m, c] : out.remainder.terms()) {
            for (std::size_t idx : active) {
                if (!mono_divides(items[idx].lm, m)) continue;
                if (!found || order.less(sig, mono, m)) {
                    mono = m;
                    coef = c;
                    reducer = idx;
                }
                found = true;
                break;
            }
        }
        if (!found) break;
        WeylMonomial u = mono_quot(mono, items[reducer].lm);
        Rational q = coef / items[reducer].lc;
        out.remainder = out.remainder - monomial_mul(sig, u, q, items[reducer].g);
        out.cofactors[reducer].add_term(u, q);
    }
    return out;
}

}  // namespace

LeftIdealBasis buchberger(std::vector<WeylElement> gens, MonomialOrder order) {
    if (gens.empty()) throw invalid_input("buchberger: no generators");
    const AlgebraSignature sig = gens.front().signature();
    for (const auto& g : gens) {
        if (g.is_zero()) throw invalid_input("buchberger: zero generator");
        if (!(g.signature() == sig)) throw invalid_input("buchberger: signature mismatch");
    }

    const std::size_t ngen = gens.size();
    std::vector<WorkItem> items;
    for (std::size_t i = 0; i < ngen; ++i) {
        WorkItem it;
        it.g = gens[i];
        it.cert.assign(ngen, WeylElement::zero(sig));
        it.cert[i] = WeylElement::constant(sig, Rational(1));
        normalize_item(it, sig, order);
        items.push_back(std::move(it));
    }

    // Pending S-pairs keyed by (lcm total degree, i, j): normal strategy.
    using PairKey = std::tuple<int, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        WeylMonomial l = mono_lcm(items[i].lm, items[j].lm);
        queue.insert({l.total(), i, j});
        pending.insert({i, j});
    };
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j) push_pair(i, j);

    std::vector<std::size_t> active(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) active[i] = i;

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});

        WeylMonomial l = mono_lcm(items[i].lm, items[j].lm);
        // Chain criterion: some other basis element divides the lcm and both
        // side pairs were already considered.
        bool skip = false;
        for (std::size_t k = 0; k < items.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!mono_divides(items[k].lm, l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        WeylMonomial ui = mono_quot(l, items[i].lm);
        WeylMonomial uj = mono_quot(l, items[j].lm);
        Rational ci = items[i].lc.inverse();
        Rational cj = items[j].lc.inverse();
        WeylElement spoly = monomial_mul(sig, ui, ci, items[i].g) -
                            monomial_mul(sig, uj, cj, items[j].g);
        if (spoly.is_zero()) continue;

        Reduction red = reduce_full(spoly, items, active, sig, order);
        if (red.remainder.is_zero()) continue;

        WorkItem fresh;
        fresh.g = red.remainder;
        fresh.cert.assign(ngen, WeylElement::zero(sig));
        for (std::size_t l2 = 0; l2 < ngen; ++l2) {
            WeylElement c = monomial_mul(sig, ui, ci, items[i].cert[l2]) -
                            monomial_mul(sig, uj, cj, items[j].cert[l2]);
            for (std::size_t idx = 0; idx < items.size(); ++idx) {
                if (red.cofactors[idx].is_zero()) continue;
                c = c - mul(red.cofactors[idx], items[idx].cert[l2]);
            }
            fresh.cert[l2] = std::move(c);
        }
        normalize_item(fresh, sig, order);
        items.push_back(std::move(fresh));
        std::size_t fresh_idx = items.size() - 1;
        active.push_back(fresh_idx);
        for (std::size_t k = 0; k + 1 < items.size(); ++k) push_pair(k, fresh_idx);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<bool> alive(items.size(), true);
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = 0; j < items.size() && alive[i]; ++j) {
            if (i == j || !alive[j]) continue;
            if (!mono_divides(items[j].lm, items[i].lm)) continue;
            if (items[j].lm == items[i].lm && j > i) continue;
            alive[i] = false;
        }
    }

    // Interreduce tails; leading monomials are pairwise non-dividing here.
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (alive[i]) kept.push_back(i);
    std::sort(kept.begin(), kept.end(), [&](std::size_t x, std::size_t y) {
        return order.less(sig, items[x].lm, items[y].lm);
    });
    for (std::size_t pos = 0; pos < kept.size(); ++pos) {
        std::size_t idx = kept[pos];
        std::vector<std::size_t> others;
        for (std::size_t q : kept)
            if (q != idx) others.push_back(q);
        Reduction red = reduce_full(items[idx].g, items, others, sig, order);
        if (red.remainder.is_zero())
            throw internal_inconsistency("interreduction erased a minimal basis element");
        items[idx].g = red.remainder;
        for (std::size_t l2 = 0; l2 < ngen; ++l2) {
            WeylElement c = items[idx].cert[l2];
            for (std::size_t q = 0; q < items.size(); ++q) {
                if (red.cofactors[q].is_zero()) continue;
                c = c - mul(red.cofactors[q], items[q].cert[l2]);
            }
            items[idx].cert[l2] = std::move(c);
        }
        normalize_item(items[idx], sig, order);
    }

    LeftIdealBasis out;
    out.sig = sig;
    out.generators = std::move(gens);
    out.order = std::move(order);
    for (std::size_t idx : kept) {
        out.groebner.push_back(items[idx].g);
        out.certificates.push_back(items[idx].cert);
    }
    return out;
}

NormalFormResult normal_form(const WeylElement& p, const std::vector<WeylElement>& set,
                             const MonomialOrder& order) {
    if (set.empty()) throw invalid_input("normal_form: empty reducing set");
    const AlgebraSignature sig = set.front().signature();
    std::vector<WorkItem> items;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < set.size(); ++i) {
        WorkItem it;
        it.g = set[i];
        auto [lm, lc] = leading_term(set[i], sig, order);
        it.lm = lm;
        it.lc = lc;
        items.push_back(std::move(it));
        active.push_back(i);
    }
    Reduction red = reduce_full(p, items, active, sig, order);
    return {std::move(red.remainder), std::move(red.cofactors)};
}

NormalFormResult normal_form(const WeylElement& p, const LeftIdealBasis& basis) {
    if (!basis.has_groebner()) throw invalid_input("normal_form: basis has no Groebner basis");
    return normal_form(p, basis.groebner, basis.order);
}

LeftIdealBasis eliminate_basis(std::vector<WeylElement> gens, std::vector<int> front_positions) {
    if (gens.empty()) throw invalid_input("eliminate: no generators");
    MonomialOrder order = MonomialOrder::block_elim(gens.front().signature(),
                                                    std::move(front_positions));
    return buchberger(std::move(gens), std::move(order));
}

std::vector<WeylElement> elements_free_of(const LeftIdealBasis& basis,
                                          const std::vector<int>& positions) {
    std::vector<WeylElement> out;
    for (const auto& g : basis.groebner) {
        bool free = true;
        for (const auto& [m, c] : g.terms()) {
            auto flat = m.flat(basis.sig);
            for (int p : positions)
                if (flat[static_cast<std::size_t>(p)] != 0) free = false;
            if (!free) break;
        }
        if (free) out.push_back(g);
    }
    return out;
}

std::vector<WeylElement> eliminate(std::vector<WeylElement> gens,
                                   std::vector<int> front_positions) {
    auto front = front_positions;
    auto basis = eliminate_basis(std::move(gens), std::move(front_positions));
    return elements_free_of(basis, front);
}

std::vector<FiltrationGenerator> filtration_intersect(const LeftIdealBasis& basis, int k) {
    if (basis.order.kind != MonomialOrder::Kind::SharpGraded)
        throw invalid_input("filtration_intersect needs a sharp-graded basis");
    if (!basis.has_groebner()) throw invalid_input("filtration_intersect: missing Groebner basis");
    std::vector<FiltrationGenerator> out;
    for (const auto& g : basis.groebner) {
        int d = g.sharp_order();
        if (d <= k) out.push_back({g, k - d});
    }
    return out;
}

}  // namespace bshodge
