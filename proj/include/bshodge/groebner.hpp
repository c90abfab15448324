#pragma once

#include <optional>
#include <vector>

#include "bshodge/order.hpp"
#include "bshodge/weyl.hpp"

namespace bshodge {

/// Generators of a left ideal together with a reduced Groebner basis under
/// a fixed admissible order, plus cofactor certificates expressing every
/// basis element as a left combination of the input generators.
struct LeftIdealBasis {
    AlgebraSignature sig;
    std::vector<WeylElement> generators;
    MonomialOrder order;
    std::vector<WeylElement> groebner;
    /// certificates[i][j]: groebner[i] == sum_j mul(certificates[i][j], generators[j])
    std::vector<std::vector<WeylElement>> certificates;

    bool has_groebner() const { return !groebner.empty(); }
};

/// Buchberger with the chain criterion, normal selection strategy and
/// deterministic tie-breaks; returns the reduced basis (leading
/// coefficients positive, coefficients integral of content one).
LeftIdealBasis buchberger(std::vector<WeylElement> gens, MonomialOrder order);

struct NormalFormResult {
    WeylElement remainder;
    /// cofactors[i] against the reducing set: p == sum mul(cofactors[i], set[i]) + remainder
    std::vector<WeylElement> cofactors;
};

/// Full left normal form against an ordered reducing set: no term of the
/// remainder is divisible by any leading monomial, and every quotient
/// satisfies lm(q_i g_i) <= lm(p).
NormalFormResult normal_form(const WeylElement& p, const std::vector<WeylElement>& set,
                             const MonomialOrder& order);
/// Same against basis.groebner; throws invalid_input when absent.
NormalFormResult normal_form(const WeylElement& p, const LeftIdealBasis& basis);

/// Groebner basis under the block-elimination order that puts
/// front_positions first.
LeftIdealBasis eliminate_basis(std::vector<WeylElement> gens, std::vector<int> front_positions);
/// The basis elements free of the front positions; they generate the
/// intersection with the subalgebra of the remaining variables.
std::vector<WeylElement> elements_free_of(const LeftIdealBasis& basis,
                                          const std::vector<int>& positions);
/// Convenience composition of the two calls above.
std::vector<WeylElement> eliminate(std::vector<WeylElement> gens, std::vector<int> front_positions);

struct FiltrationGenerator {
    WeylElement g;
    int slack;  // k - sharp_order(g)
};

/// Generators of (ideal ∩ F_k#): for a basis reduced under a sharp-graded
/// order, these are the basis elements of sharp order <= k, each carrying
/// the sharp-degree room left for cofactors.
std::vector<FiltrationGenerator> filtration_intersect(const LeftIdealBasis& basis, int k);

}  // namespace bshodge
