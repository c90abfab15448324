#pragma once

#include <vector>

#include "bshodge/weyl.hpp"

namespace bshodge {

/// Admissible monomial order on normally ordered Weyl monomials, over the
/// flattened exponent positions (x_1..x_n, dx_1..dx_n, [s], [t, dt]).
///
/// All three kinds refine a grading whose commutator corrections are
/// strictly smaller, so leading monomials are multiplicative and Buchberger
/// reduction is sound for left ideals.
struct MonomialOrder {
    enum class Kind { GradedLex, SharpGraded, BlockElim };

    Kind kind = Kind::GradedLex;
    /// Tie-break permutation: flattened positions in comparison priority.
    std::vector<int> perm;
    /// BlockElim only: ordered blocks partitioning the positions,
    /// graded-lex inside each block.
    std::vector<std::vector<int>> blocks;

    static MonomialOrder graded_lex(const AlgebraSignature& sig);
    /// Compares |b| + c first, then total degree, then lex.
    static MonomialOrder sharp_graded(const AlgebraSignature& sig);
    /// Front block positions eliminated first; back block is the rest.
    static MonomialOrder block_elim(const AlgebraSignature& sig, std::vector<int> front_positions);

    int compare(const AlgebraSignature& sig, const WeylMonomial& m1, const WeylMonomial& m2) const;
    bool less(const AlgebraSignature& sig, const WeylMonomial& m1, const WeylMonomial& m2) const {
        return compare(sig, m1, m2) < 0;
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.perm == b.perm && a.blocks == b.blocks;
    }
};

}  // namespace bshodge
