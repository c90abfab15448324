#include "bshodge/order.hpp"

#include <algorithm>
#include <numeric>

namespace bshodge {

MonomialOrder MonomialOrder::graded_lex(const AlgebraSignature& sig) {
    MonomialOrder o;
    o.kind = Kind::GradedLex;
    o.perm.resize(static_cast<std::size_t>(sig.positions()));
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::sharp_graded(const AlgebraSignature& sig) {
    MonomialOrder o = graded_lex(sig);
    o.kind = Kind::SharpGraded;
    return o;
}

MonomialOrder MonomialOrder::block_elim(const AlgebraSignature& sig,
                                        std::vector<int> front_positions) {
    MonomialOrder o;
    o.kind = Kind::BlockElim;
    std::sort(front_positions.begin(), front_positions.end());
    std::vector<int> back;
    for (int p = 0; p < sig.positions(); ++p)
        if (!std::binary_search(front_positions.begin(), front_positions.end(), p))
            back.push_back(p);
    o.blocks = {front_positions, back};
    return o;
}

namespace {

int lex_compare(const std::vector<int>& f1, const std::vector<int>& f2,
                const std::vector<int>& perm) {
    for (int p : perm) {
        int d = f1[static_cast<std::size_t>(p)] - f2[static_cast<std::size_t>(p)];
        if (d != 0) return d;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const AlgebraSignature& sig, const WeylMonomial& m1,
                           const WeylMonomial& m2) const {
    std::vector<int> f1 = m1.flat(sig), f2 = m2.flat(sig);
    switch (kind) {
        case Kind::SharpGraded: {
            if (int d = m1.sharp() - m2.sharp(); d != 0) return d;
            if (int d = m1.total() - m2.total(); d != 0) return d;
            return lex_compare(f1, f2, perm);
        }
        case Kind::GradedLex: {
            if (int d = m1.total() - m2.total(); d != 0) return d;
            return lex_compare(f1, f2, perm);
        }
        case Kind::BlockElim: {
            for (const auto& block : blocks) {
                int t1 = 0, t2 = 0;
                for (int p : block) {
                    t1 += f1[static_cast<std::size_t>(p)];
                    t2 += f2[static_cast<std::size_t>(p)];
                }
                if (t1 != t2) return t1 - t2;
                if (int d = lex_compare(f1, f2, block); d != 0) return d;
            }
            return 0;
        }
    }
    return 0;
}

}  // namespace bshodge
