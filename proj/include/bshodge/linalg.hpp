#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bshodge/rational.hpp"

namespace bshodge {

/// Sparse vector over Q, entries sorted by column index, no zeros stored.
struct SparseRow {
    std::vector<std::pair<int, Rational>> e;

    bool is_zero() const { return e.empty(); }
    int leading_col() const { return e.front().first; }
    const Rational& leading_coeff() const { return e.front().second; }

    void add_entry(int col, const Rational& c);
    SparseRow scaled(const Rational& c) const;
    friend bool operator==(const SparseRow& a, const SparseRow& b) { return a.e == b.e; }
};

/// r + c * s
SparseRow row_axpy(const SparseRow& r, const Rational& c, const SparseRow& s);

/// Fully reduced row echelon basis (RREF): one row per pivot column,
/// pivot coefficient 1, pivot columns cleared from every other row.
/// The basis is the canonical representative of its row space.
class EchelonSpan {
public:
    /// Residual of r after reduction against the basis (zero iff r in span).
    SparseRow reduce(SparseRow r) const;
    /// Reduce and, if nonzero, add as a new basis row. Returns true if added.
    bool insert(SparseRow r);
    bool contains(SparseRow r) const { return reduce(std::move(r)).is_zero(); }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseRow>& rows() const { return rows_; }

    friend bool operator==(const EchelonSpan& a, const EchelonSpan& b) {
        return a.rows_ == b.rows_;
    }
    bool contains_span(const EchelonSpan& other) const;

private:
    std::map<int, SparseRow> rows_;  // pivot column -> row
};

EchelonSpan make_span(const std::vector<SparseRow>& rows);

/// Rows of the RREF of `rows` whose support avoids the columns selected by
/// `in_first_block`, i.e. a canonical basis of rowspace ∩ {first block = 0}.
/// Implemented by echelonizing with the first-block columns ordered before
/// all others.
std::vector<SparseRow> rows_avoiding_block(const std::vector<SparseRow>& rows,
                                           const std::function<bool(int)>& in_first_block);

/// Intersection of two row spaces (Zassenhaus), over columns in [0, dim).
EchelonSpan intersect_spans(const EchelonSpan& a, const EchelonSpan& b, int dim);

/// Tags of combinations whose key part vanishes: given pairs (key, tag)
/// with key columns in [0, key_dim) and tag columns arbitrary, returns a
/// canonical basis of { sum c_i tag_i : sum c_i key_i = 0 }.
EchelonSpan kernel_tags(const std::vector<std::pair<SparseRow, SparseRow>>& pairs, int key_dim);

/// Dense exact solve A x = b; returns one particular solution or nullopt.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

}  // namespace bshodge
