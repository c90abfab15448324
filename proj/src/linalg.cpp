#include "bshodge/linalg.hpp"

#include <algorithm>

namespace bshodge {

void SparseRow::add_entry(int col, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(e.begin(), e.end(), col,
                               [](const auto& p, int v) { return p.first < v; });
    if (it != e.end() && it->first == col) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    } else {
        e.insert(it, {col, c});
    }
}

SparseRow SparseRow::scaled(const Rational& c) const {
    SparseRow r;
    if (c.is_zero()) return r;
    r.e.reserve(e.size());
    for (const auto& [col, v] : e) r.e.emplace_back(col, v * c);
    return r;
}

SparseRow row_axpy(const SparseRow& r, const Rational& c, const SparseRow& s) {
    if (c.is_zero()) return r;
    SparseRow out;
    out.e.reserve(r.e.size() + s.e.size());
    std::size_t i = 0, j = 0;
    while (i < r.e.size() || j < s.e.size()) {
        if (j >= s.e.size() || (i < r.e.size() && r.e[i].first < s.e[j].first)) {
            out.e.push_back(r.e[i++]);
        } else if (i >= r.e.size() || s.e[j].first < r.e[i].first) {
            out.e.emplace_back(s.e[j].first, s.e[j].second * c);
            ++j;
        } else {
            Rational v = r.e[i].second + s.e[j].second * c;
            if (!v.is_zero()) out.e.emplace_back(r.e[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow EchelonSpan::reduce(SparseRow r) const {
    while (!r.is_zero()) {
        auto it = rows_.find(r.leading_col());
        if (it == rows_.end()) {
            // The leading column is not a pivot; later pivot columns may
            // still occur in the tail, clear them one at a time.
            bool touched = false;
            for (const auto& [col, c] : r.e) {
                auto jt = rows_.find(col);
                if (jt != rows_.end() && col != r.leading_col()) {
                    r = row_axpy(r, -c, jt->second);
                    touched = true;
                    break;
                }
            }
            if (!touched) return r;
        } else {
            r = row_axpy(r, -r.leading_coeff(), it->second);
        }
    }
    return r;
}

bool EchelonSpan::insert(SparseRow r) {
    r = reduce(std::move(r));
    if (r.is_zero()) return false;
    int pivot = r.leading_col();
    r = r.scaled(r.leading_coeff().inverse());
    // Keep the basis fully reduced: clear the new pivot column everywhere.
    for (auto& [p, row] : rows_) {
        auto it = std::lower_bound(row.e.begin(), row.e.end(), pivot,
                                   [](const auto& q, int v) { return q.first < v; });
        if (it != row.e.end() && it->first == pivot) {
            Rational c = it->second;
            row = row_axpy(row, -c, r);
        }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

bool EchelonSpan::contains_span(const EchelonSpan& other) const {
    for (const auto& [p, row] : other.rows())
        if (!contains(row)) return false;
    return true;
}

EchelonSpan make_span(const std::vector<SparseRow>& rows) {
    EchelonSpan s;
    for (const auto& r : rows) s.insert(r);
    return s;
}

std::vector<SparseRow> rows_avoiding_block(const std::vector<SparseRow>& rows,
                                           const std::function<bool(int)>& in_first_block) {
    // Relabel columns so the first block sorts before everything else.
    std::vector<int> cols;
    for (const auto& r : rows)
        for (const auto& [c, v] : r.e) cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    std::map<int, int> fwd;
    std::vector<int> rev(cols.size());
    int next = 0;
    for (int c : cols)
        if (in_first_block(c)) {
            fwd[c] = next;
            rev[static_cast<std::size_t>(next)] = c;
            ++next;
        }
    const int block_end = next;
    for (int c : cols)
        if (!in_first_block(c)) {
            fwd[c] = next;
            rev[static_cast<std::size_t>(next)] = c;
            ++next;
        }

    EchelonSpan span;
    for (const auto& r : rows) {
        SparseRow p;
        for (const auto& [c, v] : r.e) p.add_entry(fwd[c], v);
        span.insert(std::move(p));
    }

    std::vector<SparseRow> out;
    for (const auto& [pivot, row] : span.rows()) {
        if (pivot < block_end) continue;
        SparseRow back;
        for (const auto& [c, v] : row.e) back.add_entry(rev[static_cast<std::size_t>(c)], v);
        out.push_back(std::move(back));
    }
    return out;
}

EchelonSpan intersect_spans(const EchelonSpan& a, const EchelonSpan& b, int dim) {
    // Zassenhaus: rows (v | v) for a, (w | 0) for b; combinations with zero
    // first block have second block in span(a) ∩ span(b).
    std::vector<SparseRow> stacked;
    for (const auto& [p, row] : a.rows()) {
        SparseRow r = row;
        for (const auto& [c, v] : row.e) r.add_entry(c + dim, v);
        stacked.push_back(std::move(r));
    }
    for (const auto& [p, row] : b.rows()) stacked.push_back(row);

    auto picked = rows_avoiding_block(stacked, [dim](int c) { return c < dim; });
    EchelonSpan out;
    for (const auto& r : picked) {
        SparseRow shifted;
        for (const auto& [c, v] : r.e) shifted.add_entry(c - dim, v);
        out.insert(std::move(shifted));
    }
    return out;
}

EchelonSpan kernel_tags(const std::vector<std::pair<SparseRow, SparseRow>>& pairs, int key_dim) {
    std::vector<SparseRow> stacked;
    stacked.reserve(pairs.size());
    for (const auto& [key, tag] : pairs) {
        SparseRow r = key;
        for (const auto& [c, v] : tag.e) r.add_entry(c + key_dim, v);
        stacked.push_back(std::move(r));
    }
    auto picked = rows_avoiding_block(stacked, [key_dim](int c) { return c < key_dim; });
    EchelonSpan out;
    for (const auto& r : picked) {
        SparseRow shifted;
        for (const auto& [c, v] : r.e) shifted.add_entry(c - key_dim, v);
        out.insert(std::move(shifted));
    }
    return out;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col(rows, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[rank]);
        std::swap(b[sel], b[rank]);
        Rational inv = a[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) x[static_cast<std::size_t>(pivot_col[i])] = b[i];
    return x;
}

}  // namespace bshodge
