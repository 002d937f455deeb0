#include "skylr/contretab.hpp"

#include <algorithm>

#include "skylr/error.hpp"

namespace skylr {

ContreTableau::ContreTableau(Partition shape, std::vector<std::vector<int>> rows)
    : ContreTableau(std::move(shape), Partition{}, std::move(rows)) {}

ContreTableau::ContreTableau(Partition shape, Partition inner, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), inner_(std::move(inner)), rows_(std::move(rows)) {
    if (inner_.length() > shape_.length())
        throw Error(ErrorCode::ShapeMismatch, "inner shape " + to_string(inner_) + " has too many rows");
    if (rows_.size() != shape_.length())
        throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(shape_.length()) + " rows");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int in = r < inner_.length() ? inner_[r] : 0;
        if (in > shape_[r]) throw Error(ErrorCode::ShapeMismatch, to_string(inner_) + " not inside " + to_string(shape_));
        if (static_cast<int>(rows_[r].size()) != shape_[r] - in)
            throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(r + 1) + " has the wrong number of entries");
        for (int v : rows_[r])
            if (v < 1) throw Error(ErrorCode::InvalidEntry, "contretableau entries must be positive");
    }
}

int ContreTableau::inner_length(int row) const {
    const auto r = static_cast<std::size_t>(row - 1);
    return r < inner_.length() ? inner_[r] : 0;
}

bool ContreTableau::is_skew_cell(int row, int col) const {
    return row >= 1 && row <= static_cast<int>(rows()) && col > inner_length(row) && col <= row_length(row);
}

int ContreTableau::value(int row, int col) const {
    if (!is_skew_cell(row, col))
        throw Error(ErrorCode::InvalidShape, "no skew cell at " + to_string(Cell{row, col}));
    return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - inner_length(row) - 1)];
}

bool is_ct(const ContreTableau& t, std::optional<int> n) {
    const int rows = static_cast<int>(t.rows());
    for (int r = 1; r <= rows; ++r) {
        for (int c = t.inner_length(r) + 1; c <= t.row_length(r); ++c) {
            const int v = t.value(r, c);
            if (n && v > *n) return false;
            if (t.is_skew_cell(r, c + 1) && t.value(r, c + 1) > v) return false;
            if (t.is_skew_cell(r + 1, c) && t.value(r + 1, c) >= v) return false;
        }
    }
    return true;
}

ContreTableau super_ct(const Partition& lambda) {
    std::vector<std::vector<int>> rows;
    const int l = static_cast<int>(lambda.length());
    for (int r = 1; r <= l; ++r) rows.emplace_back(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r - 1)]), l - r + 1);
    return ContreTableau(lambda, std::move(rows));
}

Word row_word(const ContreTableau& t) {
    Word w;
    for (int r = static_cast<int>(t.rows()); r >= 1; --r)
        for (int c = t.inner_length(r) + 1; c <= t.row_length(r); ++c) w.push_back(t.value(r, c));
    return w;
}

Word col_word(const ContreTableau& t) {
    Word w;
    const int columns = t.rows() ? t.row_length(1) : 0;
    for (int c = columns; c >= 1; --c)
        for (int r = 1; r <= static_cast<int>(t.rows()); ++r)
            if (t.is_skew_cell(r, c)) w.push_back(t.value(r, c));
    return w;
}

WeakComposition content(const ContreTableau& t) { return content(col_word(t)); }

ContreTableau rho(const Filling& f) {
    if (f.shape().inner().sum() != 0 || !f.basement().strictly_increasing())
        throw Error(ErrorCode::NotSSK, "rho needs a straight filling on an increasing basement");
    if (!is_ssk(f)) throw Error(ErrorCode::NotSSK, "rho input is not semistandard");
    const ColumnSets cols = column_sets(f);
    for (std::size_t k = 1; k < cols.size(); ++k)
        if (cols[k].size() > cols[k - 1].size()) throw Error(ErrorCode::NotSSK, "column lengths increase");
    std::vector<int> shape;
    for (std::size_t r = 0; !cols.empty() && r < cols[0].size(); ++r) {
        int len = 0;
        while (static_cast<std::size_t>(len) < cols.size() && cols[static_cast<std::size_t>(len)].size() > r) ++len;
        shape.push_back(len);
    }
    std::vector<std::vector<int>> rows(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) rows[r].push_back(cols[static_cast<std::size_t>(c)][r]);
    return ContreTableau(Partition(std::move(shape)), std::move(rows));
}

Filling rho_inv(const ContreTableau& t, int n) {
    if (t.inner().sum() != 0 || !is_ct(t, n))
        throw Error(ErrorCode::InvalidEntry, "rho_inv needs a straight contretableau with entries in [1," +
                                                 std::to_string(n) + "]");
    const auto rows = static_cast<std::size_t>(n);
    std::vector<std::vector<int>> built(rows);
    const int columns = t.rows() ? t.row_length(1) : 0;
    for (int c = 1; c <= columns; ++c) {
        for (int r = 1; r <= static_cast<int>(t.rows()) && t.row_length(r) >= c; ++r) {
            const int e = t.value(r, c);
            bool placed = false;
            for (std::size_t i = 0; i < rows && !placed; ++i) {
                if (built[i].size() != static_cast<std::size_t>(c - 1)) continue;
                const int last = built[i].empty() ? static_cast<int>(i) + 1 : built[i].back();
                if (last >= e) {
                    built[i].push_back(e);
                    placed = true;
                }
            }
            if (!placed)
                throw Error(ErrorCode::NoValidRow, "no row accepts " + std::to_string(e) + " in column " + std::to_string(c));
        }
    }
    std::vector<int> shape(rows);
    for (std::size_t i = 0; i < rows; ++i) shape[i] = static_cast<int>(built[i].size());
    return Filling(SkewShape(WeakComposition(std::move(shape))), Basement::of(BasementKind::Ident, rows), n, built);
}

bool is_lr_skew_ct(const ContreTableau& t) {
    const Word w = row_word(t);
    return is_regular_contre_lattice(reverse(w));
}

}  // namespace skylr
