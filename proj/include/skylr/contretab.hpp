#pragma once

#include <optional>
#include <vector>

#include "skylr/shapes.hpp"
#include "skylr/skyline.hpp"
#include "skylr/words.hpp"

namespace skylr {

/// A filling of a (possibly skew) Ferrers shape. Structure only; the
/// contretableau conditions are checked by is_ct.
class ContreTableau {
public:
    ContreTableau() = default;
    ContreTableau(Partition shape, std::vector<std::vector<int>> rows);
    /// `rows[r]` holds the entries of row r+1 right of the inner shape.
    ContreTableau(Partition shape, Partition inner, std::vector<std::vector<int>> rows);

    const Partition& shape() const noexcept { return shape_; }
    const Partition& inner() const noexcept { return inner_; }
    std::size_t rows() const noexcept { return shape_.length(); }
    int row_length(int row) const { return shape_[static_cast<std::size_t>(row - 1)]; }
    int inner_length(int row) const;
    bool is_skew_cell(int row, int col) const;
    /// Entry at a skew cell, 1-based row and column.
    int value(int row, int col) const;
    const std::vector<std::vector<int>>& data_rows() const noexcept { return rows_; }
    int cells() const noexcept { return shape_.sum() - inner_.sum(); }

    friend bool operator==(const ContreTableau&, const ContreTableau&) = default;

private:
    Partition shape_;
    Partition inner_;
    std::vector<std::vector<int>> rows_;
};

/// Rows weakly decreasing, columns strictly decreasing on the skew cells;
/// entries bounded by n when given.
bool is_ct(const ContreTableau& t, std::optional<int> n = std::nullopt);

/// U_lambda: row r holds l(lambda) - r + 1.
ContreTableau super_ct(const Partition& lambda);

Word row_word(const ContreTableau& t);
Word col_word(const ContreTableau& t);
/// Content of the column word.
WeakComposition content(const ContreTableau& t);

/// Column sets of an SSK on a strictly increasing straight basement, each
/// sorted decreasingly and stacked top-justified. Throws NotSSK.
ContreTableau rho(const Filling& f);

/// Inverse of rho onto the SSK with basement b_k = k and n rows: each column,
/// largest entry first, goes to the highest row ending in the previous column
/// whose last entry is weakly greater.
Filling rho_inv(const ContreTableau& t, int n);

/// reverse(row_word(t)) is regular contre-lattice.
bool is_lr_skew_ct(const ContreTableau& t);

}  // namespace skylr
