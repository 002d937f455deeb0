#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skylr/shapes.hpp"

namespace skylr {

/// Basement value rules for a diagram with n rows (k = 1..n):
/// Ident b_k = k, Reversed b_k = n-k+1, Shifted b_k = n+k, Large b_k = 2n-k+1.
/// Custom carries explicit values.
enum class BasementKind { Ident, Reversed, Shifted, Large, Custom };

std::string_view to_string(BasementKind kind);
BasementKind basement_kind_from_string(std::string_view name);

/// (b_1, ..., b_n) for one of the four standard kinds.
std::vector<int> basement_values(BasementKind kind, int n);

class Basement {
public:
    Basement() = default;
    static Basement of(BasementKind kind, std::size_t rows);
    static Basement custom(std::vector<int> values);

    BasementKind kind() const noexcept { return kind_; }
    const std::vector<int>& values() const noexcept { return values_; }
    std::size_t rows() const noexcept { return values_.size(); }
    /// Basement value of the 1-based row.
    int operator()(int row) const { return values_.at(static_cast<std::size_t>(row - 1)); }

    bool strictly_decreasing() const;
    bool strictly_increasing() const;

    friend bool operator==(const Basement&, const Basement&) = default;

private:
    Basement(BasementKind kind, std::vector<int> values) : kind_(kind), values_(std::move(values)) {}

    BasementKind kind_ = BasementKind::Ident;
    std::vector<int> values_;
};

/// delta/gamma with gamma contained in delta, both of the same length.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(WeakComposition outer);
    SkewShape(WeakComposition outer, WeakComposition inner);

    const WeakComposition& outer() const noexcept { return outer_; }
    const WeakComposition& inner() const noexcept { return inner_; }
    std::size_t rows() const noexcept { return outer_.length(); }
    /// Number of non-basement cells |delta| - |gamma|.
    int cells() const noexcept { return outer_.sum() - inner_.sum(); }
    int columns() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    WeakComposition outer_;
    WeakComposition inner_;
};

/// Row 1..n from the top; column 0 is the basement.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class SskSearch;

/// A skew skyline diagram with one entry in [n] per cell of delta/gamma.
/// Cells of gamma carry the basement value of their row.
class Filling {
public:
    /// `data` holds, for each row, the entries of columns gamma_i+1 .. delta_i.
    /// For the four standard basement kinds the diagram must have exactly n rows.
    Filling(SkewShape shape, Basement basement, int n, const std::vector<std::vector<int>>& data);

    const SkewShape& shape() const noexcept { return shape_; }
    const Basement& basement() const noexcept { return basement_; }
    int n() const noexcept { return n_; }
    std::size_t rows() const noexcept { return grid_.size(); }
    int row_length(int row) const { return shape_.outer()[static_cast<std::size_t>(row - 1)]; }
    int inner_length(int row) const { return shape_.inner()[static_cast<std::size_t>(row - 1)]; }

    /// Value at (row, col) for 0 <= col <= delta_row, basement and inner cells included.
    int value(int row, int col) const { return grid_.at(static_cast<std::size_t>(row - 1)).at(static_cast<std::size_t>(col)); }
    int value(Cell c) const { return value(c.row, c.col); }
    bool has_cell(int row, int col) const;
    /// A cell of delta/gamma (neither basement nor inner).
    bool is_data(int row, int col) const;

    std::vector<std::vector<int>> data_rows() const;

    friend bool operator==(const Filling& a, const Filling& b) {
        return a.shape_ == b.shape_ && a.basement_ == b.basement_ && a.n_ == b.n_ && a.grid_ == b.grid_;
    }

private:
    friend class SskSearch;
    struct Unchecked {};
    Filling(Unchecked, SkewShape shape, Basement basement, int n);

    SkewShape shape_;
    Basement basement_;
    int n_ = 0;
    std::vector<std::vector<int>> grid_;
};

enum class TripleKind { A, B };

/// Three cells (a, b, c) between rows i < j.
/// Type A (delta_i >= delta_j): a=(i,k), b=(j,k), c=(i,k-1), k >= 1.
/// Type B (delta_i <  delta_j): a=(j,k+1), b=(i,k), c=(j,k), k >= 0.
struct Triple {
    TripleKind kind = TripleKind::A;
    Cell a, b, c;
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Every triple of the diagram, basement cells included.
std::vector<Triple> enumerate_triples(const SkewShape& shape);

enum class TripleClass { Inversion, Coinversion };

/// Inversion iff b < a <= c or a <= c < b; coinversion iff a <= b <= c.
/// Throws UnorderedTriple otherwise (only possible when c < a).
TripleClass classify_triple(int a, int b, int c);

struct ValidationReport {
    bool ok = true;
    std::optional<int> bad_row;
    std::optional<Triple> bad_triple;
    std::string message;

    explicit operator bool() const noexcept { return ok; }
};

/// Rows weakly decreasing (basement included) and every triple an inversion.
ValidationReport is_ssk(const Filling& f);

/// Distinct values in each column (columns >= 1), and equal values at
/// (i,k), (j,k+1) only when i >= j.
bool is_nonattacking(const Filling& f);

/// Exponent vector of length n: e_v = number of cells of delta/gamma holding v.
std::vector<int> weight_monomial(const Filling& f);

std::string to_string(const Cell& c);
std::string to_string(const Triple& t);

}  // namespace skylr
