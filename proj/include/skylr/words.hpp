#pragma once

#include <span>
#include <string>
#include <vector>

#include "skylr/shapes.hpp"
#include "skylr/skyline.hpp"

namespace skylr {

using Word = std::vector<int>;

/// Rows left to right, bottom row first; basement and inner cells skipped.
Word row_word(const Filling& f);
/// Columns top to bottom, rightmost column first; basement and inner cells skipped.
Word col_word(const Filling& f);

/// (c_1, ..., c_r) with r the largest entry; empty word gives ().
WeakComposition content(std::span<const int> w);

/// Every prefix holds at least as many j's as (j-1)'s, for 1 < j <= max(w).
bool is_contre_lattice(std::span<const int> w);
/// Contre-lattice with minimum 1. The empty word is not regular.
bool is_regular_contre_lattice(std::span<const int> w);

/// C_1 .. C_t, each sorted decreasingly.
using ColumnSets = std::vector<std::vector<int>>;

/// Entries of delta/gamma per column. Throws DuplicateInColumn on an attack.
ColumnSets column_sets(const Filling& f);

/// Whether C_t C_{t-1} ... C_1 (each decreasing) is contre-lattice.
bool is_loosely_contre_lattice(const Filling& f);

/// Digit string when every entry is a single digit, comma-separated otherwise.
std::string render_word(std::span<const int> w);

}  // namespace skylr
