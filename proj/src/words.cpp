#include "skylr/words.hpp"

#include <algorithm>

#include "skylr/error.hpp"

namespace skylr {

Word row_word(const Filling& f) {
    Word w;
    for (int i = static_cast<int>(f.rows()); i >= 1; --i)
        for (int k = f.inner_length(i) + 1; k <= f.row_length(i); ++k) w.push_back(f.value(i, k));
    return w;
}

Word col_word(const Filling& f) {
    Word w;
    for (int k = f.shape().columns(); k >= 1; --k)
        for (int i = 1; i <= static_cast<int>(f.rows()); ++i)
            if (f.is_data(i, k)) w.push_back(f.value(i, k));
    return w;
}

WeakComposition content(std::span<const int> w) {
    int r = 0;
    for (int x : w) {
        if (x < 1) throw Error(ErrorCode::InvalidEntry, "word entries must be positive");
        r = std::max(r, x);
    }
    std::vector<int> c(static_cast<std::size_t>(r), 0);
    for (int x : w) ++c[static_cast<std::size_t>(x - 1)];
    return WeakComposition(std::move(c));
}

bool is_contre_lattice(std::span<const int> w) {
    int r = 0;
    for (int x : w) r = std::max(r, x);
    std::vector<int> count(static_cast<std::size_t>(r) + 2, 0);
    for (int x : w) {
        // Only #x grew, so only the pair (x, x+1) can break.
        ++count[static_cast<std::size_t>(x)];
        if (x < r && count[static_cast<std::size_t>(x) + 1] < count[static_cast<std::size_t>(x)]) return false;
    }
    return true;
}

bool is_regular_contre_lattice(std::span<const int> w) {
    if (w.empty()) return false;
    return *std::min_element(w.begin(), w.end()) == 1 && is_contre_lattice(w);
}

ColumnSets column_sets(const Filling& f) {
    ColumnSets sets(static_cast<std::size_t>(f.shape().columns()));
    for (int k = 1; k <= f.shape().columns(); ++k) {
        auto& set = sets[static_cast<std::size_t>(k - 1)];
        for (int i = 1; i <= static_cast<int>(f.rows()); ++i)
            if (f.is_data(i, k)) set.push_back(f.value(i, k));
        std::sort(set.begin(), set.end(), std::greater<>());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            throw Error(ErrorCode::DuplicateInColumn, "column " + std::to_string(k) + " repeats an entry");
    }
    return sets;
}

bool is_loosely_contre_lattice(const Filling& f) {
    const ColumnSets sets = column_sets(f);
    Word w;
    for (auto it = sets.rbegin(); it != sets.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return is_contre_lattice(w);
}

std::string render_word(std::span<const int> w) {
    const bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

}  // namespace skylr
