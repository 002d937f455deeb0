#include "skylr/skyline.hpp"

#include <algorithm>
#include <map>

#include "skylr/error.hpp"

namespace skylr {

std::string_view to_string(BasementKind kind) {
    switch (kind) {
        case BasementKind::Ident: return "ident";
        case BasementKind::Reversed: return "reversed";
        case BasementKind::Shifted: return "shifted";
        case BasementKind::Large: return "large";
        case BasementKind::Custom: return "custom";
    }
    return "custom";
}

BasementKind basement_kind_from_string(std::string_view name) {
    for (auto k : {BasementKind::Ident, BasementKind::Reversed, BasementKind::Shifted, BasementKind::Large,
                   BasementKind::Custom})
        if (to_string(k) == name) return k;
    throw Error(ErrorCode::Parse, "unknown basement kind '" + std::string(name) + "'");
}

std::vector<int> basement_values(BasementKind kind, int n) {
    if (n < 0) throw Error(ErrorCode::InvalidShape, "negative basement size");
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        switch (kind) {
            case BasementKind::Ident: b[k - 1] = k; break;
            case BasementKind::Reversed: b[k - 1] = n - k + 1; break;
            case BasementKind::Shifted: b[k - 1] = n + k; break;
            case BasementKind::Large: b[k - 1] = 2 * n - k + 1; break;
            case BasementKind::Custom: throw Error(ErrorCode::InvalidShape, "custom basement has no value rule");
        }
    }
    return b;
}

Basement Basement::of(BasementKind kind, std::size_t rows) {
    return Basement(kind, basement_values(kind, static_cast<int>(rows)));
}

Basement Basement::custom(std::vector<int> values) {
    for (int v : values)
        if (v < 1) throw Error(ErrorCode::InvalidEntry, "basement values must be positive");
    return Basement(BasementKind::Custom, std::move(values));
}

bool Basement::strictly_decreasing() const {
    return std::adjacent_find(values_.begin(), values_.end(), std::less_equal<>()) == values_.end();
}

bool Basement::strictly_increasing() const {
    return std::adjacent_find(values_.begin(), values_.end(), std::greater_equal<>()) == values_.end();
}

SkewShape::SkewShape(WeakComposition outer)
    : outer_(std::move(outer)), inner_(std::vector<int>(outer_.length(), 0)) {}

SkewShape::SkewShape(WeakComposition outer, WeakComposition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (outer_.length() != inner_.length())
        throw Error(ErrorCode::ShapeMismatch, "skew shape " + to_string(outer_) + "/" + to_string(inner_) +
                                                  " has rows of different lengths");
    if (!contains(outer_, inner_))
        throw Error(ErrorCode::ShapeMismatch, to_string(inner_) + " is not contained in " + to_string(outer_));
}

int SkewShape::columns() const {
    int c = 0;
    for (int p : outer_) c = std::max(c, p);
    return c;
}

Filling::Filling(Unchecked, SkewShape shape, Basement basement, int n)
    : shape_(std::move(shape)), basement_(std::move(basement)), n_(n) {
    grid_.resize(shape_.rows());
    for (std::size_t i = 0; i < grid_.size(); ++i)
        grid_[i].assign(static_cast<std::size_t>(shape_.outer()[i]) + 1, basement_.values()[i]);
}

Filling::Filling(SkewShape shape, Basement basement, int n, const std::vector<std::vector<int>>& data)
    : Filling(Unchecked{}, std::move(shape), std::move(basement), n) {
    if (basement_.rows() != shape_.rows())
        throw Error(ErrorCode::ShapeMismatch, "basement has " + std::to_string(basement_.rows()) + " rows, shape has " +
                                                  std::to_string(shape_.rows()));
    if (basement_.kind() != BasementKind::Custom && static_cast<std::size_t>(n_) != shape_.rows())
        throw Error(ErrorCode::ShapeMismatch, "standard basements need n equal to the number of rows");
    if (n_ < 0) throw Error(ErrorCode::InvalidEntry, "negative n");
    if (data.size() != shape_.rows())
        throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(shape_.rows()) + " data rows");
    for (std::size_t i = 0; i < data.size(); ++i) {
        const int from = shape_.inner()[i] + 1;
        const int to = shape_.outer()[i];
        if (static_cast<int>(data[i].size()) != to - from + 1)
            throw Error(ErrorCode::ShapeMismatch,
                        "row " + std::to_string(i + 1) + " needs " + std::to_string(to - from + 1) + " entries");
        for (int k = from; k <= to; ++k) {
            const int v = data[i][static_cast<std::size_t>(k - from)];
            if (v < 1 || v > n_)
                throw Error(ErrorCode::InvalidEntry,
                            "entry " + std::to_string(v) + " at row " + std::to_string(i + 1) + " outside [1," +
                                std::to_string(n_) + "]");
            grid_[i][static_cast<std::size_t>(k)] = v;
        }
    }
}

bool Filling::has_cell(int row, int col) const {
    return row >= 1 && static_cast<std::size_t>(row) <= rows() && col >= 0 && col <= row_length(row);
}

bool Filling::is_data(int row, int col) const { return has_cell(row, col) && col > inner_length(row); }

std::vector<std::vector<int>> Filling::data_rows() const {
    std::vector<std::vector<int>> out(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
        const auto first = grid_[i].begin() + shape_.inner()[i] + 1;
        out[i].assign(first, grid_[i].end());
    }
    return out;
}

std::vector<Triple> enumerate_triples(const SkewShape& shape) {
    const auto& d = shape.outer();
    const int n = static_cast<int>(shape.rows());
    std::vector<Triple> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int di = d[static_cast<std::size_t>(i - 1)];
            const int dj = d[static_cast<std::size_t>(j - 1)];
            if (di >= dj) {
                for (int k = 1; k <= dj; ++k) out.push_back({TripleKind::A, {i, k}, {j, k}, {i, k - 1}});
            } else {
                for (int k = 0; k <= di; ++k) out.push_back({TripleKind::B, {j, k + 1}, {i, k}, {j, k}});
            }
        }
    }
    return out;
}

TripleClass classify_triple(int a, int b, int c) {
    if ((b < a && a <= c) || (a <= c && c < b)) return TripleClass::Inversion;
    if (a <= b && b <= c) return TripleClass::Coinversion;
    throw Error(ErrorCode::UnorderedTriple, "values (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                std::to_string(c) + ") fit no triple pattern");
}

ValidationReport is_ssk(const Filling& f) {
    ValidationReport report;
    for (int i = 1; i <= static_cast<int>(f.rows()); ++i) {
        for (int k = 1; k <= f.row_length(i); ++k) {
            if (f.value(i, k) > f.value(i, k - 1)) {
                report.ok = false;
                report.bad_row = i;
                report.message = "row " + std::to_string(i) + " increases at column " + std::to_string(k);
                return report;
            }
        }
    }
    for (const Triple& t : enumerate_triples(f.shape())) {
        if (classify_triple(f.value(t.a), f.value(t.b), f.value(t.c)) == TripleClass::Coinversion) {
            report.ok = false;
            report.bad_triple = t;
            report.message = "coinversion triple " + to_string(t);
            return report;
        }
    }
    return report;
}

bool is_nonattacking(const Filling& f) {
    const int rows = static_cast<int>(f.rows());
    for (int i = 1; i <= rows; ++i) {
        for (int k = 1; k <= f.row_length(i); ++k) {
            const int v = f.value(i, k);
            for (int j = 1; j <= rows; ++j) {
                if (j != i && f.has_cell(j, k) && f.value(j, k) == v) return false;
                if (j > i && f.has_cell(j, k + 1) && f.value(j, k + 1) == v) return false;
            }
        }
    }
    return true;
}

std::vector<int> weight_monomial(const Filling& f) {
    std::vector<int> e(static_cast<std::size_t>(f.n()), 0);
    for (int i = 1; i <= static_cast<int>(f.rows()); ++i)
        for (int k = f.inner_length(i) + 1; k <= f.row_length(i); ++k) ++e[static_cast<std::size_t>(f.value(i, k) - 1)];
    return e;
}

std::string to_string(const Cell& c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

std::string to_string(const Triple& t) {
    return std::string(t.kind == TripleKind::A ? "A" : "B") + "[" + to_string(t.a) + "," + to_string(t.b) + "," +
           to_string(t.c) + "]";
}

}  // namespace skylr
