#include "skylr/enumgen.hpp"

#include <algorithm>

#include "skylr/error.hpp"
#include "skylr/words.hpp"

namespace skylr {

EnumQuery EnumQuery::of(SkewShape shape, BasementKind kind) {
    EnumQuery q;
    const std::size_t rows = shape.rows();
    q.basement = Basement::of(kind, rows);
    q.n = static_cast<int>(rows);
    q.shape = std::move(shape);
    return q;
}

namespace {

std::vector<int> target_counts(const std::optional<WeakComposition>& content, int n) {
    if (!content) return {};
    if (content->length() > static_cast<std::size_t>(n))
        throw Error(ErrorCode::TooManyParts, "content " + to_string(*content) + " longer than n=" + std::to_string(n));
    std::vector<int> t(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t v = 0; v < content->length(); ++v) t[v + 1] = (*content)[v];
    return t;
}

}  // namespace

/// Backtracking over the data cells of one query, mutating a single filling.
class SskSearch {
public:
    SskSearch(const EnumQuery& q, const FillingVisitor& visit)
        : q_(q), visit_(visit), f_(Filling::Unchecked{}, q.shape, q.basement, q.n) {
        if (q.basement.rows() != q.shape.rows())
            throw Error(ErrorCode::ShapeMismatch, "basement and shape disagree on the number of rows");
        target_ = target_counts(q.content, q.n);
        counts_.assign(static_cast<std::size_t>(q.n) + 1, 0);

        const int rows = static_cast<int>(q.shape.rows());
        std::vector<std::vector<int>> position(static_cast<std::size_t>(rows) + 1);
        for (int i = rows; i >= 1; --i) {
            position[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(f_.row_length(i)) + 1, -1);
            for (int k = f_.inner_length(i) + 1; k <= f_.row_length(i); ++k) {
                position[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = static_cast<int>(cells_.size());
                cells_.push_back({i, k});
            }
        }
        checks_.resize(cells_.size());
        for (const Triple& t : enumerate_triples(q.shape)) {
            int last = -1;
            for (Cell c : {t.a, t.b, t.c})
                last = std::max(last, position[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)]);
            if (last < 0) {
                if (coinversion(t)) dead_ = true;
            } else {
                checks_[static_cast<std::size_t>(last)].push_back(t);
            }
        }
        for (int i = 1; i <= rows; ++i)
            if (f_.inner_length(i) > 0 && f_.value(i, 1) > f_.value(i, 0)) dead_ = true;
        if (q.content && q.content->sum() != q.shape.cells()) dead_ = true;
    }

    void run() {
        if (!dead_) descend(0);
    }

private:
    bool coinversion(const Triple& t) const {
        const int a = f_.value(t.a), b = f_.value(t.b), c = f_.value(t.c);
        return a <= b && b <= c;
    }

    int& at(Cell c) { return f_.grid_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col)]; }

    void descend(std::size_t pos) {
        if (pos == cells_.size()) {
            emit();
            return;
        }
        const Cell cell = cells_[pos];
        const int left = f_.value(cell.row, cell.col - 1);
        const auto& checks = checks_[pos];
        for (int v = std::min(q_.n, left); v >= 1; --v) {
            if (!target_.empty() && counts_[static_cast<std::size_t>(v)] >= target_[static_cast<std::size_t>(v)]) continue;
            at(cell) = v;
            bool ok = true;
            for (const Triple& t : checks)
                if (coinversion(t)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            ++counts_[static_cast<std::size_t>(v)];
            descend(pos + 1);
            --counts_[static_cast<std::size_t>(v)];
        }
    }

    void emit() {
        if (q_.contre_lattice || q_.regular) {
            const Word w = col_word(f_);
            if (q_.regular ? !is_regular_contre_lattice(w) : !is_contre_lattice(w)) return;
        }
        visit_(f_);
    }

    const EnumQuery& q_;
    const FillingVisitor& visit_;
    Filling f_;
    std::vector<Cell> cells_;
    std::vector<std::vector<Triple>> checks_;
    std::vector<int> target_;
    std::vector<int> counts_;
    bool dead_ = false;
};

void for_each_ssk(const EnumQuery& q, const FillingVisitor& visit) { SskSearch(q, visit).run(); }

std::vector<Filling> enum_ssk(const EnumQuery& q) {
    std::vector<Filling> out;
    for_each_ssk(q, [&](const Filling& f) { out.push_back(f); });
    return out;
}

std::uint64_t count_ssk(const EnumQuery& q) {
    std::uint64_t c = 0;
    for_each_ssk(q, [&](const Filling&) { ++c; });
    return c;
}

namespace {

EnumQuery lr_query(const WeakComposition& delta, const WeakComposition& gamma, const WeakComposition& content,
                   BasementKind kind) {
    EnumQuery q = EnumQuery::of(SkewShape(delta, gamma), kind);
    q.content = content;
    q.regular = true;
    return q;
}

}  // namespace

std::vector<Filling> enum_lrs(const WeakComposition& delta, const WeakComposition& gamma, const WeakComposition& content) {
    return enum_ssk(lr_query(delta, gamma, content, BasementKind::Large));
}

std::uint64_t count_lrs(const WeakComposition& delta, const WeakComposition& gamma, const WeakComposition& content) {
    return count_ssk(lr_query(delta, gamma, content, BasementKind::Large));
}

std::vector<Filling> enum_lrk(const WeakComposition& delta, const WeakComposition& gamma, const WeakComposition& content) {
    return enum_ssk(lr_query(delta, gamma, content, BasementKind::Shifted));
}

std::uint64_t count_lrk(const WeakComposition& delta, const WeakComposition& gamma, const WeakComposition& content) {
    return count_ssk(lr_query(delta, gamma, content, BasementKind::Shifted));
}

std::size_t lrc_rows(const Composition& beta, const Composition& alpha, const WeakComposition& content) {
    return std::max(beta.length() + alpha.length(), content.length());
}

std::vector<Filling> lrc_representatives(const Composition& beta, const Composition& alpha,
                                         const WeakComposition& content, std::size_t rows) {
    if (beta.sum() != alpha.sum() + content.sum())
        throw Error(ErrorCode::SizeMismatch, "|" + to_string(beta) + "| != |" + to_string(alpha) + "| + |" +
                                                 to_string(content) + "|");
    const std::size_t minimum = lrc_rows(beta, alpha, content);
    if (rows == 0) rows = minimum;
    if (rows < minimum)
        throw Error(ErrorCode::TooManyParts, "class counts need at least " + std::to_string(minimum) + " rows");
    const WeakComposition delta = pad(beta, rows);
    std::vector<Filling> out;
    for (const WeakComposition& gamma : zero_paddings(alpha, rows)) {
        if (!contains(delta, gamma)) continue;
        for (Filling& f : enum_lrs(delta, gamma, content)) out.push_back(std::move(f));
    }
    return out;
}

std::uint64_t count_lrc(const Composition& beta, const Composition& alpha, const WeakComposition& content,
                        std::size_t rows) {
    if (beta.sum() != alpha.sum() + content.sum())
        throw Error(ErrorCode::SizeMismatch, "|" + to_string(beta) + "| != |" + to_string(alpha) + "| + |" +
                                                 to_string(content) + "|");
    const std::size_t minimum = lrc_rows(beta, alpha, content);
    if (rows == 0) rows = minimum;
    if (rows < minimum)
        throw Error(ErrorCode::TooManyParts, "class counts need at least " + std::to_string(minimum) + " rows");
    const WeakComposition delta = pad(beta, rows);
    std::uint64_t total = 0;
    for (const WeakComposition& gamma : zero_paddings(alpha, rows))
        if (contains(delta, gamma)) total += count_lrs(delta, gamma, content);
    return total;
}

Filling reshape(const Filling& y, const WeakComposition& sigma) {
    if (!is_ssk(y)) throw Error(ErrorCode::NotSSK, "reshape input is not semistandard");
    if (!is_contre_lattice(col_word(y))) throw Error(ErrorCode::NotContreLattice, "reshape input is not contre-lattice");
    const WeakComposition& delta = y.shape().outer();
    if (sigma.length() != delta.length() || partition_of(sigma) != partition_of(delta))
        throw Error(ErrorCode::NotRearrangement, to_string(sigma) + " does not rearrange " + to_string(delta));

    struct Entry {
        int value;
        int col;
    };
    std::vector<Entry> entries;
    for (int i = 1; i <= static_cast<int>(y.rows()); ++i)
        for (int k = y.inner_length(i) + 1; k <= y.row_length(i); ++k) entries.push_back({y.value(i, k), k});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.value != b.value ? a.value < b.value : a.col > b.col;
    });

    const std::size_t rows = sigma.length();
    std::vector<int> end(sigma.begin(), sigma.end());
    std::vector<std::vector<int>> grid(rows);
    for (std::size_t i = 0; i < rows; ++i) grid[i].assign(static_cast<std::size_t>(sigma[i]), 0);
    for (const Entry& e : entries) {
        std::size_t row = rows;
        for (std::size_t i = rows; i-- > 0;)
            if (end[i] == e.col) {
                row = i;
                break;
            }
        if (row == rows)
            throw Error(ErrorCode::NoValidRow, "no row of " + to_string(sigma) + " ends in column " + std::to_string(e.col));
        grid[row][static_cast<std::size_t>(e.col - 1)] = e.value;
        --end[row];
    }
    std::vector<std::vector<int>> data(rows);
    for (std::size_t i = 0; i < rows; ++i) data[i].assign(grid[i].begin() + end[i], grid[i].end());
    return Filling(SkewShape(sigma, WeakComposition(std::move(end))), Basement::of(BasementKind::Large, rows),
                   static_cast<int>(rows), data);
}

namespace {

class CtSearch {
public:
    CtSearch(const Partition& lambda, const Partition& mu, int n, const std::optional<WeakComposition>& content,
             const TableauVisitor& visit)
        : lambda_(lambda), mu_(mu), n_(n), visit_(visit) {
        if (mu.length() > lambda.length())
            throw Error(ErrorCode::ShapeMismatch, to_string(mu) + " not inside " + to_string(lambda));
        for (std::size_t r = 0; r < lambda.length(); ++r) {
            const int in = r < mu.length() ? mu[r] : 0;
            if (in > lambda[r]) throw Error(ErrorCode::ShapeMismatch, to_string(mu) + " not inside " + to_string(lambda));
            rows_.emplace_back(static_cast<std::size_t>(lambda[r] - in), 0);
            for (int c = in + 1; c <= lambda[r]; ++c) cells_.push_back({static_cast<int>(r) + 1, c});
        }
        target_ = target_counts(content, n);
        counts_.assign(static_cast<std::size_t>(n) + 1, 0);
        if (content && content->sum() != static_cast<int>(cells_.size())) dead_ = true;
    }

    void run() {
        if (!dead_) descend(0);
    }

private:
    int inner(int row) const { return static_cast<std::size_t>(row - 1) < mu_.length() ? mu_[static_cast<std::size_t>(row - 1)] : 0; }

    int& at(int row, int col) { return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - inner(row) - 1)]; }

    void descend(std::size_t pos) {
        if (pos == cells_.size()) {
            visit_(ContreTableau(lambda_, mu_, rows_));
            return;
        }
        const auto [r, c] = cells_[pos];
        int hi = n_;
        if (c > inner(r) + 1) hi = std::min(hi, at(r, c - 1));
        if (r > 1 && c > inner(r - 1)) hi = std::min(hi, at(r - 1, c) - 1);
        for (int v = hi; v >= 1; --v) {
            if (!target_.empty() && counts_[static_cast<std::size_t>(v)] >= target_[static_cast<std::size_t>(v)]) continue;
            at(r, c) = v;
            ++counts_[static_cast<std::size_t>(v)];
            descend(pos + 1);
            --counts_[static_cast<std::size_t>(v)];
        }
    }

    const Partition& lambda_;
    const Partition& mu_;
    int n_;
    const TableauVisitor& visit_;
    std::vector<std::vector<int>> rows_;
    std::vector<Cell> cells_;
    std::vector<int> target_;
    std::vector<int> counts_;
    bool dead_ = false;
};

}  // namespace

void for_each_ct(const Partition& lambda, const Partition& mu, int n, const std::optional<WeakComposition>& content,
                 const TableauVisitor& visit) {
    CtSearch(lambda, mu, n, content, visit).run();
}

std::vector<ContreTableau> enum_ct(const Partition& lambda, const Partition& mu, int n,
                                   const std::optional<WeakComposition>& content) {
    std::vector<ContreTableau> out;
    for_each_ct(lambda, mu, n, content, [&](const ContreTableau& t) { out.push_back(t); });
    return out;
}

}  // namespace skylr
