#include "skylr/poly.hpp"

#include <boost/container_hash/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <deque>
#include <functional>
#include <tuple>
#include <memory>
#include <mutex>
#include <optional>

#include "skylr/contretab.hpp"
#include "skylr/enumgen.hpp"
#include "skylr/error.hpp"

namespace skylr {

using Rational = boost::multiprecision::cpp_rational;

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept { return boost::hash_range(e.begin(), e.end()); }

Polynomial Polynomial::constant(std::size_t n, const Coeff& c) {
    Polynomial p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
}

Polynomial Polynomial::monomial(Exponent e, const Coeff& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) throw Error(ErrorCode::VariableCountMismatch, "x" + std::to_string(i) + " outside x1..x" + std::to_string(n));
    Exponent e(n, 0);
    e[i - 1] = 1;
    return monomial(std::move(e));
}

Coeff Polynomial::coeff(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Coeff& c) {
    if (e.size() != n_)
        throw Error(ErrorCode::VariableCountMismatch,
                    "exponent of length " + std::to_string(e.size()) + " in a polynomial in " + std::to_string(n_) + " variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<std::pair<Exponent, Coeff>> Polynomial::sorted_terms(bool descending) const {
    std::vector<std::pair<Exponent, Coeff>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [descending](const auto& a, const auto& b) {
        return descending ? a.first > b.first : a.first < b.first;
    });
    return out;
}

std::map<int, Polynomial> Polynomial::homogeneous_components() const {
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) d += x;
        auto [it, inserted] = out.try_emplace(d, n_);
        it->second.add_term(e, c);
    }
    return out;
}

bool Polynomial::is_homogeneous() const { return homogeneous_components().size() <= 1; }

void Polynomial::check_same_n(const Polynomial& q) const {
    if (n_ != q.n_)
        throw Error(ErrorCode::VariableCountMismatch,
                    "polynomials in " + std::to_string(n_) + " and " + std::to_string(q.n_) + " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    check_same_n(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    check_same_n(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_same_n(q);
    Polynomial r(p.n_);
    Exponent e(p.n_);
    for (const auto& [e1, c1] : p.terms_)
        for (const auto& [e2, c2] : q.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial operator*(Polynomial p, const Coeff& c) {
    if (c == 0) return Polynomial(p.n_);
    for (auto& [e, x] : p.terms_) x *= c;
    return p;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
    p.check_same_n(q);
    return p.terms_ == q.terms_;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial sub(const Polynomial& p, const Polynomial& q) { return p - q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
bool equals(const Polynomial& p, const Polynomial& q) { return p == q; }

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.sorted_terms(true)) {
        const bool negative = c < 0;
        const Coeff magnitude = negative ? Coeff(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += magnitude.str();
        else if (magnitude == 1)
            out += mono;
        else
            out += magnitude.str() + "*" + mono;
    }
    return out;
}

namespace {

/// Collects monomials with machine counters before converting once.
class Tally {
public:
    explicit Tally(std::size_t n) : n_(n) {}
    void add(const Exponent& e) { ++counts_[e]; }
    Polynomial finish() const {
        Polynomial p(n_);
        for (const auto& [e, c] : counts_) p.add_term(e, Coeff(c));
        return p;
    }

private:
    std::size_t n_;
    std::unordered_map<Exponent, std::uint64_t, ExponentHash> counts_;
};

Polynomial fillings_poly(const EnumQuery& q, std::size_t n) {
    Tally t(n);
    for_each_ssk(q, [&](const Filling& f) { t.add(weight_monomial(f)); });
    return t.finish();
}

}  // namespace

Polynomial schur_poly(const Partition& lam, std::size_t n) {
    if (lam.length() > n)
        throw Error(ErrorCode::TooManyRows, to_string(lam) + " has more than " + std::to_string(n) + " rows");
    Tally t(n);
    Exponent e(n);
    for_each_ct(lam, Partition{}, static_cast<int>(n), std::nullopt, [&](const ContreTableau& ct) {
        std::fill(e.begin(), e.end(), 0);
        for (const auto& row : ct.data_rows())
            for (int v : row) ++e[n - static_cast<std::size_t>(v)];
        t.add(e);
    });
    return t.finish();
}

Polynomial atom_poly(const WeakComposition& g, std::size_t n) {
    if (g.length() != n)
        throw Error(ErrorCode::LengthMismatch, to_string(g) + " does not have " + std::to_string(n) + " parts");
    return fillings_poly(EnumQuery::of(SkewShape(g), BasementKind::Ident), n);
}

Polynomial char_poly(const WeakComposition& g, std::size_t n) {
    if (g.length() != n)
        throw Error(ErrorCode::LengthMismatch, to_string(g) + " does not have " + std::to_string(n) + " parts");
    return fillings_poly(EnumQuery::of(SkewShape(reverse(g)), BasementKind::Reversed), n);
}

Polynomial qs_poly(const Composition& a, std::size_t n) {
    if (a.length() > n) throw Error(ErrorCode::TooManyParts, to_string(a) + " has more than " + std::to_string(n) + " parts");
    Polynomial p(n);
    for (const WeakComposition& g : zero_paddings(a, n)) p += cached(GenKind::Atom, g.vec(), n);
    return p;
}

Polynomial qs_poly_ssc(const Composition& a, std::size_t n) {
    if (a.length() > n) throw Error(ErrorCode::TooManyParts, to_string(a) + " has more than " + std::to_string(n) + " parts");
    const std::size_t l = a.length();
    std::vector<int> rest(l);
    for (std::size_t r = 0; r < l; ++r) rest[r] = a[r] - 1;
    Tally t(n);
    // Every choice of first column c_1 < ... < c_l inside [n].
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(l), 1);
    do {
        std::vector<int> c;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) c.push_back(static_cast<int>(i) + 1);
        EnumQuery q;
        q.shape = SkewShape(WeakComposition(rest));
        q.basement = Basement::custom(c);
        q.n = static_cast<int>(n);
        for_each_ssk(q, [&](const Filling& f) {
            Exponent e = weight_monomial(f);
            for (int v : c) ++e[static_cast<std::size_t>(v - 1)];
            t.add(e);
        });
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return t.finish();
}

std::vector<Coeff> solve_in_basis(const Polynomial& p, const std::vector<const Polynomial*>& basis) {
    const std::size_t k = basis.size();
    std::unordered_map<Exponent, std::size_t, ExponentHash> row_of;
    auto row = [&](const Exponent& e) { return row_of.try_emplace(e, row_of.size()).first->second; };

    std::vector<std::vector<std::pair<std::size_t, Coeff>>> cols(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (basis[j]->n() != p.n()) throw Error(ErrorCode::VariableCountMismatch, "basis element in the wrong ring");
        for (const auto& [e, c] : basis[j]->terms()) cols[j].emplace_back(row(e), c);
    }
    for (const auto& [e, c] : p.terms()) row(e);
    const std::size_t rows = row_of.size();
    std::vector<Rational> rhs(rows);
    for (const auto& [e, c] : p.terms()) rhs[row_of.at(e)] = Rational(c);

    std::vector<std::vector<std::pair<std::size_t, Coeff>>> row_entries(rows);
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& [r, c] : cols[j]) row_entries[r].emplace_back(j, c);
    std::vector<std::size_t> active(rows);
    std::deque<std::size_t> ready;
    for (std::size_t r = 0; r < rows; ++r) {
        active[r] = row_entries[r].size();
        if (active[r] == 1) ready.push_back(r);
    }

    std::vector<std::optional<Rational>> x(k);
    auto settle = [&](std::size_t j, const Rational& value) {
        x[j] = value;
        for (const auto& [r, c] : cols[j]) {
            rhs[r] -= Rational(c) * value;
            if (--active[r] == 1) ready.push_back(r);
        }
    };
    while (!ready.empty()) {
        const std::size_t r = ready.front();
        ready.pop_front();
        if (active[r] != 1) continue;
        for (const auto& [j, c] : row_entries[r])
            if (!x[j]) {
                settle(j, rhs[r] / Rational(c));
                break;
            }
    }

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < k; ++j)
        if (!x[j]) free_cols.push_back(j);
    std::vector<std::size_t> dense_rows;
    for (std::size_t r = 0; r < rows; ++r) {
        if (active[r] > 0)
            dense_rows.push_back(r);
        else if (rhs[r] != 0)
            throw Error(ErrorCode::NotInSpan, "polynomial is not in the span of the basis");
    }

    if (!free_cols.empty()) {
        std::unordered_map<std::size_t, std::size_t> col_index;
        for (std::size_t i = 0; i < free_cols.size(); ++i) col_index[free_cols[i]] = i;
        const std::size_t m = free_cols.size();
        std::vector<std::vector<Rational>> a;
        a.reserve(dense_rows.size());
        for (std::size_t r : dense_rows) {
            std::vector<Rational> line(m + 1);
            for (const auto& [j, c] : row_entries[r])
                if (!x[j]) line[col_index.at(j)] = Rational(c);
            line[m] = rhs[r];
            a.push_back(std::move(line));
        }
        std::vector<std::size_t> pivot_col;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < m && rank < a.size(); ++c) {
            std::size_t piv = rank;
            while (piv < a.size() && a[piv][c] == 0) ++piv;
            if (piv == a.size()) continue;
            std::swap(a[piv], a[rank]);
            const Rational inv = 1 / a[rank][c];
            for (std::size_t cc = c; cc <= m; ++cc) a[rank][cc] *= inv;
            for (std::size_t r = 0; r < a.size(); ++r) {
                if (r == rank || a[r][c] == 0) continue;
                const Rational f = a[r][c];
                for (std::size_t cc = c; cc <= m; ++cc) a[r][cc] -= f * a[rank][cc];
            }
            pivot_col.push_back(c);
            ++rank;
        }
        for (std::size_t r = rank; r < a.size(); ++r)
            if (a[r][m] != 0) throw Error(ErrorCode::NotInSpan, "polynomial is not in the span of the basis");
        for (std::size_t j : free_cols) x[j] = Rational(0);
        for (std::size_t r = 0; r < rank; ++r) x[free_cols[pivot_col[r]]] = a[r][m];
    }

    std::vector<Coeff> out(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (boost::multiprecision::denominator(*x[j]) != 1)
            throw Error(ErrorCode::NonIntegralCoefficient, "coefficient " + x[j]->str() + " is not an integer");
        out[j] = boost::multiprecision::numerator(*x[j]);
    }
    return out;
}

namespace {

template <class Key>
std::map<Key, Coeff> expand(const Polynomial& p, GenKind kind,
                            const std::function<std::vector<Key>(int degree)>& shapes) {
    std::map<Key, Coeff> out;
    for (const auto& [degree, part] : p.homogeneous_components()) {
        const std::vector<Key> keys = shapes(degree);
        std::vector<const Polynomial*> basis;
        basis.reserve(keys.size());
        for (const Key& key : keys) basis.push_back(&cached(kind, key.vec(), p.n()));
        const std::vector<Coeff> c = solve_in_basis(part, basis);
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (c[i] != 0) out.emplace(keys[i], c[i]);
    }
    return out;
}

}  // namespace

std::map<WeakComposition, Coeff> expand_in_atoms(const Polynomial& p) {
    return expand<WeakComposition>(p, GenKind::Atom, [&](int d) { return weak_compositions(p.n(), d); });
}

std::map<WeakComposition, Coeff> expand_in_chars(const Polynomial& p) {
    return expand<WeakComposition>(p, GenKind::Character, [&](int d) { return weak_compositions(p.n(), d); });
}

std::map<Composition, Coeff> expand_in_qs(const Polynomial& p) {
    return expand<Composition>(p, GenKind::QuasiSchur, [&](int d) { return compositions(d, p.n()); });
}

const Polynomial& cached(GenKind kind, const std::vector<int>& shape, std::size_t n) {
    using Key = std::tuple<GenKind, std::vector<int>, std::size_t>;
    static std::mutex mutex;
    static std::map<Key, std::unique_ptr<const Polynomial>> table;
    Key key{kind, shape, n};
    {
        std::lock_guard lock(mutex);
        if (auto it = table.find(key); it != table.end()) return *it->second;
    }
    Polynomial value;
    switch (kind) {
        case GenKind::Schur: value = schur_poly(Partition(shape), n); break;
        case GenKind::Atom: value = atom_poly(WeakComposition(shape), n); break;
        case GenKind::Character: value = char_poly(WeakComposition(shape), n); break;
        case GenKind::QuasiSchur: value = qs_poly(Composition(shape), n); break;
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = table.try_emplace(std::move(key), std::make_unique<const Polynomial>(std::move(value)));
    return *it->second;
}

}  // namespace skylr
