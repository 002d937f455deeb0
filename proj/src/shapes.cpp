#include "skylr/shapes.hpp"

#include <algorithm>
#include <numeric>

#include "skylr/error.hpp"

namespace skylr {

namespace detail {

void WeakPolicy::check(const std::vector<int>& parts) {
    for (int p : parts)
        if (p < 0) throw Error(ErrorCode::InvalidShape, "weak composition with negative part " + to_string(parts));
}

void CompositionPolicy::check(const std::vector<int>& parts) {
    for (int p : parts)
        if (p < 1) throw Error(ErrorCode::InvalidShape, "composition with nonpositive part " + to_string(parts));
}

void PartitionPolicy::check(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw Error(ErrorCode::InvalidShape, "partition with nonpositive part " + to_string(parts));
        if (i > 0 && parts[i] > parts[i - 1])
            throw Error(ErrorCode::InvalidShape, "partition not weakly decreasing " + to_string(parts));
    }
}

}  // namespace detail

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || static_cast<std::size_t>(x) > images_.size() || seen[x])
            throw Error(ErrorCode::InvalidShape, "not a permutation: " + to_string(images_));
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

WeakComposition as_weak(const Composition& c) { return WeakComposition(c.vec()); }
WeakComposition as_weak(const Partition& p) { return WeakComposition(p.vec()); }

WeakComposition pad(const Composition& c, std::size_t n) {
    if (c.length() > n) throw Error(ErrorCode::TooManyParts, to_string(c) + " has more than " + std::to_string(n) + " parts");
    std::vector<int> v = c.vec();
    v.resize(n, 0);
    return WeakComposition(std::move(v));
}

WeakComposition pad(const Partition& p, std::size_t n) {
    if (p.length() > n) throw Error(ErrorCode::TooManyRows, to_string(p) + " has more than " + std::to_string(n) + " rows");
    std::vector<int> v = p.vec();
    v.resize(n, 0);
    return WeakComposition(std::move(v));
}

Composition strongof(const WeakComposition& g) {
    std::vector<int> out;
    for (int p : g)
        if (p != 0) out.push_back(p);
    return Composition(std::move(out));
}

std::vector<int> reverse(std::span<const int> s) { return {s.rbegin(), s.rend()}; }
WeakComposition reverse(const WeakComposition& g) { return WeakComposition(reverse(g.parts())); }
Composition reverse(const Composition& c) { return Composition(reverse(c.parts())); }
WeakComposition reverse(const Partition& p) { return WeakComposition(reverse(p.parts())); }

namespace {

std::vector<int> decrement_rightmost(std::span<const int> s, int k) {
    if (k < 1) throw Error(ErrorCode::NoSuchPart, "rem_k needs k >= 1");
    std::vector<int> v(s.begin(), s.end());
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] == k) {
            --v[i];
            return v;
        }
    }
    throw Error(ErrorCode::NoSuchPart, "no part equal to " + std::to_string(k) + " in " + to_string(s));
}

}  // namespace

WeakComposition rem_k(const WeakComposition& s, int k) { return WeakComposition(decrement_rightmost(s.parts(), k)); }

Composition rem_k(const Composition& s, int k) {
    std::vector<int> v = decrement_rightmost(s.parts(), k);
    std::erase(v, 0);
    return Composition(std::move(v));
}

Partition partition_of(const WeakComposition& g) {
    std::vector<int> v;
    for (int p : g)
        if (p != 0) v.push_back(p);
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

Partition partition_of(const Composition& c) { return partition_of(as_weak(c)); }

bool contains(const WeakComposition& outer, const WeakComposition& inner) {
    if (outer.length() != inner.length()) return false;
    for (std::size_t i = 0; i < outer.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

Permutation min_sorting_perm(const WeakComposition& g) {
    const std::size_t n = g.length();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g[a] > g[b]; });
    // order[r] is the position holding the r-th largest part, i.e. pi^-1.
    std::vector<int> images(n);
    for (std::size_t r = 0; r < n; ++r) images[order[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(images));
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size())
        throw Error(ErrorCode::SizeMismatch, "permutations of sizes " + std::to_string(u.size()) + " and " +
                                                 std::to_string(v.size()));
    const std::size_t n = u.size();
    // count[j] = #{a <= i : w(a) >= j}, maintained row by row.
    std::vector<int> cu(n + 2, 0), cv(n + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (int j = 1; j <= u.images()[i]; ++j) ++cu[j];
        for (int j = 1; j <= v.images()[i]; ++j) ++cv[j];
        for (std::size_t j = 1; j <= n; ++j)
            if (cu[j] > cv[j]) return false;
    }
    return true;
}

bool comp_bruhat_geq(const WeakComposition& b, const WeakComposition& a) {
    if (b.length() != a.length() || partition_of(b) != partition_of(a))
        throw Error(ErrorCode::IncomparableShapes, to_string(b) + " and " + to_string(a) + " are not rearrangements");
    return bruhat_leq(min_sorting_perm(b), min_sorting_perm(a));
}

namespace {

void weak_rec(std::size_t n, int remaining, std::vector<int>& cur, std::vector<WeakComposition>& out) {
    if (cur.size() + 1 == n) {
        cur.push_back(remaining);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int p = remaining; p >= 0; --p) {
        cur.push_back(p);
        weak_rec(n, remaining - p, cur, out);
        cur.pop_back();
    }
}

void comp_rec(int remaining, std::size_t max_length, std::vector<int>& cur, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (cur.size() == max_length) return;
    for (int p = remaining; p >= 1; --p) {
        cur.push_back(p);
        comp_rec(remaining - p, max_length, cur, out);
        cur.pop_back();
    }
}

void part_rec(int remaining, int max_part, std::size_t max_length, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (cur.size() == max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        part_rec(remaining - p, p, max_length, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<WeakComposition> weak_compositions(std::size_t n, int size) {
    std::vector<WeakComposition> out;
    if (n == 0) {
        if (size == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    weak_rec(n, size, cur, out);
    return out;
}

std::vector<Composition> compositions(int size, std::size_t max_length) {
    std::vector<Composition> out;
    std::vector<int> cur;
    comp_rec(size, max_length, cur, out);
    return out;
}

std::vector<Partition> partitions(int size, std::size_t max_length) {
    std::vector<Partition> out;
    std::vector<int> cur;
    part_rec(size, size, max_length, cur, out);
    return out;
}

std::vector<WeakComposition> rearrangements(const WeakComposition& g) {
    std::vector<int> v = g.vec();
    std::sort(v.begin(), v.end(), std::greater<>());
    std::vector<WeakComposition> out;
    do {
        out.emplace_back(v);
    } while (std::prev_permutation(v.begin(), v.end()));
    return out;
}

std::vector<WeakComposition> zero_paddings(const Composition& a, std::size_t n) {
    std::vector<WeakComposition> out;
    if (a.length() > n) return out;
    // Choose which positions hold the nonzero parts; lexicographically
    // decreasing in the 0/1 mask keeps the output ordered like weak_compositions.
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(a.length()), 1);
    do {
        std::vector<int> g(n, 0);
        std::size_t next = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) g[i] = a[next++];
        out.emplace_back(std::move(g));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

std::string to_string(std::span<const int> s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

std::string to_string(const Permutation& p) { return to_string(std::span<const int>(p.images())); }

}  // namespace skylr
