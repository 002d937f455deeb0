#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skylr {

namespace detail {

/// Immutable integer sequence whose invariant is enforced by `Policy::check`.
template <class Policy>
class PartSequence {
public:
    PartSequence() = default;
    explicit PartSequence(std::vector<int> parts) : parts_(std::move(parts)) { Policy::check(parts_); }
    PartSequence(std::initializer_list<int> parts) : PartSequence(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_.at(i); }

    /// Sum of parts.
    int sum() const noexcept {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend bool operator==(const PartSequence&, const PartSequence&) = default;
    friend auto operator<=>(const PartSequence&, const PartSequence&) = default;

private:
    std::vector<int> parts_;
};

struct WeakPolicy {
    static void check(const std::vector<int>& parts);
};
struct CompositionPolicy {
    static void check(const std::vector<int>& parts);
};
struct PartitionPolicy {
    static void check(const std::vector<int>& parts);
};

}  // namespace detail

/// Nonnegative parts; the length is significant, so (2,1) != (2,1,0).
using WeakComposition = detail::PartSequence<detail::WeakPolicy>;
/// Strictly positive parts.
using Composition = detail::PartSequence<detail::CompositionPolicy>;
/// Weakly decreasing positive parts.
using Partition = detail::PartSequence<detail::PartitionPolicy>;

/// A bijection of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    /// Image of the 1-based point i.
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    /// Number of inversions.
    int length() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

WeakComposition as_weak(const Composition& c);
WeakComposition as_weak(const Partition& p);
WeakComposition pad(const Composition& c, std::size_t n);
WeakComposition pad(const Partition& p, std::size_t n);

Composition strongof(const WeakComposition& g);

std::vector<int> reverse(std::span<const int> s);
WeakComposition reverse(const WeakComposition& g);
Composition reverse(const Composition& c);
/// lambda* as a content vector.
WeakComposition reverse(const Partition& p);

/// Decrements the rightmost part equal to k.
WeakComposition rem_k(const WeakComposition& s, int k);
/// As above, then drops the part if it became zero.
Composition rem_k(const Composition& s, int k);

Partition partition_of(const WeakComposition& g);
Partition partition_of(const Composition& c);

/// gamma_i <= delta_i for every i (equal lengths required).
bool contains(const WeakComposition& outer, const WeakComposition& inner);

/// The minimal-length permutation pi with (g_{pi^-1(1)}, ..., g_{pi^-1(n)})
/// weakly decreasing: position j of g is sent to its rank in the stable
/// descending sort.
Permutation min_sorting_perm(const WeakComposition& g);

/// Strong Bruhat order by the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// b >= a  iff  pi(b) <= pi(a). Both must rearrange the same parts.
bool comp_bruhat_geq(const WeakComposition& b, const WeakComposition& a);

// Enumeration of index shapes, in lexicographically decreasing order.

std::vector<WeakComposition> weak_compositions(std::size_t n, int size);
std::vector<Composition> compositions(int size, std::size_t max_length);
std::vector<Partition> partitions(int size, std::size_t max_length);
/// Distinct rearrangements of g.
std::vector<WeakComposition> rearrangements(const WeakComposition& g);
/// Every gamma of length n with strongof(gamma) == a.
std::vector<WeakComposition> zero_paddings(const Composition& a, std::size_t n);

std::string to_string(std::span<const int> s);
template <class P>
std::string to_string(const detail::PartSequence<P>& s) {
    return to_string(s.parts());
}
std::string to_string(const Permutation& p);

}  // namespace skylr
