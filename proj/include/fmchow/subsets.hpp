#pragma once

// Index combinatorics over the ground set {1..n}: subset labels, inclusion
// chains, nests (laminar families containing every singleton), their forests,
// and the multiplicity vectors that index blow-up decompositions.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace fmchow {

inline constexpr int kMaxGroundSize = 31;
inline constexpr int kDefaultEnumerationBound = 6;

/// A nonempty subset of {1..n}, stored as a bitmask (bit i-1 <=> member i).
class SubsetLabel {
public:
    SubsetLabel(std::uint32_t mask, int n);
    SubsetLabel(std::initializer_list<int> members, int n);
    static SubsetLabel from_members(std::span<const int> members, int n);
    static SubsetLabel singleton(int i, int n);
    static SubsetLabel full(int n);

    std::uint32_t mask() const { return mask_; }
    int ground_size() const { return n_; }
    int size() const;
    int min_member() const;
    bool contains(int i) const;
    std::vector<int> members() const;

    bool is_subset_of(const SubsetLabel& other) const;
    bool is_proper_subset_of(const SubsetLabel& other) const;

    /// Image under a permutation given as images[i-1] = sigma(i).
    SubsetLabel permuted(std::span<const int> images) const;

    /// "{1,2}"
    std::string to_string() const;
    /// "12"; used to build variable names, unambiguous for n <= 9.
    std::string compact() const;

    friend bool operator==(const SubsetLabel&, const SubsetLabel&) = default;
    /// Canonical order: by size, then lexicographically on the sorted members.
    friend std::strong_ordering operator<=>(const SubsetLabel& a, const SubsetLabel& b);

private:
    std::uint32_t mask_;
    int n_;
};

/// Strictly decreasing inclusion chain S_1 ⊋ S_2 ⊋ ... ⊋ S_k, largest first.
class Chain {
public:
    Chain() = default;
    Chain(std::vector<SubsetLabel> elements, bool allow_singleton_min);

    const std::vector<SubsetLabel>& elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }
    std::size_t length() const { return elements_.size(); }
    bool allow_singleton_min() const { return allow_singleton_min_; }
    /// Largest element; the chain must be nonempty.
    const SubsetLabel& top() const;

    /// "∅" or "{1,2,3}>{1,2}"
    std::string to_string() const;

    friend bool operator==(const Chain& a, const Chain& b) { return a.elements_ == b.elements_; }
    friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);

private:
    std::vector<SubsetLabel> elements_;
    bool allow_singleton_min_ = false;
};

/// Pairwise non-overlapping family of subsets containing all singletons.
/// Elements are kept in canonical order.
class Nest {
public:
    Nest(std::vector<SubsetLabel> elements, int n);
    static Nest trivial(int n);
    /// The given non-singletons together with every singleton.
    static Nest with_singletons(std::vector<SubsetLabel> non_singletons, int n);

    const std::vector<SubsetLabel>& elements() const { return elements_; }
    int ground_size() const { return n_; }
    /// Elements of size >= 2.
    std::vector<SubsetLabel> non_singletons() const;
    /// Inclusion-maximal elements, ordered by their minimum member.
    std::vector<SubsetLabel> roots() const;
    bool is_trivial() const { return static_cast<int>(elements_.size()) == n_; }

    Nest permuted(std::span<const int> images) const;
    /// "[{1},{2},{3},{1,2}]"
    std::string to_string() const;

    friend bool operator==(const Nest& a, const Nest& b) { return a.elements_ == b.elements_; }
    friend std::strong_ordering operator<=>(const Nest& a, const Nest& b);

private:
    std::vector<SubsetLabel> elements_;
    int n_;
};

struct ForestStats {
    int component_count = 0;
    std::map<SubsetLabel, int> sons;
};

struct MultiplicityVector {
    std::map<SubsetLabel, int> entries;
    int total = 0;
};

/// I and J overlap iff they meet and neither contains the other.
bool overlaps(const SubsetLabel& a, const SubsetLabel& b);

bool is_nest(std::span<const SubsetLabel> family, int n);

/// All subsets of {1..n} with at least min_size members, canonical order.
std::vector<SubsetLabel> all_subsets(int n, int min_size);

std::vector<Nest> enumerate_nests(int n, int bound = kDefaultEnumerationBound);
std::vector<Chain> enumerate_chains(int n, bool allow_singleton_min,
                                    int bound = kDefaultEnumerationBound);

ForestStats forest_stats(const Nest& nest);

/// Cartesian product of ranges 1 .. codim*(|S_i| - |S_{i+1}|) - 1.
std::vector<MultiplicityVector> chain_multiplicities(const Chain& chain, int codim);

/// Cartesian product over non-singleton I of ranges 1 .. m*(c_I - 1) - 1.
std::vector<MultiplicityVector> nest_multiplicities(const Nest& nest, int m);

/// Identity permutation of {1..n} in images form.
std::vector<int> identity_permutation(int n);
/// All permutations of {1..n} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace fmchow
