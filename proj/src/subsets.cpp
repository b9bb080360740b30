#include "fmchow/subsets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "fmchow/errors.hpp"

namespace fmchow {

namespace {

void check_ground(int n) {
    if (n < 1 || n > kMaxGroundSize) {
        throw ArgumentError("ground set size must lie in 1.." + std::to_string(kMaxGroundSize) +
                            ", got " + std::to_string(n));
    }
}

std::uint32_t ground_mask(int n) {
    return n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
}

void check_enumeration_bound(int n, int bound) {
    check_ground(n);
    if (n > bound) {
        throw ResourceError("enumeration over n=" + std::to_string(n) +
                            " exceeds the configured bound " + std::to_string(bound));
    }
}

}  // namespace

SubsetLabel::SubsetLabel(std::uint32_t mask, int n) : mask_(mask), n_(n) {
    check_ground(n);
    if (mask == 0) throw ArgumentError("subset label must be nonempty");
    if ((mask & ~ground_mask(n)) != 0) {
        throw ArgumentError("subset label has members outside {1.." + std::to_string(n) + "}");
    }
}

SubsetLabel::SubsetLabel(std::initializer_list<int> members, int n)
    : SubsetLabel(from_members(std::span<const int>(members.begin(), members.size()), n)) {}

SubsetLabel SubsetLabel::from_members(std::span<const int> members, int n) {
    check_ground(n);
    std::uint32_t mask = 0;
    for (int i : members) {
        if (i < 1 || i > n) {
            throw ArgumentError("member " + std::to_string(i) + " outside {1.." + std::to_string(n) + "}");
        }
        mask |= std::uint32_t{1} << (i - 1);
    }
    return SubsetLabel(mask, n);
}

SubsetLabel SubsetLabel::singleton(int i, int n) {
    const int m[] = {i};
    return from_members(m, n);
}

SubsetLabel SubsetLabel::full(int n) {
    check_ground(n);
    return SubsetLabel(ground_mask(n), n);
}

int SubsetLabel::size() const { return std::popcount(mask_); }

int SubsetLabel::min_member() const { return std::countr_zero(mask_) + 1; }

bool SubsetLabel::contains(int i) const {
    return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1U) != 0;
}

std::vector<int> SubsetLabel::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

bool SubsetLabel::is_subset_of(const SubsetLabel& other) const {
    return (mask_ & ~other.mask_) == 0;
}

bool SubsetLabel::is_proper_subset_of(const SubsetLabel& other) const {
    return is_subset_of(other) && mask_ != other.mask_;
}

SubsetLabel SubsetLabel::permuted(std::span<const int> images) const {
    if (static_cast<int>(images.size()) != n_) {
        throw ArgumentError("permutation size does not match the ground set");
    }
    std::vector<int> out;
    for (int i : members()) out.push_back(images[static_cast<std::size_t>(i - 1)]);
    return from_members(out, n_);
}

std::string SubsetLabel::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : members()) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string SubsetLabel::compact() const {
    std::string s;
    for (int i : members()) s += std::to_string(i);
    return s;
}

std::strong_ordering operator<=>(const SubsetLabel& a, const SubsetLabel& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    // Equal sizes: the set holding the lowest element of the symmetric
    // difference is lexicographically smaller.
    const std::uint32_t low = (a.mask_ ^ b.mask_) & (~(a.mask_ ^ b.mask_) + 1);
    return (a.mask_ & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Chain::Chain(std::vector<SubsetLabel> elements, bool allow_singleton_min)
    : elements_(std::move(elements)), allow_singleton_min_(allow_singleton_min) {
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (!elements_[i].is_proper_subset_of(elements_[i - 1])) {
            throw ArgumentError("chain elements must be strictly decreasing by inclusion: " + to_string());
        }
    }
    if (!elements_.empty() && !allow_singleton_min_ && elements_.back().size() < 2) {
        throw ArgumentError("chain minimum is a singleton but singleton minima are not allowed");
    }
}

const SubsetLabel& Chain::top() const {
    if (elements_.empty()) throw ArgumentError("the empty chain has no top element");
    return elements_.front();
}

std::string Chain::to_string() const {
    if (elements_.empty()) return "∅";
    std::string s;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i != 0) s += '>';
        s += elements_[i].to_string();
    }
    return s;
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
    if (auto c = a.elements_.size() <=> b.elements_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                  b.elements_.begin(), b.elements_.end());
}

Nest::Nest(std::vector<SubsetLabel> elements, int n) : elements_(std::move(elements)), n_(n) {
    check_ground(n);
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (!is_nest(elements_, n)) {
        throw ArgumentError("family is not a nest: " + to_string());
    }
}

Nest Nest::trivial(int n) {
    check_ground(n);
    std::vector<SubsetLabel> e;
    for (int i = 1; i <= n; ++i) e.push_back(SubsetLabel::singleton(i, n));
    return Nest(std::move(e), n);
}

Nest Nest::with_singletons(std::vector<SubsetLabel> non_singletons, int n) {
    check_ground(n);
    for (int i = 1; i <= n; ++i) non_singletons.push_back(SubsetLabel::singleton(i, n));
    return Nest(std::move(non_singletons), n);
}

std::vector<SubsetLabel> Nest::non_singletons() const {
    std::vector<SubsetLabel> out;
    for (const auto& e : elements_) {
        if (e.size() >= 2) out.push_back(e);
    }
    return out;
}

std::vector<SubsetLabel> Nest::roots() const {
    std::vector<SubsetLabel> out;
    for (const auto& e : elements_) {
        const bool covered = std::any_of(elements_.begin(), elements_.end(),
                                         [&](const SubsetLabel& f) { return e.is_proper_subset_of(f); });
        if (!covered) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const SubsetLabel& a, const SubsetLabel& b) {
        return a.min_member() < b.min_member();
    });
    return out;
}

Nest Nest::permuted(std::span<const int> images) const {
    std::vector<SubsetLabel> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_) out.push_back(e.permuted(images));
    return Nest(std::move(out), n_);
}

std::string Nest::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i != 0) s += ',';
        s += elements_[i].to_string();
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Nest& a, const Nest& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.elements_.size() <=> b.elements_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                  b.elements_.begin(), b.elements_.end());
}

bool overlaps(const SubsetLabel& a, const SubsetLabel& b) {
    if (a.ground_size() != b.ground_size()) {
        throw ArgumentError("overlap test between labels on different ground sets");
    }
    return (a.mask() & b.mask()) != 0 && !a.is_subset_of(b) && !b.is_subset_of(a);
}

bool is_nest(std::span<const SubsetLabel> family, int n) {
    if (n < 1 || n > kMaxGroundSize) return false;
    std::uint32_t singletons = 0;
    for (const auto& e : family) {
        if (e.ground_size() != n) return false;
        if (e.size() == 1) singletons |= e.mask();
    }
    if (singletons != ground_mask(n)) return false;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (overlaps(family[i], family[j])) return false;
        }
    }
    return true;
}

std::vector<SubsetLabel> all_subsets(int n, int min_size) {
    check_ground(n);
    if (n > 20) throw ResourceError("subset listing limited to n <= 20");
    std::vector<SubsetLabel> out;
    for (std::uint32_t m = 1; m <= ground_mask(n); ++m) {
        if (std::popcount(m) >= min_size) out.emplace_back(m, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Nest> enumerate_nests(int n, int bound) {
    check_enumeration_bound(n, bound);
    const auto candidates = all_subsets(n, 2);
    std::vector<SubsetLabel> base;
    for (int i = 1; i <= n; ++i) base.push_back(SubsetLabel::singleton(i, n));

    std::vector<Nest> out;
    std::vector<SubsetLabel> chosen;
    // Include/exclude each candidate in order, keeping the family laminar.
    auto recurse = [&](auto&& self, std::size_t index) -> void {
        if (index == candidates.size()) {
            std::vector<SubsetLabel> family = base;
            family.insert(family.end(), chosen.begin(), chosen.end());
            out.emplace_back(std::move(family), n);
            return;
        }
        self(self, index + 1);
        const auto& c = candidates[index];
        const bool compatible = std::none_of(chosen.begin(), chosen.end(),
                                             [&](const SubsetLabel& e) { return overlaps(c, e); });
        if (compatible) {
            chosen.push_back(c);
            self(self, index + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Chain> enumerate_chains(int n, bool allow_singleton_min, int bound) {
    check_enumeration_bound(n, bound);
    const int min_size = allow_singleton_min ? 1 : 2;
    const auto candidates = all_subsets(n, min_size);

    std::vector<Chain> out;
    out.emplace_back();
    std::vector<SubsetLabel> current;
    auto extend = [&](auto&& self) -> void {
        for (const auto& c : candidates) {
            if (!current.empty() && !c.is_proper_subset_of(current.back())) continue;
            current.push_back(c);
            out.emplace_back(current, allow_singleton_min);
            self(self);
            current.pop_back();
        }
    };
    extend(extend);
    std::sort(out.begin(), out.end());
    return out;
}

ForestStats forest_stats(const Nest& nest) {
    const auto& e = nest.elements();
    ForestStats stats;
    stats.component_count = static_cast<int>(nest.roots().size());
    for (const auto& parent : e) {
        int sons = 0;
        for (const auto& child : e) {
            if (!child.is_proper_subset_of(parent)) continue;
            const bool maximal = std::none_of(e.begin(), e.end(), [&](const SubsetLabel& mid) {
                return child.is_proper_subset_of(mid) && mid.is_proper_subset_of(parent);
            });
            if (maximal) ++sons;
        }
        stats.sons.emplace(parent, sons);
    }
    return stats;
}

namespace {

// Odometer over independent integer ranges [1, hi_k]; an empty range kills the product.
std::vector<MultiplicityVector> product_of_ranges(const std::vector<std::pair<SubsetLabel, int>>& ranges) {
    std::vector<MultiplicityVector> out;
    for (const auto& r : ranges) {
        if (r.second < 1) return out;
    }
    std::vector<int> value(ranges.size(), 1);
    while (true) {
        MultiplicityVector v;
        for (std::size_t k = 0; k < ranges.size(); ++k) {
            v.entries.emplace(ranges[k].first, value[k]);
            v.total += value[k];
        }
        out.push_back(std::move(v));
        std::size_t k = 0;
        for (; k < ranges.size(); ++k) {
            if (value[k] < ranges[k].second) {
                ++value[k];
                break;
            }
            value[k] = 1;
        }
        if (k == ranges.size()) break;
    }
    return out;
}

}  // namespace

std::vector<MultiplicityVector> chain_multiplicities(const Chain& chain, int codim) {
    if (codim < 1) throw ArgumentError("codimension must be at least 1 for chain multiplicities");
    const auto& e = chain.elements();
    std::vector<std::pair<SubsetLabel, int>> ranges;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const int below = i + 1 < e.size() ? e[i + 1].size() : 0;
        ranges.emplace_back(e[i], codim * (e[i].size() - below) - 1);
    }
    return product_of_ranges(ranges);
}

std::vector<MultiplicityVector> nest_multiplicities(const Nest& nest, int m) {
    if (m < 1) throw ArgumentError("dimension m must be at least 1");
    const auto stats = forest_stats(nest);
    std::vector<std::pair<SubsetLabel, int>> ranges;
    for (const auto& I : nest.non_singletons()) {
        ranges.emplace_back(I, m * (stats.sons.at(I) - 1) - 1);
    }
    return product_of_ranges(ranges);
}

std::vector<int> identity_permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

std::vector<std::vector<int>> all_permutations(int n) {
    auto p = identity_permutation(n);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace fmchow
