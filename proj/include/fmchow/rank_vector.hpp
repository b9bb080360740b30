#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fmchow {

/// Ranks of the graded pieces A^0, A^1, ... with trailing zeros trimmed.
class RankVector {
public:
    RankVector() = default;
    RankVector(std::initializer_list<std::int64_t> ranks);
    explicit RankVector(std::vector<std::int64_t> ranks);

    const std::vector<std::int64_t>& ranks() const { return ranks_; }
    std::size_t size() const { return ranks_.size(); }
    bool empty() const { return ranks_.empty(); }
    std::int64_t operator[](std::size_t d) const { return d < ranks_.size() ? ranks_[d] : 0; }
    /// Highest degree with a nonzero rank; -1 for the zero vector.
    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    std::int64_t total() const;

    bool is_palindromic() const;

    /// this += shift_by(other, shift), coefficientwise.
    void add_shifted(const RankVector& other, int shift);
    /// Coefficientwise product of generating functions.
    RankVector convolve(const RankVector& other) const;
    RankVector power(int exponent) const;

    /// "(1,3,5,3,1)"
    std::string to_string() const;

    friend bool operator==(const RankVector&, const RankVector&) = default;

private:
    void trim();
    std::vector<std::int64_t> ranks_;
};

}  // namespace fmchow
