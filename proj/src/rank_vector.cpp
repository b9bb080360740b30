#include "fmchow/rank_vector.hpp"

#include <numeric>

#include "fmchow/errors.hpp"

namespace fmchow {

RankVector::RankVector(std::initializer_list<std::int64_t> ranks) : ranks_(ranks) { trim(); }

RankVector::RankVector(std::vector<std::int64_t> ranks) : ranks_(std::move(ranks)) { trim(); }

void RankVector::trim() {
    while (!ranks_.empty() && ranks_.back() == 0) ranks_.pop_back();
}

std::int64_t RankVector::total() const {
    return std::accumulate(ranks_.begin(), ranks_.end(), std::int64_t{0});
}

bool RankVector::is_palindromic() const {
    for (std::size_t i = 0, j = ranks_.size(); i < j; ++i) {
        if (ranks_[i] != ranks_[--j]) return false;
    }
    return true;
}

void RankVector::add_shifted(const RankVector& other, int shift) {
    if (shift < 0) throw ArgumentError("negative Tate shift");
    if (other.ranks_.empty()) return;
    const std::size_t need = other.ranks_.size() + static_cast<std::size_t>(shift);
    if (ranks_.size() < need) ranks_.resize(need, 0);
    for (std::size_t d = 0; d < other.ranks_.size(); ++d) {
        ranks_[d + static_cast<std::size_t>(shift)] += other.ranks_[d];
    }
    trim();
}

RankVector RankVector::convolve(const RankVector& other) const {
    if (ranks_.empty() || other.ranks_.empty()) return {};
    std::vector<std::int64_t> out(ranks_.size() + other.ranks_.size() - 1, 0);
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        for (std::size_t j = 0; j < other.ranks_.size(); ++j) out[i + j] += ranks_[i] * other.ranks_[j];
    }
    return RankVector(std::move(out));
}

RankVector RankVector::power(int exponent) const {
    if (exponent < 0) throw ArgumentError("negative power of a rank vector");
    RankVector out{1};
    for (int i = 0; i < exponent; ++i) out = out.convolve(*this);
    return out;
}

std::string RankVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (i != 0) s += ',';
        s += std::to_string(ranks_[i]);
    }
    return s + ")";
}

}  // namespace fmchow
