#pragma once

// Additive Chow-group decompositions of the two compactifications, indexed by
// inclusion chains (brackets space) and by nests times chains (distinct space).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fmchow/geometry.hpp"
#include "fmchow/rank_vector.hpp"
#include "fmchow/subsets.hpp"

namespace fmchow {

/// One graded summand A^{*-shift}(stratum) together with the data indexing it.
struct Summand {
    StratumLabel stratum;
    int shift = 0;
    Chain chain;             ///< on {1..n}, or on {1..c(N)} for nest summands
    MultiplicityVector lambda;  ///< multiplicities of the chain
    std::optional<Nest> nest;
    MultiplicityVector mu;   ///< multiplicities over the nest's non-singletons

    /// Chain elements as subsets of {1..n} (roots of the nest expanded).
    std::vector<SubsetLabel> embedded_chain() const;
    /// Stable description of the witness after relabelling points by sigma.
    std::string witness_key(std::span<const int> images) const;
    nlohmann::ordered_json to_json(int n) const;
};

struct DecompositionOptions {
    /// Permit the codim >= 2 distinct-space decomposition (formula by analogy).
    bool experimental = false;
    /// Worker threads for the nest loop; 0 picks hardware concurrency.
    unsigned threads = 0;
};

std::vector<Summand> brackets_summands(const GeometrySpec& spec);
std::vector<Summand> distinct_summands(const GeometrySpec& spec, const DecompositionOptions& options = {});
/// Dispatch on spec.space.
std::vector<Summand> decomposition_summands(const GeometrySpec& spec, const DecompositionOptions& options = {});

RankVector poincare_from_summands(const GeometrySpec& spec, std::span<const Summand> summands);

/// Formal sum of h(type)(twist) terms, first-appearance order.
class MotiveSum {
public:
    struct Term {
        std::string type;  ///< "X^2", "D^2×X", ...
        int twist = 0;
        int multiplicity = 0;
        RankVector ranks;  ///< of h(type) before twisting
    };

    void add(const std::string& type, int twist, const RankVector& ranks);
    const std::vector<Term>& terms() const { return terms_; }
    /// "h(X^2) ⊕ 3·h(D^2)(1)"
    std::string to_string() const;
    RankVector generating_function() const;
    nlohmann::ordered_json to_json() const;

private:
    std::vector<Term> terms_;
};

MotiveSum motive_expression(const GeometrySpec& spec, std::span<const Summand> summands);

nlohmann::ordered_json summands_to_json(const GeometrySpec& spec, std::span<const Summand> summands);

}  // namespace fmchow
