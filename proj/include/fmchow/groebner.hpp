#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fmchow/polynomial.hpp"
#include "fmchow/rank_vector.hpp"

namespace fmchow {

struct BuchbergerOptions {
    /// Ceiling on S-pairs processed plus pairs pending; exceeded -> ResourceError.
    std::size_t pair_budget = 5'000'000;
};

struct BuchbergerStats {
    std::size_t pairs_processed = 0;
    std::size_t pairs_pruned = 0;
    std::size_t zero_reductions = 0;
};

/// Reduced, monic Gröbner basis. Generators are sorted by increasing leading
/// monomial in the basis' term order.
class GroebnerBasis {
public:
    GroebnerBasis(TablePtr table, TermOrder order, std::vector<std::vector<Term>> ordered,
                  BuchbergerStats stats);

    const TablePtr& table() const { return table_; }
    const TermOrder& order() const { return order_; }
    std::size_t size() const { return ordered_.size(); }
    const BuchbergerStats& stats() const { return stats_; }

    /// Generators as canonical polynomials.
    std::vector<Polynomial> generators() const;
    /// Leading monomials w.r.t. order(), in generator order.
    std::vector<Monomial> leading_monomials() const;
    bool is_unit_ideal() const;

    /// Terms sorted descending in order(); leading term first.
    const std::vector<std::vector<Term>>& ordered_generators() const { return ordered_; }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

private:
    TablePtr table_;
    TermOrder order_;
    std::vector<std::vector<Term>> ordered_;
    BuchbergerStats stats_;
};

/// Buchberger's algorithm with Gebauer–Möller pruning and the normal
/// selection strategy (smallest lcm degree, then smallest lcm in the order,
/// then pair indices). Deterministic for a given input sequence.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const TermOrder& order,
                         const BuchbergerOptions& options = {});

/// Fully reduced remainder of f modulo the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f);

/// normal_form(f - g) == 0.
bool quotient_equal(const Polynomial& f, const Polynomial& g, const GroebnerBasis& basis);

/// True when every variable has a pure power among the leading monomials.
bool is_artinian(const GroebnerBasis& basis);

/// Standard-monomial counts for degrees 0..top; NonArtinianError otherwise.
RankVector hilbert_function(const GroebnerBasis& basis, int top);

/// Complete rank vector of an Artinian quotient.
RankVector hilbert_series(const GroebnerBasis& basis);

/// Standard monomials (not divisible by any leading monomial) of one degree.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, int degree);

}  // namespace fmchow
