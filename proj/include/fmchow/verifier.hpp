#pragma once

// Cross-checks of the ring presentations against the additive decompositions,
// plus symmetry audits and the overlap-semantics discrimination run.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fmchow/decomposition.hpp"
#include "fmchow/groebner.hpp"
#include "fmchow/presentation.hpp"

namespace fmchow {

struct VerifyOptions {
    OrderKind order = OrderKind::DegRevLex;
    std::size_t pair_budget = BuchbergerOptions{}.pair_budget;
    /// Lift the default size ceilings (n <= 3 for m <= 2, n <= 4 for m = 1).
    bool ignore_size_ceiling = false;
    /// Diagnostic relation family, see PresentationOptions.
    bool nested_chern = false;
    bool experimental = false;
};

struct PhaseTimes {
    double presentation_ms = 0;
    double groebner_ms = 0;
    double hilbert_ms = 0;
    double decomposition_ms = 0;
};

struct VerifyReport {
    GeometrySpec spec;
    OverlapSemantics semantics = OverlapSemantics::Incomparable;
    OrderKind order = OrderKind::DegRevLex;
    bool nested_chern = false;
    RankVector ranks_presentation;
    RankVector ranks_decomposition;
    bool equal = false;
    bool palindromic = false;
    bool top_rank_one = false;
    bool degree_zero_one = false;
    std::size_t relation_count = 0;
    std::size_t basis_size = 0;
    /// Budget exhaustion or a non-Artinian quotient; empty on a clean run.
    std::string error;
    PhaseTimes times;

    bool passed() const { return error.empty() && equal && palindromic && top_rank_one && degree_zero_one; }
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

/// Ranks of a presentation's quotient. Non-Artinian quotients throw.
RankVector presentation_ranks(const RingPresentation& pres, OrderKind order = OrderKind::DegRevLex,
                              const BuchbergerOptions& options = {});

VerifyReport verify_space(const GeometrySpec& spec, OverlapSemantics semantics, const VerifyOptions& options = {});
/// Distinct space with D empty, against the nest-only decomposition.
VerifyReport fm_degeneration(const GeometrySpec& spec, const VerifyOptions& options = {});

struct SymmetryReport {
    bool invariant = true;
    std::size_t permutations_checked = 0;
    std::vector<std::string> failures;
    nlohmann::ordered_json to_json() const;
};

/// Hilbert function and ideal invariance of the presentation, and invariance
/// of the summand multiset, under every permutation of the points.
SymmetryReport symmetry_audit(const GeometrySpec& spec, OverlapSemantics semantics,
                              const VerifyOptions& options = {});
/// Ring-side audit of an explicit (possibly corrupted) presentation.
SymmetryReport symmetry_audit(const RingPresentation& pres, const VerifyOptions& options = {});

struct DiscriminationReport {
    int m = 1;
    VerifyReport incomparable;
    VerifyReport standard;
    std::optional<OverlapSemantics> verdict;
    /// Degree-2 rank of the losing semantics minus the decomposition's.
    std::int64_t degree_two_excess = 0;
    std::string finding;

    bool consistent() const { return verdict.has_value(); }
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

/// Brackets space at n = 4 under both x·x semantics.
DiscriminationReport semantics_discriminate(int m, const VerifyOptions& options = {});

}  // namespace fmchow
