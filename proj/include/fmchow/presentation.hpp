#pragma once

// Finite presentations A^*(X^n)[boundary classes] / (relations) of the Chow
// rings of the two configuration-space compactifications and of the
// intermediate blow-up stages between them.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fmchow/geometry.hpp"
#include "fmchow/polynomial.hpp"
#include "fmchow/subsets.hpp"

namespace fmchow {

/// Which pairs x_S, x_T multiply to zero.
enum class OverlapSemantics {
    Standard,      ///< S, T overlap (meet, neither contains the other)
    Incomparable,  ///< neither contains the other (disjoint pairs included)
};

std::string semantics_name(OverlapSemantics s);
OverlapSemantics parse_semantics(std::string_view s);

enum class RelationRule {
    Ambient,            ///< h_i^{m+1}
    OverlapXX,          ///< x_S x_T
    KernelX,            ///< J_{D_S} x_S
    ChernX,             ///< P_{D_S}(-Σ_{S'⊇S} x_{S'})
    NestedChernX,       ///< x_S P_{D_T/D_S}(-Σ_{T'⊇T} x_{T'}), opt-in
    OverlapYY,          ///< y_I y_J
    MixedXY,            ///< x_S y_I for I ⊄ S
    KernelY,            ///< J_{Δ_I} y_I
    DiagonalChern,      ///< c_{a,b}(Σ_{I∋a,b} y_I)
    DiagonalChernPlus,  ///< y_I c_{a,i+1}(Σ_{I'⊇I+} y_{I'}) at intermediate stages
};

std::string rule_tag(RelationRule r);
RelationRule parse_rule_tag(std::string_view tag);

enum class PresentationFamily { Brackets, Distinct, Intermediate };

/// Role of one variable: h_i, x_S, or a diagonal class (y_I / D_k I).
struct VariableRole {
    enum class Kind { H, X, Y } kind;
    int index = 0;                      ///< for H
    std::optional<SubsetLabel> subset;  ///< for X and Y
};

struct Relation {
    RelationRule rule;
    Polynomial poly;
};

struct PresentationOptions {
    OverlapSemantics semantics = OverlapSemantics::Incomparable;
    /// Add x_S P_{D_T/D_S}(...) for S ⊊ T. Off by default;
    /// available to diagnose rank mismatches.
    bool nested_chern = false;
    /// Sum over S' ⊋ S only in the Chern relation. Negative control.
    bool exclusive_chern_sum = false;
};

class RingPresentation {
public:
    RingPresentation(GeometrySpec spec, PresentationFamily family, TablePtr table, std::vector<VariableRole> roles,
                     std::vector<Relation> relations);

    const GeometrySpec& spec() const { return spec_; }
    PresentationFamily family() const { return family_; }
    const TablePtr& table() const { return table_; }
    const std::vector<VariableRole>& roles() const { return roles_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::vector<Polynomial> polynomials() const;
    std::size_t count(RelationRule rule) const;

    /// Copy without relation `index`.
    RingPresentation without_relation(std::size_t index) const;

    /// Relations grouped under their rule numbers.
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;

    /// Same table and identical relation list.
    friend bool operator==(const RingPresentation& a, const RingPresentation& b);

private:
    GeometrySpec spec_;
    PresentationFamily family_;
    TablePtr table_;
    std::vector<VariableRole> roles_;
    std::vector<Relation> relations_;
};

/// Rule number as displayed for the family, e.g. "(3)" or "(4b)".
std::string rule_number(PresentationFamily family, RelationRule rule);

RingPresentation build_brackets(const GeometrySpec& spec, const PresentationOptions& options = {});
RingPresentation build_distinct(const GeometrySpec& spec, const PresentationOptions& options = {});
/// Stage k of the i-th round of diagonal blow-ups (1 <= i <= n-1, 0 <= k <= i).
RingPresentation build_intermediate(const GeometrySpec& spec, int i, int k, const PresentationOptions& options = {});
/// Dispatch on spec.space.
RingPresentation build_presentation(const GeometrySpec& spec, const PresentationOptions& options = {});

/// Relabel h_i, x_S, y_I by sigma (images[i-1] = sigma(i)); relations are
/// mapped and renormalized, the variable table is unchanged.
RingPresentation apply_permutation(const RingPresentation& pres, std::span<const int> images);

/// Graded order ranking boundary classes above the h_i, so that normal forms
/// are written with as few boundary factors as possible.
TermOrder boundary_first_order(const RingPresentation& pres, OrderKind kind = OrderKind::DegRevLex);

/// Variable names: "h1", "x12", "y123" and "d123" for intermediate diagonal classes.
std::string x_name(const SubsetLabel& s);
std::string y_name(const SubsetLabel& s);
std::string d_name(const SubsetLabel& s);

}  // namespace fmchow
