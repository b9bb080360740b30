#pragma once

// Geometry backend for X = P^m with D a linear subspace of codimension c.
// Every class lives in A^*(X^n) = Q[h_1..h_n]/(h_i^{m+1}).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmchow/polynomial.hpp"
#include "fmchow/rank_vector.hpp"
#include "fmchow/subsets.hpp"

namespace fmchow {

enum class Space { Brackets, Distinct };

std::string space_name(Space s);
Space parse_space(std::string_view s);

struct GeometrySpec {
    int m = 1;  ///< dim X
    int n = 2;  ///< number of points
    int c = 1;  ///< codim of D in X; 0 means D is empty
    Space space = Space::Brackets;

    void validate() const;
    /// Dimension of the configuration space, n*m.
    int dimension() const { return n * m; }
    std::string to_string() const;

    friend bool operator==(const GeometrySpec&, const GeometrySpec&) = default;
};

/// A stratum addressed by its combinatorial data.
class StratumLabel {
public:
    enum class Kind {
        Ambient,     ///< X^n
        DS,          ///< D_S ⊂ X^n
        Diagonal,    ///< Δ_I ⊂ X^n
        DeltaNest,   ///< Δ̄_N, isomorphic to the brackets space on c(N) points
        DSInDelta,   ///< D_S inside X^{c(N)}, S on the component set {1..c(N)}
    };

    static StratumLabel ambient();
    static StratumLabel ds(SubsetLabel s);
    static StratumLabel diagonal(SubsetLabel i);
    static StratumLabel delta_nest(Nest nest);
    /// `s` empty means the whole X^{c(N)}.
    static StratumLabel ds_in_delta(Nest nest, std::optional<SubsetLabel> s);

    Kind kind() const { return kind_; }
    const std::optional<SubsetLabel>& subset() const { return subset_; }
    const std::optional<Nest>& nest() const { return nest_; }

    /// Number of X factors (c(N) for nest kinds, n otherwise) given n.
    int ambient_power(int n) const;
    /// Number of coordinates forced into D.
    int d_factors() const;

    /// "X^n", "D_{1,2}", "Δ_{1,2}", "Δ[N]", "D_{1}⊂Δ[N]".
    std::string to_string() const;
    /// Product type name used by motive sums: "X^2", "D^2", "D^2×X", "X".
    std::string type_name(int n) const;

    friend bool operator==(const StratumLabel&, const StratumLabel&) = default;

private:
    StratumLabel(Kind kind, std::optional<SubsetLabel> subset, std::optional<Nest> nest)
        : kind_(kind), subset_(std::move(subset)), nest_(std::move(nest)) {}

    Kind kind_;
    std::optional<SubsetLabel> subset_;
    std::optional<Nest> nest_;
};

/// Polynomial in an auxiliary variable t with coefficients in A^*(X^n):
/// coeffs[i] multiplies t^i.
class TPolynomial {
public:
    explicit TPolynomial(std::vector<Polynomial> coeffs);

    const std::vector<Polynomial>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    /// Substitute t := value (Horner).
    Polynomial evaluate(const Polynomial& value) const;
    /// "t^2 + (h1 + h2)*t + h1*h2"
    std::string to_string() const;

    friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

private:
    std::vector<Polynomial> coeffs_;
};

/// "h1".."hn" names; every table used with the geometry functions must contain them.
std::string ambient_variable(int i);

/// Table {h_1..h_n} (all degree 1) and relations h_i^{m+1}.
std::pair<TablePtr, std::vector<Polynomial>> ambient_presentation(const GeometrySpec& spec);
/// The relations h_i^{m+1} written over a larger table.
std::vector<Polynomial> ambient_relations(const GeometrySpec& spec, const TablePtr& table);

/// Generators of ker(A^*(X^n) -> A^*(stratum)) for DS and Diagonal labels.
std::vector<Polynomial> subvariety_kernel(const GeometrySpec& spec, const StratumLabel& label,
                                          const TablePtr& table);
std::vector<Polynomial> subvariety_kernel(const GeometrySpec& spec, const StratumLabel& label);

/// Π_{i∈S}(t + h_i).
TPolynomial chern_polynomial_ds(const GeometrySpec& spec, const SubsetLabel& s, const TablePtr& table);
TPolynomial chern_polynomial_ds(const GeometrySpec& spec, const SubsetLabel& s);

/// Chern polynomial of D_T inside D_S for S ⊊ T: Π_{i∈T∖S}(t + h_i).
TPolynomial relative_chern_polynomial_ds(const GeometrySpec& spec, const SubsetLabel& inner,
                                         const SubsetLabel& outer, const TablePtr& table);

/// c_{a,b}(t) = Σ_{i=1}^m (-1)^i c_{m-i}(T_X)(h_a) t^i + [Δ_{a,b}].
TPolynomial cab_polynomial(const GeometrySpec& spec, int a, int b, const TablePtr& table);
TPolynomial cab_polynomial(const GeometrySpec& spec, int a, int b);

/// Rank vector of P^k: (1,...,1) with k+1 entries.
RankVector projective_space_ranks(int k);

/// Ranks of the brackets space over k points, by chain summation.
RankVector brackets_space_ranks(int m, int c, int k);

RankVector poincare_of(const GeometrySpec& spec, const StratumLabel& label);

}  // namespace fmchow
