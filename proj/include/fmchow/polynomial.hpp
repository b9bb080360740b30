#pragma once

// Sparse multivariate polynomials with exact rational coefficients over a
// graded variable table.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fmchow {

using Rational = mpq_class;

inline constexpr std::size_t kMaxVariables = 64;

/// Ordered variable names with positive weights.
class VariableTable {
public:
    VariableTable(std::vector<std::string> names, std::vector<int> degrees);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    int degree(std::size_t i) const { return degrees_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return degrees_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// index_of or ArgumentError.
    std::size_t require(std::string_view name) const;

    friend bool operator==(const VariableTable&, const VariableTable&) = default;

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

TablePtr make_table(std::vector<std::string> names, std::vector<int> degrees);

/// Exponent vector. Stored densely; exponents are bounded by 255.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(std::size_t index, unsigned power = 1);

    unsigned operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, unsigned e);
    std::uint64_t support() const { return support_; }
    bool is_one() const { return support_ == 0; }

    int total_degree() const;
    int weighted_degree(std::span<const int> weights) const;

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }
    Monomial lcm(const Monomial& other) const;
    /// this / other; other must divide this.
    Monomial quotient(const Monomial& other) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// Nonzero (index, exponent) pairs in index order.
    std::vector<std::pair<std::size_t, unsigned>> exponents() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.support_ == b.support_ && a.exps_ == b.exps_;
    }

private:
    std::array<std::uint8_t, kMaxVariables> exps_{};
    std::uint64_t support_ = 0;
};

enum class OrderKind { DegRevLex, DegLex };

/// Graded monomial order. priority[r] is the variable of rank r; rank 0 is the
/// most significant variable (deglex) and the last rank is inspected first
/// by degrevlex.
class TermOrder {
public:
    explicit TermOrder(OrderKind kind = OrderKind::DegRevLex, std::vector<std::size_t> priority = {});

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& priority() const { return priority_; }

    /// Negative, zero, positive as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b, std::span<const int> weights) const;

    std::string name() const;

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    OrderKind kind_;
    std::vector<std::size_t> priority_;
};

struct Term {
    Monomial monomial;
    Rational coeff;
};

/// Polynomial over a fixed table. Terms are unique, nonzero and sorted
/// descending in the canonical order (weighted degrevlex, identity priority).
class Polynomial {
public:
    explicit Polynomial(TablePtr table);

    static Polynomial constant(TablePtr table, const Rational& c);
    static Polynomial variable(TablePtr table, std::string_view name);
    static Polynomial variable(TablePtr table, std::size_t index);
    static Polynomial from_terms(TablePtr table, std::vector<Term> terms);

    const TablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Leading term in the canonical order; throws on zero.
    const Term& leading_term() const;
    /// Maximum weighted degree of a term; -1 for zero.
    int weighted_degree() const;
    bool is_homogeneous() const;

    /// Scaled so the canonical leading coefficient is 1; zero stays zero.
    Polynomial monic() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    /// Rename variables: index i of this table goes to index map[i] of `target`.
    Polynomial renamed(const TablePtr& target, std::span<const std::size_t> map) const;

    /// Human-readable form, e.g. "h1^2*x12 - 3/2*h2 + 1".
    std::string to_string() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void check_same_table(const Polynomial& o) const;
    void canonicalize();

    TablePtr table_;
    std::vector<Term> terms_;
};

/// Canonical comparison used for Polynomial storage.
int canonical_compare(const Monomial& a, const Monomial& b, std::span<const int> weights);

}  // namespace fmchow
