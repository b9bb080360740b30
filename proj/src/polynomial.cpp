#include "fmchow/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "fmchow/errors.hpp"

namespace fmchow {

VariableTable::VariableTable(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size()) throw ArgumentError("variable names and degrees differ in length");
    if (names_.size() > kMaxVariables) {
        throw ResourceError("at most " + std::to_string(kMaxVariables) + " variables are supported, got " +
                            std::to_string(names_.size()));
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw ArgumentError("empty variable name");
        if (!seen.insert(names_[i]).second) throw ArgumentError("duplicate variable name " + names_[i]);
        if (degrees_[i] < 1) throw ArgumentError("variable " + names_[i] + " has nonpositive degree");
    }
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t VariableTable::require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw ArgumentError("unknown variable " + std::string(name));
}

TablePtr make_table(std::vector<std::string> names, std::vector<int> degrees) {
    return std::make_shared<const VariableTable>(std::move(names), std::move(degrees));
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, unsigned power) {
    Monomial m;
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, unsigned e) {
    if (i >= kMaxVariables) throw ArgumentError("variable index out of range");
    if (e > 255) throw ResourceError("exponent exceeds 255");
    exps_[i] = static_cast<std::uint8_t>(e);
    if (e != 0) {
        support_ |= std::uint64_t{1} << i;
    } else {
        support_ &= ~(std::uint64_t{1} << i);
    }
}

int Monomial::total_degree() const {
    int d = 0;
    for (std::uint64_t s = support_; s != 0; s &= s - 1) d += exps_[static_cast<std::size_t>(std::countr_zero(s))];
    return d;
}

int Monomial::weighted_degree(std::span<const int> weights) const {
    int d = 0;
    for (std::uint64_t s = support_; s != 0; s &= s - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(s));
        d += exps_[i] * weights[i];
    }
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0) return false;
    for (std::uint64_t s = support_; s != 0; s &= s - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(s));
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    m.support_ = support_ | other.support_;
    return m;
}

Monomial Monomial::quotient(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (other.exps_[i] > exps_[i]) throw ArgumentError("monomial quotient is not exact");
        m.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
        if (m.exps_[i] != 0) m.support_ |= std::uint64_t{1} << i;
    }
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
        if (e > 255) throw ResourceError("exponent exceeds 255");
        m.exps_[i] = static_cast<std::uint8_t>(e);
    }
    m.support_ = a.support_ | b.support_;
    return m;
}

std::vector<std::pair<std::size_t, unsigned>> Monomial::exponents() const {
    std::vector<std::pair<std::size_t, unsigned>> out;
    for (std::uint64_t s = support_; s != 0; s &= s - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(s));
        out.emplace_back(i, exps_[i]);
    }
    return out;
}

// ---------------------------------------------------------------- TermOrder

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
    std::vector<std::size_t> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i) throw ArgumentError("term order priority must be a permutation of 0..k-1");
    }
}

int TermOrder::compare(const Monomial& a, const Monomial& b, std::span<const int> weights) const {
    const int da = a.weighted_degree(weights);
    const int db = b.weighted_degree(weights);
    if (da != db) return da < db ? -1 : 1;
    const std::size_t nv = weights.size();
    auto var = [&](std::size_t rank) { return priority_.empty() ? rank : priority_[rank]; };
    if (kind_ == OrderKind::DegLex) {
        for (std::size_t r = 0; r < nv; ++r) {
            const std::size_t v = var(r);
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
    } else {
        for (std::size_t r = nv; r-- > 0;) {
            const std::size_t v = var(r);
            if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
    }
    return 0;
}

std::string TermOrder::name() const {
    return kind_ == OrderKind::DegLex ? "deglex" : "degrevlex";
}

int canonical_compare(const Monomial& a, const Monomial& b, std::span<const int> weights) {
    const int da = a.weighted_degree(weights);
    const int db = b.weighted_degree(weights);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t v = weights.size(); v-- > 0;) {
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(TablePtr table) : table_(std::move(table)) {
    if (!table_) throw ArgumentError("polynomial requires a variable table");
}

Polynomial Polynomial::constant(TablePtr table, const Rational& c) {
    Polynomial p(std::move(table));
    Rational q = c;
    q.canonicalize();
    if (q != 0) p.terms_.push_back({Monomial{}, q});
    return p;
}

Polynomial Polynomial::variable(TablePtr table, std::string_view name) {
    const std::size_t i = table->require(name);
    return variable(std::move(table), i);
}

Polynomial Polynomial::variable(TablePtr table, std::size_t index) {
    if (index >= table->size()) throw ArgumentError("variable index out of range");
    Polynomial p(std::move(table));
    p.terms_.push_back({Monomial::variable(index), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(TablePtr table, std::vector<Term> terms) {
    Polynomial p(std::move(table));
    for (const auto& t : terms) {
        if ((t.monomial.support() >> p.table_->size()) != 0) {
            throw ArgumentError("monomial uses variables outside the table");
        }
    }
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void Polynomial::canonicalize() {
    for (auto& t : terms_) t.coeff.canonicalize();
    const auto& w = table_->degrees();
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return canonical_compare(a.monomial, b.monomial, w) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
}

void Polynomial::check_same_table(const Polynomial& o) const {
    if (table_ != o.table_ && !(*table_ == *o.table_)) {
        throw ArgumentError("polynomials live over different variable tables");
    }
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw ArgumentError("zero polynomial has no leading term");
    return terms_.front();
}

int Polynomial::weighted_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.weighted_degree(table_->degrees()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().monomial.weighted_degree(table_->degrees());
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
        return t.monomial.weighted_degree(table_->degrees()) == d;
    });
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    const Rational inv = 1 / terms_.front().coeff;
    return scaled(inv);
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p(table_);
    Rational q = c;
    q.canonicalize();
    if (q == 0) return p;
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.coeff *= q;
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(table_, 1);
    for (unsigned i = 0; i < e; ++i) result *= *this;
    return result;
}

Polynomial Polynomial::renamed(const TablePtr& target, std::span<const std::size_t> map) const {
    if (map.size() != table_->size()) throw ArgumentError("rename map must cover every variable");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (auto [i, e] : t.monomial.exponents()) {
            const std::size_t j = map[i];
            if (j >= target->size()) throw ArgumentError("rename target index out of range");
            m.set(j, m[j] + e);
        }
        out.push_back({m, t.coeff});
    }
    return from_terms(target, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_table(o);
    const auto& w = table_->degrees();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c;
        if (i == terms_.size()) {
            c = -1;
        } else if (j == o.terms_.size()) {
            c = 1;
        } else {
            c = canonical_compare(terms_[i].monomial, o.terms_[j].monomial, w);
        }
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) out.push_back({terms_[i].monomial, std::move(s)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += o.scaled(-1); }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_table(b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    }
    return Polynomial::from_terms(a.table_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.table_ != b.table_ && !(*a.table_ == *b.table_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        Rational c = t.coeff;
        if (k == 0) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string mono;
        for (auto [i, e] : t.monomial.exponents()) {
            if (!mono.empty()) mono += '*';
            mono += table_->name(i);
            if (e != 1) mono += '^' + std::to_string(e);
        }
        if (mono.empty()) {
            s += c.get_str();
        } else if (c == 1) {
            s += mono;
        } else {
            s += c.get_str() + "*" + mono;
        }
    }
    return s;
}

}  // namespace fmchow
