#include "fmchow/geometry.hpp"

#include "fmchow/errors.hpp"

namespace fmchow {

std::string space_name(Space s) { return s == Space::Brackets ? "brackets" : "distinct"; }

Space parse_space(std::string_view s) {
    if (s == "brackets") return Space::Brackets;
    if (s == "distinct") return Space::Distinct;
    throw ArgumentError("unknown space '" + std::string(s) + "' (expected brackets|distinct)");
}

void GeometrySpec::validate() const {
    if (m < 1) throw ArgumentError("m must be at least 1");
    if (n < 1) throw ArgumentError("n must be at least 1");
    if (n > kMaxGroundSize) throw ArgumentError("n too large");
    if (c < 0 || c > m) throw ArgumentError("codimension c must satisfy 0 <= c <= m");
}

std::string GeometrySpec::to_string() const {
    return space_name(space) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + " c=" + std::to_string(c);
}

// ---------------------------------------------------------------- StratumLabel

StratumLabel StratumLabel::ambient() { return StratumLabel(Kind::Ambient, std::nullopt, std::nullopt); }

StratumLabel StratumLabel::ds(SubsetLabel s) { return StratumLabel(Kind::DS, s, std::nullopt); }

StratumLabel StratumLabel::diagonal(SubsetLabel i) {
    if (i.size() < 2) throw ArgumentError("a diagonal needs at least two indices");
    return StratumLabel(Kind::Diagonal, i, std::nullopt);
}

StratumLabel StratumLabel::delta_nest(Nest nest) { return StratumLabel(Kind::DeltaNest, std::nullopt, std::move(nest)); }

StratumLabel StratumLabel::ds_in_delta(Nest nest, std::optional<SubsetLabel> s) {
    const int components = static_cast<int>(nest.roots().size());
    if (s && s->ground_size() != components) {
        throw ArgumentError("D_S inside Δ̄_N must be labeled on the component set {1..c(N)}");
    }
    return StratumLabel(Kind::DSInDelta, std::move(s), std::move(nest));
}

int StratumLabel::ambient_power(int n) const {
    if (nest_) return static_cast<int>(nest_->roots().size());
    return n;
}

int StratumLabel::d_factors() const {
    if (kind_ == Kind::DS || (kind_ == Kind::DSInDelta && subset_)) return subset_->size();
    return 0;
}

std::string StratumLabel::to_string() const {
    switch (kind_) {
        case Kind::Ambient:
            return "X^n";
        case Kind::DS:
            return "D_" + subset_->to_string();
        case Kind::Diagonal:
            return "Δ_" + subset_->to_string();
        case Kind::DeltaNest:
            return "Δ" + nest_->to_string();
        case Kind::DSInDelta:
            return (subset_ ? "D_" + subset_->to_string() : std::string("X^c")) + "⊂Δ" + nest_->to_string();
    }
    return {};
}

namespace {

std::string power_name(const char* base, int e) {
    if (e == 1) return base;
    return std::string(base) + "^" + std::to_string(e);
}

}  // namespace

std::string StratumLabel::type_name(int n) const {
    int xs = ambient_power(n);
    if (kind_ == Kind::Diagonal) xs = n - subset_->size() + 1;
    const int ds = d_factors();
    xs -= ds;
    if (ds == 0) return power_name("X", xs);
    if (xs == 0) return power_name("D", ds);
    return power_name("D", ds) + "×" + power_name("X", xs);
}

// ---------------------------------------------------------------- TPolynomial

TPolynomial::TPolynomial(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ArgumentError("t-polynomial needs at least a constant coefficient");
    for (const auto& c : coeffs_) {
        if (!(*c.table() == *coeffs_.front().table())) throw ArgumentError("t-polynomial coefficients differ in table");
    }
}

Polynomial TPolynomial::evaluate(const Polynomial& value) const {
    Polynomial acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * value + coeffs_[i];
    return acc;
}

std::string TPolynomial::to_string() const {
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const auto& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        const bool unit = c.term_count() == 1 && c.leading_term().monomial.is_one() && c.leading_term().coeff == 1;
        if (i == 0) {
            s += c.to_string();
        } else {
            if (!unit) s += (c.term_count() == 1 ? c.to_string() : "(" + c.to_string() + ")") + "*";
            s += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- ambient

std::string ambient_variable(int i) { return "h" + std::to_string(i); }

namespace {

Polynomial h(const TablePtr& table, int i) { return Polynomial::variable(table, ambient_variable(i)); }

Polynomial constant(const TablePtr& table, const Rational& c) { return Polynomial::constant(table, c); }

TablePtr ambient_table(const GeometrySpec& spec) {
    std::vector<std::string> names;
    for (int i = 1; i <= spec.n; ++i) names.push_back(ambient_variable(i));
    return make_table(std::move(names), std::vector<int>(static_cast<std::size_t>(spec.n), 1));
}

void require_hyperplane(const GeometrySpec& spec, const char* what) {
    if (spec.c == 0) throw ArgumentError(std::string(what) + ": D is empty when c = 0");
    if (spec.c >= 2) {
        throw UnsupportedFeature(std::string(what) + " is only implemented for a hyperplane D (c = 1)");
    }
}

void check_subset(const GeometrySpec& spec, const SubsetLabel& s) {
    if (s.ground_size() != spec.n) throw ArgumentError("subset label lives on the wrong ground set");
}

}  // namespace

std::pair<TablePtr, std::vector<Polynomial>> ambient_presentation(const GeometrySpec& spec) {
    spec.validate();
    TablePtr table = ambient_table(spec);
    return {table, ambient_relations(spec, table)};
}

std::vector<Polynomial> ambient_relations(const GeometrySpec& spec, const TablePtr& table) {
    spec.validate();
    std::vector<Polynomial> rels;
    for (int i = 1; i <= spec.n; ++i) rels.push_back(h(table, i).pow(static_cast<unsigned>(spec.m + 1)));
    return rels;
}

std::vector<Polynomial> subvariety_kernel(const GeometrySpec& spec, const StratumLabel& label,
                                          const TablePtr& table) {
    spec.validate();
    std::vector<Polynomial> out;
    switch (label.kind()) {
        case StratumLabel::Kind::Ambient:
            return out;
        case StratumLabel::Kind::DS: {
            require_hyperplane(spec, "D_S kernel");
            check_subset(spec, *label.subset());
            // P^m -> P^{m-1} on each factor in S: kernel h_i^m.
            for (int i : label.subset()->members()) out.push_back(h(table, i).pow(static_cast<unsigned>(spec.m)));
            return out;
        }
        case StratumLabel::Kind::Diagonal: {
            check_subset(spec, *label.subset());
            const auto members = label.subset()->members();
            for (std::size_t k = 1; k < members.size(); ++k) out.push_back(h(table, members[k - 1]) - h(table, members[k]));
            return out;
        }
        default:
            throw UnsupportedFeature("restriction kernels are only provided for D_S and Δ_I");
    }
}

std::vector<Polynomial> subvariety_kernel(const GeometrySpec& spec, const StratumLabel& label) {
    return subvariety_kernel(spec, label, ambient_table(spec));
}

TPolynomial chern_polynomial_ds(const GeometrySpec& spec, const SubsetLabel& s, const TablePtr& table) {
    spec.validate();
    require_hyperplane(spec, "Chern polynomial of D_S");
    check_subset(spec, s);
    // Π (t + h_i), expanded by repeated multiplication of coefficient lists.
    std::vector<Polynomial> coeffs{constant(table, 1)};
    for (int i : s.members()) {
        std::vector<Polynomial> next(coeffs.size() + 1, constant(table, 0));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] += coeffs[k] * h(table, i);
        }
        coeffs = std::move(next);
    }
    return TPolynomial(std::move(coeffs));
}

TPolynomial chern_polynomial_ds(const GeometrySpec& spec, const SubsetLabel& s) {
    return chern_polynomial_ds(spec, s, ambient_table(spec));
}

TPolynomial relative_chern_polynomial_ds(const GeometrySpec& spec, const SubsetLabel& inner,
                                         const SubsetLabel& outer, const TablePtr& table) {
    if (!inner.is_proper_subset_of(outer)) throw ArgumentError("relative Chern polynomial needs S ⊊ T");
    const SubsetLabel diff(outer.mask() & ~inner.mask(), outer.ground_size());
    return chern_polynomial_ds(spec, diff, table);
}

TPolynomial cab_polynomial(const GeometrySpec& spec, int a, int b, const TablePtr& table) {
    spec.validate();
    if (a == b) throw ArgumentError("c_{a,b} needs distinct indices");
    if (a < 1 || b < 1 || a > spec.n || b > spec.n) throw ArgumentError("c_{a,b} index out of range");
    const int m = spec.m;
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(m) + 1, constant(table, 0));
    // Diagonal class of P^m x P^m pulled back along p_{a,b}.
    for (int i = 0; i <= m; ++i) {
        coeffs[0] += h(table, a).pow(static_cast<unsigned>(i)) * h(table, b).pow(static_cast<unsigned>(m - i));
    }
    // c_j(T P^m) = binom(m+1, j) h^j.
    for (int i = 1; i <= m; ++i) {
        const int j = m - i;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
        const Rational sign = (i % 2 == 0) ? 1 : -1;
        coeffs[static_cast<std::size_t>(i)] = h(table, a).pow(static_cast<unsigned>(j)).scaled(sign * Rational(binom));
    }
    return TPolynomial(std::move(coeffs));
}

TPolynomial cab_polynomial(const GeometrySpec& spec, int a, int b) {
    return cab_polynomial(spec, a, b, ambient_table(spec));
}

RankVector projective_space_ranks(int k) {
    if (k < 0) return {};
    return RankVector(std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, 1));
}

RankVector brackets_space_ranks(int m, int c, int k) {
    const RankVector px = projective_space_ranks(m);
    if (c == 0) return px.power(k);
    const RankVector pd = projective_space_ranks(m - c);
    RankVector total;
    for (const auto& chain : enumerate_chains(k, c >= 2)) {
        const int in_d = chain.empty() ? 0 : chain.top().size();
        const RankVector stratum = px.power(k - in_d).convolve(pd.power(in_d));
        for (const auto& mu : chain_multiplicities(chain, c)) total.add_shifted(stratum, mu.total);
    }
    return total;
}

RankVector poincare_of(const GeometrySpec& spec, const StratumLabel& label) {
    spec.validate();
    const RankVector px = projective_space_ranks(spec.m);
    const int in_d = label.d_factors();
    if (in_d > 0 && spec.c == 0) throw ArgumentError("D strata are empty when c = 0");
    const RankVector pd = projective_space_ranks(spec.m - spec.c);
    switch (label.kind()) {
        case StratumLabel::Kind::Ambient:
            return px.power(spec.n);
        case StratumLabel::Kind::DS:
            check_subset(spec, *label.subset());
            return px.power(spec.n - in_d).convolve(pd.power(in_d));
        case StratumLabel::Kind::Diagonal:
            check_subset(spec, *label.subset());
            return px.power(spec.n - label.subset()->size() + 1);
        case StratumLabel::Kind::DeltaNest:
            return brackets_space_ranks(spec.m, spec.c, label.ambient_power(spec.n));
        case StratumLabel::Kind::DSInDelta:
            return px.power(label.ambient_power(spec.n) - in_d).convolve(pd.power(in_d));
    }
    return {};
}

}  // namespace fmchow
