#include "fmchow/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fmchow/errors.hpp"
#include "fmchow/polynomial_io.hpp"

namespace fmchow {

std::string semantics_name(OverlapSemantics s) {
    return s == OverlapSemantics::Standard ? "standard" : "incomparable";
}

OverlapSemantics parse_semantics(std::string_view s) {
    if (s == "standard") return OverlapSemantics::Standard;
    if (s == "incomparable") return OverlapSemantics::Incomparable;
    throw ArgumentError("unknown semantics '" + std::string(s) + "' (expected standard|incomparable)");
}

namespace {

struct RuleInfo {
    RelationRule rule;
    const char* tag;
};

constexpr RuleInfo kRules[] = {
    {RelationRule::Ambient, "ambient"},
    {RelationRule::OverlapXX, "xx-overlap"},
    {RelationRule::KernelX, "kernel-x"},
    {RelationRule::ChernX, "chern-x"},
    {RelationRule::NestedChernX, "nested-chern-x"},
    {RelationRule::OverlapYY, "yy-overlap"},
    {RelationRule::MixedXY, "xy-mixed"},
    {RelationRule::KernelY, "kernel-y"},
    {RelationRule::DiagonalChern, "diagonal-chern"},
    {RelationRule::DiagonalChernPlus, "diagonal-chern-plus"},
};

}  // namespace

std::string rule_tag(RelationRule r) {
    for (const auto& info : kRules) {
        if (info.rule == r) return info.tag;
    }
    return "unknown";
}

RelationRule parse_rule_tag(std::string_view tag) {
    for (const auto& info : kRules) {
        if (tag == info.tag) return info.rule;
    }
    throw ArgumentError("unknown relation tag '" + std::string(tag) + "'");
}

std::string rule_number(PresentationFamily family, RelationRule rule) {
    using R = RelationRule;
    if (rule == R::Ambient) return "(0)";
    switch (family) {
        case PresentationFamily::Brackets:
            switch (rule) {
                case R::OverlapXX: return "(1)";
                case R::KernelX: return "(2)";
                case R::ChernX: return "(3)";
                case R::NestedChernX: return "(3')";
                default: break;
            }
            break;
        case PresentationFamily::Distinct:
            switch (rule) {
                case R::OverlapYY: return "(1)";
                case R::OverlapXX: return "(2)";
                case R::MixedXY: return "(3)";
                case R::KernelY: return "(4)";
                case R::KernelX: return "(5)";
                case R::DiagonalChern: return "(6)";
                case R::ChernX: return "(7)";
                case R::NestedChernX: return "(7')";
                default: break;
            }
            break;
        case PresentationFamily::Intermediate:
            switch (rule) {
                case R::OverlapYY: return "(1)";
                case R::MixedXY: return "(2)";
                case R::KernelY: return "(3)";
                case R::DiagonalChern: return "(4a)";
                case R::DiagonalChernPlus: return "(4b)";
                case R::OverlapXX: return "(5)";
                case R::KernelX: return "(6)";
                case R::ChernX: return "(7)";
                case R::NestedChernX: return "(7')";
                default: break;
            }
            break;
    }
    return "(?)";
}

std::string x_name(const SubsetLabel& s) { return "x" + s.compact(); }
std::string y_name(const SubsetLabel& s) { return "y" + s.compact(); }
std::string d_name(const SubsetLabel& s) { return "d" + s.compact(); }

// ---------------------------------------------------------------- RingPresentation

RingPresentation::RingPresentation(GeometrySpec spec, PresentationFamily family, TablePtr table,
                                   std::vector<VariableRole> roles, std::vector<Relation> relations)
    : spec_(spec), family_(family), table_(std::move(table)), roles_(std::move(roles)), relations_(std::move(relations)) {
    if (roles_.size() != table_->size()) throw ArgumentError("variable roles must match the table");
}

std::vector<Polynomial> RingPresentation::polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(relations_.size());
    for (const auto& r : relations_) out.push_back(r.poly);
    return out;
}

std::size_t RingPresentation::count(RelationRule rule) const {
    return static_cast<std::size_t>(
        std::count_if(relations_.begin(), relations_.end(), [&](const Relation& r) { return r.rule == rule; }));
}

RingPresentation RingPresentation::without_relation(std::size_t index) const {
    if (index >= relations_.size()) throw ArgumentError("relation index out of range");
    auto rels = relations_;
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(index));
    return RingPresentation(spec_, family_, table_, roles_, std::move(rels));
}

std::string RingPresentation::to_text() const {
    std::ostringstream os;
    const char* ring = family_ == PresentationFamily::Brackets  ? "brackets space"
                       : family_ == PresentationFamily::Distinct ? "distinct-points space"
                                                                 : "intermediate blow-up stage";
    os << "Chow ring of the " << ring << " (" << spec_.to_string() << ")\n";
    os << "variables:";
    for (std::size_t v = 0; v < table_->size(); ++v) {
        os << ' ' << table_->name(v);
        if (table_->degree(v) != 1) os << '[' << table_->degree(v) << ']';
    }
    os << "\nrelations (" << relations_.size() << "):\n";
    for (const auto& r : relations_) {
        os << "  " << rule_number(family_, r.rule) << ' ' << rule_tag(r.rule) << ": " << r.poly.to_string() << '\n';
    }
    return os.str();
}

nlohmann::ordered_json RingPresentation::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["spec"] = {{"m", spec_.m}, {"n", spec_.n}, {"codim", spec_.c}, {"space", space_name(spec_.space)}};
    auto vars = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < table_->size(); ++v) {
        vars.push_back({{"name", table_->name(v)}, {"degree", table_->degree(v)}});
    }
    j["variables"] = vars;
    auto rels = nlohmann::ordered_json::array();
    for (const auto& r : relations_) rels.push_back({{"rule", rule_tag(r.rule)}, {"poly", polynomial_to_json(r.poly)}});
    j["relations"] = rels;
    return j;
}

bool operator==(const RingPresentation& a, const RingPresentation& b) {
    if (!(*a.table_ == *b.table_) || a.relations_.size() != b.relations_.size()) return false;
    for (std::size_t k = 0; k < a.relations_.size(); ++k) {
        if (a.relations_[k].rule != b.relations_[k].rule || !(a.relations_[k].poly == b.relations_[k].poly)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- builders

namespace {

class Builder {
public:
    Builder(const GeometrySpec& spec, PresentationFamily family, bool with_x, const std::vector<SubsetLabel>& diagonals,
            char diagonal_prefix)
        : spec_(spec), family_(family) {
        std::vector<std::string> names;
        for (int i = 1; i <= spec.n; ++i) {
            names.push_back(ambient_variable(i));
            roles_.push_back({VariableRole::Kind::H, i, std::nullopt});
        }
        if (with_x) {
            for (const auto& s : all_subsets(spec.n, 2)) {
                x_index_.emplace(s.mask(), names.size());
                names.push_back(x_name(s));
                roles_.push_back({VariableRole::Kind::X, 0, s});
                xs_.push_back(s);
            }
        }
        for (const auto& d : diagonals) {
            y_index_.emplace(d.mask(), names.size());
            names.push_back(diagonal_prefix == 'y' ? y_name(d) : d_name(d));
            roles_.push_back({VariableRole::Kind::Y, 0, d});
            ys_.push_back(d);
        }
        table_ = make_table(std::move(names), std::vector<int>(roles_.size(), 1));
    }

    const TablePtr& table() const { return table_; }
    const std::vector<SubsetLabel>& xs() const { return xs_; }
    const std::vector<SubsetLabel>& ys() const { return ys_; }
    bool has_y(const SubsetLabel& s) const { return y_index_.contains(s.mask()); }

    Polynomial zero() const { return Polynomial::constant(table_, 0); }
    Polynomial one() const { return Polynomial::constant(table_, 1); }
    Polynomial x(const SubsetLabel& s) const { return Polynomial::variable(table_, x_index_.at(s.mask())); }
    Polynomial y(const SubsetLabel& s) const { return Polynomial::variable(table_, y_index_.at(s.mask())); }

    void add(RelationRule rule, const Polynomial& p) {
        if (p.is_zero()) return;
        relations_.push_back({rule, p.monic()});
    }

    void add_ambient() {
        for (auto& p : ambient_relations(spec_, table_)) add(RelationRule::Ambient, p);
    }

    void add_x_families(const PresentationOptions& options) {
        add_xx(options.semantics);
        add_kernel_x();
        add_chern_x(options.exclusive_chern_sum);
        if (options.nested_chern) add_nested_chern_x();
    }

    void add_xx(OverlapSemantics semantics) {
        for (std::size_t a = 0; a < xs_.size(); ++a) {
            for (std::size_t b = a + 1; b < xs_.size(); ++b) {
                const auto& s = xs_[a];
                const auto& t = xs_[b];
                const bool vanish = semantics == OverlapSemantics::Standard
                                        ? overlaps(s, t)
                                        : !(s.is_subset_of(t) || t.is_subset_of(s));
                if (vanish) add(RelationRule::OverlapXX, x(s) * x(t));
            }
        }
    }

    void add_kernel_x() {
        for (const auto& s : xs_) {
            for (const auto& j : subvariety_kernel(spec_, StratumLabel::ds(s), table_)) add(RelationRule::KernelX, j * x(s));
        }
    }

    void add_chern_x(bool exclusive) {
        for (const auto& s : xs_) {
            add(RelationRule::ChernX, chern_polynomial_ds(spec_, s, table_).evaluate(-x_sum_above(s, !exclusive)));
        }
    }

    void add_nested_chern_x() {
        for (const auto& s : xs_) {
            for (const auto& t : xs_) {
                if (!s.is_proper_subset_of(t)) continue;
                add(RelationRule::NestedChernX,
                    x(s) * relative_chern_polynomial_ds(spec_, s, t, table_).evaluate(-x_sum_above(t, true)));
            }
        }
    }

    void add_y_overlap() {
        for (std::size_t a = 0; a < ys_.size(); ++a) {
            for (std::size_t b = a + 1; b < ys_.size(); ++b) {
                if (overlaps(ys_[a], ys_[b])) add(RelationRule::OverlapYY, y(ys_[a]) * y(ys_[b]));
            }
        }
    }

    void add_mixed() {
        for (const auto& s : xs_) {
            for (const auto& i : ys_) {
                if (!i.is_subset_of(s)) add(RelationRule::MixedXY, x(s) * y(i));
            }
        }
    }

    void add_kernel_y() {
        for (const auto& i : ys_) {
            for (const auto& j : subvariety_kernel(spec_, StratumLabel::diagonal(i), table_)) {
                add(RelationRule::KernelY, j * y(i));
            }
        }
    }

    /// Σ of diagonal classes whose index set contains `required`.
    Polynomial y_sum_containing(const SubsetLabel& required) const {
        Polynomial s = zero();
        for (const auto& i : ys_) {
            if (required.is_subset_of(i)) s += y(i);
        }
        return s;
    }

    void add_diagonal_chern(int up_to) {
        for (int a = 1; a <= up_to; ++a) {
            for (int b = a + 1; b <= up_to; ++b) {
                const SubsetLabel ab({a, b}, spec_.n);
                add(RelationRule::DiagonalChern, cab_polynomial(spec_, a, b, table_).evaluate(y_sum_containing(ab)));
            }
        }
    }

    RingPresentation finish() && {
        return RingPresentation(spec_, family_, table_, std::move(roles_), std::move(relations_));
    }

private:
    Polynomial x_sum_above(const SubsetLabel& s, bool inclusive) const {
        Polynomial sum = zero();
        for (const auto& t : xs_) {
            if (inclusive ? s.is_subset_of(t) : s.is_proper_subset_of(t)) sum += x(t);
        }
        return sum;
    }

    GeometrySpec spec_;
    PresentationFamily family_;
    TablePtr table_;
    std::vector<VariableRole> roles_;
    std::vector<Relation> relations_;
    std::vector<SubsetLabel> xs_;
    std::vector<SubsetLabel> ys_;
    std::map<std::uint32_t, std::size_t> x_index_;
    std::map<std::uint32_t, std::size_t> y_index_;
};

bool ring_side_x(const GeometrySpec& spec) {
    spec.validate();
    if (spec.c >= 2) {
        throw UnsupportedFeature("ring presentations are only implemented for c in {0, 1}; got c=" +
                                 std::to_string(spec.c));
    }
    return spec.c == 1;
}

}  // namespace

RingPresentation build_brackets(const GeometrySpec& spec, const PresentationOptions& options) {
    const bool with_x = ring_side_x(spec);
    Builder b(spec, PresentationFamily::Brackets, with_x, {}, 'y');
    b.add_ambient();
    b.add_x_families(options);
    return std::move(b).finish();
}

RingPresentation build_distinct(const GeometrySpec& spec, const PresentationOptions& options) {
    const bool with_x = ring_side_x(spec);
    Builder b(spec, PresentationFamily::Distinct, with_x, all_subsets(spec.n, 2), 'y');
    b.add_ambient();
    b.add_y_overlap();
    if (with_x) {
        b.add_xx(options.semantics);
        b.add_mixed();
        b.add_kernel_y();
        b.add_kernel_x();
        b.add_diagonal_chern(spec.n);
        b.add_chern_x(options.exclusive_chern_sum);
        if (options.nested_chern) b.add_nested_chern_x();
    } else {
        b.add_kernel_y();
        b.add_diagonal_chern(spec.n);
    }
    return std::move(b).finish();
}

RingPresentation build_intermediate(const GeometrySpec& spec, int i, int k, const PresentationOptions& options) {
    const bool with_x = ring_side_x(spec);
    if (i < 1 || i > spec.n - 1) throw ArgumentError("stage index i must satisfy 1 <= i <= n-1");
    if (k < 0 || k > i) throw ArgumentError("stage index k must satisfy 0 <= k <= i");

    const SubsetLabel first_i1 = SubsetLabel::from_members(
        [&] {
            std::vector<int> v;
            for (int a = 1; a <= i + 1; ++a) v.push_back(a);
            return v;
        }(),
        spec.n);
    const int new_point = i + 1;
    std::vector<SubsetLabel> diagonals;
    for (const auto& s : all_subsets(spec.n, 2)) {
        if (!s.is_subset_of(first_i1)) continue;
        if (!s.contains(new_point) || s.size() > i - k + 1) diagonals.push_back(s);
    }

    Builder b(spec, PresentationFamily::Intermediate, with_x, diagonals, 'd');
    b.add_ambient();
    b.add_x_families(options);
    b.add_y_overlap();
    b.add_mixed();
    b.add_kernel_y();
    b.add_diagonal_chern(i);
    // (4b): D_k I · c_{a,i+1}(Σ_{I' ⊇ I+} D_k I') for I ⊆ {1..i}, |I| > i-k, with D_k{a} = 1.
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << i); ++mask) {
        const SubsetLabel I(mask, spec.n);
        if (I.size() <= i - k) continue;
        const int a = I.min_member();
        const SubsetLabel plus(mask | (std::uint32_t{1} << i), spec.n);
        const Polynomial factor = I.size() >= 2 ? b.y(I) : b.one();
        b.add(RelationRule::DiagonalChernPlus,
              factor * cab_polynomial(spec, a, new_point, b.table()).evaluate(b.y_sum_containing(plus)));
    }
    return std::move(b).finish();
}

RingPresentation build_presentation(const GeometrySpec& spec, const PresentationOptions& options) {
    return spec.space == Space::Brackets ? build_brackets(spec, options) : build_distinct(spec, options);
}

RingPresentation apply_permutation(const RingPresentation& pres, std::span<const int> images) {
    const int n = pres.spec().n;
    if (static_cast<int>(images.size()) != n) throw ArgumentError("permutation size does not match n");
    {
        std::vector<int> sorted(images.begin(), images.end());
        std::sort(sorted.begin(), sorted.end());
        if (sorted != identity_permutation(n)) throw ArgumentError("not a permutation of {1..n}");
    }
    const auto& roles = pres.roles();
    std::vector<std::size_t> map(roles.size());
    for (std::size_t v = 0; v < roles.size(); ++v) {
        const auto& r = roles[v];
        std::optional<std::size_t> target;
        for (std::size_t w = 0; w < roles.size() && !target; ++w) {
            if (roles[w].kind != r.kind) continue;
            if (r.kind == VariableRole::Kind::H) {
                if (roles[w].index == images[static_cast<std::size_t>(r.index - 1)]) target = w;
            } else if (roles[w].subset == r.subset->permuted(images)) {
                target = w;
            }
        }
        if (!target) throw ArgumentError("permutation maps variable " + pres.table()->name(v) + " outside the table");
        map[v] = *target;
    }
    std::vector<Relation> rels;
    for (const auto& r : pres.relations()) rels.push_back({r.rule, r.poly.renamed(pres.table(), map).monic()});
    return RingPresentation(pres.spec(), pres.family(), pres.table(), roles, std::move(rels));
}

TermOrder boundary_first_order(const RingPresentation& pres, OrderKind kind) {
    std::vector<std::size_t> priority;
    const auto& roles = pres.roles();
    for (std::size_t v = 0; v < roles.size(); ++v) {
        if (roles[v].kind != VariableRole::Kind::H) priority.push_back(v);
    }
    for (std::size_t v = 0; v < roles.size(); ++v) {
        if (roles[v].kind == VariableRole::Kind::H) priority.push_back(v);
    }
    return TermOrder(kind, std::move(priority));
}

}  // namespace fmchow
