#include "fmchow/groebner.hpp"

#include <algorithm>
#include <bit>

#include "fmchow/errors.hpp"

namespace fmchow {

namespace {

using Ordered = std::vector<Term>;

struct OrderContext {
    const TermOrder& order;
    std::span<const int> weights;

    int compare(const Monomial& a, const Monomial& b) const { return order.compare(a, b, weights); }
};

Ordered to_ordered(const Polynomial& p, const OrderContext& ctx) {
    Ordered out = p.terms();
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return ctx.compare(a.monomial, b.monomial) > 0; });
    return out;
}

Ordered mul_monomial(const Ordered& g, const Rational& c, const Monomial& q) {
    Ordered out;
    out.reserve(g.size());
    for (const auto& t : g) out.push_back({t.monomial * q, t.coeff * c});
    return out;
}

// f[from..] - c * q * g, merged in order. The result drops cancelled terms.
Ordered sub_mul(const Ordered& f, std::size_t from, const Rational& c, const Monomial& q, const Ordered& g,
                const OrderContext& ctx) {
    Ordered out;
    out.reserve(f.size() - from + g.size());
    std::size_t i = from;
    std::size_t j = 0;
    Monomial gm;
    bool have_g = false;
    while (i < f.size() || j < g.size()) {
        if (j < g.size() && !have_g) {
            gm = g[j].monomial * q;
            have_g = true;
        }
        int cmp;
        if (i == f.size()) {
            cmp = -1;
        } else if (j == g.size()) {
            cmp = 1;
        } else {
            cmp = ctx.compare(f[i].monomial, gm);
        }
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, -c * g[j].coeff});
            ++j;
            have_g = false;
        } else {
            Rational s = f[i].coeff - c * g[j].coeff;
            if (s != 0) out.push_back({gm, std::move(s)});
            ++i;
            ++j;
            have_g = false;
        }
    }
    return out;
}

void make_monic(Ordered& f) {
    if (f.empty() || f.front().coeff == 1) return;
    const Rational inv = 1 / f.front().coeff;
    for (auto& t : f) t.coeff *= inv;
}

struct Reducer {
    const Ordered* poly;
    Monomial lm;
};

// Reduces f by monic reducers; with `full` also the tail.
Ordered reduce(Ordered f, std::span<const Reducer> reducers, bool full, const OrderContext& ctx) {
    Ordered result;
    std::size_t head = 0;
    while (head < f.size()) {
        const Term& lt = f[head];
        const Reducer* chosen = nullptr;
        for (const auto& r : reducers) {
            if (r.lm.divides(lt.monomial)) {
                chosen = &r;
                break;
            }
        }
        if (chosen != nullptr) {
            const Rational c = lt.coeff;
            const Monomial q = lt.monomial.quotient(chosen->lm);
            f = sub_mul(f, head, c, q, *chosen->poly, ctx);
            head = 0;
        } else if (full) {
            result.push_back(f[head++]);
        } else {
            result.insert(result.end(), f.begin() + static_cast<std::ptrdiff_t>(head), f.end());
            break;
        }
    }
    return result;
}

struct Element {
    Ordered poly;
    Monomial lm;
    bool active = true;
};

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    int degree;
};

class Engine {
public:
    Engine(const TablePtr& table, const TermOrder& order, const BuchbergerOptions& options)
        : table_(table), ctx_{order, table->degrees()}, options_(options) {}

    void add_input(const Polynomial& p) {
        Ordered f = reduce(to_ordered(p, ctx_), active_reducers(), true, ctx_);
        if (!f.empty()) insert(std::move(f));
    }

    void run() {
        while (!pairs_.empty()) {
            if (stats_.pairs_processed + pairs_.size() > options_.pair_budget) {
                throw ResourceError("Buchberger pair budget of " + std::to_string(options_.pair_budget) +
                                    " exhausted");
            }
            const std::size_t best = select_pair();
            const Pair p = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            ++stats_.pairs_processed;
            Ordered s = s_polynomial(p);
            Ordered r = reduce(std::move(s), active_reducers(), true, ctx_);
            if (r.empty()) {
                ++stats_.zero_reductions;
                continue;
            }
            insert(std::move(r));
        }
    }

    GroebnerBasis finish() {
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < elements_.size(); ++k) {
            if (elements_[k].active) keep.push_back(k);
        }
        std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
            return ctx_.compare(elements_[a].lm, elements_[b].lm) < 0;
        });
        std::vector<Ordered> reduced;
        for (std::size_t a : keep) {
            std::vector<Reducer> others;
            for (std::size_t b : keep) {
                if (b != a) others.push_back({&elements_[b].poly, elements_[b].lm});
            }
            Ordered g = reduce(elements_[a].poly, others, true, ctx_);
            make_monic(g);
            reduced.push_back(std::move(g));
        }
        return GroebnerBasis(table_, ctx_.order, std::move(reduced), stats_);
    }

private:
    std::vector<Reducer> active_reducers() const {
        std::vector<Reducer> out;
        for (const auto& e : elements_) {
            if (e.active) out.push_back({&e.poly, e.lm});
        }
        return out;
    }

    std::size_t select_pair() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            if (pair_less(pairs_[k], pairs_[best])) best = k;
        }
        return best;
    }

    bool pair_less(const Pair& a, const Pair& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (int c = ctx_.compare(a.lcm, b.lcm); c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    Ordered s_polynomial(const Pair& p) const {
        const Element& a = elements_[p.i];
        const Element& b = elements_[p.j];
        Ordered left = mul_monomial(a.poly, Rational(1), p.lcm.quotient(a.lm));
        return sub_mul(left, 0, Rational(1), p.lcm.quotient(b.lm), b.poly, ctx_);
    }

    Pair make_pair(std::size_t i, std::size_t j) const {
        Monomial l = elements_[i].lm.lcm(elements_[j].lm);
        const int d = l.weighted_degree(ctx_.weights);
        return Pair{i, j, l, d};
    }

    // Gebauer–Möller update for the new element h.
    void insert(Ordered f) {
        make_monic(f);
        const std::size_t h = elements_.size();
        Monomial lm_h = f.front().monomial;
        elements_.push_back(Element{std::move(f), lm_h, true});

        std::vector<Pair> candidates;
        for (std::size_t g = 0; g < h; ++g) {
            if (elements_[g].active) candidates.push_back(make_pair(g, h));
        }

        std::vector<Pair> kept;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const Pair& p = candidates[k];
            const bool coprime = elements_[p.i].lm.coprime(lm_h);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t r = k + 1; r < candidates.size() && !dominated; ++r) {
                    dominated = candidates[r].lcm.divides(p.lcm);
                }
                for (std::size_t r = 0; r < kept.size() && !dominated; ++r) {
                    dominated = kept[r].lcm.divides(p.lcm);
                }
            }
            if (coprime || !dominated) {
                kept.push_back(p);
            } else {
                ++stats_.pairs_pruned;
            }
        }

        std::vector<Pair> next;
        for (auto& p : pairs_) {
            const bool drop = lm_h.divides(p.lcm) && !(elements_[p.i].lm.lcm(lm_h) == p.lcm) &&
                              !(lm_h.lcm(elements_[p.j].lm) == p.lcm);
            if (drop) {
                ++stats_.pairs_pruned;
            } else {
                next.push_back(std::move(p));
            }
        }
        for (auto& p : kept) {
            if (elements_[p.i].lm.coprime(lm_h)) {
                ++stats_.pairs_pruned;
            } else {
                next.push_back(std::move(p));
            }
        }
        pairs_ = std::move(next);

        for (std::size_t g = 0; g < h; ++g) {
            if (elements_[g].active && lm_h.divides(elements_[g].lm)) elements_[g].active = false;
        }
    }

    TablePtr table_;
    OrderContext ctx_;
    BuchbergerOptions options_;
    std::vector<Element> elements_;
    std::vector<Pair> pairs_;
    BuchbergerStats stats_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(TablePtr table, TermOrder order, std::vector<std::vector<Term>> ordered,
                             BuchbergerStats stats)
    : table_(std::move(table)), order_(std::move(order)), ordered_(std::move(ordered)), stats_(stats) {}

std::vector<Polynomial> GroebnerBasis::generators() const {
    std::vector<Polynomial> out;
    out.reserve(ordered_.size());
    for (const auto& g : ordered_) out.push_back(Polynomial::from_terms(table_, g));
    return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(ordered_.size());
    for (const auto& g : ordered_) out.push_back(g.front().monomial);
    return out;
}

bool GroebnerBasis::is_unit_ideal() const {
    return std::any_of(ordered_.begin(), ordered_.end(),
                       [](const std::vector<Term>& g) { return g.front().monomial.is_one(); });
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (!(*a.table_ == *b.table_) || !(a.order_ == b.order_) || a.ordered_.size() != b.ordered_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.ordered_.size(); ++k) {
        const auto& f = a.ordered_[k];
        const auto& g = b.ordered_[k];
        if (f.size() != g.size()) return false;
        for (std::size_t t = 0; t < f.size(); ++t) {
            if (!(f[t].monomial == g[t].monomial) || f[t].coeff != g[t].coeff) return false;
        }
    }
    return true;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const TermOrder& order,
                         const BuchbergerOptions& options) {
    if (generators.empty()) throw ArgumentError("buchberger needs at least one generator");
    const TablePtr& table = generators.front().table();
    if (!order.priority().empty() && order.priority().size() != table->size()) {
        throw ArgumentError("term order priority does not match the variable table");
    }
    for (const auto& g : generators) {
        if (!(*g.table() == *table)) throw ArgumentError("generators live over different variable tables");
    }
    Engine engine(table, order, options);
    for (const auto& g : generators) engine.add_input(g);
    engine.run();
    return engine.finish();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (!(*f.table() == *basis.table())) throw ArgumentError("polynomial and basis use different tables");
    const OrderContext ctx{basis.order(), basis.table()->degrees()};
    std::vector<Reducer> reducers;
    for (const auto& g : basis.ordered_generators()) reducers.push_back({&g, g.front().monomial});
    Ordered r = reduce(to_ordered(f, ctx), reducers, true, ctx);
    return Polynomial::from_terms(basis.table(), std::move(r));
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f) { return normal_form(f, basis).is_zero(); }

bool quotient_equal(const Polynomial& f, const Polynomial& g, const GroebnerBasis& basis) {
    return normal_form(f - g, basis).is_zero();
}

bool is_artinian(const GroebnerBasis& basis) {
    if (basis.is_unit_ideal()) return true;
    const std::size_t nv = basis.table()->size();
    std::uint64_t pure = 0;
    for (const auto& lm : basis.leading_monomials()) {
        if (std::popcount(lm.support()) == 1) pure |= lm.support();
    }
    const std::uint64_t all = nv == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nv) - 1);
    return pure == all;
}

namespace {

class StandardMonomialWalker {
public:
    StandardMonomialWalker(const GroebnerBasis& basis, int top)
        : weights_(basis.table()->degrees()), lms_(basis.leading_monomials()), top_(top) {
        by_variable_.resize(weights_.size());
        for (std::size_t k = 0; k < lms_.size(); ++k) {
            for (auto [v, e] : lms_[k].exponents()) by_variable_[v].push_back(k);
        }
    }

    template <class Visit>
    void walk(Visit&& visit) {
        if (std::any_of(lms_.begin(), lms_.end(), [](const Monomial& m) { return m.is_one(); })) return;
        Monomial one;
        recurse(one, 0, 0, visit);
    }

private:
    template <class Visit>
    void recurse(const Monomial& m, int degree, std::size_t first, Visit& visit) {
        visit(m, degree);
        for (std::size_t v = first; v < weights_.size(); ++v) {
            const int d = degree + weights_[v];
            if (d > top_) continue;
            Monomial next = m * Monomial::variable(v);
            // m is standard, so only leading monomials involving v can divide next.
            const bool divisible = std::any_of(by_variable_[v].begin(), by_variable_[v].end(),
                                               [&](std::size_t k) { return lms_[k].divides(next); });
            if (!divisible) recurse(next, d, v, visit);
        }
    }

    const std::vector<int>& weights_;
    std::vector<Monomial> lms_;
    std::vector<std::vector<std::size_t>> by_variable_;
    int top_;
};

int artinian_degree_bound(const GroebnerBasis& basis) {
    const auto& w = basis.table()->degrees();
    int bound = 0;
    for (std::size_t v = 0; v < w.size(); ++v) {
        unsigned best = 0;
        for (const auto& lm : basis.leading_monomials()) {
            if (lm.support() == (std::uint64_t{1} << v) && (best == 0 || lm[v] < best)) best = lm[v];
        }
        bound += static_cast<int>(best - 1) * w[v];
    }
    return bound;
}

}  // namespace

RankVector hilbert_function(const GroebnerBasis& basis, int top) {
    if (top < 0) throw ArgumentError("negative top degree");
    if (!is_artinian(basis)) {
        throw NonArtinianError("quotient is not Artinian: some variable has no pure-power leading monomial");
    }
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 1, 0);
    StandardMonomialWalker walker(basis, top);
    walker.walk([&](const Monomial&, int degree) { ++ranks[static_cast<std::size_t>(degree)]; });
    return RankVector(std::move(ranks));
}

RankVector hilbert_series(const GroebnerBasis& basis) {
    if (!is_artinian(basis)) {
        throw NonArtinianError("quotient is not Artinian: some variable has no pure-power leading monomial");
    }
    if (basis.is_unit_ideal()) return {};
    return hilbert_function(basis, artinian_degree_bound(basis));
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    StandardMonomialWalker walker(basis, degree);
    walker.walk([&](const Monomial& m, int d) {
        if (d == degree) out.push_back(m);
    });
    return out;
}

}  // namespace fmchow
