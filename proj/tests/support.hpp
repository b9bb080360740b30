#pragma once

// Brute-force oracles and randomized law checks shared by the unit tests and
// the acceptance runner.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "fmchow/groebner.hpp"
#include "fmchow/presentation.hpp"
#include "fmchow/subsets.hpp"

namespace fmchow::testing {

using MaskFamily = std::vector<std::uint32_t>;

// Every family of non-singletons of {1..n}, kept when pairwise non-overlapping.
// Families are split into a low and a high half so each one costs O(1).
inline std::set<MaskFamily> brute_nests(int n) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        if (std::popcount(m) >= 2) masks.push_back(m);
    }
    const std::size_t k = masks.size();
    std::vector<std::uint64_t> conflict(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t meet = masks[i] & masks[j];
            if (meet != 0 && meet != masks[i] && meet != masks[j]) conflict[i] |= std::uint64_t{1} << j;
        }
    }
    const std::size_t lo_bits = k / 2;
    const std::size_t hi_bits = k - lo_bits;
    // For a half-family: whether it is internally conflict-free, and the union of its conflicts.
    auto tabulate = [&](std::size_t offset, std::size_t bits) {
        std::vector<std::uint64_t> reach(std::size_t{1} << bits, 0);
        std::vector<char> valid(std::size_t{1} << bits, 1);
        for (std::size_t f = 1; f < reach.size(); ++f) {
            const std::size_t low = static_cast<std::size_t>(std::countr_zero(f));
            const std::size_t rest = f & (f - 1);
            const std::uint64_t self = std::uint64_t{1} << (offset + low);
            reach[f] = reach[rest] | conflict[offset + low];
            valid[f] = valid[rest] && (reach[rest] & self) == 0 && (conflict[offset + low] & (std::uint64_t(rest) << offset)) == 0;
        }
        return std::pair{reach, valid};
    };
    const auto [lo_reach, lo_valid] = tabulate(0, lo_bits);
    const auto [hi_reach, hi_valid] = tabulate(lo_bits, hi_bits);
    std::set<MaskFamily> out;
    for (std::size_t hi = 0; hi < hi_valid.size(); ++hi) {
        if (!hi_valid[hi]) continue;
        const std::uint64_t hi_family = std::uint64_t(hi) << lo_bits;
        for (std::size_t lo = 0; lo < lo_valid.size(); ++lo) {
            if (!lo_valid[lo] || (lo_reach[lo] & hi_family) != 0) continue;
            MaskFamily members;
            const std::uint64_t family = hi_family | lo;
            for (std::size_t i = 0; i < k; ++i) {
                if (family >> i & 1u) members.push_back(masks[i]);
            }
            std::sort(members.begin(), members.end());
            out.insert(members);
        }
    }
    return out;
}

// Strictly decreasing sequences of subsets, from all combinations of length <= n.
inline std::set<MaskFamily> brute_chains(int n, bool singletons) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        if (std::popcount(m) >= (singletons ? 1 : 2)) masks.push_back(m);
    }
    std::set<MaskFamily> out;
    MaskFamily picked;
    auto visit = [&](auto&& self, std::size_t from) -> void {
        MaskFamily seq = picked;
        std::sort(seq.begin(), seq.end(), [](auto a, auto b) { return std::popcount(a) > std::popcount(b); });
        bool ok = true;
        for (std::size_t i = 0; i + 1 < seq.size() && ok; ++i) {
            ok = (seq[i] & seq[i + 1]) == seq[i + 1] && seq[i] != seq[i + 1];
        }
        if (ok) out.insert(seq);
        if (picked.size() == static_cast<std::size_t>(n)) return;
        for (std::size_t i = from; i < masks.size(); ++i) {
            picked.push_back(masks[i]);
            self(self, i + 1);
            picked.pop_back();
        }
    };
    visit(visit, 0);
    return out;
}

inline std::set<MaskFamily> enumerated_nests(int n) {
    std::set<MaskFamily> out;
    for (const auto& nest : enumerate_nests(n)) {
        MaskFamily members;
        for (const auto& s : nest.non_singletons()) members.push_back(s.mask());
        std::sort(members.begin(), members.end());
        out.insert(members);
    }
    return out;
}

inline std::set<MaskFamily> enumerated_chains(int n, bool singletons) {
    std::set<MaskFamily> out;
    for (const auto& chain : enumerate_chains(n, singletons)) {
        MaskFamily members;
        for (const auto& s : chain.elements()) members.push_back(s.mask());
        out.insert(members);
    }
    return out;
}

inline std::int64_t chain_range_product(const Chain& chain, int codim) {
    std::int64_t product = 1;
    const auto& e = chain.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
        const int below = i + 1 < e.size() ? e[i + 1].size() : 0;
        product *= std::max(0, codim * (e[i].size() - below) - 1);
    }
    return product;
}

inline std::int64_t nest_range_product(const Nest& nest, int m) {
    const auto st = forest_stats(nest);
    std::int64_t product = 1;
    for (const auto& s : nest.non_singletons()) product *= std::max(0, m * (st.sons.at(s) - 1) - 1);
    return product;
}

/// Number of random chains and nests whose multiplicity count differs from the closed form.
inline int multiplicity_mismatches(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int codim = 1 + static_cast<int>(rng() % 3);
        const auto chains = enumerate_chains(n, codim >= 2);
        const auto& chain = chains[rng() % chains.size()];
        if (static_cast<std::int64_t>(chain_multiplicities(chain, codim).size()) != chain_range_product(chain, codim)) {
            ++bad;
        }
        const int m = 1 + static_cast<int>(rng() % 3);
        const auto nests = enumerate_nests(n);
        const auto& nest = nests[rng() % nests.size()];
        if (static_cast<std::int64_t>(nest_multiplicities(nest, m).size()) != nest_range_product(nest, m)) ++bad;
    }
    return bad;
}

inline Polynomial random_polynomial(std::mt19937& rng, const TablePtr& t, int max_degree) {
    std::vector<Term> terms;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k) {
        Monomial m;
        const int degree = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
        for (int d = 0; d < degree; ++d) {
            const std::size_t v = rng() % t->size();
            m.set(v, m[v] + 1);
        }
        const long num = static_cast<long>(rng() % 11) - 5;
        const long den = 1 + static_cast<long>(rng() % 3);
        terms.push_back({m, Rational(num, den)});
    }
    return Polynomial::from_terms(t, std::move(terms));
}

/// Violations of idempotence, linearity and multiplicativity of the normal form.
inline int law_violations(const RingPresentation& pres, int cases, unsigned seed) {
    const auto polys = pres.polynomials();
    const auto gb = buchberger(polys, boundary_first_order(pres));
    std::mt19937 rng(seed);
    const auto& t = pres.table();
    int bad = 0;
    for (int trial = 0; trial < cases; ++trial) {
        const auto f = random_polynomial(rng, t, 3);
        const auto g = random_polynomial(rng, t, 3);
        const Rational a(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
        const auto nf = normal_form(f, gb);
        const auto ng = normal_form(g, gb);
        if (!(normal_form(nf, gb) == nf)) ++bad;
        if (!(normal_form(a * f + g, gb) == a * nf + ng)) ++bad;
        if (!(normal_form(f * g, gb) == normal_form(nf * ng, gb))) ++bad;
    }
    return bad;
}

/// Positional d -> y renaming followed by mutual ideal membership of all generators.
inline bool same_ideal_after_renaming(const RingPresentation& a, const RingPresentation& b) {
    if (a.table()->size() != b.table()->size()) return false;
    std::vector<std::size_t> map(a.table()->size());
    for (std::size_t v = 0; v < map.size(); ++v) {
        auto name = a.table()->name(v);
        if (name[0] == 'd') name[0] = 'y';
        const auto target = b.table()->index_of(name);
        if (!target) return false;
        map[v] = *target;
    }
    std::vector<Polynomial> moved;
    for (const auto& p : a.polynomials()) moved.push_back(p.renamed(b.table(), map));
    const auto bpolys = b.polynomials();
    const auto ga = buchberger(moved, TermOrder());
    const auto gb = buchberger(bpolys, TermOrder());
    for (const auto& p : bpolys) {
        if (!ideal_contains(ga, p)) return false;
    }
    for (const auto& p : moved) {
        if (!ideal_contains(gb, p)) return false;
    }
    return true;
}

}  // namespace fmchow::testing
