#include "fmchow/decomposition.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "fmchow/errors.hpp"
#include "fmchow/polynomial_io.hpp"

namespace fmchow {

namespace {

SubsetLabel expand(const SubsetLabel& s, const std::vector<SubsetLabel>& roots, int n) {
    std::uint32_t mask = 0;
    for (int j : s.members()) mask |= roots[static_cast<std::size_t>(j - 1)].mask();
    return SubsetLabel(mask, n);
}

std::string join_chain(const std::vector<SubsetLabel>& elements) {
    if (elements.empty()) return "∅";
    std::string out;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        if (k) out += '>';
        out += elements[k].to_string();
    }
    return out;
}

nlohmann::ordered_json multiplicities_json(const MultiplicityVector& v) {
    auto j = nlohmann::ordered_json::object();
    for (const auto& [s, value] : v.entries) j[s.to_string()] = value;
    return j;
}

std::vector<Chain> chains_for(int k, int c) {
    if (c == 0) return {Chain()};
    return enumerate_chains(k, c >= 2, std::max(k, kDefaultEnumerationBound));
}

std::vector<MultiplicityVector> lambdas_for(const Chain& chain, int c) {
    if (c == 0) return {MultiplicityVector{}};
    return chain_multiplicities(chain, c);
}

std::vector<Summand> nest_block(const GeometrySpec& spec, const Nest& nest,
                                const std::vector<std::vector<Chain>>& chains_by_k) {
    std::vector<Summand> out;
    const auto mus = nest_multiplicities(nest, spec.m);
    if (mus.empty()) return out;
    const int k = static_cast<int>(nest.roots().size());
    for (const auto& mu : mus) {
        for (const auto& chain : chains_by_k[static_cast<std::size_t>(k)]) {
            std::optional<SubsetLabel> top;
            if (!chain.empty()) top = chain.top();
            for (const auto& lambda : lambdas_for(chain, spec.c)) {
                out.push_back(Summand{StratumLabel::ds_in_delta(nest, top), mu.total + lambda.total, chain, lambda,
                                      nest, mu});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<SubsetLabel> Summand::embedded_chain() const {
    if (!nest) return chain.elements();
    const auto roots = nest->roots();
    std::vector<SubsetLabel> out;
    for (const auto& s : chain.elements()) out.push_back(expand(s, roots, nest->ground_size()));
    return out;
}

std::string Summand::witness_key(std::span<const int> images) const {
    std::ostringstream os;
    const auto embedded = embedded_chain();
    std::vector<SubsetLabel> moved;
    for (const auto& s : embedded) moved.push_back(s.permuted(images));
    os << join_chain(moved) << " λ=";
    for (const auto& s : chain.elements()) os << lambda.entries.at(s) << ',';
    if (nest) {
        os << " N=" << nest->permuted(images).to_string() << " μ=";
        std::vector<std::pair<SubsetLabel, int>> entries;
        for (const auto& [s, v] : mu.entries) entries.emplace_back(s.permuted(images), v);
        std::sort(entries.begin(), entries.end());
        for (const auto& [s, v] : entries) os << s.to_string() << ':' << v << ',';
    }
    os << " shift=" << shift;
    return os.str();
}

nlohmann::ordered_json Summand::to_json(int n) const {
    nlohmann::ordered_json j;
    j["stratum"] = stratum.to_string();
    j["type"] = stratum.type_name(n);
    j["shift"] = shift;
    nlohmann::ordered_json w;
    w["chain"] = chain.to_string();
    w["lambda"] = multiplicities_json(lambda);
    if (nest) {
        w["nest"] = nest->to_string();
        w["mu"] = multiplicities_json(mu);
    }
    j["witness"] = w;
    return j;
}

std::vector<Summand> brackets_summands(const GeometrySpec& spec) {
    spec.validate();
    if (spec.n > kDefaultEnumerationBound) {
        throw ResourceError("chain enumeration is limited to n <= " + std::to_string(kDefaultEnumerationBound));
    }
    std::vector<Summand> out;
    for (const auto& chain : chains_for(spec.n, spec.c)) {
        const StratumLabel stratum = chain.empty() ? StratumLabel::ambient() : StratumLabel::ds(chain.top());
        for (const auto& lambda : lambdas_for(chain, spec.c)) {
            out.push_back(Summand{stratum, lambda.total, chain, lambda, std::nullopt, {}});
        }
    }
    return out;
}

std::vector<Summand> distinct_summands(const GeometrySpec& spec, const DecompositionOptions& options) {
    spec.validate();
    if (spec.c >= 2 && !options.experimental) {
        throw UnsupportedFeature("the distinct-space decomposition for codim >= 2 is experimental; enable it explicitly");
    }
    if (spec.n > kDefaultEnumerationBound) {
        throw ResourceError("nest enumeration is limited to n <= " + std::to_string(kDefaultEnumerationBound));
    }
    const auto nests = enumerate_nests(spec.n);
    std::vector<std::vector<Chain>> chains_by_k(static_cast<std::size_t>(spec.n + 1));
    for (int k = 1; k <= spec.n; ++k) chains_by_k[static_cast<std::size_t>(k)] = chains_for(k, spec.c);

    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(nests.size()));
    std::vector<std::future<std::vector<std::vector<Summand>>>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            std::vector<std::vector<Summand>> blocks;
            for (std::size_t i = w; i < nests.size(); i += workers) blocks.push_back(nest_block(spec, nests[i], chains_by_k));
            return blocks;
        }));
    }
    std::vector<std::vector<std::vector<Summand>>> results;
    for (auto& j : jobs) results.push_back(j.get());
    std::vector<Summand> out;
    for (std::size_t i = 0; i < nests.size(); ++i) {
        auto& block = results[i % workers][i / workers];
        std::move(block.begin(), block.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<Summand> decomposition_summands(const GeometrySpec& spec, const DecompositionOptions& options) {
    return spec.space == Space::Brackets ? brackets_summands(spec) : distinct_summands(spec, options);
}

RankVector poincare_from_summands(const GeometrySpec& spec, std::span<const Summand> summands) {
    RankVector total;
    for (const auto& s : summands) total.add_shifted(poincare_of(spec, s.stratum), s.shift);
    return total;
}

void MotiveSum::add(const std::string& type, int twist, const RankVector& ranks) {
    for (auto& t : terms_) {
        if (t.type == type && t.twist == twist) {
            ++t.multiplicity;
            return;
        }
    }
    terms_.push_back(Term{type, twist, 1, ranks});
}

std::string MotiveSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        if (k) out += " ⊕ ";
        if (t.multiplicity != 1) out += std::to_string(t.multiplicity) + "·";
        out += "h(" + t.type + ")";
        if (t.twist != 0) out += "(" + std::to_string(t.twist) + ")";
    }
    return out;
}

RankVector MotiveSum::generating_function() const {
    RankVector total;
    for (const auto& t : terms_) {
        for (int k = 0; k < t.multiplicity; ++k) total.add_shifted(t.ranks, t.twist);
    }
    return total;
}

nlohmann::ordered_json MotiveSum::to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : terms_) {
        arr.push_back({{"type", t.type}, {"twist", t.twist}, {"multiplicity", t.multiplicity}});
    }
    return arr;
}

MotiveSum motive_expression(const GeometrySpec& spec, std::span<const Summand> summands) {
    MotiveSum sum;
    for (const auto& s : summands) sum.add(s.stratum.type_name(spec.n), s.shift, poincare_of(spec, s.stratum));
    return sum;
}

nlohmann::ordered_json summands_to_json(const GeometrySpec& spec, std::span<const Summand> summands) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : summands) arr.push_back(s.to_json(spec.n));
    return arr;
}

}  // namespace fmchow
