#include "fmchow/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "fmchow/errors.hpp"
#include "fmchow/polynomial_io.hpp"

namespace fmchow {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

int size_ceiling(const GeometrySpec& spec) {
    if (spec.m == 1 && spec.space == Space::Brackets) return 4;
    if (spec.m <= 2) return 3;
    return 2;
}

std::string order_name(OrderKind k) { return k == OrderKind::DegRevLex ? "degrevlex" : "deglex"; }

nlohmann::ordered_json spec_json(const GeometrySpec& s) {
    return {{"m", s.m}, {"n", s.n}, {"codim", s.c}, {"space", space_name(s.space)}};
}

std::vector<std::string> summand_keys(std::span<const Summand> summands, std::span<const int> images) {
    std::vector<std::string> keys;
    keys.reserve(summands.size());
    for (const auto& s : summands) keys.push_back(s.witness_key(images));
    std::sort(keys.begin(), keys.end());
    return keys;
}

VerifyReport run(const GeometrySpec& spec, OverlapSemantics semantics, const VerifyOptions& options) {
    spec.validate();
    if (!options.ignore_size_ceiling && spec.n > size_ceiling(spec)) {
        throw ResourceError("instance " + spec.to_string() + " exceeds the default size ceiling n <= " +
                            std::to_string(size_ceiling(spec)) + "; lift it explicitly");
    }
    VerifyReport r;
    r.spec = spec;
    r.semantics = semantics;
    r.order = options.order;
    r.nested_chern = options.nested_chern;

    auto t = Clock::now();
    PresentationOptions popts;
    popts.semantics = semantics;
    popts.nested_chern = options.nested_chern;
    const auto pres = build_presentation(spec, popts);
    r.relation_count = pres.relations().size();
    r.times.presentation_ms = elapsed_ms(t);

    t = Clock::now();
    DecompositionOptions dopts;
    dopts.experimental = options.experimental;
    const auto summands = decomposition_summands(spec, dopts);
    r.ranks_decomposition = poincare_from_summands(spec, summands);
    r.times.decomposition_ms = elapsed_ms(t);

    try {
        t = Clock::now();
        const auto polys = pres.polynomials();
        BuchbergerOptions bopts;
        bopts.pair_budget = options.pair_budget;
        const auto gb = buchberger(polys, boundary_first_order(pres, options.order), bopts);
        r.basis_size = gb.size();
        r.times.groebner_ms = elapsed_ms(t);
        t = Clock::now();
        if (is_artinian(gb)) {
            r.ranks_presentation = hilbert_series(gb);
        } else {
            r.ranks_presentation = hilbert_function(gb, spec.dimension() + 1);
            r.error = "quotient is not Artinian";
        }
        r.times.hilbert_ms = elapsed_ms(t);
    } catch (const ResourceError& e) {
        r.error = std::string("budget exhausted: ") + e.what();
    }

    const auto& p = r.ranks_presentation;
    r.equal = r.error.empty() && p == r.ranks_decomposition;
    r.palindromic = p.is_palindromic();
    r.top_rank_one = p.top_degree() == spec.dimension() && p[static_cast<std::size_t>(spec.dimension())] == 1;
    r.degree_zero_one = p[0] == 1;
    return r;
}

}  // namespace

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << spec.to_string() << " semantics=" << semantics_name(semantics) << " order=" << order_name(order);
    if (nested_chern) os << " nested-chern";
    os << '\n';
    os << "  presentation:  " << ranks_presentation.to_string() << "  (" << relation_count << " relations, basis "
       << basis_size << ")\n";
    os << "  decomposition: " << ranks_decomposition.to_string() << '\n';
    os << "  equal=" << (equal ? "yes" : "no") << " palindromic=" << (palindromic ? "yes" : "no")
       << " top_rank_one=" << (top_rank_one ? "yes" : "no") << " degree_zero_one=" << (degree_zero_one ? "yes" : "no")
       << '\n';
    if (!error.empty()) os << "  error: " << error << '\n';
    os.precision(3);
    os << std::fixed << "  time: presentation " << times.presentation_ms << " ms, groebner " << times.groebner_ms
       << " ms, hilbert " << times.hilbert_ms << " ms, decomposition " << times.decomposition_ms << " ms\n";
    os << "  verdict: " << (passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["spec"] = spec_json(spec);
    j["semantics"] = semantics_name(semantics);
    j["order"] = order_name(order);
    j["nested_chern"] = nested_chern;
    j["ranks_presentation"] = rank_vector_to_json(ranks_presentation);
    j["ranks_decomposition"] = rank_vector_to_json(ranks_decomposition);
    j["equal"] = equal;
    j["palindromic"] = palindromic;
    j["top_rank_one"] = top_rank_one;
    j["degree_zero_one"] = degree_zero_one;
    j["relation_count"] = relation_count;
    j["basis_size"] = basis_size;
    j["error"] = error;
    j["runtime_ms"] = {{"presentation", times.presentation_ms},
                       {"groebner", times.groebner_ms},
                       {"hilbert", times.hilbert_ms},
                       {"decomposition", times.decomposition_ms}};
    j["passed"] = passed();
    return j;
}

RankVector presentation_ranks(const RingPresentation& pres, OrderKind order, const BuchbergerOptions& options) {
    const auto polys = pres.polynomials();
    return hilbert_series(buchberger(polys, boundary_first_order(pres, order), options));
}

VerifyReport verify_space(const GeometrySpec& spec, OverlapSemantics semantics, const VerifyOptions& options) {
    return run(spec, semantics, options);
}

VerifyReport fm_degeneration(const GeometrySpec& spec, const VerifyOptions& options) {
    if (spec.c != 0) throw ArgumentError("the Fulton–MacPherson degeneration needs codim 0");
    GeometrySpec s = spec;
    s.space = Space::Distinct;
    return run(s, OverlapSemantics::Incomparable, options);
}

nlohmann::ordered_json SymmetryReport::to_json() const {
    return {{"schema", 1}, {"invariant", invariant}, {"permutations_checked", permutations_checked},
            {"failures", failures}};
}

SymmetryReport symmetry_audit(const RingPresentation& pres, const VerifyOptions& options) {
    SymmetryReport report;
    const int n = pres.spec().n;
    if (n > 4) throw ResourceError("symmetry audit is limited to n <= 4");
    BuchbergerOptions bopts;
    bopts.pair_budget = options.pair_budget;
    const TermOrder order = boundary_first_order(pres, options.order);
    const auto base_polys = pres.polynomials();
    const auto base = buchberger(base_polys, order, bopts);
    const int top = pres.spec().dimension() + 1;
    const bool artinian = is_artinian(base);
    if (!artinian) {
        report.invariant = false;
        report.failures.push_back("presentation quotient is not Artinian");
    }
    const RankVector base_hf = artinian ? hilbert_function(base, top) : RankVector{};
    for (const auto& sigma : all_permutations(n)) {
        ++report.permutations_checked;
        const auto moved = apply_permutation(pres, sigma);
        const auto moved_polys = moved.polynomials();
        const auto gb = buchberger(moved_polys, order, bopts);
        std::string label = "σ=(";
        for (std::size_t i = 0; i < sigma.size(); ++i) label += (i ? "," : "") + std::to_string(sigma[i]);
        label += ")";
        if (!(gb == base)) {
            report.invariant = false;
            report.failures.push_back(label + ": ideal not invariant");
        }
        if (artinian && (!is_artinian(gb) || !(hilbert_function(gb, top) == base_hf))) {
            report.invariant = false;
            report.failures.push_back(label + ": Hilbert function changed");
        }
    }
    return report;
}

SymmetryReport symmetry_audit(const GeometrySpec& spec, OverlapSemantics semantics, const VerifyOptions& options) {
    PresentationOptions popts;
    popts.semantics = semantics;
    popts.nested_chern = options.nested_chern;
    auto report = symmetry_audit(build_presentation(spec, popts), options);
    DecompositionOptions dopts;
    dopts.experimental = options.experimental;
    const auto summands = decomposition_summands(spec, dopts);
    const auto base = summand_keys(summands, identity_permutation(spec.n));
    for (const auto& sigma : all_permutations(spec.n)) {
        if (summand_keys(summands, sigma) != base) {
            report.invariant = false;
            report.failures.push_back("summand multiset not invariant");
            break;
        }
    }
    return report;
}

std::string DiscriminationReport::to_text() const {
    std::ostringstream os;
    os << "overlap semantics discrimination, brackets space n=4 m=" << m << '\n';
    os << "  decomposition:           " << incomparable.ranks_decomposition.to_string() << '\n';
    os << "  incomparable semantics:  " << incomparable.ranks_presentation.to_string()
       << (incomparable.equal ? "  matches" : "  differs") << '\n';
    os << "  standard semantics:      " << standard.ranks_presentation.to_string()
       << (standard.equal ? "  matches" : "  differs") << '\n';
    os << "  verdict: " << (verdict ? semantics_name(*verdict) : std::string("none")) << '\n';
    os << "  finding: " << finding << '\n';
    return os.str();
}

nlohmann::ordered_json DiscriminationReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["m"] = m;
    j["incomparable"] = incomparable.to_json();
    j["standard"] = standard.to_json();
    j["verdict"] = verdict ? nlohmann::ordered_json(semantics_name(*verdict)) : nlohmann::ordered_json(nullptr);
    j["degree_two_excess"] = degree_two_excess;
    j["finding"] = finding;
    return j;
}

DiscriminationReport semantics_discriminate(int m, const VerifyOptions& options) {
    if (m != 1 && !options.ignore_size_ceiling) {
        throw ResourceError("semantics discrimination runs at m = 1 unless the size ceiling is lifted");
    }
    const GeometrySpec spec{m, 4, 1, Space::Brackets};
    VerifyOptions opts = options;
    opts.ignore_size_ceiling = true;
    DiscriminationReport r;
    r.m = m;
    r.incomparable = verify_space(spec, OverlapSemantics::Incomparable, opts);
    r.standard = verify_space(spec, OverlapSemantics::Standard, opts);
    const auto& target = r.incomparable.ranks_decomposition;
    if (r.incomparable.equal != r.standard.equal) {
        r.verdict = r.incomparable.equal ? OverlapSemantics::Incomparable : OverlapSemantics::Standard;
        const auto& loser = r.incomparable.equal ? r.standard : r.incomparable;
        r.degree_two_excess = loser.ranks_presentation[2] - target[2];
        r.finding = semantics_name(*r.verdict) + " semantics reproduces the decomposition; the other differs by " +
                    std::to_string(r.degree_two_excess) + " in degree 2";
    } else {
        r.degree_two_excess = r.standard.ranks_presentation[2] - r.incomparable.ranks_presentation[2];
        r.finding = std::string("inconsistency: ") + (r.incomparable.equal ? "both" : "neither") +
                    " semantics reproduce the decomposition " + target.to_string() + " (incomparable " +
                    r.incomparable.ranks_presentation.to_string() + ", standard " +
                    r.standard.ranks_presentation.to_string() + "; standard minus incomparable in degree 2 = " +
                    std::to_string(r.degree_two_excess) + ")";
    }
    return r;
}

}  // namespace fmchow
