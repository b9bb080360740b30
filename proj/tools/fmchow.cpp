#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmchow/decomposition.hpp"
#include "fmchow/errors.hpp"
#include "fmchow/groebner.hpp"
#include "fmchow/polynomial_io.hpp"
#include "fmchow/presentation.hpp"
#include "fmchow/subsets.hpp"
#include "fmchow/verifier.hpp"

using namespace fmchow;
using json = nlohmann::ordered_json;

namespace {

struct Settings {
    std::string space = "brackets";
    int m = 1;
    int n = 2;
    int codim = 1;
    std::string semantics = "incomparable";
    std::string format = "text";
    std::string order = "degrevlex";
    std::size_t budget = BuchbergerOptions{}.pair_budget;
    bool experimental = false;
    bool nested_chern = false;
    bool no_ceiling = false;
    std::string file;

    GeometrySpec spec() const {
        GeometrySpec s{m, n, codim, parse_space(space)};
        s.validate();
        return s;
    }
    OrderKind order_kind() const { return order == "deglex" ? OrderKind::DegLex : OrderKind::DegRevLex; }
    bool as_json() const { return format == "json"; }
    PresentationOptions presentation_options() const {
        PresentationOptions o;
        o.semantics = parse_semantics(semantics);
        o.nested_chern = nested_chern;
        return o;
    }
    VerifyOptions verify_options() const {
        VerifyOptions o;
        o.order = order_kind();
        o.pair_budget = budget;
        o.nested_chern = nested_chern;
        o.experimental = experimental;
        o.ignore_size_ceiling = no_ceiling;
        return o;
    }
    DecompositionOptions decomposition_options() const {
        DecompositionOptions o;
        o.experimental = experimental;
        return o;
    }
};

json spec_json(const GeometrySpec& s) {
    return {{"m", s.m}, {"n", s.n}, {"codim", s.c}, {"space", space_name(s.space)}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_betti(const Settings& st) {
    const auto spec = st.spec();
    const auto summands = decomposition_summands(spec, st.decomposition_options());
    const auto ranks = poincare_from_summands(spec, summands);
    if (st.as_json()) {
        emit({{"schema", 1}, {"spec", spec_json(spec)}, {"ranks", rank_vector_to_json(ranks)}});
    } else {
        std::cout << ranks.to_string() << '\n';
    }
    return 0;
}

int cmd_hilbert(const Settings& st) {
    const auto spec = st.spec();
    BuchbergerOptions b;
    b.pair_budget = st.budget;
    const auto ranks = presentation_ranks(build_presentation(spec, st.presentation_options()), st.order_kind(), b);
    if (st.as_json()) {
        emit({{"schema", 1}, {"spec", spec_json(spec)}, {"semantics", st.semantics}, {"ranks", rank_vector_to_json(ranks)}});
    } else {
        std::cout << ranks.to_string() << '\n';
    }
    return 0;
}

int cmd_presentation(const Settings& st) {
    const auto pres = build_presentation(st.spec(), st.presentation_options());
    if (st.as_json()) {
        emit(pres.to_json());
    } else {
        std::cout << pres.to_text();
    }
    return 0;
}

int cmd_motive(const Settings& st) {
    const auto spec = st.spec();
    const auto summands = decomposition_summands(spec, st.decomposition_options());
    const auto motive = motive_expression(spec, summands);
    if (st.as_json()) {
        emit({{"schema", 1}, {"spec", spec_json(spec)}, {"motive", motive.to_string()}, {"terms", motive.to_json()},
              {"summands", summands_to_json(spec, summands)}});
    } else {
        std::cout << motive.to_string() << '\n';
    }
    return 0;
}

int cmd_nests(const Settings& st) {
    const auto nests = enumerate_nests(st.n);
    if (st.as_json()) {
        json arr = json::array();
        for (const auto& nest : nests) arr.push_back(nest.to_string());
        emit({{"schema", 1}, {"n", st.n}, {"count", nests.size()}, {"nests", arr}});
    } else {
        for (const auto& nest : nests) std::cout << nest.to_string() << '\n';
    }
    return 0;
}

int cmd_chains(const Settings& st) {
    const auto chains = enumerate_chains(st.n, st.codim >= 2);
    if (st.as_json()) {
        json arr = json::array();
        for (const auto& c : chains) arr.push_back(c.to_string());
        emit({{"schema", 1}, {"n", st.n}, {"codim", st.codim}, {"count", chains.size()}, {"chains", arr}});
    } else {
        for (const auto& c : chains) std::cout << c.to_string() << '\n';
    }
    return 0;
}

int cmd_verify(const Settings& st) {
    const auto report = verify_space(st.spec(), parse_semantics(st.semantics), st.verify_options());
    if (st.as_json()) {
        emit(report.to_json());
    } else {
        std::cout << report.to_text();
    }
    return report.passed() ? 0 : 1;
}

int cmd_discriminate(const Settings& st) {
    const auto report = semantics_discriminate(st.m, st.verify_options());
    if (st.as_json()) {
        emit(report.to_json());
    } else {
        std::cout << report.to_text();
    }
    return report.consistent() ? 0 : 1;
}

int cmd_multiply(const Settings& st) {
    std::string text;
    if (st.file.empty() || st.file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(st.file);
        if (!in) throw ArgumentError("cannot open " + st.file);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    std::vector<std::string> exprs;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) exprs.push_back(line);
    }
    if (exprs.size() != 2) throw ArgumentError("multiply expects exactly two non-empty lines");

    const auto pres = build_presentation(st.spec(), st.presentation_options());
    const auto polys = pres.polynomials();
    BuchbergerOptions b;
    b.pair_budget = st.budget;
    const auto gb = buchberger(polys, boundary_first_order(pres, st.order_kind()), b);
    const auto f = parse_polynomial(exprs[0], pres.table());
    const auto g = parse_polynomial(exprs[1], pres.table());
    const auto product = normal_form(f * g, gb);
    if (st.as_json()) {
        emit({{"schema", 1}, {"spec", spec_json(pres.spec())}, {"left", polynomial_to_json(f)},
              {"right", polynomial_to_json(g)}, {"product", polynomial_to_json(product)}});
    } else {
        std::cout << product.to_string() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chow rings of relative Fulton–MacPherson compactifications of P^m"};
    app.require_subcommand(1);
    Settings st;

    auto add_spec = [&](CLI::App* sub, bool with_semantics) {
        sub->add_option("--space", st.space, "brackets | distinct")->check(CLI::IsMember({"brackets", "distinct"}));
        sub->add_option("--m", st.m, "dimension of X = P^m")->check(CLI::PositiveNumber);
        sub->add_option("--n", st.n, "number of points")->check(CLI::PositiveNumber);
        sub->add_option("--codim", st.codim, "codimension of D (0 = empty)")->check(CLI::NonNegativeNumber);
        if (with_semantics) {
            sub->add_option("--semantics", st.semantics, "x·x vanishing rule")
                ->check(CLI::IsMember({"standard", "incomparable"}));
            sub->add_option("--order", st.order, "term order")->check(CLI::IsMember({"degrevlex", "deglex"}));
            sub->add_option("--budget", st.budget, "S-pair budget for Buchberger");
            sub->add_flag("--nested-chern", st.nested_chern, "add the nested Chern relations (diagnostic)");
        }
        sub->add_flag("--experimental", st.experimental, "allow the codim >= 2 distinct-space decomposition");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", st.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    };

    std::map<std::string, int (*)(const Settings&)> verbs;
    auto betti = app.add_subcommand("betti", "ranks from the additive decomposition");
    add_spec(betti, false);
    auto hilbert = app.add_subcommand("hilbert", "ranks from the ring presentation");
    add_spec(hilbert, true);
    auto presentation = app.add_subcommand("presentation", "dump generators and relations");
    add_spec(presentation, true);
    auto motive = app.add_subcommand("motive", "formal motive sum");
    add_spec(motive, false);
    auto nests = app.add_subcommand("nests", "enumerate nests on {1..n}");
    nests->add_option("--n", st.n, "ground set size")->check(CLI::PositiveNumber);
    auto chains = app.add_subcommand("chains", "enumerate chains on {1..n}");
    chains->add_option("--n", st.n, "ground set size")->check(CLI::PositiveNumber);
    chains->add_option("--codim", st.codim, "codim >= 2 admits singleton minima")->check(CLI::NonNegativeNumber);
    auto verify = app.add_subcommand("verify", "compare presentation and decomposition ranks");
    add_spec(verify, true);
    verify->add_flag("--no-ceiling", st.no_ceiling, "lift the default instance size ceiling");
    auto discriminate = app.add_subcommand("discriminate", "decide the x·x semantics at n = 4");
    discriminate->add_option("--m", st.m, "dimension of X")->check(CLI::PositiveNumber);
    discriminate->add_option("--order", st.order, "term order")->check(CLI::IsMember({"degrevlex", "deglex"}));
    discriminate->add_option("--budget", st.budget, "S-pair budget for Buchberger");
    discriminate->add_flag("--nested-chern", st.nested_chern, "add the nested Chern relations (diagnostic)");
    discriminate->add_flag("--no-ceiling", st.no_ceiling, "allow m > 1");
    auto multiply = app.add_subcommand("multiply", "normal form of a product of two classes");
    add_spec(multiply, true);
    multiply->add_option("--file", st.file, "file with two expressions, one per line (default stdin)");
    for (auto* sub : {betti, hilbert, presentation, motive, nests, chains, verify, discriminate, multiply}) add_format(sub);

    verbs = {{"betti", cmd_betti},       {"hilbert", cmd_hilbert},   {"presentation", cmd_presentation},
             {"motive", cmd_motive},     {"nests", cmd_nests},       {"chains", cmd_chains},
             {"verify", cmd_verify},     {"discriminate", cmd_discriminate}, {"multiply", cmd_multiply}};

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        for (const auto& [name, fn] : verbs) {
            if (app.got_subcommand(name)) return fn(st);
        }
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedFeature& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
