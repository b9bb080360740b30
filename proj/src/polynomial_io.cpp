#include "fmchow/polynomial_io.hpp"

#include <cctype>
#include <string>

#include "fmchow/errors.hpp"

namespace fmchow {

namespace {

class Parser {
public:
    Parser(std::string_view text, const TablePtr& table) : text_(text), table_(table) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ArgumentError("cannot parse polynomial at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression() {
        Polynomial acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                Polynomial d = unary();
                if (d.is_zero() || d.weighted_degree() != 0) fail("division by a non-constant or zero");
                acc = acc.scaled(1 / d.leading_term().coeff);
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (e > 255) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
            return Polynomial::constant(table_, Rational(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            const auto index = table_->index_of(name);
            if (!index) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return Polynomial::variable(table_, *index);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const TablePtr& table_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const TablePtr& table) { return Parser(text, table).parse(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
        throw ArgumentError("invalid rational '" + s + "'");
    }
    q.canonicalize();
    return q;
}

nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& t : p.terms()) {
        nlohmann::ordered_json exps = nlohmann::ordered_json::object();
        for (auto [i, e] : t.monomial.exponents()) exps[p.table()->name(i)] = e;
        out.push_back({{"coeff", t.coeff.get_str()}, {"exps", exps}});
    }
    return out;
}

Polynomial polynomial_from_json(const nlohmann::ordered_json& j, const TablePtr& table) {
    if (!j.is_array()) throw ArgumentError("polynomial JSON must be an array of terms");
    std::vector<Term> terms;
    for (const auto& t : j) {
        Monomial m;
        for (const auto& [name, e] : t.at("exps").items()) {
            const int v = e.get<int>();
            if (v < 0) throw ArgumentError("negative exponent in polynomial JSON");
            m.set(table->require(name), static_cast<unsigned>(v));
        }
        terms.push_back({m, parse_rational(t.at("coeff").get<std::string>())});
    }
    return Polynomial::from_terms(table, std::move(terms));
}

nlohmann::ordered_json rank_vector_to_json(const RankVector& r) { return r.ranks(); }

}  // namespace fmchow
