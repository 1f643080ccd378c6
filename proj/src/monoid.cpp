#include "cwres/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace cwres {

Multidegree::Multidegree(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_)
        if (e < 0) throw Error("negative exponent in multidegree");
}

int Multidegree::total() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Multidegree::divides(const Multidegree& other) const {
    if (size() != other.size())
        throw DimensionMismatch("multidegree lengths differ: " + std::to_string(size()) + " vs " +
                                std::to_string(other.size()));
    for (int i = 0; i < size(); ++i)
        if (exps_[static_cast<std::size_t>(i)] > other[i]) return false;
    return true;
}

Multidegree lcm(const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("lcm of multidegrees of lengths " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    std::vector<int> out(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
    return Multidegree(std::move(out));
}

bool graded_lex_less(const Multidegree& a, const Multidegree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.exponents() < b.exponents();
}

MonomialIdeal make_ideal(std::vector<std::string> variables, std::vector<Multidegree> generators) {
    if (generators.empty()) throw Error("monomial ideal needs at least one generator");
    const int n = static_cast<int>(variables.size());
    for (const auto& g : generators)
        if (g.size() != n)
            throw DimensionMismatch("generator length " + std::to_string(g.size()) +
                                    " does not match variable count " + std::to_string(n));

    std::sort(generators.begin(), generators.end(), GradedLexLess{});
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    // Drop any generator strictly divisible by another.
    std::vector<Multidegree> minimal;
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& h : generators)
            if (!(h == g) && h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    return MonomialIdeal{std::move(variables), std::move(minimal)};
}

namespace {

struct Parser {
    std::string_view text;
    const std::vector<std::string>& variables;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool consume(char c) {
        if (peek_is(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    int parse_variable() {
        skip_ws();
        if (pos >= text.size() || !ident_start(text[pos])) throw ParseError(pos, "variable");
        std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        std::string name(text.substr(start, pos - start));
        for (std::size_t i = 0; i < variables.size(); ++i)
            if (variables[i] == name) return static_cast<int>(i);
        throw UnknownVariable(start, name);
    }

    int parse_exponent() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(pos, "exponent");
        int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) throw ParseError(pos, "exponent below 10^6");
            ++pos;
        }
        return value;
    }

    Multidegree parse_term() {
        std::vector<int> exps(variables.size(), 0);
        while (true) {
            int var = parse_variable();
            int exp = 1;
            if (consume('^')) exp = parse_exponent();
            exps[static_cast<std::size_t>(var)] += exp;
            skip_ws();
            if (consume('*')) continue;  // explicit product
            if (pos < text.size() && ident_start(text[pos])) continue;  // implicit product
            break;
        }
        return Multidegree(std::move(exps));
    }
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, const std::vector<std::string>& variables) {
    Parser p{text, variables};
    bool parenthesized = p.consume('(');
    std::vector<Multidegree> gens;
    gens.push_back(p.parse_term());
    while (p.consume(',')) gens.push_back(p.parse_term());
    if (parenthesized && !p.consume(')')) throw ParseError(p.pos, "')'");
    if (!p.at_end()) throw ParseError(p.pos, "',' or end of input");
    return make_ideal(variables, std::move(gens));
}

std::string render_monomial(const MonomialIdeal& ideal, const Multidegree& m) {
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ideal.variables[static_cast<std::size_t>(i)];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    if (out.empty()) out = ideal.variables.empty() ? "1" : ideal.variables[0] + "^0";
    return out;
}

std::string render_ideal(const MonomialIdeal& ideal) {
    std::string out;
    for (const auto& g : ideal.generators) {
        if (!out.empty()) out += ", ";
        out += render_monomial(ideal, g);
    }
    return out;
}

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal) {
    // Closure of the generators under pairwise lcm equals the set of
    // lcms of all nonempty generator subsets.
    std::set<Multidegree, GradedLexLess> lattice(ideal.generators.begin(), ideal.generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Multidegree> current(lattice.begin(), lattice.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (lattice.insert(lcm(current[i], current[j])).second) grew = true;
    }
    return {lattice.begin(), lattice.end()};
}

bool contains_monomial(const MonomialIdeal& ideal, const Multidegree& m) {
    for (const auto& g : ideal.generators)
        if (g.divides(m)) return true;
    return false;
}

}  // namespace cwres
