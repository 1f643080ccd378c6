#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cwres/errors.hpp"

namespace cwres {

/// Exponent vector in N^n. The ambient variable count is fixed per ideal;
/// multidegrees are never resized implicitly.
class Multidegree {
public:
    Multidegree() = default;
    explicit Multidegree(std::vector<int> exponents);
    static Multidegree zero(int n) { return Multidegree(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(exps_.size()); }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }
    int total() const;

    /// Componentwise <=, i.e. x^this divides x^other.
    bool divides(const Multidegree& other) const;

    bool operator==(const Multidegree&) const = default;

private:
    std::vector<int> exps_;
};

/// Componentwise maximum. Throws DimensionMismatch on unequal lengths.
Multidegree lcm(const Multidegree& a, const Multidegree& b);

/// Total order: total degree first, then lexicographic on exponents.
bool graded_lex_less(const Multidegree& a, const Multidegree& b);

struct GradedLexLess {
    bool operator()(const Multidegree& a, const Multidegree& b) const {
        return graded_lex_less(a, b);
    }
};

/// Monomial ideal given by a minimal generating set. Generators are
/// duplicate-free, none divides another, sorted graded-lex ascending.
struct MonomialIdeal {
    std::vector<std::string> variables;
    std::vector<Multidegree> generators;

    int nvars() const { return static_cast<int>(variables.size()); }
};

/// Normalizes: drops duplicates and generators divisible by another,
/// sorts graded-lex. Throws on empty input or exponent length mismatch.
MonomialIdeal make_ideal(std::vector<std::string> variables, std::vector<Multidegree> generators);

/// Grammar: ideal = ['('] term (',' term)* [')'] ; term = factor (['*'] factor)* ;
/// factor = var ['^' uint]. Whitespace is insignificant.
/// Throws ParseError (with byte offset) or UnknownVariable.
MonomialIdeal parse_ideal(std::string_view text, const std::vector<std::string>& variables);

/// Inverse of parse_ideal up to normalization: parse(render(I)) == I.
std::string render_ideal(const MonomialIdeal& ideal);
std::string render_monomial(const MonomialIdeal& ideal, const Multidegree& m);

/// lcms of all nonempty generator subsets, deduplicated, sorted graded-lex.
std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal);

/// True iff some generator divides x^m.
bool contains_monomial(const MonomialIdeal& ideal, const Multidegree& m);

}  // namespace cwres
