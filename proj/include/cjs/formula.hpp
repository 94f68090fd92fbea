#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cjs/structure.hpp"

namespace cjs {

/// Term of L: 0, 1, variables, binary join.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Zero, One, Var, Join };
    Kind kind;
    std::string var;       // Kind::Var
    TermPtr left, right;   // Kind::Join

    static TermPtr zero();
    static TermPtr one();
    static TermPtr variable(std::string name);
    static TermPtr join(TermPtr l, TermPtr r);
};

/// Formula of L. The atom relation `=` is sugar for two-sided `<=`.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Rel { Leq, Contact, Eq };

struct Formula {
    enum class Kind { Atom, Not, And, Or, Implies, Iff };
    Kind kind;
    TermPtr lhs, rhs;           // Kind::Atom
    Rel rel = Rel::Leq;         // Kind::Atom
    FormulaPtr left, right;     // connectives (Not uses left only)

    static FormulaPtr atom(TermPtr l, Rel r, TermPtr rr);
    static FormulaPtr negation(FormulaPtr f);
    static FormulaPtr conjunction(FormulaPtr l, FormulaPtr r);
    static FormulaPtr disjunction(FormulaPtr l, FormulaPtr r);
    static FormulaPtr implication(FormulaPtr l, FormulaPtr r);
    static FormulaPtr equivalence(FormulaPtr l, FormulaPtr r);
};

/// Parse failure; offset is a byte position into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Grammar, ASCII syntax, loosest to tightest: <-> | -> (right assoc) | `|`
/// | & | ~ | atoms `t <= t`, `t C t`, `t = t`; terms use + and parentheses.
/// "C" is reserved; every other identifier is a variable.
FormulaPtr parse_formula(const std::string& text);

/// Precedence-aware printer; parse_formula(render(f)) rebuilds f.
std::string render(const FormulaPtr& f);
std::string render(const TermPtr& t);

/// Variable names in first-occurrence order.
std::vector<std::string> variables(const FormulaPtr& f);

/// Maps variable names to carrier elements; unmapped names denote zero.
using Valuation = std::map<std::string, int>;

int eval_term(const FiniteJoinStructure& s, const Valuation& v, const TermPtr& t);
bool eval_formula(const FiniteJoinStructure& s, const Valuation& v, const FormulaPtr& f);

/// Structural equality of ASTs.
bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

}  // namespace cjs
