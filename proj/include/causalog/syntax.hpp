// Concrete syntax: parser and deterministic printer for causal terms and
// causal logic programs.
//
// Term grammar, loosest binding first ('.' written for application):
//     term   := sum
//     sum    := prod ('+' prod)*
//     prod   := app ('*' app)*
//     app    := atomic ('.' atomic)*
//     atomic := label | '0' | '1' | '(' term ')'
//
// Program syntax is ASP-style. A rule is written
//     [label ':'] head ':-' body '.'
// with facts `[label ':'] atom '.'` and constraints `[label ':'] ':-' body
// '.'`; `body` is a comma list of `atom` or `not atom`; `%` starts a line
// comment. A rule label is a single label token or any parenthesized term;
// an omitted label means the constant 1.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "causalog/semantics.hpp"
#include "causalog/term.hpp"

namespace causalog {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// One parsed rule with its source position (1-based, at the first token).
struct SourceRule {
    Rule rule;
    int line = 0;
    int column = 0;
};

struct SourceProgram {
    std::vector<SourceRule> rules;
};

/// Parses a standalone causal term. Throws ParseError on malformed input.
Term parseTerm(std::string_view text);

/// Prints a term with minimal parentheses under the precedence table.
/// Parsing the result reproduces the term structurally (singleton sums and
/// products collapse to their only member).
std::string printTerm(const Term& term);

/// Parses a program file. Throws ParseError on malformed input, `not` in a
/// head, or a disjunctive head.
SourceProgram parseProgram(std::string_view text);

/// Strips source positions and builds the semantic rule set.
Program toProgram(const SourceProgram& source);

}  // namespace causalog
