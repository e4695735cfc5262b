#include "causalog/syntax.hpp"

#include <cctype>
#include <sstream>

namespace causalog {

namespace {

enum class TokenType {
    Ident,
    Zero,
    One,
    Not,
    Plus,
    Star,
    Dot,
    Comma,
    Colon,
    Arrow,  // ":-"
    LParen,
    RParen,
    End,
};

struct Token {
    TokenType type;
    std::string text;
    int line;
    int column;
};

const char* describe(TokenType type) {
    switch (type) {
        case TokenType::Ident: return "identifier";
        case TokenType::Zero: return "'0'";
        case TokenType::One: return "'1'";
        case TokenType::Not: return "'not'";
        case TokenType::Plus: return "'+'";
        case TokenType::Star: return "'*'";
        case TokenType::Dot: return "'.'";
        case TokenType::Comma: return "','";
        case TokenType::Colon: return "':'";
        case TokenType::Arrow: return "':-'";
        case TokenType::LParen: return "'('";
        case TokenType::RParen: return "')'";
        case TokenType::End: return "end of input";
    }
    return "token";
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        int tokLine = line;
        int tokColumn = column;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                advance(1);
            std::string word(text.substr(start, i - start));
            TokenType type = word == "not" ? TokenType::Not : TokenType::Ident;
            tokens.push_back({type, std::move(word), tokLine, tokColumn});
            continue;
        }
        if (c == '0' || c == '1') {
            // Reject multi-digit numerals outright; only the two constants
            // exist.
            if (i + 1 < text.size() &&
                std::isalnum(static_cast<unsigned char>(text[i + 1]))) {
                throw ParseError(tokLine, tokColumn,
                                 std::string("unknown token starting with '") + c + "'");
            }
            tokens.push_back({c == '0' ? TokenType::Zero : TokenType::One,
                              std::string(1, c), tokLine, tokColumn});
            advance(1);
            continue;
        }
        if (c == ':') {
            if (i + 1 < text.size() && text[i + 1] == '-') {
                tokens.push_back({TokenType::Arrow, ":-", tokLine, tokColumn});
                advance(2);
            } else {
                tokens.push_back({TokenType::Colon, ":", tokLine, tokColumn});
                advance(1);
            }
            continue;
        }
        TokenType type;
        switch (c) {
            case '+': type = TokenType::Plus; break;
            case '*': type = TokenType::Star; break;
            case '.': type = TokenType::Dot; break;
            case ',': type = TokenType::Comma; break;
            case '(': type = TokenType::LParen; break;
            case ')': type = TokenType::RParen; break;
            default:
                throw ParseError(tokLine, tokColumn,
                                 std::string("unknown token '") + c + "'");
        }
        tokens.push_back({type, std::string(1, c), tokLine, tokColumn});
        advance(1);
    }
    tokens.push_back({TokenType::End, "", line, column});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t index = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[index];
    }

    const Token& next() {
        const Token& token = tokens_[pos_];
        if (token.type != TokenType::End)
            ++pos_;
        return token;
    }

    Token expect(TokenType type) {
        const Token& token = peek();
        if (token.type != type)
            fail(token, std::string("expected ") + describe(type));
        return next();
    }

    bool accept(TokenType type) {
        if (peek().type != type)
            return false;
        next();
        return true;
    }

    [[noreturn]] static void fail(const Token& token, const std::string& what) {
        std::ostringstream msg;
        msg << what << ", found " << describe(token.type);
        if (token.type == TokenType::Ident)
            msg << " '" << token.text << "'";
        throw ParseError(token.line, token.column, msg.str());
    }

    Term parseTerm() {
        std::vector<Term> addends;
        addends.push_back(parseProd());
        while (accept(TokenType::Plus))
            addends.push_back(parseProd());
        return addends.size() == 1 ? std::move(addends.front())
                                   : Term::sum(std::move(addends));
    }

    bool atEnd() const { return peek().type == TokenType::End; }

private:
    Term parseProd() {
        std::vector<Term> factors;
        factors.push_back(parseApp());
        while (accept(TokenType::Star))
            factors.push_back(parseApp());
        return factors.size() == 1 ? std::move(factors.front())
                                   : Term::product(std::move(factors));
    }

    Term parseApp() {
        Term term = parseAtomic();
        while (accept(TokenType::Dot))
            term = Term::app(std::move(term), parseAtomic());
        return term;
    }

    Term parseAtomic() {
        const Token& token = peek();
        switch (token.type) {
            case TokenType::Ident:
                return Term::label(next().text);
            case TokenType::Zero:
                next();
                return Term::zero();
            case TokenType::One:
                next();
                return Term::one();
            case TokenType::LParen: {
                next();
                Term inner = parseTerm();
                expect(TokenType::RParen);
                return inner;
            }
            default:
                fail(token, "expected a term");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

class ProgramParser {
public:
    explicit ProgramParser(std::string_view text) : parser_(text) {}

    SourceProgram parse() {
        SourceProgram program;
        while (!parser_.atEnd())
            program.rules.push_back(parseRule());
        return program;
    }

private:
    SourceRule parseRule() {
        const Token& first = parser_.peek();
        SourceRule source;
        source.line = first.line;
        source.column = first.column;
        source.rule.label = parseOptionalLabel();

        if (parser_.accept(TokenType::Arrow)) {
            parseBody(source.rule);
        } else {
            const Token& headToken = parser_.peek();
            if (headToken.type == TokenType::Not)
                Parser::fail(headToken, "negation is not allowed in a rule head");
            if (headToken.type != TokenType::Ident)
                Parser::fail(headToken, "expected a rule head or ':-'");
            source.rule.head = parser_.next().text;
            if (parser_.accept(TokenType::Arrow))
                parseBody(source.rule);
        }
        parser_.expect(TokenType::Dot);
        return source;
    }

    // A rule label is a bare label, a bare constant, or any parenthesized
    // term, each followed by ':'. Heads never start with '(' so the paren
    // form is unambiguous.
    Term parseOptionalLabel() {
        const Token& token = parser_.peek();
        if (token.type == TokenType::LParen) {
            parser_.next();
            Term label = parser_.parseTerm();
            parser_.expect(TokenType::RParen);
            parser_.expect(TokenType::Colon);
            return label;
        }
        if (parser_.peek(1).type == TokenType::Colon) {
            Term label = Term::one();
            switch (token.type) {
                case TokenType::Ident: label = Term::label(token.text); break;
                case TokenType::Zero: label = Term::zero(); break;
                case TokenType::One: label = Term::one(); break;
                default:
                    Parser::fail(token, "expected a rule label");
            }
            parser_.next();
            parser_.next();
            return label;
        }
        if (token.type == TokenType::Zero || token.type == TokenType::One)
            Parser::fail(token, "expected a rule label followed by ':'");
        return Term::one();
    }

    void parseBody(Rule& rule) {
        do {
            bool negated = parser_.accept(TokenType::Not);
            const Token& token = parser_.peek();
            if (token.type != TokenType::Ident)
                Parser::fail(token, negated ? "expected an atom after 'not'"
                                            : "expected a body literal");
            const std::string& atom = parser_.next().text;
            (negated ? rule.bodyNeg : rule.bodyPos).push_back(atom);
        } while (parser_.accept(TokenType::Comma));
    }

    Parser parser_;
};

enum class Precedence { Sum = 0, Product = 1, App = 2 };

void printInto(const Term& term, std::ostream& out);

const Term& collapseSingletons(const Term& term) {
    const Term* t = &term;
    while ((t->kind() == Term::Kind::Sum || t->kind() == Term::Kind::Product) &&
           t->children().size() == 1)
        t = &t->children().front();
    return *t;
}

void printChild(const Term& child, std::ostream& out, Precedence parent, bool structural) {
    const Term& term = collapseSingletons(child);
    bool parens = false;
    switch (term.kind()) {
        case Term::Kind::Label:
            break;
        case Term::Kind::Sum:
            parens = !term.children().empty() &&
                     (parent > Precedence::Sum || (structural && parent == Precedence::Sum));
            break;
        case Term::Kind::Product:
            parens = !term.children().empty() &&
                     (parent > Precedence::Product ||
                      (structural && parent == Precedence::Product));
            break;
        case Term::Kind::App:
            parens = structural && parent == Precedence::App;
            break;
    }
    if (parens)
        out << '(';
    printInto(term, out);
    if (parens)
        out << ')';
}

void printInto(const Term& term, std::ostream& out) {
    switch (term.kind()) {
        case Term::Kind::Label:
            out << term.labelName();
            return;
        case Term::Kind::Sum: {
            if (term.children().empty()) {
                out << '0';
                return;
            }
            bool first = true;
            for (const Term& child : term.children()) {
                if (!first)
                    out << " + ";
                first = false;
                printChild(child, out, Precedence::Sum, /*structural=*/true);
            }
            return;
        }
        case Term::Kind::Product: {
            if (term.children().empty()) {
                out << '1';
                return;
            }
            bool first = true;
            for (const Term& child : term.children()) {
                if (!first)
                    out << '*';
                first = false;
                printChild(child, out, Precedence::Product, /*structural=*/true);
            }
            return;
        }
        case Term::Kind::App:
            // Application is left-associative, so only a right-nested
            // application needs parentheses.
            printChild(term.lhs(), out, Precedence::App, /*structural=*/false);
            out << '.';
            printChild(term.rhs(), out, Precedence::App, /*structural=*/true);
            return;
    }
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

Term parseTerm(std::string_view text) {
    Parser parser(text);
    if (parser.atEnd())
        throw ParseError(parser.peek().line, parser.peek().column, "empty term");
    Term term = parser.parseTerm();
    if (!parser.atEnd())
        Parser::fail(parser.peek(), "expected end of input");
    return term;
}

std::string printTerm(const Term& term) {
    std::ostringstream out;
    // Singleton sums and products print as their only member.
    printInto(collapseSingletons(term), out);
    return out.str();
}

SourceProgram parseProgram(std::string_view text) {
    return ProgramParser(text).parse();
}

Program toProgram(const SourceProgram& source) {
    std::vector<Rule> rules;
    rules.reserve(source.rules.size());
    for (const SourceRule& sourceRule : source.rules)
        rules.push_back(sourceRule.rule);
    return Program(std::move(rules));
}

}  // namespace causalog
