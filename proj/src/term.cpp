#include "causalog/term.hpp"

#include <algorithm>

namespace causalog {

Term Term::label(Label name) {
    return Term(Kind::Label, std::move(name), {});
}

Term Term::sum(std::vector<Term> children) {
    return Term(Kind::Sum, {}, std::move(children));
}

Term Term::product(std::vector<Term> children) {
    return Term(Kind::Product, {}, std::move(children));
}

Term Term::app(Term lhs, Term rhs) {
    std::vector<Term> children;
    children.reserve(2);
    children.push_back(std::move(lhs));
    children.push_back(std::move(rhs));
    return Term(Kind::App, {}, std::move(children));
}

std::size_t Term::size() const {
    std::size_t n = 1;
    for (const Term& child : children_)
        n += child.size();
    return n;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
    if (auto cmp = kind_ <=> other.kind_; cmp != 0)
        return cmp;
    if (auto cmp = label_ <=> other.label_; cmp != 0)
        return cmp;
    return std::lexicographical_compare_three_way(
        children_.begin(), children_.end(), other.children_.begin(), other.children_.end());
}

CausalValue evaluate(const Term& term) {
    switch (term.kind()) {
        case Term::Kind::Label:
            return CausalValue::ofLabel(term.labelName());
        case Term::Kind::Sum: {
            CausalValue acc = CausalValue::zero();
            for (const Term& child : term.children())
                acc = add(acc, evaluate(child));
            return acc;
        }
        case Term::Kind::Product: {
            CausalValue acc = CausalValue::one();
            for (const Term& child : term.children())
                acc = mul(acc, evaluate(child));
            return acc;
        }
        case Term::Kind::App:
            return app(evaluate(term.lhs()), evaluate(term.rhs()));
    }
    return CausalValue::zero();
}

namespace {

bool isChainTree(const Term& term) {
    if (term.kind() == Term::Kind::Label)
        return true;
    if (term.kind() == Term::Kind::App)
        return isChainTree(term.lhs()) && isChainTree(term.rhs());
    return false;
}

Term chainToTerm(const Chain& chain) {
    if (chain.isIdentity())
        return Term::one();
    Term acc = Term::label(chain.labels().front());
    for (std::size_t i = 1; i < chain.length(); ++i)
        acc = Term::app(std::move(acc), Term::label(chain.labels()[i]));
    return acc;
}

Term causeToTerm(const Cause& cause) {
    if (cause.isIdentity())
        return Term::one();
    if (cause.size() == 1)
        return chainToTerm(cause.chains().front());
    std::vector<Term> factors;
    factors.reserve(cause.size());
    for (const Chain& chain : cause.chains())
        factors.push_back(chainToTerm(chain));
    return Term::product(std::move(factors));
}

}  // namespace

bool isNormal(const Term& term) {
    switch (term.kind()) {
        case Term::Kind::Label:
            return true;
        case Term::Kind::Sum:
        case Term::Kind::Product:
            return std::all_of(term.children().begin(), term.children().end(),
                               [](const Term& child) { return isNormal(child); });
        case Term::Kind::App:
            return isChainTree(term);
    }
    return false;
}

Term canonicalTerm(const CausalValue& value) {
    if (value.isZero())
        return Term::zero();
    if (value.size() == 1)
        return causeToTerm(value.causes().front());
    std::vector<Term> addends;
    addends.reserve(value.size());
    for (const Cause& cause : value.causes())
        addends.push_back(causeToTerm(cause));
    return Term::sum(std::move(addends));
}

Term replaceLabel(const Term& term, const Label& from, const std::optional<Label>& to) {
    switch (term.kind()) {
        case Term::Kind::Label:
            if (term.labelName() != from)
                return term;
            return to ? Term::label(*to) : Term::one();
        case Term::Kind::Sum:
        case Term::Kind::Product: {
            std::vector<Term> children;
            children.reserve(term.children().size());
            for (const Term& child : term.children())
                children.push_back(replaceLabel(child, from, to));
            return term.kind() == Term::Kind::Sum ? Term::sum(std::move(children))
                                                  : Term::product(std::move(children));
        }
        case Term::Kind::App:
            return Term::app(replaceLabel(term.lhs(), from, to),
                             replaceLabel(term.rhs(), from, to));
    }
    return term;
}

}  // namespace causalog
