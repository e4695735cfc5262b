// Causal terms: the syntax trees valued in the causal algebra.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "causalog/algebra.hpp"

namespace causalog {

/// A finite syntax tree over labels with sum, product, and application
/// nodes. Sums and products are n-ary; the empty sum is 0, the empty
/// product 1. Application is binary and left-associative in concrete
/// syntax.
class Term {
public:
    enum class Kind { Label, Sum, Product, App };

    static Term label(Label name);
    static Term sum(std::vector<Term> children);
    static Term product(std::vector<Term> children);
    static Term app(Term lhs, Term rhs);
    static Term zero() { return sum({}); }
    static Term one() { return product({}); }

    Kind kind() const { return kind_; }
    const Label& labelName() const { return label_; }
    const std::vector<Term>& children() const { return children_; }
    const Term& lhs() const { return children_[0]; }
    const Term& rhs() const { return children_[1]; }

    bool isZero() const { return kind_ == Kind::Sum && children_.empty(); }
    bool isOne() const { return kind_ == Kind::Product && children_.empty(); }

    /// Number of nodes in the tree.
    std::size_t size() const;

    friend bool operator==(const Term&, const Term&) = default;
    std::strong_ordering operator<=>(const Term& other) const;

private:
    Term(Kind kind, Label label, std::vector<Term> children)
        : kind_(kind), label_(std::move(label)), children_(std::move(children)) {}

    Kind kind_ = Kind::Sum;
    Label label_;
    std::vector<Term> children_;
};

/// The valuation: maps a term to its canonical causal value. A label leaf
/// becomes the value of its unit chain; sums, products, and applications
/// map to the corresponding value operations.
CausalValue evaluate(const Term& term);

/// True when every application node joins chains (nested applications of
/// labels only) on both sides.
bool isNormal(const Term& term);

/// The canonical sum-of-products-of-chains term of a value. Singleton sums
/// and products collapse to their only member; evaluate(canonicalTerm(v))
/// == v.
Term canonicalTerm(const CausalValue& value);

/// Replaces every occurrence of label `from` by `to`; an empty `to` stands
/// for the constant 1.
Term replaceLabel(const Term& term, const Label& from, const std::optional<Label>& to);

}  // namespace causalog
