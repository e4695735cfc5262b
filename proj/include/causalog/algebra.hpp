// Canonical antichain representation of the causal-value lattice.
//
// A Chain is a finite sequence of rule labels, one root-to-sink path of rule
// applications. A Cause is the set of minimal chains generating an order
// filter of chains: one joint justification (a proof tree, as its paths).
// A CausalValue is the set of minimal causes generating an order filter of
// causes: all alternative justifications of an atom.
//
// Values are kept canonical at all times: every Cause is an antichain under
// chain subsumption, every CausalValue an antichain under cause inclusion,
// and both are sorted under a fixed total order so equal values are
// representation-equal and printing is deterministic.

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace causalog {

using Label = std::string;

/// A finite sequence of labels. The empty chain stands for the identity 1
/// and never appears in parsed input; it exists as the neutral element of
/// concatenation.
class Chain {
public:
    Chain() = default;
    explicit Chain(std::vector<Label> labels) : labels_(std::move(labels)) {}
    Chain(std::initializer_list<Label> labels) : labels_(labels) {}

    const std::vector<Label>& labels() const { return labels_; }
    std::size_t length() const { return labels_.size(); }
    bool isIdentity() const { return labels_.empty(); }

    friend bool operator==(const Chain&, const Chain&) = default;

    /// Total order used everywhere a chain sequence must be deterministic:
    /// shorter chains first, ties broken lexicographically by label name.
    std::strong_ordering operator<=>(const Chain& other) const;

private:
    std::vector<Label> labels_;
};

/// chain_leq(x, y): y subsumes x, i.e. y can be formed by deleting labels
/// from x. The empty chain is above every chain. Fewer rule applications
/// means a stronger justification, so x <= y implies |x| >= |y|.
bool leq(const Chain& x, const Chain& y);

/// Concatenation x . y; the empty chain is a two-sided identity.
Chain concat(const Chain& x, const Chain& y);

/// One joint justification: the <=-minimal generators of an order filter of
/// chains. The default-constructed cause has no chains and represents 1
/// (the empty product, least element of the cause-inclusion order).
class Cause {
public:
    Cause() = default;

    /// Normalizes an arbitrary finite chain set into its antichain of
    /// minimal generators: a chain is dropped when it is a proper
    /// subsequence of another member. In particular the empty chain
    /// survives only when it is the sole member.
    static Cause fromChains(std::vector<Chain> chains);

    const std::vector<Chain>& chains() const { return chains_; }
    std::size_t size() const { return chains_.size(); }

    /// True for the empty generator set (the cause denoting 1).
    bool isIdentity() const { return chains_.empty(); }

    friend bool operator==(const Cause&, const Cause&) = default;
    std::strong_ordering operator<=>(const Cause& other) const;

private:
    std::vector<Chain> chains_;  // sorted antichain
};

/// cause_leq(c, d): the chain filter generated by c is contained in the one
/// generated by d; every chain of c must be a subsequence of some chain of
/// d. The identity cause is below every cause.
bool leq(const Cause& c, const Cause& d);

/// Cause-level application c . d: pairwise concatenation of generator
/// chains, re-minimized. The identity cause acts as a two-sided identity.
Cause app(const Cause& c, const Cause& d);

/// A set of alternative justifications: the inclusion-minimal generators of
/// an order filter of causes. The empty set is 0 (no justification); the
/// singleton holding the identity cause is 1.
class CausalValue {
public:
    CausalValue() = default;  // 0

    static CausalValue zero() { return CausalValue(); }
    static CausalValue one();

    /// The value of a single label: one cause made of one unit chain.
    static CausalValue ofLabel(const Label& label);

    /// The value generated by a single chain.
    static CausalValue ofChain(Chain chain);

    /// Canonicalizes an arbitrary finite cause set: causes are normalized,
    /// a cause holding only the empty chain is folded into the identity
    /// cause (both denote the empty product), and non-minimal causes are
    /// dropped.
    static CausalValue fromCauses(std::vector<Cause> causes);

    const std::vector<Cause>& causes() const { return causes_; }
    std::size_t size() const { return causes_.size(); }

    bool isZero() const { return causes_.empty(); }
    bool isOne() const { return causes_.size() == 1 && causes_.front().isIdentity(); }

    friend bool operator==(const CausalValue&, const CausalValue&) = default;
    std::strong_ordering operator<=>(const CausalValue& other) const;

private:
    std::vector<Cause> causes_;  // sorted antichain
};

/// Addition: union of the two value filters (alternative justifications).
CausalValue add(const CausalValue& v1, const CausalValue& v2);

/// Product: intersection of the two value filters (joint interaction);
/// computed as pairwise unions of generator causes.
CausalValue mul(const CausalValue& v1, const CausalValue& v2);

/// Application: distributes over the causes of both sides and concatenates
/// pairwise. 0 annihilates on either side, 1 is a two-sided identity.
CausalValue app(const CausalValue& v1, const CausalValue& v2);

/// value_leq(v1, v2): filter inclusion. Equivalent to add(v1,v2) == v2 and
/// to mul(v1,v2) == v1.
bool leq(const CausalValue& v1, const CausalValue& v2);

}  // namespace causalog
