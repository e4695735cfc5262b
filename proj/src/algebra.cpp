#include "causalog/algebra.hpp"

#include <algorithm>

namespace causalog {

namespace {

/// True when `needle` is a (not necessarily contiguous) subsequence of
/// `hay`. Greedy matching is exact for subsequence tests.
bool isSubsequence(const std::vector<Label>& needle, const std::vector<Label>& hay) {
    std::size_t i = 0;
    for (const Label& l : hay) {
        if (i == needle.size())
            break;
        if (l == needle[i])
            ++i;
    }
    return i == needle.size();
}

/// Sorts, deduplicates, and keeps the leq-minimal elements of `items`.
/// `below(a, b)` must implement the partial order's `a <= b`.
template <typename T, typename Leq>
std::vector<T> minimalElements(std::vector<T> items, Leq below) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    std::vector<T> kept;
    kept.reserve(items.size());
    for (const T& x : items) {
        bool dominated = false;
        for (const T& y : items) {
            if (y != x && below(y, x)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(x);
    }
    return kept;
}

}  // namespace

std::strong_ordering Chain::operator<=>(const Chain& other) const {
    if (auto cmp = labels_.size() <=> other.labels_.size(); cmp != 0)
        return cmp;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (auto cmp = labels_[i] <=> other.labels_[i]; cmp != 0)
            return cmp;
    }
    return std::strong_ordering::equal;
}

bool leq(const Chain& x, const Chain& y) {
    return isSubsequence(y.labels(), x.labels());
}

Chain concat(const Chain& x, const Chain& y) {
    std::vector<Label> joined = x.labels();
    joined.insert(joined.end(), y.labels().begin(), y.labels().end());
    return Chain(std::move(joined));
}

Cause Cause::fromChains(std::vector<Chain> chains) {
    Cause cause;
    // Drop x when some other member y has y < x, i.e. x is a proper
    // subsequence of y.
    cause.chains_ = minimalElements(std::move(chains), [](const Chain& y, const Chain& x) {
        return leq(y, x);
    });
    return cause;
}

std::strong_ordering Cause::operator<=>(const Cause& other) const {
    return std::lexicographical_compare_three_way(
        chains_.begin(), chains_.end(), other.chains_.begin(), other.chains_.end());
}

bool leq(const Cause& c, const Cause& d) {
    for (const Chain& x : c.chains()) {
        bool covered = false;
        for (const Chain& y : d.chains()) {
            if (isSubsequence(x.labels(), y.labels())) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

Cause app(const Cause& c, const Cause& d) {
    // The comprehension over an empty generator set would wrongly yield the
    // empty set, so the identity cause short-circuits.
    if (c.isIdentity())
        return d;
    if (d.isIdentity())
        return c;
    std::vector<Chain> joined;
    joined.reserve(c.size() * d.size());
    for (const Chain& x : c.chains())
        for (const Chain& y : d.chains())
            joined.push_back(concat(x, y));
    return Cause::fromChains(std::move(joined));
}

CausalValue CausalValue::one() {
    CausalValue v;
    v.causes_.push_back(Cause());
    return v;
}

CausalValue CausalValue::ofLabel(const Label& label) {
    return ofChain(Chain({label}));
}

CausalValue CausalValue::ofChain(Chain chain) {
    return fromCauses({Cause::fromChains({std::move(chain)})});
}

CausalValue CausalValue::fromCauses(std::vector<Cause> causes) {
    for (Cause& c : causes) {
        c = Cause::fromChains(c.chains());
        // A cause whose only generator is the empty chain is the empty
        // product, the same denotation as the identity cause.
        if (c.size() == 1 && c.chains().front().isIdentity())
            c = Cause();
    }
    CausalValue v;
    v.causes_ = minimalElements(std::move(causes), [](const Cause& d, const Cause& c) {
        return leq(d, c);
    });
    return v;
}

std::strong_ordering CausalValue::operator<=>(const CausalValue& other) const {
    return std::lexicographical_compare_three_way(
        causes_.begin(), causes_.end(), other.causes_.begin(), other.causes_.end());
}

CausalValue add(const CausalValue& v1, const CausalValue& v2) {
    std::vector<Cause> causes = v1.causes();
    causes.insert(causes.end(), v2.causes().begin(), v2.causes().end());
    return CausalValue::fromCauses(std::move(causes));
}

CausalValue mul(const CausalValue& v1, const CausalValue& v2) {
    std::vector<Cause> causes;
    causes.reserve(v1.size() * v2.size());
    for (const Cause& c : v1.causes()) {
        for (const Cause& d : v2.causes()) {
            std::vector<Chain> joined = c.chains();
            joined.insert(joined.end(), d.chains().begin(), d.chains().end());
            causes.push_back(Cause::fromChains(std::move(joined)));
        }
    }
    return CausalValue::fromCauses(std::move(causes));
}

CausalValue app(const CausalValue& v1, const CausalValue& v2) {
    std::vector<Cause> causes;
    causes.reserve(v1.size() * v2.size());
    for (const Cause& c : v1.causes())
        for (const Cause& d : v2.causes())
            causes.push_back(app(c, d));
    return CausalValue::fromCauses(std::move(causes));
}

bool leq(const CausalValue& v1, const CausalValue& v2) {
    for (const Cause& c : v1.causes()) {
        bool covered = false;
        for (const Cause& d : v2.causes()) {
            if (leq(d, c)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

}  // namespace causalog
