// Proof-tree enumeration. A proof tree for an atom p is a DAG whose
// vertices are distinct program rules, with exactly one sink (a vertex
// without outgoing edges) whose head is p, and where every positive body
// atom of every vertex is supplied by exactly one incoming edge from a
// rule heading that atom. The cause of a tree is the product, over all
// source-to-sink paths, of the concatenated rule labels along the path.
// Summing causes over all trees reproduces the semantic value of p; this
// module exists as an independent cross-check of the fixpoint solver, not
// as an efficient justification extractor.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "causalog/semantics.hpp"
#include "causalog/term.hpp"

namespace causalog {

struct ProofTree {
    // Vertices are distinct rules; edges are (provider, consumer) index
    // pairs where the provider's head occurs in the consumer's positive
    // body. Exactly one vertex, `sink`, has no outgoing edge.
    std::vector<Rule> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t sink = 0;

    bool operator==(const ProofTree& other) const {
        return vertices == other.vertices && edges == other.edges;
    }
};

using RuleFilter = std::function<bool(const Rule&)>;

struct OracleLimits {
    // Subset scan is exponential in the rule count; refuse beyond the cap.
    int ruleCap = 12;
    // Upper bound on provider assignments examined across all subsets.
    std::uint64_t assignmentBudget = 50'000'000;
};

// All proof trees for `target` over the rules passing `filter` (an empty
// filter accepts every rule). Deterministic order; throws CapError when a
// limit is exceeded.
std::vector<ProofTree> enumerateProofTrees(const Program& program, const Atom& target,
                                           const RuleFilter& filter = {},
                                           const OracleLimits& limits = {});

// Every source-to-sink route of `tree` as the sequence of rule labels
// along it, deduplicated and deterministically ordered.
std::vector<std::vector<Term>> proofPaths(const ProofTree& tree);

// Concatenation of the labels along one path; labels equal to 1 drop out.
Term pathTerm(const std::vector<Term>& labels);

// Product over proofPaths of pathTerm, as an unevaluated term.
Term rawCauseTerm(const ProofTree& tree);

CausalValue causeOf(const ProofTree& tree);

// Keeps the rules whose negative body is entirely false under `interp`;
// over a stable model this is the rule filter under which tree causes sum
// to the model's values.
RuleFilter negativeBodyFilter(const Interpretation& interp);

// Sum over all filtered trees of their raw cause terms. May be redundant
// and non-normal; it evaluates to justificationSum.
Term rawJustificationTerm(const Program& program, const Atom& target,
                          const Interpretation& interp, const OracleLimits& limits = {});

CausalValue justificationSum(const Program& program, const Atom& target,
                             const Interpretation& interp, const OracleLimits& limits = {});

}  // namespace causalog
