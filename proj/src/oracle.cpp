#include "causalog/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace causalog {

namespace {

// One provider choice point: `consumer` needs `atom`, any of `candidates`
// (indices into the subset) can supply it.
struct Slot {
    std::size_t consumer;
    std::vector<std::size_t> candidates;
};

bool isAcyclicWithSingleSink(std::size_t vertexCount,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                             const Atom& target, const std::vector<Rule>& vertices,
                             std::size_t& sinkOut) {
    std::vector<std::size_t> outDegree(vertexCount, 0);
    std::vector<std::size_t> inDegree(vertexCount, 0);
    for (const auto& [from, to] : edges) {
        ++outDegree[from];
        ++inDegree[to];
    }
    std::size_t sinkCount = 0;
    for (std::size_t v = 0; v < vertexCount; ++v) {
        if (outDegree[v] == 0) {
            ++sinkCount;
            sinkOut = v;
        }
    }
    if (sinkCount != 1 || vertices[sinkOut].head != target)
        return false;
    // Kahn's algorithm over reversed degrees detects cycles.
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < vertexCount; ++v)
        if (inDegree[v] == 0)
            ready.push_back(v);
    std::size_t seen = 0;
    std::vector<std::vector<std::size_t>> successors(vertexCount);
    for (const auto& [from, to] : edges)
        successors[from].push_back(to);
    while (!ready.empty()) {
        std::size_t v = ready.back();
        ready.pop_back();
        ++seen;
        for (std::size_t next : successors[v])
            if (--inDegree[next] == 0)
                ready.push_back(next);
    }
    return seen == vertexCount;
}

}  // namespace

std::vector<ProofTree> enumerateProofTrees(const Program& program, const Atom& target,
                                           const RuleFilter& filter,
                                           const OracleLimits& limits) {
    std::vector<Rule> rules;
    for (const Rule& rule : program.rules()) {
        if (rule.isConstraint())
            continue;
        if (!filter || filter(rule))
            rules.push_back(rule);
    }
    if (rules.size() > static_cast<std::size_t>(limits.ruleCap))
        throw CapError("proof tree enumeration over " + std::to_string(rules.size()) +
                       " rules exceeds the rule cap of " + std::to_string(limits.ruleCap));

    std::vector<ProofTree> trees;
    std::uint64_t budget = limits.assignmentBudget;
    const std::size_t n = rules.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                members.push_back(i);

        bool headsTarget = false;
        for (std::size_t i : members)
            headsTarget = headsTarget || rules[i].head == target;
        if (!headsTarget)
            continue;

        // Collect choice points; a body atom without any provider in the
        // subset kills every assignment.
        std::vector<Slot> slots;
        bool feasible = true;
        std::uint64_t assignments = 1;
        for (std::size_t v = 0; v < members.size() && feasible; ++v) {
            for (const Atom& atom : rules[members[v]].bodyPos) {
                Slot slot{v, {}};
                for (std::size_t u = 0; u < members.size(); ++u)
                    if (rules[members[u]].head == atom)
                        slot.candidates.push_back(u);
                if (slot.candidates.empty()) {
                    feasible = false;
                    break;
                }
                if (assignments > budget / slot.candidates.size())
                    throw CapError("proof tree enumeration exceeds the assignment budget");
                assignments *= slot.candidates.size();
                slots.push_back(std::move(slot));
            }
        }
        if (!feasible)
            continue;
        if (assignments > budget)
            throw CapError("proof tree enumeration exceeds the assignment budget");
        budget -= assignments;

        std::vector<std::size_t> choice(slots.size(), 0);
        while (true) {
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            edges.reserve(slots.size());
            for (std::size_t s = 0; s < slots.size(); ++s)
                edges.emplace_back(slots[s].candidates[choice[s]], slots[s].consumer);
            std::sort(edges.begin(), edges.end());

            std::vector<Rule> vertices;
            vertices.reserve(members.size());
            for (std::size_t i : members)
                vertices.push_back(rules[i]);
            std::size_t sink = 0;
            if (isAcyclicWithSingleSink(members.size(), edges, target, vertices, sink))
                trees.push_back(ProofTree{std::move(vertices), std::move(edges), sink});

            std::size_t s = 0;
            for (; s < slots.size(); ++s) {
                if (++choice[s] < slots[s].candidates.size())
                    break;
                choice[s] = 0;
            }
            if (s == slots.size())
                break;
        }
    }
    return trees;
}

std::vector<std::vector<Term>> proofPaths(const ProofTree& tree) {
    const std::size_t n = tree.vertices.size();
    std::vector<std::vector<std::size_t>> successors(n);
    std::vector<std::size_t> inDegree(n, 0);
    for (const auto& [from, to] : tree.edges) {
        successors[from].push_back(to);
        ++inDegree[to];
    }
    // Only the sink lacks outgoing edges, so every maximal route from a
    // source ends there.
    std::set<std::vector<Term>> paths;
    std::vector<std::size_t> route;
    auto walk = [&](auto&& self, std::size_t v) -> void {
        route.push_back(v);
        if (successors[v].empty()) {
            std::vector<Term> labels;
            labels.reserve(route.size());
            for (std::size_t u : route)
                labels.push_back(tree.vertices[u].label);
            paths.insert(std::move(labels));
        } else {
            for (std::size_t next : successors[v])
                self(self, next);
        }
        route.pop_back();
    };
    for (std::size_t v = 0; v < n; ++v)
        if (inDegree[v] == 0)
            walk(walk, v);
    return {paths.begin(), paths.end()};
}

Term pathTerm(const std::vector<Term>& labels) {
    Term result = Term::one();
    bool first = true;
    for (const Term& label : labels) {
        if (label.isOne())
            continue;
        result = first ? label : Term::app(std::move(result), label);
        first = false;
    }
    return result;
}

Term rawCauseTerm(const ProofTree& tree) {
    std::vector<Term> factors;
    for (const std::vector<Term>& path : proofPaths(tree)) {
        Term factor = pathTerm(path);
        if (!factor.isOne())
            factors.push_back(std::move(factor));
    }
    std::sort(factors.begin(), factors.end());
    return Term::product(std::move(factors));
}

CausalValue causeOf(const ProofTree& tree) {
    return evaluate(rawCauseTerm(tree));
}

RuleFilter negativeBodyFilter(const Interpretation& interp) {
    return [interp](const Rule& rule) {
        for (const Atom& atom : rule.bodyNeg)
            if (!interp.value(atom).isZero())
                return false;
        return true;
    };
}

Term rawJustificationTerm(const Program& program, const Atom& target,
                          const Interpretation& interp, const OracleLimits& limits) {
    std::vector<Term> causes;
    for (const ProofTree& tree :
         enumerateProofTrees(program, target, negativeBodyFilter(interp), limits))
        causes.push_back(rawCauseTerm(tree));
    std::sort(causes.begin(), causes.end());
    return Term::sum(std::move(causes));
}

CausalValue justificationSum(const Program& program, const Atom& target,
                             const Interpretation& interp, const OracleLimits& limits) {
    CausalValue sum = CausalValue::zero();
    for (const ProofTree& tree :
         enumerateProofTrees(program, target, negativeBodyFilter(interp), limits))
        sum = add(sum, causeOf(tree));
    return sum;
}

}  // namespace causalog
