// Model-theoretic core: interpretations, direct consequences, least models
// of positive programs, program reduct, and causal stable models.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "causalog/term.hpp"

namespace causalog {

using Atom = std::string;

/// Raised when a configurable enumeration bound (atom cap, rule cap, or the
/// proof-tree search budget) would be exceeded.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the fixpoint iteration fails to stabilize within its cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One labelled rule. An absent head marks a constraint. Positive and
/// negative bodies are kept sorted and duplicate-free; they may overlap.
struct Rule {
    Term label = Term::one();
    std::optional<Atom> head;
    std::vector<Atom> bodyPos;
    std::vector<Atom> bodyNeg;

    bool isConstraint() const { return !head.has_value(); }
    bool isFact() const { return head && bodyPos.empty() && bodyNeg.empty(); }

    friend bool operator==(const Rule&, const Rule&) = default;
    std::strong_ordering operator<=>(const Rule& other) const;
};

/// A finite set of rules. Rules are stored sorted and deduplicated; the
/// atom and label sets are derived from them.
class Program {
public:
    Program() = default;
    explicit Program(std::vector<Rule> rules);

    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Label>& labels() const { return labels_; }

    bool isPositive() const;

private:
    std::vector<Rule> rules_;
    std::vector<Atom> atoms_;
    std::vector<Label> labels_;
};

/// A total mapping atom -> causal value; atoms without an entry read as 0
/// and zero values are never stored.
class Interpretation {
public:
    Interpretation() = default;

    const CausalValue& value(const Atom& atom) const;
    void set(const Atom& atom, CausalValue value);

    const std::map<Atom, CausalValue>& assignment() const { return assignment_; }
    std::set<Atom> support() const;
    bool empty() const { return assignment_.empty(); }

    friend bool operator==(const Interpretation&, const Interpretation&) = default;

private:
    std::map<Atom, CausalValue> assignment_;
};

/// Pointwise value order over a shared atom universe.
bool leq(const Interpretation& i, const Interpretation& j);

/// Model check for positive programs: every rule must satisfy
/// (product of body values) . label <= value(head), with 0 on the right
/// for constraints.
bool isModel(const Program& program, const Interpretation& interp);

/// One application of the direct-consequences operator: each atom receives
/// the sum, over the rules heading it, of the applied product of body
/// values. Constraints contribute nothing here.
Interpretation tpStep(const Program& program, const Interpretation& interp);

struct LeastModelResult {
    Interpretation model;
    /// Value derived for the constraint head; 0 when no constraint fires.
    CausalValue falsum;
    /// Number of tpStep applications needed to reach the fixpoint.
    int steps = 0;
};

/// Iterates tpStep from the bottom interpretation until two consecutive
/// interpretations are equal. `capOverride` > 0 replaces the default
/// iteration cap max(|rules| * (1 + total label size), 64); exceeding the
/// cap raises ConvergenceError with a diagnostic.
LeastModelResult leastModel(const Program& program, int capOverride = 0);

/// Drops every rule with a negative body atom inside `support`, then erases
/// the negative bodies of the survivors.
Program reduct(const Program& program, const std::set<Atom>& support);

struct SolveOptions {
    std::size_t maxModels = static_cast<std::size_t>(-1);
    int atomCap = 20;
};

/// Enumerates all causal stable models: every support candidate S over the
/// program atoms is checked by computing the least model I of the reduct
/// w.r.t. S and accepting when support(I) == S and no constraint derives a
/// nonzero value. Candidates are scanned in a fixed subset order, so the
/// result order is deterministic.
std::vector<Interpretation> causalStableModels(const Program& program,
                                               const SolveOptions& options = {});

/// Brute-force classical stable models of the label-stripped program, using
/// Boolean evaluation only. Independent of the causal algebra.
std::vector<std::set<Atom>> classicalStableModelsOracle(const Program& program,
                                                        int atomCap = 20);

/// Replaces label `from` by `to` (or by 1 when `to` is empty) in every rule
/// label term.
Program replaceLabel(const Program& program, const Label& from,
                     const std::optional<Label>& to);

/// Applies the same label replacement inside a canonical value.
CausalValue replaceLabel(const CausalValue& value, const Label& from,
                         const std::optional<Label>& to);

/// Applies the same label replacement atomwise to an interpretation.
Interpretation replaceLabel(const Interpretation& interp, const Label& from,
                            const std::optional<Label>& to);

}  // namespace causalog
