#include "causalog/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "causalog/syntax.hpp"

namespace causalog {

namespace {

void collectLabels(const Term& term, std::set<Label>& out) {
    if (term.kind() == Term::Kind::Label) {
        out.insert(term.labelName());
        return;
    }
    for (const Term& child : term.children())
        collectLabels(child, out);
}

std::vector<Atom> sortedUnique(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

CausalValue bodyValue(const Rule& rule, const Interpretation& interp) {
    CausalValue acc = CausalValue::one();
    for (const Atom& atom : rule.bodyPos) {
        acc = mul(acc, interp.value(atom));
        if (acc.isZero())
            break;
    }
    return acc;
}

CausalValue ruleConsequence(const Rule& rule, const Interpretation& interp) {
    return app(bodyValue(rule, interp), evaluate(rule.label));
}

}  // namespace

std::strong_ordering Rule::operator<=>(const Rule& other) const {
    if (auto cmp = head <=> other.head; cmp != 0)
        return cmp;
    if (auto cmp = bodyPos <=> other.bodyPos; cmp != 0)
        return cmp;
    if (auto cmp = bodyNeg <=> other.bodyNeg; cmp != 0)
        return cmp;
    return label <=> other.label;
}

Program::Program(std::vector<Rule> rules) {
    for (Rule& rule : rules) {
        rule.bodyPos = sortedUnique(std::move(rule.bodyPos));
        rule.bodyNeg = sortedUnique(std::move(rule.bodyNeg));
    }
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    rules_ = std::move(rules);

    std::set<Atom> atoms;
    std::set<Label> labels;
    for (const Rule& rule : rules_) {
        if (rule.head)
            atoms.insert(*rule.head);
        atoms.insert(rule.bodyPos.begin(), rule.bodyPos.end());
        atoms.insert(rule.bodyNeg.begin(), rule.bodyNeg.end());
        collectLabels(rule.label, labels);
    }
    atoms_.assign(atoms.begin(), atoms.end());
    labels_.assign(labels.begin(), labels.end());
}

bool Program::isPositive() const {
    return std::all_of(rules_.begin(), rules_.end(),
                       [](const Rule& rule) { return rule.bodyNeg.empty(); });
}

const CausalValue& Interpretation::value(const Atom& atom) const {
    static const CausalValue kZero;
    auto it = assignment_.find(atom);
    return it == assignment_.end() ? kZero : it->second;
}

void Interpretation::set(const Atom& atom, CausalValue value) {
    if (value.isZero())
        assignment_.erase(atom);
    else
        assignment_[atom] = std::move(value);
}

std::set<Atom> Interpretation::support() const {
    std::set<Atom> atoms;
    for (const auto& [atom, value] : assignment_)
        atoms.insert(atom);
    return atoms;
}

bool leq(const Interpretation& i, const Interpretation& j) {
    for (const auto& [atom, value] : i.assignment()) {
        if (!leq(value, j.value(atom)))
            return false;
    }
    return true;
}

bool isModel(const Program& program, const Interpretation& interp) {
    for (const Rule& rule : program.rules()) {
        CausalValue derived = ruleConsequence(rule, interp);
        if (rule.isConstraint()) {
            if (!derived.isZero())
                return false;
        } else if (!leq(derived, interp.value(*rule.head))) {
            return false;
        }
    }
    return true;
}

Interpretation tpStep(const Program& program, const Interpretation& interp) {
    Interpretation next;
    for (const Rule& rule : program.rules()) {
        if (rule.isConstraint())
            continue;
        CausalValue derived = ruleConsequence(rule, interp);
        if (!derived.isZero())
            next.set(*rule.head, add(next.value(*rule.head), derived));
    }
    return next;
}

LeastModelResult leastModel(const Program& program, int capOverride) {
    std::size_t labelSize = 0;
    for (const Rule& rule : program.rules())
        labelSize += rule.label.size();
    int cap = capOverride > 0
                  ? capOverride
                  : static_cast<int>(std::max<std::size_t>(
                        program.rules().size() * (1 + labelSize), 64));

    Interpretation current;
    for (int step = 1; step <= cap; ++step) {
        Interpretation next = tpStep(program, current);
        if (next == current) {
            LeastModelResult result;
            result.model = std::move(current);
            result.steps = step;
            for (const Rule& rule : program.rules()) {
                if (rule.isConstraint())
                    result.falsum = add(result.falsum, ruleConsequence(rule, result.model));
            }
            return result;
        }
        current = std::move(next);
    }

    // Dump the atoms still changing at the cap so a divergence is
    // attributable to a concrete value.
    Interpretation beyond = tpStep(program, current);
    std::ostringstream msg;
    msg << "least model iteration did not stabilize within " << cap << " steps;";
    for (const Atom& atom : program.atoms()) {
        if (!(current.value(atom) == beyond.value(atom))) {
            msg << " " << atom << ": " << printTerm(canonicalTerm(current.value(atom)))
                << " -> " << printTerm(canonicalTerm(beyond.value(atom)));
        }
    }
    throw ConvergenceError(msg.str());
}

Program reduct(const Program& program, const std::set<Atom>& support) {
    std::vector<Rule> kept;
    for (const Rule& rule : program.rules()) {
        bool blocked = std::any_of(rule.bodyNeg.begin(), rule.bodyNeg.end(),
                                   [&](const Atom& atom) { return support.count(atom) > 0; });
        if (blocked)
            continue;
        Rule survivor = rule;
        survivor.bodyNeg.clear();
        kept.push_back(std::move(survivor));
    }
    return Program(std::move(kept));
}

std::vector<Interpretation> causalStableModels(const Program& program,
                                               const SolveOptions& options) {
    const std::vector<Atom>& atoms = program.atoms();
    if (atoms.size() > static_cast<std::size_t>(options.atomCap)) {
        std::ostringstream msg;
        msg << "stable-model search over " << atoms.size()
            << " atoms exceeds the atom cap of " << options.atomCap;
        throw CapError(msg.str());
    }

    std::vector<Interpretation> models;
    std::uint64_t subsets = std::uint64_t{1} << atoms.size();
    for (std::uint64_t mask = 0; mask < subsets && models.size() < options.maxModels; ++mask) {
        std::set<Atom> candidate;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (mask & (std::uint64_t{1} << i))
                candidate.insert(atoms[i]);
        }
        LeastModelResult least = leastModel(reduct(program, candidate));
        if (!least.falsum.isZero())
            continue;
        if (least.model.support() == candidate)
            models.push_back(std::move(least.model));
    }
    return models;
}

std::vector<std::set<Atom>> classicalStableModelsOracle(const Program& program,
                                                        int atomCap) {
    const std::vector<Atom>& atoms = program.atoms();
    if (atoms.size() > static_cast<std::size_t>(atomCap)) {
        std::ostringstream msg;
        msg << "classical oracle over " << atoms.size()
            << " atoms exceeds the atom cap of " << atomCap;
        throw CapError(msg.str());
    }

    std::vector<std::set<Atom>> models;
    std::uint64_t subsets = std::uint64_t{1} << atoms.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::set<Atom> candidate;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (mask & (std::uint64_t{1} << i))
                candidate.insert(atoms[i]);
        }

        // Classical reduct followed by Boolean least-model saturation.
        std::set<Atom> derived;
        bool falsum = false;
        bool changed = true;
        while (changed && !falsum) {
            changed = false;
            for (const Rule& rule : program.rules()) {
                bool blocked = std::any_of(
                    rule.bodyNeg.begin(), rule.bodyNeg.end(),
                    [&](const Atom& atom) { return candidate.count(atom) > 0; });
                if (blocked)
                    continue;
                bool bodyHolds = std::all_of(
                    rule.bodyPos.begin(), rule.bodyPos.end(),
                    [&](const Atom& atom) { return derived.count(atom) > 0; });
                if (!bodyHolds)
                    continue;
                if (rule.isConstraint()) {
                    falsum = true;
                    break;
                }
                if (derived.insert(*rule.head).second)
                    changed = true;
            }
        }
        if (!falsum && derived == candidate)
            models.push_back(std::move(candidate));
    }
    return models;
}

Program replaceLabel(const Program& program, const Label& from,
                     const std::optional<Label>& to) {
    std::vector<Rule> rules = program.rules();
    for (Rule& rule : rules)
        rule.label = replaceLabel(rule.label, from, to);
    return Program(std::move(rules));
}

CausalValue replaceLabel(const CausalValue& value, const Label& from,
                         const std::optional<Label>& to) {
    return evaluate(replaceLabel(canonicalTerm(value), from, to));
}

Interpretation replaceLabel(const Interpretation& interp, const Label& from,
                            const std::optional<Label>& to) {
    Interpretation result;
    for (const auto& [atom, value] : interp.assignment())
        result.set(atom, replaceLabel(value, from, to));
    return result;
}

}  // namespace causalog
