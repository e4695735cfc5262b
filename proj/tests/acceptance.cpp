// Acceptance suite: end-to-end checks over worked examples, algebraic laws,
// order structure, proof-tree sums, classical collapse, label replacement,
// and fixpoint convergence. Prints one line per criterion; exits nonzero if
// any criterion fails. All comparisons are exact (string or structural
// equality) — there are no numeric tolerances anywhere.
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "testutil.hpp"

#include "causalog/algebra.hpp"
#include "causalog/oracle.hpp"
#include "causalog/semantics.hpp"
#include "causalog/syntax.hpp"
#include "causalog/term.hpp"

using namespace causalog;
using namespace testutil;

namespace {

struct Outcome {
    std::vector<std::string> failures;
    std::string detail;

    void require(bool ok, const std::string& message) {
        if (!ok)
            failures.push_back(message);
    }
};

std::string show(const CausalValue& value) {
    return printTerm(canonicalTerm(value));
}

struct Corpora {
    std::vector<Program> positives;
    std::vector<Program> normals;
};

Corpora buildCorpora() {
    Corpora corpora;
    std::mt19937_64 positiveRng(40001);
    for (int i = 0; i < 220; ++i)
        corpora.positives.push_back(randomPositiveProgram(positiveRng));
    std::mt19937_64 normalRng(40002);
    for (int i = 0; i < 220; ++i)
        corpora.normals.push_back(randomNormalProgram(normalRng));
    return corpora;
}

const char* kBoat =
    "p: port. s: starb. w: fwind.\n"
    "fwd :- port, starb.\n"
    "fwd :- fwind.\n";

const char* kBoatLabelled =
    "p: port. s: starb. w: fwind.\n"
    "a: fwd :- port, starb.\n"
    "b: fwd :- fwind.\n";

const char* kBoatWake =
    "p: port. s: starb. w: fwind.\n"
    "fwd :- port, starb.\n"
    "fwd :- fwind.\n"
    "k: wake :- fwd.\n";

const char* kTwoRowers =
    "p1: port1. p2: port2. s: starb.\n"
    "port :- port1.\n"
    "port :- port2.\n"
    "fwd :- port, starb.\n";

const char* kBoatAnchor =
    "p: port. s: starb. w: fwind.\n"
    "a: fwd :- port, starb, not ab_a.\n"
    "ab_a :- anchored.\n"
    "ab_a :- broken_oar1.\n"
    "ab_a :- broken_oar2.\n"
    "b: fwd :- fwind, not ab_b.\n"
    "ab_b :- anchored.\n"
    "ab_b :- holed_sail.\n";

const char* kSelfSupport = "a: p. b: p :- p.\n";

const char* kRedundantJoint = "a: p. b: q :- p. r :- p, q.\n";

Outcome workedExamples() {
    Outcome outcome;
    auto expectLeast = [&](const char* source, const Atom& atom,
                           const std::string& expected) {
        Interpretation model = leastModel(prog(source)).model;
        std::string got = show(model.value(atom));
        outcome.require(got == expected,
                        atom + ": expected " + expected + ", got " + got);
    };

    expectLeast(kBoat, "fwd", "p*s + w");
    expectLeast(kBoatLabelled, "fwd", "p.a*s.a + w.b");
    expectLeast(kBoatWake, "wake", "p.k*s.k + w.k");
    expectLeast(kTwoRowers, "fwd", "p1*s + p2*s");
    expectLeast(kTwoRowers, "port", "p1 + p2");
    expectLeast(kSelfSupport, "p", "a");
    expectLeast(kRedundantJoint, "r", "a.b");

    Program anchor = prog(kBoatAnchor);
    std::vector<Interpretation> models = causalStableModels(anchor);
    outcome.require(models.size() == 1, "anchor program: expected one model");
    if (models.size() == 1) {
        const Interpretation& model = models.front();
        auto expectValue = [&](const Atom& atom, const std::string& expected) {
            std::string got = show(model.value(atom));
            outcome.require(got == expected, "anchor " + atom + ": expected " +
                                                 expected + ", got " + got);
        };
        expectValue("fwd", "p.a*s.a + w.b");
        expectValue("port", "p");
        expectValue("starb", "s");
        expectValue("fwind", "w");
        for (const char* zeroed :
             {"ab_a", "ab_b", "anchored", "broken_oar1", "broken_oar2",
              "holed_sail"})
            expectValue(zeroed, "0");
        std::set<Atom> support{"fwd", "fwind", "port", "starb"};
        outcome.require(model.support() == support,
                        "anchor support differs from {port,starb,fwind,fwd}");
        outcome.require(classicalStableModelsOracle(anchor) ==
                            std::vector<std::set<Atom>>{support},
                        "anchor classical stable model differs");
    }

    outcome.require(canon("a*a.b") == "a.b", "eval a*a.b");
    outcome.require(canon("a.b*c+a") == "a", "eval a.b*c+a");
    outcome.require(val("(p*s).k + w.k") == val("(p*s+w).k"),
                    "equiv (p*s).k + w.k vs (p*s+w).k");
    return outcome;
}

Outcome algebraicLaws() {
    Outcome outcome;
    std::mt19937_64 rng(50002);
    std::vector<Label> labels = labelPool(4);
    const int rounds = 2500;
    int termCount = 0;

    auto ev = [](const Term& term) { return evaluate(term); };
    auto check = [&](bool ok, const char* law, const Term& lhs,
                     const Term& rhs) {
        if (!ok)
            outcome.failures.push_back(std::string(law) + ": " +
                                       printTerm(lhs) + " vs " +
                                       printTerm(rhs));
    };
    auto same = [&](const char* law, const Term& lhs, const Term& rhs) {
        check(ev(lhs) == ev(rhs), law, lhs, rhs);
    };

    for (int i = 0; i < rounds; ++i) {
        Term t = randomTerm(rng, 5, labels);
        Term u = randomTerm(rng, 5, labels);
        Term w = randomTerm(rng, 5, labels);
        Term c = randomCauseTerm(rng, labels);
        Term d = randomCauseTerm(rng, labels);
        Term e = randomCauseTerm(rng, labels);
        termCount += 6;

        same("sum associativity", Term::sum({t, Term::sum({u, w})}),
             Term::sum({Term::sum({t, u}), w}));
        same("product associativity", Term::product({t, Term::product({u, w})}),
             Term::product({Term::product({t, u}), w}));
        same("sum commutativity", Term::sum({t, u}), Term::sum({u, t}));
        same("product commutativity", Term::product({t, u}),
             Term::product({u, t}));
        same("sum absorption", t, Term::sum({t, Term::product({t, u})}));
        same("product absorption", t, Term::product({t, Term::sum({t, u})}));
        same("sum over product distributivity",
             Term::sum({t, Term::product({u, w})}),
             Term::product({Term::sum({t, u}), Term::sum({t, w})}));
        same("product over sum distributivity",
             Term::product({t, Term::sum({u, w})}),
             Term::sum({Term::product({t, u}), Term::product({t, w})}));
        same("sum identity", Term::sum({t, Term::zero()}), t);
        same("product identity", Term::product({t, Term::one()}), t);
        same("sum idempotence", Term::sum({t, t}), t);
        same("product idempotence", Term::product({t, t}), t);
        same("sum annihilator", Term::sum({Term::one(), t}), Term::one());
        same("product annihilator", Term::product({Term::zero(), t}),
             Term::zero());

        same("application associativity", Term::app(t, Term::app(u, w)),
             Term::app(Term::app(t, u), w));
        same("application sum absorption", t,
             Term::sum({t, Term::app(Term::app(u, t), w)}));
        same("application product absorption", Term::app(Term::app(u, t), w),
             Term::product({t, Term::app(Term::app(u, t), w)}));
        same("left application identity", Term::app(Term::one(), t), t);
        same("right application identity", Term::app(t, Term::one()), t);
        same("application over sum, left", Term::app(t, Term::sum({u, w})),
             Term::sum({Term::app(t, u), Term::app(t, w)}));
        same("application over sum, right", Term::app(Term::sum({t, u}), w),
             Term::sum({Term::app(t, w), Term::app(u, w)}));
        same("application over product, left",
             Term::app(c, Term::product({d, e})),
             Term::product({Term::app(c, d), Term::app(c, e)}));
        same("application over product, right",
             Term::app(Term::product({c, d}), e),
             Term::product({Term::app(c, e), Term::app(d, e)}));
        same("left application annihilator", Term::app(Term::zero(), t),
             Term::zero());
        same("right application annihilator", Term::app(t, Term::zero()),
             Term::zero());
    }

    outcome.detail = std::to_string(termCount) + " random terms";
    return outcome;
}

Outcome orderStructure() {
    Outcome outcome;
    std::vector<Chain> chains = allChains(4, labelPool(2));
    outcome.require(chains.size() == 31, "expected 31 chains of length <= 4");

    for (const Chain& x : chains)
        outcome.require(leq(x, x), "reflexivity");
    for (const Chain& x : chains)
        for (const Chain& y : chains)
            if (leq(x, y) && leq(y, x))
                outcome.require(x == y,
                                "mutually comparable chains must be identical");
    for (const Chain& x : chains)
        for (const Chain& y : chains)
            for (const Chain& z : chains)
                if (leq(x, y) && leq(y, z))
                    outcome.require(leq(x, z), "transitivity");

    std::mt19937_64 rng(50003);
    std::vector<Label> labels = labelPool(4);
    for (int i = 0; i < 1000; ++i) {
        CausalValue t = evaluate(randomTerm(rng, 5, labels));
        CausalValue u = evaluate(randomTerm(rng, 5, labels));
        bool below = leq(t, u);
        outcome.require(below == (add(t, u) == u),
                        "leq must agree with t+u=u on " + show(t) + " and " +
                            show(u));
        outcome.require(below == (mul(t, u) == t),
                        "leq must agree with t*u=t on " + show(t) + " and " +
                            show(u));
    }
    outcome.detail = "31 chains exhaustively, 1000 value pairs";
    return outcome;
}

Outcome proofTreeSums(const Corpora& corpora) {
    Outcome outcome;
    int positiveChecks = 0;
    int stableChecks = 0;
    for (std::size_t i = 0; i < corpora.positives.size(); ++i) {
        const Program& program = corpora.positives[i];
        Interpretation model = leastModel(program).model;
        for (const Atom& atom : program.atoms()) {
            ++positiveChecks;
            if (justificationSum(program, atom, model) != model.value(atom))
                outcome.failures.push_back(
                    "positive program " + std::to_string(i) +
                    ": tree sum differs from model on " + atom);
        }
    }
    for (std::size_t i = 0; i < corpora.normals.size(); ++i) {
        const Program& program = corpora.normals[i];
        for (const Interpretation& model : causalStableModels(program)) {
            for (const Atom& atom : program.atoms()) {
                ++stableChecks;
                if (justificationSum(program, atom, model) !=
                    model.value(atom))
                    outcome.failures.push_back(
                        "normal program " + std::to_string(i) +
                        ": tree sum differs from model on " + atom);
            }
        }
    }
    outcome.detail = std::to_string(corpora.positives.size()) +
                     " positive + " + std::to_string(corpora.normals.size()) +
                     " normal programs, " +
                     std::to_string(positiveChecks + stableChecks) +
                     " atom checks";
    return outcome;
}

Outcome classicalCollapse(const Corpora& corpora) {
    Outcome outcome;
    for (std::size_t i = 0; i < corpora.normals.size(); ++i) {
        const Program& program = corpora.normals[i];
        std::vector<std::set<Atom>> supports;
        for (const Interpretation& model : causalStableModels(program))
            supports.push_back(model.support());
        if (supports != classicalStableModelsOracle(program))
            outcome.failures.push_back("program " + std::to_string(i) +
                                       ": supports differ from the classical "
                                       "stable models");
    }
    outcome.detail =
        std::to_string(corpora.normals.size()) + " normal programs";
    return outcome;
}

Outcome labelReplacement(const Corpora& corpora) {
    Outcome outcome;
    std::mt19937_64 rng(50006);
    std::vector<Label> labels = labelPool(4);
    int substitutions = 0;
    int identityCases = 0;

    auto draw = [&]() -> std::pair<Label, std::optional<Label>> {
        Label from = labels[pick(rng, labels.size())];
        std::optional<Label> to;
        if (pick(rng, 3) != 0)
            to = labels[pick(rng, labels.size())];
        else
            ++identityCases;
        return {from, to};
    };

    for (std::size_t i = 0; i < corpora.positives.size(); ++i) {
        const Program& program = corpora.positives[i];
        auto [from, to] = draw();
        ++substitutions;
        Interpretation expected =
            replaceLabel(leastModel(program).model, from, to);
        Interpretation actual =
            leastModel(replaceLabel(program, from, to)).model;
        for (const Atom& atom : program.atoms())
            if (expected.value(atom) != actual.value(atom))
                outcome.failures.push_back(
                    "positive program " + std::to_string(i) +
                    ": substituted least model differs on " + atom);
    }

    for (std::size_t i = 0; i < corpora.normals.size(); ++i) {
        const Program& program = corpora.normals[i];
        auto [from, to] = draw();
        ++substitutions;
        std::vector<Interpretation> original = causalStableModels(program);
        std::vector<Interpretation> substituted =
            causalStableModels(replaceLabel(program, from, to));
        if (original.size() != substituted.size()) {
            outcome.failures.push_back("normal program " + std::to_string(i) +
                                       ": model count changes under "
                                       "substitution");
            continue;
        }
        for (std::size_t k = 0; k < original.size(); ++k) {
            Interpretation expected = replaceLabel(original[k], from, to);
            for (const Atom& atom : program.atoms())
                if (expected.value(atom) != substituted[k].value(atom))
                    outcome.failures.push_back(
                        "normal program " + std::to_string(i) +
                        ": substituted model differs on " + atom);
        }
    }

    outcome.detail = std::to_string(substitutions) + " substitutions, " +
                     std::to_string(identityCases) + " with identity target";
    return outcome;
}

Outcome finiteConvergence(const Corpora& corpora) {
    Outcome outcome;

    auto sweep = [&](int capOverride) {
        int maxSteps = 0;
        auto track = [&](const Program& program) {
            int steps = leastModel(program, capOverride).steps;
            if (steps > maxSteps)
                maxSteps = steps;
        };
        for (const Program& program : corpora.positives)
            track(program);
        for (const Program& program : corpora.normals)
            for (const Interpretation& model : causalStableModels(program))
                track(reduct(program, model.support()));
        return maxSteps;
    };

    try {
        int maxSteps = sweep(0);
        int maxStepsLargeCap = sweep(4096);
        outcome.require(maxSteps == maxStepsLargeCap,
                        "step count changes under a larger iteration cap: " +
                            std::to_string(maxSteps) + " vs " +
                            std::to_string(maxStepsLargeCap));
        outcome.detail = "max steps " + std::to_string(maxSteps) +
                         ", identical under a 4096-iteration cap";
    } catch (const ConvergenceError& error) {
        outcome.failures.push_back(std::string("fixpoint iteration failed: ") +
                                   error.what());
    }
    return outcome;
}

int runCriterion(int number, const std::string& name,
                 const std::function<Outcome()>& body) {
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& error) {
        outcome.failures.push_back(std::string("exception: ") + error.what());
    }
    std::ostringstream line;
    line << "criterion " << number << " (" << name << "): ";
    if (outcome.failures.empty()) {
        line << "PASS";
        if (!outcome.detail.empty())
            line << " — " << outcome.detail;
    } else {
        line << "FAIL — " << outcome.failures.size()
             << " failure(s); first: " << outcome.failures.front();
    }
    std::cout << line.str() << "\n";
    return outcome.failures.empty() ? 0 : 1;
}

}  // namespace

int main() {
    Corpora corpora = buildCorpora();
    int failed = 0;
    failed += runCriterion(1, "worked-example regressions", workedExamples);
    failed += runCriterion(2, "algebraic laws", algebraicLaws);
    failed += runCriterion(3, "order structure", orderStructure);
    failed += runCriterion(4, "proof-tree sums match models",
                           [&] { return proofTreeSums(corpora); });
    failed += runCriterion(5, "classical collapse",
                           [&] { return classicalCollapse(corpora); });
    failed += runCriterion(6, "label replacement",
                           [&] { return labelReplacement(corpora); });
    failed += runCriterion(7, "finite convergence",
                           [&] { return finiteConvergence(corpora); });
    if (failed != 0)
        std::cout << failed << " criterion(s) failed\n";
    return failed == 0 ? 0 : 1;
}
