#include "causalog/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "causalog/oracle.hpp"
#include "causalog/semantics.hpp"
#include "causalog/syntax.hpp"

namespace causalog {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Document {
    // One object per model: every program atom mapped to its printed
    // canonical term, zeros included as "0".
    std::vector<std::map<std::string, std::string>> models;
    std::vector<std::string> diagnostics;
};

std::string slurp(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string readSource(const std::string& path, std::istream& in) {
    if (path == "-")
        return slurp(in);
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open file: " + path);
    return slurp(file);
}

std::string printValue(const CausalValue& value) {
    return printTerm(canonicalTerm(value));
}

std::map<std::string, std::string> modelRow(const Program& program,
                                            const Interpretation& interp) {
    std::map<std::string, std::string> row;
    for (const Atom& atom : program.atoms())
        row[atom] = printValue(interp.value(atom));
    return row;
}

void emit(const Document& document, bool jsonFormat, std::ostream& out,
          std::ostream& err) {
    if (jsonFormat) {
        nlohmann::json doc;
        doc["models"] = nlohmann::json::array();
        for (const auto& model : document.models)
            doc["models"].push_back(model);
        doc["diagnostics"] = document.diagnostics;
        out << doc.dump(2) << '\n';
        return;
    }
    bool first = true;
    for (std::size_t i = 0; i < document.models.size(); ++i) {
        if (!first)
            out << '\n';
        first = false;
        out << "model " << (i + 1) << '\n';
        for (const auto& [atom, term] : document.models[i])
            if (term != "0")
                out << atom << " = " << term << '\n';
    }
    for (const std::string& line : document.diagnostics)
        err << line << '\n';
}

struct Options {
    std::string file = "-";
    std::string format = "text";
    std::string termA;
    std::string termB;
    std::uint64_t maxModels = 0;  // 0 = unlimited
    int atomCap = 20;
    int ruleCap = 12;

    bool json() const { return format == "json"; }
    SolveOptions solveOptions() const {
        SolveOptions options;
        options.maxModels = maxModels == 0 ? std::numeric_limits<std::size_t>::max()
                                           : static_cast<std::size_t>(maxModels);
        options.atomCap = atomCap;
        return options;
    }
};

int cmdSolve(const Options& options, std::istream& in, std::ostream& out,
             std::ostream& err) {
    Program program = toProgram(parseProgram(readSource(options.file, in)));
    std::vector<Interpretation> models = causalStableModels(program, options.solveOptions());
    Document document;
    for (const Interpretation& interp : models)
        document.models.push_back(modelRow(program, interp));
    if (models.empty())
        document.diagnostics.push_back("no causal stable models");
    emit(document, options.json(), out, err);
    return models.empty() ? kExitNegative : kExitSuccess;
}

int cmdLeast(const Options& options, std::istream& in, std::ostream& out,
             std::ostream& err) {
    Program program = toProgram(parseProgram(readSource(options.file, in)));
    if (!program.isPositive())
        throw std::runtime_error("least requires a positive program (no 'not')");
    LeastModelResult result = leastModel(program);
    Document document;
    document.models.push_back(modelRow(program, result.model));
    bool admissible = result.falsum.isZero();
    if (!admissible)
        document.diagnostics.push_back("constraint violated: falsum = " +
                                       printValue(result.falsum));
    emit(document, options.json(), out, err);
    return admissible ? kExitSuccess : kExitNegative;
}

int cmdEval(const Options& options, std::ostream& out) {
    out << printValue(evaluate(parseTerm(options.termA))) << '\n';
    return kExitSuccess;
}

int cmdEquiv(const Options& options, std::ostream& out) {
    bool equal = evaluate(parseTerm(options.termA)) == evaluate(parseTerm(options.termB));
    out << (equal ? "true" : "false") << '\n';
    return equal ? kExitSuccess : kExitNegative;
}

int cmdLeq(const Options& options, std::ostream& out) {
    bool holds = leq(evaluate(parseTerm(options.termA)), evaluate(parseTerm(options.termB)));
    out << (holds ? "true" : "false") << '\n';
    return holds ? kExitSuccess : kExitNegative;
}

int cmdCheck(const Options& options, std::istream& in, std::ostream& out,
             std::ostream& err) {
    Program program = toProgram(parseProgram(readSource(options.file, in)));
    std::vector<Interpretation> models = causalStableModels(program, options.solveOptions());
    OracleLimits limits;
    limits.ruleCap = options.ruleCap;

    Document document;
    std::vector<std::string> report;
    bool allPass = true;
    for (std::size_t i = 0; i < models.size(); ++i) {
        const Interpretation& interp = models[i];
        document.models.push_back(modelRow(program, interp));
        for (const Atom& atom : program.atoms()) {
            CausalValue fromTrees = justificationSum(program, atom, interp, limits);
            const CausalValue& fromModel = interp.value(atom);
            std::string line = "model " + std::to_string(i + 1) + ": ";
            if (fromTrees == fromModel) {
                line += "PASS " + atom;
                std::string raw =
                    printTerm(rawJustificationTerm(program, atom, interp, limits));
                std::string canonical = printValue(fromModel);
                if (raw != canonical)
                    line += " (raw " + raw + " = " + canonical + ")";
            } else {
                allPass = false;
                line += "FAIL " + atom + " (model " + printValue(fromModel) +
                        ", trees " + printValue(fromTrees) + ")";
            }
            report.push_back(std::move(line));
        }
    }
    if (models.empty())
        report.push_back("no causal stable models; nothing to check");

    if (options.json()) {
        document.diagnostics = report;
        emit(document, true, out, err);
    } else {
        for (const std::string& line : report)
            out << line << '\n';
    }
    return allPass ? kExitSuccess : kExitNegative;
}

}  // namespace

int runCli(std::vector<std::string> args, std::istream& in, std::ostream& out,
           std::ostream& err) {
    CLI::App app{"solver and justification engine for causal logic programs"};
    app.require_subcommand(1);
    Options options;

    auto addFormat = [&](CLI::App* cmd) {
        cmd->add_option("--format", options.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    auto addFile = [&](CLI::App* cmd) {
        cmd->add_option("file", options.file, "program file, or - for standard input")
            ->required();
    };

    CLI::App* solve = app.add_subcommand("solve", "enumerate causal stable models");
    addFile(solve);
    addFormat(solve);
    solve->add_option("--max-models", options.maxModels,
                      "stop after this many models (0 = unlimited)");
    solve->add_option("--atom-cap", options.atomCap,
                      "largest atom count the model search accepts")
        ->capture_default_str();

    CLI::App* least = app.add_subcommand("least", "least model of a positive program");
    addFile(least);
    addFormat(least);

    CLI::App* eval = app.add_subcommand("eval", "canonical form of a causal term");
    eval->add_option("term", options.termA, "term to evaluate")->required();

    CLI::App* equiv = app.add_subcommand("equiv", "test two terms for equal value");
    equiv->add_option("term1", options.termA)->required();
    equiv->add_option("term2", options.termB)->required();

    CLI::App* leqCmd = app.add_subcommand("leq", "test term1 <= term2");
    leqCmd->add_option("term1", options.termA)->required();
    leqCmd->add_option("term2", options.termB)->required();

    CLI::App* check = app.add_subcommand(
        "check", "cross-check each stable model against proof-tree causes");
    addFile(check);
    addFormat(check);
    check->add_option("--max-models", options.maxModels,
                      "check at most this many models (0 = unlimited)");
    check->add_option("--atom-cap", options.atomCap,
                      "largest atom count the model search accepts")
        ->capture_default_str();
    check->add_option("--rule-cap", options.ruleCap,
                      "largest rule count the tree enumeration accepts")
        ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        if (app.got_subcommand(solve))
            return cmdSolve(options, in, out, err);
        if (app.got_subcommand(least))
            return cmdLeast(options, in, out, err);
        if (app.got_subcommand(eval))
            return cmdEval(options, out);
        if (app.got_subcommand(equiv))
            return cmdEquiv(options, out);
        if (app.got_subcommand(leqCmd))
            return cmdLeq(options, out);
        if (app.got_subcommand(check))
            return cmdCheck(options, in, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitError;
    } catch (const CapError& e) {
        err << "cap error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace causalog
