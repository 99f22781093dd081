#include "cli.hpp"

#include <restcheck/bounded_search.hpp>
#include <restcheck/dsl.hpp>
#include <restcheck/report.hpp>
#include <restcheck/tableau.hpp>
#include <restcheck/translator.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace restcheck::cli {

unsigned parseOracleSpec(const std::string &spec)
{
    constexpr std::string_view prefix = "bounded:";
    if (spec.rfind(prefix, 0) != 0)
        throw std::invalid_argument(fmt::format("oracle must be 'bounded:<k>', got '{}'", spec));
    auto digits = spec.substr(prefix.size());
    if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(fmt::format("oracle bound must be a number, got '{}'", digits));
    auto k = static_cast<unsigned>(std::stoul(digits));
    if (k < 1 || k > kMaxOracleBound)
        throw std::invalid_argument(fmt::format("oracle bound must be between 1 and {}, got {}", kMaxOracleBound, k));
    return k;
}

namespace {

struct Loaded {
    std::optional<ModelFile> model;
    Diagnostics diags;
};

Loaded load(const std::string &text, const std::string &file)
{
    Loaded l;
    try {
        l.model = parseModelFile(text, file);
    } catch (const ParseError &e) {
        auto msg = fmt::format("expected {}, found {}", e.expected(), e.found());
        if (!e.hint().empty())
            msg += fmt::format(" ({})", e.hint());
        l.diags.push_back(Diagnostic::make(DiagCode::Parse, {ElementKind::Model, file, e.span()}, msg));
        return l;
    } catch (const ResolveError &e) {
        for (const auto &u : e.unbound())
            l.diags.push_back(Diagnostic::make(DiagCode::UnresolvedRef, {ElementKind::Model, u.name, u.span},
                                               fmt::format("unknown {} '{}'", u.kind, u.name)));
        return l;
    }
    l.diags = validateResourceModel(l.model->resources);
    if (l.model->behavior && l.diags.empty())
        l.diags = validateBehavioralModel(*l.model->behavior, l.model->resources);
    return l;
}

void emit(std::ostream &out, const CheckReport &r, Format f)
{
    out << (f == Format::Json ? renderJson(r) : renderText(r));
}

std::string modelName(const Loaded &l, const std::filesystem::path &input)
{
    return l.model ? l.model->resources.name : input.stem().string();
}

/// Cross-checks every verdict against the finite-model oracle. Returns the
/// disagreements as messages.
std::vector<std::string> crossCheck(const owl::Ontology &o, const std::vector<dl::SatVerdict> &verdicts, unsigned k)
{
    std::vector<std::string> problems;
    for (const auto &v : verdicts) {
        auto res = dl::boundedModelSearch(o, v.conceptIri, k);
        if (res.found() && !dl::satisfies(o, *res.model))
            problems.push_back(fmt::format("oracle model for ':{}' violates the ontology", v.conceptIri));
        bool oracleSat = res.found();
        bool tableauSat = v.status == dl::SatStatus::Sat;
        if (oracleSat != tableauSat)
            problems.push_back(fmt::format("':{}': tableau says {}, oracle at bound {} says {}", v.conceptIri,
                                           dl::toString(v.status), k, oracleSat ? "SAT" : "NO_MODEL"));
    }
    return problems;
}

} // namespace

int run(const CliConfig &config, std::ostream &out, std::ostream &err)
{
    std::ifstream in(config.inputPath, std::ios::binary);
    if (!in) {
        err << fmt::format("error: cannot read '{}'\n", config.inputPath.string());
        return exit_code::kIoFailure;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const auto file = config.inputPath.string();
    auto loaded = load(buf.str(), file);
    const auto name = modelName(loaded, config.inputPath);

    if (!loaded.diags.empty()) {
        auto report = invalidReport(name, loaded.diags);
        err << renderDiagnostics(report.diagnostics);
        if (config.command != Command::Translate)
            emit(out, report, config.format);
        return exit_code::kInvalid;
    }
    const auto &model = *loaded.model;
    const BehavioralModel *bm = model.behavior ? &*model.behavior : nullptr;

    if (config.command == Command::Validate) {
        CheckReport r{name, {}, {}, Overall::Consistent};
        if (config.format == Format::Json)
            out << renderJson(r);
        else
            out << fmt::format("VALID: model '{}' ({} resources, {} states)\n", name, model.resources.resources.size(),
                               bm ? bm->states.size() : 0);
        return exit_code::kOk;
    }

    auto translation = translateModels(model.resources, bm, config.baseIri);
    err << renderDiagnostics(translation.diagnostics);

    if (config.command == Command::Translate) {
        auto text = owl::serialize(translation.ontology);
        if (!config.outputPath) {
            out << text;
            return exit_code::kOk;
        }
        std::ofstream f(*config.outputPath, std::ios::binary | std::ios::trunc);
        f << text;
        f.close();
        if (!f) {
            err << fmt::format("error: cannot write '{}'\n", config.outputPath->string());
            return exit_code::kIoFailure;
        }
        return exit_code::kOk;
    }

    auto tbox = dl::compileTBox(translation.ontology);
    auto verdicts = dl::classifyAll(tbox);

    if (config.oracleBound) {
        std::vector<std::string> problems;
        try {
            problems = crossCheck(translation.ontology, verdicts, *config.oracleBound);
        } catch (const dl::BoundTooLarge &e) {
            problems.push_back(e.what());
        }
        if (!problems.empty()) {
            for (const auto &p : problems)
                err << "error[ORACLE] " << p << "\n";
            return exit_code::kOracleDisagreement;
        }
    }

    auto report = buildReport(name, verdicts, translation.iris, translation.diagnostics);
    emit(out, report, config.format);
    if (report.overall != Overall::Consistent)
        err << renderDiagnostics(report.diagnostics);
    return report.overall == Overall::Consistent ? exit_code::kOk : exit_code::kInconsistent;
}

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Consistency checker for REST interface models"};
    app.name("restcheck");
    app.require_subcommand(1);

    CliConfig config;
    std::string format = "text";
    std::string oracle;
    std::string output;

    auto *validate = app.add_subcommand("validate", "Parse and check structure only");
    auto *translate = app.add_subcommand("translate", "Write the OWL 2 functional-syntax ontology");
    auto *check = app.add_subcommand("check", "Decide satisfiability of every resource and state");
    for (auto *sub : {validate, translate, check}) {
        sub->add_option("input", config.inputPath, "Model file")->required();
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    }
    translate->add_option("-o,--output", output, "Output .ofn file (default: stdout)");
    for (auto *sub : {translate, check})
        sub->add_option("--base-iri", config.baseIri, "Namespace for generated entities");
    check->add_option("--oracle", oracle, "Cross-check verdicts with the finite-model search, e.g. bounded:3");

    try {
        app.parse(argc, argv);
        if (!oracle.empty())
            config.oracleBound = parseOracleSpec(oracle);
        if (config.baseIri.empty() || (config.baseIri.back() != '#' && config.baseIri.back() != '/'))
            throw std::invalid_argument("--base-iri must end with '#' or '/'");
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_code::kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kInvalid;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kInvalid;
    }

    if (validate->parsed())
        config.command = Command::Validate;
    else if (translate->parsed())
        config.command = Command::Translate;
    else
        config.command = Command::Check;
    config.format = format == "json" ? Format::Json : Format::Text;
    if (!output.empty())
        config.outputPath = output;

    try {
        return run(config, out, err);
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::kOracleDisagreement;
    }
}

} // namespace restcheck::cli
