#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ontoqual/report.hpp"

namespace {

using namespace ontoqual;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;    // usage, unreadable/malformed/invalid input
constexpr int kExitSemantic = 3; // pairing and binding failures

struct GlobalOptions {
    std::string model_path;
    std::string format_name = "text";
    std::string out_path;
};

RequirementsModel resolve_model(const GlobalOptions& opts) {
    if (opts.model_path.empty()) return default_model();
    return load_model(opts.model_path);
}

report::OutputFormat resolve_format(const GlobalOptions& opts) {
    const auto format = report::parse_format(opts.format_name);
    if (!format) throw ParseError("unknown format '" + opts.format_name + "'");
    return *format;
}

void emit(const std::string& rendered, const GlobalOptions& opts) {
    if (opts.out_path.empty()) {
        std::cout << rendered;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw IoError("cannot write output file: " + opts.out_path);
    out << rendered;
}

// Loads and fully validates one inventory, printing every violation.
OntologyInventory load_checked(const std::string& path) {
    OntologyInventory inv = load_inventory(path);
    if (ValidationReport violations = validate(inv); !violations.empty()) {
        std::cerr << report::render_violations(path, violations);
        throw ValidationError(inv.entity_name, std::move(violations));
    }
    return inv;
}

int cmd_evaluate(const std::string& path, const GlobalOptions& opts) {
    const RequirementsModel model = resolve_model(opts);
    const EntityEvaluation ev = evaluate_entity(model, load_checked(path));
    emit(report::render_evaluation(model, ev, resolve_format(opts)), opts);
    return kExitOk;
}

int cmd_compare(const std::vector<std::string>& paths, const GlobalOptions& opts) {
    const RequirementsModel model = resolve_model(opts);
    std::vector<OntologyInventory> inventories;
    inventories.reserve(paths.size());
    for (const std::string& path : paths) inventories.push_back(load_checked(path));
    const ComparisonReport rep = compare(model, inventories);
    emit(report::render_comparison(model, rep, resolve_format(opts)), opts);
    return kExitOk;
}

int cmd_diff(const std::string& before_path, const std::string& after_path,
             const GlobalOptions& opts) {
    const RequirementsModel model = resolve_model(opts);
    const OntologyInventory before = load_checked(before_path);
    const OntologyInventory after = load_checked(after_path);
    const ImprovementReport rep = reevaluate(model, before, after);
    emit(report::render_improvement(model, rep, resolve_format(opts)), opts);
    return kExitOk;
}

int cmd_plot_data(const std::string& indicator, const GlobalOptions& opts) {
    emit(report::render_plot_data(indicator), opts);
    return kExitOk;
}

int cmd_validate(const std::vector<std::string>& paths) {
    bool all_valid = true;
    for (const std::string& path : paths) {
        const OntologyInventory inv = load_inventory(path);
        const ValidationReport violations = validate(inv);
        if (violations.empty()) {
            std::cout << path << ": OK\n";
        } else {
            std::cout << report::render_violations(path, violations);
            all_valid = false;
        }
    }
    return all_valid ? kExitOk : kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measures, evaluates and compares the structural and reuse quality of core "
                 "ontologies"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--model", opts.model_path,
                   "Requirements-model file (defaults to the bundled model)");
    app.add_option("--format", opts.format_name, "Output format: text, csv or json")
        ->default_str("text");
    app.add_option("--out", opts.out_path, "Write output to a file instead of stdout");

    std::string eval_path;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Evaluate one ontology inventory");
    evaluate->add_option("inventory", eval_path, "Inventory file")->required();

    std::vector<std::string> compare_paths;
    CLI::App* compare_cmd = app.add_subcommand("compare", "Compare two or more inventories");
    compare_cmd->add_option("inventories", compare_paths, "Inventory files")
        ->required()
        ->expected(2, -1);

    std::string before_path;
    std::string after_path;
    CLI::App* diff = app.add_subcommand("diff", "Re-evaluate an improved entity version");
    diff->add_option("before", before_path, "Inventory before improvement")->required();
    diff->add_option("after", after_path, "Inventory after improvement")->required();

    std::string indicator;
    CLI::App* plot = app.add_subcommand("plot-data", "Sample an elementary indicator as CSV");
    plot->add_option("indicator", indicator, "Canonical indicator name")->required();

    std::vector<std::string> validate_paths;
    CLI::App* validate_cmd = app.add_subcommand("validate", "Validate inventory files");
    validate_cmd->add_option("inventories", validate_paths, "Inventory files")
        ->required()
        ->expected(1, -1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*evaluate) return cmd_evaluate(eval_path, opts);
        if (*compare_cmd) return cmd_compare(compare_paths, opts);
        if (*diff) return cmd_diff(before_path, after_path, opts);
        if (*plot) return cmd_plot_data(indicator, opts);
        if (*validate_cmd) return cmd_validate(validate_paths);
    } catch (const ValidationError&) {
        // violations were already listed by load_checked
        return kExitInput;
    } catch (const PairingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const BindingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
