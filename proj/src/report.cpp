#include "ontoqual/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ontoqual::report {

using nlohmann::ordered_json;

namespace {

struct MetricLabel {
    std::string_view acronym;
    std::string_view name;
};

constexpr MetricLabel kDirectMetrics[] = {
    {"#TT", "Total Number of Terms"},
    {"#DT", "Number of Defined Terms"},
    {"#TP", "Total Number of Properties"},
    {"#DP", "Number of Defined Properties"},
    {"#TA", "Total Number of Axioms"},
    {"#SA", "Number of Specified Axioms"},
    {"#TNTR", "Total Number of Non-Taxonomic Relationships"},
    {"#DNTR", "Number of Defined Non-Taxonomic Relationships"},
    {"#TR", "Total Number of Relationships"},
    {"#STDFO", "Number of Specialized Terms Directly from Foundational Ontology"},
    {"#STIFO", "Number of Specialized Terms Indirectly from Foundational Ontology"},
    {"#SNTRFO", "Number of Specialized Non-Taxonomic Relationships from Foundational Ontology"},
    {"#UISG", "Number of Used International Standard Glossaries"},
};

constexpr MetricLabel kIndirectMetrics[] = {
    {"%DT", "Percentage of Defined Terms"},
    {"%DP", "Percentage of Defined Properties"},
    {"%SA", "Percentage of Specified Axioms"},
    {"%DNTR", "Percentage of Defined Non-Taxonomic Relationships"},
    {"%BNTR", "Percentage of Balanced Non-Taxonomic Relationships"},
    {"%STFO", "Percentage of Specialized Terms from Foundational Ontology"},
    {"%SNTRFO", "Percentage of Specialized Non-Taxonomic Relationships from Foundational Ontology"},
};

std::vector<int> direct_counts(const MeasurementBasis& b) {
    return {b.tt, b.dt, b.tp, b.dp, b.ta, b.sa, b.tntr, b.dntr, b.tr, b.stdfo, b.stifo, b.sntrfo,
            b.uisg};
}

std::vector<double> indirect_values(const MeasureSet& m) {
    return {m.pct_dt, m.pct_dp, m.pct_sa, m.pct_dntr, m.pct_bntr, m.pct_stfo, m.pct_sntrfo};
}

// Simple aligned-column table; numeric columns are right-aligned and every
// line is emitted without trailing spaces.
class TextTable {
public:
    explicit TextTable(std::vector<bool> right_align) : right_align_(std::move(right_align)) {}

    void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void render(std::ostringstream& out, int indent) const {
        std::vector<size_t> widths(right_align_.size(), 0);
        for (const auto& row : rows_)
            for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
        for (const auto& row : rows_) {
            std::string line(static_cast<size_t>(indent), ' ');
            for (size_t c = 0; c < row.size(); ++c) {
                const size_t pad = widths[c] - row[c].size();
                if (right_align_[c]) line += std::string(pad, ' ');
                line += row[c];
                if (c + 1 < row.size()) {
                    if (!right_align_[c]) line += std::string(pad, ' ');
                    line += "  ";
                }
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out << line << '\n';
        }
    }

private:
    std::vector<bool> right_align_;
    std::vector<std::vector<std::string>> rows_;
};

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string_view> header) { row(header); }

    void row(const std::vector<std::string_view>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out_ << ',';
            out_ << csv_escape(cells[i]);
        }
        out_ << '\n';
    }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

std::string_view operator_text(const RequirementsNode& node) {
    return node.op ? to_string(*node.op) : std::string_view{};
}

// Walks the model and result trees in lockstep (they mirror each other).
template <typename Fn>
void walk_pair(const RequirementsNode& model, const EvaluationResult& result, int depth, Fn&& fn) {
    fn(model, result, depth);
    for (size_t i = 0; i < model.children.size(); ++i)
        walk_pair(model.children[i], result.children[i], depth + 1, fn);
}

std::string tree_label(const RequirementsNode& node, int depth) {
    return std::string(static_cast<size_t>(2 * depth), ' ') + node.id + " " + node.name;
}

std::string weight_cell(const RequirementsNode& node, int depth) {
    return depth == 0 ? std::string{} : format_2dp(node.weight);
}

// Column labels for multi-entity tables; versions disambiguate duplicates.
std::vector<std::string> entity_labels(const ComparisonReport& rep) {
    std::map<std::string, int> name_count;
    for (const EntityEvaluation& ev : rep.entities) ++name_count[ev.entity_name];
    std::vector<std::string> labels;
    for (const EntityEvaluation& ev : rep.entities)
        labels.push_back(name_count[ev.entity_name] > 1 ? ev.entity_name + " v" + ev.version
                                                        : ev.entity_name);
    return labels;
}

const ElementaryResult* find_elementary(const std::vector<ElementaryResult>& elems,
                                        std::string_view attribute_id) {
    for (const ElementaryResult& e : elems)
        if (e.attribute_id == attribute_id) return &e;
    return nullptr;
}

ordered_json tree_json(const RequirementsNode& model, const EvaluationResult& result) {
    ordered_json node;
    node["id"] = model.id;
    node["name"] = model.name;
    node["weight"] = model.weight;
    if (model.op)
        node["operator"] = std::string(to_string(*model.op));
    else
        node["operator"] = nullptr;
    node["value"] = result.value;
    node["rounded"] = format_2dp(result.value);
    node["level"] = std::string(to_string(result.level));
    if (!model.children.empty()) {
        node["children"] = ordered_json::array();
        for (size_t i = 0; i < model.children.size(); ++i)
            node["children"].push_back(tree_json(model.children[i], result.children[i]));
    }
    return node;
}

void weakness_rows(const EntityEvaluation& ev, TextTable& table, int extra_indent) {
    const std::string margin(static_cast<size_t>(extra_indent), ' ');
    for (const Weakness& w : weaknesses(ev.tree)) {
        const ElementaryResult* elem = find_elementary(ev.elementary, w.attribute_id);
        table.add_row({margin + w.attribute_id, elem ? elem->indicator_name : std::string{},
                       format_2dp(w.score), std::string(to_string(w.level))});
    }
}

} // namespace

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "text") return OutputFormat::Text;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string format_2dp(double value) {
    const long long cents = std::llround(std::abs(value) * 100.0);
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%s%lld.%02lld", value < 0 && cents > 0 ? "-" : "",
                  cents / 100, cents % 100);
    return buffer;
}

std::string format_delta_2dp(double value) {
    const long long cents = std::llround(std::abs(value) * 100.0);
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%s%lld.%02lld", value < 0 && cents > 0 ? "-" : "+",
                  cents / 100, cents % 100);
    return buffer;
}

std::string format_full(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

// ---------------------------------------------------------------------------
// evaluate

namespace {

std::string evaluation_text(const RequirementsModel& model, const EntityEvaluation& ev) {
    std::ostringstream out;
    out << "Entity: " << ev.entity_name << " (version " << ev.version << ")\n";
    out << "Model: " << model.root.name << "\n\n";

    out << "Direct measures\n";
    TextTable direct({false, true});
    const std::vector<int> counts = direct_counts(ev.measures.basis);
    for (size_t i = 0; i < std::size(kDirectMetrics); ++i)
        direct.add_row({std::string(kDirectMetrics[i].acronym), std::to_string(counts[i])});
    direct.render(out, 2);

    out << "\nIndirect measures\n";
    TextTable indirect({false, true});
    const std::vector<double> values = indirect_values(ev.measures);
    for (size_t i = 0; i < std::size(kIndirectMetrics); ++i)
        indirect.add_row({std::string(kIndirectMetrics[i].acronym), format_2dp(values[i])});
    indirect.render(out, 2);

    out << "\nElementary indicators\n";
    TextTable elementary({false, false, true, false});
    for (const ElementaryResult& e : ev.elementary)
        elementary.add_row(
            {e.attribute_id, e.indicator_name, format_2dp(e.score), std::string(to_string(e.level))});
    elementary.render(out, 2);

    out << "\nRequirements tree\n";
    TextTable tree({false, true, false, true, false});
    tree.add_row({"Node", "Weight", "Op.", "Value", "Level"});
    walk_pair(model.root, ev.tree, 0,
              [&](const RequirementsNode& node, const EvaluationResult& result, int depth) {
                  tree.add_row({tree_label(node, depth), weight_cell(node, depth),
                                std::string(operator_text(node)), format_2dp(result.value),
                                std::string(to_string(result.level))});
              });
    tree.render(out, 2);
    return out.str();
}

constexpr std::string_view kCsvHeader[] = {"section", "entity", "id",         "value",
                                           "level",   "name",   "value_full", "weight",
                                           "op"};

void tree_csv_rows(CsvWriter& csv, std::string_view section, std::string_view entity,
                   const RequirementsModel& model, const EvaluationResult& result) {
    walk_pair(model.root, result, 0,
              [&](const RequirementsNode& node, const EvaluationResult& res, int) {
                  csv.row({section, entity, node.id, format_2dp(res.value),
                           to_string(res.level), node.name, format_full(res.value),
                           format_full(node.weight), operator_text(node)});
              });
}

std::string evaluation_csv(const RequirementsModel& model, const EntityEvaluation& ev) {
    CsvWriter csv({std::begin(kCsvHeader), std::end(kCsvHeader)});
    const std::vector<int> counts = direct_counts(ev.measures.basis);
    for (size_t i = 0; i < std::size(kDirectMetrics); ++i) {
        const std::string count = std::to_string(counts[i]);
        csv.row({"measure", ev.entity_name, kDirectMetrics[i].acronym, count, "",
                 kDirectMetrics[i].name, count, "", ""});
    }
    const std::vector<double> values = indirect_values(ev.measures);
    for (size_t i = 0; i < std::size(kIndirectMetrics); ++i) {
        csv.row({"measure", ev.entity_name, kIndirectMetrics[i].acronym, format_2dp(values[i]), "",
                 kIndirectMetrics[i].name, format_full(values[i]), "", ""});
    }
    for (const ElementaryResult& e : ev.elementary)
        csv.row({"elementary", ev.entity_name, e.attribute_id, format_2dp(e.score),
                 to_string(e.level), e.indicator_name, format_full(e.score), "", ""});
    tree_csv_rows(csv, "tree", ev.entity_name, model, ev.tree);
    return csv.str();
}

ordered_json measures_json(const MeasureSet& m) {
    ordered_json measures;
    measures["direct"] = ordered_json::object();
    const std::vector<int> counts = direct_counts(m.basis);
    for (size_t i = 0; i < std::size(kDirectMetrics); ++i)
        measures["direct"][std::string(kDirectMetrics[i].acronym)] = counts[i];
    measures["indirect"] = ordered_json::array();
    const std::vector<double> values = indirect_values(m);
    for (size_t i = 0; i < std::size(kIndirectMetrics); ++i)
        measures["indirect"].push_back({{"metric", std::string(kIndirectMetrics[i].acronym)},
                                        {"value", values[i]},
                                        {"rounded", format_2dp(values[i])}});
    return measures;
}

ordered_json elementary_json(const std::vector<ElementaryResult>& elems) {
    ordered_json arr = ordered_json::array();
    for (const ElementaryResult& e : elems)
        arr.push_back({{"attribute", e.attribute_id},
                       {"indicator", e.indicator_name},
                       {"input", e.input},
                       {"score", e.score},
                       {"rounded", format_2dp(e.score)},
                       {"level", std::string(to_string(e.level))}});
    return arr;
}

std::string evaluation_json(const RequirementsModel& model, const EntityEvaluation& ev) {
    ordered_json doc;
    doc["entity"] = ev.entity_name;
    doc["version"] = ev.version;
    doc["model"] = model.root.name;
    doc["measures"] = measures_json(ev.measures);
    doc["elementary"] = elementary_json(ev.elementary);
    doc["tree"] = tree_json(model.root, ev.tree);
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_evaluation(const RequirementsModel& model, const EntityEvaluation& ev,
                              OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: return evaluation_text(model, ev);
    case OutputFormat::Csv: return evaluation_csv(model, ev);
    case OutputFormat::Json: return evaluation_json(model, ev);
    }
    return {};
}

// ---------------------------------------------------------------------------
// compare

namespace {

std::string comparison_text(const RequirementsModel& model, const ComparisonReport& rep) {
    std::ostringstream out;
    out << "Model: " << rep.model_id << "\n";
    out << "Entities: ";
    for (size_t i = 0; i < rep.entities.size(); ++i) {
        if (i > 0) out << ", ";
        out << rep.entities[i].entity_name << " (version " << rep.entities[i].version << ")";
    }
    out << "\n\n";

    const std::vector<std::string> labels = entity_labels(rep);

    out << "Requirements tree\n";
    std::vector<bool> align{false, true, false};
    align.insert(align.end(), rep.entities.size(), true);
    TextTable tree(align);
    std::vector<std::string> header{"Node", "Weight", "Op."};
    header.insert(header.end(), labels.begin(), labels.end());
    tree.add_row(std::move(header));
    walk_pair(model.root, rep.entities.front().tree, 0,
              [&](const RequirementsNode& node, const EvaluationResult&, int depth) {
                  std::vector<std::string> row{tree_label(node, depth), weight_cell(node, depth),
                                               std::string(operator_text(node))};
                  // node order is identical across entities; index by path
                  for (const EntityEvaluation& ev : rep.entities) {
                      double value = 0;
                      walk_pair(model.root, ev.tree, 0,
                                [&](const RequirementsNode& m, const EvaluationResult& r, int) {
                                    if (m.id == node.id) value = r.value;
                                });
                      row.push_back(format_2dp(value));
                  }
                  tree.add_row(std::move(row));
              });
    tree.render(out, 2);

    out << "\nRanking\n";
    TextTable ranking({false, false, true});
    for (size_t i = 0; i < rep.ranking.size(); ++i) {
        double value = 0;
        for (const EntityEvaluation& ev : rep.entities)
            if (ev.entity_name == rep.ranking[i]) value = ev.tree.value;
        ranking.add_row({std::to_string(i + 1) + ".", rep.ranking[i], format_2dp(value)});
    }
    ranking.render(out, 2);

    out << "\nWeaknesses\n";
    for (size_t i = 0; i < rep.entities.size(); ++i) {
        const EntityEvaluation& ev = rep.entities[i];
        out << "  " << labels[i] << "\n";
        const std::vector<Weakness> weak = weaknesses(ev.tree);
        if (weak.empty()) {
            out << "    (none)\n";
            continue;
        }
        TextTable table({false, false, true, false});
        weakness_rows(ev, table, 0);
        table.render(out, 4);
    }
    return out.str();
}

std::string comparison_csv(const RequirementsModel& model, const ComparisonReport& rep) {
    CsvWriter csv({std::begin(kCsvHeader), std::end(kCsvHeader)});
    for (const EntityEvaluation& ev : rep.entities)
        tree_csv_rows(csv, "tree", ev.entity_name, model, ev.tree);
    for (size_t i = 0; i < rep.ranking.size(); ++i) {
        double value = 0;
        for (const EntityEvaluation& ev : rep.entities)
            if (ev.entity_name == rep.ranking[i]) value = ev.tree.value;
        csv.row({"ranking", rep.ranking[i], std::to_string(i + 1), format_2dp(value), "", "",
                 format_full(value), "", ""});
    }
    for (const EntityEvaluation& ev : rep.entities) {
        for (const Weakness& w : weaknesses(ev.tree)) {
            const ElementaryResult* elem = find_elementary(ev.elementary, w.attribute_id);
            csv.row({"weakness", ev.entity_name, w.attribute_id, format_2dp(w.score),
                     to_string(w.level), elem ? elem->indicator_name : std::string{},
                     format_full(w.score), "", ""});
        }
    }
    return csv.str();
}

std::string comparison_json(const RequirementsModel& model, const ComparisonReport& rep) {
    ordered_json doc;
    doc["model"] = rep.model_id;
    doc["entities"] = ordered_json::array();
    for (const EntityEvaluation& ev : rep.entities)
        doc["entities"].push_back({{"entity", ev.entity_name},
                                   {"version", ev.version},
                                   {"measures", measures_json(ev.measures)},
                                   {"elementary", elementary_json(ev.elementary)},
                                   {"tree", tree_json(model.root, ev.tree)}});
    doc["ranking"] = ordered_json::array();
    for (size_t i = 0; i < rep.ranking.size(); ++i) {
        double value = 0;
        for (const EntityEvaluation& ev : rep.entities)
            if (ev.entity_name == rep.ranking[i]) value = ev.tree.value;
        doc["ranking"].push_back({{"position", i + 1},
                                  {"entity", rep.ranking[i]},
                                  {"value", value},
                                  {"rounded", format_2dp(value)}});
    }
    doc["per_node_winner"] = ordered_json::object();
    for (const auto& [node_id, winners] : rep.per_node_winner)
        doc["per_node_winner"][node_id] = winners;
    doc["weaknesses"] = ordered_json::object();
    for (const EntityEvaluation& ev : rep.entities) {
        ordered_json arr = ordered_json::array();
        for (const Weakness& w : weaknesses(ev.tree)) {
            const ElementaryResult* elem = find_elementary(ev.elementary, w.attribute_id);
            arr.push_back({{"attribute", w.attribute_id},
                           {"indicator", elem ? elem->indicator_name : std::string{}},
                           {"score", w.score},
                           {"rounded", format_2dp(w.score)},
                           {"level", std::string(to_string(w.level))}});
        }
        doc["weaknesses"][ev.entity_name] = std::move(arr);
    }
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_comparison(const RequirementsModel& model, const ComparisonReport& rep,
                              OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: return comparison_text(model, rep);
    case OutputFormat::Csv: return comparison_csv(model, rep);
    case OutputFormat::Json: return comparison_json(model, rep);
    }
    return {};
}

// ---------------------------------------------------------------------------
// diff

namespace {

std::string improvement_text(const RequirementsModel& model, const ImprovementReport& rep) {
    std::ostringstream out;
    out << "Entity: " << rep.entity_name << " (version " << rep.before_version << " -> "
        << rep.after_version << ")\n";
    out << "Model: " << model.root.name << "\n\n";

    out << "Requirements tree\n";
    TextTable tree({false, true, false, true, true, true});
    tree.add_row({"Node", "Weight", "Op.", "Before", "After", "Delta"});
    walk_pair(model.root, rep.before.tree, 0,
              [&](const RequirementsNode& node, const EvaluationResult& before, int depth) {
                  double after = 0;
                  walk_pair(model.root, rep.after.tree, 0,
                            [&](const RequirementsNode& m, const EvaluationResult& r, int) {
                                if (m.id == node.id) after = r.value;
                            });
                  tree.add_row({tree_label(node, depth), weight_cell(node, depth),
                                std::string(operator_text(node)), format_2dp(before.value),
                                format_2dp(after), format_delta_2dp(after - before.value)});
              });
    tree.render(out, 2);

    out << "\nAddressed attributes\n";
    if (rep.addressed_attributes.empty()) {
        out << "  (none)\n";
        return out.str();
    }
    for (const std::string& id : rep.addressed_attributes) {
        // addressed ids are bound tree leaves, so both lookups succeed
        const ElementaryResult* b = find_elementary(rep.before.elementary, id);
        const ElementaryResult* a = find_elementary(rep.after.elementary, id);
        if (!b || !a) continue;
        std::string name;
        walk_pair(model.root, rep.before.tree, 0,
                  [&](const RequirementsNode& m, const EvaluationResult&, int) {
                      if (m.id == id) name = m.name;
                  });
        out << "  " << id << " " << name << ": " << format_2dp(b->score) << " -> "
            << format_2dp(a->score) << " (" << to_string(b->level) << " -> "
            << to_string(a->level) << ")\n";
    }
    return out.str();
}

std::string improvement_csv(const RequirementsModel& model, const ImprovementReport& rep) {
    CsvWriter csv({std::begin(kCsvHeader), std::end(kCsvHeader)});
    tree_csv_rows(csv, "before", rep.entity_name + " v" + rep.before_version, model,
                  rep.before.tree);
    tree_csv_rows(csv, "after", rep.entity_name + " v" + rep.after_version, model, rep.after.tree);
    walk_pair(model.root, rep.before.tree, 0,
              [&](const RequirementsNode& node, const EvaluationResult&, int) {
                  const double delta = rep.deltas.at(node.id);
                  csv.row({"delta", rep.entity_name, node.id, format_delta_2dp(delta), "",
                           node.name, format_full(delta), "", ""});
              });
    for (const std::string& id : rep.addressed_attributes) {
        const ElementaryResult* a = find_elementary(rep.after.elementary, id);
        csv.row({"addressed", rep.entity_name, id, a ? format_2dp(a->score) : std::string{},
                 a ? to_string(a->level) : std::string_view{},
                 a ? a->indicator_name : std::string{}, a ? format_full(a->score) : std::string{},
                 "", ""});
    }
    return csv.str();
}

std::string improvement_json(const RequirementsModel& model, const ImprovementReport& rep) {
    ordered_json doc;
    doc["entity"] = rep.entity_name;
    doc["model"] = model.root.name;
    doc["before_version"] = rep.before_version;
    doc["after_version"] = rep.after_version;
    doc["before"] = tree_json(model.root, rep.before.tree);
    doc["after"] = tree_json(model.root, rep.after.tree);
    doc["deltas"] = ordered_json::object();
    walk_pair(model.root, rep.before.tree, 0,
              [&](const RequirementsNode& node, const EvaluationResult&, int) {
                  const double delta = rep.deltas.at(node.id);
                  doc["deltas"][node.id] = {{"value", delta}, {"rounded", format_delta_2dp(delta)}};
              });
    doc["addressed_attributes"] = rep.addressed_attributes;
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_improvement(const RequirementsModel& model, const ImprovementReport& rep,
                               OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: return improvement_text(model, rep);
    case OutputFormat::Csv: return improvement_csv(model, rep);
    case OutputFormat::Json: return improvement_json(model, rep);
    }
    return {};
}

// ---------------------------------------------------------------------------
// plot data & diagnostics

std::string render_plot_data(std::string_view indicator_name) {
    const IndicatorInfo* info = find_indicator(indicator_name);
    if (!info) {
        std::string names;
        for (const IndicatorInfo& candidate : canonical_indicators()) {
            if (!names.empty()) names += ", ";
            names += candidate.name;
        }
        throw DomainError("unknown indicator '" + std::string(indicator_name) +
                          "'; valid names: " + names);
    }

    std::ostringstream out;
    out << "x,score\n";
    char buffer[64];
    if (info->count_valued) {
        for (int n = 0; n <= 10; ++n) {
            const double score = eval_elementary(*info->spec, n);
            std::snprintf(buffer, sizeof buffer, "%d,%d\n", n, static_cast<int>(score));
            out << buffer;
        }
    } else {
        // step 0.5 over [0,100]; iterate in halves to keep x exact
        for (int half = 0; half <= 200; ++half) {
            const double x = half / 2.0;
            const double score = eval_elementary(*info->spec, x);
            std::snprintf(buffer, sizeof buffer, "%.1f,%s\n", x, format_2dp(score).c_str());
            out << buffer;
        }
    }
    return out.str();
}

std::string render_violations(std::string_view source_label, const ValidationReport& report) {
    std::ostringstream out;
    out << source_label << ": " << report.size()
        << (report.size() == 1 ? " violation" : " violations") << "\n";
    for (const Violation& v : report)
        out << "  " << v.code << " at " << v.where << ": " << v.detail << "\n";
    return out.str();
}

} // namespace ontoqual::report
