#include "ontoqual/inventory.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace ontoqual {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::string_view kSchemaVersion = "1";

[[noreturn]] void fail_field(const std::string& path, const std::string& why) {
    throw ParseError(path + ": " + why);
}

const json& require_field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail_field(path, std::string("missing field '") + key + "'");
    return *it;
}

std::string get_string(const json& obj, const char* key, const std::string& path) {
    const json& v = require_field(obj, key, path);
    if (!v.is_string()) fail_field(path + "." + key, "expected a string");
    return v.get<std::string>();
}

bool get_bool(const json& obj, const char* key, const std::string& path) {
    const json& v = require_field(obj, key, path);
    if (!v.is_boolean()) fail_field(path + "." + key, "expected a boolean");
    return v.get<bool>();
}

const json& get_array(const json& obj, const char* key, const std::string& path) {
    const json& v = require_field(obj, key, path);
    if (!v.is_array()) fail_field(path + "." + key, "expected an array");
    return v;
}

ReuseKind parse_reuse_kind(const std::string& text, const std::string& path) {
    if (text == "direct") return ReuseKind::Direct;
    if (text == "indirect") return ReuseKind::Indirect;
    fail_field(path, "unknown source_kind '" + text + "' (expected direct|indirect)");
}

RelationKind parse_relation_kind(const std::string& text, const std::string& path) {
    if (text == "is_a") return RelationKind::IsA;
    if (text == "part_of") return RelationKind::PartOf;
    if (text == "non_taxonomic") return RelationKind::NonTaxonomic;
    fail_field(path, "unknown kind '" + text + "' (expected is_a|part_of|non_taxonomic)");
}

std::string_view relation_kind_name(RelationKind kind) {
    switch (kind) {
    case RelationKind::IsA: return "is_a";
    case RelationKind::PartOf: return "part_of";
    case RelationKind::NonTaxonomic: return "non_taxonomic";
    }
    return "?";
}

// Trims and collapses internal whitespace runs to single spaces.
std::string normalize_ws(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

ValidationError::ValidationError(std::string entity, ValidationReport report)
    : Error([&] {
          std::ostringstream os;
          os << "inventory '" << entity << "' failed validation with "
             << report.size() << (report.size() == 1 ? " violation" : " violations");
          return os.str();
      }()),
      entity_(std::move(entity)), report_(std::move(report)) {}

OntologyInventory parse_inventory(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed inventory document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("inventory document must be a JSON object");

    const std::string schema = get_string(doc, "schema_version", "$");
    if (schema != kSchemaVersion)
        throw SchemaVersionError("unsupported schema_version '" + schema + "' (expected \"1\")");

    OntologyInventory inv;
    inv.entity_name = get_string(doc, "entity_name", "$");
    inv.version = get_string(doc, "version", "$");

    const json& terms = get_array(doc, "terms", "$");
    inv.terms.reserve(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
        const std::string path = "terms[" + std::to_string(i) + "]";
        const json& t = terms[i];
        if (!t.is_object()) fail_field(path, "expected an object");
        TermEntry entry;
        entry.name = get_string(t, "name", path);
        entry.defined = get_bool(t, "defined", path);
        const json& reuse = require_field(t, "reuse", path);
        if (!reuse.is_null()) {
            if (!reuse.is_object()) fail_field(path + ".reuse", "expected an object or null");
            ReuseMapping mapping;
            mapping.source_kind = parse_reuse_kind(
                get_string(reuse, "source_kind", path + ".reuse"), path + ".reuse.source_kind");
            mapping.target = get_string(reuse, "target", path + ".reuse");
            entry.reuse = std::move(mapping);
        }
        inv.terms.push_back(std::move(entry));
    }

    const json& properties = get_array(doc, "properties", "$");
    inv.properties.reserve(properties.size());
    for (size_t i = 0; i < properties.size(); ++i) {
        const std::string path = "properties[" + std::to_string(i) + "]";
        const json& p = properties[i];
        if (!p.is_object()) fail_field(path, "expected an object");
        inv.properties.push_back({get_string(p, "owner_term", path), get_string(p, "name", path),
                                  get_bool(p, "defined", path)});
    }

    const json& axioms = get_array(doc, "axioms", "$");
    inv.axioms.reserve(axioms.size());
    for (size_t i = 0; i < axioms.size(); ++i) {
        const std::string path = "axioms[" + std::to_string(i) + "]";
        const json& a = axioms[i];
        if (!a.is_object()) fail_field(path, "expected an object");
        inv.axioms.push_back({get_string(a, "id", path), get_bool(a, "formally_specified", path)});
    }

    const json& relationships = get_array(doc, "relationships", "$");
    inv.relationships.reserve(relationships.size());
    for (size_t i = 0; i < relationships.size(); ++i) {
        const std::string path = "relationships[" + std::to_string(i) + "]";
        const json& r = relationships[i];
        if (!r.is_object()) fail_field(path, "expected an object");
        RelationshipEntry entry;
        entry.name = get_string(r, "name", path);
        entry.kind = parse_relation_kind(get_string(r, "kind", path), path + ".kind");
        entry.source = get_string(r, "source", path);
        entry.target = get_string(r, "target", path);
        entry.defined = get_bool(r, "defined", path);
        entry.reused_from_fo = get_bool(r, "reused_from_fo", path);
        inv.relationships.push_back(std::move(entry));
    }

    const json& glossaries = get_array(doc, "glossaries", "$");
    inv.glossaries.reserve(glossaries.size());
    for (size_t i = 0; i < glossaries.size(); ++i) {
        if (!glossaries[i].is_string())
            fail_field("glossaries[" + std::to_string(i) + "]", "expected a string");
        inv.glossaries.push_back(glossaries[i].get<std::string>());
    }

    inv.provenance = get_string(doc, "provenance", "$");
    return inv;
}

OntologyInventory load_inventory(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open inventory file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_inventory(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string serialize_inventory(const OntologyInventory& inv) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["entity_name"] = inv.entity_name;
    doc["version"] = inv.version;

    doc["terms"] = ordered_json::array();
    for (const TermEntry& t : inv.terms) {
        ordered_json entry{{"name", t.name}, {"defined", t.defined}};
        if (t.reuse) {
            entry["reuse"] = {
                {"source_kind", t.reuse->source_kind == ReuseKind::Direct ? "direct" : "indirect"},
                {"target", t.reuse->target}};
        } else {
            entry["reuse"] = nullptr;
        }
        doc["terms"].push_back(std::move(entry));
    }

    doc["properties"] = ordered_json::array();
    for (const PropertyEntry& p : inv.properties)
        doc["properties"].push_back(
            {{"owner_term", p.owner_term}, {"name", p.name}, {"defined", p.defined}});

    doc["axioms"] = ordered_json::array();
    for (const AxiomEntry& a : inv.axioms)
        doc["axioms"].push_back({{"id", a.id}, {"formally_specified", a.formally_specified}});

    doc["relationships"] = ordered_json::array();
    for (const RelationshipEntry& r : inv.relationships)
        doc["relationships"].push_back({{"name", r.name},
                                        {"kind", std::string(relation_kind_name(r.kind))},
                                        {"source", r.source},
                                        {"target", r.target},
                                        {"defined", r.defined},
                                        {"reused_from_fo", r.reused_from_fo}});

    doc["glossaries"] = inv.glossaries;
    doc["provenance"] = inv.provenance;
    return doc.dump(2) + "\n";
}

ValidationReport validate(const OntologyInventory& inv) {
    ValidationReport report;
    auto add = [&report](std::string code, std::string where, std::string detail) {
        report.push_back({std::move(code), std::move(where), std::move(detail)});
    };

    if (inv.terms.empty())
        add("empty-ontology", "terms", "an ontology with zero terms cannot be measured");

    std::set<std::string> term_names;
    for (size_t i = 0; i < inv.terms.size(); ++i) {
        const TermEntry& t = inv.terms[i];
        const std::string where = "terms[" + std::to_string(i) + "]";
        if (t.name.empty()) add("empty-name", where, "term name must be non-empty");
        if (!term_names.insert(t.name).second)
            add("duplicate-term", where, "term '" + t.name + "' listed more than once");
    }

    std::set<std::pair<std::string, std::string>> property_keys;
    for (size_t i = 0; i < inv.properties.size(); ++i) {
        const PropertyEntry& p = inv.properties[i];
        const std::string where = "properties[" + std::to_string(i) + "]";
        if (p.name.empty()) add("empty-name", where, "property name must be non-empty");
        if (!property_keys.insert({p.owner_term, p.name}).second)
            add("duplicate-property", where,
                "property '" + p.owner_term + "." + p.name + "' listed more than once");
        if (!term_names.count(p.owner_term))
            add("dangling-reference", where,
                "owner term '" + p.owner_term + "' does not name a term");
    }

    std::set<std::string> axiom_ids;
    for (size_t i = 0; i < inv.axioms.size(); ++i) {
        if (!axiom_ids.insert(inv.axioms[i].id).second)
            add("duplicate-axiom", "axioms[" + std::to_string(i) + "]",
                "axiom id '" + inv.axioms[i].id + "' listed more than once");
    }

    std::set<std::tuple<std::string, RelationKind, std::string, std::string>> relation_keys;
    for (size_t i = 0; i < inv.relationships.size(); ++i) {
        const RelationshipEntry& r = inv.relationships[i];
        const std::string where = "relationships[" + std::to_string(i) + "]";
        for (const std::string* end : {&r.source, &r.target}) {
            if (!term_names.count(*end))
                add("dangling-reference", where, "'" + *end + "' does not name a term");
        }
        if (r.reused_from_fo && r.kind != RelationKind::NonTaxonomic)
            add("reuse-flag-on-taxonomic", where,
                "reused_from_fo is only meaningful for non-taxonomic relationships");
        if (!relation_keys.insert({r.name, r.kind, r.source, r.target}).second)
            add("duplicate-relationship", where,
                "relationship " + std::string(relation_kind_name(r.kind)) + " '" + r.name +
                    "' (" + r.source + " -> " + r.target + ") listed more than once");
    }

    std::set<std::string> glossary_names;
    for (size_t i = 0; i < inv.glossaries.size(); ++i) {
        if (!glossary_names.insert(normalize_ws(inv.glossaries[i])).second)
            add("duplicate-glossary", "glossaries[" + std::to_string(i) + "]",
                "glossary '" + inv.glossaries[i] + "' listed more than once");
    }

    return report;
}

MeasurementBasis derive_basis(const OntologyInventory& inv) {
    MeasurementBasis b;
    b.tt = static_cast<int>(inv.terms.size());
    for (const TermEntry& t : inv.terms) {
        if (t.defined) ++b.dt;
        if (t.reuse) {
            if (t.reuse->source_kind == ReuseKind::Direct)
                ++b.stdfo;
            else
                ++b.stifo;
        }
    }
    b.tp = static_cast<int>(inv.properties.size());
    b.dp = static_cast<int>(std::count_if(inv.properties.begin(), inv.properties.end(),
                                          [](const PropertyEntry& p) { return p.defined; }));
    b.ta = static_cast<int>(inv.axioms.size());
    b.sa = static_cast<int>(std::count_if(inv.axioms.begin(), inv.axioms.end(),
                                          [](const AxiomEntry& a) { return a.formally_specified; }));
    b.tr = static_cast<int>(inv.relationships.size());
    for (const RelationshipEntry& r : inv.relationships) {
        if (r.kind != RelationKind::NonTaxonomic) continue;
        ++b.tntr;
        if (r.defined) ++b.dntr;
        if (r.reused_from_fo) ++b.sntrfo;
    }
    b.uisg = static_cast<int>(inv.glossaries.size());
    return b;
}

} // namespace ontoqual
