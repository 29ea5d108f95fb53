#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoqual/errors.hpp"

namespace ontoqual {

enum class ReuseKind { Direct, Indirect };

// How a term specializes an element of a foundational ontology: directly, or
// indirectly through another core ontology that itself reuses the element.
struct ReuseMapping {
    ReuseKind source_kind = ReuseKind::Direct;
    std::string target; // qualified element, e.g. "ThingFO::Thing"

    bool operator==(const ReuseMapping&) const = default;
};

struct TermEntry {
    std::string name;
    bool defined = false; // has a natural-language definition
    std::optional<ReuseMapping> reuse;

    bool operator==(const TermEntry&) const = default;
};

struct PropertyEntry {
    std::string owner_term;
    std::string name;
    bool defined = false;

    bool operator==(const PropertyEntry&) const = default;
};

struct AxiomEntry {
    std::string id;
    bool formally_specified = false; // e.g. in first-order logic

    bool operator==(const AxiomEntry&) const = default;
};

enum class RelationKind { IsA, PartOf, NonTaxonomic };

struct RelationshipEntry {
    std::string name; // role name for unnamed relations
    RelationKind kind = RelationKind::NonTaxonomic;
    std::string source;
    std::string target;
    bool defined = false;        // only evaluated for non-taxonomic entries
    bool reused_from_fo = false; // only legal on non-taxonomic entries

    bool operator==(const RelationshipEntry&) const = default;
};

// One ontology's itemized data-collection record: the concepts that describe
// it, its ontological reuse, and the standard glossaries it refers to.
struct OntologyInventory {
    std::string entity_name;
    std::string version;
    std::vector<TermEntry> terms;
    std::vector<PropertyEntry> properties;
    std::vector<AxiomEntry> axioms;
    std::vector<RelationshipEntry> relationships;
    std::vector<std::string> glossaries;
    std::string provenance;

    bool operator==(const OntologyInventory&) const = default;
};

// The thirteen direct counts every metric is computed from.
struct MeasurementBasis {
    int tt = 0;     // total terms
    int dt = 0;     // defined terms
    int tp = 0;     // total properties
    int dp = 0;     // defined properties
    int ta = 0;     // total axioms
    int sa = 0;     // formally specified axioms
    int tntr = 0;   // total non-taxonomic relationships
    int dntr = 0;   // defined non-taxonomic relationships
    int tr = 0;     // total relationships
    int stdfo = 0;  // terms specialized directly from a foundational ontology
    int stifo = 0;  // terms specialized indirectly
    int sntrfo = 0; // non-taxonomic relationships specialized from a FO
    int uisg = 0;   // international standard glossaries used or referred

    bool operator==(const MeasurementBasis&) const = default;
};

struct Violation {
    std::string code;   // stable identifier, e.g. "dangling-reference"
    std::string where;  // offending element, e.g. "relationships[3]"
    std::string detail; // human-readable description

    bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

// Thrown when an operation requires a valid inventory but validate() found
// violations; carries the full report.
class ValidationError : public Error {
public:
    ValidationError(std::string entity, ValidationReport report);
    const ValidationReport& report() const { return report_; }
    const std::string& entity() const { return entity_; }

private:
    std::string entity_;
    ValidationReport report_;
};

// Parses an inventory document. Structural well-formedness only; semantic
// checks live in validate(). Throws ParseError (with a line/field locus) or
// SchemaVersionError.
OntologyInventory parse_inventory(std::string_view json_text);

// Reads and parses an inventory file. Throws IoError when unreadable.
OntologyInventory load_inventory(const std::string& path);

// Serializes an inventory back to its document form. parse(serialize(inv))
// reproduces inv exactly.
std::string serialize_inventory(const OntologyInventory& inv);

// Reports every violated invariant; an empty report means the inventory is
// valid. Violations are data, not failures.
ValidationReport validate(const OntologyInventory& inv);

// Scans the itemized lists into the thirteen counts. Requires a valid
// inventory (callers enforce; the scan itself never fails).
MeasurementBasis derive_basis(const OntologyInventory& inv);

} // namespace ontoqual
