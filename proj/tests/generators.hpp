#pragma once

#include <random>
#include <set>
#include <string>
#include <tuple>

#include "ontoqual/inventory.hpp"

// Deterministic random inventories for property tests, kept small (<= 20
// entries per list) so the brute-force oracle stays readable.
namespace testgen {

inline ontoqual::OntologyInventory random_inventory(std::mt19937& rng) {
    using namespace ontoqual;
    auto coin = [&rng] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
    auto up_to = [&rng](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };

    OntologyInventory inv;
    inv.entity_name = "Gen";
    inv.version = "0";
    inv.provenance = "generated";

    const int term_count = 1 + up_to(19);
    for (int i = 0; i < term_count; ++i) {
        TermEntry term;
        term.name = "t" + std::to_string(i);
        term.defined = coin();
        switch (up_to(2)) {
        case 0: break;
        case 1: term.reuse = ReuseMapping{ReuseKind::Direct, "FO::X"}; break;
        case 2: term.reuse = ReuseMapping{ReuseKind::Indirect, "FO::Y"}; break;
        }
        inv.terms.push_back(std::move(term));
    }

    auto term_name = [&] { return "t" + std::to_string(up_to(term_count - 1)); };

    const int property_count = up_to(20);
    for (int i = 0; i < property_count; ++i)
        inv.properties.push_back({term_name(), "p" + std::to_string(i), coin()});

    const int axiom_count = up_to(20);
    for (int i = 0; i < axiom_count; ++i)
        inv.axioms.push_back({"a" + std::to_string(i), coin()});

    static const char* kNames[] = {"is_a", "part_of", "links", "produces", "uses"};
    std::set<std::tuple<std::string, RelationKind, std::string, std::string>> seen;
    const int relationship_attempts = up_to(20);
    for (int i = 0; i < relationship_attempts; ++i) {
        RelationshipEntry rel;
        rel.kind = static_cast<RelationKind>(up_to(2));
        rel.name = rel.kind == RelationKind::IsA      ? "is_a"
                   : rel.kind == RelationKind::PartOf ? "part_of"
                                                      : kNames[2 + up_to(2)];
        rel.source = term_name();
        rel.target = term_name();
        rel.defined = coin();
        rel.reused_from_fo = rel.kind == RelationKind::NonTaxonomic && coin();
        if (seen.insert({rel.name, rel.kind, rel.source, rel.target}).second)
            inv.relationships.push_back(std::move(rel));
    }

    const int glossary_count = up_to(5);
    for (int i = 0; i < glossary_count; ++i) inv.glossaries.push_back("g" + std::to_string(i));
    return inv;
}

// Independent recount over the raw lists; intentionally written as plain
// loops rather than reusing any library scan.
inline ontoqual::MeasurementBasis brute_force_basis(const ontoqual::OntologyInventory& inv) {
    using namespace ontoqual;
    MeasurementBasis expected;
    for (const TermEntry& t : inv.terms) {
        expected.tt += 1;
        if (t.defined) expected.dt += 1;
        if (t.reuse && t.reuse->source_kind == ReuseKind::Direct) expected.stdfo += 1;
        if (t.reuse && t.reuse->source_kind == ReuseKind::Indirect) expected.stifo += 1;
    }
    for (const PropertyEntry& p : inv.properties) {
        expected.tp += 1;
        if (p.defined) expected.dp += 1;
    }
    for (const AxiomEntry& a : inv.axioms) {
        expected.ta += 1;
        if (a.formally_specified) expected.sa += 1;
    }
    for (const RelationshipEntry& r : inv.relationships) {
        expected.tr += 1;
        if (r.kind == RelationKind::NonTaxonomic) expected.tntr += 1;
        if (r.kind == RelationKind::NonTaxonomic && r.defined) expected.dntr += 1;
        if (r.kind == RelationKind::NonTaxonomic && r.reused_from_fo) expected.sntrfo += 1;
    }
    for (const std::string& g : inv.glossaries) {
        (void)g;
        expected.uisg += 1;
    }
    return expected;
}

} // namespace testgen
