#pragma once

#include "sla/invariants.hpp"

namespace sla {

struct TableRow {
    std::string key;    // stable row identifier
    std::string note;   // human-readable description of the instance
    std::string value;  // canonical serialized verdict
    std::vector<std::string> flags;
};

struct TableReport {
    std::string table_id;
    std::vector<TableRow> rows;
};

std::vector<std::string> table_ids();
TableReport compute_table(const std::string& table_id, const Config& cfg);

struct AlgebraSpec {
    Kind kind = Kind::gl;
    bool exceptional = false;
    ExcKind exc = ExcKind::G12;
    int m = 0, n = 0;
    Rat alpha;
};
AlgebraSpec parse_algebra(const std::string& name, int m, int n, const std::string& alpha);

/* Module-spec grammar used by the CLI:
 *   std | triv | pi:<spec> | dual:<spec> | sym<k>:<spec> | alt:<k>:<spec>
 *   | kac:t=<rat> | kac:<weight> | thin-kac:w | thick-kac:w
 *   | family:t=<rat> | u11 | irr:<weight>
 * weight literals: "e:1,0;d:-1" (comma-separated rationals per block). */
Rep build_module(const AlgebraPtr& g, const std::string& spec, const Config& cfg);
Weight parse_weight(const AlgebraPtr& g, const std::string& text);

/* Canonical short strings for reports. */
std::string scan_value(const Rep& r, const Config& cfg);
std::string cr_value(const Rep& r, int dcap, size_t dim_cap);

}  // namespace sla
