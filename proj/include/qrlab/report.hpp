#pragma once

#include <iosfwd>
#include <vector>

#include "qrlab/verify.hpp"

namespace qrlab {

// One JSON object per prime per line:
//   {"prime": int, "checks": [{"name", "pass", "computed", "expected", "micros"}]}
void write_json_lines(std::ostream& out, const std::vector<VerificationReport>& reports);
// Header prime,check,pass,computed,expected,micros; one row per check.
void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports);

// Tables: CSV with the table's columns, or JSON lines keyed by column name.
// Cells that parse as integers are written as JSON numbers, empty cells as
// null, anything else (rationals "num/den", big integers) as strings.
void write_table_csv(std::ostream& out, const Table& table);
void write_table_json_lines(std::ostream& out, const Table& table);

}  // namespace qrlab
