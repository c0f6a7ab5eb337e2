#ifndef QCOL_DATASET_HPP
#define QCOL_DATASET_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcol/braid.hpp"
#include "qcol/laurent.hpp"

namespace qcol {

// One knot-table row: a braid whose closure is the named link, optionally
// with the expected Alexander polynomial, a list of non-unit factors of it,
// and an expected non-trivial coloring over Lambda/(Delta).
struct ExampleRecord {
  std::string name;
  BraidWord braid;
  std::optional<Laurent> delta;
  std::vector<Laurent> factors;
  std::optional<std::vector<Laurent>> coloring;
  std::string note;
};

// Parses JSON-lines records:
//   {"name":"8_15","braid":"{1,1,-2,1,3,2,2,2,3}","strands":4,
//    "delta":"3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3",
//    "factors":["t^2 - t + 1"],"coloring":["1","1 - t","0","0"]}
// A present delta must match the recomputed polynomial up to units and a
// present coloring must have one entry per strand; violations raise
// DatasetError with the line number. mirror=true negates every braid letter
// on load (for tables with the opposite generator convention).
std::vector<ExampleRecord> load_records(std::istream& in, bool mirror = false);
std::vector<ExampleRecord> load_records_file(const std::string& path, bool mirror = false);

// The braids printed in the coloring-table source: 3_1, 8_15, 8_20, L9n27.
std::vector<ExampleRecord> builtin_examples();

struct RowReport {
  std::string name;
  bool pass = true;
  std::string delta;
  std::vector<std::string> checks;    // human-readable passed checks
  std::vector<std::string> failures;  // reasons for failure
  std::string note;
};

struct TableReport {
  std::vector<RowReport> rows;
  bool all_pass = true;
};

// Per row: recomputes Delta, verifies the expected coloring, constructs an
// independent coloring, checks factor colorings, and when the rank over
// Lambda/(Delta) is n-2 checks that the constructed coloring lies in the
// span of the expected one and the trivial coloring.
TableReport verify_table(const std::vector<ExampleRecord>& records);

// JSON rendering of the report (one object, "rows" array + "all_pass").
std::string table_report_json(const TableReport& report);

}  // namespace qcol

#endif
