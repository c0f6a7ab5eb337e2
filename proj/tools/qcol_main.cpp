// qcol: Alexander polynomials and Alexander-quandle colorings of braid
// closures. Subcommands: alexander, classify, color, count, table.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcol/braid.hpp"
#include "qcol/burau.hpp"
#include "qcol/coloring.hpp"
#include "qcol/dataset.hpp"
#include "qcol/errors.hpp"

using namespace qcol;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

json poly_list(const std::vector<Laurent>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(p.str());
  return out;
}

BraidWord read_braid(const std::string& text, int strands) {
  return parse_braid(text, strands > 0 ? std::optional<int>(strands) : std::nullopt);
}

int cmd_alexander(const std::string& braid, int strands, bool as_json) {
  BraidWord w = read_braid(braid, strands);
  Laurent d = reduced_alexander(w);
  if (as_json) {
    json out{{"command", "alexander"},
             {"braid", to_brace(w)},
             {"strands", w.strands},
             {"components", closure_components(w)},
             {"delta", d.str()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << d.str() << "\n";
  }
  return kExitOk;
}

int cmd_classify(const std::string& braid, int strands, bool as_json) {
  BraidWord w = read_braid(braid, strands);
  Classification cls = classify(w);
  json out{{"command", "classify"},
           {"braid", to_brace(w)},
           {"strands", w.strands},
           {"delta", cls.delta.str()},
           {"verdict", verdict_name(cls.verdict)}};
  switch (cls.verdict) {
    case Verdict::ZeroDelta: {
      auto basis = kernel_basis_zero_delta(w);
      json vecs = json::array();
      for (const auto& v : basis) vecs.push_back(poly_list(v));
      out["kernel_vectors"] = vecs;
      if (!as_json) {
        std::cout << "delta = 0: non-trivial colorings exist over every "
                     "non-trivial Alexander quandle\n";
        for (const auto& v : basis) {
          std::cout << "  kernel vector: (";
          for (std::size_t i = 0; i < v.size(); ++i)
            std::cout << (i ? ", " : "") << v[i].str();
          std::cout << ")\n";
        }
      }
      break;
    }
    case Verdict::UnitDelta:
      out["colorings"] = "trivial only";
      if (!as_json)
        std::cout << "delta = " << cls.delta.str()
                  << " (unit): only trivial colorings by any Alexander quandle\n";
      break;
    case Verdict::NonUnitDelta: {
      Coloring col = construct_coloring(w, cls.delta);
      out["modulus"] = col.ring->modulus().str();
      out["coloring"] = poly_list(col.values);
      out["verified"] = true;
      out["nontrivial"] = true;
      if (!as_json) {
        std::cout << "delta = " << cls.delta.str() << "\n";
        std::cout << "non-trivial coloring over Lambda/(delta): (";
        for (std::size_t i = 0; i < col.values.size(); ++i)
          std::cout << (i ? ", " : "") << col.values[i].str();
        std::cout << ")\n";
      }
      break;
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_color(const std::string& braid, int strands, const std::string& modulus,
              bool as_json) {
  BraidWord w = read_braid(braid, strands);
  Laurent f = Laurent::parse(modulus);
  Coloring col = construct_coloring(w, f);
  ColoringSpaceSummary sum = coloring_space_summary(w, f);
  if (as_json) {
    json out{{"command", "color"},
             {"braid", to_brace(w)},
             {"modulus", col.ring->modulus().str()},
             {"coloring", poly_list(col.values)},
             {"verified", true},
             {"nontrivial", true},
             {"rank_mod_f", sum.rank_mod_f},
             {"generated_by_one", sum.generated_by_one}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "coloring over Lambda/(" << col.ring->modulus().str() << "): (";
    for (std::size_t i = 0; i < col.values.size(); ++i)
      std::cout << (i ? ", " : "") << col.values[i].str();
    std::cout << ")\n";
    if (sum.generated_by_one)
      std::cout << "rank(phi(w)-id) = n-2 over this quotient: all colorings are "
                   "combinations of this one and the trivial coloring\n";
  }
  return kExitOk;
}

int cmd_count(const std::string& braid, int strands, long m, long a, bool as_json) {
  BraidWord w = read_braid(braid, strands);
  long long n = count_colorings_finite(w, FiniteQuandle(m, a));
  if (as_json) {
    json out{{"command", "count"},
             {"braid", to_brace(w)},
             {"m", m},
             {"t", a},
             {"count", n}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << n << "\n";
  }
  return kExitOk;
}

int cmd_table(const std::string& path, bool mirror, bool as_json) {
  std::vector<ExampleRecord> records =
      path.empty() ? builtin_examples() : load_records_file(path, mirror);
  TableReport report = verify_table(records);
  if (as_json) {
    std::cout << table_report_json(report) << "\n";
  } else {
    for (const auto& row : report.rows) {
      std::cout << (row.pass ? "PASS" : "FAIL") << "  " << row.name
                << "  (delta = " << row.delta << ")\n";
      for (const auto& c : row.checks) std::cout << "      ok: " << c << "\n";
      for (const auto& f : row.failures) std::cout << "      failed: " << f << "\n";
      if (!row.note.empty()) std::cout << "      note: " << row.note << "\n";
    }
    std::cout << (report.all_pass ? "all rows pass" : "some rows failed") << "\n";
  }
  return report.all_pass ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials and Alexander-quandle colorings of braid closures"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string braid, modulus, path;
  int strands = 0;
  long m = 0, tval = 0;
  bool mirror = false;

  auto* alexander = app.add_subcommand("alexander", "print the reduced Alexander polynomial");
  alexander->add_option("braid", braid, "braid word, e.g. \"{1,1,1}\" or \"s1^3\"");
  alexander->add_option("--strands", strands, "strand count (default: inferred)");

  auto* classify_cmd = app.add_subcommand("classify", "colorability verdict plus a certificate");
  classify_cmd->add_option("braid", braid);
  classify_cmd->add_option("--strands", strands);

  auto* color = app.add_subcommand("color", "construct a coloring over Lambda/(f)");
  color->add_option("braid", braid);
  color->add_option("--strands", strands);
  color->add_option("--mod", modulus, "modulus f, a non-unit divisor of delta")->required();

  auto* count = app.add_subcommand("count", "count colorings by the finite quandle Z_m, t=a");
  count->add_option("braid", braid);
  count->add_option("--strands", strands);
  count->add_option("--m", m, "modulus of Z_m")->required();
  count->add_option("--t", tval, "action of t (coprime to m)")->required();

  auto* table = app.add_subcommand("table", "verify a JSON-lines dataset of braids and colorings");
  table->add_option("--file", path, "dataset path (default: builtin rows)");
  table->add_flag("--mirror", mirror, "negate generator signs on load");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*alexander) return cmd_alexander(braid, strands, as_json);
    if (*classify_cmd) return cmd_classify(braid, strands, as_json);
    if (*color) return cmd_color(braid, strands, modulus, as_json);
    if (*count) return cmd_count(braid, strands, m, tval, as_json);
    if (*table) return cmd_table(path, mirror, as_json);
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EmptyInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
