#include "seifert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <vector>

#include "seifert/applications.hpp"
#include "seifert/cohomology.hpp"
#include "seifert/descriptor.hpp"
#include "seifert/golden.hpp"
#include "seifert/json_util.hpp"

namespace seifert::cli {
namespace {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

Json optional_integer(const std::optional<Integer>& x) {
  return x ? integer_json(*x) : Json(nullptr);
}

void print_text(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      print_text(out, value, prefix + key + ".");
    } else {
      out << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << '\n';
    }
  }
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "text") {
    print_text(out, j);
  } else {
    out << j.dump(2) << '\n';
  }
}

struct Bounds {
  CensusBounds b;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-n", b.max_n, "Largest number of exceptional fibres")
        ->capture_default_str();
    cmd->add_option("--max-cone-order", b.max_cone_order, "Largest cone order b_i")
        ->capture_default_str();
    cmd->add_option("--b-min", b.b_min, "Least b")->capture_default_str();
    cmd->add_option("--b-max", b.b_max, "Greatest b")->capture_default_str();
    cmd->add_option("--genus-min", b.genus_min, "Least base genus")->capture_default_str();
    cmd->add_option("--genus-max", b.genus_max, "Greatest base genus")->capture_default_str();
  }

  const CensusBounds& validated() const {
    try {
      validate(b);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return b;
  }
};

int cmd_analyze(const std::string& input, const std::string& format, std::ostream& out) {
  SeifertInvariants parsed;
  try {
    parsed = parse_descriptor(input);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const CensusRecord r = make_record(parsed);
  const std::optional<Integer> oracle = vanishes_via_oracle(r.invariants);

  Json j;
  j["input"] = input;
  j["normalized"] = format_compact(r.invariants);
  j["descriptor"] = descriptor_json(r.invariants);
  j["geometry"] = to_string(r.geometry);
  j["euler_number"] = rational_json(r.euler_number);
  j["chi"] = rational_json(r.chi);
  j["h1"] = homology_json(r.h1);
  j["euler_class"] = {{"vanishes", r.vanishing.vanishes},
                      {"reason", to_string(r.vanishing.reason)},
                      {"witness_m", optional_integer(r.vanishing.witness_m)}};
  j["foliation"] = {{"answer", to_string(r.ctf.answer)},
                    {"basis", to_string(r.ctf.basis)},
                    {"certificate", r.ctf.certificate_str()}};
  j["oracle"] = {{"vanishes", oracle.has_value()}, {"witness_m", optional_integer(oracle)}};
  j["agree"] = r.vanishing.vanishes == oracle.has_value();
  emit(out, j, format);
  return kOk;
}

int cmd_census(const CensusBounds& bounds, const std::string& format, const std::string& path,
               const std::string& filter, std::ostream& out) {
  if (format == "text") throw InputError("census: --format must be csv or json");
  std::ofstream file;
  if (!path.empty()) {
    file.open(path, std::ios::binary);
    if (!file) throw IoError("cannot write " + path);
  }
  std::ostream& sink = path.empty() ? out : file;
  CensusWriter writer(sink, format == "csv" ? CensusFormat::Csv : CensusFormat::JsonLines);
  enumerate_census(bounds, [&](const SeifertInvariants& inv) {
    const CensusRecord r = make_record(inv);
    if (filter.empty() || ctf_without_zero_euler(r)) writer.write(r);
  });
  sink.flush();
  if (!sink) throw IoError("write failed" + (path.empty() ? std::string() : ": " + path));
  return kOk;
}

int cmd_trefoil(const std::string& p, const std::string& q, const std::string& format,
                std::ostream& out) {
  std::optional<SurgerySlope> slope;
  try {
    slope.emplace(Integer::parse(p), Integer::parse(q));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const SeifertInvariants m = trefoil_surgery(*slope);
  const bool ctf = trefoil_ctf(*slope);
  const bool zero = trefoil_zero_euler_ctf(*slope);
  const bool pred_ctf = predicted_ctf(*slope);
  const bool pred_zero = predicted_zero_euler_ctf(*slope);
  const bool agrees = ctf == pred_ctf && zero == pred_zero;

  Json j;
  j["slope"] = slope->value().str();
  j["descriptor"] = format_compact(m);
  j["geometry"] = to_string(base_geometry(m));
  j["h1"] = first_homology(m).str();
  j["ctf"] = ctf;
  j["zero_euler"] = zero;
  j["predicted_ctf"] = pred_ctf;
  j["predicted_zero_euler"] = pred_zero;
  j["agrees"] = agrees;
  emit(out, j, format);
  return agrees ? kOk : kMismatch;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_tables(const std::string& format, const std::string& golden_path, bool print,
               std::ostream& out, std::ostream& err) {
  const std::vector<SeifertTable> tables{spherical_table(), euclidean_table()};
  const TableFormat tf = format == "csv"    ? TableFormat::Csv
                         : format == "json" ? TableFormat::Json
                                            : TableFormat::Text;
  const std::string rendered = render_tables(tables, tf);
  if (print) {
    out << rendered;
    return kOk;
  }
  std::string expected;
  if (!golden_path.empty()) {
    expected = read_file(golden_path);
  } else {
    expected = std::string(tf == TableFormat::Csv    ? golden::kTablesCsv
                           : tf == TableFormat::Json ? golden::kTablesJson
                                                     : golden::kTablesText);
  }
  if (expected == rendered) {
    out << rendered;
    return kOk;
  }
  out << line_diff(expected, rendered);
  err << "tables differ from the golden copy\n";
  return kMismatch;
}

int cmd_oracle_check(const CensusBounds& bounds, const std::string& format, std::ostream& out) {
  const OracleSweepReport report = oracle_sweep(bounds);
  Json j;
  j["instances"] = report.instances;
  j["vanishing"] = report.vanishing;
  j["disagreements"] = report.disagreements.size();
  if (!report.disagreements.empty()) j["examples"] = report.disagreements;
  emit(out, j, format);
  return report.disagreements.empty() ? kOk : kMismatch;
}

}  // namespace

std::string line_diff(std::string_view expected, std::string_view actual) {
  const auto a = split_lines(expected);
  const auto b = split_lines(actual);
  // Longest common subsequence table, suffix form.
  std::vector<std::vector<std::size_t>> lcs(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::ostringstream os;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      ++i;
      ++j;
    } else if (j == b.size() || (i < a.size() && lcs[i + 1][j] >= lcs[i][j + 1])) {
      os << "-" << i + 1 << ": " << a[i] << '\n';
      ++i;
    } else {
      os << "+" << j + 1 << ": " << b[j] << '\n';
      ++j;
    }
  }
  if (os.str().empty() && expected != actual) os << "(texts differ only in a trailing newline)\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert fibred 3-manifolds: Euler class of the normal bundle and "
               "horizontal foliations"};
  app.require_subcommand(1);

  std::string format;
  std::string descriptor;
  auto* analyze = app.add_subcommand("analyze", "Full report for one fibration");
  analyze->add_option("descriptor", descriptor, "'g;b;a1/b1,...' or a JSON descriptor")
      ->required();
  analyze->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  Bounds census_bounds;
  std::string out_path;
  std::string filter;
  auto* census = app.add_subcommand("census", "Enumerate normalized invariants in a range");
  census_bounds.add_to(census);
  census->add_option("--format", format, "csv or json (one object per line)")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  census->add_option("--out", out_path, "Output file (default: standard output)");
  census->add_option("--filter", filter, "Keep only one class of records")
      ->check(CLI::IsMember({"ctf-no-zero-euler"}));

  std::string p, q;
  auto* trefoil = app.add_subcommand("trefoil", "p/q surgery on the right-handed trefoil");
  trefoil->add_option("p", p, "Numerator")->required();
  trefoil->add_option("q", q, "Denominator, > 0")->required();
  trefoil->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string golden_path;
  bool print = false;
  auto* tables = app.add_subcommand("tables", "Regenerate the spherical and Euclidean tables");
  tables->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  tables->add_option("--golden", golden_path, "Compare against this file instead");
  tables->add_flag("--print", print, "Print without comparing");

  Bounds oracle_bounds;
  auto* oracle = app.add_subcommand(
      "oracle-check", "Closed-form decision against the cohomology oracle over a range");
  oracle_bounds.add_to(oracle);
  oracle->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (analyze->parsed()) {
      return cmd_analyze(descriptor, format.empty() ? "json" : format, out);
    }
    if (census->parsed()) {
      return cmd_census(census_bounds.validated(), format.empty() ? "csv" : format, out_path,
                        filter, out);
    }
    if (trefoil->parsed()) return cmd_trefoil(p, q, format.empty() ? "json" : format, out);
    if (tables->parsed()) {
      return cmd_tables(format.empty() ? "text" : format, golden_path, print, out, err);
    }
    if (oracle->parsed()) {
      return cmd_oracle_check(oracle_bounds.validated(), format.empty() ? "json" : format, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kInputError;
}

}  // namespace seifert::cli
