#include "twobridge/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "twobridge/twobridge.hpp"

namespace twobridge::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

// Above this size the CLI skips the dense P^T G P product.
constexpr std::size_t kMaxCheckedTransition = 120;
// Longer even expansions are summarized by their length in sig reports.
constexpr std::size_t kMaxPrintedExpansion = 200;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw InputError("unknown output format '" + name + "' (expected text, json or csv)");
}

std::string to_string(ParityFix fix) {
  switch (fix) {
    case ParityFix::kNone: return "none";
    case ParityFix::kSplitLast: return "split-last";
    case ParityFix::kShiftedDenominator: return "shifted-denominator";
  }
  return "?";
}

std::string bracketed(const ContinuedFraction& cf) { return "[" + cf.str() + "]"; }

Json cf_json(const ContinuedFraction& cf) {
  Json a = Json::array();
  for (const auto& c : cf.coefficients()) a.push_back(c.str());
  return a;
}

template <typename T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string flat(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); })) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get<std::string>();
    return s + "]";
  }
  return v.dump();
}

void print_matrix(std::ostream& out, const Json& rows) {
  std::size_t width = 1;
  for (const auto& row : rows)
    for (const auto& e : row) width = std::max(width, e.get<std::string>().size());
  for (const auto& row : rows) {
    out << "  ";
    for (const auto& e : row) {
      const std::string s = e.get<std::string>();
      out << ' ' << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
}

void print_fields(std::ostream& out, const Json& j, const std::vector<std::string>& keys) {
  for (const auto& key : keys) {
    if (!j.contains(key)) continue;
    out << key << std::string(key.size() < 10 ? 10 - key.size() : 1, ' ') << flat(j[key]) << '\n';
  }
}

void print_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_field(header[i]);
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
}

void print_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << std::string(width[c] - cells[c].size() + 2, ' ') << cells[c];
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// --- sig ---------------------------------------------------------------

void add_checks(Json& j, const VerificationReport& v) {
  Json checks = Json::array();
  for (const auto& [method, value] : v.checks) checks.push_back({{"method", to_string(method)}, {"sigma", value.str()}});
  j["checks"] = std::move(checks);
  j["skipped"] = v.skipped;
}

// The reported diagram is the nearest-integer expansion; sigma itself comes
// from the even expansion, where the correction term vanishes, unless that
// expansion is too long.
Json sig_fraction(const Fraction& f, bool verify) {
  const SignatureReport even = signature_from_fraction(f.p, f.q);
  const SignatureReport view = signature_from_cf(nearest_expansion(f.p, f.q));
  if (view.signature != even.signature)
    throw CrossCheckError("K(" + f.str() + "): even expansion gives " + even.signature.str() + ", " +
                          bracketed(view.expansion) + " gives " + view.signature.str());
  Json j;
  j["input"] = f.str();
  j["p"] = f.p.str();
  j["q"] = f.q.str();
  j["cf"] = cf_json(view.expansion);
  j["sigmaG"] = view.goeritz_signature.str();
  j["mu"] = view.correction.str();
  j["sigma"] = even.signature.str();
  j["det"] = even.determinant.str();
  j["method"] = to_string(even.method);
  if (even.method == SignatureMethod::kEvenExpansion) {
    j["evenCf"] = {{"length", std::to_string(even.expansion.size())},
                   {"sigmaG", even.goeritz_signature.str()},
                   {"parityFix", to_string(even.parity_fix)}};
    if (even.expansion.size() <= kMaxPrintedExpansion) j["evenCf"]["cf"] = cf_json(even.expansion);
  }
  if (verify) add_checks(j, verify_fraction(f.p, f.q));
  return j;
}

Json sig_cf(const ContinuedFraction& cf, bool verify) {
  const SignatureReport r = signature_from_cf(cf);
  const ConvergentSequence conv = convergents(r.expansion);
  ExactInt p = conv.last().numerator;
  ExactInt q = conv.last().denominator;
  if (q.sign() < 0 || (q.is_zero() && p.sign() < 0)) {
    p = -p;
    q = -q;
  }
  Json j;
  j["input"] = bracketed(cf);
  j["p"] = p.str();
  j["q"] = q.str();
  j["cf"] = cf_json(r.expansion);
  j["sigmaG"] = r.goeritz_signature.str();
  j["mu"] = r.correction.str();
  j["sigma"] = r.signature.str();
  j["det"] = r.determinant.str();
  j["method"] = to_string(r.method);
  if (verify) add_checks(j, verify_cf(cf));
  return j;
}

const std::vector<std::string> kRowColumns = {"p", "q", "cf", "sigmaG", "mu", "sigma", "det"};

std::vector<std::string> csv_row(const Json& j) {
  std::vector<std::string> row;
  for (const auto& key : kRowColumns) row.push_back(flat(j[key]));
  return row;
}

void emit_sig(std::ostream& out, Format format, const Json& j) {
  if (format == Format::kJson) {
    out << j.dump(2) << '\n';
  } else if (format == Format::kCsv) {
    print_csv(out, kRowColumns, {csv_row(j)});
  } else {
    print_fields(out, j, {"input", "cf", "sigmaG", "mu", "sigma", "det", "method"});
    if (j.contains("evenCf")) {
      const Json& e = j["evenCf"];
      out << "even cf   " << (e.contains("cf") ? flat(e["cf"]) : flat(e["length"]) + " entries") << "  sigmaG "
          << flat(e["sigmaG"]) << "  fix " << flat(e["parityFix"]) << '\n';
    }
    if (j.contains("checks")) {
      for (const auto& c : j["checks"]) out << "check     " << flat(c["method"]) << " = " << flat(c["sigma"]) << '\n';
      for (const auto& s : j["skipped"]) out << "skipped   " << flat(s) << '\n';
    }
  }
}

// --- goeritz -----------------------------------------------------------

Json goeritz_report(const ContinuedFraction& input) {
  const ContinuedFraction cf = normalize_odd_length(input);
  const GoeritzMatrix g = goeritz_matrix(cf);
  Json j;
  j["input"] = bracketed(input);
  j["cf"] = cf_json(cf);
  Json labels = Json::array();
  for (const auto& region : g.basis.regions()) labels.push_back(region.label());
  j["basis"] = std::move(labels);
  j["matrix"] = matrix_json(g.entries);
  j["det"] = determinant(g.entries).str();
  j["pn"] = convergents(cf).last().numerator.str();

  const DiagonalForm dense = congruence_diagonalize(to_rational(g.entries));
  const ExactInt sigma = goeritz_signature(cf);
  if (ExactInt(dense.signature()) != sigma)
    throw CrossCheckError("sigma(G) of " + bracketed(cf) + ": elimination gives " + std::to_string(dense.signature()) +
                          ", convergent formula gives " + sigma.str());
  try {
    const DiagonalForm closed = closed_form_diagonal(cf);
    if (closed.signature() != dense.signature())
      throw CrossCheckError("closed-form diagonal of " + bracketed(cf) + " has the wrong signature");
    Json diag = Json::array();
    for (const auto& d : closed.entries) diag.push_back(d.str());
    j["diagonal"] = std::move(diag);
    const RationalMatrix p = transition_matrix(cf);
    j["transition"] = matrix_json(p);
    if (p.rows() <= kMaxCheckedTransition) {
      const RationalMatrix d = p.transposed() * to_rational(g.entries) * p;
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
          if (d(r, c) != (r == c ? closed.entries[r] : ExactRational(0)))
            throw CrossCheckError("P^T G P is not the closed-form diagonal for " + bracketed(cf));
      j["transitionChecked"] = "true";
    } else {
      j["transitionChecked"] = "false";
    }
  } catch (const DegenerateFormError& e) {
    j["diagonal"] = nullptr;
    j["transition"] = nullptr;
    j["degenerate"] = e.what();
  }
  const Inertia in = dense.inertia();
  j["inertia"] = {{"positive", std::to_string(in.positive)},
                  {"negative", std::to_string(in.negative)},
                  {"zero", std::to_string(in.zero)}};
  j["sigmaG"] = sigma.str();
  return j;
}

void emit_goeritz(std::ostream& out, Format format, const Json& j) {
  if (format == Format::kJson) {
    out << j.dump(2) << '\n';
    return;
  }
  if (format == Format::kCsv) {
    std::vector<std::string> header{"region"};
    for (const auto& l : j["basis"]) header.push_back(l.get<std::string>());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < j["matrix"].size(); ++r) {
      std::vector<std::string> row{j["basis"][r].get<std::string>()};
      for (const auto& e : j["matrix"][r]) row.push_back(e.get<std::string>());
      rows.push_back(std::move(row));
    }
    print_csv(out, header, rows);
    return;
  }
  out << "cf        " << flat(j["cf"]) << '\n';
  out << "basis    ";
  for (const auto& l : j["basis"]) out << ' ' << l.get<std::string>();
  out << "\nG =\n";
  print_matrix(out, j["matrix"]);
  out << "det G     " << flat(j["det"]) << "  (p_n = " << flat(j["pn"]) << ")\n";
  if (j["diagonal"].is_null()) {
    out << "diagonal  unavailable: " << flat(j["degenerate"]) << '\n';
  } else {
    out << "diagonal ";
    for (const auto& d : j["diagonal"]) out << ' ' << d.get<std::string>();
    out << "\nP =\n";
    print_matrix(out, j["transition"]);
    if (j["transitionChecked"] == "false") out << "(P^T G P not multiplied out at this size)\n";
  }
  out << "inertia   +" << flat(j["inertia"]["positive"]) << " -" << flat(j["inertia"]["negative"]) << " 0x"
      << flat(j["inertia"]["zero"]) << '\n';
  out << "sigmaG    " << flat(j["sigmaG"]) << '\n';
}

// --- evencf ------------------------------------------------------------

Json step_json(const EvenCfStep& s) {
  return {{"i", std::to_string(s.step)}, {"c", s.coefficient.str()}, {"sign", std::to_string(s.sign)}, {"r", s.remainder.str()}};
}

Json evencf_report(const Fraction& f) {
  const Fraction g = f.q.sign() < 0 ? Fraction{-f.p, -f.q} : f;
  const std::optional<EvenCfResult> bounded = even_cf(g.p, g.q, kMaxEvenExpansionLength);
  if (!bounded)
    throw InputError("even expansion of " + f.str() + " needs more than " + std::to_string(kMaxEvenExpansionLength) +
                     " coefficients");
  const EvenCfResult& r = *bounded;
  Json j;
  j["input"] = f.str();
  j["cf"] = cf_json(r.expansion);
  j["target"] = r.target().str();
  j["parityFix"] = to_string(r.trace.fix);
  j["first"] = step_json(r.trace.first);
  Json steps = Json::array();
  for (const auto& s : r.trace.steps) steps.push_back(step_json(s));
  j["trace"] = std::move(steps);
  return j;
}

void emit_evencf(std::ostream& out, Format format, const Json& j) {
  if (format == Format::kJson) {
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({flat(j["first"]["i"]), flat(j["first"]["c"]), flat(j["first"]["sign"]), flat(j["first"]["r"])});
  for (const auto& s : j["trace"]) rows.push_back({flat(s["i"]), flat(s["c"]), flat(s["sign"]), flat(s["r"])});
  if (format == Format::kCsv) {
    print_csv(out, {"i", "c_i", "eps_i-1", "r_i"}, rows);
    return;
  }
  out << flat(j["input"]) << " = " << flat(j["cf"]);
  if (flat(j["target"]) != flat(j["input"])) out << "  (expands " << flat(j["target"]) << ")";
  out << "\nparity fix " << flat(j["parityFix"]) << '\n';
  print_table(out, {"i", "c_i", "eps_i-1", "r_i"}, rows);
}

// --- mu ----------------------------------------------------------------

Json mu_report(const ContinuedFraction& input) {
  const ContinuedFraction cf = normalize_odd_length(input);
  if (!is_knot(cf)) throw InputError(bracketed(cf) + " has even determinant: link, not a knot");
  const MuValue m = mu(cf);
  Json j;
  j["input"] = bracketed(input);
  j["cf"] = cf_json(cf);
  Json regions = Json::array();
  for (const auto& r : m.regions)
    regions.push_back({{"i", std::to_string(r.region)},
                       {"c", r.coefficient.str()},
                       {"eta", std::to_string(r.sign)},
                       {"type", to_string(r.type)},
                       {"contribution", r.contribution.str()}});
  j["regions"] = std::move(regions);
  j["mu"] = m.total.str();
  j["tabulated"] = m.tabulated ? Json(m.tabulated->str()) : Json(nullptr);
  return j;
}

void emit_mu(std::ostream& out, Format format, const Json& j) {
  if (format == Format::kJson) {
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j["regions"])
    rows.push_back({flat(r["i"]), flat(r["c"]), flat(r["eta"]), flat(r["type"]), flat(r["contribution"])});
  if (format == Format::kCsv) {
    print_csv(out, {"i", "c_i", "eta", "type", "contribution"}, rows);
    return;
  }
  out << "cf        " << flat(j["cf"]) << '\n';
  print_table(out, {"i", "c_i", "eta", "type", "contribution"}, rows);
  out << "mu        " << flat(j["mu"]);
  if (!j["tabulated"].is_null()) out << "  (table " << flat(j["tabulated"]) << ")";
  out << '\n';
}

// --- oracle ------------------------------------------------------------

void emit_flat(std::ostream& out, Format format, const Json& j) {
  if (format == Format::kJson) {
    out << j.dump(2) << '\n';
  } else if (format == Format::kCsv) {
    std::vector<std::string> header;
    std::vector<std::string> row;
    for (const auto& [k, v] : j.items()) {
      header.push_back(k);
      row.push_back(flat(v));
    }
    print_csv(out, header, {row});
  } else {
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    print_fields(out, j, keys);
  }
}

// --- sum ---------------------------------------------------------------

ExactInt json_integer(const Json& v, const std::string& field) {
  if (v.is_string()) return ExactInt::parse(v.get<std::string>());
  if (v.is_number_integer()) return ExactInt(v.get<long long>());
  throw InputError("sum spec field '" + field + "' must be an integer or a decimal string");
}

SumSpec parse_sum_input(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '[') return parse_sum_spec(text);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("sum spec is not valid JSON: ") + e.what());
  }
  SumSpec spec;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("p") || !item.contains("q"))
      throw InputError("sum spec entries need fields p and q");
    spec.push_back({json_integer(item["p"], "p"), json_integer(item["q"], "q"),
                    item.contains("mult") ? json_integer(item["mult"], "mult") : ExactInt(1)});
  }
  return spec;
}

Json sum_report(const std::string& text) {
  const SumSpec spec = parse_sum_input(text);
  const SumReport r = slice_obstruction(spec);
  Json terms = Json::array();
  for (std::size_t i = 0; i < spec.size(); ++i)
    terms.push_back({{"mult", spec[i].multiplicity.str()},
                     {"p", spec[i].p.str()},
                     {"q", spec[i].q.str()},
                     {"sigma", r.term_signatures[i].str()}});
  Json j;
  j["terms"] = std::move(terms);
  j["sigma"] = r.total.str();
  j["verdict"] = r.obstructed ? "not slice" : "inconclusive";
  return j;
}

void emit_sum(std::ostream& out, Format format, const Json& j) {
  if (format == Format::kJson) {
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : j["terms"]) rows.push_back({flat(t["mult"]), flat(t["p"]), flat(t["q"]), flat(t["sigma"])});
  if (format == Format::kCsv) {
    print_csv(out, {"mult", "p", "q", "sigma"}, rows);
    return;
  }
  for (const auto& row : rows) out << row[0] << " x K(" << row[1] << "/" << row[2] << ")  sigma " << row[3] << '\n';
  out << "sigma     " << flat(j["sigma"]) << '\n';
  out << "verdict   " << flat(j["verdict"]) << '\n';
}

// --- batch -------------------------------------------------------------

struct BatchItem {
  std::size_t line = 0;
  std::string text;
  Json result;
  std::string error;
  int code = kOk;
};

void evaluate(BatchItem& item) {
  try {
    std::string_view t = item.text;
    if (t.starts_with("cf:")) {
      item.result = sig_cf(ContinuedFraction::parse(t.substr(3)), false);
    } else {
      item.result = sig_fraction(parse_fraction(t), false);
    }
  } catch (const CrossCheckError& e) {
    item.error = e.what();
    item.code = kCrossCheck;
  } catch (const std::exception& e) {
    item.error = e.what();
    item.code = kInputError;
  }
}

std::string trimmed(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int run_batch(const std::string& path, Format format, std::ostream& out, std::ostream& err) {
  std::vector<BatchItem> items;
  std::istringstream in(read_input(path));
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    std::string t = trimmed(line);
    if (t.empty() || t.front() == '#') continue;
    items.push_back({no, std::move(t), {}, {}, kOk});
  }

  std::atomic<std::size_t> next{0};
  const unsigned workers = std::clamp<unsigned>(std::thread::hardware_concurrency(), 1, 16);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, items.size()); ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) evaluate(items[i]);
      });
  }

  int code = kOk;
  std::vector<std::vector<std::string>> rows;
  Json array = Json::array();
  for (const auto& item : items) {
    if (item.code != kOk) {
      err << path << ":" << item.line << ": " << item.error << '\n';
      code = std::max(code, item.code);
      continue;
    }
    rows.push_back(csv_row(item.result));
    array.push_back(item.result);
  }
  if (format == Format::kJson) {
    out << array.dump(2) << '\n';
  } else {
    print_csv(out, kRowColumns, rows);
  }
  return code;
}

// --- driver ------------------------------------------------------------

ContinuedFraction parse_cf_option(const std::string& text) { return ContinuedFraction::parse(text); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signatures of two-bridge knots from continued fractions", "twobridge"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  if (const char* env = std::getenv("TWOBRIDGE_FORMAT"); env && *env) format_name = env;
  app.add_option("--format", format_name, "Output format: text, json or csv (default from TWOBRIDGE_FORMAT)");

  std::string fraction;
  std::string cf_list;
  std::string path;
  bool verify = false;

  auto* sig = app.add_subcommand("sig", "Signature of K(p/q) or of an explicit expansion");
  sig->add_option("fraction", fraction, "p/q");
  sig->add_option("--cf", cf_list, "Comma-separated coefficients, e.g. 2,-3,3");
  sig->add_flag("--verify", verify, "Run every feasible method and compare");

  auto* goeritz = app.add_subcommand("goeritz", "Goeritz matrix, closed-form diagonal, P and det");
  goeritz->add_option("--cf", cf_list, "Comma-separated coefficients")->required();

  auto* evencf = app.add_subcommand("evencf", "Even continued fraction of p/q with its division trace");
  evencf->add_option("fraction", fraction, "p/q")->required();

  auto* mu_cmd = app.add_subcommand("mu", "Correction term with the per-box breakdown");
  mu_cmd->add_option("--cf", cf_list, "Comma-separated coefficients")->required();

  auto* oracle = app.add_subcommand("oracle", "Remainder-count signature of K(p/q)");
  oracle->add_option("fraction", fraction, "p/q")->required();

  auto* sum = app.add_subcommand("sum", "Signature of a connected sum (text or JSON spec file, - for stdin)");
  sum->add_option("specfile", path, "Spec file")->required();

  auto* batch = app.add_subcommand("batch", "One 'p/q' or 'cf: c1,c2,...' per line; CSV rows in input order");
  batch->add_option("file", path, "Input file, - for stdin")->required();

  // CLI11 wants argv order reversed; it also reads negative numbers such as
  // "--cf -3" as values because no option is named "-3".
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const Format format = parse_format(format_name);
    if (sig->parsed()) {
      if (fraction.empty() == cf_list.empty()) throw InputError("sig needs exactly one of p/q or --cf");
      const Json j = fraction.empty() ? sig_cf(parse_cf_option(cf_list), verify) : sig_fraction(parse_fraction(fraction), verify);
      emit_sig(out, format, j);
    } else if (goeritz->parsed()) {
      emit_goeritz(out, format, goeritz_report(parse_cf_option(cf_list)));
    } else if (evencf->parsed()) {
      emit_evencf(out, format, evencf_report(parse_fraction(fraction)));
    } else if (mu_cmd->parsed()) {
      emit_mu(out, format, mu_report(parse_cf_option(cf_list)));
    } else if (oracle->parsed()) {
      const Fraction f = parse_fraction(fraction);
      Json j;
      j["input"] = f.str();
      j["sigma"] = oracle_signature(f.p, f.q).str();
      j["method"] = to_string(SignatureMethod::kRemainderCount);
      emit_flat(out, format, j);
    } else if (sum->parsed()) {
      emit_sum(out, format, sum_report(read_input(path)));
    } else if (batch->parsed()) {
      return run_batch(path, format, out, err);
    }
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << '\n';
    return kCrossCheck;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace twobridge::cli
