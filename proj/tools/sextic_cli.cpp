// Command-line front end over the C API: analyze, witness, density, curve.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sextic/sextic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitBudget = 4;

struct Config {
  std::string poly_text;
  std::string poly_file;
  // Empty selects the command default: CSV for curve families, else JSON.
  std::string format;
  std::string out_path;
  int workers = 1;
  sextic_budget budget{};
  // density
  int64_t density_n = 0;
  std::string ladder;
  bool fit = false;
  bool stanley = false;
  bool baseline = false;
  std::string method = "bitmap";
  uint64_t memory_bits = 0;
  int64_t box = 0;
  // witness
  std::string growth_delta;
  // curves
  std::string b1 = "1", b0 = "0", r_range = "1..10";
  int count = 10;
  std::string xmax = "1000000", threshold = "1";
  std::string d = "5", c = "-4";
};

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

int exit_code_of(sextic_status s) {
  switch (s) {
    case SEXTIC_OK: return kExitOk;
    case SEXTIC_ERR_INPUT:
    case SEXTIC_ERR_PRECONDITION:
    case SEXTIC_ERR_ARGUMENT: return kExitInput;
    case SEXTIC_INCONCLUSIVE: return kExitInconclusive;
    case SEXTIC_ERR_BUDGET: return kExitBudget;
    case SEXTIC_ERR_INTERNAL: return kExitFailure;
  }
  return kExitFailure;
}

void check(sextic_status s) {
  if (s != SEXTIC_OK) throw CliError(exit_code_of(s), sextic_last_error());
}

// Owns a string returned by the C API.
std::string take(char* s) {
  std::string out(s);
  sextic_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
};

using Poly = Handle<sextic_poly, sextic_poly_free>;
using Report = Handle<sextic_report, sextic_report_free>;
using WitnessHandle = Handle<sextic_witness, sextic_witness_free>;

sextic_format format_of(const Config& cfg) {
  if (cfg.format == "csv") return SEXTIC_FORMAT_CSV;
  if (cfg.format == "text") return SEXTIC_FORMAT_TEXT;
  return SEXTIC_FORMAT_JSON;
}

void load_poly(const Config& cfg, Poly& p) {
  if (cfg.poly_text.empty() == cfg.poly_file.empty()) {
    throw CliError(kExitInput, "give exactly one of --poly and --poly-file");
  }
  if (!cfg.poly_text.empty()) {
    check(sextic_poly_parse(cfg.poly_text.c_str(), &p.ptr));
    return;
  }
  std::ifstream in(cfg.poly_file);
  if (!in) throw CliError(kExitInput, "cannot read " + cfg.poly_file);
  std::stringstream ss;
  ss << in.rdbuf();
  check(sextic_poly_from_json(ss.str().c_str(), &p.ptr));
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw CliError(kExitInput, "cannot write " + cfg.out_path);
  out << text;
}

std::vector<int64_t> parse_ladder(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      // Accept 1e6 style entries as well as plain integers.
      double v = std::stod(item, &used);
      if (used != item.size() || v < 0 || v > 9.2e18 || v != static_cast<double>(static_cast<int64_t>(v))) {
        throw std::invalid_argument(item);
      }
      out.push_back(static_cast<int64_t>(v));
    } catch (const std::exception&) {
      throw CliError(kExitInput, "bad ladder entry '" + item + "'");
    }
  }
  return out;
}

std::pair<int64_t, int64_t> parse_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      int64_t v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw CliError(kExitInput, "bad range '" + text + "', expected a..b");
  }
}

sextic_density_options density_options(const Config& cfg) {
  sextic_density_options o;
  sextic_density_options_default(&o);
  o.workers = cfg.workers;
  if (cfg.memory_bits > 0) o.memory_bits = cfg.memory_bits;
  o.box = cfg.box;
  if (cfg.method != "bitmap" && cfg.method != "sorted") {
    throw CliError(kExitInput, "method must be bitmap or sorted");
  }
  o.method = cfg.method == "sorted" ? 1 : 0;
  return o;
}

std::string analyze_text(const nlohmann::json& j) {
  std::string out = "polynomial: " + j["text"].get<std::string>() + "\n";
  out += "route: " + j["route"].get<std::string>() + "\n";
  for (const auto& c : j["conditions"]) {
    out += "condition " + c["name"].get<std::string>() + ": " +
           (c["value"].get<bool>() ? "true" : "false") + "\n";
  }
  for (const auto& n : j["notes"]) out += "note: " + n.get<std::string>() + "\n";
  for (const auto& r : j["recommended"]) out += "next: " + r.get<std::string>() + "\n";
  return out;
}

std::string analyze_csv(const nlohmann::json& j) {
  std::string out = "field,value\n";
  auto row = [&](const std::string& field, const std::string& value) {
    out += "\"" + field + "\",\"" + value + "\"\n";
  };
  row("polynomial", j["text"].get<std::string>());
  row("degree", std::to_string(j["degree"].get<int>()));
  row("route", j["route"].get<std::string>());
  row("definiteness", j["definiteness"].get<std::string>());
  for (const auto& c : j["conditions"]) {
    row("condition " + c["name"].get<std::string>(), c["value"].get<bool>() ? "true" : "false");
  }
  for (const auto& n : j["notes"]) row("note", n.get<std::string>());
  for (const auto& r : j["recommended"]) row("next", r.get<std::string>());
  return out;
}

std::string density_csv(const nlohmann::json& j) {
  if (j.contains("points")) {
    std::string out = "N,count,box\n";
    for (const auto& p : j["points"]) {
      out += std::to_string(p["N"].get<int64_t>()) + "," +
             std::to_string(p["count"].get<int64_t>()) + "," +
             std::to_string(p["box"].get<int64_t>()) + "\n";
    }
    return out;
  }
  return "N,count,box,certified,method\n" + std::to_string(j["N"].get<int64_t>()) + "," +
         std::to_string(j["count"].get<int64_t>()) + "," +
         std::to_string(j["box"]["bound"].get<int64_t>()) + "," +
         (j["box"]["certified"].get<bool>() ? "true" : "false") + "," +
         j["method"].get<std::string>() + "\n";
}

std::string witness_text(const nlohmann::json& j) {
  std::string out = "kind: " + j["kind"].get<std::string>() + "\n";
  out += "lemma: " + j["lemma"].get<std::string>() + "\n";
  for (const auto& p : j["points"]) {
    out += "F(" + p[0].get<std::string>() + ", " + p[1].get<std::string>() +
           ") = " + p[2].get<std::string>() + "\n";
  }
  out += "note: " + j["note"].get<std::string>() + "\n";
  return out;
}

std::string witness_csv(const nlohmann::json& j) {
  std::string out = "x,y,value\n";
  for (const auto& p : j["points"]) {
    out += p[0].get<std::string>() + "," + p[1].get<std::string>() + "," +
           p[2].get<std::string>() + "\n";
  }
  return out;
}

int cmd_analyze(const Config& cfg) {
  Poly p;
  load_poly(cfg, p);
  Report r;
  check(sextic_classify(p.ptr, &r.ptr));
  char* s = nullptr;
  check(sextic_report_json(r.ptr, &s));
  std::string json = take(s);
  if (cfg.format == "json") {
    emit(cfg, json);
  } else {
    auto j = nlohmann::json::parse(json);
    emit(cfg, cfg.format == "csv" ? analyze_csv(j) : analyze_text(j));
  }
  return kExitOk;
}

int cmd_witness(const Config& cfg) {
  Poly p;
  load_poly(cfg, p);
  WitnessHandle w;
  if (!cfg.growth_delta.empty()) {
    check(sextic_witness_growth(p.ptr, cfg.growth_delta.c_str(), cfg.budget.box, &w.ptr));
  } else {
    Report r;
    check(sextic_classify(p.ptr, &r.ptr));
    sextic_budget b = cfg.budget;
    b.workers = cfg.workers;
    check(sextic_witness_find(p.ptr, r.ptr, &b, &w.ptr));
  }
  char* s = nullptr;
  check(sextic_witness_json(w.ptr, &s));
  std::string json = take(s);
  if (cfg.format == "json") {
    emit(cfg, json);
  } else {
    auto j = nlohmann::json::parse(json);
    emit(cfg, cfg.format == "csv" ? witness_csv(j) : witness_text(j));
  }
  sextic_witness_kind kind;
  check(sextic_witness_kind_of(w.ptr, &kind));
  bool certificate = kind == SEXTIC_WITNESS_NEGATIVE_VALUE ||
                     kind == SEXTIC_WITNESS_SMALL_CORE_SEQUENCE;
  return certificate ? kExitOk : kExitInconclusive;
}

int cmd_density(const Config& cfg) {
  const sextic_density_options opt = density_options(cfg);
  if (cfg.baseline) {
    std::vector<int64_t> ladder = cfg.ladder.empty()
                                      ? std::vector<int64_t>{100, 1000, 10000, 100000, 1000000}
                                      : parse_ladder(cfg.ladder);
    nlohmann::json rows = nlohmann::json::array();
    std::string csv = "N,count,normalized\n";
    for (int64_t n : ladder) {
      char* s = nullptr;
      check(sextic_density_landau(n, opt.memory_bits, &s));
      auto j = nlohmann::json::parse(take(s));
      rows.push_back(j);
      std::ostringstream line;
      line.precision(12);
      line << n << "," << j["count"].get<int64_t>() << "," << j["ratio"].get<double>() << "\n";
      csv += line.str();
    }
    emit(cfg, cfg.format == "json"
                  ? nlohmann::json({{"schema", "1"}, {"landau", rows}}).dump(2) + "\n"
                  : csv);
    return kExitOk;
  }
  Poly p;
  load_poly(cfg, p);
  char* s = nullptr;
  if (cfg.density_n > 0 || cfg.fit) {
    if (cfg.density_n > 0) {
      check(sextic_density_count(p.ptr, cfg.density_n, &opt, &s));
    } else {
      std::vector<int64_t> ladder = parse_ladder(cfg.ladder);
      check(sextic_density_growth(p.ptr, ladder.data(), ladder.size(), cfg.workers, &s));
    }
    std::string json = take(s);
    emit(cfg, cfg.format == "csv" ? density_csv(nlohmann::json::parse(json)) : json);
    return kExitOk;
  } else {
    std::vector<int64_t> ladder = parse_ladder(cfg.ladder);
    {
      sextic_format f = cfg.format == "json" ? SEXTIC_FORMAT_JSON : SEXTIC_FORMAT_CSV;
      check(sextic_density_stanley(p.ptr, ladder.data(), ladder.size(), &opt, f, &s));
    }
  }
  emit(cfg, take(s));
  return kExitOk;
}

int cmd_curve(const Config& cfg, const std::string& which) {
  sextic_format f = format_of(cfg) == SEXTIC_FORMAT_JSON ? SEXTIC_FORMAT_JSON : SEXTIC_FORMAT_CSV;
  char* s = nullptr;
  if (which == "rouse") {
    auto [from, to] = parse_range(cfg.r_range);
    check(sextic_curve_rouse(cfg.b1.c_str(), cfg.b0.c_str(), from, to, f, &s));
  } else if (which == "danilov") {
    check(sextic_curve_danilov(cfg.count, f, &s));
  } else if (which == "hall") {
    check(sextic_curve_hall(cfg.xmax.c_str(), cfg.threshold.c_str(), cfg.workers, f, &s));
  } else {
    check(sextic_curve_pell(cfg.d.c_str(), cfg.c.c_str(), cfg.count, f, &s));
  }
  emit(cfg, take(s));
  return kExitOk;
}

void add_poly_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--poly", cfg.poly_text, "polynomial in x and y, e.g. \"(y^2-x^3-x)^2 - y + 10\"");
  cmd->add_option("--poly-file", cfg.poly_file, "JSON term file {\"terms\": [[i, j, \"c\"], ...]}");
}

void add_output_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", cfg.out_path, "write the report to this file");
  cmd->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  sextic_budget_default(&cfg.budget);

  CLI::App app{"Exact analysis of bivariate sextic polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sextic_version()));

  auto* analyze = app.add_subcommand("analyze", "classify F and recommend next commands");
  add_poly_options(analyze, cfg);
  add_output_options(analyze, cfg);

  auto* witness = app.add_subcommand("witness", "search for a certificate on the route of F");
  add_poly_options(witness, cfg);
  add_output_options(witness, cfg);
  witness->add_option("--budget-convergents", cfg.budget.convergents)->check(CLI::PositiveNumber);
  witness->add_option("--budget-tmax", cfg.budget.tmax)->check(CLI::PositiveNumber);
  witness->add_option("--budget-xmax", cfg.budget.xmax)->check(CLI::PositiveNumber);
  witness->add_option("--budget-box", cfg.budget.box)->check(CLI::PositiveNumber);
  witness->add_option("--budget-family", cfg.budget.family)->check(CLI::PositiveNumber);
  witness->add_option("--budget-target", cfg.budget.target, "stop once F <= target");
  witness->add_option("--growth", cfg.growth_delta,
                      "run the growth diagnostic F / max(|x|,|y|)^(1+delta) instead");

  auto* density = app.add_subcommand("density", "value-set counts on [N, 2N)");
  add_poly_options(density, cfg);
  add_output_options(density, cfg);
  density->add_option("--n", cfg.density_n, "count representable values in [N, 2N)");
  density->add_option("--ladder", cfg.ladder, "comma-separated N values");
  density->add_flag("--fit", cfg.fit, "fit the growth exponent over the ladder");
  density->add_flag("--stanley", cfg.stanley, "normalized counts over the ladder (default)");
  density->add_flag("--baseline", cfg.baseline, "Landau sums-of-two-squares table");
  density->add_option("--method", cfg.method, "bitmap or sorted")
      ->check(CLI::IsMember({"bitmap", "sorted"}));
  density->add_option("--budget-memory", cfg.memory_bits,
                      "bitmap budget in bits (default SEXTIC_SIEVE_MEM or 2^31)");
  density->add_option("--budget-box", cfg.box, "enumeration box override");

  auto* curve = app.add_subcommand("curve", "elliptic-curve and Pell families");
  curve->require_subcommand(1);
  auto* rouse = curve->add_subcommand("rouse", "3P on y^2 = x^3 + b1 x + r^2 b1^2");
  rouse->add_option("--b1", cfg.b1);
  rouse->add_option("--b0", cfg.b0);
  rouse->add_option("--r", cfg.r_range, "range a..b");
  auto* danilov = curve->add_subcommand("danilov", "small Hall gaps from u^2 - 5 s^2 = -4");
  danilov->add_option("--count", cfg.count)->check(CLI::PositiveNumber);
  auto* hall = curve->add_subcommand("hall", "scan for 0 < |y^2 - x^3| <= threshold sqrt(x)");
  hall->add_option("--xmax", cfg.xmax);
  hall->add_option("--threshold", cfg.threshold);
  auto* pell = curve->add_subcommand("pell", "solutions of u^2 - d v^2 = c");
  pell->add_option("--d", cfg.d);
  pell->add_option("--c", cfg.c);
  pell->add_option("--count", cfg.count)->check(CLI::PositiveNumber);
  for (auto* sub : {rouse, danilov, hall, pell}) add_output_options(sub, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (cfg.format.empty()) cfg.format = *curve ? "csv" : "json";
  try {
    if (*analyze) return cmd_analyze(cfg);
    if (*witness) return cmd_witness(cfg);
    if (*density) {
      if (!cfg.baseline && cfg.density_n <= 0 && cfg.ladder.empty()) {
        throw CliError(kExitInput, "density needs --n, --ladder or --baseline");
      }
      return cmd_density(cfg);
    }
    for (auto* sub : {rouse, danilov, hall, pell}) {
      if (*sub) return cmd_curve(cfg, sub->get_name());
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
