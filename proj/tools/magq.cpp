// magq: dimensions, completion and verification suites for magmatic quotients.
//
// Exit codes: 0 success (including an expected completion budget stop),
// 2 input error, 3 verification failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "suites.hpp"

namespace fs = std::filesystem;
using namespace magq;
using magq::cli::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kInputError = 2;
constexpr int kVerifyFailure = 3;

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rejected_input("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string digest(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::size_t parse_index(std::string_view s, const char* what) {
  std::size_t v = 0;
  if (s.empty() || s.size() > 6) throw rejected_input(std::string("bad ") + what + ": '" + std::string(s) + "'");
  for (char c : s) {
    if (c < '0' || c > '9') throw rejected_input(std::string("bad ") + what + ": '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

bool is_builtin(std::string_view spec) {
  for (std::string_view p : {"cas:", "mag:", "rc:"}) {
    if (spec.substr(0, p.size()) == p) return true;
  }
  return spec == "as" || spec == "aas" || spec == "2nil";
}

std::pair<int, int> mag_pair(std::string_view body) {
  auto comma = body.find(',');
  if (comma == std::string_view::npos) throw rejected_input("mag:i,j needs two indices");
  int i = static_cast<int>(parse_index(body.substr(0, comma), "cubic index"));
  int j = static_cast<int>(parse_index(body.substr(comma + 1), "cubic index"));
  if (i == j) throw rejected_input("mag:i,j needs distinct indices");
  cubic_tree(i);
  cubic_tree(j);
  return {i, j};
}

// Set-theoretic congruence for a builtin name or a file.
Congruence resolve_congruence(const std::string& spec) {
  std::string_view s = spec;
  if (s.substr(0, 4) == "cas:") {
    std::size_t g = parse_index(s.substr(4), "comb degree");
    if (g < 1) throw rejected_input("cas:g needs g >= 1");
    return {{left_comb(g), right_comb(g)}};
  }
  if (s.substr(0, 4) == "mag:") {
    auto [i, j] = mag_pair(s.substr(4));
    return {{cubic_tree(i), cubic_tree(j)}};
  }
  if (s.substr(0, 3) == "rc:") return rc_congruence(parse_index(s.substr(3), "comb degree"));
  if (s == "as") return {{left_comb(2), right_comb(2)}};
  return parse_congruence(read_file(spec));
}

RewriteSystem resolve_rules(const std::string& spec) {
  std::string_view s = spec;
  if (s.substr(0, 4) == "cas:") return cas_rules(parse_index(s.substr(4), "comb degree"));
  if (s == "as") return cas_rules(2);
  if (s.substr(0, 4) == "mag:") {
    auto [i, j] = mag_pair(s.substr(4));
    BinaryTree a = cubic_tree(i), b = cubic_tree(j);
    if (a < b) std::swap(a, b);
    return RewriteSystem{RewriteRule{a, b}};
  }
  if (is_builtin(spec)) throw rejected_input("no rewriting presentation for builtin " + spec);
  return parse_rules(read_file(spec));
}

std::string golden_name(std::string_view spec) {
  std::string out;
  for (char c : fs::path(std::string(spec)).stem().string()) out.push_back((c == ':' || c == ',') ? '_' : c);
  return out;
}

struct Output {
  std::string json_path, csv_path, golden_dir;
};

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw rejected_input("cannot write " + path);
  out << text;
}

json make_report(const std::string& command, const json& args, const std::string& input, const json& results,
                 const std::string& status, double seconds) {
  json r;
  r["command"] = command;
  r["version"] = kVersion;
  r["args"] = args;
  r["input_digest"] = digest(input);
  r["results"] = results;
  r["status"] = status;
  r["wall_time"] = seconds;
  return r;
}

// Compares results and status with golden/<command>/<name>.json.
void check_golden(const std::string& dir, const std::string& command, const std::string& name, const json& report) {
  fs::path p = fs::path(dir) / command / (name + ".json");
  if (!fs::exists(p)) throw VerifyFailure("missing fixture " + p.string());
  json g = json::parse(read_file(p.string()));
  if (g.value("results", json()) != report["results"] || g.value("status", json()) != report["status"]) {
    throw VerifyFailure("report differs from fixture " + p.string());
  }
}

void emit(const Output& o, const std::string& command, const std::string& name, const json& report,
          const std::string& csv) {
  if (!o.json_path.empty()) write_text(o.json_path, report.dump(2) + "\n");
  if (!o.csv_path.empty()) write_text(o.csv_path, csv);
  if (!o.golden_dir.empty()) check_golden(o.golden_dir, command, name, report);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class T>
std::string join_seq(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
  return os.str();
}

// ------------------------------------------------------------------ dims

int cmd_dims(const std::string& spec, std::size_t n_max, const Output& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<mpz_class> dims;
  std::optional<std::size_t> cutoff;
  std::string input;
  std::string route;
  if (spec == "aas" || spec == "2nil") {
    auto gens = builtin_generators(spec);
    std::size_t n = std::min(n_max, linear_arity_budget());
    if (n < n_max) cutoff = n + 1;
    dims = cli::as_mpz(quotient_dims_linear(gens, n));
    route = "linear";
    for (const auto& g : gens) input += to_string(g) + "\n";
  } else {
    auto c = resolve_congruence(spec);
    auto t = quotient_dims(c, n_max);
    dims = t.values;
    cutoff = t.cutoff;
    route = "classes";
    input = to_text(c);
  }
  json results;
  results["route"] = route;
  results["dims"] = cli::to_json_seq(dims);
  if (cutoff) results["cutoff"] = *cutoff;
  auto report = make_report("dims", {{"spec", spec}, {"n_max", n_max}}, input, results, cutoff ? "budget_reached" : "ok",
                            since(t0));

  if (o.json_path != "-") {
    std::cout << "dims " << spec << " n<=" << n_max << "\n" << join_seq(dims) << "\n";
    if (cutoff) std::cout << "stopped at arity " << *cutoff << " (MAGQ_MAX_ARITY budget)\n";
  }
  std::string csv = "arity,dimension\n";
  for (std::size_t k = 0; k < dims.size(); ++k) csv += std::to_string(k + 1) + "," + dims[k].get_str() + "\n";
  emit(o, "dims", golden_name(spec), report, csv);
  return 0;
}

// -------------------------------------------------------------- complete

int cmd_complete(const std::string& spec, std::size_t max_arity, std::size_t max_steps, bool backtrack,
                 std::size_t max_nodes, const Output& o) {
  auto t0 = std::chrono::steady_clock::now();
  RewriteSystem sys = resolve_rules(spec);
  CompletionTrace tr;
  json results;
  if (backtrack) {
    BacktrackOptions opt;
    opt.max_nodes = max_nodes;
    auto b = backtracking_complete(sys, max_arity, opt);
    tr = b.trace;
    results["algorithm"] = "backtracking";
    results["found"] = b.found;
    results["nodes"] = b.nodes;
    results["dead_ends"] = b.dead_ends;
    results["loops"] = b.loops;
    results["report"] = b.report;
    if (!b.found) tr.status = CompletionStatus::budget_exhausted;
  } else {
    tr = buchberger_complete(sys, max_arity, max_steps);
    results["algorithm"] = "buchberger";
  }
  json rules = json::array();
  for (const auto& r : tr.system) rules.push_back({r.lhs.word(), r.rhs.word()});
  json added = json::array();
  for (const auto& a : tr.added_rules) {
    added.push_back({{"lhs", a.rule.lhs.word()}, {"rhs", a.rule.rhs.word()}, {"provenance", a.provenance.word()}});
  }
  results["rules"] = rules;
  results["added"] = added;
  results["per_arity_counts"] = tr.per_arity_counts;
  results["verified_arity"] = tr.verified_arity;
  if (!tr.reason.empty()) results["reason"] = tr.reason;
  const std::string status = to_string(tr.status);
  auto report = make_report("complete",
                            {{"spec", spec}, {"max_arity", max_arity}, {"max_steps", max_steps}, {"backtrack", backtrack}},
                            to_text(sys), results, status, since(t0));

  if (o.json_path != "-") {
    std::cout << "status: " << status << "\n";
    std::cout << "rules: " << tr.system.size() << " (" << tr.added_rules.size() << " added)\n";
    std::cout << "per-arity: " << join_seq(tr.per_arity_counts) << "\n";
    if (!tr.reason.empty()) std::cout << "reason: " << tr.reason << "\n";
    if (backtrack) std::cout << results["report"].get<std::string>() << "\n";
    std::cout << to_text(tr.system);
  }
  std::string csv = "arity,rules\n";
  for (std::size_t k = 0; k < tr.per_arity_counts.size(); ++k) {
    csv += std::to_string(k + 1) + "," + std::to_string(tr.per_arity_counts[k]) + "\n";
  }
  emit(o, "complete", golden_name(spec), report, csv);
  return 0;
}

// ---------------------------------------------------------------- verify

int run_suite(const std::string& name, const std::function<cli::SuiteResult()>& fn, const Output& o, json* all) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = fn();
  const std::string status = r.passed() ? "pass" : "fail";
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"passed", c.passed}});
  r.results["checks"] = checks;
  auto report = make_report("verify", {{"suite", name}}, name, r.results, status, since(t0));

  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << name << ": " << c.name;
    if (!c.passed) std::cout << " -- " << c.detail;
    std::cout << "\n";
  }
  std::cout << name << ": " << status << "\n";
  if (all) {
    (*all)[name] = report;
  } else {
    std::string csv = "suite,check,passed\n";
    for (const auto& c : r.checks) csv += name + "," + c.name + "," + (c.passed ? "1" : "0") + "\n";
    Output o2 = o;
    o2.golden_dir.clear();
    emit(o2, "verify", name, report, csv);
  }
  if (!o.golden_dir.empty()) check_golden(o.golden_dir, "verify", name, report);
  if (!r.passed()) {
    for (const auto& c : r.checks) {
      if (!c.passed) throw VerifyFailure(name + ": " + c.name + ": " + c.detail);
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, Output o) {
  const auto& suites = cli::named_suites();
  if (suite == "all") {
    if (o.golden_dir.empty()) o.golden_dir = "golden";
    // fail fast before any computation
    std::vector<std::string> missing;
    for (const auto& [name, fn] : suites) {
      fs::path p = fs::path(o.golden_dir) / "verify" / (name + ".json");
      if (!fs::exists(p)) missing.push_back(p.string());
    }
    if (!missing.empty()) {
      for (const auto& m : missing) std::cerr << "magq: missing fixture " << m << "\n";
      return kVerifyFailure;
    }
    json all;
    for (const auto& [name, fn] : suites) run_suite(name, fn, o, &all);
    if (!o.json_path.empty()) write_text(o.json_path, all.dump(2) + "\n");
    return 0;
  }
  for (const auto& [name, fn] : suites) {
    if (name == suite) return run_suite(name, fn, o, nullptr);
  }
  throw rejected_input("unknown suite '" + suite + "' (cas3, grassmann, realizations, mag34, all)");
}

// ------------------------------------------------------------ caslattice

int cmd_caslattice(const std::string& op, const std::vector<std::size_t>& args, std::size_t gamma_max,
                   const Output& o) {
  if (op == "verify") {
    return run_suite("caslattice", [&] { return cli::suite_caslattice(gamma_max); }, o, nullptr);
  }
  if (args.size() != 2) throw rejected_input("caslattice " + op + " needs two indices");
  const std::size_t a = args[0], b = args[1];
  if (op == "meet") std::cout << cas_meet(a, b) << "\n";
  else if (op == "join") std::cout << cas_join(a, b) << "\n";
  else if (op == "leq") std::cout << (cas_leq(a, b) ? "true" : "false") << "\n";
  else throw rejected_input("unknown caslattice operation '" + op + "' (meet, join, leq, verify)");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions, completion and verification for quotients of the magmatic operad"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Output out;
  if (const char* g = std::getenv("MAGQ_GOLDEN_DIR")) out.golden_dir = g;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--json", out.json_path, "Write the JSON report to a file ('-' for standard output)");
    sub->add_option("--csv", out.csv_path, "Write a CSV table to a file ('-' for standard output)");
    sub->add_option("--golden", out.golden_dir, "Compare against golden/<command>/<name>.json in this directory");
  };

  std::string spec;
  std::size_t n_max = 10;
  auto* dims = app.add_subcommand("dims", "Quotient dimensions per arity");
  dims->add_option("spec", spec, "Builtin (cas:g, mag:i,j, rc:g, as, aas, 2nil) or congruence file")->required();
  dims->add_option("--n-max", n_max, "Largest arity")->check(CLI::Range(1, 64));
  add_output(dims);

  std::size_t max_arity = 10, max_steps = 100000, max_nodes = 4096;
  bool backtrack = false;
  auto* complete = app.add_subcommand("complete", "Complete a rewrite system up to an arity budget");
  complete->add_option("spec", spec, "Builtin (cas:g, mag:i,j, as) or rules file")->required();
  complete->add_option("--max-arity", max_arity, "Largest arity of added rules")->check(CLI::Range(1, 64));
  complete->add_option("--max-steps", max_steps, "Largest number of processed overlaps");
  complete->add_flag("--backtrack", backtrack, "Search over orientations instead of fixed choices");
  complete->add_option("--max-nodes", max_nodes, "Search budget for --backtrack");
  add_output(complete);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "cas3, grassmann, realizations, mag34 or all")->required();
  add_output(verify);

  std::string lop;
  std::vector<std::size_t> largs;
  std::size_t gamma_max = 20;
  auto* lat = app.add_subcommand("caslattice", "Meet, join and order of comb associative operads");
  lat->add_option("operation", lop, "meet, join, leq or verify")->required();
  lat->add_option("indices", largs, "Two indices g, g2");
  lat->add_option("--gamma-max", gamma_max, "Index bound for verify")->check(CLI::Range(1, 200));
  add_output(lat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*dims) return cmd_dims(spec, n_max, out);
    if (*complete) return cmd_complete(spec, max_arity, max_steps, backtrack, max_nodes, out);
    if (*verify) return cmd_verify(suite, out);
    if (*lat) return cmd_caslattice(lop, largs, gamma_max, out);
  } catch (const VerifyFailure& e) {
    std::cerr << "magq: " << e.what() << "\n";
    return kVerifyFailure;
  } catch (const rejected_input& e) {
    std::cerr << "magq: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "magq: bad fixture: " << e.what() << "\n";
    return kVerifyFailure;
  }
  return 0;
}
