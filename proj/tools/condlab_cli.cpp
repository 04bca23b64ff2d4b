// Command-line front end; talks to the engine only through the C API.
#include <algorithm>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "condlab/condlab.h"

namespace {

enum Exit { kOk = 0, kVerdict = 1, kParse = 2, kLimit = 3, kError = 4 };

int exit_for(cl_status s) {
  switch (s) {
    case CL_OK: return kOk;
    case CL_ERR_PARSE: return kParse;
    case CL_ERR_LIMIT: return kLimit;
    default: return kError;
  }
}

int report_error(cl_status s) {
  std::cerr << "error: " << cl_status_name(s) << ": " << cl_last_error() << "\n";
  return exit_for(s);
}

struct Text {
  char* p = nullptr;
  ~Text() { cl_string_free(p); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using IdealH = Handle<cl_ideal, cl_ideal_free>;
using CurveH = Handle<cl_curve, cl_curve_free>;
using ReportsH = Handle<cl_reports, cl_reports_free>;

struct Config {
  std::string input;
  uint32_t prime = 0;
  uint32_t second_prime = 0;
  uint64_t seed = 1;
  int degree_cap = 0;
  bool json = false;
  bool trace = false;
  int max_degree = 12;
  std::string statement;
  bool all = false;
  int lines = 0, degree = 0, m = 0;
};

int load_ideal(const Config& c, IdealH& out) {
  if (cl_status s = cl_ideal_load(c.input.c_str(), c.degree_cap, &out.p)) return report_error(s);
  if (c.prime) {
    IdealH moved;
    if (cl_status s = cl_ideal_with_prime(out.p, c.prime, &moved.p)) return report_error(s);
    std::swap(out.p, moved.p);
  }
  return kOk;
}

int load_curve(const std::string& path, const Config& c, CurveH& out) {
  if (cl_status s = cl_curve_load(path.c_str(), c.degree_cap, &out.p)) return report_error(s);
  if (c.prime) {
    CurveH moved;
    if (cl_status s = cl_curve_with_prime(out.p, c.prime, &moved.p)) return report_error(s);
    std::swap(out.p, moved.p);
  }
  return kOk;
}

int print_text(cl_status s, Text& t) {
  if (s) return report_error(s);
  std::cout << t.p;
  if (*t.p && t.p[std::strlen(t.p) - 1] != '\n') std::cout << "\n";
  return kOk;
}

int run_ideal_command(const std::string& cmd, const Config& c) {
  IdealH I;
  if (int rc = load_ideal(c, I)) return rc;
  Text out;
  cl_status s = CL_OK;
  if (cmd == "gb")
    s = cl_ideal_groebner(I.p, c.trace, c.json, &out.p);
  else if (cmd == "resolve")
    s = cl_ideal_resolve(I.p, c.json, &out.p);
  else if (cmd == "betti")
    s = cl_ideal_betti(I.p, c.json, &out.p);
  else
    s = cl_ideal_hilbert(I.p, c.max_degree, c.json, &out.p);
  return print_text(s, out);
}

int run_conductor(const Config& c) {
  CurveH curve;
  if (int rc = load_curve(c.input, c, curve)) return rc;
  Text out;
  return print_text(cl_curve_conductor(curve.p, c.seed, c.json, &out.p), out);
}

cl_options options_for(const Config& c, uint32_t prime) {
  cl_options o{};
  o.seed = c.seed;
  o.prime = prime;
  o.degree_cap = c.degree_cap;
  o.lines = c.lines;
  o.degree = c.degree;
  o.m = c.m;
  return o;
}

// Runs the requested verification at one prime into `out`.
cl_status verify_once(const Config& c, uint32_t prime, ReportsH& out) {
  if (!c.input.empty()) {
    CurveH curve;
    cl_status s = cl_curve_load(c.input.c_str(), c.degree_cap, &curve.p);
    if (s) return s;
    if (prime) {
      CurveH moved;
      if ((s = cl_curve_with_prime(curve.p, prime, &moved.p))) return s;
      std::swap(curve.p, moved.p);
    }
    return cl_verify_curve(curve.p, c.seed, &out.p);
  }
  cl_options o = options_for(c, prime);
  if (c.all) return cl_verify_all(&o, &out.p);
  return cl_verify_statement(c.statement.c_str(), &o, &out.p);
}

void print_reports_text(const cl_reports* r) {
  for (size_t k = 0; k < cl_reports_count(r); ++k) {
    Text t;
    if (cl_report_text(r, k, &t.p) == CL_OK) std::cout << t.p;
  }
}

int summarize(const cl_reports* r) {
  size_t total = cl_reports_count(r), passed = 0;
  for (size_t k = 0; k < total; ++k) passed += cl_report_pass(r, k);
  std::cout << "summary: " << passed << "/" << total << " verdicts pass\n";
  return passed == total ? kOk : kVerdict;
}

int run_verify(const Config& c) {
  if (c.input.empty() && !c.all && c.statement.empty()) {
    std::cerr << "error: verify needs a fixture, --statement <id> or --all\n";
    return kParse;
  }
  ReportsH first;
  if (cl_status s = verify_once(c, c.prime, first)) return report_error(s);
  ReportsH second;
  if (c.second_prime) {
    if (cl_status s = verify_once(c, c.second_prime, second)) return report_error(s);
  }
  if (c.json) {
    ReportsH merged;
    cl_reports_create(&merged.p);
    cl_reports_append(merged.p, first.p);
    if (second.p) cl_reports_append(merged.p, second.p);
    Text t;
    if (cl_status s = cl_reports_json(merged.p, &t.p)) return report_error(s);
    std::cout << t.p << "\n";
    return cl_reports_all_pass(merged.p) ? kOk : kVerdict;
  }
  print_reports_text(first.p);
  if (!second.p) return summarize(first.p);
  print_reports_text(second.p);
  // side-by-side verdicts, one line per report index
  size_t n = std::max(cl_reports_count(first.p), cl_reports_count(second.p));
  std::printf("%-22s %-8u %-8u\n", "statement", cl_report_prime(first.p, 0), cl_report_prime(second.p, 0));
  bool ok = true;
  for (size_t k = 0; k < n; ++k) {
    const char* id = cl_report_statement(first.p, k);
    if (!id) id = cl_report_statement(second.p, k);
    int a = cl_report_pass(first.p, k), b = cl_report_pass(second.p, k);
    ok = ok && a && b;
    std::printf("%-22s %-8s %-8s\n", id ? id : "?", a ? "pass" : "FAIL", b ? "pass" : "FAIL");
  }
  std::cout << "summary: " << (ok ? "all verdicts pass at both primes" : "failures present") << "\n";
  return ok ? kOk : kVerdict;
}

int run_corpus(const Config& c) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(c.input, ec)) {
    std::cerr << "error: " << c.input << " is not a directory\n";
    return kError;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(c.input))
    if (e.is_regular_file() && e.path().extension() == ".curve") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<uint32_t> primes{c.prime};
  if (c.second_prime) primes.push_back(c.second_prime);
  ReportsH all;
  cl_reports_create(&all.p);
  // fixture -> statement -> verdict
  std::map<std::string, std::map<std::string, std::string>> table;
  std::vector<std::string> columns;
  int worst = kOk;
  for (const auto& f : files) {
    const std::string name = f.stem().string();
    for (uint32_t p : primes) {
      Config one = c;
      one.input = f.string();
      ReportsH r;
      cl_status s = verify_once(one, p, r);
      const std::string row = primes.size() > 1 ? name + "@" + std::to_string(p ? p : 32003) : name;
      if (s) {
        std::cerr << name << ": " << cl_status_name(s) << ": " << cl_last_error() << "\n";
        table[row]["error"] = cl_status_name(s);
        if (std::find(columns.begin(), columns.end(), "error") == columns.end()) columns.push_back("error");
        worst = std::max(worst, exit_for(s));
        continue;
      }
      for (size_t k = 0; k < cl_reports_count(r.p); ++k) {
        std::string id = cl_report_statement(r.p, k);
        if (std::find(columns.begin(), columns.end(), id) == columns.end()) columns.push_back(id);
        std::string& cell = table[row][id];
        bool pass = cl_report_pass(r.p, k);
        if (!pass) worst = std::max(worst, int(kVerdict));
        cell = (cell.empty() || cell == "pass") && pass ? "pass" : "FAIL";
      }
      cl_reports_annotate(r.p, ("fixture " + row).c_str());
      cl_reports_append(all.p, r.p);
    }
  }
  if (c.json) {
    Text t;
    if (cl_status s = cl_reports_json(all.p, &t.p)) return report_error(s);
    std::cout << t.p << "\n";
    return worst;
  }
  std::size_t width = 8;
  for (const auto& [row, cells] : table) width = std::max(width, row.size() + 1);
  std::printf("%-*s", static_cast<int>(width), "fixture");
  for (const auto& col : columns) std::printf(" %-*s", static_cast<int>(std::max<std::size_t>(col.size(), 4)), col.c_str());
  std::printf("\n");
  for (const auto& [row, cells] : table) {
    std::printf("%-*s", static_cast<int>(width), row.c_str());
    for (const auto& col : columns) {
      auto it = cells.find(col);
      std::printf(" %-*s", static_cast<int>(std::max<std::size_t>(col.size(), 4)),
                  it == cells.end() ? "-" : it->second.c_str());
    }
    std::printf("\n");
  }
  std::cout << "summary: " << files.size() << " fixtures, " << cl_reports_count(all.p) << " verdicts, "
            << (worst == kOk ? "all pass" : "failures present") << "\n";
  return worst;
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"condlab: Gröbner bases, free resolutions and conductors of plane curves over F_p"};
  app.require_subcommand(1);
  Config c;
  auto prime_check = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          unsigned long v = std::stoul(s);
          if (v >= (1ul << 31) || !is_prime(static_cast<uint32_t>(v))) return "must be a prime below 2^31";
        } catch (...) {
          return "must be a prime below 2^31";
        }
        return "";
      },
      "PRIME");
  auto common = [&](CLI::App* sub) {
    sub->add_option("--prime", c.prime, "Override the prime of the input")->check(prime_check);
    sub->add_option("--seed", c.seed, "Seed for randomized constructions")->capture_default_str();
    sub->add_option("--degree-cap", c.degree_cap, "Abort Gröbner and resolution work beyond this degree")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", c.json, "Emit JSON");
  };

  std::map<std::string, CLI::App*> subs;
  const std::pair<const char*, const char*> ideal_commands[] = {
      {"gb", "Reduced Gröbner basis of the ideal in FILE"},
      {"resolve", "Minimal free resolution of S/I"},
      {"betti", "Graded Betti table and regularity of I"},
      {"hilbert", "Hilbert function and polynomial of S/I"},
  };
  for (const auto& [name, help] : ideal_commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", c.input, "Ideal file (generator: lines) or curve fixture")->required();
    common(sub);
    subs[name] = sub;
  }
  subs["gb"]->add_flag("--trace", c.trace, "Print the S-pair reduction log");
  subs["hilbert"]->add_option("--max-degree", c.max_degree, "Last degree printed")->capture_default_str();

  CLI::App* conductor = app.add_subcommand("conductor", "Conductor ideal of the curve in FILE");
  conductor->add_option("file", c.input, "Curve fixture")->required();
  common(conductor);

  CLI::App* verify = app.add_subcommand("verify", "Check statements on built-in instances or on a fixture");
  verify->add_option("file", c.input, "Curve fixture (optional)");
  verify->add_option("--statement", c.statement, "Statement id");
  verify->add_flag("--all", c.all, "Run the full suite");
  verify->add_option("--second-prime", c.second_prime, "Repeat at this prime and compare")->check(prime_check);
  verify->add_option("--lines", c.lines, "Number of lines (example1)")->check(CLI::Range(2, 8));
  verify->add_option("--degree", c.degree, "Curve degree (example2)")->check(CLI::Range(4, 12));
  verify->add_option("--m", c.m, "Matrix size (example3)")->check(CLI::Range(2, 4));
  common(verify);

  CLI::App* corpus = app.add_subcommand("corpus", "Verify every .curve fixture in DIR");
  corpus->add_option("dir", c.input, "Fixture directory")->required();
  corpus->add_option("--second-prime", c.second_prime, "Repeat at this prime")->check(prime_check);
  common(corpus);

  app.footer("statements: " + [] {
    std::string s;
    for (size_t k = 0; k < cl_statement_count(); ++k) s += (k ? ", " : "") + std::string(cl_statement_id(k));
    return s;
  }() + "\nexit codes: 0 all verdicts pass, 1 verdict failure, 2 parse error, 3 degree cap, 4 other error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  if (!c.statement.empty()) {
    bool known = false;
    for (size_t k = 0; k < cl_statement_count(); ++k) known = known || c.statement == cl_statement_id(k);
    if (!known) {
      std::cerr << "error: unknown statement '" << c.statement << "'\n";
      return kParse;
    }
  }
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) return run_ideal_command(name, c);
  if (conductor->parsed()) return run_conductor(c);
  if (verify->parsed()) return run_verify(c);
  return run_corpus(c);
}
