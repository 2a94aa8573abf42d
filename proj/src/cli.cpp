#include "icox/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "icox/combinatorics.hpp"
#include "icox/glue.hpp"
#include "icox/growth.hpp"
#include "icox/oracle.hpp"
#include "icox/roots.hpp"
#include "icox/volume.hpp"

namespace icox {

namespace {

namespace fs = std::filesystem;

const char* kUsage =
    "usage: icox <command> [options]\n"
    "\n"
    "commands:\n"
    "  validate <model>... [--all DIR] [--tsv]   parse, validate and run the\n"
    "                                            realizability checks\n"
    "  growth <model> [--series N] [--tsv]       growth function by both routes,\n"
    "                                            denominator polynomial, series\n"
    "  rate <model> [--tol R]                    certified growth rate and Perron\n"
    "                                            certificate\n"
    "  volume <name> [--tol R]                   catalog volume with error bound\n"
    "  glue <A> <B> --face-a I --face-b J\n"
    "       [--map a:b,...] [--auto] [--out F]   glue along matched faces, verify\n"
    "  oracle <model> [--depth N] [--cap M]      word-length sphere sizes by\n"
    "                                            breadth-first enumeration\n"
    "  catalog [--emit NAME] [--tsv]             list built-in models\n"
    "\n"
    "<model> is an ICP file path, or a built-in name (P1..P5, OCT).\n"
    "Environment: ICOX_TOL overrides the default tolerance 1e-10;\n"
    "ICOX_BFS_CAP overrides the enumeration element cap 1000000.\n";

struct UsageError {
  std::string msg;
};

struct CheckFailure {
  std::string msg;
};

PolyhedronCombinatorics load_model(const std::string& arg) {
  if (fs::exists(arg)) return parse_icp_file(arg);
  for (const auto& name : catalog_names())
    if (arg == name) return catalog(arg);
  throw UsageError{"no such file or catalog name: " + arg};
}

Rat default_tol() {
  if (const char* env = std::getenv("ICOX_TOL")) return parse_rational(env);
  return make_rat(1, 10000000000L);  // 1e-10
}

long long default_cap() {
  if (const char* env = std::getenv("ICOX_BFS_CAP")) return std::atoll(env);
  return 1000000;
}

std::string fmt_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// --- argument scanning -----------------------------------------------------

struct Args {
  std::vector<std::string> positional;
  std::vector<std::pair<std::string, std::string>> options;  // --flag [value]

  bool has(const std::string& flag) const {
    for (const auto& [k, v] : options)
      if (k == flag) return true;
    return false;
  }
  std::string get(const std::string& flag, const std::string& fallback = "") const {
    for (const auto& [k, v] : options)
      if (k == flag) return v;
    return fallback;
  }
};

Args scan_args(const std::vector<std::string>& argv, std::size_t start,
               const std::vector<std::string>& value_flags,
               const std::vector<std::string>& bool_flags) {
  Args out;
  for (std::size_t i = start; i < argv.size(); ++i) {
    const std::string& a = argv[i];
    if (a.rfind("--", 0) == 0) {
      bool takes_value =
          std::find(value_flags.begin(), value_flags.end(), a) != value_flags.end();
      bool is_bool = std::find(bool_flags.begin(), bool_flags.end(), a) != bool_flags.end();
      if (!takes_value && !is_bool) throw UsageError{"unknown option " + a};
      if (takes_value) {
        if (i + 1 >= argv.size()) throw UsageError{"option " + a + " needs a value"};
        out.options.push_back({a, argv[++i]});
      } else {
        out.options.push_back({a, ""});
      }
    } else {
      out.positional.push_back(a);
    }
  }
  return out;
}

// --- subcommands -------------------------------------------------------------

int cmd_validate(const Args& args, std::ostringstream& out) {
  std::vector<std::string> inputs = args.positional;
  if (args.has("--all")) {
    std::vector<std::string> files;
    fs::path dir = args.get("--all");
    if (!fs::is_directory(dir)) throw UsageError{"--all needs a directory"};
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.path().extension() == ".icp") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    inputs.insert(inputs.end(), files.begin(), files.end());
  }
  if (inputs.empty()) throw UsageError{"validate needs at least one model"};
  bool tsv = args.has("--tsv");
  bool all_ok = true;
  for (const auto& input : inputs) {
    PolyhedronCombinatorics P = load_model(input);
    ValidationReport rep = validate(P);
    AndreevReport arep = andreev_check(P);
    bool ok = rep.ok() && arep.ok();
    all_ok = all_ok && ok;
    if (tsv) {
      if (rep.invariants) {
        const InvariantVector& iv = *rep.invariants;
        out << P.name << "\t" << iv.f << "\t" << iv.c << "\t" << iv.e << "\t" << iv.e2 << "\t"
            << iv.e3 << "\t" << iv.e4 << "\t" << iv.e6 << "\t" << iv.c8 << "\t" << iv.c9 << "\t"
            << iv.c10 << "\t" << iv.c11 << "\t" << (ok ? "valid" : "invalid") << "\n";
      } else {
        out << P.name << "\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-\tinvalid\n";
      }
    } else {
      out << "== " << P.name << " (" << input << ") ==\n";
      out << rep.str();
      out << "andreev conditions:\n" << arep.str();
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_growth(const Args& args, std::ostringstream& out) {
  if (args.positional.size() != 1) throw UsageError{"growth needs exactly one model"};
  PolyhedronCombinatorics P = load_model(args.positional[0]);
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw CheckFailure{"model does not validate:\n" + rep.str()};
  RationalFunction by_sum = steinberg_growth(*rep.invariants);
  RationalFunction by_formula = closed_form_growth(*rep.invariants);
  IntPolynomial g = g_polynomial(*rep.invariants);
  if (by_sum != by_formula)
    throw CheckFailure{"internal contradiction: the two growth-function routes disagree\n  sum:     " +
                       by_sum.str() + "\n  formula: " + by_formula.str()};
  int series_n = -1;
  if (args.has("--series")) series_n = std::atoi(args.get("--series").c_str());
  std::vector<Int> series;
  if (series_n >= 0) series = series_coefficients(by_formula, series_n);

  if (args.has("--tsv")) {
    out << P.name << "\t" << g.str() << "\t" << by_formula.str();
    if (series_n >= 0) {
      out << "\t";
      for (std::size_t j = 0; j < series.size(); ++j) out << (j ? " " : "") << series[j].get_str();
    }
    out << "\n";
  } else {
    out << "name: " << P.name << "\n";
    out << "g(t) = " << g.str() << "\n";
    out << "F(t) = " << by_formula.str() << "\n";
    out << "forms agree: subgroup sum == closed form\n";
    if (series_n >= 0) {
      out << "series:";
      for (const auto& a : series) out << " " << a.get_str();
      out << "\n";
    }
  }
  return 0;
}

int cmd_rate(const Args& args, std::ostringstream& out) {
  if (args.positional.size() != 1) throw UsageError{"rate needs exactly one model"};
  PolyhedronCombinatorics P = load_model(args.positional[0]);
  Rat tol = args.has("--tol") ? parse_rational(args.get("--tol")) : default_tol();
  RootCertificate cert = growth_rate(P, tol);
  out << "name: " << P.name << "\n";
  out << "g(t) = " << g_polynomial(compute_invariants(P)).str() << "\n";
  out << "r0 in " << cert.r0.str() << "\n";
  out << cert.str();
  return cert.perron ? 0 : 1;
}

int cmd_volume(const Args& args, std::ostringstream& out) {
  if (args.positional.size() != 1) throw UsageError{"volume needs exactly one catalog name"};
  double tol = 1e-12;
  if (args.has("--tol"))
    tol = std::atof(args.get("--tol").c_str());
  else if (const char* env = std::getenv("ICOX_TOL"))
    tol = std::atof(env);
  VolumeValue v;
  try {
    v = catalog_volume(args.positional[0], tol);
  } catch (const DomainError& err) {
    throw UsageError{err.what()};
  }
  out << "vol(" << args.positional[0] << ") = " << v.str() << "\n";
  return 0;
}

int cmd_oracle(const Args& args, std::ostringstream& out) {
  if (args.positional.size() != 1) throw UsageError{"oracle needs exactly one model"};
  PolyhedronCombinatorics P = load_model(args.positional[0]);
  int depth = args.has("--depth") ? std::atoi(args.get("--depth").c_str()) : 6;
  long long cap = args.has("--cap") ? std::atoll(args.get("--cap").c_str()) : default_cap();
  GrowthSample sample = bfs_growth(coxeter_matrix(P), depth, cap);
  for (int j = 0; j <= sample.depth; ++j)
    out << j << "\t" << sample.counts[j].get_str() << "\n";
  return 0;
}

int cmd_catalog(const Args& args, std::ostringstream& out) {
  if (args.has("--emit")) {
    out << serialize_icp(catalog(args.get("--emit")));
    return 0;
  }
  bool tsv = args.has("--tsv");
  if (!tsv) out << "name\tf\tc\ttau\tvol\n";
  for (const auto& name : catalog_names()) {
    PolyhedronCombinatorics P = catalog(name);
    InvariantVector iv = compute_invariants(P);
    RootCertificate cert = growth_rate(P, make_rat(1, 100000000L));
    std::string tau = cert.tau.exact() ? rat_str(cert.tau.lo) + " (exact)"
                                       : fmt_double(rat_to_double(cert.tau.midpoint()), 6);
    std::string vol = "-";
    if (name != "OCT") vol = fmt_double(catalog_volume(name, 1e-9).value, 6);
    out << name << "\t" << iv.f << "\t" << iv.c << "\t" << tau << "\t" << vol << "\n";
  }
  return 0;
}

FaceMatching parse_map_option(const std::string& text, int face_a, int face_b) {
  FaceMatching m;
  m.face_p = face_a;
  m.face_q = face_b;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError{"--map wants a:b pairs, got '" + item + "'"};
    m.pairs.push_back({std::atoi(item.substr(0, colon).c_str()),
                       std::atoi(item.substr(colon + 1).c_str())});
  }
  if (m.pairs.empty()) throw UsageError{"--map is empty"};
  return m;
}

int cmd_glue(const Args& args, std::ostringstream& out) {
  if (args.positional.size() != 2) throw UsageError{"glue needs exactly two models"};
  PolyhedronCombinatorics A = load_model(args.positional[0]);
  PolyhedronCombinatorics B = load_model(args.positional[1]);
  if (!args.has("--face-a") || !args.has("--face-b"))
    throw UsageError{"glue needs --face-a and --face-b"};
  int fa = std::atoi(args.get("--face-a").c_str());
  int fb = std::atoi(args.get("--face-b").c_str());
  Rat tol = args.has("--tol") ? parse_rational(args.get("--tol")) : default_tol();

  std::vector<FaceMatching> matchings;
  if (args.has("--auto")) {
    matchings = enumerate_matchings(A, B, fa, fb);
    out << "auto: " << matchings.size() << " glueable matching(s)\n";
    if (matchings.empty()) throw CheckFailure{"no glueable matching between these faces"};
  } else if (args.has("--map")) {
    matchings.push_back(parse_map_option(args.get("--map"), fa, fb));
  } else {
    throw UsageError{"glue needs --map or --auto"};
  }

  bool all_ok = true;
  bool first = true;
  for (const auto& match : matchings) {
    out << "matching:";
    for (const auto& [a, b] : match.pairs) out << " " << a << ":" << b;
    out << "\n";
    GlueCheckReport check = check_glueable(A, B, match);
    out << check.str();
    if (!check.glueable()) {
      all_ok = false;
      continue;
    }
    PolyhedronCombinatorics glued = glue(A, B, match);
    out << "glued model:\n" << serialize_icp(glued);
    GlueIdentityReport ids = glue_identities_check(A, B, match, glued);
    out << "identities:\n" << ids.str();
    RateMonotonicityReport t6 = rate_monotonicity_check(A, B, glued, tol);
    out << t6.str();
    all_ok = all_ok && ids.ok() && t6.ok();
    if (first && args.has("--out")) {
      std::FILE* f = std::fopen(args.get("--out").c_str(), "w");
      if (!f) throw UsageError{"cannot write " + args.get("--out")};
      std::string text = serialize_icp(glued);
      std::fwrite(text.data(), 1, text.size(), f);
      std::fclose(f);
      first = false;
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

CommandOutcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  try {
    if (args.empty()) {
      out << kUsage;
      return {2, out.str()};
    }
    const std::string& cmd = args[0];
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsage;
      return {0, out.str()};
    }
    if (cmd == "validate") {
      Args a = scan_args(args, 1, {"--all"}, {"--tsv"});
      return {cmd_validate(a, out), out.str()};
    }
    if (cmd == "growth") {
      Args a = scan_args(args, 1, {"--series"}, {"--tsv"});
      return {cmd_growth(a, out), out.str()};
    }
    if (cmd == "rate") {
      Args a = scan_args(args, 1, {"--tol"}, {});
      return {cmd_rate(a, out), out.str()};
    }
    if (cmd == "volume") {
      Args a = scan_args(args, 1, {"--tol"}, {});
      return {cmd_volume(a, out), out.str()};
    }
    if (cmd == "oracle") {
      Args a = scan_args(args, 1, {"--depth", "--cap"}, {});
      return {cmd_oracle(a, out), out.str()};
    }
    if (cmd == "catalog") {
      Args a = scan_args(args, 1, {"--emit"}, {"--tsv"});
      return {cmd_catalog(a, out), out.str()};
    }
    if (cmd == "glue") {
      Args a = scan_args(args, 1, {"--face-a", "--face-b", "--map", "--out", "--tol"}, {"--auto"});
      return {cmd_glue(a, out), out.str()};
    }
    out << "unknown command '" << cmd << "'\n" << kUsage;
    return {2, out.str()};
  } catch (const UsageError& e) {
    out << "error: " << e.msg << "\n";
    return {2, out.str()};
  } catch (const ParseError& e) {
    out << "parse error: " << e.what() << "\n";
    return {2, out.str()};
  } catch (const CheckFailure& e) {
    out << "check failed: " << e.msg << "\n";
    return {1, out.str()};
  } catch (const InconclusiveError& e) {
    out << "inconclusive: " << e.what() << "\n";
    return {3, out.str()};
  } catch (const LimitError& e) {
    out << "limit: " << e.what() << "\n";
    return {1, out.str()};
  } catch (const DomainError& e) {
    out << "error: " << e.what() << "\n";
    return {1, out.str()};
  } catch (const std::exception& e) {
    out << "internal error: " << e.what() << "\n";
    return {1, out.str()};
  }
}

}  // namespace icox
