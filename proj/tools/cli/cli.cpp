#include "cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/format.hpp"
#include "versorlab/catalog.hpp"
#include "versorlab/error.hpp"
#include "versorlab/json_io.hpp"

namespace versorlab::cli {

namespace {

constexpr std::size_t kSweepBudget = 10000;

enum class KindArg { kPin, kSpin, kChiral, kFull };

void print_error(std::ostream& err, std::string_view code, std::string_view message) {
  err << nlohmann::json{{"error", code}, {"message", message}}.dump() << "\n";
}

bool looks_like_file(const std::string& arg) {
  return arg.find('/') != std::string::npos || arg.ends_with(".json") ||
         std::filesystem::is_regular_file(arg);
}

RootClosureOptions root_options(const Settings& s) {
  RootClosureOptions opts;
  opts.precision = s.precision;
  if (s.max_closure > 0) opts.max_roots = s.max_closure;
  return opts;
}

GroupClosureOptions group_options(const Settings& s) {
  GroupClosureOptions opts;
  opts.precision = s.precision;
  if (s.max_closure > 0) opts.max_elements = s.max_closure;
  return opts;
}

RootSystem load_root_system(const std::string& arg, const Settings& s) {
  if (!looks_like_file(arg)) return catalog(arg, root_options(s));
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + arg);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, arg + ": " + e.what());
  }
  RootSystemInput input = root_system_input_from_json(j);
  RootSystem rs = close_roots(input.simple_roots, root_options(s));
  rs.name = input.name ? input.name : std::optional<std::string>(arg);
  return rs;
}

VersorGroup build_group(const RootSystem& rs, KindArg kind, const Settings& s) {
  if (kind == KindArg::kPin || kind == KindArg::kFull) return generate_pin(rs, group_options(s));
  return generate_spin(rs, group_options(s));
}

bool is_quotient(KindArg kind) { return kind == KindArg::kChiral || kind == KindArg::kFull; }

}  // namespace

std::uint64_t seed_from_environment() {
  const char* raw = std::getenv("VERSORLAB_SEED");
  if (raw == nullptr || *raw == '\0') return 42;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == nullptr || *end != '\0') return 42;
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Versor constructions of root systems, spinor groups and conformal maps"};
  app.name("versorlab");
  app.require_subcommand(1);

  Settings settings;
  settings.seed = seed_from_environment();
  const std::map<std::string, Format> formats{
      {"json", Format::kJson}, {"csv", Format::kCsv}, {"markdown", Format::kMarkdown}};
  const std::map<std::string, KindArg> kinds{{"pin", KindArg::kPin},
                                             {"spin", KindArg::kSpin},
                                             {"chiral", KindArg::kChiral},
                                             {"full", KindArg::kFull}};
  double tolerance = kEpsilon;

  app.add_option("--format", settings.format, "json, csv or markdown")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--tolerance", tolerance, "numerical tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-closure", settings.max_closure, "cap on closure sizes")
      ->check(CLI::PositiveNumber);

  std::string source;
  KindArg kind = KindArg::kSpin;
  auto* roots_cmd = app.add_subcommand("roots", "root listing, Cartan matrix and diagram");
  roots_cmd->add_option("source", source, "catalog name or JSON file")->required();

  auto* group_cmd = app.add_subcommand("group", "group elements");
  group_cmd->add_option("name", source, "catalog name or JSON file")->required();
  group_cmd->add_option("--kind", kind, "pin, spin, chiral or full")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));

  auto* classes_cmd = app.add_subcommand("classes", "conjugacy classes");
  classes_cmd->add_option("name", source, "catalog name or JSON file")->required();
  classes_cmd->add_option("--kind", kind, "pin, spin, chiral or full")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));

  auto* induce_cmd = app.add_subcommand("induce", "4D root system from a 3D spinor group");
  induce_cmd->add_option("name", source, "catalog name or JSON file")->required();

  auto* mckay_cmd = app.add_subcommand("mckay", "root counts, irreps and Coxeter numbers");

  std::string word;
  double x1 = 0.0;
  double x2 = 0.0;
  auto* modular_cmd = app.add_subcommand("modular", "modular word against Mobius arithmetic");
  modular_cmd->add_option("word", word, "letters S, T, t; I or empty for the identity")
      ->required();
  modular_cmd->add_option("x1", x1)->required();
  modular_cmd->add_option("x2", x2)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return 2;
  }
  settings.precision.eps = tolerance;

  try {
    if (*roots_cmd) {
      out << render_roots(load_root_system(source, settings), settings.format);
    } else if (*group_cmd || *classes_cmd) {
      const RootSystem rs = load_root_system(source, settings);
      const VersorGroup g = build_group(rs, kind, settings);
      const bool classes = static_cast<bool>(*classes_cmd);
      if (is_quotient(kind)) {
        const QuotientGroup q = quotient_by_sign(g);
        out << (classes ? render_classes(q, settings.format) : render_group(q, settings.format));
      } else {
        out << (classes ? render_classes(g, settings.format) : render_group(g, settings.format));
      }
    } else if (*induce_cmd) {
      const RootSystem rs = load_root_system(source, settings);
      const VersorGroup g = generate_spin(rs, group_options(settings));
      const InducedRootSystem4D induced = induce_4d(g, settings.precision);
      SymmetrySweepOptions sweep;
      sweep.seed = settings.seed;
      if (g.order() * g.order() > kSweepBudget) sweep.sampled_pairs = kSweepBudget;
      const SymmetryReport report = spinorial_automorphisms(induced, sweep);
      out << render_induction(induced, report, settings.format);
    } else if (*mckay_cmd) {
      out << render_mckay(mckay_table(), settings.format);
    } else if (*modular_cmd) {
      const std::string letters = word == "I" ? std::string{} : word;
      const auto cmp = cga::compare_with_oracle(cga::ModularWord::parse(letters), {x1, x2},
                                                settings.precision.eps);
      out << render_modular(cmp, settings.format);
    } else if (*verify_cmd) {
      const auto checks = run_invariant_suite(settings);
      out << render_checks(checks, settings.format);
      const bool ok = std::all_of(checks.begin(), checks.end(),
                                  [](const CheckResult& c) { return c.pass; });
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    print_error(err, error_code_name(e.code()), e.what());
    return 1;
  } catch (const nlohmann::json::exception& e) {
    print_error(err, error_code_name(ErrorCode::kParseError), e.what());
    return 1;
  }
  return 0;
}

}  // namespace versorlab::cli
