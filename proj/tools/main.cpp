// pgeom command-line front end.

#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "pgeom/commands.hpp"
#include "pgeom/error.hpp"

#ifndef PGEOM_FIXTURE_DIR
#define PGEOM_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

namespace fs = std::filesystem;
using namespace pgeom;

struct Globals {
  std::string fixture_dir = PGEOM_FIXTURE_DIR;
  std::optional<std::size_t> limit;
  bool sorted = false;
  std::string format = "text";
  std::uint64_t seed = 1;
};

// A path as given, else <fixture-dir>/<name>, else <fixture-dir>/<name>.inc.
std::string resolve(const Globals& g, const std::string& name) {
  if (fs::exists(name)) return name;
  for (const std::string& candidate : {g.fixture_dir + "/" + name, g.fixture_dir + "/" + name + ".inc"}) {
    if (fs::exists(candidate)) return candidate;
  }
  throw ParseError("cannot find input '" + name + "'");
}

Design load_design(const Globals& g, const std::string& name) {
  const std::string path = resolve(g, name);
  const std::string text = read_text_file(path);
  const auto ext = fs::path(path).extension().string();
  if (ext == ".had01" || ext == ".had") return from_hadamard(parse_hadamard(text));
  return parse_incidence(text);
}

int emit(const Globals& g, Report r, std::chrono::steady_clock::time_point start) {
  if (!g.sorted) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << render(r, g.format == "kv" ? ReportFormat::KeyValue : ReportFormat::Text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal cliques of the P_m(n) geometries and the (15,8,4)-designs they define"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--fixture-dir", g.fixture_dir, "Directory searched for input names");
  app.add_option("--limit", g.limit, "Stop enumeration after this many cliques");
  app.add_flag("--sorted", g.sorted, "Deterministic output: sorted listings, no timing");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "kv"}));
  app.add_option("--seed", g.seed, "Seed for randomised commands");

  auto* construct = app.add_subcommand("construct", "Build a canonical clique of the given kind");
  std::string kind, incidence_out, hadamard_out, hadamard_style = "01";
  construct->add_option("kind", kind)->required()->check(CLI::IsMember(construct_kinds()));
  construct->add_option("--incidence-out", incidence_out, "Write the 15x15 incidence matrix here");
  construct->add_option("--hadamard-out", hadamard_out, "Write the 16x16 Hadamard matrix here");
  construct->add_option("--hadamard-style", hadamard_style, "pm (+/-) or 01 (0 for +1, 1 for -1)")
      ->check(CLI::IsMember({"pm", "01"}));

  auto* classify = app.add_subcommand("classify", "Classify the clique behind an incidence matrix");
  std::string input;
  classify->add_option("file", input)->required();

  auto* isomorphic = app.add_subcommand("isomorphic", "Search for an isomorphism between two designs");
  std::string input_b;
  isomorphic->add_option("a", input)->required();
  isomorphic->add_option("b", input_b)->required();

  auto* census = app.add_subcommand("census", "Count product cliques at a fixed center");
  std::string center_text, z_text;
  std::size_t planes = 30;
  census->add_option("--center", center_text, "Center O, e.g. 8,9,10,11,12,13,14,15");
  census->add_option("--z", z_text, "7-subset Z of the center");
  census->add_option("--planes", planes, "Fano planes used on each side (30 = all)")->check(CLI::Range(1, 30));

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate maximal cliques of P_m(2^k - 1)");
  int k = 3;
  std::optional<std::size_t> through;
  std::size_t min_size = 0;
  enumerate->add_option("--k", k, "k, with n = 2^k - 1")->check(CLI::Range(2, 4));
  enumerate->add_option("--through", through, "Only cliques through this roster index");
  enumerate->add_option("--min-size", min_size, "Only cliques with at least this many points");

  auto* relabel = app.add_subcommand("relabel", "Apply a random point permutation (uses --seed)");
  std::string relabel_out;
  relabel->add_option("file", input)->required();
  relabel->add_option("--out", relabel_out, "Write the relabelled incidence matrix here");

  auto* spectrum = app.add_subcommand("fano-spectrum", "Index spectrum of bijections between two Fano planes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*construct) {
      auto out = cmd_construct(kind, hadamard_style == "pm" ? HadamardStyle::PlusMinus : HadamardStyle::ZeroOne);
      if (!incidence_out.empty()) write_text_file(incidence_out, format_incidence(out.design));
      if (!hadamard_out.empty()) {
        write_text_file(hadamard_out, format_hadamard(out.hadamard, hadamard_style == "pm"
                                                                       ? HadamardStyle::PlusMinus
                                                                       : HadamardStyle::ZeroOne));
      }
      return emit(g, std::move(out.report), start);
    }
    if (*classify) return emit(g, cmd_classify(load_design(g, input), input), start);
    if (*isomorphic) {
      return emit(g, cmd_isomorphic(load_design(g, input), load_design(g, input_b), input, input_b), start);
    }
    if (*census) {
      CensusOptions o;
      if (!center_text.empty()) o.center = parse_element_list(center_text, 15);
      if (!z_text.empty()) o.z = parse_element_list(z_text, 15);
      o.planes = planes;
      return emit(g, cmd_census(o), start);
    }
    if (*enumerate) {
      EnumerateCommandOptions o;
      o.k = k;
      o.through = through;
      o.limit = g.limit;
      o.min_size = min_size;
      o.sorted = g.sorted;
      return emit(g, cmd_enumerate(o), start);
    }
    if (*relabel) {
      auto out = cmd_relabel(load_design(g, input), g.seed);
      if (!relabel_out.empty()) write_text_file(relabel_out, format_incidence(out.design));
      return emit(g, std::move(out.report), start);
    }
    if (*spectrum) return emit(g, cmd_fano_spectrum(), start);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
