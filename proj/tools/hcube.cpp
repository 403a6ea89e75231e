// hcube: generate colorings, detect and extract monochromatic structures,
// find geometric progressions and run avoidance searches. Reports are JSON
// on stdout. Exit codes: 0 found, 1 not found, 2 input error, 3 budget.

#include "hcube/coloring_io.hpp"
#include "hcube/error.hpp"
#include "hcube/hj_codec.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using hcube::io::Json;
namespace io = hcube::io;
namespace search = hcube::search;

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct Common {
  bool timing = false;
  std::string command;
};

int finish(Json report, int code, const Common& common, std::chrono::steady_clock::time_point start) {
  if (common.timing) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    report["wall_time_us"] = us.count();
  }
  report["exit_code"] = code;
  std::cout << report.dump(2) << "\n";
  return code;
}

Json report_head(const Common& common, const char* name) {
  return Json{{"command", common.command}, {"subcommand", name}};
}

std::string describe_local(const search::Domain& domain, std::uint32_t local) {
  const std::size_t index = domain.file_index(local);
  switch (domain.kind) {
    case search::DomainKind::dn: return hcube::DiagPoint::from_index(domain.n, index).str();
    case search::DomainKind::alphabet4: return hcube::hj::HJPoint::from_index(4, domain.n, index).str();
    case search::DomainKind::alphabet3: return hcube::hj::HJPoint::from_index(3, domain.n, index).str();
    case search::DomainKind::segments: {
      auto [a, b] = search::segment_unrank(domain.n, index);
      return hcube::BitWord(domain.n, a).str() + "-" + hcube::BitWord(domain.n, b).str();
    }
  }
  return "?";
}

// gen

struct GenArgs {
  std::string domain = "Dn";
  int n = 0;
  std::uint64_t big_n = 0;
  std::vector<std::int64_t> a, b;
  int r = 2;
  std::string scheme = "random";
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  io::ColoringFile header;
  header.domain = io::parse_file_domain(args.domain);
  header.n = args.n;
  header.big_n = args.big_n;
  header.a = args.a;
  header.b = args.b;
  header.r = args.r;
  const auto file = io::generate(header, io::parse_scheme(args.scheme), args.seed);
  if (args.out.empty() || args.out == "-") {
    io::write_coloring(std::cout, file);
  } else {
    std::ofstream out(args.out);
    if (!out) throw hcube::Error(hcube::ErrorCode::InvalidArgument, "cannot write '" + args.out + "'");
    io::write_coloring(out, file);
  }
  return kFound;
}

// detect

struct DetectArgs {
  std::string file;
  std::string structure = "corner";
  int m = 2;
};

int run_detect(const DetectArgs& args, const Common& common) {
  const auto start = std::chrono::steady_clock::now();
  const auto file = io::read_coloring_file(args.file);
  Json report = report_head(common, "detect");
  report["file"] = args.file;
  report["domain"] = std::string(io::to_string(file.domain));
  report["structure"] = args.structure;
  report["r"] = file.r;
  auto found = [&](Json witness) {
    report["outcome"] = "found";
    report["witness"] = std::move(witness);
    return finish(report, kFound, common, start);
  };
  auto none = [&]() {
    report["outcome"] = "none";
    report["witness"] = nullptr;
    return finish(report, kNotFound, common, start);
  };
  auto check = [](bool ok) {
    if (!ok) throw hcube::Error(hcube::ErrorCode::InternalInvariant, "witness failed revalidation");
  };

  switch (file.domain) {
    case io::FileDomain::grid: {
      if (args.structure != "corner") break;
      const auto coloring = io::to_grid(file);
      auto corner = hcube::plane::find_plane_corner(coloring);
      if (!corner) return none();
      check(hcube::plane::validate_corner(*corner, coloring));
      return found(io::to_json(*corner));
    }
    case io::FileDomain::interval: {
      if (args.structure != "gp") break;
      const auto coloring = io::to_interval(file);
      auto result = hcube::gp::find_mono_gp(coloring, file.r);
      if (!result) return none();
      report["n"] = result->n;
      return found(io::to_json(*result));
    }
    case io::FileDomain::dn: {
      const auto coloring = io::to_dn(file);
      if (args.structure == "corner") {
        auto corner = hcube::find_corner(coloring);
        if (!corner) return none();
        check(hcube::validate_tree(hcube::tree_from_corner(*corner), coloring));
        return found(io::to_json(*corner));
      }
      if (args.structure == "tree") {
        auto tree = hcube::find_tree(coloring, args.m);
        if (!tree) return none();
        check(hcube::validate_tree(*tree, coloring));
        return found(io::to_json(*tree));
      }
      break;
    }
    default: break;
  }

  // Remaining structures go through the search domains.
  const auto domain = io::to_search_domain(file);
  const auto target = search::parse_target(args.structure);
  if (!search::compatible(domain.kind, target)) {
    throw hcube::Error(hcube::ErrorCode::InvalidArgument,
                       args.structure + " is not defined on " + std::string(io::to_string(file.domain)));
  }
  const auto local = search::from_file_body(domain, file.body);
  auto copy = search::find_monochromatic(domain, target, args.m, local);
  if (!copy) return none();
  Json points = Json::array();
  for (auto idx : *copy) {
    check(local[idx] == local[copy->front()]);
    points.push_back(describe_local(domain, idx));
  }
  return found(Json{{"points", points}, {"color", local[copy->front()]}});
}

// extract

struct ExtractArgs {
  std::string file;
  std::optional<int> r;
  int m = 1;
  std::string mode = "greedy";
};

int run_extract(const ExtractArgs& args, const Common& common) {
  const auto start = std::chrono::steady_clock::now();
  const auto file = io::read_coloring_file(args.file);
  const int r = args.r.value_or(file.r);
  Json report = report_head(common, "extract");
  report["file"] = args.file;
  report["domain"] = std::string(io::to_string(file.domain));
  if (file.domain == io::FileDomain::grid) {
    const auto coloring = io::to_grid(file);
    const auto extraction = hcube::plane::extract_corner(coloring, r);
    if (extraction.corner && !hcube::plane::validate_corner(*extraction.corner, coloring)) {
      throw hcube::Error(hcube::ErrorCode::InternalInvariant, "corner failed revalidation");
    }
    report["outcome"] = extraction.corner ? "found" : "none";
    report["trace"] = io::to_json(extraction);
    return finish(report, extraction.corner ? kFound : kNotFound, common, start);
  }
  if (file.domain != io::FileDomain::dn) {
    throw hcube::Error(hcube::ErrorCode::InvalidArgument, "extract needs a Dn or grid coloring");
  }
  hcube::ExtractionParams params;
  params.r = r;
  params.m = args.m;
  if (args.mode == "faithful") {
    params.mode = hcube::ExtractionMode::faithful;
  } else if (args.mode != "greedy") {
    throw hcube::Error(hcube::ErrorCode::InvalidArgument, "mode must be faithful or greedy");
  }
  const auto coloring = io::to_dn(file);
  const auto trace = hcube::extract_tree(coloring, params);
  if (trace.witness && !hcube::validate_tree(*trace.witness, coloring)) {
    throw hcube::Error(hcube::ErrorCode::InternalInvariant, "tree failed revalidation");
  }
  report["outcome"] = trace.witness ? "found" : "none";
  report["trace"] = io::to_json(trace);
  return finish(report, trace.witness ? kFound : kNotFound, common, start);
}

// gp

struct GpArgs {
  std::uint64_t big_n = 0;
  int r = 2;
  std::string coloring;
  std::uint64_t seed = 0;
};

int run_gp(const GpArgs& args, const Common& common) {
  const auto start = std::chrono::steady_clock::now();
  Json report = report_head(common, "gp");
  io::ColoringFile file;
  if (!args.coloring.empty()) {
    file = io::read_coloring_file(args.coloring);
    report["file"] = args.coloring;
  } else {
    io::ColoringFile header;
    header.domain = io::FileDomain::interval;
    header.big_n = args.big_n;
    header.r = args.r;
    file = io::generate(header, io::Scheme::random, args.seed);
    report["seed"] = args.seed;
  }
  const auto coloring = io::to_interval(file);
  const int n = hcube::gp::max_n_for(hcube::BigInt(coloring.size()));
  report["N"] = coloring.size();
  report["r_requested"] = file.r;
  report["n_achieved"] = n;
  auto result = hcube::gp::find_mono_gp(coloring, file.r);
  if (!result) {
    report["outcome"] = "none";
    return finish(report, kNotFound, common, start);
  }
  const auto& t = result->triple;
  const hcube::BigInt limit(coloring.size());
  const bool ok = hcube::gp::verify_gp(t.t1, t.t2, t.t3) && t.t3 <= limit && t.t1 <= limit &&
                  coloring.color(t.t1.convert_to<std::uint64_t>()) == result->color &&
                  coloring.color(t.t2.convert_to<std::uint64_t>()) == result->color &&
                  coloring.color(t.t3.convert_to<std::uint64_t>()) == result->color;
  if (!ok) throw hcube::Error(hcube::ErrorCode::InternalInvariant, "progression failed revalidation");
  report["outcome"] = "found";
  report["witness"] = io::to_json(*result);
  return finish(report, kFound, common, start);
}

// search

struct SearchArgs {
  std::string domain;
  int n = 1;
  int r = 2;
  std::string target = "corner";
  int m = 2;
  std::uint64_t budget = 100'000'000;
  std::optional<std::int64_t> time_ms;
  bool symmetry = false;
  bool complement = false;
  bool no_color_symmetry = false;
  std::string certificate;
};

search::SearchProblem make_problem(const SearchArgs& args, search::Target target) {
  search::SearchProblem problem;
  problem.r = args.r;
  problem.target = target;
  problem.tree_m = args.m;
  problem.node_budget = args.budget;
  if (args.time_ms) problem.time_budget = std::chrono::milliseconds(*args.time_ms);
  problem.color_symmetry = !args.no_color_symmetry;
  problem.coordinate_symmetry = args.symmetry || args.complement;
  problem.complementations = args.complement;
  return problem;
}

int status_code(search::SearchStatus status) {
  switch (status) {
    case search::SearchStatus::avoidance_found: return kFound;
    case search::SearchStatus::exhausted: return kNotFound;
    case search::SearchStatus::budget_exceeded: return kBudget;
  }
  return kInputError;
}

int run_search(const SearchArgs& args, const Common& common) {
  const auto start = std::chrono::steady_clock::now();
  const auto target = search::parse_target(args.target);
  auto problem = make_problem(args, target);
  problem.domain.kind = args.domain.empty() ? search::default_domain(target) : search::parse_domain_kind(args.domain);
  problem.domain.n = args.n;
  problem.validate();
  const auto outcome = search::search(problem);

  Json report = report_head(common, "search");
  report["domain"] = std::string(search::to_string(problem.domain.kind));
  report["n"] = args.n;
  report["r"] = args.r;
  report["target"] = args.target;
  report["outcome"] = io::to_json(outcome);
  if (outcome.status == search::SearchStatus::avoidance_found) {
    const auto file = io::from_search(problem.domain, args.r, outcome.coloring);
    if (!args.certificate.empty()) {
      std::ofstream out(args.certificate);
      if (!out) throw hcube::Error(hcube::ErrorCode::InvalidArgument, "cannot write '" + args.certificate + "'");
      io::write_coloring(out, file);
      report["certificate"] = args.certificate;
    }
  }
  return finish(report, status_code(outcome.status), common, start);
}

struct RamseyArgs {
  SearchArgs search;
  int n_max = 4;
};

int run_ramsey(const RamseyArgs& args, const Common& common) {
  const auto start = std::chrono::steady_clock::now();
  const auto target = search::parse_target(args.search.target);
  const auto problem = make_problem(args.search, target);
  const auto scan = search::first_ramsey_n(args.search.r, target, args.n_max, problem);
  Json report = report_head(common, "ramsey");
  report["r"] = args.search.r;
  report["target"] = args.search.target;
  Json per_n = Json::array();
  for (const auto& [n, outcome] : scan.per_n) {
    Json entry = io::to_json(outcome);
    entry["n"] = n;
    per_n.push_back(entry);
  }
  report["per_n"] = per_n;
  report["first_forcing_n"] = scan.n ? Json(*scan.n) : Json(nullptr);
  if (scan.budget_exceeded_at) return finish(report, kBudget, common, start);
  return finish(report, scan.n ? kFound : kNotFound, common, start);
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic structures in colored hypercube diagonals"};
  app.require_subcommand(1);
  Common common;
  common.command = join_args(argc, argv);
  app.add_flag("--timing", common.timing, "Add wall time to reports");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a coloring file");
  gen_cmd->add_option("--domain", gen.domain, "Dn, alph4, alph3, grid, interval or segments")->required();
  gen_cmd->add_option("--n", gen.n, "Word length");
  gen_cmd->add_option("--N", gen.big_n, "Interval size");
  gen_cmd->add_option("--A", gen.a, "Grid rows");
  gen_cmd->add_option("--B", gen.b, "Grid columns");
  gen_cmd->add_option("--r", gen.r, "Number of colors");
  gen_cmd->add_option("--scheme", gen.scheme, "constant or random");
  gen_cmd->add_option("--seed", gen.seed, "Seed for the random scheme");
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  DetectArgs detect;
  auto* detect_cmd = app.add_subcommand("detect", "Brute-force search for a monochromatic structure");
  detect_cmd->add_option("file", detect.file, "Coloring file")->required();
  detect_cmd->add_option("--structure", detect.structure,
                         "corner, tree, scp, sc4, coplanar6, hjline4, hjline3 or gp");
  detect_cmd->add_option("--m", detect.m, "Tree depth");

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Run the tree or grid-corner extraction");
  extract_cmd->add_option("file", extract.file, "Coloring file")->required();
  extract_cmd->add_option("--r", extract.r, "Colors assumed by the bounds (default: file r)");
  extract_cmd->add_option("--m", extract.m, "Tree depth");
  extract_cmd->add_option("--mode", extract.mode, "faithful or greedy");

  GpArgs gp;
  auto* gp_cmd = app.add_subcommand("gp", "Monochromatic geometric progression in [N]");
  gp_cmd->add_option("--N", gp.big_n, "Interval size");
  gp_cmd->add_option("--r", gp.r, "Number of colors for a generated coloring");
  auto* gp_file = gp_cmd->add_option("--coloring", gp.coloring, "Interval coloring file");
  gp_cmd->add_option("--seed", gp.seed, "Seed for a generated coloring")->excludes(gp_file);

  SearchArgs search_args;
  auto add_search_options = [](CLI::App* cmd, SearchArgs& s) {
    cmd->add_option("--r", s.r, "Number of colors");
    cmd->add_option("--target", s.target, "corner, tree, scp, sc4, coplanar6, hjline4 or hjline3");
    cmd->add_option("--m", s.m, "Tree depth");
    cmd->add_option("--budget", s.budget, "Node budget");
    cmd->add_option("--time-ms", s.time_ms, "Wall-clock budget in milliseconds");
    cmd->add_flag("--symmetry", s.symmetry, "Prune coordinate permutations");
    cmd->add_flag("--complement", s.complement, "Also prune coordinate complementations");
    cmd->add_flag("--no-color-symmetry", s.no_color_symmetry, "Do not fix the color order");
  };
  auto* search_cmd = app.add_subcommand("search", "Exhaustive avoidance search");
  search_cmd->add_option("--domain", search_args.domain, "Dn, alph4, alph3 or segments");
  search_cmd->add_option("--n", search_args.n, "Word length");
  search_cmd->add_option("--certificate", search_args.certificate, "Where to write an avoiding coloring");
  add_search_options(search_cmd, search_args);

  RamseyArgs ramsey;
  auto* ramsey_cmd = app.add_subcommand("ramsey", "Smallest n that forces the target");
  ramsey_cmd->add_option("--n-max", ramsey.n_max, "Largest n to try");
  add_search_options(ramsey_cmd, ramsey.search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*detect_cmd) return run_detect(detect, common);
    if (*extract_cmd) return run_extract(extract, common);
    if (*gp_cmd) return run_gp(gp, common);
    if (*search_cmd) return run_search(search_args, common);
    if (*ramsey_cmd) return run_ramsey(ramsey, common);
  } catch (const hcube::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
