#pragma once

// Exact backtracking search for r-colorings that avoid every monochromatic
// copy of a target structure, over small finite domains.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcube::search {

enum class DomainKind {
  dn,         // nondegenerate points of D(n), canonical order
  alphabet4,  // {0,1,2,3}^n, base-4 value order
  alphabet3,  // {0,1,2}^n, base-3 value order
  segments,   // unordered vertex pairs of Q^n, sorted-pair rank order
};

enum class Target { corner, tree, scp, sc4, coplanar6, hjline4, hjline3 };

std::string_view to_string(DomainKind kind);
std::string_view to_string(Target target);
DomainKind parse_domain_kind(std::string_view text);
Target parse_target(std::string_view text);

bool compatible(DomainKind kind, Target target);
DomainKind default_domain(Target target);

struct Domain {
  DomainKind kind = DomainKind::dn;
  int n = 1;

  /// Number of colored points.
  std::size_t size() const;
  /// Length of the coloring file body (D(n) files also hold degenerate points).
  std::size_t file_size() const;
  /// Position of local point `local` in the coloring file body.
  std::size_t file_index(std::size_t local) const;
  void validate() const;
};

/// Rank of the segment {a, b} (a < b by value) among all pairs of 2^n vertices.
std::size_t segment_rank(int n, std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> segment_unrank(int n, std::size_t rank);

/// Every copy of the target, as ascending lists of local indices, duplicates
/// removed, in ascending lexicographic order. tree_m is used for Target::tree.
std::vector<std::vector<std::uint32_t>> enumerate_structures(const Domain& domain, Target target, int tree_m = 2);

/// Coordinate permutations (and optionally coordinate complementations) as
/// permutations of local indices. The identity is excluded.
std::vector<std::vector<std::uint32_t>> symmetry_maps(const Domain& domain, bool complementations);

/// A monochromatic copy of the target, found through the detector predicates
/// independently of enumerate_structures. Returns the copy's local indices.
std::optional<std::vector<std::uint32_t>> find_monochromatic(const Domain& domain, Target target, int tree_m,
                                                              const std::vector<std::uint8_t>& local_coloring);

struct SearchProblem {
  Domain domain;
  int r = 2;
  Target target = Target::corner;
  int tree_m = 2;
  std::uint64_t node_budget = 100'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
  bool color_symmetry = true;       // colors appear in first-use order
  bool coordinate_symmetry = false;  // lex-leader under coordinate permutations
  bool complementations = false;     // also coordinate complementations

  void validate() const;
};

enum class SearchStatus { avoidance_found, exhausted, budget_exceeded };
std::string_view to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted;
  std::uint64_t nodes = 0;
  std::size_t structures = 0;
  std::vector<std::uint8_t> coloring;  // local order, set for avoidance_found
};

SearchOutcome search(const SearchProblem& problem);

/// Local coloring -> coloring file body (degenerate D(n) entries are 0).
std::vector<std::uint8_t> to_file_body(const Domain& domain, const std::vector<std::uint8_t>& local);
std::vector<std::uint8_t> from_file_body(const Domain& domain, const std::vector<std::uint8_t>& body);

struct RamseyScan {
  std::optional<int> n;  // smallest n whose search was exhausted
  std::vector<std::pair<int, SearchOutcome>> per_n;
  std::optional<int> budget_exceeded_at;
};

/// Searches n = 1, 2, ... n_max on the target's default domain and stops at
/// the first exhausted search or the first exceeded budget.
RamseyScan first_ramsey_n(int r, Target target, int n_max, const SearchProblem& settings);

}  // namespace hcube::search
