#pragma once

// Iterated popular-color extraction of a monochromatic binary tree from an
// r-coloring of D(n): popular color on a line, grid of the popular set,
// pruning of small and deficient lines, next line, repeat; then pigeonhole
// the step colors and assemble the tree from the nested popular sets.

#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "hcube/detectors.hpp"
#include "hcube/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcube {

enum class ExtractionMode { faithful, greedy };

struct ExtractionParams {
  int r = 2;
  int m = 1;
  ExtractionMode mode = ExtractionMode::greedy;
  Rational dim_fraction{1, 3};       // a line is small when dim < dim_fraction * n_i
  Rational deficiency_factor{1, 4};  // deficient when |L ∩ G| <= factor * alpha * 2^dim
  Rational tail_base{19, 10};
  Rational viability_base{95, 100};  // alpha_i >= viability_factor * base^n_i
  Rational viability_factor{2};

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
};

/// alpha_1 = 1/(4 r^2), alpha_{k+1} = (alpha_k / (8 r))^2.
Rational alpha(int r, int k);
/// 1 / (2^(2^(k+2) - 6) * r^(2^(k+1) - 2)).
Rational alpha_closed_form(int r, int k);

/// sum_{t < n/3} C(n, t) < (19/10)^n, exactly.
bool binomial_tail_ok(int n);
BigInt small_dimension_count(int n);

/// ceil(c * 6^(r m)); throws ResourceLimit when it does not fit in 64 bits.
std::uint64_t n0_estimate(int r, int m, const Rational& c);

struct PruneResult {
  std::vector<LineId> good_lines;  // enumeration order
  std::vector<DiagPoint> surviving;
  std::vector<std::size_t> good_counts;  // |L ∩ G| per good line
};

/// Classifies every line that meets `grid` and drops the points on small or
/// deficient lines. Every point of `grid` must be nondegenerate.
PruneResult prune_lines(const std::vector<DiagPoint>& grid, int n_current, const Rational& alpha_current,
                        const ExtractionParams& params);

/// One instance of an inequality used by the argument, in exact arithmetic.
struct InequalityRecord {
  int step = 0;
  std::string name;  // e.g. "viability: alpha_i >= 2*(95/100)^n_(i-1)"
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct ExtractionStep {
  LineId line;
  int dimension = 0;
  int color = 0;
  std::size_t line_grid_count = 0;  // |L_i ∩ G_i|
  std::vector<DiagPoint> popular;   // S_i
  std::vector<DiagPoint> next_grid;  // G_{i+1} as formed (may contain degenerate points)
  Rational alpha_next;               // alpha_{i+1}
};

struct ExtractionFailure {
  ErrorCode code = ErrorCode::NoWitness;
  std::string message;
};

struct ExtractionTrace {
  ExtractionParams params;
  std::vector<ExtractionStep> steps;
  std::vector<InequalityRecord> inequalities;
  std::optional<TreeWitness> witness;
  std::optional<ExtractionFailure> failure;
  /// Indices into steps of the popular sets used for levels m, m-1, ..., 1.
  std::vector<std::size_t> chosen_steps;

  bool success() const { return witness.has_value(); }
};

/// Runs the extraction loop. GuaranteeViolated and NoWitness are reported in
/// trace.failure; a coloring with more than params.r colors throws
/// DegenerateColoring.
ExtractionTrace extract_tree(const DnColoring& coloring, const ExtractionParams& params);

/// Builds a monochromatic tree of `depth` levels from the recorded steps, if
/// one can be assembled. Used by extract_tree; exposed for testing.
std::optional<TreeWitness> assemble_tree(const DnColoring& coloring, const std::vector<ExtractionStep>& steps,
                                         int depth, std::vector<std::size_t>* chosen = nullptr);

}  // namespace hcube
