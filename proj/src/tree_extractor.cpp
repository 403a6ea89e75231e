#include "hcube/tree_extractor.hpp"

#include "hcube/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>

namespace hcube {

void ExtractionParams::validate() const {
  if (r < 1 || r > 255) throw Error(ErrorCode::InvalidArgument, "r must be in 1..255");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
  if (dim_fraction <= 0 || dim_fraction >= 1) throw Error(ErrorCode::InvalidArgument, "0 < dim_fraction < 1");
  if (deficiency_factor <= 0 || deficiency_factor >= 1) {
    throw Error(ErrorCode::InvalidArgument, "0 < deficiency_factor < 1");
  }
  if (tail_base <= 0) throw Error(ErrorCode::InvalidArgument, "tail_base must be positive");
  if (viability_base <= 0 || viability_base >= 1) throw Error(ErrorCode::InvalidArgument, "0 < viability_base < 1");
  if (viability_factor <= 0) throw Error(ErrorCode::InvalidArgument, "viability_factor must be positive");
}

Rational alpha(int r, int k) {
  if (r < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "alpha needs r >= 1 and k >= 1");
  Rational a(1, 4 * r * r);
  for (int i = 1; i < k; ++i) {
    Rational q = a / (8 * r);
    a = q * q;
  }
  return a;
}

Rational alpha_closed_form(int r, int k) {
  if (r < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "alpha needs r >= 1 and k >= 1");
  if (k > 24) throw Error(ErrorCode::ResourceLimit, "closed form exponent too large");
  const std::uint64_t two_exp = (std::uint64_t{1} << (k + 2)) - 6;
  const std::uint64_t r_exp = (std::uint64_t{1} << (k + 1)) - 2;
  return Rational(1, pow2(two_exp) * ipow(BigInt(r), r_exp));
}

BigInt small_dimension_count(int n) {
  BigInt sum = 0;
  for (int t = 0; 3 * t < n; ++t) sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(t));
  return sum;
}

bool binomial_tail_ok(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  return small_dimension_count(n) * ipow(BigInt(10), n) < ipow(BigInt(19), n);
}

std::uint64_t n0_estimate(int r, int m, const Rational& c) {
  if (r < 1 || m < 1 || c <= 0) throw Error(ErrorCode::InvalidArgument, "n0_estimate needs r, m >= 1 and c > 0");
  const std::uint64_t e = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(m);
  if (e > 4096) throw Error(ErrorCode::ResourceLimit, "6^(rm) exponent too large");
  Rational v = c * Rational(ipow(BigInt(6), e));
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt ceil = (num + den - 1) / den;
  if (ceil > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw Error(ErrorCode::ResourceLimit, "n0 estimate exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(ceil);
}

namespace {

struct EnumerationLess {
  bool operator()(const LineId& a, const LineId& b) const { return enumeration_before(a, b); }
};

}  // namespace

PruneResult prune_lines(const std::vector<DiagPoint>& grid, int n_current, const Rational& alpha_current,
                        const ExtractionParams& params) {
  std::map<LineId, std::vector<DiagPoint>, EnumerationLess> by_line;
  for (const auto& p : grid) {
    if (p.degenerate()) throw Error(ErrorCode::DegeneratePoint, "grid point " + p.str() + " has x == y");
    by_line[line_of(p)].push_back(p);
  }
  PruneResult out;
  const Rational small_bound = params.dim_fraction * n_current;
  for (auto& [line, pts] : by_line) {
    const int t = line.dimension();
    const bool small = Rational(t) < small_bound;
    const bool deficient = Rational(pts.size()) <= params.deficiency_factor * alpha_current * Rational(pow2(t));
    if (small || deficient) continue;
    out.good_lines.push_back(line);
    out.good_counts.push_back(pts.size());
    out.surviving.insert(out.surviving.end(), pts.begin(), pts.end());
  }
  std::sort(out.surviving.begin(), out.surviving.end(), CanonicalLess{});
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> combinations(const std::vector<std::size_t>& items, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || k > items.size()) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = items[pick[i]];
    out.push_back(std::move(combo));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Descends from `root` through the popular sets of `chain` (latest first),
// taking at each node the two points of the next line that share its x and y.
std::optional<TreeWitness> derive_tree(const DiagPoint& root, const std::vector<ExtractionStep>& steps,
                                       const std::vector<std::size_t>& chain, int color) {
  TreeWitness t;
  t.m = static_cast<int>(chain.size());
  t.color = color;
  t.levels.push_back({root});
  t.level_lines.push_back(line_of(root));
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const ExtractionStep& step = steps[*it];
    std::unordered_set<std::uint64_t> members;
    for (const auto& p : step.popular) members.insert(p.canonical_index());
    std::vector<DiagPoint> next;
    for (const auto& q : t.levels.back()) {
      if (!step.line.has_x(q.x) || !step.line.has_y(q.y)) return std::nullopt;
      DiagPoint shares_x = step.line.point_with_x(q.x);
      DiagPoint shares_y = step.line.point_with_y(q.y);
      if (!members.contains(shares_x.canonical_index()) || !members.contains(shares_y.canonical_index())) {
        return std::nullopt;
      }
      next.push_back(shares_x);
      next.push_back(shares_y);
    }
    t.levels.push_back(std::move(next));
    t.level_lines.push_back(step.line);
  }
  return t;
}

}  // namespace

std::optional<TreeWitness> assemble_tree(const DnColoring& coloring, const std::vector<ExtractionStep>& steps,
                                         int depth, std::vector<std::size_t>* chosen) {
  if (depth < 1) return std::nullopt;
  for (int c = 0; c < coloring.r(); ++c) {
    std::vector<std::size_t> same;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].color == c) same.push_back(i);
    }
    for (const auto& chain : combinations(same, static_cast<std::size_t>(depth))) {
      for (const auto& root : steps[chain.back()].next_grid) {
        if (root.degenerate() || coloring.color(root) != c) continue;
        auto tree = derive_tree(root, steps, chain, c);
        if (tree && validate_tree(*tree, coloring)) {
          if (chosen) *chosen = chain;
          return tree;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

class Extractor {
 public:
  Extractor(const DnColoring& coloring, const ExtractionParams& params) : coloring_(coloring), params_(params) {
    trace_.params = params;
  }

  ExtractionTrace run() {
    const int n = coloring_.n();
    const bool faithful = params_.mode == ExtractionMode::faithful;
    const std::size_t faithful_steps = static_cast<std::size_t>(params_.r) * static_cast<std::size_t>(params_.m) + 1;

    LineId line = LineId::full(n);
    std::vector<DiagPoint> grid = line_points(line);

    for (int i = 0;; ++i) {
      std::vector<DiagPoint> on_line;
      for (const auto& p : grid) {
        if (line.contains(p)) on_line.push_back(p);
      }
      ExtractionStep step;
      step.line = line;
      step.dimension = line.dimension();
      step.line_grid_count = on_line.size();
      step.color = popular_color(on_line);
      for (const auto& p : on_line) {
        if (coloring_.color(p) == step.color) step.popular.push_back(p);
      }
      const Rational s_size(step.popular.size());
      record(i, "pigeonhole: |S_i| >= |L_i cap G_i|/r", s_size, Rational(on_line.size(), params_.r));
      if (i == 0) {
        if (!check(i, "popular: |S_0| >= 2^n/r", s_size, Rational(pow2(n), params_.r))) return trace_;
      } else {
        const Rational a = trace_.steps.back().alpha_next;
        if (!check(i, "popular: |S_i| >= (alpha_i/(4r))*2^n_i", s_size,
                   a / (4 * params_.r) * Rational(pow2(step.dimension)))) {
          return trace_;
        }
      }
      step.next_grid = grid_of(step.popular);
      step.alpha_next = alpha(params_.r, i + 1);
      const Rational alpha_next = step.alpha_next;
      const Rational grid_size(step.next_grid.size());
      trace_.steps.push_back(std::move(step));
      const int dim = trace_.steps.back().dimension;

      if (faithful) {
        if (trace_.steps.size() == faithful_steps) break;
      } else if (try_assemble(params_.m)) {
        return trace_;
      }

      const Rational four_n(pow2(2 * static_cast<std::uint64_t>(dim)));
      if (!check(i + 1, "grid: |G_i| >= alpha_i*4^n_(i-1)", grid_size, alpha_next * four_n)) return trace_;
      if (!check(i + 1, "viability: alpha_i >= 2*(95/100)^n_(i-1)", alpha_next,
                 params_.viability_factor * ipow(params_.viability_base, static_cast<std::uint64_t>(dim)))) {
        return trace_;
      }

      std::vector<DiagPoint> nondegenerate;
      for (const auto& p : trace_.steps.back().next_grid) {
        if (!p.degenerate()) nondegenerate.push_back(p);
      }
      if (nondegenerate.empty()) break;
      PruneResult pruned = prune_lines(nondegenerate, dim, alpha_next, params_);
      if (!check(i + 1, "surviving: |G_i after pruning| >= (alpha_i/2)*4^n_(i-1)",
                 Rational(pruned.surviving.size()), alpha_next / 2 * four_n)) {
        return trace_;
      }
      if (pruned.good_lines.empty()) break;

      const std::size_t pick = faithful ? 0 : densest(pruned);
      line = pruned.good_lines[pick];
      grid = std::move(pruned.surviving);
      if (!check(i + 1, "dimension: n_i >= n_(i-1)/3", Rational(line.dimension()), params_.dim_fraction * dim)) {
        return trace_;
      }
    }

    if (faithful) {
      if (trace_.steps.size() < faithful_steps) {
        fail(ErrorCode::NoWitness, "grid exhausted after " + std::to_string(trace_.steps.size()) + " steps");
      } else if (!try_assemble(params_.m)) {
        fail(ErrorCode::NoWitness, "no tree could be assembled from the same-colored popular sets");
      }
      return trace_;
    }
    for (int depth = params_.m - 1; depth >= 1; --depth) {
      if (try_assemble(depth)) return trace_;
    }
    fail(ErrorCode::NoWitness, "greedy extraction exhausted after " + std::to_string(trace_.steps.size()) + " steps");
    return trace_;
  }

 private:
  int popular_color(const std::vector<DiagPoint>& pts) const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(params_.r), 0);
    for (const auto& p : pts) ++counts[static_cast<std::size_t>(coloring_.color(p))];
    // max_element returns the first maximum: lowest color index wins ties.
    return static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  }

  static std::size_t densest(const PruneResult& pruned) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pruned.good_lines.size(); ++i) {
      // count_i / 2^dim_i > count_best / 2^dim_best, ties to larger dimension.
      const int di = pruned.good_lines[i].dimension();
      const int db = pruned.good_lines[best].dimension();
      const BigInt lhs = BigInt(pruned.good_counts[i]) << db;
      const BigInt rhs = BigInt(pruned.good_counts[best]) << di;
      if (lhs > rhs || (lhs == rhs && di > db)) best = i;
    }
    return best;
  }

  bool try_assemble(int depth) {
    std::vector<std::size_t> chosen;
    auto tree = assemble_tree(coloring_, trace_.steps, depth, &chosen);
    if (!tree) return false;
    trace_.witness = std::move(tree);
    trace_.chosen_steps = std::move(chosen);
    return true;
  }

  void record(int step, const std::string& name, const Rational& lhs, const Rational& rhs) {
    trace_.inequalities.push_back({step, name, lhs, rhs, lhs >= rhs});
  }

  // Records the inequality; in faithful mode a violation ends the run.
  bool check(int step, const std::string& name, const Rational& lhs, const Rational& rhs) {
    record(step, name, lhs, rhs);
    if (lhs >= rhs || params_.mode != ExtractionMode::faithful) return true;
    fail(ErrorCode::GuaranteeViolated, name + " fails at step " + std::to_string(step) + ": " + to_string(lhs) +
                                           " < " + to_string(rhs));
    return false;
  }

  void fail(ErrorCode code, std::string message) { trace_.failure = ExtractionFailure{code, std::move(message)}; }

  const DnColoring& coloring_;
  const ExtractionParams& params_;
  ExtractionTrace trace_;
};

}  // namespace

ExtractionTrace extract_tree(const DnColoring& coloring, const ExtractionParams& params) {
  params.validate();
  if (coloring.r() > params.r) {
    throw Error(ErrorCode::DegenerateColoring, "coloring uses " + std::to_string(coloring.r()) +
                                                   " colors but r = " + std::to_string(params.r));
  }
  return Extractor(coloring, params).run();
}

}  // namespace hcube
