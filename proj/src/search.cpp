#include "hcube/search.hpp"

#include "hcube/error.hpp"

#include <algorithm>

namespace hcube::search {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::avoidance_found: return "AvoidanceFound";
    case SearchStatus::exhausted: return "Exhausted";
    case SearchStatus::budget_exceeded: return "BudgetExceeded";
  }
  return "?";
}

void SearchProblem::validate() const {
  domain.validate();
  if (r < 1 || r > 255) throw Error(ErrorCode::InvalidArgument, "r must be in 1..255");
  if (!compatible(domain.kind, target)) {
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(target)) + " requires the " +
                                                std::string(to_string(default_domain(target))) + " domain");
  }
}

namespace {

struct BudgetHit {};

class Backtracker {
 public:
  explicit Backtracker(const SearchProblem& problem) : problem_(problem) {
    const auto structures = enumerate_structures(problem.domain, problem.target, problem.tree_m);
    structure_count_ = structures.size();
    by_last_.resize(problem.domain.size());
    for (const auto& s : structures) {
      // Checked once its largest index is colored.
      std::vector<std::uint32_t> others(s.begin(), s.end() - 1);
      by_last_[s.back()].push_back(std::move(others));
    }
    if (problem.coordinate_symmetry) {
      for (auto& map : symmetry_maps(problem.domain, problem.complementations)) {
        std::vector<std::uint32_t> inverse(map.size());
        for (std::size_t i = 0; i < map.size(); ++i) inverse[map[i]] = static_cast<std::uint32_t>(i);
        inverses_.push_back(std::move(inverse));
      }
    }
    coloring_.assign(problem.domain.size(), 0);
    start_ = std::chrono::steady_clock::now();
  }

  SearchOutcome run() {
    SearchOutcome out;
    out.structures = structure_count_;
    try {
      out.status = descend(0, -1) ? SearchStatus::avoidance_found : SearchStatus::exhausted;
    } catch (const BudgetHit&) {
      out.status = SearchStatus::budget_exceeded;
    }
    out.nodes = nodes_;
    if (out.status == SearchStatus::avoidance_found) out.coloring = coloring_;
    return out;
  }

 private:
  bool descend(std::size_t k, int max_used) {
    if (k == coloring_.size()) return true;
    const int top = problem_.color_symmetry ? std::min(problem_.r - 1, max_used + 1) : problem_.r - 1;
    for (int c = 0; c <= top; ++c) {
      tick();
      coloring_[k] = static_cast<std::uint8_t>(c);
      if (closes_monochromatic(k)) continue;
      if (!inverses_.empty() && dominated(k)) continue;
      if (descend(k + 1, std::max(max_used, c))) return true;
    }
    return false;
  }

  void tick() {
    ++nodes_;
    if (nodes_ > problem_.node_budget) throw BudgetHit{};
    if (problem_.time_budget && (nodes_ & 0xFFFU) == 0 &&
        std::chrono::steady_clock::now() - start_ > *problem_.time_budget) {
      throw BudgetHit{};
    }
  }

  bool closes_monochromatic(std::size_t k) const {
    const auto c = coloring_[k];
    for (const auto& others : by_last_[k]) {
      if (std::all_of(others.begin(), others.end(), [&](auto i) { return coloring_[i] == c; })) return true;
    }
    return false;
  }

  // True when some symmetric image of the colored prefix 0..k is
  // lexicographically smaller, after renaming colors by first use when
  // color symmetry is on.
  bool dominated(std::size_t k) const {
    std::vector<int> rename(static_cast<std::size_t>(problem_.r));
    for (const auto& inverse : inverses_) {
      std::fill(rename.begin(), rename.end(), -1);
      int next = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        const std::size_t src = inverse[i];
        if (src > k) break;
        int image = coloring_[src];
        if (problem_.color_symmetry) {
          auto& slot = rename[static_cast<std::size_t>(image)];
          if (slot < 0) slot = next++;
          image = slot;
        }
        if (image < coloring_[i]) return true;
        if (image > coloring_[i]) break;
      }
    }
    return false;
  }

  const SearchProblem& problem_;
  std::vector<std::vector<std::vector<std::uint32_t>>> by_last_;
  std::vector<std::vector<std::uint32_t>> inverses_;
  std::vector<std::uint8_t> coloring_;
  std::size_t structure_count_ = 0;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SearchOutcome search(const SearchProblem& problem) {
  problem.validate();
  SearchOutcome out = Backtracker(problem).run();
  if (out.status == SearchStatus::avoidance_found &&
      find_monochromatic(problem.domain, problem.target, problem.tree_m, out.coloring)) {
    throw Error(ErrorCode::InternalInvariant, "avoidance certificate contains a monochromatic target");
  }
  return out;
}

RamseyScan first_ramsey_n(int r, Target target, int n_max, const SearchProblem& settings) {
  RamseyScan scan;
  for (int n = 1; n <= n_max; ++n) {
    SearchProblem problem = settings;
    problem.r = r;
    problem.target = target;
    problem.domain = Domain{default_domain(target), n};
    SearchOutcome outcome = search(problem);
    const SearchStatus status = outcome.status;
    scan.per_n.emplace_back(n, std::move(outcome));
    if (status == SearchStatus::exhausted) {
      scan.n = n;
      break;
    }
    if (status == SearchStatus::budget_exceeded) {
      scan.budget_exceeded_at = n;
      break;
    }
  }
  return scan;
}

}  // namespace hcube::search
