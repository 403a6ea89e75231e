#include "hcube/detectors.hpp"
#include "hcube/error.hpp"
#include "hcube/tree_extractor.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hcube;

namespace {

std::set<std::uint64_t> index_set(const std::vector<DiagPoint>& pts) {
  std::set<std::uint64_t> out;
  for (const auto& p : pts) out.insert(p.canonical_index());
  return out;
}

ExtractionParams greedy(int r, int m) {
  ExtractionParams p;
  p.r = r;
  p.m = m;
  p.mode = ExtractionMode::greedy;
  return p;
}

// Structural invariants every trace must satisfy.
void check_trace(const DnColoring& coloring, const ExtractionTrace& trace) {
  const int r = trace.params.r;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    EXPECT_GE(s.popular.size() * static_cast<std::size_t>(r), s.line_grid_count);
    for (const auto& p : s.popular) {
      EXPECT_TRUE(s.line.contains(p));
      EXPECT_EQ(coloring.color(p), s.color);
    }
    EXPECT_EQ(s.next_grid.size(), s.popular.size() * (s.popular.size() - (s.popular.empty() ? 0 : 1)) / 2);
    if (i > 0) {
      const auto prev = index_set(trace.steps[i - 1].next_grid);
      for (const auto& p : s.popular) EXPECT_TRUE(prev.count(p.canonical_index()));
      for (const auto& p : s.next_grid) EXPECT_TRUE(prev.count(p.canonical_index())) << "grid nesting at step " << i;
    }
  }
  for (const auto& q : trace.inequalities) EXPECT_EQ(q.holds, q.lhs >= q.rhs) << q.name;
  if (trace.witness) {
    EXPECT_TRUE(validate_tree(*trace.witness, coloring));
    EXPECT_FALSE(trace.failure);
  } else {
    EXPECT_TRUE(trace.failure);
  }
}

}  // namespace

TEST(Alpha, SpotValues) {
  EXPECT_EQ(alpha(2, 1), Rational(1, 16));
  EXPECT_EQ(alpha(2, 2), Rational(1, 65536));
  EXPECT_EQ(alpha_closed_form(2, 2), Rational(1, 65536));
  EXPECT_THROW(alpha(0, 1), Error);
}

TEST(Alpha, RecurrenceMatchesClosedFormAndDecreases) {
  for (int r = 1; r <= 5; ++r) {
    Rational a(1, 4 * r * r);
    for (int k = 1; k <= 8; ++k) {
      EXPECT_EQ(alpha(r, k), a);
      EXPECT_EQ(alpha(r, k), alpha_closed_form(r, k));
      const Rational next = (a / (8 * r)) * (a / (8 * r));
      EXPECT_LT(next, a);
      a = next;
    }
  }
}

TEST(BinomialTail, Examples) {
  EXPECT_TRUE(binomial_tail_ok(3));
  EXPECT_TRUE(binomial_tail_ok(6));
  EXPECT_EQ(small_dimension_count(3), 1);
  EXPECT_EQ(small_dimension_count(6), 7);
  // Pascal-triangle oracle.
  std::vector<BigInt> row{1};
  for (int n = 1; n <= 60; ++n) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k];
      next[k + 1] += row[k];
    }
    row = next;
    BigInt sum = 0;
    for (int t = 0; 3 * t < n; ++t) sum += row[static_cast<std::size_t>(t)];
    EXPECT_EQ(small_dimension_count(n), sum);
    BigInt p10 = 1, p19 = 1;
    for (int i = 0; i < n; ++i) p10 *= 10, p19 *= 19;
    EXPECT_EQ(binomial_tail_ok(n), sum * p10 < p19);
    EXPECT_TRUE(binomial_tail_ok(n)) << n;
  }
}

TEST(N0Estimate, Examples) {
  EXPECT_EQ(n0_estimate(1, 1, Rational(1)), 6u);
  EXPECT_EQ(n0_estimate(2, 1, Rational(1)), 36u);
  EXPECT_EQ(n0_estimate(2, 2, Rational(3, 2)), 1944u);
  EXPECT_EQ(n0_estimate(1, 1, Rational(1, 7)), 1u);
  try {
    n0_estimate(5, 5, Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
}

TEST(PruneLines, Examples) {
  ExtractionParams params;
  const auto full = line_points(LineId::full(2));
  auto kept = prune_lines(full, 2, Rational(1, 16), params);
  ASSERT_EQ(kept.good_lines.size(), 1u);
  EXPECT_EQ(kept.good_lines[0], LineId::full(2));
  EXPECT_EQ(kept.surviving.size(), 4u);

  // A dimension-1 line is small once n_current = 6 (1 < 6/3).
  std::vector<DiagPoint> one{DiagPoint::parse("000000,100000")};
  EXPECT_TRUE(prune_lines(one, 6, Rational(1, 16), params).good_lines.empty());
  EXPECT_EQ(prune_lines(one, 2, Rational(1, 16), params).good_lines.size(), 1u);

  // Deficient: |L cap G| <= (1/4) * alpha * 2^t with alpha = 1.
  std::vector<DiagPoint> sparse{full[0]};
  EXPECT_TRUE(prune_lines(sparse, 2, Rational(1), params).good_lines.empty());
  std::vector<DiagPoint> two{full[0], full[1]};
  EXPECT_FALSE(prune_lines(two, 2, Rational(1), params).good_lines.empty());

  EXPECT_THROW(prune_lines({DiagPoint::parse("01,01")}, 2, Rational(1), params), Error);
}

TEST(PruneLines, SurvivorsLieOnGoodLines) {
  ExtractionParams params;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<DiagPoint> grid;
    for (std::uint64_t i = 0; i < 256; ++i) {
      auto p = DiagPoint::from_index(4, i);
      if (!p.degenerate() && rng() % 3 == 0) grid.push_back(p);
    }
    auto res = prune_lines(grid, 4, Rational(1, 2), params);
    for (const auto& p : res.surviving) {
      EXPECT_NE(std::find(res.good_lines.begin(), res.good_lines.end(), line_of(p)), res.good_lines.end());
    }
  }
}

TEST(ExtractTree, SingleColorAlwaysSucceeds) {
  for (int n = 2; n <= 5; ++n) {
    const auto coloring = DnColoring::constant(n, 1);
    const auto trace = extract_tree(coloring, greedy(1, 1));
    ASSERT_TRUE(trace.success()) << n;
    EXPECT_EQ(trace.witness->m, 1);
    check_trace(coloring, trace);
  }
  const auto deep = extract_tree(DnColoring::constant(5, 1), greedy(1, 2));
  ASSERT_TRUE(deep.success());
  EXPECT_EQ(deep.witness->m, 2);
  check_trace(DnColoring::constant(5, 1), deep);
}

TEST(ExtractTree, NeverBeatsTheOracleOnD2) {
  std::vector<std::uint64_t> nondeg;
  for (std::uint64_t i = 0; i < 16; ++i) {
    if (!DiagPoint::from_index(2, i).degenerate()) nondeg.push_back(i);
  }
  int successes = 0;
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    std::vector<std::uint8_t> colors(16, 0);
    for (std::size_t k = 0; k < 12; ++k) colors[nondeg[k]] = (mask >> k) & 1u;
    const DnColoring coloring(2, 2, colors);
    const auto trace = extract_tree(coloring, greedy(2, 1));
    const bool oracle_has = oracle::has_mono_corner(2, colors);
    if (trace.success()) {
      ++successes;
      EXPECT_TRUE(oracle_has);
      EXPECT_TRUE(validate_tree(*trace.witness, coloring));
    } else {
      ASSERT_TRUE(trace.failure);
      EXPECT_EQ(trace.failure->code, ErrorCode::NoWitness);
    }
  }
  EXPECT_GT(successes, 0);
}

TEST(ExtractTree, RandomColoringsKeepInvariants) {
  for (int n = 3; n <= 4; ++n) {
    for (int r = 2; r <= 3; ++r) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const DnColoring coloring(n, r, oracle::random_colors(std::size_t{1} << (2 * n), r, seed * 31 + n));
        for (int m = 1; m <= 2; ++m) {
          const auto trace = extract_tree(coloring, greedy(r, m));
          check_trace(coloring, trace);
          if (trace.witness) EXPECT_LE(trace.witness->m, m);
        }
      }
    }
  }
}

TEST(ExtractTree, FaithfulReportsViolatedViability) {
  ExtractionParams params;
  params.r = 2;
  params.m = 1;
  params.mode = ExtractionMode::faithful;
  const auto coloring = DnColoring::constant(10, 2);
  const auto trace = extract_tree(coloring, params);
  ASSERT_FALSE(trace.success());
  ASSERT_TRUE(trace.failure);
  EXPECT_EQ(trace.failure->code, ErrorCode::GuaranteeViolated);
  const auto& last = trace.inequalities.back();
  EXPECT_FALSE(last.holds);
  EXPECT_NE(trace.failure->message.find(last.name), std::string::npos);
  // Step 1: alpha_1 = 1/16 against 2 * (19/20)^10, both exact.
  bool saw_viability = false;
  for (const auto& q : trace.inequalities) {
    if (q.name.rfind("viability", 0) != 0) continue;
    saw_viability = true;
    EXPECT_EQ(q.lhs, Rational(1, 16));
    EXPECT_EQ(q.rhs, 2 * ipow(Rational(19, 20), 10));
    EXPECT_FALSE(q.holds);
  }
  EXPECT_TRUE(saw_viability);
  check_trace(coloring, trace);
}

TEST(ExtractTree, RejectsTooManyColors) {
  const DnColoring coloring(2, 3, std::vector<std::uint8_t>(16, 2));
  try {
    extract_tree(coloring, greedy(2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateColoring);
  }
  ExtractionParams bad = greedy(2, 1);
  bad.dim_fraction = Rational(1);
  EXPECT_THROW(extract_tree(DnColoring::constant(2, 1), bad), Error);
}
