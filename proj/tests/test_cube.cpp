#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hcube;

namespace {

DiagPoint dp(const char* text) { return DiagPoint::parse(text); }

}  // namespace

TEST(BitWord, PositionOneIsMostSignificant) {
  const auto w = BitWord::parse("0110");
  EXPECT_EQ(w.value(), 6u);
  EXPECT_EQ(w.weight(), 2);
  EXPECT_FALSE(w.bit(1));
  EXPECT_TRUE(w.bit(2));
  EXPECT_EQ(w.str(), "0110");
  EXPECT_EQ(w.complement().str(), "1001");
  EXPECT_EQ(w.with_bit(1, true).str(), "1110");
  EXPECT_THROW(BitWord::parse("01a"), Error);
  EXPECT_THROW(BitWord(0, 0), Error);
  EXPECT_THROW(BitWord(2, 4), Error);
}

TEST(TotalOrder, StrictTotalAndWeightFirst) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t v = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < v; ++a) {
      for (std::uint64_t b = 0; b < v; ++b) {
        const BitWord A(n, a), B(n, b);
        const bool ab = precedes(A, B);
        const bool ba = precedes(B, A);
        if (a == b) {
          EXPECT_FALSE(ab || ba);
        } else {
          EXPECT_NE(ab, ba);
        }
        if (oracle::weight(a) < oracle::weight(b)) EXPECT_TRUE(ab);
        for (std::uint64_t c = 0; c < v; ++c) {
          const BitWord C(n, c);
          if (ab && precedes(B, C)) EXPECT_TRUE(precedes(A, C));
        }
      }
    }
  }
  EXPECT_TRUE(precedes(BitWord::parse("100"), BitWord::parse("011")));
  EXPECT_TRUE(precedes(BitWord::parse("010"), BitWord::parse("100")));
}

TEST(DiagPoint, CanonicalIndexRoundTrip) {
  const auto p = dp("0110,0011");
  EXPECT_EQ(p.canonical_index(), 6u * 16 + 3);
  EXPECT_EQ(DiagPoint::from_index(4, p.canonical_index()), p);
  EXPECT_EQ(p.str(), "(0110,0011)");
  for (std::uint64_t i = 0; i < 64; ++i) EXPECT_EQ(DiagPoint::from_index(3, i).canonical_index(), i);
  EXPECT_TRUE(dp("01,01").degenerate());
}

TEST(LineOf, Examples) {
  const auto l = line_of(dp("0110,0011"));
  EXPECT_EQ(l.flip_mask().str(), "0101");
  EXPECT_EQ(l.fixed().str(), "0010");
  EXPECT_EQ(l.str(), "L[0*1*]");
  const auto full = line_of(dp("01,10"));
  EXPECT_EQ(full, LineId::full(2));
  EXPECT_EQ(full.fixed().str(), "00");
  try {
    line_of(dp("01,01"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegeneratePoint);
  }
  EXPECT_EQ(line_of(dp("01,01"), true).dimension(), 0);
}

TEST(LineOf, MatchesPatternOracle) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t v = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < v; ++x) {
      for (std::uint64_t y = 0; y < v; ++y) {
        if (x == y) continue;
        const DiagPoint p(BitWord(n, x), BitWord(n, y));
        const auto l = line_of(p);
        std::string expect = oracle::pattern(n, x, y);
        EXPECT_EQ(l.str(), "L[" + expect + "]");
        EXPECT_TRUE(l.contains(p));
        const auto pts = line_points(l);
        EXPECT_NE(std::find(pts.begin(), pts.end(), p), pts.end());
      }
    }
  }
}

TEST(LinePoints, Examples) {
  const LineId l(BitWord::parse("0101"), BitWord::parse("0010"));
  const auto pts = line_points(l);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_NE(std::find(pts.begin(), pts.end(), dp("0010,0111")), pts.end());
  EXPECT_NE(std::find(pts.begin(), pts.end(), dp("0110,0011")), pts.end());
  std::vector<DiagPoint> full{dp("00,11"), dp("01,10"), dp("10,01"), dp("11,00")};
  EXPECT_EQ(line_points(LineId::full(2)), full);
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(pts[i - 1].canonical_index(), pts[i].canonical_index());
  EXPECT_THROW(LineId(BitWord::parse("01"), BitWord::parse("01")), Error);
}

TEST(EnumerateLines, CountsAndOrder) {
  EXPECT_EQ(enumerate_lines(2, 1).size(), 5u);
  const auto one = enumerate_lines(1, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], LineId::full(1));
  EXPECT_EQ(enumerate_lines(3, 2).size(), 7u);
  for (int n = 1; n <= 8; ++n) {
    const auto lines = enumerate_lines(n, 1);
    std::uint64_t p3 = 1, p2 = 1;
    for (int i = 0; i < n; ++i) p3 *= 3, p2 *= 2;
    EXPECT_EQ(lines.size(), p3 - p2);
    for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_TRUE(enumeration_before(lines[i - 1], lines[i]));
  }
  EXPECT_THROW(enumerate_lines(0, 1), Error);
  EXPECT_THROW(enumerate_lines(21, 1), Error);
}

TEST(EnumerateLines, PartitionNondegeneratePoints) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> seen;
    std::uint64_t total = 0;
    for (const auto& l : enumerate_lines(n, 1)) {
      for (const auto& p : line_points(l)) {
        EXPECT_FALSE(p.degenerate());
        EXPECT_TRUE(seen.insert(p.canonical_index()).second);
        EXPECT_EQ(line_of(p), l);
        ++total;
      }
    }
    const std::uint64_t v = std::uint64_t{1} << n;
    EXPECT_EQ(total, v * v - v);
  }
}

TEST(GridOf, Examples) {
  std::vector<DiagPoint> s{dp("00,11"), dp("01,10")};
  const auto g = grid_of(s);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], dp("00,10"));

  const auto all = line_points(LineId::full(2));
  const auto g4 = grid_of(all);
  EXPECT_EQ(g4.size(), 6u);
  // Oracle: every (X, Y') with X before X' by weight then value.
  std::set<std::uint64_t> expect;
  for (const auto& p : all) {
    for (const auto& q : all) {
      if (precedes(p.x, q.x)) expect.insert(DiagPoint(p.x, q.y).canonical_index());
    }
  }
  std::set<std::uint64_t> got;
  for (const auto& p : g4) got.insert(p.canonical_index());
  EXPECT_EQ(got, expect);

  std::vector<DiagPoint> single{dp("00,11")};
  EXPECT_TRUE(grid_of(single).empty());
  std::vector<DiagPoint> mixed{dp("00,11"), dp("00,01")};
  try {
    grid_of(mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOnCommonLine);
  }
}

TEST(GridOf, SizeIsPairCount) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto lines = enumerate_lines(n, 1);
    const auto pts = line_points(lines[rng() % lines.size()]);
    std::vector<DiagPoint> s;
    for (const auto& p : pts) {
      if (rng() % 2) s.push_back(p);
    }
    EXPECT_EQ(grid_of(s).size(), s.size() * (s.size() - (s.empty() ? 0 : 1)) / 2);
  }
}

TEST(DnColoring, Validation) {
  EXPECT_NO_THROW(DnColoring::constant(2, 1));
  EXPECT_THROW(DnColoring(2, 2, std::vector<std::uint8_t>(15, 0)), Error);
  EXPECT_THROW(DnColoring(1, 2, std::vector<std::uint8_t>{0, 2, 0, 0}), Error);
  const DnColoring c(1, 2, {0, 1, 0, 0});
  EXPECT_EQ(c.color(dp("0,1")), 1);
}
