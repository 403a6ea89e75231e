#include "hcube/detectors.hpp"
#include "hcube/error.hpp"
#include "hcube/hj_codec.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hcube;
using namespace hcube::hj;

namespace {

HJPoint h4(const char* s) { return HJPoint::parse(4, s); }
HJPoint h3(const char* s) { return HJPoint::parse(3, s); }

std::vector<int> as_ints(const HJPoint& p) { return {p.digits().begin(), p.digits().end()}; }

}  // namespace

TEST(HJPoint, ParseAndIndex) {
  const auto p = h4("0312");
  EXPECT_EQ(p.index(), 0u * 64 + 3 * 16 + 1 * 4 + 2);
  EXPECT_EQ(HJPoint::from_index(4, 4, p.index()), p);
  EXPECT_EQ(p.str(), "0312");
  EXPECT_THROW(h3("013"), Error);
  EXPECT_EQ(oracle::digits(3, 3, h3("210").index()), as_ints(h3("210")));
}

TEST(Encode4, TableRows) {
  const auto d = encode4(h4("0123"));
  EXPECT_EQ(d.x.str(), "0011");
  EXPECT_EQ(d.y.str(), "0101");
  EXPECT_TRUE(encode4(h4("000")).degenerate());
  EXPECT_EQ(decode4(DiagPoint::parse("00,10")), h4("10"));
  EXPECT_EQ(decode4(DiagPoint::parse("11,11")), h4("33"));
}

TEST(Encode4, RoundTrips) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t size = std::uint64_t{1} << (2 * n);
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto p = HJPoint::from_index(4, n, i);
      EXPECT_EQ(decode4(encode4(p)), p);
      const auto d = DiagPoint::from_index(n, i);
      EXPECT_EQ(encode4(decode4(d)), d);
      for (int k = 1; k <= n; ++k) {
        EXPECT_EQ(p.digit(k), 2 * encode4(p).x.bit(k) + encode4(p).y.bit(k));
      }
    }
  }
}

TEST(IsHJLine4, Examples) {
  auto l = is_hj_line4(h4("10"), h4("11"), h4("12"));
  ASSERT_TRUE(l);
  EXPECT_EQ(l->kinds, (std::vector<ColumnKind>{ColumnKind::constant, ColumnKind::increasing}));
  EXPECT_EQ(l->active_columns(), std::vector<int>{2});
  EXPECT_TRUE(is_hj_line4(h4("22"), h4("00"), h4("11")));
  EXPECT_FALSE(is_hj_line4(h4("00"), h4("11"), h4("23")));
  EXPECT_FALSE(is_hj_line4(h4("12"), h4("12"), h4("12")));
  auto d = is_hj_line4(h4("30"), h4("12"), h4("21"));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->points[0], h4("30"));
  EXPECT_EQ(d->kinds, (std::vector<ColumnKind>{ColumnKind::decreasing, ColumnKind::increasing}));
}

TEST(IsHJLine3, Examples) {
  auto l = is_hj_line3(h3("00"), h3("12"), h3("21"));
  ASSERT_TRUE(l);
  EXPECT_EQ(l->kinds, (std::vector<ColumnKind>{ColumnKind::increasing, ColumnKind::swapped}));
  EXPECT_TRUE(is_hj_line3(h3("00"), h3("11"), h3("22")));
  EXPECT_FALSE(is_hj_line3(h3("11"), h3("22"), h3("01")));
}

TEST(IsHJLine, MatchesOracleOnAllTriples) {
  for (int alphabet : {3, 4}) {
    const int n = 2;
    const std::uint64_t size = alphabet == 4 ? 16 : 9;
    for (std::uint64_t a = 0; a < size; ++a) {
      for (std::uint64_t b = 0; b < size; ++b) {
        for (std::uint64_t c = 0; c < size; ++c) {
          const auto pa = HJPoint::from_index(alphabet, n, a);
          const auto pb = HJPoint::from_index(alphabet, n, b);
          const auto pc = HJPoint::from_index(alphabet, n, c);
          const bool got = alphabet == 4 ? is_hj_line4(pa, pb, pc).has_value() : is_hj_line3(pa, pb, pc).has_value();
          EXPECT_EQ(got, oracle::hj_line(alphabet, {as_ints(pa), as_ints(pb), as_ints(pc)}));
        }
      }
    }
  }
}

TEST(CornerToHJ, ExampleAndExhaustive) {
  auto c = is_corner(DiagPoint::parse("00,10"), DiagPoint::parse("01,10"), DiagPoint::parse("00,11"));
  ASSERT_TRUE(c);
  const auto l = corner_to_hj_line(*c);
  EXPECT_EQ(l.points[0], h4("10"));
  EXPECT_EQ(l.points[1], h4("11"));
  EXPECT_EQ(l.points[2], h4("12"));

  bool saw_decreasing = false;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& oc : oracle::corners(n)) {
      CornerWitness w{DiagPoint(BitWord(n, oc[0].x), BitWord(n, oc[0].y)),
                      DiagPoint(BitWord(n, oc[1].x), BitWord(n, oc[1].y)),
                      DiagPoint(BitWord(n, oc[2].x), BitWord(n, oc[2].y)), std::nullopt};
      const auto line = corner_to_hj_line(w);
      EXPECT_TRUE(is_hj_line4(line.points[0], line.points[1], line.points[2]));
      EXPECT_TRUE(oracle::hj_ordered(4, as_ints(line.points[0]), as_ints(line.points[1]), as_ints(line.points[2])));
      for (auto k : line.kinds) saw_decreasing |= k == ColumnKind::decreasing;
      const auto reduced = reduce_line(line);
      ASSERT_TRUE(reduced);
      EXPECT_TRUE(oracle::hj_ordered(3, as_ints(reduced->points[0]), as_ints(reduced->points[1]),
                                     as_ints(reduced->points[2])));
    }
  }
  EXPECT_TRUE(saw_decreasing);
}

TEST(Reduce43, Map) {
  EXPECT_EQ(reduce43(h4("0312")), h3("0012"));
  EXPECT_EQ(reduce43(h4("333")), h3("000"));
}

TEST(Reduce43, PullbackOfMonochromaticLines) {
  // Every alphabet-4 line with n <= 3 reduces to an alphabet-3 line, and a
  // coloring of {0,1,2}^n pulled back along reduce43 keeps it monochromatic.
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t size = std::uint64_t{1} << (2 * n);
    const auto chi = oracle::random_colors(static_cast<std::size_t>(std::pow(3, n)), 2, n);
    for (std::uint64_t a = 0; a < size; ++a) {
      for (std::uint64_t b = a + 1; b < size; ++b) {
        for (std::uint64_t c = b + 1; c < size; ++c) {
          auto line = is_hj_line4(HJPoint::from_index(4, n, a), HJPoint::from_index(4, n, b),
                                  HJPoint::from_index(4, n, c));
          if (!line) continue;
          const auto reduced = reduce_line(*line);
          ASSERT_TRUE(reduced);
          EXPECT_TRUE(is_hj_line3(reduced->points[0], reduced->points[1], reduced->points[2]));
          const bool mono4 = chi[reduce43(line->points[0]).index()] == chi[reduce43(line->points[1]).index()] &&
                             chi[reduce43(line->points[1]).index()] == chi[reduce43(line->points[2]).index()];
          const bool mono3 = chi[reduced->points[0].index()] == chi[reduced->points[1].index()] &&
                             chi[reduced->points[1].index()] == chi[reduced->points[2].index()];
          EXPECT_EQ(mono4, mono3);
        }
      }
    }
  }
}
