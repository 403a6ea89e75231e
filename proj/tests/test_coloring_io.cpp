#include "hcube/coloring_io.hpp"
#include "hcube/error.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace hcube;
using namespace hcube::io;

namespace {

ColoringFile header(FileDomain d, int n, int r) {
  ColoringFile f;
  f.domain = d;
  f.n = n;
  f.r = r;
  return f;
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse_coloring(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST(Generate, ConstantIsAllZeros) {
  const auto f = generate(header(FileDomain::dn, 2, 3), Scheme::constant, 0);
  EXPECT_EQ(f.body, std::vector<std::uint8_t>(16, 0));
}

TEST(Generate, RandomMatchesStatedGenerator) {
  const auto f = generate(header(FileDomain::alph3, 3, 3), Scheme::random, 42);
  ASSERT_EQ(f.body.size(), 27u);
  std::mt19937_64 rng(42);
  for (auto v : f.body) EXPECT_EQ(v, rng() % 3);
  for (auto v : f.body) EXPECT_LT(v, 3);
  EXPECT_EQ(format_coloring(f), format_coloring(generate(header(FileDomain::alph3, 3, 3), Scheme::random, 42)));
  EXPECT_NE(f.body, generate(header(FileDomain::alph3, 3, 3), Scheme::random, 43).body);
}

TEST(Generate, DomainSizes) {
  EXPECT_EQ(generate(header(FileDomain::alph4, 2, 2), Scheme::constant, 0).body.size(), 16u);
  EXPECT_EQ(generate(header(FileDomain::segments, 3, 2), Scheme::constant, 0).body.size(), 28u);
  ColoringFile grid = header(FileDomain::grid, 0, 2);
  grid.a = {3, 1, 2};
  grid.b = {5, 7};
  const auto g = generate(grid, Scheme::random, 1);
  EXPECT_EQ(g.body.size(), 6u);
  EXPECT_EQ(g.a, (std::vector<std::int64_t>{1, 2, 3}));
  ColoringFile interval = header(FileDomain::interval, 0, 2);
  interval.big_n = 100;
  EXPECT_EQ(generate(interval, Scheme::constant, 0).body.size(), 100u);
  EXPECT_THROW(generate(header(FileDomain::dn, 0, 2), Scheme::constant, 0), Error);
  EXPECT_THROW(generate(header(FileDomain::dn, 2, 0), Scheme::constant, 0), Error);
}

TEST(RoundTrip, EveryDomain) {
  std::vector<ColoringFile> headers{header(FileDomain::dn, 3, 2), header(FileDomain::alph4, 2, 3),
                                    header(FileDomain::alph3, 2, 2), header(FileDomain::segments, 3, 4)};
  ColoringFile grid = header(FileDomain::grid, 0, 3);
  grid.a = {-2, 0, 5};
  grid.b = {1, 2};
  headers.push_back(grid);
  ColoringFile interval = header(FileDomain::interval, 0, 2);
  interval.big_n = 130;
  headers.push_back(interval);
  for (const auto& h : headers) {
    for (std::uint64_t seed : {0, 1, 2}) {
      const auto f = generate(h, Scheme::random, seed);
      EXPECT_EQ(parse_coloring(format_coloring(f)), f);
    }
  }
}

TEST(Parse, CommentsAndWhitespace) {
  const auto f = parse_coloring("hcube-coloring 1\n# note\ndomain Dn\nn 1\nr 2\ncolors 4\n0 1\n1 0\n");
  EXPECT_EQ(f.domain, FileDomain::dn);
  EXPECT_EQ(f.body, (std::vector<std::uint8_t>{0, 1, 1, 0}));
  EXPECT_EQ(to_dn(f).color(DiagPoint::parse("0,1")), 1);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error("domain Dn\nn 1\nr 2\ncolors 4\n0 0 0 0\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("hcube-coloring 1\ndomain Dn\nn 1\nr 2\ncolors 4\n0 0 0\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("hcube-coloring 1\ndomain Dn\nn 1\nr 2\ncolors 5\n0 0 0 0 0\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("hcube-coloring 1\ndomain Dn\nn 1\nr 2\ncolors 4\n0 0 0 2\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("hcube-coloring 1\ndomain Dn\nn 1\nr 2\ncolors 4\n0 0 0 0 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("hcube-coloring 1\ndomain Qn\nn 1\nr 2\ncolors 4\n0 0 0 0\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("hcube-coloring 1\ndomain Dn\nn x\nr 2\ncolors 4\n0 0 0 0\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("hcube-coloring 1\ndomain grid\nA 1 1\nB 2\nr 2\ncolors 2\n0 0\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error(""), ErrorCode::ParseError);
}

TEST(Conversions, DomainChecks) {
  const auto f = generate(header(FileDomain::alph4, 2, 2), Scheme::random, 3);
  EXPECT_THROW(to_dn(f), Error);
  EXPECT_THROW(to_grid(f), Error);
  const auto d = to_search_domain(f);
  EXPECT_EQ(d.kind, search::DomainKind::alphabet4);
  const auto back = from_search(d, 2, search::from_file_body(d, f.body));
  EXPECT_EQ(back, f);
  ColoringFile interval = header(FileDomain::interval, 0, 2);
  interval.big_n = 10;
  EXPECT_THROW(to_search_domain(generate(interval, Scheme::constant, 0)), Error);
}

TEST(Json, RationalsAsFractions) {
  ExtractionParams params;
  params.r = 2;
  params.m = 1;
  params.mode = ExtractionMode::faithful;
  const auto trace = extract_tree(DnColoring::constant(3, 2), params);
  const auto j = to_json(trace);
  EXPECT_EQ(j["mode"], "faithful");
  ASSERT_TRUE(j.contains("failure"));
  for (const auto& q : j["inequalities"]) {
    const std::string lhs = q["lhs"];
    EXPECT_NE(lhs.find('/'), std::string::npos);
  }
  EXPECT_EQ(to_json(LineId::full(2))["pattern"], "L[**]");
}
