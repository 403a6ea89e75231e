#pragma once

// Coloring files, deterministic coloring generators and JSON reports.
//
// File layout (text):
//   hcube-coloring 1
//   domain <Dn|alph4|alph3|grid|interval|segments>
//   n <n>            (Dn, alph4, alph3, segments)
//   N <N>            (interval)
//   A <a1> <a2> ...  (grid)
//   B <b1> <b2> ...  (grid)
//   r <r>
//   colors <count>
//   <count whitespace-separated color values>
// Lines starting with '#' are ignored in the header. Body order:
//   Dn: value(x) * 2^n + value(y), all 4^n pairs (degenerate ones included)
//   alph4 / alph3: big-endian base-4 / base-3 value of the word
//   grid: row-major over sorted A, then sorted B
//   interval: 1..N
//   segments: rank of {a, b}, a < b by value, lexicographic over (a, b)

#include "hcube/cube.hpp"
#include "hcube/detectors.hpp"
#include "hcube/geo_gp.hpp"
#include "hcube/grid_corners.hpp"
#include "hcube/search.hpp"
#include "hcube/tree_extractor.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hcube::io {

enum class FileDomain { dn, alph4, alph3, grid, interval, segments };

std::string_view to_string(FileDomain kind);
FileDomain parse_file_domain(std::string_view text);

struct ColoringFile {
  FileDomain domain = FileDomain::dn;
  int n = 0;
  std::uint64_t big_n = 0;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  int r = 1;
  std::vector<std::uint8_t> body;

  /// Throws InvalidArgument for an impossible header.
  std::size_t expected_size() const;
  friend bool operator==(const ColoringFile&, const ColoringFile&) = default;
};

/// Throws ParseError on malformed input.
ColoringFile parse_coloring(std::istream& in);
ColoringFile parse_coloring(std::string_view text);
ColoringFile read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const ColoringFile& file);
std::string format_coloring(const ColoringFile& file);

enum class Scheme { constant, random };
Scheme parse_scheme(std::string_view text);

/// Constant scheme fills zeros. Random scheme draws body entries in order as
/// std::mt19937_64(seed)() % r.
ColoringFile generate(ColoringFile header, Scheme scheme, std::uint64_t seed);

DnColoring to_dn(const ColoringFile& file);
plane::GridColoring to_grid(const ColoringFile& file);
gp::IntervalColoring to_interval(const ColoringFile& file);
search::Domain to_search_domain(const ColoringFile& file);
ColoringFile from_search(const search::Domain& domain, int r, const std::vector<std::uint8_t>& local);

using Json = nlohmann::ordered_json;

Json to_json(const LineId& line);
Json to_json(const CornerWitness& corner);
Json to_json(const TreeWitness& tree);
Json to_json(const ExtractionTrace& trace);
Json to_json(const plane::PlaneCorner& corner);
Json to_json(const plane::CornerExtraction& extraction);
Json to_json(const hj::HJLine& line);
Json to_json(const gp::GPResult& result);
Json to_json(const search::SearchOutcome& outcome);

}  // namespace hcube::io
