#pragma once

// Corners (a,b), (a+d,b), (a,b+d) in colored Cartesian products A x B with a
// small sumset, found by iterating popular colors on slope -1 lines; plus
// sumsets and Hilbert cube detection.

#include "hcube/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hcube::plane {

/// Strictly increasing set of integers.
class NumberSet {
 public:
  NumberSet() = default;
  /// Throws InvalidArgument unless strictly increasing.
  explicit NumberSet(std::vector<std::int64_t> elements);
  /// Sorts and removes duplicates.
  static NumberSet from_unsorted(std::vector<std::int64_t> elements);
  static NumberSet range(std::int64_t first, std::int64_t last);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::int64_t operator[](std::size_t i) const { return elements_[i]; }
  bool contains(std::int64_t v) const;
  /// Index of v, or npos.
  std::size_t index_of(std::int64_t v) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const NumberSet&, const NumberSet&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

/// Total coloring of A x B, row-major: index = i * |B| + j.
class GridColoring {
 public:
  GridColoring(NumberSet a, NumberSet b, int r, std::vector<std::uint8_t> colors);

  const NumberSet& a_set() const noexcept { return a_; }
  const NumberSet& b_set() const noexcept { return b_; }
  int r() const noexcept { return r_; }
  int color_at(std::size_t i, std::size_t j) const { return colors_[i * b_.size() + j]; }
  /// Throws InvalidArgument when (a, b) is outside A x B.
  int color(std::int64_t a, std::int64_t b) const;
  const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }

 private:
  NumberSet a_;
  NumberSet b_;
  int r_;
  std::vector<std::uint8_t> colors_;
};

struct PlaneCorner {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t d = 0;
  std::optional<int> color;
};

/// Points in A x B, a, a+d in A, b, b+d in B, d > 0, and (if a coloring is
/// given) one color on all three points.
bool validate_corner(const PlaneCorner& corner, const NumberSet& a, const NumberSet& b);
bool validate_corner(const PlaneCorner& corner, const GridColoring& coloring);

/// First monochromatic corner by exhaustive scan over (a, b, d), each
/// ascending in that order.
std::optional<PlaneCorner> find_plane_corner(const GridColoring& coloring);

NumberSet sumset(const NumberSet& a, const NumberSet& b);

/// 1 / 2^(r+1).
Rational delta_for(int r);

struct PlanePoint {
  std::int64_t a;
  std::int64_t b;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

struct AntidiagonalLine {
  std::int64_t sum;
  std::vector<PlanePoint> points;  // ascending a
};

/// Groups A x B by a + b, ascending sum.
std::vector<AntidiagonalLine> antidiagonal_cover(const NumberSet& a, const NumberSet& b);

struct CornerRound {
  std::int64_t line_sum = 0;
  std::size_t line_count = 0;  // points of the current set on the chosen line
  int color = 0;
  std::vector<PlanePoint> popular;
  std::vector<PlanePoint> grid;  // {(a, b') : (a,b), (a',b') in popular, a < a'}
};

struct CornerExtraction {
  std::vector<CornerRound> rounds;
  std::optional<PlaneCorner> corner;
  bool found_in_sweep = false;
};

/// Heaviest slope -1 line, popular color, grid, repeat on the grid. A corner
/// is reported as soon as a popular set's color recurs or a grid point has
/// the color of the set that formed it. When the rounds end without one, a
/// sweep repeats the first-round grid check on every line and every color
/// class (heaviest lines first), so an empty result means no monochromatic
/// corner exists. Every returned corner is validated.
CornerExtraction extract_corner(const GridColoring& coloring, int r);

/// c_r * n^(1 - delta (2^(r+1) - 1)) held exactly as coefficient, base and
/// rational exponent.
struct RationalPower {
  Rational coefficient;
  BigInt base;
  Rational exponent;

  /// Sign of (value - k).
  int compare(const Rational& k) const;
  /// The exact value when base^exponent is rational.
  std::optional<Rational> exact_value() const;
};

RationalPower sr_lower_bound(std::int64_t n, int r, const Rational& delta, const Rational& c_r);

/// 1 - delta (2^(r+1) - 1).
Rational sr_exponent(int r, const Rational& delta);

/// a_1 = 1, a_{k+1} = 2 a_k + 1.
BigInt doubling_recurrence(int k);

struct HilbertCube {
  std::int64_t base = 0;
  std::vector<std::int64_t> generators;  // ascending, positive

  int dimension() const { return static_cast<int>(generators.size()); }
  /// All 2^m subset sums, ascending, with repetitions.
  std::vector<std::int64_t> sums() const;
};

bool cube_in_set(const HilbertCube& cube, const NumberSet& s);

/// First cube in order (base ascending, generators lexicographically
/// ascending). strict demands distinct generators. Requires m <= 4 and
/// |S| <= 64.
std::optional<HilbertCube> find_hilbert_cube(const NumberSet& s, int m, bool strict = false);

}  // namespace hcube::plane
