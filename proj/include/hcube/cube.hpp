#pragma once

// Vertices of the n-cube, the diagonal space D(n) = {0,1}^n x {0,1}^n, and
// the lines L(I, C) that partition its nondegenerate points.
//
// Bit convention: position 1 is the leftmost display position and the most
// significant bit of value(), so "0110" has value 6.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcube {

inline constexpr int kMaxDim = 63;

class BitWord {
 public:
  BitWord() = default;
  BitWord(int n, std::uint64_t value);

  /// Parses a string of '0'/'1' characters; position 1 first.
  static BitWord parse(std::string_view text);
  static BitWord zeros(int n) { return BitWord(n, 0); }
  static BitWord ones(int n);

  int size() const noexcept { return n_; }
  std::uint64_t value() const noexcept { return bits_; }
  int weight() const noexcept;
  bool empty_set() const noexcept { return bits_ == 0; }

  /// 1-based position.
  bool bit(int pos) const;
  BitWord with_bit(int pos, bool on) const;
  BitWord complement() const;

  std::string str() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend BitWord operator^(const BitWord& a, const BitWord& b);
  friend BitWord operator&(const BitWord& a, const BitWord& b);
  friend BitWord operator|(const BitWord& a, const BitWord& b);

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Orders vertices by weight, ties by big-endian value.
struct TotalOrder {
  bool operator()(const BitWord& a, const BitWord& b) const noexcept {
    int wa = a.weight();
    int wb = b.weight();
    return wa != wb ? wa < wb : a.value() < b.value();
  }
};

inline bool precedes(const BitWord& a, const BitWord& b) noexcept { return TotalOrder{}(a, b); }

/// A point (X, Y) of D(n): a segment between two cube vertices.
struct DiagPoint {
  BitWord x;
  BitWord y;

  DiagPoint() = default;
  DiagPoint(BitWord x_, BitWord y_);

  /// Parses "0110,0011".
  static DiagPoint parse(std::string_view text);
  /// Inverse of canonical_index.
  static DiagPoint from_index(int n, std::uint64_t index);

  int size() const noexcept { return x.size(); }
  bool degenerate() const noexcept { return x == y; }
  /// value(x) * 2^n + value(y). Requires n <= 32.
  std::uint64_t canonical_index() const;
  std::string str() const;

  friend bool operator==(const DiagPoint&, const DiagPoint&) = default;
};

struct CanonicalLess {
  bool operator()(const DiagPoint& a, const DiagPoint& b) const {
    return a.canonical_index() < b.canonical_index();
  }
};

/// L(I, C): flip positions I (y_i = 1 - x_i) and fixed values C elsewhere.
class LineId {
 public:
  LineId() = default;
  LineId(BitWord flip_mask, BitWord fixed);

  /// The full flip line L([n]).
  static LineId full(int n);

  const BitWord& flip_mask() const noexcept { return flip_; }
  const BitWord& fixed() const noexcept { return fixed_; }
  int size_n() const noexcept { return flip_.size(); }
  int dimension() const noexcept { return flip_.weight(); }
  std::uint64_t point_count() const noexcept { return std::uint64_t{1} << dimension(); }
  bool contains(const DiagPoint& p) const;

  /// The point of this line whose x-coordinate is `x`, if any.
  bool has_x(const BitWord& x) const;
  DiagPoint point_with_x(const BitWord& x) const;
  bool has_y(const BitWord& y) const;
  DiagPoint point_with_y(const BitWord& y) const;

  std::string str() const;

  friend bool operator==(const LineId&, const LineId&) = default;
  /// Enumeration order: dimension descending, then (flip_mask, fixed) ascending.
  friend bool enumeration_before(const LineId& a, const LineId& b);

 private:
  BitWord flip_;
  BitWord fixed_;
};

BitWord diff_mask(const BitWord& a, const BitWord& b);

/// The unique line through p. Throws DegeneratePoint when x == y unless
/// allow_degenerate is set, in which case the line has I = {}.
LineId line_of(const DiagPoint& p, bool allow_degenerate = false);

/// All 2^|I| points of the line, ascending canonical index.
std::vector<DiagPoint> line_points(const LineId& line);

/// Lines with dimension >= max(min_dim, 1), dimension descending then
/// (flip_mask, fixed) ascending. n must be in 1..20.
std::vector<LineId> enumerate_lines(int n, int min_dim);
void for_each_line(int n, int min_dim, const std::function<void(const LineId&)>& visit);

/// {(X, Y') : (X, Y), (X', Y') in S, X < X'} for S on one common line.
/// The result may contain degenerate points. Sorted by canonical index.
std::vector<DiagPoint> grid_of(std::span<const DiagPoint> points);

/// Total r-coloring of D(n), indexed by canonical index. Entries at
/// degenerate points are stored but never consulted by structure finders.
class DnColoring {
 public:
  DnColoring(int n, int r, std::vector<std::uint8_t> colors);
  static DnColoring constant(int n, int r, std::uint8_t color = 0);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  int color(const DiagPoint& p) const { return colors_[p.canonical_index()]; }
  int color_at(std::uint64_t index) const { return colors_[index]; }
  const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }

 private:
  int n_;
  int r_;
  std::vector<std::uint8_t> colors_;
};

inline constexpr int kMaxColoredDim = 12;

}  // namespace hcube
