#pragma once

// Words over {0,1,2,3} and {0,1,2}, the digit <-> bit-pair bijection between
// {0,1,2,3}^n and D(n), the 4 -> 3 alphabet reduction, and partial
// Hales-Jewett line predicates.

#include "hcube/cube.hpp"
#include "hcube/detectors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcube::hj {

class HJPoint {
 public:
  HJPoint() = default;
  /// alphabet is 4 or 3; every digit must be below it.
  HJPoint(int alphabet, std::vector<std::uint8_t> digits);
  /// Parses a digit string such as "0312".
  static HJPoint parse(int alphabet, std::string_view text);
  /// Big-endian base-`alphabet` value as an index.
  static HJPoint from_index(int alphabet, int n, std::uint64_t index);

  int alphabet() const noexcept { return alphabet_; }
  int size() const noexcept { return static_cast<int>(digits_.size()); }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  int digit(int pos) const { return digits_.at(static_cast<std::size_t>(pos - 1)); }
  std::uint64_t index() const;
  std::string str() const;

  friend bool operator==(const HJPoint&, const HJPoint&) = default;

 private:
  int alphabet_ = 4;
  std::vector<std::uint8_t> digits_;
};

enum class ColumnKind {
  constant,
  increasing,  // (0,1,2)
  decreasing,  // (3,2,1) over {0..3}
  swapped,     // (0,2,1) over {0,1,2}
};

struct HJLine {
  std::array<HJPoint, 3> points;
  std::vector<ColumnKind> kinds;  // one per position

  std::vector<int> active_columns() const;  // 1-based
};

/// Digit -> (x bit, y bit): 0 -> 00, 1 -> 01, 2 -> 10, 3 -> 11.
DiagPoint encode4(const HJPoint& p);
HJPoint decode4(const DiagPoint& d);

/// First ordering of the three points whose every column is constant,
/// (0,1,2) or (3,2,1), with at least one non-constant column.
std::optional<HJLine> is_hj_line4(const HJPoint& p1, const HJPoint& p2, const HJPoint& p3);
/// Same with the patterns constant, (0,1,2), (0,2,1).
std::optional<HJLine> is_hj_line3(const HJPoint& p1, const HJPoint& p2, const HJPoint& p3);

/// Decodes root, shares-x child and shares-y child into a line in that order.
/// Throws OrderingImpossible if the result is not a line.
HJLine corner_to_hj_line(const CornerWitness& corner);

/// 0, 3 -> 0; 1 -> 1; 2 -> 2.
HJPoint reduce43(const HJPoint& p);
/// Applies reduce43 to each point, keeping the order.
std::optional<HJLine> reduce_line(const HJLine& line);

}  // namespace hcube::hj
