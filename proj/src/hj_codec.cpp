#include "hcube/hj_codec.hpp"

#include "hcube/error.hpp"

#include <algorithm>

namespace hcube::hj {

HJPoint::HJPoint(int alphabet, std::vector<std::uint8_t> digits) : alphabet_(alphabet), digits_(std::move(digits)) {
  if (alphabet != 3 && alphabet != 4) throw Error(ErrorCode::InvalidArgument, "alphabet must be 3 or 4");
  for (auto d : digits_) {
    if (d >= alphabet) throw Error(ErrorCode::InvalidArgument, "digit outside the alphabet");
  }
}

HJPoint HJPoint::parse(int alphabet, std::string_view text) {
  std::vector<std::uint8_t> digits;
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "digit string expected: '" + std::string(text) + "'");
    digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return HJPoint(alphabet, std::move(digits));
}

HJPoint HJPoint::from_index(int alphabet, int n, std::uint64_t index) {
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(alphabet));
    index /= static_cast<std::uint64_t>(alphabet);
  }
  if (index != 0) throw Error(ErrorCode::InvalidArgument, "index out of range for the word length");
  return HJPoint(alphabet, std::move(digits));
}

std::uint64_t HJPoint::index() const {
  std::uint64_t v = 0;
  for (auto d : digits_) v = v * static_cast<std::uint64_t>(alphabet_) + d;
  return v;
}

std::string HJPoint::str() const {
  std::string s;
  for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
  return s;
}

std::vector<int> HJLine::active_columns() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] != ColumnKind::constant) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

DiagPoint encode4(const HJPoint& p) {
  if (p.alphabet() != 4) throw Error(ErrorCode::InvalidArgument, "encode4 needs an alphabet-4 word");
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  for (auto d : p.digits()) {
    x = (x << 1U) | static_cast<std::uint64_t>(d >> 1U);
    y = (y << 1U) | static_cast<std::uint64_t>(d & 1U);
  }
  return DiagPoint(BitWord(p.size(), x), BitWord(p.size(), y));
}

HJPoint decode4(const DiagPoint& d) {
  std::vector<std::uint8_t> digits;
  for (int pos = 1; pos <= d.size(); ++pos) {
    digits.push_back(static_cast<std::uint8_t>((d.x.bit(pos) ? 2 : 0) + (d.y.bit(pos) ? 1 : 0)));
  }
  return HJPoint(4, std::move(digits));
}

namespace {

using Pattern = std::array<int, 3>;

std::optional<HJLine> match_line(const HJPoint& p1, const HJPoint& p2, const HJPoint& p3, int alphabet,
                                 const std::vector<std::pair<Pattern, ColumnKind>>& patterns) {
  if (p1.alphabet() != alphabet || p2.alphabet() != alphabet || p3.alphabet() != alphabet) {
    throw Error(ErrorCode::InvalidArgument, "line predicate applied to the wrong alphabet");
  }
  if (p1.size() != p2.size() || p1.size() != p3.size()) {
    throw Error(ErrorCode::DimensionMismatch, "words of different lengths");
  }
  std::array<HJPoint, 3> pts{p1, p2, p3};
  std::array<int, 3> order{0, 1, 2};
  do {
    HJLine line{{pts[order[0]], pts[order[1]], pts[order[2]]}, {}};
    bool ok = true;
    bool active = false;
    for (int pos = 1; pos <= p1.size() && ok; ++pos) {
      const Pattern col{line.points[0].digit(pos), line.points[1].digit(pos), line.points[2].digit(pos)};
      if (col[0] == col[1] && col[1] == col[2]) {
        line.kinds.push_back(ColumnKind::constant);
        continue;
      }
      auto it = std::find_if(patterns.begin(), patterns.end(), [&](const auto& pk) { return pk.first == col; });
      if (it == patterns.end()) {
        ok = false;
      } else {
        line.kinds.push_back(it->second);
        active = true;
      }
    }
    if (ok && active) return line;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

}  // namespace

std::optional<HJLine> is_hj_line4(const HJPoint& p1, const HJPoint& p2, const HJPoint& p3) {
  static const std::vector<std::pair<Pattern, ColumnKind>> kPatterns{
      {{0, 1, 2}, ColumnKind::increasing}, {{3, 2, 1}, ColumnKind::decreasing}};
  return match_line(p1, p2, p3, 4, kPatterns);
}

std::optional<HJLine> is_hj_line3(const HJPoint& p1, const HJPoint& p2, const HJPoint& p3) {
  static const std::vector<std::pair<Pattern, ColumnKind>> kPatterns{
      {{0, 1, 2}, ColumnKind::increasing}, {{0, 2, 1}, ColumnKind::swapped}};
  return match_line(p1, p2, p3, 3, kPatterns);
}

HJLine corner_to_hj_line(const CornerWitness& corner) {
  const HJPoint root = decode4(corner.root);
  const HJPoint shares_x = decode4(corner.child_y);
  const HJPoint shares_y = decode4(corner.child_x);
  auto line = is_hj_line4(root, shares_x, shares_y);
  if (!line || !(line->points[0] == root && line->points[1] == shares_x && line->points[2] == shares_y)) {
    throw Error(ErrorCode::OrderingImpossible, "corner " + corner.root.str() + " does not decode to a line");
  }
  return *line;
}

HJPoint reduce43(const HJPoint& p) {
  if (p.alphabet() != 4) throw Error(ErrorCode::InvalidArgument, "reduce43 needs an alphabet-4 word");
  std::vector<std::uint8_t> digits;
  for (auto d : p.digits()) digits.push_back(d == 3 ? 0 : d);
  return HJPoint(3, std::move(digits));
}

std::optional<HJLine> reduce_line(const HJLine& line) {
  return is_hj_line3(reduce43(line.points[0]), reduce43(line.points[1]), reduce43(line.points[2]));
}

}  // namespace hcube::hj
