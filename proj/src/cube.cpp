#include "hcube/cube.hpp"

#include "hcube/error.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace hcube {

namespace {

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require_same_n(const BitWord& a, const BitWord& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "words of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

}  // namespace

BitWord::BitWord(int n, std::uint64_t value) : n_(n), bits_(value) {
  if (n < 1 || n > kMaxDim) {
    throw Error(ErrorCode::InvalidArgument, "cube dimension must be in 1..63, got " + std::to_string(n));
  }
  if ((value & ~low_mask(n)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "value has bits beyond position " + std::to_string(n));
  }
}

BitWord BitWord::parse(std::string_view text) {
  std::uint64_t value = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::ParseError, "bit word must contain only 0/1: '" + std::string(text) + "'");
    }
    value = (value << 1U) | static_cast<std::uint64_t>(c == '1');
  }
  return BitWord(static_cast<int>(text.size()), value);
}

BitWord BitWord::ones(int n) { return BitWord(n, low_mask(n)); }

int BitWord::weight() const noexcept { return std::popcount(bits_); }

bool BitWord::bit(int pos) const {
  if (pos < 1 || pos > n_) throw Error(ErrorCode::InvalidArgument, "position out of range");
  return ((bits_ >> (n_ - pos)) & 1U) != 0;
}

BitWord BitWord::with_bit(int pos, bool on) const {
  if (pos < 1 || pos > n_) throw Error(ErrorCode::InvalidArgument, "position out of range");
  std::uint64_t m = std::uint64_t{1} << (n_ - pos);
  return BitWord(n_, on ? (bits_ | m) : (bits_ & ~m));
}

BitWord BitWord::complement() const { return BitWord(n_, ~bits_ & low_mask(n_)); }

std::string BitWord::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> (n_ - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

BitWord operator^(const BitWord& a, const BitWord& b) {
  require_same_n(a, b);
  return BitWord(a.n_, a.bits_ ^ b.bits_);
}

BitWord operator&(const BitWord& a, const BitWord& b) {
  require_same_n(a, b);
  return BitWord(a.n_, a.bits_ & b.bits_);
}

BitWord operator|(const BitWord& a, const BitWord& b) {
  require_same_n(a, b);
  return BitWord(a.n_, a.bits_ | b.bits_);
}

BitWord diff_mask(const BitWord& a, const BitWord& b) { return a ^ b; }

DiagPoint::DiagPoint(BitWord x_, BitWord y_) : x(x_), y(y_) { require_same_n(x, y); }

DiagPoint DiagPoint::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "diagonal point must be 'X,Y': '" + std::string(text) + "'");
  }
  return DiagPoint(BitWord::parse(text.substr(0, comma)), BitWord::parse(text.substr(comma + 1)));
}

DiagPoint DiagPoint::from_index(int n, std::uint64_t index) {
  if (n > 32) throw Error(ErrorCode::ResourceLimit, "canonical index needs n <= 32");
  std::uint64_t y = index & low_mask(n);
  std::uint64_t x = n == 32 ? index >> 32 : index >> n;
  return DiagPoint(BitWord(n, x), BitWord(n, y));
}

std::uint64_t DiagPoint::canonical_index() const {
  int n = x.size();
  if (n > 32) throw Error(ErrorCode::ResourceLimit, "canonical index needs n <= 32");
  return (x.value() << n) | y.value();
}

std::string DiagPoint::str() const { return "(" + x.str() + "," + y.str() + ")"; }

LineId::LineId(BitWord flip_mask, BitWord fixed) : flip_(flip_mask), fixed_(fixed) {
  require_same_n(flip_, fixed_);
  if ((flip_.value() & fixed_.value()) != 0) {
    throw Error(ErrorCode::InvalidArgument, "fixed part overlaps the flip set");
  }
}

LineId LineId::full(int n) { return LineId(BitWord::ones(n), BitWord::zeros(n)); }

bool LineId::contains(const DiagPoint& p) const {
  if (p.size() != size_n()) return false;
  std::uint64_t off = ~flip_.value() & low_mask(size_n());
  return (p.x.value() ^ p.y.value()) == flip_.value() && (p.x.value() & off) == fixed_.value();
}

bool LineId::has_x(const BitWord& x) const {
  std::uint64_t off = ~flip_.value() & low_mask(size_n());
  return x.size() == size_n() && (x.value() & off) == fixed_.value();
}

DiagPoint LineId::point_with_x(const BitWord& x) const {
  if (!has_x(x)) throw Error(ErrorCode::InvalidArgument, "no point with that x on " + str());
  return DiagPoint(x, x ^ flip_);
}

bool LineId::has_y(const BitWord& y) const { return has_x(y); }

DiagPoint LineId::point_with_y(const BitWord& y) const {
  if (!has_y(y)) throw Error(ErrorCode::InvalidArgument, "no point with that y on " + str());
  return DiagPoint(y ^ flip_, y);
}

std::string LineId::str() const {
  // Flip positions shown as '*', fixed positions as their value.
  std::string s = fixed_.str();
  for (int i = 1; i <= size_n(); ++i) {
    if (flip_.bit(i)) s[static_cast<std::size_t>(i - 1)] = '*';
  }
  return "L[" + s + "]";
}

bool enumeration_before(const LineId& a, const LineId& b) {
  if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
  if (a.flip_.value() != b.flip_.value()) return a.flip_.value() < b.flip_.value();
  return a.fixed_.value() < b.fixed_.value();
}

LineId line_of(const DiagPoint& p, bool allow_degenerate) {
  if (p.degenerate() && !allow_degenerate) {
    throw Error(ErrorCode::DegeneratePoint, "x == y at " + p.str());
  }
  BitWord flip = p.x ^ p.y;
  return LineId(flip, p.x & flip.complement());
}

std::vector<DiagPoint> line_points(const LineId& line) {
  std::vector<DiagPoint> out;
  out.reserve(line.point_count());
  const std::uint64_t mask = line.flip_mask().value();
  const int n = line.size_n();
  // Subsets of the mask in ascending order; x ascends so the canonical index does too.
  std::uint64_t s = 0;
  while (true) {
    std::uint64_t x = line.fixed().value() | s;
    out.emplace_back(BitWord(n, x), BitWord(n, x ^ mask));
    if (s == mask) break;
    s = (s - mask) & mask;
  }
  return out;
}

void for_each_line(int n, int min_dim, const std::function<void(const LineId&)>& visit) {
  if (n < 1 || n > 20) {
    throw Error(ErrorCode::ResourceLimit, "line enumeration supports 1 <= n <= 20, got " + std::to_string(n));
  }
  const std::uint64_t all = low_mask(n);
  for (int t = n; t >= std::max(min_dim, 1); --t) {
    // Masks of weight t in ascending order (Gosper's hack).
    std::uint64_t mask = (std::uint64_t{1} << t) - 1;
    while (mask <= all) {
      const std::uint64_t comp = all & ~mask;
      std::uint64_t c = 0;
      while (true) {
        visit(LineId(BitWord(n, mask), BitWord(n, c)));
        if (c == comp) break;
        c = (c - comp) & comp;
      }
      std::uint64_t low = mask & (~mask + 1);
      std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2U) / low) | ripple;
    }
  }
}

std::vector<LineId> enumerate_lines(int n, int min_dim) {
  std::vector<LineId> out;
  for_each_line(n, min_dim, [&](const LineId& l) { out.push_back(l); });
  return out;
}

std::vector<DiagPoint> grid_of(std::span<const DiagPoint> points) {
  if (points.empty()) return {};
  std::set<DiagPoint, CanonicalLess> unique(points.begin(), points.end());
  const LineId line = line_of(*unique.begin());
  for (const auto& p : unique) {
    if (!line.contains(p)) {
      throw Error(ErrorCode::NotOnCommonLine, p.str() + " is not on " + line.str());
    }
  }
  std::vector<DiagPoint> members(unique.begin(), unique.end());
  std::vector<DiagPoint> grid;
  grid.reserve(members.size() * (members.size() - 1) / 2);
  for (const auto& p : members) {
    for (const auto& q : members) {
      if (precedes(p.x, q.x)) grid.emplace_back(p.x, q.y);
    }
  }
  std::sort(grid.begin(), grid.end(), CanonicalLess{});
  return grid;
}

DnColoring::DnColoring(int n, int r, std::vector<std::uint8_t> colors)
    : n_(n), r_(r), colors_(std::move(colors)) {
  if (n < 1 || n > kMaxColoredDim) {
    throw Error(ErrorCode::ResourceLimit, "D(n) colorings support 1 <= n <= 12");
  }
  if (r < 1 || r > 255) throw Error(ErrorCode::InvalidArgument, "color count must be in 1..255");
  const std::size_t expected = std::size_t{1} << (2 * n);
  if (colors_.size() != expected) {
    throw Error(ErrorCode::DegenerateColoring, "coloring of D(" + std::to_string(n) + ") needs " +
                                                   std::to_string(expected) + " entries, got " +
                                                   std::to_string(colors_.size()));
  }
  for (auto c : colors_) {
    if (c >= r) throw Error(ErrorCode::DegenerateColoring, "color value out of range");
  }
}

DnColoring DnColoring::constant(int n, int r, std::uint8_t color) {
  return DnColoring(n, r, std::vector<std::uint8_t>(std::size_t{1} << (2 * n), color));
}

}  // namespace hcube
