#include "hcube/grid_corners.hpp"

#include "hcube/error.hpp"

#include <algorithm>
#include <map>

namespace hcube::plane {

NumberSet::NumberSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i - 1] >= elements_[i]) {
      throw Error(ErrorCode::InvalidArgument, "number set must be strictly increasing");
    }
  }
}

NumberSet NumberSet::from_unsorted(std::vector<std::int64_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return NumberSet(std::move(elements));
}

NumberSet NumberSet::range(std::int64_t first, std::int64_t last) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = first; x <= last; ++x) v.push_back(x);
  return NumberSet(std::move(v));
}

bool NumberSet::contains(std::int64_t v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

std::size_t NumberSet::index_of(std::int64_t v) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
  if (it == elements_.end() || *it != v) return npos;
  return static_cast<std::size_t>(it - elements_.begin());
}

GridColoring::GridColoring(NumberSet a, NumberSet b, int r, std::vector<std::uint8_t> colors)
    : a_(std::move(a)), b_(std::move(b)), r_(r), colors_(std::move(colors)) {
  if (r < 1 || r > 255) throw Error(ErrorCode::InvalidArgument, "color count must be in 1..255");
  if (colors_.size() != a_.size() * b_.size()) {
    throw Error(ErrorCode::DegenerateColoring, "grid coloring needs |A|*|B| entries");
  }
  for (auto c : colors_) {
    if (c >= r) throw Error(ErrorCode::DegenerateColoring, "color value out of range");
  }
}

int GridColoring::color(std::int64_t a, std::int64_t b) const {
  const std::size_t i = a_.index_of(a);
  const std::size_t j = b_.index_of(b);
  if (i == NumberSet::npos || j == NumberSet::npos) {
    throw Error(ErrorCode::InvalidArgument, "point outside A x B");
  }
  return color_at(i, j);
}

bool validate_corner(const PlaneCorner& c, const NumberSet& a, const NumberSet& b) {
  return c.d > 0 && a.contains(c.a) && a.contains(c.a + c.d) && b.contains(c.b) && b.contains(c.b + c.d);
}

bool validate_corner(const PlaneCorner& c, const GridColoring& coloring) {
  if (!validate_corner(c, coloring.a_set(), coloring.b_set())) return false;
  const int k = coloring.color(c.a, c.b);
  if (c.color && *c.color != k) return false;
  return coloring.color(c.a + c.d, c.b) == k && coloring.color(c.a, c.b + c.d) == k;
}

std::optional<PlaneCorner> find_plane_corner(const GridColoring& coloring) {
  const auto& as = coloring.a_set();
  const auto& bs = coloring.b_set();
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      const int c = coloring.color_at(i, j);
      for (std::size_t k = i + 1; k < as.size(); ++k) {
        const std::int64_t d = as[k] - as[i];
        const std::size_t jb = bs.index_of(bs[j] + d);
        if (jb == NumberSet::npos) continue;
        if (coloring.color_at(k, j) == c && coloring.color_at(i, jb) == c) {
          return PlaneCorner{as[i], bs[j], d, c};
        }
      }
    }
  }
  return std::nullopt;
}

NumberSet sumset(const NumberSet& a, const NumberSet& b) {
  std::vector<std::int64_t> sums;
  sums.reserve(a.size() * b.size());
  for (auto x : a.elements()) {
    for (auto y : b.elements()) sums.push_back(x + y);
  }
  return NumberSet::from_unsorted(std::move(sums));
}

Rational delta_for(int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  return Rational(BigInt(1), pow2(static_cast<std::uint64_t>(r) + 1));
}

namespace {

std::vector<AntidiagonalLine> group_by_sum(const std::vector<PlanePoint>& pts) {
  std::map<std::int64_t, std::vector<PlanePoint>> groups;
  for (const auto& p : pts) groups[p.a + p.b].push_back(p);
  std::vector<AntidiagonalLine> out;
  for (auto& [sum, members] : groups) {
    std::sort(members.begin(), members.end(), [](const PlanePoint& x, const PlanePoint& y) { return x.a < y.a; });
    out.push_back({sum, std::move(members)});
  }
  return out;
}

}  // namespace

std::vector<AntidiagonalLine> antidiagonal_cover(const NumberSet& a, const NumberSet& b) {
  std::vector<PlanePoint> pts;
  for (auto x : a.elements()) {
    for (auto y : b.elements()) pts.push_back({x, y});
  }
  return group_by_sum(pts);
}

CornerExtraction extract_corner(const GridColoring& coloring, int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  if (coloring.r() > r) throw Error(ErrorCode::DegenerateColoring, "coloring uses more than r colors");
  CornerExtraction out;
  std::vector<PlanePoint> current;
  for (auto x : coloring.a_set().elements()) {
    for (auto y : coloring.b_set().elements()) current.push_back({x, y});
  }

  auto accept = [&](PlaneCorner corner) {
    if (!validate_corner(corner, coloring)) return false;
    out.corner = corner;
    return true;
  };

  while (!current.empty()) {
    auto lines = group_by_sum(current);
    // Heaviest line; the first maximum is the smallest sum.
    const auto heaviest = std::max_element(lines.begin(), lines.end(), [](const auto& x, const auto& y) {
      return x.points.size() < y.points.size();
    });
    CornerRound round;
    round.line_sum = heaviest->sum;
    round.line_count = heaviest->points.size();
    std::vector<std::size_t> counts(static_cast<std::size_t>(r), 0);
    for (const auto& p : heaviest->points) ++counts[static_cast<std::size_t>(coloring.color(p.a, p.b))];
    round.color = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    for (const auto& p : heaviest->points) {
      if (coloring.color(p.a, p.b) == round.color) round.popular.push_back(p);
    }

    // A recurring color: points of this popular set are roots of corners
    // whose other two points lie in the earlier popular set.
    for (const auto& earlier : out.rounds) {
      if (earlier.color != round.color) continue;
      for (const auto& p : round.popular) {
        PlaneCorner corner{p.a, p.b, earlier.line_sum - p.b - p.a, round.color};
        if (accept(corner)) {
          out.rounds.push_back(std::move(round));
          return out;
        }
      }
    }

    for (std::size_t i = 0; i < round.popular.size(); ++i) {
      for (std::size_t j = i + 1; j < round.popular.size(); ++j) {
        round.grid.push_back({round.popular[i].a, round.popular[j].b});
      }
    }
    std::sort(round.grid.begin(), round.grid.end(),
              [](const PlanePoint& x, const PlanePoint& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
    for (const auto& g : round.grid) {
      if (coloring.color(g.a, g.b) != round.color) continue;
      PlaneCorner corner{g.a, g.b, round.line_sum - g.b - g.a, round.color};
      if (accept(corner)) {
        out.rounds.push_back(std::move(round));
        return out;
      }
    }
    current = round.grid;
    out.rounds.push_back(std::move(round));
  }

  // The two non-root points of any corner share a line a + b = const, so the
  // grid check over all lines and color classes is exhaustive.
  auto lines = antidiagonal_cover(coloring.a_set(), coloring.b_set());
  std::stable_sort(lines.begin(), lines.end(),
                   [](const auto& x, const auto& y) { return x.points.size() > y.points.size(); });
  for (const auto& line : lines) {
    for (int c = 0; c < r; ++c) {
      std::vector<PlanePoint> cls;
      for (const auto& p : line.points) {
        if (coloring.color(p.a, p.b) == c) cls.push_back(p);
      }
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          const PlanePoint root{cls[i].a, cls[j].b};
          if (coloring.color(root.a, root.b) != c) continue;
          if (accept(PlaneCorner{root.a, root.b, cls[j].a - cls[i].a, c})) {
            out.found_in_sweep = true;
            return out;
          }
        }
      }
    }
  }
  return out;
}

Rational sr_exponent(int r, const Rational& delta) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  return Rational(1) - delta * Rational(pow2(static_cast<std::uint64_t>(r) + 1) - 1);
}

RationalPower sr_lower_bound(std::int64_t n, int r, const Rational& delta, const Rational& c_r) {
  if (n < 1 || delta <= 0 || c_r <= 0) throw Error(ErrorCode::InvalidArgument, "sr_lower_bound needs positive inputs");
  return RationalPower{c_r, BigInt(n), sr_exponent(r, delta)};
}

namespace {

std::uint64_t small_exponent(const BigInt& v) {
  if (v > 1'000'000) throw Error(ErrorCode::ResourceLimit, "exponent too large for exact comparison");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

int RationalPower::compare(const Rational& k) const {
  if (k <= 0) return 1;
  const Rational t = k / coefficient;
  const BigInt p = boost::multiprecision::numerator(exponent);
  const std::uint64_t q = small_exponent(boost::multiprecision::denominator(exponent));
  Rational lhs;
  Rational rhs = ipow(t, q);
  if (p >= 0) {
    lhs = Rational(ipow(base, small_exponent(p)));
  } else {
    lhs = Rational(1);
    rhs *= Rational(ipow(base, small_exponent(-p)));
  }
  if (lhs < rhs) return -1;
  return lhs > rhs ? 1 : 0;
}

std::optional<Rational> RationalPower::exact_value() const {
  const BigInt p = boost::multiprecision::numerator(exponent);
  const std::uint64_t q = small_exponent(boost::multiprecision::denominator(exponent));
  const BigInt root = integer_root_floor(base, static_cast<unsigned>(q));
  if (ipow(root, q) != base) return std::nullopt;
  if (p >= 0) return coefficient * Rational(ipow(root, small_exponent(p)));
  return coefficient / Rational(ipow(root, small_exponent(-p)));
}

BigInt doubling_recurrence(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  BigInt a = 1;
  for (int i = 1; i < k; ++i) a = 2 * a + 1;
  return a;
}

std::vector<std::int64_t> HilbertCube::sums() const {
  std::vector<std::int64_t> out{base};
  for (auto g : generators) {
    const std::size_t size = out.size();
    for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] + g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool cube_in_set(const HilbertCube& cube, const NumberSet& s) {
  for (auto g : cube.generators) {
    if (g <= 0) return false;
  }
  for (auto v : cube.sums()) {
    if (!s.contains(v)) return false;
  }
  return true;
}

namespace {

bool extend_cube(const NumberSet& s, const std::vector<std::int64_t>& diffs, std::size_t start, int remaining,
                 bool strict, std::vector<std::int64_t>& sums, std::vector<std::int64_t>& generators) {
  if (remaining == 0) return true;
  for (std::size_t i = start; i < diffs.size(); ++i) {
    const std::int64_t g = diffs[i];
    bool ok = true;
    for (auto v : sums) {
      if (!s.contains(v + g)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const std::size_t size = sums.size();
    for (std::size_t k = 0; k < size; ++k) sums.push_back(sums[k] + g);
    generators.push_back(g);
    if (extend_cube(s, diffs, strict ? i + 1 : i, remaining - 1, strict, sums, generators)) return true;
    generators.pop_back();
    sums.resize(size);
  }
  return false;
}

}  // namespace

std::optional<HilbertCube> find_hilbert_cube(const NumberSet& s, int m, bool strict) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "cube dimension must be nonnegative");
  if (m > 4 || s.size() > 64) throw Error(ErrorCode::ResourceLimit, "find_hilbert_cube supports m <= 4, |S| <= 64");
  for (std::size_t bi = 0; bi < s.size(); ++bi) {
    const std::int64_t base = s[bi];
    std::vector<std::int64_t> diffs;
    for (std::size_t j = bi + 1; j < s.size(); ++j) diffs.push_back(s[j] - base);
    std::vector<std::int64_t> sums{base};
    std::vector<std::int64_t> generators;
    if (extend_cube(s, diffs, 0, m, strict, sums, generators)) return HilbertCube{base, generators};
  }
  return std::nullopt;
}

}  // namespace hcube::plane
