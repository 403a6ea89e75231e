#include "hcube/detectors.hpp"

#include "hcube/error.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace hcube {

namespace {

void require_dim(const DiagPoint& a, const DiagPoint& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "points from D(" + std::to_string(a.size()) + ") and D(" + std::to_string(b.size()) + ")");
  }
}

}  // namespace

bool corner_roles_hold(const DiagPoint& root, const DiagPoint& child_x, const DiagPoint& child_y,
                       CornerOptions options) {
  require_dim(root, child_x);
  require_dim(root, child_y);
  if (root.degenerate() && !options.allow_degenerate_root) return false;
  if (child_x.degenerate() || child_y.degenerate()) return false;
  if (child_x.y != root.y || child_y.x != root.x) return false;
  if (child_x.x == root.x || child_y.y == root.y) return false;
  return line_of(child_x) == line_of(child_y);
}

std::optional<CornerWitness> is_corner(const DiagPoint& a, const DiagPoint& b, const DiagPoint& c,
                                       CornerOptions options) {
  require_dim(a, b);
  require_dim(a, c);
  if (a == b || a == c || b == c) return std::nullopt;
  std::array<DiagPoint, 3> pts{a, b, c};
  std::sort(pts.begin(), pts.end(), CanonicalLess{});
  static constexpr std::array<std::array<int, 3>, 6> kRoles{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& role : kRoles) {
    const auto& root = pts[role[0]];
    const auto& cx = pts[role[1]];
    const auto& cy = pts[role[2]];
    if (corner_roles_hold(root, cx, cy, options)) return CornerWitness{root, cx, cy, std::nullopt};
  }
  return std::nullopt;
}

std::size_t TreeWitness::point_count() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

bool validate_tree(const TreeWitness& tree, TreeCheck check) {
  if (tree.m < 1) throw Error(ErrorCode::MalformedWitness, "a tree has at least one level");
  if (tree.levels.size() != static_cast<std::size_t>(tree.m) + 1 ||
      tree.level_lines.size() != tree.levels.size()) {
    throw Error(ErrorCode::MalformedWitness, "expected m+1 levels and level lines");
  }
  for (std::size_t k = 0; k < tree.levels.size(); ++k) {
    if (tree.levels[k].size() != (std::size_t{1} << k)) {
      throw Error(ErrorCode::MalformedWitness, "level " + std::to_string(k) + " must hold 2^k points");
    }
  }
  const int n = tree.levels[0][0].size();
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t k = 0; k < tree.levels.size(); ++k) {
    const LineId& line = tree.level_lines[k];
    if (line.size_n() != n) return false;
    for (const auto& p : tree.levels[k]) {
      if (p.size() != n || p.degenerate()) return false;
      if (!seen.insert(p.canonical_index()).second) return false;
      if (line_of(p) != line) return false;
    }
  }
  if (check == TreeCheck::level_lines_only) return true;
  for (std::size_t k = 0; k + 1 < tree.levels.size(); ++k) {
    const auto& parents = tree.levels[k];
    const auto& children = tree.levels[k + 1];
    for (std::size_t j = 0; j < parents.size(); ++j) {
      const auto& first = children[2 * j];
      const auto& second = children[2 * j + 1];
      if (!corner_roles_hold(parents[j], second, first) && !corner_roles_hold(parents[j], first, second)) {
        return false;
      }
    }
  }
  return true;
}

bool validate_tree(const TreeWitness& tree, const DnColoring& coloring, TreeCheck check) {
  if (!validate_tree(tree, check)) return false;
  if (tree.levels[0][0].size() != coloring.n()) return false;
  const int c = coloring.color(tree.levels[0][0]);
  if (tree.color && *tree.color != c) return false;
  for (const auto& level : tree.levels) {
    for (const auto& p : level) {
      if (coloring.color(p) != c) return false;
    }
  }
  return true;
}

TreeWitness tree_from_corner(const CornerWitness& corner) {
  TreeWitness t;
  t.m = 1;
  t.levels = {{corner.root}, {corner.child_y, corner.child_x}};
  t.level_lines = {line_of(corner.root, true), line_of(corner.child_x)};
  t.color = corner.color;
  return t;
}

std::optional<TreeWitness> tree_from_chain(const DiagPoint& root, std::span<const BitWord> masks) {
  if (root.degenerate() || masks.empty()) return std::nullopt;
  TreeWitness t;
  t.m = static_cast<int>(masks.size());
  t.levels.push_back({root});
  t.level_lines.push_back(line_of(root));
  BitWord prev = root.x ^ root.y;
  for (const auto& mask : masks) {
    if (mask.size() != root.size()) throw Error(ErrorCode::DimensionMismatch, "mask length");
    if ((prev.value() & ~mask.value()) != 0 || prev == mask) return std::nullopt;
    const auto& parents = t.levels.back();
    std::vector<DiagPoint> next;
    next.reserve(parents.size() * 2);
    for (const auto& q : parents) {
      next.emplace_back(q.x, q.x ^ mask);
      next.emplace_back(q.y ^ mask, q.y);
    }
    t.level_lines.emplace_back(mask, parents.front().x & mask.complement());
    t.levels.push_back(std::move(next));
    prev = mask;
  }
  return t;
}

std::optional<CornerWitness> find_corner(const DnColoring& coloring, CornerOptions options) {
  const int n = coloring.n();
  if (n > 8) throw Error(ErrorCode::ResourceLimit, "find_corner supports n <= 8");
  for (const auto& line : enumerate_lines(n, 1)) {
    const auto pts = line_points(line);
    std::vector<int> colors(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) colors[i] = coloring.color(pts[i]);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (colors[i] != colors[j]) continue;
        const auto& p = pts[i];
        const auto& q = pts[j];
        const std::array<CornerWitness, 2> candidates{
            CornerWitness{DiagPoint(p.x, q.y), q, p, colors[i]},
            CornerWitness{DiagPoint(q.x, p.y), p, q, colors[i]}};
        for (const auto& cand : candidates) {
          if (cand.root.degenerate() && !options.allow_degenerate_root) continue;
          if (coloring.color(cand.root) != colors[i]) continue;
          if (!corner_roles_hold(cand.root, cand.child_x, cand.child_y, options)) {
            throw Error(ErrorCode::InternalInvariant, "scan produced a non-corner");
          }
          return cand;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

struct TreeSearch {
  const DnColoring& coloring;
  int m;
  int color = 0;
  std::vector<BitWord> masks;

  bool extend(const std::vector<DiagPoint>& level, const BitWord& prev) {
    if (static_cast<int>(masks.size()) == m) return true;
    const int n = coloring.n();
    const std::uint64_t comp = ~prev.value() & BitWord::ones(n).value();
    if (comp == 0) return false;
    // Proper supersets of prev, ascending.
    std::uint64_t s = (0 - comp) & comp;
    while (true) {
      BitWord mask(n, prev.value() | s);
      std::vector<DiagPoint> next;
      next.reserve(level.size() * 2);
      std::unordered_set<std::uint64_t> seen;
      bool ok = true;
      for (const auto& q : level) {
        for (DiagPoint child : {DiagPoint(q.x, q.x ^ mask), DiagPoint(q.y ^ mask, q.y)}) {
          if (coloring.color(child) != color || !seen.insert(child.canonical_index()).second) {
            ok = false;
            break;
          }
          next.push_back(child);
        }
        if (!ok) break;
      }
      if (ok) {
        masks.push_back(mask);
        if (extend(next, mask)) return true;
        masks.pop_back();
      }
      if (s == comp) break;
      s = (s - comp) & comp;
    }
    return false;
  }
};

}  // namespace

std::optional<TreeWitness> find_tree(const DnColoring& coloring, int m) {
  if (m < 1) throw Error(ErrorCode::MalformedWitness, "a tree has at least one level");
  if (coloring.n() > 6 || m > 3) throw Error(ErrorCode::ResourceLimit, "find_tree supports n <= 6, m <= 3");
  const int n = coloring.n();
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const DiagPoint root = DiagPoint::from_index(n, idx);
    if (root.degenerate()) continue;
    TreeSearch search{coloring, m, coloring.color(root), {}};
    if (!search.extend({root}, root.x ^ root.y)) continue;
    auto tree = tree_from_chain(root, search.masks);
    if (!tree) throw Error(ErrorCode::InternalInvariant, "chain rejected after search");
    tree->color = search.color;
    if (!validate_tree(*tree, coloring)) {
      throw Error(ErrorCode::InternalInvariant, "find_tree produced an invalid tree");
    }
    return tree;
  }
  return std::nullopt;
}

std::optional<PathWitness> is_self_crossing(const BitWord& x, const BitWord& y, const BitWord& z,
                                            const BitWord& w, bool closed) {
  if (x.size() != y.size() || x.size() != z.size() || x.size() != w.size()) {
    throw Error(ErrorCode::DimensionMismatch, "path vertices of different lengths");
  }
  const std::array<BitWord, 4> v{x, y, z, w};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return std::nullopt;
    }
  }
  const BitWord mask = x ^ y;
  if (mask.empty_set() || (z ^ w) != mask) return std::nullopt;
  if (((x ^ z).value() & ~mask.value()) != 0) return std::nullopt;
  return PathWitness{x, y, z, w, closed ? PathKind::self_crossing_4cycle : PathKind::self_crossing_path, mask};
}

int integer_rank(std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  long long prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const long long p = rows[rank][col];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const long long f = rows[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        // Bareiss step: exact division by the previous pivot.
        rows[i][j] = (rows[i][j] * p - rows[rank][j] * f) / prev_pivot;
      }
    }
    prev_pivot = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

bool is_coplanar(const BitWord& v1, const BitWord& v2, const BitWord& v3, const BitWord& v4) {
  const int n = v1.size();
  if (v2.size() != n || v3.size() != n || v4.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "vertices of different lengths");
  }
  const std::array<BitWord, 4> v{v1, v2, v3, v4};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  std::vector<std::vector<long long>> rows(3, std::vector<long long>(static_cast<std::size_t>(n)));
  for (std::size_t r = 0; r < 3; ++r) {
    for (int pos = 1; pos <= n; ++pos) {
      rows[r][static_cast<std::size_t>(pos - 1)] =
          static_cast<long long>(v[r + 1].bit(pos)) - static_cast<long long>(v[0].bit(pos));
    }
  }
  return integer_rank(std::move(rows)) <= 2;
}

Segment Segment::make(const BitWord& u, const BitWord& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "segment endpoints");
  if (u == v) throw Error(ErrorCode::InvalidArgument, "a segment needs two distinct endpoints");
  return precedes(u, v) ? Segment{u, v} : Segment{v, u};
}

}  // namespace hcube
