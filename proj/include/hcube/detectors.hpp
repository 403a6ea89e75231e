#pragma once

// Predicates and brute-force finders for monochromatic structures in D(n)
// and in the segment set of the n-cube.

#include "hcube/cube.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace hcube {

/// (X,Y), (X',Y), (X,Y') with (X',Y) and (X,Y') on one line.
struct CornerWitness {
  DiagPoint root;
  DiagPoint child_x;  // (X', Y): shares y with the root
  DiagPoint child_y;  // (X, Y'): shares x with the root
  std::optional<int> color;

  std::array<DiagPoint, 3> points() const { return {root, child_x, child_y}; }
};

struct CornerOptions {
  /// Accept a degenerate root (X, X). Children always lie on a line with
  /// I nonempty, so they are never degenerate.
  bool allow_degenerate_root = false;
};

/// Checks the corner conditions for a fixed role assignment.
bool corner_roles_hold(const DiagPoint& root, const DiagPoint& child_x, const DiagPoint& child_y,
                       CornerOptions options = {});

/// Searches all role assignments of the three points. The result does not
/// depend on the argument order.
std::optional<CornerWitness> is_corner(const DiagPoint& a, const DiagPoint& b, const DiagPoint& c,
                                       CornerOptions options = {});

/// B(m): level k holds 2^k points; node j at level k has children 2j
/// (shares x with it) and 2j+1 (shares y with it) at level k+1.
struct TreeWitness {
  int m = 0;
  std::vector<std::vector<DiagPoint>> levels;
  std::vector<LineId> level_lines;  // one per level, level_lines[0] is the root's line
  std::optional<int> color;

  std::size_t point_count() const;
};

enum class TreeCheck {
  strict,            // level lines and every parent/children triple is a corner
  level_lines_only,  // only the per-level common line condition
};

/// Throws MalformedWitness when the level shape is wrong.
bool validate_tree(const TreeWitness& tree, TreeCheck check = TreeCheck::strict);
bool validate_tree(const TreeWitness& tree, const DnColoring& coloring,
                   TreeCheck check = TreeCheck::strict);

/// Packages a corner as a one-level tree.
TreeWitness tree_from_corner(const CornerWitness& corner);

/// The tree determined by its root and the flip masks of levels 1..m.
/// Level k+1 lies on the line with mask masks[k] through the level-k fixed
/// part. Returns nullopt when a mask is not a proper superset of the previous
/// level's mask.
std::optional<TreeWitness> tree_from_chain(const DiagPoint& root, std::span<const BitWord> masks);

/// First monochromatic corner in scan order: lines in enumeration order, then
/// point pairs by canonical index, root (p.x, q.y) before (q.x, p.y).
/// Requires n <= 8.
std::optional<CornerWitness> find_corner(const DnColoring& coloring, CornerOptions options = {});

/// First monochromatic B(m): roots by canonical index, then level masks in
/// ascending numeric order. Requires n <= 6 and 1 <= m <= 3.
std::optional<TreeWitness> find_tree(const DnColoring& coloring, int m);

enum class PathKind { self_crossing_path, self_crossing_4cycle };

struct PathWitness {
  BitWord x, y, z, w;
  PathKind kind = PathKind::self_crossing_path;
  BitWord subcube_mask;  // I: the free coordinates of the shared subcube
};

/// {x,y}, {y,z}, {z,w} with {x,y} and {z,w} main diagonals of one affine
/// subcube; closed adds the segment {w,x}.
std::optional<PathWitness> is_self_crossing(const BitWord& x, const BitWord& y, const BitWord& z,
                                            const BitWord& w, bool closed);

/// Rank over Q of the integer difference vectors v2-v1, v3-v1, v4-v1 is <= 2.
/// Vertices that are not pairwise distinct are not a coplanar quadruple.
bool is_coplanar(const BitWord& v1, const BitWord& v2, const BitWord& v3, const BitWord& v4);

/// Exact rank of a small integer matrix (fraction-free elimination).
int integer_rank(std::vector<std::vector<long long>> rows);

/// Undirected segment {a, b}, endpoints sorted by TotalOrder.
struct Segment {
  BitWord a;
  BitWord b;

  static Segment make(const BitWord& u, const BitWord& v);
  friend bool operator==(const Segment&, const Segment&) = default;
};

}  // namespace hcube
