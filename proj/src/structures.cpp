#include "hcube/cube.hpp"
#include "hcube/detectors.hpp"
#include "hcube/error.hpp"
#include "hcube/hj_codec.hpp"
#include "hcube/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hcube::search {

std::string_view to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::dn: return "Dn";
    case DomainKind::alphabet4: return "alph4";
    case DomainKind::alphabet3: return "alph3";
    case DomainKind::segments: return "segments";
  }
  return "?";
}

std::string_view to_string(Target target) {
  switch (target) {
    case Target::corner: return "corner";
    case Target::tree: return "tree";
    case Target::scp: return "scp";
    case Target::sc4: return "sc4";
    case Target::coplanar6: return "coplanar6";
    case Target::hjline4: return "hjline4";
    case Target::hjline3: return "hjline3";
  }
  return "?";
}

DomainKind parse_domain_kind(std::string_view text) {
  for (auto k : {DomainKind::dn, DomainKind::alphabet4, DomainKind::alphabet3, DomainKind::segments}) {
    if (text == to_string(k)) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown search domain '" + std::string(text) + "'");
}

Target parse_target(std::string_view text) {
  for (auto t : {Target::corner, Target::tree, Target::scp, Target::sc4, Target::coplanar6, Target::hjline4,
                 Target::hjline3}) {
    if (text == to_string(t)) return t;
  }
  throw Error(ErrorCode::ParseError, "unknown target '" + std::string(text) + "'");
}

DomainKind default_domain(Target target) {
  switch (target) {
    case Target::corner:
    case Target::tree: return DomainKind::dn;
    case Target::hjline4: return DomainKind::alphabet4;
    case Target::hjline3: return DomainKind::alphabet3;
    case Target::scp:
    case Target::sc4:
    case Target::coplanar6: return DomainKind::segments;
  }
  return DomainKind::dn;
}

bool compatible(DomainKind kind, Target target) { return default_domain(target) == kind; }

namespace {

std::size_t ipow_size(std::size_t base, int e) {
  std::size_t v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

}  // namespace

void Domain::validate() const {
  int max_n = 0;
  switch (kind) {
    case DomainKind::dn: max_n = 6; break;
    case DomainKind::alphabet4: max_n = 6; break;
    case DomainKind::alphabet3: max_n = 7; break;
    case DomainKind::segments: max_n = 5; break;
  }
  if (n < 1 || n > max_n) {
    throw Error(ErrorCode::ResourceLimit, std::string(to_string(kind)) + " search domain supports 1 <= n <= " +
                                              std::to_string(max_n));
  }
}

std::size_t Domain::size() const {
  const std::size_t v = std::size_t{1} << n;
  switch (kind) {
    case DomainKind::dn: return v * v - v;
    case DomainKind::alphabet4: return ipow_size(4, n);
    case DomainKind::alphabet3: return ipow_size(3, n);
    case DomainKind::segments: return v * (v - 1) / 2;
  }
  return 0;
}

std::size_t Domain::file_size() const {
  if (kind == DomainKind::dn) return std::size_t{1} << (2 * n);
  return size();
}

std::size_t Domain::file_index(std::size_t local) const {
  if (kind != DomainKind::dn) return local;
  // The k-th nondegenerate point skips the degenerate indices j*(2^n + 1).
  const std::size_t v = std::size_t{1} << n;
  const std::size_t x = local / (v - 1);
  const std::size_t rest = local % (v - 1);
  const std::size_t y = rest < x ? rest : rest + 1;
  return x * v + y;
}

std::size_t segment_rank(int n, std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  const std::uint64_t v = std::uint64_t{1} << n;
  if (a == b || b >= v) throw Error(ErrorCode::InvalidArgument, "segment endpoints must be distinct vertices");
  return static_cast<std::size_t>(a * v - a * (a + 1) / 2 + (b - a - 1));
}

std::pair<std::uint64_t, std::uint64_t> segment_unrank(int n, std::size_t rank) {
  const std::uint64_t v = std::uint64_t{1} << n;
  std::uint64_t a = 0;
  std::uint64_t r = rank;
  while (a + 1 < v && r >= v - a - 1) {
    r -= v - a - 1;
    ++a;
  }
  if (a + 1 >= v) throw Error(ErrorCode::InvalidArgument, "segment rank out of range");
  return {a, a + 1 + r};
}

namespace {

std::uint32_t dn_local(int /*n*/, const DiagPoint& p) {
  const std::uint64_t x = p.x.value();
  const std::uint64_t y = p.y.value();
  return static_cast<std::uint32_t>(p.canonical_index() - x - (y > x ? 1 : 0));
}

using Structures = std::set<std::vector<std::uint32_t>>;

void add(Structures& out, std::vector<std::uint32_t> s) {
  std::sort(s.begin(), s.end());
  out.insert(std::move(s));
}

void dn_corners(int n, Structures& out) {
  for (const auto& line : enumerate_lines(n, 1)) {
    const auto pts = line_points(line);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        for (const DiagPoint& root : {DiagPoint(pts[i].x, pts[j].y), DiagPoint(pts[j].x, pts[i].y)}) {
          if (root.degenerate()) continue;
          add(out, {dn_local(n, root), dn_local(n, pts[i]), dn_local(n, pts[j])});
        }
      }
    }
  }
}

void dn_tree_chains(const DiagPoint& root, std::vector<BitWord>& masks, const BitWord& prev, int m, Structures& out) {
  const int n = root.size();
  if (static_cast<int>(masks.size()) == m) {
    auto tree = tree_from_chain(root, masks);
    if (tree && validate_tree(*tree)) {
      std::vector<std::uint32_t> s;
      for (const auto& level : tree->levels) {
        for (const auto& p : level) s.push_back(dn_local(n, p));
      }
      add(out, std::move(s));
    }
    return;
  }
  const std::uint64_t comp = ~prev.value() & BitWord::ones(n).value();
  if (comp == 0) return;
  std::uint64_t s = (0 - comp) & comp;
  while (true) {
    BitWord mask(n, prev.value() | s);
    masks.push_back(mask);
    dn_tree_chains(root, masks, mask, m, out);
    masks.pop_back();
    if (s == comp) break;
    s = (s - comp) & comp;
  }
}

void dn_trees(int n, int m, Structures& out) {
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const DiagPoint root = DiagPoint::from_index(n, idx);
    if (root.degenerate()) continue;
    std::vector<BitWord> masks;
    dn_tree_chains(root, masks, root.x ^ root.y, m, out);
  }
}

// Column choices: constants 0..alphabet-1, then the non-constant patterns.
void hj_lines(int n, int alphabet, const std::vector<std::array<int, 3>>& patterns, Structures& out) {
  std::vector<std::array<int, 3>> choices;
  for (int a = 0; a < alphabet; ++a) choices.push_back({a, a, a});
  choices.insert(choices.end(), patterns.begin(), patterns.end());
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    bool active = false;
    std::array<std::uint64_t, 3> idx{0, 0, 0};
    for (std::size_t pos = 0; pos < pick.size(); ++pos) {
      const auto& col = choices[pick[pos]];
      if (pick[pos] >= static_cast<std::size_t>(alphabet)) active = true;
      for (std::size_t t = 0; t < 3; ++t) idx[t] = idx[t] * static_cast<std::uint64_t>(alphabet) + col[t];
    }
    if (active) {
      add(out, {static_cast<std::uint32_t>(idx[0]), static_cast<std::uint32_t>(idx[1]),
                static_cast<std::uint32_t>(idx[2])});
    }
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == choices.size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
}

std::uint32_t seg(int n, std::uint64_t a, std::uint64_t b) { return static_cast<std::uint32_t>(segment_rank(n, a, b)); }

void self_crossing_paths(int n, bool closed, Structures& out) {
  const std::uint64_t v = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < v; ++mask) {
    for (std::uint64_t x = 0; x < v; ++x) {
      const std::uint64_t y = x ^ mask;
      // z agrees with x off the mask and differs from x and y.
      for (std::uint64_t s = (0 - mask) & mask; s != mask; s = (s - mask) & mask) {
        const std::uint64_t z = x ^ s;
        const std::uint64_t w = z ^ mask;
        std::vector<std::uint32_t> segs{seg(n, x, y), seg(n, y, z), seg(n, z, w)};
        if (closed) segs.push_back(seg(n, w, x));
        add(out, std::move(segs));
      }
    }
  }
}

void coplanar_sixes(int n, Structures& out) {
  const std::uint64_t v = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < v; ++a) {
    for (std::uint64_t b = a + 1; b < v; ++b) {
      for (std::uint64_t c = b + 1; c < v; ++c) {
        for (std::uint64_t d = c + 1; d < v; ++d) {
          if (!is_coplanar(BitWord(n, a), BitWord(n, b), BitWord(n, c), BitWord(n, d))) continue;
          add(out, {seg(n, a, b), seg(n, a, c), seg(n, a, d), seg(n, b, c), seg(n, b, d), seg(n, c, d)});
        }
      }
    }
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_structures(const Domain& domain, Target target, int tree_m) {
  domain.validate();
  if (!compatible(domain.kind, target)) {
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(target)) + " is not defined on " +
                                                std::string(to_string(domain.kind)));
  }
  Structures out;
  const int n = domain.n;
  switch (target) {
    case Target::corner: dn_corners(n, out); break;
    case Target::tree:
      if (tree_m < 1 || tree_m > 3) throw Error(ErrorCode::ResourceLimit, "tree targets support 1 <= m <= 3");
      dn_trees(n, tree_m, out);
      break;
    case Target::hjline4: hj_lines(n, 4, {{0, 1, 2}, {3, 2, 1}}, out); break;
    case Target::hjline3: hj_lines(n, 3, {{0, 1, 2}, {0, 2, 1}}, out); break;
    case Target::scp: self_crossing_paths(n, false, out); break;
    case Target::sc4: self_crossing_paths(n, true, out); break;
    case Target::coplanar6: coplanar_sixes(n, out); break;
  }
  return {out.begin(), out.end()};
}

namespace {

std::uint64_t permute_bits(int n, std::uint64_t value, const std::vector<int>& perm) {
  // Bit at position i (0-based from the left) moves to position perm[i].
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    if ((value >> (n - 1 - i)) & 1U) out |= std::uint64_t{1} << (n - 1 - perm[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> symmetry_maps(const Domain& domain, bool complementations) {
  domain.validate();
  const int n = domain.n;
  const std::size_t size = domain.size();
  const bool flips = complementations && domain.kind != DomainKind::alphabet3;
  const std::uint64_t flip_count = flips ? (std::uint64_t{1} << n) : 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint32_t>> maps;
  do {
    for (std::uint64_t f = 0; f < flip_count; ++f) {
      std::vector<std::uint32_t> map(size);
      bool identity = true;
      for (std::size_t i = 0; i < size; ++i) {
        std::size_t image = 0;
        switch (domain.kind) {
          case DomainKind::dn: {
            const DiagPoint p = DiagPoint::from_index(n, domain.file_index(i));
            const DiagPoint q(BitWord(n, permute_bits(n, p.x.value(), perm) ^ f),
                              BitWord(n, permute_bits(n, p.y.value(), perm) ^ f));
            image = dn_local(n, q);
            break;
          }
          case DomainKind::alphabet4:
          case DomainKind::alphabet3: {
            const int alphabet = domain.kind == DomainKind::alphabet4 ? 4 : 3;
            const hj::HJPoint p = hj::HJPoint::from_index(alphabet, n, i);
            std::vector<std::uint8_t> digits(static_cast<std::size_t>(n));
            for (int pos = 0; pos < n; ++pos) {
              std::uint8_t d = p.digits()[static_cast<std::size_t>(pos)];
              if ((f >> (n - 1 - pos)) & 1U) d = static_cast<std::uint8_t>(3 - d);
              digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(pos)])] = d;
            }
            image = hj::HJPoint(alphabet, std::move(digits)).index();
            break;
          }
          case DomainKind::segments: {
            const auto [a, b] = segment_unrank(n, i);
            image = segment_rank(n, permute_bits(n, a, perm) ^ f, permute_bits(n, b, perm) ^ f);
            break;
          }
        }
        map[i] = static_cast<std::uint32_t>(image);
        identity = identity && image == i;
      }
      if (!identity) maps.push_back(std::move(map));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

std::optional<std::vector<std::uint32_t>> find_monochromatic(const Domain& domain, Target target, int tree_m,
                                                              const std::vector<std::uint8_t>& local) {
  domain.validate();
  if (local.size() != domain.size()) throw Error(ErrorCode::DegenerateColoring, "coloring size differs from domain");
  const int n = domain.n;
  switch (target) {
    case Target::corner:
    case Target::tree: {
      int r = 1;
      for (auto c : local) r = std::max(r, c + 1);
      const DnColoring coloring(n, r, to_file_body(domain, local));
      std::vector<std::uint32_t> found;
      if (target == Target::corner) {
        auto corner = find_corner(coloring);
        if (!corner) return std::nullopt;
        for (const auto& p : corner->points()) found.push_back(dn_local(n, p));
      } else {
        auto tree = find_tree(coloring, tree_m);
        if (!tree) return std::nullopt;
        for (const auto& level : tree->levels) {
          for (const auto& p : level) found.push_back(dn_local(n, p));
        }
      }
      std::sort(found.begin(), found.end());
      return found;
    }
    case Target::hjline4:
    case Target::hjline3: {
      const int alphabet = target == Target::hjline4 ? 4 : 3;
      const std::size_t size = domain.size();
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
          if (local[j] != local[i]) continue;
          for (std::size_t k = j + 1; k < size; ++k) {
            if (local[k] != local[i]) continue;
            const auto a = hj::HJPoint::from_index(alphabet, n, i);
            const auto b = hj::HJPoint::from_index(alphabet, n, j);
            const auto c = hj::HJPoint::from_index(alphabet, n, k);
            const bool line = alphabet == 4 ? hj::is_hj_line4(a, b, c).has_value() : hj::is_hj_line3(a, b, c).has_value();
            if (line) {
              return std::vector<std::uint32_t>{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                                static_cast<std::uint32_t>(k)};
            }
          }
        }
      }
      return std::nullopt;
    }
    case Target::scp:
    case Target::sc4: {
      const bool closed = target == Target::sc4;
      const std::uint64_t v = std::uint64_t{1} << n;
      for (std::uint64_t x = 0; x < v; ++x) {
        for (std::uint64_t y = 0; y < v; ++y) {
          for (std::uint64_t z = 0; z < v; ++z) {
            for (std::uint64_t w = 0; w < v; ++w) {
              if (!is_self_crossing(BitWord(n, x), BitWord(n, y), BitWord(n, z), BitWord(n, w), closed)) continue;
              std::vector<std::uint32_t> segs{seg(n, x, y), seg(n, y, z), seg(n, z, w)};
              if (closed) segs.push_back(seg(n, w, x));
              if (std::all_of(segs.begin(), segs.end(), [&](auto s) { return local[s] == local[segs[0]]; })) {
                std::sort(segs.begin(), segs.end());
                return segs;
              }
            }
          }
        }
      }
      return std::nullopt;
    }
    case Target::coplanar6: {
      Structures all;
      coplanar_sixes(n, all);
      for (const auto& s : all) {
        if (std::all_of(s.begin(), s.end(), [&](auto i) { return local[i] == local[s[0]]; })) return s;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<std::uint8_t> to_file_body(const Domain& domain, const std::vector<std::uint8_t>& local) {
  std::vector<std::uint8_t> body(domain.file_size(), 0);
  for (std::size_t i = 0; i < local.size(); ++i) body[domain.file_index(i)] = local[i];
  return body;
}

std::vector<std::uint8_t> from_file_body(const Domain& domain, const std::vector<std::uint8_t>& body) {
  if (body.size() != domain.file_size()) throw Error(ErrorCode::DegenerateColoring, "body length differs from domain");
  std::vector<std::uint8_t> local(domain.size());
  for (std::size_t i = 0; i < local.size(); ++i) local[i] = body[domain.file_index(i)];
  return local;
}

}  // namespace hcube::search
