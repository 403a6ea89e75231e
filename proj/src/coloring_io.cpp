#include "hcube/coloring_io.hpp"

#include "hcube/error.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace hcube::io {

std::string_view to_string(FileDomain kind) {
  switch (kind) {
    case FileDomain::dn: return "Dn";
    case FileDomain::alph4: return "alph4";
    case FileDomain::alph3: return "alph3";
    case FileDomain::grid: return "grid";
    case FileDomain::interval: return "interval";
    case FileDomain::segments: return "segments";
  }
  return "?";
}

FileDomain parse_file_domain(std::string_view text) {
  for (auto k : {FileDomain::dn, FileDomain::alph4, FileDomain::alph3, FileDomain::grid, FileDomain::interval,
                 FileDomain::segments}) {
    if (text == to_string(k)) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown domain '" + std::string(text) + "'");
}

std::size_t ColoringFile::expected_size() const {
  auto need_n = [&](int max_n) {
    if (n < 1 || n > max_n) {
      throw Error(ErrorCode::InvalidArgument, std::string(to_string(domain)) + " needs 1 <= n <= " + std::to_string(max_n));
    }
  };
  switch (domain) {
    case FileDomain::dn: need_n(kMaxColoredDim); return std::size_t{1} << (2 * n);
    case FileDomain::alph4: need_n(12); return std::size_t{1} << (2 * n);
    case FileDomain::alph3: {
      need_n(15);
      std::size_t v = 1;
      for (int i = 0; i < n; ++i) v *= 3;
      return v;
    }
    case FileDomain::segments: {
      need_n(12);
      const std::size_t v = std::size_t{1} << n;
      return v * (v - 1) / 2;
    }
    case FileDomain::grid:
      if (a.empty() || b.empty()) throw Error(ErrorCode::InvalidArgument, "grid needs nonempty A and B");
      return a.size() * b.size();
    case FileDomain::interval:
      if (big_n < 1 || big_n > (std::uint64_t{1} << 28)) {
        throw Error(ErrorCode::InvalidArgument, "interval needs 1 <= N <= 2^28");
      }
      return static_cast<std::size_t>(big_n);
  }
  return 0;
}

namespace {

template <typename T>
T parse_number(const std::string& token, const std::string& what) {
  std::istringstream in(token);
  T v{};
  in >> v;
  if (!in || !in.eof()) throw Error(ErrorCode::ParseError, "bad " + what + ": '" + token + "'");
  return v;
}

}  // namespace

ColoringFile parse_coloring(std::istream& in) {
  ColoringFile file;
  std::string line;
  bool magic = false;
  bool have_domain = false;
  bool have_r = false;
  std::size_t count = 0;
  bool in_body = false;
  while (!in_body && std::getline(in, line)) {
    std::istringstream words(line);
    std::string key;
    if (!(words >> key) || key[0] == '#') continue;
    if (!magic) {
      std::string version;
      words >> version;
      if (key != "hcube-coloring" || version != "1") throw Error(ErrorCode::ParseError, "missing 'hcube-coloring 1' header");
      magic = true;
      continue;
    }
    std::vector<std::string> values;
    for (std::string w; words >> w;) values.push_back(w);
    auto single = [&]() -> const std::string& {
      if (values.size() != 1) throw Error(ErrorCode::ParseError, "'" + key + "' takes one value");
      return values[0];
    };
    if (key == "domain") {
      file.domain = parse_file_domain(single());
      have_domain = true;
    } else if (key == "n") {
      file.n = parse_number<int>(single(), "n");
    } else if (key == "N") {
      file.big_n = parse_number<std::uint64_t>(single(), "N");
    } else if (key == "A" || key == "B") {
      auto& dst = key == "A" ? file.a : file.b;
      for (const auto& v : values) dst.push_back(parse_number<std::int64_t>(v, key));
    } else if (key == "r") {
      file.r = parse_number<int>(single(), "r");
      have_r = true;
    } else if (key == "colors") {
      count = parse_number<std::size_t>(single(), "color count");
      in_body = true;
    } else {
      throw Error(ErrorCode::ParseError, "unknown header key '" + key + "'");
    }
  }
  if (!magic || !have_domain || !have_r || !in_body) {
    throw Error(ErrorCode::ParseError, "incomplete header (need domain, r and colors)");
  }
  if (file.r < 1 || file.r > 255) throw Error(ErrorCode::ParseError, "r must be in 1..255");
  if (file.domain == FileDomain::grid) {
    try {
      file.a = plane::NumberSet::from_unsorted(file.a).elements();
      file.b = plane::NumberSet::from_unsorted(file.b).elements();
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  std::size_t expected = 0;
  try {
    expected = file.expected_size();
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (count != expected) {
    throw Error(ErrorCode::ParseError, "colors count " + std::to_string(count) + " but the domain has " +
                                           std::to_string(expected) + " points");
  }
  file.body.reserve(count);
  for (std::string token; file.body.size() < count && in >> token;) {
    const int v = parse_number<int>(token, "color");
    if (v < 0 || v >= file.r) throw Error(ErrorCode::ParseError, "color " + token + " outside 0..r-1");
    file.body.push_back(static_cast<std::uint8_t>(v));
  }
  if (file.body.size() != count) {
    throw Error(ErrorCode::ParseError, "body truncated: " + std::to_string(file.body.size()) + " of " +
                                           std::to_string(count) + " values");
  }
  if (std::string extra; in >> extra) throw Error(ErrorCode::ParseError, "trailing data after the body");
  return file;
}

ColoringFile parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_coloring(in);
}

ColoringFile read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_coloring(in);
}

void write_coloring(std::ostream& out, const ColoringFile& file) {
  out << "hcube-coloring 1\n";
  out << "domain " << to_string(file.domain) << "\n";
  switch (file.domain) {
    case FileDomain::grid:
      out << "A";
      for (auto v : file.a) out << ' ' << v;
      out << "\nB";
      for (auto v : file.b) out << ' ' << v;
      out << "\n";
      break;
    case FileDomain::interval: out << "N " << file.big_n << "\n"; break;
    default: out << "n " << file.n << "\n"; break;
  }
  out << "r " << file.r << "\n";
  out << "colors " << file.body.size() << "\n";
  for (std::size_t i = 0; i < file.body.size(); ++i) {
    out << static_cast<int>(file.body[i]) << ((i + 1) % 64 == 0 || i + 1 == file.body.size() ? '\n' : ' ');
  }
}

std::string format_coloring(const ColoringFile& file) {
  std::ostringstream out;
  write_coloring(out, file);
  return out.str();
}

Scheme parse_scheme(std::string_view text) {
  if (text == "constant") return Scheme::constant;
  if (text == "random") return Scheme::random;
  throw Error(ErrorCode::ParseError, "scheme must be constant or random");
}

ColoringFile generate(ColoringFile header, Scheme scheme, std::uint64_t seed) {
  if (header.r < 1 || header.r > 255) throw Error(ErrorCode::InvalidArgument, "r must be in 1..255");
  if (header.domain == FileDomain::grid) {
    header.a = plane::NumberSet::from_unsorted(header.a).elements();
    header.b = plane::NumberSet::from_unsorted(header.b).elements();
  }
  const std::size_t size = header.expected_size();
  header.body.assign(size, 0);
  if (scheme == Scheme::random) {
    std::mt19937_64 rng(seed);
    for (auto& v : header.body) v = static_cast<std::uint8_t>(rng() % static_cast<std::uint64_t>(header.r));
  }
  return header;
}

namespace {

void require_domain(const ColoringFile& file, FileDomain kind) {
  if (file.domain != kind) {
    throw Error(ErrorCode::InvalidArgument, "expected a " + std::string(to_string(kind)) + " coloring, got " +
                                                std::string(to_string(file.domain)));
  }
}

}  // namespace

DnColoring to_dn(const ColoringFile& file) {
  require_domain(file, FileDomain::dn);
  return DnColoring(file.n, file.r, file.body);
}

plane::GridColoring to_grid(const ColoringFile& file) {
  require_domain(file, FileDomain::grid);
  return plane::GridColoring(plane::NumberSet(file.a), plane::NumberSet(file.b), file.r, file.body);
}

gp::IntervalColoring to_interval(const ColoringFile& file) {
  require_domain(file, FileDomain::interval);
  return gp::IntervalColoring(file.big_n, file.r, file.body);
}

search::Domain to_search_domain(const ColoringFile& file) {
  switch (file.domain) {
    case FileDomain::dn: return {search::DomainKind::dn, file.n};
    case FileDomain::alph4: return {search::DomainKind::alphabet4, file.n};
    case FileDomain::alph3: return {search::DomainKind::alphabet3, file.n};
    case FileDomain::segments: return {search::DomainKind::segments, file.n};
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, std::string(to_string(file.domain)) + " is not a structure-search domain");
}

ColoringFile from_search(const search::Domain& domain, int r, const std::vector<std::uint8_t>& local) {
  ColoringFile file;
  switch (domain.kind) {
    case search::DomainKind::dn: file.domain = FileDomain::dn; break;
    case search::DomainKind::alphabet4: file.domain = FileDomain::alph4; break;
    case search::DomainKind::alphabet3: file.domain = FileDomain::alph3; break;
    case search::DomainKind::segments: file.domain = FileDomain::segments; break;
  }
  file.n = domain.n;
  file.r = r;
  file.body = search::to_file_body(domain, local);
  return file;
}

Json to_json(const LineId& line) {
  return Json{{"flip_mask", line.flip_mask().str()}, {"fixed", line.fixed().str()}, {"dimension", line.dimension()},
              {"pattern", line.str()}};
}

Json to_json(const CornerWitness& corner) {
  Json j{{"root", corner.root.str()}, {"child_x", corner.child_x.str()}, {"child_y", corner.child_y.str()},
         {"line", to_json(line_of(corner.child_x))}};
  if (corner.color) j["color"] = *corner.color;
  return j;
}

Json to_json(const TreeWitness& tree) {
  Json levels = Json::array();
  for (const auto& level : tree.levels) {
    Json l = Json::array();
    for (const auto& p : level) l.push_back(p.str());
    levels.push_back(l);
  }
  Json lines = Json::array();
  for (const auto& line : tree.level_lines) lines.push_back(line.str());
  Json j{{"m", tree.m}, {"levels", levels}, {"level_lines", lines}};
  if (tree.color) j["color"] = *tree.color;
  return j;
}

Json to_json(const ExtractionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    std::size_t nondegenerate = 0;
    for (const auto& p : s.next_grid) nondegenerate += p.degenerate() ? 0 : 1;
    steps.push_back(Json{{"line", s.line.str()},
                         {"dimension", s.dimension},
                         {"color", s.color},
                         {"line_grid_count", s.line_grid_count},
                         {"popular_size", s.popular.size()},
                         {"next_grid_size", s.next_grid.size()},
                         {"next_grid_nondegenerate", nondegenerate},
                         {"alpha_next", hcube::to_string(s.alpha_next)}});
  }
  Json inequalities = Json::array();
  for (const auto& q : trace.inequalities) {
    inequalities.push_back(
        Json{{"step", q.step}, {"name", q.name}, {"lhs", hcube::to_string(q.lhs)}, {"rhs", hcube::to_string(q.rhs)}, {"holds", q.holds}});
  }
  Json j{{"mode", trace.params.mode == ExtractionMode::faithful ? "faithful" : "greedy"},
         {"r", trace.params.r},
         {"m", trace.params.m},
         {"steps", steps},
         {"inequalities", inequalities}};
  if (trace.witness) {
    j["witness"] = to_json(*trace.witness);
    j["chosen_steps"] = trace.chosen_steps;
  }
  if (trace.failure) {
    j["failure"] = Json{{"code", std::string(hcube::to_string(trace.failure->code))}, {"message", trace.failure->message}};
  }
  return j;
}

Json to_json(const plane::PlaneCorner& c) {
  Json j{{"a", c.a}, {"b", c.b}, {"d", c.d},
         {"points", Json::array({Json::array({c.a, c.b}), Json::array({c.a + c.d, c.b}), Json::array({c.a, c.b + c.d})})}};
  if (c.color) j["color"] = *c.color;
  return j;
}

Json to_json(const plane::CornerExtraction& extraction) {
  Json rounds = Json::array();
  for (const auto& r : extraction.rounds) {
    rounds.push_back(Json{{"line_sum", r.line_sum},
                          {"line_count", r.line_count},
                          {"color", r.color},
                          {"popular_size", r.popular.size()},
                          {"grid_size", r.grid.size()}});
  }
  Json j{{"rounds", rounds}, {"found_in_sweep", extraction.found_in_sweep}};
  if (extraction.corner) j["witness"] = to_json(*extraction.corner);
  return j;
}

Json to_json(const hj::HJLine& line) {
  return Json::array({line.points[0].str(), line.points[1].str(), line.points[2].str()});
}

Json to_json(const gp::GPResult& result) {
  return Json{{"n", result.n},
              {"terms", Json::array({result.triple.t1.str(), result.triple.t2.str(), result.triple.t3.str()})},
              {"ratio", hcube::to_string(result.triple.ratio)},
              {"color", result.color},
              {"line", to_json(result.line)}};
}

Json to_json(const search::SearchOutcome& outcome) {
  return Json{{"status", std::string(search::to_string(outcome.status))},
              {"nodes", outcome.nodes},
              {"structures", outcome.structures}};
}

}  // namespace hcube::io
