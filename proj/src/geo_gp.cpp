#include "hcube/geo_gp.hpp"

#include "hcube/detectors.hpp"
#include "hcube/error.hpp"

namespace hcube::gp {

PrimeBasis::PrimeBasis(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "prime count must be nonnegative");
  for (std::uint64_t c = 2; static_cast<int>(primes_.size()) < n; ++c) {
    bool prime = true;
    for (auto p : primes_) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes_.push_back(c);
  }
}

BigInt PrimeBasis::primorial() const {
  BigInt v = 1;
  for (auto p : primes_) v *= p;
  return v;
}

BigInt encode_exponents(const hj::HJPoint& a, const PrimeBasis& basis) {
  if (a.size() != basis.size()) throw Error(ErrorCode::DimensionMismatch, "word length differs from basis size");
  BigInt v = 1;
  for (int k = 0; k < a.size(); ++k) v *= ipow(BigInt(basis[k]), a.digits()[static_cast<std::size_t>(k)]);
  return v;
}

int max_n_for(const BigInt& big_n) {
  if (big_n < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");
  int n = 0;
  BigInt primorial = 1;
  for (std::uint64_t c = 2;; ++c) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= c; ++d) {
      if (c % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    primorial *= c;
    if (primorial * primorial * primorial > big_n) return n;
    ++n;
  }
}

bool verify_gp(const BigInt& t1, const BigInt& t2, const BigInt& t3) {
  if (t1 <= 0 || t2 <= 0 || t3 <= 0) return false;
  if (t1 == t2 || t2 == t3 || t1 == t3) return false;
  return t2 * t2 == t1 * t3;
}

GPTriple hj_line_to_gp(const hj::HJLine& line, const PrimeBasis& basis) {
  GPTriple t{encode_exponents(line.points[0], basis), encode_exponents(line.points[1], basis),
             encode_exponents(line.points[2], basis), Rational(0)};
  if (!verify_gp(t.t1, t.t2, t.t3)) {
    throw Error(ErrorCode::InternalInvariant, "encoded line is not a geometric progression");
  }
  t.ratio = Rational(t.t2, t.t1);
  return t;
}

IntervalColoring::IntervalColoring(std::uint64_t n, int r, std::vector<std::uint8_t> colors)
    : n_(n), r_(r), colors_(std::move(colors)) {
  if (r < 1 || r > 255) throw Error(ErrorCode::InvalidArgument, "color count must be in 1..255");
  if (colors_.size() != n_) throw Error(ErrorCode::DegenerateColoring, "interval coloring needs N entries");
  for (auto c : colors_) {
    if (c >= r) throw Error(ErrorCode::DegenerateColoring, "color value out of range");
  }
}

int IntervalColoring::color(std::uint64_t k) const {
  if (k < 1 || k > n_) throw Error(ErrorCode::InvalidArgument, "value outside [1, N]");
  return colors_[k - 1];
}

std::optional<GPResult> find_mono_gp(const IntervalColoring& coloring, int r) {
  if (coloring.r() > r) throw Error(ErrorCode::DegenerateColoring, "coloring uses more than r colors");
  const int n = max_n_for(BigInt(coloring.size()));
  if (n == 0) throw Error(ErrorCode::DomainTooSmall, "N = " + std::to_string(coloring.size()) + " admits no word length");
  if (n > 8) throw Error(ErrorCode::ResourceLimit, "word length above 8");
  const PrimeBasis basis(n);

  // Pull back to D(n) through the digit bijection; every encoded value is <= N.
  std::vector<std::uint8_t> pulled(std::size_t{1} << (2 * n));
  for (std::uint64_t idx = 0; idx < pulled.size(); ++idx) {
    const hj::HJPoint word = hj::decode4(DiagPoint::from_index(n, idx));
    pulled[idx] = static_cast<std::uint8_t>(coloring.color(static_cast<std::uint64_t>(encode_exponents(word, basis))));
  }
  const DnColoring dn(n, coloring.r(), std::move(pulled));
  const auto corner = find_corner(dn, CornerOptions{.allow_degenerate_root = true});
  if (!corner) return std::nullopt;

  GPResult result;
  result.n = n;
  result.line = hj::corner_to_hj_line(*corner);
  result.triple = hj_line_to_gp(result.line, basis);
  result.color = coloring.color(static_cast<std::uint64_t>(result.triple.t1));
  if (coloring.color(static_cast<std::uint64_t>(result.triple.t2)) != result.color ||
      coloring.color(static_cast<std::uint64_t>(result.triple.t3)) != result.color) {
    throw Error(ErrorCode::InternalInvariant, "progression is not monochromatic in the input coloring");
  }
  return result;
}

}  // namespace hcube::gp
