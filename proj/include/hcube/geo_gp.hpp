#pragma once

// Prime-exponent encoding of alphabet-4 words and monochromatic 3-term
// geometric progressions in colorings of [N] = {1, ..., N}.

#include "hcube/exact.hpp"
#include "hcube/hj_codec.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hcube::gp {

class PrimeBasis {
 public:
  /// The first n primes.
  explicit PrimeBasis(int n);

  int size() const noexcept { return static_cast<int>(primes_.size()); }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  std::uint64_t operator[](int i) const { return primes_.at(static_cast<std::size_t>(i)); }
  BigInt primorial() const;

 private:
  std::vector<std::uint64_t> primes_;
};

struct GPTriple {
  BigInt t1, t2, t3;
  Rational ratio;  // t2 / t1
};

/// prod_k p_k^(a_k).
BigInt encode_exponents(const hj::HJPoint& a, const PrimeBasis& basis);

/// Largest n with (p_1 ... p_n)^3 <= N.
int max_n_for(const BigInt& big_n);

bool verify_gp(const BigInt& t1, const BigInt& t2, const BigInt& t3);

/// Encodes the line's points in order. Throws InternalInvariant if the
/// product identity fails.
GPTriple hj_line_to_gp(const hj::HJLine& line, const PrimeBasis& basis);

/// Total coloring of {1, ..., N}; colors()[k - 1] is the color of k.
class IntervalColoring {
 public:
  IntervalColoring(std::uint64_t n, int r, std::vector<std::uint8_t> colors);

  std::uint64_t size() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  int color(std::uint64_t k) const;
  const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }

 private:
  std::uint64_t n_;
  int r_;
  std::vector<std::uint8_t> colors_;
};

struct GPResult {
  int n = 0;  // word length used, max_n_for(N)
  GPTriple triple;
  int color = 0;
  hj::HJLine line;
};

/// Pulls the coloring back to {0,1,2,3}^n (n = max_n_for(N)), pushes it to
/// D(n), searches for a monochromatic corner (degenerate roots allowed, so
/// every partial line is reachable) and maps it back to a progression.
/// Throws DomainTooSmall when n = 0.
std::optional<GPResult> find_mono_gp(const IntervalColoring& coloring, int r);

}  // namespace hcube::gp
