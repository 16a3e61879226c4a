#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycore/poly.hpp"

namespace sextic {

/// Default bitmap budget in bits: SEXTIC_SIEVE_MEM when set, else 2^31.
std::uint64_t default_memory_bits();

/// Enumeration box |x|, |y| <= bound. Certified boxes come with a proof
/// that every point outside takes values at or above the threshold.
struct EnumerationBox {
  std::int64_t bound = 0;
  bool certified = false;
  /// Certified lower bound for the minimum of the leading form on the
  /// unit sup-norm boundary, and its decimal value.
  std::optional<Rat> c_lower;
  std::string c_decimal;
  std::string justification;
};

/// Lower bound c for min F_d on max(|x|,|y|) = 1, exact up to `tolerance`.
/// Requires the leading form to be positive definite.
Rat leading_form_minimum(const BivarPoly& f, const Rat& tolerance = Rat(1, 1000000));

/// Smallest box outside of which F >= threshold, from the leading-form
/// minimum and the l1 norms of the lower homogeneous parts. nullopt when
/// the leading form is not positive definite.
std::optional<EnumerationBox> certified_box(const BivarPoly& f, const Int& threshold);

enum class CountMethod { Bitmap, SortedUnique };

struct DensityOptions {
  int workers = 1;
  std::uint64_t memory_bits = default_memory_bits();
  /// Overrides the automatic box when positive.
  std::int64_t box = 0;
  CountMethod method = CountMethod::Bitmap;
  /// Non-definite leading forms: |x| limit for branch-following points.
  std::int64_t branch_xmax = 1000000;
};

struct DensityReport {
  std::int64_t N = 0;
  /// Distinct integers in [N, 2N) taken by F on Z^2.
  std::int64_t count = 0;
  EnumerationBox box;
  std::uint64_t points_enumerated = 0;
  std::uint64_t branch_points = 0;
  std::string method;
  /// count * sqrt(log N) / N and count / N^(1/3).
  double landau_fit = 0;
  double cube_root_fit = 0;
};

DensityReport count_range(const BivarPoly& f, std::int64_t N, const DensityOptions& opt = {});

struct GrowthPoint {
  std::int64_t N;
  std::int64_t count;  // distinct values v with |v| <= N
  std::int64_t box;
};

struct GrowthFit {
  double slope = 0;
  double intercept = 0;
  std::vector<GrowthPoint> points;
};

/// Least-squares slope of log(count of distinct |v| <= N) against log N.
GrowthFit growth_exponent(const BivarPoly& f, const std::vector<std::int64_t>& Ns, int workers = 1);

struct LandauBaseline {
  std::int64_t n_max = 0;
  std::int64_t count = 0;  // n in [1, n_max] that are sums of two squares
  double ratio = 0;        // count / (n_max / sqrt(ln n_max))
};

/// Sieve: n is a sum of two squares iff every prime 3 mod 4 divides it to
/// an even power.
LandauBaseline landau_baseline(std::int64_t n_max, std::uint64_t memory_bits = default_memory_bits());

/// Sums of two squares in [1, n_max] by direct enumeration of a^2 + b^2.
std::vector<std::int64_t> two_squares_enumeration(std::int64_t n_max);
/// The same set from the sieve.
std::vector<std::int64_t> two_squares_sieve(std::int64_t n_max,
                                            std::uint64_t memory_bits = default_memory_bits());

struct StanleyRow {
  std::int64_t N;
  std::int64_t count;
  double normalized;  // count * sqrt(log N) / N
  bool certified;
};

struct StanleyProbe {
  std::vector<StanleyRow> rows;
  /// Nonincreasing from the first third of the ladder on.
  bool bounded_looking = false;
};

StanleyProbe stanley_probe(const BivarPoly& f, const std::vector<std::int64_t>& Ns,
                           const DensityOptions& opt = {});

nlohmann::json to_json(const DensityReport& r);
nlohmann::json to_json(const GrowthFit& g);
nlohmann::json to_json(const LandauBaseline& l);
nlohmann::json to_json(const StanleyProbe& s);
/// N,count,normalized rows with a header line.
std::string to_csv(const StanleyProbe& s);

}  // namespace sextic
