#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "polycore/evaluator.hpp"
#include "polycore/roots.hpp"
#include "witness/witness.hpp"

namespace sextic::detail {

/// First negative value and first value at or below the target, in the
/// order points are offered.
struct Tracker {
  explicit Tracker(Rat t) : target(std::move(t)) {}

  Rat target;
  std::optional<WitnessPoint> first_negative;
  std::optional<WitnessPoint> at_target;

  /// Returns true once the target is reached.
  bool offer(const Int& x, const Int& y, const Rat& value) {
    if (value < 0 && !first_negative) first_negative = WitnessPoint{x, y, value};
    if (value <= target && !at_target) at_target = WitnessPoint{x, y, value};
    return at_target.has_value();
  }
  bool done() const { return at_target.has_value(); }
  /// Folds in the tracker of a later schedule segment.
  bool absorb(const Tracker& later) {
    if (!first_negative && later.first_negative) first_negative = later.first_negative;
    if (!at_target && later.at_target) at_target = later.at_target;
    return done();
  }
};

/// Processes schedule indices 0..count-1 in batches, possibly in parallel,
/// and merges per-index states strictly in index order. Stops after the
/// first index whose merge returns true. The merged result is the same for
/// every worker count because every index before the stopping one is
/// always processed and merged. Returns the number of indices merged.
template <class State, class Work, class Merge>
long ordered_scan(long count, int workers, State init, Work work, Merge merge) {
  workers = std::max(1, workers);
  const long batch = workers == 1 ? 1 : 4L * workers;
  for (long start = 0; start < count; start += batch) {
    const long end = std::min(count, start + batch);
    std::vector<State> states(end - start, init);
    if (workers == 1 || end - start == 1) {
      for (long i = start; i < end; ++i) work(i, states[i - start]);
    } else {
      std::atomic<long> next{start};
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (long i; (i = next.fetch_add(1)) < end;) work(i, states[i - start]);
        });
      }
      for (auto& t : pool) t.join();
    }
    for (long i = start; i < end; ++i) {
      if (merge(std::move(states[i - start]))) return i + 1;
    }
  }
  return count;
}

/// Witness from a tracker: negative-value when any negative value was seen.
Witness from_tracker(const Tracker& t, const std::string& lemma, const std::string& note);

/// A real root direction of a binary form: the line x = alpha y.
struct Direction {
  bool rational = false;
  /// Rational directions: the primitive point (p, q) on the line, q >= 0.
  Int p, q;
  /// Irrational directions: the slope alpha = x / y.
  std::optional<IsolatingInterval> slope;
  int multiplicity = 0;
  std::string text;
};

std::vector<Direction> root_directions(const BinaryForm& form);

/// floor(alpha * y) for an irrational slope, refining the interval in place.
Int floor_times(IsolatingInterval& iv, const Int& y);

/// log |v| for a nonzero rational, safe for values beyond double range.
double log_abs(const Rat& v);

/// Homogeneous parts F_d(x, y), d = deg F down to 0, as exact strings.
nlohmann::json components_at(const BivarPoly& f, const Int& x, const Int& y);

/// Re-evaluates a witness found for g(X, Y) = F(map(X, Y)) on F itself.
Witness pull_back(Witness w, const BivarPoly& f,
                  const std::function<std::pair<Int, Int>(const Int&, const Int&)>& map);

nlohmann::json point_json(const WitnessPoint& p);

}  // namespace sextic::detail
