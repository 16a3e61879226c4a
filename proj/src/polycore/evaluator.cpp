#include "polycore/evaluator.hpp"

#include <algorithm>

namespace sextic {

PointEvaluator::PointEvaluator(const BivarPoly& f) : den_(f.common_denominator()) {
  int dx = f.is_zero() ? 0 : f.degree_x();
  rows_.assign(dx + 1, {});
  for (const auto& [e, c] : f.terms()) {
    auto& row = rows_[e.first];
    if (static_cast<int>(row.size()) <= e.second) row.resize(e.second + 1);
    Rat scaled = c * Rat(den_);
    row[e.second] = scaled.get_num();
  }
}

Int PointEvaluator::numerator(const Int& x, const Int& y) const {
  Int acc = 0;
  Int row_value;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    row_value = 0;
    for (auto c = it->rbegin(); c != it->rend(); ++c) {
      row_value *= y;
      row_value += *c;
    }
    acc *= x;
    acc += row_value;
  }
  return acc;
}

Rat PointEvaluator::operator()(const Int& x, const Int& y) const {
  return make_rat(numerator(x, y), den_);
}

std::vector<Int> PointEvaluator::column(const Int& x) const {
  std::size_t width = 0;
  for (const auto& row : rows_) width = std::max(width, row.size());
  std::vector<Int> out(width, Int(0));
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    for (auto& c : out) c *= x;
    for (std::size_t j = 0; j < it->size(); ++j) out[j] += (*it)[j];
  }
  return out;
}

}  // namespace sextic
