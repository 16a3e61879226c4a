#pragma once

#include <optional>

#include "classify/classify.hpp"

namespace corpus {

using sextic::Mp3Branch;
using sextic::Route;

struct Labelled {
  const char* poly;
  Route route;
  std::optional<Mp3Branch> branch = std::nullopt;
};

// Hand labels from the factor structure of F6 and the x-adic valuations of
// F5 and F4 after moving the repeated factor to x.
const Labelled kCorpus[] = {
    {"x^4 + y^4 + 1", Route::NotASextic},
    {"x^6 + y^6", Route::MP0},
    {"x^6 - y^6 + 1", Route::MP0},
    {"(x^3 - 2*y^3)^2 + x^2*y - 5", Route::MP1Cubic},
    {"(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5", Route::MP1Quadratic},
    {"(x^2 + y^2)^3 + x", Route::MP1Quadratic},
    {"x^2*(x^4 + y^4) + y^5", Route::MP1Linear},
    {"(x^2*y - y^2)^2 + x^2 + 1", Route::MP2},
    {"(y^2 - x^3 - x)^2 - y + 100", Route::MP3, Mp3Branch::Shape},
    {"x^6 - 3*x^2*y^2 + y^3", Route::MP3, Mp3Branch::WeightedCubic},
    {"x^6 + y^5", Route::MP3, Mp3Branch::Anisotropic},
    {"x^6 + x*y^3 + 1", Route::MP3, Mp3Branch::Degenerate},
    {"(2*x - y)^6 + x^4*y + 1", Route::MP3},
    {"x^5*y + 1", Route::PaperGap},
    {"x^3*(x^3 + y^3) + 1", Route::PaperGap},
    {"x^2*y^2*(x^2 - 3*y^2) + 1", Route::NotPositiveLeading},
};

}  // namespace corpus
