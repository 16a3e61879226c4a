#pragma once

#include <vector>

#include "classify/classify.hpp"

namespace sextic {

/// Rational linear factors (primitive) of a square-free form, including y
/// when y divides it.
std::vector<BinaryForm> rational_linear_factors(const BinaryForm& a);

/// The form with its rational linear factors divided out, made primitive.
BinaryForm irrational_part(const BinaryForm& a);

/// f(sqrt k, 1) in Q(sqrt k).
QuadExt eval_at_sqrt(const BinaryForm& f, long k);

/// Square-free kernel of a positive integer (trial division).
Int squarefree_kernel(const Int& n);

}  // namespace sextic
