#pragma once

#include <memory>

#include "hhcoh/bimodule.hpp"

namespace hhcoh {

/// K[x]/(x^2) as a one-loop quiver algebra.
template <class F>
std::shared_ptr<const Algebra<F>> dual_numbers(F field);

/// The 2-periodic resolution Q_t = P_{0,0} with d alternating x(x)1 - 1(x)x and x(x)1 + 1(x)x.
template <class F>
BimoduleComplex<F> dual_numbers_resolution(std::shared_ptr<const Algebra<F>> A);

}  // namespace hhcoh
