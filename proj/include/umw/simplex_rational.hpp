#pragma once

#include <gmpxx.h>

#include "umw/simplex.hpp"

namespace umw::lp {

template <>
struct ScalarTraits<mpq_class> {
  static bool positive(const mpq_class& x) { return sgn(x) > 0; }
  static bool negative(const mpq_class& x) { return sgn(x) < 0; }
  static bool zero(const mpq_class& x) { return sgn(x) == 0; }
};

}  // namespace umw::lp
