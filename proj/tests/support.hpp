#pragma once

#include "contbern/format.hpp"
#include "contbern/numkernel.hpp"

#include <ostream>

namespace contbern {

inline std::ostream& operator<<(std::ostream& os, const Real& x) { return os << format::decimal(x, 20); }
inline std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << format::decimal(z.re, 20) << "," << format::decimal(z.im, 20);
}

}  // namespace contbern
