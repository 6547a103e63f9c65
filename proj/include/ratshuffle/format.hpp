#pragma once

#include <string>

#include "ratshuffle/engine.hpp"
#include "ratshuffle/symfunc.hpp"

namespace ratshuffle {

// "[2,2,1]", "[]" for the empty partition.
std::string to_string(const Partition& p);

// Monomials ordered by q exponent descending then t descending, e.g.
// "q^2+q*t+t^2"; the zero polynomial prints as "0".
std::string to_string(const CoeffPoly& p);

// "(q^2+q*t+t^2)*s[5] + (q+t)*s[4,1] + s[3,2]"; terms follow the canonical
// partition order.
std::string to_string(const SchurExpansion& e);

}  // namespace ratshuffle
