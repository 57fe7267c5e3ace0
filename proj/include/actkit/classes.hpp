#pragma once

#include <string>

#include "actkit/error.hpp"

namespace actkit {

// Act classes the toolkit can decide membership for.
//   Pr  projective: every indecomposable component is isomorphic to some eS
//   SF  strongly flat: conditions (P) and (E) together
//   CP  condition (P) alone
//   E   condition (E) alone
//   LC  locally cyclic: any two elements lie in a common cyclic subact
enum class ActClass { Pr, SF, CP, E, LC };

const char* class_name(ActClass c);
ActClass class_from_name(const std::string& name);

}  // namespace actkit
