#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "actkit/error.hpp"

namespace actkit {

// Arbitrary-precision natural; the divisor search must not overflow silently.
using Nat = boost::multiprecision::cpp_int;

// Element q^p of the bicyclic monoid B = <p, q | pq = 1> in normal form.
struct BicyclicElement {
  Nat down;  // exponent of the left (annihilating) generator
  Nat up;    // exponent of the right generator

  bool operator==(const BicyclicElement& o) const {
    return down == o.down && up == o.up;
  }
  bool operator<(const BicyclicElement& o) const {
    return down != o.down ? down < o.down : up < o.up;
  }
};

BicyclicElement bicyclic_identity();

// (p,q)(s,t) = (p - q + max(q,s), t - s + max(q,s)).
BicyclicElement bicyclic_mul(const BicyclicElement& a,
                             const BicyclicElement& b);

// All x with x * by == target, both coordinates of x at most search_bound,
// ascending.  Requires search_bound >= max coordinate of target plus max
// coordinate of by; the result is then provably complete, and the function
// re-verifies completeness by refusing any run where a solution touches the
// boundary.  The list never has more than by.down + 1 entries: writing
// target = (m,n) and by = (s,t), a solution (p,q) has either q >= s, which
// forces (p,q) = (m, n+s-t), or q < s, which forces (p,q) = (m-s+q, q) with
// q ranging over 0..s-1.
std::vector<BicyclicElement> bicyclic_left_divisors(
    const BicyclicElement& target, const BicyclicElement& by,
    const Nat& search_bound);

}  // namespace actkit
