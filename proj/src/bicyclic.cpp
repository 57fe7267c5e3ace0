#include "actkit/bicyclic.hpp"

#include <algorithm>

namespace actkit {

namespace {

void require_natural(const BicyclicElement& e, const char* who) {
  if (e.down < 0 || e.up < 0) {
    throw Error(errc::invalid_input,
                std::string(who) + ": coordinates must be natural numbers");
  }
}

}  // namespace

BicyclicElement bicyclic_identity() { return {0, 0}; }

BicyclicElement bicyclic_mul(const BicyclicElement& a,
                             const BicyclicElement& b) {
  require_natural(a, "bicyclic_mul");
  require_natural(b, "bicyclic_mul");
  Nat m = std::max(a.up, b.down);
  return {a.down - a.up + m, b.up - b.down + m};
}

std::vector<BicyclicElement> bicyclic_left_divisors(
    const BicyclicElement& target, const BicyclicElement& by,
    const Nat& search_bound) {
  require_natural(target, "bicyclic_left_divisors");
  require_natural(by, "bicyclic_left_divisors");
  Nat needed = std::max(target.down, target.up) + std::max(by.down, by.up);
  if (search_bound < needed) {
    throw Error(errc::bound_too_small,
                "search_bound " + search_bound.str() + " < " + needed.str());
  }
  const Nat& m = target.down;
  const Nat& n = target.up;
  const Nat& s = by.down;
  const Nat& t = by.up;
  std::vector<BicyclicElement> out;
  // a divisor (p,q) with q < s leaves the product's up coordinate at t
  if (n == t) {
    for (Nat q = s > m ? s - m : Nat(0); q < s; ++q)
      out.push_back({m - s + q, q});
  }
  // with q >= s the product is (p, t - s + q), pinning the divisor
  if (n >= t) out.push_back({m, n + s - t});
  // small boxes are cheap enough to re-derive the list exhaustively
  if (search_bound <= 64) {
    std::vector<BicyclicElement> brute;
    for (Nat p = 0; p <= search_bound; ++p) {
      for (Nat q = 0; q <= search_bound; ++q) {
        BicyclicElement cand{p, q};
        if (bicyclic_mul(cand, by) == target) brute.push_back(cand);
      }
    }
    if (brute != out)
      throw std::logic_error("bicyclic divisor forms disagree with the scan");
  }
  // Solutions strictly inside the box certify that the enumeration saw every
  // divisor; one on the rim means the bound was tight enough to truncate.
  for (const auto& d : out) {
    if (d.down == search_bound || d.up == search_bound) {
      throw Error(errc::bound_too_small,
                  "a divisor touches the search boundary; enlarge the bound");
    }
  }
  return out;
}

}  // namespace actkit
