#pragma once

#include <memory>
#include <string>
#include <vector>

#include "actkit/error.hpp"

namespace actkit {

// Finite monoid given by its full multiplication table.  Immutable after
// construction; all axioms are checked eagerly so downstream code never
// revalidates.
class FiniteMonoid {
 public:
  // table is row-major, table[a*size + b] = a*b.  Throws on a non-monoid.
  FiniteMonoid(std::vector<int> table, int size, int identity);

  int size() const noexcept { return size_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[a * size_ + b]; }
  const std::vector<int>& table() const noexcept { return table_; }

  bool operator==(const FiniteMonoid& other) const noexcept {
    return size_ == other.size_ && identity_ == other.identity_ &&
           table_ == other.table_;
  }

 private:
  int size_;
  int identity_;
  std::vector<int> table_;
};

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

MonoidPtr make_monoid(const std::vector<std::vector<int>>& table, int identity);

// Builders for named monoids.  Element orderings are part of the contract:
//   trivial                single element
//   cyclic_group(n)        Z_n under addition, identity 0
//   semilattice_chain(n)   chain 0 > 1 > ... > n-1 under max, identity 0
//   max_chain(n)           {0,...,n-1} under max (same table as the chain
//                          semilattice; kept as a separate name because it is
//                          the truncation of the naturals under max)
//   rectangular_band_1(p,q) p x q rectangular band plus identity at index 0;
//                          (i,j) sits at index 1 + i*q + j
//   right_zero_1(n)        right zero semigroup {1..n} plus identity 0
//   symmetric_inverse(n)   partial injections on n points, n <= 4; elements
//                          are image vectors (undefined < 0) in lex order,
//                          composition applies the left factor first
//   full_transformation(n) all maps on n points, n <= 4 (256 elements at
//                          most); image vectors in lex order, left-first
//                          composition
MonoidPtr standard_monoid(const std::string& builder,
                          const std::vector<long long>& params);
// Parses "name" or "name(a,b)" and dispatches to the overload above.
MonoidPtr standard_monoid(const std::string& text);

std::vector<int> idempotents(const FiniteMonoid& m);

struct InverseCheck {
  bool inverse;
  int witness;        // element whose inverse count differs from 1, or -1
  int inverse_count;  // its number of inverses
};
InverseCheck is_inverse_monoid(const FiniteMonoid& m);

MonoidPtr opposite(const MonoidPtr& m);

// Pointer or value equality; acts over value-equal monoids are compatible.
bool same_monoid(const MonoidPtr& a, const MonoidPtr& b);

// Identity relabelled to 0, then the lexicographically least flat table over
// all permutations of the remaining elements.  Complete isomorphism
// invariant; capped at size 8 because it is factorial in the size.
std::vector<int> monoid_canonical_form(const FiniteMonoid& m);
bool monoid_iso(const FiniteMonoid& a, const FiniteMonoid& b);

// A smallest generating set (exact search for size <= 12, greedy beyond),
// ascending element order.  The identity generates the empty product, so the
// trivial monoid yields {}.
std::vector<int> monoid_generators(const FiniteMonoid& m);

}  // namespace actkit
