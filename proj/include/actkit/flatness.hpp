#pragma once

#include <array>
#include <optional>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/classes.hpp"

namespace actkit {

// Condition (P): whenever a*u = a'*u' there are base, s, s' with a = base*s,
// a' = base*s' and su = s'u'.  Exhaustive over the act; quartic in act size
// times monoid size, so keep acts small (the toolkit targets |A| <= 32).
struct PFailure {
  int a, a_prime, u, u_prime;
};
struct PCheck {
  bool holds;
  std::optional<PFailure> failure;
};
PCheck satisfies_P(const FiniteAct& a);

// Condition (E): whenever a*u = a*u' there are base, s with a = base*s and
// su = su'.
struct EFailure {
  int a, u, u_prime;
};
struct ECheck {
  bool holds;
  std::optional<EFailure> failure;
};
ECheck satisfies_E(const FiniteAct& a);

// First (base, s, s') in scan order resolving a*u = a'*u', if any.
std::optional<std::array<int, 3>> condition_p_witness(const FiniteAct& act,
                                                      int a, int a_prime,
                                                      int u, int u_prime);

bool in_class(const FiniteAct& a, ActClass cls);

// Chain of equations xs[i]*ss[i] = xs[i+1]*ts[i] for 0 <= i < n-1, validated
// at construction.
struct PSystem {
  PSystem(ActPtr act, std::vector<int> xs, std::vector<int> ss,
          std::vector<int> ts);

  ActPtr act;
  std::vector<int> xs;  // n elements
  std::vector<int> ss;  // n-1 left coefficients
  std::vector<int> ts;  // n-1 right coefficients
};

struct PSystemSolution {
  int root;             // y
  std::vector<int> us;  // xs[i] = y*us[i], us[i]*ss[i] = us[i+1]*ts[i]
};

// Resolves the whole chain over one root by repeated amalgamation: solve the
// next equation with a condition (P) witness, then amalgamate the two roots
// with another witness and rescale.  Requires the act to satisfy (P).
PSystemSolution solve_P_system(const PSystem& sys);
bool check_P_solution(const PSystem& sys, const PSystemSolution& sol);

// For a mono f: X -> Y, viewing X as a subact of Y:
// P-unitary: y, y' outside X with ys, y't in X force ys = y't.
// E-unitary: y outside X with ys, yt in X forces ys = yt.
bool is_P_unitary(const ActMap& f);
bool is_E_unitary(const ActMap& f);

}  // namespace actkit
