#pragma once

#include <stdexcept>
#include <string>

namespace actkit {

// Every failure of a documented precondition or input contract throws
// Error with a machine-checkable code.  Internal consistency violations
// (things the algorithms guarantee by construction) use std::logic_error
// instead, so the two kinds of failure are never confused.
enum class errc {
  not_associative,
  not_identity,
  index_out_of_range,
  unknown_builder,
  param_too_large,
  not_inverse,
  bound_too_small,
  identity_axiom,
  associativity_axiom,
  not_equivariant,
  mixed_monoids,
  not_a_subact,
  not_an_embedding,
  invalid_congruence,
  too_large,
  not_a_chain,
  search_budget_exceeded,
  not_epi,
  not_mono,
  invalid_system,
  not_directed,
  not_a_cocone,
  squares_do_not_commute,
  domain_not_in_class,
  domain_not_projective,
  precondition_violated,
  unsupported_class,
  cap_exceeded,
  invalid_input,
  unknown_suite,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace actkit
