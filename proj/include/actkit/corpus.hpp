#pragma once

#include <string>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/monoid.hpp"

namespace actkit {

// The five builder monoids included in the default test corpus.
std::vector<std::string> default_builders();

struct CorpusSpec {
  int max_monoid_order = 3;
  int max_act_size = 4;
  std::vector<std::string> builders = default_builders();
};

struct CorpusEntry {
  std::string name;
  MonoidPtr monoid;
  std::vector<ActPtr> acts;  // up to isomorphism, ordered by (size, table)
};

struct Corpus {
  std::vector<CorpusEntry> entries;
};

// Every monoid of the given order up to isomorphism: brute force over
// multiplication tables with the identity fixed at index 0, deduplicated by
// canonical form.  Capped at order 4 (order 5 already needs 5^16 tables).
std::vector<MonoidPtr> all_monoids_of_order(int n);

// Every right act of size <= max_size up to isomorphism, each returned as
// its canonical table, ordered by (size, table).  Enumerates monoid
// homomorphisms into the full transformation monoid by backtracking over
// generator images.  Capped at size 6.
std::vector<ActPtr> all_acts(const MonoidPtr& m, int max_size);

// Enumerated monoids of order <= max_monoid_order plus the requested
// builders, deduplicated up to isomorphism, with their act lists.
Corpus generate_corpus(const CorpusSpec& spec);

// Convenience filters over homs().
std::vector<ActMap> epis_between(const ActPtr& dom, const ActPtr& cod);
std::vector<ActMap> monos_between(const ActPtr& dom, const ActPtr& cod);

}  // namespace actkit
