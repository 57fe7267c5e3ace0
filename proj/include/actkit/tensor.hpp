#pragma once

#include "actkit/act.hpp"

namespace actkit {

// Tensor product A (x) B of a right act A over S with a left act B, the left
// act being represented as a right act over opposite(S).  Classes are the
// finest partition of A x B closed under (a*s, b) ~ (a, s*b), numbered by
// least flattened pair (a * |B| + b).
struct TensorProduct {
  int num_classes;
  int left_size;
  int right_size;
  std::vector<int> class_of;  // index a * right_size + b

  int class_index(int a, int b) const { return class_of[a * right_size + b]; }
};

TensorProduct tensor(const FiniteAct& a, const FiniteAct& b);

// Injective monoid homomorphism S -> T.
struct MonoidEmbedding {
  MonoidEmbedding(MonoidPtr source, MonoidPtr target, std::vector<int> values);

  MonoidPtr source, target;
  std::vector<int> values;

  int operator()(int s) const { return values[s]; }
};

// Base change X (x)_S T along an embedding: the right T-act on classes of
// X x T under (x*s, t) ~ (x, emb(s)t), with [x,t]*u = [x, tu], plus the unit
// assignment x -> [x, 1].
struct InducedAct {
  ActPtr act;                 // over the target monoid
  std::vector<int> unit_map;  // x -> element of act
  TensorProduct classes;      // the underlying identification
};

InducedAct induced_act(const ActPtr& x, const MonoidEmbedding& emb);

}  // namespace actkit
