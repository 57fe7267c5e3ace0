#include "actkit/monoid.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace actkit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_associative: return "NotAssociative";
    case errc::not_identity: return "NotIdentity";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::unknown_builder: return "UnknownBuilder";
    case errc::param_too_large: return "ParamTooLarge";
    case errc::not_inverse: return "NotInverse";
    case errc::bound_too_small: return "BoundTooSmall";
    case errc::identity_axiom: return "IdentityAxiomFails";
    case errc::associativity_axiom: return "AssociativityAxiomFails";
    case errc::not_equivariant: return "NotEquivariant";
    case errc::mixed_monoids: return "MixedMonoids";
    case errc::not_a_subact: return "NotASubact";
    case errc::not_an_embedding: return "NotAnEmbedding";
    case errc::invalid_congruence: return "InvalidCongruence";
    case errc::too_large: return "TooLarge";
    case errc::not_a_chain: return "NotAChain";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::not_epi: return "NotEpi";
    case errc::not_mono: return "NotMono";
    case errc::invalid_system: return "InvalidSystem";
    case errc::not_directed: return "NotDirected";
    case errc::not_a_cocone: return "NotACocone";
    case errc::squares_do_not_commute: return "SquaresDoNotCommute";
    case errc::domain_not_in_class: return "DomainNotInClass";
    case errc::domain_not_projective: return "DomainNotProjective";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::unsupported_class: return "UnsupportedClass";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::invalid_input: return "InvalidInput";
    case errc::unknown_suite: return "UnknownSuite";
  }
  return "Unknown";
}

FiniteMonoid::FiniteMonoid(std::vector<int> table, int size, int identity)
    : size_(size), identity_(identity), table_(std::move(table)) {
  if (size_ <= 0 || table_.size() != static_cast<size_t>(size_) * size_) {
    throw Error(errc::invalid_input,
                fmt::format("table must be {0}x{0}", size_));
  }
  for (size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] < 0 || table_[i] >= size_) {
      throw Error(errc::index_out_of_range,
                  fmt::format("entry {} at position ({},{}) not in [0,{})",
                              table_[i], i / size_, i % size_, size_));
    }
  }
  if (identity_ < 0 || identity_ >= size_) {
    throw Error(errc::index_out_of_range,
                fmt::format("identity {} not in [0,{})", identity_, size_));
  }
  for (int a = 0; a < size_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      throw Error(errc::not_identity,
                  fmt::format("element {} is not neutral on {}", identity_, a));
    }
  }
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < size_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw Error(
              errc::not_associative,
              fmt::format("(a*b)*c != a*(b*c) for (a,b,c)=({},{},{})", a, b,
                          c));
        }
      }
    }
  }
}

MonoidPtr make_monoid(const std::vector<std::vector<int>>& table,
                      int identity) {
  int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(errc::invalid_input, "table is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return std::make_shared<const FiniteMonoid>(std::move(flat), n, identity);
}

namespace {

constexpr int kMaxBuilderSize = 256;

MonoidPtr from_flat(std::vector<int> flat, int n, int id) {
  return std::make_shared<const FiniteMonoid>(std::move(flat), n, id);
}

MonoidPtr build_chain(long long n) {
  if (n < 1) throw Error(errc::invalid_input, "chain length must be >= 1");
  if (n > kMaxBuilderSize) {
    throw Error(errc::param_too_large,
                fmt::format("chain of {} elements exceeds cap {}", n,
                            kMaxBuilderSize));
  }
  int sz = static_cast<int>(n);
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) t[a * sz + b] = std::max(a, b);
  return from_flat(std::move(t), sz, 0);
}

// Image vectors of all partial injections on n points, undefined encoded as
// -1, sorted lexicographically.  Left-first composition.
MonoidPtr build_symmetric_inverse(long long n) {
  if (n < 1) throw Error(errc::invalid_input, "need n >= 1");
  if (n > 4) {
    throw Error(errc::param_too_large,
                fmt::format("symmetric_inverse({}) exceeds the 256-element "
                            "builder cap",
                            n));
  }
  int pts = static_cast<int>(n);
  std::vector<std::vector<int>> elems;
  std::vector<int> img(pts, -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == pts) {
      elems.push_back(img);
      return;
    }
    for (int v = -1; v < pts; ++v) {
      if (v >= 0) {
        bool used = false;
        for (int j = 0; j < i; ++j) used |= (img[j] == v);
        if (used) continue;
      }
      img[i] = v;
      self(self, i + 1);
      img[i] = -1;
    }
  };
  rec(rec, 0);
  std::sort(elems.begin(), elems.end());
  int sz = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  int id = -1;
  std::vector<int> ident(pts);
  std::iota(ident.begin(), ident.end(), 0);
  for (int a = 0; a < sz; ++a) {
    if (elems[a] == ident) id = a;
    for (int b = 0; b < sz; ++b) {
      std::vector<int> c(pts, -1);
      for (int x = 0; x < pts; ++x) {
        int mid = elems[a][x];
        if (mid >= 0) c[x] = elems[b][mid];
      }
      t[a * sz + b] =
          static_cast<int>(std::lower_bound(elems.begin(), elems.end(), c) -
                           elems.begin());
    }
  }
  return from_flat(std::move(t), sz, id);
}

MonoidPtr build_full_transformation(long long n) {
  if (n < 1) throw Error(errc::invalid_input, "need n >= 1");
  if (n > 4) {
    throw Error(errc::param_too_large,
                fmt::format("full_transformation({}) exceeds the 256-element "
                            "builder cap",
                            n));
  }
  int pts = static_cast<int>(n);
  int sz = 1;
  for (int i = 0; i < pts; ++i) sz *= pts;
  std::vector<std::vector<int>> elems;
  elems.reserve(sz);
  std::vector<int> img(pts, 0);
  for (int code = 0; code < sz; ++code) {
    int c = code;
    for (int i = pts - 1; i >= 0; --i) {
      img[i] = c % pts;
      c /= pts;
    }
    elems.push_back(img);  // lexicographic by construction
  }
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  int id = -1;
  std::vector<int> ident(pts);
  std::iota(ident.begin(), ident.end(), 0);
  for (int a = 0; a < sz; ++a) {
    if (elems[a] == ident) id = a;
    for (int b = 0; b < sz; ++b) {
      std::vector<int> c(pts);
      for (int x = 0; x < pts; ++x) c[x] = elems[b][elems[a][x]];
      t[a * sz + b] =
          static_cast<int>(std::lower_bound(elems.begin(), elems.end(), c) -
                           elems.begin());
    }
  }
  return from_flat(std::move(t), sz, id);
}

}  // namespace

MonoidPtr standard_monoid(const std::string& builder,
                          const std::vector<long long>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k) {
      throw Error(errc::invalid_input,
                  fmt::format("{} expects {} parameter(s), got {}", builder, k,
                              params.size()));
    }
  };
  if (builder == "trivial") {
    need(0);
    return from_flat({0}, 1, 0);
  }
  if (builder == "cyclic_group") {
    need(1);
    long long n = params[0];
    if (n < 1) throw Error(errc::invalid_input, "need n >= 1");
    if (n > kMaxBuilderSize) {
      throw Error(errc::param_too_large,
                  fmt::format("cyclic_group({}) exceeds cap {}", n,
                              kMaxBuilderSize));
    }
    int sz = static_cast<int>(n);
    std::vector<int> t(static_cast<size_t>(sz) * sz);
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b) t[a * sz + b] = (a + b) % sz;
    return from_flat(std::move(t), sz, 0);
  }
  if (builder == "semilattice_chain" || builder == "max_chain") {
    need(1);
    return build_chain(params[0]);
  }
  if (builder == "rectangular_band_1") {
    need(2);
    long long p = params[0], q = params[1];
    if (p < 1 || q < 1) throw Error(errc::invalid_input, "need p,q >= 1");
    if (p * q + 1 > kMaxBuilderSize) {
      throw Error(errc::param_too_large,
                  fmt::format("rectangular_band_1({},{}) exceeds cap {}", p, q,
                              kMaxBuilderSize));
    }
    int sz = static_cast<int>(p * q + 1);
    std::vector<int> t(static_cast<size_t>(sz) * sz);
    auto idx = [&](long long i, long long j) {
      return static_cast<int>(1 + i * q + j);
    };
    for (int a = 0; a < sz; ++a) {
      t[a * sz + 0] = a;
      t[0 * sz + a] = a;
    }
    for (long long i = 0; i < p; ++i)
      for (long long j = 0; j < q; ++j)
        for (long long k = 0; k < p; ++k)
          for (long long l = 0; l < q; ++l)
            t[idx(i, j) * sz + idx(k, l)] = idx(i, l);
    return from_flat(std::move(t), sz, 0);
  }
  if (builder == "right_zero_1") {
    need(1);
    long long n = params[0];
    if (n < 1) throw Error(errc::invalid_input, "need n >= 1");
    if (n + 1 > kMaxBuilderSize) {
      throw Error(errc::param_too_large,
                  fmt::format("right_zero_1({}) exceeds cap {}", n,
                              kMaxBuilderSize));
    }
    int sz = static_cast<int>(n + 1);
    std::vector<int> t(static_cast<size_t>(sz) * sz);
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b) t[a * sz + b] = (b == 0) ? a : b;
    return from_flat(std::move(t), sz, 0);
  }
  if (builder == "symmetric_inverse") {
    need(1);
    return build_symmetric_inverse(params[0]);
  }
  if (builder == "full_transformation") {
    need(1);
    return build_full_transformation(params[0]);
  }
  throw Error(errc::unknown_builder, builder);
}

MonoidPtr standard_monoid(const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos) return standard_monoid(text, {});
  if (text.back() != ')') {
    throw Error(errc::invalid_input, "expected name(p1,...,pk): " + text);
  }
  std::string name = text.substr(0, open);
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::vector<long long> params;
  size_t pos = 0;
  while (pos < inner.size()) {
    size_t comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    try {
      params.push_back(std::stoll(inner.substr(pos, comma - pos)));
    } catch (const std::exception&) {
      throw Error(errc::invalid_input, "bad parameter in: " + text);
    }
    pos = comma + 1;
  }
  return standard_monoid(name, params);
}

std::vector<int> idempotents(const FiniteMonoid& m) {
  std::vector<int> out;
  for (int e = 0; e < m.size(); ++e)
    if (m.mul(e, e) == e) out.push_back(e);
  return out;
}

InverseCheck is_inverse_monoid(const FiniteMonoid& m) {
  for (int x = 0; x < m.size(); ++x) {
    int count = 0;
    for (int y = 0; y < m.size(); ++y) {
      if (m.mul(m.mul(x, y), x) == x && m.mul(m.mul(y, x), y) == y) ++count;
    }
    if (count != 1) return {false, x, count};
  }
  return {true, -1, 1};
}

MonoidPtr opposite(const MonoidPtr& m) {
  int n = m->size();
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = m->mul(b, a);
  return from_flat(std::move(t), n, m->identity());
}

bool same_monoid(const MonoidPtr& a, const MonoidPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::vector<int> monoid_canonical_form(const FiniteMonoid& m) {
  int n = m.size();
  if (n > 8) {
    throw Error(errc::too_large,
                fmt::format("canonical form is factorial; {} > 8", n));
  }
  // perm maps old labels to new; identity pinned to 0.
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != m.identity()) others.push_back(i);
  std::vector<int> best;
  std::vector<int> rel(n);
  do {
    std::vector<int> perm(n);
    perm[m.identity()] = 0;
    for (int i = 0; i < n - 1; ++i) perm[others[i]] = i + 1;
    for (int i = 0; i < n; ++i) rel[perm[i]] = i;
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        t[a * n + b] = perm[m.mul(rel[a], rel[b])];
    if (best.empty() || t < best) best = std::move(t);
  } while (std::next_permutation(others.begin(), others.end()));
  if (best.empty()) best = m.table();  // n == 1
  return best;
}

bool monoid_iso(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.size() != b.size()) return false;
  if (a.size() <= 8) {
    return monoid_canonical_form(a) == monoid_canonical_form(b);
  }
  // Backtracking on images, identity pinned, order profiles as invariants.
  int n = a.size();
  auto profile = [](const FiniteMonoid& m, int x) {
    // (is idempotent, index of first repeat in the power sequence)
    int seen = 0, steps = 0, cur = x;
    std::vector<int> trail;
    while (true) {
      trail.push_back(cur);
      cur = m.mul(cur, x);
      ++steps;
      seen = 0;
      for (int v : trail) seen += (v == cur);
      if (seen) break;
    }
    return std::pair<int, int>(m.mul(x, x) == x, steps);
  };
  std::vector<int> img(n, -1), used(n, 0);
  img[a.identity()] = b.identity();
  used[b.identity()] = 1;
  auto ok_partial = [&](int x) {
    for (int y = 0; y < n; ++y) {
      if (img[y] < 0) continue;
      int xy = a.mul(x, y), yx = a.mul(y, x);
      if (img[xy] >= 0 && img[xy] != b.mul(img[x], img[y])) return false;
      if (img[yx] >= 0 && img[yx] != b.mul(img[y], img[x])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int x) -> bool {
    while (x < n && img[x] >= 0) ++x;
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || profile(a, x) != profile(b, y)) continue;
      img[x] = y;
      used[y] = 1;
      if (ok_partial(x) && self(self, x + 1)) return true;
      img[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

namespace {

// Submonoid generated by gens; returns membership mask.
std::vector<char> closure(const FiniteMonoid& m, const std::vector<int>& gens) {
  std::vector<char> in(m.size(), 0);
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  add(m.identity());
  for (int g : gens) add(g);
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < work.size(); ++j) {
      add(m.mul(work[i], work[j]));
      add(m.mul(work[j], work[i]));
    }
  }
  return in;
}

bool generates(const FiniteMonoid& m, const std::vector<int>& gens) {
  auto in = closure(m, gens);
  for (char c : in)
    if (!c) return false;
  return true;
}

}  // namespace

std::vector<int> monoid_generators(const FiniteMonoid& m) {
  std::vector<int> pool;
  for (int i = 0; i < m.size(); ++i)
    if (i != m.identity()) pool.push_back(i);
  if (generates(m, {})) return {};
  if (static_cast<int>(pool.size()) <= 12) {
    for (size_t k = 1; k <= pool.size(); ++k) {
      std::vector<int> pick(k);
      auto rec = [&](auto&& self, size_t from, size_t depth) -> bool {
        if (depth == k) return generates(m, pick);
        for (size_t i = from; i < pool.size(); ++i) {
          pick[depth] = pool[i];
          if (self(self, i + 1, depth + 1)) return true;
        }
        return false;
      };
      if (rec(rec, 0, 0)) return pick;
    }
  }
  std::vector<int> greedy;
  auto in = closure(m, greedy);
  for (int x : pool) {
    if (!in[x]) {
      greedy.push_back(x);
      in = closure(m, greedy);
    }
  }
  return greedy;
}

}  // namespace actkit
