#include "actkit/purity.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "actkit/corpus.hpp"
#include "actkit/error.hpp"
#include "actkit/tensor.hpp"

namespace actkit {

std::vector<Relation> satisfied_relations(const FiniteAct& a,
                                          const std::vector<int>& tuple) {
  const FiniteMonoid& m = *a.monoid();
  std::vector<Relation> rels;
  int n = static_cast<int>(tuple.size());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int s = 0; s < m.size(); ++s)
        for (int t = 0; t < m.size(); ++t)
          if (a.act(tuple[j], s) == a.act(tuple[k], t))
            rels.push_back({j, k, s, t});
  return rels;  // loop order is already lexicographic
}

namespace {

// Shared search: for the tuple with the given candidate lists per position,
// find an assignment b with dom.act(b[j],s) == dom.act(b[k],t) for every
// relation.  Relations are replayed as soon as both endpoints are set.
bool lift_exists(const FiniteAct& dom, const std::vector<Relation>& rels,
                 const std::vector<std::vector<int>>& fibers) {
  int k = static_cast<int>(fibers.size());
  std::vector<std::vector<Relation>> by_depth(k);
  for (const Relation& r : rels) by_depth[std::max(r.j, r.k)].push_back(r);
  std::vector<int> chosen(k, -1);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    for (int b : fibers[depth]) {
      chosen[depth] = b;
      bool ok = true;
      for (const Relation& r : by_depth[depth]) {
        if (dom.act(chosen[r.j], r.s) != dom.act(chosen[r.k], r.t)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, depth + 1)) return true;
    }
    chosen[depth] = -1;
    return false;
  };
  return rec(rec, 0);
}

void require_epi(const ActMap& g) {
  std::vector<char> hit(g.codomain->size(), 0);
  for (int v : g.values) hit[v] = 1;
  for (int y = 0; y < g.codomain->size(); ++y)
    if (!hit[y])
      throw Error(errc::not_epi, fmt::format("element {} has no preimage", y));
}

void require_mono(const ActMap& f) {
  std::vector<int> pre(f.codomain->size(), -1);
  for (std::size_t x = 0; x < f.values.size(); ++x) {
    if (pre[f.values[x]] >= 0)
      throw Error(errc::not_mono,
                  fmt::format("map identifies {} and {}", pre[f.values[x]],
                              x));
    pre[f.values[x]] = static_cast<int>(x);
  }
}

// Ascending k-subsets of {0..n-1} in lexicographic order.
bool next_subset(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

PurityCheck is_n_pure(const ActMap& g, int n) {
  if (n <= 0)
    throw Error(errc::precondition_violated, "purity arity must be positive");
  require_epi(g);
  const FiniteAct& dom = *g.domain;
  const FiniteAct& cod = *g.codomain;
  std::vector<std::vector<int>> fiber(cod.size());
  for (int b = 0; b < dom.size(); ++b) fiber[g(b)].push_back(b);
  int limit = std::min(n, cod.size());
  for (int k = 1; k <= limit; ++k) {
    std::vector<int> tuple(k);
    for (int i = 0; i < k; ++i) tuple[i] = i;
    do {
      std::vector<Relation> rels = satisfied_relations(cod, tuple);
      std::vector<std::vector<int>> fibers(k);
      for (int i = 0; i < k; ++i) fibers[i] = fiber[tuple[i]];
      if (!lift_exists(dom, rels, fibers)) return {false, tuple};
    } while (next_subset(tuple, cod.size()));
  }
  return {true, {}};
}

PurityCheck is_pure_epi(const ActMap& g) {
  return is_n_pure(g, g.codomain->size());
}

bool is_pure_congruence(const ActPtr& a, const Congruence& rho) {
  bool via_quotient = is_pure_epi(quotient_act(a, rho).natural).pure;

  // Representative-wise reading on A itself: pick one element per class,
  // relations taken modulo rho, lifts must satisfy them exactly.
  std::vector<std::vector<int>> members(rho.num_classes());
  for (int x = 0; x < a->size(); ++x) members[rho.class_of(x)].push_back(x);
  const FiniteMonoid& m = *a->monoid();
  bool direct = true;
  int limit = rho.num_classes();
  std::vector<int> support;
  for (int k = 1; k <= limit && direct; ++k) {
    support.assign(k, 0);
    for (int i = 0; i < k; ++i) support[i] = i;
    do {
      std::vector<Relation> rels;
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l)
          for (int s = 0; s < m.size(); ++s)
            for (int t = 0; t < m.size(); ++t)
              if (rho.relates(a->act(members[support[j]][0], s),
                              a->act(members[support[l]][0], t)))
                rels.push_back({j, l, s, t});
      std::vector<std::vector<int>> fibers(k);
      for (int i = 0; i < k; ++i) fibers[i] = members[support[i]];
      if (!lift_exists(*a, rels, fibers)) {
        direct = false;
        break;
      }
    } while (next_subset(support, limit));
  }

  if (via_quotient != direct)
    throw std::logic_error(
        "pure-congruence routes disagree (quotient map vs representatives)");
  return via_quotient;
}

bool is_pure_mono_bounded(const ActMap& f, int bound) {
  require_mono(f);
  MonoidPtr op = opposite(f.domain->monoid());
  for (const ActPtr& x : all_acts(op, bound)) {
    TensorProduct ta = tensor(*f.domain, *x);
    TensorProduct tb = tensor(*f.codomain, *x);
    // class of (a, p) must map to class of (f(a), p) consistently
    std::vector<int> image(ta.num_classes, -1);
    for (int a = 0; a < f.domain->size(); ++a) {
      for (int p = 0; p < x->size(); ++p) {
        int src = ta.class_index(a, p);
        int dst = tb.class_index(f(a), p);
        if (image[src] < 0)
          image[src] = dst;
        else if (image[src] != dst)
          throw std::logic_error("tensored map is not well defined");
      }
    }
    std::vector<char> seen(tb.num_classes, 0);
    for (int c = 0; c < ta.num_classes; ++c) {
      if (seen[image[c]]) return false;
      seen[image[c]] = 1;
    }
  }
  return true;
}

}  // namespace actkit
