#include "actkit/hom.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace actkit {

long long search_budget() {
  static long long cached = [] {
    const char* env = std::getenv("ACTKIT_BUDGET");
    if (!env) return 10'000'000LL;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || v <= 0) return 10'000'000LL;
    return v;
  }();
  return cached;
}

std::vector<int> act_generators(const FiniteAct& a) {
  int n = a.size();
  int ns = a.monoid()->size();
  std::vector<char> reach(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < ns; ++s) reach[x * n + a.act(x, s)] = 1;
  // mutual reachability classes, then least member of every source class
  std::vector<int> scc(n, -1);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (scc[x] >= 0) continue;
    scc[x] = count;
    for (int y = x + 1; y < n; ++y)
      if (scc[y] < 0 && reach[x * n + y] && reach[y * n + x]) scc[y] = count;
    ++count;
  }
  std::vector<char> has_incoming(count, 0);
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y)
      if (scc[z] != scc[y] && reach[z * n + y]) has_incoming[scc[y]] = 1;
  std::vector<int> gens;
  std::vector<char> taken(count, 0);
  for (int x = 0; x < n; ++x) {
    if (!has_incoming[scc[x]] && !taken[scc[x]]) {
      taken[scc[x]] = 1;
      gens.push_back(x);
    }
  }
  return gens;
}

namespace {

// Backtracking over generator images with equivariance closure.  emit gets
// each completed value vector; returning false stops the search.
struct HomSearch {
  const FiniteAct& dom;
  const FiniteAct& cod;
  const std::vector<std::vector<char>>* allowed;
  std::function<bool(const std::vector<int>&)> emit;

  std::vector<int> gens;
  std::vector<int> val;
  int ns;

  HomSearch(const FiniteAct& d, const FiniteAct& c,
            const std::vector<std::vector<char>>* allow)
      : dom(d), cod(c), allowed(allow), ns(d.monoid()->size()) {
    gens = act_generators(dom);
    val.assign(dom.size(), -1);
    double cost = static_cast<double>(gens.size()) *
                  std::log(std::max(2, cod.size()));
    if (cost > std::log(static_cast<double>(search_budget()))) {
      throw Error(errc::search_budget_exceeded,
                  fmt::format("{}^{} image tuples exceed the budget {}",
                              cod.size(), gens.size(), search_budget()));
    }
  }

  bool set_value(int x, int y, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> work{{x, y}};
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      if (val[a] >= 0) {
        if (val[a] != b) return false;
        continue;
      }
      if (allowed && !(*allowed)[a][b]) return false;
      val[a] = b;
      trail.push_back(a);
      for (int s = 0; s < ns; ++s)
        work.emplace_back(dom.act(a, s), cod.act(b, s));
    }
    return true;
  }

  bool rec(size_t k) {
    if (k == gens.size()) return emit(val);
    if (val[gens[k]] >= 0) return rec(k + 1);  // forced by an earlier choice
    for (int y = 0; y < cod.size(); ++y) {
      std::vector<int> trail;
      if (set_value(gens[k], y, trail)) {
        if (!rec(k + 1)) return false;
      }
      for (int a : trail) val[a] = -1;
    }
    return true;
  }

  void run() { rec(0); }
};

std::vector<ActMap> collect_homs(const ActPtr& dom, const ActPtr& cod,
                                 const std::vector<std::vector<char>>* allow) {
  if (!same_monoid(dom->monoid(), cod->monoid())) {
    throw Error(errc::mixed_monoids, "hom endpoints over different monoids");
  }
  std::vector<std::vector<int>> found;
  HomSearch hs(*dom, *cod, allow);
  hs.emit = [&](const std::vector<int>& v) {
    found.push_back(v);
    return true;
  };
  hs.run();
  std::sort(found.begin(), found.end());
  std::vector<ActMap> out;
  out.reserve(found.size());
  for (auto& v : found) out.emplace_back(dom, cod, std::move(v));
  return out;
}

}  // namespace

std::vector<ActMap> homs(const ActPtr& dom, const ActPtr& cod) {
  return collect_homs(dom, cod, nullptr);
}

std::vector<ActMap> homs(const ActPtr& dom, const ActPtr& cod,
                         const std::vector<std::vector<char>>& allowed) {
  return collect_homs(dom, cod, &allowed);
}

std::optional<ActMap> first_hom(const ActPtr& dom, const ActPtr& cod,
                                const std::vector<std::vector<char>>& allowed) {
  if (!same_monoid(dom->monoid(), cod->monoid())) {
    throw Error(errc::mixed_monoids, "hom endpoints over different monoids");
  }
  std::optional<std::vector<int>> hit;
  HomSearch hs(*dom, *cod, &allowed);
  hs.emit = [&](const std::vector<int>& v) {
    hit = v;
    return false;
  };
  hs.run();
  if (!hit) return std::nullopt;
  return ActMap(dom, cod, std::move(*hit));
}

MapProperties map_properties(const ActMap& f) {
  MapProperties p{};
  std::vector<int> hits(f.codomain->size(), 0);
  for (int v : f.values) ++hits[v];
  p.mono = true;
  p.epi = true;
  for (int h : hits) {
    if (h > 1) p.mono = false;
    if (h == 0) p.epi = false;
  }
  p.iso = p.mono && p.epi;
  // section: h with f(h(y)) = y
  {
    std::vector<std::vector<char>> allowed(
        f.codomain->size(), std::vector<char>(f.domain->size(), 0));
    for (int x = 0; x < f.domain->size(); ++x) allowed[f(x)][x] = 1;
    bool feasible = p.epi;  // a section forces surjectivity
    p.split_epi =
        feasible && first_hom(f.codomain, f.domain, allowed).has_value();
  }
  // retraction: h with h(f(x)) = x
  {
    if (!p.mono) {
      p.split_mono = false;
    } else {
      std::vector<std::vector<char>> allowed(
          f.codomain->size(), std::vector<char>(f.domain->size(), 1));
      for (int x = 0; x < f.domain->size(); ++x) {
        for (int z = 0; z < f.domain->size(); ++z) allowed[f(x)][z] = (z == x);
      }
      p.split_mono = first_hom(f.codomain, f.domain, allowed).has_value();
    }
  }
  return p;
}

namespace {

// cheap per-element invariant: (orbit size, fixed point?, component size)
std::vector<std::array<int, 3>> element_invariants(const FiniteAct& a) {
  int n = a.size(), ns = a.monoid()->size();
  std::vector<std::array<int, 3>> inv(n);
  auto comps = decompose_indecomposable(a);
  std::vector<int> comp_size(n);
  for (const auto& c : comps)
    for (int x : c) comp_size[x] = static_cast<int>(c.size());
  for (int x = 0; x < n; ++x) {
    std::vector<char> orbit(n, 0);
    int count = 0;
    bool fixed = true;
    for (int s = 0; s < ns; ++s) {
      int y = a.act(x, s);
      fixed &= (y == x);
      if (!orbit[y]) {
        orbit[y] = 1;
        ++count;
      }
    }
    inv[x] = {count, fixed ? 1 : 0, comp_size[x]};
  }
  return inv;
}

}  // namespace

std::optional<ActMap> find_iso(const ActPtr& x, const ActPtr& y) {
  if (!same_monoid(x->monoid(), y->monoid())) {
    throw Error(errc::mixed_monoids, "iso endpoints over different monoids");
  }
  if (x->size() != y->size()) return std::nullopt;
  auto cx = decompose_indecomposable(*x);
  auto cy = decompose_indecomposable(*y);
  std::vector<int> sx, sy;
  for (const auto& c : cx) sx.push_back(static_cast<int>(c.size()));
  for (const auto& c : cy) sy.push_back(static_cast<int>(c.size()));
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  if (sx != sy) return std::nullopt;
  auto ix = element_invariants(*x);
  auto iy = element_invariants(*y);
  {
    auto mx = ix, my = iy;
    std::sort(mx.begin(), mx.end());
    std::sort(my.begin(), my.end());
    if (mx != my) return std::nullopt;
  }
  int n = x->size(), ns = x->monoid()->size();
  std::vector<int> val(n, -1), inv(n, -1);
  // assign elements in index order to the least feasible image; propagate the
  // action closure of every choice, so the first full assignment is the
  // lexicographically least isomorphism
  std::function<bool(int, int, std::vector<int>&)> set_value =
      [&](int a, int b, std::vector<int>& trail) {
        std::vector<std::pair<int, int>> work{{a, b}};
        while (!work.empty()) {
          auto [p, q] = work.back();
          work.pop_back();
          if (val[p] >= 0) {
            if (val[p] != q) return false;
            continue;
          }
          if (inv[q] >= 0 || ix[p] != iy[q]) return false;
          val[p] = q;
          inv[q] = p;
          trail.push_back(p);
          for (int s = 0; s < ns; ++s)
            work.emplace_back(x->act(p, s), y->act(q, s));
        }
        return true;
      };
  std::function<bool(int)> rec = [&](int a) -> bool {
    while (a < n && val[a] >= 0) ++a;
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (inv[b] >= 0) continue;
      std::vector<int> trail;
      if (set_value(a, b, trail) && rec(a + 1)) return true;
      for (int p : trail) {
        inv[val[p]] = -1;
        val[p] = -1;
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return ActMap(x, y, std::move(val));
}

std::vector<ActMap> endos_over(const ActMap& g) {
  std::vector<std::vector<char>> allowed(
      g.domain->size(), std::vector<char>(g.domain->size(), 0));
  for (int a = 0; a < g.domain->size(); ++a)
    for (int b = 0; b < g.domain->size(); ++b)
      allowed[a][b] = (g(a) == g(b));
  return homs(g.domain, g.domain, allowed);
}

bool is_generator(const ActPtr& g) {
  auto reg = regular_act(g->monoid());
  bool found = false;
  HomSearch hs(*g, *reg, nullptr);
  hs.emit = [&](const std::vector<int>& v) {
    std::vector<char> hit(reg->size(), 0);
    int covered = 0;
    for (int w : v) {
      if (!hit[w]) {
        hit[w] = 1;
        ++covered;
      }
    }
    if (covered == reg->size()) {
      found = true;
      return false;
    }
    return true;
  };
  hs.run();
  return found;
}

bool verify_pullback(const Pullback& pb, const ActMap& f, const ActMap& g,
                     const std::vector<ActPtr>& probes) {
  for (const auto& p : probes) {
    auto us = homs(p, f.domain);
    auto vs = homs(p, g.domain);
    auto ws = homs(p, pb.act);
    for (const auto& u : us) {
      auto fu = compose(f, u);
      for (const auto& v : vs) {
        if (!(fu.values == compose(g, v).values)) continue;
        int mediators = 0;
        for (const auto& w : ws) {
          if (compose(pb.to_left, w).values == u.values &&
              compose(pb.to_right, w).values == v.values) {
            ++mediators;
          }
        }
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

std::vector<int> act_canonical_form(const FiniteAct& a) {
  int n = a.size();
  if (n > 8) {
    throw Error(errc::too_large,
                fmt::format("canonical form is factorial; {} > 8", n));
  }
  int ns = a.monoid()->size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best, t(static_cast<size_t>(n) * ns), rel(n);
  do {
    for (int i = 0; i < n; ++i) rel[perm[i]] = i;
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < ns; ++s)
        t[i * ns + s] = perm[a.act(rel[i], s)];
    if (best.empty() || t < best) best = t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace actkit
