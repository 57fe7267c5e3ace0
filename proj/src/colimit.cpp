#include "actkit/colimit.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "actkit/detail/union_find.hpp"
#include "actkit/error.hpp"
#include "actkit/hom.hpp"

namespace actkit {

void validate_system(const DirectSystem& d) {
  int n = static_cast<int>(d.acts.size());
  if (n == 0) throw Error(errc::invalid_system, "empty index set");
  for (int i = 1; i < n; ++i)
    if (!same_monoid(d.acts[0]->monoid(), d.acts[i]->monoid()))
      throw Error(errc::mixed_monoids,
                  fmt::format("acts at indices 0 and {} live over different "
                              "monoids",
                              i));
  if (static_cast<int>(d.leq.size()) != n)
    throw Error(errc::invalid_system, "relation matrix size mismatch");
  for (const auto& row : d.leq)
    if (static_cast<int>(row.size()) != n)
      throw Error(errc::invalid_system, "relation matrix is not square");
  for (int i = 0; i < n; ++i)
    if (!d.leq[i][i])
      throw Error(errc::invalid_system,
                  fmt::format("preorder not reflexive at {}", i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (d.leq[i][j] && d.leq[j][k] && !d.leq[i][k])
          throw Error(errc::invalid_system,
                      fmt::format("preorder not transitive at {} <= {} <= {}",
                                  i, j, k));
  for (const auto& [key, map] : d.transitions) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n || !d.leq[i][j])
      throw Error(errc::invalid_system,
                  fmt::format("transition on unrelated pair ({},{})", i, j));
    if (!(*map.domain == *d.acts[i]) || !(*map.codomain == *d.acts[j]))
      throw Error(errc::invalid_system,
                  fmt::format("transition ({},{}) endpoints do not match the "
                              "indexed acts",
                              i, j));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!d.leq[i][j]) continue;
      auto it = d.transitions.find({i, j});
      if (it == d.transitions.end())
        throw Error(errc::invalid_system,
                    fmt::format("missing transition for {} <= {}", i, j));
      if (i == j) {
        for (int x = 0; x < d.acts[i]->size(); ++x)
          if (it->second(x) != x)
            throw Error(errc::invalid_system,
                        fmt::format("diagonal transition at {} moves {}", i,
                                    x));
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!(d.leq[i][j] && d.leq[j][k])) continue;
        const ActMap& ij = d.transitions.at({i, j});
        const ActMap& jk = d.transitions.at({j, k});
        const ActMap& ik = d.transitions.at({i, k});
        for (int x = 0; x < d.acts[i]->size(); ++x)
          if (jk(ij(x)) != ik(x))
            throw Error(
                errc::invalid_system,
                fmt::format("functoriality fails for {} <= {} <= {} at "
                            "element {}: {} vs {}",
                            i, j, k, x, jk(ij(x)), ik(x)));
      }
}

DirectSystem make_system(std::vector<ActPtr> acts,
                         std::vector<std::vector<char>> leq,
                         std::map<std::pair<int, int>, ActMap> transitions) {
  DirectSystem d{std::move(acts), std::move(leq), std::move(transitions)};
  for (std::size_t i = 0; i < d.acts.size(); ++i)
    if (!d.transitions.count({static_cast<int>(i), static_cast<int>(i)}))
      d.transitions.emplace(std::pair<int, int>(i, i),
                            identity_map(d.acts[i]));
  validate_system(d);
  return d;
}

bool is_directed(const DirectSystem& d) {
  int n = static_cast<int>(d.acts.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool bounded = false;
      for (int k = 0; k < n && !bounded; ++k)
        bounded = d.leq[i][k] && d.leq[j][k];
      if (!bounded) return false;
    }
  return true;
}

bool is_cocone(const DirectSystem& d, const Cocone& c) {
  if (c.legs.size() != d.acts.size()) return false;
  for (std::size_t i = 0; i < d.acts.size(); ++i) {
    if (!(*c.legs[i].domain == *d.acts[i])) return false;
    if (!(*c.legs[i].codomain == *c.apex)) return false;
  }
  for (const auto& [key, map] : d.transitions) {
    auto [i, j] = key;
    for (int x = 0; x < d.acts[i]->size(); ++x)
      if (c.legs[j](map(x)) != c.legs[i](x)) return false;
  }
  return true;
}

namespace {

Cocone quotient_cocone(const DirectSystem& d, const Coproduct& cop,
                       const Congruence& rho) {
  QuotientAct q = quotient_act(cop.act, rho);
  std::vector<ActMap> legs;
  legs.reserve(d.acts.size());
  for (std::size_t i = 0; i < d.acts.size(); ++i)
    legs.push_back(compose(q.natural, cop.injections[i]));
  Cocone cone{q.act, std::move(legs)};
  if (!is_cocone(d, cone))
    throw std::logic_error("colimit produced a non-cocone");
  return cone;
}

}  // namespace

Cocone colimit(const DirectSystem& d) {
  validate_system(d);
  Coproduct cop = coproduct(d.acts);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [key, map] : d.transitions) {
    auto [i, j] = key;
    if (i == j) continue;
    for (int x = 0; x < d.acts[i]->size(); ++x)
      pairs.push_back({cop.injections[i](x), cop.injections[j](map(x))});
  }
  return quotient_cocone(d, cop, generated_congruence(cop.act, pairs));
}

Cocone directed_colimit(const DirectSystem& d) {
  validate_system(d);
  if (!is_directed(d))
    throw Error(errc::not_directed, "index preorder has unbounded pairs");
  int n = static_cast<int>(d.acts.size());
  Coproduct cop = coproduct(d.acts);
  int total = cop.act->size();
  // owner of each coproduct element
  std::vector<int> idx(total), elem(total);
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < d.acts[i]->size(); ++x) {
      idx[cop.injections[i](x)] = i;
      elem[cop.injections[i](x)] = x;
    }
  auto related = [&](int p, int q) {
    int i = idx[p], j = idx[q];
    for (int k = 0; k < n; ++k) {
      if (!(d.leq[i][k] && d.leq[j][k])) continue;
      if (d.transitions.at({i, k})(elem[p]) ==
          d.transitions.at({j, k})(elem[q]))
        return true;
    }
    return false;
  };
  detail::UnionFind uf(total);
  for (int p = 0; p < total; ++p)
    for (int q = p + 1; q < total; ++q)
      if (related(p, q)) uf.unite(p, q);
  for (int p = 0; p < total; ++p)
    for (int q = p + 1; q < total; ++q)
      if ((uf.find(p) == uf.find(q)) != related(p, q))
        throw std::logic_error(
            "one-shot directed relation is not transitive");
  int count = 0;
  Congruence rho(cop.act, uf.canonical_classes(&count));
  Congruence generated = [&] {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [key, map] : d.transitions) {
      auto [i, j] = key;
      if (i == j) continue;
      for (int x = 0; x < d.acts[i]->size(); ++x)
        pairs.push_back({cop.injections[i](x), cop.injections[j](map(x))});
    }
    return generated_congruence(cop.act, pairs);
  }();
  if (!(rho == generated))
    throw std::logic_error(
        "directed formula disagrees with the generated congruence");
  return quotient_cocone(d, cop, rho);
}

bool verify_universal_property(const DirectSystem& d, const Cocone& cone,
                               const std::vector<Cocone>& probes) {
  if (!is_cocone(d, cone))
    throw Error(errc::not_a_cocone, "candidate cocone does not commute");
  for (const Cocone& probe : probes) {
    if (!is_cocone(d, probe))
      throw Error(errc::not_a_cocone, "probe cocone does not commute");
    int mediators = 0;
    for (const ActMap& h : homs(cone.apex, probe.apex)) {
      bool commutes = true;
      for (std::size_t i = 0; i < cone.legs.size() && commutes; ++i)
        for (int x = 0; x < d.acts[i]->size() && commutes; ++x)
          commutes = h(cone.legs[i](x)) == probe.legs[i](x);
      if (commutes) ++mediators;
    }
    if (mediators != 1) return false;
  }
  return true;
}

ActMap cocone_mediator(const Cocone& univ, const Cocone& probe) {
  if (univ.legs.size() != probe.legs.size())
    throw Error(errc::not_a_cocone, "leg counts differ");
  std::vector<int> values(univ.apex->size(), -1);
  for (std::size_t i = 0; i < univ.legs.size(); ++i) {
    for (int x = 0; x < univ.legs[i].domain->size(); ++x) {
      int p = univ.legs[i](x);
      int v = probe.legs[i](x);
      if (values[p] < 0)
        values[p] = v;
      else if (values[p] != v)
        throw Error(errc::not_a_cocone,
                    fmt::format("probe is incompatible at apex element {}",
                                p));
    }
  }
  for (int p = 0; p < univ.apex->size(); ++p)
    if (values[p] < 0)
      throw Error(errc::not_a_cocone,
                  fmt::format("apex element {} not hit by any leg", p));
  return ActMap(univ.apex, probe.apex, std::move(values));
}

ActMap colimit_of_maps(const DirectSystem& dx, const DirectSystem& dy,
                       const std::vector<ActMap>& psi) {
  validate_system(dx);
  validate_system(dy);
  if (dx.leq != dy.leq)
    throw Error(errc::invalid_system,
                "systems live over different index preorders");
  if (psi.size() != dx.acts.size())
    throw Error(errc::invalid_system, "one levelwise map per index required");
  for (std::size_t i = 0; i < psi.size(); ++i)
    if (!(*psi[i].domain == *dx.acts[i]) ||
        !(*psi[i].codomain == *dy.acts[i]))
      throw Error(errc::invalid_system,
                  fmt::format("level map {} has wrong endpoints", i));
  for (const auto& [key, phix] : dx.transitions) {
    auto [i, j] = key;
    const ActMap& phiy = dy.transitions.at({i, j});
    for (int x = 0; x < dx.acts[i]->size(); ++x)
      if (psi[j](phix(x)) != phiy(psi[i](x)))
        throw Error(errc::squares_do_not_commute,
                    fmt::format("square for {} <= {} fails at element {}", i,
                                j, x));
  }
  Cocone cx = colimit(dx);
  Cocone cy = colimit(dy);
  std::vector<int> values(cx.apex->size(), -1);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (int x = 0; x < dx.acts[i]->size(); ++x) {
      int p = cx.legs[i](x);
      int v = cy.legs[i](psi[i](x));
      if (values[p] < 0)
        values[p] = v;
      else if (values[p] != v)
        throw std::logic_error("induced map between colimits ill-defined");
    }
  }
  return ActMap(cx.apex, cy.apex, std::move(values));
}

DirectSystem quotient_chain_system(const ActPtr& x,
                                   const std::vector<Congruence>& rhos) {
  int n = static_cast<int>(rhos.size());
  if (n == 0) throw Error(errc::invalid_system, "no congruences given");
  for (const Congruence& r : rhos)
    if (!(*r.act() == *x))
      throw Error(errc::invalid_system,
                  "congruence lives on a different act");
  std::vector<ActPtr> acts;
  for (const Congruence& r : rhos) acts.push_back(quotient_act(x, r).act);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = rhos[j].contains(rhos[i]);
  std::map<std::pair<int, int>, ActMap> transitions;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!leq[i][j] || i == j) continue;
      // class of rho_i -> class of rho_j through any representative
      std::vector<int> rep(acts[i]->size(), -1);
      for (int a = x->size() - 1; a >= 0; --a)
        rep[rhos[i].class_of(a)] = a;
      std::vector<int> values(acts[i]->size());
      for (int c = 0; c < acts[i]->size(); ++c)
        values[c] = rhos[j].class_of(rep[c]);
      transitions.emplace(std::pair<int, int>(i, j),
                          ActMap(acts[i], acts[j], std::move(values)));
    }
  }
  return make_system(std::move(acts), std::move(leq), std::move(transitions));
}

DirectSystem idempotent_kernel_system(const MonoidPtr& m) {
  InverseCheck inv = is_inverse_monoid(*m);
  if (!inv.inverse)
    throw Error(errc::not_inverse,
                fmt::format("element {} has {} inverses", inv.witness,
                            inv.inverse_count));
  ActPtr reg = regular_act(m);
  std::vector<Congruence> kernels;
  for (int e : idempotents(*m)) {
    std::vector<int> values(m->size());
    for (int s = 0; s < m->size(); ++s) values[s] = m->mul(e, s);
    Congruence k = kernel(ActMap(reg, reg, std::move(values)));
    if (std::find(kernels.begin(), kernels.end(), k) == kernels.end())
      kernels.push_back(k);
  }
  return quotient_chain_system(reg, kernels);
}

}  // namespace actkit
