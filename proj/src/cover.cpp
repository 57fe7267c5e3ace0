#include "actkit/cover.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>

#include "actkit/congruence.hpp"
#include "actkit/error.hpp"
#include "actkit/flatness.hpp"
#include "actkit/hom.hpp"

namespace actkit {

Skeleton build_skeleton(const MonoidPtr& m, ActClass cls) {
  if (cls != ActClass::Pr && cls != ActClass::SF && cls != ActClass::CP)
    throw Error(errc::unsupported_class,
                fmt::format("no finite skeleton construction for class {}",
                            class_name(cls)));
  ActPtr reg = regular_act(m);
  std::set<std::pair<int, std::vector<int>>> canon;
  if (cls == ActClass::Pr) {
    for (int e : idempotents(*m)) {
      std::vector<int> carrier;
      for (int s = 0; s < m->size(); ++s) carrier.push_back(m->mul(e, s));
      std::sort(carrier.begin(), carrier.end());
      carrier.erase(std::unique(carrier.begin(), carrier.end()),
                    carrier.end());
      ActPtr sub = subact(reg, carrier).act;
      canon.insert({sub->size(), act_canonical_form(*sub)});
    }
  } else {
    for (const Congruence& rho : all_congruences(reg)) {
      ActPtr q = quotient_act(reg, rho).act;
      if (in_class(*q, cls))
        canon.insert({q->size(), act_canonical_form(*q)});
    }
  }
  Skeleton skel{cls, m, {}};
  for (const auto& [size, table] : canon)
    skel.members.push_back(
        std::make_shared<const FiniteAct>(m, table, size));
  return skel;
}

namespace {

struct FactorSearch {
  bool ok = true;
  std::optional<ActMap> unfactored;
  std::vector<FactorizationEntry> entries;
};

// All homs from skeleton members into the act, tagged by member index.
std::vector<std::pair<int, ActMap>> member_homs(const Skeleton& skel,
                                                const ActPtr& a) {
  std::vector<std::pair<int, ActMap>> out;
  for (std::size_t mi = 0; mi < skel.members.size(); ++mi)
    for (ActMap& h : homs(skel.members[mi], a))
      out.push_back({static_cast<int>(mi), std::move(h)});
  return out;
}

// For every recorded (member, hom) find a factorization through g.
FactorSearch factor_through(const ActMap& g,
                            const std::vector<std::pair<int, ActMap>>& hs) {
  FactorSearch out;
  for (const auto& [mi, h] : hs) {
    const ActPtr& k = h.domain;
    std::vector<std::vector<char>> allowed(
        k->size(), std::vector<char>(g.domain->size(), 0));
    for (int x = 0; x < k->size(); ++x)
      for (int d = 0; d < g.domain->size(); ++d)
        allowed[x][d] = g(d) == h(x);
    std::optional<ActMap> f = first_hom(k, g.domain, allowed);
    if (!f) {
      out.ok = false;
      out.unfactored = h;
      return out;
    }
    out.entries.push_back({mi, h, std::move(*f)});
  }
  return out;
}

bool is_permutation(const ActMap& f) {
  std::vector<char> hit(f.values.size(), 0);
  for (int v : f.values) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::optional<ActMap> non_iso_endo(const ActMap& g) {
  for (ActMap& f : endos_over(g))
    if (!is_permutation(f)) return std::move(f);
  return std::nullopt;
}

PrecoverCheck is_precover_impl(const ActMap& g, const Skeleton& skel) {
  if (!in_class(*g.domain, skel.cls))
    throw Error(errc::domain_not_in_class,
                fmt::format("domain of the candidate map is not in {}",
                            class_name(skel.cls)));
  FactorSearch fs = factor_through(g, member_homs(skel, g.codomain));
  return {fs.ok, std::move(fs.unfactored)};
}

}  // namespace

PrecoverCertificate build_precover(const ActPtr& a, ActClass cls) {
  Skeleton skel = build_skeleton(a->monoid(), cls);
  std::vector<std::pair<int, ActMap>> copies;  // (member index, hom)
  std::vector<ActPtr> parts;
  for (std::size_t mi = 0; mi < skel.members.size(); ++mi) {
    for (ActMap& h : homs(skel.members[mi], a)) {
      copies.push_back({static_cast<int>(mi), std::move(h)});
      parts.push_back(skel.members[mi]);
    }
  }
  if (copies.empty())
    throw std::logic_error(
        "no skeleton member maps into the target, impossible while the "
        "regular act is a member");
  Coproduct cop = coproduct(parts);
  std::vector<int> values(cop.act->size());
  for (std::size_t c = 0; c < copies.size(); ++c)
    for (int x = 0; x < parts[c]->size(); ++x)
      values[cop.injections[c](x)] = copies[c].second(x);
  PrecoverCertificate cert{a, cop.act, ActMap(cop.act, a, std::move(values)),
                           {}};
  for (std::size_t c = 0; c < copies.size(); ++c)
    cert.factorizations.push_back({copies[c].first,
                                   std::move(copies[c].second),
                                   std::move(cop.injections[c])});
  return cert;
}

bool verify_certificate(const PrecoverCertificate& cert) {
  if (!(*cert.map.domain == *cert.carrier) ||
      !(*cert.map.codomain == *cert.target))
    return false;
  for (const FactorizationEntry& e : cert.factorizations) {
    if (!(*e.factor.domain == *e.hom.domain)) return false;
    if (!(*e.factor.codomain == *cert.carrier)) return false;
    if (!(*e.hom.codomain == *cert.target)) return false;
    for (int x = 0; x < e.hom.domain->size(); ++x)
      if (cert.map(e.factor(x)) != e.hom(x)) return false;
  }
  return true;
}

PrecoverCheck is_precover(const ActMap& g, ActClass cls) {
  return is_precover_impl(g, build_skeleton(g.domain->monoid(), cls));
}

CoverCheck is_cover(const ActMap& g, ActClass cls) {
  PrecoverCheck pre = is_precover(g, cls);
  if (!pre.ok) return {false, std::move(pre.unfactored), std::nullopt};
  if (auto bad = non_iso_endo(g))
    return {false, std::nullopt, std::move(bad)};
  return {true, std::nullopt, std::nullopt};
}

namespace {

// Ascending (size, elements) enumeration of the action-closed subsets of
// the carrier.  Only expansions that keep the set growing toward an epi are
// generated: every epi-closed subset is a union of principal subacts and can
// be assembled fiber-first, so restricting growth steps to principals that
// hit a missing fiber (until the set is epi) loses no candidate and prunes
// hard.
struct SubsetSearch {
  const ActPtr& carrier;
  const ActMap& map;
  int target_size;
  std::vector<std::vector<int>> principals;
  std::set<std::vector<int>> seen;
  std::set<std::pair<int, std::vector<int>>> frontier;

  SubsetSearch(const ActPtr& carrier_, const ActMap& map_)
      : carrier(carrier_), map(map_), target_size(map_.codomain->size()) {
    std::set<std::vector<int>> uniq;
    for (int x = 0; x < carrier->size(); ++x) {
      std::vector<int> p;
      for (int s = 0; s < carrier->monoid()->size(); ++s)
        p.push_back(carrier->act(x, s));
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
      uniq.insert(std::move(p));
    }
    principals.assign(uniq.begin(), uniq.end());
    for (const auto& p : principals) push(p);
  }

  void push(std::vector<int> b) {
    if (seen.insert(b).second)
      frontier.insert({static_cast<int>(b.size()), std::move(b)});
  }

  bool epi(const std::vector<int>& b) const {
    std::vector<char> hit(target_size, 0);
    int count = 0;
    for (int x : b)
      if (!hit[map(x)]) hit[map(x)] = 1, ++count;
    return count == target_size;
  }

  std::optional<std::vector<int>> pop() {
    if (frontier.empty()) return std::nullopt;
    std::vector<int> b = frontier.begin()->second;
    frontier.erase(frontier.begin());
    bool is_epi = epi(b);
    std::vector<char> fiber_hit(target_size, 0);
    for (int x : b) fiber_hit[map(x)] = 1;
    for (const auto& p : principals) {
      bool outside = false, useful = is_epi;
      for (int x : p) {
        if (!std::binary_search(b.begin(), b.end(), x)) outside = true;
        if (!fiber_hit[map(x)]) useful = true;
      }
      if (!outside || !useful) continue;
      std::vector<int> u;
      std::set_union(b.begin(), b.end(), p.begin(), p.end(),
                     std::back_inserter(u));
      push(std::move(u));
    }
    return b;
  }
};

}  // namespace

CoverSearch find_cover(const ActPtr& a, ActClass cls) {
  Skeleton skel = build_skeleton(a->monoid(), cls);
  PrecoverCertificate pre = build_precover(a, cls);
  std::vector<std::pair<int, ActMap>> hs = member_homs(skel, a);
  CoverSearch result;
  SubsetSearch search(pre.carrier, pre.map);
  long long budget = search_budget();
  while (auto b = search.pop()) {
    if (++result.candidates > budget)
      throw Error(errc::search_budget_exceeded,
                  fmt::format("cover search examined {} subsets",
                              result.candidates));
    if (!search.epi(*b)) continue;
    Subact sub = subact(pre.carrier, *b);
    std::vector<int> values;
    values.reserve(b->size());
    for (int x : *b) values.push_back(pre.map(x));
    ActMap candidate(sub.act, a, std::move(values));
    if (!in_class(*sub.act, cls)) continue;
    FactorSearch fs = factor_through(candidate, hs);
    if (!fs.ok) continue;
    if (non_iso_endo(candidate)) continue;
    result.found = true;
    result.certificate = PrecoverCertificate{a, sub.act, candidate,
                                             std::move(fs.entries)};
    result.cover = std::move(candidate);
    return result;
  }

  // The subset phase failing contradicts the cover-existence theorem; try
  // arbitrary coproducts of skeleton members before reporting that.
  result.fallback_used = true;
  int max_parts = pre.carrier->size();
  std::vector<int> pick;
  auto attempt = [&]() -> bool {
    std::vector<ActPtr> parts;
    for (int mi : pick) parts.push_back(skel.members[mi]);
    Coproduct cop = coproduct(parts);
    for (const ActMap& h : homs(cop.act, a)) {
      if (++result.candidates > budget)
        throw Error(errc::search_budget_exceeded,
                    fmt::format("cover search examined {} candidates",
                                result.candidates));
      std::vector<char> hit(a->size(), 0);
      int count = 0;
      for (int v : h.values)
        if (!hit[v]) hit[v] = 1, ++count;
      if (count != a->size()) continue;
      FactorSearch fs = factor_through(h, hs);
      if (!fs.ok) continue;
      if (non_iso_endo(h)) continue;
      result.found = true;
      result.cover = h;
      result.certificate =
          PrecoverCertificate{a, cop.act, h, std::move(fs.entries)};
      return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int next, int remaining) -> bool {
    if (remaining == 0) return attempt();
    for (int mi = next; mi < static_cast<int>(skel.members.size()); ++mi) {
      pick.push_back(mi);
      if (self(self, mi, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= max_parts && !result.found; ++k) {
    pick.clear();
    rec(rec, 0, k);
    if (result.found) return result;
  }
  return result;
}

bool is_projective_cover(const ActMap& g) {
  if (!in_class(*g.domain, ActClass::Pr))
    throw Error(errc::domain_not_projective,
                "domain of a projective cover must be projective");
  {
    std::vector<char> hit(g.codomain->size(), 0);
    for (int v : g.values) hit[v] = 1;
    for (int y = 0; y < g.codomain->size(); ++y)
      if (!hit[y])
        throw Error(errc::not_epi,
                    fmt::format("element {} has no preimage", y));
  }
  const FiniteAct& c = *g.domain;
  const FiniteMonoid& m = *c.monoid();
  std::vector<std::vector<char>> reach(c.size(),
                                       std::vector<char>(c.size(), 0));
  for (int y = 0; y < c.size(); ++y)
    for (int s = 0; s < m.size(); ++s) reach[y][c.act(y, s)] = 1;
  // Every proper action-closed subset sits inside some M_x = {y : x not in
  // yS}, itself closed, so onto-ness of a proper closed subset is equivalent
  // to onto-ness of some M_x.
  for (int x = 0; x < c.size(); ++x) {
    std::vector<char> hit(g.codomain->size(), 0);
    int count = 0;
    for (int y = 0; y < c.size(); ++y) {
      if (reach[y][x]) continue;
      if (!hit[g(y)]) hit[g(y)] = 1, ++count;
    }
    if (count == g.codomain->size()) return false;
  }
  return true;
}

std::optional<ActMap> iso_over(const ActMap& g1, const ActMap& g2) {
  if (!(*g1.codomain == *g2.codomain))
    throw Error(errc::precondition_violated,
                "maps must share their codomain");
  if (g1.domain->size() != g2.domain->size()) return std::nullopt;
  std::vector<std::vector<char>> allowed(
      g1.domain->size(), std::vector<char>(g2.domain->size(), 0));
  for (int x = 0; x < g1.domain->size(); ++x)
    for (int y = 0; y < g2.domain->size(); ++y)
      allowed[x][y] = g2(y) == g1(x);
  for (ActMap& h : homs(g1.domain, g2.domain, allowed))
    if (is_permutation(h)) return std::move(h);
  return std::nullopt;
}

}  // namespace actkit
