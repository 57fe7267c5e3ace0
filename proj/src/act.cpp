#include "actkit/act.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "actkit/detail/union_find.hpp"

namespace actkit {

FiniteAct::FiniteAct(MonoidPtr monoid, std::vector<int> action, int size)
    : monoid_(std::move(monoid)), size_(size), action_(std::move(action)) {
  if (!monoid_) throw Error(errc::invalid_input, "act needs a monoid");
  int ns = monoid_->size();
  if (size_ <= 0 ||
      action_.size() != static_cast<size_t>(size_) * ns) {
    throw Error(errc::invalid_input,
                fmt::format("action table must be {}x{}", size_, ns));
  }
  for (int v : action_) {
    if (v < 0 || v >= size_) {
      throw Error(errc::index_out_of_range,
                  fmt::format("action value {} not in [0,{})", v, size_));
    }
  }
  int one = monoid_->identity();
  for (int a = 0; a < size_; ++a) {
    if (act(a, one) != a) {
      throw Error(errc::identity_axiom,
                  fmt::format("a*1 != a for a={}", a));
    }
  }
  for (int a = 0; a < size_; ++a) {
    for (int s = 0; s < ns; ++s) {
      int as = act(a, s);
      for (int t = 0; t < ns; ++t) {
        if (act(as, t) != act(a, monoid_->mul(s, t))) {
          throw Error(errc::associativity_axiom,
                      fmt::format("(a*s)*t != a*(st) for (a,s,t)=({},{},{})",
                                  a, s, t));
        }
      }
    }
  }
}

ActPtr make_act(MonoidPtr monoid,
                const std::vector<std::vector<int>>& action) {
  if (!monoid) throw Error(errc::invalid_input, "act needs a monoid");
  int n = static_cast<int>(action.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * monoid->size());
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != monoid->size()) {
      throw Error(errc::invalid_input, "action row width != monoid size");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return std::make_shared<const FiniteAct>(std::move(monoid), std::move(flat),
                                           n);
}

ActPtr theta_act(MonoidPtr monoid) {
  std::vector<int> row(monoid->size(), 0);
  return std::make_shared<const FiniteAct>(std::move(monoid), std::move(row),
                                           1);
}

ActPtr regular_act(MonoidPtr monoid) {
  std::vector<int> flat = monoid->table();
  int n = monoid->size();
  return std::make_shared<const FiniteAct>(std::move(monoid), std::move(flat),
                                           n);
}

ActMap::ActMap(ActPtr dom, ActPtr cod, std::vector<int> vals)
    : domain(std::move(dom)), codomain(std::move(cod)), values(std::move(vals)) {
  if (!domain || !codomain) {
    throw Error(errc::invalid_input, "map needs both endpoints");
  }
  if (!same_monoid(domain->monoid(), codomain->monoid())) {
    throw Error(errc::mixed_monoids, "map endpoints over different monoids");
  }
  if (values.size() != static_cast<size_t>(domain->size())) {
    throw Error(errc::invalid_input, "value list length != domain size");
  }
  for (int v : values) {
    if (v < 0 || v >= codomain->size()) {
      throw Error(errc::index_out_of_range,
                  fmt::format("map value {} not in [0,{})", v,
                              codomain->size()));
    }
  }
  int ns = domain->monoid()->size();
  for (int a = 0; a < domain->size(); ++a) {
    for (int s = 0; s < ns; ++s) {
      if (values[domain->act(a, s)] != codomain->act(values[a], s)) {
        throw Error(errc::not_equivariant,
                    fmt::format("f(a*s) != f(a)*s for (a,s)=({},{})", a, s));
      }
    }
  }
}

ActMap identity_map(const ActPtr& a) {
  std::vector<int> v(a->size());
  std::iota(v.begin(), v.end(), 0);
  return ActMap(a, a, std::move(v));
}

ActMap compose(const ActMap& second, const ActMap& first) {
  if (!(*first.codomain == *second.domain)) {
    throw Error(errc::invalid_input, "compose: endpoints do not match");
  }
  std::vector<int> v(first.values.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = second.values[first.values[i]];
  return ActMap(first.domain, second.codomain, std::move(v));
}

Coproduct coproduct(const std::vector<ActPtr>& parts) {
  if (parts.empty()) {
    throw Error(errc::invalid_input, "coproduct of zero acts is empty");
  }
  const MonoidPtr& m = parts.front()->monoid();
  int ns = m->size();
  int total = 0;
  for (const auto& p : parts) {
    if (!same_monoid(p->monoid(), m)) {
      throw Error(errc::mixed_monoids, "coproduct parts over different monoids");
    }
    total += p->size();
  }
  std::vector<int> flat(static_cast<size_t>(total) * ns);
  int base = 0;
  std::vector<int> bases;
  for (const auto& p : parts) {
    bases.push_back(base);
    for (int a = 0; a < p->size(); ++a)
      for (int s = 0; s < ns; ++s)
        flat[(base + a) * ns + s] = base + p->act(a, s);
    base += p->size();
  }
  auto act = std::make_shared<const FiniteAct>(m, std::move(flat), total);
  Coproduct out{act, {}};
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> v(parts[i]->size());
    std::iota(v.begin(), v.end(), bases[i]);
    out.injections.emplace_back(parts[i], act, std::move(v));
  }
  return out;
}

std::vector<std::vector<int>> decompose_indecomposable(const FiniteAct& a) {
  detail::UnionFind uf(a.size());
  int ns = a.monoid()->size();
  for (int x = 0; x < a.size(); ++x)
    for (int s = 0; s < ns; ++s) uf.unite(x, a.act(x, s));
  int count = 0;
  auto ids = uf.canonical_classes(&count);
  std::vector<std::vector<int>> comps(count);
  for (int x = 0; x < a.size(); ++x) comps[ids[x]].push_back(x);
  return comps;
}

Subact subact(const ActPtr& ambient, const std::vector<int>& elements) {
  if (elements.empty()) throw Error(errc::not_a_subact, "empty subset");
  if (!std::is_sorted(elements.begin(), elements.end()) ||
      std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw Error(errc::invalid_input, "subact carrier must be sorted and unique");
  }
  std::vector<int> pos(ambient->size(), -1);
  for (size_t i = 0; i < elements.size(); ++i) {
    int e = elements[i];
    if (e < 0 || e >= ambient->size()) {
      throw Error(errc::index_out_of_range, fmt::format("element {}", e));
    }
    pos[e] = static_cast<int>(i);
  }
  int ns = ambient->monoid()->size();
  std::vector<int> flat(elements.size() * ns);
  for (size_t i = 0; i < elements.size(); ++i) {
    for (int s = 0; s < ns; ++s) {
      int img = ambient->act(elements[i], s);
      if (pos[img] < 0) {
        throw Error(errc::not_a_subact,
                    fmt::format("{}*{} = {} escapes the subset", elements[i],
                                s, img));
      }
      flat[i * ns + s] = pos[img];
    }
  }
  auto act = std::make_shared<const FiniteAct>(
      ambient->monoid(), std::move(flat), static_cast<int>(elements.size()));
  return {act, ActMap(act, ambient, elements)};
}

ReesQuotient rees_quotient(const ActPtr& y, const std::vector<int>& subset) {
  subact(y, subset);  // validates closure, nonemptiness, bounds
  std::vector<char> in(y->size(), 0);
  for (int e : subset) in[e] = 1;
  // class ids by least member: the collapsed class is represented by the
  // least element of the subset.
  std::vector<int> cls(y->size(), -1);
  int next = 0;
  int collapsed = -1;
  for (int x = 0; x < y->size(); ++x) {
    if (cls[x] >= 0) continue;
    if (in[x]) {
      if (collapsed < 0) collapsed = next++;
      cls[x] = collapsed;
      for (int z = x + 1; z < y->size(); ++z)
        if (in[z]) cls[z] = collapsed;
    } else {
      cls[x] = next++;
    }
  }
  int ns = y->monoid()->size();
  std::vector<int> rep(next, -1);
  for (int x = y->size() - 1; x >= 0; --x) rep[cls[x]] = x;
  std::vector<int> flat(static_cast<size_t>(next) * ns);
  for (int c = 0; c < next; ++c)
    for (int s = 0; s < ns; ++s) flat[c * ns + s] = cls[y->act(rep[c], s)];
  auto q = std::make_shared<const FiniteAct>(y->monoid(), std::move(flat),
                                             next);
  return {q, ActMap(y, q, std::move(cls))};
}

std::optional<Pullback> pullback(const ActMap& f, const ActMap& g) {
  if (!(*f.codomain == *g.codomain)) {
    throw Error(errc::invalid_input, "pullback needs a common codomain");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int b = 0; b < f.domain->size(); ++b)
    for (int c = 0; c < g.domain->size(); ++c)
      if (f(b) == g(c)) pairs.emplace_back(b, c);
  if (pairs.empty()) return std::nullopt;
  int ns = f.domain->monoid()->size();
  auto index_of = [&](int b, int c) {
    return static_cast<int>(std::lower_bound(pairs.begin(), pairs.end(),
                                             std::make_pair(b, c)) -
                            pairs.begin());
  };
  std::vector<int> flat(pairs.size() * ns);
  for (size_t i = 0; i < pairs.size(); ++i)
    for (int s = 0; s < ns; ++s)
      flat[i * ns + s] = index_of(f.domain->act(pairs[i].first, s),
                                  g.domain->act(pairs[i].second, s));
  auto act = std::make_shared<const FiniteAct>(
      f.domain->monoid(), std::move(flat), static_cast<int>(pairs.size()));
  std::vector<int> left(pairs.size()), right(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    left[i] = pairs[i].first;
    right[i] = pairs[i].second;
  }
  return Pullback{act, ActMap(act, f.domain, std::move(left)),
                  ActMap(act, g.domain, std::move(right)), std::move(pairs)};
}

}  // namespace actkit
