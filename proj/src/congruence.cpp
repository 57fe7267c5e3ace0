#include "actkit/congruence.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>

#include "actkit/detail/union_find.hpp"

namespace actkit {

namespace {

// relabel class ids by least member, in place
int canonicalize(std::vector<int>& cls) {
  std::vector<int> remap(cls.size(), -1);
  int next = 0;
  for (int& c : cls) {
    if (remap[c] < 0) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

}  // namespace

Congruence::Congruence(ActPtr act, std::vector<int> class_of)
    : act_(std::move(act)), class_of_(std::move(class_of)) {
  if (!act_) throw Error(errc::invalid_input, "congruence needs an act");
  if (class_of_.size() != static_cast<size_t>(act_->size())) {
    throw Error(errc::invalid_congruence, "class map length != act size");
  }
  for (int c : class_of_) {
    if (c < 0 || c >= act_->size()) {
      throw Error(errc::invalid_congruence,
                  fmt::format("class id {} out of range", c));
    }
  }
  num_classes_ = canonicalize(class_of_);
  int ns = act_->monoid()->size();
  for (int a = 0; a < act_->size(); ++a) {
    for (int b = a + 1; b < act_->size(); ++b) {
      if (class_of_[a] != class_of_[b]) continue;
      for (int s = 0; s < ns; ++s) {
        if (class_of_[act_->act(a, s)] != class_of_[act_->act(b, s)]) {
          throw Error(errc::invalid_congruence,
                      fmt::format("classes of {}*{} and {}*{} differ", a, s, b,
                                  s));
        }
      }
    }
  }
}

bool Congruence::contains(const Congruence& other) const {
  if (!(*act_ == *other.act_)) {
    throw Error(errc::invalid_input, "congruences over different acts");
  }
  // other refines *this: members of one other-class share a this-class
  std::vector<int> seen(other.num_classes(), -1);
  for (int a = 0; a < act_->size(); ++a) {
    int oc = other.class_of(a);
    if (seen[oc] < 0) {
      seen[oc] = class_of_[a];
    } else if (seen[oc] != class_of_[a]) {
      return false;
    }
  }
  return true;
}

Congruence identity_congruence(const ActPtr& a) {
  std::vector<int> cls(a->size());
  std::iota(cls.begin(), cls.end(), 0);
  return Congruence(a, std::move(cls));
}

Congruence universal_congruence(const ActPtr& a) {
  return Congruence(a, std::vector<int>(a->size(), 0));
}

Congruence generated_congruence(
    const ActPtr& a, const std::vector<std::pair<int, int>>& pairs) {
  detail::UnionFind uf(a->size());
  int ns = a->monoid()->size();
  std::deque<std::pair<int, int>> work(pairs.begin(), pairs.end());
  for (const auto& [x, y] : work) {
    if (x < 0 || x >= a->size() || y < 0 || y >= a->size()) {
      throw Error(errc::index_out_of_range,
                  fmt::format("pair ({},{})", x, y));
    }
  }
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (!uf.unite(x, y)) continue;
    // stability: merged elements must stay merged under every translation
    for (int s = 0; s < ns; ++s) {
      int xs = a->act(x, s), ys = a->act(y, s);
      if (uf.find(xs) != uf.find(ys)) work.emplace_back(xs, ys);
    }
  }
  return Congruence(a, uf.canonical_classes());
}

namespace {

// Restricted-growth enumeration of stable partitions.  mask[a][b] == 1
// forbids a and b sharing a class.  Pruning: whenever a prefix pair lands in
// one class, all its translations that are already assigned must agree.
void enumerate_stable(const ActPtr& act, const std::vector<char>* forbid,
                      long long budget, std::vector<Congruence>& out) {
  int n = act->size();
  int ns = act->monoid()->size();
  std::vector<int> cls(n, -1);
  long long spent = 0;
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (budget >= 0 && ++spent > budget) {
      throw Error(errc::search_budget_exceeded,
                  "partition enumeration exceeded its budget");
    }
    if (i == n) {
      std::vector<int> copy(cls.begin(), cls.end());
      // full stability: partial checks skip translations past the prefix
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (copy[a] != copy[b]) continue;
          for (int s = 0; s < ns; ++s)
            if (copy[act->act(a, s)] != copy[act->act(b, s)]) return;
        }
      out.emplace_back(act, std::move(copy));
      return;
    }
    for (int c = 0; c <= used && c < n; ++c) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (cls[j] != c) continue;
        if (forbid && (*forbid)[j * n + i]) ok = false;
        for (int s = 0; s < ns && ok; ++s) {
          int js = act->act(j, s), is = act->act(i, s);
          if (js < i && is < i && js != is && cls[js] != cls[is]) ok = false;
          if (forbid && js < is && (*forbid)[js * n + is]) ok = false;
          if (forbid && is < js && (*forbid)[is * n + js]) ok = false;
        }
      }
      if (!ok) continue;
      cls[i] = c;
      self(self, i + 1, c == used ? used + 1 : used);
      cls[i] = -1;
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<Congruence> all_congruences(const ActPtr& a) {
  if (a->size() > 9) {
    throw Error(errc::too_large,
                fmt::format("all_congruences caps at 9 elements, got {}",
                            a->size()));
  }
  std::vector<Congruence> out;
  enumerate_stable(a, nullptr, -1, out);
  return out;
}

std::vector<Congruence> congruences_refining(const ActPtr& a,
                                             const Congruence& within,
                                             long long candidate_budget) {
  if (!(*within.act() == *a)) {
    throw Error(errc::invalid_input, "congruence lives on a different act");
  }
  int n = a->size();
  std::vector<char> forbid(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!within.relates(x, y)) forbid[x * n + y] = 1;
  std::vector<Congruence> out;
  enumerate_stable(a, &forbid, candidate_budget, out);
  return out;
}

Congruence kernel(const ActMap& f) {
  std::vector<int> raw(f.domain->size());
  std::vector<int> remap(f.codomain->size(), -1);
  int next = 0;
  for (int a = 0; a < f.domain->size(); ++a) {
    int v = f(a);
    if (remap[v] < 0) remap[v] = next++;
    raw[a] = remap[v];
  }
  return Congruence(f.domain, std::move(raw));
}

Congruence union_of_chain(const std::vector<Congruence>& chain) {
  if (chain.empty()) throw Error(errc::invalid_input, "empty chain");
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!chain[i + 1].contains(chain[i])) {
      // witness: a pair related earlier but not later
      for (int a = 0; a < chain[i].act()->size(); ++a)
        for (int b = a + 1; b < chain[i].act()->size(); ++b)
          if (chain[i].relates(a, b) && !chain[i + 1].relates(a, b)) {
            throw Error(errc::not_a_chain,
                        fmt::format("pair ({},{}) related at step {} but not "
                                    "at step {}",
                                    a, b, i, i + 1));
          }
      throw Error(errc::not_a_chain, "containment fails");
    }
  }
  return chain.back();
}

QuotientAct quotient_act(const ActPtr& a, const Congruence& rho) {
  if (!(*rho.act() == *a)) {
    throw Error(errc::invalid_input, "congruence lives on a different act");
  }
  int n = rho.num_classes();
  int ns = a->monoid()->size();
  std::vector<int> rep(n, -1);
  for (int x = a->size() - 1; x >= 0; --x) rep[rho.class_of(x)] = x;
  std::vector<int> flat(static_cast<size_t>(n) * ns);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < ns; ++s)
      flat[c * ns + s] = rho.class_of(a->act(rep[c], s));
  auto q = std::make_shared<const FiniteAct>(a->monoid(), std::move(flat), n);
  std::vector<int> vals(a->size());
  for (int x = 0; x < a->size(); ++x) vals[x] = rho.class_of(x);
  return {q, ActMap(a, q, std::move(vals))};
}

Congruence min_group_congruence(const MonoidPtr& m) {
  auto check = is_inverse_monoid(*m);
  if (!check.inverse) {
    throw Error(errc::not_inverse,
                fmt::format("element {} has {} inverses", check.witness,
                            check.inverse_count));
  }
  auto reg = regular_act(m);
  auto es = idempotents(*m);
  int n = m->size();
  detail::UnionFind uf(n);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      for (int e : es)
        if (m->mul(e, s) == m->mul(e, t)) {
          uf.unite(s, t);
          break;
        }
  return Congruence(reg, uf.canonical_classes());
}

}  // namespace actkit
