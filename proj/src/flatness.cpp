#include "actkit/flatness.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "actkit/congruence.hpp"
#include "actkit/error.hpp"
#include "actkit/hom.hpp"

namespace actkit {

const char* class_name(ActClass c) {
  switch (c) {
    case ActClass::Pr:
      return "Pr";
    case ActClass::SF:
      return "SF";
    case ActClass::CP:
      return "CP";
    case ActClass::E:
      return "E";
    case ActClass::LC:
      return "LC";
  }
  throw std::logic_error("class_name: bad class tag");
}

ActClass class_from_name(const std::string& name) {
  for (ActClass c : {ActClass::Pr, ActClass::SF, ActClass::CP, ActClass::E,
                     ActClass::LC})
    if (name == class_name(c)) return c;
  throw Error(errc::unsupported_class,
              fmt::format("unknown act class '{}'", name));
}

std::optional<std::array<int, 3>> condition_p_witness(const FiniteAct& act,
                                                      int a, int a_prime,
                                                      int u, int u_prime) {
  const FiniteMonoid& m = *act.monoid();
  for (int base = 0; base < act.size(); ++base) {
    for (int s = 0; s < m.size(); ++s) {
      if (act.act(base, s) != a) continue;
      for (int s2 = 0; s2 < m.size(); ++s2) {
        if (act.act(base, s2) == a_prime && m.mul(s, u) == m.mul(s2, u_prime))
          return std::array<int, 3>{base, s, s2};
      }
    }
  }
  return std::nullopt;
}

PCheck satisfies_P(const FiniteAct& a) {
  const FiniteMonoid& m = *a.monoid();
  for (int x = 0; x < a.size(); ++x) {
    for (int u = 0; u < m.size(); ++u) {
      int lhs = a.act(x, u);
      for (int y = 0; y < a.size(); ++y) {
        for (int v = 0; v < m.size(); ++v) {
          if (a.act(y, v) != lhs) continue;
          if (!condition_p_witness(a, x, y, u, v))
            return {false, PFailure{x, y, u, v}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

ECheck satisfies_E(const FiniteAct& a) {
  const FiniteMonoid& m = *a.monoid();
  for (int x = 0; x < a.size(); ++x) {
    for (int u = 0; u < m.size(); ++u) {
      for (int v = 0; v < m.size(); ++v) {
        if (a.act(x, u) != a.act(x, v)) continue;
        bool found = false;
        for (int base = 0; base < a.size() && !found; ++base) {
          for (int s = 0; s < m.size() && !found; ++s) {
            if (a.act(base, s) == x && m.mul(s, u) == m.mul(s, v)) found = true;
          }
        }
        if (!found) return {false, EFailure{x, u, v}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

bool locally_cyclic(const FiniteAct& a) {
  const FiniteMonoid& m = *a.monoid();
  int n = a.size();
  // cone[z] = elements of zS
  std::vector<std::vector<char>> cone(n, std::vector<char>(n, 0));
  for (int z = 0; z < n; ++z)
    for (int s = 0; s < m.size(); ++s) cone[z][a.act(z, s)] = 1;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      bool covered = false;
      for (int z = 0; z < n && !covered; ++z)
        covered = cone[z][x] && cone[z][y];
      if (!covered) return false;
    }
  }
  return true;
}

bool projective(const FiniteAct& a) {
  ActPtr reg = regular_act(a.monoid());
  std::vector<ActPtr> principal;  // eS per idempotent e
  for (int e : idempotents(*a.monoid())) {
    std::vector<int> carrier;
    for (int s = 0; s < a.monoid()->size(); ++s)
      carrier.push_back(a.monoid()->mul(e, s));
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    principal.push_back(subact(reg, carrier).act);
  }
  ActPtr self = std::make_shared<const FiniteAct>(a);
  for (const auto& comp : decompose_indecomposable(a)) {
    ActPtr part = subact(self, comp).act;
    bool matched = false;
    for (const ActPtr& p : principal) {
      if (find_iso(part, p)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

bool in_class(const FiniteAct& a, ActClass cls) {
  switch (cls) {
    case ActClass::CP:
      return satisfies_P(a).holds;
    case ActClass::E:
      return satisfies_E(a).holds;
    case ActClass::SF:
      return satisfies_P(a).holds && satisfies_E(a).holds;
    case ActClass::LC:
      return locally_cyclic(a);
    case ActClass::Pr:
      return projective(a);
  }
  throw std::logic_error("in_class: bad class tag");
}

PSystem::PSystem(ActPtr act_, std::vector<int> xs_, std::vector<int> ss_,
                 std::vector<int> ts_)
    : act(std::move(act_)),
      xs(std::move(xs_)),
      ss(std::move(ss_)),
      ts(std::move(ts_)) {
  if (xs.empty() || ss.size() + 1 != xs.size() || ts.size() != ss.size())
    throw Error(errc::precondition_violated,
                fmt::format("equation chain needs n elements and n-1 "
                            "coefficient pairs, got {}/{}/{}",
                            xs.size(), ss.size(), ts.size()));
  auto in_act = [&](int v) { return v >= 0 && v < act->size(); };
  auto in_mon = [&](int v) { return v >= 0 && v < act->monoid()->size(); };
  if (!std::all_of(xs.begin(), xs.end(), in_act) ||
      !std::all_of(ss.begin(), ss.end(), in_mon) ||
      !std::all_of(ts.begin(), ts.end(), in_mon))
    throw Error(errc::precondition_violated, "system index out of range");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (act->act(xs[i], ss[i]) != act->act(xs[i + 1], ts[i]))
      throw Error(errc::precondition_violated,
                  fmt::format("equation {} does not hold in the act: "
                              "{}*{} = {} but {}*{} = {}",
                              i, xs[i], ss[i], act->act(xs[i], ss[i]),
                              xs[i + 1], ts[i], act->act(xs[i + 1], ts[i])));
  }
}

bool check_P_solution(const PSystem& sys, const PSystemSolution& sol) {
  const FiniteAct& a = *sys.act;
  const FiniteMonoid& m = *a.monoid();
  if (sol.us.size() != sys.xs.size()) return false;
  for (std::size_t i = 0; i < sys.xs.size(); ++i)
    if (a.act(sol.root, sol.us[i]) != sys.xs[i]) return false;
  for (std::size_t i = 0; i + 1 < sys.xs.size(); ++i)
    if (m.mul(sol.us[i], sys.ss[i]) != m.mul(sol.us[i + 1], sys.ts[i]))
      return false;
  return true;
}

PSystemSolution solve_P_system(const PSystem& sys) {
  const FiniteAct& a = *sys.act;
  const FiniteMonoid& m = *a.monoid();
  if (auto p = satisfies_P(a); !p.holds) {
    const auto& f = *p.failure;
    throw Error(errc::precondition_violated,
                fmt::format("act fails condition (P) at ({},{},{},{})", f.a,
                            f.a_prime, f.u, f.u_prime));
  }
  // One element and no equations: x_1 = x_1 * 1.
  PSystemSolution sol{sys.xs[0], {m.identity()}};
  for (std::size_t i = 0; i + 1 < sys.xs.size(); ++i) {
    // Resolve xs[i]*ss[i] = xs[i+1]*ts[i] on its own, then amalgamate the
    // new root with the accumulated one.  Witnesses exist because the act
    // satisfies (P) and both equations genuinely hold.
    auto w = condition_p_witness(a, sys.xs[i], sys.xs[i + 1], sys.ss[i],
                                 sys.ts[i]);
    if (!w) throw std::logic_error("missing (P) witness on a (P) act");
    auto [root2, s, t] = *w;
    // sol.root * us[i] = xs[i] = root2 * s
    auto w2 = condition_p_witness(a, sol.root, root2, sol.us[i], s);
    if (!w2) throw std::logic_error("missing (P) witness on a (P) act");
    auto [z, p, q] = *w2;
    // z*p = old root, z*q = root2; p*us[j] keeps xs[j] for j <= i, and
    // q*t picks up xs[i+1].  The coefficient equations survive the common
    // left factor.
    for (auto& u : sol.us) u = m.mul(p, u);
    sol.root = z;
    sol.us.push_back(m.mul(q, t));
  }
  if (!check_P_solution(sys, sol))
    throw std::logic_error("P-system solution failed re-validation");
  return sol;
}

namespace {

std::vector<char> image_mask(const ActMap& f) {
  std::vector<char> in_image(f.codomain->size(), 0);
  for (int v : f.values) in_image[v] = 1;
  return in_image;
}

void require_mono(const ActMap& f) {
  std::vector<char> seen(f.codomain->size(), 0);
  for (std::size_t x = 0; x < f.values.size(); ++x) {
    if (seen[f.values[x]])
      throw Error(errc::not_mono,
                  fmt::format("map identifies two elements at value {}",
                              f.values[x]));
    seen[f.values[x]] = 1;
  }
}

}  // namespace

bool is_P_unitary(const ActMap& f) {
  require_mono(f);
  const FiniteAct& y = *f.codomain;
  const FiniteMonoid& m = *y.monoid();
  std::vector<char> in_image = image_mask(f);
  for (int p = 0; p < y.size(); ++p) {
    if (in_image[p]) continue;
    for (int q = 0; q < y.size(); ++q) {
      if (in_image[q]) continue;
      for (int s = 0; s < m.size(); ++s) {
        int ps = y.act(p, s);
        if (!in_image[ps]) continue;
        for (int t = 0; t < m.size(); ++t) {
          int qt = y.act(q, t);
          if (in_image[qt] && ps != qt) return false;
        }
      }
    }
  }
  return true;
}

bool is_E_unitary(const ActMap& f) {
  require_mono(f);
  const FiniteAct& y = *f.codomain;
  const FiniteMonoid& m = *y.monoid();
  std::vector<char> in_image = image_mask(f);
  for (int p = 0; p < y.size(); ++p) {
    if (in_image[p]) continue;
    for (int s = 0; s < m.size(); ++s) {
      int ps = y.act(p, s);
      if (!in_image[ps]) continue;
      for (int t = 0; t < m.size(); ++t) {
        int pt = y.act(p, t);
        if (in_image[pt] && ps != pt) return false;
      }
    }
  }
  return true;
}

bool is_class_pure_congruence(const ActPtr& a, const Congruence& rho,
                              ActClass cls) {
  return in_class(*quotient_act(a, rho).act, cls);
}

}  // namespace actkit
