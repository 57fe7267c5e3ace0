#include "actkit/suites.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "actkit/bicyclic.hpp"
#include "actkit/classes.hpp"
#include "actkit/colimit.hpp"
#include "actkit/congruence.hpp"
#include "actkit/cover.hpp"
#include "actkit/flatness.hpp"
#include "actkit/hom.hpp"
#include "actkit/io.hpp"
#include "actkit/purity.hpp"

namespace actkit {
namespace {

using nlohmann::json;

void fail(PropertyResult& p, std::string detail, json witness = json::object()) {
  if (!p.pass) return;  // keep the first counterexample
  p.pass = false;
  p.detail = std::move(detail);
  p.witness = std::move(witness);
}

// Property bodies run isolated so a stray exception turns into a failed
// property instead of killing the whole report.
template <class Body>
void property(SuiteReport& r, std::string name, Body&& body) {
  PropertyResult p;
  p.name = std::move(name);
  try {
    body(p);
  } catch (const std::exception& e) {
    fail(p, fmt::format("unexpected exception: {}", e.what()));
  }
  r.properties.push_back(std::move(p));
}

std::string corpus_desc(const Corpus& c, const CorpusSpec& s) {
  return fmt::format(
      "{} monoids (order <= {} plus {} builders), acts of size <= {} up to "
      "isomorphism",
      c.entries.size(), s.max_monoid_order, s.builders.size(), s.max_act_size);
}

json map_witness(const std::string& entry, const ActMap& g) {
  return json{{"monoid", entry}, {"map", map_to_json(g)}};
}

// ---------------------------------------------------------------- bicyclic

void suite_bicyclic(const CorpusSpec&, SuiteReport& r) {
  r.corpus =
      "bicyclic monoid: coordinates <= 8 for division, <= 12 for "
      "associativity";
  constexpr int kDiv = 8;
  const Nat bound = 2 * kDiv + 2;

  property(r, "left-divisor-count-bound", [&](PropertyResult& p) {
    for (int m = 0; m <= kDiv; ++m)
      for (int n = 0; n <= kDiv; ++n)
        for (int s = 0; s <= kDiv; ++s)
          for (int t = 0; t <= kDiv; ++t) {
            BicyclicElement target{m, n}, by{s, t};
            auto divs = bicyclic_left_divisors(target, by, bound);
            ++p.checks;
            if (Nat(divs.size()) > by.down + 1) {
              fail(p,
                   fmt::format("{} divisors of ({},{}) by ({},{}); bound {}",
                               divs.size(), m, n, s, t, s + 1),
                   json{{"target", json::array({m, n})},
                        {"by", json::array({s, t})},
                        {"count", divs.size()}});
              return;
            }
          }
    p.detail = fmt::format("{} pairs, every list within its s+1 bound",
                           p.checks);
  });

  property(r, "left-divisors-substitute", [&](PropertyResult& p) {
    for (int m = 0; m <= kDiv; ++m)
      for (int n = 0; n <= kDiv; ++n)
        for (int s = 0; s <= kDiv; ++s)
          for (int t = 0; t <= kDiv; ++t) {
            BicyclicElement target{m, n}, by{s, t};
            auto divs = bicyclic_left_divisors(target, by, bound);
            for (std::size_t i = 0; i < divs.size(); ++i) {
              ++p.checks;
              bool ordered = i == 0 || divs[i - 1] < divs[i];
              if (!(bicyclic_mul(divs[i], by) == target) || !ordered) {
                fail(p,
                     fmt::format("bad divisor list for ({},{}) by ({},{})", m,
                                 n, s, t));
                return;
              }
            }
          }
    p.detail = fmt::format("{} divisors re-multiplied", p.checks);
  });

  property(r, "multiplication-associative", [&](PropertyResult& p) {
    constexpr int kAssoc = 12;
    std::vector<BicyclicElement> elems;
    for (int a = 0; a <= kAssoc; ++a)
      for (int b = 0; b <= kAssoc; ++b) elems.push_back({a, b});
    for (const auto& x : elems)
      for (const auto& y : elems)
        for (const auto& z : elems) {
          ++p.checks;
          if (!(bicyclic_mul(bicyclic_mul(x, y), z) ==
                bicyclic_mul(x, bicyclic_mul(y, z)))) {
            fail(p, "associativity failure",
                 json{{"x", json::array({x.down.str(), x.up.str()})},
                      {"y", json::array({y.down.str(), y.up.str()})},
                      {"z", json::array({z.down.str(), z.up.str()})}});
            return;
          }
        }
    p.detail = fmt::format("{} triples", p.checks);
  });
}

// ------------------------------------------------------------ purity chain

void suite_purity_chain(const CorpusSpec& spec, SuiteReport& r) {
  Corpus c = generate_corpus(spec);
  r.corpus = corpus_desc(c, spec);

  struct Row {
    std::string entry;
    ActMap g;
    bool split, p1, p2, pure;
  };
  std::vector<Row> rows;
  for (const auto& e : c.entries)
    for (const auto& dom : e.acts)
      for (const auto& cod : e.acts)
        for (auto& g : epis_between(dom, cod)) {
          bool split = map_properties(g).split_epi;
          bool p1 = is_n_pure(g, 1).pure;
          bool p2 = is_n_pure(g, 2).pure;
          bool pure = is_pure_epi(g).pure;
          rows.push_back({e.name, std::move(g), split, p1, p2, pure});
        }

  property(r, "pure-implies-2-pure", [&](PropertyResult& p) {
    for (const auto& row : rows) {
      ++p.checks;
      if (row.pure && !row.p2) {
        fail(p, "pure epi that is not 2-pure", map_witness(row.entry, row.g));
        return;
      }
    }
    p.detail = fmt::format("{} corpus epis", p.checks);
  });

  property(r, "2-pure-implies-1-pure", [&](PropertyResult& p) {
    for (const auto& row : rows) {
      ++p.checks;
      if (row.p2 && !row.p1) {
        fail(p, "2-pure epi that is not 1-pure",
             map_witness(row.entry, row.g));
        return;
      }
    }
    p.detail = fmt::format("{} corpus epis", p.checks);
  });

  property(r, "split-implies-pure", [&](PropertyResult& p) {
    for (const auto& row : rows) {
      ++p.checks;
      if (row.split && !row.pure) {
        fail(p, "split epi that is not pure", map_witness(row.entry, row.g));
        return;
      }
    }
    p.detail = fmt::format("{} corpus epis", p.checks);
  });
}

// ---------------------------------------------------- pure congruence / SF

void suite_pure_congruence_sf(const CorpusSpec& spec, SuiteReport& r) {
  Corpus c = generate_corpus(spec);
  r.corpus = corpus_desc(c, spec);

  property(r, "pure-iff-quotient-strongly-flat", [&](PropertyResult& p) {
    for (const auto& e : c.entries) {
      ActPtr s = regular_act(e.monoid);
      for (const auto& rho : all_congruences(s)) {
        ++p.checks;
        bool pure = is_pure_congruence(s, rho);
        bool sf = in_class(*quotient_act(s, rho).act, ActClass::SF);
        if (pure != sf) {
          fail(p,
               fmt::format("{}: congruence with {} classes has pure={}, "
                           "strongly flat quotient={}",
                           e.name, rho.num_classes(), pure, sf),
               json{{"monoid", e.name},
                    {"congruence", congruence_to_json(rho)}});
          return;
        }
      }
    }
    p.detail = fmt::format("{} right congruences over {} monoids", p.checks,
                           c.entries.size());
  });
}

// -------------------------------------------------------- SF epi agreement

void suite_sf_epi_agreement(const CorpusSpec& spec, SuiteReport& r) {
  Corpus c = generate_corpus(spec);
  r.corpus = corpus_desc(c, spec);

  property(r, "codomain-sf-iff-pure-iff-2-pure", [&](PropertyResult& p) {
    for (const auto& e : c.entries) {
      std::vector<char> sf(e.acts.size());
      for (std::size_t i = 0; i < e.acts.size(); ++i)
        sf[i] = in_class(*e.acts[i], ActClass::SF);
      for (std::size_t i = 0; i < e.acts.size(); ++i) {
        if (!sf[i]) continue;
        for (std::size_t j = 0; j < e.acts.size(); ++j)
          for (const auto& g : epis_between(e.acts[i], e.acts[j])) {
            ++p.checks;
            bool cod_sf = sf[j];
            bool pure = is_pure_epi(g).pure;
            bool p2 = is_n_pure(g, 2).pure;
            if (cod_sf != pure || pure != p2) {
              fail(p,
                   fmt::format("{}: codomain SF={}, pure={}, 2-pure={}",
                               e.name, cod_sf, pure, p2),
                   map_witness(e.name, g));
              return;
            }
          }
      }
    }
    p.detail = fmt::format("{} epis with strongly flat domain", p.checks);
  });
}

// ------------------------------------------------------ condition transfer

void suite_condition_transfer(const CorpusSpec& spec, SuiteReport& r) {
  Corpus c = generate_corpus(spec);
  r.corpus = corpus_desc(c, spec);

  struct ERow {
    std::string entry;
    ActMap g;
    bool cod_e, p1;
  };
  struct CPRow {
    std::string entry;
    ActMap g;
    bool cod_cp, p2;
  };
  std::vector<ERow> erows;
  std::vector<CPRow> cprows;
  for (const auto& e : c.entries) {
    std::vector<char> ine(e.acts.size()), incp(e.acts.size());
    for (std::size_t i = 0; i < e.acts.size(); ++i) {
      ine[i] = in_class(*e.acts[i], ActClass::E);
      incp[i] = in_class(*e.acts[i], ActClass::CP);
    }
    for (std::size_t i = 0; i < e.acts.size(); ++i) {
      if (!ine[i] && !incp[i]) continue;
      for (std::size_t j = 0; j < e.acts.size(); ++j)
        for (const auto& g : epis_between(e.acts[i], e.acts[j])) {
          if (ine[i])
            erows.push_back(
                {e.name, g, ine[j] != 0, is_n_pure(g, 1).pure});
          if (incp[i])
            cprows.push_back(
                {e.name, g, incp[j] != 0, is_n_pure(g, 2).pure});
        }
    }
  }

  property(r, "e-codomain-iff-1-pure", [&](PropertyResult& p) {
    for (const auto& row : erows) {
      ++p.checks;
      if (row.cod_e != row.p1) {
        fail(p,
             fmt::format("{}: codomain satisfies (E)={}, 1-pure={}", row.entry,
                         row.cod_e, row.p1),
             map_witness(row.entry, row.g));
        return;
      }
    }
    p.detail = fmt::format("{} epis with (E) domain", p.checks);
  });

  property(r, "2-pure-forces-cp-codomain", [&](PropertyResult& p) {
    for (const auto& row : cprows) {
      ++p.checks;
      if (row.p2 && !row.cod_cp) {
        fail(p, fmt::format("{}: 2-pure epi with codomain failing (P)",
                            row.entry),
             map_witness(row.entry, row.g));
        return;
      }
    }
    p.detail = fmt::format("{} epis with (P) domain", p.checks);
  });

  property(r, "cp-codomain-does-not-force-2-purity", [&](PropertyResult& p) {
    long long found = 0;
    json first = json::object();
    std::string where;
    for (const auto& row : cprows) {
      ++p.checks;
      if (row.cod_cp && !row.p2) {
        if (found == 0) {
          first = map_witness(row.entry, row.g);
          where = row.entry;
        }
        ++found;
      }
    }
    if (found == 0) {
      fail(p, "expected a separating epi (codomain in (P), not 2-pure)");
      return;
    }
    p.detail = fmt::format("{} separating epis, first over {}", found, where);
    p.witness = first;
  });
}

// ------------------------------------------------------------ system corpus

struct NamedSystem {
  std::string label;
  DirectSystem sys;
};

struct ChainCase {
  std::string label;
  ActPtr x;
  Congruence lo, hi;
  DirectSystem sys;
};

struct SystemCorpus {
  std::vector<NamedSystem> systems;  // all directed by construction
  std::vector<ChainCase> quotient_chains;
  std::vector<std::pair<std::string, MonoidPtr>> inverse_monoids;
};

void append_two_chains(const CorpusEntry& e, int max_size,
                       std::vector<NamedSystem>& out) {
  for (std::size_t i = 0; i < e.acts.size(); ++i) {
    if (e.acts[i]->size() > max_size) continue;
    for (std::size_t j = 0; j < e.acts.size(); ++j) {
      if (e.acts[j]->size() > max_size) continue;
      auto fs = homs(e.acts[i], e.acts[j]);
      for (std::size_t k = 0; k < fs.size(); ++k) {
        std::map<std::pair<int, int>, ActMap> tr{{{0, 1}, fs[k]}};
        out.push_back({fmt::format("{}:chain2[{}>{}#{}]", e.name, i, j, k),
                       make_system({e.acts[i], e.acts[j]}, {{1, 1}, {0, 1}},
                                   std::move(tr))});
      }
    }
  }
}

void append_three_chains(const CorpusEntry& e, int max_size,
                         std::vector<NamedSystem>& out) {
  for (std::size_t i = 0; i < e.acts.size(); ++i) {
    if (e.acts[i]->size() > max_size) continue;
    for (std::size_t j = 0; j < e.acts.size(); ++j) {
      if (e.acts[j]->size() > max_size) continue;
      auto fs = homs(e.acts[i], e.acts[j]);
      for (std::size_t k = 0; k < e.acts.size(); ++k) {
        if (e.acts[k]->size() > max_size) continue;
        auto gs = homs(e.acts[j], e.acts[k]);
        for (std::size_t a = 0; a < fs.size(); ++a)
          for (std::size_t b = 0; b < gs.size(); ++b) {
            std::map<std::pair<int, int>, ActMap> tr{
                {{0, 1}, fs[a]},
                {{1, 2}, gs[b]},
                {{0, 2}, compose(gs[b], fs[a])}};
            out.push_back(
                {fmt::format("{}:chain3[{}>{}>{}#{},{}]", e.name, i, j, k, a,
                             b),
                 make_system({e.acts[i], e.acts[j], e.acts[k]},
                             {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}},
                             std::move(tr))});
          }
      }
    }
  }
}

void append_diamonds(const CorpusEntry& e, int max_size,
                     std::vector<NamedSystem>& out) {
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < e.acts.size(); ++i)
    if (e.acts[i]->size() <= max_size) small.push_back(i);
  const std::vector<std::vector<char>> leq{
      {1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  for (std::size_t a : small)
    for (std::size_t b : small)
      for (std::size_t cc : small)
        for (std::size_t d : small) {
          auto f1s = homs(e.acts[a], e.acts[b]);
          auto f2s = homs(e.acts[a], e.acts[cc]);
          auto g1s = homs(e.acts[b], e.acts[d]);
          auto g2s = homs(e.acts[cc], e.acts[d]);
          for (std::size_t i1 = 0; i1 < f1s.size(); ++i1)
            for (std::size_t i2 = 0; i2 < f2s.size(); ++i2)
              for (std::size_t i3 = 0; i3 < g1s.size(); ++i3)
                for (std::size_t i4 = 0; i4 < g2s.size(); ++i4) {
                  ActMap diag = compose(g1s[i3], f1s[i1]);
                  if (!(diag == compose(g2s[i4], f2s[i2]))) continue;
                  std::map<std::pair<int, int>, ActMap> tr{
                      {{0, 1}, f1s[i1]},
                      {{0, 2}, f2s[i2]},
                      {{1, 3}, g1s[i3]},
                      {{2, 3}, g2s[i4]},
                      {{0, 3}, diag}};
                  out.push_back(
                      {fmt::format("{}:diamond[{},{},{},{}#{},{},{},{}]",
                                   e.name, a, b, cc, d, i1, i2, i3, i4),
                       make_system({e.acts[a], e.acts[b], e.acts[cc],
                                    e.acts[d]},
                                   leq, std::move(tr))});
                }
        }
}

void append_quotient_chains(const CorpusEntry& e, SystemCorpus& sc) {
  std::vector<ActPtr> xs = e.acts;
  xs.push_back(regular_act(e.monoid));
  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    auto rhos = all_congruences(xs[xi]);
    for (std::size_t i = 0; i < rhos.size(); ++i)
      for (std::size_t j = 0; j < rhos.size(); ++j) {
        if (i == j || !rhos[j].contains(rhos[i])) continue;
        ChainCase cc{fmt::format("{}:qchain[x{} {}<{}]", e.name, xi, i, j),
                     xs[xi], rhos[i], rhos[j],
                     quotient_chain_system(xs[xi], {rhos[i], rhos[j]})};
        sc.systems.push_back({cc.label, cc.sys});
        sc.quotient_chains.push_back(std::move(cc));
      }
  }
}

SystemCorpus build_system_corpus(const Corpus& c, int max_act_size) {
  SystemCorpus sc;
  for (const auto& e : c.entries) {
    append_two_chains(e, max_act_size, sc.systems);
    append_three_chains(e, 2, sc.systems);
    append_diamonds(e, 2, sc.systems);
    append_quotient_chains(e, sc);
    if (is_inverse_monoid(*e.monoid).inverse) {
      sc.inverse_monoids.emplace_back(e.name, e.monoid);
      sc.systems.push_back({fmt::format("{}:idempotent-kernels", e.name),
                            idempotent_kernel_system(e.monoid)});
    }
  }
  return sc;
}

// --------------------------------------------------- colimit constructions

void suite_colimits(const CorpusSpec& spec, SuiteReport& r) {
  Corpus c = generate_corpus(spec);
  r.corpus = corpus_desc(c, spec);
  SystemCorpus sc = build_system_corpus(c, spec.max_act_size);

  property(r, "one-shot-formula-matches-generated-congruence",
           [&](PropertyResult& p) {
             for (const auto& ns : sc.systems) {
               ++p.checks;
               Cocone c1 = colimit(ns.sys);
               Cocone c2 = directed_colimit(ns.sys);
               bool ok = *c1.apex == *c2.apex && is_cocone(ns.sys, c1) &&
                         is_cocone(ns.sys, c2);
               if (ok) {
                 ActMap m12 = cocone_mediator(c1, c2);
                 ActMap m21 = cocone_mediator(c2, c1);
                 ok = compose(m21, m12) == identity_map(c1.apex) &&
                      compose(m12, m21) == identity_map(c2.apex);
               }
               if (!ok) {
                 fail(p, fmt::format("constructions disagree on {}", ns.label),
                      json{{"system", ns.label}});
                 return;
               }
             }
             p.detail = fmt::format("{} directed systems", p.checks);
           });

  property(r, "quotient-chain-colimit-is-quotient-by-union",
           [&](PropertyResult& p) {
             for (const auto& cc : sc.quotient_chains) {
               ++p.checks;
               Congruence u = union_of_chain({cc.lo, cc.hi});
               QuotientAct expect = quotient_act(cc.x, u);
               Cocone col = colimit(cc.sys);
               if (act_canonical_form(*col.apex) !=
                   act_canonical_form(*expect.act)) {
                 fail(p, fmt::format("apex mismatch on {}", cc.label),
                      json{{"system", cc.label}});
                 return;
               }
             }
             p.detail = fmt::format("{} congruence chains", p.checks);
           });

  property(r, "idempotent-kernel-colimit-is-group-quotient",
           [&](PropertyResult& p) {
             for (const auto& [name, m] : sc.inverse_monoids) {
               ++p.checks;
               DirectSystem d = idempotent_kernel_system(m);
               if (!is_directed(d)) {
                 fail(p, fmt::format("{}: system not directed", name));
                 return;
               }
               Cocone col = colimit(d);
               ActPtr s = regular_act(m);
               Congruence sigma = min_group_congruence(m);
               QuotientAct q = quotient_act(s, sigma);
               bool iso = find_iso(col.apex, q.act).has_value();
               bool pure = is_pure_congruence(s, sigma);
               bool sf = in_class(*q.act, ActClass::SF);
               if (!iso || !pure || !sf) {
                 fail(p,
                      fmt::format(
                          "{}: apex iso to group quotient={}, natural map "
                          "pure={}, quotient strongly flat={}",
                          name, iso, pure, sf),
                      json{{"monoid", name}});
                 return;
               }
             }
             p.detail =
                 fmt::format("{} inverse monoids in the corpus", p.checks);
           });

  property(r, "colimit-universal-property", [&](PropertyResult& p) {
    for (const auto& e : c.entries) {
      std::vector<ActPtr> targets{theta_act(e.monoid)};
      for (const auto& a : e.acts)
        if (a->size() <= 2) targets.push_back(a);
      std::vector<NamedSystem> small;
      append_two_chains(e, 2, small);
      for (const auto& ns : small) {
        Cocone col = colimit(ns.sys);
        std::vector<Cocone> probes;
        for (const auto& t : targets)
          for (const auto& h : homs(col.apex, t)) {
            std::vector<ActMap> legs;
            legs.reserve(col.legs.size());
            for (const auto& leg : col.legs) legs.push_back(compose(h, leg));
            probes.push_back({t, std::move(legs)});
          }
        ++p.checks;
        if (!verify_universal_property(ns.sys, col, probes)) {
          fail(p, fmt::format("universal property fails on {}", ns.label),
               json{{"system", ns.label}});
          return;
        }
      }
    }
    p.detail = fmt::format("{} systems probed", p.checks);
  });
}

// --------------------------------------------------------- closure theorems

void suite_closure(const CorpusSpec& spec, SuiteReport& r) {
  Corpus c = generate_corpus(spec);
  r.corpus = corpus_desc(c, spec);
  SystemCorpus sc = build_system_corpus(c, spec.max_act_size);

  std::map<const FiniteAct*, bool> sf_cache, cp_cache;
  auto cached = [](std::map<const FiniteAct*, bool>& cache, const ActPtr& a,
                   ActClass cls) {
    auto it = cache.find(a.get());
    if (it != cache.end()) return it->second;
    bool v = in_class(*a, cls);
    cache.emplace(a.get(), v);
    return v;
  };
  auto is_sf = [&](const ActPtr& a) {
    return cached(sf_cache, a, ActClass::SF);
  };
  auto is_cp = [&](const ActPtr& a) {
    return cached(cp_cache, a, ActClass::CP);
  };

  std::vector<ActPtr> apexes;
  apexes.reserve(sc.systems.size());
  for (const auto& ns : sc.systems) apexes.push_back(colimit(ns.sys).apex);

  property(r, "strongly-flat-closed-under-directed-colimit",
           [&](PropertyResult& p) {
             for (std::size_t i = 0; i < sc.systems.size(); ++i) {
               const auto& acts = sc.systems[i].sys.acts;
               if (!std::all_of(acts.begin(), acts.end(), is_sf)) continue;
               ++p.checks;
               if (!in_class(*apexes[i], ActClass::SF)) {
                 fail(p,
                      fmt::format("colimit of strongly flat system {} left "
                                  "the class",
                                  sc.systems[i].label),
                      json{{"system", sc.systems[i].label}});
                 return;
               }
             }
             p.detail = fmt::format("{} strongly flat systems", p.checks);
           });

  property(r, "condition-p-closed-under-directed-colimit",
           [&](PropertyResult& p) {
             for (std::size_t i = 0; i < sc.systems.size(); ++i) {
               const auto& acts = sc.systems[i].sys.acts;
               if (!std::all_of(acts.begin(), acts.end(), is_cp)) continue;
               ++p.checks;
               if (!in_class(*apexes[i], ActClass::CP)) {
                 fail(p,
                      fmt::format("colimit of condition (P) system {} left "
                                  "the class",
                                  sc.systems[i].label),
                      json{{"system", sc.systems[i].label}});
                 return;
               }
             }
             p.detail = fmt::format("{} condition (P) systems", p.checks);
           });

  property(r, "levelwise-pure-epi-colimit-is-pure", [&](PropertyResult& p) {
    constexpr int kMax = 3;
    for (const auto& e : c.entries) {
      std::vector<std::size_t> small;
      for (std::size_t i = 0; i < e.acts.size(); ++i)
        if (e.acts[i]->size() <= kMax) small.push_back(i);
      // pure epi lists per ordered act pair
      std::map<std::pair<std::size_t, std::size_t>, std::vector<ActMap>> pe;
      for (std::size_t i : small)
        for (std::size_t j : small) {
          std::vector<ActMap> out;
          for (const auto& g : epis_between(e.acts[i], e.acts[j]))
            if (is_pure_epi(g).pure) out.push_back(g);
          pe.emplace(std::make_pair(i, j), std::move(out));
        }
      for (std::size_t a0 : small)
        for (std::size_t a1 : small) {
          auto fs = homs(e.acts[a0], e.acts[a1]);
          for (std::size_t b0 : small)
            for (std::size_t b1 : small) {
              const auto& pe0 = pe[{a0, b0}];
              const auto& pe1 = pe[{a1, b1}];
              if (pe0.empty() || pe1.empty()) continue;
              for (const auto& f : fs)
                for (const auto& psi0 : pe0)
                  for (const auto& psi1 : pe1) {
                    // bottom map is forced: h(psi0(x)) = psi1(f(x))
                    std::vector<int> hv(e.acts[b0]->size(), -1);
                    bool welldef = true;
                    for (int x = 0;
                         welldef && x < e.acts[a0]->size(); ++x) {
                      int b = psi0(x), v = psi1(f(x));
                      if (hv[b] >= 0 && hv[b] != v) welldef = false;
                      hv[b] = v;
                    }
                    if (!welldef) continue;
                    ActMap h(e.acts[b0], e.acts[b1], hv);
                    std::map<std::pair<int, int>, ActMap> trx{{{0, 1}, f}};
                    std::map<std::pair<int, int>, ActMap> try_{{{0, 1}, h}};
                    DirectSystem dx = make_system(
                        {e.acts[a0], e.acts[a1]}, {{1, 1}, {0, 1}}, trx);
                    DirectSystem dy = make_system(
                        {e.acts[b0], e.acts[b1]}, {{1, 1}, {0, 1}}, try_);
                    ActMap induced = colimit_of_maps(dx, dy, {psi0, psi1});
                    ++p.checks;
                    if (!is_pure_epi(induced).pure) {
                      fail(p,
                           fmt::format("induced colimit map not pure over {}",
                                       e.name),
                           map_witness(e.name, induced));
                      return;
                    }
                  }
            }
        }
    }
    p.detail = fmt::format("{} levelwise pure epi squares", p.checks);
  });

  property(r, "pullback-of-pure-epi-is-pure", [&](PropertyResult& p) {
    for (const auto& e : c.entries) {
      for (std::size_t i = 0; i < e.acts.size(); ++i)
        for (std::size_t j = 0; j < e.acts.size(); ++j)
          for (const auto& g : epis_between(e.acts[i], e.acts[j])) {
            if (!is_pure_epi(g).pure) continue;
            for (std::size_t k = 0; k < e.acts.size(); ++k)
              for (const auto& beta : homs(e.acts[k], e.acts[j])) {
                auto pb = pullback(g, beta);
                ++p.checks;
                if (!pb) {
                  fail(p, "pullback of an epi came back empty",
                       map_witness(e.name, beta));
                  return;
                }
                if (!is_pure_epi(pb->to_right).pure) {
                  fail(p,
                       fmt::format("pullback projection not pure over {}",
                                   e.name),
                       map_witness(e.name, pb->to_right));
                  return;
                }
              }
          }
    }
    p.detail = fmt::format("{} pullbacks of pure epis", p.checks);
  });
}

// ----------------------------------------------------------- cover existence

void suite_cover(const CorpusSpec& spec, SuiteReport& r) {
  Corpus c = generate_corpus(spec);
  r.corpus = corpus_desc(c, spec);
  constexpr ActClass kClasses[] = {ActClass::Pr, ActClass::SF, ActClass::CP};

  struct Found {
    std::string entry;
    ActClass cls;
    ActPtr target;
    CoverSearch search;
  };
  std::vector<Found> found;

  property(r, "cover-exists-for-every-act", [&](PropertyResult& p) {
    for (const auto& e : c.entries)
      for (const auto& a : e.acts)
        for (ActClass cls : kClasses) {
          ++p.checks;
          CoverSearch cs = find_cover(a, cls);
          if (!cs.found) {
            fail(p,
                 fmt::format("no {} cover found over {} (act size {})",
                             class_name(cls), e.name, a->size()),
                 json{{"monoid", e.name},
                      {"class", class_name(cls)},
                      {"act", act_to_json(*a)}});
            return;
          }
          found.push_back({e.name, cls, a, std::move(cs)});
        }
    p.detail = fmt::format("{} (act, class) pairs", p.checks);
  });

  property(r, "found-covers-verify", [&](PropertyResult& p) {
    for (const auto& f : found) {
      ++p.checks;
      CoverCheck ck = is_cover(*f.search.cover, f.cls);
      bool cert =
          f.search.certificate && verify_certificate(*f.search.certificate);
      if (!ck.ok || !cert) {
        fail(p,
             fmt::format("{} cover over {} fails re-verification",
                         class_name(f.cls), f.entry),
             map_witness(f.entry, *f.search.cover));
        return;
      }
    }
    p.detail = fmt::format("{} covers re-verified", p.checks);
  });

  property(r, "covers-unique-over-the-act", [&](PropertyResult& p) {
    // Twisting a cover by an automorphism of the target yields another
    // cover; uniqueness demands an isomorphism over the act between them.
    for (const auto& f : found) {
      const ActMap& g = *f.search.cover;
      for (const auto& phi : homs(f.target, f.target)) {
        if (!map_properties(phi).iso) continue;
        ++p.checks;
        if (!iso_over(g, compose(phi, g))) {
          fail(p,
               fmt::format("twisted {} cover over {} not isomorphic over "
                           "the act",
                           class_name(f.cls), f.entry),
               map_witness(f.entry, g));
          return;
        }
      }
    }
    p.detail = fmt::format("{} automorphism twists", p.checks);
  });

  property(r, "small-instance-cover-enumeration", [&](PropertyResult& p) {
    // On small instances, enumerate covers independently (epis from
    // coproducts of up to three skeleton members) and check each against
    // the found one.
    std::map<std::tuple<std::string, const FiniteAct*, int>, const ActMap*>
        cover_of;
    for (const auto& f : found)
      cover_of[{f.entry, f.target.get(), static_cast<int>(f.cls)}] =
          &*f.search.cover;
    for (const auto& e : c.entries) {
      if (e.monoid->size() > 3) continue;
      for (const auto& a : e.acts) {
        if (a->size() > 3) continue;
        for (ActClass cls : kClasses) {
          auto it = cover_of.find(
              {e.name, a.get(), static_cast<int>(cls)});
          if (it == cover_of.end()) continue;
          const ActMap& reference = *it->second;
          Skeleton skel = build_skeleton(e.monoid, cls);
          int n = static_cast<int>(skel.members.size());
          std::vector<std::vector<ActPtr>> picks;
          for (int i = 0; i < n; ++i) {
            picks.push_back({skel.members[i]});
            for (int j = i; j < n; ++j) {
              picks.push_back({skel.members[i], skel.members[j]});
              for (int k = j; k < n; ++k)
                picks.push_back(
                    {skel.members[i], skel.members[j], skel.members[k]});
            }
          }
          for (const auto& parts : picks) {
            Coproduct cop = coproduct(parts);
            for (const auto& h : homs(cop.act, a)) {
              if (!map_properties(h).epi) continue;
              ++p.checks;
              if (is_cover(h, cls).ok && !iso_over(h, reference)) {
                fail(p,
                     fmt::format("independent {} cover over {} not "
                                 "isomorphic to the found one",
                                 class_name(cls), e.name),
                     map_witness(e.name, h));
                return;
              }
            }
          }
        }
      }
    }
    p.detail = fmt::format("{} candidate epis examined", p.checks);
  });

  property(r, "projective-cover-agreement", [&](PropertyResult& p) {
    for (const auto& e : c.entries) {
      std::vector<char> pr(e.acts.size());
      for (std::size_t i = 0; i < e.acts.size(); ++i)
        pr[i] = in_class(*e.acts[i], ActClass::Pr);
      for (std::size_t i = 0; i < e.acts.size(); ++i) {
        if (!pr[i]) continue;
        for (std::size_t j = 0; j < e.acts.size(); ++j)
          for (const auto& g : epis_between(e.acts[i], e.acts[j])) {
            ++p.checks;
            bool cov = is_cover(g, ActClass::Pr).ok;
            bool pcov = is_projective_cover(g);
            if (cov != pcov) {
              fail(p,
                   fmt::format("{}: projective cover verdicts differ "
                               "(class check {}, coessential check {})",
                               e.name, cov, pcov),
                   map_witness(e.name, g));
              return;
            }
          }
      }
    }
    p.detail = fmt::format("{} epis with projective domain", p.checks);
  });

  property(r, "no-proper-pure-congruence-inside-kernel",
           [&](PropertyResult& p) {
             for (const auto& f : found) {
               const ActMap& g = *f.search.cover;
               Congruence ker = kernel(g);
               for (const auto& rho :
                    congruences_refining(g.domain, ker, 1000000)) {
                 if (rho.identity() || rho == ker) continue;
                 ++p.checks;
                 if (is_class_pure_congruence(g.domain, rho, f.cls)) {
                   fail(p,
                        fmt::format("{} cover over {} has a proper pure "
                                    "congruence inside its kernel",
                                    class_name(f.cls), f.entry),
                        json{{"monoid", f.entry},
                             {"congruence", congruence_to_json(rho)}});
                   return;
                 }
               }
             }
             p.detail =
                 fmt::format("{} proper subcongruences of cover kernels",
                             p.checks);
           });

  property(r, "sf-cover-coessential-probe", [&](PropertyResult& p) {
    // Coessential and minimal-endomorphism covers are known to diverge for
    // some infinite monoids; this scans the finite corpus for a strongly
    // flat cover with a proper action-closed subset still mapping onto the
    // target.  Reported either way, required neither way.
    long long witnesses = 0;
    json first = json::object();
    for (const auto& f : found) {
      if (f.cls != ActClass::SF) continue;
      ++p.checks;
      const ActMap& g = *f.search.cover;
      const FiniteAct& dom = *g.domain;
      const FiniteMonoid& m = *dom.monoid();
      bool proper_onto = false;
      for (int x = 0; x < dom.size() && !proper_onto; ++x) {
        // the maximal closed subset avoiding x
        std::vector<char> hit(g.codomain->size(), 0);
        int covered = 0;
        bool nonempty = false;
        for (int y = 0; y < dom.size(); ++y) {
          bool reaches = false;
          for (int s = 0; s < m.size() && !reaches; ++s)
            if (dom.act(y, s) == x) reaches = true;
          if (reaches) continue;
          nonempty = true;
          if (!hit[g(y)]) {
            hit[g(y)] = 1;
            ++covered;
          }
        }
        if (nonempty && covered == g.codomain->size()) proper_onto = true;
      }
      if (proper_onto) {
        if (witnesses == 0) first = map_witness(f.entry, g);
        ++witnesses;
      }
    }
    p.detail =
        witnesses
            ? fmt::format("{} non-coessential strongly flat covers found",
                          witnesses)
            : "no non-coessential strongly flat cover in this corpus";
    p.witness = first;
  });
}

// ----------------------------------------------------------- system solver

void suite_p_system(const CorpusSpec& spec, SuiteReport& r) {
  Corpus c = generate_corpus(spec);
  r.corpus = corpus_desc(c, spec);

  property(r, "solver-outputs-substitute", [&](PropertyResult& p) {
    std::vector<ActPtr> pool;
    for (const auto& e : c.entries)
      for (const auto& a : e.acts)
        if (in_class(*a, ActClass::CP)) pool.push_back(a);
    if (pool.empty()) {
      fail(p, "corpus contains no act satisfying condition (P)");
      return;
    }
    // Raw modulo on the fixed-seed stream keeps the draw sequence identical
    // across platforms, unlike the distribution adapters.
    std::mt19937 rng(20240817u);
    for (int iter = 0; iter < 1000; ++iter) {
      const ActPtr& a = pool[rng() % pool.size()];
      const FiniteMonoid& m = *a->monoid();
      int n = 1 + static_cast<int>(rng() % 4);
      std::vector<int> xs{static_cast<int>(rng() % a->size())}, ss, ts;
      for (int i = 0; i + 1 < n; ++i) {
        int s = static_cast<int>(rng() % m.size());
        int target = a->act(xs.back(), s);
        std::vector<std::pair<int, int>> opts;
        for (int x2 = 0; x2 < a->size(); ++x2)
          for (int t = 0; t < m.size(); ++t)
            if (a->act(x2, t) == target) opts.emplace_back(x2, t);
        auto [x2, t] = opts[rng() % opts.size()];
        ss.push_back(s);
        ts.push_back(t);
        xs.push_back(x2);
      }
      PSystem sys(a, xs, ss, ts);
      PSystemSolution sol = solve_P_system(sys);
      ++p.checks;
      if (!check_P_solution(sys, sol)) {
        fail(p, fmt::format("solution fails substitution at iteration {}",
                            iter),
             json{{"iteration", iter},
                  {"xs", xs},
                  {"ss", ss},
                  {"ts", ts},
                  {"act", act_to_json(*a)}});
        return;
      }
    }
    p.detail = "1000 random equation chains resolved and re-validated";
  });
}

// --------------------------------------------------------- unitary theorems

bool pair_equalizer_clause(const FiniteAct& x) {
  // for all s, t there are x1, x2 with x1*s = x2*t
  const FiniteMonoid& m = *x.monoid();
  for (int s = 0; s < m.size(); ++s)
    for (int t = 0; t < m.size(); ++t) {
      bool ok = false;
      for (int x1 = 0; x1 < x.size() && !ok; ++x1)
        for (int x2 = 0; x2 < x.size() && !ok; ++x2)
          if (x.act(x1, s) == x.act(x2, t)) ok = true;
      if (!ok) return false;
    }
  return true;
}

bool single_equalizer_clause(const FiniteAct& x) {
  // for all s, t there is x1 with x1*s = x1*t
  const FiniteMonoid& m = *x.monoid();
  for (int s = 0; s < m.size(); ++s)
    for (int t = 0; t < m.size(); ++t) {
      bool ok = false;
      for (int x1 = 0; x1 < x.size() && !ok; ++x1)
        if (x.act(x1, s) == x.act(x1, t)) ok = true;
      if (!ok) return false;
    }
  return true;
}

void suite_unitary(const CorpusSpec& spec, SuiteReport& r) {
  Corpus c = generate_corpus(spec);
  r.corpus = corpus_desc(c, spec);

  struct Row {
    std::string entry;
    ActMap f;
    bool two, one, split;
  };
  std::vector<Row> rows;
  for (const auto& e : c.entries)
    for (const auto& dom : e.acts)
      for (const auto& cod : e.acts)
        for (auto& f : monos_between(dom, cod)) {
          std::vector<int> img(f.values);
          std::sort(img.begin(), img.end());
          ReesQuotient rq = rees_quotient(f.codomain, img);
          bool two = is_n_pure(rq.natural, 2).pure;
          bool one = is_n_pure(rq.natural, 1).pure;
          bool split = map_properties(rq.natural).split_epi;
          rows.push_back({e.name, std::move(f), two, one, split});
        }

  property(r, "2-pure-collapse-gives-p-unitary", [&](PropertyResult& p) {
    for (const auto& row : rows) {
      ++p.checks;
      if (row.two &&
          !(is_P_unitary(row.f) && pair_equalizer_clause(*row.f.domain))) {
        fail(p,
             fmt::format("2-pure collapse without the P-unitary conclusion "
                         "over {}",
                         row.entry),
             map_witness(row.entry, row.f));
        return;
      }
    }
    p.detail = fmt::format("{} corpus monos", p.checks);
  });

  property(r, "1-pure-collapse-gives-e-unitary", [&](PropertyResult& p) {
    for (const auto& row : rows) {
      ++p.checks;
      if (row.one &&
          !(is_E_unitary(row.f) && single_equalizer_clause(*row.f.domain))) {
        fail(p,
             fmt::format("1-pure collapse without the E-unitary conclusion "
                         "over {}",
                         row.entry),
             map_witness(row.entry, row.f));
        return;
      }
    }
    p.detail = fmt::format("{} corpus monos", p.checks);
  });

  property(r, "split-collapse-gives-p-unitary", [&](PropertyResult& p) {
    for (const auto& row : rows) {
      ++p.checks;
      if (row.split &&
          !(is_P_unitary(row.f) && single_equalizer_clause(*row.f.domain))) {
        fail(p,
             fmt::format("split collapse without the P-unitary conclusion "
                         "over {}",
                         row.entry),
             map_witness(row.entry, row.f));
        return;
      }
    }
    p.detail = fmt::format("{} corpus monos", p.checks);
  });
}

// ------------------------------------------------------------------ runner

using SuiteFn = void (*)(const CorpusSpec&, SuiteReport&);

struct SuiteDef {
  const char* id;
  SuiteFn fn;
};

constexpr SuiteDef kSuites[] = {
    {"bicyclic-counting", suite_bicyclic},
    {"purity-chain", suite_purity_chain},
    {"pure-congruence-sf", suite_pure_congruence_sf},
    {"sf-epi-agreement", suite_sf_epi_agreement},
    {"condition-transfer", suite_condition_transfer},
    {"colimit-constructions", suite_colimits},
    {"closure-theorems", suite_closure},
    {"cover-existence", suite_cover},
    {"p-system-solver", suite_p_system},
    {"unitary-theorems", suite_unitary},
};

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& d : kSuites) out.emplace_back(d.id);
  return out;
}

SuiteReport run_suite(const std::string& id, const CorpusSpec& spec) {
  for (const auto& d : kSuites) {
    if (id != d.id) continue;
    SuiteReport r;
    r.id = id;
    auto t0 = std::chrono::steady_clock::now();
    try {
      d.fn(spec, r);
    } catch (const std::exception& e) {
      PropertyResult p;
      p.name = "suite-aborted";
      fail(p, e.what());
      r.properties.push_back(std::move(p));
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    r.pass = std::all_of(r.properties.begin(), r.properties.end(),
                         [](const PropertyResult& p) { return p.pass; });
    return r;
  }
  throw Error(errc::unknown_suite, fmt::format("no suite named '{}'", id));
}

nlohmann::json report_to_json(const SuiteReport& r, bool include_timing) {
  json props = json::array();
  for (const auto& p : r.properties) {
    json jp{{"name", p.name}, {"pass", p.pass}, {"checks", p.checks}};
    if (!p.detail.empty()) jp["detail"] = p.detail;
    if (!p.witness.is_null() && !(p.witness.is_object() && p.witness.empty()))
      jp["witness"] = p.witness;
    props.push_back(std::move(jp));
  }
  json out{{"kind", "suite-report"},
           {"suite", r.id},
           {"corpus", r.corpus},
           {"pass", r.pass},
           {"properties", std::move(props)}};
  if (include_timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace actkit
