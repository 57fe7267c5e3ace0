#include "actkit/corpus.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "actkit/error.hpp"
#include "actkit/hom.hpp"

namespace actkit {

std::vector<std::string> default_builders() {
  return {"semilattice_chain(2)", "cyclic_group(2)", "cyclic_group(3)",
          "symmetric_inverse(2)", "full_transformation(2)"};
}

std::vector<MonoidPtr> all_monoids_of_order(int n) {
  if (n < 1 || n > 4)
    throw Error(errc::cap_exceeded,
                fmt::format("monoid enumeration supports orders 1..4, got {}",
                            n));
  std::vector<int> table(n * n, 0);
  for (int i = 0; i < n; ++i) table[i] = table[i * n] = i;  // identity at 0
  // free cells are (i,j) with i,j >= 1
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) cells.push_back({i, j});
  std::set<std::vector<int>> canon;
  auto associative = [&]() {
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b)
        for (int c = 1; c < n; ++c)
          if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
            return false;
    return true;
  };
  std::vector<int> digit(cells.size(), 0);
  for (;;) {
    for (std::size_t d = 0; d < cells.size(); ++d)
      table[cells[d].first * n + cells[d].second] = digit[d];
    if (associative())
      canon.insert(monoid_canonical_form(FiniteMonoid(table, n, 0)));
    std::size_t d = 0;
    while (d < cells.size() && digit[d] == n - 1) digit[d++] = 0;
    if (d == cells.size()) break;
    ++digit[d];
  }
  std::vector<MonoidPtr> out;
  for (const auto& t : canon)
    out.push_back(std::make_shared<const FiniteMonoid>(t, n, 0));
  return out;
}

namespace {

// Backtracking over generator images as transformations of {0..size-1}.
// Each partial assignment is closed under products and checked for
// consistency, so non-homomorphisms are cut early.
class ActEnumerator {
 public:
  ActEnumerator(const MonoidPtr& m, int size)
      : m_(m), n_(m->size()), size_(size), gens_(monoid_generators(*m)) {
    double work = static_cast<double>(gens_.size()) * size *
                  std::log(std::max(2, size));
    if (work > std::log(static_cast<double>(search_budget())))
      throw Error(errc::search_budget_exceeded,
                  fmt::format("act enumeration needs {}^{} image tuples",
                              size, size * gens_.size()));
  }

  std::set<std::vector<int>> run() {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> trans(n_);
    trans[m_->identity()].resize(size_);
    for (int x = 0; x < size_; ++x) trans[m_->identity()][x] = x;
    rec(0, trans, found);
    return found;
  }

 private:
  // Close the known set under right multiplication by assigned generators;
  // returns false on conflict.  known transformations are nonempty vectors.
  bool close(std::vector<std::vector<int>>& trans, int upto) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u = 0; u < n_; ++u) {
        if (trans[u].empty()) continue;
        for (int gi = 0; gi < upto; ++gi) {
          int g = gens_[gi];
          int v = m_->mul(u, g);
          std::vector<int> comp(size_);
          for (int x = 0; x < size_; ++x) comp[x] = trans[g][trans[u][x]];
          if (trans[v].empty()) {
            trans[v] = std::move(comp);
            changed = true;
          } else if (trans[v] != comp) {
            return false;
          }
        }
      }
    }
    // full consistency over every known product
    for (int u = 0; u < n_; ++u) {
      if (trans[u].empty()) continue;
      for (int v = 0; v < n_; ++v) {
        if (trans[v].empty()) continue;
        int uv = m_->mul(u, v);
        if (trans[uv].empty()) continue;
        for (int x = 0; x < size_; ++x)
          if (trans[uv][x] != trans[v][trans[u][x]]) return false;
      }
    }
    return true;
  }

  void rec(std::size_t gi, std::vector<std::vector<int>> trans,
           std::set<std::vector<int>>& found) const {
    if (gi == gens_.size()) {
      for (int u = 0; u < n_; ++u)
        if (trans[u].empty())
          throw std::logic_error("generators failed to span the monoid");
      std::vector<std::vector<int>> action(size_, std::vector<int>(n_));
      for (int a = 0; a < size_; ++a)
        for (int s = 0; s < n_; ++s) action[a][s] = trans[s][a];
      std::vector<int> flat;
      for (const auto& row : action)
        flat.insert(flat.end(), row.begin(), row.end());
      found.insert(act_canonical_form(FiniteAct(m_, flat, size_)));
      return;
    }
    int g = gens_[gi];
    std::vector<int> tau(size_, 0);
    for (;;) {
      auto next = trans;
      if (next[g].empty() || next[g] == tau) {
        next[g] = tau;
        if (close(next, static_cast<int>(gi) + 1))
          rec(gi + 1, std::move(next), found);
      }
      int x = 0;
      while (x < size_ && tau[x] == size_ - 1) tau[x++] = 0;
      if (x == size_) break;
      ++tau[x];
    }
  }

  MonoidPtr m_;
  int n_, size_;
  std::vector<int> gens_;
};

}  // namespace

std::vector<ActPtr> all_acts(const MonoidPtr& m, int max_size) {
  if (max_size < 1 || max_size > 6)
    throw Error(errc::cap_exceeded,
                fmt::format("act enumeration supports sizes 1..6, got {}",
                            max_size));
  std::vector<ActPtr> out;
  for (int size = 1; size <= max_size; ++size) {
    for (const auto& flat : ActEnumerator(m, size).run())
      out.push_back(std::make_shared<const FiniteAct>(m, flat, size));
  }
  return out;
}

Corpus generate_corpus(const CorpusSpec& spec) {
  if (spec.max_monoid_order < 1 || spec.max_monoid_order > 4)
    throw Error(errc::cap_exceeded, "max_monoid_order must be 1..4");
  if (spec.max_act_size < 1 || spec.max_act_size > 6)
    throw Error(errc::cap_exceeded, "max_act_size must be 1..6");
  Corpus corpus;
  for (int n = 1; n <= spec.max_monoid_order; ++n) {
    int idx = 1;
    for (const MonoidPtr& m : all_monoids_of_order(n))
      corpus.entries.push_back({fmt::format("M{}.{}", n, idx++), m, {}});
  }
  for (const std::string& text : spec.builders) {
    MonoidPtr b = standard_monoid(text);
    bool merged = false;
    for (CorpusEntry& e : corpus.entries) {
      if (e.monoid->size() == b->size() && monoid_iso(*e.monoid, *b)) {
        e.name += "=" + text;
        merged = true;
        break;
      }
    }
    if (!merged) corpus.entries.push_back({text, b, {}});
  }
  for (CorpusEntry& e : corpus.entries)
    e.acts = all_acts(e.monoid, spec.max_act_size);
  return corpus;
}

std::vector<ActMap> epis_between(const ActPtr& dom, const ActPtr& cod) {
  std::vector<ActMap> out;
  for (ActMap& h : homs(dom, cod)) {
    std::vector<char> hit(cod->size(), 0);
    int count = 0;
    for (int v : h.values)
      if (!hit[v]) hit[v] = 1, ++count;
    if (count == cod->size()) out.push_back(std::move(h));
  }
  return out;
}

std::vector<ActMap> monos_between(const ActPtr& dom, const ActPtr& cod) {
  std::vector<ActMap> out;
  for (ActMap& h : homs(dom, cod)) {
    std::vector<char> hit(cod->size(), 0);
    bool mono = true;
    for (int v : h.values) {
      if (hit[v]) {
        mono = false;
        break;
      }
      hit[v] = 1;
    }
    if (mono) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace actkit
