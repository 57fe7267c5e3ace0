#include "actkit/tensor.hpp"

#include <fmt/format.h>

#include "actkit/detail/union_find.hpp"

namespace actkit {

TensorProduct tensor(const FiniteAct& a, const FiniteAct& b) {
  auto op = opposite(a.monoid());
  if (!(*b.monoid() == *op)) {
    throw Error(errc::mixed_monoids,
                "right factor must live over the opposite monoid");
  }
  int ns = a.monoid()->size();
  int bs = b.size();
  detail::UnionFind uf(a.size() * bs);
  auto idx = [&](int x, int y) { return x * bs + y; };
  for (int x = 0; x < a.size(); ++x)
    for (int s = 0; s < ns; ++s)
      for (int y = 0; y < bs; ++y)
        uf.unite(idx(a.act(x, s), y), idx(x, b.act(y, s)));
  TensorProduct out;
  out.left_size = a.size();
  out.right_size = bs;
  out.class_of = uf.canonical_classes(&out.num_classes);
  return out;
}

MonoidEmbedding::MonoidEmbedding(MonoidPtr src, MonoidPtr tgt,
                                 std::vector<int> vals)
    : source(std::move(src)), target(std::move(tgt)), values(std::move(vals)) {
  if (!source || !target) {
    throw Error(errc::invalid_input, "embedding needs both monoids");
  }
  if (values.size() != static_cast<size_t>(source->size())) {
    throw Error(errc::invalid_input, "value list length != source size");
  }
  for (int v : values) {
    if (v < 0 || v >= target->size()) {
      throw Error(errc::index_out_of_range,
                  fmt::format("embedding value {}", v));
    }
  }
  std::vector<char> hit(target->size(), 0);
  for (int v : values) {
    if (hit[v]) throw Error(errc::not_an_embedding, "not injective");
    hit[v] = 1;
  }
  if (values[source->identity()] != target->identity()) {
    throw Error(errc::not_an_embedding, "does not preserve the identity");
  }
  for (int s = 0; s < source->size(); ++s)
    for (int t = 0; t < source->size(); ++t)
      if (values[source->mul(s, t)] != target->mul(values[s], values[t])) {
        throw Error(errc::not_an_embedding,
                    fmt::format("not multiplicative at ({},{})", s, t));
      }
}

InducedAct induced_act(const ActPtr& x, const MonoidEmbedding& emb) {
  if (!same_monoid(x->monoid(), emb.source)) {
    throw Error(errc::mixed_monoids, "act is not over the embedding source");
  }
  const auto& t = emb.target;
  int nt = t->size();
  int ns = emb.source->size();
  detail::UnionFind uf(x->size() * nt);
  auto idx = [&](int a, int u) { return a * nt + u; };
  for (int a = 0; a < x->size(); ++a)
    for (int s = 0; s < ns; ++s)
      for (int u = 0; u < nt; ++u)
        uf.unite(idx(x->act(a, s), u), idx(a, t->mul(emb(s), u)));
  TensorProduct classes;
  classes.left_size = x->size();
  classes.right_size = nt;
  classes.class_of = uf.canonical_classes(&classes.num_classes);
  int n = classes.num_classes;
  std::vector<int> rep(n, -1);
  for (int i = static_cast<int>(classes.class_of.size()) - 1; i >= 0; --i)
    rep[classes.class_of[i]] = i;
  std::vector<int> flat(static_cast<size_t>(n) * nt);
  for (int c = 0; c < n; ++c) {
    int a = rep[c] / nt, u = rep[c] % nt;
    for (int v = 0; v < nt; ++v)
      flat[c * nt + v] = classes.class_of[idx(a, t->mul(u, v))];
  }
  // the action must not depend on the chosen representative
  for (int a = 0; a < x->size(); ++a)
    for (int u = 0; u < nt; ++u)
      for (int v = 0; v < nt; ++v)
        if (flat[classes.class_of[idx(a, u)] * nt + v] !=
            classes.class_of[idx(a, t->mul(u, v))]) {
          throw std::logic_error("induced action is not well defined");
        }
  auto act = std::make_shared<const FiniteAct>(t, std::move(flat), n);
  std::vector<int> unit(x->size());
  for (int a = 0; a < x->size(); ++a)
    unit[a] = classes.class_of[idx(a, t->identity())];
  return {act, std::move(unit), std::move(classes)};
}

}  // namespace actkit
