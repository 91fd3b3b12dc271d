#include "schemoid/toposlab.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace schemoid {

namespace {

std::set<std::string> label_set(const SetFunctor& F, int x) {
  return {F.object_sets[x].begin(), F.object_sets[x].end()};
}

int label_index(const std::vector<std::string>& labels, const std::string& l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw PreconditionError("label not found: " + l);
  return static_cast<int>(it - labels.begin());
}

// the component of eta at x as a label-level function (domain, codomain, graph)
struct LabelFunction {
  std::set<std::string> domain, codomain;
  std::map<std::string, std::string> graph;

  bool operator==(const LabelFunction&) const = default;
};

LabelFunction component_function(const SetFunctor& F, const SetFunctor& G,
                                 const NaturalTransformation& eta, int x) {
  LabelFunction out;
  out.domain = label_set(F, x);
  out.codomain = label_set(G, x);
  for (int i = 0; i < F.set_size(x); ++i)
    out.graph[F.label(x, i)] = G.label(x, eta.components[x][i]);
  return out;
}

// label map of a quotient morphism word under a color-preserving functor
std::map<std::string, std::string> word_label_map(const ColoredCategory& x,
                                                  const std::vector<std::vector<int>>& fibers,
                                                  const SetFunctor& F, int src_rep,
                                                  const Word& word) {
  std::map<std::string, std::string> cur;
  for (const auto& l : F.object_sets[src_rep]) cur[l] = l;
  for (int color : word) {
    int f = fibers[color].front();
    auto step = F.label_map(x.base, f);
    for (auto& [from, to] : cur) to = step.at(to);
  }
  return cur;
}

// comma category (q ↓ pi): objects (y, m) with m : q -> pi(y)
struct CommaCategory {
  std::vector<std::pair<int, int>> objects;
  std::vector<std::array<int, 3>> arrows; // (from index, to index, morphism f of c)
};

CommaCategory comma_category(const FiniteCategory& c, const FiniteCategory& qcat,
                             const CatFunctor& pi, int q) {
  CommaCategory out;
  std::map<std::pair<int, int>, int> index;
  for (int y = 0; y < c.object_count; ++y)
    for (int m = 0; m < qcat.morphism_count(); ++m)
      if (qcat.src(m) == q && qcat.tgt(m) == pi.object_map[y]) {
        index[{y, m}] = static_cast<int>(out.objects.size());
        out.objects.emplace_back(y, m);
      }
  for (size_t i = 0; i < out.objects.size(); ++i)
    for (size_t j = 0; j < out.objects.size(); ++j) {
      auto [y, m] = out.objects[i];
      auto [y2, m2] = out.objects[j];
      for (int f = 0; f < c.morphism_count(); ++f)
        if (c.src(f) == y && c.tgt(f) == y2 &&
            qcat.compose(pi.morphism_map[f], m) == m2)
          out.arrows.push_back({static_cast<int>(i), static_cast<int>(j), f});
    }
  return out;
}

std::string family_label(const std::vector<std::string>& entries) {
  if (entries.empty()) return "*";
  std::string out = entries[0];
  for (size_t i = 1; i < entries.size(); ++i) out += "|" + entries[i];
  return out;
}

// matched families of the diagram (y, m) -> G(y) over the comma category
std::vector<std::vector<int>> limit_families(const CommaCategory& comma, const SetFunctor& G) {
  std::vector<std::vector<int>> out;
  std::vector<int> family(comma.objects.size(), -1);
  auto consistent = [&](size_t filled) {
    for (const auto& [i, j, f] : comma.arrows) {
      if (i >= static_cast<int>(filled) || j >= static_cast<int>(filled)) continue;
      if (G.morphism_maps[f][family[i]] != family[j]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == comma.objects.size()) {
      out.push_back(family);
      return;
    }
    int y = comma.objects[pos].first;
    for (int a = 0; a < G.set_size(y); ++a) {
      family[pos] = a;
      if (consistent(pos + 1)) self(self, pos + 1);
    }
    family[pos] = -1;
  };
  rec(rec, 0);
  return out;
}

} // namespace

ColorPreservation is_color_preserving(const ColoredCategory& x, const SetFunctor& F) {
  for (const auto& fiber : x.fibers())
    for (size_t j = 1; j < fiber.size(); ++j)
      if (!same_function(x.base, F, fiber[0], F, fiber[j]))
        return {false, std::pair(fiber[0], fiber[j])};
  return {true, std::nullopt};
}

SharpTransformation classify_transformation(const ColoredCategory& x, const SetFunctor& F,
                                            const SetFunctor& G,
                                            const NaturalTransformation& eta) {
  SharpTransformation out{eta, true, true};
  std::vector<LabelFunction> comp;
  for (int xo = 0; xo < x.base.object_count; ++xo)
    comp.push_back(component_function(F, G, eta, xo));
  auto classes = object_classes(x);
  for (int a = 0; a < x.base.object_count; ++a)
    for (int b = a + 1; b < x.base.object_count; ++b) {
      bool id_colors_equal =
          x.color(x.base.identity_of[a]) == x.color(x.base.identity_of[b]);
      if (id_colors_equal && !(comp[a] == comp[b])) out.locally_constant = false;
      if (classes.same(a, b) && !(comp[a] == comp[b])) out.sharp = false;
    }
  return out;
}

QuotientContext quotient_context(const ColoredCategory& x, CompletionCaps caps) {
  QuotientContext ctx;
  ctx.q = quotient_category(x, caps);
  if (ctx.q.status != QuotientResult::Status::Finite)
    throw UnsupportedError("quotient_context: quotient undecided");
  ctx.pi = pi_functor(x, ctx.q);
  return ctx;
}

SetFunctor transport_theta(const ColoredCategory& x, const QuotientContext& ctx,
                           const SetFunctor& F) {
  auto cp = is_color_preserving(x, F);
  if (!cp.preserving) throw PreconditionError("transport_theta: functor is not color-preserving");
  auto members = ctx.q.classes.members();
  std::vector<int> rep(members.size());
  for (size_t cls = 0; cls < members.size(); ++cls) rep[cls] = members[cls].front();
  auto fibers = x.fibers();

  SetFunctor out;
  for (int r : rep) out.object_sets.push_back(F.object_sets[r]);
  const auto& qc = ctx.q.category;
  for (int m = 0; m < qc.morphism_count(); ++m) {
    int s = qc.src(m), t = qc.tgt(m);
    auto lm = word_label_map(x, fibers, F, rep[s], ctx.q.morphism_word[m]);
    std::vector<int> positional;
    for (const auto& l : out.object_sets[s])
      positional.push_back(label_index(out.object_sets[t], lm.at(l)));
    out.morphism_maps.push_back(std::move(positional));
  }
  return out;
}

SetFunctor pullback_along(const FiniteCategory& dom, const CatFunctor& u, const SetFunctor& H) {
  SetFunctor out;
  for (int x = 0; x < dom.object_count; ++x)
    out.object_sets.push_back(H.object_sets[u.object_map[x]]);
  for (int f = 0; f < dom.morphism_count(); ++f)
    out.morphism_maps.push_back(H.morphism_maps[u.morphism_map[f]]);
  return out;
}

PullbackSpan objectwise_pullback(const FiniteCategory& c, const SetFunctor& F,
                                 const SetFunctor& G, const SetFunctor& H,
                                 const NaturalTransformation& alpha,
                                 const NaturalTransformation& beta) {
  PullbackSpan out;
  std::vector<std::vector<std::pair<int, int>>> pairs(c.object_count);
  for (int x = 0; x < c.object_count; ++x) {
    out.P.object_sets.emplace_back();
    out.to_first.components.emplace_back();
    out.to_second.components.emplace_back();
    for (int i = 0; i < F.set_size(x); ++i)
      for (int j = 0; j < G.set_size(x); ++j)
        if (alpha.components[x][i] == beta.components[x][j]) {
          pairs[x].emplace_back(i, j);
          out.P.object_sets[x].push_back("(" + F.label(x, i) + "," + G.label(x, j) + ")");
          out.to_first.components[x].push_back(i);
          out.to_second.components[x].push_back(j);
        }
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    int s = c.src(f), t = c.tgt(f);
    std::vector<int> map;
    for (auto [i, j] : pairs[s]) {
      std::pair<int, int> image{F.morphism_maps[f][i], G.morphism_maps[f][j]};
      auto it = std::find(pairs[t].begin(), pairs[t].end(), image);
      if (it == pairs[t].end())
        throw PreconditionError("objectwise_pullback: cospan is not natural");
      map.push_back(static_cast<int>(it - pairs[t].begin()));
    }
    out.P.morphism_maps.push_back(std::move(map));
  }
  return out;
}

SetFunctor kan_pushforward(const FiniteCategory& c, const FiniteCategory& qcat,
                           const CatFunctor& pi, const SetFunctor& G) {
  SetFunctor out;
  std::vector<CommaCategory> commas;
  std::vector<std::vector<std::vector<int>>> families;
  std::vector<std::map<std::vector<int>, int>> family_index;
  for (int q = 0; q < qcat.object_count; ++q) {
    commas.push_back(comma_category(c, qcat, pi, q));
    families.push_back(limit_families(commas.back(), G));
    family_index.emplace_back();
    out.object_sets.emplace_back();
    for (size_t i = 0; i < families.back().size(); ++i) {
      family_index.back()[families.back()[i]] = static_cast<int>(i);
      std::vector<std::string> entries;
      for (size_t pos = 0; pos < commas.back().objects.size(); ++pos)
        entries.push_back(G.label(commas.back().objects[pos].first, families.back()[i][pos]));
      out.object_sets.back().push_back(family_label(entries));
    }
  }
  for (int u = 0; u < qcat.morphism_count(); ++u) {
    int s = qcat.src(u), t = qcat.tgt(u);
    std::vector<int> map;
    for (const auto& family : families[s]) {
      std::vector<int> image;
      for (auto [y, m2] : commas[t].objects) {
        std::pair<int, int> source{y, qcat.compose(m2, u)};
        auto it = std::find(commas[s].objects.begin(), commas[s].objects.end(), source);
        if (it == commas[s].objects.end())
          throw PreconditionError("kan_pushforward: comma reindexing failed");
        image.push_back(family[it - commas[s].objects.begin()]);
      }
      map.push_back(family_index[t].at(image));
    }
    out.morphism_maps.push_back(std::move(map));
  }
  return out;
}

SetFunctor sheafify(const ColoredCategory& x, const QuotientContext& ctx, const SetFunctor& G) {
  return pullback_along(x.base, ctx.pi,
                        kan_pushforward(x.base, ctx.q.category, ctx.pi, G));
}

NaturalTransformation sheafify_unit(const ColoredCategory& x, const QuotientContext& ctx,
                                    const SetFunctor& F) {
  auto cp = is_color_preserving(x, F);
  if (!cp.preserving) throw PreconditionError("sheafify_unit: functor is not color-preserving");
  auto sheaf = sheafify(x, ctx, F);
  auto fibers = x.fibers();
  auto members = ctx.q.classes.members();

  NaturalTransformation unit;
  for (int xo = 0; xo < x.base.object_count; ++xo) {
    int cls = ctx.pi.object_map[xo];
    auto comma = comma_category(x.base, ctx.q.category, ctx.pi, cls);
    unit.components.emplace_back();
    for (int i = 0; i < F.set_size(xo); ++i) {
      std::vector<std::string> entries;
      for (auto [y, m] : comma.objects) {
        auto lm = word_label_map(x, fibers, F, members[cls].front(), ctx.q.morphism_word[m]);
        entries.push_back(lm.at(F.label(xo, i)));
      }
      unit.components.back().push_back(label_index(sheaf.object_sets[xo], family_label(entries)));
    }
  }
  return unit;
}

std::vector<SetFunctor> enumerate_functors(const FiniteCategory& c, int max_size) {
  std::vector<std::string> pool;
  for (int i = 0; i < max_size; ++i) pool.push_back(std::to_string(i));
  std::vector<int> non_identity;
  for (int f = 0; f < c.morphism_count(); ++f)
    if (!c.is_identity(f)) non_identity.push_back(f);

  std::vector<SetFunctor> out;
  std::vector<int> sizes(c.object_count, 0);
  auto enumerate_maps = [&](auto&& self, SetFunctor& F, size_t pos) -> void {
    if (pos == non_identity.size()) {
      if (check_functor(c, F).ok()) out.push_back(F);
      return;
    }
    int f = non_identity[pos];
    int s = sizes[c.src(f)], t = sizes[c.tgt(f)];
    if (s > 0 && t == 0) return; // no functions into the empty set
    std::vector<int> map(s, 0);
    for (;;) {
      F.morphism_maps[f] = map;
      self(self, F, pos + 1);
      int carry = 0;
      while (carry < s && ++map[carry] == t) map[carry++] = 0;
      if (carry == s) break;
    }
  };
  auto enumerate_sizes = [&](auto&& self, int x) -> void {
    if (x == c.object_count) {
      SetFunctor F;
      F.object_sets.resize(c.object_count);
      F.morphism_maps.resize(c.morphism_count());
      for (int y = 0; y < c.object_count; ++y)
        F.object_sets[y] = {pool.begin(), pool.begin() + sizes[y]};
      for (int y = 0; y < c.object_count; ++y) {
        auto& id_map = F.morphism_maps[c.identity_of[y]];
        id_map.resize(sizes[y]);
        std::iota(id_map.begin(), id_map.end(), 0);
      }
      enumerate_maps(enumerate_maps, F, 0);
      return;
    }
    for (sizes[x] = 0; sizes[x] <= max_size; ++sizes[x]) self(self, x + 1);
    sizes[x] = 0;
  };
  enumerate_sizes(enumerate_sizes, 0);
  return out;
}

std::vector<NaturalTransformation> enumerate_natural(const FiniteCategory& c, const SetFunctor& F,
                                                     const SetFunctor& G) {
  std::vector<NaturalTransformation> out;
  NaturalTransformation eta;
  eta.components.resize(c.object_count);
  for (int x = 0; x < c.object_count; ++x) {
    if (F.set_size(x) > 0 && G.set_size(x) == 0) return {};
    eta.components[x].assign(F.set_size(x), 0);
  }
  for (;;) {
    if (check_natural(c, F, G, eta).ok()) out.push_back(eta);
    // advance the odometer over all components
    int x = 0;
    size_t i = 0;
    for (;;) {
      if (x == c.object_count) return out;
      if (i == eta.components[x].size()) {
        ++x;
        i = 0;
        continue;
      }
      if (++eta.components[x][i] < G.set_size(x)) break;
      eta.components[x][i] = 0;
      ++i;
    }
  }
}

long long count_natural(const FiniteCategory& c, const SetFunctor& F, const SetFunctor& G) {
  return static_cast<long long>(enumerate_natural(c, F, G).size());
}

long long count_sharp(const ColoredCategory& x, const SetFunctor& F, const SetFunctor& G) {
  long long count = 0;
  for (const auto& eta : enumerate_natural(x.base, F, G))
    if (classify_transformation(x, F, G, eta).sharp) ++count;
  return count;
}

SetFunctor functor_coproduct(const FiniteCategory& c, const SetFunctor& F, const SetFunctor& G,
                             NaturalTransformation* inl, NaturalTransformation* inr) {
  SetFunctor out;
  if (inl) inl->components.assign(c.object_count, {});
  if (inr) inr->components.assign(c.object_count, {});
  for (int x = 0; x < c.object_count; ++x) {
    out.object_sets.emplace_back();
    for (int i = 0; i < F.set_size(x); ++i) {
      if (inl) inl->components[x].push_back(static_cast<int>(out.object_sets[x].size()));
      out.object_sets[x].push_back("l:" + F.label(x, i));
    }
    for (int j = 0; j < G.set_size(x); ++j) {
      if (inr) inr->components[x].push_back(static_cast<int>(out.object_sets[x].size()));
      out.object_sets[x].push_back("r:" + G.label(x, j));
    }
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    int t = c.tgt(f);
    std::vector<int> map;
    for (int i : F.morphism_maps[f]) map.push_back(i);
    for (int j : G.morphism_maps[f]) map.push_back(F.set_size(t) + j);
    out.morphism_maps.push_back(std::move(map));
  }
  return out;
}

} // namespace schemoid
