#include "schemoid/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schemoid {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b); // keep the minimum index as root
    parent[b] = a;
  }
  Partition partition() {
    Partition p;
    p.class_of.assign(parent.size(), -1);
    for (size_t i = 0; i < parent.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (p.class_of[r] < 0) p.class_of[r] = p.class_count++;
      p.class_of[i] = p.class_of[r];
    }
    return p;
  }
};

} // namespace

ColoredCategory::ColoredCategory(FiniteCategory base_, std::vector<int> color_of_, int color_count_)
    : base(std::move(base_)), color_of(std::move(color_of_)), color_count(color_count_) {
  if (base.morphism_count() == 0)
    throw PreconditionError("colored category: underlying category has no morphisms");
  if (static_cast<int>(color_of.size()) != base.morphism_count())
    throw PreconditionError("colored category: color_of size != morphism count");
  std::vector<char> seen(color_count, 0);
  for (int c : color_of) {
    if (c < 0 || c >= color_count) throw PreconditionError("colored category: color out of range");
    seen[c] = 1;
  }
  for (int c = 0; c < color_count; ++c)
    if (!seen[c])
      throw PreconditionError("colored category: color " + std::to_string(c) + " is empty");
}

std::vector<std::vector<int>> ColoredCategory::fibers() const {
  std::vector<std::vector<int>> out(color_count);
  for (int f = 0; f < base.morphism_count(); ++f) out[color_of[f]].push_back(f);
  return out;
}

std::vector<std::vector<int>> Partition::members() const {
  std::vector<std::vector<int>> out(class_count);
  for (size_t i = 0; i < class_of.size(); ++i) out[class_of[i]].push_back(static_cast<int>(i));
  return out;
}

Partition object_classes(const ColoredCategory& x) {
  UnionFind uf(x.base.object_count);
  for (const auto& fiber : x.fibers()) {
    for (size_t i = 1; i < fiber.size(); ++i) {
      uf.unite(x.base.src(fiber[0]), x.base.src(fiber[i]));
      uf.unite(x.base.tgt(fiber[0]), x.base.tgt(fiber[i]));
    }
  }
  return uf.partition();
}

StructureConstantTable structure_constants(const ColoredCategory& x) {
  const int cc = x.color_count;
  const auto& c = x.base;
  StructureConstantTable table;
  table.color_count = cc;
  table.p.assign(static_cast<size_t>(cc) * cc * cc, 0);
  table.schemoid = true;

  // fiber_size[(sigma*cc+tau)][f] = #{(l,k) in sigma x tau : l∘k = f}
  std::vector<std::vector<long long>> fiber(static_cast<size_t>(cc) * cc,
                                            std::vector<long long>(c.morphism_count(), 0));
  for (int k = 0; k < c.morphism_count(); ++k)
    for (int l = 0; l < c.morphism_count(); ++l) {
      if (!c.composable(l, k)) continue;
      int lk = c.compose(l, k);
      fiber[static_cast<size_t>(x.color(l)) * cc + x.color(k)][lk]++;
    }

  auto fibers = x.fibers();
  for (int sigma = 0; sigma < cc; ++sigma)
    for (int tau = 0; tau < cc; ++tau) {
      const auto& counts = fiber[static_cast<size_t>(sigma) * cc + tau];
      for (int mu = 0; mu < cc; ++mu) {
        const auto& mu_morphisms = fibers[mu];
        long long first = counts[mu_morphisms[0]];
        table.p[(static_cast<size_t>(sigma) * cc + tau) * cc + mu] = first;
        for (int f : mu_morphisms)
          if (counts[f] != first) {
            if (table.schemoid) {
              table.schemoid = false;
              table.witness = StructureConstantTable::Witness{sigma, tau, mu, mu_morphisms[0], f};
            }
            break;
          }
      }
    }
  return table;
}

NaturalityResult is_naturally_colored(const ColoredCategory& x) {
  const auto& c = x.base;
  auto id_color = [&](int obj) { return x.color(c.identity_of[obj]); };
  for (const auto& fiber : x.fibers()) {
    for (size_t i = 1; i < fiber.size(); ++i) {
      int f = fiber[0], g = fiber[i];
      if (id_color(c.src(f)) != id_color(c.src(g)) || id_color(c.tgt(f)) != id_color(c.tgt(g)))
        return {false, std::make_pair(f, g)};
    }
  }
  return {true, std::nullopt};
}

TamenessReport tameness(const ColoredCategory& x) {
  TamenessReport r;
  const auto& c = x.base;
  auto table = structure_constants(x);
  r.applicable = table.schemoid;

  // T(i): the identity colors together contain exactly the identities.
  std::vector<char> is_id(c.morphism_count(), 0);
  for (int obj = 0; obj < c.object_count; ++obj) is_id[c.identity_of[obj]] = 1;
  std::vector<char> color_has_id(x.color_count, 0);
  for (int f = 0; f < c.morphism_count(); ++f)
    if (is_id[f]) color_has_id[x.color(f)] = 1;
  r.unital = true;
  for (int f = 0; f < c.morphism_count(); ++f)
    if (color_has_id[x.color(f)] && !is_id[f]) r.unital = false;

  // T(ii), checked directly rather than inferred from T(i).
  r.tii = is_naturally_colored(x).natural;

  // T(iii): for each composable pair of colors in the class diagram, some
  // representative pair composes, and a unique mu has p(tau,sigma,mu) >= 1.
  if (r.applicable && r.tii) {
    auto id_color = [&](int obj) { return x.color(c.identity_of[obj]); };
    std::vector<int> s_color(x.color_count), t_color(x.color_count);
    auto fibers = x.fibers();
    for (int col = 0; col < x.color_count; ++col) {
      s_color[col] = id_color(c.src(fibers[col][0]));
      t_color[col] = id_color(c.tgt(fibers[col][0]));
    }
    r.tiii = true;
    for (int sigma = 0; sigma < x.color_count && r.tiii; ++sigma)
      for (int tau = 0; tau < x.color_count && r.tiii; ++tau) {
        if (t_color[sigma] != s_color[tau]) continue; // sigma then tau not a path in [C]
        bool composable_pair = false;
        for (int f : fibers[sigma]) {
          for (int g : fibers[tau])
            if (c.tgt(f) == c.src(g)) {
              composable_pair = true;
              break;
            }
          if (composable_pair) break;
        }
        int mu_count = 0;
        for (int mu = 0; mu < x.color_count; ++mu)
          if (table.at(tau, sigma, mu) >= 1) ++mu_count;
        if (!composable_pair || mu_count != 1) r.tiii = false;
      }
  }
  r.tame = r.applicable && r.unital && r.tiii;
  return r;
}

ColorQuiver color_quiver(const ColoredCategory& x) {
  auto nat = is_naturally_colored(x);
  if (!nat.natural) {
    std::ostringstream os;
    os << "color_quiver: not naturally colored; witness morphisms " << nat.witness->first << " and "
       << nat.witness->second;
    throw PreconditionError(os.str());
  }
  const auto& c = x.base;
  ColorQuiver q;
  std::vector<char> has_id(x.color_count, 0);
  for (int obj = 0; obj < c.object_count; ++obj) has_id[x.color(c.identity_of[obj])] = 1;
  std::vector<int> pos(x.color_count, -1);
  for (int col = 0; col < x.color_count; ++col)
    if (has_id[col]) {
      pos[col] = static_cast<int>(q.object_colors.size());
      q.object_colors.push_back(col);
    }
  q.object_color_of.resize(c.object_count);
  for (int obj = 0; obj < c.object_count; ++obj)
    q.object_color_of[obj] = pos[x.color(c.identity_of[obj])];
  q.sbar.resize(x.color_count);
  q.tbar.resize(x.color_count);
  auto fibers = x.fibers();
  for (int col = 0; col < x.color_count; ++col) {
    int f = fibers[col][0];
    q.sbar[col] = q.object_color_of[c.src(f)];
    q.tbar[col] = q.object_color_of[c.tgt(f)];
  }
  return q;
}

ColoredMorphismResult check_colored_morphism(const CatFunctor& u, const ColoredCategory& x,
                                             const ColoredCategory& y) {
  ColoredMorphismResult out;
  out.color_map.assign(x.color_count, -1);
  for (const auto& fiber : x.fibers()) {
    int sigma = x.color(fiber[0]);
    int target = y.color(u.morphism_map[fiber[0]]);
    for (int f : fiber) {
      int t = y.color(u.morphism_map[f]);
      if (t != target) {
        out.valid = false;
        out.witness = ColoredMorphismResult::Witness{sigma, fiber[0], f};
        out.color_map.clear();
        return out;
      }
    }
    out.color_map[sigma] = target;
  }
  out.valid = true;
  return out;
}

bool prop_app_hypotheses(const CatFunctor& u, const ColoredCategory& x, const ColoredCategory& hamming,
                         int tau) {
  auto cm = check_colored_morphism(u, x, hamming);
  if (!cm.valid) return false;
  if (cm.color_map[tau] % 2 != 1) return false;

  // some invertible f in tau with f^{-1} also in tau
  const auto& c = x.base;
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (x.color(f) != tau) continue;
    for (int g = 0; g < c.morphism_count(); ++g) {
      if (x.color(g) != tau) continue;
      if (!c.composable(g, f) || !c.composable(f, g)) continue;
      if (c.compose(g, f) == c.identity_of[c.src(f)] && c.compose(f, g) == c.identity_of[c.tgt(f)])
        return true;
    }
  }
  return false;
}

} // namespace schemoid
