#include "schemoid/builders.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace schemoid {

namespace {

int face_mask(const std::vector<int>& face) {
  int m = 0;
  for (int v : face) m |= 1 << v;
  return m;
}

std::vector<int> mask_face(int m) {
  std::vector<int> out;
  for (int v = 0; m >> v; ++v)
    if (m >> v & 1) out.push_back(v);
  return out;
}

} // namespace

SimplicialComplex SimplicialComplex::closure(int vertex_count,
                                             const std::vector<std::vector<int>>& generating) {
  std::set<int> masks = {0};
  for (const auto& f : generating) {
    int m = face_mask(f);
    for (int s = m;; s = (s - 1) & m) {
      masks.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<int> order(masks.begin(), masks.end());
  std::sort(order.begin(), order.end(), [](int a, int b) {
    return std::pair(std::popcount(unsigned(a)), a) < std::pair(std::popcount(unsigned(b)), b);
  });
  SimplicialComplex k;
  k.vertex_count = vertex_count;
  for (int m : order) k.faces.push_back(mask_face(m));
  return k;
}

ValidationReport SimplicialComplex::validate() const {
  ValidationReport r;
  std::set<int> masks;
  for (size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
      r.add("face-sorted", {static_cast<int>(i)});
    for (int v : f)
      if (v < 0 || v >= vertex_count) r.add("vertex-range", {static_cast<int>(i), v});
    if (!masks.insert(face_mask(f)).second) r.add("face-duplicate", {static_cast<int>(i)});
  }
  if (faces.empty() || !faces[0].empty()) r.add("empty-face-first", {});
  for (size_t i = 0; i < faces.size(); ++i) {
    int m = face_mask(faces[i]);
    for (int v : faces[i])
      if (!masks.count(m & ~(1 << v))) r.add("downward-closure", {static_cast<int>(i), v});
  }
  return r;
}

int SimplicialComplex::face_index(const std::vector<int>& face) const {
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i] == face) return static_cast<int>(i);
  return -1;
}

bool SimplicialComplex::has_edge(int i, int j) const {
  return face_index({std::min(i, j), std::max(i, j)}) >= 0;
}

std::vector<std::pair<int, int>> SimplicialComplex::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& f : faces)
    if (f.size() == 2) out.emplace_back(f[0], f[1]);
  return out;
}

ColoredCategory discrete_schemoid(const FiniteCategory& c) {
  std::vector<int> colors(c.morphism_count());
  std::iota(colors.begin(), colors.end(), 0);
  return ColoredCategory(c, std::move(colors), c.morphism_count());
}

ColoredCategory group_schemoid(const FiniteGroup& g, GroupColorConvention conv) {
  int n = g.order;
  if (n <= 0) throw PreconditionError("group_schemoid: empty group");
  FiniteCategory c;
  c.object_count = n;
  c.morphisms.resize(static_cast<size_t>(n) * n);
  c.identity_of.resize(n);
  for (int x = 0; x < n; ++x) {
    c.identity_of[x] = x * n + x;
    for (int y = 0; y < n; ++y) c.morphisms[x * n + y] = {x, y};
  }
  c.init_compose_table();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) c.set_compose(y * n + z, x * n + y, x * n + z);
  std::vector<int> colors(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      colors[x * n + y] = conv == GroupColorConvention::TargetOverSource
                              ? g.times(y, g.inverse(x))
                              : g.times(g.inverse(x), y);
  return ColoredCategory(std::move(c), std::move(colors), n);
}

ColoredCategory simplicial_schemoid(const SimplicialComplex& k) {
  auto report = k.validate();
  if (!report.ok()) throw PreconditionError("simplicial_schemoid: " + report.summary());
  int nf = static_cast<int>(k.faces.size());
  std::vector<int> mask(nf);
  std::map<int, int> index_of_mask;
  for (int i = 0; i < nf; ++i) {
    mask[i] = face_mask(k.faces[i]);
    index_of_mask[mask[i]] = i;
  }
  FiniteCategory c;
  c.object_count = nf;
  c.identity_of.assign(nf, -1);
  std::vector<std::vector<int>> idx(nf, std::vector<int>(nf, -1));
  std::vector<int> colors;
  for (int t = 0; t < nf; ++t)
    for (int v = 0; v < nf; ++v)
      if ((mask[t] & mask[v]) == mask[t]) {
        idx[t][v] = c.morphism_count();
        c.morphisms.push_back({t, v});
        colors.push_back(index_of_mask.at(mask[v] & ~mask[t]));
        if (t == v) c.identity_of[t] = idx[t][v];
      }
  c.init_compose_table();
  for (int t = 0; t < nf; ++t)
    for (int v = 0; v < nf; ++v)
      for (int w = 0; w < nf; ++w)
        if (idx[t][v] >= 0 && idx[v][w] >= 0) c.set_compose(idx[v][w], idx[t][v], idx[t][w]);
  return ColoredCategory(std::move(c), std::move(colors), nf);
}

CategoryPresentation trace_monoid_presentation(const SimplicialComplex& k) {
  CategoryPresentation p;
  p.object_count = 1;
  for (int v = 0; v < k.vertex_count; ++v) {
    p.generators.push_back({v, 0, 0});
    p.is_identity_generator.push_back(0);
  }
  for (auto [i, j] : k.edges()) p.relations.push_back({{i, j}, {j, i}});
  return p;
}

PullbackFixture pullback_counterexample() {
  FiniteCategory c;
  c.object_count = 2;
  c.morphisms = {{0, 0}, {1, 1}, {1, 1}}; // id_x, id_y, f
  c.identity_of = {0, 1};
  c.init_compose_table();
  c.set_compose(0, 0, 0);
  c.set_compose(1, 1, 1);
  c.set_compose(2, 1, 2);
  c.set_compose(1, 2, 2);
  c.set_compose(2, 2, 1); // f is an involution
  PullbackFixture fx;
  fx.x = ColoredCategory(std::move(c), {0, 1, 0}, 2);
  fx.F.object_sets = {{"1", "2", "3"}, {"1", "2", "3"}};
  fx.F.morphism_maps = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  fx.eta.components = {{0, 0, 2}, {0, 1, 2}};
  fx.lambda.components = {{1, 1, 2}, {0, 1, 2}};
  return fx;
}

PropAppFixture prop_app_example() {
  FiniteCategory c;
  c.object_count = 3; // 0 = "00", 1 = "01", 2 = "10"
  c.morphisms = {{0, 0}, {1, 1}, {2, 2}, // identities
                 {0, 1},                 // a
                 {1, 0},                 // b
                 {0, 2},                 // c
                 {1, 2}};                // d
  c.identity_of = {0, 1, 2};
  c.init_compose_table();
  for (int f = 0; f < c.morphism_count(); ++f) {
    c.set_compose(c.identity_of[c.tgt(f)], f, f);
    c.set_compose(f, c.identity_of[c.src(f)], f);
  }
  c.set_compose(4, 3, 0); // b∘a = id_00
  c.set_compose(3, 4, 1); // a∘b = id_01
  c.set_compose(6, 3, 5); // d∘a = c
  c.set_compose(5, 4, 6); // c∘b = d

  PropAppFixture fx;
  fx.x = ColoredCategory(std::move(c), {0, 1, 2, 3, 3, 4, 5}, 6);
  fx.tau = 3;
  fx.hamming = scheme_schemoid(hamming_scheme(2, 2));
  fx.u.object_map = {0, 1, 2}; // points 00, 01, 10 of the Hamming scheme
  for (int f = 0; f < fx.x.base.morphism_count(); ++f) {
    int s = fx.u.object_map[fx.x.base.src(f)], t = fx.u.object_map[fx.x.base.tgt(f)];
    fx.u.morphism_map.push_back(s * 4 + t);
  }
  return fx;
}

ColoredCategory nat_len_truncation(int max_length) {
  if (max_length < 0) throw PreconditionError("nat_len_truncation: negative length");
  int n = max_length + 1;
  FiniteCategory c;
  c.object_count = n;
  c.identity_of.assign(n, -1);
  std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
  std::vector<int> colors;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      idx[i][j] = c.morphism_count();
      c.morphisms.push_back({i, j});
      colors.push_back(j - i);
      if (i == j) c.identity_of[i] = idx[i][j];
    }
  c.init_compose_table();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int l = j; l < n; ++l) c.set_compose(idx[j][l], idx[i][j], idx[i][l]);
  return ColoredCategory(std::move(c), std::move(colors), n);
}

namespace {

struct IsoSearch {
  const FiniteCategory& a;
  const FiniteCategory& b;
  const std::vector<int>* color_a = nullptr;
  const std::vector<int>* color_b = nullptr;
  std::vector<int> obj_map, mor_map, mor_rev, col_map, col_rev;

  bool consistent(int f) const {
    for (int g = 0; g < a.morphism_count(); ++g) {
      if (mor_map[g] < 0) continue;
      for (auto [p, q] : {std::pair(f, g), std::pair(g, f)}) {
        if (!a.composable(p, q)) continue;
        int h = a.compose(p, q);
        int hb = b.compose(mor_map[p], mor_map[q]);
        if (mor_map[h] >= 0 ? mor_map[h] != hb : mor_rev[hb] >= 0 && mor_rev[hb] != h)
          return false;
      }
    }
    if (a.composable(f, f)) {
      int h = a.compose(f, f), hb = b.compose(mor_map[f], mor_map[f]);
      if (mor_map[h] >= 0 ? mor_map[h] != hb : mor_rev[hb] >= 0 && mor_rev[hb] != h) return false;
    }
    return true;
  }

  bool assign_morphisms(int f) {
    if (f == a.morphism_count()) return true;
    for (int g = 0; g < b.morphism_count(); ++g) {
      if (mor_rev[g] >= 0) continue;
      if (b.src(g) != obj_map[a.src(f)] || b.tgt(g) != obj_map[a.tgt(f)]) continue;
      if (a.is_identity(f) != b.is_identity(g)) continue;
      int ca = -1, cb = -1;
      if (color_a) {
        ca = (*color_a)[f];
        cb = (*color_b)[g];
        if (col_map[ca] >= 0 ? col_map[ca] != cb : col_rev[cb] >= 0) continue;
      }
      mor_map[f] = g;
      mor_rev[g] = f;
      int saved_ca = color_a ? col_map[ca] : 0, saved_cb = color_a ? col_rev[cb] : 0;
      if (color_a) {
        col_map[ca] = cb;
        col_rev[cb] = ca;
      }
      if (consistent(f) && assign_morphisms(f + 1)) return true;
      mor_map[f] = -1;
      mor_rev[g] = -1;
      if (color_a) {
        col_map[ca] = saved_ca;
        col_rev[cb] = saved_cb;
      }
    }
    return false;
  }

  bool run() {
    if (a.object_count != b.object_count || a.morphism_count() != b.morphism_count()) return false;
    if (color_a && col_map.size() != col_rev.size()) return false;
    std::vector<int> perm(a.object_count);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // hom-set size pruning
      std::vector<int> hom_a(static_cast<size_t>(a.object_count) * a.object_count),
          hom_b(hom_a.size());
      for (int f = 0; f < a.morphism_count(); ++f)
        ++hom_a[static_cast<size_t>(perm[a.src(f)]) * a.object_count + perm[a.tgt(f)]];
      for (int g = 0; g < b.morphism_count(); ++g)
        ++hom_b[static_cast<size_t>(b.src(g)) * b.object_count + b.tgt(g)];
      if (hom_a != hom_b) continue;
      obj_map = perm;
      mor_map.assign(a.morphism_count(), -1);
      mor_rev.assign(b.morphism_count(), -1);
      if (color_a) {
        std::fill(col_map.begin(), col_map.end(), -1);
        std::fill(col_rev.begin(), col_rev.end(), -1);
      }
      if (assign_morphisms(0)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }
};

} // namespace

std::optional<CatFunctor> find_category_isomorphism(const FiniteCategory& a,
                                                    const FiniteCategory& b) {
  IsoSearch s{a, b};
  if (!s.run()) return std::nullopt;
  CatFunctor u{s.obj_map, s.mor_map};
  if (!check_cat_functor(a, b, u).ok()) return std::nullopt;
  return u;
}

std::optional<ColoredIsomorphism> find_colored_isomorphism(const ColoredCategory& a,
                                                           const ColoredCategory& b) {
  if (a.color_count != b.color_count) return std::nullopt;
  IsoSearch s{a.base, b.base};
  s.color_a = &a.color_of;
  s.color_b = &b.color_of;
  s.col_map.assign(a.color_count, -1);
  s.col_rev.assign(b.color_count, -1);
  if (!s.run()) return std::nullopt;
  CatFunctor u{s.obj_map, s.mor_map};
  if (!check_cat_functor(a.base, b.base, u).ok()) return std::nullopt;
  return ColoredIsomorphism{u, s.col_map};
}

} // namespace schemoid
