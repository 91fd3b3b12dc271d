#include "schemoid/scheme.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace schemoid {

ValidationReport validate_scheme(const AssociationScheme& s) {
  ValidationReport report;
  const int n = s.point_count;
  const int r = s.relation_count;
  if (static_cast<int>(s.relation_of.size()) != n * n || n <= 0 || r <= 0) {
    report.add("structure", {}, "relation table size mismatch");
    return report;
  }
  std::vector<char> seen(r, 0);
  for (int v : s.relation_of) {
    if (v < 0 || v >= r) {
      report.add("range", {v});
      return report;
    }
    seen[v] = 1;
  }
  for (int i = 0; i < r; ++i)
    if (!seen[i]) report.add("empty-relation", {i});

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((s.rel(x, y) == 0) != (x == y)) report.add("diagonal", {x, y, s.rel(x, y)});
  if (!report.ok()) return report;

  // transpose-closed: rel(y,x) depends only on rel(x,y)
  std::vector<int> adj(r, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i = s.rel(x, y), it = s.rel(y, x);
      if (adj[i] < 0)
        adj[i] = it;
      else if (adj[i] != it)
        report.add("transpose", {i, adj[i], it});
    }
  if (!report.ok()) return report;

  // intersection numbers independent of the representative pair
  std::vector<std::vector<long long>> first(static_cast<size_t>(r) * r);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int k = s.rel(x, y);
      std::vector<long long> counts(static_cast<size_t>(r) * r, 0);
      for (int z = 0; z < n; ++z) counts[static_cast<size_t>(s.rel(x, z)) * r + s.rel(z, y)]++;
      for (int i = 0; i < r && report.ok(); ++i)
        for (int j = 0; j < r && report.ok(); ++j) {
          auto& ref = first[static_cast<size_t>(i) * r + j];
          if (static_cast<int>(ref.size()) <= k) ref.resize(r, -1);
          long long c = counts[static_cast<size_t>(i) * r + j];
          if (ref[k] < 0)
            ref[k] = c;
          else if (ref[k] != c)
            report.add("intersection-number", {i, j, k},
                       std::to_string(ref[k]) + " vs " + std::to_string(c));
        }
      if (!report.ok()) return report;
    }
  return report;
}

SchemeConstants scheme_constants(const AssociationScheme& s) {
  const int n = s.point_count;
  const int r = s.relation_count;
  SchemeConstants c;
  c.relation_count = r;
  c.p.assign(static_cast<size_t>(r) * r * r, 0);
  c.adjoint.assign(r, -1);
  c.valency.assign(r, 0);

  std::vector<std::pair<int, int>> rep(r, {-1, -1});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int k = s.rel(x, y);
      if (rep[k].first < 0) rep[k] = {x, y};
      c.adjoint[k] = s.rel(y, x);
    }
  for (int k = 0; k < r; ++k) {
    auto [x, y] = rep[k];
    for (int z = 0; z < n; ++z) c.p[(static_cast<size_t>(s.rel(x, z)) * r + s.rel(z, y)) * r + k]++;
  }
  for (int y = 0; y < n; ++y) c.valency[s.rel(0, y)]++;
  return c;
}

AssociationScheme hamming_scheme(int n, int q) {
  if (n < 1 || q < 2) throw PreconditionError("hamming_scheme: need n >= 1 and q >= 2");
  AssociationScheme s;
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > 100000) throw PreconditionError("hamming_scheme: point set too large");
  }
  s.point_count = static_cast<int>(total);
  s.relation_count = n + 1;
  std::vector<std::vector<int>> words;
  for (int v = 0; v < s.point_count; ++v) {
    std::vector<int> w(n);
    int t = v;
    for (int i = n - 1; i >= 0; --i) {
      w[i] = t % q;
      t /= q;
    }
    std::string name;
    for (int d : w) name += static_cast<char>('0' + d);
    s.point_names.push_back(name);
    words.push_back(std::move(w));
  }
  s.relation_of.resize(static_cast<size_t>(s.point_count) * s.point_count);
  for (int x = 0; x < s.point_count; ++x)
    for (int y = 0; y < s.point_count; ++y) {
      int d = 0;
      for (int i = 0; i < n; ++i) d += words[x][i] != words[y][i];
      s.relation_of[static_cast<size_t>(x) * s.point_count + y] = d;
    }
  return s;
}

AssociationScheme johnson_scheme(int v, int d) {
  if (v < 1 || d < 1 || d > v) throw PreconditionError("johnson_scheme: need 1 <= d <= v");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int start) {
    if (static_cast<int>(cur.size()) == d) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < v; ++i) {
      cur.push_back(i);
      gen(i + 1);
      cur.pop_back();
    }
  };
  gen(0);

  AssociationScheme s;
  s.point_count = static_cast<int>(subsets.size());
  s.relation_count = std::min(d, v - d) + 1;
  for (const auto& a : subsets) {
    std::string name = "{";
    for (size_t i = 0; i < a.size(); ++i) name += (i ? "," : "") + std::to_string(a[i]);
    s.point_names.push_back(name + "}");
  }
  s.relation_of.resize(static_cast<size_t>(s.point_count) * s.point_count);
  for (int x = 0; x < s.point_count; ++x)
    for (int y = 0; y < s.point_count; ++y) {
      std::vector<int> inter;
      std::set_intersection(subsets[x].begin(), subsets[x].end(), subsets[y].begin(),
                            subsets[y].end(), std::back_inserter(inter));
      s.relation_of[static_cast<size_t>(x) * s.point_count + y] =
          d - static_cast<int>(inter.size());
    }
  return s;
}

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (times(a, b) == 0) return b;
  throw PreconditionError("group: element without inverse");
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = times(x, a);
    ++k;
  }
  return k;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  FiniteGroup g;
  g.order = n;
  g.mult.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    g.element_names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) g.mult[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.mult.resize(static_cast<size_t>(g.order) * g.order);
  for (int x = 0; x < g.order; ++x) {
    int xa = x / b.order, xb = x % b.order;
    g.element_names.push_back("(" + a.element_names[xa] + "," + b.element_names[xb] + ")");
    for (int y = 0; y < g.order; ++y) {
      int ya = y / b.order, yb = y % b.order;
      g.mult[static_cast<size_t>(x) * g.order + y] = a.times(xa, ya) * b.order + b.times(xb, yb);
    }
  }
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  FiniteGroup g;
  g.order = static_cast<int>(perms.size());
  g.mult.resize(static_cast<size_t>(g.order) * g.order);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < g.order; ++i) {
    index[perms[i]] = i;
    std::string name;
    for (int v : perms[i]) name += std::to_string(v);
    g.element_names.push_back(name);
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      std::vector<int> ab(n);
      for (int i = 0; i < n; ++i) ab[i] = perms[a][perms[b][i]]; // (ab)(i) = a(b(i))
      g.mult[static_cast<size_t>(a) * g.order + b] = index[ab];
    }
  return g;
}

AssociationScheme group_scheme(const FiniteGroup& g) {
  AssociationScheme s;
  s.point_count = g.order;
  s.relation_count = g.order;
  s.point_names = g.element_names;
  s.relation_of.resize(static_cast<size_t>(g.order) * g.order);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      s.relation_of[static_cast<size_t>(x) * g.order + y] = g.times(g.inverse(x), y);
  return s;
}

bool standard_representation_check(const AssociationScheme& s, std::string* detail) {
  const int n = s.point_count;
  const int r = s.relation_count;
  auto c = scheme_constants(s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          long long prod = 0;
          for (int z = 0; z < n; ++z)
            if (s.rel(x, z) == i && s.rel(z, y) == j) ++prod;
          long long expected = c.at(i, j, s.rel(x, y));
          if (prod != expected) {
            if (detail) {
              std::ostringstream os;
              os << "(A_" << i << " A_" << j << ")[" << x << "," << y << "] = " << prod
                 << ", expected " << expected;
              *detail = os.str();
            }
            return false;
          }
        }
  return true;
}

bool is_closed_subset(const AssociationScheme& s, const std::vector<char>& subset) {
  auto c = scheme_constants(s);
  const int r = s.relation_count;
  if (static_cast<int>(subset.size()) != r || !subset[0]) return false;
  for (int i = 0; i < r; ++i) {
    if (!subset[i]) continue;
    if (!subset[c.adjoint[i]]) return false;
    for (int j = 0; j < r; ++j) {
      if (!subset[j]) continue;
      for (int k = 0; k < r; ++k)
        if (c.at(i, j, k) != 0 && !subset[k]) return false;
    }
  }
  return true;
}

std::vector<char> thin_residue(const AssociationScheme& s) {
  auto c = scheme_constants(s);
  const int r = s.relation_count;
  std::vector<char> t(r, 0);
  t[0] = 1;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      if (c.at(i, c.adjoint[i], k) != 0) t[k] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < r; ++i) {
      if (!t[i]) continue;
      if (!t[c.adjoint[i]]) {
        t[c.adjoint[i]] = 1;
        changed = true;
      }
      for (int j = 0; j < r; ++j) {
        if (!t[j]) continue;
        for (int k = 0; k < r; ++k)
          if (c.at(i, j, k) != 0 && !t[k]) {
            t[k] = 1;
            changed = true;
          }
      }
    }
  }
  return t;
}

FactorScheme factor_scheme(const AssociationScheme& s, const std::vector<char>& closed) {
  if (!is_closed_subset(s, closed))
    throw PreconditionError("factor_scheme: subset is not closed");
  const int n = s.point_count;
  FactorScheme f;
  f.block_of.assign(n, -1);
  int blocks = 0;
  for (int x = 0; x < n; ++x) {
    if (f.block_of[x] >= 0) continue;
    for (int y = 0; y < n; ++y)
      if (closed[s.rel(x, y)]) f.block_of[y] = blocks;
    ++blocks;
  }

  // relation of a block pair = the set of base relations between the blocks
  std::map<std::vector<int>, int> label;
  std::vector<std::vector<int>> pair_label(static_cast<size_t>(blocks),
                                           std::vector<int>(blocks));
  std::vector<std::vector<int>> label_sets;
  for (int b1 = 0; b1 < blocks; ++b1)
    for (int b2 = 0; b2 < blocks; ++b2) {
      std::set<int> rels;
      for (int x = 0; x < n; ++x) {
        if (f.block_of[x] != b1) continue;
        for (int y = 0; y < n; ++y)
          if (f.block_of[y] == b2) rels.insert(s.rel(x, y));
      }
      std::vector<int> key(rels.begin(), rels.end());
      if (!label.count(key)) {
        label[key] = 0;
        label_sets.push_back(key);
      }
      pair_label[b1][b2] = 0; // reassigned after sorting the label sets
    }
  std::sort(label_sets.begin(), label_sets.end());
  for (int i = 0; i < static_cast<int>(label_sets.size()); ++i) label[label_sets[i]] = i;
  f.relation_members = label_sets;

  f.scheme.point_count = blocks;
  f.scheme.relation_count = static_cast<int>(label_sets.size());
  f.scheme.relation_of.resize(static_cast<size_t>(blocks) * blocks);
  for (int b1 = 0; b1 < blocks; ++b1)
    for (int b2 = 0; b2 < blocks; ++b2) {
      std::set<int> rels;
      for (int x = 0; x < n; ++x) {
        if (f.block_of[x] != b1) continue;
        for (int y = 0; y < n; ++y)
          if (f.block_of[y] == b2) rels.insert(s.rel(x, y));
      }
      f.scheme.relation_of[static_cast<size_t>(b1) * blocks + b2] =
          label[std::vector<int>(rels.begin(), rels.end())];
    }
  for (int b = 0; b < blocks; ++b) {
    for (int x = 0; x < n; ++x)
      if (f.block_of[x] == b) {
        f.scheme.point_names.push_back(
            (s.point_names.empty() ? std::to_string(x) : s.point_names[x]) + "T");
        break;
      }
  }
  return f;
}

bool is_thin(const AssociationScheme& s) {
  auto c = scheme_constants(s);
  for (long long v : c.valency)
    if (v != 1) return false;
  return true;
}

FiniteGroup thin_scheme_group(const AssociationScheme& s) {
  if (!is_thin(s)) throw PreconditionError("thin_scheme_group: scheme is not thin");
  auto c = scheme_constants(s);
  const int r = s.relation_count;
  FiniteGroup g;
  g.order = r;
  g.mult.assign(static_cast<size_t>(r) * r, -1);
  for (int i = 0; i < r; ++i) {
    g.element_names.push_back("r" + std::to_string(i));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (c.at(i, j, k) != 0) {
          g.mult[static_cast<size_t>(i) * r + j] = k;
          break;
        }
  }
  return g;
}

ColoredCategory scheme_schemoid(const AssociationScheme& s) {
  const int n = s.point_count;
  FiniteCategory c;
  c.object_count = n;
  c.morphisms.resize(static_cast<size_t>(n) * n);
  c.identity_of.resize(n);
  for (int x = 0; x < n; ++x) {
    c.identity_of[x] = x * n + x;
    for (int y = 0; y < n; ++y) c.morphisms[static_cast<size_t>(x) * n + y] = {x, y};
  }
  c.init_compose_table();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) c.set_compose(y * n + z, x * n + y, x * n + z);
  return ColoredCategory(std::move(c), s.relation_of, s.relation_count);
}

std::optional<std::vector<int>> group_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order != b.order) return std::nullopt;
  const int n = a.order;
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  image[0] = 0;
  used[0] = 1;
  std::vector<int> ord_a(n), ord_b(n);
  for (int i = 0; i < n; ++i) {
    ord_a[i] = a.element_order(i);
    ord_b[i] = b.element_order(i);
  }
  std::function<bool(int)> assign = [&](int e) -> bool {
    if (e == n) return true;
    for (int img = 0; img < n; ++img) {
      if (used[img] || ord_a[e] != ord_b[img]) continue;
      bool ok = true;
      image[e] = img;
      for (int x = 0; x <= e && ok; ++x) {
        if (image[x] < 0) continue;
        int xy = a.times(x, e), yx = a.times(e, x);
        if (xy <= e && image[xy] >= 0 && b.times(image[x], img) != image[xy]) ok = false;
        if (yx <= e && image[yx] >= 0 && b.times(img, image[x]) != image[yx]) ok = false;
      }
      if (ok) {
        used[img] = 1;
        if (assign(e + 1)) return true;
        used[img] = 0;
      }
      image[e] = -1;
    }
    return false;
  };
  if (!assign(1)) return std::nullopt;
  // full verification of the found map
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (b.times(image[x], image[y]) != image[a.times(x, y)]) return std::nullopt;
  return image;
}

FiniteGroup group_from_quotient(const QuotientResult& q) {
  if (q.status != QuotientResult::Status::Finite)
    throw UnsupportedError("group_from_quotient: quotient undecided");
  if (q.category.object_count != 1 || q.kind != QuotientResult::Kind::Group)
    throw UnsupportedError("group_from_quotient: quotient is not a one-object group");
  const auto& c = q.category;
  const int n = c.morphism_count();
  std::vector<int> elems;
  elems.push_back(c.identity_of[0]);
  for (int f = 0; f < n; ++f)
    if (f != c.identity_of[0]) elems.push_back(f);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elems[i]] = i;

  FiniteGroup g;
  g.order = n;
  g.mult.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    std::ostringstream os;
    os << "m" << elems[a];
    g.element_names.push_back(os.str());
    for (int b = 0; b < n; ++b)
      g.mult[static_cast<size_t>(a) * n + b] = pos[c.compose(elems[a], elems[b])];
  }
  return g;
}

PropHResult thin_residue_crosscheck(const AssociationScheme& s, CompletionCaps caps) {
  PropHResult out;
  auto x = scheme_schemoid(s);
  auto q = quotient_category(x, caps);
  if (q.status != QuotientResult::Status::Finite) {
    out.detail = "quotient undecided";
    return out;
  }
  if (q.category.object_count != 1 || q.kind != QuotientResult::Kind::Group) {
    out.detail = "quotient is not a one-object group";
    return out;
  }
  auto g1 = group_from_quotient(q);

  auto t = thin_residue(s);
  auto f = factor_scheme(s, t);
  if (!is_thin(f.scheme)) {
    out.detail = "factor scheme by the thin residue is not thin";
    return out;
  }
  auto g2 = thin_scheme_group(f.scheme);
  out.group_order = g1.order;
  if (g1.order != g2.order) {
    out.detail = "group orders differ: " + std::to_string(g1.order) + " vs " +
                 std::to_string(g2.order);
    return out;
  }
  if (!group_isomorphism(g1, g2)) {
    out.detail = "groups of order " + std::to_string(g1.order) + " are not isomorphic";
    return out;
  }
  out.holds = true;
  out.detail = "isomorphic groups of order " + std::to_string(g1.order);
  return out;
}

} // namespace schemoid
