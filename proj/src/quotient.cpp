#include "schemoid/quotient.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace schemoid {

bool CategoryPresentation::word_composable(const Word& w) const {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (generators[w[i]].tgt != generators[w[i + 1]].src) return false;
  return true;
}

CategoryPresentation build_presentation(const ColoredCategory& x) {
  const auto& c = x.base;
  CategoryPresentation p;
  Partition classes = object_classes(x);
  p.object_count = classes.class_count;

  auto fibers = x.fibers();
  p.generators.resize(x.color_count);
  p.is_identity_generator.assign(x.color_count, 0);
  for (int col = 0; col < x.color_count; ++col) {
    int f = fibers[col][0];
    p.generators[col] = {col, classes.class_of[c.src(f)], classes.class_of[c.tgt(f)]};
    // endpoint classes are well defined: all morphisms of a color have
    // ⁰∼-equal sources and targets by construction of the relation
    for (int g : fibers[col]) {
      if (classes.class_of[c.src(g)] != p.generators[col].src ||
          classes.class_of[c.tgt(g)] != p.generators[col].tgt)
        throw PreconditionError("presentation: inconsistent endpoint classes within a color");
    }
  }

  std::set<std::pair<Word, Word>> rels;
  // c-relation: one instance per composable pair of morphisms
  for (int k = 0; k < c.morphism_count(); ++k)
    for (int l = 0; l < c.morphism_count(); ++l) {
      if (!c.composable(l, k)) continue;
      int lk = c.compose(l, k);
      rels.insert({Word{x.color(k), x.color(l)}, Word{x.color(lk)}}); // k first, then l
    }
  // identity colors equal the empty word
  for (int obj = 0; obj < c.object_count; ++obj) {
    int col = x.color(c.identity_of[obj]);
    rels.insert({Word{col}, Word{}});
  }
  // ob-relation between identity-bearing colors over ⁰∼-equal objects
  std::vector<std::vector<int>> id_colors_of_class(p.object_count);
  for (int obj = 0; obj < c.object_count; ++obj) {
    int col = x.color(c.identity_of[obj]);
    auto& v = id_colors_of_class[classes.class_of[obj]];
    if (std::find(v.begin(), v.end(), col) == v.end()) v.push_back(col);
    p.is_identity_generator[col] = 1;
  }
  for (const auto& cols : id_colors_of_class)
    for (size_t i = 0; i + 1 < cols.size(); ++i)
      rels.insert({Word{cols[i]}, Word{cols[i + 1]}});

  p.relations.assign(rels.begin(), rels.end());
  return p;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

// Returns true and rewrites w in place if some rule applies.
bool apply_once(const std::vector<std::pair<Word, Word>>& rules, Word& w) {
  for (size_t i = 0; i <= w.size(); ++i) {
    for (const auto& [lhs, rhs] : rules) {
      if (lhs.size() > w.size() - i) continue;
      if (!std::equal(lhs.begin(), lhs.end(), w.begin() + i)) continue;
      Word out(w.begin(), w.begin() + i);
      out.insert(out.end(), rhs.begin(), rhs.end());
      out.insert(out.end(), w.begin() + i + lhs.size(), w.end());
      w = std::move(out);
      return true;
    }
  }
  return false;
}

} // namespace

Word RewriteSystem::normalize(Word w) const {
  while (apply_once(rules, w)) {
  }
  return w;
}

RewriteSystem complete(const CategoryPresentation& p, CompletionCaps caps) {
  RewriteSystem rs;
  rs.generators = p.generators;
  rs.object_count = p.object_count;
  rs.caps = caps;
  rs.complete = false;

  std::deque<std::pair<Word, Word>> pending(p.relations.begin(), p.relations.end());
  int processed = 0;

  auto enqueue_overlaps = [&](const std::pair<Word, Word>& r1, const std::pair<Word, Word>& r2) {
    const Word& l1 = r1.first;
    const Word& l2 = r2.first;
    // proper overlap: suffix of l1 equals prefix of l2
    size_t max_k = std::min(l1.size(), l2.size());
    for (size_t k = 1; k < max_k; ++k) {
      if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k)) continue;
      Word a = r1.second;
      a.insert(a.end(), l2.begin() + k, l2.end());
      Word b(l1.begin(), l1.end() - k);
      b.insert(b.end(), r2.second.begin(), r2.second.end());
      pending.emplace_back(a, b);
    }
    // containment: l2 inside l1
    if (l2.size() < l1.size() || (l2.size() == l1.size() && l1 != l2)) {
      for (size_t i = 0; i + l2.size() <= l1.size(); ++i) {
        if (!std::equal(l2.begin(), l2.end(), l1.begin() + i)) continue;
        Word b(l1.begin(), l1.begin() + i);
        b.insert(b.end(), r2.second.begin(), r2.second.end());
        b.insert(b.end(), l1.begin() + i + l2.size(), l1.end());
        pending.emplace_back(r1.second, b);
      }
    }
  };

  while (!pending.empty()) {
    if (++processed > caps.max_pairs) return rs; // cap exhausted, undecided
    auto [u, v] = pending.front();
    pending.pop_front();
    u = rs.normalize(std::move(u));
    v = rs.normalize(std::move(v));
    if (u == v) continue;
    if (word_less(u, v)) std::swap(u, v);
    if (static_cast<int>(u.size()) > caps.max_rule_length) return rs;

    std::pair<Word, Word> rule{std::move(u), std::move(v)};
    // interreduce: rules whose lhs the new rule rewrites go back to the queue
    for (size_t i = 0; i < rs.rules.size();) {
      Word probe = rs.rules[i].first;
      std::vector<std::pair<Word, Word>> just_new{rule};
      if (apply_once(just_new, probe)) {
        pending.push_back(rs.rules[i]);
        rs.rules.erase(rs.rules.begin() + i);
      } else {
        ++i;
      }
    }
    rs.rules.push_back(rule);
    for (auto& r : rs.rules) r.second = rs.normalize(r.second);
    for (const auto& other : rs.rules) {
      enqueue_overlaps(rule, other);
      if (other.first != rule.first) enqueue_overlaps(other, rule);
    }
  }
  rs.complete = true;
  // deterministic rule order for golden output
  std::sort(rs.rules.begin(), rs.rules.end());
  return rs;
}

int QuotientResult::morphism_of(int src, const Word& normal_form) const {
  for (size_t i = 0; i < morphism_word.size(); ++i)
    if (morphism_src[i] == src && morphism_word[i] == normal_form) return static_cast<int>(i);
  return -1;
}

QuotientResult quotient_category(const ColoredCategory& x, CompletionCaps caps, int homset_cap) {
  QuotientResult q;
  q.classes = object_classes(x);
  auto pres = build_presentation(x);
  q.rws = complete(pres, caps);
  if (!q.rws.complete) {
    q.status = QuotientResult::Status::Undecided;
    return q;
  }

  const int nclasses = q.classes.class_count;
  // keys are (base object class, normal form)
  std::map<std::pair<int, Word>, int> seen;
  std::deque<std::pair<int, Word>> queue;
  std::map<std::pair<int, int>, long long> homset_size;
  std::vector<std::pair<int, Word>> all;

  auto word_tgt = [&](int src, const Word& w) {
    return w.empty() ? src : pres.generators[w.back()].tgt;
  };

  for (int cls = 0; cls < nclasses; ++cls) {
    queue.emplace_back(cls, Word{});
  }
  // categories past this size are not materialized (dense compose table)
  const long long total_cap = 4096;
  while (!queue.empty()) {
    auto state = queue.front();
    queue.pop_front();
    if (seen.count(state)) continue;
    seen.emplace(state, 0);
    all.push_back(state);
    auto& hs = homset_size[{state.first, word_tgt(state.first, state.second)}];
    if (++hs > homset_cap || static_cast<long long>(all.size()) > total_cap) {
      q.status = QuotientResult::Status::Undecided;
      return q;
    }
    int end = word_tgt(state.first, state.second);
    for (int g = 0; g < static_cast<int>(pres.generators.size()); ++g) {
      if (pres.generators[g].src != end) continue;
      Word w = state.second;
      w.push_back(g);
      w = q.rws.normalize(std::move(w));
      std::pair<int, Word> next{state.first, std::move(w)};
      if (!seen.count(next)) queue.push_back(std::move(next));
    }
  }

  // deterministic morphism order: (src, tgt, length-lex word)
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    int ta = word_tgt(a.first, a.second), tb = word_tgt(b.first, b.second);
    if (ta != tb) return ta < tb;
    return word_less(a.second, b.second);
  });

  q.status = QuotientResult::Status::Finite;
  FiniteCategory& cat = q.category;
  cat.object_count = nclasses;
  cat.identity_of.assign(nclasses, -1);
  for (size_t i = 0; i < all.size(); ++i) {
    q.morphism_src.push_back(all[i].first);
    q.morphism_word.push_back(all[i].second);
    cat.morphisms.push_back({all[i].first, word_tgt(all[i].first, all[i].second)});
    if (all[i].second.empty()) cat.identity_of[all[i].first] = static_cast<int>(i);
  }
  cat.init_compose_table();
  const int m = cat.morphism_count();
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (cat.tgt(f) != cat.src(g)) continue; // composing f then g = g∘f
      Word w = q.morphism_word[f];
      w.insert(w.end(), q.morphism_word[g].begin(), q.morphism_word[g].end());
      int idx = q.morphism_of(cat.src(f), q.rws.normalize(std::move(w)));
      cat.set_compose(g, f, idx);
    }

  q.generator_morphism.resize(pres.generators.size());
  for (size_t g = 0; g < pres.generators.size(); ++g)
    q.generator_morphism[g] =
        q.morphism_of(pres.generators[g].src, q.rws.normalize(Word{static_cast<int>(g)}));

  bool all_invertible = true;
  for (int f = 0; f < m && all_invertible; ++f) {
    bool has_inverse = false;
    for (int g = 0; g < m; ++g) {
      if (cat.tgt(f) != cat.src(g) || cat.src(f) != cat.tgt(g)) continue;
      if (cat.compose(g, f) == cat.identity_of[cat.src(f)] &&
          cat.compose(f, g) == cat.identity_of[cat.tgt(f)]) {
        has_inverse = true;
        break;
      }
    }
    all_invertible = has_inverse;
  }
  if (nclasses == 1)
    q.kind = all_invertible ? QuotientResult::Kind::Group : QuotientResult::Kind::Monoid;
  else
    q.kind = QuotientResult::Kind::General;
  return q;
}

CatFunctor pi_functor(const ColoredCategory& x, const QuotientResult& q) {
  if (q.status != QuotientResult::Status::Finite)
    throw UnsupportedError("pi_functor: quotient undecided");
  CatFunctor pi;
  pi.object_map = q.classes.class_of;
  pi.morphism_map.reserve(x.base.morphism_count());
  for (int f = 0; f < x.base.morphism_count(); ++f)
    pi.morphism_map.push_back(q.generator_morphism[x.color(f)]);
  return pi;
}

BracketCategory bracket_category(const ColoredCategory& x) {
  auto tr = tameness(x);
  if (!tr.tame) throw PreconditionError("bracket_category: colored category is not tame");
  const auto& c = x.base;
  auto table = structure_constants(x);
  auto fibers = x.fibers();

  BracketCategory b;
  b.object_of_identity_color.assign(x.color_count, -1);
  std::vector<int> id_colors;
  for (int obj = 0; obj < c.object_count; ++obj) {
    int col = x.color(c.identity_of[obj]);
    if (b.object_of_identity_color[col] < 0) {
      b.object_of_identity_color[col] = static_cast<int>(id_colors.size());
      id_colors.push_back(col);
    }
  }

  FiniteCategory& cat = b.category;
  cat.object_count = static_cast<int>(id_colors.size());
  b.morphism_of_color.resize(x.color_count);
  std::vector<int> s_of(x.color_count), t_of(x.color_count);
  for (int col = 0; col < x.color_count; ++col) {
    b.morphism_of_color[col] = col; // morphisms are exactly the colors
    int f = fibers[col][0];
    s_of[col] = b.object_of_identity_color[x.color(c.identity_of[c.src(f)])];
    t_of[col] = b.object_of_identity_color[x.color(c.identity_of[c.tgt(f)])];
    cat.morphisms.push_back({s_of[col], t_of[col]});
  }
  cat.identity_of.assign(cat.object_count, -1);
  for (int i = 0; i < static_cast<int>(id_colors.size()); ++i) cat.identity_of[i] = id_colors[i];
  cat.init_compose_table();
  for (int sigma = 0; sigma < x.color_count; ++sigma)
    for (int tau = 0; tau < x.color_count; ++tau) {
      if (t_of[sigma] != s_of[tau]) continue;
      for (int mu = 0; mu < x.color_count; ++mu)
        if (table.at(tau, sigma, mu) >= 1) {
          cat.set_compose(tau, sigma, mu); // τ∘σ = μ(τ,σ), unique by T(iii)
          break;
        }
    }
  return b;
}

BracketComparison compare_bracket_quotient(const ColoredCategory& x, CompletionCaps caps) {
  BracketComparison out;
  auto q = quotient_category(x, caps);
  if (q.status != QuotientResult::Status::Finite) {
    out.detail = "quotient undecided";
    return out;
  }
  auto b = bracket_category(x);

  CatFunctor f;
  f.object_map.resize(b.category.object_count, -1);
  for (int obj = 0; obj < x.base.object_count; ++obj) {
    int ic = x.color(x.base.identity_of[obj]);
    f.object_map[b.object_of_identity_color[ic]] = q.classes.class_of[obj];
  }
  f.morphism_map.resize(x.color_count);
  for (int col = 0; col < x.color_count; ++col)
    f.morphism_map[b.morphism_of_color[col]] = q.generator_morphism[col];

  auto rep = check_cat_functor(b.category, q.category, f);
  if (!rep.ok()) {
    out.detail = "comparison map not a functor: " + rep.summary();
    return out;
  }
  std::set<int> obj_image(f.object_map.begin(), f.object_map.end());
  std::set<int> mor_image(f.morphism_map.begin(), f.morphism_map.end());
  if (static_cast<int>(obj_image.size()) != b.category.object_count ||
      static_cast<int>(obj_image.size()) != q.category.object_count) {
    out.detail = "not bijective on objects";
    return out;
  }
  if (static_cast<int>(mor_image.size()) != b.category.morphism_count() ||
      static_cast<int>(mor_image.size()) != q.category.morphism_count()) {
    out.detail = "not bijective on morphisms";
    return out;
  }
  out.isomorphic = true;
  return out;
}

std::vector<long long> bounded_growth_series(const CategoryPresentation& p,
                                             const std::vector<int>& weight_of_generator,
                                             int max_weight) {
  // eliminate identity generators, then require weight-homogeneous relations
  const int n = static_cast<int>(p.generators.size());
  auto strip = [&](const Word& w) {
    Word out;
    for (int g : w)
      if (!p.is_identity_generator[g]) out.push_back(g);
    return out;
  };
  auto weight = [&](const Word& w) {
    int s = 0;
    for (int g : w) s += weight_of_generator[g];
    return s;
  };
  std::vector<std::pair<Word, Word>> rels;
  for (const auto& [a, b] : p.relations) {
    Word sa = strip(a), sb = strip(b);
    if (sa == sb) continue;
    if (weight(sa) != weight(sb))
      throw PreconditionError("bounded_growth_series: relation not weight-homogeneous");
    rels.emplace_back(std::move(sa), std::move(sb));
  }
  for (int g = 0; g < n; ++g)
    if (!p.is_identity_generator[g] && weight_of_generator[g] <= 0)
      throw PreconditionError("bounded_growth_series: non-identity generator of weight <= 0");

  // enumerate composable words of bounded weight, per base object
  std::map<std::pair<int, Word>, int> index;
  std::vector<std::pair<int, Word>> words;
  std::vector<int> wt;
  std::deque<std::pair<int, Word>> queue;
  for (int obj = 0; obj < p.object_count; ++obj) queue.emplace_back(obj, Word{});
  while (!queue.empty()) {
    auto state = queue.front();
    queue.pop_front();
    if (index.count(state)) continue;
    index.emplace(state, static_cast<int>(words.size()));
    words.push_back(state);
    wt.push_back(weight(state.second));
    int end = state.second.empty() ? state.first : p.generators[state.second.back()].tgt;
    for (int g = 0; g < n; ++g) {
      if (p.is_identity_generator[g] || p.generators[g].src != end) continue;
      if (wt.back() + weight_of_generator[g] > max_weight) continue;
      Word w = state.second;
      w.push_back(g);
      queue.emplace_back(state.first, std::move(w));
    }
  }

  std::vector<int> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  // rewriting with weight-homogeneous relations stays inside the word set,
  // so a single pass over every occurrence realizes the full congruence
  for (size_t i = 0; i < words.size(); ++i) {
    const auto& [base, w] = words[i];
    for (const auto& [a, b] : rels) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& lhs = dir ? b : a;
        const Word& rhs = dir ? a : b;
        if (lhs.size() > w.size()) continue;
        for (size_t pos = 0; pos + lhs.size() <= w.size(); ++pos) {
          if (!std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) continue;
          Word out(w.begin(), w.begin() + pos);
          out.insert(out.end(), rhs.begin(), rhs.end());
          out.insert(out.end(), w.begin() + pos + lhs.size(), w.end());
          auto it = index.find({base, out});
          if (it != index.end()) unite(static_cast<int>(i), it->second);
        }
      }
    }
  }

  std::vector<long long> series(max_weight + 1, 0);
  for (size_t i = 0; i < words.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) series[wt[i]]++;
  return series;
}

} // namespace schemoid
