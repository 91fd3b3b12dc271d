#include "schemoid/acceptance.hpp"
#include "schemoid/json_io.hpp"
#include "schemoid/toposlab.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace schemoid;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kPredicateFalse = 1, kInputError = 2, kUndecided = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a_digest(const std::string& text) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// parses a fixture; a Report envelope from an earlier pipeline stage is
// unwrapped to its result
json parse_fixture(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("result") && j.contains("command")) return j.at("result");
  return j;
}

CompletionCaps caps_from_env() {
  CompletionCaps caps;
  if (const char* env = std::getenv("SCHEMOID_LAB_CAPS")) {
    int len = 0, pairs = 0;
    if (std::sscanf(env, "%d,%d", &len, &pairs) != 2 || len <= 0 || pairs <= 0)
      throw InputError("SCHEMOID_LAB_CAPS: expected 'max_rule_length,max_pairs'");
    caps.max_rule_length = len;
    caps.max_pairs = pairs;
  }
  return caps;
}

int emit(const std::string& command, const std::string& digest, json result, std::string summary,
         int code) {
  json report;
  report["command"] = command;
  report["input_digest"] = digest;
  report["result"] = std::move(result);
  report["summary"] = std::move(summary);
  std::cout << canonical_dump(report);
  return code;
}

FiniteGroup parse_group(const std::string& name) {
  if (name == "s3") return FiniteGroup::symmetric(3);
  if (name == "s4") return FiniteGroup::symmetric(4);
  // zN or products zNxzM...
  std::vector<int> orders;
  size_t pos = 0;
  while (pos < name.size()) {
    if (name[pos] != 'z') throw InputError("unknown group: " + name);
    size_t end = ++pos;
    while (end < name.size() && std::isdigit(name[end])) ++end;
    if (end == pos) throw InputError("unknown group: " + name);
    orders.push_back(std::stoi(name.substr(pos, end - pos)));
    pos = end;
    if (pos < name.size()) {
      if (name[pos] != 'x') throw InputError("unknown group: " + name);
      ++pos;
    }
  }
  if (orders.empty()) throw InputError("unknown group: " + name);
  auto g = FiniteGroup::cyclic(orders[0]);
  for (size_t i = 1; i < orders.size(); ++i)
    g = FiniteGroup::product(g, FiniteGroup::cyclic(orders[i]));
  return g;
}

SimplicialComplex parse_complex(int vertices, const std::string& faces) {
  std::vector<std::vector<int>> gen;
  for (int v = 0; v < vertices; ++v) gen.push_back({v});
  std::stringstream ss(faces);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::vector<int> face;
    for (char c : token) {
      if (!std::isdigit(c)) throw InputError("faces: expected digit strings like '01,12'");
      int v = c - '0';
      if (v >= vertices) throw InputError("faces: vertex out of range");
      face.push_back(v);
    }
    gen.push_back(face);
  }
  return SimplicialComplex::closure(vertices, gen);
}

json quotient_result_json(const ColoredCategory& x, const QuotientResult& q) {
  json result;
  result["status"] = q.status == QuotientResult::Status::Finite ? "finite" : "undecided";
  if (q.status != QuotientResult::Status::Finite) return result;
  switch (q.kind) {
    case QuotientResult::Kind::Group: result["kind"] = "group"; break;
    case QuotientResult::Kind::Monoid: result["kind"] = "monoid"; break;
    case QuotientResult::Kind::General: result["kind"] = "general"; break;
  }
  result["objects"] = q.category.object_count;
  json homsets = json::array();
  for (int s = 0; s < q.category.object_count; ++s) {
    json row = json::array();
    for (int t = 0; t < q.category.object_count; ++t) {
      int count = 0;
      for (int m = 0; m < q.category.morphism_count(); ++m)
        if (q.category.src(m) == s && q.category.tgt(m) == t) ++count;
      row.push_back(count);
    }
    homsets.push_back(std::move(row));
  }
  result["homsets"] = std::move(homsets);
  if (q.category.object_count == 1) {
    int n = q.category.morphism_count();
    json table = json::array();
    for (int a = 0; a < n; ++a) {
      json row = json::array();
      for (int b = 0; b < n; ++b) row.push_back(q.category.compose(a, b));
      table.push_back(std::move(row));
    }
    result["multiplication_table"] = std::move(table);
  }
  (void)x;
  return result;
}

json cohomology_groups_json(const std::vector<CohomologyGroup>& groups) {
  json out = json::array();
  for (const auto& g : groups) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.get_str());
    out.push_back({{"rank", g.free_rank}, {"torsion", torsion}});
  }
  return out;
}

struct Invocation {
  std::string command;
  std::string digest = "-";
  std::function<int()> run;
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale laboratory for colored categories and association schemes"};
  app.require_subcommand(1);

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

  std::string input = "-", input2, coeff = "Z", group_name, faces_spec, golden_path;
  int max_degree = 3, vertices = 0, arg_n = 0, arg_q = 0, arg_v = 0, arg_d = 0;
  bool golden_update = false;
  Invocation inv;
  inv.command = echo;

  auto with_input = [&](CLI::App* cmd) { cmd->add_option("input", input, "fixture path or - for stdin"); };

  auto* analyze = app.add_subcommand("analyze", "structure report for a colored category");
  with_input(analyze);

  auto* quotient = app.add_subcommand("quotient", "quotient category of a colored category");
  with_input(quotient);

  auto* scheme = app.add_subcommand("scheme", "association scheme operations");
  scheme->require_subcommand(1);
  auto* s_validate = scheme->add_subcommand("validate", "check the scheme axioms");
  with_input(s_validate);
  auto* s_residue = scheme->add_subcommand("thin-residue", "smallest closed subset containing all s s*");
  with_input(s_residue);
  auto* s_factor = scheme->add_subcommand("factor", "factor scheme by the thin residue");
  with_input(s_factor);
  auto* s_quo = scheme->add_subcommand("quo", "quotient group of the pair category");
  with_input(s_quo);
  auto* s_gen = scheme->add_subcommand("gen", "generate a built-in scheme");
  s_gen->require_subcommand(1);
  auto* g_hamming = s_gen->add_subcommand("hamming", "words of length n over q letters");
  g_hamming->add_option("n", arg_n)->required();
  g_hamming->add_option("q", arg_q)->required();
  auto* g_johnson = s_gen->add_subcommand("johnson", "d-subsets of a v-set");
  g_johnson->add_option("v", arg_v)->required();
  g_johnson->add_option("d", arg_d)->required();
  auto* g_group = s_gen->add_subcommand("group", "group scheme (z2, z2xz4, s3, ...)");
  g_group->add_option("name", group_name)->required();

  auto* cohomology = app.add_subcommand("cohomology", "cohomology through the finite quotient");
  with_input(cohomology);
  cohomology->add_option("--coeff", coeff, "Z or Z/p");
  cohomology->add_option("--max-degree", max_degree, "top degree to report");

  auto* gen = app.add_subcommand("gen", "generate a colored-category fixture");
  gen->require_subcommand(1);
  auto* gen_discrete = gen->add_subcommand("discrete", "every morphism its own color");
  with_input(gen_discrete);
  auto* gen_group = gen->add_subcommand("group", "group schemoid");
  gen_group->add_option("name", group_name)->required();
  auto* gen_simplicial = gen->add_subcommand("simplicial", "face poset of a complex");
  gen_simplicial->add_option("vertices", vertices)->required();
  gen_simplicial->add_option("faces", faces_spec, "comma-separated vertex strings, e.g. 01,12");
  auto* gen_pullback = gen->add_subcommand("pullback-example", "two-object counterexample fixture");
  auto* gen_prop_app = gen->add_subcommand("prop-app-example", "three-object odd-distance fixture");

  auto* sheafify_cmd = app.add_subcommand("sheafify", "coreflection into color-preserving functors");
  sheafify_cmd->add_option("colored", input, "colored.json")->required();
  sheafify_cmd->add_option("functor", input2, "functor.json")->required();

  auto* golden = app.add_subcommand("golden", "run the regression table");
  golden->add_option("file", golden_path, "expectations file")->required();
  golden->add_flag("--update", golden_update, "rewrite the expectations file");

  try {
    app.parse(argc, argv);
    auto caps = caps_from_env();

    auto load = [&](const std::string& path) {
      auto text = read_text(path);
      inv.digest = fnv1a_digest(text);
      return parse_fixture(text);
    };

    if (analyze->parsed()) {
      auto x = colored_from_json(load(input));
      auto table = structure_constants(x);
      auto tame = tameness(x);
      json result;
      result["objects"] = x.base.object_count;
      result["morphisms"] = x.base.morphism_count();
      result["colors"] = x.color_count;
      result["object_classes"] = object_classes(x).class_count;
      result["schemoid"] = table.schemoid;
      result["naturally_colored"] = is_naturally_colored(x).natural;
      result["tame"] = {{"applicable", tame.applicable}, {"unital", tame.unital},
                        {"tii", tame.tii}, {"tiii", tame.tiii}, {"tame", tame.tame}};
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result,
                    result["schemoid"].get<bool>() ? "schemoid" : "not a schemoid", kOk);
      };
    } else if (quotient->parsed()) {
      auto x = colored_from_json(load(input));
      auto q = quotient_category(x, caps);
      auto result = quotient_result_json(x, q);
      bool finite = q.status == QuotientResult::Status::Finite;
      inv.run = [&, result, finite] {
        return emit(inv.command, inv.digest, result, finite ? "finite quotient" : "undecided",
                    finite ? kOk : kUndecided);
      };
    } else if (s_validate->parsed()) {
      auto s = scheme_from_json(load(input), false);
      auto report = validate_scheme(s);
      json result;
      result["valid"] = report.ok();
      json violations = json::array();
      for (const auto& v : report.violations)
        violations.push_back({{"rule", v.rule}, {"data", v.data}, {"detail", v.detail}});
      result["violations"] = std::move(violations);
      inv.run = [&, result] {
        bool ok = result["valid"].get<bool>();
        return emit(inv.command, inv.digest, result, ok ? "valid scheme" : "axioms violated",
                    ok ? kOk : kPredicateFalse);
      };
    } else if (s_residue->parsed()) {
      auto s = scheme_from_json(load(input));
      auto residue = thin_residue(s);
      json members = json::array();
      for (int i = 0; i < s.relation_count; ++i)
        if (residue[i]) members.push_back(i);
      json result{{"residue", members}, {"size", members.size()}};
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "thin residue computed", kOk);
      };
    } else if (s_factor->parsed()) {
      auto s = scheme_from_json(load(input));
      auto factor = factor_scheme(s, thin_residue(s));
      json result = scheme_to_json(factor.scheme);
      result["blocks"] = factor.block_of;
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "factor by the thin residue", kOk);
      };
    } else if (s_quo->parsed()) {
      auto s = scheme_from_json(load(input));
      auto q = quotient_category(scheme_schemoid(s), caps);
      auto result = quotient_result_json(scheme_schemoid(s), q);
      bool finite = q.status == QuotientResult::Status::Finite;
      std::string summary = finite ? "group of order " + std::to_string(q.category.morphism_count())
                                   : "undecided";
      inv.run = [&, result, finite, summary] {
        return emit(inv.command, inv.digest, result, summary, finite ? kOk : kUndecided);
      };
    } else if (g_hamming->parsed() || g_johnson->parsed() || g_group->parsed()) {
      AssociationScheme s;
      if (g_hamming->parsed()) s = hamming_scheme(arg_n, arg_q);
      else if (g_johnson->parsed()) s = johnson_scheme(arg_v, arg_d);
      else s = group_scheme(parse_group(group_name));
      json result = scheme_to_json(s);
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "scheme generated", kOk);
      };
    } else if (cohomology->parsed()) {
      Coefficient c = Coefficient::integers();
      if (coeff != "Z") {
        long long p = 0;
        if (std::sscanf(coeff.c_str(), "Z/%lld", &p) != 1 || p < 2)
          throw InputError("--coeff: expected Z or Z/p");
        c = Coefficient::mod(p);
      }
      auto x = colored_from_json(load(input));
      auto groups = schemoid_cohomology(x, max_degree, c, caps);
      auto result = cohomology_groups_json(groups);
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "cohomology computed", kOk);
      };
    } else if (gen_discrete->parsed()) {
      auto c = category_from_json(load(input));
      auto report = validate_category(c);
      if (!report.ok()) throw InputError("category: " + report.summary());
      json result = colored_to_json(discrete_schemoid(c));
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "discrete schemoid", kOk);
      };
    } else if (gen_group->parsed()) {
      json result = colored_to_json(group_schemoid(parse_group(group_name)));
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "group schemoid", kOk);
      };
    } else if (gen_simplicial->parsed()) {
      json result = colored_to_json(simplicial_schemoid(parse_complex(vertices, faces_spec)));
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "simplicial schemoid", kOk);
      };
    } else if (gen_pullback->parsed()) {
      auto fx = pullback_counterexample();
      json result;
      result["colored"] = colored_to_json(fx.x);
      result["functor"] = functor_to_json(fx.F);
      result["eta"] = fx.eta.components;
      result["lambda"] = fx.lambda.components;
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "pullback counterexample fixture", kOk);
      };
    } else if (gen_prop_app->parsed()) {
      auto fx = prop_app_example();
      json result;
      result["colored"] = colored_to_json(fx.x);
      result["hamming"] = colored_to_json(fx.hamming);
      result["functor_object_map"] = fx.u.object_map;
      result["functor_morphism_map"] = fx.u.morphism_map;
      result["tau"] = fx.tau;
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "odd-distance example fixture", kOk);
      };
    } else if (sheafify_cmd->parsed()) {
      auto text1 = read_text(input);
      auto text2 = read_text(input2);
      inv.digest = fnv1a_digest(text1 + "\n" + text2);
      auto x = colored_from_json(parse_fixture(text1));
      auto F = functor_from_json(parse_fixture(text2));
      auto report = check_functor(x.base, F);
      if (!report.ok()) throw InputError("functor: " + report.summary());
      auto ctx = quotient_context(x, caps);
      auto sheaf = sheafify(x, ctx, F);
      json result = functor_to_json(sheaf);
      result["color_preserving"] = is_color_preserving(x, sheaf).preserving;
      inv.run = [&, result] {
        return emit(inv.command, inv.digest, result, "sheafified", kOk);
      };
    } else if (golden->parsed()) {
      json rows = json::array();
      bool all_pass = true;
      for (const auto& row : acceptance_table(caps)) {
        rows.push_back({{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
        if (!row.pass) all_pass = false;
      }
      if (golden_update) {
        std::ofstream out(golden_path);
        if (!out) throw InputError("cannot write: " + golden_path);
        out << canonical_dump(rows);
        inv.run = [&, all_pass] {
          return emit(inv.command, inv.digest, json{{"updated", true}},
                      "expectations rewritten", all_pass ? kOk : kPredicateFalse);
        };
      } else {
        auto text = read_text(golden_path);
        inv.digest = fnv1a_digest(text);
        auto expected = parse_fixture(text);
        json mismatches = json::array();
        for (size_t i = 0; i < rows.size(); ++i) {
          const json* exp = nullptr;
          for (const auto& e : expected)
            if (e.is_object() && e.value("name", "") == rows[i]["name"].get<std::string>())
              exp = &e;
          if (!exp || *exp != rows[i]) mismatches.push_back(rows[i]["name"]);
        }
        bool match = mismatches.empty() && expected.size() == rows.size();
        json result{{"rows", rows}, {"mismatches", mismatches}, {"match", match}};
        inv.run = [&, result, match, all_pass] {
          return emit(inv.command, inv.digest, result,
                      match && all_pass ? "all rows match" : "regressions detected",
                      match && all_pass ? kOk : kPredicateFalse);
        };
      }
    }

    return inv.run();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  }
}
