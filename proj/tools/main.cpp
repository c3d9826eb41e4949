// ogt — command-line interface for the overgroup library.
//
// Every successful invocation prints one deterministic document to stdout:
// JSON by default (2-space indent, sorted keys), CSV or DOT where the
// corresponding flag applies.  Errors print a JSON object with an "error"
// key to stderr.  Exit codes: 0 success, 1 failed check, 2 usage error,
// 3 resource cap exceeded.

#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "overgroup/constructions.hpp"
#include "overgroup/markedspace.hpp"
#include "overgroup/oracle.hpp"
#include "overgroup/sections.hpp"
#include "overgroup/wordproblem.hpp"
#include "overgroup/words.hpp"

#include "verify.hpp"

namespace {

using nlohmann::json;
using namespace ovg;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }
void emit(const std::string& text) { std::cout << text; }

int emit_error(const std::string& message, int code, bool partial = false) {
  json j{{"error", message}};
  if (partial) j["partial"] = true;
  std::cerr << j.dump(2) << "\n";
  return code;
}

KElement k_from_char(char c) {
  const ReducedWord w = ReducedWord::parse(std::string(1, c));
  if (w.length() != 1 || w.letters().front().is_a()) {
    throw std::invalid_argument("expected a single generator letter from b c d x B C D");
  }
  return w.letters().front().kelem();
}

std::string omega_name(OmegaClass c) {
  switch (c) {
    case OmegaClass::omega0: return "omega0";
    case OmegaClass::omega1: return "omega1";
    case OmegaClass::omega2: return "omega2";
  }
  return "";
}

struct Args {
  // shared
  std::string word, oracle, spec, spec1, spec2;
  unsigned seed = 12345;
  std::size_t len_cap = 8;
  std::size_t max_elements = EnumerationCaps{}.max_elements;
  std::size_t max_words = EnumerationCaps{}.max_words;
  std::size_t max_cache = Decider::default_max_cache;
  bool csv = false, dot = false, table = false;
  // command-specific
  int depth = 0;
  int radius = 0;
  int rmax = 5;
  int max_r = 5;
  std::size_t max_len = 12;
  std::size_t order_cap = 4096;
  long long n = 0;
  std::string letter = "d";
  std::string path;
  std::string pair = "01";
  bool wij_verify = false;
  int shift_count = 1;
  std::string suite = "all";

  EnumerationCaps caps() const { return EnumerationCaps{max_elements, max_words}; }
  Decider decider(const std::string& text) const {
    return Decider(GroupSpec::parse(text), max_cache);
  }
};

int cmd_oracle_classify(const Args& a) {
  const Oracle o = Oracle::parse(a.oracle);
  const OracleClass c = classify(o);
  std::string symbols;
  for (Symbol s : c.infinite_symbols) symbols += to_char(s);
  emit(json{{"oracle", o.str()},
            {"class", omega_name(c.cls)},
            {"infinite_symbols", symbols},
            {"tail_start", c.tail_start}});
  return 0;
}

int cmd_oracle_shift(const Args& a) {
  if (a.shift_count < 0) throw std::invalid_argument("--count must be non-negative");
  const Oracle o = Oracle::parse(a.oracle);
  Oracle s = o;
  for (int i = 0; i < a.shift_count; ++i) s = s.shift();
  emit(json{{"oracle", o.str()}, {"count", a.shift_count}, {"shifted", s.str()}});
  return 0;
}

int cmd_word_reduce(const Args& a) {
  const ReducedWord w = ReducedWord::parse(a.word);
  emit(json{{"input", a.word},
            {"word", w.str()},
            {"length", w.length()},
            {"a_count", w.a_count()}});
  return 0;
}

int cmd_solve(const Args& a) {
  Decider d = a.decider(a.spec);
  const ReducedWord w = ReducedWord::parse(a.word);
  const Verdict v = d.verdict(w);
  emit(json{{"spec", d.spec().str()},
            {"family", d.spec().family.name()},
            {"oracle", d.spec().oracle.str()},
            {"input", a.word},
            {"normal_form", w.str()},
            {"identity", v.identity},
            {"depth_used", v.depth_used}});
  return 0;
}

int cmd_word_sections(const Args& a) {
  const Oracle o = Oracle::parse(a.oracle);
  const ReducedWord w = ReducedWord::parse(a.word);
  const DecomposeResult res = decompose(w, o, a.depth);
  if (const SectionTree* tree = std::get_if<SectionTree>(&res)) {
    if (a.dot) {
      emit(to_dot(*tree));
    } else {
      emit(to_json(*tree, w, o));
    }
    return 0;
  }
  const NotInStabilizer& ns = std::get<NotInStabilizer>(res);
  if (a.dot) {
    return emit_error("word does not stabilize level " + std::to_string(ns.level) +
                          " (vertex " + ns.vertex + "); no section tree to draw",
                      1);
  }
  emit(to_json(ns, w, o));
  return 0;
}

int cmd_word_nucleus(const Args& a) {
  const Oracle o = Oracle::parse(a.oracle);
  const ReducedWord w = ReducedWord::parse(a.word);
  const int depth = a.depth > 0 ? a.depth : alpha_depth(w.length());
  const NucleusResult res = nucleus_at(w, o, depth);
  if (const Nucleus* nuc = std::get_if<Nucleus>(&res)) {
    if (a.dot) {
      emit(to_dot(*nuc));
    } else {
      emit(to_json(*nuc, w, o));
    }
    return 0;
  }
  const NotInStabilizer& ns = std::get<NotInStabilizer>(res);
  if (a.dot) {
    return emit_error("word does not stabilize level " + std::to_string(ns.level) +
                          " (vertex " + ns.vertex + "); no nucleus to draw",
                      1);
  }
  emit(to_json(ns, w, o));
  return 0;
}

int cmd_word_order(const Args& a) {
  Decider d = a.decider(a.spec);
  const ReducedWord w = ReducedWord::parse(a.word);
  const std::optional<std::size_t> ord = d.element_order(w, a.order_cap);
  json j{{"spec", d.spec().str()},
         {"word", w.str()},
         {"cap", a.order_cap},
         {"found", ord.has_value()}};
  j["order"] = ord ? json(*ord) : json(nullptr);
  emit(j);
  return 0;
}

int cmd_ball(const Args& a) {
  Decider d = a.decider(a.spec);
  const Ball b = ball(d, a.radius, a.caps());
  if (a.dot) {
    emit(to_dot(b, d));
    return 0;
  }
  if (a.csv) {
    std::string out = "index,word,length\n";
    for (std::size_t i = 0; i < b.representatives.size(); ++i) {
      out += std::to_string(i) + "," + b.representatives[i].str() + "," +
             std::to_string(b.representatives[i].length()) + "\n";
    }
    emit(out);
    return 0;
  }
  json reps = json::array();
  for (const ReducedWord& w : b.representatives) reps.push_back(w.str());
  emit(json{{"spec", d.spec().str()},
            {"radius", b.radius},
            {"size", b.size()},
            {"representatives", reps}});
  return 0;
}

int cmd_growth(const Args& a) {
  Decider d = a.decider(a.spec);
  const std::vector<std::size_t> values = growth_values(d, a.rmax, a.caps());
  if (a.csv) {
    emit(to_csv(values));
    return 0;
  }
  emit(json{{"spec", d.spec().str()}, {"r_max", a.rmax}, {"values", values}});
  return 0;
}

int cmd_metric(const Args& a) {
  Decider s1 = a.decider(a.spec1);
  Decider s2 = a.decider(a.spec2);
  const MetricResult m = metric(s1, s2, a.max_r, a.caps());
  emit(to_json(m, s1.spec(), s2.spec()));
  return 0;
}

int cmd_distinguish(const Args& a) {
  Decider s1 = a.decider(a.spec1);
  Decider s2 = a.decider(a.spec2);
  const std::optional<ReducedWord> w = find_distinguishing_word(s1, s2, a.max_len, a.caps());
  json j{{"spec1", s1.spec().str()},
         {"spec2", s2.spec().str()},
         {"max_len", a.max_len},
         {"found", w.has_value()}};
  if (w) {
    j["witness"] = w->str();
    j["identity_in_spec1"] = s1.is_identity(*w);
    j["identity_in_spec2"] = s2.is_identity(*w);
  }
  emit(j);
  return 0;
}

int cmd_construct_vn(const Args& a) {
  if (a.letter.size() != 1) throw std::invalid_argument("--letter takes one generator character");
  const KElement y = k_from_char(a.letter[0]);
  const ReducedWord w = v_word(y, a.n);
  emit(json{{"letter", a.letter}, {"n", a.n}, {"word", w.str()}, {"length", w.length()}});
  return 0;
}

int cmd_construct_v(const Args& a) {
  if (a.letter.size() != 1) throw std::invalid_argument("--letter takes one generator character");
  const KElement y = k_from_char(a.letter[0]);
  const ReducedWord w = V_word(y, a.path);
  emit(json{{"letter", a.letter},
            {"path", a.path},
            {"index", v_index(a.path)},
            {"word", w.str()},
            {"length", w.length()}});
  return 0;
}

int cmd_construct_wij(const Args& a) {
  if (a.pair.size() != 2) throw std::invalid_argument("--pair takes two symbol digits, e.g. 01");
  const Symbol i = symbol_from_char(a.pair[0]);
  const Symbol j = symbol_from_char(a.pair[1]);
  const Oracle o = Oracle::parse(a.oracle);
  const WijResult w = w_ij(o, i, j);
  json out{{"oracle", o.str()},
           {"pair", a.pair},
           {"word", w.word.str()},
           {"length", w.word.length()},
           {"degenerate", w.degenerate}};
  int rc = 0;
  if (a.wij_verify) {
    Decider accepting(GroupSpec{DeciderFamily::beta(i, j), o}, a.max_cache);
    Decider alpha_d(GroupSpec{DeciderFamily::alpha(), o}, a.max_cache);
    const bool beta_accepts = accepting.is_identity(w.word);
    const bool alpha_rejects = !alpha_d.is_identity(w.word);
    out["checks"] = json{{"beta_accepts", beta_accepts}, {"alpha_rejects", alpha_rejects}};
    if (!beta_accepts || !alpha_rejects) rc = 1;
  }
  emit(out);
  return rc;
}

int cmd_construct_fmap(const Args& a) {
  const ReducedWord w = ReducedWord::parse(a.word);
  const ReducedWord image = f_map(w);
  emit(json{{"input", a.word},
            {"word", w.str()},
            {"image", image.str()},
            {"image_length", image.length()}});
  return 0;
}

int cmd_verify(const Args& a) {
  ogt::VerifyConfig config;
  config.len_cap = a.len_cap;
  config.seed = a.seed;
  config.rmax = a.rmax;
  config.caps = a.caps();
  const std::vector<ogt::CheckResult> results = ogt::run_suite(a.suite, config);
  if (a.table) {
    emit(ogt::report_table(a.suite, results));
  } else {
    emit(ogt::report_json(a.suite, results));
  }
  for (const ogt::CheckResult& r : results) {
    if (!r.pass) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ogt — word problems, balls, metrics and witness constructions for a "
      "family of marked groups on eight generators"};
  app.require_subcommand(1);
  app.fallthrough();

  Args a;
  int rc = 0;
  const auto run = [&](int (*fn)(const Args&)) { return [&a, &rc, fn]() { rc = fn(a); }; };

  app.add_option("--seed", a.seed, "seed for randomized verify checks")->capture_default_str();
  app.add_option("--len-cap", a.len_cap, "exhaustive word length for verify sweeps")
      ->capture_default_str();
  app.add_option("--max-elements", a.max_elements, "cap on ball representatives")
      ->capture_default_str();
  app.add_option("--max-words", a.max_words, "cap on words visited per enumeration")
      ->capture_default_str();
  app.add_option("--max-cache", a.max_cache, "cap on decider cache entries")
      ->capture_default_str();

  // oracle
  CLI::App* oracle = app.add_subcommand("oracle", "inspect defining sequences");
  oracle->require_subcommand(1);
  CLI::App* classify_cmd = oracle->add_subcommand("classify", "class and recurring symbols");
  classify_cmd->add_option("--oracle", a.oracle, "sequence, e.g. 121(0) or (012)")->required();
  classify_cmd->callback(run(cmd_oracle_classify));
  CLI::App* shift_cmd = oracle->add_subcommand("shift", "drop leading symbols");
  shift_cmd->add_option("--oracle", a.oracle, "sequence")->required();
  shift_cmd->add_option("--count", a.shift_count, "number of shifts")->capture_default_str();
  shift_cmd->callback(run(cmd_oracle_shift));

  // word
  CLI::App* word = app.add_subcommand("word", "reduce, decide and decompose words");
  word->require_subcommand(1);
  CLI::App* reduce_cmd = word->add_subcommand("reduce", "free-product normal form");
  reduce_cmd->add_option("--word", a.word, "letters a b c d x B C D")->required();
  reduce_cmd->callback(run(cmd_word_reduce));
  CLI::App* wsolve_cmd = word->add_subcommand("solve", "decide whether a word is the identity");
  wsolve_cmd->add_option("--spec", a.spec, "<family>@<oracle>")->required();
  wsolve_cmd->add_option("--word", a.word, "word to decide")->required();
  wsolve_cmd->callback(run(cmd_solve));
  CLI::App* sections_cmd = word->add_subcommand("sections", "section tree at a given depth");
  sections_cmd->add_option("--word", a.word)->required();
  sections_cmd->add_option("--oracle", a.oracle)->required();
  sections_cmd->add_option("--depth", a.depth)->required();
  sections_cmd->add_flag("--dot", a.dot, "emit the tree in DOT format");
  sections_cmd->callback(run(cmd_word_sections));
  CLI::App* nucleus_cmd = word->add_subcommand("nucleus", "single-letter sections at depth");
  nucleus_cmd->add_option("--word", a.word)->required();
  nucleus_cmd->add_option("--oracle", a.oracle)->required();
  nucleus_cmd->add_option("--depth", a.depth, "0 = smallest depth guaranteed to contract");
  nucleus_cmd->add_flag("--dot", a.dot, "emit the entries in DOT format");
  nucleus_cmd->callback(run(cmd_word_nucleus));
  CLI::App* order_cmd = word->add_subcommand("order", "order of the element, up to a cap");
  order_cmd->add_option("--spec", a.spec, "<family>@<oracle>")->required();
  order_cmd->add_option("--word", a.word)->required();
  order_cmd->add_option("--cap", a.order_cap, "largest exponent tried")->capture_default_str();
  order_cmd->callback(run(cmd_word_order));

  // top-level solve (same handler as `word solve`)
  CLI::App* solve_cmd = app.add_subcommand("solve", "decide whether a word is the identity");
  solve_cmd->add_option("--spec", a.spec, "<family>@<oracle>")->required();
  solve_cmd->add_option("--word", a.word, "word to decide")->required();
  solve_cmd->callback(run(cmd_solve));

  CLI::App* ball_cmd = app.add_subcommand("ball", "canonical representatives of a metric ball");
  ball_cmd->add_option("--spec", a.spec)->required();
  ball_cmd->add_option("--radius", a.radius)->required();
  ball_cmd->add_flag("--csv", a.csv, "emit index,word,length rows");
  ball_cmd->add_flag("--dot", a.dot, "emit the labeled ball graph");
  ball_cmd->callback(run(cmd_ball));

  CLI::App* growth_cmd = app.add_subcommand("growth", "ball sizes for radii 0..r");
  growth_cmd->add_option("--spec", a.spec)->required();
  growth_cmd->add_option("--rmax", a.rmax, "largest radius")->capture_default_str();
  growth_cmd->add_flag("--csv", a.csv, "emit r,size rows");
  growth_cmd->callback(run(cmd_growth));

  CLI::App* metric_cmd = app.add_subcommand("metric", "distance between two marked groups");
  metric_cmd->add_option("--spec1", a.spec1)->required();
  metric_cmd->add_option("--spec2", a.spec2)->required();
  metric_cmd->add_option("--max-r", a.max_r, "largest agreement radius examined")
      ->capture_default_str();
  metric_cmd->callback(run(cmd_metric));

  CLI::App* distinguish_cmd =
      app.add_subcommand("distinguish", "shortest word told apart by two specs");
  distinguish_cmd->add_option("--spec1", a.spec1)->required();
  distinguish_cmd->add_option("--spec2", a.spec2)->required();
  distinguish_cmd->add_option("--max-len", a.max_len, "longest word tried")
      ->capture_default_str();
  distinguish_cmd->callback(run(cmd_distinguish));

  // construct
  CLI::App* construct = app.add_subcommand("construct", "witness words");
  construct->require_subcommand(1);
  CLI::App* vn_cmd = construct->add_subcommand("vn", "spine generator v_n = (xa)^n y (ax)^n");
  vn_cmd->add_option("--letter", a.letter, "the seed letter y")->capture_default_str();
  vn_cmd->add_option("--n", a.n, "index, may be negative")->required();
  vn_cmd->callback(run(cmd_construct_vn));
  CLI::App* v_cmd = construct->add_subcommand("V", "vertex word V(path) = v_{index(path)}");
  v_cmd->add_option("--letter", a.letter, "the seed letter y")->capture_default_str();
  v_cmd->add_option("--path", a.path, "bit string, root = empty")->capture_default_str();
  v_cmd->callback(run(cmd_construct_v));
  CLI::App* wij_cmd = construct->add_subcommand(
      "wij", "witness separating beta-ij from alpha at an eventually-constant oracle");
  wij_cmd->add_option("--oracle", a.oracle)->required();
  wij_cmd->add_option("--pair", a.pair, "symbol pair ij, e.g. 01")->capture_default_str();
  wij_cmd->add_flag("--verify", a.wij_verify, "also run the decider checks; exit 1 on failure");
  wij_cmd->callback(run(cmd_construct_wij));
  CLI::App* fmap_cmd = construct->add_subcommand("fmap", "letterwise retraction onto a b c d");
  fmap_cmd->add_option("--word", a.word)->required();
  fmap_cmd->callback(run(cmd_construct_fmap));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run invariant check suites");
  verify_cmd->add_option("suite", a.suite, "suite name or 'all'")->capture_default_str();
  verify_cmd->add_flag("--table", a.table, "aligned text instead of JSON");
  verify_cmd->callback(run(cmd_verify));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ResourceLimitExceeded& e) {
    return emit_error(e.what(), 3, /*partial=*/true);
  } catch (const std::invalid_argument& e) {
    return emit_error(e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error(e.what(), 2);
  }
  return rc;
}
