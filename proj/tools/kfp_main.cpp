// kfp: finite PO-dilators, Kruskal fixed-point term orders, labeled-tree
// embedding, the bridging quasi-embeddings, and bounded falsification
// searches. Exit codes: 0 success, 1 semantic failure, 2 input error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kfp/bridges.hpp"
#include "kfp/corpus.hpp"
#include "kfp/falsify.hpp"
#include "kfp/fixpoint.hpp"
#include "kfp/ordterm.hpp"
#include "kfp/suite.hpp"
#include "kfp/trees.hpp"

namespace {

using namespace kfp;

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kInputError = 2;

std::string cmp_verdict(bool le, bool ge) {
  if (le && ge) return "EQ";
  if (le) return "LT";
  if (ge) return "GT";
  return "INC";
}

int cmd_validate(const std::string& spec, const std::string& profile_name,
                 const std::string& format) {
  CodedDilator d = resolve_dilator(spec);
  SizeProfile profile = SizeProfile::named(profile_name);
  ValidateOptions opts;
  opts.action_cap = profile.action_cap;
  opts.table_cap = profile.table_cap;
  opts.transitivity_cap = profile.transitivity_cap;
  opts.embedding_cap = profile.embedding_cap;
  ValidationReport rep = validate(d, opts);
  bool normal = is_normal(d, profile.table_cap);
  MonotonicityResult mono = is_monotone(d, MonotoneOptions{profile.monotone_domain_cap,
                                                           profile.monotone_codomain_cap});
  bool unary = is_unary(d);

  if (format == "json") {
    nlohmann::json j;
    j["n_max"] = d.n_max();
    j["trace_size"] = d.trace().size();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : rep.checks)
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"bound", c.bound},
                             {"witness", c.witness}});
    j["normal"] = normal;
    j["monotone"] = mono.monotone;
    j["unary"] = unary;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dilator: n_max=" << d.n_max() << " trace=" << d.trace().size() << " tokens\n";
    std::cout << rep.to_text();
    std::cout << "normal: " << (normal ? "true" : "false") << "\n";
    std::cout << "monotone: " << (mono.monotone ? "true" : "false") << "\n";
    if (!mono.monotone && mono.witness) {
      std::cout << "  witness shape: " << poset_to_json_text(mono.witness->c.poset)
                << " token: " << d.token(mono.witness->token).id << "\n";
    }
    std::cout << "unary: " << (unary ? "true" : "false") << "\n";
  }
  return rep.axioms_pass() ? kOk : kSemanticFailure;
}

int cmd_term_cmp(const std::string& spec, const std::string& a, const std::string& b) {
  CodedDilator d = resolve_dilator(spec);
  TermSystem ts(d);
  TermSystem::Term ta = ts.parse(a);
  TermSystem::Term tb = ts.parse(b);
  std::cout << cmp_verdict(ts.leq(ta, tb), ts.leq(tb, ta)) << "\n";
  return kOk;
}

int cmd_term_enum(const std::string& spec, int height, int max_count) {
  CodedDilator d = resolve_dilator(spec);
  TermSystem ts(d);
  auto en = ts.enumerate(height, max_count);
  for (auto t : en.terms)
    std::cout << ts.to_string(t) << "\t" << ts.height(t) << "\t" << ts.length(t) << "\n";
  if (en.truncated) std::cout << "# truncated at " << max_count << "\n";
  return kOk;
}

int cmd_tree_cmp(const std::string& a, const std::string& b, int m, int n, bool oracle) {
  LabeledTree ta = tree_parse(a);
  LabeledTree tb = tree_parse(b);
  for (const auto* t : {&ta, &tb})
    if (!tree_in_universe(*t, m, n))
      throw OrderError("tree outside the (" + std::to_string(m) + "," + std::to_string(n) +
                       ") universe");
  bool le = oracle ? tree_leq_oracle(ta, tb) : tree_leq(ta, tb);
  bool ge = oracle ? tree_leq_oracle(tb, ta) : tree_leq(tb, ta);
  std::cout << cmp_verdict(le, ge) << "\n";
  return kOk;
}

void print_reflection_check(bool image_le, bool source_le) {
  std::cout << "image<=: " << (image_le ? "true" : "false")
            << " source<=: " << (source_le ? "true" : "false") << "\n";
  if (image_le && !source_le) throw OrderError("reflection violated on this pair");
}

int cmd_map(const std::string& name, std::vector<std::string> args, const std::string& dspec,
            int m, int n, const std::string& check) {
  if (name == "tree-to-fix") {
    SeqDilator sd = seq_dilator(n);
    TermSystem ts(sd.dil);
    TermSystem::Term img = tree_to_fixpoint(sd, ts, tree_parse(args.at(0)));
    std::cout << ts.to_string(img) << "\n";
    if (!check.empty()) {
      TermSystem::Term img2 = tree_to_fixpoint(sd, ts, tree_parse(check));
      print_reflection_check(ts.leq(img, img2), tree_leq(tree_parse(args.at(0)), tree_parse(check)));
    }
    return kOk;
  }
  if (name == "delabel") {
    LabeledTree img = delabel(m, n, tree_parse(args.at(0)));
    std::cout << tree_to_string(img) << "\n";
    if (!check.empty()) {
      LabeledTree img2 = delabel(m, n, tree_parse(check));
      print_reflection_check(tree_leq(img, img2),
                             tree_leq(tree_parse(args.at(0)), tree_parse(check)));
    }
    return kOk;
  }
  if (name == "fix-to-tree") {
    CodedDilator d = resolve_dilator(dspec);
    TermSystem ts(d);
    FixToTree inj = default_injection(d);
    TermSystem::Term t = ts.parse(args.at(0));
    std::cout << tree_to_string(fixpoint_to_tree(ts, inj, t)) << "\n";
    if (!check.empty()) {
      TermSystem::Term t2 = ts.parse(check);
      print_reflection_check(
          tree_leq(fixpoint_to_tree(ts, inj, t), fixpoint_to_tree(ts, inj, t2)), ts.leq(t, t2));
    }
    return kOk;
  }
  if (name == "unary-to-seq") {
    CodedDilator d = resolve_dilator(dspec);
    TermSystem ts(d);
    UnarySeqCodomain y = unary_seq_codomain(d);
    auto print_seq = [&](const std::vector<int>& seq) {
      std::cout << "[";
      for (size_t i = 0; i < seq.size(); ++i) {
        if (i) std::cout << " ";
        int v = seq[i];
        if (v < static_cast<int>(y.w0.elems.size()))
          std::cout << "0:" << elem_to_string(d, y.w0.elems[v]);
        else
          std::cout << "1:" << elem_to_string(d, y.w1.elems[v - y.w0.elems.size()]);
      }
      std::cout << "]\n";
    };
    TermSystem::Term t = ts.parse(args.at(0));
    print_seq(unary_to_seq(ts, y, t));
    if (!check.empty()) {
      TermSystem::Term t2 = ts.parse(check);
      print_reflection_check(
          higman_leq(unary_to_seq(ts, y, t), unary_to_seq(ts, y, t2), y.y), ts.leq(t, t2));
    }
    return kOk;
  }
  if (name == "to-prime") {
    CodedDilator d = resolve_dilator(dspec);
    PrimeDilator pd = prime_transform(d);
    TermSystem base_ts(d), prime_ts(pd.dil);
    TermSystem::Term t = base_ts.parse(args.at(0));
    ToPrime r = to_prime(base_ts, pd, prime_ts, t);
    std::cout << prime_ts.to_string(r.term) << "\n";
    if (r.defaulted) throw OrderError("to-prime took the default branch");
    if (!check.empty()) {
      ToPrime r2 = to_prime(base_ts, pd, prime_ts, base_ts.parse(check));
      print_reflection_check(prime_ts.leq(r.term, r2.term),
                             base_ts.leq(t, base_ts.parse(check)));
    }
    return kOk;
  }
  if (name == "wz-iso") {
    WzDilator wd = wz_dilator(resolve_poset(dspec));
    TermSystem ts(wd.dil);
    const std::string& dir = args.at(0);
    if (dir == "to-seq") {
      TermSystem::Term t = ts.parse(args.at(1));
      auto seq = wz_term_to_seq(wd, ts, t);
      std::cout << "[";
      for (size_t i = 0; i < seq.size(); ++i) std::cout << (i ? " " : "") << seq[i];
      std::cout << "]\n";
      if (!check.empty()) {
        TermSystem::Term t2 = ts.parse(check);
        print_reflection_check(higman_leq(seq, wz_term_to_seq(wd, ts, t2), wd.z), ts.leq(t, t2));
      }
    } else if (dir == "to-term") {
      std::vector<int> seq;
      std::string body = args.at(1);
      if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("sequence: expected \"[z0 z1 ...]\"");
      std::stringstream ss(body.substr(1, body.size() - 2));
      int v;
      while (ss >> v) seq.push_back(v);
      std::cout << ts.to_string(wz_seq_to_term(wd, ts, seq)) << "\n";
    } else {
      throw OrderError("wz-iso: direction must be to-seq or to-term");
    }
    return kOk;
  }
  if (name == "prod-embed") {
    CodedDilator d = resolve_dilator(dspec);
    FinPoset host = resolve_poset(args.at(0));
    DilElem e = elem_parse(d, args.at(1));
    auto coords = prod_embed(d, host, e);
    int ntok = static_cast<int>(d.trace().size());
    std::cout << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i) std::cout << " ";
      if (coords[i] < ntok)
        std::cout << "tr:" << d.token(coords[i]).id;
      else
        std::cout << "x:" << coords[i] - ntok;
    }
    std::cout << ")\n";
    if (!check.empty()) {
      DilElem e2 = elem_parse(d, check);
      auto coords2 = prod_embed(d, host, e2);
      FinPoset target = prod_embed_target(d, host);
      bool dominated = true;
      for (size_t i = 0; i < coords.size(); ++i)
        if (!target.leq(coords[i], coords2[i])) dominated = false;
      print_reflection_check(dominated, leq_W(d, host, e, e2));
    }
    return kOk;
  }
  throw OrderError("unknown map: " + name);
}

int cmd_falsify_bad(const std::string& dspec, const std::string& poset_spec, int length, int width,
                    long long budget) {
  BadSearchResult r;
  if (!dspec.empty()) {
    CodedDilator d = resolve_dilator(dspec);
    FinPoset host = resolve_poset(poset_spec);
    EvalOrder ev = eval_order(d, host);
    r = bad_search_eval(d, ev, length, budget);
    if (r.status == BadSearchResult::Status::found) {
      std::cout << "bad sequence:";
      for (int i : r.indices) std::cout << " " << elem_to_string(d, ev.elems[i]);
      std::cout << "\n";
      return kOk;
    }
  } else {
    FinPoset stream = resolve_poset(poset_spec);
    r = bad_search(stream, length, width, budget);
    if (r.status == BadSearchResult::Status::found) {
      std::cout << "bad sequence:";
      for (int i : r.indices) std::cout << " " << i;
      std::cout << "\n";
      return kOk;
    }
  }
  std::cout << (r.status == BadSearchResult::Status::none ? "none" : "inconclusive")
            << " (visited " << r.nodes_visited << " nodes)\n";
  return kOk;
}

int cmd_falsify_antichain(const std::string& dspec, const std::string& token_id, int len) {
  CodedDilator d = resolve_dilator(dspec);
  int tok = d.token_index(token_id);
  if (tok < 0) throw OrderError("unknown token: " + token_id);
  AntichainResult r = two_point_antichain(d, tok, len);
  if (r.antichain) {
    std::cout << "antichain:";
    for (const auto& e : r.elems) std::cout << " " << elem_to_string(d, e);
    std::cout << "\n";
    return kOk;
  }
  std::cout << "comparable: " << elem_to_string(d, r.elems[r.comparable->first]) << " <= "
            << elem_to_string(d, r.elems[r.comparable->second]) << "\n";
  return kSemanticFailure;
}

int cmd_falsify_ladder(const std::string& dspec, int K) {
  CodedDilator d = resolve_dilator(dspec);
  MonotonicityResult mono = is_monotone(d);
  if (mono.monotone) throw OrderError("dilator is monotone at the checked bounds; no witness");
  LadderResult r = ladder_bad_sequence(d, *mono.witness, K);
  std::cout << (r.bad ? "bad sequence:" : "NOT BAD:");
  for (const auto& e : r.elems) std::cout << " " << elem_to_string(d, e);
  std::cout << "\n";
  return r.bad ? kOk : kSemanticFailure;
}

int cmd_falsify_descent(int level, const std::string& from, int steps) {
  OrdTerm t = ord_parse(from, level);
  auto chain = descent_search(t, steps);
  for (const auto& x : chain) std::cout << ord_to_string(x) << "\n";
  std::cout << "# length " << chain.size() << "\n";
  return kOk;
}

int cmd_suite(const std::string& profile_name, const std::string& format, bool mutate_higman) {
  SizeProfile profile = SizeProfile::named(profile_name);
  SuiteHooks hooks;
  if (mutate_higman)
    hooks.higman = [](const std::vector<int>& s, const std::vector<int>& t, const FinPoset& x) {
      bool real = higman_leq(s, t, x);
      return s.size() + t.size() == 3 ? !real : real;
    };
  auto results = run_suite(profile, hooks);
  bool all = true;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
      j.push_back({{"invariant", r.name}, {"bound", r.bound}, {"pass", r.pass},
                   {"details", r.details}});
      all = all && r.pass;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  [" << r.bound << "]  "
                << r.details << "\n";
      all = all && r.pass;
    }
  }
  return all ? kOk : kSemanticFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite PO-dilators, Kruskal fixed points, tree embeddings"};
  app.require_subcommand(1);

  int size_bound = 0;
  app.add_option("--bound", size_bound, "override the enumeration size cap (default 6)");

  std::string dilator_spec, profile = "default", format = "text";
  std::string arg1, arg2, check, map_name, token_id, poset_spec, from;
  int m = 1, n = 3, height = 2, max_count = 1000, length = 2, width = -1, K = 5, level = 2,
      steps = 5, len = 4;
  long long budget = 1000000;
  bool oracle = false, mutate = false;

  auto* validate_cmd = app.add_subcommand("validate", "validate a coded dilator");
  validate_cmd->add_option("dilator", dilator_spec)->required();
  validate_cmd->add_option("--profile", profile)->check(CLI::IsMember({"tiny", "default", "thorough"}));
  validate_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* term = app.add_subcommand("term", "fixed-point term operations");
  auto* term_cmp = term->add_subcommand("cmp", "compare two terms");
  term_cmp->add_option("-d,--dilator", dilator_spec)->required();
  term_cmp->add_option("a", arg1)->required();
  term_cmp->add_option("b", arg2)->required();
  auto* term_enum = term->add_subcommand("enum", "enumerate terms by height");
  term_enum->add_option("-d,--dilator", dilator_spec)->required();
  term_enum->add_option("--height", height);
  term_enum->add_option("--max", max_count);

  auto* tree = app.add_subcommand("tree", "labeled-tree operations");
  auto* tree_cmp = tree->add_subcommand("cmp", "compare two trees");
  tree_cmp->add_option("-m", m);
  tree_cmp->add_option("-n", n);
  tree_cmp->add_option("a", arg1)->required();
  tree_cmp->add_option("b", arg2)->required();
  tree_cmp->add_flag("--oracle", oracle);

  auto* map_cmd = app.add_subcommand("map", "apply one of the bridging maps");
  map_cmd->add_option("name", map_name)
      ->required()
      ->check(CLI::IsMember({"tree-to-fix", "delabel", "fix-to-tree", "unary-to-seq", "to-prime",
                             "wz-iso", "prod-embed"}));
  map_cmd->add_option("args", arg1);
  map_cmd->add_option("args2", arg2);
  map_cmd->add_option("-d,--dilator", dilator_spec);
  map_cmd->add_option("-m", m);
  map_cmd->add_option("-n", n);
  map_cmd->add_option("--check", check);

  auto* falsify = app.add_subcommand("falsify", "bounded counterexample searches");
  auto* bad = falsify->add_subcommand("bad", "search for a bad subsequence");
  bad->add_option("-d,--dilator", dilator_spec);
  bad->add_option("--host", poset_spec)->required();
  bad->add_option("--length", length)->required();
  bad->add_option("--width", width);
  bad->add_option("--budget", budget);
  auto* anti = falsify->add_subcommand("antichain", "the two-point-support antichain");
  anti->add_option("-d,--dilator", dilator_spec)->required();
  anti->add_option("--token", token_id)->required();
  anti->add_option("-L,--len", len);
  auto* ladder = falsify->add_subcommand("ladder", "bad sequence from a monotonicity violation");
  ladder->add_option("-d,--dilator", dilator_spec)->required();
  ladder->add_option("-K", K);
  auto* descent = falsify->add_subcommand("descent", "descending chain probe");
  descent->add_option("--level", level)->check(CLI::Range(1, 3));
  descent->add_option("--from", from)->required();
  descent->add_option("--steps", steps);

  auto* suite = app.add_subcommand("suite", "run the property suite");
  suite->add_option("--profile", profile)->check(CLI::IsMember({"tiny", "default", "thorough"}));
  suite->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  suite->add_flag("--selftest-mutation", mutate);

  CLI11_PARSE(app, argc, argv);
  if (size_bound > 0) kfp::set_size_cap_override(size_bound);

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(dilator_spec, profile, format);
    if (app.got_subcommand(term)) {
      if (term->got_subcommand(term_cmp)) return cmd_term_cmp(dilator_spec, arg1, arg2);
      if (term->got_subcommand(term_enum)) return cmd_term_enum(dilator_spec, height, max_count);
      std::cerr << "term: need a subcommand (cmp|enum)\n";
      return kInputError;
    }
    if (app.got_subcommand(tree)) {
      if (tree->got_subcommand(tree_cmp)) return cmd_tree_cmp(arg1, arg2, m, n, oracle);
      std::cerr << "tree: need a subcommand (cmp)\n";
      return kInputError;
    }
    if (app.got_subcommand(map_cmd)) {
      std::vector<std::string> args;
      if (!arg1.empty()) args.push_back(arg1);
      if (!arg2.empty()) args.push_back(arg2);
      return cmd_map(map_name, args, dilator_spec, m, n, check);
    }
    if (app.got_subcommand(falsify)) {
      if (falsify->got_subcommand(bad))
        return cmd_falsify_bad(dilator_spec, poset_spec, length, width, budget);
      if (falsify->got_subcommand(anti)) return cmd_falsify_antichain(dilator_spec, token_id, len);
      if (falsify->got_subcommand(ladder)) return cmd_falsify_ladder(dilator_spec, K);
      if (falsify->got_subcommand(descent)) return cmd_falsify_descent(level, from, steps);
      std::cerr << "falsify: need a subcommand (bad|antichain|ladder|descent)\n";
      return kInputError;
    }
    if (app.got_subcommand(suite)) return cmd_suite(profile, format, mutate);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const StructuralError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kInputError;
  } catch (const OrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticFailure;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
