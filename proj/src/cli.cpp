#include "amoeba/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "amoeba/balancing.hpp"
#include "amoeba/families.hpp"
#include "amoeba/fer.hpp"
#include "amoeba/fer_factor.hpp"
#include "amoeba/graph.hpp"

namespace amoeba {

namespace {

using nlohmann::json;

bool guard_override_env() {
  const char* v = std::getenv("AMOEBA_GUARD_OVERRIDE");
  return v != nullptr && std::string(v) == "1";
}

json replacement_to_json(const EdgeReplacement& r) {
  if (r.is_neutral()) return json{{"neutral", true}};
  return json{{"remove", {r.removed->first, r.removed->second}},
              {"add", {r.added->first, r.added->second}}};
}

json chain_to_json(const std::vector<EdgeReplacement>& chain) {
  json arr = json::array();
  for (const auto& step : chain) arr.push_back(replacement_to_json(step));
  return arr;
}

Permutation parse_perm_arg(const std::string& text, const std::vector<int>& labels) {
  std::string trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.erase(trimmed.begin());
  if (!trimmed.empty() && trimmed.front() == '[') {
    auto arr = json::parse(trimmed);
    std::vector<int> images = arr.get<std::vector<int>>();
    if (images.size() != labels.size())
      throw std::invalid_argument("permutation image array has the wrong length");
    return Permutation::from_images(labels, std::move(images));
  }
  return parse_cycles(trimmed, labels);
}

LabeledGraph graph_argument(const std::string& family, int k, const std::string& g6) {
  if (!g6.empty()) return from_graph6(g6);
  if (family.empty()) throw std::invalid_argument("provide either --family/--k or --graph6");
  return build(family_from_string(family), k).graph;
}

int finish(std::string& out, const json& j, bool human, const std::string& human_text) {
  out += human ? human_text : j.dump(2) + "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out) {
  CLI::App app{"amoeba graph workbench: recognition, tree families, edge-replacement factorization, balancing bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  bool force = guard_override_env();
  std::string format = "json";
  app.add_flag("--force", force, "override brute-force size guards");
  app.add_option("--format", format, "output format: json or human")->check(CLI::IsMember({"json", "human"}));
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for coloring enumeration");
  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized helpers (reports are deterministic)");

  // construct
  auto* cmd_construct = app.add_subcommand("construct", "build a canonical family tree");
  std::string c_family;
  int c_k = 0;
  std::string c_out_format = "json";
  cmd_construct->add_option("--family", c_family, "T, A or B")->required();
  cmd_construct->add_option("--k", c_k, "family index")->required();
  cmd_construct->add_option("--format", c_out_format, "graph6, dot or json")
      ->check(CLI::IsMember({"graph6", "dot", "json"}));

  // recognize
  auto* cmd_recognize = app.add_subcommand("recognize", "feasible replacements, Fer group, amoeba tests");
  std::string r_family, r_graph6;
  int r_k = 0;
  cmd_recognize->add_option("--family", r_family, "T, A or B");
  cmd_recognize->add_option("--k", r_k, "family index");
  cmd_recognize->add_option("--graph6", r_graph6, "graph6 input instead of a family member");

  // factor
  auto* cmd_factor = app.add_subcommand("factor", "factor a permutation of V(T_k) into edge replacements");
  std::string f_family = "T", f_perm;
  int f_k = 0;
  bool f_simplify = false, f_verify = false;
  cmd_factor->add_option("--family", f_family, "only T is wired");
  cmd_factor->add_option("--k", f_k, "tree index")->required();
  cmd_factor->add_option("--perm", f_perm, "cycles \"(0 3)(1 5)\" or image array \"[1,0,...]\"")->required();
  cmd_factor->add_flag("--simplify", f_simplify, "peephole-shorten the chain");
  cmd_factor->add_flag("--verify", f_verify, "replay-verify before emitting");

  // balance bounds|brute
  auto* cmd_balance = app.add_subcommand("balance", "balancing-number bounds and brute force");
  auto* cmd_bounds = cmd_balance->add_subcommand("bounds", "closed-form lower/upper bounds");
  std::string bb_family;
  int bb_k = 0;
  long long bb_n = 0;
  cmd_bounds->add_option("--family", bb_family, "T, A or B")->required();
  cmd_bounds->add_option("--k", bb_k, "family index")->required();
  cmd_bounds->add_option("--n", bb_n, "host order n")->required();
  auto* cmd_brute = cmd_balance->add_subcommand("brute", "exact value by coloring enumeration");
  std::string br_family;
  int br_k = 0, br_n = 0;
  cmd_brute->add_option("--family", br_family, "T, A or B")->required();
  cmd_brute->add_option("--k", br_k, "family index")->required();
  cmd_brute->add_option("--n", br_n, "host order n")->required();

  // extremal
  auto* cmd_extremal = app.add_subcommand("extremal", "exact ex(n, H_G) for the half-edge family of a graph");
  std::string x_graph6;
  int x_n = 0;
  cmd_extremal->add_option("--family-of", x_graph6, "graph6 of G; the forbidden family is H_G")->required();
  cmd_extremal->add_option("--n", x_n, "host order n")->required();

  // bench
  auto* cmd_bench = app.add_subcommand("bench", "time worst-case factorizations, CSV output");
  int be_kmin = 8, be_kmax = 14, be_reps = 5;
  bool be_nomemo = false;
  cmd_bench->add_option("--kmin", be_kmin, "smallest k");
  cmd_bench->add_option("--kmax", be_kmax, "largest k");
  cmd_bench->add_option("--reps", be_reps, "repetitions per k (best time reported)");
  cmd_bench->add_flag("--no-memo", be_nomemo, "disable memoization");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    int code = app.exit(e, os, os);
    out += os.str();
    return code == 0 ? 0 : 1;
  }

  const bool human = format == "human";
  try {
    if (cmd_construct->parsed()) {
      CanonicalTree t = build(family_from_string(c_family), c_k);
      if (c_out_format == "graph6") {
        out += to_graph6(t.graph) + "\n";
        return 0;
      }
      if (c_out_format == "dot") {
        out += to_dot(t.graph);
        return 0;
      }
      json j = json::parse(to_json(t.graph));
      j["family"] = family_to_string(t.family);
      j["k"] = t.k;
      if (t.roots) j["roots"] = {{"a", t.roots->a}, {"b", t.roots->b}, {"c", t.roots->c}, {"d", t.roots->d}};
      if (t.regions)
        j["regions"] = {{"A", {t.regions->A.lo, t.regions->A.hi}},
                        {"B", {t.regions->B.lo, t.regions->B.hi}},
                        {"C", {t.regions->C.lo, t.regions->C.hi}},
                        {"D", {t.regions->D.lo, t.regions->D.hi}}};
      std::ostringstream hs;
      hs << family_to_string(t.family) << "_" << t.k << ": n=" << t.graph.order()
         << " m=" << t.graph.size() << "\n" << to_dot(t.graph);
      return finish(out, j, human, hs.str());
    }

    if (cmd_recognize->parsed()) {
      LabeledGraph g = graph_argument(r_family, r_k, r_graph6);
      if (g.order() > 12 && !force)
        throw GuardError("recognition is exact search; n > 12 needs --force");
      RecognitionReport rep = recognize(g);
      json j;
      j["n"] = g.order();
      j["m"] = g.size();
      j["feasible_replacements"] = chain_to_json(rep.feasible);
      j["feasible_count"] = rep.feasible.size();
      j["aut_order"] = rep.aut_order;
      j["fer_order"] = rep.fer_order;
      j["is_local"] = rep.local;
      j["is_global"] = rep.global;
      j["stem_symmetric_at"] = rep.stem_symmetric_at;
      std::ostringstream hs;
      hs << "n=" << g.order() << " m=" << g.size() << "\n"
         << "feasible replacements: " << rep.feasible.size() << "\n"
         << "|Aut| = " << rep.aut_order << ", |Fer| = " << rep.fer_order << "\n"
         << "local amoeba:  " << (rep.local ? "yes" : "no") << "\n"
         << "global amoeba: " << (rep.global ? "yes" : "no") << "\n";
      return finish(out, j, human, hs.str());
    }

    if (cmd_factor->parsed()) {
      if (family_from_string(f_family) != Family::T)
        throw std::invalid_argument("factor: only family T is wired");
      FactorSession session(f_k);
      Permutation p = parse_perm_arg(f_perm, session.tree().labels());
      FerObject obj = session.factor(p);
      if (f_simplify) obj = simplify(obj);
      bool verified = false;
      if (f_verify) {
        ReplayResult rr = replay_verify(obj, f_k);
        if (!rr.ok)
          throw std::runtime_error("factor: verification failed at step " +
                                   std::to_string(rr.failed_index) + " (" + rr.reason + ")");
        verified = true;
      }
      json j;
      j["perm"] = obj.perm.images();
      j["cycles"] = obj.perm.cycle_string();
      j["chain"] = chain_to_json(obj.chain);
      j["length"] = obj.length();
      j["verified"] = verified;
      std::ostringstream hs;
      hs << "perm " << obj.perm.cycle_string() << ": chain of length " << obj.length()
         << (verified ? " (verified)" : "") << "\n";
      return finish(out, j, human, hs.str());
    }

    if (cmd_bounds->parsed()) {
      Family fam = family_from_string(bb_family);
      BoundsReport rep = bounds_report(fam, bb_k, bb_n);
      json j;
      j["family"] = bb_family;
      j["k"] = bb_k;
      j["n"] = bb_n;
      j["lower"] = rep.lower_formula + " -> " + std::to_string(rep.lower_value);
      j["upper"] = rep.upper_formula + " -> " + std::to_string(rep.upper_value);
      j["lower_value"] = rep.lower_value;
      j["upper_value"] = rep.upper_value;
      std::ostringstream hs;
      hs << rep.lower_formula << " <= bal(n," << bb_family << "_" << bb_k << ") <= " << rep.upper_formula
         << "  at n=" << bb_n << ": [" << rep.lower_value << ", " << rep.upper_value << "]\n";
      return finish(out, j, human, hs.str());
    }

    if (cmd_brute->parsed()) {
      LabeledGraph g = build(family_from_string(br_family), br_k).graph;
      BalOptions opts;
      opts.force = force;
      opts.threads = threads;
      long long value = bal_bruteforce(br_n, g, opts);
      json j;
      j["family"] = br_family;
      j["k"] = br_k;
      j["n"] = br_n;
      j["bal"] = value;
      std::ostringstream hs;
      hs << "bal(" << br_n << ", " << br_family << "_" << br_k << ") = " << value << "\n";
      return finish(out, j, human, hs.str());
    }

    if (cmd_extremal->parsed()) {
      LabeledGraph g = from_graph6(x_graph6);
      SubgraphFamily fam = half_family(g);
      ExOptions opts;
      opts.force = force;
      ExResult res = ex_bruteforce(x_n, fam, opts);
      json j;
      j["n"] = x_n;
      j["family_size"] = fam.members.size();
      j["ex"] = res.value;
      j["witness_graph6"] = to_graph6(res.witness);
      std::ostringstream hs;
      hs << "ex(" << x_n << ", H_G) = " << res.value << "  witness " << to_graph6(res.witness) << "\n";
      return finish(out, j, human, hs.str());
    }

    if (cmd_bench->parsed()) {
      std::ostringstream csv;
      csv << "k,n,wall_ms\n";
      for (int k = be_kmin; k <= be_kmax; ++k) {
        Permutation worst = worst_case_permutation(k);
        double best_ms = 0;
        for (int rep = 0; rep < be_reps; ++rep) {
          FactorSession session(k, !be_nomemo);
          auto t0 = std::chrono::steady_clock::now();
          FerObject obj = session.factor(worst);
          auto t1 = std::chrono::steady_clock::now();
          (void)obj;
          double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
          if (rep == 0 || ms < best_ms) best_ms = ms;
        }
        csv << k << "," << 2 * fib(k) << "," << best_ms << "\n";
      }
      out += csv.str();
      return 0;
    }
  } catch (const GuardError& e) {
    out += json{{"error", e.what()}, {"guard", true}}.dump() + "\n";
    return 2;
  } catch (const std::exception& e) {
    out += json{{"error", e.what()}}.dump() + "\n";
    return 1;
  }
  out += json{{"error", "no subcommand"}}.dump() + "\n";
  return 1;
}

}  // namespace amoeba
