#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "edcrg/bounds.hpp"
#include "edcrg/constructions.hpp"
#include "edcrg/forbid.hpp"
#include "edcrg/gsolve.hpp"
#include "edcrg/oracle.hpp"
#include "edcrg/verify.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace edcrg;

namespace {

struct Output {
  std::string format = "human";
  std::string out;

  std::ostream& stream(std::ofstream& file) const {
    if (out.empty()) return std::cout;
    file.open(out);
    if (!file) throw std::runtime_error("cannot open output file: " + out);
    return file;
  }

  void emit(const json& machine, const std::string& human) const {
    std::ofstream file;
    std::ostream& os = stream(file);
    if (format == "json")
      os << machine.dump(2) << "\n";
    else
      os << human;
  }
};

void add_format_flags(CLI::App* cmd, Output& out, const std::vector<std::string>& allowed = {
                                                      "human", "json"}) {
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
  cmd->add_option("--out", out.out, "write output to a file instead of stdout");
}

json rational_json(const Rational& r) {
  return json{{"fraction", to_fraction_string(r)}, {"decimal", to_double(r)}};
}

std::string show(const Rational& r) {
  return to_fraction_string(r) + " (~" + to_decimal_string(r) + ")";
}

std::map<std::string, std::string> parse_params(const std::string& spec) {
  std::map<std::string, std::string> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("bad --params item '" + item + "' (expected key=value)");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

int param_int(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw std::runtime_error("missing construction parameter '" + key + "'");
  return std::stoi(it->second);
}

Crg build_construction(const std::string& name, const std::map<std::string, std::string>& params) {
  if (name == "gray_clique") return gen_gray_clique(param_int(params, "w"), param_int(params, "b"));
  if (name == "matching") return gen_matching(param_int(params, "t"));
  if (name == "cycle_power") return gen_cycle_power(param_int(params, "k"), param_int(params, "r"));
  if (name == "paley") return gen_paley(param_int(params, "q")).first;
  if (name == "triangular_complement") return gen_triangular_complement(param_int(params, "m")).first;
  if (name == "rook_complement") return gen_rook_complement(param_int(params, "m")).first;
  if (name == "petersen_complement") return gen_petersen_complement().first;
  if (name == "furedi") return gen_furedi(param_int(params, "q"), param_int(params, "t"));
  if (name == "srg_file") {
    const auto it = params.find("path");
    if (it == params.end()) throw std::runtime_error("srg_file needs path=FILE");
    const SrgParams declared{param_int(params, "k"), param_int(params, "d"),
                             param_int(params, "lambda"), param_int(params, "mu")};
    return gen_srg_file(it->second, declared).first;
  }
  throw std::runtime_error("unknown construction '" + name + "'");
}

std::string pcore_name(PcoreVerdict v) {
  switch (v) {
    case PcoreVerdict::Yes: return "yes";
    case PcoreVerdict::No: return "no";
    case PcoreVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

json solution_json(const GSolution& sol) {
  json weights = json::array();
  for (const Rational& w : sol.x) weights.push_back(rational_json(w));
  return json{{"g", rational_json(sol.g)},
              {"x", weights},
              {"support", sol.support},
              {"pcore", pcore_name(sol.pcore)},
              {"approximate", sol.approximate},
              {"minimizers", sol.minimizers.size()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds on the edit distance function of graphs forbidding an induced K_{2,t}"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker thread cap (0 = hardware)");

  std::function<void()> action;

  // ---- crg ----
  auto* crg_cmd = app.add_subcommand("crg", "evaluate CRG files");
  crg_cmd->require_subcommand(1);
  {
    static std::string crg_file, p_text;
    static Output out;
    static bool force_exact = false;
    auto* eval = crg_cmd->add_subcommand("eval", "f and g of a CRG at p");
    eval->add_option("--crg", crg_file, "CRG file")->required();
    eval->add_option("--p", p_text, "edge probability (rational or decimal)")->required();
    eval->add_flag("--exact", force_exact, "fail rather than fall back to the iterative solver");
    add_format_flags(eval, out);
    eval->callback([&] {
      action = [&] {
        const Crg K = parse_crg_file(crg_file);
        const Rational p = parse_probability(p_text);
        const Rational f = f_value(K, p);
        GSolution sol;
        if (K.order() <= kGExactLimit) {
          sol = g_exact(K, p, threads);
        } else if (force_exact) {
          throw std::runtime_error("CRG too large for the exact solver");
        } else {
          sol = g_iterative(K, p);
        }
        json j{{"k", K.order()}, {"p", to_fraction_string(p)}, {"f", rational_json(f)},
               {"solution", solution_json(sol)}};
        std::ostringstream human;
        human << "k = " << K.order() << "\n"
              << "f = " << show(f) << "\n"
              << "g " << (sol.approximate ? "<= " : "= ") << show(sol.g) << "\n"
              << "pcore = " << pcore_name(sol.pcore) << "\n";
        out.emit(j, human.str());
      };
    });

    auto* pcore = crg_cmd->add_subcommand("pcore", "p-core verdict and optimal weights");
    pcore->add_option("--crg", crg_file, "CRG file")->required();
    pcore->add_option("--p", p_text, "edge probability")->required();
    add_format_flags(pcore, out);
    pcore->callback([&] {
      action = [&] {
        const Crg K = parse_crg_file(crg_file);
        const Rational p = parse_probability(p_text);
        const GSolution sol = g_exact(K, p, threads);
        json j{{"pcore", pcore_name(sol.pcore)}, {"solution", solution_json(sol)}};
        std::ostringstream human;
        human << "pcore = " << pcore_name(sol.pcore) << "\n"
              << "g = " << show(sol.g) << "\n";
        for (size_t v = 0; v < sol.x.size(); ++v)
          human << "x(" << v << ") = " << to_fraction_string(sol.x[v]) << "\n";
        out.emit(j, human.str());
      };
    });

    static int forbid_t = 0;
    auto* forbid = crg_cmd->add_subcommand("forbid", "does the CRG forbid K_{2,t}?");
    forbid->add_option("--crg", crg_file, "CRG file")->required();
    forbid->add_option("--t", forbid_t, "t of the forbidden K_{2,t}")->required();
    add_format_flags(forbid, out);
    forbid->callback([&] {
      action = [&] {
        const Crg K = parse_crg_file(crg_file);
        const bool result = forbids_k2t(K, forbid_t);
        out.emit(json{{"t", forbid_t}, {"forbids", result}},
                 std::string("forbids = ") + (result ? "yes" : "no") + "\n");
      };
    });
  }

  // ---- gen ----
  {
    static std::string name, params_text;
    static Output out;
    auto* gen = app.add_subcommand("gen", "generate a construction CRG");
    gen->add_option("--construction", name, "construction name")->required();
    gen->add_option("--params", params_text, "comma-separated key=value parameters");
    gen->add_option("--out", out.out, "write the CRG file here instead of stdout");
    gen->callback([&] {
      action = [&] {
        const Crg K = build_construction(name, parse_params(params_text));
        std::ofstream file;
        std::ostream& os = out.stream(file);
        os << serialize_crg(K);
      };
    });
  }

  // ---- bounds ----
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound queries");
  bounds_cmd->require_subcommand(1);
  {
    static int t = 0;
    static std::string p_text;
    static Output out;
    auto* at = bounds_cmd->add_subcommand("at", "upper/lower bounds at one p");
    at->add_option("--t", t, "forbidden K_{2,t} parameter")->required();
    at->add_option("--p", p_text, "edge probability")->required();
    add_format_flags(at, out);
    at->callback([&] {
      action = [&] {
        const Rational p = parse_probability(p_text);
        const PointBounds b = bound_at(t, p);
        json j{{"t", t},
               {"p", to_fraction_string(p)},
               {"upper", rational_json(b.upper)},
               {"active_upper", b.active_upper},
               {"lower_decimal", b.lower},
               {"exact", b.exact}};
        if (b.lower_exact) j["lower"] = rational_json(*b.lower_exact);
        std::ostringstream human;
        human << "upper = " << show(b.upper) << " [" << b.active_upper << "]\n";
        if (b.lower_exact)
          human << "lower = " << show(*b.lower_exact) << "\n";
        else
          human << "lower = " << b.lower << "\n";
        human << "exact = " << (b.exact ? "yes" : "no") << "\n";
        out.emit(j, human.str());
      };
    });

    static int samples = 2001;
    auto* envelope = bounds_cmd->add_subcommand("envelope", "sampled envelope over [0,1]");
    envelope->add_option("--t", t, "forbidden K_{2,t} parameter")->required();
    envelope->add_option("--samples", samples, "grid resolution")->capture_default_str();
    add_format_flags(envelope, out, {"human", "json", "csv"});
    envelope->callback([&] {
      action = [&] {
        const Envelope env = assemble_envelope(t, samples);
        std::ofstream file;
        std::ostream& os = out.stream(file);
        if (out.format == "json") {
          json pts = json::array();
          for (const EnvelopePoint& pt : env.points)
            pts.push_back(json{{"p", pt.p},
                               {"upper", pt.upper},
                               {"lower", pt.lower},
                               {"exact", pt.exact},
                               {"active_upper", pt.active_upper}});
          json j{{"t", t},
                 {"points", pts},
                 {"extreme", json{{"lo", env.extreme.lo},
                                  {"hi", env.extreme.hi},
                                  {"value", env.extreme.value},
                                  {"exact", env.extreme.exact}}}};
          os << j.dump(2) << "\n";
        } else {
          os << "p,upper,lower,exact,active_upper\n";
          char buf[96];
          for (const EnvelopePoint& pt : env.points) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%d,", pt.p, pt.upper, pt.lower,
                          pt.exact ? 1 : 0);
            os << buf << pt.active_upper << "\n";
          }
        }
      };
    });

    auto* qlist = bounds_cmd->add_subcommand("qlist", "feasible finite-field sizes");
    qlist->add_option("--t", t, "forbidden K_{2,t} parameter")->required();
    add_format_flags(qlist, out);
    qlist->callback([&] {
      action = [&] {
        const std::vector<int> qs = furedi_feasible_q(t);
        std::ostringstream human;
        human << "q =";
        for (int q : qs) human << " " << q;
        if (qs.empty()) human << " (none)";
        human << "\n";
        out.emit(json{{"t", t}, {"q", qs}}, human.str());
      };
    });

    static int d = 0;
    auto* tangency = bounds_cmd->add_subcommand("tangency", "equality-line tangency point");
    tangency->add_option("--t", t, "forbidden K_{2,t} parameter")->required();
    tangency->add_option("--d", d, "regularity degree of the hypothetical graph")->required();
    add_format_flags(tangency, out);
    tangency->callback([&] {
      action = [&] {
        const Rational p = srg_tangency_p(t, d);
        const BoundCurve line = srg_equality_line(t, d);
        const Rational value = *line.eval_exact(p);
        const auto lb = lower_genLB_exact(t, p);
        json j{{"t", t},
               {"d", d},
               {"p", rational_json(p)},
               {"line_value", rational_json(value)},
               {"integral_k", line.integral_k},
               {"hypothetical", line.hypothetical}};
        if (lb) j["lower_bound"] = rational_json(*lb);
        std::ostringstream human;
        human << "p = " << show(p) << "\n"
              << "line value = " << show(value) << "\n"
              << "integral k = " << (line.integral_k ? "yes" : "no") << "\n"
              << "realized = " << (line.hypothetical ? "no" : "yes") << "\n";
        if (lb) human << "lower bound = " << show(*lb) << "\n";
        out.emit(j, human.str());
      };
    });

    auto* catalog = bounds_cmd->add_subcommand("catalog", "summary bound list for 5 <= t <= 8");
    catalog->add_option("--t", t, "forbidden K_{2,t} parameter")->required();
    add_format_flags(catalog, out);
    catalog->callback([&] {
      action = [&] {
        json rows = json::array();
        std::ostringstream human;
        for (const CatalogEntry& entry : thm_sum_catalog(t)) {
          if (entry.p1mp) {
            rows.push_back(json{{"curve", "p(1-p)"}, {"origin", entry.origin}});
            human << "p(1-p)  [" << entry.origin << "]\n";
          } else {
            const std::string curve =
                to_fraction_string(entry.a) + " + " + to_fraction_string(entry.b) + " p";
            rows.push_back(json{{"curve", curve},
                                {"a", to_fraction_string(entry.a)},
                                {"b", to_fraction_string(entry.b)},
                                {"origin", entry.origin}});
            human << curve << "  [" << entry.origin << "]\n";
          }
        }
        out.emit(json{{"t", t}, {"curves", rows}}, human.str());
      };
    });
  }

  // ---- oracle ----
  auto* oracle_cmd = app.add_subcommand("oracle", "independent brute-force checks");
  oracle_cmd->require_subcommand(1);
  {
    static std::string graph_file, crg_file, p_text;
    static int t = 0, n = 0, trials = 10, resolution = 100, max_k = 4, budget = 32;
    static uint64_t seed = 1;
    static Output out;

    auto* dist = oracle_cmd->add_subcommand("dist", "exact edit distance of a small graph");
    dist->add_option("--graph", graph_file, "graph file")->required();
    dist->add_option("--t", t, "forbidden K_{2,t} parameter")->required();
    dist->add_option("--budget", budget, "search depth cap")->capture_default_str();
    add_format_flags(dist, out);
    dist->callback([&] {
      action = [&] {
        const SimpleGraph g = parse_graph_file(graph_file);
        const EditResult r = brute_edit_distance(g, t, budget);
        json j{{"distance", r.distance}, {"is_lower_bound", r.is_lower_bound}};
        if (!r.is_lower_bound) j["witness"] = serialize_graph(r.witness);
        std::ostringstream human;
        human << "distance " << (r.is_lower_bound ? "> " : "= ") << r.distance << "\n";
        out.emit(j, human.str());
      };
    });

    auto* gnp = oracle_cmd->add_subcommand("gnp", "normalized distances of seeded G(n,p) samples");
    gnp->add_option("--n", n, "graph order (<= 10)")->required();
    gnp->add_option("--p", p_text, "edge probability")->required();
    gnp->add_option("--t", t, "forbidden K_{2,t} parameter")->required();
    gnp->add_option("--trials", trials, "number of samples")->capture_default_str();
    gnp->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    add_format_flags(gnp, out);
    gnp->callback([&] {
      action = [&] {
        const double p = to_double(parse_probability(p_text));
        const std::vector<double> dists = sample_gnp_distance(n, p, t, trials, seed);
        std::ostringstream human;
        for (double dv : dists) human << dv << "\n";
        out.emit(json{{"n", n}, {"p", p}, {"t", t}, {"seed", seed}, {"distances", dists}},
                 human.str());
      };
    });

    auto* g = oracle_cmd->add_subcommand("g", "grid minimizer of the CRG quadratic");
    g->add_option("--crg", crg_file, "CRG file")->required();
    g->add_option("--p", p_text, "edge probability")->required();
    g->add_option("--resolution", resolution, "grid denominator")->capture_default_str();
    add_format_flags(g, out);
    g->callback([&] {
      action = [&] {
        const Crg K = parse_crg_file(crg_file);
        const Rational p = parse_probability(p_text);
        const double value = grid_g(K, p, resolution);
        std::ostringstream human;
        human << "grid g = " << value << "\n";
        out.emit(json{{"resolution", resolution}, {"grid_g", value}}, human.str());
      };
    });

    auto* scan = oracle_cmd->add_subcommand("scan", "exhaustive small-CRG p-core scan");
    scan->add_option("--max-k", max_k, "largest CRG order (<= 4)")->capture_default_str();
    scan->add_option("--p", p_text, "edge probability")->required();
    scan->add_option("--t", t, "forbidden K_{2,t} parameter")->required();
    add_format_flags(scan, out);
    scan->callback([&] {
      action = [&] {
        const Rational p = parse_probability(p_text);
        const ScanReport r = scan_small_pcores(max_k, p, t);
        json j{{"crgs_scanned", r.crgs_scanned},
               {"forbidding", r.forbidding},
               {"pcores", r.pcores},
               {"structure_violations", r.structure_violations}};
        std::ostringstream human;
        human << "crgs scanned = " << r.crgs_scanned << "\n"
              << "forbidding = " << r.forbidding << "\n"
              << "pcores = " << r.pcores << "\n"
              << "structure violations = " << r.structure_violations << "\n";
        if (r.have_min) {
          j["min_g"] = rational_json(r.min_g);
          j["best"] = serialize_crg(r.best);
          human << "min g = " << show(r.min_g) << "\n";
        }
        out.emit(j, human.str());
      };
    });
  }

  // ---- verify ----
  {
    static std::string suite = "quick";
    static Output out;
    auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
    verify->add_option("--suite", suite, "quick or paper")
        ->check(CLI::IsMember({"quick", "paper"}))
        ->capture_default_str();
    add_format_flags(verify, out);
    verify->callback([&] {
      action = [&] {
        const std::vector<CriterionResult> results = run_suite(suite);
        bool all = true;
        json rows = json::array();
        std::ostringstream human;
        for (const CriterionResult& r : results) {
          all = all && r.pass;
          rows.push_back(json{{"index", r.index},
                              {"name", r.name},
                              {"pass", r.pass},
                              {"seconds", r.seconds},
                              {"detail", r.detail}});
          human << (r.pass ? "PASS" : "FAIL") << "  " << r.index << ". " << r.name;
          if (!r.pass) human << "  -- " << r.detail;
          human << "\n";
        }
        out.emit(json{{"suite", suite}, {"pass", all}, {"criteria", rows}}, human.str());
        if (!all) throw std::runtime_error("verification suite failed");
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
