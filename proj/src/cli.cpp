#include "evencycle/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "evencycle/bounds.hpp"
#include "evencycle/error.hpp"
#include "evencycle/explorer.hpp"
#include "evencycle/generators.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/reduction.hpp"
#include "evencycle/serialize.hpp"

namespace evencycle::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream os;
  if (path.empty() || path == "-") {
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  os << f.rdbuf();
  return os.str();
}

struct Input {
  Graph graph;
  FixtureHeader header;
  Json params = Json::object();  // from the "#P" line, if any

  TrilayeredView view() const {
    if (!header.layers) throw PreconditionError("input has no #L1/#L2/#L3 layer lines");
    const auto& l = *header.layers;
    return TrilayeredView(graph, l[0], l[1], l[2]);
  }
  template <class T>
  T param(const char* key, const std::optional<T>& given) const {
    if (given) return *given;
    if (params.contains(key)) return params.at(key).get<T>();
    throw PreconditionError(std::string("missing --") + key + " and no fixture default");
  }
};

Input load(const std::string& path, std::istream& in) {
  Input x;
  const std::string text = slurp(path, in);
  x.graph = parse_edge_list(text);
  x.header = parse_fixture_header(text);
  if (x.header.params) {
    try {
      x.params = Json::parse(*x.header.params);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad #P parameters: ") + e.what(), 0);
    }
  }
  return x;
}

void emit(std::ostream& out, const std::string& command, const Json& body) {
  Json doc{{"schema", 1}, {"command", command}};
  for (const auto& [key, value] : body.items()) doc[key] = value;
  out << doc.dump(2) << '\n';
}

int exit_for(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return kFound;
    case SearchStatus::None: return kNotFound;
    case SearchStatus::BudgetExceeded: return kBudget;
  }
  return kInternal;
}

std::vector<double> parse_spec(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("bad number '" + item + "' in --spec");
    }
  }
  if (v.size() != 4) throw PreconditionError("--spec needs four comma-separated floors A,B,C,D");
  return v;
}

// Every certificate-like object inside a JSON document.
void collect(const Json& j, std::vector<Json>& found) {
  if (j.is_object()) {
    if (j.contains("cycle")) {
      found.push_back(j);
      return;
    }
    // Embedding output keeps the witness next to the certificate.
    if (j.contains("theta") && j.contains("witness") && j.at("theta").is_object()) {
      Json merged = j.at("theta");
      merged["witness"] = j.at("witness");
      found.push_back(std::move(merged));
      return;
    }
    for (const auto& [key, value] : j.items()) collect(value, found);
  } else if (j.is_array()) {
    for (const auto& value : j) collect(value, found);
  }
}

bool is_cycle(const Graph& g, const std::vector<Vertex>& c, std::size_t len) {
  if (c.size() != len || len < 3) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : c) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.has_edge(c[i], c[(i + 1) % len])) return false;
  }
  return true;
}

void print_bounds_text(std::ostream& out, const BoundReport& r) {
  out << "n = " << r.n << ", k = " << r.k << '\n';
  for (const auto& b : r.bounds) {
    out << std::left << std::setw(18) << b.name << " log10 = " << std::setprecision(12) << b.log10_value;
    if (b.value) out << "  value = " << *b.value;
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even-cycle search, theta certificates and bound arithmetic", "evencycle"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::function<int()>>> actions;
  auto on = [&](CLI::App* sub, std::function<int()> f) { actions.emplace_back(sub, std::move(f)); };

  // Shared option storage; each subcommand binds only the ones it uses.
  std::string input;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::size_t degree = 3;
  double p = 0.5;
  std::string fixture_kind;
  int k = 0;
  std::optional<int> k_opt;
  bool trace = false, json = false, wide = false;
  std::size_t budget_vertices = SearchBudget{}.max_vertices;
  std::uint64_t budget_steps = SearchBudget{}.max_steps;
  std::optional<double> d, delta, C, a;
  std::optional<int> steps;
  std::optional<Vertex> root;
  std::string alpha_text, c_text, spec_text, params_text, cert_path;
  int k_max = 0;

  auto add_input = [&](CLI::App* s) { s->add_option("-i,--input", input, "edge-list file (default stdin)"); };
  auto add_budget = [&](CLI::App* s) {
    s->add_option("--budget", budget_vertices, "largest graph the exact search accepts");
    s->add_option("--max-steps", budget_steps, "step cap for the exact search");
  };
  auto budget = [&] { return SearchBudget{budget_vertices, budget_steps}; };

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->require_subcommand(1);
  {
    auto* s = gen->add_subcommand("random", "G(n, p)");
    s->add_option("--n", n)->required();
    s->add_option("--p", p);
    s->add_option("--seed", seed);
    on(s, [&] { write_edge_list(out, random_graph(n, p, seed)); return int(kFound); });

    s = gen->add_subcommand("bipartite", "random bipartite graph, parts 0..n-1 and n..n+m-1");
    s->add_option("--n", n)->required();
    s->add_option("--m", m);
    s->add_option("--p", p);
    s->add_option("--seed", seed);
    on(s, [&] { write_edge_list(out, random_bipartite(n, m.value_or(n), p, seed)); return int(kFound); });

    s = gen->add_subcommand("complete-bipartite", "K_{n,m}");
    s->add_option("--n", n)->required();
    s->add_option("--m", m);
    on(s, [&] { write_edge_list(out, complete_bipartite(n, m.value_or(n))); return int(kFound); });

    s = gen->add_subcommand("cycle", "the cycle on n vertices");
    s->add_option("--n", n)->required();
    s->add_option("--seed", seed, "accepted for uniformity; the cycle is fixed");
    on(s, [&] { write_edge_list(out, cycle_graph(n)); return int(kFound); });

    s = gen->add_subcommand("path", "the path on n vertices");
    s->add_option("--n", n)->required();
    on(s, [&] { write_edge_list(out, path_graph(n)); return int(kFound); });

    s = gen->add_subcommand("petersen", "the Petersen graph");
    on(s, [&] { write_edge_list(out, petersen()); return int(kFound); });

    s = gen->add_subcommand("regular", "random regular graph by the pairing model");
    s->add_option("--n", n)->required();
    s->add_option("--degree", degree);
    s->add_option("--seed", seed);
    on(s, [&] { write_edge_list(out, random_regular(n, degree, seed)); return int(kFound); });

    s = gen->add_subcommand("trilayer-fixture", "engineered trilayered instance with its parameters");
    s->add_option("--params", fixture_kind, "fixture kind")->required()->check(CLI::IsMember(fixture_kinds()));
    s->add_option("--seed", seed);
    on(s, [&] { write_fixture(out, trilayer_fixture(fixture_kind, seed)); return int(kFound); });
  }

  // reduce
  {
    auto* s = app.add_subcommand("reduce", "reduce to a subgraph with controlled degrees");
    add_input(s);
    s->add_option("--alpha", alpha_text, "exponent in (0,1), e.g. 1/3")->required();
    s->add_option("--c", c_text, "density constant, e.g. 1/4")->required();
    s->add_flag("--trace", trace);
    on(s, [&] {
      const Input x = load(input, in);
      const auto params = ReductionParams::make(parse_rational(alpha_text), parse_rational(c_text));
      try {
        const auto r = reduce(x.graph, params);
        emit(out, "reduce", to_json(r, trace));
        return int(kFound);
      } catch (const ReductionCollapse& e) {
        Json body{{"outcome", "collapse"}, {"reason", e.what()}};
        if (trace) body["transcript"] = to_json(e.transcript());
        emit(out, "reduce", body);
        return int(kNotFound);
      }
    });
  }

  // find
  {
    auto* s = app.add_subcommand("find", "search for a 2k-cycle");
    add_input(s);
    add_budget(s);
    s->add_option("--k", k)->required();
    s->add_option("--d", d, "degree parameter (default from n and k)");
    s->add_option("--delta", delta, "degree ratio bound (default sqrt(k)(20k)^(2k))");
    s->add_flag("--wide", wide, "use the sqrt(10) coefficient for the default d");
    s->add_option("--chain-steps", steps);
    s->add_flag("--trace", trace);
    on(s, [&] {
      const Input x = load(input, in);
      FindOptions opt;
      opt.k = k;
      opt.d = d;
      opt.Delta = delta;
      opt.wide_coefficient = wide;
      opt.budget = budget();
      opt.chain_steps = steps;
      const FindReport r = find_c2k(x.graph, opt);
      emit(out, "find", to_json(r, trace));
      switch (r.outcome) {
        case FindReport::Outcome::Cycle:
        case FindReport::Outcome::CertificateChain: return int(kFound);
        case FindReport::Outcome::None: return int(kNotFound);
        case FindReport::Outcome::DegreeWindow: return int(kPrecondition);
        case FindReport::Outcome::Shortfall:
        case FindReport::Outcome::Budget: return int(kBudget);
      }
      return int(kInternal);
    });
  }

  // theta
  {
    auto* theta = app.add_subcommand("theta", "find a theta graph with a cycle of length >= 2k");
    theta->require_subcommand(1);
    auto* s = theta->add_subcommand("exact", "exhaustive search");
    add_input(s);
    add_budget(s);
    s->add_option("--k", k)->required();
    on(s, [&] {
      const Input x = load(input, in);
      const auto r = find_theta_exact(x.graph, k, budget());
      Json body{{"k", k}, {"status", status_name(r.status)}, {"steps", r.steps}};
      if (r.value) body["theta"] = to_json(*r.value);
      emit(out, "theta exact", body);
      return exit_for(r.status);
    });
    for (const char* name : {"min-degree", "avg-degree"}) {
      const std::string which = name;
      s = theta->add_subcommand(which, which == "min-degree" ? "maximal path in a bipartite graph of min degree k"
                                                             : "peel a bipartite graph of average degree 2k");
      add_input(s);
      s->add_option("--k", k)->required();
      on(s, [&, which] {
        const Input x = load(input, in);
        auto parts = bipartition(x.graph);
        if (!parts) throw PreconditionError("graph is not bipartite");
        const BipartiteView b(x.graph, parts->first, parts->second);
        const ThetaCertificate cert =
            which == "min-degree" ? find_theta_min_degree(b, k) : find_theta_avg_degree(b, k);
        emit(out, "theta " + which, Json{{"k", k}, {"status", "found"}, {"theta", to_json(cert)}});
        return int(kFound);
      });
    }
  }

  // audit
  {
    auto* audit = app.add_subcommand("audit", "layer audits from BFS roots");
    audit->require_subcommand(1);
    auto* s = audit->add_subcommand("layers", "no theta between consecutive layers of a C_2k-free graph");
    add_input(s);
    add_budget(s);
    s->add_option("--k", k)->required();
    s->add_option("--root", root);
    on(s, [&] {
      const Input x = load(input, in);
      try {
        const auto r = layer_theta_audit(x.graph, k, budget(), root);
        emit(out, "audit layers", to_json(r));
        return int(r.passed() ? kFound : kNotFound);
      } catch (const NotCycleFree& e) {
        emit(out, "audit layers", Json{{"outcome", "precondition"}, {"error", e.what()}, {"cycle", e.cycle()}});
        return int(kPrecondition);
      }
    });
    s = audit->add_subcommand("expansion", "layer growth inequalities");
    add_input(s);
    s->add_option("--k", k)->required();
    s->add_option("--d", d, "degree parameter (default from n and k)");
    s->add_option("--root", root);
    on(s, [&] {
      const Input x = load(input, in);
      const double dd = d.value_or(default_d(x.graph.order(), k, false));
      emit(out, "audit expansion", to_json(expansion_audit(x.graph, root.value_or(0), k, dd)));
      return int(kFound);
    });
  }

  // base, chain, embed read a trilayered fixture
  {
    auto* s = app.add_subcommand("base", "one peeling step on a trilayered graph");
    add_input(s);
    s->add_option("--k", k_opt);
    s->add_option("--a", a);
    s->add_option("--d", d);
    s->add_option("--spec", spec_text, "floors A,B,C,D");
    on(s, [&] {
      const Input x = load(input, in);
      MinDegSpec spec;
      if (!spec_text.empty()) {
        const auto v = parse_spec(spec_text);
        spec = {v[0], v[1], v[2], v[3]};
      } else if (x.params.contains("spec")) {
        const auto v = x.params.at("spec").get<std::vector<double>>();
        if (v.size() != 4) throw PreconditionError("fixture spec needs four floors");
        spec = {v[0], v[1], v[2], v[3]};
      } else {
        throw PreconditionError("missing --spec and no fixture default");
      }
      const int kk = x.param("k", k_opt);
      const auto o = base_step(x.view(), x.param("a", a), spec, x.param("d", d), kk);
      Json body{{"k", kk}};
      body.update(to_json(o));
      emit(out, "base", body);
      return int(kFound);
    });

    s = app.add_subcommand("chain", "iterate the peeling step along shrinking V2 subsets");
    add_input(s);
    s->add_option("--k", k_opt);
    s->add_option("--d", d);
    s->add_option("--delta", delta);
    s->add_option("--C", C);
    s->add_option("--steps", steps);
    s->add_flag("--trace", trace);
    on(s, [&] {
      const Input x = load(input, in);
      std::optional<int> t = steps;
      if (!t && x.params.contains("steps")) t = x.params.at("steps").get<int>();
      const int kk = x.param("k", k_opt);
      const auto r = iterate_chain(x.view(), x.param("d", d), kk, x.param("Delta", delta), x.param("C", C), t);
      Json body{{"k", kk}};
      body.update(to_json(r, trace));
      emit(out, "chain", body);
      return int(r.kind == ChainResult::Kind::Failure ? kNotFound : kFound);
    });

    s = app.add_subcommand("embed", "extend a good path until a theta certificate appears");
    add_input(s);
    s->add_option("--params", params_text, R"(JSON {"A","B","D","Delta","d","k"})");
    s->add_flag("--trace", trace);
    on(s, [&] {
      const Input x = load(input, in);
      Json pj = x.params;
      if (!params_text.empty()) {
        try {
          for (const auto& [key, value] : Json::parse(params_text).items()) pj[key] = value;
        } catch (const nlohmann::json::exception& e) {
          throw PreconditionError(std::string("bad --params: ") + e.what());
        }
      }
      EmbedParams ep;
      try {
        ep.A = pj.at("A").get<double>();
        ep.B = pj.at("B").get<double>();
        ep.D = pj.at("D").get<int>();
        ep.Delta = pj.at("Delta").get<double>();
        ep.d = pj.at("d").get<double>();
        ep.k = pj.at("k").get<int>();
      } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("embedding parameters incomplete: ") + e.what());
      }
      const auto o = embed_or_theta(x.view(), ep);
      Json body{{"k", ep.k}};
      body.update(to_json(o, trace));
      emit(out, "embed", body);
      return int(o.kind == EmbedOutcome::Kind::BudgetReport ? kBudget : kFound);
    });
  }

  // bounds
  {
    auto* s = app.add_subcommand("bounds", "closed-form bounds for given n and k");
    s->require_subcommand(0, 1);
    s->add_option("--n", n);
    s->add_option("--k", k);
    s->add_flag("--json", json);
    on(s, [&] {
      if (n == 0 || k == 0) throw PreconditionError("bounds needs --n and --k");
      const auto r = eval_bounds(n, k);
      if (json) emit(out, "bounds", to_json(r));
      else print_bounds_text(out, r);
      return int(kFound);
    });
    auto* c = s->add_subcommand("crossover", "smallest k where the main coefficient wins");
    c->add_option("--max-k", k_max)->required();
    c->add_flag("--json", json);
    on(c, [&] {
      const auto r = crossover(k_max);
      if (json) {
        emit(out, "bounds crossover", to_json(r));
      } else {
        auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
        out << "pikhurko " << show(r.pikhurko) << (r.stable ? " (stable)" : " (unstable)") << '\n'
            << "bukh_jiang " << show(r.bukh_jiang) << '\n';
      }
      return int(r.pikhurko ? kFound : kNotFound);
    });
    auto* t = s->add_subcommand("thresholds", "size thresholds in log10");
    t->add_option("--k", k)->required();
    t->add_flag("--json", json);
    on(t, [&] {
      const auto r = thresholds(k);
      if (json) {
        emit(out, "bounds thresholds", Json{{"k", k}, {"thresholds", to_json(r)}});
      } else {
        for (const auto& x : r) {
          out << std::left << std::setw(8) << x.name << " log10 = " << std::setprecision(12) << x.log10_value
              << '\n';
        }
      }
      return int(kFound);
    });
  }

  // verify
  {
    auto* s = app.add_subcommand("verify", "re-check certificates from a JSON document against a graph");
    add_input(s);
    s->add_option("--cert", cert_path, "JSON file with certificates")->required();
    s->add_option("--k", k_opt);
    on(s, [&] {
      const Input x = load(input, in);
      Json doc;
      try {
        doc = Json::parse(slurp(cert_path, in));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate file is not JSON: ") + e.what(), 0);
      }
      std::optional<int> kk = k_opt;
      if (!kk && doc.contains("k")) kk = doc.at("k").get<int>();
      if (!kk) throw PreconditionError("missing --k");
      std::vector<Json> found;
      collect(doc, found);
      if (found.empty()) throw PreconditionError("no certificates in the document");
      Json items = Json::array();
      bool all = true;
      for (const Json& item_json : found) {
        const Json* j = &item_json;
        Json item;
        bool ok;
        if (j->contains("chord")) {
          const ThetaCertificate cert = theta_from_json(*j);
          ok = verify_theta(x.graph, cert, *kk);
          item["kind"] = "theta";
          if (j->contains("witness")) {
            item["kind"] = "well_placed";
            ok = ok && verify_well_placed(x.view(), cert, witness_from_json(j->at("witness")), *kk);
          }
        } else {
          item["kind"] = "cycle";
          ok = is_cycle(x.graph, j->at("cycle").get<std::vector<Vertex>>(), static_cast<std::size_t>(2 * *kk));
        }
        item["valid"] = ok;
        all = all && ok;
        items.push_back(std::move(item));
      }
      emit(out, "verify", Json{{"valid", all}, {"checked", items.size()}, {"items", std::move(items)}});
      return int(all ? kFound : kNotFound);
    });
  }

  std::vector<std::string> argv_store{"evencycle"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int(kFound) : int(kPrecondition);
  }

  try {
    // The deepest parsed subcommand owns the run; parents register first.
    for (auto it = actions.rbegin(); it != actions.rend(); ++it) {
      if (it->first->parsed()) return it->second();
    }
    err << "error: no command given\n";
    return kPrecondition;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const evencycle::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace evencycle::cli
