#include "sfc/cli.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fixture.hpp"
#include "format.hpp"
#include "sfc/census.hpp"
#include "sfc/edge_list.hpp"
#include "sfc/enumeration.hpp"
#include "sfc/error.hpp"
#include "sfc/graph.hpp"
#include "sfc/rng.hpp"
#include "sfc/sampler.hpp"
#include "sfc/spectral.hpp"
#include "sfc/spinecodec.hpp"
#include "sfc/treegen.hpp"

namespace sfc::cli {
namespace {

using Action = std::function<void(std::ostream&)>;

struct Globals {
  int threads = 1;
  std::string fixture_dir;
};

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string join_levels(const LevelSequence& seq) {
  std::string s;
  for (int d : seq.depths()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(d);
  }
  return s;
}

struct StopGeneration {};

std::string one_line(const Tree& t) {
  std::string s = to_single_line(t);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

// ---------------------------------------------------------------- count

void add_count(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("count", "Exact rooted or free unlabelled tree counts");
  auto kind = std::make_shared<std::string>();
  auto max = std::make_shared<std::size_t>(0);
  auto cap = std::make_shared<std::size_t>(kDefaultCountCap);
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("kind", *kind, "rooted | free")->required()->check(CLI::IsMember({"rooted", "free"}));
  cmd->add_option("--max", *max, "Largest n")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--cap", *cap, "Largest n accepted");
  cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->callback([=, &action] {
    action = [=](std::ostream& out) {
      const bool free = *kind == "free";
      CountTable table = free ? free_counts(*max, *cap) : rooted_counts(*max, *cap);
      const auto& values = free ? table.t : table.a;
      if (*format == "json") {
        Json arr = Json::array();
        for (const BigInt& v : values) arr.push_back(integer(v));
        out << dump(arr);
        return;
      }
      if (*format == "csv") out << (free ? "n,t_n\n" : "n,a_n\n");
      const char sep = *format == "csv" ? ',' : ' ';
      for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << sep << to_decimal(values[i]) << '\n';
    };
  });
}

// ---------------------------------------------------------------- alpha

void add_alpha(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("alpha", "Estimate Otter's constant from a_k");
  auto k = std::make_shared<std::size_t>(0);
  auto method = std::make_shared<std::string>("ratio");
  auto digits = std::make_shared<unsigned>(12);
  auto json = std::make_shared<bool>(false);
  cmd->add_option("--k", *k)->required()->check(CLI::Range(std::size_t{2}, kDefaultCountCap));
  cmd->add_option("--method", *method, "root | ratio")->check(CLI::IsMember({"root", "ratio"}));
  cmd->add_option("--digits", *digits, "Significant digits (truncated)")->check(CLI::Range(1u, 200u));
  cmd->add_flag("--json", *json);
  cmd->callback([=, &action] {
    action = [=](std::ostream& out) {
      const AlphaMethod m = *method == "root" ? AlphaMethod::Root : AlphaMethod::Ratio;
      const std::string est = alpha_estimate(*k, m, *digits).str();
      if (!*json) {
        out << est << '\n';
        return;
      }
      Json j;
      j["k"] = integer(static_cast<std::int64_t>(*k));
      j["method"] = *method;
      j["estimate"] = est;
      j["digits"] = integer(static_cast<std::int64_t>(*digits));
      j["precision"] = "truncated to " + std::to_string(*digits) + " significant digits";
      out << dump(j);
    };
  });
}

// ---------------------------------------------------------------- choose-k

void add_choose_k(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("choose-k", "Smallest block size K with a_K > (alpha_ref - eps/3)^K");
  auto eps = std::make_shared<std::string>();
  auto cap = std::make_shared<int>(kDefaultChooseKCap);
  auto json = std::make_shared<bool>(false);
  cmd->add_option("--epsilon", *eps, "P/Q")->required();
  cmd->add_option("--cap", *cap, "Largest K searched");
  cmd->add_flag("--json", *json);
  cmd->callback([=, &action] {
    action = [=](std::ostream& out) {
      const Rational e = parse_rational(*eps);
      RootedCounter counter;
      const int K = choose_K(e, counter, *cap);
      if (!*json) {
        out << K << '\n';
        return;
      }
      Json j;
      j["epsilon"] = to_string(e);
      j["bound"] = to_string(Rational(OtterConstants::alpha_ref() - e / 3));
      j["K"] = integer(K);
      j["aK"] = integer(counter(static_cast<std::size_t>(K)));
      j["precision"] = "exact";
      out << dump(j);
    };
  });
}

// ---------------------------------------------------------------- gen

void add_gen(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("gen", "Enumerate unlabelled trees on k vertices");
  auto kind = std::make_shared<std::string>();
  auto k = std::make_shared<int>(0);
  auto limit = std::make_shared<std::uint64_t>(0);
  auto cap = std::make_shared<int>(0);
  auto format = std::make_shared<std::string>("edges");
  cmd->add_option("kind", *kind, "rooted | free")->required()->check(CLI::IsMember({"rooted", "free"}));
  cmd->add_option("-k", *k)->required()->check(CLI::PositiveNumber);
  cmd->add_option("--limit", *limit, "Stop after this many trees (0 = all)");
  cmd->add_option("--cap", *cap, "Largest k accepted");
  cmd->add_option("--format", *format, "edges | canon | levels")->check(CLI::IsMember({"edges", "canon", "levels"}));
  cmd->callback([=, &action] {
    action = [=](std::ostream& out) {
      std::uint64_t emitted = 0;
      if (*kind == "rooted") {
        RootedTreeStream stream(*k, *cap > 0 ? *cap : kDefaultRootedGenCap);
        while ((*limit == 0 || emitted < *limit) && stream.next()) {
          ++emitted;
          if (*format == "levels") {
            out << join_levels(stream.sequence()) << '\n';
          } else if (*format == "canon") {
            out << ahu_canon(stream.tree()).bytes << '\n';
          } else {
            out << one_line(stream.tree().tree) << '\n';
          }
        }
        return;
      }
      if (*format == "levels") throw Error(ErrorKind::BadParameters, "--format levels applies to rooted trees only");
      try {
        for_each_free(
            *k,
            [&](const Tree& t) {
              if (*limit != 0 && emitted == *limit) throw StopGeneration{};
              ++emitted;
              out << (*format == "canon" ? canon_free(t).bytes : one_line(t)) << '\n';
            },
            *cap > 0 ? *cap : kDefaultFreeGenCap);
      } catch (const StopGeneration&) {
      }
    };
  });
}

// ---------------------------------------------------------------- spine

Json params_json(const SpineParams& p) {
  Json j;
  j["K"] = integer(p.K);
  j["n"] = integer(p.n);
  j["L"] = integer(p.L);
  j["R"] = integer(p.R);
  j["a"] = integer(p.a);
  j["b"] = integer(p.b);
  return j;
}

void add_spine(CLI::App& app, Action& action) {
  auto* spine = app.add_subcommand("spine", "Spine construction: parameters, encoder, decoder, certificate");
  spine->require_subcommand(1);

  {
    auto* cmd = spine->add_subcommand("params", "Block layout for n vertices and block size K");
    auto n = std::make_shared<int>(0);
    auto K = std::make_shared<int>(0);
    auto json = std::make_shared<bool>(false);
    cmd->add_option("-n", *n)->required();
    cmd->add_option("-k,-K", *K)->required();
    cmd->add_flag("--json", *json);
    cmd->callback([=, &action] {
      action = [=](std::ostream& out) {
        SpineParams p = compute_params(*n, *K);
        if (*json) {
          out << dump(params_json(p));
        } else {
          out << "K=" << p.K << " n=" << p.n << " L=" << p.L << " R=" << p.R << " a=" << p.a << " b=" << p.b << '\n';
        }
      };
    });
  }
  {
    auto* cmd = spine->add_subcommand("encode", "Build the spine tree from a file of rooted K-vertex blocks");
    auto n = std::make_shared<int>(0);
    auto K = std::make_shared<int>(0);
    auto blocks = std::make_shared<std::string>();
    cmd->add_option("-n", *n)->required();
    cmd->add_option("-k,-K", *K)->required();
    cmd->add_option("--blocks", *blocks, "One tree per line, single-line edge lists, rooted at 0")->required();
    cmd->callback([=, &action] {
      action = [=](std::ostream& out) {
        SpineParams p = compute_params(*n, *K);
        TreeTuple tuple;
        for (Tree& t : parse_tree_lines(read_file(*blocks))) tuple.blocks.emplace_back(std::move(t), 0);
        out << to_edge_list(encode(p, tuple));
      };
    });
  }
  {
    auto* cmd = spine->add_subcommand("decode", "Recover the block tuple from a spine tree");
    auto K = std::make_shared<int>(0);
    auto file = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("edges");
    auto json = std::make_shared<bool>(false);
    cmd->add_option("-k,-K", *K)->required();
    cmd->add_option("tree", *file, "Tree file")->required();
    cmd->add_option("--format", *format, "edges | canon")->check(CLI::IsMember({"edges", "canon"}));
    cmd->add_flag("--json", *json);
    cmd->callback([=, &action] {
      action = [=](std::ostream& out) {
        Tree t = parse_tree(read_file(*file));
        TreeTuple tuple = decode(t, *K);
        if (*json) {
          Json j;
          j["params"] = params_json(compute_params(t.size(), *K));
          Json arr = Json::array();
          for (const RootedTree& b : tuple.blocks) {
            Json e;
            e["edges"] = one_line(b.tree);
            e["canon"] = ahu_canon(b).bytes;
            arr.push_back(e);
          }
          j["blocks"] = arr;
          out << dump(j);
          return;
        }
        for (const RootedTree& b : tuple.blocks) {
          out << (*format == "canon" ? ahu_canon(b).bytes : one_line(b.tree)) << '\n';
        }
      };
    });
  }
  {
    auto* cmd = spine->add_subcommand("certify", "Exact family-size certificate a_K^L >= (alpha_ref - eps)^n");
    auto eps = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto json = std::make_shared<bool>(false);
    auto no_sweep = std::make_shared<bool>(false);
    cmd->add_option("--epsilon", *eps, "P/Q")->required();
    cmd->add_option("-n", *n)->required();
    cmd->add_flag("--json", *json);
    cmd->add_flag("--no-sweep", *no_sweep, "Skip the threshold sweep over [8K, n]");
    cmd->callback([=, &action] {
      action = [=](std::ostream& out) {
        const Rational e = parse_rational(*eps);
        FamilyCertificate c = certify(e, *n);
        std::optional<CertificateSweep> sweep;
        if (!*no_sweep) sweep = certify_sweep(e, 0, *n);
        if (!*json) {
          out << "epsilon " << to_string(c.epsilon) << '\n'
              << "bound " << to_string(c.bound) << '\n'
              << "K " << c.K << '\n'
              << "Delta " << c.Delta << '\n'
              << "rho " << to_string(c.rho) << '\n'
              << "n " << c.n << '\n'
              << "L " << c.params.L << '\n'
              << "aK " << to_decimal(c.aK) << '\n'
              << "lhs_bits " << c.lhs_bits << '\n'
              << "rhs_bits " << c.rhs_bits << '\n'
              << "verdict " << (c.verdict ? "true" : "false") << '\n';
          if (sweep) {
            out << "threshold " << (sweep->threshold ? std::to_string(*sweep->threshold) : "none") << '\n';
          }
          return;
        }
        Json j;
        j["epsilon"] = to_string(c.epsilon);
        j["bound"] = to_string(c.bound);
        j["K"] = integer(c.K);
        j["Delta"] = integer(c.Delta);
        j["rho"] = to_string(c.rho);
        j["n"] = integer(c.n);
        j["params"] = params_json(c.params);
        j["aK"] = integer(c.aK);
        j["verdict"] = c.verdict;
        Json cmp;
        cmp["lhs"] = "a_K^L * q^n";
        cmp["rhs"] = "p^n";
        cmp["lhs_bits"] = integer(static_cast<std::int64_t>(c.lhs_bits));
        cmp["rhs_bits"] = integer(static_cast<std::int64_t>(c.rhs_bits));
        cmp["sign"] = integer(c.comparison);
        j["comparison"] = cmp;
        if (sweep) {
          Json s;
          s["n_lo"] = integer(sweep->n_lo);
          s["n_hi"] = integer(sweep->n_hi);
          s["threshold"] = sweep->threshold ? Json(integer(*sweep->threshold)) : Json(nullptr);
          j["sweep"] = s;
        }
        j["precision"] = "exact";
        out << dump(j);
      };
    });
  }
}

// ---------------------------------------------------------------- graph

Json profile_json(const SpectralProfile& p, std::optional<std::uint64_t> seed) {
  Json j;
  j["n"] = integer(p.n);
  if (p.d) j["d"] = integer(*p.d);
  j["lambda"] = real(p.lambda);
  if (p.ratio) j["ratio"] = real(*p.ratio);
  Json ev = Json::array();
  for (double x : p.eigenvalues) ev.push_back(real(x));
  j["eigenvalues"] = ev;
  j["tol"] = real(p.tol);
  j["sweeps"] = integer(p.sweeps);
  if (seed) j["seed"] = integer(static_cast<std::int64_t>(*seed));
  return j;
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(what, "expected an integer, got '" + s + "'");
}

void add_graph(CLI::App& app, Action& action) {
  auto* graph = app.add_subcommand("graph", "Graph generators and spectral checks");
  graph->require_subcommand(1);

  {
    auto* cmd = graph->add_subcommand("gen", "complete N | cycle N | regular N D | union FILE FILE | petersen | "
                                             "bipartite A B | hypercube D");
    auto kind = std::make_shared<std::string>();
    auto rest = std::make_shared<std::vector<std::string>>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto attempts = std::make_shared<std::uint64_t>(kDefaultPairingAttempts);
    cmd->add_option("kind", *kind)->required()->check(
        CLI::IsMember({"complete", "cycle", "regular", "union", "petersen", "bipartite", "hypercube"}));
    cmd->add_option("args", *rest);
    cmd->add_option("--seed", *seed, "Seed for regular");
    cmd->add_option("--max-attempts", *attempts, "Pairing-model rejection budget");
    cmd->callback([=, &action] {
      static const std::map<std::string, std::size_t> arity{{"complete", 1}, {"cycle", 1},     {"regular", 2},
                                                           {"union", 2},    {"petersen", 0},  {"bipartite", 2},
                                                           {"hypercube", 1}};
      if (rest->size() != arity.at(*kind)) {
        throw CLI::ValidationError("graph gen " + *kind,
                                   "expects " + std::to_string(arity.at(*kind)) + " argument(s)");
      }
      std::vector<int> nums;
      if (*kind != "union") {
        for (const std::string& s : *rest) nums.push_back(to_int(s, "graph gen"));
      }
      action = [=](std::ostream& out) {
        const std::string& k = *kind;
        if (k == "regular") {
          RegularGraphSample s = random_regular(nums[0], nums[1], *seed, *attempts);
          out << "# generator=" << Rng::kGeneratorId << " seed=" << *seed << " attempts=" << s.attempts << '\n'
              << to_edge_list(s.graph);
          return;
        }
        Graph g = k == "complete"    ? complete_graph(nums[0])
                  : k == "cycle"     ? cycle_graph(nums[0])
                  : k == "petersen"  ? petersen_graph()
                  : k == "bipartite" ? complete_bipartite(nums[0], nums[1])
                  : k == "hypercube" ? hypercube_graph(nums[0])
                                     : disjoint_union(load_graph((*rest)[0]), load_graph((*rest)[1]));
        out << to_edge_list(g);
      };
    });
  }
  {
    auto* cmd = graph->add_subcommand("lambda", "Adjacency spectrum, lambda = max(lambda_2, |lambda_n|)");
    auto file = std::make_shared<std::string>();
    auto tol = std::make_shared<double>(kDefaultSpectralTol);
    auto cap = std::make_shared<int>(kDefaultSpectrumCap);
    auto json = std::make_shared<bool>(false);
    cmd->add_option("graph", *file)->required();
    cmd->add_option("--tol", *tol)->check(CLI::PositiveNumber);
    cmd->add_option("--cap", *cap, "Largest n accepted");
    cmd->add_flag("--json", *json);
    cmd->callback([=, &action] {
      action = [=](std::ostream& out) {
        const std::string text = read_file(*file);
        SpectralProfile p = spectrum(parse_graph(text), *tol, *cap);
        if (*json) {
          out << dump(profile_json(p, embedded_seed(text)));
          return;
        }
        out << "n " << p.n << '\n';
        if (p.d) out << "d " << *p.d << '\n';
        out << "lambda " << real(p.lambda) << '\n';
        if (p.ratio) out << "ratio " << real(*p.ratio) << '\n';
        out << "tol " << real(p.tol) << '\n';
      };
    });
  }
  {
    auto* cmd = graph->add_subcommand("check", "Is the graph an (n,d,lambda)-graph with d >= d0 and d/lambda >= C?");
    auto file = std::make_shared<std::string>();
    auto C = std::make_shared<double>(0.0);
    auto d0 = std::make_shared<int>(1);
    auto tol = std::make_shared<double>(kDefaultSpectralTol);
    auto cap = std::make_shared<int>(kDefaultSpectrumCap);
    auto json = std::make_shared<bool>(false);
    cmd->add_option("graph", *file)->required();
    cmd->add_option("--C", *C)->required()->check(CLI::PositiveNumber);
    cmd->add_option("--d0", *d0)->required()->check(CLI::PositiveNumber);
    cmd->add_option("--tol", *tol)->check(CLI::PositiveNumber);
    cmd->add_option("--cap", *cap, "Largest n accepted");
    cmd->add_flag("--json", *json);
    cmd->callback([=, &action] {
      action = [=](std::ostream& out) {
        const std::string text = read_file(*file);
        NdLambdaVerdict v = is_ndlambda(parse_graph(text), *C, *d0, *tol, *cap);
        if (!*json) {
          out << (v.verdict ? "true" : "false") << '\n';
          return;
        }
        Json j;
        j["verdict"] = v.verdict;
        j["C"] = real(*C);
        j["d0"] = integer(*d0);
        j["profile"] = profile_json(v.profile, embedded_seed(text));
        out << dump(j);
      };
    });
  }
}

// ---------------------------------------------------------------- census

void add_census(CLI::App& app, Action& action, const Globals& globals) {
  auto* cmd = app.add_subcommand("census", "Distinct unlabelled spanning trees of a graph");
  auto file = std::make_shared<std::string>();
  auto cap = std::make_shared<std::uint64_t>(0);
  auto eps = std::make_shared<std::string>();
  auto json = std::make_shared<bool>(false);
  auto csv = std::make_shared<bool>(false);
  cmd->add_option("graph", *file)->required();
  cmd->add_option("--cap", *cap, "Labelled spanning-tree cap (default SFC_CAP_TREES or 10^6)");
  cmd->add_option("--epsilon", *eps, "P/Q; adds the (alpha_ref - eps)^n comparison");
  auto* j_flag = cmd->add_flag("--json", *json);
  cmd->add_flag("--csv", *csv)->excludes(j_flag);
  cmd->callback([=, &action, &globals] {
    action = [=, &globals](std::ostream& out) {
      std::optional<Rational> e;
      if (!eps->empty()) e = parse_rational(*eps);
      const std::uint64_t limit = *cap > 0 ? *cap : default_tree_cap();
      SpanningTreeCensus c = unlabelled_census(load_graph(*file), limit, e, globals.threads);
      if (*csv) {
        out << "canon,count\n";
        for (const auto& [code, m] : c.classes) out << code.bytes << ',' << to_decimal(m) << '\n';
        return;
      }
      if (*json) {
        Json j;
        j["n"] = integer(c.n);
        j["labelled_count"] = integer(c.labelled_count);
        j["distinct_unlabelled"] = integer(static_cast<std::int64_t>(c.distinct_unlabelled));
        Json classes = Json::array();
        for (const auto& [code, m] : c.classes) {
          Json entry;
          entry["canon"] = code.bytes;
          entry["count"] = integer(m);
          classes.push_back(entry);
        }
        j["classes"] = classes;
        Json bounds;
        bounds["lee"] = Json{{"threshold", integer(c.lee.threshold)}, {"pass", c.lee.pass}};
        if (c.main) {
          bounds["main"] = Json{{"epsilon", to_string(c.main->epsilon)},
                                {"base", to_string(c.main->base)},
                                {"threshold_digits", integer(static_cast<std::int64_t>(c.main->threshold_digits))},
                                {"threshold", integer(c.main->threshold)},
                                {"pass", c.main->pass}};
        }
        j["bounds"] = bounds;
        j["precision"] = "exact";
        out << dump(j);
        return;
      }
      out << "n " << c.n << '\n'
          << "labelled_count " << to_decimal(c.labelled_count) << '\n'
          << "distinct_unlabelled " << c.distinct_unlabelled << '\n'
          << "lee_threshold " << to_decimal(c.lee.threshold) << (c.lee.pass ? " pass" : " fail") << '\n';
      if (c.main) {
        out << "main_threshold " << to_decimal(c.main->threshold) << " (" << c.main->threshold_digits
            << " digits, base " << to_string(c.main->base) << ")" << (c.main->pass ? " pass" : " fail") << '\n';
      }
    };
  });
}

// ---------------------------------------------------------------- sample

void add_sample(CLI::App& app, Action& action, const Globals& globals) {
  auto* cmd = app.add_subcommand("sample", "Uniform spanning-tree samples grouped by isomorphism class");
  auto file = std::make_shared<std::string>();
  auto samples = std::make_shared<std::uint64_t>(0);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto eps = std::make_shared<std::string>();
  auto exact = std::make_shared<bool>(false);
  auto cap = std::make_shared<std::uint64_t>(0);
  auto root = std::make_shared<int>(0);
  auto json = std::make_shared<bool>(false);
  cmd->add_option("graph", *file)->required();
  cmd->add_option("--samples", *samples);
  cmd->add_option("--seed", *seed);
  cmd->add_option("--epsilon", *eps, "Epsilon for the e^{-(1-eps)n} reference");
  cmd->add_flag("--exact", *exact, "Exact class masses from the census instead of sampling");
  cmd->add_option("--cap", *cap, "Labelled spanning-tree cap for --exact");
  cmd->add_option("--root", *root, "Root vertex for the loop-erased walks");
  cmd->add_flag("--json", *json);
  cmd->callback([=, &action, &globals] {
    if (!*exact && *samples == 0) throw CLI::ValidationError("--samples", "required (positive) unless --exact");
    if (!*exact && eps->empty()) throw CLI::ValidationError("--epsilon", "required unless --exact");
    action = [=, &globals](std::ostream& out) {
      Graph g = load_graph(*file);
      std::optional<double> e;
      if (!eps->empty()) e = parse_rational(*eps).get_d();
      ClassDistribution d;
      if (*exact) {
        d = exact_class_distribution(g, *cap > 0 ? *cap : default_tree_cap());
        if (e) {
          d.epsilon = e;
          d.threshold = std::exp(-(1.0 - *e) * d.n);
        }
      } else {
        d = class_distribution(g, *samples, *seed, *e, globals.threads, *root);
      }
      const std::string max_prob = divide_to_decimal(d.max_class_count, d.total, 12).str();
      if (!*json) {
        out << "n " << d.n << '\n'
            << (d.exact ? "labelled_count " : "samples ") << to_decimal(d.total) << '\n'
            << "classes " << d.counts.size() << '\n'
            << "max_class_prob " << max_prob << '\n';
        if (d.threshold) out << "threshold " << real(*d.threshold) << '\n';
        if (d.seed) out << "seed " << *d.seed << "\ngenerator_id " << d.generator_id << '\n';
        return;
      }
      Json j;
      j["n"] = integer(d.n);
      j["exact"] = d.exact;
      j["total"] = integer(d.total);
      if (d.seed) {
        j["seed"] = integer(static_cast<std::int64_t>(*d.seed));
        j["generator_id"] = d.generator_id;
      }
      if (d.epsilon) j["epsilon"] = real(*d.epsilon);
      if (d.threshold) j["threshold"] = real(*d.threshold);
      j["max_class_count"] = integer(d.max_class_count);
      j["max_class_prob"] = max_prob;
      if (d.threshold) j["max_below_threshold"] = d.max_class_prob <= *d.threshold;
      Json classes = Json::array();
      for (const auto& [code, count] : d.counts) {
        Json entry;
        entry["canon"] = code.bytes;
        entry["count"] = integer(count);
        entry["probability"] = d.frequency_decimal(code);
        classes.push_back(entry);
      }
      j["classes"] = classes;
      j["precision"] = d.exact ? "exact" : "truncated to 12 decimal places";
      out << dump(j);
    };
  });
}

void emit_error(std::ostream& err, std::string_view kind, const std::string& message, const std::string& reason) {
  Json j;
  j["error"] = std::string(kind);
  j["message"] = message;
  j["reason"] = reason.empty() ? Json(nullptr) : Json(reason);
  err << j.dump() << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning trees, tree counting and pseudorandom graphs", "sfc"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--threads", globals.threads, "Worker threads for census and sample")
      ->check(CLI::Range(1, 1024));
  app.add_option("--fixture-dir", globals.fixture_dir, "Pin outputs here on first run, compare afterwards");

  Action action;
  add_count(app, action);
  add_alpha(app, action);
  add_choose_k(app, action);
  add_gen(app, action);
  add_spine(app, action);
  add_graph(app, action);
  add_census(app, action, globals);
  add_sample(app, action, globals);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::ostringstream buffer;
  try {
    action(buffer);
    if (!globals.fixture_dir.empty()) {
      std::vector<std::string> key;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--fixture-dir") {
          ++i;
          continue;
        }
        if (args[i].rfind("--fixture-dir=", 0) == 0) continue;
        key.push_back(args[i]);
      }
      check_fixture(globals.fixture_dir, key, buffer.str());
    }
  } catch (const Error& e) {
    emit_error(err, kind_name(e.kind()), e.what(), e.reason());
    return 1;
  } catch (const std::bad_alloc&) {
    emit_error(err, "ResourceLimit", "out of memory", "");
    return 1;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what(), "");
    return 1;
  }
  out << buffer.str();
  return 0;
}

}  // namespace sfc::cli
