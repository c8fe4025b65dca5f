#ifndef SEMIORTHO_TOOLS_CLI_APP_HPP
#define SEMIORTHO_TOOLS_CLI_APP_HPP

// Command dispatch for the semiortho tool, kept in a header so the test suite
// can drive it in-process.
//
// Exit codes: 0 success, 1 bad input (malformed JSON, invalid arguments,
// non-unimodular forms, ...), 2 a property or internal consistency check failed.

#include <semiortho/json_io.hpp>
#include <semiortho/semiortho.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace semiortho::cli {

enum class Format { Json, Pretty };

struct Config {
  std::string file;
  std::string inline_json;
  Format format = Format::Json;
  std::string word;
  std::size_t n = 2;
  std::string basis = "adams";
  std::vector<std::string> adams;
  std::vector<std::string> nabla;
  std::vector<std::string> triple;
  long height = 100;
  std::size_t max_nodes = 10'000;
  unsigned threads = 1;
  std::string suite = "all";
  std::uint64_t seed = SuiteOptions{}.seed;
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PropertyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json read_input(const Config& cfg) {
  if (cfg.file.empty() == cfg.inline_json.empty()) throw InputError("give exactly one of --file or --inline");
  std::string text = cfg.inline_json;
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw InputError("cannot open " + cfg.file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline void print_matrix(std::ostream& out, const RatMatrix& m) {
  std::size_t width = 1;
  for (const auto& x : m.entries()) width = std::max(width, to_fraction_string(x).size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j ? "  " : "") << std::setw(static_cast<int>(width)) << to_fraction_string(m(i, j));
    }
    out << '\n';
  }
}

inline void emit(std::ostream& out, const Config& cfg, const Json& j) {
  if (cfg.format == Format::Pretty) {
    out << j.dump(2) << '\n';
  } else {
    out << j.dump() << '\n';
  }
}

inline MarkovTriple parse_triple(const std::vector<std::string>& v) {
  if (v.size() != 3) throw InputError("expected three integers a b c");
  return {parse_integer(v[0]), parse_integer(v[1]), parse_integer(v[2])};
}

inline std::size_t effective_max_nodes(std::size_t requested) {
  if (const char* env = std::getenv("SEMIORTHO_MAX_NODES")) {
    try {
      std::size_t cap = std::stoul(env);
      if (cap > 0 && cap < requested) return cap;
    } catch (const std::exception&) {
      throw InputError(std::string("SEMIORTHO_MAX_NODES is not a number: ") + env);
    }
  }
  return requested;
}

inline int cmd_classify(const Config& cfg, std::ostream& out) {
  auto lattice = lattice_from_json(read_input(cfg));
  emit(out, cfg, report_to_json(detect_type(lattice)));
  return 0;
}

inline int cmd_mutate(const Config& cfg, std::ostream& out) {
  auto c = collection_from_json(read_input(cfg));
  auto w = BraidWord::parse(cfg.word);
  auto result = apply_braid(c, w);
  Json j = collection_to_json(result);
  j["word"] = w.to_string();
  emit(out, cfg, j);
  return 0;
}

inline int cmd_k0_gram(const Config& cfg, std::ostream& out) {
  auto basis = parse_k0_basis(cfg.basis);
  auto g = gram_matrix(cfg.n, basis);
  if (cfg.format == Format::Pretty) {
    print_matrix(out, g);
  } else {
    emit(out, cfg, Json{{"n", cfg.n}, {"basis", to_string(basis)}, {"gram", matrix_to_json(g)}});
  }
  return 0;
}

inline int cmd_k0_rank(const Config& cfg, std::ostream& out) {
  if (cfg.adams.empty() == cfg.nabla.empty()) throw InputError("give exactly one of --adams or --nabla");
  const auto& raw = cfg.adams.empty() ? cfg.nabla : cfg.adams;
  if (raw.size() != cfg.n + 1) throw InputError("expected " + std::to_string(cfg.n + 1) + " coordinates");
  std::vector<Rational> coords;
  for (const auto& s : raw) coords.push_back(parse_rational(s));
  Rational rk;
  bool integral;
  if (!cfg.adams.empty()) {
    auto a = from_adams(cfg.n, coords);
    rk = rank(a);
    integral = integrality_test(a);
  } else {
    NablaSeries a(cfg.n, coords);
    rk = rank(a);
    integral = a.is_integral();
  }
  emit(out, cfg, Json{{"n", cfg.n}, {"rank", rational_to_json(rk)}, {"integral", integral}});
  return 0;
}

inline int cmd_k0_classify(const Config& cfg, std::ostream& out) {
  auto basis = parse_k0_basis(cfg.basis);
  Json j = report_to_json(detect_type(gram_matrix(cfg.n, basis)));
  j["basis"] = to_string(basis);
  emit(out, cfg, j);
  return 0;
}

inline int cmd_markov_check(const Config& cfg, std::ostream& out) {
  auto t = parse_triple(cfg.triple);
  emit(out, cfg,
       Json{{"triple", triple_to_json(t)},
            {"trace", integer_to_json(trace_kappa_rank3(t))},
            {"is_markov", is_markov(t)},
            {"kind", to_string(classify_rank3(t.gram()).kind)}});
  return 0;
}

inline int cmd_markov_reduce(const Config& cfg, std::ostream& out) {
  auto trace = reduce_to_canonical(parse_triple(cfg.triple));
  replay_trace(trace);
  emit(out, cfg, trace_to_json(trace));
  return 0;
}

inline int cmd_orbit(const Config& cfg, std::ostream& out) {
  auto c = collection_from_json(read_input(cfg));
  if (cfg.height < 0) throw InputError("--height must be non-negative");
  OrbitBounds b;
  b.height_bound = Integer(cfg.height);
  b.max_nodes = effective_max_nodes(cfg.max_nodes);
  b.threads = cfg.threads;
  emit(out, cfg, orbit_report_to_json(orbit_search(c, b)));
  return 0;
}

inline int cmd_verify(const Config& cfg, std::ostream& out) {
  SuiteOptions opt;
  opt.seed = cfg.seed;
  auto results = run_suites(cfg.suite, opt);
  Json suites = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
    suites.push_back(Json{{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"messages", r.messages}});
  }
  emit(out, cfg, Json{{"suites", suites}, {"passed", ok}});
  return ok ? 0 : 2;
}

/// Parses `args` (without the program name) and runs one command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with unimodular bilinear forms, mutations and K0(P^n)", "semiortho"};
  app.require_subcommand(1);
  Config cfg;
  std::string format = "json";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--file", cfg.file, "JSON input file");
    sub->add_option("--inline", cfg.inline_json, "JSON input given on the command line");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  };

  auto* classify = app.add_subcommand("classify", "Classify a lattice form by the Jordan structure of kappa");
  add_input(classify);
  add_format(classify);

  auto* mutate = app.add_subcommand("mutate", "Apply a braid word such as \"L1 R2\" to a collection");
  add_input(mutate);
  add_format(mutate);
  mutate->add_option("--word", cfg.word, "braid word; letters L<n>/R<n> act on (e_{n-1}, e_n)");

  auto* k0 = app.add_subcommand("k0", "Computations in K0(P^n)");
  k0->require_subcommand(1);
  auto* k0_gram = k0->add_subcommand("gram", "Exact Gram matrix in a basis");
  auto* k0_rank = k0->add_subcommand("rank", "Rank of an operator given by coordinates");
  auto* k0_classify = k0->add_subcommand("classify", "Classify the form of K0(P^n)");
  for (auto* sub : {k0_gram, k0_rank, k0_classify}) {
    sub->add_option("-n", cfg.n, "dimension of the projective space")->check(CLI::Range(0, 64));
    add_format(sub);
  }
  for (auto* sub : {k0_gram, k0_classify}) {
    sub->add_option("--basis", cfg.basis, "adams, binomial, twists or xi");
  }
  k0_rank->add_option("--adams", cfg.adams, "Adams coordinates a_0 .. a_n");
  k0_rank->add_option("--nabla", cfg.nabla, "nabla coordinates x_0 .. x_n");

  auto* markov = app.add_subcommand("markov", "Rank-3 forms and the tripled Markov equation");
  markov->require_subcommand(1);
  auto* m_check = markov->add_subcommand("check", "Trace of kappa and the Markov equation");
  auto* m_reduce = markov->add_subcommand("reduce", "Reduce a solution to (3,3,3)");
  for (auto* sub : {m_check, m_reduce}) {
    sub->add_option("triple", cfg.triple, "a b c")->expected(3)->required()->allow_extra_args(false);
    add_format(sub);
  }

  auto* orbit = app.add_subcommand("orbit", "Bounded search of the mutation orbit of a collection");
  add_input(orbit);
  add_format(orbit);
  orbit->add_option("--height", cfg.height, "largest |Gram entry| expanded");
  orbit->add_option("--max-nodes", cfg.max_nodes, "node budget (also capped by SEMIORTHO_MAX_NODES)");
  orbit->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 256));

  auto* verify = app.add_subcommand("verify", "Run randomized invariant suites");
  add_format(verify);
  verify->add_option("--suite", cfg.suite, "braid, canonical, k0, markov, isometry, linalg or all");
  verify->add_option("--seed", cfg.seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  cfg.format = format == "pretty" ? Format::Pretty : Format::Json;

  try {
    if (classify->parsed()) return cmd_classify(cfg, out);
    if (mutate->parsed()) return cmd_mutate(cfg, out);
    if (k0_gram->parsed()) return cmd_k0_gram(cfg, out);
    if (k0_rank->parsed()) return cmd_k0_rank(cfg, out);
    if (k0_classify->parsed()) return cmd_k0_classify(cfg, out);
    if (m_check->parsed()) return cmd_markov_check(cfg, out);
    if (m_reduce->parsed()) return cmd_markov_reduce(cfg, out);
    if (orbit->parsed()) return cmd_orbit(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error and out_of_range derive from logic_error
    // but signal bad input.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    err << "property violation: " << e.what() << '\n';
    return 2;
  } catch (const PropertyViolation& e) {
    err << "property violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no command given\n";
  return 1;
}

}  // namespace semiortho::cli

#endif  // SEMIORTHO_TOOLS_CLI_APP_HPP
