#pragma once

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balpha/balpha.hpp"
#include "balpha/bounds.hpp"
#include "balpha/errors.hpp"
#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"
#include "balpha/sachs.hpp"
#include "balpha/verify.hpp"

namespace balpha {

// Accepts a decimal ("0.3") or a rational ("2/3"); range-checked to [0,1].
inline AlphaValue parse_alpha(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      std::size_t up = 0, uq = 0;
      const std::string ps = text.substr(0, slash);
      const std::string qs = text.substr(slash + 1);
      const long long p = std::stoll(ps, &up);
      const long long q = std::stoll(qs, &uq);
      if (up != ps.size() || uq != qs.size())
        throw std::domain_error("alpha is not a number: " + text);
      if (q == 0) throw std::domain_error("alpha has a zero denominator: " + text);
      return AlphaValue(static_cast<double>(p) / static_cast<double>(q));
    }
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::domain_error("alpha is not a number: " + text);
    return AlphaValue(v);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("alpha is not a number: " + text);
  } catch (const std::out_of_range&) {
    throw std::domain_error("alpha is out of range: " + text);
  }
}

namespace detail {

inline std::optional<std::vector<int>> generator_sizes(const std::string& body) {
  if (body.empty()) return std::nullopt;
  std::vector<int> sizes;
  std::string token;
  for (char c : body + ",") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (c == ',') {
      if (token.empty() || token.size() > 7) return std::nullopt;
      sizes.push_back(std::stoi(token));
      token.clear();
    } else {
      return std::nullopt;
    }
  }
  return sizes;
}

inline std::string strip_comment_and_space(std::string line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  while (!line.empty() && is_space(line.front())) line.erase(line.begin());
  while (!line.empty() && is_space(line.back())) line.pop_back();
  return line;
}

inline std::string g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);  // canonicalize -0
  return buf;
}

inline std::string join_g12(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += g12(values[i]);
  }
  return out;
}

inline std::string f10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

}  // namespace detail

// Generator names: Kn, Ka,b, Cn, Pn, Sn (a star with n leaves), Tp1,p2,...
// (complete multipartite), petersen. Anything else is tried as a file path,
// then as a literal graph6 string.
inline std::optional<Graph> graph_from_generator(const std::string& text) {
  if (text == "petersen") return Graph::petersen();
  if (text.size() < 2) return std::nullopt;
  const char kind = text[0];
  if (kind != 'K' && kind != 'C' && kind != 'P' && kind != 'S' && kind != 'T')
    return std::nullopt;
  const auto sizes = detail::generator_sizes(text.substr(1));
  if (!sizes) return std::nullopt;
  switch (kind) {
    case 'K':
      if (sizes->size() == 1) return Graph::complete((*sizes)[0]);
      if (sizes->size() == 2) return Graph::complete_bipartite((*sizes)[0], (*sizes)[1]);
      throw ParseError("K takes one or two part sizes; use T for more parts");
    case 'C':
      if (sizes->size() != 1) throw ParseError("C takes a single size");
      return Graph::cycle((*sizes)[0]);
    case 'P':
      if (sizes->size() != 1) throw ParseError("P takes a single size");
      return Graph::path((*sizes)[0]);
    case 'S':
      if (sizes->size() != 1) throw ParseError("S takes a single leaf count");
      return Graph::star((*sizes)[0]);
    case 'T':
      return Graph::complete_multipartite(*sizes);
    default:
      return std::nullopt;
  }
}

// Sniffs a file: a first data line holding two integers is an edge list,
// anything else is a graph6 line.
inline Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = detail::strip_comment_and_space(line);
    if (line.empty()) continue;
    std::istringstream probe(line);
    long long a = 0, b = 0;
    if (probe >> a >> b) return parse_edge_list_text(text);
    return parse_graph6(line);
  }
  throw ParseError("the graph file holds no data lines");
}

inline Graph resolve_graph(const std::string& text) {
  if (auto g = graph_from_generator(text)) return *g;
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + text);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
  }
  return parse_graph6(text);
}

namespace detail {

inline int cmd_spectrum(std::ostream& out, const Graph& g, AlphaValue alpha,
                        const Tolerances& tol) {
  out << join_g12(spectrum(g, alpha, tol).values) << "\n";
  return 0;
}

inline int cmd_beta0(std::ostream& out, const Graph& g, const Tolerances& tol) {
  const BetaO beta = beta_o(g, tol);
  out << "beta0 = " << f10(beta.value) << "\n";
  out << "positive semidefinite for alpha in [0, " << f10(beta.value) << "]\n";
  out << "indefinite for alpha in (" << f10(beta.value) << ", 1]\n";
  return 0;
}

inline int cmd_sweep(std::ostream& out, const Graph& g,
                     const std::vector<double>& grid, const Tolerances& tol) {
  out << "alpha,lambda1,yz_bound\n";
  for (double a : grid) {
    out << g12(a) << "," << g12(spectrum(g, a, tol).lambda_max()) << ",";
    if (a == 0.5)
      out << "undefined";
    else
      out << g12(lower_lambda1_yz(g, a));
    out << "\n";
  }
  return 0;
}

inline int cmd_bounds(std::ostream& out, const Graph& g, AlphaValue alpha,
                      const Tolerances& tol) {
  using nlohmann::ordered_json;
  const double a = alpha.get();
  const Spectrum s = spectrum(g, alpha, tol);
  const double l1 = s.lambda_max();
  const double ln = s.lambda_min();
  const bool connected = is_connected(g);
  const auto sides = bipartition(g);
  int pa = 0, pb = 0;
  if (sides)
    for (int side : *sides) (side == 0 ? pa : pb) += 1;

  ordered_json report;
  report["schema"] = 1;
  report["graph"] = {{"n", g.vertex_count()},
                     {"m", g.edge_count()},
                     {"graph6", encode_graph6(g)}};
  report["alpha"] = a;
  report["lambda1"] = l1;
  report["lambda_n"] = ln;
  report["beta0"] = beta_o(g, tol).value;

  auto held = [](const char* name, double value, double gap) {
    ordered_json e;
    e["name"] = name;
    e["value"] = value;
    e["holds"] = gap >= -1e-7;
    e["gap"] = gap;
    return e;
  };
  auto not_applicable = [](const char* name, const char* reason) {
    ordered_json e;
    e["name"] = name;
    e["applicable"] = false;
    e["reason"] = reason;
    return e;
  };

  ordered_json entries = ordered_json::array();

  if (connected) {
    const double lo = lower_lambda1_alpha_delta(g, alpha);
    entries.push_back(held("lambda1_lower_min_degree", lo, l1 - lo));
  } else {
    entries.push_back(
        not_applicable("lambda1_lower_min_degree", "graph is not connected"));
  }

  if (!connected) {
    entries.push_back(
        not_applicable("lambda1_lower_neighborhood", "graph is not connected"));
  } else if (a == 0.5) {
    entries.push_back(
        not_applicable("lambda1_lower_neighborhood", "undefined at alpha = 1/2"));
  } else {
    const double lo = lower_lambda1_yz(g, alpha);
    entries.push_back(held("lambda1_lower_neighborhood", lo, l1 - lo));
  }

  if (connected) {
    const double hi = upper_lambda1_piecewise(g, alpha);
    entries.push_back(held("lambda1_upper_degree", hi, hi - l1));
  } else {
    entries.push_back(
        not_applicable("lambda1_upper_degree", "graph is not connected"));
  }

  if (sides && pa >= 1 && pb >= 1) {
    const double hi = f_alpha(pa, pb, alpha);
    entries.push_back(held("lambda1_upper_bipartite", hi, hi - l1));
  } else {
    entries.push_back(
        not_applicable("lambda1_upper_bipartite", "graph is not bipartite"));
  }

  const int chi = chromatic_number(g).chi;
  if (g.edge_count() >= 1) {
    const double hi = upper_lambda_n_chromatic(g, alpha, chi);
    entries.push_back(held("lambda_n_upper_chromatic", hi, hi - ln));
  } else {
    entries.push_back(
        not_applicable("lambda_n_upper_chromatic", "graph has no edges"));
  }

  if (sides && g.edge_count() >= 1) {
    const double hi = upper_lambda_n_bipartite(g, alpha);
    entries.push_back(held("lambda_n_upper_bipartite", hi, hi - ln));
  } else {
    entries.push_back(
        not_applicable("lambda_n_upper_bipartite", "graph is not bipartite"));
  }

  const BetaDerivedBounds derived = beta_derived_bounds(g, tol);
  entries.push_back(held("chromatic_lower_from_beta0", derived.chromatic_lower,
                         static_cast<double>(chi) - derived.chromatic_lower));
  if (derived.independence_applies) {
    const int independence = independence_number(g).size;
    entries.push_back(held("independence_upper_from_beta0",
                           derived.independence_upper,
                           derived.independence_upper - independence));
  } else {
    entries.push_back(not_applicable("independence_upper_from_beta0",
                                     "proven for regular graphs only"));
  }

  if (is_in_lambda_class(g)) {
    const double value = upper_lambda_n_chromatic(g, alpha, chi);
    int multiplicity = 0;
    for (double v : s.values)
      if (std::fabs(v - value) <= 1e-8 * std::max(1.0, std::fabs(value)))
        ++multiplicity;
    entries.push_back(held("lambda_n_value_multiplicity",
                           static_cast<double>(multiplicity),
                           static_cast<double>(multiplicity - (chi - 1))));
  } else {
    entries.push_back(not_applicable(
        "lambda_n_value_multiplicity",
        "graph is not a balanced equitably joined multipartite graph"));
  }

  report["bounds"] = std::move(entries);
  out << report.dump(2) << "\n";
  return 0;
}

inline int cmd_detpoly(std::ostream& out, const Graph& g, AlphaValue alpha,
                       const Tolerances& tol) {
  const double a = alpha.get();
  out << "graph: n = " << g.vertex_count() << ", m = " << g.edge_count()
      << ", graph6 = " << encode_graph6(g) << "\n";
  out << "alpha = " << g12(a) << "\n";

  const CharPoly direct = char_poly(b_alpha(g, alpha), tol);
  const CharPoly expanded = char_poly_sachs(g, a);
  out << "char poly coefficients (power traces): " << join_g12(direct.coefficients)
      << "\n";
  out << "char poly coefficients (expansion):    "
      << join_g12(expanded.coefficients) << "\n";

  out << "det via elimination: " << g12(determinant(b_alpha(g, alpha), tol)) << "\n";
  if (a == 0.0)
    out << "det via expansion: not defined at alpha = 0\n";
  else
    out << "det via expansion: " << g12(det_b_alpha_sachs(g, a)) << "\n";

  if (a == 1.0)
    out << "adjacency determinant (exact integer): " << det_adjacency_harary(g)
        << "\n";
  return 0;
}

inline int cmd_verify(std::ostream& out, const VerifyOptions& options) {
  const std::vector<CheckResult> results = run_verification(options);
  long long checks = 0;
  long long failures = 0;
  for (const CheckResult& r : results) {
    checks += r.checks;
    failures += r.failures;
    if (r.passed()) {
      out << "PASS " << r.suite << ": " << r.checks << " checks\n";
    } else {
      out << "FAIL " << r.suite << ": " << r.failures << " of " << r.checks
          << " checks failed\n";
      for (const std::string& note : r.notes) out << "  counterexample " << note << "\n";
    }
  }
  if (failures == 0) {
    out << "all suites passed (" << checks << " checks)\n";
    return 0;
  }
  out << failures << " failing checks across " << checks << "\n";
  return 1;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"spectra and bounds for the convex family "
               "alpha*A(G) + (1-alpha)*L(G)"};
  app.name("balpha");
  app.require_subcommand(1);

  std::string graph_spec;
  std::string alpha_text;
  std::vector<std::string> grid_texts;

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "print the eigenvalues");
  c_spectrum->add_option("graph", graph_spec, "generator, file, or graph6")->required();
  c_spectrum->add_option("alpha", alpha_text, "alpha in [0,1], decimal or p/q")
      ->required();

  CLI::App* c_beta0 = app.add_subcommand(
      "beta0", "largest alpha keeping the matrix positive semidefinite");
  c_beta0->add_option("graph", graph_spec, "generator, file, or graph6")->required();

  CLI::App* c_sweep = app.add_subcommand(
      "sweep", "CSV of lambda_1 and its neighborhood lower bound over a grid");
  c_sweep->add_option("graph", graph_spec, "generator, file, or graph6")->required();
  c_sweep
      ->add_option("--grid", grid_texts,
                   "comma-separated alpha values (default 0,0.1,...,1 without 0.5)")
      ->delimiter(',');

  CLI::App* c_bounds =
      app.add_subcommand("bounds", "JSON report checking every bound at one alpha");
  c_bounds->add_option("graph", graph_spec, "generator, file, or graph6")->required();
  c_bounds->add_option("alpha", alpha_text, "alpha in [0,1], decimal or p/q")
      ->required();

  CLI::App* c_detpoly = app.add_subcommand(
      "detpoly", "determinant and characteristic polynomial by two methods");
  c_detpoly->add_option("graph", graph_spec, "generator, file, or graph6")->required();
  c_detpoly->add_option("alpha", alpha_text, "alpha in [0,1], decimal or p/q")
      ->required();

  VerifyOptions vo;
  CLI::App* c_verify =
      app.add_subcommand("verify", "run the property suites over a graph corpus");
  c_verify->add_option("--max-n", vo.exhaustive_max_n,
                       "exhaustive connected corpus up to this order (0..7)");
  c_verify->add_option("--random", vo.random_graphs, "number of random graphs");
  c_verify->add_option("--random-max-n", vo.random_max_n,
                       "largest random graph order");
  c_verify->add_option("--seed", vo.seed, "random corpus seed");
  c_verify->add_option("--grid-denominator", vo.grid_denominator,
                       "alpha grid step is 1/this");
  c_verify->add_flag("--inject-fault", vo.inject_fault)->group("");

  std::vector<const char*> argv;
  argv.push_back("balpha");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const Tolerances tol = default_tolerances();
  try {
    if (c_verify->parsed()) return detail::cmd_verify(out, vo);

    const Graph g = resolve_graph(graph_spec);
    if (c_beta0->parsed()) return detail::cmd_beta0(out, g, tol);
    if (c_sweep->parsed()) {
      std::vector<double> grid;
      if (grid_texts.empty()) {
        for (int k = 0; k <= 10; ++k)
          if (k != 5) grid.push_back(static_cast<double>(k) / 10.0);
      } else {
        for (const std::string& t : grid_texts) grid.push_back(parse_alpha(t).get());
      }
      return detail::cmd_sweep(out, g, grid, tol);
    }

    const AlphaValue alpha = parse_alpha(alpha_text);
    if (c_spectrum->parsed()) return detail::cmd_spectrum(out, g, alpha, tol);
    if (c_bounds->parsed()) return detail::cmd_bounds(out, g, alpha, tol);
    if (c_detpoly->parsed()) return detail::cmd_detpoly(out, g, alpha, tol);
    err << "error: no command selected\n";
    return 2;
  } catch (const IsolatedVertexError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return (e.kind == BudgetError::Kind::coloring ||
            e.kind == BudgetError::Kind::independence)
               ? 5
               : 6;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace balpha
