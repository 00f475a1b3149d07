#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gralg/error.hpp"
#include "gralg/graph.hpp"
#include "gralg/hilbert.hpp"
#include "gralg/quadratic.hpp"
#include "gralg/series.hpp"
#include "gralg/sufficiency.hpp"
#include "gralg/vieta.hpp"

namespace gralg::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Settings {
  std::string spec;
  std::string graph_file;
  std::size_t vertex_cap = 100000;
  std::string format = "text";

  int order = 10;
  std::string method = "all";
  std::string chain_budget = "10000000";
  std::string check = "valid";
  int degree = 2;
  std::size_t basis_cap = 1000000;
  std::uint64_t coordinate_cap = 5000000;
  std::size_t path_budget = 1000000;

  int n = 3;
  std::size_t dim = 3;
  std::uint64_t seed = 1;
  int attempts = 1000;

  std::string edges;
  bool exhaustive = false;
};

struct Input {
  GraphSpec spec;
  LayeredGraph graph;
  std::string name;
  /// n when the graph is boolean(n), else 0.
  int boolean_n = 0;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format " + s);
}

Input load(const Settings& s) {
  if (s.spec.empty() == s.graph_file.empty()) throw std::invalid_argument("give exactly one of --spec or --graph-file");
  Input in;
  in.spec = s.spec.empty() ? GraphSpec::file(s.graph_file) : parse_graph_spec(s.spec);
  in.graph = build_graph(in.spec, BuildOptions{s.vertex_cap});
  in.name = to_string(in.spec);
  if (in.spec.family == GraphSpec::Family::boolean) in.boolean_n = in.spec.n;
  return in;
}

std::optional<ClosedFormSpec> closed_form_for(const GraphSpec& spec, bool dual) {
  switch (spec.family) {
    case GraphSpec::Family::boolean:
      return dual ? ClosedFormSpec::make_dual_qn(spec.n) : ClosedFormSpec::make_qn(spec.n);
    case GraphSpec::Family::subspace:
      return dual ? ClosedFormSpec::make_dual_subspace(spec.n, spec.q) : ClosedFormSpec::make_subspace(spec.n, spec.q);
    case GraphSpec::Family::complete:
      return dual ? ClosedFormSpec::make_dual_complete(spec.levels) : ClosedFormSpec::make_complete(spec.levels);
    default:
      return std::nullopt;
  }
}

json series_json(const TruncatedSeries& s) { return json::parse(to_json(s)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string inline_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += to_plain_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

std::string path_string(const LayeredGraph& g, const Path& p) {
  std::string out;
  for (EdgeIndex e : p) out += (out.empty() ? "" : " ") + g.edge_label(e);
  return out;
}

std::string edges_string(const LayeredGraph& g, const EdgeSet& s) {
  std::string out;
  for (EdgeIndex e : s) out += (out.empty() ? "" : ", ") + g.edge_label(e);
  return out;
}

// graph ---------------------------------------------------------------------

void cmd_graph(const Settings& s, std::ostream& out) {
  const Input in = load(s);
  const auto& g = in.graph;
  const auto report = validate(g);
  std::vector<std::pair<std::string, std::string>> rows{
      {"graph", in.name},
      {"vertices", std::to_string(g.vertex_count())},
      {"edges", std::to_string(g.edge_count())},
      {"levels", std::to_string(g.max_level())},
  };
  json j;
  j["graph"] = in.name;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["levels"] = g.max_level();
  for (const auto& check : split_list(s.check)) {
    if (check == "valid") {
      rows.emplace_back("valid", yes_no(report.ok));
      for (const auto& f : report.failures) rows.emplace_back("violation", f);
      j["valid"] = report.ok;
      j["violations"] = report.failures;
    } else if (check == "uniform") {
      const auto u = is_uniform(g);
      rows.emplace_back("uniform", yes_no(u.uniform));
      if (u.witness) rows.emplace_back("uniform-witness", g.key(*u.witness));
      j["uniform"] = u.uniform;
      if (u.witness) j["uniform_witness"] = g.key(*u.witness);
    } else if (check == "modular") {
      const auto m = is_modular(g);
      rows.emplace_back("modular", yes_no(m.modular));
      if (m.witness) {
        rows.emplace_back("modular-witness", "clause " + std::to_string(m.failed_clause) + ": " +
                                                 g.edge_label(m.witness->first) + ", " +
                                                 g.edge_label(m.witness->second));
      }
      j["modular"] = m.modular;
      if (m.witness) {
        j["modular_witness"] = {{"clause", m.failed_clause},
                                {"edges", {g.edge_label(m.witness->first), g.edge_label(m.witness->second)}}};
      }
    } else if (check == "dump") {
      j["graph_json"] = json::parse(write_graph_json(g));
      rows.emplace_back("json", write_graph_json(g));
    } else {
      throw std::invalid_argument("unknown check " + check + " (valid, uniform, modular, dump)");
    }
  }
  switch (parse_format(s.format)) {
    case Format::json:
      out << j.dump(2) << "\n";
      break;
    case Format::csv:
      out << "key,value\n";
      for (const auto& [k, v] : rows) out << k << ",\"" << v << "\"\n";
      break;
    case Format::text:
      for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
      break;
  }
}

// hilbert -------------------------------------------------------------------

void cmd_hilbert(const Settings& s, std::ostream& out) {
  const Input in = load(s);
  HilbertOptions options;
  options.chain_budget = BigInt(s.chain_budget);
  std::vector<std::pair<std::string, HilbertMethod>> methods;
  if (s.method == "all" || s.method == "zeta") methods.emplace_back("zeta", HilbertMethod::zeta);
  if (s.method == "all" || s.method == "chains") methods.emplace_back("chains", HilbertMethod::chains);
  if (s.method == "all" || s.method == "basis") methods.emplace_back("basis", HilbertMethod::basis);
  if (methods.empty()) throw std::invalid_argument("unknown method " + s.method + " (all, zeta, chains, basis)");

  std::vector<std::pair<std::string, TruncatedSeries>> series;
  std::vector<std::string> skipped;
  for (const auto& [name, method] : methods) {
    try {
      series.emplace_back(name, hilbert_series(in.graph, s.order, method, options));
    } catch (const BudgetExceeded& e) {
      if (s.method != "all") throw;
      skipped.push_back(name + ": skipped (" + e.what() + ")");
    }
  }
  bool agree = true;
  for (const auto& [name, h] : series) agree = agree && h == series.front().second;

  std::optional<TruncatedSeries> closed;
  if (auto cf = closed_form_for(in.spec, false)) closed = closed_form(*cf, s.order);
  const bool closed_match = closed && !series.empty() && *closed == series.front().second;

  switch (parse_format(s.format)) {
    case Format::json: {
      json j;
      j["graph"] = in.name;
      j["order"] = s.order;
      j["series"] = json::object();
      for (const auto& [name, h] : series) j["series"][name] = series_json(h);
      j["skipped"] = skipped;
      if (series.size() > 1) j["agree"] = agree;
      if (closed) {
        j["closed_form"] = series_json(*closed);
        j["closed_form_match"] = closed_match;
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      out << "degree";
      for (const auto& [name, h] : series) out << "," << name;
      if (closed) out << ",closed_form";
      out << "\n";
      for (int d = 0; d <= s.order; ++d) {
        out << d;
        for (const auto& [name, h] : series) out << "," << to_plain_string(h[d]);
        if (closed) out << "," << to_plain_string((*closed)[d]);
        out << "\n";
      }
      break;
    }
    case Format::text: {
      out << "graph: " << in.name << "\n";
      out << "order: " << s.order << "\n";
      for (const auto& [name, h] : series) out << name << ": " << to_human(h) << "\n";
      for (const auto& line : skipped) out << line << "\n";
      if (series.size() > 1) out << (agree ? "AGREE" : "DISAGREE") << "\n";
      if (closed) {
        out << "closed-form: " << to_human(*closed) << "\n";
        out << "closed-form " << (closed_match ? "MATCH" : "MISMATCH") << "\n";
      }
      break;
    }
  }
}

// basis ---------------------------------------------------------------------

void cmd_basis(const Settings& s, std::ostream& out) {
  const Input in = load(s);
  const auto words = basis_words(in.graph, s.degree, s.basis_cap);
  switch (parse_format(s.format)) {
    case Format::json: {
      json j;
      j["graph"] = in.name;
      j["degree"] = s.degree;
      j["count"] = words.size();
      j["words"] = json::array();
      for (const auto& w : words) {
        json letters = json::array();
        for (const auto& l : w.letters) letters.push_back({in.graph.key(l.vertex), l.k});
        j["words"].push_back(std::move(letters));
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "index,word\n";
      for (std::size_t i = 0; i < words.size(); ++i) out << i << ",\"" << to_string(in.graph, words[i]) << "\"\n";
      break;
    case Format::text:
      out << "graph: " << in.name << "\n";
      out << "degree: " << s.degree << "\n";
      for (const auto& w : words) out << to_string(in.graph, w) << "\n";
      out << "count: " << words.size() << "\n";
      break;
  }
}

// dual ----------------------------------------------------------------------

KoszulOptions koszul_options(const Settings& s) {
  KoszulOptions o;
  o.relations.path_budget = s.path_budget;
  o.quadratic.coordinate_cap = s.coordinate_cap;
  return o;
}

void cmd_dual(const Settings& s, std::ostream& out) {
  const Input in = load(s);
  const auto& g = in.graph;
  const auto options = koszul_options(s);
  const auto h = hilbert_series(g, s.order, HilbertMethod::zeta);
  const auto rel = relations_quadratic(g, RelationMode::path_pairs, options.relations);
  const auto dual_dims = graded_dims(rel, s.order, AlgebraSide::dual, options.quadratic);
  TruncatedSeries dual(s.order);
  for (int k = 0; k <= s.order; ++k) dual[k] = static_cast<unsigned long>(dual_dims[static_cast<std::size_t>(k)]);
  const auto predicted = koszul_dual_series(h);
  const bool identity = predicted == dual;
  const auto cmp = compare_dual_presentations(g, std::max(3, s.order), options);

  std::optional<DualFormCheck> form;
  if (auto cf = closed_form_for(in.spec, true)) form = dual_form_check(*cf, s.order);

  switch (parse_format(s.format)) {
    case Format::json: {
      json j;
      j["graph"] = in.name;
      j["order"] = s.order;
      j["hilbert"] = series_json(h);
      j["relations_rank"] = rel.rank();
      j["dual"] = series_json(dual);
      j["koszul_prediction"] = series_json(predicted);
      j["koszul_identity"] = identity;
      if (form) {
        j["closed_form_printed"] = series_json(form->printed);
        j["closed_form_printed_match"] = form->printed_matches;
        j["closed_form_corrected"] = series_json(form->t_corrected);
        j["closed_form_corrected_match"] = form->corrected_matches;
      }
      j["vertex_presentation_dims"] = cmp.presentation_dims;
      j["dual_dims"] = cmp.dual_dims;
      j["cubes_zero"] = cmp.all_cubes_zero;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      out << "degree,hilbert,dual,koszul_prediction,vertex_presentation\n";
      for (int k = 0; k <= s.order; ++k) {
        out << k << "," << to_plain_string(h[k]) << "," << to_plain_string(dual[k]) << ","
            << to_plain_string(predicted[k]) << "," << cmp.presentation_dims[static_cast<std::size_t>(k)] << "\n";
      }
      break;
    }
    case Format::text: {
      out << "graph: " << in.name << "\n";
      out << "H_A: " << to_human(h) << "\n";
      out << "relations: rank " << rel.rank() << " on " << rel.generator_count() << " generators\n";
      out << "H_A!: " << to_human(dual) << "\n";
      out << "1/H_A(-t): " << to_human(predicted) << "\n";
      out << "koszul identity " << (identity ? "HOLDS" : "FAILS") << " through order " << s.order << "\n";
      if (form) {
        out << "closed-form dual (printed): " << to_human(form->printed) << " "
            << (form->printed_matches ? "MATCH" : "MISMATCH") << "\n";
        if (!(form->t_corrected == form->printed)) {
          out << "closed-form dual (t-corrected): " << to_human(form->t_corrected) << " "
              << (form->corrected_matches ? "MATCH" : "MISMATCH") << "\n";
        }
      }
      out << "vertex presentation on all " << g.vertex_count() << " vertices vs dual on "
          << rel.generator_count() << " positive vertices:\n";
      for (std::size_t k = 0; k < cmp.presentation_dims.size(); ++k) {
        const auto b = cmp.presentation_dims[k];
        const auto a = cmp.dual_dims[k];
        out << "  degree " << k << ": B=" << b << " A!=" << a << (a == b ? " EQUAL" : " DIFFER") << "\n";
      }
      out << "v^3 = 0 in B for every vertex: " << yes_no(cmp.all_cubes_zero) << "\n";
      break;
    }
  }
}

// koszul --------------------------------------------------------------------

void cmd_koszul(const Settings& s, std::ostream& out) {
  const Input in = load(s);
  const auto r = koszul_check(in.graph, s.order, koszul_options(s));
  switch (parse_format(s.format)) {
    case Format::json: {
      json j;
      j["graph"] = in.name;
      j["order"] = s.order;
      j["algebra"] = series_json(r.algebra_series);
      j["dual"] = series_json(r.dual_series);
      j["engine"] = series_json(r.engine_series);
      j["product"] = series_json(r.product);
      j["uniform"] = r.uniform;
      j["engine_agrees"] = r.engine_agrees;
      j["pass"] = r.pass;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "degree,algebra,dual,engine,product,identity\n";
      for (const auto& d : r.degrees) {
        out << d.degree << "," << d.algebra << "," << d.dual << "," << to_plain_string(d.engine) << ","
            << to_plain_string(d.product) << "," << (d.identity_holds ? "PASS" : "FAIL") << "\n";
      }
      break;
    case Format::text:
      out << "graph: " << in.name << "\n";
      out << "uniform: " << yes_no(r.uniform) << "\n";
      for (const auto& d : r.degrees) {
        out << "degree " << d.degree << ": A=" << d.algebra << " A!=" << d.dual
            << " engine=" << to_plain_string(d.engine) << " product=" << to_plain_string(d.product) << " "
            << (d.identity_holds ? "PASS" : "FAIL") << "\n";
      }
      out << "engine agreement: " << yes_no(r.engine_agrees) << "\n";
      out << "koszul: " << (r.pass ? "PASS" : "FAIL") << "\n";
      break;
  }
}

// vieta ---------------------------------------------------------------------

void cmd_vieta(const Settings& s, std::ostream& out) {
  SamplingOptions sampling;
  sampling.attempts = s.attempts;
  const auto system = random_generic_roots(s.n, s.dim, s.seed, sampling);

  std::vector<int> ordering(static_cast<std::size_t>(s.n));
  for (int i = 0; i < s.n; ++i) ordering[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Factorization> factorizations;
  do {
    factorizations.push_back(factorization_from_ordering(system, ordering));
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  const auto& reference = factorizations.front().product;
  const bool agree = std::all_of(factorizations.begin(), factorizations.end(),
                                 [&](const Factorization& f) { return f.product == reference; });
  std::vector<bool> right_roots;
  for (int i = 1; i <= s.n; ++i) right_roots.push_back(reference.right_evaluate(system.root(i)).is_zero());
  const auto relations = check_all_relations_11(system);
  const bool relations_ok = std::all_of(relations.begin(), relations.end(),
                                        [](const Relations11Check& c) { return c.sum_holds && c.product_holds; });

  switch (parse_format(s.format)) {
    case Format::json: {
      json j;
      j["n"] = s.n;
      j["dim"] = s.dim;
      j["seed"] = s.seed;
      j["roots"] = json::array();
      for (const auto& x : system.roots()) j["roots"].push_back(json::parse(to_json(x)));
      j["factorizations"] = json::array();
      for (const auto& f : factorizations) {
        json fj;
        fj["ordering"] = f.ordering;
        fj["labels"] = f.labels;
        fj["pseudo_roots"] = json::array();
        for (const auto& x : f.pseudo_roots) fj["pseudo_roots"].push_back(json::parse(to_json(x)));
        fj["coefficients"] = json::array();
        for (const auto& c : f.product.coefficients()) fj["coefficients"].push_back(json::parse(to_json(c)));
        j["factorizations"].push_back(std::move(fj));
      }
      j["orderings_agree"] = agree;
      j["right_roots"] = right_roots;
      j["relations"] = json::array();
      for (const auto& c : relations) {
        j["relations"].push_back({{"A", c.a}, {"i", c.i}, {"j", c.j}, {"sum", c.sum_holds}, {"product", c.product_holds}});
      }
      j["relations_hold"] = relations_ok;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "kind,item,result\n";
      for (const auto& f : factorizations) {
        std::string ord;
        for (int i : f.ordering) ord += std::to_string(i);
        out << "factorization," << ord << "," << (f.product == reference ? "AGREE" : "DISAGREE") << "\n";
      }
      for (int i = 1; i <= s.n; ++i) {
        out << "right_root,x" << i << "," << (right_roots[static_cast<std::size_t>(i - 1)] ? "PASS" : "FAIL") << "\n";
      }
      for (const auto& c : relations) {
        const std::string item = "\"" + pseudo_root_label(c.a, c.i) + " " + std::to_string(c.j) + "\"";
        out << "relation_sum," << item << "," << (c.sum_holds ? "PASS" : "FAIL") << "\n";
        out << "relation_product," << item << "," << (c.product_holds ? "PASS" : "FAIL") << "\n";
      }
      break;
    case Format::text: {
      out << "roots: n=" << s.n << " dim=" << s.dim << " seed=" << s.seed << "\n";
      for (int i = 1; i <= s.n; ++i) out << "  x" << i << " = " << inline_matrix(system.root(i)) << "\n";
      for (const auto& f : factorizations) {
        out << "ordering";
        for (int i : f.ordering) out << " " << i;
        out << ": P(t) =";
        for (auto it = f.labels.rbegin(); it != f.labels.rend(); ++it) out << " (t - x[" << *it << "])";
        out << " " << (f.product == reference ? "AGREE" : "DISAGREE") << "\n";
        for (std::size_t k = 0; k < f.labels.size(); ++k) {
          out << "  x[" << f.labels[k] << "] = " << inline_matrix(f.pseudo_roots[k]) << "\n";
        }
      }
      out << "coefficients:\n";
      const auto& coeffs = reference.coefficients();
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << "  a" << k << " = " << inline_matrix(coeffs[k]) << "\n";
      out << "all orderings agree: " << yes_no(agree) << "\n";
      for (int i = 1; i <= s.n; ++i) {
        out << "P(x" << i << ") = 0: " << yes_no(right_roots[static_cast<std::size_t>(i - 1)]) << "\n";
      }
      for (const auto& c : relations) {
        out << "relations A={";
        for (std::size_t k = 0; k < c.a.size(); ++k) out << (k ? "," : "") << c.a[k];
        out << "} i=" << c.i << " j=" << c.j << ": sum " << (c.sum_holds ? "PASS" : "FAIL") << ", product "
            << (c.product_holds ? "PASS" : "FAIL") << "\n";
      }
      out << "relations: " << (relations_ok ? "PASS" : "FAIL") << "\n";
      break;
    }
  }
}

// sufficient / closure --------------------------------------------------------

std::vector<PseudoRootLabel> labels_of(const Input& in, const EdgeSet& s) {
  std::vector<PseudoRootLabel> labels;
  for (EdgeIndex e : s) labels.push_back(label_for_edge(in.graph, e));
  return labels;
}

void cmd_exhaustive(const Input& in, const Settings& s, std::ostream& out) {
  if (in.boolean_n < 1 || in.boolean_n > 3) throw std::invalid_argument("--exhaustive needs --spec boolean:n with n <= 3");
  const auto table = exhaustive_table(in.graph, in.boolean_n);
  switch (parse_format(s.format)) {
    case Format::json: {
      json j = json::array();
      for (const auto& r : table) {
        j.push_back({{"distinct_i", r.distinct_i},
                     {"connected", r.connected},
                     {"ample", r.ample},
                     {"total", r.total},
                     {"sufficient", r.sufficient}});
      }
      out << json{{"graph", in.name}, {"size", in.boolean_n}, {"table", j}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "distinct_i,connected,ample,total,sufficient\n";
      for (const auto& r : table) {
        out << yes_no(r.distinct_i) << "," << yes_no(r.connected) << "," << yes_no(r.ample) << "," << r.total << ","
            << r.sufficient << "\n";
      }
      break;
    case Format::text:
      out << "graph: " << in.name << "\n";
      out << "edge sets of size " << in.boolean_n << "\n";
      for (const auto& r : table) {
        out << "distinct-i=" << yes_no(r.distinct_i) << " connected=" << yes_no(r.connected)
            << " ample=" << yes_no(r.ample) << ": " << r.sufficient << "/" << r.total << " sufficient\n";
      }
      break;
  }
}

void cmd_sufficient(const Settings& s, std::ostream& out) {
  const Input in = load(s);
  if (s.exhaustive) {
    cmd_exhaustive(in, s, out);
    return;
  }
  const auto& g = in.graph;
  const EdgeSet edges = parse_edge_list(g, s.edges, in.boolean_n);
  const auto ample = is_ample(g, edges);
  const bool connected = is_connected_edgeset(g, edges);
  const auto witness = is_sufficient(g, edges);
  std::optional<bool> distinct;
  std::vector<PseudoRootLabel> labels;
  if (in.boolean_n > 0) {
    labels = labels_of(in, edges);
    std::set<int> is;
    for (const auto& l : labels) is.insert(l.i);
    distinct = is.size() == labels.size();
  }
  switch (parse_format(s.format)) {
    case Format::json: {
      json j;
      j["graph"] = in.name;
      j["edges"] = json::array();
      for (EdgeIndex e : edges) j["edges"].push_back(g.edge_label(e));
      if (in.boolean_n > 0) {
        j["labels"] = json::array();
        for (const auto& l : labels) j["labels"].push_back(to_string(l));
        j["distinct_i"] = *distinct;
      }
      j["ample"] = ample.ample;
      if (ample.witness) j["ample_witness"] = {{"clause", ample.failed_clause}, {"vertex", g.key(*ample.witness)}};
      j["connected"] = connected;
      j["sufficient"] = witness.has_value();
      if (witness) {
        j["witness"] = json::array();
        for (EdgeIndex e : *witness) j["witness"].push_back(g.edge_label(e));
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "key,value\n";
      out << "ample," << yes_no(ample.ample) << "\n";
      out << "connected," << yes_no(connected) << "\n";
      if (distinct) out << "distinct_i," << yes_no(*distinct) << "\n";
      out << "sufficient," << yes_no(witness.has_value()) << "\n";
      if (witness) out << "witness,\"" << path_string(g, *witness) << "\"\n";
      break;
    case Format::text:
      out << "graph: " << in.name << "\n";
      out << "edges: " << edges_string(g, edges) << "\n";
      if (in.boolean_n > 0) {
        out << "labels:";
        for (const auto& l : labels) out << " " << to_string(l);
        out << "\n";
        out << (*distinct ? "DISTINCT-I" : "REPEATED-I") << "\n";
      }
      out << (ample.ample ? "AMPLE" : "NOT AMPLE");
      if (ample.witness) out << " (clause " << ample.failed_clause << " fails at " << g.key(*ample.witness) << ")";
      out << "\n";
      out << (connected ? "CONNECTED" : "NOT CONNECTED") << "\n";
      out << (witness ? "SUFFICIENT" : "NOT SUFFICIENT") << "\n";
      if (witness) out << "witness: " << path_string(g, *witness) << "\n";
      break;
  }
}

void cmd_closure(const Settings& s, std::ostream& out) {
  const Input in = load(s);
  const auto& g = in.graph;
  const EdgeSet edges = parse_edge_list(g, s.edges, in.boolean_n);
  const auto trace = du_closure_traced(g, edges);
  auto pair_string = [&](std::pair<EdgeIndex, EdgeIndex> p) {
    return g.edge_label(p.first) + ", " + g.edge_label(p.second);
  };
  switch (parse_format(s.format)) {
    case Format::json: {
      json j;
      j["graph"] = in.name;
      j["input"] = json::array();
      for (EdgeIndex e : edges) j["input"].push_back(g.edge_label(e));
      j["steps"] = json::array();
      for (const auto& step : trace.steps) {
        json added = json::array();
        for (EdgeIndex e : step.added) added.push_back(g.edge_label(e));
        j["steps"].push_back({{"rule", step.rule == DuRule::d ? "D" : "U"},
                              {"from", {g.edge_label(step.from.first), g.edge_label(step.from.second)}},
                              {"to", {g.edge_label(step.to.first), g.edge_label(step.to.second)}},
                              {"added", added}});
      }
      j["closure"] = json::array();
      for (EdgeIndex e : trace.closure) j["closure"].push_back(g.edge_label(e));
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "step,rule,from,to\n";
      for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& step = trace.steps[k];
        out << k + 1 << "," << (step.rule == DuRule::d ? "D" : "U") << ",\"" << pair_string(step.from) << "\",\""
            << pair_string(step.to) << "\"\n";
      }
      break;
    case Format::text:
      out << "graph: " << in.name << "\n";
      out << "input: " << edges_string(g, edges) << "\n";
      for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& step = trace.steps[k];
        out << "step " << k + 1 << ": " << (step.rule == DuRule::d ? "D" : "U") << " " << pair_string(step.from)
            << " => " << pair_string(step.to) << "\n";
      }
      out << "closure (" << trace.closure.size() << " edges): " << edges_string(g, trace.closure) << "\n";
      break;
  }
}

void add_graph_options(CLI::App* sub, Settings& s) {
  sub->add_option("--spec", s.spec, "Graph family, e.g. boolean:3, subspace:3,2, complete:1,2,2,1, young:4");
  sub->add_option("--graph-file", s.graph_file, "Graph JSON file");
  sub->add_option("--vertex-cap", s.vertex_cap, "Largest graph a family builder may produce");
}

void add_format(CLI::App* sub, Settings& s) {
  sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact computations for algebras of layered graphs"};
  app.name("gralg");
  app.require_subcommand(1);

  auto* graph = app.add_subcommand("graph", "Validate a graph and test predicates");
  add_graph_options(graph, s);
  add_format(graph, s);
  graph->add_option("--check", s.check, "Comma list of valid, uniform, modular, dump");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series by zeta matrix, chains and basis count");
  add_graph_options(hilbert, s);
  add_format(hilbert, s);
  hilbert->add_option("--order", s.order, "Truncation order")->check(CLI::NonNegativeNumber);
  hilbert->add_option("--method", s.method, "all, zeta, chains or basis")
      ->check(CLI::IsMember({"all", "zeta", "chains", "basis"}));
  hilbert->add_option("--chain-budget", s.chain_budget, "Largest number of chains the chain method may sum");

  auto* basis = app.add_subcommand("basis", "List normal words of one degree");
  add_graph_options(basis, s);
  add_format(basis, s);
  basis->add_option("--degree", s.degree, "Word degree")->check(CLI::NonNegativeNumber);
  basis->add_option("--cap", s.basis_cap, "Largest number of words to list");

  auto* dual = app.add_subcommand("dual", "Quadratic dual series and vertex-presentation comparison");
  add_graph_options(dual, s);
  add_format(dual, s);
  dual->add_option("--order", s.order, "Truncation order")->check(CLI::NonNegativeNumber);
  dual->add_option("--coordinate-cap", s.coordinate_cap, "Largest tensor coordinate count per degree");
  dual->add_option("--path-budget", s.path_budget, "Largest number of paths used for relations");

  auto* koszul = app.add_subcommand("koszul", "Check H(A,t) H(A!,-t) = 1 degree by degree");
  add_graph_options(koszul, s);
  add_format(koszul, s);
  koszul->add_option("--order", s.order, "Truncation order")->check(CLI::NonNegativeNumber);
  koszul->add_option("--coordinate-cap", s.coordinate_cap, "Largest tensor coordinate count per degree");
  koszul->add_option("--path-budget", s.path_budget, "Largest number of paths used for relations");

  auto* vieta = app.add_subcommand("vieta", "Factorizations of a matrix polynomial from generic right roots");
  add_format(vieta, s);
  vieta->add_option("--n", s.n, "Number of roots")->check(CLI::Range(1, 6));
  vieta->add_option("--dim", s.dim, "Matrix dimension")->check(CLI::Range(2, 8));
  vieta->add_option("--seed", s.seed, "Sampling seed");
  vieta->add_option("--attempts", s.attempts, "Sampling attempts")->check(CLI::PositiveNumber);

  auto* sufficient = app.add_subcommand("sufficient", "Ample, connected and sufficient tests for an edge set");
  add_graph_options(sufficient, s);
  add_format(sufficient, s);
  sufficient->add_option("--edges", s.edges, "Comma list of tail>head edges or A:i labels");
  sufficient->add_flag("--exhaustive", s.exhaustive, "Tabulate all size-n edge sets of boolean:n (n <= 3)");

  auto* closure = app.add_subcommand("closure", "DU-closure of an edge set with its trace");
  add_graph_options(closure, s);
  add_format(closure, s);
  closure->add_option("--edges", s.edges, "Comma list of tail>head edges or A:i labels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "gralg: " << e.what() << "\n";
    return 2;
  }

  try {
    if (graph->parsed()) cmd_graph(s, out);
    if (hilbert->parsed()) cmd_hilbert(s, out);
    if (basis->parsed()) cmd_basis(s, out);
    if (dual->parsed()) cmd_dual(s, out);
    if (koszul->parsed()) cmd_koszul(s, out);
    if (vieta->parsed()) cmd_vieta(s, out);
    if (sufficient->parsed()) cmd_sufficient(s, out);
    if (closure->parsed()) cmd_closure(s, out);
  } catch (const std::invalid_argument& e) {
    err << "gralg: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "gralg: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gralg::cli
