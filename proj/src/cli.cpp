#include "mcres/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mcres/chain_complex.hpp"
#include "mcres/cointerval.hpp"
#include "mcres/corpus.hpp"
#include "mcres/decomp_space.hpp"
#include "mcres/ek_geometry.hpp"
#include "mcres/error.hpp"
#include "mcres/serialize.hpp"
#include "mcres/verification.hpp"

namespace mcres {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Input {
  OrderedIdeal ideal;
  std::optional<DGraph> graph;
};

/// A hypergraph file starts with a "d n" header and has no monomial syntax.
bool looks_like_graph(const std::string& text) {
  if (text.find_first_of("x[({") != std::string::npos) return false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    return tokens.size() == 2;
  }
  return false;
}

Input load_input(const std::string& spec, std::size_t num_vars) {
  std::string text = spec;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (looks_like_graph(text)) {
    DGraph h = parse_dgraph(text);
    std::size_t n = std::max(num_vars, h.vertices.size());
    return {edge_ideal(h, n), h};
  }
  auto ideal = parse_ideal(text, num_vars);
  return {ideal, dgraph_of(ideal)};
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::invalid_input, "cannot write " + path);
  file << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string set_text(const std::vector<int>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? ", x" : "x") + std::to_string(set[i] + 1);
  return s + "}";
}

std::string totals_text(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::malformed_monomial:
    case ErrorKind::duplicate_generator:
    case ErrorKind::non_minimal_generators:
    case ErrorKind::index_out_of_range:
    case ErrorKind::invalid_input:
      return kBadInput;
    default:
      return kFailed;
  }
}

struct Common {
  std::string input;
  std::size_t vars = 0;
  std::string output;
  bool no_prefilter = false;
  std::string order = "given";

  RankOptions rank() const {
    RankOptions o = default_rank_options();
    o.prefilter = !no_prefilter;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_output = true) {
  cmd->add_option("input", c.input, "ideal text, JSON, hypergraph, or a file holding one")->required();
  cmd->add_option("--vars", c.vars, "number of variables (default: inferred)");
  if (with_output) cmd->add_option("-o,--output", c.output, "output file (default: stdout)");
}

void add_order(CLI::App* cmd, Common& c) {
  cmd->add_option("--order", c.order, "given: keep the input order; search: reorder to linear quotients with regular b")
      ->check(CLI::IsMember({"given", "search"}));
}

/// The input ideal, reordered when --order search is set.
OrderedIdeal ordered_ideal(const Input& in, const Common& c) {
  if (c.order == "given") return in.ideal;
  auto r = regular_form(in.ideal);
  if (r) return *r;
  auto lq = find_linear_quotient_order(in.ideal.num_vars(), in.ideal.gens());
  if (!lq) throw Error(ErrorKind::not_linear_quotients, "no generator order has linear quotients");
  return in.ideal.reordered(*lq);
}

int cmd_check(const Common& c, const std::vector<std::string>& require, std::ostream& out) {
  Input in = load_input(c.input, c.vars);
  OrderedIdeal I = ordered_ideal(in, c);
  bool need_lq = require.empty() || std::count(require.begin(), require.end(), "linear-quotients");
  bool need_regular = require.empty() || std::count(require.begin(), require.end(), "regular");
  bool need_cointerval = std::count(require.begin(), require.end(), "cointerval") > 0;

  out << "ideal: " << I.size() << " generators in " << I.num_vars() << " variables\n";
  for (std::size_t j = 0; j < I.size(); ++j) out << "  m" << j + 1 << " = " << I.gen(j).to_string() << "\n";
  bool ok = true;
  auto lq = is_linear_quotient_order(I);
  if (lq.ok) {
    out << "linear quotients: yes\n";
    for (std::size_t j = 0; j < I.size(); ++j)
      out << "  colon " << j + 1 << " (" << I.gen(j).to_string() << "): " << set_text(I.set_of(j)) << "\n";
    auto reg = check_regularity(I);
    out << "regular: " << (reg.regular ? "yes" : "no");
    if (!reg.regular) {
      auto [j, t] = reg.containment_witnesses.front();
      out << " (witness m" << j + 1 << ", x" << t + 1 << ")";
    }
    out << "\n";
    ok = ok && (!need_regular || reg.regular);
  } else {
    out << "linear quotients: no (witness j=" << lq.failing_index + 1 << ", colon generator "
        << lq.witness.to_string() << ")\n";
    out << "regular: n/a\n";
    ok = ok && !need_lq && !need_regular;
  }
  bool co = in.graph && is_cointerval(*in.graph) && is_cointerval_ideal(in.ideal);
  out << "cointerval: " << (co ? "yes" : "no") << "\n";
  if (in.graph && is_cointerval(*in.graph) != is_cointerval_exchange(*in.graph))
    out << "note: the exchange test answers " << (is_cointerval_exchange(*in.graph) ? "yes" : "no")
        << ", the recursive definition " << (is_cointerval(*in.graph) ? "yes" : "no") << "\n";
  ok = ok && (!need_cointerval || co);
  return ok ? kOk : kFailed;
}

int cmd_resolve(const Common& c, const std::string& method, std::size_t cap, const std::string& csv_path,
                std::ostream& out, std::ostream& err) {
  Input in = load_input(c.input, c.vars);
  OrderedIdeal I = ordered_ideal(in, c);
  LabeledChainComplex res;
  if (method == "ht") res = ht_resolution(I);
  else if (method == "hom") res = homcone_resolution(I);
  else res = taylor_complex(I, cap);

  if (auto w = dd_zero_defect(res)) {
    err << "d*d is not zero in degree " << w->degree << "\n";
    return kFailed;
  }
  bool minimal = check_minimal(res);
  Json j;
  j["method"] = method;
  j["ideal"] = to_json(I);
  j["ranks"] = res.betti_ranks();
  j["minimal"] = minimal;
  j["complex"] = to_json(res);
  write_output(c.output, dump(j), out);
  if (!csv_path.empty()) write_output(csv_path, betti_csv(betti_of_resolution(res)), out);
  err << "ranks " << totals_text(res.betti_ranks()) << (minimal ? " (minimal)" : " (not minimal)") << "\n";
  if (method != "taylor" && !minimal) return kFailed;
  return kOk;
}

int cmd_complex(const Common& c, const std::string& method, const std::string& format, std::ostream& out,
                std::ostream& err) {
  Input in = load_input(c.input, c.vars);
  std::string content;
  CellularReport report;
  if (method == "ek") {
    OrderedIdeal I = ordered_ideal(in, c);
    CWComplex x = build_ek_cw(I);
    report = check_cellular_resolution(cellular_chain_complex(x), I, c.rank());
    content = format == "off" ? to_off(x) : dump(to_json(x));
  } else {
    if (!in.graph || !is_cointerval(*in.graph))
      throw Error(ErrorKind::not_cointerval, "not the edge ideal of a cointerval hypergraph");
    HomComplex x = build_hom_complex(*in.graph, in.ideal.num_vars());
    OrderedIdeal I = edge_ideal(*in.graph, in.ideal.num_vars());
    report = check_cellular_resolution(hom_cellular_complex(x, I), I, c.rank());
    content = format == "off" ? to_off(x) : dump(to_json(x));
  }
  if (!report.ok) {
    err << "not a cellular resolution: " << report.reason << "\n";
    return kFailed;
  }
  write_output(c.output, content, out);
  return kOk;
}

int cmd_betti(const Common& c, const std::string& format, std::size_t cap, std::ostream& out) {
  Input in = load_input(c.input, c.vars);
  auto table = multigraded_betti(in.ideal, c.rank(), cap);
  write_output(c.output, format == "json" ? dump(to_json(table)) : betti_csv(table), out);
  return kOk;
}

int cmd_enumerate(const Common& c, std::size_t cap, std::ostream& out) {
  Input in = load_input(c.input, c.vars);
  OrderedIdeal I = ordered_ideal(in, c);
  EnumerationOptions options;
  options.cap = cap;
  options.rank = c.rank();
  Family family = rule_family(I, options);
  std::map<std::string, std::size_t> type_index;
  for (std::size_t k = 0; k < family.distinct.size(); ++k) type_index[family.members[family.distinct[k]].type] = k;
  Json rules = Json::array();
  for (const auto& m : family.members) {
    rules.push_back({{"shape", to_string(m.rule.shape)},
                     {"table", to_json(m.rule.rule)},
                     {"type", type_index.at(m.type)},
                     {"fingerprint", fingerprint(m.type)},
                     {"f_vector", m.f_vector}});
  }
  Json rejected = Json::array();
  for (const auto& [r, why] : family.rejected)
    rejected.push_back({{"shape", to_string(r.shape)}, {"table", to_json(r.rule)}, {"reason", why}});
  Json j;
  j["ideal"] = to_json(I);
  j["rules"] = rules;
  j["distinct_types"] = family.distinct.size();
  j["rejected"] = rejected;
  write_output(c.output, dump(j), out);
  return kOk;
}

int cmd_verify(const Common& c, std::size_t cap, std::ostream& out) {
  Input in = load_input(c.input, c.vars);
  OrderedIdeal I = ordered_ideal(in, c);
  const RankOptions rank = c.rank();
  bool all = true;
  auto line = [&](const std::string& name, bool pass, const std::string& detail = "") {
    out << (pass ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
    all = all && pass;
  };
  auto lq = is_linear_quotient_order(I);
  line("linear quotients", lq.ok);
  if (!lq.ok) return kFailed;
  bool regular = check_regularity(I).regular;
  line("regular decomposition function", regular);
  if (regular) {
    auto ht = ht_resolution(I);
    line("ht resolution d*d = 0", check_dd_zero(ht));
    line("ht resolution minimal", check_minimal(ht));
    line("ranks match set counts", ht.betti_ranks() == symbol_counts(I), totals_text(ht.betti_ranks()));
    auto x = build_ek_cw(I);
    auto cell = cellular_chain_complex(x);
    line("EK cellular complex equals ht resolution", compare_complexes(cell, ht, true).equal);
    line("EK complex is a cellular resolution", check_cellular_resolution(cell, I, rank).ok);
    if (I.size() <= cap)
      line("Betti numbers match the Taylor strands", multigraded_betti(I, rank, cap) == betti_of_resolution(ht));
  }
  // The hom construction always uses the lexicographic order of the edges.
  if (in.graph && is_cointerval(*in.graph) && is_cointerval_ideal(in.ideal)) {
    const OrderedIdeal& L = in.ideal;
    auto hom = homcone_resolution(L);
    line("hom resolution d*d = 0", check_dd_zero(hom));
    line("hom resolution minimal", check_minimal(hom));
    auto hc = hom_cellular_complex(build_hom_complex(*in.graph, L.num_vars()), L);
    line("hom complex equals hom resolution", compare_complexes(hc, hom, true).equal);
    line("hom complex is a cellular resolution", check_cellular_resolution(hc, L, rank).ok);
  }
  return all ? kOk : kFailed;
}

int cmd_gen_corpus(const CorpusSpec& spec, const std::string& output, std::ostream& out) {
  Json items = Json::array();
  for (const auto& item : generate_corpus(spec)) items.push_back(to_json(item));
  write_output(output, dump(items), out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal cellular resolutions of monomial ideals with linear quotients", "mcres"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_flag("--no-prefilter", c.no_prefilter, "compute every rank over Q without the GF(p) pass");

  std::vector<std::string> require;
  auto* check = app.add_subcommand("check", "linear quotients, regularity and cointerval tests");
  add_common(check, c, false);
  add_order(check, c);
  check->add_option("--require", require, "properties that decide the exit code")
      ->check(CLI::IsMember({"linear-quotients", "regular", "cointerval"}));

  std::string method = "ht", format = "json", csv;
  std::size_t taylor_cap = kDefaultTaylorCap, enum_cap = 1000000;
  auto* resolve = app.add_subcommand("resolve", "build a resolution and write it as JSON");
  add_common(resolve, c);
  add_order(resolve, c);
  resolve->add_option("--method", method, "ht, hom or taylor")->check(CLI::IsMember({"ht", "hom", "taylor"}));
  resolve->add_option("--betti-csv", csv, "also write graded ranks as CSV");
  resolve->add_option("--taylor-cap", taylor_cap, "largest generator count for the Taylor complex")
      ->check(CLI::PositiveNumber);

  std::string cx_method = "ek", cx_format = "json";
  auto* complex = app.add_subcommand("complex", "build the supporting CW complex and export it");
  add_common(complex, c);
  add_order(complex, c);
  complex->add_option("--method", cx_method, "ek or hom")->check(CLI::IsMember({"ek", "hom"}));
  complex->add_option("--format", cx_format, "json or off")->check(CLI::IsMember({"json", "off"}));

  std::string betti_format = "csv";
  auto* betti = app.add_subcommand("betti", "multigraded Betti numbers from the Taylor strands");
  add_common(betti, c);
  betti->add_option("--format", betti_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  betti->add_option("--taylor-cap", taylor_cap, "largest generator count")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate-rules", "the family of regular decomposition rules");
  add_common(enumerate, c);
  add_order(enumerate, c);
  enumerate->add_option("--cap", enum_cap, "largest number of candidate tables")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run every applicable check and report each");
  add_common(verify, c, false);
  add_order(verify, c);
  verify->add_option("--taylor-cap", taylor_cap, "largest generator count for the Betti oracle")
      ->check(CLI::PositiveNumber);

  CorpusSpec spec;
  bool no_examples = false;
  std::string corpus_out;
  auto* gen = app.add_subcommand("gen-corpus", "write the test corpus as JSON");
  gen->add_option("--stable-vars", spec.stable_vars, "variables for stable ideals (0 skips them)");
  gen->add_option("--stable-degree", spec.stable_degree, "largest generator degree")->check(CLI::PositiveNumber);
  gen->add_option("--graph-vars", spec.graph_vars, "vertices for cointerval graphs (0 skips them)");
  gen->add_option("--graph-max-d", spec.graph_max_d, "largest edge size")->check(CLI::PositiveNumber);
  gen->add_option("--random", spec.random_count, "random regular ideals to add");
  gen->add_option("--seed", spec.seed, "seed for the random ideals");
  gen->add_flag("--no-examples", no_examples, "leave out the two worked examples");
  gen->add_option("-o,--output", corpus_out, "output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*check) return cmd_check(c, require, out);
    if (*resolve) return cmd_resolve(c, method, taylor_cap, csv, out, err);
    if (*complex) return cmd_complex(c, cx_method, cx_format, out, err);
    if (*betti) return cmd_betti(c, betti_format, taylor_cap, out);
    if (*enumerate) return cmd_enumerate(c, enum_cap, out);
    if (*verify) return cmd_verify(c, taylor_cap, out);
    if (*gen) {
      spec.examples = !no_examples;
      return cmd_gen_corpus(spec, corpus_out, out);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace mcres
