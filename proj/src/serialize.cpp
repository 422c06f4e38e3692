#include "mcres/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>

#include "mcres/error.hpp"

namespace mcres {

Json to_json(const Monomial& m) { return m.exponents(); }

Json to_json(const Symbol& s) {
  Json j;
  j["gen"] = s.gen == kUnit ? Json(nullptr) : Json(s.gen + 1);
  Json alpha = Json::array();
  for (int a : s.alpha) alpha.push_back(a + 1);
  j["alpha"] = alpha;
  j["text"] = to_string(s);
  return j;
}

Json to_json(const OrderedIdeal& ideal) {
  Json j;
  j["n"] = ideal.num_vars();
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.exponents());
  j["gens"] = gens;
  Json text = Json::array();
  for (const auto& g : ideal.gens()) text.push_back(g.to_string());
  j["text"] = text;
  return j;
}

namespace {
const char* kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::symbol: return "symbol";
    case BasisKind::koszul: return "koszul";
    case BasisKind::taylor: return "taylor";
    case BasisKind::cell: return "cell";
  }
  return "symbol";
}
}  // namespace

Json to_json(const LabeledChainComplex& c) {
  Json j;
  j["num_vars"] = c.num_vars;
  j["kind"] = kind_name(c.kind);
  j["ranks"] = c.ranks();
  Json degrees = Json::array();
  for (std::size_t d = 0; d < c.length(); ++d) {
    Json deg;
    deg["degree"] = d;
    Json basis = Json::array();
    for (std::size_t i = 0; i < c.rank(d); ++i) {
      Json b = to_json(c.basis[d][i]);
      b["multidegree"] = to_json(c.multidegree[d][i]);
      basis.push_back(b);
    }
    deg["basis"] = basis;
    Json entries = Json::array();
    if (d > 0)
      for (std::size_t col = 0; col < c.diff[d].cols(); ++col)
        for (const auto& t : c.diff[d].column(col))
          entries.push_back({{"row", t.row}, {"col", col}, {"coeff", t.coeff}, {"mono", t.mono.exponents()}});
    deg["differential"] = entries;
    degrees.push_back(deg);
  }
  j["degrees"] = degrees;
  return j;
}

Json to_json(const BettiTable& table) {
  Json j;
  j["num_vars"] = table.num_vars;
  j["totals"] = table.totals();
  Json entries = Json::array();
  for (const auto& [key, v] : table.values)
    if (v > 0) entries.push_back({{"i", key.first}, {"b", key.second.exponents()}, {"value", v}});
  j["entries"] = entries;
  return j;
}

Json to_json(const CWComplex& x) {
  Json j;
  j["ideal"] = to_json(x.ideal);
  j["f_vector"] = x.f_vector();
  Json cells = Json::array();
  for (std::size_t c = 1; c < x.cells.size(); ++c) {
    const auto& cell = x.cells[c];
    Json jc;
    jc["id"] = c;
    jc["dim"] = cell.dim();
    jc["symbol"] = to_json(cell.symbol);
    jc["label"] = to_json(cell.label);
    Json boundary = Json::array();
    for (const auto& [id, v] : cell.boundary)
      if (id != 0) boundary.push_back({{"cell", id}, {"incidence", v}});
    jc["boundary"] = boundary;
    Json simplices = Json::array();
    for (std::size_t s = 0; s < cell.geometry.simplices.size(); ++s) {
      Json vs = Json::array();
      for (auto v : cell.geometry.simplices[s].vertices) vs.push_back(v + 1);
      simplices.push_back({{"vertices", vs}, {"sign", cell.geometry.signs[s]}});
    }
    jc["simplices"] = simplices;
    cells.push_back(jc);
  }
  j["cells"] = cells;
  return j;
}

Json to_json(const HomComplex& x) {
  Json j;
  j["d"] = x.graph.d;
  j["f_vector"] = x.f_vector();
  Json cells = Json::array();
  for (std::size_t c = 0; c < x.cells.size(); ++c) {
    const auto& cell = x.cells[c];
    Json jc;
    jc["id"] = c;
    jc["dim"] = cell.dim;
    jc["blocks"] = cell.blocks;
    jc["label"] = to_json(cell.label);
    Json boundary = Json::array();
    for (const auto& [face, v] : hom_boundary(cell.blocks))
      if (auto id = x.find(face)) boundary.push_back({{"cell", *id}, {"incidence", v}});
    jc["boundary"] = boundary;
    cells.push_back(jc);
  }
  j["cells"] = cells;
  return j;
}

Json to_json(const DecompositionRule& rule) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < rule.table().size(); ++j) {
    Json row = Json::object();
    for (std::size_t t = 0; t < rule.table()[j].size(); ++t)
      if (rule.table()[j][t] >= 0) row["x" + std::to_string(t + 1)] = rule.table()[j][t] + 1;
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const CorpusItem& item) {
  Json j;
  j["name"] = item.name;
  j["family"] = item.family;
  j["ideal"] = to_json(item.ideal);
  if (item.graph) {
    j["graph"] = {{"d", item.graph->d}, {"n", item.graph->vertices.size()}, {"edges", item.graph->edges}};
  }
  j["tags"] = {{"linear_quotients", item.tags.linear_quotients},
               {"regular", item.tags.regular},
               {"cointerval", item.tags.cointerval},
               {"stable", item.tags.stable}};
  return j;
}

std::string betti_csv(const BettiTable& table) {
  std::ostringstream out;
  out << "i";
  for (std::size_t v = 0; v < table.num_vars; ++v) out << ",b" << v + 1;
  out << ",value\n";
  for (const auto& [key, v] : table.values) {
    if (v == 0) continue;
    out << key.first;
    for (int e : key.second.exponents()) out << ',' << e;
    out << ',' << v << '\n';
  }
  return out.str();
}

std::string to_off(const FacePoset& poset, const std::vector<Monomial>& positions) {
  std::vector<std::size_t> vertex_ids;
  for (std::size_t c = 0; c < poset.dims.size(); ++c)
    if (poset.dims[c] == 0) vertex_ids.push_back(c);
  if (positions.size() != vertex_ids.size())
    throw Error(ErrorKind::invalid_input, "one position per vertex is needed");
  std::map<std::size_t, std::size_t> vertex_index;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) vertex_index[vertex_ids[i]] = i;

  // Coordinates that vary, truncated to three.
  std::vector<std::size_t> keep;
  const std::size_t n = positions.empty() ? 0 : positions[0].size();
  for (std::size_t v = 0; v < n && keep.size() < 3; ++v) {
    bool varies = false;
    for (const auto& p : positions) varies = varies || p[v] != positions[0][v];
    if (varies) keep.push_back(v);
  }

  std::vector<std::vector<std::size_t>> polygons;
  for (std::size_t c = 0; c < poset.dims.size(); ++c) {
    if (poset.dims[c] != 2) continue;
    // Chain the boundary edges into a cycle of vertices.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t e : poset.faces[c])
      if (poset.faces[e].size() == 2)
        edges.push_back({vertex_index.at(poset.faces[e][0]), vertex_index.at(poset.faces[e][1])});
    if (edges.empty()) continue;
    std::vector<std::size_t> cycle = {edges[0].first, edges[0].second};
    std::vector<char> used(edges.size(), 0);
    used[0] = 1;
    for (std::size_t step = 1; step < edges.size(); ++step)
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (used[k]) continue;
        auto [a, b] = edges[k];
        if (a != cycle.back() && b != cycle.back()) continue;
        used[k] = 1;
        std::size_t next = a == cycle.back() ? b : a;
        if (next != cycle.front()) cycle.push_back(next);
        break;
      }
    polygons.push_back(cycle);
  }

  std::ostringstream out;
  out << "OFF\n# coordinates kept:";
  for (auto v : keep) out << " x" << v + 1;
  if (keep.empty()) out << " none";
  out << '\n' << positions.size() << ' ' << polygons.size() << " 0\n";
  for (const auto& p : positions) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (k) out << ' ';
      out << (k < keep.size() ? p[keep[k]] : 0);
    }
    out << '\n';
  }
  for (const auto& poly : polygons) {
    out << poly.size();
    for (auto v : poly) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string to_off(const CWComplex& x) {
  std::vector<Monomial> positions;
  for (std::size_t c = 1; c < x.cells.size(); ++c)
    if (x.cells[c].dim() == 0) positions.push_back(x.cells[c].label);
  return to_off(face_poset(x), positions);
}

std::string to_off(const HomComplex& x) {
  std::vector<Monomial> positions;
  for (const auto& cell : x.cells)
    if (cell.dim == 0) positions.push_back(cell.label);
  return to_off(face_poset(x), positions);
}

std::string fingerprint(const std::string& certificate) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : certificate) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mcres
