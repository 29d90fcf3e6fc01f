#include "vbcm/json_io.hpp"

namespace vbcm {
namespace io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::invalid_argument, what); }

long long get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("expected integer field ") + key);
  return j[key].get<long long>();
}

std::vector<long long> get_int_list(const Json& j) {
  if (!j.is_array()) bad("expected an integer list");
  std::vector<long long> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad("expected an integer list");
    out.push_back(v.get<long long>());
  }
  return out;
}

FieldElem coeff_from_json(const Json& j, Field f) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  bad("expected a coefficient string");
}

}  // namespace

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON input");
  return j;
}

Json to_json(const laurent::LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.to_string()}));
  return out;
}

laurent::LaurentPoly poly_from_json(const Json& j, Field f) {
  if (!j.is_array()) bad("Laurent polynomial must be a list of [exponent, coefficient] pairs");
  laurent::LaurentPoly p(f);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
      bad("Laurent term must be [exponent, coefficient]");
    long long e = term[0].get<long long>();
    FieldElem c = coeff_from_json(term[1], f);
    p.set_coeff(e, p.coeff(e) + c);
  }
  return p;
}

Json to_json(const laurent::LaurentMatrix& m) {
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

laurent::LaurentMatrix laurent_matrix_from_json(const Json& j, Field f) {
  int rows = static_cast<int>(get_int(j, "rows"));
  int cols = static_cast<int>(get_int(j, "cols"));
  if (!j.contains("entries") || !j["entries"].is_array() ||
      static_cast<int>(j["entries"].size()) != rows)
    bad("matrix entries must be a rows x cols grid");
  laurent::LaurentMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j["entries"][static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad("matrix entries must be a rows x cols grid");
    for (int k = 0; k < cols; ++k) m.at(i, k) = poly_from_json(row[static_cast<std::size_t>(k)], f);
  }
  return m;
}

Json to_json(const Mat& m) {
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

Mat mat_from_json(const Json& j, Field f) {
  int rows = static_cast<int>(get_int(j, "rows"));
  int cols = static_cast<int>(get_int(j, "cols"));
  if (!j.contains("entries") || !j["entries"].is_array() ||
      static_cast<int>(j["entries"].size()) != rows)
    bad("matrix entries must be a rows x cols grid");
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j["entries"][static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad("matrix entries must be a rows x cols grid");
    for (int k = 0; k < cols; ++k) {
      const auto& cell = row[static_cast<std::size_t>(k)];
      if (cell.is_array()) {
        laurent::LaurentPoly p = poly_from_json(cell, f);
        if (!p.is_zero() && (p.min_exp() != 0 || p.max_exp() != 0))
          bad("constant matrix entry has a nonzero exponent");
        m.at(i, k) = p.coeff(0);
      } else {
        m.at(i, k) = coeff_from_json(cell, f);
      }
    }
  }
  return m;
}

Json to_json(const chain::ChainData& d) {
  Json out;
  out["s"] = d.s;
  out["ranks"] = d.ranks;
  out["node_dims"] = d.node_dims;
  out["weights"] = d.weights;
  Json mp = Json::array(), ms = Json::array();
  for (const Mat& m : d.m_prime) mp.push_back(to_json(m));
  for (const Mat& m : d.m_dblprime) ms.push_back(to_json(m));
  out["M_prime"] = std::move(mp);
  out["M_dblprime"] = std::move(ms);
  return out;
}

chain::ChainData chain_from_json(const Json& j, Field f) {
  chain::ChainData d;
  d.field = f;
  d.s = static_cast<int>(get_int(j, "s"));
  if (!j.contains("ranks")) bad("chain data needs ranks");
  for (long long r : get_int_list(j["ranks"])) d.ranks.push_back(static_cast<int>(r));
  if (!j.contains("node_dims")) bad("chain data needs node_dims");
  for (long long m : get_int_list(j["node_dims"])) d.node_dims.push_back(static_cast<int>(m));
  if (!j.contains("weights") || !j["weights"].is_array()) bad("chain data needs weights");
  for (const auto& w : j["weights"]) d.weights.push_back(get_int_list(w));
  if (!j.contains("M_prime") || !j.contains("M_dblprime")) bad("chain data needs node matrices");
  for (const auto& m : j["M_prime"]) d.m_prime.push_back(mat_from_json(m, f));
  for (const auto& m : j["M_dblprime"]) d.m_dblprime.push_back(mat_from_json(m, f));
  chain::validate_shapes(d);
  return d;
}

Json to_json(const chain::IntervalLineBundle& iv) {
  Json out;
  out["start"] = iv.start;
  out["end"] = iv.end;
  out["degrees"] = iv.degrees;
  return out;
}

Json to_json(const band::BandDatum& b) {
  Json out;
  out["s"] = b.s;
  out["d"] = b.d;
  out["m"] = b.m;
  out["lambda"] = b.lambda.to_string();
  return out;
}

band::BandDatum band_from_json(const Json& j, Field f) {
  band::BandDatum b;
  b.s = static_cast<int>(get_int(j, "s"));
  if (!j.contains("d")) bad("band datum needs d");
  b.d = get_int_list(j["d"]);
  b.m = static_cast<int>(get_int(j, "m"));
  if (!j.contains("lambda")) bad("band datum needs lambda");
  b.lambda = coeff_from_json(j["lambda"], f);
  return b;
}

Json to_json(const band::GluingData& g) {
  Json out;
  out["s"] = g.s;
  out["r"] = g.r;
  out["m"] = g.m;
  Json pairs = Json::array();
  for (const Mat& m : g.pair_mats) pairs.push_back(to_json(m));
  out["pairs"] = std::move(pairs);
  return out;
}

Json to_json(const band::DualGraph& g) {
  Json out;
  out["genera"] = g.genera;
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  out["edges"] = std::move(edges);
  return out;
}

band::DualGraph graph_from_json(const Json& j) {
  band::DualGraph g;
  if (!j.contains("genera")) bad("dual graph needs genera");
  for (long long v : get_int_list(j["genera"])) g.genera.push_back(static_cast<int>(v));
  if (!j.contains("edges") || !j["edges"].is_array()) bad("dual graph needs edges");
  for (const auto& e : j["edges"]) {
    auto pair = get_int_list(e);
    if (pair.size() != 2) bad("edge must be a pair of vertex indices");
    g.edges.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
  }
  return g;
}

Json to_json(const cohom::CohomDims& c) {
  Json out;
  out["h0"] = c.h0;
  out["h1"] = c.h1;
  return out;
}

Json to_json(const cmmod::CMDescriptor& d) {
  Json out;
  out["variant"] = cmmod::to_string(d.variant);
  out["rank"] = d.rank;
  out["d"] = d.d;
  out["m"] = d.m;
  out["lambda_excluded"] = d.lambda_excluded;
  if (d.lambda_sample) out["lambda_sample"] = *d.lambda_sample;
  if (d.point_excluded_origin) out["point_excluded"] = "o";
  return out;
}

Json to_json(const cmmod::QCuspDescriptor& d) {
  Json out;
  out["family"] = d.family;
  out["d"] = d.d;
  out["m"] = d.m;
  if (!d.lambda.empty()) out["lambda"] = d.lambda;
  out["lambda_excluded"] = d.lambda_excluded;
  out["cover_rank"] = d.cover_rank;
  if (d.from_special) out["from_special"] = true;
  return out;
}

Json to_json(const wild::ModulePresentation& mp) {
  Json out;
  out["n"] = mp.n;
  Json mats = Json::array();
  for (const Mat& m : mp.mats) mats.push_back(to_json(m));
  out["mats"] = std::move(mats);
  return out;
}

wild::ModulePresentation module_from_json(const Json& j, Field f) {
  wild::ModulePresentation mp;
  mp.n = static_cast<int>(get_int(j, "n"));
  if (!j.contains("mats") || !j["mats"].is_array()) bad("module presentation needs mats");
  for (const auto& m : j["mats"]) mp.mats.push_back(mat_from_json(m, f));
  wild::validate(mp);
  return mp;
}

Json to_json(const wild::Sigma2Module& m) {
  Json out;
  out["dim"] = m.dim;
  out["A"] = to_json(m.a);
  out["B"] = to_json(m.b);
  return out;
}

wild::Sigma2Module sigma2_from_json(const Json& j, Field f) {
  wild::Sigma2Module m;
  m.dim = static_cast<int>(get_int(j, "dim"));
  if (!j.contains("A") || !j.contains("B")) bad("sigma2 module needs A and B");
  m.a = mat_from_json(j["A"], f);
  m.b = mat_from_json(j["B"], f);
  if (m.a.rows() != m.dim || m.a.cols() != m.dim || m.b.rows() != m.dim || m.b.cols() != m.dim)
    bad("sigma2 matrices must be dim x dim");
  return m;
}

Json to_json(const wild::WitnessMatrixSet& w) {
  Json out;
  out["kind"] = wild::to_string(w.kind);
  out["provenance"] = w.provenance;
  Json params = Json::array();
  for (const FieldElem& p : w.parameters) params.push_back(p.to_string());
  out["parameters"] = std::move(params);
  Json mats = Json::array();
  for (const auto& nm : w.matrices) {
    Json m;
    m["name"] = nm.name;
    m["matrix"] = to_json(nm.mat);
    m["invertible"] = nm.invertible;
    mats.push_back(std::move(m));
  }
  out["matrices"] = std::move(mats);
  if (!w.symbolic_labels.empty()) out["symbolic_labels"] = w.symbolic_labels;
  if (!w.block_pattern.empty()) {
    out["block_pattern"] = w.block_pattern;
    out["block_size"] = w.block_size;
  }
  if (w.kind == wild::WitnessKind::kStep71) {
    out["det_constant_in_z"] = w.det_constant_in_z;
    out["det"] = w.det_value;
  }
  return out;
}

}  // namespace io
}  // namespace vbcm
