#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>

#include "schurq/report.hpp"

namespace schurq {

Json scalar_json(const Scalar& x, const Ring& ring) { return ring.format(x); }

Json matrix_json(const Matrix& m, const Ring& ring) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ring.format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json parts_json(const std::vector<int>& p) {
  Json a = Json::array();
  for (int v : p) a.push_back(v);
  return a;
}

Json presentation_json(const FGModulePresentation& p, const Ring& ring) {
  Json j;
  j["module"] = format_presentation(p, ring);
  j["free_rank"] = p.free_rank;
  Json f = Json::array();
  for (const auto& x : p.invariant_factors) f.push_back(ring.format(x));
  j["invariant_factors"] = f;
  return j;
}

Json module_json(const PolyModule& x) {
  Json j;
  j["name"] = x.name();
  j["n"] = x.n();
  j["d"] = x.d();
  j["ring"] = x.ring().name();
  j["rank"] = x.rank();
  Json w = Json::object();
  for (std::size_t i = 0; i < x.weights().size(); ++i)
    if (x.weight_dim(i) > 0) w[format_parts(x.weights()[i])] = x.weight_dim(i);
  j["weights"] = w;
  Json labels = Json::array();
  for (std::size_t i = 0; i < x.weights().size(); ++i)
    for (std::size_t k = 0; k < x.weight_dim(i); ++k) labels.push_back(x.label(i, k));
  j["labels"] = labels;
  return j;
}

Json map_json(const ModuleMap& f) {
  Json j;
  j["source"] = f.source()->name();
  j["target"] = f.target()->name();
  j["rank"] = f.rank();
  j["matrix"] = matrix_json(f.dense(), f.source()->ring());
  return j;
}

Json schur_algebra_json(const SchurAlgebra& s, bool with_products) {
  Json j;
  j["n"] = s.n();
  j["d"] = s.d();
  j["ring"] = s.ring().name();
  j["dim"] = s.dim();
  if (!with_products) return j;
  Json basis = Json::array();
  for (const auto& a : s.basis()) {
    Json m = Json::array();
    for (int r = 0; r < a.rows; ++r) {
      Json row = Json::array();
      for (int c = 0; c < a.cols; ++c) row.push_back(a(r, c));
      m.push_back(row);
    }
    basis.push_back(m);
  }
  j["basis"] = basis;
  Json products = Json::array();
  for (const auto& [a, b, p] : s.all_products()) {
    Json coeffs = Json::array();
    for (const auto& [k, c] : p) coeffs.push_back(Json::array({k, c.get_str()}));
    products.push_back(Json::array({a, b, coeffs}));
  }
  j["products"] = products;
  return j;
}

Json weyl_json(const WeylConstruction& w) {
  Json j;
  j["lambda"] = parts_json(w.lambda);
  j["n"] = w.n;
  j["ring"] = w.module->ring().name();
  j["rank"] = w.module->rank();
  Json basis = Json::array();
  for (const auto& t : w.tableau_basis) {
    Json rows = Json::array();
    for (const auto& r : t.rows) rows.push_back(parts_json(r));
    basis.push_back(rows);
  }
  j["tableau_basis"] = basis;
  j["module"] = module_json(*w.module);
  j["cover"] = map_json(w.cover);
  return j;
}

Json filtration_json(const FiltrationChain& c) {
  Json j;
  j["ambient"] = c.ambient ? c.ambient->name() : "";
  j["ambient_rank"] = c.ambient ? c.ambient->rank() : 0;
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json st;
    st["lambda"] = format_parts(s.lambda);
    st["multiplicity"] = s.multiplicity;
    st["factor_rank"] = s.factor_rank;
    st["sub_rank"] = total_rank(s.sub);
    st["verified"] = s.verified;
    steps.push_back(st);
  }
  j["steps"] = steps;
  j["complete"] = c.complete;
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

namespace {

Json axiom_json(const AxiomCheck& a) {
  Json j;
  j["pass"] = a.pass;
  j["evidence"] = a.evidence;
  return j;
}

Json table_json(const std::vector<std::vector<FGModulePresentation>>& t, const Ring& r) {
  Json rows = Json::array();
  for (const auto& row : t) {
    Json out = Json::array();
    for (const auto& e : row) out.push_back(format_presentation(e, r));
    rows.push_back(out);
  }
  return rows;
}

Json order_json(const std::vector<Partition>& order) {
  Json o = Json::array();
  for (const auto& p : order) o.push_back(format_parts(p));
  return o;
}

}  // namespace

Json certificate_json(const HwcCertificate& c) {
  Ring r = Ring::parse(c.ring);
  Json j;
  j["n"] = c.n;
  j["d"] = c.d;
  j["ring"] = c.ring;
  j["order"] = order_json(c.order);
  Json ax;
  ax["endo_k"] = axiom_json(c.endo_k);
  ax["hom_vanishing"] = axiom_json(c.hom_vanishing);
  ax["kernel_filtration"] = axiom_json(c.kernel_filtration);
  ax["projective_generator"] = axiom_json(c.projective_generator);
  j["axioms"] = ax;
  j["ext_table"] = table_json(c.ext_table, r);
  j["ext_delta"] = table_json(c.ext_delta, r);
  j["verdict"] = c.pass() ? "pass" : "fail";
  return j;
}

Json tilting_json(const TiltingObject& t) {
  Json j;
  j["n"] = t.n;
  j["d"] = t.d;
  j["ring"] = t.ring.name();
  j["order"] = order_json(t.order);
  Json summands = Json::array();
  for (const auto& lam : t.order) {
    Json s;
    s["lambda"] = format_parts(lam);
    s["rank"] = t.summands.at(lam)->rank();
    s["delta"] = filtration_json(t.delta.at(lam));
    s["nabla"] = filtration_json(t.nabla.at(lam));
    summands.push_back(s);
  }
  j["summands"] = summands;
  j["rank"] = t.rank();
  Json ext = Json::array();
  for (const auto& row : t.ext) {
    Json out = Json::array();
    for (const auto& e : row) out.push_back(format_presentation(e.value, t.ring));
    ext.push_back(out);
  }
  j["ext_table"] = ext;
  j["end_dim"] = t.endo.dim();
  j["failures"] = t.failures;
  j["verdict"] = t.pass() ? "pass" : "fail";
  return j;
}

Json ringel_json(const RingelReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["ring"] = r.ring.name();
  std::vector<Partition> order = partitions(r.d);
  j["order"] = order_json(order);
  auto check = [&](bool ok, const std::string& what) {
    AxiomCheck a;
    a.pass = ok;
    for (const auto& f : r.failures)
      if (f.find(what) != std::string::npos) a.evidence.push_back(f);
    return axiom_json(a);
  };
  Json ax;
  ax["bijective"] = check(r.bijective, "basis");
  ax["multiplicative"] = check(r.multiplicative, "composition");
  ax["standard_correspondence"] = check(r.standard_correspondence, "ultiplicit");
  j["axioms"] = ax;
  j["dim_end_gamma"] = r.dim_end_gamma;
  j["dim_end_lambda"] = r.dim_end_lambda;
  j["pairs_checked"] = r.pairs_checked;
  Json mult = Json::array();
  for (const auto& [key, m] : r.multiplicities) {
    Json e;
    e["mu"] = format_parts(key.first);
    e["lambda"] = format_parts(key.second);
    e["delta_in_gamma"] = m.first;
    e["nabla_conj_in_lambda"] = m.second;
    mult.push_back(e);
  }
  j["multiplicities"] = mult;
  j["verdict"] = r.pass() ? "pass" : "fail";
  return j;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(const Json& doc, const std::string& prefix, std::ostringstream& out) {
  std::size_t width = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!it.value().is_structured()) width = std::max(width, prefix.size() + it.key().size());
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!it.value().is_structured())
      out << std::left << std::setw(static_cast<int>(width) + 2) << prefix + it.key() << cell(it.value()) << "\n";
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const Json& v = it.value();
    std::string name = prefix + it.key();
    if (v.is_object()) {
      out << "\n";
      render(v, name + ".", out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      std::vector<std::string> cols;
      for (auto c = v.front().begin(); c != v.front().end(); ++c)
        if (!c.value().is_structured()) cols.push_back(c.key());
      std::vector<std::size_t> w;
      for (const auto& c : cols) {
        std::size_t m = c.size();
        for (const auto& row : v)
          if (row.contains(c)) m = std::max(m, cell(row[c]).size());
        w.push_back(m);
      }
      out << "\n" << name << "\n";
      for (std::size_t c = 0; c < cols.size(); ++c) out << std::left << std::setw(static_cast<int>(w[c]) + 2) << cols[c];
      out << "\n";
      for (const auto& row : v) {
        for (std::size_t c = 0; c < cols.size(); ++c)
          out << std::left << std::setw(static_cast<int>(w[c]) + 2) << (row.contains(cols[c]) ? cell(row[cols[c]]) : "");
        out << "\n";
      }
    } else if (v.is_array() && !v.empty()) {
      out << "\n" << name << "\n";
      for (const auto& row : v) {
        if (row.is_array()) {
          for (const auto& x : row) out << std::left << std::setw(8) << cell(x);
          out << "\n";
        } else {
          out << "  " << cell(row) << "\n";
        }
      }
    }
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  if (doc.is_object())
    render(doc, "", out);
  else
    out << cell(doc) << "\n";
  return out.str();
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path Cache::path(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<Json> Cache::load(const std::string& key, std::uint64_t hash) const {
  std::ifstream in(path(key));
  if (!in) return std::nullopt;
  Json entry = Json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object() || entry.value("key", "") != key ||
      entry.value("hash", std::string()) != std::to_string(hash) || !entry.contains("document"))
    return std::nullopt;
  return entry["document"];
}

void Cache::store(const std::string& key, std::uint64_t hash, const Json& doc) const {
  std::filesystem::create_directories(dir_);
  Json entry;
  entry["key"] = key;
  entry["hash"] = std::to_string(hash);
  entry["document"] = doc;
  auto tmp = dir_ / (key + ".json.tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << entry.dump() << "\n";
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path(key));
}

void warm_schur_algebra(const SchurAlgebra& s, const Cache& cache) {
  std::string key = "schur-n" + std::to_string(s.n()) + "-d" + std::to_string(s.d());
  if (auto doc = cache.load(key, s.basis_hash())) {
    std::vector<std::tuple<std::size_t, std::size_t, SchurAlgebra::Product>> table;
    for (const auto& e : (*doc)["products"]) {
      SchurAlgebra::Product p;
      for (const auto& kc : e[2]) p.emplace_back(kc[0].get<std::size_t>(), mpz_class(kc[1].get<std::string>()));
      table.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>(), std::move(p));
    }
    s.import_products(table);
    return;
  }
  // Integral structure constants do not depend on the ring.
  cache.store(key, s.basis_hash(), schur_algebra_json(s, true));
}

}  // namespace schurq
