// schurq: command-line front end to the library.
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "schurq/report.hpp"

using namespace schurq;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0, d = -1, a = 0, b = 0;
  std::string ring = "Q";
  std::string lambda, mu;
  std::string source = "gamma", target = "gamma";
  std::string route = "presentation";
  bool json = false, text = false, products = false;
  std::string cache_dir;
  int jobs = 1;
};

Ring ring_of(const Options& o) {
  try {
    return Ring::parse(o.ring);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parts_of(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  try {
    return parse_parts(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Partition partition_of(const std::string& text, const char* flag) {
  auto p = parts_of(text, flag);
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!is_partition(p)) throw UsageError(std::string(flag) + " must be a partition (weakly decreasing)");
  return p;
}

int need_n(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  return o.n;
}

void categorical(const Options& o) {
  if (o.d < 0) throw UsageError("--d is required");
  if (need_n(o) < o.d) throw UsageError("this verb needs n >= d (the category is only highest weight for n >= d)");
}

Composition padded(const std::vector<int>& c, int n) {
  if (static_cast<int>(c.size()) > n) throw UsageError("composition has more than n parts");
  return pad(c, n);
}

// Objects named on the command line: kind plus parts.
ModulePtr object(const std::string& kind, const std::vector<int>& parts, const Options& o, const Ring& r) {
  const int n = need_n(o);
  if (kind == "gamma") return eval_divided(padded(parts, n), n, r);
  if (kind == "sym") return eval_symmetric(padded(parts, n), n, r);
  if (kind == "ext") return eval_exterior(padded(parts, n), n, r);
  if (kind == "tensor") {
    int d = 0;
    for (int v : parts) d += v;
    return tensor_power(d, n, r);
  }
  Partition lam = parts;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  if (!is_partition(lam)) throw UsageError(kind + " needs a partition");
  if (kind == "delta") return standard_object(lam, n, r).quotient;
  if (kind == "nabla") return costandard_object(lam, n, r).module;
  if (kind == "weyl") return weyl(lam, n, r).module;
  if (kind == "schur") return schur_module(lam, n, r);
  if (kind == "simple") {
    if (!r.is_field()) throw UsageError("simple heads need a field");
    return simple_head(lam, n, r).module;
  }
  throw UsageError("unknown object kind '" + kind + "' (gamma, sym, ext, tensor, delta, nabla, weyl, schur, simple)");
}

Presented presented(const std::string& kind, const std::vector<int>& parts, const Options& o, const Ring& r) {
  if (kind == "delta") {
    Partition lam = parts;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (!is_partition(lam)) throw UsageError("delta needs a partition");
    return present_standard(lam, need_n(o), r);
  }
  if (kind == "gamma") return present_projective(padded(parts, need_n(o)), o.n, r);
  return present(object(kind, parts, o, r));
}

std::string key(const std::string& verb, const Options& o, const Ring& r) {
  return verb + "-n" + std::to_string(o.n) + "-d" + std::to_string(o.d) + "-" + r.name();
}

// Returns the document and whether the verb's verification passed.
std::pair<Json, bool> run(const std::string& verb, const Options& o) {
  Json doc;
  if (verb == "partitions") {
    if (o.d < 0) throw UsageError("--d is required");
    auto ps = o.n > 0 ? partitions(o.d, o.n) : partitions(o.d);
    doc["d"] = o.d;
    if (o.n > 0) doc["max_parts"] = o.n;
    doc["count"] = ps.size();
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(parts_json(p));
    doc["partitions"] = arr;
    return {doc, true};
  }
  if (verb == "kostka") {
    Partition lam = partition_of(o.lambda, "--lambda");
    auto mu = parts_of(o.mu, "--mu");
    doc["lambda"] = format_parts(lam);
    doc["mu"] = format_parts(mu);
    doc["kostka"] = kostka(lam, mu);
    return {doc, true};
  }
  const Ring r = ring_of(o);
  if (verb == "schur-dim") {
    if (o.d < 0) throw UsageError("--d is required");
    SchurAlgebra s(need_n(o), o.d, r);
    if (o.products && !o.cache_dir.empty()) warm_schur_algebra(s, Cache(o.cache_dir));
    return {schur_algebra_json(s, o.products), true};
  }
  if (verb == "hom" || verb == "ext") {
    auto sp = parts_of(o.mu, "--mu");
    auto tp = parts_of(o.lambda, "--lambda");
    auto y = object(o.target, tp, o, r);
    doc["source"] = o.source + "(" + format_parts(sp) + ")";
    doc["target"] = o.target + "(" + format_parts(tp) + ")";
    doc["n"] = o.n;
    doc["ring"] = r.name();
    if (verb == "hom") {
      auto x = object(o.source, sp, o, r);
      auto basis = hom_space(x, y);
      doc["rank"] = basis.size();
      Json maps = Json::array();
      for (const auto& f : basis) maps.push_back(map_json(f));
      doc["basis"] = maps;
    } else {
      if (o.route != "presentation" && o.route != "syzygy") throw UsageError("--route is presentation or syzygy");
      auto e = ext1(presented(o.source, sp, o, r), y, o.route == "syzygy" ? ExtRoute::Syzygy : ExtRoute::Presentation);
      doc["route"] = o.route;
      doc["ext1"] = presentation_json(e.value, r);
    }
    return {doc, true};
  }
  if (verb == "weyl") {
    auto w = weyl(partition_of(o.lambda, "--lambda"), need_n(o), r);
    return {weyl_json(w), true};
  }
  if (verb == "delta" || verb == "nabla" || verb == "simple") {
    Partition lam = partition_of(o.lambda, "--lambda");
    need_n(o);
    if (static_cast<int>(lam.size()) > o.n) throw UsageError("--lambda has more than n parts");
    doc["lambda"] = format_parts(lam);
    doc["n"] = o.n;
    doc["ring"] = r.name();
    bool ok = true;
    if (verb == "delta") {
      auto so = standard_object(lam, o.n, r);
      doc["module"] = module_json(*so.quotient);
      auto iso = find_isomorphism(so.quotient, weyl(lam, o.n, r).module);
      doc["iso_to_weyl"] = iso.has_value();
      ok = iso.has_value();
    } else if (verb == "nabla") {
      doc["module"] = module_json(*costandard_object(lam, o.n, r).module);
    } else {
      if (!r.is_field()) throw UsageError("simple heads need a field (F_p or Q)");
      auto sh = simple_head(lam, o.n, r);
      doc["radical_rank"] = total_rank(sh.radical);
      doc["module"] = module_json(*sh.module);
    }
    return {doc, ok};
  }
  if (verb == "cauchy") {
    FiltrationChain c;
    if (!o.mu.empty()) {
      auto mu = parts_of(o.mu, "--mu");
      c = cauchy_filtration_projective(padded(mu, need_n(o)), o.n, r);
      doc["mu"] = format_parts(mu);
      doc["n"] = o.n;
    } else {
      if (o.d < 0) throw UsageError("--d is required");
      int a = o.a > 0 ? o.a : need_n(o), b = o.b > 0 ? o.b : need_n(o);
      c = cauchy_filtration(a, b, o.d, r);
      doc["a"] = a;
      doc["b"] = b;
      doc["d"] = o.d;
    }
    doc["ring"] = r.name();
    doc["filtration"] = filtration_json(c);
    bool ok = c.complete;
    for (const auto& s : c.steps) ok = ok && s.verified;
    return {doc, ok};
  }
  if (verb == "verify-hwc" || verb == "tilting" || verb == "ringel") {
    categorical(o);
    std::optional<Cache> cache;
    std::uint64_t hash = 0;
    if (!o.cache_dir.empty()) {
      cache.emplace(o.cache_dir);
      hash = SchurAlgebra(o.n, o.d, r).basis_hash();
      if (auto hit = cache->load(key(verb, o, r), hash)) return {*hit, hit->value("verdict", "") == "pass"};
    }
    if (verb == "verify-hwc")
      doc = certificate_json(verify_hwc(o.n, o.d, r));
    else if (verb == "tilting")
      doc = tilting_json(tilting_object(o.n, o.d, r));
    else
      doc = ringel_json(ringel_self_duality_check(o.n, o.d, r));
    if (cache) cache->store(key(verb, o, r), hash, doc);
    return {doc, doc["verdict"] == "pass"};
  }
  throw UsageError("unknown verb " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schurq: polynomial functors and Schur algebras"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"partitions", "partitions of d (at most n parts if --n is given)"},
      {"kostka", "Kostka number K(lambda, mu)"},
      {"schur-dim", "dimension of S(n, d); --products dumps the structure constants"},
      {"hom", "Hom(source(mu), target(lambda))"},
      {"ext", "Ext^1(source(mu), target(lambda))"},
      {"weyl", "Weyl module W_lambda(k^n)"},
      {"delta", "standard object Delta(lambda)"},
      {"nabla", "costandard object nabla(lambda)"},
      {"simple", "simple head L(lambda)"},
      {"cauchy", "Cauchy filtration of Gamma^d(k^a (x) k^b), or of Gamma^mu with --mu"},
      {"verify-hwc", "highest weight certificate"},
      {"tilting", "characteristic tilting object"},
      {"ringel", "Ringel self-duality check"}};
  for (const auto& [name, help] : verbs) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--n", o.n, "number of variables");
    sub->add_option("--d", o.d, "degree");
    sub->add_option("--ring", o.ring, "Z, Q or Fp:<prime> (also F<prime>)");
    sub->add_option("--lambda", o.lambda, "partition, e.g. 2,1");
    sub->add_option("--mu", o.mu, "composition, e.g. 1,1,1");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_flag("--text", o.text, "aligned text output (default)");
    sub->add_option("--cache-dir", o.cache_dir, "directory for cached algebras and certificates");
    sub->add_option("--jobs", o.jobs, "worker count");
    if (name == "hom" || name == "ext") {
      sub->add_option("--source", o.source, "gamma, sym, ext, tensor, delta, nabla, weyl, schur, simple");
      sub->add_option("--target", o.target, "same kinds as --source");
    }
    if (name == "ext") sub->add_option("--route", o.route, "presentation or syzygy");
    if (name == "cauchy") {
      sub->add_option("--a", o.a, "rank of V (defaults to n)");
      sub->add_option("--b", o.b, "rank of W (defaults to n)");
    }
    if (name == "schur-dim") sub->add_flag("--products", o.products, "include basis and products");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (o.json && o.text) throw UsageError("--json and --text are exclusive");
    auto [doc, ok] = run(verb, o);
    if (o.json) {
      std::cout << doc.dump(2) << "\n";
    } else if (verb == "kostka") {
      std::cout << doc["kostka"].get<std::int64_t>() << "\n";
    } else if (verb == "schur-dim" && !o.products) {
      std::cout << doc["dim"].get<std::size_t>() << "\n";
    } else {
      std::cout << render_text(doc);
    }
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CombinatError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
