#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "schurq/ringel.hpp"
#include "schurq/schuralg.hpp"
#include "schurq/weylschur.hpp"

namespace schurq {

using Json = nlohmann::ordered_json;

/// Exact numbers are strings: "p/q" over Q, decimal over Z, residues over F_p.
Json scalar_json(const Scalar& x, const Ring& ring);
Json matrix_json(const Matrix& m, const Ring& ring);
Json parts_json(const std::vector<int>& p);
Json presentation_json(const FGModulePresentation& p, const Ring& ring);

Json module_json(const PolyModule& x);
Json map_json(const ModuleMap& f);
Json schur_algebra_json(const SchurAlgebra& s, bool with_products);
Json weyl_json(const WeylConstruction& w);
Json filtration_json(const FiltrationChain& c);
Json certificate_json(const HwcCertificate& c);
Json tilting_json(const TiltingObject& t);
Json ringel_json(const RingelReport& r);

/// Aligned text rendering of a document: scalars as key/value rows, arrays of
/// objects as tables.
std::string render_text(const Json& doc);

/// One JSON file per key. Entries record a hash of the basis enumeration and are
/// ignored when it does not match.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);
  std::optional<Json> load(const std::string& key, std::uint64_t hash) const;
  /// Writes to a temporary file in the same directory, then renames it into place.
  void store(const std::string& key, std::uint64_t hash, const Json& doc) const;
  std::filesystem::path path(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

/// Loads S(n, d) products from the cache or computes and stores them.
void warm_schur_algebra(const SchurAlgebra& s, const Cache& cache);

}  // namespace schurq
