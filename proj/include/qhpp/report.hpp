#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qhpp/h2case.hpp"
#include "qhpp/oracle.hpp"
#include "qhpp/portrait.hpp"
#include "qhpp/x111.hpp"

namespace qhpp {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  bool oracle = true;
  double tol = 1e-10;
  double radius = 0.05;
};

// Result of the full pipeline. `status` follows the CLI exit codes:
// 0 ok, 3 not quasi-homogeneous, 4 common factor.
struct AnalysisReport {
  Json json;
  int status = 0;
  std::string dump() const { return json.dump(2) + "\n"; }
};

AnalysisReport analyze(const PolySystem& s, const AnalyzeOptions& opt = {});

Json to_json(const Rat& r);
Json to_json(const AlgebraicRoot& r);
Json to_json(const WeightVector& w);
Json to_json(const TransformRecord& t);
Json to_json(const HomogSystem& h);
Json to_json(const DirectionReport& d);
Json to_json(const CenterResult& c);
Json to_json(const PortraitCode& p);
Json to_json(const H3Signature& s);
Json to_json(const H2Case& c);
Json to_json(const QhStructure& q);

Json catalog_json(int degree);  // throws PreconditionError for degree != 5
Json census_json(bool greater = true, bool less = true, bool equal = true);

}  // namespace qhpp
