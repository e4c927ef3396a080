// JSON and DOT renderings used by the CLI and the Python module.  Rationals
// are rendered as "n/d" strings; object keys come out sorted.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zipcox/cone.hpp"
#include "zipcox/ff_verify.hpp"
#include "zipcox/sections.hpp"
#include "zipcox/u3.hpp"
#include "zipcox/weyl.hpp"
#include "zipcox/zip_datum.hpp"

namespace zipcox {

using Json = nlohmann::json;

Json rational_strings(const QVector& v);
// Integral vectors as numbers; anything else as strings.
Json int_vector(const QVector& v);
Json names(const SimpleSet& s);

Json describe_json(const ZipDatum& z);

Json poset_json(const WeylGroup& W, const StrataPoset& P);
std::string poset_dot(const StrataPoset& P);

Json cone_json(const RationalCone& c);
Json cone_json(const RationalCone& c, const std::vector<QVector>& hilbert);

struct HasseVerdict {
  bool mu_ordinary_hasse = false;
  bool h0_up_to_power = false;
  ExactH0 h0_exact;
  bool kw_condition = false;
  bool in_gs_cone = false;
  bool in_pha_cone = false;
  std::string oracle;
};
HasseVerdict hasse_verdict(const ZipDatum& z, const QVector& lambda, const TrivialityOracle& oracle);
Json hasse_json(const QVector& lambda, const HasseVerdict& v);

Json u3_dim_json(const Weight3& l, std::int64_t p);
Json u3_decompose_json(const Weight3& l, std::int64_t p, std::int64_t i, const U3Decomposition& d);
Json czip_scan_json(const CzipScan& s);

Json equivariance_json(const EquivarianceReport& r);

} // namespace zipcox
