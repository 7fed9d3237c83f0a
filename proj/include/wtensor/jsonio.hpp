#pragma once

#include <wtensor/bigint.hpp>
#include <wtensor/poly.hpp>
#include <wtensor/report.hpp>
#include <wtensor/wseq.hpp>

#include <map>
#include <string>

namespace wtensor {

// Exact integers render as JSON numbers while they fit a machine long and as
// decimal strings beyond that, so output never silently loses precision.
inline Json bigint_to_json(const BigInt& v) {
  if (fits_long(v)) return Json(v.get_si());
  return Json(to_string(v));
}

// Constant polynomials render as integers, genuine polynomials as their
// canonical string form.
inline Json poly_to_json(const RingPoly& p) {
  if (p.is_constant()) return bigint_to_json(p.coeff(0));
  return Json(p.str());
}

inline Json seq_to_json(const WSeq<RingPoly>& f) {
  Json arr = Json::array();
  for (size_t i = 0; i < f.trunc(); ++i) arr.push_back(poly_to_json(f(i)));
  return arr;
}

inline Json census_to_json(const std::map<int, BigInt>& census) {
  Json obj = Json::object();
  for (const auto& [key, value] : census) obj[std::to_string(key)] = bigint_to_json(value);
  return obj;
}

}  // namespace wtensor
