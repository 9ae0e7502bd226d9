#pragma once

#include "gammacalc/theorems.hpp"

#include <json.hpp>

namespace gammacalc {

inline constexpr const char* kToolName = "gammacalc";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

inline Json json_int(const Int& v) {
  // invariant factors in practice are tiny; fall back to a string if not
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

inline Json json_invariants(const std::vector<Int>& inv) {
  Json arr = Json::array();
  for (const Int& d : inv) arr.push_back(json_int(d));
  return arr;
}

inline Json json_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json json_exactness(const ExactnessReport& rep, bool with_witnesses) {
  Json out;
  out["overall"] = rep.overall;
  Json nodes = Json::array();
  for (const NodeReport& nr : rep.nodes) {
    Json n;
    n["kernel"] = json_invariants(nr.kernel_invariants);
    n["image"] = json_invariants(nr.image_invariants);
    n["exact"] = nr.exact;
    if (with_witnesses && !nr.exact) {
      Json w = Json::array();
      for (const auto& coords : nr.witnesses) w.push_back(json_invariants(coords));
      n["witnesses"] = std::move(w);
    }
    nodes.push_back(std::move(n));
  }
  out["nodes"] = std::move(nodes);
  return out;
}

inline Json json_verify(const TheoremH4Report& h4, const CorollaryReport& cor,
                        const Exact1Report& e1) {
  Json r;
  r["gamma"] = json_invariants(h4.gamma_invariants);
  r["tensor"] = json_invariants(h4.tensor_invariants);
  r["h2"] = json_invariants(h4.h2_invariants);
  r["kernel"] = json_invariants(h4.kernel_invariants);
  r["h1_term"] = json_invariants(h4.h1_term_invariants);
  r["exact"] = h4.tail.overall;
  r["kernel_isomorphic"] = h4.kernel_isomorphic;
  r["kernel_in_pairing_image"] = h4.kernel_in_pairing_image;
  r["oracle_checked"] = h4.oracle_checked;
  if (h4.oracle_checked) r["oracle_ok"] = h4.oracle_ok;
  if (!h4.tail.overall) r["tail"] = json_exactness(h4.tail, true);
  Json c;
  c["kernel_via_tensor"] = json_invariants(cor.kernel_via_tensor);
  c["match"] = cor.match;
  c["stabilization_n"] = cor.stabilization_n;
  c["ok"] = cor.ok();
  r["corollary"] = std::move(c);
  Json x;
  x["exact"] = e1.seq.overall;
  x["pairing_kernel_generated"] = e1.pairing_kernel_generated;
  if (!e1.seq.overall) x["nodes"] = json_exactness(e1.seq, true);
  r["exact1"] = std::move(x);
  r["ok"] = h4.ok() && cor.ok() && e1.ok();
  return r;
}

}  // namespace gammacalc
