#include "report.hpp"

#include <algorithm>
#include <numeric>

namespace zonoforge::cli::detail {

Json rat_json(const Rat& r) { return to_string(r); }

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_json(x));
  return out;
}

Json set_json(ColumnSet s) {
  Json out = Json::array();
  for (auto i : s.indices()) out.push_back(i);
  return out;
}

Json sets_json(const std::vector<ColumnSet>& sets) {
  Json out = Json::array();
  for (auto s : sets) out.push_back(set_json(s));
  return out;
}

Json hilbert_json(const HilbertFn& h) { return Json(h.values); }

Json polys_json(const std::vector<HPoly>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.str());
  return out;
}

Json order_json(const ColumnOrder& order) {
  std::vector<std::size_t> idx(order.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return order.less(a, b); });
  return Json(idx);
}

Json direct_sum_json(const DirectSumReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"degree", row.degree},
                    {"dim_space", row.dim_space},
                    {"dim_ideal", row.dim_ideal},
                    {"dim_polynomials", row.dim_total},
                    {"dim_intersection", row.dim_meet},
                    {"ok", row.ok}});
  }
  return {{"ok", r.ok}, {"degrees", rows}};
}

Json comparison_json(const IdealComparison& c) {
  Json j{{"equal", c.equal}, {"checked_through", c.checked_through}, {"dims_a", c.dims_a}, {"dims_b", c.dims_b}};
  if (c.first_difference) j["first_difference"] = *c.first_difference;
  return j;
}

Json input_json(const ConfigDocument& doc) {
  const Config& c = doc.config;
  Json matrix = Json::array();
  for (std::size_t r = 0; r < c.n; ++r) {
    Json row = Json::array();
    for (const auto& col : c.columns) row.push_back(rat_json(col[r]));
    matrix.push_back(row);
  }
  Json j{{"n", c.n}, {"N", c.size()}, {"matrix", matrix}};
  if (c.b0) {
    Json b0 = Json::array();
    for (std::size_t r = 0; r < c.n; ++r) {
      Json row = Json::array();
      for (const auto& col : *c.b0) row.push_back(rat_json(col[r]));
      b0.push_back(row);
    }
    j["b0"] = b0;
  }
  if (c.lambda) j["lambda"] = vec_json(*c.lambda);
  if (c.lambda_b0) j["lambda_b0"] = vec_json(*c.lambda_b0);
  if (doc.iprime) j["iprime"] = {{"sets", sets_json(*doc.iprime)}, {"closed", doc.iprime_closed}};
  if (doc.i) j["i"] = set_json(*doc.i);
  if (doc.seed) j["seed"] = *doc.seed;
  if (doc.points) {
    Json pts = Json::array();
    for (const auto& p : *doc.points) pts.push_back(vec_json(p));
    j["points"] = pts;
  }
  return j;
}

Json bundle_json(const ZonotopalBundle& b) {
  Json j{{"kind", std::string(kind_name(b.kind))}};
  if (b.internal_set) j["i"] = set_json(*b.internal_set);
  j["order"] = order_json(b.order);
  j["family"] = sets_json(b.family);
  j["dim"] = b.p_space.dim();
  j["hilbert"] = {{"valuation", hilbert_json(b.hilbert_valuation)},
                  {"kernel", hilbert_json(b.hilbert_algebraic)},
                  {"space", hilbert_json(b.hilbert_space)}};
  if (!b.q_basis.empty()) {
    Json q = Json::array();
    for (const auto& e : b.q_basis)
      q.push_back({{"set", set_json(e.index_set)}, {"degree", e.poly.degree()}, {"poly", e.poly.str()}});
    j["q_basis"] = q;
  }
  j["p_basis"] = polys_json(b.p_space.basis());
  j["i_ideal"] = polys_json(b.i_ideal.gens);
  if (b.ieps_ideal) j["ieps_ideal"] = polys_json(b.ieps_ideal->gens);
  j["j_sets"] = sets_json(b.j_sets);
  j["j_ideal"] = polys_json(b.j_ideal.gens);
  return j;
}

void Claims::add(const std::string& name, bool pass, Json evidence) {
  list_.push_back({{"claim", name}, {"pass", pass}, {"evidence", std::move(evidence)}});
  ok_ = ok_ && pass;
}

void Claims::note(const std::string& name, Json evidence) {
  list_.push_back({{"claim", name}, {"pass", nullptr}, {"evidence", std::move(evidence)}});
}

Json report_header(const std::string& command) {
  return {{"tool", "zonoforge"}, {"version", ZONOFORGE_VERSION}, {"command", command}};
}

}  // namespace zonoforge::cli::detail
