#pragma once

#include "zonoforge/cli.hpp"
#include "zonoforge/graded.hpp"
#include "zonoforge/zonotopal.hpp"

namespace zonoforge::cli::detail {

Json rat_json(const Rat& r);
Json vec_json(const Vec& v);
Json set_json(ColumnSet s);
Json sets_json(const std::vector<ColumnSet>& sets);
Json hilbert_json(const HilbertFn& h);
Json polys_json(const std::vector<HPoly>& polys);
Json order_json(const ColumnOrder& order);
Json direct_sum_json(const DirectSumReport& r);
Json comparison_json(const IdealComparison& c);
Json input_json(const ConfigDocument& doc);
Json bundle_json(const ZonotopalBundle& b);

// Ordered list of named sub-claims with their evidence.
class Claims {
 public:
  void add(const std::string& name, bool pass, Json evidence);
  // Informational entry that never fails the run.
  void note(const std::string& name, Json evidence);
  bool ok() const { return ok_; }
  const Json& json() const { return list_; }

 private:
  Json list_ = Json::array();
  bool ok_ = true;
};

Json report_header(const std::string& command);

}  // namespace zonoforge::cli::detail
