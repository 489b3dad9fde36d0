#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dualpf/centrality.hpp"
#include "dualpf/spectral.hpp"

namespace dualpf::report {

using Json = nlohmann::ordered_json;

/// Fixed-point text; values that round to zero print without a sign.
std::string fixed(double v, int precision);

struct TableVerdict {
  std::string label;
  TableMatch match;
};

Json spectral_json(const PerronPair& p, int m, double residual);
std::string spectral_text(const PerronPair& p, int m, double residual, int precision);

/// Keys in this order: n, m, lambda_s, lambda_d, x_s, x_d, ranking,
/// residual_standard, residual_dual, and table_match when a verdict exists.
Json centrality_json(const DualCentralityResult& r, const RankTable& ranking,
                     const std::optional<TableVerdict>& verdict);
std::string centrality_text(const DualCentralityResult& r, const RankTable& ranking,
                            const std::optional<TableVerdict>& verdict, int precision);
/// Columns: vertex, x_s, x_d, rank_group (1-based group position).
std::string centrality_csv(const DualCentralityResult& r, const RankTable& ranking,
                           int precision);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

/// Fields recovered from a centrality JSON document.
struct StoredResult {
  int n = 0;
  int m = 0;
  double lambda_s = 0.0;
  double lambda_d = 0.0;
  Vector x_s;
  Vector x_d;
};

/// Throws ParseError on missing or mistyped fields.
StoredResult parse_result_json(const std::string& text);

}  // namespace dualpf::report
