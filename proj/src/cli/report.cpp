#include "dualpf/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dualpf/error.hpp"

namespace dualpf::report {

namespace {

Json to_array(const Vector& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json ranking_json(const RankTable& t) {
  Json groups = Json::array();
  for (const auto& g : t.groups) {
    Json ids = Json::array();
    for (int v : g) ids.push_back(v + 1);
    groups.push_back(std::move(ids));
  }
  return groups;
}

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void row(std::ostringstream& os, const std::string& head, const Vector& v, int precision) {
  os << head;
  for (double x : v) os << '\t' << fixed(x, precision);
  os << '\n';
}

Vector read_vector(const Json& j, const char* key) {
  const auto& a = j.at(key);
  if (!a.is_array()) throw ParseError(0, std::string("field '") + key + "' is not an array");
  Vector v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
  return v;
}

}  // namespace

std::string fixed(double v, int precision) {
  if (std::abs(v) < 0.5 * std::pow(10.0, -precision)) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

Json spectral_json(const PerronPair& p, int m, double residual) {
  Json j;
  j["n"] = p.x_s.size();
  j["m"] = m;
  j["lambda_s"] = p.lambda_s;
  j["x_s"] = to_array(p.x_s);
  j["iterations"] = p.iterations;
  j["gap"] = p.gap;
  j["residual"] = residual;
  return j;
}

std::string spectral_text(const PerronPair& p, int m, double residual, int precision) {
  std::ostringstream os;
  os << "n = " << p.x_s.size() << ", m = " << m << '\n';
  os << "lambda_s = " << fixed(p.lambda_s, precision) << '\n';
  os << "Vertices";
  for (Eigen::Index i = 0; i < p.x_s.size(); ++i) os << '\t' << i + 1;
  os << '\n';
  row(os, "x_s", p.x_s, precision);
  os << "iterations = " << p.iterations << ", gap = " << scientific(p.gap)
     << ", residual = " << scientific(residual) << '\n';
  return os.str();
}

Json centrality_json(const DualCentralityResult& r, const RankTable& ranking,
                     const std::optional<TableVerdict>& verdict) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["lambda_s"] = r.lambda_s;
  j["lambda_d"] = r.lambda_d;
  j["x_s"] = to_array(r.x_s);
  j["x_d"] = to_array(r.x_d);
  j["ranking"] = ranking_json(ranking);
  j["residual_standard"] = r.residual.standard;
  j["residual_dual"] = r.residual.dual;
  if (verdict) {
    Json v;
    v["case"] = verdict->label;
    v["matched"] = verdict->match.matched;
    v["max_abs_diff"] = verdict->match.max_abs_diff;
    v["tol"] = verdict->match.tol;
    j["table_match"] = std::move(v);
  }
  return j;
}

std::string centrality_text(const DualCentralityResult& r, const RankTable& ranking,
                            const std::optional<TableVerdict>& verdict, int precision) {
  std::ostringstream os;
  os << "n = " << r.n << ", m = " << r.m << '\n';
  os << "lambda_s = " << fixed(r.lambda_s, precision) << '\n';
  os << "lambda_d = " << fixed(r.lambda_d, precision) << '\n';
  os << "Vertices";
  for (int i = 0; i < r.n; ++i) os << '\t' << i + 1;
  os << '\n';
  row(os, "x_s", r.x_s, precision);
  row(os, "x_d", r.x_d, precision);
  os << "ranking: " << format_ranking(ranking) << '\n';
  os << "residual: standard " << scientific(r.residual.standard) << ", dual "
     << scientific(r.residual.dual) << (r.residual.passed ? " (pass)" : " (FAIL)") << '\n';
  if (verdict) {
    os << "table match (" << verdict->label << "): " << (verdict->match.matched ? "yes" : "no")
       << ", max |diff| " << scientific(verdict->match.max_abs_diff) << '\n';
  }
  return os.str();
}

std::string centrality_csv(const DualCentralityResult& r, const RankTable& ranking,
                           int precision) {
  std::vector<int> group_of(r.n, 0);
  for (std::size_t g = 0; g < ranking.groups.size(); ++g) {
    for (int v : ranking.groups[g]) group_of[v] = static_cast<int>(g) + 1;
  }
  std::ostringstream os;
  os << "vertex,x_s,x_d,rank_group\n";
  for (int i = 0; i < r.n; ++i) {
    os << i + 1 << ',' << fixed(r.x_s[i], precision) << ',' << fixed(r.x_d[i], precision) << ','
       << group_of[i] << '\n';
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

StoredResult parse_result_json(const std::string& text) {
  StoredResult out;
  try {
    const Json j = Json::parse(text);
    out.n = j.at("n").get<int>();
    out.m = j.at("m").get<int>();
    out.lambda_s = j.at("lambda_s").get<double>();
    out.lambda_d = j.at("lambda_d").get<double>();
    out.x_s = read_vector(j, "x_s");
    out.x_d = read_vector(j, "x_d");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("result file: ") + e.what());
  }
  if (out.x_s.size() != out.n || out.x_d.size() != out.n) {
    throw ParseError(0, "result file: vector lengths do not match n");
  }
  return out;
}

}  // namespace dualpf::report
