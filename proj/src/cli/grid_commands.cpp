#include <cmath>

#include "commands.hpp"
#include "sharplp/means.hpp"

namespace sharplp::cli {

namespace {

void check_grid(double lo, double hi, int n, const char* what) {
  if (n < 2) throw UsageError(std::string(what) + " grid needs at least 2 points");
  if (!(lo < hi)) throw UsageError(std::string(what) + " range must satisfy min < max");
}

double factor(double alpha, double p, Precision precision) {
  if (precision == Precision::High) return to_double(constant_factor<HighReal>(HighReal(alpha), HighReal(p)));
  return constant_factor<double>(alpha, p);
}

}  // namespace

CommandOutput run_contour(const CommandConfig& cfg) {
  const double a_lo = cfg.alpha_min.value_or(0.5);
  const double a_hi = cfg.alpha_max.value_or(1.0);
  const double p_lo = cfg.p_min.value_or(2.0);
  const double p_hi = cfg.p_max.value_or(4.0);
  const int na = cfg.na.value_or(400);
  const int np = cfg.np.value_or(400);
  check_grid(a_lo, a_hi, na, "alpha");
  check_grid(p_lo, p_hi, np, "p");
  if (a_lo < 0 || a_hi > 1) throw UsageError("alpha range must lie in [0, 1]");

  const std::vector<double> alphas = linspace(a_lo, a_hi, na);
  const std::vector<double> ps = linspace(p_lo, p_hi, np);
  for (double p : ps) {
    check_exponent(p);
    if (p < 0 && (a_lo == 0 || a_hi == 1)) throw UsageError("negative p needs alpha strictly inside (0, 1)");
  }

  CommandOutput out;
  if (cfg.format == Format::csv) {
    std::string& s = out.text;
    s.reserve(static_cast<std::size_t>(na) * np * 48);
    s += "alpha,p,value\n";
    for (double p : ps) {
      for (double a : alphas) {
        s += format_number(a);
        s += ',';
        s += format_number(p);
        s += ',';
        s += format_number(factor(a, p, cfg.precision));
        s += '\n';
      }
    }
    return out;
  }
  Json j;
  j["alpha"] = alphas;
  j["p"] = ps;
  Json rows = Json::array();
  for (double p : ps) {
    std::vector<double> row;
    row.reserve(alphas.size());
    for (double a : alphas) row.push_back(factor(a, p, cfg.precision));
    rows.push_back(row);
  }
  j["values"] = std::move(rows);
  out.text = dump(j);
  return out;
}

CommandOutput run_means(const CommandConfig& cfg) {
  const double a_lo = cfg.alpha_min.value_or(0.1);
  const double a_hi = cfg.alpha_max.value_or(0.9);
  const int na = cfg.na.value_or(9);
  check_grid(a_lo, a_hi, na, "alpha");
  if (a_lo <= 0 || a_hi >= 1) throw UsageError("means need alpha strictly inside (0, 1)");
  const std::vector<double> ps = cfg.p_list.empty() ? std::vector<double>{3.0} : cfg.p_list;
  for (double p : ps) check_exponent(p);

  CommandOutput out;
  Json arr = Json::array();
  for (double p : ps) {
    for (double a : linspace(a_lo, a_hi, na)) {
      const double x = a;
      const double y = 1 - a;
      const QMeansSides q = qmeans_sides(x, y, p);
      Json e;
      e["alpha"] = a;
      e["p"] = p;
      e["x"] = x;
      e["y"] = y;
      e["constant_factor"] = factor(a, p, cfg.precision);
      e["qmeans"] = {{"lhs", q.lhs}, {"rhs", q.rhs}, {"forward", q.forward}, {"satisfied", q.satisfied}};
      out.passed = out.passed && q.satisfied;
      if (p > 2) {
        const AGMChain c = agm_chain(x, y, p);
        const bool ordered = c.ordered();
        e["agm"] = {{"A", c.A},         {"G", c.G},         {"Mp", c.Mp}, {"Mp_dual", c.Mp_dual},
                    {"p_dual", c.p_dual}, {"terms", c.terms}, {"ordered", ordered}};
        out.passed = out.passed && ordered;
      } else {
        e["agm"] = nullptr;
      }
      arr.push_back(std::move(e));
    }
  }
  out.text = dump(arr);
  return out;
}

}  // namespace sharplp::cli
