#include "sigmaforge/serialize.hpp"

#include <sstream>

namespace sigmaforge {

namespace {

std::string factorial_term(const std::string& var, long n) {
  std::ostringstream os;
  os << var;
  if (n != 1) os << "^" << n;
  os << "/" << n << "!";
  return os.str();
}

std::string wrap(const sparse_poly& p) {
  if (p.term_count() <= 1) return p.str();
  return "(" + p.str() + ")";
}

}  // namespace

ojson series_json(const hw1& s) {
  ojson j;
  j["var"] = vars::info(s.var()).name;
  j["kind"] = "hurwitz";
  j["trunc"] = s.trunc();
  ojson coeffs = ojson::array();
  for (const auto& [n, c] : s.coeffs()) coeffs.push_back({n, c.str()});
  j["coeffs"] = coeffs;
  return j;
}

ojson series_json(const hw2& s) {
  ojson j;
  j["var"] = "u1,u3";
  j["kind"] = "hurwitz";
  j["trunc"] = s.trunc();
  ojson coeffs = ojson::array();
  for (const auto& [k, c] : s.coeffs()) coeffs.push_back({k.first, k.second, c.str()});
  j["coeffs"] = coeffs;
  return j;
}

ojson series_json(const laurent1& s) {
  ojson j;
  j["var"] = vars::info(s.var()).name;
  j["kind"] = "laurent";
  j["lead"] = s.lead();
  j["trunc"] = s.known_to();
  ojson coeffs = ojson::array();
  for (const auto& [n, c] : s.coeffs()) coeffs.push_back({n, c.str()});
  j["coeffs"] = coeffs;
  return j;
}

std::string pretty_series(const hw1& s, const std::string& name) {
  std::ostringstream os;
  os << name << " = ";
  if (s.is_zero()) {
    os << "0";
    return os.str();
  }
  const std::string v = vars::info(s.var()).name;
  bool first = true;
  for (const auto& [n, c] : s.coeffs()) {
    if (!first) os << " + ";
    first = false;
    if (n == 0) {
      os << wrap(c);
    } else {
      os << wrap(c) << "*" << factorial_term(v, n);
    }
  }
  return os.str();
}

std::string pretty_series(const hw2& s, const std::string& name) {
  std::ostringstream os;
  os << name << " = ";
  if (s.is_zero()) {
    os << "0";
    return os.str();
  }
  bool first = true;
  for (const auto& [k, c] : s.coeffs()) {
    if (!first) os << " + ";
    first = false;
    os << wrap(c);
    if (k.first) os << "*" << factorial_term("u1", k.first);
    if (k.second) os << "*" << factorial_term("u3", k.second);
  }
  return os.str();
}

std::string pretty_series(const laurent1& s, const std::string& name) {
  std::ostringstream os;
  os << name << " = ";
  if (s.is_zero()) {
    os << "0";
    return os.str();
  }
  const std::string v = vars::info(s.var()).name;
  bool first = true;
  for (const auto& [n, c] : s.coeffs()) {
    if (!first) os << " + ";
    first = false;
    os << wrap(c);
    if (n == 1)
      os << "*" << v;
    else if (n != 0)
      os << "*" << v << "^" << n;
  }
  return os.str();
}

ojson bh_table_json(const bh_table& t) {
  ojson j;
  j["nmax"] = t.nmax;
  ojson rows = ojson::array();
  for (long n = 4; n <= t.nmax; ++n) {
    ojson row;
    row["n"] = n;
    row["C_n_over_n"] = t.cn_over_n(n).str();
    if (n >= 6) row["D_n_over_n"] = t.dn_over_n(n).str();
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

std::string bh_table_pretty(const bh_table& t) {
  std::ostringstream os;
  for (long n = 4; n <= t.nmax; ++n) {
    os << "C_" << n << "/" << n << " = " << t.cn_over_n(n).str() << "\n";
    if (n >= 6) os << "D_" << n << "/" << n << " = " << t.dn_over_n(n).str() << "\n";
  }
  return os.str();
}

std::string bh_table_csv(const bh_table& t) {
  std::ostringstream os;
  os << "n,C_n_over_n,D_n_over_n\n";
  for (long n = 4; n <= t.nmax; ++n) {
    os << n << ",\"" << t.cn_over_n(n).str() << "\",\"" << (n >= 6 ? t.dn_over_n(n).str() : "")
       << "\"\n";
  }
  return os.str();
}

namespace {
std::string ord_text(long o) { return o == ord_infinity ? "inf" : std::to_string(o); }
}  // namespace

ojson valuation_rows_json(const std::vector<valuation_row>& rows) {
  ojson arr = ojson::array();
  for (const auto& r : rows) {
    ojson j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["ord_C"] = ord_text(r.ord_c);
    j["bound_C"] = r.bound_c;
    j["ord_D"] = ord_text(r.ord_d);
    j["bound_D"] = r.bound_d;
    j["pass"] = r.pass;
    arr.push_back(j);
  }
  return arr;
}

std::string valuation_rows_csv(const std::vector<valuation_row>& rows) {
  std::ostringstream os;
  os << "n,p,ord_C,bound_C,ord_D,bound_D,pass\n";
  for (const auto& r : rows)
    os << r.n << "," << r.p << "," << ord_text(r.ord_c) << "," << r.bound_c << ","
       << ord_text(r.ord_d) << "," << r.bound_d << "," << (r.pass ? "1" : "0") << "\n";
  return os.str();
}

ojson check_items_json(const std::vector<check_item>& items) {
  ojson arr = ojson::array();
  for (const auto& it : items) {
    ojson j;
    j["name"] = it.name;
    j["pass"] = it.pass;
    if (!it.detail.empty()) j["detail"] = it.detail;
    arr.push_back(j);
  }
  return arr;
}

std::string check_items_pretty(const std::vector<check_item>& items) {
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "PASS" : "FAIL") << "  " << it.name;
    if (!it.detail.empty()) os << "  [" << it.detail << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace sigmaforge
