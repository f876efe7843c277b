#include "sigmaforge/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "sigmaforge/inversion.hpp"
#include "sigmaforge/serialize.hpp"
#include "sigmaforge/tau.hpp"

namespace sigmaforge {

namespace {

struct job_config {
  std::string command;
  std::string target;
  long weight = 20;
  long k = 0;
  long max_n = 20;
  int genus = 2;
  std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13};
  std::string lambda_spec;
  std::string format = "pretty";
  std::string out_path;
};

std::map<var_id, sparse_poly> parse_lambda(const std::string& spec) {
  std::map<var_id, sparse_poly> m;
  if (spec.empty()) return m;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad --lambda entry '" + item + "'");
    std::string name = item.substr(0, eq);
    var_id v;
    if (name == "l4")
      v = vars::l4();
    else if (name == "l6")
      v = vars::l6();
    else if (name == "l8")
      v = vars::l8();
    else if (name == "l10")
      v = vars::l10();
    else
      throw std::invalid_argument("--lambda accepts l4, l6, l8, l10, got '" + name + "'");
    m[v] = sparse_poly(parse_rational(item.substr(eq + 1)));
  }
  return m;
}

curve_params curve_from(const std::map<var_id, sparse_poly>& lam) {
  curve_params cp = curve_params::generic();
  auto pick = [&](var_id v, sparse_poly dflt) {
    auto it = lam.find(v);
    return it == lam.end() ? dflt : it->second;
  };
  cp.c4 = pick(vars::l4(), cp.c4);
  cp.c6 = pick(vars::l6(), cp.c6);
  cp.c8 = pick(vars::l8(), cp.c8);
  cp.c10 = pick(vars::l10(), cp.c10);
  return cp;
}

void validate(const job_config& cfg) {
  if (cfg.weight < 3) throw std::invalid_argument("--weight must be >= 3");
  if (cfg.max_n < 1) throw std::invalid_argument("--max-n must be >= 1");
  for (unsigned long p : cfg.primes)
    if (!is_prime(p)) throw std::invalid_argument("--primes: " + std::to_string(p) + " is not prime");
}

void emit(const job_config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + cfg.out_path);
  f << text;
}

std::string render(const job_config& cfg, const std::string& kind, const ojson& payload,
                   const std::string& pretty) {
  if (cfg.format == "json") {
    ojson j;
    j["schema"] = "sigma-forge/1";
    j["command"] = cfg.command;
    j["target"] = cfg.target;
    j["weight"] = cfg.weight;
    j["max_n"] = cfg.max_n;
    j[kind] = payload;
    return j.dump(2) + "\n";
  }
  return pretty;
}

hw1 substituted(const hw1& s, const std::map<var_id, sparse_poly>& lam) {
  if (lam.empty()) return s;
  return s.map_coeffs([&](const sparse_poly& p) { return p.substitute(lam); });
}

hw2 substituted(const hw2& s, const std::map<var_id, sparse_poly>& lam) {
  if (lam.empty()) return s;
  return s.map_coeffs([&](const sparse_poly& p) { return p.substitute(lam); });
}

laurent1 substituted(const laurent1& s, const std::map<var_id, sparse_poly>& lam) {
  if (lam.empty()) return s;
  return s.map_coeffs([&](const sparse_poly& p) { return p.substitute(lam); });
}

int do_expand(const job_config& cfg, std::ostream& out) {
  auto lam = parse_lambda(cfg.lambda_spec);
  const std::string& t = cfg.target;
  if (t == "sigma-xi" || t == "sigma-mu" || t == "sigma-tau") {
    sigma_series s = t == "sigma-xi"   ? sigma_xi_route(cfg.weight)
                     : t == "sigma-mu" ? sigma_mu_route(cfg.weight)
                                       : sigma_tau_route(cfg.weight);
    hw2 v = substituted(s.s, lam);
    emit(cfg, render(cfg, "series", series_json(v), pretty_series(v, "sigma") + "\n"), out);
    return 0;
  }
  if (t == "xi" || t == "mu") {
    long k = cfg.k;
    if (k < 0) throw std::invalid_argument("--k must be >= 0");
    hw1 v = t == "xi" ? build_xi_hierarchy(static_cast<int>(k) + 1, cfg.weight)
                            .xi[static_cast<std::size_t>(k)]
                      : build_mu_hierarchy(static_cast<int>(k) + 1, cfg.weight)
                            .mu[static_cast<std::size_t>(k)];
    v = substituted(v, lam);
    std::string name = t + "_" + std::to_string(k);
    emit(cfg, render(cfg, "series", series_json(v), pretty_series(v, name) + "\n"), out);
    return 0;
  }
  if (t == "F" || t == "G") {
    laurent1 v = t == "F" ? f_series(cfg.weight) : g_series(cfg.weight);
    v = substituted(v, lam);
    emit(cfg, render(cfg, "series", series_json(v), pretty_series(v, t) + "\n"), out);
    return 0;
  }
  if (t == "G-infinity") {
    laurent1 v = substituted(g_at_infinity(std::max(cfg.weight, 12L)), lam);
    emit(cfg, render(cfg, "series", series_json(v), pretty_series(v, "G") + "\n"), out);
    return 0;
  }
  if (t == "bh") {
    bh_table tab = build_bh_table(curve_from(lam), cfg.max_n);
    std::string pretty = cfg.format == "csv" ? bh_table_csv(tab) : bh_table_pretty(tab);
    emit(cfg, render(cfg, "table", bh_table_json(tab), pretty), out);
    return 0;
  }
  if (t == "universal-bernoulli") {
    auto b = universal_bernoulli(cfg.max_n);
    ojson rows = ojson::array();
    std::ostringstream pretty;
    for (long n = 0; n < static_cast<long>(b.size()); ++n) {
      rows.push_back({n, b[n].str()});
      pretty << "Bhat_" << n << " = " << b[n].str() << "\n";
    }
    emit(cfg, render(cfg, "table", rows, pretty.str()), out);
    return 0;
  }
  throw std::invalid_argument("unknown expand target '" + t + "'");
}

std::vector<check_item> suite_heat(long weight) {
  std::vector<check_item> items;
  sigma_series s = sigma_xi_route(weight + 6);
  auto rep = verify_annihilation(build_heat_system(2), {"Q0", "Q2", "Q4", "Q6"}, s.s, weight);
  for (const auto& op : rep.ops) {
    std::string detail;
    if (!op.residuals.empty()) {
      const auto& r = op.residuals.front();
      detail = "residual at u1^" + std::to_string(r.m) + " u3^" + std::to_string(r.n) + ": " +
               r.value.str();
    }
    items.push_back({op.name + " sigma = 0 through weight " + std::to_string(op.checked_to),
                     op.residuals.empty(), detail});
  }
  hw1 s1 = genus1_sigma(weight + 2);
  auto sys1 = build_heat_system(1);
  const char* names1[] = {"euler operator", "heat operator"};
  for (std::size_t i = 0; i < sys1.size(); ++i) {
    hw1 r = sys1[i].apply1(s1);
    std::string detail;
    if (!r.is_zero())
      detail = "residual at order " + std::to_string(r.coeffs().begin()->first) + ": " +
               r.coeffs().begin()->second.str();
    items.push_back(
        {std::string("genus-1 ") + names1[i] + " annihilates sigma", r.is_zero(), detail});
  }
  return items;
}

std::vector<check_item> suite_routes(long weight) {
  std::vector<check_item> items;
  sigma_series sx = sigma_xi_route(weight);
  sigma_series sm = sigma_mu_route(weight);
  sigma_series st = sigma_tau_route(weight);
  items.push_back(
      {"xi route = mu route through weight " + std::to_string(weight), sx.s == sm.s, ""});
  items.push_back(
      {"xi route = tau route through weight " + std::to_string(weight), sx.s == st.s, ""});
  xi_hierarchy hx = build_xi_hierarchy(static_cast<int>(weight / 3) + 1, weight);
  auto bad = verify_xi_hierarchy(hx);
  items.push_back({"xi hierarchy relations", bad.empty(), bad.empty() ? "" : bad.front()});
  mu_hierarchy hm = build_mu_hierarchy(static_cast<int>(weight / 3) + 2, weight / 3 + 2);
  auto bad2 = verify_mu_hierarchy(hm);
  items.push_back({"mu hierarchy relations", bad2.empty(), bad2.empty() ? "" : bad2.front()});
  return items;
}

std::vector<check_item> suite_integrality(long weight) {
  std::vector<check_item> items;
  auto describe = [](const integrality_report& rep) {
    if (rep.all_pass()) return std::string();
    const auto& f = rep.failures.front();
    return "fails at (" + std::to_string(f.m) + "," + std::to_string(f.n) + "): coefficient " +
           to_string(f.fail.coeff) + " on " + f.fail.mono.str();
  };
  sigma_series s = sigma_xi_route(weight);
  subring_spec scaled;  // Z[l4, l6, l8, 2 l10]
  scaled.scales[vars::l10()] = 2;
  auto rep1 = check_integrality(s.s, scaled);
  items.push_back({"sigma in Z[l4,l6,l8,2l10]<<u1,u3>>", rep1.all_pass(), describe(rep1)});

  subring_spec z5s = scaled;
  z5s.allowed_primes = {5};
  auto rep2 = check_integrality(s.s, z5s);
  items.push_back(
      {"heat-route sigma in Z[1/5; l4,l6,l8,2l10]<<u1,u3>>", rep2.all_pass(), describe(rep2)});

  local_frame fr = local_expansion(2, weight + 8, static_cast<int>(weight) + 8);
  hw2 tau = tau_series(fr, weight);
  subring_spec plain;
  auto rep3 = check_integrality(tau, plain);
  items.push_back({"tau in Z[lambda]<<u1,u3>>", rep3.all_pass(), describe(rep3)});
  auto rep3b = check_integrality(sigma_from_tau(tau, normalization_constants(fr)), plain);
  items.push_back({"tau-route sigma in Z[lambda]<<u1,u3>>", rep3b.all_pass(), describe(rep3b)});

  auto rep4 = check_integrality(genus1_sigma(weight), plain);
  items.push_back({"genus-1 sigma in Z[l4,l6]<<u>>", rep4.all_pass(), describe(rep4)});
  return items;
}

std::vector<check_item> suite_ode(long weight) {
  std::vector<check_item> items;
  long N = std::max(weight, 12L);
  laurent1 F = f_series(N);
  items.push_back({"(F'/2)^2 = quintic(F)", f_ode1_residual(F).is_zero(), ""});
  items.push_back({"F'' = 10F^4 + 6l4F^2 + 4l6F + 2l8", f_ode2_residual(F).is_zero(), ""});
  laurent1 G = g_series(N);
  items.push_back({"(GG'/2)^2 = quintic(G)", g_ode1_residual(G).is_zero(), ""});
  items.push_back({"G^4(G'''-12GG') = 4l8GG' + 12l10G'", g_ode2_residual(G).is_zero(), ""});
  laurent1 Gi = g_at_infinity(N);
  items.push_back({"G at infinity satisfies both equations",
                   g_ode1_residual(Gi).is_zero() && g_ode2_residual(Gi).is_zero(), ""});
  items.push_back(
      {"recurrence matches order-by-order matching", Gi == g_at_infinity_by_matching(N), ""});
  auto xy = xy_from_g(Gi);
  laurent1 resid = xy.y * xy.y -
                   (xy.x.pow(5) + xy.x.pow(3).scale(sparse_poly::var(vars::l4())) +
                    xy.x.pow(2).scale(sparse_poly::var(vars::l6())) +
                    xy.x.scale(sparse_poly::var(vars::l8())));
  resid.set_coeff(0, resid.coeff(0) - sparse_poly::var(vars::l10()));
  items.push_back({"y(u)^2 = quintic(x(u))", resid.is_zero(), ""});
  return items;
}

std::vector<check_item> suite_degeneration(long weight) {
  degeneration_report rep = weierstrass_degeneration(std::max(weight, 12L));
  std::vector<check_item> items;
  items.push_back({"l8 = l10 = 0 series equals the cubic-curve series", rep.series_equal, ""});
  items.push_back({"degenerate series satisfies (P')^2 = 4(P^3 + l4 P + l6)", rep.ode_zero, ""});
  return items;
}

std::vector<check_item> suite_valuations(const job_config& cfg, std::vector<valuation_row>* rows_out) {
  auto lam = parse_lambda(cfg.lambda_spec);
  bh_table t = build_bh_table(curve_from(lam), cfg.max_n);
  std::vector<check_item> items;
  auto rows = valuation_report(t, cfg.primes, cfg.max_n);
  if (rows_out) *rows_out = rows;
  bool all = true;
  std::string detail;
  for (const auto& r : rows)
    if (!r.pass) {
      all = false;
      detail = "n=" + std::to_string(r.n) + " p=" + std::to_string(r.p);
      break;
    }
  items.push_back({"valuation bounds for C_n/n and D_n/n", all, detail});
  bool parity = true;
  for (long n = 5; n <= cfg.max_n; n += 2)
    if (!t.Cn[n].is_zero() || !t.Dn[n].is_zero()) parity = false;
  items.push_back({"C_n = D_n = 0 for odd n", parity, ""});
  return items;
}

std::vector<check_item> suite_clarke(const job_config& cfg) {
  std::vector<check_item> items;
  long top = std::min(cfg.max_n, 12L);
  for (long n = 1; n <= top; ++n)
    for (auto& it : clarke_check(n)) items.push_back(std::move(it));
  long two_route_top = std::min(cfg.max_n, 14L);
  auto b = universal_bernoulli(two_route_top);
  bool two = true;
  for (long n = 1; n <= two_route_top; ++n)
    if (!(b[n].scale(frac(1, n)) == bhat_over_n_by_tau(n))) two = false;
  items.push_back({"inversion route = combinatorial route for Bhat_n/n", two, ""});
  auto classical = classical_bernoulli(two_route_top);
  std::map<var_id, sparse_poly> sub;
  for (int n = 1; n <= static_cast<int>(two_route_top); ++n)
    sub.emplace(vars::f(n), sparse_poly(n % 2 == 0 ? 1 : -1));
  bool cls = true;
  for (long n = 0; n <= two_route_top; ++n)
    if (!(b[n].substitute(sub) == sparse_poly(classical[n]))) cls = false;
  items.push_back({"f_n = (-1)^n reproduces the classical numbers", cls, ""});
  return items;
}

std::vector<check_item> suite_lemmas(const job_config& cfg) {
  auto lam = parse_lambda(cfg.lambda_spec);
  bh_table t = build_bh_table(curve_from(lam), cfg.max_n);
  auto items = lemma_relation_checks(t, cfg.max_n);
  for (auto& it : tau_u_valuation_checks(34)) items.push_back(std::move(it));
  for (auto& it : special_curve_checks(3)) items.push_back(std::move(it));
  return items;
}

int do_check(const job_config& cfg, std::ostream& out) {
  std::vector<check_item> items;
  std::vector<valuation_row> rows;
  const std::string& s = cfg.target;
  if (s == "heat")
    items = suite_heat(cfg.weight);
  else if (s == "routes")
    items = suite_routes(cfg.weight);
  else if (s == "integrality")
    items = suite_integrality(cfg.weight);
  else if (s == "ode")
    items = suite_ode(cfg.weight);
  else if (s == "degeneration")
    items = suite_degeneration(cfg.weight);
  else if (s == "valuations")
    items = suite_valuations(cfg, &rows);
  else if (s == "clarke")
    items = suite_clarke(cfg);
  else if (s == "lemmas")
    items = suite_lemmas(cfg);
  else
    throw std::invalid_argument("unknown check suite '" + s + "'");

  bool all = true;
  for (const auto& it : items) all = all && it.pass;
  std::string text;
  if (s == "valuations" && cfg.format == "csv") {
    text = valuation_rows_csv(rows);
  } else if (s == "valuations" && cfg.format == "json") {
    ojson j = check_items_json(items);
    ojson payload;
    payload["checks"] = j;
    payload["rows"] = valuation_rows_json(rows);
    text = render(cfg, "report", payload, "");
  } else if (cfg.format == "json") {
    text = render(cfg, "checks", check_items_json(items), "");
  } else {
    text = check_items_pretty(items);
  }
  emit(cfg, text, out);
  return all ? 0 : 1;
}

int do_dump_operators(const job_config& cfg, std::ostream& out) {
  auto ops = build_heat_system(cfg.genus);
  std::ostringstream pretty;
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    std::string name =
        cfg.genus == 2 ? "Q" + std::to_string(2 * i) : (i == 0 ? "euler" : "heat");
    pretty << name << ":\n" << ops[i].str() << "\n\n";
    arr.push_back({{"name", name}, {"terms", ops[i].str()}});
  }
  emit(cfg, cfg.format == "json" ? render(cfg, "operators", arr, "") : pretty.str(), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact expansion and verification engine for genus-2 sigma functions"};
  app.require_subcommand(1);

  job_config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--weight", cfg.weight, "series weight / order bound");
    sub->add_option("--k", cfg.k, "slice index for xi/mu targets");
    sub->add_option("--max-n", cfg.max_n, "largest index n in tables");
    sub->add_option("--primes", cfg.primes, "primes for valuation checks")->delimiter(',');
    sub->add_option("--lambda", cfg.lambda_spec, "curve parameters, e.g. l4=0,l10=-1");
    sub->add_option("--format", cfg.format, "pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    sub->add_option("--out", cfg.out_path, "write output to file");
  };

  CLI::App* expand = app.add_subcommand("expand", "compute a series or table");
  expand
      ->add_option("target", cfg.target,
                   "sigma-xi|sigma-mu|sigma-tau|xi|mu|F|G|G-infinity|bh|universal-bernoulli")
      ->required();
  add_common(expand);

  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check
      ->add_option("suite", cfg.target,
                   "heat|routes|integrality|ode|degeneration|valuations|clarke|lemmas")
      ->required();
  add_common(check);

  CLI::App* dump = app.add_subcommand("dump-operators", "print the annihilating operators");
  dump->add_option("--genus", cfg.genus, "1 or 2")->check(CLI::IsMember({1, 2}));
  add_common(dump);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    validate(cfg);
    if (expand->parsed()) {
      cfg.command = "expand";
      return do_expand(cfg, out);
    }
    if (check->parsed()) {
      cfg.command = "check";
      return do_check(cfg, out);
    }
    cfg.command = "dump-operators";
    return do_dump_operators(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace sigmaforge
