#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <variant>

#include "exotica/exotica.hpp"

namespace exotica::cli {

namespace {

using Cell = std::variant<long, double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;  // CSV footer comments / JSON "notes"
  std::string checked;
  Json summary = Json::object();
};

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format12(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(v);
        } else {
          return v.find(',') == std::string::npos ? v : "\"" + v + "\"";
        }
      },
      c);
}

Json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format12(v);
          return round12(v);
        } else {
          return v;
        }
      },
      c);
}

std::string render(const std::string& name, const Table& t, Format f) {
  if (f == Format::Csv) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    for (const auto& n : t.notes) out << "# " << n << '\n';
    out << "# checked: " << t.checked << '\n';
    return out.str();
  }
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  Json out = {{"experiment", name}, {"checked", t.checked}, {"rows", rows}, {"summary", t.summary}, {"notes", t.notes}};
  return out.dump(2) + "\n";
}

/// results[i] = f(i), computed on up to `threads` workers; order-independent.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned threads, const std::function<R(std::size_t)>& f) {
  std::vector<std::optional<R>> slots(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < n; i += workers) slots[i] = f(i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<long> sorted(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int checked_rank(const Config& cfg, const std::string& key, long fallback, int min) {
  long d = cfg.integer(key, fallback);
  if (d < min || d > 26) throw Error(ErrorCode::ConfigError, cfg.path(key) + ": rank must lie in [" + std::to_string(min) + ", 26]");
  return static_cast<int>(d);
}

// alpha grids accept "star" for the threshold (2d-1)^(-1/p).
std::vector<double> alpha_grid(const Config& cfg, const std::string& fallback, int d, double p) {
  std::string text = cfg.text("alpha", fallback);
  std::vector<double> out;
  if (text.find("star") != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
      if (tok == "star") {
        out.push_back(std::pow(2.0 * d - 1.0, -1.0 / p));
      } else {
        try {
          out.push_back(std::stod(tok));
        } catch (const std::exception&) {
          throw Error(ErrorCode::ConfigError, cfg.path("alpha") + ": bad value \"" + tok + "\"");
        }
      }
    }
  } else {
    Config tmp("alpha");
    tmp.set("alpha=" + text);
    try {
      out = tmp.grid("alpha", {});
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, cfg.path("alpha") + ": " + e.what());
    }
  }
  for (double a : out) {
    if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::ConfigError, cfg.path("alpha") + ": values must lie in (0, 1)");
  }
  return sorted(out);
}

void require_p(const Config& cfg, const std::vector<double>& ps, double min) {
  for (double p : ps) {
    if (!(p >= min)) throw Error(ErrorCode::ConfigError, cfg.path("p") + ": values must be >= " + format12(min));
  }
}

// ---------------------------------------------------------------------------

Outcome run_okayasu(const Config& cfg, Format f, unsigned threads) {
  cfg.restrict_to({"d", "p", "alpha", "k_max", "enumerate_up_to"});
  const int d = checked_rank(cfg, "d", 2, 2);
  const auto ps = sorted(cfg.grid("p", {2.0}));
  require_p(cfg, ps, 2.0);
  const int k_max = static_cast<int>(cfg.integer("k_max", 10));
  const int enum_k = static_cast<int>(cfg.integer("enumerate_up_to", 8));
  if (k_max < 1) throw Error(ErrorCode::ConfigError, cfg.path("k_max") + ": must be positive");

  std::vector<std::pair<double, double>> points;
  for (double p : ps)
    for (double a : alpha_grid(cfg, "0.5,star,0.9", d, p)) points.emplace_back(p, a);
  auto tables = parallel_map<OkayasuTable>(points.size(), threads, [&](std::size_t i) {
    return okayasu_table(PosDefFamily::haagerup(points[i].second, d), points[i].first, k_max, enum_k);
  });

  Table t;
  t.columns = {"d", "p", "alpha", "k", "norm", "bound", "pass", "enumerated"};
  t.checked = "sphere cutoff norms of alpha^|s| on F_d against k+1 (closed form, enumeration, and the all-k analytic decision)";
  int status = 0;
  Json summary = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& tab = tables[i];
    const auto [p, a] = points[i];
    for (const auto& r : tab.rows) {
      t.rows.push_back({static_cast<long>(d), p, a, static_cast<long>(r.k), r.norm, r.bound, r.pass,
                        r.enumerated ? Cell(*r.enumerated) : Cell(std::string())});
      if (r.enumerated && std::abs(*r.enumerated - r.norm) > 1e-12 * r.norm) status = 1;
    }
    const bool analytic = tab.analytic_decision.value_or(tab.finite_decision);
    const bool fails_in_range = tab.first_failing_k && *tab.first_failing_k <= k_max;
    if (analytic && !tab.finite_decision) status = 1;
    if (tab.finite_decision == fails_in_range) status = 1;
    std::string first = tab.first_failing_k ? std::to_string(*tab.first_failing_k) : "none";
    t.notes.push_back("p=" + format12(p) + " alpha=" + format12(a) + " rows_pass=" + (tab.finite_decision ? "true" : "false") +
                      " all_k_pass=" + (analytic ? "true" : "false") + " alpha_star=" + format12(*tab.alpha_star) +
                      " first_failing_k=" + first);
    summary.push_back({{"p", round12(p)},
                       {"alpha", round12(a)},
                       {"rows_pass", tab.finite_decision},
                       {"all_k_pass", analytic},
                       {"alpha_star", round12(*tab.alpha_star)},
                       {"first_failing_k", tab.first_failing_k ? Json(*tab.first_failing_k) : Json(nullptr)}});
  }
  t.summary = {{"points", summary}};
  return {status, render("okayasu", t, f)};
}

Outcome run_lp_sum(const Config& cfg, Format f, unsigned threads) {
  cfg.restrict_to({"d", "p", "alpha", "enum_radius"});
  std::vector<long> ds = sorted(cfg.int_grid("d", {2}));
  for (long d : ds)
    if (d < 1 || d > 26) throw Error(ErrorCode::ConfigError, cfg.path("d") + ": rank must lie in [1, 26]");
  const auto ps = sorted(cfg.grid("p", {2.0}));
  require_p(cfg, ps, 1.0);
  const int enum_radius = static_cast<int>(cfg.integer("enum_radius", 6));

  struct Point {
    int d;
    double p, a;
  };
  std::vector<Point> points;
  for (long d : ds)
    for (double p : ps)
      for (double a : alpha_grid(cfg, "0.05:0.95:0.05", static_cast<int>(d), p)) points.push_back({static_cast<int>(d), p, a});

  struct Result {
    LpCertificate cert;
    double ratio;
    double enumerated;
    bool ok;
  };
  auto results = parallel_map<Result>(points.size(), threads, [&](std::size_t i) {
    const auto& pt = points[i];
    auto phi = PosDefFamily::haagerup(pt.a, pt.d);
    auto cert = lp_certify(phi, pt.p);
    double enumerated = 0.0;
    for (int k = 0; k <= enum_radius; ++k) {
      for_each_word_of_length(pt.d, k, [&](std::span<const Letter> l) {
        enumerated += std::pow(std::abs(eval_posdef(phi, GroupElement(reduce_word(l, pt.d)))), pt.p);
      });
    }
    auto th = haagerup_threshold(pt.a, pt.p, pt.d);
    bool ok = (cert.decision == LpDecision::Summable) == (th.side == ThresholdSide::Below);
    if (cert.decision == LpDecision::Summable) {
      const double s = *cert.closed_form;
      ok = ok && std::abs(cert.partial_sum - s) <= cert.tail_bound + 1e-12 * s;
      ok = ok && enumerated <= s * (1 + 1e-12);
    } else {
      ok = ok && cert.divergence_witness && *cert.divergence_witness > 0;
    }
    return Result{cert, th.ratio, enumerated, ok};
  });

  Table t;
  t.columns = {"d", "p", "alpha", "ratio", "decision", "closed_form", "partial_sum", "tail_bound", "radius", "enumerated", "ok"};
  t.checked = "p-summability of alpha^|s| over F_d: geometric closed form below (2d-1) alpha^p = 1, divergence witness at or above";
  int status = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& r = results[i];
    t.rows.push_back({static_cast<long>(points[i].d), points[i].p, points[i].a, r.ratio,
                      std::string(to_string(r.cert.decision)),
                      r.cert.closed_form ? Cell(*r.cert.closed_form) : Cell(std::string()), r.cert.partial_sum,
                      r.cert.tail_bound, static_cast<long>(r.cert.enumeration_radius), r.enumerated, r.ok});
    if (!r.ok) status = 1;
  }
  t.notes.push_back("enumerated = explicit sum over the ball of radius " + std::to_string(enum_radius));
  return {status, render("lp-sum", t, f)};
}

Outcome run_kesten(const Config& cfg, Format f, unsigned) {
  cfg.restrict_to({"d", "radii", "element"});
  const int d = checked_rank(cfg, "d", 2, 1);
  auto radii = sorted(cfg.int_grid("radii", {4, 8, 12}));
  const Group g = Group::free(d);
  const auto x = parse_ring_element(cfg.text("element", "h"), g);
  const double l1 = l1_norm(x);

  Table t;
  t.columns = {"R", "ball_size", "iterations", "converged", "lower_bound", "l1_norm"};
  t.checked = "norms of ball compressions of the left regular representation: nondecreasing in R and at most ||x||_1";
  int status = 0;
  double prev = -1.0;
  for (long r : radii) {
    if (r < 1) throw Error(ErrorCode::ConfigError, cfg.path("radii") + ": radii must be >= 1");
    auto res = truncated_regular(x, static_cast<int>(r));
    t.rows.push_back({r, static_cast<long>(res.ball_size), static_cast<long>(res.iterations), res.converged,
                      res.lower_bound, l1});
    if (res.lower_bound < prev || res.lower_bound > l1 * (1 + 1e-12)) status = 1;
    prev = res.lower_bound;
  }
  if (cfg.text("element", "h") == "h") {
    const double limit = 2.0 * std::sqrt(2.0 * d - 1.0);
    t.notes.push_back("reduced norm of the generator sum on F_" + std::to_string(d) + ": 2 sqrt(2d-1) = " + format12(limit));
    t.summary = {{"reduced_norm", round12(limit)}};
  }
  return {status, render("kesten", t, f)};
}

Outcome run_induce_check(const Config& cfg, Format f, unsigned threads) {
  cfg.restrict_to({"d", "generator", "beta", "p", "truncation", "ri", "rj"});
  const int d = checked_rank(cfg, "d", 2, 1);
  const Group g = Group::free(d);
  const SubgroupSpec h = CyclicGen{parse_word(cfg.text("generator", "a"), d)};
  const Word ri = parse_word(cfg.text("ri", ""), d), rj = parse_word(cfg.text("rj", ""), d);
  const auto betas = sorted(cfg.grid("beta", {0.3, 0.5, 0.7}));
  const auto ps = sorted(cfg.grid("p", {2.0, 3.0, 4.0}));
  require_p(cfg, ps, 1.0);
  for (double b : betas)
    if (!(b > 0 && b < 1)) throw Error(ErrorCode::ConfigError, cfg.path("beta") + ": values must lie in (0, 1)");
  const int trunc = static_cast<int>(cfg.integer("truncation", 40));

  std::vector<std::pair<double, double>> points;
  for (double b : betas)
    for (double p : ps) points.emplace_back(b, p);
  auto reports = parallel_map<InducedIdentityReport>(points.size(), threads, [&](std::size_t i) {
    return induced_lp_identity(g, h, PosDefFamily::haagerup(points[i].first, 1), ri, rj, points[i].second, trunc);
  });

  Table t;
  t.columns = {"beta", "p", "lhs", "rhs", "tail_bound", "closed_form", "closed_form_gap", "pass"};
  t.checked = "l^p mass of a coefficient of the induced representation equals the l^p mass of the inducing function on H";
  int status = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& r = reports[i];
    const double gap = r.closed_form ? std::abs(r.rhs - *r.closed_form) : 0.0;
    t.rows.push_back({points[i].first, points[i].second, r.lhs, r.rhs, r.tail_bound,
                      r.closed_form ? Cell(*r.closed_form) : Cell(std::string()), gap, r.pass});
    if (!r.pass || gap > r.tail_bound + 1e-12) status = 1;
  }
  t.notes.push_back("H = <" + to_string(std::get<CyclicGen>(h).generator) + ">, r_i = \"" + to_string(ri) +
                    "\", r_j = \"" + to_string(rj) + "\", truncation " + std::to_string(trunc));
  return {status, render("induce-check", t, f)};
}

Outcome run_marginal(const Config& cfg, Format f, std::uint64_t seed) {
  cfg.restrict_to({"trials", "grid_size", "d"});
  const int d = checked_rank(cfg, "d", 2, 1);
  const long trials = cfg.integer("trials", 1000);
  const long n = cfg.integer("grid_size", 8);
  if (trials < 1 || n < 1) throw Error(ErrorCode::ConfigError, cfg.path("trials") + ": trials and grid_size must be positive");
  auto words = ball(d, 3);
  if (static_cast<long>(words.size()) < n) throw Error(ErrorCode::ConfigError, cfg.path("grid_size") + ": too large");
  std::vector<GroupElement> grid(words.begin(), words.begin() + n);
  auto res = marginal_trials(grid, grid, static_cast<int>(trials), seed);

  Table t;
  t.columns = {"trials", "checks", "violations", "worst_margin", "worst_g_defect", "seed"};
  t.checked = "|<lambda(e,k) f, f>| <= <lambda(k) g, g> where g(k') is the l^2 norm of f on H x {k'}";
  t.rows.push_back({static_cast<long>(res.trials), static_cast<long>(res.checks), static_cast<long>(res.violations),
                    res.worst_margin, res.worst_g_defect, std::to_string(seed)});
  t.notes.push_back("grid: first " + std::to_string(n) + " shortlex words of F_" + std::to_string(d) + " in each factor");
  const int status = (res.violations == 0 && res.worst_g_defect <= 1e-12) ? 0 : 1;
  return {status, render("marginal", t, f)};
}

// |SL_2(Z/NZ)| = N^3 prod_{q | N} (1 - q^-2)
long expected_order(long n) {
  long order = n * n * n;
  long m = n;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    order = order / (q * q) * (q * q - 1);
    while (m % q == 0) m /= q;
  }
  if (m > 1) order = order / (m * m) * (m * m - 1);
  return order;
}

Outcome run_congruence(const Config& cfg, Format f, unsigned threads) {
  cfg.restrict_to({"levels", "element", "seminorm_levels"});
  auto levels = sorted(cfg.int_grid("levels", {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}));
  for (long n : levels)
    if (n < 2) throw Error(ErrorCode::ConfigError, cfg.path("levels") + ": levels must be >= 2");

  struct Row {
    long order;
    SpectralGapReport<double> gap;
  };
  auto rows = parallel_map<Row>(levels.size(), threads, [&](std::size_t i) {
    const Group q = Group::sl2z_mod(levels[i]);
    auto rep = quotient_regular_rep(levels[i], q);
    return Row{static_cast<long>(rep.dim()), spectral_gap(rep, {q.generator(0), q.generator(1)})};
  });

  Table t;
  t.columns = {"N", "order", "expected_order", "dim", "invariant_dim", "gap", "epsilon", "witness_displacement", "certified"};
  t.checked = "regular representations of SL2(Z/NZ): group orders, and the gap of sum (I - pi(s))*(I - pi(s)) off invariant vectors";
  int status = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& r = rows[i];
    const bool certified = r.gap.witness_displacement >= r.gap.epsilon - 1e-9;
    const long expect = expected_order(levels[i]);
    t.rows.push_back({levels[i], r.order, expect, static_cast<long>(r.gap.dim), static_cast<long>(r.gap.invariant_dim),
                      r.gap.gap, r.gap.epsilon, r.gap.witness_displacement, certified});
    if (!certified || !(r.gap.gap > 0) || r.order != expect) status = 1;
  }
  const auto x = parse_ring_element(cfg.text("element", "id - [1,6,0,1]"), Group::sl2z());
  auto sn_levels = cfg.int_grid("seminorm_levels", {2, 3, 5});
  std::vector<std::int64_t> lv(sn_levels.begin(), sn_levels.end());
  auto iv = congruence_seminorm(x, lv);
  t.notes.push_back("congruence seminorm of " + ring_to_string(x) + " over levels " + cfg.text("seminorm_levels", "2,3,5") +
                    ": [" + format12(iv.lower) + ", " + format12(iv.upper) + "]");
  for (auto n : lv) {
    auto single = congruence_seminorm(x, {n});
    t.notes.push_back("  level " + std::to_string(n) + " alone: lower " + format12(single.lower));
  }
  t.summary = {{"element", ring_to_string(x)}, {"seminorm", to_json(iv)}};
  return {status, render("congruence", t, f)};
}

Outcome run_compare(const Config& cfg, Format f) {
  cfg.restrict_to({"group", "a", "b", "samples", "cap_a", "cap_b"});
  const Group g = parse_group(cfg.text("group", "F2"));
  SeminormSpec a = parse_spec(cfg.text("a", "trivial"), g);
  SeminormSpec b = parse_spec(cfg.text("b", "trunc:12"), g);
  if (cfg.has("cap_a")) a = capped(a, {}, cfg.real("cap_a", 0), "caller-supplied cap");
  if (cfg.has("cap_b")) b = capped(b, {}, cfg.real("cap_b", 0), "caller-supplied cap");
  std::vector<GroupRingElement> samples;
  std::stringstream ss(cfg.text("samples", "h"));
  std::string tok;
  while (std::getline(ss, tok, ';')) samples.push_back(parse_ring_element(tok, g));
  auto rep = compare(a, b, samples);
  std::string body;
  if (f == Format::Csv) {
    body = to_csv(rep);
    body += "# A = " + describe(a) + "\n# B = " + describe(b) + "\n";
    body += "# checked: per-sample interval comparison of two seminorms; a verdict needs disjoint intervals\n";
  } else {
    Json out = {{"experiment", "compare"},
                {"checked", "per-sample interval comparison of two seminorms; a verdict needs disjoint intervals"},
                {"a", describe(a)},
                {"b", describe(b)},
                {"report", to_json(rep)}};
    body = out.dump(2) + "\n";
  }
  return {0, body};
}

Outcome run_dp_offchain(const Config& cfg, Format f, unsigned threads) {
  cfg.restrict_to({"p", "q", "D", "sub_rank", "alpha", "k_max", "t1", "t2", "enum_radius"});
  const double p = cfg.real("p", 2.0);
  if (!(p >= 1.0)) throw Error(ErrorCode::ConfigError, cfg.path("p") + ": must be >= 1");
  const auto qs = sorted(cfg.grid("q", {2.0, 8.0}));
  for (double q : qs)
    if (!(q >= 2.0)) throw Error(ErrorCode::ConfigError, cfg.path("q") + ": values must be >= 2");
  const int big_d = checked_rank(cfg, "D", 6, 2);
  const int sub = static_cast<int>(cfg.integer("sub_rank", 2));
  if (sub < 2 || sub > big_d) throw Error(ErrorCode::ConfigError, cfg.path("sub_rank") + ": need 2 <= sub_rank <= D");
  const int k_max = static_cast<int>(cfg.integer("k_max", 10));
  const int enum_radius = static_cast<int>(cfg.integer("enum_radius", 5));
  const Word t1 = parse_word(cfg.text("t1", ""), big_d), t2 = parse_word(cfg.text("t2", ""), big_d);
  const auto alphas = alpha_grid(cfg, "0.05:0.95:0.05", big_d, p);

  std::vector<std::pair<double, double>> points;
  for (double q : qs)
    for (double a : alphas) points.emplace_back(q, a);
  struct Row {
    DpHaagerupReport dp;
    OkayasuTable ok;
  };
  auto rows = parallel_map<Row>(points.size(), threads, [&](std::size_t i) {
    auto [q, a] = points[i];
    return Row{dp_certify_haagerup(a, p, sub, big_d, t1, t2, enum_radius),
               okayasu_table(PosDefFamily::haagerup(a, big_d), q, k_max, 0)};
  });

  Table t;
  t.columns = {"p", "q", "alpha", "dp_decision", "sandwich_holds", "okayasu_all_k", "first_failing_k", "rows_pass", "category"};
  t.checked = "membership in D_p of the subgroup F_d' versus sphere-cutoff state extension to the l^q completion of F_D";
  int status = 0;
  bool dp_only = false, ok_only = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& r = rows[i];
    const bool in_dp = r.dp.decision == LpDecision::Summable;
    const bool extends = *r.ok.analytic_decision;
    std::string cat = in_dp ? (extends ? "both" : "dp-only") : (extends ? "okayasu-only" : "neither");
    dp_only = dp_only || cat == "dp-only";
    ok_only = ok_only || cat == "okayasu-only";
    t.rows.push_back({p, points[i].first, points[i].second, std::string(to_string(r.dp.decision)), r.dp.sandwich_holds,
                      extends, r.ok.first_failing_k ? Cell(*r.ok.first_failing_k) : Cell(std::string()),
                      r.ok.finite_decision, cat});
    if (!r.dp.sandwich_holds) status = 1;
  }
  t.notes.push_back("D = " + std::to_string(big_d) + ", F_d' rank " + std::to_string(sub) + ", D_p threshold alpha < " +
                    format12(std::pow(2.0 * sub - 1.0, -1.0 / p)));
  for (double q : qs) t.notes.push_back("q = " + format12(q) + ": extension threshold alpha <= " + format12(std::pow(2.0 * big_d - 1.0, -1.0 / q)));
  t.notes.push_back(std::string("dp-only exhibited: ") + (dp_only ? "yes" : "no") + ", okayasu-only exhibited: " + (ok_only ? "yes" : "no"));
  t.summary = {{"dp_only_exhibited", dp_only}, {"okayasu_only_exhibited", ok_only}};
  if (!dp_only || !ok_only) status = 1;
  return {status, render("dp-offchain", t, f)};
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"okayasu", "lp-sum",     "kesten",  "induce-check",
                                                 "marginal", "congruence", "compare", "dp-offchain"};
  return names;
}

Outcome run_experiment(const std::string& name, const Config& cfg, Format format, std::uint64_t seed,
                       unsigned threads) {
  if (name == "okayasu") return run_okayasu(cfg, format, threads);
  if (name == "lp-sum") return run_lp_sum(cfg, format, threads);
  if (name == "kesten") return run_kesten(cfg, format, threads);
  if (name == "induce-check") return run_induce_check(cfg, format, threads);
  if (name == "marginal") return run_marginal(cfg, format, seed);
  if (name == "congruence") return run_congruence(cfg, format, threads);
  if (name == "compare") return run_compare(cfg, format);
  if (name == "dp-offchain") return run_dp_offchain(cfg, format, threads);
  throw Error(ErrorCode::ConfigError, "unknown subcommand \"" + name + "\"");
}

}  // namespace exotica::cli
