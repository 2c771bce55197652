#include "exotica/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "exotica/errors.hpp"

namespace exotica {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return round12(v);
}

template <class T>
Json optional_number(const std::optional<T>& v) {
  if (!v) return nullptr;
  return number(static_cast<double>(*v));
}

}  // namespace

std::string ring_to_string(const GroupRingElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  auto emit = [&s](const Rational& part, bool imaginary, const std::string& elt) {
    if (part == 0) return;
    const bool negative = part < 0;
    s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const Rational mag = negative ? Rational(-part) : part;
    if (mag != 1) s += to_string(mag);
    if (imaginary) s += "i";
    if (mag != 1 || imaginary) s += "*";
    s += elt;
  };
  for (const auto& [g, c] : x.terms()) {
    const std::string elt = g.is_identity() ? std::string("id") : to_string(g);
    emit(c.re, false, elt);
    emit(c.im, true, elt);
  }
  return s;
}

namespace {

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

GroupRingElement parse_ring_element(std::string_view text, const Group& group) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text == "h") return generator_sum(group);
  GroupRingElement x(group);
  if (text == "0") return x;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view term = trim(text.substr(start, end - start));
    bool negative = false;
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      negative = term.front() == '-';
      term = trim(term.substr(1));
    }
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in \"" + std::string(text) + "\"");
    ComplexRational c = 1;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      std::string coef(trim(term.substr(0, star)));
      term = trim(term.substr(star + 1));
      if (!coef.empty() && coef.back() == 'i') {
        coef.pop_back();
        c = ComplexRational(0, coef.empty() ? Rational(1) : parse_rational(coef));
      } else {
        c = ComplexRational(parse_rational(coef));
      }
    }
    if (negative) c = -c;
    x.add(term == "id" ? group.identity() : parse_element(term, group), c);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if ((ch == '+' || ch == '-') && depth == 0 && i > 0) {
      flush(i);
      start = i;
    }
  }
  flush(text.size());
  return x;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format12(v).c_str(), nullptr);
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json to_json(const GroupRingElement& x) {
  Json terms = Json::array();
  for (const auto& [s, c] : x.terms()) {
    terms.push_back({{"elt", to_string(s)}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
  }
  return {{"group", to_string(x.group())}, {"terms", terms}};
}

GroupRingElement ring_from_json(const Json& j) {
  return guarded([&] {
    Group g = parse_group(j.at("group").get<std::string>());
    GroupRingElement x(g);
    for (const auto& t : j.at("terms")) {
      Rational re = t.contains("re") ? parse_rational(t.at("re").get<std::string>()) : Rational(0);
      Rational im = t.contains("im") ? parse_rational(t.at("im").get<std::string>()) : Rational(0);
      x.add(parse_element(t.at("elt").get<std::string>(), g), ComplexRational(re, im));
    }
    return x;
  });
}

Json to_json(const LpCertificate& c) {
  return {{"p", number(c.p)},
          {"decision", std::string(to_string(c.decision))},
          {"closed_form", optional_number(c.closed_form)},
          {"partial_sum", number(c.partial_sum)},
          {"tail_bound", number(c.tail_bound)},
          {"enumeration_radius", c.enumeration_radius},
          {"divergence_witness", optional_number(c.divergence_witness)},
          {"evidence", c.evidence}};
}

Json to_json(const OkayasuTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"k", r.k},
                    {"norm", number(r.norm)},
                    {"bound", number(r.bound)},
                    {"pass", r.pass},
                    {"enumerated", optional_number(r.enumerated)}});
  }
  Json out = {{"rank", t.rank}, {"p", number(t.p)}, {"rows", rows}, {"finite_decision", t.finite_decision}};
  out["analytic_decision"] = t.analytic_decision ? Json(*t.analytic_decision) : Json(nullptr);
  out["alpha_star"] = optional_number(t.alpha_star);
  out["first_failing_k"] = t.first_failing_k ? Json(*t.first_failing_k) : Json(nullptr);
  return out;
}

Json to_json(const DpHaagerupReport& r) {
  return {{"decision", std::string(to_string(r.decision))},
          {"subgroup_sum", optional_number(r.subgroup_sum)},
          {"lower", number(r.lower)},
          {"upper", number(r.upper)},
          {"enumerated", number(r.enumerated)},
          {"enumerated_tail", number(r.enumerated_tail)},
          {"enumeration_radius", r.enumeration_radius},
          {"sandwich_holds", r.sandwich_holds},
          {"divergence_witness", optional_number(r.divergence_witness)}};
}

Json to_json(const InducedIdentityReport& r) {
  return {{"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)},
          {"tail_bound", number(r.tail_bound)},
          {"closed_form", optional_number(r.closed_form)},
          {"lhs_terms", r.lhs_terms},
          {"pass", r.pass}};
}

Json to_json(const MarginalTrials& m) {
  return {{"trials", m.trials},
          {"checks", m.checks},
          {"violations", m.violations},
          {"worst_margin", number(m.worst_margin)},
          {"worst_g_defect", number(m.worst_g_defect)}};
}

Json to_json(const NormInterval& iv) {
  return {{"lower", number(iv.lower)}, {"upper", number(iv.upper)}, {"provenance", iv.provenance}};
}

Json to_json(const DominanceReport& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    rows.push_back({{"sample", ring_to_string(r.samples[i])},
                    {"a", to_json(r.a[i])},
                    {"b", to_json(r.b[i])},
                    {"verdict", std::string(to_string(r.verdicts[i]))},
                    {"gap", number(r.gaps[i])}});
  }
  return {{"rows", rows}};
}

std::string to_csv(const DominanceReport& r) {
  std::ostringstream out;
  out << "sample,a_lower,a_upper,b_lower,b_upper,verdict,gap\n";
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    out << '"' << ring_to_string(r.samples[i]) << "\"," << format12(r.a[i].lower) << ',' << format12(r.a[i].upper)
        << ',' << format12(r.b[i].lower) << ',' << format12(r.b[i].upper) << ',' << to_string(r.verdicts[i]) << ','
        << format12(r.gaps[i]) << '\n';
  }
  return out.str();
}

Json to_json(const ComplexRep& rep) {
  Json gens = Json::array();
  for (const auto& u : rep.generator_images()) {
    Json m = Json::array();
    for (Eigen::Index i = 0; i < u.rows(); ++i)
      for (Eigen::Index j = 0; j < u.cols(); ++j) m.push_back({u(i, j).real(), u(i, j).imag()});
    gens.push_back(std::move(m));
  }
  return {{"group", to_string(rep.group())}, {"dim", rep.dim()}, {"generators", gens}};
}

ComplexRep rep_from_json(const Json& j) {
  return guarded([&] {
    Group g = parse_group(j.at("group").get<std::string>());
    const auto n = j.at("dim").get<Eigen::Index>();
    std::vector<Eigen::MatrixXcd> gens;
    for (const auto& m : j.at("generators")) {
      if (static_cast<Eigen::Index>(m.size()) != n * n) throw Error(ErrorCode::ParseError, "generator matrix has wrong size");
      Eigen::MatrixXcd u(n, n);
      for (Eigen::Index k = 0; k < n * n; ++k) {
        const auto& z = m.at(static_cast<std::size_t>(k));
        u(k / n, k % n) = {z.at(0).get<double>(), z.at(1).get<double>()};
      }
      gens.push_back(std::move(u));
    }
    return from_generator_images<std::complex<double>>(g, std::move(gens));
  });
}

Json to_json(const SeminormSpec& spec) {
  return std::visit(overloaded{
                        [](const L1Cap&) -> Json { return {{"type", "L1Cap"}}; },
                        [](const FiniteDimSet& f) -> Json {
                          Json reps = Json::array();
                          for (const auto& r : f.reps) reps.push_back(to_json(r));
                          return {{"type", "FiniteDimSet"}, {"labels", f.labels}, {"reps", reps}};
                        },
                        [](const TruncatedRegular& t) -> Json { return {{"type", "TruncatedRegular"}, {"radius", t.radius}}; },
                        [](const CongruenceSet& c) -> Json { return {{"type", "CongruenceSet"}, {"levels", c.levels}}; },
                        [](const Join& jn) -> Json {
                          Json ch = Json::array();
                          for (const auto& c : jn.children) ch.push_back(to_json(c));
                          return {{"type", "Join"}, {"children", ch}};
                        },
                        [](const Capped& c) -> Json {
                          Json caps = Json::array();
                          for (const auto& [x, v] : c.caps) caps.push_back({{"element", to_json(x)}, {"cap", v}});
                          Json out = {{"type", "Capped"}, {"child", to_json(*c.child)}, {"caps", caps}, {"label", c.label}};
                          out["uniform"] = c.uniform ? Json(*c.uniform) : Json(nullptr);
                          return out;
                        },
                    },
                    spec.variant());
}

SeminormSpec spec_from_json(const Json& j) {
  return guarded([&]() -> SeminormSpec {
    const auto type = j.at("type").get<std::string>();
    if (type == "L1Cap") return SeminormSpec(L1Cap{});
    if (type == "FiniteDimSet") {
      FiniteDimSet f;
      for (const auto& r : j.at("reps")) f.reps.push_back(rep_from_json(r));
      if (j.contains("labels")) f.labels = j.at("labels").get<std::vector<std::string>>();
      return SeminormSpec(std::move(f));
    }
    if (type == "TruncatedRegular") return SeminormSpec(TruncatedRegular{j.at("radius").get<int>()});
    if (type == "CongruenceSet") return SeminormSpec(CongruenceSet{j.at("levels").get<std::vector<std::int64_t>>()});
    if (type == "Join") {
      std::vector<SeminormSpec> ch;
      for (const auto& c : j.at("children")) ch.push_back(spec_from_json(c));
      return SeminormSpec(Join{std::move(ch)});
    }
    if (type == "Capped") {
      std::vector<std::pair<GroupRingElement, double>> caps;
      for (const auto& c : j.at("caps")) caps.emplace_back(ring_from_json(c.at("element")), c.at("cap").get<double>());
      std::optional<double> uniform;
      if (j.contains("uniform") && !j.at("uniform").is_null()) uniform = j.at("uniform").get<double>();
      return capped(spec_from_json(j.at("child")), std::move(caps), uniform, j.value("label", std::string()));
    }
    throw Error(ErrorCode::ParseError, "unknown seminorm type \"" + type + "\"");
  });
}

}  // namespace exotica
