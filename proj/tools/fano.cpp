#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fano/fano.hpp"

using namespace fano;
using Q = Rational;

namespace {

enum Exit { kPass = 0, kVerdictFail = 1, kDegenerate = 2, kParse = 3 };

struct Options {
  std::uint32_t prime = 0;
  int cap = kDefaultCap;
  std::uint64_t seed = 0;
  std::uint64_t budget = 2000000;
  std::string file;
  bool klein = false;
  std::vector<std::string> polys;
};

std::vector<std::string> inputs(const Options& o) {
  std::vector<std::string> out = o.polys;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw InvalidArgument("cannot read " + o.file);
    std::stringstream ss;
    ss << in.rdbuf();
    for (auto& p : split_polys(ss.str())) out.push_back(p);
  }
  return out;
}

std::vector<MultiPoly<Q>> parse_all(const Options& o, std::optional<RingTag> ring = std::nullopt) {
  std::vector<MultiPoly<Q>> out;
  for (const auto& text : inputs(o)) out.push_back(ring ? parse_poly(text, *ring) : parse_poly(text));
  return out;
}

MultiPoly<Q> one_poly(const Options& o) {
  auto ps = parse_all(o);
  if (ps.size() != 1) throw InvalidArgument("expected one polynomial, got " + std::to_string(ps.size()));
  return ps[0];
}

NetOfQuadrics<Q> net_input(const Options& o) {
  if (o.klein) return klein_net<Q>();
  return NetOfQuadrics<Q>::from_quadrics(parse_all(o, kSpaceForms));
}

/// Runs f.template operator()<K>() for K = Q (prime 0) or F_prime.
template <class F>
int with_field(std::uint32_t prime, F&& f) {
  if (prime == 0) return f.template operator()<Q>();
  return dispatch_prime(prime, std::forward<F>(f));
}

int emit(const Report& r, int code = kPass) {
  std::cout << r.str();
  return code;
}

std::string join(const std::vector<MultiPoly<Q>>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : "; ") + print_poly(p);
  return s;
}

template <Field K>
std::string join_k(const std::vector<MultiPoly<K>>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : "; ") + print_poly(p);
  return s;
}

int cmd_cat(const Options& o) {
  Report r;
  auto ps = parse_all(o);
  for (std::size_t i = 0; i < ps.size(); ++i) r.set("poly." + std::to_string(i), print_poly(ps[i]));
  return emit(r);
}

int cmd_hf(const Options& o) {
  auto f = one_poly(o);
  return with_field(o.prime, [&]<class K>() {
    Report r;
    r.set("field", field_traits<K>::name());
    r.set("hf", tuple_str(hilbert_function(reduce_poly<K>(f))));
    return emit(r);
  });
}

int cmd_perp(const Options& o) {
  auto f = one_poly(o);
  return with_field(o.prime, [&]<class K>() {
    auto fk = reduce_poly<K>(f);
    Resolution<K> res = min_res(perp_ideal(fk, o.cap), o.cap);
    Report r;
    r.set("field", field_traits<K>::name());
    r.set("hf", tuple_str(hilbert_function(fk)));
    r.set("generator_degrees", tuple_str(res.generator_degrees()));
    std::vector<MultiPoly<K>> gens;
    for (std::size_t i = 0; i < res.maps[0].rows(); ++i) gens.push_back(res.maps[0](i, 0));
    r.set("generators", join_k(gens));
    r.set("truncated", res.truncated);
    return emit(r);
  });
}

int cmd_aronhold(const Options& o) {
  auto g = one_poly(o);
  return with_field(o.prime, [&]<class K>() {
    Report r;
    auto gk = reduce_poly<K>(g);
    const K v = aronhold(gk);
    r.set("field", field_traits<K>::name());
    r.set("i4", v.str());
    r.set("anharmonic", v.is_zero());
    r.set("perp", to_string(is_complete_intersection_perp(gk)));
    return emit(r);
  });
}

int cmd_covariant(const Options& o) {
  auto f = one_poly(o);
  return with_field(o.prime, [&]<class K>() {
    auto fk = reduce_poly<K>(f);
    auto s = covariant_quartic(fk);
    Report r;
    r.set("field", field_traits<K>::name());
    r.set("covariant", print_poly(s));
    if (auto l = proportionality(s, fk)) r.set("self_covariant.lambda", l->str());
    else r.set("self_covariant", false);
    return emit(r);
  });
}

int cmd_classify(const Options& o) {
  auto f = one_poly(o);
  return with_field(o.prime, [&]<class K>() {
    auto fk = reduce_poly<K>(f);
    auto c = classify(fk, o.cap);
    Report r;
    r.set("field", field_traits<K>::name());
    r.set("rank_cat", rank_lower(fk));
    r.set("hf", tuple_str(c.hilbert));
    r.set("generator_degrees", tuple_str(c.generators));
    r.set("row", c.listed() ? std::to_string(c.row) : std::string("unlisted"));
    return emit(r, c.listed() ? kPass : kVerdictFail);
  });
}

int cmd_weights(const Options& o) {
  auto ps = parse_all(o);
  if (ps.size() < 2) throw InvalidArgument("weights: a form followed by at least one linear form expected");
  return with_field(o.prime, [&]<class K>() {
    std::vector<MultiPoly<K>> lines;
    for (std::size_t i = 1; i < ps.size(); ++i) lines.push_back(reduce_poly<K>(ps[i]));
    auto w = solve_weights(reduce_poly<K>(ps[0]), lines);
    Report r;
    r.set("field", field_traits<K>::name());
    r.set("status", to_string(w.status));
    r.set("nullity", w.nullity);
    std::string s;
    for (const auto& x : w.weights) s += (s.empty() ? "" : " ") + x.str();
    if (!w.weights.empty()) r.set("weights", s);
    return emit(r, w.status == WeightStatus::NotInSpan ? kVerdictFail : kPass);
  });
}

int cmd_discriminant(const Options& o) {
  auto q = net_input(o);
  return with_field(o.prime, [&]<class K>() {
    auto qk = reduce_mod<K>(q);
    Report r;
    r.set("field", field_traits<K>::name());
    r.set("discriminant", print_poly(discriminant(qk)));
    return emit(r);
  });
}

int cmd_jacobian(const Options& o) {
  auto q = net_input(o);
  return with_field(o.prime, [&]<class K>() {
    auto j = jacobian_minors(reduce_mod<K>(q));
    Report r;
    r.set("field", field_traits<K>::name());
    r.set("minors", join_k(j.minors));
    r.set("hf", tuple_str(j.quotient_hf));
    r.set("degenerate", j.degenerate);
    return emit(r, j.degenerate ? kVerdictFail : kPass);
  });
}

int cmd_resolve(const Options& o) {
  const bool net = o.klein || inputs(o).size() == 3;
  std::optional<NetOfQuadrics<Q>> q;
  std::optional<MultiPoly<Q>> f;
  if (net) q = net_input(o);
  else f = one_poly(o);
  return with_field(o.prime, [&]<class K>() {
    GradedIdeal<K> I = net ? q_perp(reduce_mod<K>(*q), o.cap).ideal : perp_ideal(reduce_poly<K>(*f), o.cap);
    auto res = min_res(I, o.cap);
    Report r;
    r.set("field", field_traits<K>::name());
    r.set("ideal", net ? "q_perp" : "f_perp");
    r.set("betti", res.betti().str());
    r.set("quotient_hf", tuple_str(res.quotient_hf));
    r.set("truncated", res.truncated);
    return emit(r);
  });
}

template <Field K>
SkewNet<K> eta_of(const NetOfQuadrics<K>& q, int cap) {
  auto res = min_res(q_perp(q, cap).ideal, cap);
  return eta_from_tor(res);
}

void put_eta(Report& r, const SkewNet<Q>& eta) {
  for (std::size_t k = 0; k < 3; ++k) {
    std::string s;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = i + 1; j < 7; ++j)
        if (!eta.forms[k](i, j).is_zero())
          s += (s.empty() ? "" : " ") + std::to_string(i) + std::to_string(j) + "=" + eta.forms[k](i, j).str();
    r.set("eta." + std::to_string(k), s.empty() ? "0" : s);
  }
}

int cmd_eta(const Options& o) {
  auto eta = eta_of(net_input(o), o.cap);
  Report r;
  put_eta(r, eta);
  for (std::size_t i = 0; i < 7; ++i)
    r.set("v." + std::to_string(i), print_poly(quadric_of(*eta.v_basis, eta.v_basis->row_vector(i))));
  return emit(r);
}

int cmd_pfaffian(const Options& o) {
  auto eta = eta_of(net_input(o), o.cap);
  auto pf = pfaffian_ideal(eta);
  Report r;
  r.set("generators", join(pf.generators));
  r.set("hf", tuple_str(pf.quotient_hf));
  const bool ok = pf.quotient_hf == std::vector<std::size_t>{1, 3, 6, 3, 1, 0};
  if (ok) r.set("socle", print_poly(dual_socle(pf.ideal)));
  return emit(r, ok ? kPass : kVerdictFail);
}

int cmd_circle(const Options& o) {
  auto rep = circle(net_input(o), o.cap);
  return emit(to_report(rep), rep.passed() ? kPass : kVerdictFail);
}

int cmd_census(const Options& o) {
  if (o.prime == 0) throw InvalidArgument("census needs --prime");
  auto eta = primitive_integral(eta_of(net_input(o), o.cap));
  return dispatch_prime(o.prime, [&]<class K>() {
    auto ek = reduce_mod<K>(eta);
    auto rep = census(ek, o.budget, o.seed);
    Report r;
    r.set("p", rep.p);
    r.set("seed", rep.seed);
    r.set("point_count", rep.points.size());
    for (std::size_t i = 0; i < std::min<std::size_t>(3, rep.points.size()); ++i) {
      const auto& m = rep.points[i].rows();
      std::string s;
      for (std::size_t a = 0; a < 3; ++a) {
        s += a ? " | " : "";
        for (std::size_t b = 0; b < 7; ++b) s += (b ? " " : "") + m(a, b).str();
      }
      r.set("point." + std::to_string(i), s);
    }
    r.set("line_count_sampled", rep.lines.lines.size());
    r.set("pairs_tested", rep.lines.pairs_tested);
    r.set("truncated", rep.lines.truncated);
    r.set("anomalies", rep.lines.anomalies);
    for (std::size_t i = 0; i < std::min<std::size_t>(3, rep.lines.lines.size()); ++i)
      r.set("line." + std::to_string(i) + ".r", print_poly(rep.lines.lines[i].r));
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << rep.seconds;
    r.set("seconds", t.str());
    return emit(r);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane quartics, nets of quadrics and skew nets", "fano"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--prime", o.prime, "Work over F_p (0 = rationals)");
  app.add_option("--cap", o.cap, "Degree cap for ideals and resolutions");
  app.add_option("--seed", o.seed, "Sampling seed");
  app.add_option("--budget", o.budget, "Pair budget for line sampling");
  app.add_option("--file", o.file, "Read polynomials from a file, one per line");

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    bool net;
  };
  const Cmd cmds[] = {
      {"cat", "Print polynomials in canonical form", cmd_cat, false},
      {"hf", "Hilbert function of the apolar algebra", cmd_hf, false},
      {"perp", "Minimal generators of the apolar ideal", cmd_perp, false},
      {"aronhold", "Aronhold invariant of a plane cubic", cmd_aronhold, false},
      {"covariant", "Covariant quartic of a plane quartic", cmd_covariant, false},
      {"classify", "Hilbert function and generator degrees of f^perp", cmd_classify, false},
      {"weights", "Weights of a power sum: FORM LINE...", cmd_weights, false},
      {"discriminant", "det M(u) of a net of quadrics", cmd_discriminant, true},
      {"jacobian", "Jacobian minors of a net", cmd_jacobian, true},
      {"resolve", "Betti table of f^perp or q^perp", cmd_resolve, true},
      {"eta", "Skew net of a net of quadrics", cmd_eta, true},
      {"pfaffian", "Pfaffian ideal of the skew net", cmd_pfaffian, true},
      {"circle", "Full circle of constructions with verdicts", cmd_circle, true},
      {"census", "Points and lines of the Fano threefold over F_p", cmd_census, true},
  };
  int (*chosen)(const Options&) = nullptr;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("polys", o.polys, "Polynomials");
    if (c.net) sub->add_flag("--klein", o.klein, "Use the Klein net");
    sub->callback([&chosen, run = c.run] { chosen = run; });
  }
  // "-z0^2 + ..." is a polynomial, not a short option
  std::vector<std::string> args;
  bool literal = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--") {
      literal = true;
      continue;
    }
    if (literal || (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h")) a.insert(0, " ");
    args.push_back(a);
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kParse;
  }
  try {
    return chosen(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return kParse;
  } catch (const DegenerateInput& e) {
    std::cout << "result: degenerate\nstage: " << e.stage() << "\n";
    std::cerr << "degenerate input at " << e.what() << "\n";
    return kDegenerate;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegenerate;
  }
}
