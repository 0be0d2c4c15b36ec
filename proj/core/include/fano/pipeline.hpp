#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/apolar.hpp"
#include "fano/error.hpp"
#include "fano/invariants.hpp"
#include "fano/netquad.hpp"
#include "fano/poly.hpp"
#include "fano/report.hpp"
#include "fano/resolve.hpp"
#include "fano/skewfano.hpp"

namespace fano {

/// Outcome of one exact check. A passing proportionality check carries the
/// scalar; a failing one names a coefficient where the identity breaks.
template <Field K>
struct Verdict {
  std::string name;
  bool pass = false;
  bool required = true;
  std::optional<K> scalar;
  std::string witness;
};

/// f = lambda g, checked term by term.
template <Field K>
Verdict<K> proportional_verdict(std::string name, const MultiPoly<K>& f, const MultiPoly<K>& g) {
  Verdict<K> v;
  v.name = std::move(name);
  if (auto l = proportionality(f, g)) {
    v.pass = true;
    v.scalar = *l;
    return v;
  }
  if (f.is_zero() || g.is_zero()) {
    v.witness = f.is_zero() ? "left side is zero" : "right side is zero";
    return v;
  }
  const K lambda = f.leading_coefficient() / g.leading_coefficient();
  std::vector<Exponent> mons;
  for (const auto& [e, c] : f.terms()) mons.push_back(e);
  for (const auto& [e, c] : g.terms()) mons.push_back(e);
  for (const auto& e : mons) {
    const K diff = f.coefficient(e) - lambda * g.coefficient(e);
    if (!diff.is_zero()) {
      v.witness = "coefficient of " + print_poly(MultiPoly<K>::monomial(f.ring(), e)) + " differs by " +
                  diff.str() + " at lambda = " + lambda.str();
      break;
    }
  }
  return v;
}

template <Field K>
struct CircleReport {
  NetOfQuadrics<K> net;
  MultiPoly<K> discriminant;       // S_q in u (plane form variables)
  BettiTable betti;                // of A^q
  DualityData<K> duality;
  SkewNet<K> eta;
  std::vector<std::size_t> pfaffian_hf;
  MultiPoly<K> socle;              // dual socle quartic in N-coordinates
  Matrix<K> n_to_udual;
  MultiPoly<K> socle_u;            // F_q in U-coordinates
  MultiPoly<K> covariant;          // S_{F_q}
  std::vector<Verdict<K>> verdicts;

  bool passed() const {
    for (const auto& v : verdicts)
      if (v.required && !v.pass) return false;
    return true;
  }
};

/// q -> A^q -> resolution -> eta_q -> pfaffian ideal -> F_q, with S_q and
/// S_{F_q}. Degenerate nets fail with the name of the stage that noticed.
template <Field K>
CircleReport<K> circle(const NetOfQuadrics<K>& q, int cap = kDefaultCap) {
  if (!q.independent()) throw DegenerateInput("input", "quadrics are linearly dependent");
  CircleReport<K> r;
  r.net = q;
  QPerp<K> qp = q_perp(q, cap);
  r.discriminant = discriminant(q);
  Resolution<K> res = min_res(qp.ideal, cap);
  r.betti = res.betti();
  if (!has_net_shape(res)) throw DegenerateInput("min_res", "Betti table " + r.betti.str() + " is not the net shape");
  r.duality = tor_duality(res);
  r.eta = eta_from_tor(res);
  Ext4Data<K> ext = ext4_identification(res, qp.dual_classes, *r.eta.v_basis);
  r.n_to_udual = ext.pairing * r.duality.tau.transpose();
  r.eta.n_to_udual = r.n_to_udual;
  PfaffianIdeal<K> pf = pfaffian_ideal(r.eta);
  r.pfaffian_hf = pf.quotient_hf;
  r.socle = dual_socle(pf.ideal);
  auto back = inverse(r.n_to_udual);
  if (!back) throw DegenerateInput("n_to_udual", "identification matrix is singular");
  r.socle_u = linear_change(r.socle, *back);
  r.covariant = covariant_quartic(r.socle_u);

  Verdict<K> hf;
  hf.name = "pfaffian_hf";
  hf.pass = r.pfaffian_hf == std::vector<std::size_t>{1, 3, 6, 3, 1, 0};
  if (!hf.pass) hf.witness = "quotient HF " + tuple_str(r.pfaffian_hf);
  r.verdicts.push_back(hf);
  r.verdicts.push_back(proportional_verdict("covariant_vs_discriminant", r.covariant, r.discriminant));
  auto self = proportional_verdict("socle_vs_discriminant", r.socle_u, r.discriminant);
  self.required = false;
  r.verdicts.push_back(self);
  return r;
}

template <Field K>
Report to_report(const CircleReport<K>& r) {
  Report out;
  out.set("field", field_traits<K>::name());
  for (std::size_t i = 0; i < 3; ++i) out.set("net.q" + std::to_string(i), print_poly(r.net.quadric(i)));
  out.set("discriminant", print_poly(r.discriminant));
  out.set("betti", r.betti.str());
  for (std::size_t k = 0; k < 3; ++k) {
    std::string rows;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = i + 1; j < 7; ++j)
        if (!r.eta.forms[k](i, j).is_zero())
          rows += (rows.empty() ? "" : " ") + std::to_string(i) + std::to_string(j) + "=" + r.eta.forms[k](i, j).str();
    out.set("eta." + std::to_string(k), rows.empty() ? "0" : rows);
  }
  out.set("pfaffian.hf", tuple_str(r.pfaffian_hf));
  out.set("socle.n", print_poly(r.socle));
  std::string m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m += (i || j ? " " : "") + r.n_to_udual(i, j).str();
  out.set("n_to_udual", m);
  out.set("socle.u", print_poly(r.socle_u));
  out.set("covariant", print_poly(r.covariant));
  for (const auto& v : r.verdicts) {
    const std::string key = "verdict." + v.name;
    out.set(key, v.pass ? "pass" : "fail");
    if (v.scalar) out.set(key + ".lambda", v.scalar->str());
    if (!v.witness.empty()) out.set(key + ".witness", v.witness);
  }
  out.set("result", r.passed() ? "pass" : "fail");
  return out;
}

}  // namespace fano
