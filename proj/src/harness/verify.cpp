#include <chrono>

#include "garland/error.hpp"
#include "garland/harness.hpp"

namespace garland::harness {

namespace {

using json = nlohmann::ordered_json;

std::string ex(const Rational& r) { return to_exact_string(r); }

json interval_json(const std::pair<Rational, Rational>& e) {
  return json{{"lo", ex(e.first)}, {"hi", ex(e.second)}, {"approx", to_double((e.first + e.second) / 2)}};
}

std::string label_for(const InstanceKey& key, int i) {
  InstanceKey k = key;
  k.i = i;
  return k.label();
}

Status at_most(Ordering o) {
  if (o == Ordering::Unknown) return Status::Inconclusive;
  return o == Ordering::Greater ? Status::CertifiedFalse : Status::CertifiedTrue;
}

Status at_least(Ordering o) {
  if (o == Ordering::Unknown) return Status::Inconclusive;
  return o == Ordering::Less ? Status::CertifiedFalse : Status::CertifiedTrue;
}

// Comparisons against an exact value never need refinement.
const Rational kExactFloor(1);

}  // namespace

Verdict verify_max_eigenvalue(const SpectralReport& r, int ell) {
  const Rational top = ell + 1;
  const Rational value = r.minpoly.eval(top);
  const int above = count_roots_above(r.minpoly, top);
  Verdict v{"prop_ny", r.instance.label(), Status::CertifiedFalse, {}};
  if (sgn(value) == 0 && above == 0) v.status = Status::CertifiedTrue;
  v.witness = json{{"claim", "M^i = ell+1"},
                   {"ell+1", ex(top)},
                   {"p(ell+1)", ex(value)},
                   {"roots_above", above},
                   {"M", to_json(r.M)}};
  return v;
}

Verdict verify_min_bound(const SpectralReport& r, int ell) {
  const Rational bound = ell - r.instance.i;
  const auto o = certified_compare(affine(r.minpoly, r.m), exact_value(bound), kExactFloor);
  Verdict v{"thm-last", r.instance.label(), at_most(o), {}};
  v.witness = json{{"claim", "m^i <= ell-i"}, {"ell-i", ex(bound)}, {"m", to_json(r.m)}};
  return v;
}

Verdict verify_integer_eigenvalues(const SpectralReport& r, int ell) {
  const int i = r.instance.i;
  json required = json::array(), missing = json::array();
  for (int k = ell - i + 1; k <= ell + 1; ++k) {
    required.push_back(k);
    if (!is_eigenvalue(r.minpoly, k)) missing.push_back(k);
  }
  Verdict v{"rem3.12", r.instance.label(), missing.empty() ? Status::CertifiedTrue : Status::CertifiedFalse, {}};
  v.witness = json{{"claim", "ell-i+1, ..., ell+1 are eigenvalues"},
                   {"required", required},
                   {"missing", missing},
                   {"ell-i", ell - i},
                   {"ell-i_is_eigenvalue", is_eigenvalue(r.minpoly, ell - i)}};
  return v;
}

std::vector<Verdict> verify_fundamental_inequality(const SpectralReport& r, const LinkSpectra& links, int n,
                                                   const Rational& floor) {
  const int i = r.instance.i;
  const std::string label = r.instance.label();
  const Rational shift = -(n - i);
  std::vector<Verdict> out;

  const json link_data{{"lambda_max", to_json(links.lambda_max)},
                       {"lambda_min", to_json(links.lambda_min)},
                       {"distinct_link_polynomials", links.distinct.size()}};

  {
    const auto lhs = affine(r.minpoly, r.M, i);
    const auto rhs = affine(links.combined, links.lambda_max, i + 1, shift);
    Verdict v{"thmFI-upper", label, at_most(certified_compare(lhs, rhs, floor)), {}};
    v.witness = json{{"claim", "i*M^i <= (i+1)*lambda_max - (n-i)"},
                     {"lhs", interval_json(enclosure(lhs))},
                     {"rhs", interval_json(enclosure(rhs))},
                     {"links", link_data}};
    out.push_back(std::move(v));
  }
  {
    Verdict v{"thmFI-hypothesis", label, links.links_acyclic ? Status::CertifiedTrue : Status::CertifiedFalse, {}};
    v.witness = json{{"claim", "H~^{i-1}(Lk v) = 0 for every vertex v"}};
    if (links.cyclic_witness) v.witness["vertex"] = *links.cyclic_witness;
    out.push_back(std::move(v));
  }
  if (links.links_acyclic) {
    const auto lhs = affine(r.minpoly, r.m, i);
    const auto rhs = affine(links.combined, links.lambda_min, i + 1, shift);
    Verdict v{"thmFI-lower", label, at_least(certified_compare(lhs, rhs, floor)), {}};
    v.witness = json{{"claim", "i*m^i >= (i+1)*lambda_min - (n-i)"},
                     {"lhs", interval_json(enclosure(lhs))},
                     {"rhs", interval_json(enclosure(rhs))},
                     {"links", link_data}};
    out.push_back(std::move(v));
  }
  {
    const auto o_max = certified_compare(affine(r.minpoly, r.M), affine(links.combined, links.lambda_max), floor);
    const auto o_min = certified_compare(affine(r.minpoly, r.m), affine(links.combined, links.lambda_min), floor);
    Verdict vmax{"cor2.19-max", label, at_least(o_max), {}};
    vmax.witness = json{{"claim", "M^i >= lambda_max"}, {"M", to_json(r.M)}, {"lambda_max", to_json(links.lambda_max)}};
    Verdict vmin{"cor2.19-min", label, at_most(o_min), {}};
    vmin.witness = json{{"claim", "m^i <= lambda_min"}, {"m", to_json(r.m)}, {"lambda_min", to_json(links.lambda_min)}};
    out.push_back(std::move(vmax));
    out.push_back(std::move(vmin));
  }
  {
    json failures = json::array();
    for (std::size_t k = 0; k < links.distinct.size(); ++k) {
      const auto& p = links.distinct[k];
      if (!divmod(r.minpoly, p).second.is_zero()) {
        const auto missing = divmod(p, gcd(p, r.minpoly)).first.monic();
        failures.push_back(json{{"vertex", links.witnesses[k]},
                                {"link_minpoly", p.to_exact_string()},
                                {"link_minpoly_pretty", p.pretty()},
                                {"factor_not_dividing", missing.to_exact_string()},
                                {"factor_not_dividing_pretty", missing.pretty()}});
      }
    }
    Verdict v{"lem2.17", label, failures.empty() ? Status::CertifiedTrue : Status::CertifiedFalse, {}};
    v.witness = json{{"claim", "every link eigenvalue on C^{i-1} is an eigenvalue on C^i"},
                     {"links_checked", links.distinct.size()},
                     {"failures", failures}};
    out.push_back(std::move(v));
  }
  return out;
}

Verdict verify_vanishing_threshold(const SpectralReport& lower, int ell, int i, const Rational& floor) {
  Rational threshold(ell + 1 - i, i + 1);
  threshold.canonicalize();
  const auto o = certified_compare(affine(lower.minpoly, lower.m), exact_value(threshold), floor);
  Verdict v{"thm4.2-hypothesis", label_for(lower.instance, i), Status::Inconclusive, {}};
  if (o == Ordering::Greater) v.status = Status::CertifiedTrue;
  if (o == Ordering::Less || o == Ordering::Equal) v.status = Status::CertifiedFalse;
  v.witness = json{{"claim", "m^{i-1} > (ell+1-i)/(i+1)"},
                   {"note", "hypothesis check only; no group cohomology is computed"},
                   {"threshold", ex(threshold)},
                   {"m^{i-1}", to_json(lower.m)},
                   {"satisfied", v.status == Status::CertifiedTrue}};
  return v;
}

json conjecture_report(const SpectralReport& r, int ell) {
  const int lo_int = ell - r.instance.i, hi_int = ell + 1;
  json rows = json::array();
  Rational eps_lo = 0, eps_hi = 0;
  for (const auto& root : r.roots.roots) {
    if (root.is_zero) continue;
    const auto e = enclosure(affine(r.minpoly, root));
    const Rational mid = (e.first + e.second) / 2;
    int nearest = lo_int;
    for (int k = lo_int; k <= hi_int; ++k) {
      if (abs(mid - k) < abs(mid - nearest)) nearest = k;
    }
    Rational dlo, dhi;
    if (e.first >= nearest) {
      dlo = e.first - nearest;
      dhi = e.second - nearest;
    } else if (e.second <= nearest) {
      dlo = nearest - e.second;
      dhi = nearest - e.first;
    } else {
      dlo = 0;
      dhi = std::max(Rational(nearest - e.first), Rational(e.second - nearest));
    }
    eps_lo = std::max(eps_lo, dlo);
    eps_hi = std::max(eps_hi, dhi);
    rows.push_back(json{{"root", to_json(root)}, {"nearest", nearest}, {"distance", interval_json({dlo, dhi})}});
  }
  return json{{"integers", json{{"from", lo_int}, {"to", hi_int}}},
              {"roots", rows},
              {"epsilon", interval_json({eps_lo, eps_hi})}};
}

std::vector<Verdict> verify_spectrum_shape(const SpectralReport& r) {
  std::vector<Verdict> out;
  Verdict sq{"squarefree", r.instance.label(),
             squarefree_certify(r.minpoly) ? Status::CertifiedTrue : Status::CertifiedFalse, {}};
  sq.witness = json{{"claim", "gcd(p, p') = 1 (Delta is diagonalizable)"}};
  out.push_back(std::move(sq));
  const int count = static_cast<int>(r.roots.roots.size());
  Verdict real{"real-spectrum", r.instance.label(),
               count == r.minpoly.degree() ? Status::CertifiedTrue : Status::CertifiedFalse, {}};
  real.witness = json{{"claim", "number of real roots = degree"}, {"real_roots", count}, {"degree", r.minpoly.degree()}};
  out.push_back(std::move(real));
  return out;
}

Verdict paper_verdict(const SpectralReport& r, const PaperComparison& cmp) {
  Verdict v{"paper-polynomial", r.instance.label(), cmp.match ? Status::CertifiedTrue : Status::CertifiedFalse, {}};
  v.witness = json{{"paper_factored", cmp.display},
                   {"paper_expanded", cmp.expected.to_exact_string()},
                   {"computed", cmp.computed.to_exact_string()}};
  if (cmp.first_difference) v.witness["first_difference_degree"] = *cmp.first_difference;
  return v;
}

SpectralReport verify_building(Session& s, int ell, int q, int i) {
  const Rational& floor = s.options().floor;
  if (i == ell && ell >= 1) {
    auto r = s.spectrum(ell, q, ell - 1);
    r.verdicts = {verify_vanishing_threshold(r, ell, ell, floor)};
    return r;
  }
  auto r = s.spectrum(ell, q, i);
  const auto t = std::chrono::steady_clock::now();
  r.verdicts = verify_spectrum_shape(r);
  r.verdicts.push_back(verify_max_eigenvalue(r, ell));
  r.verdicts.push_back(verify_min_bound(r, ell));
  r.verdicts.push_back(verify_integer_eigenvalues(r, ell));
  if (paper_polynomial(ell, q, i)) {
    r.paper = reproduce_paper_polynomial(r.minpoly, ell, q, i);
    r.verdicts.push_back(paper_verdict(r, *r.paper));
  }
  if (i >= 1) {
    const auto b = s.building(ell, q);
    const auto links = s.link_spectra(b->complex, i);
    for (auto& v : verify_fundamental_inequality(r, links, ell, floor)) r.verdicts.push_back(std::move(v));
  }
  r.verdicts.push_back(verify_vanishing_threshold(r, ell, i + 1, floor));
  r.conjecture = conjecture_report(r, ell);
  r.timings["verify_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
  return r;
}

SpectralReport verify_complex(Session& s, const Complex& c, int i) {
  auto r = s.spectrum(c, i);
  const auto t = std::chrono::steady_clock::now();
  r.verdicts = verify_spectrum_shape(r);
  if (i >= 1) {
    const auto links = s.link_spectra(c, i);
    for (auto& v : verify_fundamental_inequality(r, links, c.dimension(), s.options().floor)) {
      r.verdicts.push_back(std::move(v));
    }
  }
  r.timings["verify_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
  return r;
}

}  // namespace garland::harness
