#include "convexcheck/reduction.hpp"

#include <algorithm>

namespace convexcheck {

namespace {

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational convex_bound(const Rational& f_u, const Rational& f_v, const Rational& t) {
  return f_v + t * (f_u - f_v);
}

void require_open_unit(const Rational& t, const char* what) {
  if (!(t > 0 && t < 1)) throw Error(ErrorCode::ParameterOutOfRange, std::string(what) + " must lie in ]0,1[");
}

void require_in_domain(const ConvexDomain& domain, const Point& p) {
  if (!contains(domain, p)) throw Error(ErrorCode::PointOutsideDomain, to_string(p) + " is not in the domain");
}

std::optional<Refutation> refutation_from(const CaseAStep& step) {
  if (step.quasiconvexity.holds) return std::nullopt;
  return Refutation{Refutation::Kind::FamilyQuasiconvexity, step.lambda, step.u, step.v, step.t,
                    step.quasiconvexity.lhs, step.quasiconvexity.rhs};
}

Refutation direct_refutation(const Certificate& cert) {
  return Refutation{Refutation::Kind::DirectEvaluation, std::nullopt, cert.u, cert.v, cert.t,
                    cert.conclusion.lhs, cert.conclusion.rhs};
}

}  // namespace

InequalityRecord make_record(Rational lhs, Rational rhs) {
  const bool holds = lhs <= rhs;
  return InequalityRecord{std::move(lhs), std::move(rhs), holds};
}

std::vector<Rational> ReductionOptions::default_s_sequence(int length) {
  std::vector<Rational> sequence;
  Rational s(1);
  for (int k = 1; k <= length; ++k) {
    s /= 2;
    sequence.push_back(s);
  }
  return sequence;
}

Rational select_lambda(const FunctionOracle& f, const LinearFunctional& c, const Point& u, const Point& v) {
  require_same_dimension(u, v, "select_lambda");
  if (u == v) throw Error(ErrorCode::ParameterOutOfRange, "u and v must differ");
  const Rational pairing = pair(c, u - v);
  if (pairing == 0) throw Error(ErrorCode::DegeneratePairing, "<c, u - v> = 0; use the auxiliary-point case");
  return (f(v) - f(u)) / pairing;
}

CaseAStep case_a_step(const FunctionOracle& f, const LinearFunctional& c, const Point& u, const Point& v,
                      const Rational& t) {
  require_open_unit(t, "t");
  CaseAStep step;
  step.u = u;
  step.v = v;
  step.t = t;
  step.lambda = select_lambda(f, c, u, v);
  step.pairing = pair(c, u - v);
  step.z = segment_point(v, u, t);
  step.f_u = f(u);
  step.f_v = f(v);
  step.f_z = f(step.z);
  step.g_u = step.f_u + step.lambda * pair(c, u);
  step.g_v = step.f_v + step.lambda * pair(c, v);
  step.g_z = step.f_z + step.lambda * pair(c, step.z);
  step.quasiconvexity = make_record(step.g_z, std::max(step.g_u, step.g_v));
  step.convexity = make_record(step.f_z, convex_bound(step.f_u, step.f_v, t));
  return step;
}

Certificate case_a_bound(const FunctionOracle& f, const LinearFunctional& c, const ConvexDomain& domain,
                         const Point& u, const Point& v, const Rational& t) {
  require_open_unit(t, "t");
  require_in_domain(domain, u);
  require_in_domain(domain, v);
  CaseAStep step = case_a_step(f, c, u, v, t);
  Certificate cert{domain, u, v, t, step.z, CaseA{}, step.convexity, {}, CertificateStatus::Verified, {}};
  cert.refutation = refutation_from(step);
  if (cert.refutation) cert.status = CertificateStatus::Refuted;
  cert.proof = CaseA{std::move(step)};
  return cert;
}

Point choose_w(const ConvexDomain& domain, const LinearFunctional& c, const Point& u) {
  const Rational reference = pair(c, u);
  for (auto& anchor : anchor_points(domain)) {
    if (pair(c, anchor) != reference) return anchor;
  }
  throw Error(ErrorCode::ConstantFunctional, "c is constant on the domain");
}

Rational residual_bound(const Rational& s, const Rational& t_s, const Rational& t, const Rational& f_u,
                        const Rational& f_v, const Rational& f_w) {
  return (1 - t_s) * s * abs_value(f_w - f_v) + abs_value(t_s - t) * (abs_value(f_u) + abs_value(f_v));
}

Certificate case_b_bound(const FunctionOracle& f, const LinearFunctional& c, const ConvexDomain& domain,
                         const Point& u, const Point& v, const Rational& t, const ReductionOptions& options) {
  require_open_unit(t, "t");
  require_same_dimension(u, v, "case_b_bound");
  if (u == v) throw Error(ErrorCode::ParameterOutOfRange, "u and v must differ");
  if (pair(c, u - v) != 0) {
    throw Error(ErrorCode::DegeneratePairing, "<c, u - v> != 0; use the direct case");
  }
  require_in_domain(domain, u);
  require_in_domain(domain, v);
  const auto& sequence = options.s_sequence;
  if (sequence.empty()) throw Error(ErrorCode::EmptyPlan, "s sequence is empty");
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    require_open_unit(sequence[i], "s");
    if (i > 0 && !(sequence[i] < sequence[i - 1])) {
      throw Error(ErrorCode::ParameterOutOfRange, "s sequence must be strictly decreasing");
    }
  }

  CaseB proof;
  proof.w = choose_w(domain, c, u);
  proof.s_sequence = sequence;
  const Rational f_u = f(u);
  const Rational f_v = f(v);
  const Rational f_w = f(proof.w);
  for (const auto& s : sequence) {
    CaseBStep step;
    step.s = s;
    step.v_s = segment_point(v, proof.w, s);
    step.t_s = t_param(t, s);
    step.z_ts = segment_point(step.v_s, u, step.t_s);
    step.outer = case_a_step(f, c, proof.w, v, s);
    step.inner = case_a_step(f, c, u, step.v_s, step.t_s);
    step.chained = make_record(step.inner.f_z, (1 - step.t_s) * (f_v + s * (f_w - f_v)) + step.t_s * f_u);
    step.residual = residual_bound(s, step.t_s, t, f_u, f_v, f_w);
    proof.steps.push_back(std::move(step));
  }

  Certificate cert{domain, u, v, t, segment_point(v, u, t), CaseA{}, {}, {}, CertificateStatus::Refuted, {}};
  cert.conclusion = make_record(f(cert.z_t), convex_bound(f_u, f_v, t));

  LimitStep& limit = proof.limit;
  limit.z_t_class = classify_point(domain, cert.z_t);
  limit.residual_bound = proof.steps.back().residual;
  if (limit.z_t_class == PointClass::Flat) {
    limit.mechanism = LimitMechanism::StabilityLimsup;
    cert.assumptions.push_back(Assumption::RadialStabilityAtFlatPoint);
    if (options.attach_stability) {
      limit.stability = radial_stability_check(f, domain, cert.z_t, proof.w, options.stability_depth);
    }
  } else {
    limit.mechanism = LimitMechanism::InnerContinuity;
    limit.w_prime = ray_exit(domain, proof.w, cert.z_t);
    if (limit.w_prime) {
      limit.w_prime_pairing = pair(c, *limit.w_prime - proof.w);
    } else {
      cert.assumptions.push_back(Assumption::ContinuityOnInnerSegment);
    }
  }

  for (const auto& step : proof.steps) {
    if (!cert.refutation) cert.refutation = refutation_from(step.outer);
    if (!cert.refutation) cert.refutation = refutation_from(step.inner);
  }
  if (!cert.refutation && !cert.conclusion.holds) cert.refutation = direct_refutation(cert);

  if (cert.refutation) {
    cert.status = CertificateStatus::Refuted;
  } else if (cert.assumptions.empty()) {
    cert.status = CertificateStatus::Verified;
  } else {
    cert.status = CertificateStatus::ConditionallyVerified;
  }
  cert.proof = std::move(proof);
  return cert;
}

Certificate reduce(const FunctionOracle& f, const LinearFunctional& c, const ConvexDomain& domain,
                   const Point& u, const Point& v, const Rational& t, const ReductionOptions& options) {
  require_same_dimension(u, v, "reduce");
  if (pair(c, u - v) != 0) return case_a_bound(f, c, domain, u, v, t);
  return case_b_bound(f, c, domain, u, v, t, options);
}

std::size_t TheoremReport::count(CertificateStatus status) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const TheoremEntry& e) {
    return e.certificate.status == status;
  }));
}

TheoremReport verify_convexity_via_theorem(const FunctionOracle& f, const LinearFunctional& c,
                                           const ConvexDomain& domain, const SamplePlan& plan,
                                           const ReductionOptions& options) {
  if (is_constant_on(c, domain).constant) {
    throw Error(ErrorCode::ConstantFunctionalOnDomain, "c must not be constant on the domain");
  }
  const auto triples = expand(domain, plan);
  if (triples.empty()) throw Error(ErrorCode::EmptyPlan, "plan expands to no triples");

  TheoremReport report;
  for (const auto& [u, v, t] : triples) {
    TheoremEntry entry{reduce(f, c, domain, u, v, t, options), false};
    const auto [lhs, rhs] = evaluate_inequality(f, Inequality::Convex, u, v, t);
    const auto& conclusion = entry.certificate.conclusion;
    entry.matches_direct = conclusion.lhs == lhs && conclusion.rhs == rhs && conclusion.holds == (lhs <= rhs);

    const std::size_t index = report.entries.size();
    switch (entry.certificate.status) {
      case CertificateStatus::Refuted:
        if (!report.first_refuted) report.first_refuted = index;
        report.aggregate = Aggregate::Refuted;
        break;
      case CertificateStatus::ConditionallyVerified:
        report.conditional.push_back(index);
        if (report.aggregate == Aggregate::AllVerified) report.aggregate = Aggregate::ConditionallyVerified;
        break;
      case CertificateStatus::Verified:
        break;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string_view to_string(CertificateStatus status) noexcept {
  switch (status) {
    case CertificateStatus::Verified: return "Verified";
    case CertificateStatus::ConditionallyVerified: return "ConditionallyVerified";
    case CertificateStatus::Refuted: return "Refuted";
  }
  return "Unknown";
}

std::string_view to_string(Assumption assumption) noexcept {
  switch (assumption) {
    case Assumption::RadialStabilityAtFlatPoint: return "RadialStabilityAtFlatPoint";
    case Assumption::ContinuityOnInnerSegment: return "ContinuityOnInnerSegment";
  }
  return "Unknown";
}

std::string_view to_string(Aggregate aggregate) noexcept {
  switch (aggregate) {
    case Aggregate::AllVerified: return "AllVerified";
    case Aggregate::ConditionallyVerified: return "ConditionallyVerified";
    case Aggregate::Refuted: return "Refuted";
  }
  return "Unknown";
}

std::string_view to_string(LimitMechanism mechanism) noexcept {
  switch (mechanism) {
    case LimitMechanism::StabilityLimsup: return "StabilityLimsup";
    case LimitMechanism::InnerContinuity: return "InnerContinuity";
  }
  return "Unknown";
}

std::string_view to_string(Refutation::Kind kind) noexcept {
  switch (kind) {
    case Refutation::Kind::FamilyQuasiconvexity: return "FamilyQuasiconvexity";
    case Refutation::Kind::DirectEvaluation: return "DirectEvaluation";
  }
  return "Unknown";
}

}  // namespace convexcheck
