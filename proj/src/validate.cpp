#include "convexcheck/reduction.hpp"

#include <algorithm>

namespace convexcheck {

namespace {

bool record_consistent(const InequalityRecord& record, const Rational& lhs, const Rational& rhs) {
  return record.lhs == lhs && record.rhs == rhs && record.holds == (lhs <= rhs);
}

bool same_refutation(const std::optional<Refutation>& a, const std::optional<Refutation>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->kind == b->kind && a->lambda == b->lambda && a->u == b->u && a->v == b->v && a->t == b->t &&
         a->lhs == b->lhs && a->rhs == b->rhs;
}

// Each recorded value is recomputed from the oracle and the defining
// relations rather than by re-running the producer.
bool check_step(const CaseAStep& step, const FunctionOracle& f, const LinearFunctional& c) {
  if (!(step.t > 0 && step.t < 1)) return false;
  if (step.z != step.v + step.t * (step.u - step.v)) return false;
  if (step.pairing != pair(c, step.u) - pair(c, step.v) || step.pairing == 0) return false;
  if (step.f_u != f(step.u) || step.f_v != f(step.v) || step.f_z != f(step.z)) return false;
  if (step.lambda * step.pairing != step.f_v - step.f_u) return false;
  if (step.g_u != step.f_u + step.lambda * pair(c, step.u)) return false;
  if (step.g_v != step.f_v + step.lambda * pair(c, step.v)) return false;
  if (step.g_z != step.f_z + step.lambda * pair(c, step.z)) return false;
  if (step.g_u != step.g_v) return false;
  if (!record_consistent(step.quasiconvexity, step.g_z, step.g_v)) return false;
  const Rational bound = (1 - step.t) * step.f_v + step.t * step.f_u;
  if (!record_consistent(step.convexity, step.f_z, bound)) return false;
  // With g(u) = g(v), g(z) <= g(v) rearranges to the convexity bound.
  return step.quasiconvexity.holds == step.convexity.holds;
}

bool check_case_a(const Certificate& cert, const CaseA& proof, const FunctionOracle& f,
                  const LinearFunctional& c, std::optional<Refutation>& expected) {
  const auto& step = proof.step;
  if (step.u != cert.u || step.v != cert.v || step.t != cert.t || step.z != cert.z_t) return false;
  if (!check_step(step, f, c)) return false;
  if (!cert.assumptions.empty()) return false;
  if (!record_consistent(cert.conclusion, step.f_z, step.convexity.rhs)) return false;
  if (!step.quasiconvexity.holds) {
    expected = Refutation{Refutation::Kind::FamilyQuasiconvexity, step.lambda, step.u, step.v, step.t,
                          step.g_z, step.g_v};
  }
  return true;
}

bool check_limit(const Certificate& cert, const CaseB& proof, const FunctionOracle& f,
                 const LinearFunctional& c, std::vector<Assumption>& expected_assumptions) {
  const LimitStep& limit = proof.limit;
  if (limit.z_t_class != classify_point(cert.domain, cert.z_t)) return false;
  if (limit.residual_bound != proof.steps.back().residual) return false;
  if (limit.z_t_class == PointClass::Flat) {
    if (limit.mechanism != LimitMechanism::StabilityLimsup) return false;
    if (limit.w_prime || limit.w_prime_pairing) return false;
    expected_assumptions.push_back(Assumption::RadialStabilityAtFlatPoint);
    if (limit.stability) {
      const auto& est = *limit.stability;
      if (est.z != cert.z_t || est.w != proof.w) return false;
      const auto fresh = radial_stability_check(f, cert.domain, est.z, est.w, est.depth);
      if (fresh.value_at_z != est.value_at_z || fresh.tail_max != est.tail_max ||
          fresh.extrapolated_limit != est.extrapolated_limit || fresh.tolerance != est.tolerance ||
          fresh.samples != est.samples) {
        return false;
      }
    }
    return true;
  }
  if (limit.mechanism != LimitMechanism::InnerContinuity || limit.stability) return false;
  if (!limit.w_prime) {
    if (limit.w_prime_pairing) return false;
    expected_assumptions.push_back(Assumption::ContinuityOnInnerSegment);
    return true;
  }
  // z_t in ]w, w'[: w' - w = tau (z_t - w) with tau > 1, and w' in the domain.
  const Point& w_prime = *limit.w_prime;
  if (!contains(cert.domain, w_prime)) return false;
  const Point direction = cert.z_t - proof.w;
  const Point reach = w_prime - proof.w;
  if (!is_parallel<Rational>(reach, direction)) return false;
  if (reach.dot(direction) <= direction.squaredNorm()) return false;
  if (!limit.w_prime_pairing || *limit.w_prime_pairing != pair(c, reach) || *limit.w_prime_pairing == 0) {
    return false;
  }
  return true;
}

bool check_case_b(const Certificate& cert, const CaseB& proof, const FunctionOracle& f,
                  const LinearFunctional& c, std::optional<Refutation>& expected,
                  std::vector<Assumption>& expected_assumptions) {
  if (pair(c, cert.u) != pair(c, cert.v)) return false;
  if (!contains(cert.domain, proof.w) || pair(c, proof.w) == pair(c, cert.u)) return false;
  const auto anchors = anchor_points(cert.domain);
  if (std::find(anchors.begin(), anchors.end(), proof.w) == anchors.end()) return false;
  const Rational f_u = f(cert.u);
  const Rational f_v = f(cert.v);
  const Rational f_w = f(proof.w);
  const Point direction = cert.z_t - proof.w;
  std::optional<Rational> previous_residual;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const CaseBStep& step = proof.steps[i];
    const Rational& s = step.s;
    if (s != proof.s_sequence[i] || !(s > 0 && s < 1)) return false;
    if (i > 0 && !(s < proof.s_sequence[i - 1])) return false;
    if (step.v_s != cert.v + s * (proof.w - cert.v)) return false;
    if (step.t_s != t_param(cert.t, s)) return false;
    if (step.z_ts != step.v_s + step.t_s * (cert.u - step.v_s)) return false;
    if (!is_parallel<Rational>(Point(step.z_ts - proof.w), direction)) return false;

    if (step.outer.u != proof.w || step.outer.v != cert.v || step.outer.t != s) return false;
    if (step.inner.u != cert.u || step.inner.v != step.v_s || step.inner.t != step.t_s) return false;
    if (!check_step(step.outer, f, c) || !check_step(step.inner, f, c)) return false;

    const Rational chained_rhs = (1 - step.t_s) * (f_v + s * (f_w - f_v)) + step.t_s * f_u;
    if (!record_consistent(step.chained, f(step.z_ts), chained_rhs)) return false;
    // Substituting the outer bound into the inner one yields the chain.
    if (step.outer.convexity.holds && step.inner.convexity.holds && !step.chained.holds) return false;

    const Rational residual = residual_bound(s, step.t_s, cert.t, f_u, f_v, f_w);
    if (step.residual != residual || residual < 0) return false;
    if (previous_residual && residual > *previous_residual) return false;
    previous_residual = residual;

    if (!expected) {
      for (const CaseAStep* inner : {&step.outer, &step.inner}) {
        if (!expected && !inner->quasiconvexity.holds) {
          expected = Refutation{Refutation::Kind::FamilyQuasiconvexity, inner->lambda, inner->u, inner->v,
                                inner->t, inner->g_z, inner->g_v};
        }
      }
    }
  }
  if (!record_consistent(cert.conclusion, f(cert.z_t), (1 - cert.t) * f_v + cert.t * f_u)) return false;
  if (!expected && !cert.conclusion.holds) {
    expected = Refutation{Refutation::Kind::DirectEvaluation, std::nullopt, cert.u, cert.v, cert.t,
                          cert.conclusion.lhs, cert.conclusion.rhs};
  }
  return check_limit(cert, proof, f, c, expected_assumptions);
}

}  // namespace

bool validate_certificate(const Certificate& cert, const FunctionOracle& f, const LinearFunctional& c) {
  const Eigen::Index d = dimension(cert.domain);
  if (cert.u.size() != d || cert.v.size() != d || cert.z_t.size() != d || c.dimension() != d ||
      f.dimension() != d) {
    throw Error(ErrorCode::MalformedCertificate, "dimensions disagree");
  }
  if (const auto* b = std::get_if<CaseB>(&cert.proof)) {
    if (b->steps.empty() || b->steps.size() != b->s_sequence.size() || b->w.size() != d) {
      throw Error(ErrorCode::MalformedCertificate, "case B trace is incomplete");
    }
  }

  try {
    if (!(cert.t > 0 && cert.t < 1) || cert.u == cert.v) return false;
    if (!contains(cert.domain, cert.u) || !contains(cert.domain, cert.v)) return false;
    if (cert.z_t != cert.v + cert.t * (cert.u - cert.v)) return false;

    std::optional<Refutation> expected;
    std::vector<Assumption> expected_assumptions;
    const bool steps_ok = std::visit(
        [&](const auto& proof) {
          using Proof = std::decay_t<decltype(proof)>;
          if constexpr (std::is_same_v<Proof, CaseA>) {
            return check_case_a(cert, proof, f, c, expected);
          } else {
            return check_case_b(cert, proof, f, c, expected, expected_assumptions);
          }
        },
        cert.proof);
    if (!steps_ok) return false;
    if (cert.assumptions != expected_assumptions) return false;
    if (!same_refutation(cert.refutation, expected)) return false;

    CertificateStatus status = CertificateStatus::Verified;
    if (expected) {
      status = CertificateStatus::Refuted;
    } else if (!expected_assumptions.empty()) {
      status = CertificateStatus::ConditionallyVerified;
    }
    return cert.status == status;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedCertificate) throw;
    return false;
  }
}

}  // namespace convexcheck
