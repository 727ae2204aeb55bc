#include "convexcheck/report.hpp"

namespace convexcheck {

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Point& point) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < point.size(); ++i) out.push_back(to_string(point[i]));
  return out;
}

Json to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json to_json(const ConvexDomain& domain) {
  Json out;
  std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        auto points = [](const std::vector<Point>& ps) {
          Json arr = Json::array();
          for (const auto& p : ps) arr.push_back(to_json(p));
          return arr;
        };
        if constexpr (std::is_same_v<D, Simplex>) {
          out["kind"] = "Simplex";
          out["vertices"] = points(d.vertices());
        } else if constexpr (std::is_same_v<D, Segment>) {
          out["kind"] = "Segment";
          out["vertices"] = points({d.a(), d.b()});
        } else if constexpr (std::is_same_v<D, ConvexPolygon2D>) {
          out["kind"] = "ConvexPolygon2D";
          out["vertices"] = points(d.vertices());
        } else {
          out["kind"] = "EuclideanBall";
          out["center"] = to_json(d.center());
          out["radius"] = to_json(d.radius());
        }
      },
      domain);
  return out;
}

Json to_json(const SamplePlan& plan) {
  Json out;
  out["pair_count"] = plan.pair_count;
  out["t_grid"] = to_json(plan.t_grid);
  out["seed"] = plan.seed;
  out["point_source"] =
      plan.point_source == PointSource::VertexConvexHullGrid ? "VertexConvexHullGrid" : "SeededRandomBarycentric";
  out["resolution"] = plan.resolution;
  Json pinned = Json::array();
  for (const auto& [u, v, t] : plan.pinned) {
    pinned.push_back(Json{{"u", to_json(u)}, {"v", to_json(v)}, {"t", to_json(t)}});
  }
  out["pinned"] = std::move(pinned);
  return out;
}

Json to_json(const Verdict& verdict) {
  Json out;
  if (const auto* pass = std::get_if<Pass>(&verdict)) {
    out["kind"] = "Pass";
    out["checked"] = pass->checked;
  } else if (const auto* violation = std::get_if<Violation>(&verdict)) {
    out["kind"] = "Violation";
    out["u"] = to_json(violation->u);
    out["v"] = to_json(violation->v);
    out["t"] = to_json(violation->t);
    out["lhs"] = to_json(violation->lhs);
    out["rhs"] = to_json(violation->rhs);
  } else {
    out["kind"] = "Inconclusive";
    out["reason"] = std::get<Inconclusive>(verdict).reason;
  }
  return out;
}

Json to_json(const FamilyVerdict& verdict) {
  Json per = Json::array();
  for (const auto& [lambda, v] : verdict.per_lambda) {
    per.push_back(Json{{"lambda", to_json(lambda)}, {"verdict", to_json(v)}});
  }
  return Json{{"all_pass", verdict.all_pass()}, {"per_lambda", std::move(per)}};
}

Json to_json(const StabilityEstimate& estimate) {
  Json samples = Json::array();
  for (const auto& [t, value] : estimate.samples) samples.push_back(Json::array({to_string(t), to_string(value)}));
  Json out;
  out["label"] = "estimate";
  out["z"] = to_json(estimate.z);
  out["w"] = to_json(estimate.w);
  out["depth"] = estimate.depth;
  out["value_at_z"] = to_json(estimate.value_at_z);
  out["tail_max"] = to_json(estimate.tail_max);
  out["extrapolated_limit"] = to_json(estimate.extrapolated_limit);
  out["tolerance"] = to_json(estimate.tolerance);
  out["stable"] = estimate.stable();
  out["samples"] = std::move(samples);
  return out;
}

Json to_json(const FalsifierWitness& witness) {
  return Json{{"lambda", to_json(witness.lambda)}, {"violation", to_json(Verdict(witness.violation))}};
}

Json to_json(const InequalityRecord& record) {
  return Json{{"lhs", to_json(record.lhs)}, {"rhs", to_json(record.rhs)}, {"holds", record.holds}};
}

Json to_json(const CaseAStep& step) {
  Json out;
  out["u"] = to_json(step.u);
  out["v"] = to_json(step.v);
  out["t"] = to_json(step.t);
  out["z"] = to_json(step.z);
  out["pairing"] = to_json(step.pairing);
  out["lambda"] = to_json(step.lambda);
  out["f"] = Json{{"u", to_json(step.f_u)}, {"v", to_json(step.f_v)}, {"z", to_json(step.f_z)}};
  out["g"] = Json{{"u", to_json(step.g_u)}, {"v", to_json(step.g_v)}, {"z", to_json(step.g_z)}};
  out["quasiconvexity"] = to_json(step.quasiconvexity);
  out["convexity"] = to_json(step.convexity);
  return out;
}

Json to_json(const Certificate& cert) {
  Json out;
  out["triple"] = Json{{"u", to_json(cert.u)}, {"v", to_json(cert.v)}, {"t", to_json(cert.t)}};
  out["z_t"] = to_json(cert.z_t);
  if (const auto* a = std::get_if<CaseA>(&cert.proof)) {
    out["case"] = "A";
    out["step"] = to_json(a->step);
  } else {
    const auto& b = std::get<CaseB>(cert.proof);
    out["case"] = "B";
    out["w"] = to_json(b.w);
    out["s_sequence"] = to_json(b.s_sequence);
    Json steps = Json::array();
    for (const auto& step : b.steps) {
      Json s;
      s["s"] = to_json(step.s);
      s["v_s"] = to_json(step.v_s);
      s["t_s"] = to_json(step.t_s);
      s["z_ts"] = to_json(step.z_ts);
      s["outer"] = to_json(step.outer);
      s["inner"] = to_json(step.inner);
      s["chained"] = to_json(step.chained);
      s["residual"] = to_json(step.residual);
      steps.push_back(std::move(s));
    }
    out["steps"] = std::move(steps);
    Json limit;
    limit["z_t_class"] = std::string(to_string(b.limit.z_t_class));
    limit["mechanism"] = std::string(to_string(b.limit.mechanism));
    limit["w_prime"] = b.limit.w_prime ? to_json(*b.limit.w_prime) : Json(nullptr);
    limit["w_prime_pairing"] = b.limit.w_prime_pairing ? to_json(*b.limit.w_prime_pairing) : Json(nullptr);
    limit["stability"] = b.limit.stability ? to_json(*b.limit.stability) : Json(nullptr);
    limit["residual_bound"] = to_json(b.limit.residual_bound);
    out["limit"] = std::move(limit);
  }
  out["conclusion"] = to_json(cert.conclusion);
  Json assumptions = Json::array();
  for (const auto a : cert.assumptions) assumptions.push_back(std::string(to_string(a)));
  out["assumptions"] = std::move(assumptions);
  out["status"] = std::string(to_string(cert.status));
  if (cert.refutation) {
    const auto& r = *cert.refutation;
    out["refutation"] = Json{{"kind", std::string(to_string(r.kind))},
                             {"lambda", r.lambda ? to_json(*r.lambda) : Json(nullptr)},
                             {"u", to_json(r.u)},
                             {"v", to_json(r.v)},
                             {"t", to_json(r.t)},
                             {"lhs", to_json(r.lhs)},
                             {"rhs", to_json(r.rhs)}};
  } else {
    out["refutation"] = nullptr;
  }
  return out;
}

Json to_json(const TheoremReport& report, bool with_certificates) {
  Json out;
  out["aggregate"] = std::string(to_string(report.aggregate));
  out["triples"] = report.entries.size();
  out["verified"] = report.count(CertificateStatus::Verified);
  out["conditionally_verified"] = report.count(CertificateStatus::ConditionallyVerified);
  out["refuted"] = report.count(CertificateStatus::Refuted);
  out["direct_mismatches"] = std::count_if(report.entries.begin(), report.entries.end(),
                                           [](const TheoremEntry& e) { return !e.matches_direct; });
  out["first_refuted"] = report.first_refuted
                             ? to_json(report.entries[*report.first_refuted].certificate)
                             : Json(nullptr);
  Json conditional = Json::array();
  for (const auto index : report.conditional) {
    const auto& cert = report.entries[index].certificate;
    Json item{{"z_t", to_json(cert.z_t)}};
    if (const auto* b = std::get_if<CaseB>(&cert.proof); b && b->limit.stability) {
      item["stability"] = Json{{"label", "estimate"},
                               {"stable", b->limit.stability->stable()},
                               {"tail_max", to_json(b->limit.stability->tail_max)},
                               {"value_at_z", to_json(b->limit.stability->value_at_z)}};
    }
    conditional.push_back(std::move(item));
  }
  out["conditional_points"] = std::move(conditional);
  if (with_certificates) {
    Json certs = Json::array();
    for (const auto& e : report.entries) certs.push_back(to_json(e.certificate));
    out["certificates"] = std::move(certs);
  }
  return out;
}

}  // namespace convexcheck
