#pragma once

// Constructive reduction from quasiconvexity of the perturbed family
// f + lambda c to the convexity inequality at a single triple (u, v, t).
//
// A triple with <c, u - v> != 0 is handled directly (Case A): lambda is
// chosen so that f + lambda c takes equal values at u and v, and the
// quasiconvexity inequality at z_t is algebraically the convexity bound.
// When <c, u - v> = 0 (Case B) an auxiliary point w with <c, w> != <c, u>
// is used to move v to v_s = v + s (w - v); two Case A steps give the
// chained bound at z_{t_s}, and z_{t_s} -> z_t as s -> 0.

#include <optional>
#include <variant>
#include <vector>

#include "convexcheck/checkers.hpp"

namespace convexcheck {

/// lhs <= rhs, with the outcome of the exact comparison.
struct InequalityRecord {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

InequalityRecord make_record(Rational lhs, Rational rhs);

/// One application of the direct argument on (u, v, t).
struct CaseAStep {
  Point u;
  Point v;
  Rational t;
  Point z;            // v + t (u - v)
  Rational pairing;   // <c, u - v>
  Rational lambda;    // lambda * pairing = f(v) - f(u)
  Rational f_u, f_v, f_z;
  Rational g_u, g_v, g_z;           // g = f + lambda c; g_u == g_v
  InequalityRecord quasiconvexity;  // g(z) <= max{g(u), g(v)} = g(v)
  InequalityRecord convexity;       // f(z) <= f(v) + t (f(u) - f(v))
};

struct CaseBStep {
  Rational s;
  Point v_s;       // v + s (w - v)
  Rational t_s;    // t (1 - s) / (1 - t s)
  Point z_ts;      // v_s + t_s (u - v_s), on the segment [w, z_t]
  CaseAStep outer;  // on (w, v, s)
  CaseAStep inner;  // on (u, v_s, t_s)
  InequalityRecord chained;  // f(z_ts) <= (1 - t_s)[f(v) + s (f(w) - f(v))] + t_s f(u)
  Rational residual;
};

enum class LimitMechanism { StabilityLimsup, InnerContinuity };

struct LimitStep {
  PointClass z_t_class = PointClass::Outside;
  LimitMechanism mechanism = LimitMechanism::StabilityLimsup;
  /// Far end of the chord from w through z_t (non-flat z_t only).
  std::optional<Point> w_prime;
  /// <c, w' - w>, nonzero whenever w' is present.
  std::optional<Rational> w_prime_pairing;
  /// Estimate along the ray from z_t towards w (flat z_t only).
  std::optional<StabilityEstimate> stability;
  /// Residual of the chained bound at the smallest s.
  Rational residual_bound;
};

struct CaseA {
  CaseAStep step;
};

struct CaseB {
  Point w;
  std::vector<Rational> s_sequence;
  std::vector<CaseBStep> steps;
  LimitStep limit;
};

enum class Assumption { RadialStabilityAtFlatPoint, ContinuityOnInnerSegment };

enum class CertificateStatus { Verified, ConditionallyVerified, Refuted };

struct Refutation {
  enum class Kind {
    /// A Case A step found g(z) > g(v) for g = f + lambda c.
    FamilyQuasiconvexity,
    /// The convexity bound fails when evaluated directly at z_t.
    DirectEvaluation,
  };
  Kind kind = Kind::DirectEvaluation;
  std::optional<Rational> lambda;
  Point u;
  Point v;
  Rational t;
  Rational lhs;
  Rational rhs;
};

struct Certificate {
  ConvexDomain domain;
  Point u;
  Point v;
  Rational t;
  Point z_t;
  std::variant<CaseA, CaseB> proof;
  InequalityRecord conclusion;  // f(z_t) <= (1 - t) f(v) + t f(u), evaluated directly
  std::vector<Assumption> assumptions;
  CertificateStatus status = CertificateStatus::Refuted;
  std::optional<Refutation> refutation;
};

struct ReductionOptions {
  std::vector<Rational> s_sequence = default_s_sequence();
  int stability_depth = 20;
  bool attach_stability = true;

  /// {2^-k : k = 1..length}.
  static std::vector<Rational> default_s_sequence(int length = 12);
};

/// (f(v) - f(u)) / <c, u - v>. Throws DegeneratePairing when the pairing is zero.
Rational select_lambda(const FunctionOracle& f, const LinearFunctional& c, const Point& u, const Point& v);

CaseAStep case_a_step(const FunctionOracle& f, const LinearFunctional& c, const Point& u, const Point& v,
                      const Rational& t);

Certificate case_a_bound(const FunctionOracle& f, const LinearFunctional& c, const ConvexDomain& domain,
                         const Point& u, const Point& v, const Rational& t);

/// First anchor point of the domain whose pairing differs from <c, u>.
Point choose_w(const ConvexDomain& domain, const LinearFunctional& c, const Point& u);

Certificate case_b_bound(const FunctionOracle& f, const LinearFunctional& c, const ConvexDomain& domain,
                         const Point& u, const Point& v, const Rational& t,
                         const ReductionOptions& options = {});

/// Dispatches on the exact test <c, u - v> == 0.
Certificate reduce(const FunctionOracle& f, const LinearFunctional& c, const ConvexDomain& domain,
                   const Point& u, const Point& v, const Rational& t, const ReductionOptions& options = {});

/// (1 - t_s) s |f(w) - f(v)| + |t_s - t| (|f(u)| + |f(v)|).
Rational residual_bound(const Rational& s, const Rational& t_s, const Rational& t, const Rational& f_u,
                        const Rational& f_v, const Rational& f_w);

/// Re-checks every recorded quantity of a certificate against the oracle
/// and the geometric primitives. Throws MalformedCertificate when the
/// certificate is structurally unusable.
bool validate_certificate(const Certificate& cert, const FunctionOracle& f, const LinearFunctional& c);

enum class Aggregate { AllVerified, ConditionallyVerified, Refuted };

struct TheoremEntry {
  Certificate certificate;
  /// Conclusion agrees bit-exactly with a direct evaluation of the
  /// convexity inequality at the same triple.
  bool matches_direct = false;
};

struct TheoremReport {
  std::vector<TheoremEntry> entries;  // plan order
  Aggregate aggregate = Aggregate::AllVerified;
  std::optional<std::size_t> first_refuted;
  /// Flat z_t at which radial stability was assumed, in plan order.
  std::vector<std::size_t> conditional;

  std::size_t count(CertificateStatus status) const;
};

TheoremReport verify_convexity_via_theorem(const FunctionOracle& f, const LinearFunctional& c,
                                           const ConvexDomain& domain, const SamplePlan& plan,
                                           const ReductionOptions& options = {});

std::string_view to_string(CertificateStatus status) noexcept;
std::string_view to_string(Assumption assumption) noexcept;
std::string_view to_string(Aggregate aggregate) noexcept;
std::string_view to_string(LimitMechanism mechanism) noexcept;
std::string_view to_string(Refutation::Kind kind) noexcept;

}  // namespace convexcheck
