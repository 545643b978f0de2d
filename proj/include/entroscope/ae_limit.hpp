#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entroscope/catalog.hpp"
#include "entroscope/expression.hpp"
#include "entroscope/profile.hpp"

namespace entroscope {

/// A base point for the limit constructions: an entropy profile together with
/// the expressions known to vanish on it exactly (never inferred from floats).
struct CertifiedProfile {
  EntropyProfile profile;
  std::vector<InfoExpression> zeros;
  std::uint32_t q = 0;  // example parameter, 0 when not from the quadruple
};

/// Certifies I(a;b|c), I(c;d|a), I(c;d|b), I(a;b), H(c|a,b) on `d` with the
/// exact tests and keeps the ones that hold.
CertifiedProfile certify_base(const JointDistribution& d);

/// Base for the quadruple at any prime q from the closed-form profile. The
/// zeros I(a;b|c), I(c;d|a), I(c;d|b) hold for every q by construction and are
/// checked by enumeration for q <= 31 in the test suite.
CertifiedProfile example_base(std::uint32_t q);

/// Interval-valued entropy profile modelling the N → ∞ limit: coordinate S
/// lies in [max(0, center − half_width), center + half_width]. zero_set lists
/// the expressions pinned to exactly 0 in the limit.
struct AEPointBox {
  std::vector<std::string> variables;
  std::vector<double> center;
  std::vector<double> half_width;
  std::vector<InfoExpression> zero_set;
  std::vector<std::string> provenance;
  std::uint32_t q = 0;

  double lo(SubsetMask s) const;
  double hi(SubsetMask s) const;
  /// Largest half-width over all coordinates.
  double max_half_width() const;
  bool pins(const InfoExpression& e) const;
  /// Zero-set entries whose interval evaluation over the box excludes 0.
  std::vector<std::string> inconsistent_zeros() const;
};

/// Slepian–Wolf hash of `hashed` given `given`: coordinates containing the
/// hashed variable move by at most I(hashed; given); the rest stay exact.
/// The zero set gains I(hashed; given) and keeps certified I(S;T|U) with the
/// hashed variable outside U and certified H(S|T) with it outside T.
AEPointBox sw_hash_limit(const CertifiedProfile& base, int hashed = 0, int given = 1);

/// Relativization on the Slepian–Wolf hash of c given (a,b): every coordinate
/// moves by at most H(c|a,b). The zero set gains H(c|a,b) and, when certified
/// in the base, I(a;b|c).
AEPointBox relativize_limit(const CertifiedProfile& base);

/// Both constructions on one serialization: half-width I(a;b) + H(c|a,b) on
/// every coordinate, zero set {I(a;b|c) (when certified), I(a;b), H(c|a,b)}.
AEPointBox combined_limit(const CertifiedProfile& base);

struct BodyBound {
  std::string name;
  double center_value = 0;   // body at the box center
  double perturbation = 0;   // sum of |coefficient| * half_width
  double gap = 0;            // −center_value − perturbation
};

/// Record that every point of the box violates each target body while the
/// targets' constraints hold exactly.
struct ViolationCertificate {
  std::string target;
  std::uint32_t q = 0;
  double gap = 0;  // minimum over bodies
  double half_width = 0;
  std::vector<BodyBound> bodies;
  std::vector<std::string> zero_set;   // canonical labels
  std::vector<std::string> provenance;
  std::vector<std::string> variables;
  std::vector<double> center;
  std::vector<double> half_widths;
};

/// Errors: ConstraintsNotPinned, InconsistentBox, GapNotPositive (message
/// carries the deficit).
ViolationCertificate certify_violation(const AEPointBox& box, const ConditionalInequality& ineq);
ViolationCertificate certify_violation(const AEPointBox& box, const std::vector<ConditionalInequality>& targets,
                                       const std::string& target_name);

/// Recomputes every body bound from the stored center and half-widths and
/// checks that each target's constraints appear in the zero set.
bool reverify(const ViolationCertificate& cert);

enum class AeTarget { Cond1, Cond3, Both };

AeTarget parse_ae_target(const std::string& name);
std::string to_string(AeTarget t);

/// Box for the target built on example_base(q).
AEPointBox example_box(std::uint32_t q, AeTarget target);

/// Certificate at a fixed prime q; throws GapNotPositive when q is too small.
ViolationCertificate certify_example(std::uint32_t q, AeTarget target);

/// First prime with a positive certificate.
ViolationCertificate minimal_certifying_q(AeTarget target);

/// rhs − lhs of the Matúš inequality at parameter k.
double matus_rhs(const EntropyProfile& p, int k);

struct RobustBound {
  double epsilon = 0;
  int k = 1;
};

/// min over k >= 1 of I(c;d|a)/k + (k+1)/2 * slack, scanning k up to
/// ceil(sqrt(2 I(c;d|a) / slack)) + 2 (a fixed cap when slack = 0).
RobustBound robust_gap_ineq4(const EntropyProfile& p, double slack);

}  // namespace entroscope
