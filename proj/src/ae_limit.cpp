#include "entroscope/ae_limit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entroscope/error.hpp"
#include "entroscope/fq_example.hpp"
#include "entroscope/parser.hpp"

namespace entroscope {

namespace {

constexpr SubsetMask kA = 1, kB = 2, kC = 4, kD = 8;
constexpr double kZeroSlack = 1e-9;

std::string label_of(const InfoExpression& e) {
  if (auto p = classify(e)) return pattern_label(*p, e.variables());
  return print_canonical(e);
}

void add_unique(std::vector<InfoExpression>& set, InfoExpression e) {
  if (std::find(set.begin(), set.end(), e) == set.end()) set.push_back(std::move(e));
}

bool contains(const std::vector<InfoExpression>& set, const InfoExpression& e) {
  return std::find(set.begin(), set.end(), e) != set.end();
}

void require_four(const EntropyProfile& p) {
  if (p.num_variables() != 4) fail(ErrorCode::DimensionMismatch, "limit constructions need a 4-variable profile");
}

AEPointBox point_box(const CertifiedProfile& base) {
  require_four(base.profile);
  AEPointBox box;
  box.variables = base.profile.variables();
  box.center = base.profile.coords();
  box.half_width.assign(box.center.size(), 0.0);
  box.q = base.q;
  return box;
}

double nonnegative(double v) { return v > 0 ? v : 0.0; }

BodyBound bound_body(const std::string& name, const InfoExpression& body, const std::vector<double>& center,
                     const std::vector<double>& half_width) {
  BodyBound b;
  b.name = name;
  for (const auto& [s, c] : body.terms()) {
    const double coef = c.to_double();
    b.center_value += coef * center[s - 1];
    b.perturbation += std::abs(coef) * half_width[s - 1];
  }
  b.gap = -b.center_value - b.perturbation;
  return b;
}

std::vector<ConditionalInequality> targets_named(const std::string& name) {
  if (name == "both") return {find_inequality("cond1"), find_inequality("cond3")};
  return {find_inequality(name)};
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

CertifiedProfile certify_base(const JointDistribution& d) {
  if (d.num_variables() != 4) fail(ErrorCode::DimensionMismatch, "certify_base needs 4 variables");
  CertifiedProfile out{profile_of(d), {}, 0};
  const auto& v = d.names();
  const std::vector<InfoExpression> candidates{
      expand_mutual_information(v, kA, kB, kC), expand_mutual_information(v, kC, kD, kA),
      expand_mutual_information(v, kC, kD, kB), expand_mutual_information(v, kA, kB),
      expand_entropy(v, kC, kA | kB)};
  for (const auto& e : candidates)
    if (certify_zero(e, d).value_or(false)) out.zeros.push_back(e);
  return out;
}

CertifiedProfile example_base(std::uint32_t q) {
  CertifiedProfile out{closed_form_profile(q), {}, q};
  const auto& v = out.profile.variables();
  out.zeros = {expand_mutual_information(v, kA, kB, kC), expand_mutual_information(v, kC, kD, kA),
               expand_mutual_information(v, kC, kD, kB)};
  return out;
}

double AEPointBox::lo(SubsetMask s) const {
  if (s == 0) return 0.0;
  return std::max(0.0, center[s - 1] - half_width[s - 1]);
}

double AEPointBox::hi(SubsetMask s) const {
  if (s == 0) return 0.0;
  return center[s - 1] + half_width[s - 1];
}

double AEPointBox::max_half_width() const {
  double m = 0;
  for (double h : half_width) m = std::max(m, h);
  return m;
}

bool AEPointBox::pins(const InfoExpression& e) const {
  const InfoExpression here = align_variables(e, variables);
  return contains(zero_set, here);
}

std::vector<std::string> AEPointBox::inconsistent_zeros() const {
  std::vector<std::string> out;
  for (const auto& z : zero_set) {
    double low = 0, high = 0;
    for (const auto& [s, c] : z.terms()) {
      const double coef = c.to_double();
      low += coef * (coef > 0 ? lo(s) : hi(s));
      high += coef * (coef > 0 ? hi(s) : lo(s));
    }
    if (low > kZeroSlack || high < -kZeroSlack) out.push_back(label_of(z));
  }
  return out;
}

AEPointBox sw_hash_limit(const CertifiedProfile& base, int hashed, int given) {
  AEPointBox box = point_box(base);
  if (hashed < 0 || hashed > 3 || given < 0 || given > 3 || hashed == given)
    fail(ErrorCode::InvalidArgument, "hashed and given must be distinct variables 0..3");
  const SubsetMask h = SubsetMask{1} << hashed;
  const SubsetMask g = SubsetMask{1} << given;
  const auto& v = box.variables;
  const double width = nonnegative(evaluate(expand_mutual_information(v, h, g), base.profile));
  for (SubsetMask s = 1; s <= 15; ++s)
    if (s & h) box.half_width[s - 1] = width;
  for (const auto& z : base.zeros) {
    const InfoExpression here = align_variables(z, v);
    auto p = classify(here);
    if (!p || (p->given & h)) continue;
    add_unique(box.zero_set, here);
  }
  add_unique(box.zero_set, expand_mutual_information(v, h, g));
  box.provenance = {"serialize", "sw-hash", "scale", "limit"};
  return box;
}

AEPointBox relativize_limit(const CertifiedProfile& base) {
  AEPointBox box = point_box(base);
  const auto& v = box.variables;
  const InfoExpression h_c = expand_entropy(v, kC, kA | kB);
  const double width = nonnegative(evaluate(h_c, base.profile));
  std::fill(box.half_width.begin(), box.half_width.end(), width);
  const InfoExpression i_ab_c = expand_mutual_information(v, kA, kB, kC);
  for (const auto& z : base.zeros)
    if (align_variables(z, v) == i_ab_c) add_unique(box.zero_set, i_ab_c);
  add_unique(box.zero_set, h_c);
  box.provenance = {"serialize", "relativize", "scale", "limit"};
  return box;
}

AEPointBox combined_limit(const CertifiedProfile& base) {
  AEPointBox box = point_box(base);
  const auto& v = box.variables;
  const InfoExpression i_ab = expand_mutual_information(v, kA, kB);
  const InfoExpression h_c = expand_entropy(v, kC, kA | kB);
  const double width = nonnegative(evaluate(i_ab, base.profile)) + nonnegative(evaluate(h_c, base.profile));
  std::fill(box.half_width.begin(), box.half_width.end(), width);
  const InfoExpression i_ab_c = expand_mutual_information(v, kA, kB, kC);
  for (const auto& z : base.zeros)
    if (align_variables(z, v) == i_ab_c) add_unique(box.zero_set, i_ab_c);
  add_unique(box.zero_set, i_ab);
  add_unique(box.zero_set, h_c);
  box.provenance = {"serialize", "sw-hash", "relativize", "scale", "limit"};
  return box;
}

ViolationCertificate certify_violation(const AEPointBox& box, const ConditionalInequality& ineq) {
  return certify_violation(box, std::vector<ConditionalInequality>{ineq}, ineq.name);
}

ViolationCertificate certify_violation(const AEPointBox& box, const std::vector<ConditionalInequality>& targets,
                                       const std::string& target_name) {
  if (targets.empty()) fail(ErrorCode::InvalidArgument, "no target inequality");
  std::vector<std::string> missing;
  for (const auto& t : targets)
    for (const auto& c : t.constraints)
      if (!box.pins(c)) missing.push_back(t.name + ": " + label_of(c));
  if (!missing.empty()) {
    std::string msg = "constraints not pinned by the zero set:";
    for (const auto& m : missing) msg += " " + m + ";";
    fail(ErrorCode::ConstraintsNotPinned, msg);
  }
  const auto bad = box.inconsistent_zeros();
  if (!bad.empty()) {
    std::string msg = "zero set inconsistent with the box:";
    for (const auto& b : bad) msg += " " + b;
    fail(ErrorCode::InconsistentBox, msg);
  }

  ViolationCertificate cert;
  cert.target = target_name;
  cert.q = box.q;
  cert.half_width = box.max_half_width();
  cert.gap = std::numeric_limits<double>::infinity();
  for (const auto& t : targets) {
    cert.bodies.push_back(bound_body(t.name, align_variables(t.body, box.variables), box.center, box.half_width));
    cert.gap = std::min(cert.gap, cert.bodies.back().gap);
  }
  if (!(cert.gap > 0))
    fail(ErrorCode::GapNotPositive, "gap " + format_double(cert.gap) + " is not positive (deficit " +
                                        format_double(-cert.gap) + ") at q=" + std::to_string(box.q));
  for (const auto& z : box.zero_set) cert.zero_set.push_back(label_of(z));
  cert.provenance = box.provenance;
  cert.variables = box.variables;
  cert.center = box.center;
  cert.half_widths = box.half_width;
  return cert;
}

bool reverify(const ViolationCertificate& cert) {
  const std::size_t dim = (std::size_t{1} << cert.variables.size()) - 1;
  if (cert.center.size() != dim || cert.half_widths.size() != dim) return false;
  std::vector<ConditionalInequality> targets;
  try {
    targets = targets_named(cert.target);
  } catch (const Error&) {
    return false;
  }
  std::vector<InfoExpression> zeros;
  for (const auto& label : cert.zero_set) {
    try {
      zeros.push_back(parse_expression(label, cert.variables));
    } catch (const Error&) {
      return false;
    }
  }
  if (targets.size() != cert.bodies.size()) return false;
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (const auto& c : targets[i].constraints)
      if (!contains(zeros, align_variables(c, cert.variables))) return false;
    const BodyBound b =
        bound_body(targets[i].name, align_variables(targets[i].body, cert.variables), cert.center, cert.half_widths);
    const BodyBound& stored = cert.bodies[i];
    const double tol = 1e-12 * (1 + std::abs(b.gap));
    if (stored.name != b.name || std::abs(stored.gap - b.gap) > tol ||
        std::abs(stored.center_value - b.center_value) > tol || std::abs(stored.perturbation - b.perturbation) > tol)
      return false;
    gap = std::min(gap, b.gap);
  }
  return gap > 0 && std::abs(gap - cert.gap) <= 1e-12 * (1 + std::abs(gap));
}

AeTarget parse_ae_target(const std::string& name) {
  if (name == "cond1") return AeTarget::Cond1;
  if (name == "cond3") return AeTarget::Cond3;
  if (name == "both") return AeTarget::Both;
  fail(ErrorCode::UnknownInequality, "unknown a.e. target '" + name + "' (expected cond1, cond3 or both)");
}

std::string to_string(AeTarget t) {
  switch (t) {
    case AeTarget::Cond1: return "cond1";
    case AeTarget::Cond3: return "cond3";
    case AeTarget::Both: return "both";
  }
  return "both";
}

AEPointBox example_box(std::uint32_t q, AeTarget target) {
  const CertifiedProfile base = example_base(q);
  switch (target) {
    case AeTarget::Cond1: return sw_hash_limit(base, 0, 1);
    case AeTarget::Cond3: return relativize_limit(base);
    case AeTarget::Both: return combined_limit(base);
  }
  return combined_limit(base);
}

ViolationCertificate certify_example(std::uint32_t q, AeTarget target) {
  const std::string name = to_string(target);
  return certify_violation(example_box(q, target), targets_named(name), name);
}

ViolationCertificate minimal_certifying_q(AeTarget target) {
  for (std::uint64_t q = 2; q <= 0xFFFFFFFFull; q = next_prime(q)) {
    try {
      return certify_example(static_cast<std::uint32_t>(q), target);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GapNotPositive) throw;
    }
  }
  fail(ErrorCode::GapNotPositive, "no certifying prime below 2^32");
}

double matus_rhs(const EntropyProfile& p, int k) {
  require_four(p);
  return evaluate(align_variables(matus_star(k).body, p.variables()), p);
}

RobustBound robust_gap_ineq4(const EntropyProfile& p, double slack) {
  require_four(p);
  if (!(slack >= 0) || !std::isfinite(slack)) fail(ErrorCode::InvalidArgument, "slack must be finite and >= 0");
  const double i = nonnegative(evaluate(expand_mutual_information(p.variables(), kC, kD, kA), p));
  constexpr long kSlackFreeCap = 1000000;
  long k_max = kSlackFreeCap;
  if (slack > 0) k_max = static_cast<long>(std::ceil(std::sqrt(2 * i / slack))) + 2;
  k_max = std::min(k_max, kSlackFreeCap);
  RobustBound best{std::numeric_limits<double>::infinity(), 1};
  for (long k = 1; k <= k_max; ++k) {
    const double eps = i / static_cast<double>(k) + static_cast<double>(k + 1) / 2 * slack;
    if (eps < best.epsilon) best = {eps, static_cast<int>(k)};
  }
  return best;
}

}  // namespace entroscope
