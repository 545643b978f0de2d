#include "entroscope/fq_example.hpp"

#include <cmath>

#include "entroscope/error.hpp"

namespace entroscope {

namespace {

std::uint32_t checked_prime(std::uint32_t q) {
  if (!is_prime(q)) fail(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
  return q;
}

constexpr SubsetMask kA = 1, kB = 2, kC = 4, kD = 8;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t k = n + 1;
  while (!is_prime(k)) ++k;
  return k;
}

PrimeField::PrimeField(std::uint32_t p) : p_(checked_prime(p)) {}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = a % p_;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) fail(ErrorCode::InvalidArgument, "zero has no inverse");
  return pow(a, p_ - 2);
}

Outcome QuadrupleCodec::encode(const QuadrupleOutcome& o, const PrimeField& f) const {
  const std::uint32_t ya = f.add(o.c0, f.mul(o.c1, o.xa));
  const std::uint32_t yb = f.add(o.c0, f.mul(o.c1, o.xb));
  return {o.xa * q + ya, o.xb * q + yb, o.c0 * q + o.c1, (o.d0 * q + o.d1) * (q - 1) + (o.d2 - 1)};
}

std::vector<Variable> QuadrupleCodec::variables() const {
  const std::uint64_t q2 = std::uint64_t{q} * q;
  return {{"a", q2}, {"b", q2}, {"c", q2}, {"d", q2 * (q - 1)}};
}

std::uint64_t example_support_size(std::uint32_t q) {
  const std::uint64_t q64 = q;
  return q64 * q64 * q64 * q64 * (q64 - 1);
}

JointDistribution construct_example(std::uint32_t q, std::uint64_t budget) {
  PrimeField f(q);
  if (q > kMaxBruteForceQ)
    fail(ErrorCode::BudgetExceeded, "brute-force construction is capped at q <= " + std::to_string(kMaxBruteForceQ));
  const std::uint64_t size = example_support_size(q);
  if (size > budget)
    fail(ErrorCode::BudgetExceeded, "support " + std::to_string(size) + " exceeds budget " + std::to_string(budget));
  QuadrupleCodec codec{q};
  auto shape = JointDistribution::from_weights(codec.variables(), {0}, {});
  std::vector<std::uint64_t> keys;
  keys.reserve(size);
  for_each_quadruple(f, [&](const QuadrupleOutcome& o) { keys.push_back(shape.encode(codec.encode(o, f))); });
  return JointDistribution::from_weights(codec.variables(), std::move(keys), {});
}

std::vector<std::pair<std::string, double>> closed_form_quantities(std::uint32_t q) {
  checked_prime(q);
  const double qd = q;
  const double l = std::log2(qd) / qd;
  return {{"I(c;d)", (qd - 1) / qd}, {"I(c;d|a)", 0.0}, {"I(c;d|b)", 0.0},
          {"I(a;b|c)", 0.0},         {"I(a;b)", l},     {"H(c|a,b)", l}};
}

EntropyProfile closed_form_profile(std::uint32_t q) {
  checked_prime(q);
  const double qd = q;
  const double L = std::log2(qd);
  const double G = std::log2(qd - 1);
  std::vector<double> h(15, 4 * L + G);
  auto set = [&](SubsetMask s, double v) { h[s - 1] = v; };
  set(kA, 2 * L);
  set(kB, 2 * L);
  set(kC, 2 * L);
  set(kD, 2 * L + G);
  set(kA | kB, 4 * L - L / qd);
  set(kA | kC, 3 * L);
  set(kB | kC, 3 * L);
  set(kA | kD, 3 * L + G);
  set(kB | kD, 3 * L + G);
  set(kC | kD, 4 * L + G - (qd - 1) / qd);
  set(kA | kB | kC, 4 * L);
  return EntropyProfile({"a", "b", "c", "d"}, std::move(h));
}

bool outcome_satisfies_construction(const QuadrupleOutcome& o, const PrimeField& f) {
  if (o.d2 == 0) return false;
  auto line = [&](std::uint32_t x) { return f.add(o.c0, f.mul(o.c1, x)); };
  auto parabola = [&](std::uint32_t x) { return f.add(o.d0, f.add(f.mul(o.d1, x), f.mul(o.d2, f.mul(x, x)))); };
  if (parabola(o.xa) != line(o.xa) || parabola(o.xb) != line(o.xb)) return false;
  // P = D − C; distinct roots need P(xa) = P(xb) = 0, a double root needs P'(xa) = 0
  // as well (formal derivative, valid in characteristic 2).
  if (o.xa == o.xb) {
    const std::uint32_t derivative = f.add(f.mul(f.mul(2 % f.modulus(), o.d2), o.xa), f.sub(o.d1, o.c1));
    return derivative == 0;
  }
  return true;
}

ExampleReport verify_example(std::uint32_t q, double tol, std::uint64_t budget) {
  ExampleReport r;
  r.q = q;
  PrimeField f(q);
  bool construction = true;
  if (q <= kMaxBruteForceQ)
    for_each_quadruple(f, [&](const QuadrupleOutcome& o) { construction = construction && outcome_satisfies_construction(o, f); });
  r.construction_holds = construction;

  const JointDistribution d = construct_example(q, budget);
  r.support_size = d.support_size();
  r.uniform = d.is_uniform() && r.support_size == example_support_size(q);
  r.joint_entropy = entropy(d, kA | kB | kC | kD);

  const std::vector<double> brute{
      mutual_information(d, kC, kD),      mutual_information(d, kC, kD, kA),
      mutual_information(d, kC, kD, kB),  mutual_information(d, kA, kB, kC),
      mutual_information(d, kA, kB),      conditional_entropy(d, kC, kA | kB)};
  const auto closed = closed_form_quantities(q);
  r.closed_forms_hold = true;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    QuantityCheck c{closed[i].first, brute[i], closed[i].second, std::abs(brute[i] - closed[i].second) <= tol};
    r.closed_forms_hold = r.closed_forms_hold && c.matches;
    r.quantities.push_back(std::move(c));
  }

  r.structure = {
      {"I(c;d|a) = 0", true, is_conditionally_independent(d, kC, kD, kA)},
      {"I(c;d|b) = 0", true, is_conditionally_independent(d, kC, kD, kB)},
      {"I(a;b|c) = 0", true, is_conditionally_independent(d, kA, kB, kC)},
      {"I(a;b) = 0", false, is_conditionally_independent(d, kA, kB, 0)},
      {"H(c|a,b) = 0", false, is_functionally_dependent(d, kC, kA | kB)},
  };
  bool structure_ok = true;
  for (const auto& s : r.structure) structure_ok = structure_ok && s.expected == s.certified;

  const double expected_joint = std::log2(static_cast<double>(example_support_size(q)));
  r.all_pass = r.construction_holds && r.uniform && r.closed_forms_hold && structure_ok &&
               std::abs(r.joint_entropy - expected_joint) <= tol;
  return r;
}

double gap_unconditional(std::uint32_t q, double lambda1, double lambda2, Extension which) {
  checked_prime(q);
  if (!(lambda1 >= 0) || !(lambda2 >= 0)) fail(ErrorCode::InvalidArgument, "multipliers must be >= 0");
  const double qd = q;
  const double l = std::log2(qd) / qd;
  const double base = (qd - 1) / qd - (which == Extension::Ext3 ? l : 0.0);
  return base - (lambda1 + lambda2) * l;
}

std::uint32_t minimal_refuting_q(double lambda1, double lambda2, Extension which) {
  for (std::uint64_t q = 2;; q = next_prime(q)) {
    if (q > 0xFFFFFFFFull) fail(ErrorCode::InvalidArgument, "multipliers too large for a 32-bit prime scan");
    if (gap_unconditional(static_cast<std::uint32_t>(q), lambda1, lambda2, which) > 0)
      return static_cast<std::uint32_t>(q);
  }
}

}  // namespace entroscope
