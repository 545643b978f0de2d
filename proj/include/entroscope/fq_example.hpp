#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entroscope/distribution.hpp"
#include "entroscope/profile.hpp"

namespace entroscope {

bool is_prime(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Arithmetic modulo a prime p. Elements are 0..p−1.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);  // throws NotPrime

  std::uint32_t modulus() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_); }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Multiplicative inverse of a != 0.
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

inline constexpr std::uint32_t kMaxBruteForceQ = 31;

/// One supported outcome of the quadruple: line C: y = c0 + c1 x, points A and
/// B on C at abscissas xa, xb, parabola D: y = d0 + d1 x + d2 x^2 with d2 != 0
/// meeting C exactly at A and B (tangent when A = B).
struct QuadrupleOutcome {
  std::uint32_t c0, c1, xa, xb, d0, d1, d2;
};

/// Variable encodings used by construct_example:
///   a, b = x * q + y            (alphabet q^2)
///   c    = c0 * q + c1          (alphabet q^2)
///   d    = (d0 * q + d1) * (q − 1) + (d2 − 1)   (alphabet q^2 (q − 1))
struct QuadrupleCodec {
  std::uint32_t q;
  Outcome encode(const QuadrupleOutcome& o, const PrimeField& f) const;
  std::vector<Variable> variables() const;
};

/// Streams the q^4 (q − 1) supported outcomes in a fixed order.
template <class Fn>
void for_each_quadruple(const PrimeField& f, Fn&& fn) {
  const std::uint32_t q = f.modulus();
  for (std::uint32_t c0 = 0; c0 < q; ++c0)
    for (std::uint32_t c1 = 0; c1 < q; ++c1)
      for (std::uint32_t xa = 0; xa < q; ++xa)
        for (std::uint32_t xb = 0; xb < q; ++xb)
          for (std::uint32_t d2 = 1; d2 < q; ++d2) {
            // D − C = d2 (x − xa)(x − xb).
            const std::uint32_t d1 = f.sub(c1, f.mul(d2, f.add(xa, xb)));
            const std::uint32_t d0 = f.add(c0, f.mul(d2, f.mul(xa, xb)));
            fn(QuadrupleOutcome{c0, c1, xa, xb, d0, d1, d2});
          }
}

/// Uniform distribution over the supported quadruples. Requires prime
/// q <= 31. Errors: NotPrime, BudgetExceeded.
JointDistribution construct_example(std::uint32_t q, std::uint64_t budget = kDefaultSupportBudget);

std::uint64_t example_support_size(std::uint32_t q);

/// I(c;d) = (q−1)/q, I(c;d|a) = I(c;d|b) = I(a;b|c) = 0,
/// I(a;b) = H(c|a,b) = log2(q)/q. Keys are the printed quantity names.
std::vector<std::pair<std::string, double>> closed_form_quantities(std::uint32_t q);

/// All 15 coordinates of the example's profile in closed form (L = log2 q,
/// G = log2(q − 1)): H(a) = H(b) = H(c) = 2L, H(d) = 2L + G, H(ab) = 4L − L/q,
/// H(ac) = H(bc) = 3L, H(ad) = H(bd) = 3L + G, H(cd) = 4L + G − (q−1)/q,
/// H(abc) = 4L and every other set 4L + G.
EntropyProfile closed_form_profile(std::uint32_t q);

/// Per-outcome construction constraints: A, B on C, D through A and B and,
/// when A = B, a repeated root of D − C.
bool outcome_satisfies_construction(const QuadrupleOutcome& o, const PrimeField& f);

struct QuantityCheck {
  std::string name;
  double brute_force = 0;
  double closed_form = 0;
  bool matches = false;
};

struct StructuralFact {
  std::string name;      // e.g. "I(c;d|a) = 0"
  bool expected = true;  // what the closed forms predict
  bool certified = false;
};

struct ExampleReport {
  std::uint32_t q = 0;
  std::uint64_t support_size = 0;
  bool uniform = false;
  bool construction_holds = false;
  double joint_entropy = 0;
  std::vector<QuantityCheck> quantities;
  std::vector<StructuralFact> structure;
  bool closed_forms_hold = false;  // every quantity within tol
  bool all_pass = false;
};

/// Brute-force check of the closed forms plus exact certification of the
/// zero and non-zero constraints.
ExampleReport verify_example(std::uint32_t q, double tol = 1e-9,
                             std::uint64_t budget = kDefaultSupportBudget);

enum class Extension { Ext1, Ext3 };

/// lhs − rhs of the unconditional extension of cond1 (Ext1) or cond3 (Ext3) on the example's
/// closed forms; positive means the extension fails at this q.
double gap_unconditional(std::uint32_t q, double lambda1, double lambda2, Extension which);

/// Smallest prime q with gap_unconditional > 0.
std::uint32_t minimal_refuting_q(double lambda1, double lambda2, Extension which);

}  // namespace entroscope
