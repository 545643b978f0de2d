#include "entroscope/entroscope.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <streambuf>

#include "entroscope/ae_limit.hpp"
#include "entroscope/catalog.hpp"
#include "entroscope/error.hpp"
#include "entroscope/fq_example.hpp"
#include "entroscope/json_io.hpp"
#include "entroscope/parser.hpp"
#include "entroscope/shannon_lp.hpp"
#include "entroscope/sw_sim.hpp"

using namespace entroscope;

struct ent_context {
  std::uint64_t budget = kDefaultSupportBudget;
  std::uint64_t state_budget = kMaxBinningStates;
  double tol = 1e-9;
  std::string error;
};

struct ent_distribution {
  JointDistribution d;
};

struct ent_profile {
  EntropyProfile p;
};

struct ent_expression {
  InfoExpression e;
};

namespace {

ent_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::FormatError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::OverlappingSubsets:
    case ErrorCode::IrrationalCoefficients:
      return ENT_ERR_PARSE;
    case ErrorCode::NotPrime:
    case ErrorCode::BudgetExceeded:
      return ENT_ERR_BUDGET;
    case ErrorCode::UnknownInequality:
      return ENT_ERR_UNKNOWN_INEQUALITY;
    case ErrorCode::GapNotPositive:
      return ENT_ERR_GAP_NOT_POSITIVE;
    default:
      return ENT_ERR_INVARIANT;
  }
}

template <class Fn>
ent_status guarded(ent_context* ctx, Fn&& fn) {
  if (!ctx) return ENT_ERR_INTERNAL;
  ctx->error.clear();
  try {
    fn();
    return ENT_OK;
  } catch (const Error& e) {
    ctx->error = std::string(to_string(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return ENT_ERR_BUDGET;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return ENT_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

std::vector<std::string> names_of(const char* const* variables, size_t n) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) {
    require(variables[i] != nullptr, "null variable name");
    out.emplace_back(variables[i]);
  }
  return out;
}

class CallbackBuf : public std::streambuf {
 public:
  CallbackBuf(ent_write_fn fn, void* user) : fn_(fn), user_(user) { setp(buf_, buf_ + sizeof buf_); }
  ~CallbackBuf() override { sync(); }
  bool failed() const { return failed_; }

 protected:
  int overflow(int c) override {
    if (sync() != 0) return traits_type::eof();
    if (c != traits_type::eof()) {
      *pptr() = static_cast<char>(c);
      pbump(1);
    }
    return c == traits_type::eof() ? 0 : c;
  }
  int sync() override {
    const auto n = static_cast<size_t>(pptr() - pbase());
    if (n && !failed_ && fn_(pbase(), n, user_) != 0) failed_ = true;
    setp(buf_, buf_ + sizeof buf_);
    return failed_ ? -1 : 0;
  }

 private:
  ent_write_fn fn_;
  void* user_;
  bool failed_ = false;
  char buf_[1 << 16];
};

}  // namespace

extern "C" {

ent_context* ent_context_new(void) { return new (std::nothrow) ent_context(); }
void ent_context_free(ent_context* ctx) { delete ctx; }

void ent_set_budget(ent_context* ctx, uint64_t budget) {
  if (!ctx) return;
  ctx->budget = budget ? budget : kDefaultSupportBudget;
  ctx->state_budget = budget ? budget : kMaxBinningStates;
}

void ent_set_tolerance(ent_context* ctx, double tol) {
  if (ctx && tol >= 0) ctx->tol = tol;
}

const char* ent_last_error(const ent_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }
const char* ent_version(void) { return "0.1.0"; }
void ent_string_free(char* s) { std::free(s); }

ent_status ent_distribution_from_json(ent_context* ctx, const char* json, ent_distribution** out) {
  return guarded(ctx, [&] {
    require(json && out, "null argument");
    *out = new ent_distribution{distribution_from_json(json)};
  });
}

ent_status ent_distribution_to_json(ent_context* ctx, const ent_distribution* d, char** out) {
  return guarded(ctx, [&] {
    require(d && out, "null argument");
    *out = copy_string(distribution_to_json(d->d));
  });
}

ent_status ent_distribution_write(ent_context* ctx, const ent_distribution* d, ent_write_fn fn, void* user) {
  return guarded(ctx, [&] {
    require(d && fn, "null argument");
    CallbackBuf buf(fn, user);
    std::ostream os(&buf);
    write_distribution_json(os, d->d);
    os.flush();
    if (buf.failed()) fail(ErrorCode::InvalidArgument, "writer aborted");
  });
}

size_t ent_distribution_support_size(const ent_distribution* d) { return d ? d->d.support_size() : 0; }
void ent_distribution_free(ent_distribution* d) { delete d; }

ent_status ent_example_construct(ent_context* ctx, uint32_t q, ent_distribution** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    *out = new ent_distribution{construct_example(q, ctx->budget)};
  });
}

ent_status ent_example_verify(ent_context* ctx, uint32_t q, char** report_json) {
  return guarded(ctx, [&] {
    require(report_json != nullptr, "null argument");
    *report_json = copy_string(example_report_to_json(verify_example(q, ctx->tol, ctx->budget)));
  });
}

ent_status ent_profile_of(ent_context* ctx, const ent_distribution* d, ent_profile** out) {
  return guarded(ctx, [&] {
    require(d && out, "null argument");
    *out = new ent_profile{profile_of(d->d)};
  });
}

ent_status ent_profile_from_json(ent_context* ctx, const char* json, ent_profile** out) {
  return guarded(ctx, [&] {
    require(json && out, "null argument");
    *out = new ent_profile{profile_from_json(json)};
  });
}

ent_status ent_profile_to_json(ent_context* ctx, const ent_profile* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = copy_string(profile_to_json(p->p));
  });
}

ent_status ent_profile_report_json(ent_context* ctx, const ent_profile* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = copy_string(profile_report_to_json(p->p, is_polymatroid(p->p, ctx->tol)));
  });
}

size_t ent_profile_dimension(const ent_profile* p) { return p ? p->p.dimension() : 0; }

ent_status ent_profile_coordinate(ent_context* ctx, const ent_profile* p, uint32_t mask, double* out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    require(mask <= p->p.dimension(), "mask out of range");
    *out = p->p[mask];
  });
}

void ent_profile_free(ent_profile* p) { delete p; }

ent_status ent_expression_parse(ent_context* ctx, const char* text, const char* const* variables, size_t num_variables,
                                ent_expression** out) {
  return guarded(ctx, [&] {
    require(text && out, "null argument");
    if (variables)
      *out = new ent_expression{parse_expression(text, names_of(variables, num_variables))};
    else
      *out = new ent_expression{parse_expression(text)};
  });
}

ent_status ent_expression_from_doubles(ent_context* ctx, const char* const* variables, size_t num_variables,
                                       const double* coefficients, ent_expression** out) {
  return guarded(ctx, [&] {
    require(variables && coefficients && out, "null argument");
    require(num_variables >= 1 && num_variables <= kMaxVariables, "bad variable count");
    InfoExpression e(names_of(variables, num_variables));
    const SubsetMask dim = full_mask(static_cast<int>(num_variables));
    for (SubsetMask s = 1; s <= dim; ++s) e.add_term(s, Rational::from_double(coefficients[s - 1]));
    *out = new ent_expression{std::move(e)};
  });
}

ent_status ent_expression_print(ent_context* ctx, const ent_expression* e, char** out) {
  return guarded(ctx, [&] {
    require(e && out, "null argument");
    *out = copy_string(print_canonical(e->e));
  });
}

ent_status ent_expression_evaluate(ent_context* ctx, const ent_expression* e, const ent_profile* p, double* out) {
  return guarded(ctx, [&] {
    require(e && p && out, "null argument");
    *out = evaluate(align_variables(e->e, p->p.variables()), p->p);
  });
}

void ent_expression_free(ent_expression* e) { delete e; }

ent_status ent_shannon_type_json(ent_context* ctx, const ent_expression* e, char** out) {
  return guarded(ctx, [&] {
    require(e && out, "null argument");
    const ShannonTypeVerdict v = is_shannon_type(e->e);
    if (!verify_certificate(v, e->e)) throw std::runtime_error("certificate failed re-verification");
    *out = copy_string(shannon_to_json(v, e->e));
  });
}

ent_status ent_check_json(ent_context* ctx, const char* inequality_name, const ent_expression* e,
                          const ent_distribution* d, const ent_profile* p, char** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    require((inequality_name != nullptr) != (e != nullptr), "give exactly one of an inequality name or an expression");
    require((d != nullptr) != (p != nullptr), "give exactly one of a distribution or a profile");
    ConditionalInequality ineq =
        inequality_name ? find_inequality(inequality_name) : ConditionalInequality{print_canonical(e->e), {}, e->e};
    const ConditionalVerdict v = d ? check_conditional(ineq, d->d, ctx->tol) : check_conditional(ineq, p->p, ctx->tol);
    *out = copy_string(verdict_to_json(v));
  });
}

ent_status ent_ae_cert_json(ent_context* ctx, const char* target, uint32_t q, char** out) {
  return guarded(ctx, [&] {
    require(target && out, "null argument");
    const AeTarget t = parse_ae_target(target);
    const ViolationCertificate c = q ? certify_example(q, t) : minimal_certifying_q(t);
    if (!reverify(c)) throw std::runtime_error("certificate failed re-verification");
    *out = copy_string(certificate_to_json(c));
  });
}

ent_status ent_sw_sim_csv(ent_context* ctx, const ent_distribution* pair, const int* Ns, size_t num_N, double delta,
                          uint64_t first_seed, uint64_t num_seeds, char** out) {
  return guarded(ctx, [&] {
    require(pair && Ns && out, "null argument");
    std::vector<std::uint64_t> seeds;
    for (uint64_t i = 0; i < num_seeds; ++i) seeds.push_back(first_seed + i);
    const auto rows =
        sw_report(pair->d, std::vector<int>(Ns, Ns + num_N), delta, seeds, std::nullopt, ctx->state_budget);
    for (const auto& r : rows)
      if (!r.hash_is_function) throw std::runtime_error("hash is not a function of x");
    *out = copy_string(sw_csv(rows));
  });
}

}  // extern "C"
