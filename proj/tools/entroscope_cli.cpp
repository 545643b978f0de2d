// entroscope command line: every subcommand is one call into the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "entroscope/entroscope.h"

namespace {

struct Context {
  ent_context* ctx = ent_context_new();
  ~Context() { ent_context_free(ctx); }
};

struct Failure {
  int code;
};

// Owns a char* returned by the library.
struct Text {
  char* s = nullptr;
  ~Text() { ent_string_free(s); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* h = nullptr;
  ~Handle() { Free(h); }
};

using Dist = Handle<ent_distribution, ent_distribution_free>;
using Prof = Handle<ent_profile, ent_profile_free>;
using Expr = Handle<ent_expression, ent_expression_free>;

void check(ent_context* ctx, ent_status st) {
  if (st == ENT_OK) return;
  std::cerr << "entroscope: " << ent_last_error(ctx) << "\n";
  throw Failure{static_cast<int>(st)};
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "entroscope: cannot read '" << path << "'\n";
    throw Failure{ENT_ERR_PARSE};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int write_chunk(const char* data, size_t len, void* user) {
  return std::fwrite(data, 1, len, static_cast<std::FILE*>(user)) == len ? 0 : 1;
}

void print(const Text& t) { std::fputs(t.s, stdout); }

bool looks_like_distribution(const std::string& text) { return text.find("\"outcomes\"") != std::string::npos; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entroscope: exact lab for information inequalities"};
  app.require_subcommand(1);
  double tol = 1e-9;
  app.add_option("--tol", tol, "numeric tolerance for non-structural checks")->check(CLI::NonNegativeNumber);

  std::string profile_file;
  auto* profile = app.add_subcommand("profile", "entropy profile and polymatroid verdict of a distribution");
  profile->add_option("dist", profile_file, "distribution JSON ('-' for stdin)")->required();

  unsigned q_example = 0;
  std::string dist_out;
  auto* example = app.add_subcommand("example", "construct and verify the (a,b,c,d)_q quadruple");
  example->add_option("--q", q_example, "prime q <= 31")->required();
  example->add_option("--dist-out", dist_out, "write the distribution here; stdout then carries only the report");

  std::string ineq_name, expr_text, check_file, check_dist, check_profile;
  auto* check_cmd = app.add_subcommand("check", "evaluate an inequality on a distribution or profile");
  auto* by_name = check_cmd->add_option("--ineq", ineq_name, "catalog name, e.g. zy98, cond1, matus-star(3)");
  auto* by_expr = check_cmd->add_option("--expr", expr_text, "expression whose value must be >= 0");
  by_name->excludes(by_expr);
  auto* positional = check_cmd->add_option("file", check_file, "distribution or profile JSON");
  auto* dist_opt = check_cmd->add_option("--dist", check_dist, "distribution JSON");
  auto* prof_opt = check_cmd->add_option("--profile", check_profile, "profile JSON");
  positional->excludes(dist_opt)->excludes(prof_opt);
  dist_opt->excludes(prof_opt);

  std::string shannon_expr, shannon_vars;
  auto* shannon = app.add_subcommand("shannon-type", "decide whether an inequality follows from Shannon's");
  shannon->add_option("--expr", shannon_expr, "expression e, read as e >= 0")->required();
  shannon->add_option("--vars", shannon_vars, "comma-separated variable order (default: sorted names)");

  std::string target;
  unsigned q_cert = 0;
  auto* ae = app.add_subcommand("ae-cert", "violation certificate for an asymptotically entropic point");
  ae->add_option("--target", target, "cond1, cond3 or both")->required();
  ae->add_option("--q", q_cert, "prime to certify at (default: first certifying prime)");

  std::string sw_dist;
  std::vector<int> Ns{2, 4, 6, 8};
  double delta = 0.1;
  std::uint64_t seeds = 1, seed = 0;
  auto* sw = app.add_subcommand("sw-sim", "finite-N Slepian-Wolf binning, CSV rows");
  sw->add_option("--dist", sw_dist, "distribution over (x, y)")->required();
  sw->add_option("--N", Ns, "block lengths")->delimiter(',')->check(CLI::PositiveNumber);
  sw->add_option("--delta", delta, "rate slack in bits")->check(CLI::NonNegativeNumber);
  sw->add_option("--seeds", seeds, "number of seeds");
  sw->add_option("--seed", seed, "first seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ENT_ERR_PARSE;
  }

  Context c;
  ent_set_tolerance(c.ctx, tol);
  if (const char* b = std::getenv("ENTROSCOPE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(b, &end, 10);
    if (!*b || *end || v == 0) {
      std::cerr << "entroscope: ENTROSCOPE_BUDGET must be a positive integer\n";
      return ENT_ERR_PARSE;
    }
    ent_set_budget(c.ctx, v);
  }

  try {
    if (*profile) {
      Dist d;
      check(c.ctx, ent_distribution_from_json(c.ctx, read_file(profile_file).c_str(), &d.h));
      Prof p;
      check(c.ctx, ent_profile_of(c.ctx, d.h, &p.h));
      Text t;
      check(c.ctx, ent_profile_report_json(c.ctx, p.h, &t.s));
      print(t);
    } else if (*example) {
      Text report;
      check(c.ctx, ent_example_verify(c.ctx, q_example, &report.s));
      Dist d;
      check(c.ctx, ent_example_construct(c.ctx, q_example, &d.h));
      if (!dist_out.empty()) {
        std::FILE* f = std::fopen(dist_out.c_str(), "wb");
        if (!f) {
          std::cerr << "entroscope: cannot write '" << dist_out << "'\n";
          return ENT_ERR_PARSE;
        }
        const ent_status st = ent_distribution_write(c.ctx, d.h, write_chunk, f);
        std::fclose(f);
        check(c.ctx, st);
        print(report);
      } else {
        std::fputs("{\n\"report\": ", stdout);
        print(report);
        std::fputs(",\n\"distribution\": ", stdout);
        check(c.ctx, ent_distribution_write(c.ctx, d.h, write_chunk, stdout));
        std::fputs("}\n", stdout);
      }
    } else if (*check_cmd) {
      if (ineq_name.empty() && !*by_expr) {
        std::cerr << "entroscope: check needs --ineq or --expr\n";
        return ENT_ERR_PARSE;
      }
      std::string text;
      bool is_dist = false;
      if (!check_dist.empty()) {
        text = read_file(check_dist);
        is_dist = true;
      } else if (!check_profile.empty()) {
        text = read_file(check_profile);
      } else if (!check_file.empty()) {
        text = read_file(check_file);
        is_dist = looks_like_distribution(text);
      } else {
        std::cerr << "entroscope: check needs a distribution or profile file\n";
        return ENT_ERR_PARSE;
      }
      Dist d;
      Prof p;
      if (is_dist)
        check(c.ctx, ent_distribution_from_json(c.ctx, text.c_str(), &d.h));
      else
        check(c.ctx, ent_profile_from_json(c.ctx, text.c_str(), &p.h));
      Expr e;
      if (*by_expr) check(c.ctx, ent_expression_parse(c.ctx, expr_text.c_str(), nullptr, 0, &e.h));
      Text t;
      check(c.ctx, ent_check_json(c.ctx, *by_expr ? nullptr : ineq_name.c_str(), e.h, d.h, p.h, &t.s));
      print(t);
    } else if (*shannon) {
      Expr e;
      if (shannon_vars.empty()) {
        check(c.ctx, ent_expression_parse(c.ctx, shannon_expr.c_str(), nullptr, 0, &e.h));
      } else {
        std::vector<std::string> names;
        std::stringstream ss(shannon_vars);
        for (std::string n; std::getline(ss, n, ',');) names.push_back(n);
        std::vector<const char*> ptrs;
        for (const auto& n : names) ptrs.push_back(n.c_str());
        check(c.ctx, ent_expression_parse(c.ctx, shannon_expr.c_str(), ptrs.data(), ptrs.size(), &e.h));
      }
      Text t;
      check(c.ctx, ent_shannon_type_json(c.ctx, e.h, &t.s));
      print(t);
    } else if (*ae) {
      Text t;
      check(c.ctx, ent_ae_cert_json(c.ctx, target.c_str(), q_cert, &t.s));
      print(t);
    } else if (*sw) {
      Dist d;
      check(c.ctx, ent_distribution_from_json(c.ctx, read_file(sw_dist).c_str(), &d.h));
      Text t;
      check(c.ctx, ent_sw_sim_csv(c.ctx, d.h, Ns.data(), Ns.size(), delta, seed, seeds, &t.s));
      print(t);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return std::fflush(stdout) == 0 ? 0 : ENT_ERR_INTERNAL;
}
