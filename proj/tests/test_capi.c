/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "entroscope/entroscope.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static const char* kCoins =
    "{\"variables\":[{\"name\":\"x\",\"alphabet\":2},{\"name\":\"y\",\"alphabet\":2}],"
    "\"outcomes\":[{\"values\":[0,0],\"p\":\"1/2\"},{\"values\":[1,1],\"p\":\"1/2\"}]}";

static int count_bytes(const char* data, size_t len, void* user) {
  (void)data;
  *(size_t*)user += len;
  return 0;
}

int main(void) {
  ent_context* ctx = ent_context_new();
  EXPECT(ctx != NULL);

  ent_distribution* d = NULL;
  EXPECT(ent_distribution_from_json(ctx, kCoins, &d) == ENT_OK);
  EXPECT(ent_distribution_support_size(d) == 2);

  ent_profile* p = NULL;
  EXPECT(ent_profile_of(ctx, d, &p) == ENT_OK);
  EXPECT(ent_profile_dimension(p) == 3);
  double h = 0;
  EXPECT(ent_profile_coordinate(ctx, p, 3, &h) == ENT_OK);
  EXPECT(h > 0.999999 && h < 1.000001);

  ent_expression* e = NULL;
  EXPECT(ent_expression_parse(ctx, "I(x;y)", NULL, 0, &e) == ENT_OK);
  double v = 0;
  EXPECT(ent_expression_evaluate(ctx, e, p, &v) == ENT_OK);
  EXPECT(v > 0.999999 && v < 1.000001);
  char* s = NULL;
  EXPECT(ent_expression_print(ctx, e, &s) == ENT_OK);
  EXPECT(strcmp(s, "H(x) + H(y) - H(x,y)") == 0);
  ent_string_free(s);

  const char* names[] = {"x", "y"};
  const double coefs[] = {1.0, 1.0, -1.0};
  ent_expression* e2 = NULL;
  EXPECT(ent_expression_from_doubles(ctx, names, 2, coefs, &e2) == ENT_OK);
  EXPECT(ent_shannon_type_json(ctx, e2, &s) == ENT_OK);
  EXPECT(strstr(s, "\"shannon-type\"") != NULL);
  ent_string_free(s);
  ent_expression_free(e2);

  EXPECT(ent_check_json(ctx, NULL, e, d, NULL, &s) == ENT_OK);
  EXPECT(strstr(s, "\"holds\": true") != NULL);
  ent_string_free(s);
  EXPECT(ent_check_json(ctx, "zy98", NULL, d, NULL, &s) == ENT_ERR_INVARIANT);
  EXPECT(strstr(ent_last_error(ctx), "DimensionMismatch") != NULL);
  EXPECT(ent_check_json(ctx, "nope", NULL, d, NULL, &s) == ENT_ERR_UNKNOWN_INEQUALITY);
  EXPECT(ent_check_json(ctx, "zy98", e, d, NULL, &s) == ENT_ERR_INVARIANT);

  ent_expression* bad = NULL;
  EXPECT(ent_expression_parse(ctx, "I(x;", NULL, 0, &bad) == ENT_ERR_PARSE);
  EXPECT(strstr(ent_last_error(ctx), "column") != NULL);
  const double nan_coef[] = {0.0 / 0.0, 0, 0};
  EXPECT(ent_expression_from_doubles(ctx, names, 2, nan_coef, &bad) == ENT_ERR_PARSE);

  ent_distribution* ex = NULL;
  EXPECT(ent_example_construct(ctx, 4, &ex) == ENT_ERR_BUDGET);
  EXPECT(ent_example_construct(ctx, 3, &ex) == ENT_OK);
  size_t bytes = 0;
  EXPECT(ent_distribution_write(ctx, ex, count_bytes, &bytes) == ENT_OK);
  EXPECT(ent_distribution_to_json(ctx, ex, &s) == ENT_OK);
  EXPECT(bytes == strlen(s));
  ent_string_free(s);
  ent_set_budget(ctx, 100);
  ent_distribution* small = NULL;
  EXPECT(ent_example_construct(ctx, 3, &small) == ENT_ERR_BUDGET);
  ent_set_budget(ctx, 0);
  EXPECT(ent_example_verify(ctx, 3, &s) == ENT_OK);
  EXPECT(strstr(s, "\"all_pass\": true") != NULL);
  ent_string_free(s);
  ent_distribution_free(ex);

  EXPECT(ent_ae_cert_json(ctx, "cond1", 17, &s) == ENT_ERR_GAP_NOT_POSITIVE);
  EXPECT(strstr(ent_last_error(ctx), "deficit") != NULL);
  EXPECT(ent_ae_cert_json(ctx, "cond1", 0, &s) == ENT_OK);
  EXPECT(strstr(s, "\"q\": 19") != NULL);
  ent_string_free(s);

  const int Ns[] = {1, 2};
  EXPECT(ent_sw_sim_csv(ctx, d, Ns, 2, 0.1, 0, 2, &s) == ENT_OK);
  EXPECT(strncmp(s, "seed,N,m,H_hash,I_hash_y,H_x_given_hash_y\n", 42) == 0);
  ent_string_free(s);

  EXPECT(ent_distribution_from_json(ctx, "{\"variables\":[{\"name\":\"x\",\"alphabet\":2}],"
                                         "\"outcomes\":[{\"values\":[0],\"p\":0.5},{\"values\":[1],\"p\":\"1/2\"}]}",
                                    &ex) == ENT_ERR_PARSE);
  EXPECT(ent_distribution_from_json(ctx, "{\"variables\":[{\"name\":\"x\",\"alphabet\":2}],"
                                         "\"outcomes\":[{\"values\":[0],\"p\":\"1/3\"}]}",
                                    &ex) == ENT_ERR_INVARIANT);

  ent_expression_free(e);
  ent_profile_free(p);
  ent_distribution_free(d);
  ent_context_free(ctx);
  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
