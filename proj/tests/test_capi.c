#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "eqs/eqs.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

int main(void) {
  eqs_context* ctx = NULL;
  eqs_result* res = NULL;
  EXPECT(eqs_context_new(&ctx) == EQS_OK);
  EXPECT(strlen(eqs_version()) > 0);

  EXPECT(eqs_expand(ctx, "Q", "6", -1, 3, -1, "s", &res) == EQS_OK);
  EXPECT(strcmp(eqs_result_text(res), "3 s[6] + 3 s[5,1] + 3 s[4,2] + s[3,3] + s[3,2,1]\n") == 0);
  eqs_result_free(res);

  EXPECT(eqs_expand(ctx, "Q", "6", -1, 3, -1, "h", &res) == EQS_OK);
  EXPECT(strcmp(eqs_result_text(res), "h[5,1] + 2 h[4,2] - h[4,1,1] + h[3,2,1]\n") == 0);
  eqs_result_free(res);

  EXPECT(eqs_biject(ctx, "phi", "21'3", NULL, &res) == EQS_OK);
  EXPECT(strcmp(eqs_result_text(res), "312\n") == 0);
  eqs_result_free(res);

  EXPECT(eqs_biject(ctx, "grphi", "45162387", "7,7,7,5,5,4,2,2", &res) == EQS_OK);
  EXPECT(strcmp(eqs_result_text(res), "(7'5'47)(7'5)(2'2)\n") == 0);
  eqs_result_free(res);

  EXPECT(eqs_biject(ctx, "grphi", "21", "1,2", &res) == EQS_USAGE);
  EXPECT(res == NULL);
  EXPECT(strlen(eqs_last_error(ctx)) > 0);

  EXPECT(eqs_poset(ctx, "rees", "boolean", 5, 2, 0, &res) == EQS_OK);
  EXPECT(strstr(eqs_result_text(res), "= 44") != NULL);
  eqs_result_free(res);

  /* Every suite id appears once. */
  size_t count = eqs_suite_count();
  EXPECT(count > 30);
  for (size_t i = 0; i < count; ++i)
    for (size_t k = i + 1; k < count; ++k) EXPECT(strcmp(eqs_suite_id(i), eqs_suite_id(k)) != 0);
  EXPECT(eqs_suite_id(count) == NULL);

  EXPECT(eqs_set_format(ctx, EQS_FORMAT_JSON) == EQS_OK);
  EXPECT(eqs_set_bound(ctx, "nmax", 4) == EQS_OK);
  EXPECT(eqs_verify(ctx, "aid-equidistribution", &res) == EQS_OK);
  EXPECT(strstr(eqs_result_text(res), "\"suite\": \"aid-equidistribution\"") != NULL);
  EXPECT(strstr(eqs_result_text(res), "\"version\"") != NULL);
  EXPECT(strcmp(eqs_result_witness(res), "") == 0);
  eqs_result_free(res);

  EXPECT(eqs_verify(ctx, "no-such-suite", &res) == EQS_USAGE);
  EXPECT(eqs_set_bound(ctx, "bogus", 1) == EQS_OK);
  EXPECT(eqs_verify(ctx, "q-symmetry", &res) == EQS_USAGE);
  EXPECT(eqs_set_bound(ctx, "nmax", 50) == EQS_OK);
  EXPECT(eqs_verify(ctx, "three-way", &res) == EQS_CAP);

  EXPECT(eqs_set_cap(ctx, "perm_n", 5) == EQS_OK);
  EXPECT(eqs_stats(ctx, "654321", &res) == EQS_CAP);
  EXPECT(eqs_set_cap(ctx, "no_such_cap", 5) == EQS_USAGE);
  EXPECT(eqs_stats(ctx, "21x", &res) == EQS_USAGE);

  eqs_context_free(ctx);
  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("c api: all checks passed\n");
  return failures ? 1 : 0;
}
