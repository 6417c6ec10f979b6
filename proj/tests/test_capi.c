/* Exercises the shared-library surface from plain C. */
#include "invdeg/invdeg.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__,    \
                    __LINE__, #cond);                                       \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

#define EXPECT_STR(got, want) EXPECT((got) != NULL && strcmp((got), (want)) == 0)

static void test_psi(void)
{
    invdeg_psi_table* t = NULL;
    EXPECT(invdeg_psi_table_create(0, &t) == INVDEG_ERR_ARGUMENT);
    EXPECT(t == NULL);
    EXPECT(strlen(invdeg_last_error()) > 0);

    EXPECT(invdeg_psi_table_create(3, &t) == INVDEG_OK);
    EXPECT(invdeg_psi_table_n(t) == 3);
    EXPECT_STR(invdeg_psi_single(t, 3), "4");
    EXPECT_STR(invdeg_psi_pair(t, 1, 3), "3");
    EXPECT(invdeg_psi_pair(t, 3, 1) == NULL);
    EXPECT(invdeg_psi_single(t, 4) == NULL);

    const int alpha[] = {1, 2, 3};
    char* s = NULL;
    EXPECT(invdeg_psi_seq(t, alpha, 3, &s) == INVDEG_OK);
    EXPECT_STR(s, "1");
    invdeg_string_free(s);

    const int bad[] = {2, 1};
    EXPECT(invdeg_psi_seq(t, bad, 2, &s) == INVDEG_ERR_ARGUMENT);
    invdeg_psi_table_destroy(t);
}

static void test_multidegree(void)
{
    invdeg_multidegree* h = NULL;
    EXPECT(invdeg_multidegree_create(3, 2, &h) == INVDEG_OK);
    EXPECT(invdeg_multidegree_m(h) == 6);
    const char* beta[] = {"1", "3", "6", "8", "6", "3", "1"};
    const char* gamma[] = {"1", "2", "4", "4", "2", "1"};
    for (long d = 0; d <= 6; ++d) {
        EXPECT_STR(invdeg_multidegree_beta(h, d), beta[d]);
        EXPECT(invdeg_multidegree_identity_match(h, d) == 1);
    }
    for (long d = 0; d < 6; ++d)
        EXPECT_STR(invdeg_multidegree_gamma(h, d), gamma[d]);
    EXPECT_STR(invdeg_multidegree_sigma(h, 1), "3");
    EXPECT(invdeg_multidegree_sigma(h, 0) == NULL);
    EXPECT(invdeg_multidegree_beta(h, 7) == NULL);
    EXPECT(invdeg_multidegree_identity_match(h, 7) == -1);
    EXPECT(invdeg_multidegree_identity_ok(h) == 1);
    invdeg_multidegree_destroy(h);

    EXPECT(invdeg_multidegree_create(0, 1, &h) == INVDEG_ERR_ARGUMENT);
    EXPECT(invdeg_multidegree_create(3, 1, NULL) == INVDEG_ERR_ARGUMENT);

    char* s = NULL;
    EXPECT(invdeg_delta(3, 3, 2, &s) == INVDEG_OK);
    EXPECT_STR(s, "4");
    invdeg_string_free(s);
}

static void test_ml(void)
{
    char* s = NULL;
    EXPECT(invdeg_ml_degree(3, 3, 1, &s) == INVDEG_OK);
    EXPECT_STR(s, "4");
    invdeg_string_free(s);
    EXPECT(invdeg_ml_degree(3, 7, 1, &s) == INVDEG_ERR_ARGUMENT);
    EXPECT(strstr(invdeg_last_error(), "out of range") != NULL);

    invdeg_ml_table* t = NULL;
    EXPECT(invdeg_ml_table_create(3, 1, &t) == INVDEG_OK);
    EXPECT(invdeg_ml_table_n_max(t) == 3);
    EXPECT(invdeg_ml_table_row_length(t, 3) == 6);
    EXPECT_STR(invdeg_ml_table_value(t, 3, 3), "4");
    EXPECT(invdeg_ml_table_value(t, 3, 7) == NULL);
    EXPECT(invdeg_ml_table_row_length(t, 4) == 0);
    invdeg_ml_table_destroy(t);

    invdeg_ml_polynomial* p = NULL;
    EXPECT(invdeg_ml_polynomial_create(2, 1, &p) == INVDEG_OK);
    EXPECT_STR(invdeg_ml_polynomial_string(p), "n - 1");
    EXPECT(invdeg_ml_polynomial_coeff_count(p) == 2);
    EXPECT_STR(invdeg_ml_polynomial_coeff(p, 0), "-1");
    EXPECT(invdeg_ml_polynomial_validated_count(p) == 3);
    EXPECT(invdeg_ml_polynomial_validated_at(p, 2) == 6);
    invdeg_ml_polynomial_destroy(p);

    invdeg_fd_report* f = NULL;
    EXPECT(invdeg_fd_report_create(4, 8, 1, &f) == INVDEG_OK);
    EXPECT(invdeg_fd_report_all_vanish(f) == 1);
    EXPECT(invdeg_fd_report_difference_count(f) == 4);
    invdeg_fd_report_destroy(f);
    EXPECT(invdeg_fd_report_create(4, 4, 1, &f) == INVDEG_ERR_ARGUMENT);
}

static void test_verify(void)
{
    invdeg_report* r = NULL;
    EXPECT(invdeg_verify(2, INVDEG_VERIFY_SYMBOLIC, 2, 1, 4, &r) == INVDEG_OK);
    EXPECT(invdeg_report_count(r) == 9);
    EXPECT(invdeg_report_all_pass(r) == 1);
    EXPECT_STR(invdeg_report_name(r, 0), "graph_vanishing");
    EXPECT(invdeg_report_detail(r, 99) == NULL);
    invdeg_report_destroy(r);

    EXPECT(invdeg_verify(5, INVDEG_VERIFY_SYMBOLIC, 2, 1, 4, &r) == INVDEG_ERR_ARGUMENT);
    EXPECT(invdeg_verify(5, INVDEG_VERIFY_NUMERIC, 2, 1, 4, &r) == INVDEG_OK);
    EXPECT(invdeg_report_all_pass(r) == 1);
    invdeg_report_destroy(r);
}

int main(void)
{
    EXPECT(strlen(invdeg_version()) > 0);
    test_psi();
    test_multidegree();
    test_ml();
    test_verify();
    if (failures)
        fprintf(stderr, "%d expectation(s) failed\n", failures);
    return failures ? 1 : 0;
}
