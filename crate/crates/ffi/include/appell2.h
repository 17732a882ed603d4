/* C interface for the appell2 library. */

#ifndef APPELL2_H
#define APPELL2_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by every fallible entry point.
 */
typedef enum Appell2Status {
  APPELL2_STATUS_OK = 0,
  /*
   Argument outside the routine's domain or a violated precondition.
   */
  APPELL2_STATUS_DOMAIN_ERROR = 1,
  /*
   A lower parameter sits on a non-positive integer.
   */
  APPELL2_STATUS_POLE_ERROR = 2,
  /*
   A parameter value the formula itself excludes.
   */
  APPELL2_STATUS_PARAM_ERROR = 3,
  /*
   A series hit its term cap before reaching the tolerance.
   */
  APPELL2_STATUS_NO_CONVERGE = 4,
  /*
   A required pointer argument was null.
   */
  APPELL2_STATUS_NULL_ARG = 5,
  /*
   A string argument was not valid UTF-8.
   */
  APPELL2_STATUS_UTF8_ERROR = 6,
  /*
   Expression or corpus text failed to parse.
   */
  APPELL2_STATUS_PARSE_ERROR = 7,
  /*
   File could not be read.
   */
  APPELL2_STATUS_IO_ERROR = 8,
  /*
   Expression evaluation failed (domain of ln, sqrt, ...).
   */
  APPELL2_STATUS_EVAL_ERROR = 9,
} Appell2Status;

/*
 Opaque loaded corpus: entries plus per-line load issues.
 */
typedef struct Appell2Corpus Appell2Corpus;

/*
 Opaque parsed expression over the variables x and y.
 */
typedef struct Appell2Expr Appell2Expr;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 F2 by the defining double series. `tol` is the relative stopping
 tolerance; the value lands in `*out`.
 */
enum Appell2Status appell2_f2_series(double sigma,
                                     double alpha1,
                                     double alpha2,
                                     double beta1,
                                     double beta2,
                                     double x,
                                     double y,
                                     double tol,
                                     double *out);

/*
 F2 by the single-integral route (needs beta1 > alpha1 > 0).
 */
enum Appell2Status appell2_f2_single_integral(double sigma,
                                              double alpha1,
                                              double alpha2,
                                              double beta1,
                                              double beta2,
                                              double x,
                                              double y,
                                              double tol,
                                              double *out);

/*
 F2 by the tensor-product double integral (needs beta_j > alpha_j > 0);
 fixed accuracy target around 1e-6.
 */
enum Appell2Status appell2_f2_double_integral(double sigma,
                                              double alpha1,
                                              double alpha2,
                                              double beta1,
                                              double beta2,
                                              double x,
                                              double y,
                                              double *out);

/*
 F2(a+1; alpha1, 1; beta1, 2; x, y) by the two-term 2F1 combination.
 */
enum Appell2Status appell2_f2_theorem1_shift(double a,
                                             double alpha1,
                                             double beta1,
                                             double x,
                                             double y,
                                             double tol,
                                             double *out);

/*
 F2(1; alpha1, 1; beta1, 2; x, y) by the 3F2 bracket plus -ln(1-y)/y.
 */
enum Appell2Status appell2_f2_theorem1_log(double alpha1,
                                           double beta1,
                                           double x,
                                           double y,
                                           double tol,
                                           double *out);

/*
 Gauss 2F1 by series summation, |z| < 1.
 */
enum Appell2Status appell2_gauss2f1(double a,
                                    double b,
                                    double c,
                                    double z,
                                    double tol,
                                    double *out);

/*
 Gauss 2F1 by the Euler integral route (c > b > 0, z < 1).
 */
enum Appell2Status appell2_gauss2f1_euler(double a,
                                          double b,
                                          double c,
                                          double z,
                                          double tol,
                                          double *out);

/*
 Clausen 3F2 by series summation, |z| < 1.
 */
enum Appell2Status appell2_clausen3f2(double a1,
                                      double a2,
                                      double a3,
                                      double b1,
                                      double b2,
                                      double z,
                                      double tol,
                                      double *out);

/*
 Parses an expression; on success stores a heap handle in `*out` that
 must be released with [`appell2_expr_free`].
 */
enum Appell2Status appell2_expr_parse(const char *text, struct Appell2Expr **out);

/*
 Evaluates a parsed expression at (x, y).
 */
enum Appell2Status appell2_expr_eval(const struct Appell2Expr *expr,
                                     double x,
                                     double y,
                                     double *out);

/*
 Releases an expression handle. Null is ignored.
 */
void appell2_expr_free(struct Appell2Expr *expr);

/*
 Loads a corpus file; `*out` must be released with
 [`appell2_corpus_free`]. Unparseable rows are counted, not fatal.
 */
enum Appell2Status appell2_corpus_load(const char *path, struct Appell2Corpus **out);

/*
 Number of successfully parsed entries.
 */
size_t appell2_corpus_len(const struct Appell2Corpus *corpus);

/*
 Number of rows that failed to parse.
 */
size_t appell2_corpus_issue_count(const struct Appell2Corpus *corpus);

/*
 Releases a corpus handle. Null is ignored.
 */
void appell2_corpus_free(struct Appell2Corpus *corpus);

/*
 Verifies a loaded corpus against the series oracle on the default grid.
 `*verdict` receives the exit-code-style outcome (0 pass, 1 fail, 2
 suspected misprint); `*json_out`, when non-null, receives the full JSON
 report (release with [`appell2_string_free`]).
 */
enum Appell2Status appell2_verify_corpus_json(const struct Appell2Corpus *corpus,
                                              double pass_tol,
                                              double oracle_tol,
                                              int32_t *verdict,
                                              char **json_out);

/*
 Runs the built-in identity suite; same outputs as
 [`appell2_verify_corpus_json`].
 */
enum Appell2Status appell2_verify_builtins_json(double pass_tol,
                                                double oracle_tol,
                                                int32_t *verdict,
                                                char **json_out);

/*
 Releases a string returned by this library. Null is ignored.
 */
void appell2_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* APPELL2_H */
