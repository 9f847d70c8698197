#ifndef CUBENOISE_H
#define CUBENOISE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CnStatus {
  CN_STATUS_OK = 0,
  CN_STATUS_NULL_POINTER = 1,
  CN_STATUS_INVALID_ARGUMENT = 2,
  CN_STATUS_CAP_EXCEEDED = 3,
  /**
   * The input violates a mathematical precondition (zero function, dependent rows, ...).
   */
  CN_STATUS_DOMAIN = 4,
  CN_STATUS_BUFFER_TOO_SMALL = 5,
  CN_STATUS_PANIC = 6,
} CnStatus;

typedef struct CnCode CnCode;

typedef struct CnCube CnCube;

typedef struct CnMatroid CnMatroid;

/**
 * Both sides of a checked inequality `lhs ≤ rhs`.
 */
typedef struct CnGap {
  double lhs;
  double rhs;
  /**
   * `rhs − lhs`.
   */
  double gap;
  bool equality;
} CnGap;

typedef struct CnLemma13 {
  double f2;
  double f_inf;
  double dual_sum;
  double primal_sum;
  double max_residual;
} CnLemma13;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *cn_last_error(void);

/**
 * Builds a function on `{0,1}^n` from `len = 2^n` values, point `x` at index `Σ x_i 2^{i-1}`.
 *
 * # Safety
 * `values` must point to `len` readable doubles; `out` must be writable.
 */
enum CnStatus cn_cube_new(size_t n, const double *values, size_t len, struct CnCube **out);

/**
 * # Safety
 * `cube` must be NULL or a handle from this library that has not been freed.
 */
void cn_cube_free(struct CnCube *cube);

/**
 * Number of points, `2^n`; 0 for NULL.
 *
 * # Safety
 * `cube` must be NULL or a live handle.
 */
size_t cn_cube_len(const struct CnCube *cube);

/**
 * Copies the values into `out[0..2^n]`.
 *
 * # Safety
 * `cube` must be a live handle; `out` must have room for `len` doubles.
 */
enum CnStatus cn_cube_values(const struct CnCube *cube, double *out, size_t len);

/**
 * Fourier coefficients `f̂(R) = E_x f(x) w_R(x)`, indexed by the subset mask of `R`.
 *
 * # Safety
 * `cube` must be a live handle; `out` must have room for `len` doubles.
 */
enum CnStatus cn_cube_wht(const struct CnCube *cube, double *out, size_t len);

/**
 * New handle holding `T_ε f`.
 *
 * # Safety
 * `cube` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_cube_noise(const struct CnCube *cube, double eps, struct CnCube **out);

/**
 * `‖f‖_q`; pass `INFINITY` for the max norm.
 *
 * # Safety
 * `cube` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_cube_norm(const struct CnCube *cube, double q, double *out);

/**
 * Entropy in bits.
 *
 * # Safety
 * `cube` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_cube_entropy(const struct CnCube *cube, double *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CnStatus cn_r_exponent(double q, double *out);

/**
 * Main norm inequality at `(q, ε)`, natural logs, exact subset sum.
 *
 * # Safety
 * `cube` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_main_gap(const struct CnCube *cube, double q, double eps, struct CnGap *out);

/**
 * Noisy entropy inequality at `ε`, entropies in bits.
 *
 * # Safety
 * `cube` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_entropy_gap(const struct CnCube *cube, double eps, struct CnGap *out);

/**
 * # Safety
 * `cube` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_log_sobolev_gap(const struct CnCube *cube, double q, struct CnGap *out);

/**
 * Code of length `n` spanned by `k` linearly independent rows; bit `j` of a row is coordinate `j + 1`.
 *
 * # Safety
 * `rows` must point to `k` readable words; `out` must be writable.
 */
enum CnStatus cn_code_from_rows(size_t n,
                                const uint64_t *rows,
                                size_t k,
                                struct CnCode **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CnStatus cn_code_reed_muller(size_t r, size_t m, struct CnCode **out);

/**
 * # Safety
 * `code` must be NULL or a live handle.
 */
void cn_code_free(struct CnCode *code);

/**
 * Length `n`; 0 for NULL.
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
size_t cn_code_length(const struct CnCode *code);

/**
 * Dimension `k`; 0 for NULL.
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
size_t cn_code_dimension(const struct CnCode *code);

/**
 * Writes `a_0 … a_n` into `out`, which must hold at least `n + 1` entries.
 *
 * # Safety
 * `code` must be a live handle; `out` must have room for `len` words.
 */
enum CnStatus cn_code_weight_distribution(const struct CnCode *code, uint64_t *out, size_t len);

/**
 * `λn − E_{T~λ} r(T)` by exact enumeration.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_code_rank_deficiency(const struct CnCode *code, double lambda, double *out);

/**
 * The four coinciding expressions for `F(λ, 2) = F(λ, ∞)`, in bits.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_code_lemma13(const struct CnCode *code, double lambda, struct CnLemma13 *out);

/**
 * Binary matroid on the `n` columns of a `count × n` matrix; rows may be dependent.
 *
 * # Safety
 * `rows` must point to `count` readable words; `out` must be writable.
 */
enum CnStatus cn_matroid_from_rows(size_t n,
                                   const uint64_t *rows,
                                   size_t count,
                                   struct CnMatroid **out);

/**
 * Graphic matroid of a multigraph; `endpoints` holds `2 · edge_count` vertex indices.
 *
 * # Safety
 * `endpoints` must point to `2 · edge_count` readable integers; `out` must be writable.
 */
enum CnStatus cn_matroid_from_graph(size_t vertex_count,
                                    const uint32_t *endpoints,
                                    size_t edge_count,
                                    struct CnMatroid **out);

/**
 * # Safety
 * `m` must be NULL or a live handle.
 */
void cn_matroid_free(struct CnMatroid *m);

/**
 * `log₂ E_{S~p} 2^{|S|−r(S)}` against `E_{T~t}(|T| − r(T))`, exact.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_matroid_lemma17(const struct CnMatroid *m, double p, struct CnGap *out);

/**
 * Exact tail probability (`lhs`) against `2^{−Δ}` (`rhs`).
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum CnStatus cn_matroid_tail(const struct CnMatroid *m, double p, double delta, struct CnGap *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBENOISE_H */
