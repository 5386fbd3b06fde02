/* qar - exact combinatorics of Dynkin quivers, Auslander-Reiten data and
 * R-matrix pole structure for quantum affine algebras of types A and D.
 *
 * All computation is exact (arbitrary-precision rationals; no floating
 * point).  Every call returns a status code; on QAR_OK the report handle
 * carries the outcome and must be released with qar_report_free.  Whether
 * the requested checks passed is a property of the report, not of the
 * status code.
 */
#ifndef QAR_H
#define QAR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    QAR_OK = 0,
    /* 1 is reserved for "checks failed" process exit codes */
    QAR_E_INVALID_ARGUMENT = 2,
    QAR_E_UNSUPPORTED = 3,
    QAR_E_INTERNAL = 4
} qar_status;

typedef struct qar_report qar_report;

/* Closed-form denominator of the normalized R-matrix between the k-th and
 * l-th fundamental representations; family is 'A' or 'D'. */
qar_status qar_denom(char family, int rank, int k, int l, qar_report** out);

/* Validate and echo one orientation (text, canonical JSON, DOT). */
qar_status qar_quiver(char family, int rank, const char* arrows, qar_report** out);

/* Verification suites: "thm42" (the pole-order quiver is the reversed Dynkin
 * quiver), "lemma34" (simple poles on the J-datum, type D), "combinatorics"
 * (adapted words, convexity, the additive/boundary/ordering properties of
 * the Auslander-Reiten quiver), or "all".
 * arrows: "1-2,3-2" style orientation, or NULL for the default one;
 * ignored when all_orientations is nonzero.  jobs <= 0 picks a default
 * (the QAR_JOBS environment variable, then the hardware concurrency). */
qar_status qar_verify(const char* suite, char family, int rank, const char* arrows,
                      int all_orientations, int jobs, qar_report** out);

/* The bijection between repetition-quiver vertices and (root, shift) pairs,
 * its Auslander-Reiten part and the J-datum, for one orientation.
 * base_vertex/base_value fix the height function.  Everywhere an `arrows`
 * argument is accepted, either a "1-2,3-2" list or the JSON form
 * {"type":"D","rank":4,"arrows":[[1,2],[3,2],[4,2]]} may be passed. */
qar_status qar_phi(char family, int rank, const char* arrows, int base_vertex, int base_value,
                   int print_ar, qar_report** out);

/* Same as qar_phi, but the DOT payload shows the repetition quiver on the
 * window [p_lo, p_hi] instead of the Auslander-Reiten part. */
qar_status qar_phi_window(char family, int rank, const char* arrows, int base_vertex,
                          int base_value, int p_lo, int p_hi, qar_report** out);

/* The quiver built from R-matrix pole orders on the J-datum, with its
 * Cartan matrix and the isomorphism check against the reversed quiver. */
qar_status qar_gammaj(char family, int rank, const char* arrows, int base_vertex, int base_value,
                      qar_report** out);

/* Infinite-product scalar identities at the given rank: recursion vs closed
 * form, and the reduction to the denominator reflection form. */
qar_status qar_qpoch_verify(int rank, qar_report** out);

/* Exact intertwiner computations for type D: action is "build", "check" or
 * "denominator"; reps are "vector", "spin+", "spin-" (rep_b NULL = rep_a). */
qar_status qar_rmatrix(const char* action, const char* rep_a, const char* rep_b, int rank,
                       qar_report** out);

/* Fused intertwiner on the k-fold tensor power of the vector representation:
 * kernel description and cyclicity of the image. */
qar_status qar_fusion(int k, int rank, qar_report** out);

/* report accessors; the returned strings live as long as the report */
int qar_report_passed(const qar_report* r);
const char* qar_report_json(const qar_report* r);
const char* qar_report_text(const qar_report* r);
/* DOT graph payload, or NULL when the command has none */
const char* qar_report_dot(const qar_report* r);
void qar_report_free(qar_report* r);

/* thread-local message describing the last non-OK status */
const char* qar_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* QAR_H */
