/* C interface to the quasichar library: characteristic and coboundary
 * quasi-polynomials, layer posets, Tutte polynomials and weight enumerators
 * for central arrangements over Z or a quadratic ring of integers.
 *
 * All computations are exact. Results are returned as JSON documents (or
 * DOT text for the Hasse diagram) in newly allocated strings; release them
 * with qch_string_free. On failure the out-parameter is left untouched and
 * qch_last_error() describes the problem for the calling thread.
 */
#ifndef QUASICHAR_H
#define QUASICHAR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qch_status {
    QCH_OK = 0,
    QCH_VERIFY_FAILED = 1,  /* verification ran; at least one check failed */
    QCH_INVALID_INPUT = 2,
    QCH_RESOURCE_LIMIT = 3,
    QCH_INTERNAL_ERROR = 4
} qch_status;

typedef struct qch_arrangement qch_arrangement;

typedef struct qch_limits {
    long long max_enumeration;  /* brute-force point bound, default 10^7 */
    int max_vectors;            /* 2^n subset bound, default 20 */
    long long max_divisor_norm; /* divisor enumeration bound, default 10^6 */
} qch_limits;

void qch_limits_default(qch_limits* out);

/* Parse an arrangement file (JSON text). The handle owns its data and must
 * be released with qch_arrangement_free. */
qch_status qch_arrangement_parse(const char* json_text, qch_arrangement** out);
void qch_arrangement_free(qch_arrangement* arrangement);
qch_status qch_arrangement_canonical_json(const qch_arrangement* arrangement, char** out_json);

qch_status qch_charpoly(const qch_arrangement* arrangement, const qch_limits* limits,
                        char** out_json);
qch_status qch_coboundary(const qch_arrangement* arrangement, const qch_limits* limits,
                          char** out_json);
qch_status qch_layers(const qch_arrangement* arrangement, const qch_limits* limits,
                      char** out_json);
qch_status qch_layers_dot(const qch_arrangement* arrangement, const qch_limits* limits,
                          char** out_dot);
qch_status qch_tutte(const qch_arrangement* arrangement, const qch_limits* limits,
                     char** out_json);
/* ideal_spec: a bare integer (over Z) or a JSON generator list. */
qch_status qch_eval(const qch_arrangement* arrangement, const char* ideal_spec,
                    const qch_limits* limits, char** out_json);
/* mode: "weight" | "dual" | "macwilliams". */
qch_status qch_codes(const qch_arrangement* arrangement, const char* ideal_spec, const char* mode,
                     const qch_limits* limits, char** out_json);
/* Returns QCH_VERIFY_FAILED when a check fails; the document is still
 * produced in that case. */
qch_status qch_verify(const qch_arrangement* arrangement, long long qmax,
                      const qch_limits* limits, char** out_json);
qch_status qch_section4(const qch_limits* limits, char** out_json);

/* Thread-local message for the most recent failure. */
const char* qch_last_error(void);
void qch_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* QUASICHAR_H */
