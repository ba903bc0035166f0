#ifndef MRAC_H
#define MRAC_H

/* C interface to the adaptive tracking-control library: scenario loading,
 * matched-parameter design, design verification, and closed-loop simulation.
 *
 * Conventions:
 *   - Every function returning int returns a status from mrac_status;
 *     on any nonzero status, mrac_last_error() describes the failure
 *     (thread-local; valid until the next call on the same thread).
 *   - Objects are opaque; free them with the matching *_free function.
 *   - Strings returned through char** are heap-allocated; release them
 *     with mrac_text_free. Output pointers are written only on success
 *     (except mrac_run, which also yields a partial trace on divergence).
 *   - Distinct objects may be used from different threads concurrently;
 *     a single object must not be shared without external synchronization.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(MRAC_BUILD)
#define MRAC_API __declspec(dllexport)
#else
#define MRAC_API __declspec(dllimport)
#endif
#else
#define MRAC_API __attribute__((visibility("default")))
#endif

enum mrac_status {
    MRAC_OK = 0,
    MRAC_ERR_PARSE = 2,      /* scenario/certificate text malformed */
    MRAC_ERR_ASSUMPTION = 3, /* modeling assumption or design infeasibility */
    MRAC_ERR_DIVERGED = 4,   /* simulation left the finite range */
    MRAC_ERR_INVALID = 5,    /* invalid argument or misuse of the API */
    MRAC_ERR_IO = 6,         /* file could not be read or written */
    MRAC_ERR_INTERNAL = 7    /* unexpected failure */
};

typedef struct mrac_scenario mrac_scenario;
typedef struct mrac_design mrac_design;
typedef struct mrac_trace mrac_trace;

/* Short name of a status code, e.g. "parse error". Static storage. */
MRAC_API const char* mrac_status_name(int status);

/* Description of the most recent failure on this thread ("" if none). */
MRAC_API const char* mrac_last_error(void);

/* Frees a string returned through a char** output. NULL is allowed. */
MRAC_API void mrac_text_free(char* text);

/* --- scenarios --------------------------------------------------------- */

MRAC_API int mrac_scenario_load(const char* path, mrac_scenario** out);
MRAC_API int mrac_scenario_parse(const char* text, const char* name, mrac_scenario** out);
MRAC_API void mrac_scenario_free(mrac_scenario* scn);

/* Overrides applied after parsing (command-line style). */
MRAC_API int mrac_scenario_set_scheme(mrac_scenario* scn, const char* scheme);
MRAC_API int mrac_scenario_set_dt(mrac_scenario* scn, double dt);
MRAC_API int mrac_scenario_set_horizon(mrac_scenario* scn, double horizon);

/* --- design ------------------------------------------------------------ */

MRAC_API int mrac_design_compute(const mrac_scenario* scn, mrac_design** out);
MRAC_API void mrac_design_free(mrac_design* design);

/* Text certificate: '#' summary lines plus a machine key-value block. */
MRAC_API int mrac_design_certificate(const mrac_design* design, char** text_out);

/* Matched parameter vector. Call with buf == NULL to query the length. */
MRAC_API int mrac_design_theta_star(const mrac_design* design, double* buf, int* len);
MRAC_API int mrac_design_rho_star(const mrac_design* design, double* out);

/* Runs the design chain and writes a line-per-check report; *all_pass is 1
 * when every check passed. Threshold breaches are listed individually. */
MRAC_API int mrac_verify(const mrac_scenario* scn, char** report_out, int* all_pass);

/* --- simulation -------------------------------------------------------- */

/* Designs and integrates the closed loop. On MRAC_ERR_DIVERGED the partial
 * trace up to the failure is still returned. */
MRAC_API int mrac_run(const mrac_scenario* scn, mrac_trace** out);
MRAC_API void mrac_trace_free(mrac_trace* trace);

MRAC_API int mrac_trace_size(const mrac_trace* trace, long long* out);

/* Copies one column: t, y, y_m, e, u, u_m, theta_norm, rho, eps_over_m, V.
 * Call with buf == NULL to query the length. */
MRAC_API int mrac_trace_column(const mrac_trace* trace, const char* name, double* buf,
                               long long* len);

/* CSV export with header t,y,y_m,e,u,u_m,theta_norm,rho,eps_over_m,V,
 * every stride-th sample plus the final one, 17 significant digits. */
MRAC_API int mrac_trace_write_csv(const mrac_trace* trace, const char* path, int stride);

/* One-line summary: tail RMS of e, max |e|, Lyapunov-increase maximum,
 * the running integral of (eps/m)^2, and boundedness/divergence flags. */
MRAC_API int mrac_trace_metrics_line(const mrac_trace* trace, char** text_out);

MRAC_API int mrac_trace_diverged(const mrac_trace* trace, int* flag, double* time);

#ifdef __cplusplus
}
#endif

#endif /* MRAC_H */
