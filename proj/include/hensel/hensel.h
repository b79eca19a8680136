/* C interface to the hensel library: exact Hensel lifting, scaled local
 * inversion, implicit-function evaluation, the Jacobian smoothness test and
 * the nearby-point sampler over Z_p and F_p[[t]].
 *
 * All objects are opaque handles. Every command returns a status code that
 * doubles as the CLI exit class; on success *out_text receives the rendered
 * report, on failure a diagnostic. Strings handed out by the library are
 * released with hensel_free_text().
 */
#ifndef HENSEL_H
#define HENSEL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HENSEL_API __declspec(dllexport)
#else
#define HENSEL_API __attribute__((visibility("default")))
#endif

typedef struct hensel_system hensel_system;

enum hensel_status {
    HENSEL_OK = 0,
    HENSEL_ERR_PARSE = 2,        /* malformed input text or expression */
    HENSEL_ERR_PRECONDITION = 3, /* a stated precondition does not hold */
    HENSEL_ERR_PRECISION = 4,    /* the precision cap cannot certify the result */
    HENSEL_ERR_AVOIDANCE = 5,    /* sampler budget exhausted before count points */
    HENSEL_ERR_INTERNAL = 6      /* invariant breach, e.g. non-convergence guard */
};

HENSEL_API const char *hensel_version(void);

/* Parse a system description (file contents, not a path). On success stores
 * a new handle in *out_system. Failure diagnostics go to *out_text when it is
 * non-null. */
HENSEL_API int hensel_system_parse(const char *text, hensel_system **out_system, char **out_text);
HENSEL_API void hensel_system_free(hensel_system *system);

HENSEL_API int hensel_system_nvars(const hensel_system *system);
HENSEL_API int hensel_system_npolys(const hensel_system *system);
/* Canonical re-rendering of the parsed system. */
HENSEL_API int hensel_system_describe(const hensel_system *system, char **out_text);

/* Commands. Vector arguments are comma-separated constants ("10,15";
 * t-polynomials for the series backend). */
HENSEL_API int hensel_lift(const hensel_system *system, char **out_text);
HENSEL_API int hensel_solve(const hensel_system *system, const char *target, char **out_text);
HENSEL_API int hensel_invert(const hensel_system *system, const char *target, char **out_text);
HENSEL_API int hensel_implicit(const hensel_system *system, const char *params, char **out_text);
HENSEL_API int hensel_smooth(const hensel_system *system, char **out_text);
/* avoid may be NULL to use the file's avoid clause (if any). */
HENSEL_API int hensel_sample(const hensel_system *system, int count, int level, const char *avoid,
                             char **out_text);

HENSEL_API void hensel_free_text(char *text);

#ifdef __cplusplus
}
#endif

#endif /* HENSEL_H */
