#ifndef FATMARK_FATMARK_H
#define FATMARK_FATMARK_H

/* C interface to the fatmark library. Handles are opaque; every call that
 * can fail returns an fm_status and leaves a message for fm_last_error().
 * Strings returned through char** are owned by the caller and released
 * with fm_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FATMARK_BUILDING)
#    define FATMARK_API __declspec(dllexport)
#  else
#    define FATMARK_API __declspec(dllimport)
#  endif
#else
#  define FATMARK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fm_status {
  FM_OK = 0,
  FM_ERR_INVALID_ARGUMENT = 1,
  FM_ERR_PARSE = 2,
  FM_ERR_GRAPH = 3,    /* fatgraph axioms or topology */
  FM_ERR_MARKING = 4,  /* marking axioms, ranks, pairings */
  FM_ERR_FLIP = 5,     /* flip preconditions, paths, loops */
  FM_ERR_CHECK = 6,    /* a verified identity does not hold */
  FM_ERR_OVERFLOW = 7,
  FM_ERR_INTERNAL = 8
} fm_status;

typedef struct fm_graph fm_graph;
typedef struct fm_path fm_path;

typedef struct fm_graph_info {
  size_t vertices;
  size_t edges;
  size_t genus;
  size_t boundary_number;
  int has_marking;
  size_t marking_rank;
} fm_graph_info;

typedef struct fm_half_edge {
  int64_t label;
  int plus; /* 1 for "+", 0 for "-" */
} fm_half_edge;

typedef struct fm_step {
  fm_half_edge edge;
  fm_half_edge a, b, c, d;
  fm_half_edge new_edge;
} fm_step;

/* Message and error-kind name of the last failure on this thread. */
FATMARK_API const char* fm_last_error(void);
FATMARK_API const char* fm_last_error_kind(void);
FATMARK_API const char* fm_status_name(fm_status status);
FATMARK_API void fm_string_free(char* s);

FATMARK_API fm_status fm_graph_parse(const char* text, fm_graph** out);
FATMARK_API void fm_graph_free(fm_graph* g);
FATMARK_API fm_status fm_graph_validate(const fm_graph* g);
FATMARK_API fm_status fm_graph_get_info(const fm_graph* g, fm_graph_info* out);
FATMARK_API fm_status fm_graph_boundary_word(const fm_graph* g, char** out);
FATMARK_API fm_status fm_graph_print(const fm_graph* g, char** out);
/* Edge token "3", "3+" or "3-"; the marking, if any, is propagated. */
FATMARK_API fm_status fm_graph_flip(const fm_graph* g, const char* edge, fm_graph** out);
FATMARK_API fm_status fm_graph_canonical_form(const fm_graph* g, char** out);

/* Checks the marking axioms; with `topological` set also evaluates the
 * intersection criterion against the standard form into *is_topological. */
FATMARK_API fm_status fm_marking_check(const fm_graph* g, int topological, int* is_topological);
/* Copy of g carrying its canonical topological H-marking. */
FATMARK_API fm_status fm_marking_canonical(const fm_graph* g, fm_graph** out);

/* Comma-separated edge tokens. Graphs without a marking use the canonical
 * H-marking. */
FATMARK_API fm_status fm_path_apply(const fm_graph* g, const char* flips, fm_path** out);
FATMARK_API fm_status fm_path_pentagon(const fm_graph* g, const char* f, const char* h,
                                       fm_path** out);
FATMARK_API void fm_path_free(fm_path* p);
FATMARK_API size_t fm_path_length(const fm_path* p);
FATMARK_API int fm_path_is_closed(const fm_path* p);
FATMARK_API fm_status fm_path_step(const fm_path* p, size_t i, fm_step* out);
/* cocycle is 'm', 'j' or 's'. */
FATMARK_API fm_status fm_path_step_value(const fm_path* p, char cocycle, size_t i, char** out);
FATMARK_API fm_status fm_path_total(const fm_path* p, char cocycle, char** out, int* is_zero);
FATMARK_API fm_status fm_path_end_graph(const fm_path* p, fm_graph** out);

/* genus 0 evaluates the rank-two d on words in a and b. */
FATMARK_API fm_status fm_earle_d(const char* word, size_t genus, int64_t* out);
/* Differences d(phi(x)) - d(x) are written to `differences` (2*genus
 * entries, may be NULL); the class is returned as text such as "-2*B2". */
FATMARK_API fm_status fm_earle_eval(const char* automorphism, size_t genus, int inverse,
                                    size_t trials, char** h, int64_t* differences);

/* FM_ERR_CHECK when a property fails; failures are listed in *report. */
FATMARK_API fm_status fm_selftest(uint64_t seed, size_t trials, size_t* checks, char** report);

#ifdef __cplusplus
}
#endif

#endif
