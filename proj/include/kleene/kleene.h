/* C interface to the kleene library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return a kleene_status; on failure the
 * message is available from kleene_last_error() on the same thread. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with kleene_string_free(). Subsets cross the boundary as arrays
 * of labels (input) or space-separated labels (output).
 */
#ifndef KLEENE_KLEENE_H
#define KLEENE_KLEENE_H

#include <stddef.h>

#if defined(_WIN32)
#define KLEENE_API __declspec(dllexport)
#else
#define KLEENE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kleene_status {
  KLEENE_OK = 0,
  KLEENE_E_INVALID_ARGUMENT,
  KLEENE_E_DUPLICATE_LABEL,
  KLEENE_E_UNKNOWN_ELEMENT,
  KLEENE_E_ANTISYMMETRY,
  KLEENE_E_EMPTY_SUBSET,
  KLEENE_E_SIZE_LIMIT,
  KLEENE_E_NOT_COMPARABLE,
  KLEENE_E_NOT_INVOLUTIVE,
  KLEENE_E_NOT_ANTITONE,
  KLEENE_E_NOT_BOUNDED,
  KLEENE_E_NO_UNIQUE_TOP,
  KLEENE_E_NO_UNIQUE_BOTTOM,
  KLEENE_E_NOT_ORDER_PRESERVING,
  KLEENE_E_HYPOTHESIS_FAILED,
  KLEENE_E_NOT_DISTRIBUTIVE,
  KLEENE_E_NOT_ORTHO,
  KLEENE_E_PRECONDITION_FAILED,
  KLEENE_E_NOT_CHAIN,
  KLEENE_E_GAP_CONDITION_FAILED,
  KLEENE_E_NOT_KLEENE,
  KLEENE_E_EVEN_CARDINALITY,
  KLEENE_E_NO_FIXED_POINT,
  KLEENE_E_BAD_LENGTH,
  KLEENE_E_SYNTAX,
  KLEENE_E_IO,
  KLEENE_E_INTERNAL
} kleene_status;

/* A finite poset, optionally with an antitone involution and named subsets. */
typedef struct kleene_poset kleene_poset;
/* A parsed poset file. */
typedef struct kleene_document kleene_document;
/* Outcome of a representability search. */
typedef struct kleene_representation kleene_representation;

typedef struct kleene_classification {
  int distributive;
  int pseudo_kleene;
  int kleene;
  int boolean;
  int ortho;
  int lattice;
  size_t fixed_point_count;
} kleene_classification;

typedef enum kleene_completion_kind { KLEENE_COMPLETION_DM = 0, KLEENE_COMPLETION_G = 1 } kleene_completion_kind;

typedef enum kleene_search_mode {
  KLEENE_SEARCH_ODD = 0,
  KLEENE_SEARCH_SUBPOSET = 1,
  KLEENE_SEARCH_EXHAUSTIVE = 2
} kleene_search_mode;

typedef enum kleene_verdict {
  KLEENE_REPRESENTABLE = 0,
  KLEENE_NOT_REPRESENTABLE_WITHIN_BOUNDS = 1,
  KLEENE_NOT_REPRESENTABLE = 2
} kleene_verdict;

/* --- errors and memory ---------------------------------------------------- */
KLEENE_API const char* kleene_last_error(void);
/* Line number of the last parse error, 0 if none. */
KLEENE_API int kleene_last_error_line(void);
KLEENE_API const char* kleene_status_name(kleene_status status);
KLEENE_API void kleene_string_free(char* s);
/* Cap on the size of constructed carriers (0 restores the default). */
KLEENE_API void kleene_set_size_cap(size_t cap);

/* --- documents ------------------------------------------------------------- */
KLEENE_API kleene_status kleene_document_parse(const char* text, kleene_document** out);
KLEENE_API kleene_status kleene_document_load(const char* path, kleene_document** out);
KLEENE_API void kleene_document_free(kleene_document* doc);
KLEENE_API size_t kleene_document_count(const kleene_document* doc);
/* Borrowed pointer, valid while the document lives. */
KLEENE_API const char* kleene_document_name(const kleene_document* doc, size_t index);
KLEENE_API kleene_status kleene_document_get(const kleene_document* doc, const char* name, kleene_poset** out);

/* --- posets ---------------------------------------------------------------- */
/* `pairs` holds 2*pair_count labels: (lower, upper) generator pairs. */
KLEENE_API kleene_status kleene_poset_build(const char* const* labels, size_t label_count,
                                            const char* const* pairs, size_t pair_count, kleene_poset** out);
/* Returns a copy of `p` carrying the involution given by unordered pairs. */
KLEENE_API kleene_status kleene_poset_with_involution(const kleene_poset* p, const char* const* pairs,
                                                      size_t pair_count, kleene_poset** out);
KLEENE_API kleene_status kleene_poset_clone(const kleene_poset* p, kleene_poset** out);
KLEENE_API void kleene_poset_free(kleene_poset* p);

KLEENE_API size_t kleene_poset_size(const kleene_poset* p);
/* Borrowed pointer, or NULL when out of range. */
KLEENE_API const char* kleene_poset_label(const kleene_poset* p, size_t index);
KLEENE_API int kleene_poset_has_involution(const kleene_poset* p);
KLEENE_API kleene_status kleene_poset_leq(const kleene_poset* p, const char* a, const char* b, int* out);
KLEENE_API kleene_status kleene_poset_involution_of(const kleene_poset* p, const char* a, const char** out);
/* Named subset attached to the poset (from a `set` line). */
KLEENE_API kleene_status kleene_poset_set(const kleene_poset* p, const char* name, char** out);

KLEENE_API kleene_status kleene_poset_print(const kleene_poset* p, const char* name, char** out);
KLEENE_API kleene_status kleene_poset_to_dot(const kleene_poset* p, const char* name, char** out);

/* --- L/U calculus and classification ---------------------------------------- */
KLEENE_API kleene_status kleene_lower_bounds(const kleene_poset* p, const char* const* subset, size_t n, char** out);
KLEENE_API kleene_status kleene_upper_bounds(const kleene_poset* p, const char* const* subset, size_t n, char** out);
KLEENE_API kleene_status kleene_convex_hull(const kleene_poset* p, const char* const* subset, size_t n, char** out);
/* Without an involution only the order flags are filled in. */
KLEENE_API kleene_status kleene_classify(const kleene_poset* p, kleene_classification* out);
KLEENE_API kleene_status kleene_fixed_points(const kleene_poset* p, char** out);
KLEENE_API kleene_status kleene_is_distributive(const kleene_poset* p, int* out);

/* --- constructions ----------------------------------------------------------- */
KLEENE_API kleene_status kleene_twist_product(const kleene_poset* p, kleene_poset** out);
/* P_S(A) with the swap involution. */
KLEENE_API kleene_status kleene_ps_construct(const kleene_poset* p, const char* const* subset, size_t n,
                                             kleene_poset** out);
KLEENE_API kleene_status kleene_ordinal_sum(const kleene_poset* const* operands, size_t count, kleene_poset** out);
/* Carries the componentwise involution when every factor has one. */
KLEENE_API kleene_status kleene_direct_product(const kleene_poset* const* factors, size_t count, kleene_poset** out);
KLEENE_API kleene_status kleene_dual(const kleene_poset* p, kleene_poset** out);
KLEENE_API kleene_status kleene_interval(const kleene_poset* p, const char* lo, const char* hi, kleene_poset** out);

/* --- completions ------------------------------------------------------------- */
/* The completion lattice, with X -> L(X') when `with_involution` is set (the
 * base must then carry an involution). `principal` (optional) receives lines
 * "x <member>" for the embedding x -> L(x). */
KLEENE_API kleene_status kleene_complete(const kleene_poset* p, kleene_completion_kind kind, int with_involution,
                                         kleene_poset** out, char** principal);
/* Compares DM(P_S(A)) with P_{L(S)}(DM(A)). Sizes and witness are optional. */
KLEENE_API kleene_status kleene_compare_dm(const kleene_poset* p, const char* const* subset, size_t n,
                                           int* isomorphic, size_t* left_size, size_t* right_size, char** witness);

/* --- isomorphism ------------------------------------------------------------- */
/* `witness` (optional) receives lines "x y" for x -> y when found. */
KLEENE_API kleene_status kleene_find_isomorphism(const kleene_poset* a, const kleene_poset* b,
                                                 int respect_involution, int* found, char** witness);

/* --- representability -------------------------------------------------------- */
/* max_carrier_size 0 means |K|. The poset must carry an involution. */
KLEENE_API kleene_status kleene_represent(const kleene_poset* k, kleene_search_mode mode, size_t max_carrier_size,
                                          size_t partitions, int pruning, kleene_representation** out);
KLEENE_API void kleene_representation_free(kleene_representation* r);
KLEENE_API kleene_verdict kleene_representation_verdict(const kleene_representation* r);
KLEENE_API size_t kleene_representation_candidates(const kleene_representation* r);
KLEENE_API size_t kleene_representation_max_carrier(const kleene_representation* r);
KLEENE_API double kleene_representation_elapsed_ms(const kleene_representation* r);
/* Borrowed; empty when there is nothing to report. */
KLEENE_API const char* kleene_representation_note(const kleene_representation* r);
/* Witness accessors fail with KLEENE_E_INVALID_ARGUMENT when there is none. */
KLEENE_API kleene_status kleene_representation_carrier(const kleene_representation* r, kleene_poset** out);
KLEENE_API kleene_status kleene_representation_subset(const kleene_representation* r, char** out);
/* Lines "k p" mapping each element of K to its pair in P_S(A). */
KLEENE_API kleene_status kleene_representation_map(const kleene_representation* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KLEENE_KLEENE_H */
