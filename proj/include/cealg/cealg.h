/*
 * C API for the c.e. algebra workbench: opaque handles, integer error
 * codes, caller-freed strings. Every function returns CEALG_OK (0) on
 * success; on failure, cealg_last_error() describes the problem for the
 * calling thread.
 */

#ifndef CEALG_H
#define CEALG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    CEALG_OK = 0,
    CEALG_ERR_PARSE = 1,
    CEALG_ERR_INVALID = 2,
    CEALG_ERR_UNSUPPORTED = 3,
    CEALG_ERR_IO = 4,
    CEALG_ERR_DISAGREE = 5
};

typedef struct cealg_presentation cealg_presentation;
typedef struct cealg_trace cealg_trace;

typedef struct cealg_params {
    uint64_t seed;
    long long horizon;
    int box;
    int degree;
    int derivation;
    long long shift_bound; /* -1: derive from the data */
    int workers;
} cealg_params;

void cealg_params_init(cealg_params* params);

const char* cealg_version(void);
const char* cealg_last_error(void);
void cealg_string_free(char* s);

/* presentations (the line-based DSL) */
int cealg_presentation_parse(const char* text, cealg_presentation** out);
int cealg_presentation_load(const char* path, cealg_presentation** out);
int cealg_presentation_render(const cealg_presentation* p, char** out_text);
void cealg_presentation_free(cealg_presentation* p);

/* enumeration traces ("<stage> <code>" lines, optional "stabilized") */
int cealg_trace_parse(const char* text, cealg_trace** out);
int cealg_trace_load(const char* path, cealg_trace** out);
int cealg_trace_render(const cealg_trace* t, char** out_text);
int cealg_trace_save(const cealg_trace* t, const char* path);
void cealg_trace_free(cealg_trace* t);

/* class invariant of a presentation, printed */
int cealg_invariant(const cealg_presentation* p, const cealg_params* params, char** out_text);

/* isomorphism verdict: out_kind 0 = isomorphic, 1 = non-isomorphic,
 * 2 = unknown at the configured bounds */
int cealg_iso(const cealg_presentation* a, const cealg_presentation* b,
              const cealg_params* params, int* out_kind, char** out_text);

/* reductions; options_json carries n/alpha/beta/target/target-gens and an
 * optional "saturate" bound for post-composition */
int cealg_reduction_names(char** out_text);
int cealg_reduce(const char* name, const char* options_json, const cealg_trace* input,
                 const cealg_params* params, cealg_trace** out);

/* the worker construction over a finite registry; cls is "uf1" or "ag",
 * gens[i] the generator count of inputs[i]; outs must hold count slots */
int cealg_reduce_registry(const char* cls, const cealg_trace* const* inputs, const int* gens,
                          size_t count, const cealg_params* params, cealg_trace** outs);

/* ordinal calculator */
int cealg_ordinal_normalize(const char* text, char** out_text);
int cealg_ordinal_compare(const char* a, const char* b, int* out_cmp); /* -1, 0, 1 */
int cealg_ordinal_add(const char* a, const char* b, char** out_text);
int cealg_ordinal_code(const char* ordinal, const char* bound, char** out_code);
int cealg_ordinal_rank(const char* code, const char* bound, char** out_ordinal);

/* suite verification; returns CEALG_ERR_DISAGREE when any pair disagrees */
int cealg_verify(const char* config_json, char** report_text);

/* seeded generation: writes trace files under out_dir with the prefix and
 * returns the manifest; singles writes one trace per instance instead of
 * a pair */
int cealg_generate(const char* generator_json, uint64_t seed, int count, int singles,
                   const char* out_dir, const char* prefix, char** manifest_text);

#ifdef __cplusplus
}
#endif

#endif /* CEALG_H */
