/* SPDX-License-Identifier: MIT */
/* Copyright (c) 2026 The blobcell authors */

/*
 * C interface to the blobcell library.  A context holds one parameter set
 * and the algebras built for it; every query returns a JSON document as a
 * string owned by the caller (release it with bc_string_free).  Failing
 * calls return a nonzero status and leave a message in bc_last_error().
 *
 * Configuration is a JSON object; omitted keys take the preset values.
 *   n, l           sizes (defaults 2, 2)
 *   e              quantum characteristic (default 2l+1)
 *   p              prime with e | p-1 (default: the smallest one)
 *   q              primitive e-th root of unity mod p (0 or omitted: smallest)
 *   kappa_hat      integer multicharge, l entries
 *   theta          weighting, l entries (default zero)
 *   oracle         certify rewriting against the matrix algebra (default true)
 */

#ifndef BLOBCELL_H
#define BLOBCELL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BC_API __declspec(dllexport)
#else
#define BC_API __attribute__((visibility("default")))
#endif

typedef struct bc_context bc_context;

typedef enum bc_status {
  BC_OK = 0,
  BC_ERR_NULL = 1,        /* a required pointer argument is null */
  BC_ERR_CONFIG = 2,      /* parameters rejected (multicharge conditions, p, e, q) */
  BC_ERR_ARGUMENT = 3,    /* malformed request or unknown name */
  BC_ERR_CHECK = 4,       /* an internal consistency check failed */
  BC_ERR_LIMIT = 5,       /* the request is beyond the size this build handles */
  BC_ERR_INTERNAL = 6
} bc_status;

BC_API const char* bc_version(void);
BC_API const char* bc_status_name(bc_status status);
/* Message of the last failing call on this thread; empty after success. */
BC_API const char* bc_last_error(void);
BC_API void bc_string_free(char* s);

BC_API bc_status bc_context_new(const char* config_json, bc_context** out);
BC_API void bc_context_free(bc_context* ctx);
/* The resolved configuration, with every default filled in. */
BC_API bc_status bc_context_config(const bc_context* ctx, char** out_json);

/* dim H = l^n n!, dim B as the sum of |Std(lambda)|^2, per-shape counts. */
BC_API bc_status bc_dims(bc_context* ctx, char** out_json);

/* suite: hecke, klr, cellular, jm, rewrite or all.  *passed is 1 when every
   check passed (may be null). */
BC_API bc_status bc_verify(bc_context* ctx, const char* suite, char** out_json, int* passed);

/* The cellular basis m_ST in the coordinates of the quotient basis of B. */
BC_API bc_status bc_basis(bc_context* ctx, char** out_json);

/* Cell modules: dimension, Gram matrix and its rank.  shape_json selects one
   shape ("max" or a list of column heights); null selects all. */
BC_API bc_status bc_cell(bc_context* ctx, const char* shape_json, char** out_json);

/* Rewrite traces.  request_json is one of
     {"kind": "dot", "shape": "max" | [heights], "k": k}
     {"kind": "idempotent", "residues": [i_1, ..., i_n]}
   Traces are certified step by step when the oracle is enabled. */
BC_API bc_status bc_trace(bc_context* ctx, const char* request_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* BLOBCELL_H */
