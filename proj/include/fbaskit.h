/* Copyright 2026 the fbaskit developers. Licensed under the Apache License,
 * Version 2.0. See the COPYING file at the root of this distribution or at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * C interface of the fbaskit federated Byzantine agreement system analyzer.
 * All handles are opaque; every fallible call returns an fbas_status and the
 * last failure message is available per thread from fbas_last_error().
 * Node indices are dense in [0, fbas_node_count()). Arrays handed out by the
 * library are released with the matching fbas_*_free function.
 */

#ifndef FBASKIT_H
#define FBASKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fbas_status
{
    FBAS_OK = 0,
    FBAS_ERR_ARGUMENT = 1,           /* invalid argument or null handle */
    FBAS_ERR_MEMBERSHIP = 2,         /* a node is missing from its own slice */
    FBAS_ERR_EMPTY_SLICE_SET = 3,    /* a node declares no slices */
    FBAS_ERR_DUPLICATE_SLICE = 4,    /* a node lists the same slice twice */
    FBAS_ERR_UNKNOWN_NODE = 5,       /* reference outside the universe */
    FBAS_ERR_THRESHOLD = 6,          /* threshold out of range */
    FBAS_ERR_EXPANSION_TOO_LARGE = 7,/* slice expansion exceeds its cap */
    FBAS_ERR_K_TOO_LARGE = 8,        /* k-subsets of a smaller set */
    FBAS_ERR_NOT_TRUST_CLUSTER = 9,  /* set not closed under reachability */
    FBAS_ERR_EMPTY_SET = 10,         /* operation needs a non-empty set */
    FBAS_ERR_PRECONDITION = 11,      /* documented precondition violated */
    FBAS_ERR_NO_INTERSECTION = 12,   /* needs quorum intersection */
    FBAS_ERR_TOO_LARGE = 13,         /* instance exceeds a guard */
    FBAS_ERR_TOO_MANY_QUORUMS = 14,  /* enumeration exceeds its cap */
    FBAS_ERR_TOO_MANY_DSETS = 15,    /* inclusion-exclusion guard tripped */
    FBAS_ERR_MALFORMED_FORMULA = 16, /* CNF input rejected */
    FBAS_ERR_PARTITION = 17,         /* organizations do not partition V */
    FBAS_ERR_PARSE = 18,             /* document or CNF syntax error */
    FBAS_ERR_IO = 19,                /* file could not be read or written */
    FBAS_ERR_INTERNAL = 20
} fbas_status;

/* An FBAS with its node names and optional organization blocks. */
typedef struct fbas_t fbas_t;
/* A demand-driven quorum stream. */
typedef struct fbas_quorum_iter fbas_quorum_iter;
/* A probability model over ill-behaved node sets. */
typedef struct fbas_distribution fbas_distribution;
/* An immutable list of node sets. */
typedef struct fbas_setlist fbas_setlist;

const char* fbas_version(void);
/* Message for the most recent failing call on this thread. */
const char* fbas_last_error(void);

/* ------------------------------------------------------------------ */
/* Construction and serialization                                      */

fbas_status fbas_load_file(const char* path, fbas_t** out);
fbas_status fbas_load_string(const char* text, fbas_t** out);
/* Same with an explicit cap on slices generated per node while expanding
 * simple-form and slice-definition nodes (0 keeps the default of 10^6). */
fbas_status fbas_load_file_capped(const char* path, uint64_t expansion_cap,
                                  fbas_t** out);
fbas_status fbas_load_string_capped(const char* text, uint64_t expansion_cap,
                                    fbas_t** out);
/* Symmetric FBAS (V, k): every node trusts k of all n nodes. */
fbas_status fbas_generate_symmetric(uint32_t nodes, uint32_t threshold,
                                    fbas_t** out);
/* Organization family: root threshold over per-org thresholds. */
fbas_status fbas_generate_orgs(uint32_t org_count, const uint32_t* org_sizes,
                               const uint32_t* org_thresholds,
                               uint32_t root_threshold, fbas_t** out);
/* The quorum-split hardness reduction applied to a DIMACS 3-CNF formula. */
fbas_status fbas_reduce_3sat(const char* dimacs_text, fbas_t** out);

void fbas_free(fbas_t* f);

/* Canonical document; free the string with fbas_string_free. */
fbas_status fbas_emit_string(const fbas_t* f, char** out);
fbas_status fbas_save_file(const fbas_t* f, const char* path);
void fbas_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Introspection                                                       */

uint32_t fbas_node_count(const fbas_t* f);
const char* fbas_node_name(const fbas_t* f, uint32_t node);
/* -1 when the name is unknown. */
int64_t fbas_node_index(const fbas_t* f, const char* name);
int fbas_is_simple(const fbas_t* f);
uint64_t fbas_size_measure(const fbas_t* f);

uint32_t fbas_org_count(const fbas_t* f);
const char* fbas_org_name(const fbas_t* f, uint32_t org);
fbas_status fbas_org_members(const fbas_t* f, uint32_t org, uint32_t** members,
                             size_t* count);

void fbas_nodes_free(uint32_t* nodes);

size_t fbas_setlist_size(const fbas_setlist* l);
size_t fbas_setlist_len(const fbas_setlist* l, size_t i);
const uint32_t* fbas_setlist_get(const fbas_setlist* l, size_t i);
void fbas_setlist_free(fbas_setlist* l);

/* ------------------------------------------------------------------ */
/* Quorum analysis                                                     */
/*                                                                     */
/* Every operation takes an optional deletion set (del may be NULL     */
/* when del_count is 0) and answers for the FBAS without those nodes.  */

/* 1 or 0; negative fbas_status on error. */
int fbas_is_quorum(const fbas_t* f, const uint32_t* nodes, size_t count,
                   const uint32_t* del, size_t del_count);

/* The iterator borrows f; keep f alive until fbas_quorums_end. */
fbas_status fbas_quorums_begin(const fbas_t* f, int minimal,
                               const uint32_t* del, size_t del_count,
                               fbas_quorum_iter** out);
/* 1 when a quorum was produced, 0 at the end, negative status on error.
 * The node array belongs to the iterator and is valid until the next call
 * on it; do not free it. */
int fbas_quorums_next(fbas_quorum_iter* it, uint32_t** nodes, size_t* count);
void fbas_quorums_end(fbas_quorum_iter* it);

/* Counts quorums; with limit > 0 stops there and reports
 * FBAS_ERR_TOO_MANY_QUORUMS. */
fbas_status fbas_quorum_count(const fbas_t* f, int minimal, uint64_t limit,
                              uint64_t* out);

/* Witness output arguments may be NULL. On a negative verdict the witness
 * holds two disjoint quorums. */
fbas_status fbas_check_intersection(const fbas_t* f, int scc_preprocessing,
                                    int* intersects, uint32_t** witness1,
                                    size_t* witness1_count,
                                    uint32_t** witness2,
                                    size_t* witness2_count);

/* Minimum pairwise quorum intersection size over minimal quorums.
 * has_value is 0 when the FBAS has only one quorum. */
fbas_status fbas_min_intersection_size(const fbas_t* f, uint64_t quorum_cap,
                                       int* has_value, uint32_t* out);

/* ------------------------------------------------------------------ */
/* Trust graph                                                         */

/* Strongly connected components plus flags. maximal and greatest refer to
 * indices into the returned list; greatest_index is -1 when absent. */
fbas_status fbas_sccs(const fbas_t* f, fbas_setlist** components,
                      uint32_t** component_of, int64_t* greatest_index,
                      uint32_t** maximal, size_t* maximal_count);

/* 1 or 0; negative status on error. */
int fbas_is_trust_cluster(const fbas_t* f, const uint32_t* nodes, size_t count);

/* The FBAS restricted to a trust cluster; node names carry over. */
fbas_status fbas_restrict(const fbas_t* f, const uint32_t* nodes, size_t count,
                          fbas_t** out);

/* The FBAS without the given nodes, materialized. */
fbas_status fbas_delete_nodes(const fbas_t* f, const uint32_t* nodes,
                              size_t count, fbas_t** out);

/* ------------------------------------------------------------------ */
/* Intactness                                                          */

/* The ill-behaved set b may befoul further nodes; intact receives the nodes
 * protected by a dispensable set. The complement of intact is the smallest
 * DSet containing b. */
fbas_status fbas_intact_nodes(const fbas_t* f, const uint32_t* b, size_t b_count,
                              uint32_t** intact, size_t* intact_count);

/* 1 or 0; negative status on error. */
int fbas_is_dset(const fbas_t* f, const uint32_t* nodes, size_t count);

/* All DSets by exhaustive subset search. The guard caps the universe size
 * (0 keeps the default of 12 nodes). */
fbas_status fbas_enumerate_dsets(const fbas_t* f, uint32_t max_nodes,
                                 fbas_setlist** out);

/* 1 or 0; negative status on error. */
int fbas_is_b_quorum(const fbas_t* f, const uint32_t* b, size_t b_count,
                     const uint32_t* q, size_t q_count);
int fbas_is_b_intact_set(const fbas_t* f, const uint32_t* b, size_t b_count,
                         const uint32_t* u, size_t u_count);
int fbas_has_subslice_property(const fbas_t* f, const uint32_t* b,
                               size_t b_count);

/* ------------------------------------------------------------------ */
/* Intactness probabilities                                            */

/* At most one node ill-behaved: p_empty plus one entry per node. */
fbas_status fbas_dist_at_most_one(const fbas_t* f, double p_empty,
                                  const double* p_single,
                                  fbas_distribution** out);
/* Independent per-node failure probabilities, one entry per node. */
fbas_status fbas_dist_independent(const fbas_t* f, const double* p,
                                  fbas_distribution** out);
/* Per-organization node failure probability q and Byzantine takeover
 * probability r, one entry per organization block of the document. */
fbas_status fbas_dist_grouped_byzantine(const fbas_t* f, const double* q,
                                        const double* r,
                                        fbas_distribution** out);
/* Explicit per-organization tables: entry e assigns probability prob[e] to
 * the subset members[offset[e]..offset[e+1]) of organization org[e]. */
fbas_status fbas_dist_grouped(const fbas_t* f, const uint32_t* org,
                              const size_t* offset, const uint32_t* members,
                              const double* prob, size_t entries,
                              fbas_distribution** out);
/* Explicit global table over ill-behaved sets, same layout. */
fbas_status fbas_dist_explicit(const fbas_t* f, const size_t* offset,
                               const uint32_t* members, const double* prob,
                               size_t entries, fbas_distribution** out);
void fbas_dist_free(fbas_distribution* d);

typedef enum fbas_prob_method
{
    FBAS_METHOD_EXACT = 0,
    FBAS_METHOD_INCLUSION_EXCLUSION = 1,
    FBAS_METHOD_MONTE_CARLO = 2
} fbas_prob_method;

typedef struct fbas_probability
{
    double p_intact;
    double p_intact_given_well_behaved;
    /* 0 when the node is ill-behaved with probability 1. */
    int conditional_defined;
    int method; /* fbas_prob_method actually used */
    uint64_t samples;
    double std_error;
} fbas_probability;

fbas_status fbas_intact_probability(const fbas_t* f, uint32_t node,
                                    const fbas_distribution* d, int method,
                                    uint64_t mc_samples, uint64_t seed,
                                    fbas_probability* out);
/* One result per node. */
fbas_status fbas_intact_probability_all(const fbas_t* f,
                                        const fbas_distribution* d,
                                        int method, uint64_t mc_samples,
                                        uint64_t seed, fbas_probability* out);

/* ------------------------------------------------------------------ */
/* Cross-checking                                                      */

/* Replays quorum enumeration and the intersection verdict against the
 * brute-force references; guarded to small instances. Sets ok to 1 on
 * agreement. */
fbas_status fbas_oracle_check(const fbas_t* f, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* FBASKIT_H */
