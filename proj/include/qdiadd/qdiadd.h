// Copyright 2026 The qdiadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIADD_QDIADD_H_
#define QDIADD_QDIADD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QDIADD_API __declspec(dllexport)
#else
#define QDIADD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdiadd_status {
  QDIADD_OK = 0,
  QDIADD_ERR_ARGUMENT = 1,
  QDIADD_ERR_CONFIG = 2,
  QDIADD_ERR_PARSE = 3,
  QDIADD_ERR_INVALID_NETLIST = 4,
  QDIADD_ERR_SIMULATION = 5,
  QDIADD_ERR_INTERNAL = 6,
} qdiadd_status;

/* Message of the last failing call on this thread ("" if none). */
QDIADD_API const char* qdiadd_last_error(void);
QDIADD_API const char* qdiadd_status_name(qdiadd_status status);
QDIADD_API const char* qdiadd_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
QDIADD_API void qdiadd_string_free(char* s);

typedef struct qdiadd_netlist qdiadd_netlist;

typedef enum qdiadd_arch {
  QDIADD_ARCH_FA = 0,
  QDIADD_ARCH_SOL = 1,
  QDIADD_ARCH_RCA = 2,
  QDIADD_ARCH_SCBCLG = 3,
  QDIADD_ARCH_SCBCLA = 4,
  QDIADD_ARCH_RCLA = 5,
  QDIADD_ARCH_CD = 6, /* completion detector */
} qdiadd_arch;

typedef struct qdiadd_design {
  qdiadd_arch arch;
  int width;            /* RCA, SCBCLA, RCLA */
  int section;          /* SCBCLG, SCBCLA, RCLA */
  int alias;            /* SCBCLG, SCBCLA */
  int hybrid_rca_width; /* SCBCLA, RCLA */
  int pairs;            /* completion detector */
} qdiadd_design;

/* 32-bit SCBCLA, m = 4, no alias, no hybrid, 33 pairs. */
QDIADD_API void qdiadd_design_init(qdiadd_design* design);
QDIADD_API qdiadd_status qdiadd_parse_arch(const char* name, qdiadd_arch* out);

QDIADD_API qdiadd_status qdiadd_generate(const qdiadd_design* design,
                                         qdiadd_netlist** out);
QDIADD_API qdiadd_status qdiadd_parse(const char* text, qdiadd_netlist** out);
QDIADD_API void qdiadd_netlist_free(qdiadd_netlist* netlist);

QDIADD_API qdiadd_status qdiadd_emit(const qdiadd_netlist* netlist,
                                     char** text);
QDIADD_API qdiadd_status qdiadd_netlist_name(const qdiadd_netlist* netlist,
                                             char** name);
/* Pair and gate counts. Any out-pointer may be NULL. */
QDIADD_API qdiadd_status qdiadd_netlist_shape(const qdiadd_netlist* netlist,
                                              size_t* inputs, size_t* outputs,
                                              size_t* gates);

/* *ok = 1 when no rule is violated; report lists violations and notes. */
QDIADD_API qdiadd_status qdiadd_validate(const qdiadd_netlist* netlist,
                                         int* ok, char** report);
QDIADD_API qdiadd_status qdiadd_census(const qdiadd_netlist* netlist,
                                       long* transistors, int* gates,
                                       char** text);
/* Unit-delay longest input-to-output path. */
QDIADD_API qdiadd_status qdiadd_longest_path(const qdiadd_netlist* netlist,
                                             double* depth, char** text);
QDIADD_API int qdiadd_structurally_equal(const qdiadd_netlist* a,
                                         const qdiadd_netlist* b);

typedef enum qdiadd_mutation {
  QDIADD_MUT_SWAP_SUM_RAILS = 0,
  QDIADD_MUT_DROP_C_ELEMENT = 1,
  QDIADD_MUT_DROP_OR_TERM = 2,
} qdiadd_mutation;

/* target may be NULL for the default site. */
QDIADD_API qdiadd_status qdiadd_mutate(const qdiadd_netlist* netlist,
                                       qdiadd_mutation mutation,
                                       const char* target,
                                       qdiadd_netlist** out);

typedef enum qdiadd_delay_mode {
  QDIADD_DELAY_UNIT = 0,
  QDIADD_DELAY_RANDOM = 1,
  QDIADD_DELAY_TABLE = 2,
} qdiadd_delay_mode;

typedef struct qdiadd_delay {
  qdiadd_delay_mode mode;
  uint64_t seed;
  double min_delay;
  double max_delay;
  /* QDIADD_DELAY_TABLE: one delay per cell kind, in the order
     INV BUF AND2 AND3 AND4 OR2 OR3 OR4 AO22 ALIAS C2 C3. */
  double table[12];
} qdiadd_delay;

QDIADD_API void qdiadd_delay_init(qdiadd_delay* delay);

typedef enum qdiadd_format {
  QDIADD_FORMAT_TEXT = 0,
  QDIADD_FORMAT_CSV = 1,
  QDIADD_FORMAT_JSON = 2,
} qdiadd_format;

QDIADD_API qdiadd_status qdiadd_parse_format(const char* name,
                                             qdiadd_format* out);

/* Vector text is "a_hex,b_hex,cin_bit" per line. */
QDIADD_API qdiadd_status qdiadd_random_vectors(int width, size_t count,
                                               uint64_t seed, char** text);
QDIADD_API qdiadd_status qdiadd_exhaustive_vectors(int width, char** text);

/* Runs DATA/RTZ cycles for each vector. *failures counts cycles with a
   wrong or incomplete result or any error finding. */
QDIADD_API qdiadd_status qdiadd_simulate(const qdiadd_netlist* netlist,
                                         const qdiadd_delay* delay,
                                         const char* vectors,
                                         qdiadd_format format, char** report,
                                         size_t* failures);

/* Event trace (time,net,value) of one DATA phase followed by one RTZ
   phase. */
QDIADD_API qdiadd_status qdiadd_trace(const qdiadd_netlist* netlist,
                                      const qdiadd_delay* delay, uint64_t a,
                                      uint64_t b, int cin, char** csv);

typedef struct qdiadd_verify_options {
  int exhaustive;         /* all 2^(2n+1) vectors, n <= 12 */
  size_t random;          /* seeded random vectors for the oracle */
  const char* vectors;    /* vector text for the oracle, may be NULL */
  int alias;              /* alias equivalence: 0 off, 1 on */
  size_t fuzz_trials;     /* 0: no fuzzing */
  uint64_t seed;
  double min_delay;
  double max_delay;
  unsigned threads;       /* 0: hardware concurrency */
} qdiadd_verify_options;

QDIADD_API void qdiadd_verify_options_init(qdiadd_verify_options* options);

/* *failures counts failing checks. */
QDIADD_API qdiadd_status qdiadd_verify(const qdiadd_netlist* netlist,
                                       const qdiadd_verify_options* options,
                                       qdiadd_format format, char** report,
                                       size_t* failures);

/* Early-output probe. phase 0 = DATA (held inputs stay NULL), 1 = RTZ
   (held inputs stay valid). held is a comma-separated label list. */
QDIADD_API qdiadd_status qdiadd_probe(const qdiadd_netlist* netlist,
                                      int phase, uint64_t a, uint64_t b,
                                      int cin, const char* held,
                                      int* witness, char** text);

/* Unit-delay latency matrix of the Group4 analogues (plus the Group3 ones
   unless group4_only). */
QDIADD_API qdiadd_status qdiadd_bench(int group4_only, size_t random,
                                      uint64_t seed,
                                      const qdiadd_delay* delay,
                                      qdiadd_format format, char** report,
                                      size_t* failures);

/* Percentage and area-identity reproduction. reference is table text or
   NULL for the bundled rows. */
QDIADD_API qdiadd_status qdiadd_report(const char* reference,
                                       qdiadd_format format, char** report,
                                       size_t* failures);
QDIADD_API qdiadd_status qdiadd_bundled_reference(char** text);

#ifdef __cplusplus
}
#endif

#endif  // QDIADD_QDIADD_H_
