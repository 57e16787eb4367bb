#ifndef RBLA_H
#define RBLA_H

/* C interface to the structure checker. Documents are opaque handles;
 * strings returned through out-parameters are malloc'd and must be released
 * with rbla_str_free. Every function is safe to call from any thread as long
 * as no two threads touch the same handle at once. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rbla_status {
  RBLA_OK = 0,      /* success; for checks: every law holds */
  RBLA_FAIL = 1,    /* a check ran and found violations */
  RBLA_E_INPUT = 2, /* malformed document, unknown name, missing ingredient */
  RBLA_E_NOMEM = 3
} rbla_status;

/* A parsed document: one structure, or a batch of them. */
typedef struct rbla_doc rbla_doc;

/* Optional knobs, all zero/null by default. q names the coalgebra-side
 * operator, or one of the shortcuts "0", "-P", "-P-lid", "Phat"; rep picks a
 * representation block by name. general drops the antisymmetry half of the
 * L-dendriform laws; weak drops the pairing half of the O-operator laws. */
typedef struct rbla_options {
  const char* q;
  const char* rep;
  int general;
  int weak;
} rbla_options;

const char* rbla_version(void);

/* Parse JSON bytes into a document handle. On failure *err (when non-null)
 * receives a message with the offending path. */
rbla_status rbla_parse(const char* json, rbla_doc** out, char** err);

/* Render a document back to JSON. Round-trips exactly. */
rbla_status rbla_serialize(const rbla_doc* doc, char** out, char** err);

/* Run one named checker over every item in the document. *out receives the
 * report as JSON with an embedded "text" summary; a batch wraps per-item
 * reports under "items". opt may be null. */
rbla_status rbla_check(const rbla_doc* doc, const char* what,
                       const rbla_options* opt, char** out, char** err);

/* Run one named builder on a single (non-batch) document. *out receives a
 * new handle holding the derived document or batch. When the builder's
 * hypotheses fail, returns RBLA_FAIL with the evidence in *err. */
rbla_status rbla_derive(const rbla_doc* doc, const char* op,
                        const rbla_options* opt, rbla_doc** out, char** err);

/* Run every applicable checker plus the product tables. Same output shape
 * as rbla_check. */
rbla_status rbla_report(const rbla_doc* doc, const rbla_options* opt,
                        char** out, char** err);

void rbla_doc_free(rbla_doc* doc);
void rbla_str_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RBLA_H */
