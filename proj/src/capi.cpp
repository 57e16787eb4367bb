#include "rbla/rbla.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "document.hpp"
#include "engine.hpp"
#include "error.hpp"
#include "report.hpp"

struct rbla_doc {
  rbla::DocumentFile file;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

rbla::EngineOptions to_options(const rbla_options* opt) {
  rbla::EngineOptions out;
  if (!opt) return out;
  if (opt->q) out.q = opt->q;
  if (opt->rep) out.rep = opt->rep;
  out.special = opt->general == 0;
  out.weak = opt->weak != 0;
  return out;
}

rbla_status give_string(const std::string& s, char** out) {
  *out = dup_string(s);
  return *out ? RBLA_OK : RBLA_E_NOMEM;
}

} // namespace

extern "C" {

const char* rbla_version(void) { return "1.0.0"; }

rbla_status rbla_parse(const char* json, rbla_doc** out, char** err) {
  if (!json || !out) {
    set_err(err, "null argument");
    return RBLA_E_INPUT;
  }
  try {
    *out = new rbla_doc{rbla::parse_document(json)};
    return RBLA_OK;
  } catch (const rbla::InputError& e) {
    set_err(err, e.what());
    return RBLA_E_INPUT;
  } catch (const std::bad_alloc&) {
    set_err(err, "out of memory");
    return RBLA_E_NOMEM;
  }
}

rbla_status rbla_serialize(const rbla_doc* doc, char** out, char** err) {
  if (!doc || !out) {
    set_err(err, "null argument");
    return RBLA_E_INPUT;
  }
  try {
    return give_string(rbla::serialize_document(doc->file), out);
  } catch (const rbla::InputError& e) {
    set_err(err, e.what());
    return RBLA_E_INPUT;
  } catch (const std::bad_alloc&) {
    set_err(err, "out of memory");
    return RBLA_E_NOMEM;
  }
}

rbla_status rbla_check(const rbla_doc* doc, const char* what,
                       const rbla_options* opt, char** out, char** err) {
  if (!doc || !what || !out) {
    set_err(err, "null argument");
    return RBLA_E_INPUT;
  }
  try {
    rbla::EngineOptions eo = to_options(opt);
    std::vector<rbla::ReportResult> results;
    results.reserve(doc->file.docs.size());
    for (const rbla::StructureDocument& item : doc->file.docs)
      results.push_back(rbla::ReportResult{{rbla::run_check(what, item, eo)}, {}});
    bool all = true;
    for (const rbla::ReportResult& r : results) all = all && r.pass();
    std::string body = doc->file.batch ? rbla::render_json(results, true)
                                       : rbla::render_json(results[0], true);
    rbla_status st = give_string(body, out);
    if (st != RBLA_OK) return st;
    return all ? RBLA_OK : RBLA_FAIL;
  } catch (const rbla::InputError& e) {
    set_err(err, e.what());
    return RBLA_E_INPUT;
  } catch (const std::bad_alloc&) {
    set_err(err, "out of memory");
    return RBLA_E_NOMEM;
  }
}

rbla_status rbla_derive(const rbla_doc* doc, const char* op,
                        const rbla_options* opt, rbla_doc** out, char** err) {
  if (!doc || !op || !out) {
    set_err(err, "null argument");
    return RBLA_E_INPUT;
  }
  if (doc->file.batch) {
    set_err(err, "derive takes a single document, not a batch");
    return RBLA_E_INPUT;
  }
  try {
    *out = new rbla_doc{rbla::run_derive(op, doc->file.docs[0], to_options(opt))};
    return RBLA_OK;
  } catch (const rbla::StructureError& e) {
    set_err(err, std::string(e.what()) + "\n" + rbla::summary(e.report()));
    return RBLA_FAIL;
  } catch (const rbla::InputError& e) {
    set_err(err, e.what());
    return RBLA_E_INPUT;
  } catch (const std::bad_alloc&) {
    set_err(err, "out of memory");
    return RBLA_E_NOMEM;
  }
}

rbla_status rbla_report(const rbla_doc* doc, const rbla_options* opt, char** out,
                        char** err) {
  if (!doc || !out) {
    set_err(err, "null argument");
    return RBLA_E_INPUT;
  }
  try {
    rbla::EngineOptions eo = to_options(opt);
    std::vector<rbla::ReportResult> results;
    results.reserve(doc->file.docs.size());
    for (const rbla::StructureDocument& item : doc->file.docs)
      results.push_back(rbla::run_report(item, eo));
    bool all = true;
    for (const rbla::ReportResult& r : results) all = all && r.pass();
    std::string body = doc->file.batch ? rbla::render_json(results, true)
                                       : rbla::render_json(results[0], true);
    rbla_status st = give_string(body, out);
    if (st != RBLA_OK) return st;
    return all ? RBLA_OK : RBLA_FAIL;
  } catch (const rbla::InputError& e) {
    set_err(err, e.what());
    return RBLA_E_INPUT;
  } catch (const std::bad_alloc&) {
    set_err(err, "out of memory");
    return RBLA_E_NOMEM;
  }
}

void rbla_doc_free(rbla_doc* doc) { delete doc; }

void rbla_str_free(char* s) { std::free(s); }

} // extern "C"
