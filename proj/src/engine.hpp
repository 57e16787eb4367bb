#pragma once

#include <string>
#include <utility>
#include <vector>

#include "document.hpp"
#include "report.hpp"

namespace rbla {

// Knobs shared by the check/derive/report entry points. q selects the
// coalgebra-side operator: a named operator, or one of the shortcuts
// "0", "-P", "-P-lid" (-(P + weight*id)), "Phat" (adjoint of P under the
// form named B). rep picks a representation block by name when a document
// holds several. special toggles the antisymmetry half of the L-dendriform
// laws; weak drops the operator-pairing half of the O-operator laws.
struct EngineOptions {
  std::string q;
  std::string rep;
  bool special = true;
  bool weak = false;
};

const std::vector<std::string>& checker_names();
const std::vector<std::string>& builder_names();

// Run one named checker against the document. Construction failures inside
// a checker surface as the embedded evidence report, not as an exception;
// unknown names and missing ingredients throw InputError.
CheckReport run_check(const std::string& what, const StructureDocument& doc,
                      const EngineOptions& opt);

// Run one named builder and wrap the results as documents. Builders whose
// hypotheses fail throw StructureError carrying the evidence.
DocumentFile run_derive(const std::string& op, const StructureDocument& doc,
                        const EngineOptions& opt);

// Everything run_report produced for one document: each applicable checker's
// report plus any product tables (title, one line per nonzero entry).
struct ReportResult {
  std::vector<CheckReport> checks;
  std::vector<std::pair<std::string, std::vector<std::string>>> tables;

  bool pass() const;
};

ReportResult run_report(const StructureDocument& doc, const EngineOptions& opt);

std::string render_text(const ReportResult& res);
std::string render_text(const std::vector<ReportResult>& items); // batch, item headers

// JSON body: one object, or {"items": [...]} for a batch. with_text embeds
// the rendered text summary under a "text" key.
std::string render_json(const ReportResult& res, bool with_text = false);
std::string render_json(const std::vector<ReportResult>& items, bool with_text = false);

} // namespace rbla
