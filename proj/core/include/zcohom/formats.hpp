#pragma once

#include "zcohom/cohomology.hpp"
#include "zcohom/resolution.hpp"

#include <string>
#include <vector>

namespace zcohom {

// ---------------------------------------------------------------- documents

/// UTF-8 JSON monoid file: element names, identity/zero names, table of names.
struct MonoidDocument {
  std::vector<std::string> elements;
  std::string identity, zero;
  std::vector<std::vector<std::string>> table;
};

MonoidDocument parse_monoid_document(const std::string& json_text);
MonoidWithZero monoid_from_document(const MonoidDocument& doc);

/// Coefficient file: {"kind": "trivial-Z" | "bar" | "zero-module" | "natural-system", ...}.
/// Matrix entries may be numbers or decimal strings (for values beyond 64 bits).
/// The resolved system must pass check_functoriality, else ParseError.
NaturalSystem coefficient_from_json(const std::string& json_text, const MonoidWithZero& m);

/// Builtin name or path to a JSON document.
MonoidWithZero resolve_monoid(const std::string& name_or_path);

/// "trivial-Z", "bar:<n>", "zero-module:z<k>:<identity|zero|#i>", or a path.
NaturalSystem resolve_coefficient(const std::string& name_or_path, const MonoidWithZero& m);

std::vector<std::string> builtin_coefficient_kinds();

// ------------------------------------------------------------------ reports

enum class ReportFormat { text, json };

ReportFormat parse_report_format(const std::string& name);

std::string render_validate_report(const MonoidWithZero& m, const std::string& monoid_label,
                                   ReportFormat format);

std::string render_nerve_report(const MonoidWithZero& m, const std::string& monoid_label,
                                std::size_t max_degree, ReportFormat format);

std::string render_cohomology_report(const MonoidWithZero& m, const std::string& monoid_label,
                                     const std::string& coefficient_label, std::size_t max_degree,
                                     const std::vector<AbelianInvariants>& groups,
                                     ReportFormat format);

std::string render_cd_report(const std::string& monoid_label, const CdReport& report,
                             ReportFormat format);

std::string render_resolution_report(const std::string& monoid_label, std::size_t max_degree,
                                     const ResolutionCheckResult& result, ReportFormat format);

std::string render_psi_report(const std::string& monoid_label,
                              const std::string& coefficient_label, std::size_t max_degree,
                              const PsiCheckResult& result, ReportFormat format);

std::string render_cancellativity_report(const MonoidWithZero& m, const std::string& monoid_label,
                                         const ZeroCancellativityResult& result,
                                         ReportFormat format);

}  // namespace zcohom
