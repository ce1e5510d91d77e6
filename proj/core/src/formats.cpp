#include "zcohom/formats.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace zcohom {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& text, const std::string& locus) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(locus, e.what());  // nlohmann reports the byte position
  }
}

const json& field(const json& j, const char* key, const std::string& locus) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(locus, std::string("missing field \"") + key + "\"");
  return *it;
}

Int to_int(const json& v, const std::string& locus) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(locus, "not a decimal integer: \"" + v.get<std::string>() + "\"");
    }
  }
  throw ParseError(locus, "expected an integer (number or decimal string)");
}

IntMatrix to_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& locus) {
  if (!v.is_array() || v.size() != rows)
    throw ParseError(locus, "expected a matrix with " + std::to_string(rows) + " rows");
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(locus, "row " + std::to_string(i) + " must have " + std::to_string(cols) +
                                  " entries");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = to_int(row[j], locus);
  }
  return out;
}

json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return json(static_cast<long long>(v));
  return json(v.str());
}

PresentedAbelianGroup group_from_json(const json& v, const std::string& locus) {
  if (!v.is_object()) throw ParseError(locus, "expected a group object");
  if (v.contains("rank")) {
    std::size_t rank = field(v, "rank", locus).get<std::size_t>();
    const json& rel = field(v, "relations", locus);
    std::size_t cols = rel.empty() ? 0 : rel[0].size();
    return PresentedAbelianGroup{rank, to_matrix(rel, rank, cols, locus + ".relations")};
  }
  std::size_t free_rank = v.contains("free_rank") ? v["free_rank"].get<std::size_t>() : 0;
  std::vector<Int> torsion;
  if (v.contains("invariant_factors"))
    for (const json& d : v["invariant_factors"]) {
      Int factor = to_int(d, locus + ".invariant_factors");
      if (factor < 2) throw ParseError(locus, "invariant factors must be >= 2");
      torsion.push_back(factor);
    }
  return PresentedAbelianGroup::from_invariants(free_rank, torsion);
}

ElementId element_by_name(const MonoidWithZero& m, const std::string& name,
                          const std::string& locus) {
  for (ElementId a = 0; a < m.size(); ++a)
    if (m.name_of(a) == name) return a;
  throw ParseError(locus, "unknown element name \"" + name + "\"");
}

json invariants_to_json(const AbelianInvariants& inv) {
  json torsion = json::array();
  for (const Int& d : inv.torsion) torsion.push_back(int_to_json(d));
  return json{{"free_rank", inv.free_rank}, {"torsion", torsion}, {"text", inv.to_string()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

MonoidDocument parse_monoid_document(const std::string& json_text) {
  json j = parse_json(json_text, "monoid document");
  const std::string locus = "monoid document";
  MonoidDocument doc;
  for (const json& e : field(j, "elements", locus)) doc.elements.push_back(e.get<std::string>());
  doc.identity = field(j, "identity", locus).get<std::string>();
  doc.zero = field(j, "zero", locus).get<std::string>();
  const json& table = field(j, "table", locus);
  if (!table.is_array() || table.size() != doc.elements.size())
    throw ParseError(locus, "table must have one row per element (got " +
                                std::to_string(table.size()) + " rows for " +
                                std::to_string(doc.elements.size()) + " elements)");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const json& row = table[i];
    if (!row.is_array() || row.size() != doc.elements.size())
      throw ParseError(locus, "table row " + std::to_string(i) + " must have " +
                                  std::to_string(doc.elements.size()) + " entries");
    std::vector<std::string> names;
    for (const json& cell : row) names.push_back(cell.get<std::string>());
    doc.table.push_back(std::move(names));
  }
  return doc;
}

MonoidWithZero monoid_from_document(const MonoidDocument& doc) {
  const std::string locus = "monoid document";
  std::vector<std::vector<ElementId>> table;
  MonoidWithZero lookup;  // names only, for element_by_name
  lookup.names = doc.elements;
  for (std::size_t i = 0; i < doc.table.size(); ++i) {
    std::vector<ElementId> row;
    for (std::size_t k = 0; k < doc.table[i].size(); ++k)
      row.push_back(element_by_name(lookup, doc.table[i][k],
                                    locus + ".table[" + std::to_string(i) + "][" +
                                        std::to_string(k) + "]"));
    table.push_back(std::move(row));
  }
  return validate(doc.elements, element_by_name(lookup, doc.identity, locus + ".identity"),
                  element_by_name(lookup, doc.zero, locus + ".zero"), table);
}

NaturalSystem coefficient_from_json(const std::string& json_text, const MonoidWithZero& m) {
  const std::string locus = "coefficient document";
  json j = parse_json(json_text, locus);
  const std::string kind = field(j, "kind", locus).get<std::string>();

  NaturalSystem d;
  if (kind == "trivial-Z") {
    d = trivial_Z(m);
  } else if (kind == "bar") {
    d = bar_system(m, field(j, "degree", locus).get<std::size_t>());
  } else if (kind == "zero-module") {
    ZeroModule z;
    z.group = group_from_json(field(j, "group", locus), locus + ".group");
    z.label = j.contains("label") ? j["label"].get<std::string>() : "zero-module:file";
    const json& action = field(j, "action", locus);
    for (auto it = action.begin(); it != action.end(); ++it) {
      ElementId s = element_by_name(m, it.key(), locus + ".action");
      z.action[s] = to_matrix(it.value(), z.group.rank, z.group.rank,
                              locus + ".action[" + it.key() + "]");
    }
    if (!z.action.count(m.identity)) z.action[m.identity] = IntMatrix::identity(z.group.rank);
    try {
      d = from_zero_module(m, z);
    } catch (const BadAction& e) {
      throw ParseError(locus, e.what());
    }
  } else if (kind == "natural-system") {
    d.label = j.contains("label") ? j["label"].get<std::string>() : "natural-system:file";
    const json& objects = field(j, "objects", locus);
    for (auto it = objects.begin(); it != objects.end(); ++it) {
      ElementId a = element_by_name(m, it.key(), locus + ".objects");
      d.value.emplace(a, group_from_json(it.value(), locus + ".objects[" + it.key() + "]"));
    }
    for (const json& entry : field(j, "left", locus)) {
      ElementId alpha = element_by_name(m, field(entry, "alpha", locus).get<std::string>(), locus);
      ElementId a = element_by_name(m, field(entry, "object", locus).get<std::string>(), locus);
      ElementId b = m.mul(alpha, a);
      if (m.is_zero(b)) throw ParseError(locus + ".left", "map given for a zero product");
      d.left[{alpha, a}] = to_matrix(field(entry, "matrix", locus), d.at(b).rank, d.at(a).rank,
                                     locus + ".left.matrix");
    }
    for (const json& entry : field(j, "right", locus)) {
      ElementId a = element_by_name(m, field(entry, "object", locus).get<std::string>(), locus);
      ElementId beta = element_by_name(m, field(entry, "beta", locus).get<std::string>(), locus);
      ElementId b = m.mul(a, beta);
      if (m.is_zero(b)) throw ParseError(locus + ".right", "map given for a zero product");
      d.right[{a, beta}] = to_matrix(field(entry, "matrix", locus), d.at(b).rank, d.at(a).rank,
                                     locus + ".right.matrix");
    }
  } else {
    throw ParseError(locus, "unknown kind \"" + kind + "\"");
  }

  try {
    require_functorial(m, d);
  } catch (const Error& e) {
    throw ParseError(locus, e.what());
  }
  return d;
}

MonoidWithZero resolve_monoid(const std::string& name_or_path) {
  for (const std::string& name : builtin_monoid_names())
    if (name == name_or_path) return builtin_monoid(name);
  if (std::filesystem::exists(name_or_path))
    return monoid_from_document(parse_monoid_document(read_file(name_or_path)));
  std::string known;
  for (const std::string& name : builtin_monoid_names()) known += " " + name;
  throw ParseError(name_or_path, "not a builtin monoid and not a file; builtins are:" + known);
}

NaturalSystem resolve_coefficient(const std::string& name_or_path, const MonoidWithZero& m) {
  if (name_or_path == "trivial-Z") return trivial_Z(m);
  if (name_or_path.rfind("bar:", 0) == 0) {
    try {
      return bar_system(m, std::stoul(name_or_path.substr(4)));
    } catch (const std::logic_error&) {
      throw ParseError(name_or_path, "expected bar:<degree>");
    }
  }
  if (name_or_path.rfind("zero-module:z", 0) == 0) {
    const std::string rest = name_or_path.substr(std::string("zero-module:z").size());
    const std::size_t colon = rest.find(':');
    if (colon != std::string::npos) {
      Int order;
      try {
        order = Int(rest.substr(0, colon));
      } catch (const std::exception&) {
        throw ParseError(name_or_path, "expected zero-module:z<order>:<action>");
      }
      if (order < 2) throw ParseError(name_or_path, "cyclic order must be >= 2");
      for (const ZeroModule& z :
           enumerate_zero_modules(m, PresentedAbelianGroup::cyclic(order)))
        if (z.label == name_or_path) return from_zero_module(m, z);
      throw ParseError(name_or_path,
                       "no such action on this monoid (try :identity, :zero or :#<index>)");
    }
  }
  if (std::filesystem::exists(name_or_path))
    return coefficient_from_json(read_file(name_or_path), m);
  throw ParseError(name_or_path,
                   "not a builtin coefficient and not a file; builtin kinds are: trivial-Z, "
                   "bar:<n>, zero-module:z<k>:<identity|zero|#i>");
}

std::vector<std::string> builtin_coefficient_kinds() {
  return {"trivial-Z", "bar:<n>", "zero-module:z<k>:identity", "zero-module:z<k>:zero",
          "zero-module:z<k>:#<i>"};
}

// ------------------------------------------------------------------ reports

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  throw ParseError(name, "format must be \"text\" or \"json\"");
}

std::string render_validate_report(const MonoidWithZero& m, const std::string& monoid_label,
                                   ReportFormat format) {
  if (format == ReportFormat::json) {
    json j{{"command", "validate"},
           {"monoid", monoid_label},
           {"elements", m.size()},
           {"identity", m.name_of(m.identity)},
           {"zero", m.name_of(m.zero)},
           {"valid", true}};
    return dump(j);
  }
  std::ostringstream os;
  os << "monoid " << monoid_label << ": valid (" << m.size() << " elements, identity \""
     << m.name_of(m.identity) << "\", zero \"" << m.name_of(m.zero) << "\")\n";
  return os.str();
}

std::string render_nerve_report(const MonoidWithZero& m, const std::string& monoid_label,
                                std::size_t max_degree, ReportFormat format) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 0; n <= max_degree; ++n) sizes.push_back(nerve(m, n).size());
  if (format == ReportFormat::json) {
    json j{{"command", "nerve"}, {"monoid", monoid_label}, {"elements", m.size()}};
    j["sizes"] = sizes;
    return dump(j);
  }
  std::ostringstream os;
  os << "monoid " << monoid_label << " (" << m.size() << " elements)\n";
  for (std::size_t n = 0; n <= max_degree; ++n) os << "|Ner_" << n << "| = " << sizes[n] << "\n";
  return os.str();
}

std::string render_cohomology_report(const MonoidWithZero& m, const std::string& monoid_label,
                                     const std::string& coefficient_label, std::size_t max_degree,
                                     const std::vector<AbelianInvariants>& groups,
                                     ReportFormat format) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) sizes.push_back(nerve(m, n).size());
  if (format == ReportFormat::json) {
    json j{{"command", "cohomology"},
           {"monoid", monoid_label},
           {"elements", m.size()},
           {"coefficients", coefficient_label},
           {"max_degree", max_degree}};
    j["nerve_sizes"] = sizes;
    json gs = json::array();
    for (std::size_t n = 0; n < groups.size(); ++n) {
      json g = invariants_to_json(groups[n]);
      g["degree"] = n;
      gs.push_back(std::move(g));
    }
    j["groups"] = gs;
    return dump(j);
  }
  std::ostringstream os;
  os << "monoid " << monoid_label << " (" << m.size() << " elements), coefficients "
     << coefficient_label << "\n";
  os << "nerve sizes:";
  for (std::size_t n = 0; n < sizes.size(); ++n) os << " |Ner_" << n << "|=" << sizes[n];
  os << "\n";
  for (std::size_t n = 0; n < groups.size(); ++n)
    os << "H^" << n << " = " << groups[n].to_string() << "\n";
  return os.str();
}

std::string render_cd_report(const std::string& monoid_label, const CdReport& report,
                             ReportFormat format) {
  if (format == ReportFormat::json) {
    json j{{"command", "cd-probe"}, {"monoid", monoid_label}, {"max_degree", report.max_degree}};
    json entries = json::array();
    for (const CdEntry& e : report.entries) {
      json g = invariants_to_json(e.group);
      entries.push_back(json{{"coefficient", e.coefficient}, {"degree", e.degree}, {"group", g}});
    }
    j["entries"] = entries;
    j["any_nonzero"] = report.any_nonzero;
    j["verdict"] = report.verdict;
    return dump(j);
  }
  std::ostringstream os;
  os << "cd-probe: monoid " << monoid_label << ", degrees 2.." << report.max_degree << "\n";
  for (const CdEntry& e : report.entries)
    os << "  " << e.coefficient << "  H^" << e.degree << " = " << e.group.to_string() << "\n";
  os << "verdict: " << report.verdict << "\n";
  return os.str();
}

std::string render_resolution_report(const std::string& monoid_label, std::size_t max_degree,
                                     const ResolutionCheckResult& result, ReportFormat format) {
  if (format == ReportFormat::json) {
    json j{{"command", "resolution-check"},
           {"monoid", monoid_label},
           {"max_degree", max_degree},
           {"objects_checked", result.objects_checked},
           {"ok", result.ok}};
    j["failures"] = result.failures;
    return dump(j);
  }
  std::ostringstream os;
  os << "resolution-check: monoid " << monoid_label << ", bar complex through degree "
     << max_degree << "\n";
  if (result.ok) {
    os << "naturality, ∂∂ = 0, ε∂ = 0 and exactness hold at all " << result.objects_checked
       << " objects, positions 0.." << (max_degree - 1) << "\n";
  } else {
    for (const std::string& f : result.failures) os << "FAIL: " << f << "\n";
  }
  return os.str();
}

std::string render_psi_report(const std::string& monoid_label,
                              const std::string& coefficient_label, std::size_t max_degree,
                              const PsiCheckResult& result, ReportFormat format) {
  if (format == ReportFormat::json) {
    json j{{"command", "psi-check"},
           {"monoid", monoid_label},
           {"coefficients", coefficient_label},
           {"max_degree", max_degree},
           {"ok", result.ok}};
    json degrees = json::array();
    for (const PsiDegreeInfo& info : result.degrees)
      degrees.push_back(json{{"degree", info.degree},
                             {"hom_group", invariants_to_json(info.hom_group)},
                             {"cochain_group", invariants_to_json(info.cochain_group)},
                             {"hom_cohomology", invariants_to_json(info.hom_cohomology)},
                             {"cochain_cohomology", invariants_to_json(info.cochain_cohomology)}});
    j["degrees"] = degrees;
    j["failures"] = result.failures;
    return dump(j);
  }
  std::ostringstream os;
  os << "psi-check: monoid " << monoid_label << ", coefficients " << coefficient_label
     << ", degrees 0.." << max_degree << "\n";
  for (const PsiDegreeInfo& info : result.degrees)
    os << "  degree " << info.degree << ": Hom = " << info.hom_group.to_string()
       << ", C^n = " << info.cochain_group.to_string()
       << "; H(Hom) = " << info.hom_cohomology.to_string()
       << ", H(C) = " << info.cochain_cohomology.to_string() << "\n";
  if (result.ok)
    os << "Ψ is a degreewise isomorphism and a chain map; cohomology agrees on both sides\n";
  else
    for (const std::string& f : result.failures) os << "FAIL: " << f << "\n";
  return os.str();
}

std::string render_cancellativity_report(const MonoidWithZero& m, const std::string& monoid_label,
                                         const ZeroCancellativityResult& result,
                                         ReportFormat format) {
  if (format == ReportFormat::json) {
    json j{{"command", "zero-cancellative"},
           {"monoid", monoid_label},
           {"zero_cancellative", result.cancellative}};
    if (result.witness) {
      const CancellationWitness& w = *result.witness;
      j["witness"] = json{{"a", m.name_of(w.a)},
                          {"b", m.name_of(w.b)},
                          {"x", m.name_of(w.x)},
                          {"side", w.right ? "right" : "left"}};
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "monoid " << monoid_label << ": "
     << (result.cancellative ? "0-cancellative" : "not 0-cancellative") << "\n";
  if (result.witness) {
    const CancellationWitness& w = *result.witness;
    if (w.right)
      os << "witness: " << m.name_of(w.a) << "·" << m.name_of(w.x) << " = " << m.name_of(w.b)
         << "·" << m.name_of(w.x) << " = " << m.name_of(m.mul(w.a, w.x)) << " ≠ "
         << m.name_of(m.zero) << " but " << m.name_of(w.a) << " ≠ " << m.name_of(w.b) << "\n";
    else
      os << "witness: " << m.name_of(w.x) << "·" << m.name_of(w.a) << " = " << m.name_of(w.x)
         << "·" << m.name_of(w.b) << " = " << m.name_of(m.mul(w.x, w.a)) << " ≠ "
         << m.name_of(m.zero) << " but " << m.name_of(w.a) << " ≠ " << m.name_of(w.b) << "\n";
  }
  return os.str();
}

}  // namespace zcohom
