#ifndef BISETFUN_REPORT_HPP
#define BISETFUN_REPORT_HPP

#include <string>

#include "json.hpp"

#include "bisetfun/evaluator.hpp"

namespace bisetfun {

/// Identifies the run an EvaluationReport came from, for serialization.
struct RunInfo {
  std::string group;         // G spec as given
  std::string minimal_group; // H spec as given
  std::string module_name;   // "trivial", "sign" or a file path
  std::string field;         // "Q" or "F<p>"
};

/// Number of distinct Out classes hit by an orbit's gamma map.
std::size_t gamma_order(const SectionOrbit &orbit);

std::string report_text(const RunInfo &info, const EvaluationReport &rep);
nlohmann::json report_json(const RunInfo &info, const EvaluationReport &rep);

std::string sections_text(const std::vector<SectionOrbit> &orbits);
nlohmann::json sections_json(const std::vector<SectionOrbit> &orbits);

} // namespace bisetfun

#endif
