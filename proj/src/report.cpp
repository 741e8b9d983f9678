#include "bisetfun/report.hpp"

#include <set>
#include <sstream>

namespace bisetfun {

using nlohmann::json;

std::size_t gamma_order(const SectionOrbit &orbit) {
  std::set<unsigned> classes;
  for (const auto &[g, cls] : orbit.gamma)
    classes.insert(cls);
  return classes.size();
}

namespace {

json orbit_json(const SectionOrbit &o, std::size_t index) {
  return json{{"orbit", index},
              {"t_order", o.rep.T.order()},
              {"s_order", o.rep.S.order()},
              {"orbit_size", o.orbit_size},
              {"minimal", o.minimal},
              {"normalizer_order", o.normalizer.order()},
              {"nbar_order", o.nbar_reps.size()},
              {"gamma_order", gamma_order(o)}};
}

void orbit_text(std::ostream &os, const SectionOrbit &o, std::size_t index) {
  os << "  orbit " << index << ": |T| = " << o.rep.T.order()
     << ", |S| = " << o.rep.S.order() << ", orbit size = " << o.orbit_size
     << ", minimal = " << (o.minimal ? "yes" : "no")
     << ", |N_G(T,S)| = " << o.normalizer.order()
     << ", |N-bar| = " << o.nbar_reps.size()
     << ", |Gamma| = " << gamma_order(o) << "\n";
}

} // namespace

std::string report_text(const RunInfo &info, const EvaluationReport &rep) {
  std::ostringstream os;
  os << "evaluation of S_{" << info.minimal_group << "," << info.module_name
     << "} at " << info.group << " over " << info.field << "\n";
  os << "dim = " << rep.dim << "\n";
  os << "vanishes = " << (rep.vanishes ? "yes" : "no") << "\n";
  os << "method = " << rep.method << "\n";
  os << "lower_bound = " << rep.lower_bound << "\n";
  os << "orbits = " << rep.orbits.size() << "\n";
  for (std::size_t i = 0; i < rep.orbits.size(); ++i)
    orbit_text(os, rep.orbits[i], i);
  for (const auto &t : rep.per_orbit_traces)
    os << "  trace " << t.orbit << ": dim = " << t.trace_dim
       << ", minimal = " << (t.minimal ? "yes" : "no") << "\n";
  os << "certificates = " << rep.certificates.size() << "\n";
  for (const auto &c : rep.certificates)
    os << "  " << c.name << (c.nonvanishing ? " [nonvanishing]" : " [info]")
       << ": " << c.witness << "\n";
  return os.str();
}

json report_json(const RunInfo &info, const EvaluationReport &rep) {
  json traces = json::array();
  for (const auto &t : rep.per_orbit_traces)
    traces.push_back({{"orbit", t.orbit},
                      {"minimal", t.minimal},
                      {"trace_dim", t.trace_dim}});
  json certs = json::array();
  for (const auto &c : rep.certificates)
    certs.push_back({{"name", c.name},
                     {"nonvanishing", c.nonvanishing},
                     {"witness", c.witness}});
  json orbits = json::array();
  for (std::size_t i = 0; i < rep.orbits.size(); ++i)
    orbits.push_back(orbit_json(rep.orbits[i], i));
  return json{{"group", info.group},
              {"minimal_group", info.minimal_group},
              {"module", info.module_name},
              {"field", info.field},
              {"dim", rep.dim},
              {"vanishes", rep.vanishes},
              {"method", rep.method},
              {"lower_bound", rep.lower_bound},
              {"per_orbit_traces", traces},
              {"certificates", certs},
              {"orbits", orbits}};
}

std::string sections_text(const std::vector<SectionOrbit> &orbits) {
  std::ostringstream os;
  os << "section orbits = " << orbits.size() << "\n";
  for (std::size_t i = 0; i < orbits.size(); ++i)
    orbit_text(os, orbits[i], i);
  return os.str();
}

json sections_json(const std::vector<SectionOrbit> &orbits) {
  json out = json::array();
  for (std::size_t i = 0; i < orbits.size(); ++i)
    out.push_back(orbit_json(orbits[i], i));
  return json{{"section_orbits", out}};
}

} // namespace bisetfun
