#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bisetfun/errors.hpp"
#include "bisetfun/evaluator.hpp"
#include "bisetfun/presets.hpp"
#include "bisetfun/report.hpp"
#include "bisetfun/selftest.hpp"

using namespace bisetfun;
using nlohmann::json;

namespace {

struct Options {
  std::string field = "Q";
  unsigned long long limit = kDefaultLatticeLimit;
  unsigned long long iso_limit = kDefaultIsoLimit;
  bool verify = false;
  bool json_out = false;
};

void add_common(CLI::App *cmd, Options &opt) {
  cmd->add_option("--field", opt.field, "Coefficient field: Q or F<p>");
  cmd->add_option("--limit", opt.limit, "Subgroup lattice size limit");
  cmd->add_option("--iso-limit", opt.iso_limit,
                  "Isomorphism search size limit");
  cmd->add_flag("--verify", opt.verify,
                "Cross-check the closed formula against the rank method");
  cmd->add_flag("--json", opt.json_out, "Emit JSON instead of text");
}

KModule load_module_arg(const std::string &name, const OutGroup &out,
                        const Field &k) {
  if (name == "trivial")
    return make_trivial_module(out, k);
  if (name == "sign")
    return make_sign_module(out, k);
  std::ifstream in(name);
  if (!in)
    throw input_error("cannot open module file '" + name + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return load_module(text.str(), out, k);
}

int cmd_out(const std::string &h_spec, const Options &opt) {
  PermGroup H = parse_group(h_spec);
  OutGroup out = out_group(H, opt.iso_limit);
  const auto &els = H.elements();
  if (opt.json_out) {
    json reps = json::array();
    for (unsigned c = 0; c < out.out_order(); ++c) {
      const auto &m = out.rep(c);
      json images = json::array();
      for (const Perm &g : H.generators())
        images.push_back(els[m[static_cast<unsigned>(H.element_index(g))]]
                             .to_cycle_string());
      reps.push_back({{"index", c}, {"generator_images", images}});
    }
    std::cout << json{{"group", h_spec},
                      {"aut_order", out.aut_order()},
                      {"out_order", out.out_order()},
                      {"reps", reps}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "Out(" << h_spec << "): order " << out.out_order()
              << " (|Aut| = " << out.aut_order() << ")\n";
    for (unsigned c = 0; c < out.out_order(); ++c) {
      const auto &m = out.rep(c);
      std::cout << "  class " << c << ":";
      for (const Perm &g : H.generators())
        std::cout << " " << g.to_cycle_string() << " -> "
                  << els[m[static_cast<unsigned>(H.element_index(g))]]
                         .to_cycle_string();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_subgroups(const std::string &g_spec, const Options &opt) {
  PermGroup G = parse_group(g_spec);
  SubgroupLattice lat = subgroup_lattice(G, opt.limit);
  auto normals = normal_subgroups(lat, lat.ambient_index());
  auto is_normal = [&](std::size_t i) {
    return std::find(normals.begin(), normals.end(), i) != normals.end();
  };
  if (opt.json_out) {
    json classes = json::array();
    for (const auto &cls : lat.classes())
      classes.push_back({{"order", lat.subgroup(cls[0]).order()},
                         {"class_size", cls.size()},
                         {"normal", is_normal(cls[0])}});
    std::cout << json{{"group", g_spec},
                      {"order", G.order()},
                      {"subgroups", lat.size()},
                      {"classes", classes}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << g_spec << ": order " << G.order() << ", " << lat.size()
              << " subgroups in " << lat.classes().size()
              << " conjugacy classes\n";
    for (const auto &cls : lat.classes())
      std::cout << "  order " << lat.subgroup(cls[0]).order() << ", class of "
                << cls.size() << (is_normal(cls[0]) ? ", normal" : "") << "\n";
  }
  return 0;
}

int cmd_sections(const std::string &g_spec, const std::string &h_spec,
                 const Options &opt) {
  PermGroup G = parse_group(g_spec);
  PermGroup H = parse_group(h_spec);
  SubgroupLattice lat = subgroup_lattice(G, opt.limit);
  OutGroup out = out_group(H, opt.iso_limit);
  auto orbits = enumerate_section_orbits(G, H, lat, out, opt.iso_limit);
  if (opt.json_out)
    std::cout << sections_json(orbits).dump(2) << "\n";
  else
    std::cout << sections_text(orbits);
  return 0;
}

int cmd_eval(const std::string &g_spec, const std::string &h_spec,
             const std::string &module_name, const Options &opt,
             bool certificates_only) {
  Field k = Field::parse(opt.field);
  PermGroup G = parse_group(g_spec);
  PermGroup H = parse_group(h_spec);
  SubgroupLattice lat = subgroup_lattice(G, opt.limit);
  OutGroup out = out_group(H, opt.iso_limit);
  KModule V = load_module_arg(module_name, out, k);
  EvaluationReport rep =
      evaluate(G, H, V, lat, out, opt.verify, opt.iso_limit);
  RunInfo info{g_spec, h_spec, module_name, k.name()};
  if (certificates_only) {
    if (opt.json_out) {
      json certs = json::array();
      for (const auto &c : rep.certificates)
        certs.push_back({{"name", c.name},
                         {"nonvanishing", c.nonvanishing},
                         {"witness", c.witness}});
      std::cout << json{{"group", info.group},
                        {"minimal_group", info.minimal_group},
                        {"module", info.module_name},
                        {"field", info.field},
                        {"dim", rep.dim},
                        {"certificates", certs}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "dim = " << rep.dim << "\n";
      for (const auto &c : rep.certificates)
        std::cout << c.name << (c.nonvanishing ? " [nonvanishing]" : " [info]")
                  << ": " << c.witness << "\n";
      if (rep.certificates.empty())
        std::cout << "no certificates fired\n";
    }
  } else if (opt.json_out) {
    std::cout << report_json(info, rep).dump(2) << "\n";
  } else {
    std::cout << report_text(info, rep);
  }
  return 0;
}

int cmd_selftest(const Options &opt, bool stretch) {
  SelftestOptions st;
  st.lattice_limit = opt.limit;
  st.iso_limit = opt.iso_limit;
  st.include_stretch = stretch;
  auto results = run_selftest(st);
  bool ok = true;
  if (opt.json_out) {
    json arr = json::array();
    for (const auto &r : results) {
      arr.push_back({{"criterion", r.number},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"seconds", r.seconds},
                     {"detail", r.detail}});
      ok = ok && r.passed;
    }
    std::cout << json{{"results", arr}, {"passed", ok}}.dump(2) << "\n";
  } else {
    for (const auto &r : results) {
      std::cout << format_result(r) << "\n";
      ok = ok && r.passed;
    }
    std::cout << (ok ? "selftest: PASS" : "selftest: FAIL") << "\n";
  }
  return ok ? 0 : 3;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Vanishing and exact dimensions of evaluations S_{H,V}(G) of "
               "simple biset functors at small finite groups"};
  app.require_subcommand(1);

  Options opt;
  std::string g_spec, h_spec, module_name;
  bool stretch = false;

  auto *out_cmd = app.add_subcommand("out", "Canonical Out(H) enumeration");
  out_cmd->add_option("H", h_spec, "Minimal group spec")->required();
  add_common(out_cmd, opt);

  auto *sub_cmd = app.add_subcommand("subgroups", "Subgroup lattice summary");
  sub_cmd->add_option("G", g_spec, "Group spec")->required();
  add_common(sub_cmd, opt);

  auto *sec_cmd =
      app.add_subcommand("sections", "Section orbits (T,S) with T/S = H");
  sec_cmd->add_option("G", g_spec, "Group spec")->required();
  sec_cmd->add_option("H", h_spec, "Minimal group spec")->required();
  add_common(sec_cmd, opt);

  auto *eval_cmd =
      app.add_subcommand("eval", "Evaluate S_{H,V}(G): dimension and report");
  eval_cmd->add_option("G", g_spec, "Group spec")->required();
  eval_cmd->add_option("H", h_spec, "Minimal group spec")->required();
  eval_cmd->add_option("module", module_name,
                       "Module: trivial, sign, or a module-spec file")
      ->required();
  add_common(eval_cmd, opt);

  auto *cert_cmd =
      app.add_subcommand("certify", "Run the certificate suite only");
  cert_cmd->add_option("G", g_spec, "Group spec")->required();
  cert_cmd->add_option("H", h_spec, "Minimal group spec")->required();
  cert_cmd->add_option("module", module_name,
                       "Module: trivial, sign, or a module-spec file")
      ->required();
  add_common(cert_cmd, opt);

  auto *self_cmd =
      app.add_subcommand("selftest", "Run the full acceptance catalog");
  self_cmd->add_flag("--stretch", stretch,
                     "Also run the large optional checks (S7)");
  add_common(self_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::cerr << "note: the reported value is dim S_{H,V}(G); the biset-functor "
               "semantics assume V is a simple k Out(H)-module\n";
  try {
    if (app.got_subcommand(out_cmd))
      return cmd_out(h_spec, opt);
    if (app.got_subcommand(sub_cmd))
      return cmd_subgroups(g_spec, opt);
    if (app.got_subcommand(sec_cmd))
      return cmd_sections(g_spec, h_spec, opt);
    if (app.got_subcommand(eval_cmd))
      return cmd_eval(g_spec, h_spec, module_name, opt, false);
    if (app.got_subcommand(cert_cmd))
      return cmd_eval(g_spec, h_spec, module_name, opt, true);
    if (app.got_subcommand(self_cmd))
      return cmd_selftest(opt, stretch);
  } catch (const limit_error &e) {
    std::cerr << "limit error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error &e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const input_error &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
