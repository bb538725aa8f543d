// Command-line front end: parse instances, compute lattices, spectra and
// topologies, emit JSON/DOT documents, and drive the verification suite.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error, 3 budget exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "znspec/analysis.hpp"
#include "znspec/verify.hpp"

namespace {

using znspec::AnalysisBudget;
using znspec::Bitset;
using znspec::CheckStatus;
using znspec::FiniteSpace;
using znspec::Instance;
using znspec::InstanceAnalysis;
using znspec::InstanceBudget;
using znspec::Json;

Json doc_header(const char* command, const InstanceAnalysis& a) {
  Json doc;
  doc["tool"] = {{"name", znspec::kToolName}, {"version", znspec::kToolVersion}};
  doc["command"] = command;
  doc["instance"] = a.inst.label();
  doc["canonical"] = a.inst.shape.label();
  return doc;
}

Json member_row(const InstanceAnalysis& a, std::uint32_t id) {
  return Json{{"id", id},
              {"size", a.lat->at(id).card},
              {"name", a.lat->member_name(id)}};
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_lattice(const InstanceAnalysis& a, const std::string& format) {
  const auto& lat = *a.lat;
  auto edges = lat.hasse_edges();
  if (format == "dot") {
    std::cout << "digraph lattice {\n  rankdir=BT;\n  label=\""
              << a.inst.label() << "\";\n";
    for (std::uint32_t i = 0; i < lat.size(); ++i)
      std::cout << "  n" << i << " [label=\"" << lat.member_name(i) << "\"];\n";
    for (auto [lo, hi] : edges)
      std::cout << "  n" << lo << " -> n" << hi << ";\n";
    std::cout << "}\n";
    return 0;
  }
  Json doc = doc_header("lattice", a);
  doc["modulus"] = a.ring.modulus;
  doc["invariant_factors"] = a.inst.shape.factors;
  doc["order"] = a.inst.shape.order();
  doc["member_count"] = lat.size();
  Json members = Json::array();
  for (std::uint32_t i = 0; i < lat.size(); ++i) members.push_back(member_row(a, i));
  doc["members"] = std::move(members);
  Json es = Json::array();
  for (auto [lo, hi] : edges) es.push_back(Json::array({lo, hi}));
  doc["hasse_edges"] = std::move(es);
  emit(doc);
  return 0;
}

int cmd_spec(const InstanceAnalysis& a, const std::string& kind) {
  Json doc = doc_header("spec", a);
  doc["kind"] = kind;
  Json members = Json::array();
  if (kind == "second") {
    for (auto l : a.spec_s.members) {
      Json row = member_row(a, l);
      row["annihilator_divisor"] = a.ann_div[l];
      row["strongly_hollow"] = a.lat->strongly_hollow(l);
      members.push_back(std::move(row));
    }
  } else {
    for (auto k : a.spec_c.members) {
      Json row = member_row(a, k);
      row["colon_divisor"] = a.colon_top[k];
      row["strongly_irreducible"] = a.lat->strongly_irreducible(k);
      members.push_back(std::move(row));
    }
  }
  doc["members"] = std::move(members);
  emit(doc);
  return 0;
}

Json space_json(const InstanceAnalysis& a, const FiniteSpace& sp,
                const znspec::Spectrum& spec) {
  Json out;
  out["kind"] = znspec::kind_name(sp.kind);
  Json closed = Json::array();
  for (const auto& c : sp.closed) {
    Json set = Json::array();
    c.for_each([&](std::size_t p) { set.push_back(spec.members[p]); });
    closed.push_back(std::move(set));
  }
  out["closed_sets"] = std::move(closed);
  Json comps = Json::array();
  for (const auto& c : znspec::irreducible_components(sp)) {
    Json comp;
    Json pts = Json::array();
    c.for_each([&](std::size_t p) { pts.push_back(member_row(a, spec.members[p])); });
    comp["points"] = std::move(pts);
    Json gen = Json::array();
    for (auto g : znspec::generic_points(sp, c))
      gen.push_back(member_row(a, spec.members[g]));
    comp["generic_points"] = std::move(gen);
    comps.push_back(std::move(comp));
  }
  out["irreducible_components"] = std::move(comps);
  znspec::TopologicalProperties p = znspec::topological_properties(sp);
  out["properties"] = Json{{"connected", p.connected},
                           {"ultraconnected", p.ultraconnected},
                           {"irreducible", p.irreducible},
                           {"t0", p.t0},
                           {"t1", p.t1},
                           {"t2", p.t2},
                           {"discrete", p.discrete},
                           {"sober", p.sober},
                           {"compact", p.compact},
                           {"noetherian", p.noetherian},
                           {"artinian", p.artinian},
                           {"finite_scale_note",
                            "compact/noetherian/artinian are degenerate on "
                            "finite spaces"}};
  return out;
}

int cmd_topology(const InstanceAnalysis& a, const std::string& side,
                 const std::string& variant) {
  Json doc = doc_header("topology", a);
  doc["side"] = side;
  doc["variant"] = variant;
  const bool second_side = side == "s";
  const znspec::Spectrum& spec = second_side ? a.spec_s : a.spec_c;
  Json pts = Json::array();
  for (auto m : spec.members) pts.push_back(member_row(a, m));
  doc["spectrum"] = std::move(pts);

  if (variant == "full") {
    const znspec::TopDecision& dec = second_side ? a.top_s : a.top_c;
    Json decision{{"is_topology", dec.is_topology}};
    if (dec.witness) {
      decision["witness"] = Json::array({member_row(a, dec.witness->first),
                                         member_row(a, dec.witness->second)});
    }
    doc["decision"] = std::move(decision);
    if (dec.is_topology)
      doc["space"] = space_json(a, second_side ? *a.z_s : *a.z_c, spec);
  } else {
    doc["space"] = space_json(a, second_side ? a.z_s_c : a.z_c_m, spec);
  }
  emit(doc);
  return 0;
}

int cmd_props(const InstanceAnalysis& a) {
  Json doc = doc_header("props", a);
  const auto& p = a.preds;
  Json rec{{"hollow", p.hollow},
           {"local", p.local},
           {"colocal", p.colocal},
           {"uniform", p.uniform},
           {"atomic", p.atomic},
           {"coatomic", p.coatomic},
           {"multiplication", p.multiplication},
           {"comultiplication", p.comultiplication},
           {"semisimple", p.semisimple},
           {"homogeneous_semisimple", p.homogeneous_semisimple},
           {"distributive", p.distributive},
           {"completely_distributive", p.completely_distributive},
           {"uniserial", p.uniserial},
           {"coprime", p.coprime},
           {"completely_coprime", p.coprime},
           {"min_property", p.min_property},
           {"max_property", p.max_property},
           {"complete_max_property", p.complete_max_property}};
  if (p.coprime_witness) rec["coprime_witness_divisor"] = *p.coprime_witness;
  doc["predicates"] = std::move(rec);
  doc["socle"] = member_row(a, p.socle);
  doc["radical"] = member_row(a, p.radical);
  doc["generalized_associated_primes"] =
      znspec::generalized_associated_primes(a.ring, *a.lat);
  Json rd = Json::array();
  for (std::uint32_t i = 0; i < a.lat->size(); ++i)
    if (znspec::relatively_divisible(a.ring, *a.lat, i))
      rd.push_back(member_row(a, i));
  doc["relatively_divisible"] = std::move(rd);
  doc["classes"] = a.hypothesis_classes();
  emit(doc);
  return 0;
}

int cmd_report(const InstanceAnalysis& a) {
  Json doc = doc_header("report", a);
  doc["modulus"] = a.ring.modulus;
  doc["invariant_factors"] = a.inst.shape.factors;
  doc["order"] = a.inst.shape.order();
  doc["member_count"] = a.lat->size();
  Json spec_s = Json::array();
  for (auto l : a.spec_s.members) spec_s.push_back(member_row(a, l));
  Json spec_c = Json::array();
  for (auto k : a.spec_c.members) spec_c.push_back(member_row(a, k));
  doc["second_spectrum"] = std::move(spec_s);
  doc["coprime_spectrum"] = std::move(spec_c);
  doc["top_s"] = a.top_s.is_topology;
  doc["top_c"] = a.top_c.is_topology;
  doc["spaces"] = Json::object();
  if (a.z_s) doc["spaces"]["xi_s"] = space_json(a, *a.z_s, a.spec_s);
  if (a.z_c) doc["spaces"]["xi_c"] = space_json(a, *a.z_c, a.spec_c);
  doc["spaces"]["xi_s_c"] = space_json(a, a.z_s_c, a.spec_s);
  doc["spaces"]["xi_c_m"] = space_json(a, a.z_c_m, a.spec_c);
  doc["classes"] = a.hypothesis_classes();
  emit(doc);
  return 0;
}

int cmd_verify(const InstanceBudget& budget, const std::string& checks_csv,
               const std::string& format) {
  std::vector<std::string> filter;
  std::size_t pos = 0;
  while (pos < checks_csv.size()) {
    std::size_t comma = checks_csv.find(',', pos);
    if (comma == std::string::npos) comma = checks_csv.size();
    if (comma > pos) filter.push_back(checks_csv.substr(pos, comma - pos));
    pos = comma + 1;
  }
  znspec::SuiteReport report = znspec::run_suite(budget, filter);
  if (format == "json") {
    emit(report.to_json());
  } else {
    Json doc = report.to_json();
    for (const auto& c : doc["summary"]["checks"]) {
      std::cout << c["id"].get<std::string>() << ": pass=" << c["pass"]
                << " vacuous=" << c["vacuous"] << " fail=" << c["fail"]
                << " skipped=" << c["skipped"];
      if (c.contains("unattainable_reason"))
        std::cout << " (hypotheses unattainable: "
                  << c["unattainable_reason"].get<std::string>() << ")";
      if (c.contains("flagged")) std::cout << " [FLAGGED: never exercised]";
      std::cout << "\n";
    }
    for (const auto& r : report.rows)
      if (r.status == CheckStatus::Fail)
        std::cout << "FAIL " << r.check_id << " on " << r.instance << " "
                  << r.witness.dump() << "\n";
    std::cout << "instances=" << report.instances.size()
              << " failures=" << report.failures() << "\n";
  }
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra and Zariski-type topologies of finite Z/nZ-modules"};
  app.require_subcommand(1);

  std::string instance_text, format = "json", kind = "second", side = "s",
              variant = "full", checks_csv;
  AnalysisBudget ab;
  InstanceBudget vb;

  auto add_instance_opts = [&](CLI::App* sub) {
    sub->add_option("instance", instance_text, "instance, e.g. n=12;M=12")
        ->required();
    sub->add_option("--max-elements", ab.element_budget, "element budget");
    sub->add_option("--max-members", ab.member_budget, "lattice member budget");
  };

  CLI::App* lattice = app.add_subcommand("lattice", "full submodule lattice");
  add_instance_opts(lattice);
  lattice->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  CLI::App* spec = app.add_subcommand("spec", "second or coprime spectrum");
  add_instance_opts(spec);
  spec->add_option("--kind", kind, "second or coprime")
      ->check(CLI::IsMember({"second", "coprime"}));

  CLI::App* topology = app.add_subcommand("topology", "spectrum topologies");
  add_instance_opts(topology);
  topology->add_option("--side", side, "s or c")->check(CLI::IsMember({"s", "c"}));
  topology->add_option("--variant", variant, "full or restricted")
      ->check(CLI::IsMember({"full", "restricted"}));

  CLI::App* props = app.add_subcommand("props", "structural predicate record");
  add_instance_opts(props);

  CLI::App* report = app.add_subcommand("report", "combined instance report");
  add_instance_opts(report);

  CLI::App* verify = app.add_subcommand("verify", "run the statement catalog");
  verify->add_option("--max-modulus", vb.max_modulus, "largest ring modulus");
  verify->add_option("--max-order", vb.max_order, "largest module order");
  verify->add_option("--max-lattice", vb.max_lattice, "largest member count");
  verify->add_option("--max-rank", vb.max_rank, "largest summand count");
  verify->add_option("--checks", checks_csv, "comma-separated check ids");
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(vb, checks_csv, format);
    Instance inst = znspec::parse_instance(instance_text);
    auto a = znspec::analyze(inst, nullptr, ab);
    if (app.got_subcommand(lattice)) return cmd_lattice(*a, format);
    if (app.got_subcommand(spec)) return cmd_spec(*a, kind);
    if (app.got_subcommand(topology)) return cmd_topology(*a, side, variant);
    if (app.got_subcommand(props)) return cmd_props(*a);
    if (app.got_subcommand(report)) return cmd_report(*a);
  } catch (const znspec::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const znspec::InvalidBudget& e) {
    std::cerr << "error: invalid budget: " << e.what() << "\n";
    return 2;
  } catch (const znspec::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
