// fanctl: toric intersection-theory engine over fan files.
//
// Subcommands: validate, chow, cohomology, cup, split, duality, demo-paper.
// Exit codes: 0 success, 2 invalid input or fan, 3 unsupported regime,
// 4 displacement genericity failure.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/chow.hpp"
#include "toric/engine.hpp"
#include "toric/errors.hpp"
#include "toric/fan_io.hpp"
#include "toric/intlinalg.hpp"
#include "toric/minkowski.hpp"
#include "toric/polyhedra.hpp"

using nlohmann::ordered_json;
using namespace toric;

namespace {

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const Options& opt, const ordered_json& doc,
          const std::string& text) {
  if (opt.json())
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

ordered_json group_json(const AbelianGroup& g) {
  ordered_json j;
  j["free_rank"] = g.free_rank;
  ordered_json t = ordered_json::array();
  for (const Int& x : g.torsion) t.push_back(json_int(x));
  j["torsion"] = t;
  j["pretty"] = g.to_string();
  return j;
}

std::string describe_fan(const ParsedFan& pf) {
  std::ostringstream os;
  const Fan& f = pf.fan;
  os << "fan";
  if (!pf.name.empty()) os << " '" << pf.name << "'";
  os << ": lattice rank " << f.lattice().rank << ", " << f.rays().size()
     << " rays, " << f.size() << " cones, " << f.maximal_cones().size()
     << " maximal\n";
  os << "flags: complete=" << (f.is_complete() ? "yes" : "no")
     << " affine=" << (f.is_affine() ? "yes" : "no")
     << " smooth=" << (f.is_smooth() ? "yes" : "no") << "\n";
  for (const std::string& w : pf.warnings) os << "warning: " << w << "\n";
  return os.str();
}

int cmd_validate(const Options& opt, const std::string& file) {
  ParsedFan pf = parse_fan_file(file);
  ordered_json doc;
  doc["command"] = "validate";
  doc["ok"] = true;
  doc["warnings"] = pf.warnings;
  doc["fan"] = fan_to_json(pf.fan, pf.name);
  emit(opt, doc, describe_fan(pf) + "ok\n");
  return 0;
}

int cmd_chow(const Options& opt, const std::string& file, long degree,
             bool as_codim) {
  ParsedFan pf = parse_fan_file(file);
  const Fan& f = pf.fan;
  const long n = static_cast<long>(f.lattice().rank);
  long k = as_codim ? n - degree : degree;
  if (k < 0 || k > n)
    throw DegreeOutOfRange("requested degree is outside 0..n");

  ChowPresentation p = chow_presentation(f, static_cast<std::size_t>(k));
  AbelianGroup g = cokernel(p.relations.transpose());

  ordered_json doc;
  doc["command"] = "chow";
  if (!pf.name.empty()) doc["name"] = pf.name;
  doc["lattice_rank"] = f.lattice().rank;
  doc["k"] = k;
  doc["codim"] = n - k;
  ordered_json gens = ordered_json::array();
  for (std::size_t gi : p.generators) gens.push_back(f.cone_rays(gi));
  doc["generators"] = gens;
  doc["relation_rows"] = p.relations.rows();
  doc["group"] = group_json(g);

  std::ostringstream os;
  os << "A_" << k << ": " << p.generators.size() << " generators, "
     << p.relations.rows() << " relations\n"
     << "A_" << k << " = " << g.to_string() << "\n";
  emit(opt, doc, os.str());
  return 0;
}

ordered_json report_json(const CohomologyReport& rep, const std::string& name) {
  ordered_json doc;
  doc["command"] = "cohomology";
  if (!name.empty()) doc["name"] = name;
  doc["lattice_rank"] = rep.lattice_rank;
  doc["regime"] = rep.unsupported_regime        ? "unsupported"
                  : rep.torus_rank.has_value()  ? "affine"
                                                : "complete";
  ordered_json degs = ordered_json::array();
  for (const DegreeEntry& e : rep.degrees) {
    ordered_json d;
    d["k"] = e.k;
    if (e.group)
      d["group"] = group_json(*e.group);
    else
      d["group"] = nullptr;
    d["provenance"] = provenance_name(e.provenance);
    degs.push_back(std::move(d));
  }
  doc["degrees"] = degs;
  if (rep.torus_rank) doc["torus_rank"] = *rep.torus_rank;
  if (rep.op_k0) doc["op_k0"] = *rep.op_k0;
  if (rep.equivariant) doc["equivariant"] = *rep.equivariant;
  if (rep.equivariant_k0) doc["equivariant_k0"] = *rep.equivariant_k0;
  return doc;
}

std::string report_text(const CohomologyReport& rep) {
  std::ostringstream os;
  for (const DegreeEntry& e : rep.degrees) {
    os << "A^" << e.k << "_op = "
       << (e.group ? e.group->to_string() : std::string("unsupported")) << "  ["
       << provenance_name(e.provenance) << "]\n";
  }
  if (rep.torus_rank) os << "torus factor rank: " << *rep.torus_rank << "\n";
  if (rep.op_k0) os << "op K^0 = " << *rep.op_k0 << "\n";
  if (rep.equivariant) os << "equivariant Chow ring: " << *rep.equivariant << "\n";
  if (rep.equivariant_k0) os << "equivariant op K^0 = " << *rep.equivariant_k0 << "\n";
  return os.str();
}

int cmd_cohomology(const Options& opt, const std::string& file) {
  ParsedFan pf = parse_fan_file(file);
  CohomologyReport rep = cohomology(pf.fan);
  emit(opt, report_json(rep, pf.name), report_text(rep));
  return rep.unsupported_regime ? 3 : 0;
}

ordered_json weight_json(const MinkowskiWeight& w) {
  ordered_json a = ordered_json::array();
  for (const Int& x : w.values) a.push_back(json_int(x));
  return a;
}

int cmd_cup(const Options& opt, const std::string& file, std::size_t k,
            std::size_t l, std::uint64_t seed, std::size_t max_retries) {
  ParsedFan pf = parse_fan_file(file);
  const Fan& f = pf.fan;
  const std::size_t n = f.lattice().rank;
  if (k + l > n)
    throw DegreeOutOfRange("total codimension k+l exceeds the fan dimension");

  auto bk = weight_group(f, k);
  auto bl = weight_group(f, l);
  auto bkl = weight_group(f, k + l);
  DisplacementVector dv = pick_generic_displacement(f, k, l, seed, max_retries);

  ordered_json doc;
  doc["command"] = "cup";
  if (!pf.name.empty()) doc["name"] = pf.name;
  doc["k"] = k;
  doc["l"] = l;
  doc["seed"] = seed;
  ordered_json disp = ordered_json::array();
  for (const Rat& q : dv.v) disp.push_back(q.get_str());
  doc["displacement"] = disp;
  ordered_json basis_k = ordered_json::array(), basis_l = ordered_json::array(),
               basis_kl = ordered_json::array();
  for (const auto& w : bk) basis_k.push_back(weight_json(w));
  for (const auto& w : bl) basis_l.push_back(weight_json(w));
  for (const auto& w : bkl) basis_kl.push_back(weight_json(w));
  doc["basis_k"] = basis_k;
  doc["basis_l"] = basis_l;
  doc["basis_k_plus_l"] = basis_kl;

  std::ostringstream os;
  os << "weight ranks: codim " << k << " -> " << bk.size() << ", codim " << l
     << " -> " << bl.size() << ", codim " << k + l << " -> " << bkl.size()
     << "\n";
  ordered_json sc = ordered_json::array();
  for (std::size_t i = 0; i < bk.size(); ++i)
    for (std::size_t j = 0; j < bl.size(); ++j) {
      MinkowskiWeight prod = cup_product(bk[i], bl[j], dv);
      IntVec coords = expand_in_basis(prod, bkl);
      ordered_json row;
      row["i"] = i;
      row["j"] = j;
      row["product"] = weight_json(prod);
      row["coords"] = json_vector(coords);
      sc.push_back(std::move(row));
      os << "e" << i << " * e" << j << " = [";
      for (std::size_t c = 0; c < coords.size(); ++c)
        os << (c ? "," : "") << coords[c].get_str();
      os << "]\n";
    }
  doc["structure_constants"] = sc;
  emit(opt, doc, os.str());
  return 0;
}

int cmd_split(const Options& opt, const std::string& file) {
  ParsedFan pf = parse_fan_file(file);
  const Fan& f = pf.fan;
  if (!f.is_affine())
    throw NotAffine("split applies to affine fans (a single maximal cone)");
  ConeSplit split = split_affine(f.cone(f.maximal_cones().front()));

  ordered_json doc;
  doc["command"] = "split";
  if (!pf.name.empty()) doc["name"] = pf.name;
  doc["lattice_rank"] = f.lattice().rank;
  doc["torus_rank"] = split.torus_rank;
  doc["reduced_dim"] = split.reduced_cone.dim();
  ordered_json gens = ordered_json::array();
  for (const IntVec& g : split.reduced_cone.generators())
    gens.push_back(json_vector(g));
  doc["reduced_generators"] = gens;
  ordered_json cb = ordered_json::array();
  for (std::size_t i = 0; i < split.change_of_basis.rows(); ++i)
    cb.push_back(json_vector(split.change_of_basis.row(i)));
  doc["change_of_basis"] = cb;

  std::ostringstream os;
  os << "X(sigma) = X(sigma_bar) x T_0 with torus rank " << split.torus_rank
     << "; reduced cone is full-dimensional in rank "
     << split.reduced_cone.dim() << "\n";
  emit(opt, doc, os.str());
  return 0;
}

ordered_json duality_row_json(const DualityFailureRow& row) {
  ordered_json d;
  d["k"] = row.k;
  d["chow"] = group_json(row.chow);
  d["hom"] = group_json(row.hom);
  d["cone_theorem"] = group_json(row.cone_value);
  d["disagreement"] = row.disagreement;
  return d;
}

ordered_json duality_report_json(const DualityReport& rep) {
  ordered_json d;
  d["k"] = rep.k;
  d["weight_rank"] = rep.weight_rank;
  d["hom_rank"] = rep.hom_rank;
  d["chow_k"] = group_json(rep.chow_k);
  d["chow_codim_k"] = group_json(rep.chow_codim_k);
  ordered_json divs = ordered_json::array();
  for (const Int& x : rep.pairing_divisors) divs.push_back(json_int(x));
  d["pairing_divisors"] = divs;
  d["perfect"] = rep.perfect;
  return d;
}

int cmd_duality(const Options& opt, const std::string& file, long k_opt) {
  ParsedFan pf = parse_fan_file(file);
  const Fan& f = pf.fan;
  const std::size_t n = f.lattice().rank;
  std::vector<std::size_t> ks;
  if (k_opt >= 0)
    ks.push_back(static_cast<std::size_t>(k_opt));
  else
    for (std::size_t k = 0; k <= n; ++k) ks.push_back(k);

  ordered_json doc;
  doc["command"] = "duality";
  if (!pf.name.empty()) doc["name"] = pf.name;
  std::ostringstream os;

  if (f.is_affine()) {
    doc["regime"] = "affine";
    ordered_json rows = ordered_json::array();
    for (std::size_t k : ks) {
      DualityFailureRow row = duality_failure_demo(f, k);
      rows.push_back(duality_row_json(row));
      os << "k=" << k << ": A_" << k << " = " << row.chow.to_string()
         << ", Hom(A_" << k << ", Z) = " << row.hom.to_string() << " vs A^" << k
         << "_op = " << row.cone_value.to_string()
         << (row.disagreement ? "  [DISAGREEMENT]" : "  [agree]") << "\n";
    }
    doc["rows"] = rows;
    emit(opt, doc, os.str());
    return 0;
  }
  if (f.is_complete()) {
    doc["regime"] = "complete";
    ordered_json rows = ordered_json::array();
    for (std::size_t k : ks) {
      DualityReport rep = duality_report(f, k);
      rows.push_back(duality_report_json(rep));
      os << "k=" << k << ": rank A^" << k << " = " << rep.weight_rank
         << ", rank Hom(A_" << k << ", Z) = " << rep.hom_rank << ", A_" << k
         << " = " << rep.chow_k.to_string()
         << (rep.perfect ? "  [perfect pairing]" : "  [MISMATCH]") << "\n";
    }
    doc["rows"] = rows;
    emit(opt, doc, os.str());
    return 0;
  }
  std::cerr << "fan is neither affine nor complete; no duality route applies\n";
  return 3;
}

int cmd_demo(const Options& opt) {
  // worked example: the cone over the unit square at height one
  Lattice l3{3};
  std::vector<IntVec> square = {
      {1, 0, 1}, {0, -1, 1}, {-1, 0, 1}, {0, 1, 1}};
  Fan cone_fan = Fan::from_maximal_cones(l3, {square});
  Fan line_fan = Fan::from_maximal_cones(Lattice{1}, {{{1}}});

  ordered_json doc;
  doc["command"] = "demo-paper";
  std::ostringstream os;

  AbelianGroup a2 = chow_group(cone_fan, 2);
  DualityFailureRow row2 = duality_failure_demo(cone_fan, 2);
  CohomologyReport rep = cohomology(cone_fan);

  os << "== cone over the square, rays (1,0,1),(0,-1,1),(-1,0,1),(0,1,1) ==\n";
  os << "A_2 = " << a2.to_string() << "\n";
  os << "Hom(A_2, Z) = " << row2.hom.to_string() << " vs A^2_op = "
     << row2.cone_value.to_string()
     << (row2.disagreement ? "  [DISAGREEMENT]" : "") << "\n";
  os << report_text(rep);

  doc["cone_over_square"] = ordered_json::object();
  doc["cone_over_square"]["fan"] = fan_to_json(cone_fan, "cone-over-square");
  doc["cone_over_square"]["A_2"] = group_json(a2);
  doc["cone_over_square"]["duality_k2"] = duality_row_json(row2);
  doc["cone_over_square"]["cohomology"] = report_json(rep, "cone-over-square");

  AbelianGroup a0 = chow_group(line_fan, 0);
  DualityFailureRow row0 = duality_failure_demo(line_fan, 0);
  CohomologyReport line_rep = cohomology(line_fan);
  os << "== affine line ==\n";
  os << "A_0 = " << a0.to_string() << " but A^0_op = Z"
     << (row0.disagreement ? "  [DISAGREEMENT]" : "") << "\n";
  os << report_text(line_rep);

  doc["affine_line"] = ordered_json::object();
  doc["affine_line"]["A_0"] = group_json(a0);
  doc["affine_line"]["duality_k0"] = duality_row_json(row0);
  doc["affine_line"]["cohomology"] = report_json(line_rep, "affine-line");

  emit(opt, doc, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric intersection-theory engine"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file;
  long degree = 0;
  bool as_codim = false;
  std::size_t cup_k = 0, cup_l = 0;
  std::uint64_t seed = 0;
  std::size_t max_retries = 32;
  long duality_k = -1;

  auto* validate = app.add_subcommand("validate", "parse and validate a fan file");
  validate->add_option("file", file)->required();

  auto* chow = app.add_subcommand("chow", "Chow group A_k from the fan");
  chow->add_option("file", file)->required();
  chow->add_option("--k", degree, "Chow dimension index")->required();
  chow->add_flag("--codim", as_codim, "interpret --k as a codimension");

  auto* coh = app.add_subcommand("cohomology", "operational Chow cohomology report");
  coh->add_option("file", file)->required();
  coh->add_option("--seed", seed, "accepted for interface stability; unused");
  coh->add_option("--max-retries", max_retries,
                  "accepted for interface stability; unused");

  auto* cup = app.add_subcommand("cup", "cup-product structure constants");
  cup->add_option("file", file)->required();
  cup->add_option("--k", cup_k, "first codimension")->required();
  cup->add_option("--l", cup_l, "second codimension")->required();
  cup->add_option("--seed", seed, "displacement seed");
  cup->add_option("--max-retries", max_retries, "certification retries");

  auto* split = app.add_subcommand("split", "affine splitting of the maximal cone");
  split->add_option("file", file)->required();

  auto* dual = app.add_subcommand("duality", "duality pairing report");
  dual->add_option("file", file)->required();
  dual->add_option("--k", duality_k, "single degree (default: all)");

  auto* demo = app.add_subcommand("demo-paper", "run the built-in worked example");
  (void)demo;

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt, file);
    if (chow->parsed()) return cmd_chow(opt, file, degree, as_codim);
    if (coh->parsed()) return cmd_cohomology(opt, file);
    if (cup->parsed()) return cmd_cup(opt, file, cup_k, cup_l, seed, max_retries);
    if (split->parsed()) return cmd_split(opt, file);
    if (dual->parsed()) return cmd_duality(opt, file, duality_k);
    if (demo->parsed()) return cmd_demo(opt);
  } catch (const GenericityFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const FanNotComplete& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotAffine& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
