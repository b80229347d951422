#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "e6kit/boundary.hpp"
#include "e6kit/degeneration.hpp"
#include "e6kit/divisors.hpp"
#include "e6kit/incidence.hpp"
#include "e6kit/nodal.hpp"
#include "e6kit/verify.hpp"
#include "e6kit/weyl.hpp"

using namespace e6kit;
using json = nlohmann::ordered_json;

namespace {

struct Result {
  json data = json::object();
  std::ostringstream text;
  bool pass = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Preset name or a root-list file.
std::vector<Root> load_roots(const std::string& arg) {
  if (arg == "thm-dominance") return dominance_preset();
  for (const auto& p : section_presets())
    if (p.name == arg) return p.roots;
  return parse_root_list(read_file(arg));
}

CoverTree load_tree(const std::string& arg) {
  if (arg == "paired" || arg == "caterpillar") return build_tree(parse_tree_shape(arg));
  return tree_from_json(read_file(arg));
}

json labels(const std::vector<Root>& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back(r.label());
  return a;
}

json matrix(const IntMatrix& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    a.push_back(r);
  }
  return a;
}

json partition_json(const OrbitPartition& p) {
  json a = json::array();
  for (const auto& b : p.blocks) {
    json blk = json::array();
    for (int s : b) blk.push_back(line_label(s));
    a.push_back(blk);
  }
  return a;
}

// ---------------------------------------------------------------------------

void cmd_weyl_classes(Result& r, bool fast) {
  auto classes = fast ? e6_classes_fast() : e6_classes();
  json arr = json::array();
  r.text << "class  order  det  size   cycle type          inv_dim\n";
  long total = 0;
  for (const auto& c : classes) {
    total += c.size;
    arr.push_back({{"name", c.name},
                   {"order", c.order},
                   {"det", c.det},
                   {"size", c.size},
                   {"cycle_type", partition_string(c.cycle_type)},
                   {"inv_dim", c.inv_dim}});
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-6s %-6d %-4d %-6ld %-19s %d\n", c.name.c_str(), c.order, c.det, c.size,
                  partition_string(c.cycle_type).c_str(), c.inv_dim);
    r.text << buf;
  }
  r.text << "order " << total << ", " << classes.size() << " classes\n";
  r.data["order"] = total;
  r.data["classes"] = arr;
  r.pass = total == 51840 && classes.size() == 25;
}

void cmd_weyl_table1(Result& r) {
  json arr = json::array();
  for (const auto& row : table1()) {
    json j = {{"name", row.name},
              {"reflections", row.computed_counts},
              {"printed_reflections", row.printed_counts},
              {"partition", row.computed_partition},
              {"printed_partition", row.printed_partition},
              {"lcm", row.lcm_computed.get_str()},
              {"inv_mu", to_string(row.inv_mu_computed)},
              {"printed_inv_mu", row.printed_inv_mu},
              {"inv_mu_of_printed_partition", to_string(row.inv_mu_from_printed)},
              {"ok", row.ok()}};
    arr.push_back(j);
    r.text << row.name << "  i=" << json(row.computed_counts).dump() << "  " << row.computed_partition
           << "  lcm " << row.lcm_computed.get_str() << "  1/mu " << to_string(row.inv_mu_computed);
    if (!row.partition_match) r.text << "  [printed partition " << row.printed_partition << "]";
    if (!row.inv_mu_match)
      r.text << "  [printed 1/mu " << row.printed_inv_mu << ", recomputed " << to_string(row.inv_mu_from_printed)
             << (row.flagged ? ", flagged" : "") << "]";
    if (!row.counts_match) r.text << "  [printed i " << json(row.printed_counts).dump() << "]";
    r.text << "\n";
    r.pass = r.pass && (row.ok() || (row.flagged && row.counts_match && row.partition_match && row.lcm_match));
  }
  r.data["table1"] = arr;
}

void cmd_incidence(Result& r, bool eigen) {
  const auto& d = build_incidence();
  if (!eigen) {
    json m = json::array();
    r.text << "line";
    for (int t = 0; t < kLineCount; ++t) r.text << "," << line_label(t);
    r.text << "\n";
    for (int s = 0; s < kLineCount; ++s) {
      r.text << line_label(s);
      json row = json::array();
      for (int t = 0; t < kLineCount; ++t) {
        r.text << "," << d[s][t];
        row.push_back(d[s][t]);
      }
      r.text << "\n";
      m.push_back(row);
    }
    r.data["incidence"] = m;
    return;
  }
  auto e = eigenspaces_on_ker_deg();
  r.data["dim_plus1"] = e.dim_plus1;
  r.data["dim_minus5"] = e.dim_minus5;
  r.data["basis_minus5"] = matrix(e.basis_minus5);
  r.text << "on ker(deg): dim(+1) = " << e.dim_plus1 << ", dim(-5) = " << e.dim_minus5 << "\n";
  r.pass = e.dim_plus1 == 20 && e.dim_minus5 == 6;
}

void cmd_monodromy(Result& r, const std::string& roots_arg, const std::string& tree_arg, const std::string& base) {
  auto roots = load_roots(roots_arg);
  auto tree = load_tree(tree_arg);
  if (!base.empty()) tree = with_base(tree, tree.vertex(base));
  auto cert = dominance_certificate(roots, tree);
  r.data["roots"] = labels(roots);
  r.data["tree"] = tree.shape;
  r.data["kernel_basis"] = matrix(cert.kernel.basis);
  json ms = json::array();
  for (const auto& m : cert.normalized) ms.push_back(matrix(m));
  r.data["normalized_matrices"] = ms;
  r.data["det"] = cert.det.get_str();
  r.data["nonzero"] = cert.nonzero;
  r.data["matches_4096"] = cert.matches_target;
  if (!cert.note.empty()) r.data["note"] = cert.note;
  r.text << "roots: " << labels(roots).dump() << "\ntree: " << tree.shape << "\ndet = " << cert.det.get_str()
         << (cert.matches_target ? "  (|det| = 2^12)" : "") << "\n";
  if (!cert.note.empty()) r.text << "note: " << cert.note << "\n";
  r.pass = cert.pass();
}

WeylElement parse_word(const std::string& text) {
  WeylElement w = WeylElement::identity();
  for (const auto& r : parse_root_list(text)) w = w * reflection(r);
  return w;
}

OrbitPartition partition_arg(const std::string& text) {
  if (text == "trivial") return OrbitPartition::trivial();
  if (text == "discrete") return OrbitPartition::discrete();
  return orbits(parse_root_list(text));
}

void cmd_boundary_orbits(Result& r, const std::string& roots_arg) {
  auto roots = load_roots(roots_arg);
  auto p = orbits(roots);
  auto type = sublattice_type(roots);
  r.data["roots"] = labels(roots);
  r.data["type"] = type.dynkin;
  r.data["degrees"] = p.degrees();
  r.data["orbits"] = partition_json(p);
  r.text << "type " << type.dynkin << " (rank " << type.rank << ")\ndegrees " << json(p.degrees()).dump() << "\n"
         << p.str() << "\n";
}

void cmd_boundary_toric(Result& r, const std::string& u, const std::string& a, const std::string& b) {
  WeylElement w = u.empty() ? WeylElement::identity() : parse_word(u);
  int t = toric_rank(w, partition_arg(a), partition_arg(b));
  r.data["toric_rank"] = t;
  r.text << "toric rank " << t << "\n";
}

void cmd_boundary_table2(Result& r) {
  const auto& ref = table2_reference();
  json arr = json::array();
  for (const auto& [name, d] : invariant_dim_table()) {
    bool ok = ref.at(name) == d;
    arr.push_back({{"name", name}, {"inv_dim", d}, {"printed", ref.at(name)}, {"ok", ok}});
    r.text << name << "  " << d << (ok ? "" : "  [printed " + std::to_string(ref.at(name)) + "]") << "\n";
    r.pass = r.pass && ok;
  }
  r.data["table2"] = arr;
}

void cmd_boundary_table3(Result& r) {
  json arr = json::array();
  for (const auto& c : compare_table3()) {
    arr.push_back({{"name", c.row->name},
                   {"type", c.type.dynkin},
                   {"degrees", c.computed.degrees()},
                   {"printed_degrees", c.row->printed_degrees},
                   {"orbits", partition_json(c.computed)},
                   {"degrees_match", c.degrees_match},
                   {"contents_match", c.contents_match},
                   {"flagged", c.row->flagged_typo},
                   {"notes", c.notes}});
    r.text << c.row->name << "  degrees " << json(c.computed.degrees()).dump()
           << (c.degrees_match ? "" : " [mismatch]") << (c.contents_match ? "" : "  contents differ")
           << (c.row->flagged_typo ? " (flagged row)" : "") << "\n";
    for (const auto& n : c.notes) r.text << "    " << n << "\n";
    r.pass = r.pass && c.degrees_match && (c.contents_match || c.row->flagged_typo);
  }
  r.data["table3"] = arr;
}

void cmd_boundary_el(Result& r) {
  json arr = json::array();
  for (const auto& c : toric_rank_table()) {
    int want = c.name == "E6" ? 1 : 0;
    arr.push_back({{"name", c.name},
                   {"completing_root", c.completing_root.label()},
                   {"connected", c.connected},
                   {"toric_rank", c.toric_rank},
                   {"expected", want}});
    r.text << c.name << "  +" << c.completing_root.label() << "  toric rank " << c.toric_rank
           << (c.toric_rank == want ? "" : "  [expected " + std::to_string(want) + "]")
           << (c.connected ? "" : "  (not connected)") << "\n";
    r.pass = r.pass && c.toric_rank == want;
  }
  auto d5 = d5_example_configuration();
  int t = toric_rank(d5.u, d5.a, d5.b);
  arr.push_back({{"name", "D5 example"}, {"toric_rank", t}, {"expected", 0}});
  r.text << "D5 example  toric rank " << t << "\n";
  r.pass = r.pass && t == 0;
  r.data["toric_ranks"] = arr;
}

json space_json(const SectionSpace& s, bool basis) {
  json j = {{"unknowns", s.ambient_dim}, {"rank", s.constraint_rank}, {"dim", s.dim}};
  if (!s.warnings.empty()) j["warnings"] = s.warnings;
  if (basis) {
    json b = json::array();
    for (const auto& v : s.basis) {
      json row = json::array();
      for (const auto& x : v) row.push_back(to_string(x));
      b.push_back(row);
    }
    j["basis"] = b;
  }
  return j;
}

void cmd_sections(Result& r, const std::string& preset, const std::string& roots_arg, const std::string& points,
                  const std::string& mode, bool basis) {
  std::vector<Root> roots;
  std::vector<Rat> q;
  if (!preset.empty()) {
    const auto& p = section_preset(preset);
    roots = p.roots;
    q = p.points;
  } else {
    if (roots_arg.empty()) throw InputError("sections: give --preset or --roots");
    roots = load_roots(roots_arg);
    if (points.empty()) {
      for (int i = 1; i <= static_cast<int>(roots.size()); ++i) q.emplace_back(i);
    } else {
      q = parse_points(points);
    }
  }
  auto c = build_curve(roots, q);
  r.data["roots"] = labels(roots);
  r.data["genus"] = c.genus();
  r.data["connected"] = c.dual_graph_connected();
  r.text << "genus " << c.genus() << (c.dual_graph_connected() ? "" : " (dual graph not connected)") << "\n";
  auto run = [&](SectionKind k) {
    if (mode != "all" && mode != to_string(k)) return;
    SectionSpace s;
    switch (k) {
      case SectionKind::Omega:
        s = h0_omega(c, basis);
        break;
      case SectionKind::OmegaSquared:
        s = h0_omega_sq(c, basis);
        break;
      case SectionKind::TwoOmegaMinus5L:
        s = h0_2omega_minus_5L(c, basis);
        break;
      case SectionKind::L:
        s = h0_L(c, basis);
        break;
    }
    r.data[to_string(k)] = space_json(s, basis);
    r.text << to_string(k) << ": " << s.ambient_dim << " unknowns, rank " << s.constraint_rank << ", h0 = " << s.dim
           << "\n";
    for (const auto& w : s.warnings) r.text << "  warning: " << w << "\n";
  };
  static const std::vector<std::string> modes = {"omega", "omega2", "2k5l", "L", "petri", "all"};
  if (std::find(modes.begin(), modes.end(), mode) == modes.end()) throw InputError("unknown mode '" + mode + "'");
  for (auto k : {SectionKind::Omega, SectionKind::OmegaSquared, SectionKind::TwoOmegaMinus5L, SectionKind::L}) run(k);
  if (mode == "petri" || mode == "all") {
    auto p = petri_check(c);
    r.data["petri"] = {{"dim_omega", p.dim_omega},
                       {"dim_q", p.dim_sub_q},
                       {"dim_inv_q", p.dim_sub_inv_q},
                       {"dim_minus5", p.dim_sub_minus5},
                       {"span", p.span_dim},
                       {"injective", p.injective}};
    r.text << "petri: dims " << p.dim_sub_q << ", " << p.dim_sub_inv_q << ", " << p.dim_sub_minus5 << "; span "
           << p.span_dim << " of " << p.dim_omega << (p.injective ? " (injective)" : " (not injective)") << "\n";
  }
}

void cmd_divisors_verify(Result& r) {
  json arr = json::array();
  for (const auto& id : verify_identities()) {
    arr.push_back({{"name", id.name},
                   {"relation", id.relation},
                   {"derived", id.derived.str()},
                   {"stated", id.stated.str()},
                   {"ok", id.ok},
                   {"note", id.note}});
    r.text << (id.ok ? "PASS " : "FAIL ") << id.name << ": " << id.derived.str();
    if (id.relation != "=") r.text << " " << id.relation << " " << id.stated.str();
    if (!id.note.empty()) r.text << "  (" << id.note << ")";
    r.text << "\n";
    r.pass = r.pass && id.ok;
  }
  r.data["identities"] = arr;
}

void cmd_divisors_eval(Result& r, const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  json arr = json::array();
  auto rules = g_level_rules();
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    DivisorClass d;
    try {
      d = parse_divisor(line);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(' ') + 1), ln, e.column);
    }
    auto v = substitute(d, rules);
    arr.push_back({{"input", d.str()}, {"value", v.str()}});
    r.text << d.str() << "  =  " << v.str() << "\n";
  }
  r.data["results"] = arr;
}

void cmd_verify(Result& r, bool fast, int only) {
  VerifyOptions opt;
  opt.fast = fast;
  std::vector<Check> checks;
  if (only > 0)
    checks = run_criterion(only, opt);
  else
    checks = verify_paper(opt);
  json arr = json::array(), failures = json::array();
  for (int k = 1; k <= kCriteria; ++k) {
    if (only > 0 && k != only) continue;
    bool ok = criterion_passed(checks, k);
    r.text << (ok ? "PASS" : "FAIL") << " criterion " << k << "\n";
    for (const auto& c : checks) {
      if (c.criterion != k) continue;
      r.text << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      json j = {{"criterion", c.criterion}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
      arr.push_back(j);
      if (!c.pass) failures.push_back(j);
    }
    r.pass = r.pass && ok;
  }
  r.data["checks"] = arr;
  r.data["failures"] = failures;
  r.data["pass"] = r.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E6 lattice, monodromy and divisor-class toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--out", out_path, "Write output to a file");

  auto* weyl = app.add_subcommand("weyl", "Weyl group classes");
  weyl->require_subcommand(1);
  bool fast = false;
  auto* w_classes = weyl->add_subcommand("classes", "Conjugacy classes");
  w_classes->add_flag("--fast", fast, "Use the frozen invariant table");
  auto* w_table1 = weyl->add_subcommand("table1", "Products of reflections");

  auto* inc = app.add_subcommand("incidence", "Incidence matrix of the 27 lines");
  inc->require_subcommand(1);
  auto* inc_dump = inc->add_subcommand("dump", "CSV dump");
  auto* inc_eigen = inc->add_subcommand("eigen", "Eigenspaces on ker(deg)");

  auto* mono = app.add_subcommand("monodromy", "Degeneration determinant");
  std::string roots_arg = "thm-dominance", tree_arg = "paired", base;
  mono->add_option("--roots", roots_arg, "Preset name or root-list file");
  mono->add_option("--tree", tree_arg, "paired, caterpillar or a JSON file");
  mono->add_option("--base", base, "Base vertex name");

  auto* bnd = app.add_subcommand("boundary", "Boundary orbits and toric ranks");
  bnd->require_subcommand(1);
  std::string b_roots, u_word, a_part = "trivial", b_part = "trivial";
  auto* b_orbits = bnd->add_subcommand("orbits", "Orbits of a reflection subgroup");
  b_orbits->add_option("--roots", b_roots, "Preset name or root-list file")->required();
  auto* b_toric = bnd->add_subcommand("toric-rank", "Toric rank of Gamma(u, A, B)");
  b_toric->add_option("--u", u_word, "Reflection word, e.g. \"a:1,2 a:3,4\"");
  b_toric->add_option("--a", a_part, "trivial, discrete or generating roots of A");
  b_toric->add_option("--b", b_part, "trivial, discrete or generating roots of B");
  auto* b_table2 = bnd->add_subcommand("table2", "Invariant dimensions");
  auto* b_table3 = bnd->add_subcommand("table3", "Sublattice orbits against the printed table");
  auto* b_el = bnd->add_subcommand("el", "Toric ranks of the E_L configurations");

  auto* sec = app.add_subcommand("sections", "Sections on the nodal curve");
  std::string preset, s_roots, points, mode = "all";
  bool with_basis = false;
  sec->add_option("--preset", preset, "thm-2k5 or thm-petri");
  sec->add_option("--roots", s_roots, "Root-list file");
  sec->add_option("--points", points, "Comma-separated q_i");
  sec->add_option("--mode", mode, "omega, omega2, 2k5l, L, petri or all");
  sec->add_flag("--basis", with_basis, "Include bases");

  auto* div = app.add_subcommand("divisors", "Divisor class identities");
  div->require_subcommand(1);
  auto* d_verify = div->add_subcommand("verify", "Run the identity ledger");
  std::string expr;
  auto* d_eval = div->add_subcommand("eval", "Evaluate expressions with the built-in rules");
  d_eval->add_option("--expr", expr, "File with one expression per line")->required();

  auto* ver = app.add_subcommand("verify-paper", "Run every acceptance check");
  int only = 0;
  ver->add_flag("--fast", fast, "Skip the full group enumeration");
  ver->add_option("--criterion", only, "Run one criterion")->check(CLI::Range(1, kCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Result r;
  try {
    if (w_classes->parsed()) cmd_weyl_classes(r, fast);
    else if (w_table1->parsed()) cmd_weyl_table1(r);
    else if (inc_dump->parsed()) cmd_incidence(r, false);
    else if (inc_eigen->parsed()) cmd_incidence(r, true);
    else if (mono->parsed()) cmd_monodromy(r, roots_arg, tree_arg, base);
    else if (b_orbits->parsed()) cmd_boundary_orbits(r, b_roots);
    else if (b_toric->parsed()) cmd_boundary_toric(r, u_word, a_part, b_part);
    else if (b_table2->parsed()) cmd_boundary_table2(r);
    else if (b_table3->parsed()) cmd_boundary_table3(r);
    else if (b_el->parsed()) cmd_boundary_el(r);
    else if (sec->parsed()) cmd_sections(r, preset, s_roots, points, mode, with_basis);
    else if (d_verify->parsed()) cmd_divisors_verify(r);
    else if (d_eval->parsed()) cmd_divisors_eval(r, expr);
    else if (ver->parsed()) cmd_verify(r, fast, only);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CyclicRules& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string output = as_json ? r.data.dump(2) + "\n" : r.text.str();
  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << output;
  }
  return r.pass ? 0 : 1;
}
