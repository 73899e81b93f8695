#include "bvalg/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bvalg/bv.hpp"
#include "bvalg/dsl.hpp"
#include "bvalg/fixtures.hpp"
#include "bvalg/homology.hpp"
#include "bvalg/lie.hpp"

namespace bvalg {

namespace {

using nlohmann::json;

/// Invalid input detected after parsing (wrong mode, wrong shift, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rendered_json(const RenderedElement& e) {
  json arr = json::array();
  for (const auto& [m, c] : e)
    arr.push_back(json::array({m, c}));
  return arr;
}

} // namespace

std::string rendered_text(const RenderedElement& e) {
  if (e.empty())
    return "0";
  std::string modulus;
  std::string out;
  for (const auto& [m, c0] : e) {
    std::string c = c0;
    if (auto pos = c.find(" (mod "); pos != std::string::npos) {
      modulus = c.substr(pos + 1);
      c = c.substr(0, pos);
    }
    bool negative = !c.empty() && c[0] == '-';
    std::string mag = negative ? c.substr(1) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m == "1")
      out += mag;
    else
      out += (mag == "1" ? "" : mag + "*") + m;
  }
  if (!modulus.empty())
    out += " " + modulus;
  return out;
}

void write_human(const Report& report, std::ostream& out) {
  for (const auto& v : report.verdicts) {
    out << v.check << ": " << status_name(v.status) << " (checked " << v.checked << ", skipped " << v.skipped
        << ")";
    if (!v.note.empty())
      out << " " << v.note;
    out << '\n';
    if (const auto& c = v.certificate) {
      out << "  inputs:";
      for (const auto& i : c->inputs)
        out << ' ' << i;
      out << '\n';
      if (!c->lhs_label.empty())
        out << "  " << c->lhs_label << " = " << rendered_text(c->lhs) << '\n';
      if (!c->rhs_label.empty())
        out << "  " << c->rhs_label << " = " << rendered_text(c->rhs) << '\n';
      if (!c->note.empty())
        out << "  " << c->note << '\n';
    }
  }
  for (const auto& v : report.values) {
    if (v.defined)
      out << v.label << " = " << rendered_text(v.value);
    else
      out << v.label << " undefined";
    if (!v.note.empty())
      out << " (" << v.note << ")";
    out << '\n';
  }
  if (report.skipped() > 0)
    out << "coverage: " << report.coverage().get_str() << " (" << report.checked() << " of "
        << report.checked() + report.skipped() << " instances)\n";
  if (!report.betti.empty()) {
    out << "betti:";
    for (const auto& b : report.betti)
      out << ' ' << (b ? std::to_string(*b) : "?");
    out << '\n';
  }
  for (const auto& n : report.notes)
    out << "note: " << n << '\n';
  out << (report.passed() ? "result: pass" : "result: FAIL") << '\n';
}

std::string to_json(const Report& report) {
  json verdicts = json::array(), certificates = json::array(), values = json::array(), betti = json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"check", v.check},
                        {"status", status_name(v.status)},
                        {"checked", std::to_string(v.checked)},
                        {"skipped", std::to_string(v.skipped)},
                        {"note", v.note}});
    if (const auto& c = v.certificate)
      certificates.push_back({{"check", c->check},
                              {"inputs", c->inputs},
                              {"lhs_label", c->lhs_label},
                              {"lhs", rendered_json(c->lhs)},
                              {"rhs_label", c->rhs_label},
                              {"rhs", rendered_json(c->rhs)},
                              {"note", c->note}});
  }
  for (const auto& v : report.values)
    values.push_back({{"label", v.label},
                      {"defined", v.defined},
                      {"value", v.defined ? rendered_json(v.value) : json(nullptr)},
                      {"note", v.note}});
  for (const auto& b : report.betti)
    betti.push_back(b ? json(std::to_string(*b)) : json(nullptr));
  json j = {{"verdicts", verdicts},  {"certificates", certificates},
            {"coverage", report.coverage().get_str()}, {"betti", betti},
            {"values", values},      {"notes", report.notes},
            {"result", report.passed() ? "pass" : "fail"}};
  return j.dump(2) + "\n";
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NamedValue named(const std::string& label, const FreeAlgebra& alg, const Partial& p) {
  NamedValue v;
  v.label = label;
  if (!p.defined()) {
    v.defined = false;
    v.note = "needs " + p.blocker;
    return v;
  }
  v.value = render_terms(alg, *p);
  if (p->out_of_window())
    v.note = "out of window: terms above degree " + std::to_string(alg.max_degree()) + " dropped";
  return v;
}

Report lie_report(const LiePresentation& lie) {
  Report r = check_lie_axioms(lie);
  if (r.passed() && lie.has_differential())
    r.merge(check_differential(lie));
  return r;
}

Report structure_report(const BVStructure& s, int D) {
  if (const LiePresentation* lie = s.lie()) {
    Report r = lie_report(*lie);
    if (!r.passed())
      return r;
    r.merge(verify_bv_axioms(s, D));
    if (s.has_bv())
      r.merge(verify_free_identities(s, D));
    return r;
  }
  return verify_bv_axioms(s, D);
}

Report descriptor_report(const StructureDescriptor& d) {
  Report r;
  r.notes.push_back("n = " + std::to_string(d.n) + " over " + d.field.name());
  r.notes.push_back(std::string("e_n bracket of degree ") + std::to_string(d.n - 1) + ": present");
  r.notes.push_back(d.bv ? "BV operator of degree " + std::to_string(d.bv_degree) + ": present"
                         : std::string("BV operator: absent"));
  for (const auto& g : d.generators) {
    std::string role = g.defines_bv ? "defines BV" : (g.action_trivial ? "acts trivially" : "acts nontrivially");
    r.notes.push_back("generator " + g.id + " (degree " + std::to_string(g.degree) + "): " + role);
  }
  r.notes.push_back(std::string("BV vanishes on spherical classes: ") + (d.spherical_vanishing ? "yes" : "not guaranteed"));
  r.notes.insert(r.notes.end(), d.notes.begin(), d.notes.end());
  return r;
}

Report fixture_report(const std::string& name, int D, bool verify) {
  Fixture f = resolve_fixture(name, D);
  Report r;
  if (f.descriptor)
    return descriptor_report(*f.descriptor);
  if (f.lie && !f.structure) {
    for (const auto& g : f.lie->generators())
      r.notes.push_back("generator " + g.id + " of degree " + std::to_string(g.degree));
    for (const auto& [key, v] : f.lie->bracket_table())
      r.notes.push_back("{" + f.lie->generators()[key.first].id + "," + f.lie->generators()[key.second].id +
                        "} = " + f.lie->render(v));
    if (verify)
      r.merge(lie_report(*f.lie));
    return r;
  }
  const BVStructure& s = *f.structure;
  const FreeAlgebra& alg = s.algebra();
  StructureEvaluator ev(s);
  for (const auto& g : alg.generators())
    r.notes.push_back("generator " + g.id + " of degree " + std::to_string(g.degree));
  if (!s.has_bv())
    r.notes.push_back("e_" + std::to_string(s.shift()) + "-algebra: no BV operator");
  for (std::size_t g = 0; g < alg.generator_count(); ++g) {
    if (!s.has_bv())
      break;
    Monomial m = alg.letter_monomial(g);
    if (m.degree() > alg.max_degree())
      continue;
    r.values.push_back(named("BV(" + alg.generator(g).id + ")", alg, ev.bv(m)));
  }
  if (name == "omega2-s3-f2") {
    SphericalTag tag = omega2_s3_f2_tag(s);
    r.values.push_back(named("spherical BV of hur(ad2(" + tag.witness + "))", alg, spherical_bv(tag, alg.field())));
    GradedMap diag = omega2_s3_f2_bv_diag(s);
    Monomial u1 = alg.letter_monomial(*alg.find("u1"));
    NamedValue v = named("BV_diag(u1)", alg,
                         diag.value(u1) ? Partial::of(*diag.value(u1)) : Partial::undefined("BV_diag(u1)"));
    v.note += (v.note.empty() ? "" : "; ") + std::string("by equivariance, not computed");
    r.values.push_back(v);
  }
  if (verify) {
    Report checks = s.lie() ? structure_report(s, D) : verify_bv_axioms(s, D);
    r.merge(checks);
    if (s.provenance() == Provenance::Free && s.has_bv()) {
      CheckTally vanish("bv-vanishes-on-generators");
      for (std::size_t g = 0; g < alg.generator_count(); ++g) {
        Monomial m = alg.letter_monomial(g);
        if (m.degree() + s.bv_degree() > alg.max_degree()) {
          vanish.skip();
          continue;
        }
        Partial v = ev.bv(m);
        if (v.defined() && v->is_zero()) {
          vanish.pass();
        } else {
          Certificate c;
          c.inputs = {alg.generator(g).id};
          c.lhs_label = "BV(x)";
          if (v.defined())
            c.lhs = render_terms(alg, *v);
          c.rhs_label = "0";
          vanish.fail(std::move(c));
        }
      }
      r.add(vanish);
    }
  }
  return r;
}

int default_ce_degree(const PresentationSource& p) {
  if (p.truncate)
    return *p.truncate;
  // Exterior on generators of odd desuspended degree: the top degree is finite.
  int top = 0;
  for (const auto& g : p.generators) {
    int d = g.degree + 1;
    if (d % 2 == 0)
      return 10;
    top += d;
  }
  return top;
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << to_json(r);
  else
    write_human(r, out);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact e_n / BV_n algebra checker", "bvalg"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.fallthrough();

  std::string file, apply, lhs, rhs, fixture_name, field_name = "Q";
  int max_degree = -1, desc_n = 2;
  bool verify = false;

  auto* check_lie = app.add_subcommand("check-lie", "Lie axioms and differential of a presentation");
  check_lie->add_option("file", file)->required();
  auto* check_bv = app.add_subcommand("check-bv", "e_n and BV axioms of a structure");
  check_bv->add_option("file", file)->required();
  check_bv->add_option("--max-degree", max_degree, "Truncation degree");
  auto* free_cmd = app.add_subcommand("free-bv", "Apply the free BV operator");
  free_cmd->add_option("file", file)->required();
  free_cmd->add_option("--apply", apply, "Element to apply BV to")->required();
  auto* bracket_cmd = app.add_subcommand("bracket", "Evaluate the e_n bracket");
  bracket_cmd->add_option("file", file)->required();
  bracket_cmd->add_option("a", lhs)->required();
  bracket_cmd->add_option("b", rhs)->required();
  auto* ce_cmd = app.add_subcommand("ce-homology", "Betti numbers of the Chevalley-Eilenberg complex");
  ce_cmd->add_option("file", file)->required();
  ce_cmd->add_option("--max-degree", max_degree, "Truncation degree");
  auto* fixture_cmd = app.add_subcommand("fixture", "Built-in fixtures");
  fixture_cmd->add_option("name", fixture_name)->required();
  fixture_cmd->add_option("--max-degree", max_degree, "Truncation degree");
  fixture_cmd->add_flag("--verify", verify, "Run the axiom suite");
  auto* desc_cmd = app.add_subcommand("descriptor", "Structure of fD_n-algebras");
  desc_cmd->add_option("--n", desc_n)->required();
  desc_cmd->add_option("--field", field_name);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  auto started = std::chrono::steady_clock::now();
  Report report;
  try {
    auto load = [&]() { return parse_presentation(read_file(file)); };
    if (*check_lie) {
      PresentationSource p = load();
      if (p.bv_mode())
        throw InputError("check-lie needs a Lie presentation; this file gives BV values");
      report = lie_report(to_lie_presentation(p));
    } else if (*check_bv) {
      PresentationSource p = load();
      int D = max_degree >= 0 ? max_degree : p.max_degree();
      BVStructure s = to_structure(p, D);
      report = structure_report(s.with_max_degree(D), D);
    } else if (*free_cmd) {
      PresentationSource p = load();
      if (p.bv_mode())
        throw InputError("free-bv needs a Lie presentation");
      if (p.shift % 2 != 0)
        throw InputError("free BV needs an even shift, got n=" + std::to_string(p.shift));
      LiePresentation lie = to_lie_presentation(p);
      report = lie_report(lie);
      if (report.passed()) {
        BVStructure s = BVStructure::free(lie, p.max_degree());
        Element a = parse_element(apply, s.algebra());
        report.values.push_back(named("BV(" + apply + ")", s.algebra(), Partial::of(free_bv(a, s))));
      }
    } else if (*bracket_cmd) {
      PresentationSource p = load();
      BVStructure s = to_structure(p);
      Element a = parse_element(lhs, s.algebra());
      Element b = parse_element(rhs, s.algebra());
      report.values.push_back(named("{" + lhs + "," + rhs + "}", s.algebra(), poisson_bracket(a, b, s)));
    } else if (*ce_cmd) {
      PresentationSource p = load();
      if (p.bv_mode() || p.shift != 0)
        throw InputError("ce-homology needs a Lie presentation with shift n=0");
      LiePresentation lie = to_lie_presentation(p);
      report = lie_report(lie);
      if (report.passed()) {
        int D = max_degree >= 0 ? max_degree : default_ce_degree(p);
        ChainComplex c = build_ce_complex(lie, D);
        report.betti = betti(c);
      }
    } else if (*fixture_cmd) {
      report = fixture_report(fixture_name, max_degree >= 0 ? max_degree : 10, verify);
    } else if (*desc_cmd) {
      report = descriptor_report(fd_descriptor(desc_n, FieldSpec::parse(field_name)));
    }
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics)
      err << file << ":" << d.line << ":" << d.column << ": " << d.message << '\n';
    return kExitInputError;
  } catch (const InconsistentStructure& e) {
    report.add(Verdict{"bv-well-defined", Status::Fail, 1, 0, e.certificate, e.what()});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  emit(report, format, out);
  return report.passed() ? kExitPass : kExitAxiomFailure;
}

} // namespace bvalg
