#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "suturant/algebra.hpp"
#include "suturant/diagram.hpp"
#include "suturant/errors.hpp"
#include "suturant/foxcalc.hpp"
#include "suturant/invariant.hpp"
#include "suturant/kuperberg.hpp"
#include "suturant/moves.hpp"

using namespace suturant;

namespace {

std::map<std::string, int64_t> parse_chars(const std::string& text) {
  std::map<std::string, int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--char", "expected key=value, got " + item);
    try {
      out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--char", "bad value in " + item);
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("IOError", "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string approx_str(const Cyclotomic& z) {
  auto c = z.approx();
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << "approx " << c.real() << (c.imag() < 0 ? " - " : " + ")
     << std::abs(c.imag()) << "i (floating point, approximate)";
  return os.str();
}

std::string exps_str(const AbelianGroup& g, const H1Character& chi) {
  auto names = g.coordinate_names();
  std::string s;
  for (size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i] + "=" + std::to_string(chi.exps[i]);
  return s.empty() ? "trivial" : s;
}

struct ComputeArgs {
  std::string file, engine = "fox", algebra = "hn", chars, multipoint, offset, sign = "+1";
  int n = 0, m = 0, order = 0;
  bool eval_float = false, all_chars = false;
};

int run_compute(const ComputeArgs& a) {
  ExtendedDiagram d = load_diagram(a.file);
  auto rep = validate(d);
  if (!rep.ok()) throw Error("InvalidDiagram", rep.violations.front());
  GroupPtr g = homology_ptr(d);
  Multipoint ref;
  if (!a.multipoint.empty()) {
    ref = named_multipoint(d, a.multipoint);
  } else {
    auto all = enumerate_multipoints(d);
    if (all.empty()) throw Error("NoMultipoint", "diagram has no multipoint");
    ref = all.front();
  }
  SpincRelative spinc = make_spinc(d, g, ref, parse_word(a.offset));
  OrientationSign orient = OrientationSign::parse(a.sign);
  HopfPackage pkg;
  int n = a.n;
  if (a.algebra == "hn") {
    if (n < 1) throw CLI::ValidationError("--n", "--algebra hn needs --n >= 1");
    pkg = build_hn(n);
  } else {
    if (a.m < 1) throw CLI::ValidationError("--m", "--algebra cyclic needs --m >= 1");
    if (a.engine == "fox") throw CLI::ValidationError("--engine", "the fox engine needs --algebra hn");
    pkg = build_cyclic_group_algebra(a.m);
  }
  int order = a.order > 0 ? a.order : (a.algebra == "hn" ? n : 1);
  auto value_of = [&](const H1Character& chi) {
    if (a.algebra == "hn")
      return invariant_hn(d, n, chi, spinc, orient, a.engine == "fox" ? Engine::Fox : Engine::Tensor);
    return invariant_package(d, pkg, chi, spinc, orient);
  };
  if (a.all_chars) {
    for (const auto& chi : all_characters(*g, order)) {
      if (a.algebra == "hn") {
        bool ok = true;
        for (const auto& id : g->generators) ok = ok && generator_exponent(*g, chi, id) * n % order == 0;
        if (!ok) continue;
      }
      Cyclotomic z = value_of(chi);
      std::cout << exps_str(*g, chi) << ": " << z.str() << "\n";
    }
    return 0;
  }
  H1Character chi = solve_character(*g, parse_chars(a.chars), order);
  Cyclotomic z = value_of(chi);
  std::cout << z.str() << "\n";
  if (a.eval_float) std::cout << approx_str(z) << "\n";
  return 0;
}

int run_axioms(const std::string& algebra, int n, int m) {
  HopfPackage pkg;
  if (algebra == "hn") {
    if (n < 1) throw CLI::ValidationError("--n", "--algebra hn needs --n >= 1");
    pkg = build_hn(n);
  } else {
    if (m < 1) throw CLI::ValidationError("--m", "--algebra cyclic needs --m >= 1");
    pkg = build_cyclic_group_algebra(m);
  }
  AxiomReport rep = check_axioms(pkg);
  int failed = 0;
  for (const auto& r : rep.results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) std::cout << "  witness: " << r.witness;
    std::cout << "\n";
    failed += !r.passed;
  }
  std::cout << pkg.name << ": " << rep.results.size() - failed << "/" << rep.results.size() << " axioms hold\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of sutured manifolds from extended Heegaard diagrams"};
  app.require_subcommand(1);

  std::string file, file2, script, out;
  auto* v_validate = app.add_subcommand("validate", "check a diagram file");
  v_validate->add_option("file", file)->required();

  auto* v_mp = app.add_subcommand("multipoints", "list the multipoints of a diagram");
  v_mp->add_option("file", file)->required();

  ComputeArgs ca;
  auto* v_compute = app.add_subcommand("compute", "evaluate the invariant at one character");
  v_compute->add_option("file", ca.file)->required();
  v_compute->add_option("--engine", ca.engine)->check(CLI::IsMember({"fox", "tensor"}));
  v_compute->add_option("--algebra", ca.algebra)->check(CLI::IsMember({"hn", "cyclic"}));
  v_compute->add_option("--n", ca.n);
  v_compute->add_option("--m", ca.m);
  v_compute->add_option("--char", ca.chars, "key=value list; keys are beta ids or t, t1, s1, ...");
  v_compute->add_option("--order", ca.order, "cyclotomic order");
  v_compute->add_option("--multipoint", ca.multipoint, "named reference multipoint");
  v_compute->add_option("--offset", ca.offset, "H1 offset as a word in beta ids");
  v_compute->add_option("--sign", ca.sign)->check(CLI::IsMember({"+1", "-1", "canonical"}));
  v_compute->add_flag("--eval-float", ca.eval_float, "also print a floating point approximation");
  v_compute->add_flag("--all-chars", ca.all_chars, "evaluate at every character of the given order");

  auto* v_class = app.add_subcommand("class", "torsion class up to +-H1");
  v_class->add_option("file", file)->required();

  auto* v_compare = app.add_subcommand("compare", "compare torsion classes of two diagrams");
  v_compare->add_option("file1", file)->required();
  v_compare->add_option("file2", file2)->required();

  std::string algebra = "hn";
  int an = 0, am = 0;
  auto* v_axioms = app.add_subcommand("axioms", "check the Hopf package axioms");
  v_axioms->add_option("--algebra", algebra)->check(CLI::IsMember({"hn", "cyclic"}));
  v_axioms->add_option("--n", an);
  v_axioms->add_option("--m", am);

  auto* v_move = app.add_subcommand("move", "apply a move script");
  v_move->add_option("file", file)->required();
  v_move->add_option("--script", script)->required();
  v_move->add_option("-o,--output", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*v_validate) {
      ExtendedDiagram d = load_diagram(file);
      auto rep = validate(d);
      for (const auto& v : rep.violations) std::cout << v << "\n";
      if (!rep.ok()) return 1;
      std::cout << "valid: " << d.name << ", d = " << d.d() << ", H1 = " << homology(d).str() << "\n";
      return 0;
    }
    if (*v_mp) {
      ExtendedDiagram d = load_diagram(file);
      auto rep = validate(d);
      if (!rep.ok()) throw Error("InvalidDiagram", rep.violations.front());
      auto all = enumerate_multipoints(d);
      for (const auto& x : all) {
        std::string picks;
        for (const auto& p : x.picks) picks += (picks.empty() ? "" : " ") + p;
        std::string name;
        for (const auto& nm : d.multipoints)
          if (make_multipoint(d, nm.picks) == x) name = "  (" + nm.name + ")";
        int s = multipoint_sign(d, x);
        std::cout << "{" << picks << "}  sign " << (s > 0 ? "+1" : "-1") << name << "\n";
      }
      std::cout << all.size() << " multipoints\n";
      return 0;
    }
    if (*v_compute) {
      try {
        return run_compute(ca);
      } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n" << v_compute->help();
        return 2;
      }
    }
    if (*v_class) {
      ExtendedDiagram d = load_diagram(file);
      auto rep = validate(d);
      if (!rep.ok()) throw Error("InvalidDiagram", rep.violations.front());
      std::cout << "class: " << torsion_class(d).str() << "\n";
      return 0;
    }
    if (*v_compare) {
      ExtendedDiagram a = load_diagram(file), b = load_diagram(file2);
      for (const auto* d : {&a, &b}) {
        auto rep = validate(*d);
        if (!rep.ok()) throw Error("InvalidDiagram", d->name + ": " + rep.violations.front());
      }
      Comparison c = compare_diagrams(a, b);
      switch (c.status) {
        case Comparison::Equal:
          std::cout << "EQUAL" << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
          return 0;
        case Comparison::Different:
          std::cout << "DIFFERENT: " << c.note << "\n";
          return 1;
        case Comparison::Incomparable:
          std::cout << "INCOMPARABLE: GroupMismatch: " << c.note << "\n";
          return 1;
      }
    }
    if (*v_axioms) {
      try {
        return run_axioms(algebra, an, am);
      } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n" << v_axioms->help();
        return 2;
      }
    }
    if (*v_move) {
      ExtendedDiagram d = load_diagram(file);
      auto rep = validate(d);
      if (!rep.ok()) throw Error("InvalidDiagram", rep.violations.front());
      auto moves = parse_script(read_file(script));
      for (const auto& m : moves) d = apply_move(d, m);
      std::ofstream o(out);
      if (!o) throw Error("IOError", "cannot write " + out);
      o << serialize_diagram(d);
      std::cout << "applied " << moves.size() << " moves, wrote " << out << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
