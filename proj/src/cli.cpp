#include "gv/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gv/dsl.hpp"
#include "gv/gv_instances.hpp"
#include "gv/json_io.hpp"

namespace gv {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

QuadAlgebra load_algebra(const std::string& path) {
  const std::string text = read_file(path);
  if (has_suffix(path, ".json")) return qa_from_json(Json::parse(text));
  return parse_algebra(text);
}

QuadOperad load_operad(const std::string& spec) {
  if (spec == "lie") return op_lie();
  if (spec == "comm") return op_comm();
  if (spec == "assoc") return op_assoc();
  return op_from_json(Json::parse(read_file(spec)));
}

FStructure load_structure(const std::string& spec, int cap) {
  if (spec == "semisimple2") return semisimple_structure(2, cap);
  if (spec == "semisimple3") return semisimple_structure(3, cap);
  if (spec == "i23") return i2_3_structure(cap);
  if (spec == "nonf") return nonf_control_structure(cap);
  return fs_from_json(Json::parse(read_file(spec)));
}

void print_gv_report(std::ostream& out, const GVReport& rep) {
  for (const auto& e : rep.entries) {
    out << (e.pass ? "[PASS] " : "[FAIL] ") << e.axiom;
    if (!e.pass) out << "  counterexample: " << e.counterexample;
    out << "\n";
  }
  int passed = 0;
  for (const auto& e : rep.entries) passed += e.pass ? 1 : 0;
  out << "overall: " << (rep.all_pass() ? "PASS" : "FAIL") << " (" << passed << "/"
      << rep.entries.size() << ")\n";
}

void print_failures(std::ostream& out, const std::vector<std::string>& failures) {
  for (const auto& f : failures) out << "  - " << f << "\n";
}

struct CommonOpts {
  std::vector<std::string> files;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  int samples = 50;
  int cap = 6;
  int maxdeg = 6;
};

void require_inputs(const CommonOpts& o, std::size_t count, const char* what) {
  if (o.files.size() != count)
    throw std::runtime_error(std::string("expected ") + std::to_string(count) + " input" +
                             (count == 1 ? "" : "s") + " for " + what + ", got " +
                             std::to_string(o.files.size()));
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for duality patterns of quadratic algebras, "
               "binary quadratic operads and F-structures"};
  app.name("gvkit");
  app.require_subcommand(1);

  CommonOpts opt;
  int rc = 0;

  auto add_common = [&opt](CLI::App* cmd, bool with_files = true) {
    if (with_files)
      cmd->add_option("-f,--file", opt.files,
                      "input file (repeatable; stock names allowed where documented)")
          ->allow_extra_args(false);
    cmd->add_flag("--json", opt.json, "emit a machine-readable JSON report");
    cmd->add_option("--seed", opt.seed, "seed for randomized suites");
    cmd->add_option("--samples", opt.samples, "sample count for randomized suites")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap", opt.cap, "series truncation cap for stock structures")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--maxdeg", opt.maxdeg, "maximum degree for Hilbert dimensions")
        ->check(CLI::NonNegativeNumber);
  };

  // --- qa ------------------------------------------------------------------
  CLI::App* qa = app.add_subcommand("qa", "quadratic algebra operations");
  qa->require_subcommand(1);

  CLI::App* qa_dual_cmd = qa->add_subcommand("dual", "Koszul dual of a presentation");
  add_common(qa_dual_cmd);
  qa_dual_cmd->callback([&] {
    require_inputs(opt, 1, "qa dual");
    const QuadAlgebra d = qa_dual(load_algebra(opt.files[0]));
    if (opt.json)
      emit_json(out, qa_to_json(d));
    else
      out << serialize_algebra(d);
  });

  CLI::App* qa_black_cmd = qa->add_subcommand("black", "black product of two presentations");
  add_common(qa_black_cmd);
  qa_black_cmd->callback([&] {
    require_inputs(opt, 2, "qa black");
    const QuadAlgebra r = qa_black(load_algebra(opt.files[0]), load_algebra(opt.files[1]));
    if (opt.json)
      emit_json(out, qa_to_json(r));
    else
      out << serialize_algebra(r);
  });

  CLI::App* qa_white_cmd = qa->add_subcommand("white", "white product of two presentations");
  add_common(qa_white_cmd);
  qa_white_cmd->callback([&] {
    require_inputs(opt, 2, "qa white");
    const QuadAlgebra r = qa_white(load_algebra(opt.files[0]), load_algebra(opt.files[1]));
    if (opt.json)
      emit_json(out, qa_to_json(r));
    else
      out << serialize_algebra(r);
  });

  CLI::App* qa_hilbert_cmd =
      qa->add_subcommand("hilbert", "graded component dimensions through --maxdeg");
  add_common(qa_hilbert_cmd);
  qa_hilbert_cmd->callback([&] {
    require_inputs(opt, 1, "qa hilbert");
    const std::vector<long> dims = hilbert_dims(load_algebra(opt.files[0]), opt.maxdeg);
    if (opt.json) {
      Json j;
      j["maxdeg"] = opt.maxdeg;
      j["dims"] = dims;
      emit_json(out, j);
    } else {
      out << "dims:";
      for (long d : dims) out << " " << d;
      out << "\n";
    }
  });

  CLI::App* qa_gvcheck_cmd =
      qa->add_subcommand("gvcheck", "duality axiom suite over random presentations");
  add_common(qa_gvcheck_cmd, false);
  qa_gvcheck_cmd->callback([&] {
    const GVReport rep = run_gv_suite(qa_gv_instance(), opt.seed, opt.samples);
    if (opt.json) {
      Json j;
      j["suite"] = "qa_gvcheck";
      j["seed"] = opt.seed;
      j["samples"] = opt.samples;
      j.update(gv_report_to_json(rep));
      emit_json(out, j);
    } else {
      print_gv_report(out, rep);
    }
    if (!rep.all_pass()) rc = 1;
  });

  // --- op ------------------------------------------------------------------
  CLI::App* op = app.add_subcommand("op", "binary quadratic operad operations");
  op->require_subcommand(1);

  auto print_operad = [&](const QuadOperad& p) {
    if (opt.json)
      emit_json(out, op_to_json(p));
    else
      out << to_string(p) << "\n";
  };

  CLI::App* op_dual_cmd =
      op->add_subcommand("dual", "dual presentation (inputs: JSON file or lie|comm|assoc)");
  add_common(op_dual_cmd);
  op_dual_cmd->callback([&] {
    require_inputs(opt, 1, "op dual");
    print_operad(op_dual(load_operad(opt.files[0])));
  });

  CLI::App* op_black_cmd = op->add_subcommand("black", "black product of two presentations");
  add_common(op_black_cmd);
  op_black_cmd->callback([&] {
    require_inputs(opt, 2, "op black");
    print_operad(op_black(load_operad(opt.files[0]), load_operad(opt.files[1])));
  });

  CLI::App* op_white_cmd = op->add_subcommand("white", "white product of two presentations");
  add_common(op_white_cmd);
  op_white_cmd->callback([&] {
    require_inputs(opt, 2, "op white");
    print_operad(op_white(load_operad(opt.files[0]), load_operad(opt.files[1])));
  });

  CLI::App* op_gvcheck_cmd =
      op->add_subcommand("gvcheck", "duality axiom suite over stock and random operads");
  add_common(op_gvcheck_cmd, false);
  op_gvcheck_cmd->callback([&] {
    const GVReport rep = run_gv_suite(qo_gv_instance(), opt.seed, opt.samples);
    if (opt.json) {
      Json j;
      j["suite"] = "op_gvcheck";
      j["seed"] = opt.seed;
      j["samples"] = opt.samples;
      j.update(gv_report_to_json(rep));
      emit_json(out, j);
    } else {
      print_gv_report(out, rep);
    }
    if (!rep.all_pass()) rc = 1;
  });

  // --- fm ------------------------------------------------------------------
  CLI::App* fm = app.add_subcommand("fm", "F-structure operations");
  fm->require_subcommand(1);

  CLI::App* fm_check_cmd = fm->add_subcommand(
      "check", "axioms and defect (inputs: JSON file or semisimple2|semisimple3|i23|nonf)");
  add_common(fm_check_cmd);
  fm_check_cmd->callback([&] {
    require_inputs(opt, 1, "fm check");
    const CheckReport rep =
        check_f_structure(load_structure(opt.files[0], opt.cap), opt.samples, opt.seed);
    if (opt.json) {
      emit_json(out, check_report_to_json(rep));
    } else {
      out << (rep.pass ? "PASS" : "FAIL") << " f-structure axioms\n";
      print_failures(out, rep.failures);
    }
    if (!rep.pass) rc = 1;
  });

  CLI::App* fm_eventual_cmd = fm->add_subcommand(
      "eventual", "eventual-identity criterion (inputs: structure, then field JSON)");
  add_common(fm_eventual_cmd);
  fm_eventual_cmd->callback([&] {
    require_inputs(opt, 2, "fm eventual");
    const FStructure f = load_structure(opt.files[0], opt.cap);
    const VField eps = vf_from_json(Json::parse(read_file(opt.files[1])));
    const EventualReport rep = is_eventual_identity(f, eps, opt.samples, opt.seed);
    if (opt.json) {
      emit_json(out, eventual_report_to_json(rep));
    } else {
      out << (rep.ok ? "PASS" : "FAIL") << " eventual identity (invertible="
          << (rep.invertible ? "yes" : "no")
          << ", criterion=" << (rep.criterion_ok ? "yes" : "no") << ")\n";
      print_failures(out, rep.failures);
    }
    if (!rep.ok) rc = 1;
  });

  CLI::App* fm_dual_cmd = fm->add_subcommand(
      "dual", "twisted structure for an eventual identity (structure, then field JSON)");
  add_common(fm_dual_cmd);
  fm_dual_cmd->callback([&] {
    require_inputs(opt, 2, "fm dual");
    const FStructure f = load_structure(opt.files[0], opt.cap);
    const VField eps = vf_from_json(Json::parse(read_file(opt.files[1])));
    const FStructure g = dubrovin_dual(f, eps);
    const CheckReport rep = check_f_structure(g, opt.samples, opt.seed);
    if (opt.json) {
      Json j;
      j["structure"] = fs_to_json(g);
      j["check"] = check_report_to_json(rep);
      emit_json(out, j);
    } else {
      out << (rep.pass ? "PASS" : "FAIL") << " twisted structure axioms\n";
      print_failures(out, rep.failures);
    }
    if (!rep.pass) rc = 1;
  });

  CLI::App* fm_ex38_cmd = fm->add_subcommand(
      "ex38", "power commutator identity (structure, then field JSON; optional exponents)");
  add_common(fm_ex38_cmd);
  std::vector<int> exponents;
  fm_ex38_cmd->add_option("exponents", exponents, "exponent pair a b")->expected(0, 2);
  fm_ex38_cmd->callback([&] {
    require_inputs(opt, 2, "fm ex38");
    const FStructure f = load_structure(opt.files[0], opt.cap);
    const VField eps = vf_from_json(Json::parse(read_file(opt.files[1])));
    std::vector<std::pair<int, int>> pairs;
    if (exponents.size() == 2)
      pairs.emplace_back(exponents[0], exponents[1]);
    else
      pairs = {{0, 2}, {1, 2}, {1, 3}};
    bool all = true;
    Json results = Json::array();
    for (const auto& [a, b] : pairs) {
      const bool ok = commutator_identity_3_8(f, eps, a, b);
      all = all && ok;
      if (opt.json) {
        Json j;
        j["n"] = a;
        j["m"] = b;
        j["pass"] = ok;
        results.push_back(std::move(j));
      } else {
        out << (ok ? "[PASS] " : "[FAIL] ") << "(n,m)=(" << a << "," << b << ")\n";
      }
    }
    if (opt.json) {
      Json j;
      j["identity"] = "power_commutator";
      j["results"] = std::move(results);
      j["all_pass"] = all;
      emit_json(out, j);
    }
    if (!all) rc = 1;
  });

  CLI::App* fm_coiso_cmd =
      fm->add_subcommand("coisotropy", "spectral-cover bracket stability check");
  add_common(fm_coiso_cmd);
  fm_coiso_cmd->callback([&] {
    require_inputs(opt, 1, "fm coisotropy");
    const CoisotropyReport rep = check_coisotropy(load_structure(opt.files[0], opt.cap));
    if (opt.json) {
      emit_json(out, coisotropy_report_to_json(rep));
    } else {
      out << (rep.pass ? "PASS" : "FAIL") << " coisotropy\n";
      print_failures(out, rep.failures);
    }
    if (!rep.pass) rc = 1;
  });

  CLI::App* fm_fiber_cmd =
      fm->add_subcommand("fiber", "fiber algebra semisimplicity at a rational point");
  add_common(fm_fiber_cmd);
  std::vector<std::string> point_args;
  fm_fiber_cmd->add_option("point", point_args, "rational coordinates of the point");
  fm_fiber_cmd->callback([&] {
    require_inputs(opt, 1, "fm fiber");
    const FStructure f = load_structure(opt.files[0], opt.cap);
    std::vector<Rational> u0;
    for (const auto& s : point_args) u0.push_back(rat_parse(s));
    const bool ss = is_semisimple_fiber(fiber_algebra(f, u0));
    if (opt.json) {
      Json j;
      j["point"] = point_args;
      j["semisimple"] = ss;
      emit_json(out, j);
    } else {
      out << "fiber at (";
      for (std::size_t i = 0; i < point_args.size(); ++i)
        out << (i ? ", " : "") << point_args[i];
      out << "): " << (ss ? "semisimple" : "not semisimple") << "\n";
    }
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace gv
