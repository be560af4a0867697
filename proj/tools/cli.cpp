#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nlie/codim1.hpp"
#include "nlie/fixtures.hpp"
#include "nlie/io.hpp"
#include "nlie/oracle.hpp"

namespace nlie::cli {

namespace {

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidAlgebra: return kInvalid;
    case ErrorCode::Contradiction: return kContradiction;
    case ErrorCode::ExtensionBudgetExceeded:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::CartanCheckFailed:
    case ErrorCode::NotFound:
    case ErrorCode::TooLarge:
    case ErrorCode::NeedsAlgebraicNumbers:
    case ErrorCode::RationalsNotExtendable:
    case ErrorCode::RationalsUnsupported:
    case ErrorCode::DegreeUnsupported: return kExhausted;
    default: return kUsage;
  }
}

std::string tuple_text(const IndexTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + ")";
}

void print_basis(std::ostream& out, const Subspace& s) {
  for (const auto& b : s.basis()) out << "  " << b.to_string() << "\n";
}

unsigned default_max_ext() {
  if (const char* env = std::getenv("NLIE_MAX_EXT")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 12;
}

struct Common {
  std::string file;
  bool json = false;
};

int cmd_validate(const Common& c, std::ostream& out) {
  const NLieAlgebra a = NLieAlgebra::checked(read_algebra_file(c.file).tensor());
  const ValidationReport& r = *a.report();
  if (c.json) {
    out << validation_json(r).dump(2) << "\n";
  } else if (r.valid) {
    out << "valid\n";
  } else {
    out << "invalid: x = " << tuple_text(r.x) << ", y = " << tuple_text(r.y) << "\n"
        << "  [e_x, [e_y]]          = " << r.lhs->to_string() << "\n"
        << "  sum_i [.., [e_x, e_yi], ..] = " << r.rhs->to_string() << "\n";
  }
  return r.valid ? kOk : kInvalid;
}

int cmd_analyze(const Common& c, const Codim1Options& o, std::ostream& out) {
  const NLieAlgebra a = NLieAlgebra::checked(read_algebra_file(c.file).tensor());
  Json j;
  j["arity"] = a.arity();
  j["dimension"] = a.dim();
  j["field"] = field_json(a.field());
  j["valid"] = a.validity() == Validity::Valid;
  if (a.validity() != Validity::Valid) {
    j["validation"] = validation_json(*a.report());
    out << (c.json ? j.dump(2) : std::string("invalid algebra; run validate for the witness")) << "\n";
    return kInvalid;
  }
  const Subspace derived = derived_algebra(a);
  const auto series = lower_central_series(a);
  j["derived_dimension"] = derived.dim();
  Json dims = Json::array();
  for (const auto& s : series) dims.push_back(s.dim());
  j["lower_central_series"] = dims;
  j["nilpotent"] = series.back().is_zero();
  int code = kOk;
  EngelSearchOptions eo;
  eo.seed = o.seed;
  eo.budget = o.budget;
  eo.max_ext = o.max_ext;
  std::optional<CartanReport> rep;
  try {
    rep = minimal_engel_cartan(a, eo);
    j["cartan"] = cartan_json(*rep);
  } catch (const Error& e) {
    j["cartan"] = Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    code = exit_for(e.code());
  }
  if (c.json) {
    out << j.dump(2) << "\n";
    return code;
  }
  out << "arity " << a.arity() << ", dimension " << a.dim() << ", field " << a.field().to_string() << "\n"
      << "derived algebra: dimension " << derived.dim() << (derived.is_full() ? " (perfect)" : "") << "\n"
      << "lower central series dimensions:";
  for (const auto& s : series) out << " " << s.dim();
  out << (series.back().is_zero() ? " (nilpotent)\n" : " (not nilpotent)\n");
  if (rep) {
    out << "minimal Engel subalgebra: dimension " << rep->h.dim() << " over " << rep->algebra.field().to_string()
        << (rep->nilpotent && rep->self_normalizing ? ", Cartan" : "") << "\n";
    print_basis(out, rep->h);
  } else {
    out << "Engel search: " << j["cartan"]["message"].get<std::string>() << "\n";
  }
  return code;
}

int cmd_find(const Common& c, const Codim1Options& o, const std::string& report_path, std::ostream& out,
             std::ostream& err) {
  const NLieAlgebra a = read_algebra_file(c.file);
  if (a.dim() != a.arity() + 2) {
    err << "find-codim1 needs an (n+2)-dimensional n-Lie algebra; got arity " << a.arity() << " and dimension "
        << a.dim() << "\n";
    return kUsage;
  }
  try {
    const Codim1Result r = find_codim1(a, o);
    if (c.json) {
      out << codim1_json(r).dump(2) << "\n";
    } else {
      out << "branch: " << to_string(r.trace.branch) << "\n"
          << "field: " << r.field.to_string() << " (extension degree " << r.extension_degree << ")\n"
          << "codimension-1 subalgebra:\n";
      print_basis(out, r.s);
    }
    return kOk;
  } catch (const ContradictionError& e) {
    std::ofstream f(report_path);
    f << contradiction_json(e.report()).dump(2) << "\n";
    err << e.what() << "\nreport written to " << report_path << "\n";
    return kContradiction;
  }
}

int cmd_oracle(const Common& c, std::ostream& out) {
  const NLieAlgebra a = read_algebra_file(c.file);
  const auto subs = all_codim1_subalgebras(a);
  if (c.json) {
    Json j;
    j["field"] = field_json(a.field());
    j["dimension"] = a.dim();
    j["hyperplanes"] = codim1_count(a.dim(), a.field());
    j["count"] = subs.size();
    Json list = Json::array();
    for (const auto& s : subs) list.push_back(subspace_json(s));
    j["subalgebras"] = list;
    out << j.dump(2) << "\n";
  } else {
    out << subs.size() << " of " << codim1_count(a.dim(), a.field()) << " hyperplanes are subalgebras\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
      out << "#" << i + 1 << "\n";
      print_basis(out, subs[i]);
    }
  }
  return kOk;
}

struct GenArgs {
  unsigned arity = 3;
  std::size_t dim = 5;
  std::string field = "GF(2)";
  std::string strategy = "sparse";
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::string out_dir;
  double density = 0.3;
  std::uint64_t budget = 100000;
  int grading = -1;
};

int cmd_generate(const GenArgs& g, std::ostream& out) {
  GeneratorSpec spec;
  spec.arity = g.arity;
  spec.dim = g.dim;
  spec.field = parse_field(g.field);
  spec.density = g.density;
  spec.budget = g.budget;
  if (g.grading >= 0) spec.grading = static_cast<unsigned>(g.grading);
  std::string stem;
  if (g.strategy == "sparse") {
    spec.strategy = Strategy::Sparse;
  } else if (g.strategy == "perfect-filter") {
    spec.strategy = Strategy::PerfectFilter;
  } else if (g.strategy.rfind("fixture:", 0) == 0) {
    spec.strategy = Strategy::Fixture;
    spec.fixture = g.strategy.substr(8);
    stem = spec.fixture;
  } else {
    throw Error(ErrorCode::ParseError, "unknown strategy '" + g.strategy + "' (sparse, perfect-filter, fixture:NAME)");
  }
  if (stem.empty()) stem = g.strategy + "-n" + std::to_string(g.arity) + "-d" + std::to_string(g.dim);
  if (!g.out_dir.empty()) std::filesystem::create_directories(g.out_dir);
  for (std::uint64_t i = 0; i < g.count; ++i) {
    spec.seed = g.seed + i;
    const NLieAlgebra a = random_algebra(spec);
    const std::string text = serialize_algebra(a.tensor());
    if (g.out_dir.empty()) {
      out << text;
    } else {
      const std::string name =
          spec.strategy == Strategy::Fixture && g.count == 1 ? stem + ".json" : stem + "-s" + std::to_string(spec.seed) + ".json";
      const auto path = std::filesystem::path(g.out_dir) / name;
      std::ofstream(path) << text;
      out << path.string() << "\n";
    }
  }
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"n-Lie algebras: validation, analysis and codimension-1 subalgebras"};
  app.name("nlie");
  app.require_subcommand(1);

  Common common;
  Codim1Options opts;
  opts.max_ext = default_max_ext();
  std::string report_path = "nlie-contradiction.json";
  GenArgs gen;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", common.file, "algebra JSON file")->required();
    sub->add_flag("--json", common.json, "machine-readable report");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--max-ext", opts.max_ext, "largest total field extension degree (env NLIE_MAX_EXT)")
        ->check(CLI::Range(1u, 16u));
    sub->add_option("--seed", opts.seed, "seed for the random Engel search");
    sub->add_option("--budget", opts.budget, "random tuples per extension level");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the Filippov identity on basis tuples");
  add_file(validate);
  CLI::App* analyze = app.add_subcommand("analyze", "derived algebra, nilpotency, minimal Engel subalgebra");
  add_file(analyze);
  add_search(analyze);
  CLI::App* find = app.add_subcommand("find-codim1", "codimension-1 subalgebra of an (n+2)-dimensional algebra");
  add_file(find);
  add_search(find);
  find->add_option("--report", report_path, "where to write a contradiction report");
  CLI::App* oracle = app.add_subcommand("oracle", "all codimension-1 subalgebras by enumeration");
  add_file(oracle);
  CLI::App* generate = app.add_subcommand("generate", "seeded random or named algebras");
  generate->add_option("--arity", gen.arity)->check(CLI::Range(2u, 8u));
  generate->add_option("--dim", gen.dim)->check(CLI::Range(2, 64));
  generate->add_option("--field", gen.field, "GF(p), GF(p^k), GF(q) or Q");
  generate->add_option("--strategy", gen.strategy, "sparse | perfect-filter | fixture:NAME");
  generate->add_option("--seed", gen.seed);
  generate->add_option("--count", gen.count);
  generate->add_option("--out", gen.out_dir, "write one file per algebra into this directory");
  generate->add_option("--density", gen.density)->check(CLI::Range(0.0, 1.0));
  generate->add_option("--budget", gen.budget, "attempts before NotFound")->check(CLI::PositiveNumber);
  generate->add_option("--grading", gen.grading, "rank of the weight grading (0 = plain sparse)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run 'nlie --help' for usage\n";
    return kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(common, out);
    if (analyze->parsed()) return cmd_analyze(common, opts, out);
    if (find->parsed()) return cmd_find(common, opts, report_path, out, err);
    if (oracle->parsed()) return cmd_oracle(common, out);
    if (generate->parsed()) return cmd_generate(gen, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace nlie::cli
