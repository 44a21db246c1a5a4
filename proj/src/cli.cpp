#include "eqsub/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eqsub/error.hpp"
#include "eqsub/input.hpp"
#include "eqsub/kp.hpp"
#include "eqsub/lattice.hpp"
#include "eqsub/oracle.hpp"
#include "eqsub/report.hpp"

namespace eqsub::cli {

namespace {

using act::PointedActionData;
using grp::Subgroup;
using io::json;

struct Options {
  std::string preset;
  std::string input;
  std::string json_path;
  std::string dot_path;
  std::string mode = "main-theorem";
  std::string zeta_reading = "exact-order";
  std::uint64_t seed = oracle::kDefaultSeed;
  bool equivariant_only = false;
  std::string L;
  std::string H;
  int n = 0;
  std::string q;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  /// Target of --json -
  std::ostream& json;
};

void write_file(const std::string& path, const std::string& text, const Io& io) {
  if (path.empty()) return;
  if (path == "-") {
    io.json << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::Parse, "cannot write " + path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

PointedActionData load(const Options& o) {
  if (o.preset.empty() == o.input.empty()) throw Usage("exactly one of --preset and --input is required");
  return o.preset.empty() ? io::load_input(o.input) : io::parse_preset(o.preset);
}

/// Aborts with the validator report unless the data is valid.
PointedActionData load_valid(const Options& o) {
  auto d = load(o);
  auto report = act::validate_action_data(d);
  if (!report.valid()) throw Error(Errc::NotValid, report.str());
  return d;
}

PointedActionData normalized(const PointedActionData& d, const Io& io) {
  if (act::validate_action_data(d).normalized()) return d;
  io.err << "note: tables normalized by a gauge transformation\n";
  return act::normalize(d);
}

std::optional<Subgroup> subgroup_flag(const std::string& text, const grp::FiniteGroup& g, const char* name) {
  if (text.empty()) return std::nullopt;
  std::vector<grp::Elem> elems;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      elems.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Usage(std::string("--") + name + " expects comma-separated element indices");
    }
  }
  Subgroup s(elems);
  grp::require_subgroup(g, s);
  return s;
}

std::vector<std::pair<Subgroup, Subgroup>> admissible_pairs(const PointedActionData& d, const Options& o) {
  auto L = subgroup_flag(o.L, d.K(), "L");
  auto H = subgroup_flag(o.H, d.G(), "H");
  std::vector<std::pair<Subgroup, Subgroup>> out;
  const auto normals = H ? std::vector<Subgroup>{*H} : grp::normal_subgroups(d.G());
  const auto subs = L ? std::vector<Subgroup>{*L} : grp::enumerate_subgroups(d.K());
  for (const auto& h : normals)
    for (const auto& l : subs) {
      if (L && H) {
        triv::require_admissible(d, l, h);
      } else if (!triv::is_admissible(d, l, h)) {
        continue;
      }
      if (o.equivariant_only && !triv::is_invariant(d, l)) {
        if (L) throw Error(Errc::InvalidData, "L is not G-invariant");
        continue;
      }
      out.emplace_back(l, h);
    }
  return out;
}

int cmd_validate(const Options& o, const Io& io) {
  auto d = load(o);
  auto r = act::validate_action_data(d);
  io.out << r.str();
  json j = io::validation_json(r, d);
  write_file(o.json_path, dump(j), io);
  return r.valid() ? kExitOk : kExitInvalid;
}

int cmd_enumerate(const Options& o, const Io& io) {
  auto d = load_valid(o);
  json j = json::array();
  io.out << "L\tH\tcount\n";
  for (const auto& [L, H] : admissible_pairs(d, o)) {
    auto etas = triv::enumerate_bicharacters(d, L, H, o.equivariant_only);
    io.out << grp::to_string(L) << "\t" << grp::to_string(H) << "\t" << etas.size() << "\n";
    json list = json::array();
    for (const auto& e : etas) {
      io.out << "  " << e.str() << "\n";
      list.push_back(io::bicharacter_json(e));
    }
    j.push_back({{"L", io::subgroup_json(L)}, {"H", io::subgroup_json(H)}, {"bicharacters", list}});
  }
  write_file(o.json_path, dump(json{{"equivariant_only", o.equivariant_only}, {"pairs", j}}), io);
  return kExitOk;
}

int cmd_lattice(const Options& o, const Io& io) {
  auto d = load_valid(o);
  auto lat = lat::build_lattice(d);
  io.out << lat::render(lat, lat::Format::Table);
  write_file(o.json_path, lat::render(lat, lat::Format::Json), io);
  write_file(o.dot_path, lat::render(lat, lat::Format::Dot), io);
  return kExitOk;
}

int cmd_obstruct(const Options& o, const Io& io) {
  auto d = load_valid(o);
  json j = json::array();
  for (const auto& [L, H] : admissible_pairs(d, o)) {
    auto r = triv::obstruction_report(d, L, H);
    io.out << r.str(d);
    json entry{{"L", io::subgroup_json(L)},
               {"H", io::subgroup_json(H)},
               {"first_solvable", r.first.solvable},
               {"second_vanishes", r.second ? json(r.second->vanishes) : json(nullptr)},
               {"unobstructed", r.unobstructed},
               {"bicharacters", r.bicharacter_count}};
    if (triv::is_invariant(d, L) && r.bicharacter_count > 0) {
      json inv = json::array();
      for (const auto& eta : triv::enumerate_bicharacters(d, L, H, false)) {
        auto w = triv::invariance_obstruction(d, eta);
        io.out << "  Omega for " << eta.str() << ": " << (w.is_zero ? "zero" : w.vanishes ? "vanishing class" : "nonzero class")
               << (w.cocycle ? "" : " (NOT a cocycle)") << "\n";
        inv.push_back({{"eta", io::bicharacter_json(eta)}, {"zero", w.is_zero}, {"vanishes", w.vanishes}, {"cocycle", w.cocycle}});
      }
      entry["invariance"] = inv;
    }
    j.push_back(entry);
  }
  write_file(o.json_path, dump(j), io);
  return kExitOk;
}

kp::Mode parse_mode(const std::string& s) {
  if (s == "as-stated") return kp::Mode::AsStated;
  if (s == "main-theorem") return kp::Mode::MainTheorem;
  throw Usage("--mode must be as-stated or main-theorem");
}

kp::ZetaReading parse_reading(const std::string& s) {
  if (s == "exact-order") return kp::ZetaReading::ExactOrder;
  if (s == "mth-root") return kp::ZetaReading::MthRoot;
  throw Usage("--zeta-reading must be exact-order or mth-root");
}

/// n and q from --n/--q or a kp preset.
std::optional<std::pair<int, exact::RatAngle>> kp_parameters(const Options& o) {
  if (!o.preset.empty()) {
    std::string_view s = o.preset;
    if (s.substr(0, 3) != "kp:") return std::nullopt;
    s.remove_prefix(3);
    auto colon = s.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::Parse, "expected kp:n:p/q");
    io::parse_preset(o.preset);
    int n = std::stoi(std::string(s.substr(0, colon)));
    return std::pair{n, exact::RatAngle::parse(s.substr(colon + 1))};
  }
  if (o.n > 0) return std::pair{o.n, exact::RatAngle::parse(o.q.empty() ? "0" : o.q)};
  return std::nullopt;
}

int cmd_kp_classify(const Options& o, const Io& io) {
  auto p = kp_parameters(o);
  if (!p) throw Usage("kp-classify needs --preset kp:n:p/q or --n with --q");
  auto r = kp::kp_classify(p->first, p->second, parse_mode(o.mode), parse_reading(o.zeta_reading));
  io.out << r.str();
  write_file(o.json_path, dump(r.json()), io);
  return kExitOk;
}

int cmd_hopf(const Options& o, const Io& io) {
  auto d = normalized(load_valid(o), io);
  auto h = hopf::build_bismash(d);
  auto r = hopf::verify_hopf_axioms(h);
  io.out << "dimension " << h.dim << " (|G| = " << h.nG << ", |K| = " << h.nK << ")\n";
  io.out << "antipode: " << (h.antipode_unique ? "unique solution" : "NOT unique") << ", closed formula differs at "
         << h.antipode_mismatches.size() << " basis element(s)\n";
  io.out << r.str(h);
  write_file(o.json_path, dump(io::hopf_report_json(h, r)), io);
  return r.ok() ? kExitOk : kExitInvalid;
}

int cmd_oracle(const Options& o, const Io& io) {
  auto d = normalized(load_valid(o), io);
  auto h = hopf::build_bismash(d);
  auto blocks = oracle::block_decompose(oracle::dual_algebra(h), o.seed);
  auto ring = oracle::fusion_ring(h, blocks);
  auto sub = oracle::enumerate_based_subrings(ring);
  io.out << "rank " << ring.rank << ", seed " << blocks.seed << ", max rounding error " << std::scientific
         << std::setprecision(2) << ring.max_rounding_error << std::defaultfloat << "\n";
  io.out << "simple\tdim\tdual\n";
  for (int i = 0; i < ring.rank; ++i)
    io.out << i << "\t" << ring.dims[static_cast<std::size_t>(i)] << "\t" << ring.dual[static_cast<std::size_t>(i)] << "\n";
  io.out << "based subrings: " << sub.subsets.size() << "\n";
  for (std::size_t i = 0; i < sub.subsets.size(); ++i) {
    io.out << "  " << i << "\tfpdim " << sub.fpdims[i] << "\t{";
    for (std::size_t k = 0; k < sub.subsets[i].size(); ++k) io.out << (k ? "," : "") << sub.subsets[i][k];
    io.out << "}\n";
  }
  if (!sub.non_dividing.empty()) io.out << "fpdim not dividing the total at " << sub.non_dividing.size() << " subset(s)\n";
  write_file(o.json_path, dump(io::oracle_json(ring, sub)), io);
  return kExitOk;
}

int cmd_compare(const Options& o, const Io& io) {
  if (auto p = kp_parameters(o); p && !o.preset.empty()) {
    auto c = kp::compare_kp_vs_general(p->first, p->second, parse_reading(o.zeta_reading), o.seed);
    io.out << c.str();
    write_file(o.json_path, dump(c.json()), io);
    if (!c.oracle) return kExitChecksum;
    return c.main_matches_oracle ? kExitOk : kExitMismatch;
  }
  auto d = normalized(load_valid(o), io);
  auto ring = oracle::fusion_ring(hopf::build_bismash(d), o.seed);
  auto c = oracle::compare(oracle::enumerate_based_subrings(ring), lat::build_lattice(d));
  io.out << c.str();
  for (const auto& m : c.mismatches) io.out << "  " << m << "\n";
  write_file(o.json_path, dump(io::comparison_json(c)), io);
  return c.equal() ? kExitOk : kExitMismatch;
}

int cmd_presets(const Options& o, const Io& io) {
  json j = json::array();
  for (const auto& [pattern, what] : io::preset_catalog()) {
    io.out << std::left << std::setw(22) << pattern << what << "\n";
    j.push_back({{"pattern", pattern}, {"description", what}});
  }
  write_file(o.json_path, dump(j), io);
  return kExitOk;
}

int exit_for(Errc c) {
  switch (c) {
    case Errc::ChecksumFailed:
    case Errc::RoundingFailed:
    case Errc::InvariantViolated:
      return kExitChecksum;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fusion subcategories of equivariantizations of pointed fusion categories", "eqsub"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all commands");

  auto source = [&](CLI::App* s) {
    s->add_option("--preset", o.preset, "Built-in data, see the presets command");
    s->add_option("--input", o.input, "JSON input document");
  };
  auto json_flag = [&](CLI::App* s) { s->add_option("--json", o.json_path, "Write JSON output to PATH ('-' for stdout)"); };
  auto pair_flags = [&](CLI::App* s) {
    s->add_option("--L", o.L, "Subgroup of K as element indices, e.g. 0,3");
    s->add_option("--H", o.H, "Normal subgroup of G as element indices");
    s->add_flag("--equivariant-only", o.equivariant_only, "Only G-invariant L and G-equivariant bicharacters");
  };

  auto* validate = app.add_subcommand("validate", "Check the action data equations");
  source(validate);
  json_flag(validate);
  auto* enumerate = app.add_subcommand("enumerate", "List (beta,mu)-bicharacters for admissible (L,H)");
  source(enumerate);
  json_flag(enumerate);
  pair_flags(enumerate);
  auto* lattice = app.add_subcommand("lattice", "Enumerate triples and their order");
  source(lattice);
  json_flag(lattice);
  lattice->add_option("--dot", o.dot_path, "Write the Hasse diagram in DOT format to PATH");
  auto* obstruct = app.add_subcommand("obstruct", "Obstruction classes for admissible (L,H)");
  source(obstruct);
  json_flag(obstruct);
  pair_flags(obstruct);
  auto* kpc = app.add_subcommand("kp-classify", "Two-type classification for the swap action on Z/n x Z/n");
  kpc->add_option("--preset", o.preset, "kp:n:p/q");
  kpc->add_option("--n", o.n, "n");
  kpc->add_option("--q", o.q, "q as p/q with n q = 0");
  kpc->add_option("--mode", o.mode, "as-stated or main-theorem")->capture_default_str();
  kpc->add_option("--zeta-reading", o.zeta_reading, "exact-order or mth-root")->capture_default_str();
  json_flag(kpc);
  auto* hopfc = app.add_subcommand("hopf", "Build the bismash Hopf algebra and verify its axioms");
  source(hopfc);
  json_flag(hopfc);
  auto* oraclec = app.add_subcommand("oracle", "Fusion ring and based subrings from the Hopf algebra");
  source(oraclec);
  json_flag(oraclec);
  oraclec->add_option("--seed", o.seed, "Seed for the random central element")->capture_default_str();
  auto* comparec = app.add_subcommand("compare", "Triple lattice against the oracle (three-way for kp presets)");
  source(comparec);
  json_flag(comparec);
  comparec->add_option("--seed", o.seed, "Seed for the random central element")->capture_default_str();
  comparec->add_option("--zeta-reading", o.zeta_reading, "exact-order or mth-root")->capture_default_str();
  auto* presets = app.add_subcommand("presets", "List the built-in data");
  json_flag(presets);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  // With --json - the standard output carries only the JSON document.
  std::ostream discard(nullptr);
  const Io io{o.json_path == "-" ? discard : out, err, out};
  try {
    if (*validate) return cmd_validate(o, io);
    if (*enumerate) return cmd_enumerate(o, io);
    if (*lattice) return cmd_lattice(o, io);
    if (*obstruct) return cmd_obstruct(o, io);
    if (*kpc) return cmd_kp_classify(o, io);
    if (*hopfc) return cmd_hopf(o, io);
    if (*oraclec) return cmd_oracle(o, io);
    if (*comparec) return cmd_compare(o, io);
    if (*presets) return cmd_presets(o, io);
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    for (auto* s : app.get_subcommands()) err << s->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e.code());
  }
  return kExitUsage;
}

}  // namespace eqsub::cli
