#include "cli.hpp"

#include "ucpoly/cutloop.hpp"
#include "ucpoly/io.hpp"
#include "ucpoly/oracle.hpp"
#include "ucpoly/separation.hpp"
#include "ucpoly/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace ucpoly::cli {

namespace {

namespace fs = std::filesystem;

UCInstance instance_file(const std::string& path) { return load_instance(read_file(path)); }

// Results land in input order, whatever the number of workers.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, int jobs, F fn) {
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int k = std::clamp(jobs, 1, std::max(1, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int w = 1; w < k; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Variant family_variant(Family f) {
  switch (f) {
    case Family::F7:
    case Family::F9: return Variant::Up;
    case Family::F8:
    case Family::F10: return Variant::Down;
    default: return Variant::Full;
  }
}

void print_text(std::ostream& out, const VerificationReport& rep, int T) {
  out << to_string(rep.status) << "  " << rep.claim << "  " << rep.instance << "\n";
  if (!rep.counts.empty()) {
    out << "  ";
    const char* sep = "";
    for (const auto& [k, v] : rep.counts) {
      out << sep << k << "=" << v;
      sep = " ";
    }
    out << "\n";
  }
  if (rep.seed) out << "  seed=" << *rep.seed << "\n";
  if (!rep.note.empty()) out << "  note: " << rep.note << "\n";
  for (const auto& w : rep.witnesses) {
    out << "  " << w.kind;
    if (!w.row.empty()) out << " [" << w.row << "]";
    out << ": " << w.detail;
    if (w.point) out << "  point=" << point_to_json(*w.point, T).dump();
    out << "\n";
  }
}

void emit(std::ostream& out, const std::string& format, const VerificationReport& rep, int T) {
  if (format == "text") {
    print_text(out, rep, T);
  } else {
    out << report_to_json(rep, T).dump() << "\n";
  }
}

int status_code(const std::vector<VerificationReport>& reps) {
  const bool refuted = std::any_of(reps.begin(), reps.end(), [](const auto& r) { return r.refuted(); });
  return refuted ? kRefuted : kOk;
}

VerificationReport grid_report(const UCInstance& inst, Variant variant, std::span<const Point> ext) {
  const auto g = grid_check(ext, inst);
  VerificationReport rep;
  rep.claim = "grid/" + std::string(to_string(variant));
  rep.instance = describe(inst);
  rep.status = g.ok ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  rep.counts["points"] = static_cast<std::int64_t>(ext.size());
  rep.counts["checked"] = static_cast<std::int64_t>(g.checked);
  rep.counts["violations"] = static_cast<std::int64_t>(g.violations.size());
  const VariableSpace sp(inst.T);
  for (const auto& [i, t] : g.violations) {
    if (rep.witnesses.size() >= 5) break;
    rep.witnesses.push_back({"off-grid", ext[i], "",
                             "x" + std::to_string(t) + "=" + format_rational(ext[i][sp.x(t)])});
  }
  return rep;
}

// Folds per-member facet reports into one claim.
VerificationReport facets_summary(const UCInstance& inst, Family family, Variant variant,
                                  const std::vector<VerificationReport>& members) {
  VerificationReport rep;
  rep.claim = "facets:" + std::string(to_string(family)) + "/" + std::string(to_string(variant));
  rep.instance = describe(inst);
  std::int64_t bad = 0;
  for (const auto& m : members) {
    if (m.confirmed()) continue;
    ++bad;
    if (rep.witnesses.size() < 5) {
      for (const auto& w : m.witnesses) {
        rep.witnesses.push_back(w);
        break;
      }
    }
  }
  rep.counts["members"] = static_cast<std::int64_t>(members.size());
  rep.counts["refuted"] = bad;
  rep.status = bad == 0 ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  return rep;
}

std::vector<VerificationReport> facet_reports(const UCInstance& inst, Family family, Variant variant,
                                              Reading reading, std::span<const Point> ext, int jobs) {
  const auto listing = enumerate_family(inst, family, reading);
  return parallel_map<VerificationReport>(listing.members.size(), jobs, [&](std::size_t i) {
    return check_facet(listing.members[i].row, inst, variant, ext);
  });
}

// --- suite files -----------------------------------------------------------

struct SuiteEntry {
  std::string name;
  UCInstance inst;
  Json fields;
};

std::vector<Family> family_list(const Json& j) {
  std::vector<Family> out;
  for (const auto& f : j) out.push_back(parse_family(f.get<std::string>()));
  return out;
}

VerificationReport run_entry(const SuiteEntry& e, std::uint64_t default_seed) {
  const Json& s = e.fields;
  const std::string claim = s.at("claim").get<std::string>();
  const Reading reading = parse_reading(s.value("reading", std::string("literal")));
  if (claim == "hull" || claim == "objective-equivalence") {
    const HullTarget target = parse_hull_target(s.at("which").get<std::string>());
    VerifyOptions vo;
    vo.reading = reading;
    if (s.contains("omit")) vo.omit = family_list(s["omit"]);
    const auto ext = extreme_points(e.inst, variant_of(target), vo.oracle);
    if (claim == "hull") return check_hull_equality(e.inst, target, ext, vo);
    return random_objective_equivalence(e.inst, target, s.value("trials", 200),
                                        s.value("seed", default_seed), ext, vo);
  }
  if (claim == "facets") {
    const Family family = parse_family(s.at("family").get<std::string>());
    const Variant variant =
        s.contains("variant") ? parse_variant(s["variant"].get<std::string>()) : family_variant(family);
    const auto ext = extreme_points(e.inst, variant);
    return facets_summary(e.inst, family, variant, facet_reports(e.inst, family, variant, reading, ext, 1));
  }
  if (claim == "full-dimension" || claim == "grid") {
    const Variant variant = parse_variant(s.value("variant", std::string("full")));
    const auto ext = extreme_points(e.inst, variant);
    return claim == "grid" ? grid_report(e.inst, variant, ext) : check_full_dimension(e.inst, variant, ext);
  }
  throw InputError("suite entry: unknown claim '" + claim + "'");
}

std::vector<SuiteEntry> load_suite(const std::string& path, std::uint64_t& seed) {
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InputError("suite file: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw InputError("suite file must be a JSON object");
  seed = doc.value("seed", seed);
  const fs::path base = fs::path(path).parent_path();
  std::vector<SuiteEntry> out;
  for (const auto& item : doc.value("entries", Json::array())) {
    if (!item.is_object() || !item.contains("instance") || !item.contains("claim")) {
      throw InputError("suite entry needs 'instance' and 'claim': " + item.dump());
    }
    SuiteEntry e;
    const auto& where = item["instance"];
    if (where.is_string()) {
      const auto file = (base / where.get<std::string>()).string();
      if (!fs::exists(file)) throw InputError("suite entry: missing instance file '" + file + "'");
      e.inst = instance_file(file);
      e.name = where.get<std::string>();
    } else {
      e.inst = load_instance(where.dump());
      e.name = describe(e.inst);
    }
    e.name = item.value("name", e.name);
    e.fields = item;
    out.push_back(std::move(e));
  }
  return out;
}

// --- subcommands ------------------------------------------------------------

struct Options {
  std::string file;
  std::string format = "json";
  std::string reading = "literal";
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  int max_T = OracleOptions{}.max_T;
  // generate
  std::string family;
  std::optional<int> t;
  int m = 0;
  std::vector<int> set;
  bool all = false;
  // enumerate / separate / cutloop / facets
  std::string variant;
  bool candidates = false;
  std::string point;
  std::string objective;
  std::string families;
  int max_iterations = CutLoopCaps{}.max_iterations;
  int cuts_per_iteration = CutLoopCaps{}.cuts_per_iteration;
  // verify-hull
  std::string which;
  std::string omit;
  int objectives = 0;
  int dd_max_T = 0;
};

int cmd_check_instance(const Options& o, std::ostream& out) {
  const auto inst = instance_file(o.file);
  const auto dc = derive_constants(inst);
  if (o.format == "text") {
    out << describe(inst) << "\n"
        << "regime " << to_string(classify(inst)) << "\n"
        << "kappa=" << dc.kappa << " gamma=" << dc.gamma << " alpha1=" << dc.alpha1
        << " alpha2=" << dc.alpha2 << " grid=" << dc.grid.size() << " values\n";
    return kOk;
  }
  Json j;
  j["instance"] = Json::parse(instance_to_json(inst));
  j["regime"] = std::string(to_string(classify(inst)));
  j["kappa"] = dc.kappa;
  j["gamma"] = dc.gamma;
  j["alpha1"] = dc.alpha1;
  j["alpha2"] = dc.alpha2;
  Json grid = Json::array();
  for (const auto& g : dc.grid) grid.push_back(rational_to_json(g));
  j["grid"] = std::move(grid);
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const auto inst = instance_file(o.file);
  const Family family = parse_family(o.family);
  const Reading reading = parse_reading(o.reading);
  const VariableSpace sp(inst.T);
  if (o.all) {
    for (const auto& member : enumerate_family(inst, family, reading).members) {
      out << format_row(member.row, sp) << "\n";
    }
    return kOk;
  }
  if (!o.t) throw InputError("generate: --t is required unless --all is given");
  auto S = o.set;
  std::sort(S.begin(), S.end());
  out << format_row(generate(inst, {family, *o.t, o.m, S}, reading), sp) << "\n";
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto inst = instance_file(o.file);
  const Variant variant = parse_variant(o.variant);
  const OracleOptions opts{o.max_T};
  if (o.candidates) {
    const auto cs = candidate_points(inst, variant, opts);
    for (std::size_t i = 0; i < cs.points.size(); ++i) {
      Json j;
      j["pattern"] = pattern_to_json(cs.patterns[cs.provenance[i].first]);
      j["fiber_vertex"] = cs.provenance[i].second;
      j["point"] = point_to_json(cs.points[i], inst.T);
      out << j.dump() << "\n";
    }
    return kOk;
  }
  auto ext = extreme_points(inst, variant, opts);
  std::sort(ext.begin(), ext.end());
  for (const auto& p : ext) out << point_to_json(p, inst.T).dump() << "\n";
  return kOk;
}

int cmd_verify_hull(const Options& o, std::ostream& out) {
  const auto inst = instance_file(o.file);
  const HullTarget target = parse_hull_target(o.which);
  VerifyOptions vo;
  vo.oracle.max_T = o.max_T;
  vo.dd_max_T = o.dd_max_T;
  vo.reading = parse_reading(o.reading);
  vo.omit = parse_family_list(o.omit);
  const auto ext = extreme_points(inst, variant_of(target), vo.oracle);
  std::vector<VerificationReport> reps{check_hull_equality(inst, target, ext, vo)};
  if (o.objectives > 0) {
    reps.push_back(random_objective_equivalence(inst, target, o.objectives, o.seed, ext, vo));
  }
  for (const auto& r : reps) emit(out, o.format, r, inst.T);
  return status_code(reps);
}

int cmd_facets(const Options& o, std::ostream& out) {
  const auto inst = instance_file(o.file);
  const Family family = parse_family(o.family);
  const Variant variant = o.variant.empty() ? family_variant(family) : parse_variant(o.variant);
  const auto ext = extreme_points(inst, variant, OracleOptions{o.max_T});
  const auto reps = facet_reports(inst, family, variant, parse_reading(o.reading), ext, o.jobs);
  for (const auto& r : reps) emit(out, o.format, r, inst.T);
  const bool all = std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.confirmed(); });
  return all ? kOk : kRefuted;
}

int cmd_separate(const Options& o, std::ostream& out) {
  const auto inst = instance_file(o.file);
  const Variant variant = parse_variant(o.variant);
  const Point p = load_point(read_file(o.point), inst.T);
  const Reading reading = parse_reading(o.reading);
  const auto found = o.families.empty() ? separate_all(inst, variant, p, reading)
                                        : separate_all(inst, parse_family_list(o.families), p, reading);
  Json arr = Json::array();
  for (const auto& r : found) arr.push_back(separation_to_json(r));
  out << arr.dump(2) << "\n";
  return found.empty() ? kOk : kRefuted;
}

int cmd_cutloop(const Options& o, std::ostream& out) {
  const auto inst = instance_file(o.file);
  const Variant variant = parse_variant(o.variant);
  std::map<int, Rational> objective;
  if (o.objective.empty()) {
    std::mt19937_64 rng(o.seed);
    objective = random_objective(VariableSpace(inst.T).size(), rng);
  } else {
    objective = load_objective(read_file(o.objective), inst.T);
  }
  const auto families =
      o.families.empty() ? default_families(inst, variant) : parse_family_list(o.families);
  CutLoopCaps caps;
  caps.max_iterations = o.max_iterations;
  caps.cuts_per_iteration = o.cuts_per_iteration;
  caps.reading = parse_reading(o.reading);
  const auto ext = extreme_points(inst, variant, OracleOptions{o.max_T});
  const auto rep = run_cut_loop(inst, variant, objective, families, ext, caps);
  out << cut_loop_to_json(rep, inst.T).dump(2) << "\n";
  return rep.gap == 0 && rep.invalid_cuts.empty() ? kOk : kRefuted;
}

int cmd_report(const Options& o, std::ostream& out) {
  std::uint64_t seed = o.seed;
  const auto entries = load_suite(o.file, seed);
  const auto reps = parallel_map<VerificationReport>(
      entries.size(), o.jobs, [&](std::size_t i) { return run_entry(entries[i], seed); });
  std::map<std::string, std::int64_t> tally{{"confirmed", 0}, {"refuted", 0}, {"skipped", 0}};
  for (const auto& r : reps) ++tally[std::string(to_string(r.status))];
  if (o.format == "text") {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      out << entries[i].name << ": ";
      print_text(out, reps[i], entries[i].inst.T);
    }
    out << reps.size() << " entries: " << tally["confirmed"] << " confirmed, " << tally["refuted"]
        << " refuted, " << tally["skipped"] << " skipped\n";
  } else {
    Json j;
    Json arr = Json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      Json e;
      e["name"] = entries[i].name;
      e["report"] = report_to_json(reps[i], entries[i].inst.T);
      arr.push_back(std::move(e));
    }
    j["entries"] = std::move(arr);
    j["summary"] = {{"total", reps.size()},
                    {"confirmed", tally["confirmed"]},
                    {"refuted", tally["refuted"]},
                    {"skipped", tally["skipped"]}};
    j["seed"] = seed;
    out << j.dump(2) << "\n";
  }
  return status_code(reps);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polyhedral verification for single-generator unit commitment", "ucpoly"};
  app.require_subcommand(1);
  Options o;

  const auto instance_arg = [&](CLI::App* sub) {
    sub->add_option("instance", o.file, "Instance document (JSON)")->required();
  };
  const auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto reading_opt = [&](CLI::App* sub) {
    sub->add_option("--reading", o.reading, "How the cut formulas are read")
        ->check(CLI::IsMember({"literal", "amended"}));
  };
  const auto oracle_opt = [&](CLI::App* sub) {
    sub->add_option("--max-T", o.max_T, "Largest T the oracle will enumerate");
  };
  const auto variant_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--variant", o.variant, "Polytope: full, up or down");
    if (required) opt->required();
  };

  auto* check = app.add_subcommand("check-instance", "Validate an instance and print derived constants");
  instance_arg(check);
  format_opt(check);

  auto* gen = app.add_subcommand("generate", "Print members of a cut family in the dump format");
  instance_arg(gen);
  gen->add_option("--family", o.family, "F2, F5, F6U, F6D, F7, F8, F9 or F10")->required();
  gen->add_option("--t", o.t, "Period");
  gen->add_option("--m", o.m, "Window length");
  gen->add_option("--set", o.set, "Index set S (comma separated)")->delimiter(',');
  gen->add_flag("--all", o.all, "Stream every member of the family");
  reading_opt(gen);

  auto* en = app.add_subcommand("enumerate", "Stream oracle extreme points as point documents");
  instance_arg(en);
  variant_opt(en, true);
  en->add_flag("--candidates", o.candidates, "Stream all fiber vertices with their pattern");
  oracle_opt(en);

  auto* vh = app.add_subcommand("verify-hull", "Check a hull description against the oracle");
  instance_arg(vh);
  vh->add_option("--which", o.which, "q-k1, q-k2, q-up, q-down or base")->required();
  vh->add_option("--omit", o.omit, "Families to drop (comma separated)");
  vh->add_option("--objectives", o.objectives, "Also compare LP and oracle optima on N random objectives");
  vh->add_option("--seed", o.seed, "Seed for the random objectives");
  vh->add_option("--dd-max-T", o.dd_max_T, "Largest T enumerated by double description");
  format_opt(vh);
  reading_opt(vh);
  oracle_opt(vh);

  auto* fa = app.add_subcommand("facets", "Check that every member of a family is facet-defining");
  instance_arg(fa);
  fa->add_option("--family", o.family, "Family to check")->required();
  variant_opt(fa, false);
  fa->add_option("--jobs", o.jobs, "Parallel workers")->check(CLI::PositiveNumber);
  format_opt(fa);
  reading_opt(fa);
  oracle_opt(fa);

  auto* sep = app.add_subcommand("separate", "Most violated member of each family at a point");
  instance_arg(sep);
  variant_opt(sep, true);
  sep->add_option("--point", o.point, "Point document")->required();
  sep->add_option("--families", o.families, "Families (comma separated); default by variant");
  reading_opt(sep);

  auto* cl = app.add_subcommand("cutloop", "Cutting-plane loop against the oracle optimum");
  instance_arg(cl);
  variant_opt(cl, true);
  cl->add_option("--objective", o.objective, "Objective document; random from --seed when omitted");
  cl->add_option("--families", o.families, "Families (comma separated); default by variant");
  cl->add_option("--seed", o.seed, "Seed for the random objective");
  cl->add_option("--max-iterations", o.max_iterations, "Iteration cap");
  cl->add_option("--cuts-per-iteration", o.cuts_per_iteration, "Cuts added per round");
  reading_opt(cl);
  oracle_opt(cl);

  auto* rp = app.add_subcommand("report", "Run every (instance, claim) entry of a suite file");
  rp->add_option("suite", o.file, "Suite document (JSON)")->required();
  rp->add_option("--jobs", o.jobs, "Parallel workers")->check(CLI::PositiveNumber);
  rp->add_option("--seed", o.seed, "Default seed for randomized claims");
  format_opt(rp);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check_instance(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (vh->parsed()) return cmd_verify_hull(o, out);
    if (fa->parsed()) return cmd_facets(o, out);
    if (sep->parsed()) return cmd_separate(o, out);
    if (cl->parsed()) return cmd_cutloop(o, out);
    if (rp->parsed()) return cmd_report(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ucpoly::cli
