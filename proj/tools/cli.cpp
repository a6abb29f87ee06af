#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <ostream>

#include "latmorph/constructors.hpp"
#include "latmorph/dot_diagram.hpp"
#include "latmorph/error.hpp"
#include "latmorph/granulometry.hpp"
#include "latmorph/inclusion.hpp"
#include "latmorph/io.hpp"
#include "latmorph/json_codec.hpp"
#include "latmorph/kernels/kernels.hpp"
#include "latmorph/morphology.hpp"
#include "latmorph/oracle.hpp"
#include "latmorph/regression_pack.hpp"

namespace latmorph::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string se1, se2, pixels, image, recipe, out, fixtures;
  std::vector<std::string> se;
  std::string sign = "both";
  std::string relation = "S";
  std::string filter = "opening";
  std::string isa = "auto";
  std::size_t cap = kDefaultOracleCap;
  unsigned jobs = 0;
  bool force = false;
  bool list = false;
};

StructuringElement load_se(const std::string& path) {
  const std::string text = read_text_file(path);
  if (fs::path(path).extension() == ".json") return StructuringElement(point_set_from_json(parse_pack(text)));
  return parse_structuring_element(text);
}

PixelSet load_pixels(const std::string& path) {
  const std::string text = read_text_file(path);
  if (fs::path(path).extension() == ".json") return PixelSet(point_set_from_json(parse_pack(text)));
  return PixelSet(parse_dot_diagram(text).points);
}

Sign parse_sign(const std::string& s) {
  if (s == "pos") return Sign::Positive;
  if (s == "neg") return Sign::Negative;
  return Sign::Both;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

void emit_json(const Options& o, std::ostream& out, const Json& j) { emit(o, out, j.dump(2) + "\n"); }

std::vector<StructuringElement> load_sequence(const Options& o) {
  if (!o.recipe.empty()) return build_sequence(recipe_from_json(parse_pack(read_text_file(o.recipe))));
  std::vector<StructuringElement> seq;
  for (const auto& p : o.se) seq.push_back(load_se(p));
  return seq;
}

int cmd_check(const Options& o, std::ostream& out, Relation rel) {
  const auto b1 = load_se(o.se1);
  const auto b2 = load_se(o.se2);
  const Scope scope = o.pixels.empty() ? Scope::whole_space(b1.dimension()) : Scope(load_pixels(o.pixels));
  const auto r = check(b1, b2, scope, rel, parse_sign(o.sign));
  emit_json(o, out, to_json(r));
  return r.verdict ? kExitPass : kExitFalse;
}

int cmd_check_whole_space(const Options& o, std::ostream& out) {
  const auto r = check_whole_space(load_se(o.se1), load_se(o.se2));
  emit_json(o, out, to_json(r));
  return r.verdict ? kExitPass : kExitFalse;
}

int cmd_build(const Options& o, std::ostream& out) {
  const SequenceRecipe recipe = recipe_from_json(parse_pack(read_text_file(o.recipe)));
  const auto seq = build_sequence(recipe);
  std::optional<Scope> scope;
  if (!o.pixels.empty()) {
    scope.emplace(load_pixels(o.pixels));
  } else if (recipe.guarantee() == Guarantee::WholeSpace) {
    scope = Scope::whole_space(seq.front().dimension());
  } else {
    const Box box = bounding_box(seq.back().points());
    scope.emplace(PixelSet::rectangle(box.lo, box.hi));
  }
  const auto reports = verify_sequence(seq, *scope, Relation::Shift, CheckOptions{.record_witness = false});
  Json diagrams = Json::array();
  for (const auto& b : seq) diagrams.push_back(b.dimension() == 2 ? Json(render_dot_diagram(b.points())) : Json(nullptr));
  Json verification = Json::array();
  for (const auto& r : reports) verification.push_back(to_json(r));
  emit_json(o, out,
            Json{{"recipe", to_json(recipe)},
                 {"verified_on", scope->is_whole_space() ? "whole-space" : "pixels"},
                 {"verified", all_hold(reports)},
                 {"sequence", sequence_to_json(seq)},
                 {"diagrams", diagrams},
                 {"verification", verification}});
  return all_hold(reports) ? kExitPass : kExitFalse;
}

int cmd_verify_seq(const Options& o, std::ostream& out) {
  const auto seq = load_sequence(o);
  if (seq.size() < 2) throw InvalidArgument("verify-seq needs at least two structuring elements");
  const Scope scope = o.pixels.empty() ? Scope::whole_space(seq.front().dimension()) : Scope(load_pixels(o.pixels));
  const Relation rel = o.relation == "WS" ? Relation::WeakShift : Relation::Shift;
  const auto reports = verify_sequence(seq, scope, rel);
  Json pairs = Json::array();
  for (const auto& r : reports) pairs.push_back(to_json(r));
  emit_json(o, out, Json{{"verdict", all_hold(reports)}, {"pairs", pairs}});
  return all_hold(reports) ? kExitPass : kExitFalse;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto b1 = load_se(o.se1);
  const auto b2 = load_se(o.se2);
  const PixelSet p = load_pixels(o.pixels);
  OracleOptions opts;
  opts.cap = o.cap;
  opts.jobs = o.jobs;
  const PropertyVerdict v = property_holds(b1, b2, p, opts);
  Json j = to_json(v);
  if (b1.points().is_subset_of(b2.points())) {
    const CheckOptions quiet{.record_witness = false};
    const bool wo = check(b1, b2, Scope(p), Relation::WeakShift, kOpeningSign, quiet).verdict;
    const bool wc = check(b1, b2, Scope(p), Relation::WeakShift, kClosingSign, quiet).verdict;
    j["weak_opening"] = wo;
    j["weak_closing"] = wc;
    j["agrees"] = wo == v.holds_opening && wc == v.holds_closing;
  }
  emit_json(o, out, j);
  return v.holds() ? kExitPass : kExitFalse;
}

Json load_fixtures(const Options& o) {
  return o.fixtures.empty() ? embedded_pack() : parse_pack(read_text_file(o.fixtures));
}

int cmd_audit(const Options& o, std::ostream& out) {
  const auto corpus = audit_corpus(load_fixtures(o));
  const auto m = audit_implication_matrix(corpus);
  emit_json(o, out, to_json(m));
  return m.consistent() ? kExitPass : kExitFalse;
}

std::string zero_mask(const Image& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] == 0.0 ? 1.0 : 0.0;
  return format_masked_grid(Image(f.domain_ptr(), std::move(v)));
}

int cmd_granulometry(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<PgmImage> pgm;
  Image g = [&] {
    if (fs::path(o.image).extension() == ".pgm") {
      pgm = parse_pgm(read_text_file(o.image));
      return pgm->image;
    }
    return parse_masked_grid(read_text_file(o.image));
  }();
  const auto seq = load_sequence(o);
  const FilterMode mode = o.filter == "closing" ? FilterMode::Closing : FilterMode::Opening;
  GranulometryResult r;
  try {
    r = granulometric_curve(g, seq, mode, o.force);
  } catch (const UnverifiedSequence& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  }

  if (!o.out.empty()) {
    fs::create_directories(o.out);
    const fs::path dir(o.out);
    for (const auto& s : r.steps) {
      const std::string stem = "step_" + std::to_string(s.index);
      if (pgm && s.filtered.domain().is_rectangle()) {
        write_text_file(dir / (stem + ".pgm"), format_pgm(s.filtered, pgm->maxval));
      } else {
        write_text_file(dir / (stem + ".grid"), format_masked_grid(s.filtered));
      }
      write_text_file(dir / (stem + "_zero.grid"), zero_mask(s.filtered));
    }
    write_text_file(dir / "curve.csv", format_curve_csv(r));
    write_text_file(dir / "report.json", to_json(r).dump(2) + "\n");
  }
  out << format_curve_csv(r);
  if (!r.verified) err << "warning: sequence not verified on this domain; ran with --force\n";
  return kExitPass;
}

int cmd_examples(const Options& o, std::ostream& out) {
  const Json pack = load_fixtures(o);
  if (o.list) {
    for (const auto& c : pack.value("counterexamples", Json::array())) out << "counterexample " << c.at("name").get<std::string>() << '\n';
    for (const auto& s : pack.value("sequences", Json::array())) out << "sequence " << s.at("name").get<std::string>() << '\n';
    return kExitPass;
  }
  const PackReport rep = run_pack(pack, o.jobs);
  emit(o, out, rep.summary());
  return rep.passed() ? kExitPass : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morphology on finite subsets of Z^m: inclusion checks, sequence construction, oracle and granulometry",
               "latmorph"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--isa", o.isa, "Kernel variant")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto se_pair = [&](CLI::App* c) {
    c->add_option("--se1", o.se1, "First structuring element (dot diagram or .json)")->required()->check(CLI::ExistingFile);
    c->add_option("--se2", o.se2, "Second structuring element")->required()->check(CLI::ExistingFile);
  };
  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "Write the report to this path"); };
  auto sign_opt = [&](CLI::App* c) {
    c->add_option("--sign", o.sign, "Which condition to check")->check(CLI::IsMember({"pos", "neg", "both"}));
  };
  auto seq_opts = [&](CLI::App* c) {
    c->add_option("--se", o.se, "Structuring element file, repeat in sequence order")->check(CLI::ExistingFile);
    c->add_option("--recipe", o.recipe, "Sequence recipe (.json)")->check(CLI::ExistingFile);
  };

  auto* check_cmd = app.add_subcommand("check", "Shift inclusion with respect to a pixel set");
  se_pair(check_cmd);
  check_cmd->add_option("--pixels", o.pixels, "Pixel set (dot diagram or .json)")->required()->check(CLI::ExistingFile);
  sign_opt(check_cmd);
  out_opt(check_cmd);

  auto* whole_cmd = app.add_subcommand("check-whole-space", "Shift inclusion on the whole lattice");
  se_pair(whole_cmd);
  out_opt(whole_cmd);

  auto* weak_cmd = app.add_subcommand("weak-check", "Weak shift inclusion (whole lattice without --pixels)");
  se_pair(weak_cmd);
  weak_cmd->add_option("--pixels", o.pixels, "Pixel set")->check(CLI::ExistingFile);
  sign_opt(weak_cmd);
  out_opt(weak_cmd);

  auto* build_cmd = app.add_subcommand("build", "Build a nested sequence from a recipe");
  build_cmd->add_option("--recipe", o.recipe, "Sequence recipe (.json)")->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--pixels", o.pixels, "Verify on this pixel set instead of the recipe's own scope")
      ->check(CLI::ExistingFile);
  out_opt(build_cmd);

  auto* seq_cmd = app.add_subcommand("verify-seq", "Check every consecutive pair of a sequence");
  seq_opts(seq_cmd);
  seq_cmd->add_option("--pixels", o.pixels, "Pixel set (whole lattice when omitted)")->check(CLI::ExistingFile);
  seq_cmd->add_option("--mode", o.relation, "S or WS")->check(CLI::IsMember({"S", "WS"}));
  out_opt(seq_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive check of zero-set nesting over binary images");
  se_pair(oracle_cmd);
  oracle_cmd->add_option("--pixels", o.pixels, "Pixel set")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--cap", o.cap, "Largest pixel count to enumerate")
      ->check(CLI::Range(std::size_t{1}, kMaxOracleCap));
  oracle_cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  out_opt(oracle_cmd);

  auto* audit_cmd = app.add_subcommand("audit", "Implication audit between the four inclusion relations");
  audit_cmd->add_option("--fixtures", o.fixtures, "Fixture pack to use as corpus")->check(CLI::ExistingFile);
  out_opt(audit_cmd);

  auto* gran_cmd = app.add_subcommand("granulometry", "Zero-set curve along an opening or closing filtration");
  gran_cmd->add_option("--image", o.image, "Image (.pgm or masked grid)")->required()->check(CLI::ExistingFile);
  seq_opts(gran_cmd);
  gran_cmd->add_option("--mode", o.filter, "opening or closing")->check(CLI::IsMember({"opening", "closing"}));
  gran_cmd->add_flag("--force", o.force, "Run even if the sequence is not verified on the image domain");
  gran_cmd->add_option("--out", o.out, "Directory for per-step images, masks and the curve");

  auto* ex_cmd = app.add_subcommand("examples", "Replay the embedded fixture pack");
  ex_cmd->add_option("--fixtures", o.fixtures, "Use this pack instead of the embedded one")->check(CLI::ExistingFile);
  ex_cmd->add_flag("--list", o.list, "List entries only");
  ex_cmd->add_option("--jobs", o.jobs, "Worker threads for oracle entries");
  out_opt(ex_cmd);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (o.isa == "scalar") kernels::select(kernels::Isa::Scalar);
    if (o.isa == "avx2") {
      if (!kernels::isa_supported(kernels::Isa::Avx2)) throw InvalidArgument("AVX2 is not available on this machine");
      kernels::select(kernels::Isa::Avx2);
    }
    if ((seq_cmd->parsed() || gran_cmd->parsed()) && o.recipe.empty() && o.se.empty()) {
      throw InvalidArgument("give a sequence with --se (repeated) or --recipe");
    }
    if (check_cmd->parsed()) return cmd_check(o, out, Relation::Shift);
    if (whole_cmd->parsed()) return cmd_check_whole_space(o, out);
    if (weak_cmd->parsed()) return cmd_check(o, out, Relation::WeakShift);
    if (build_cmd->parsed()) return cmd_build(o, out);
    if (seq_cmd->parsed()) return cmd_verify_seq(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out);
    if (audit_cmd->parsed()) return cmd_audit(o, out);
    if (gran_cmd->parsed()) return cmd_granulometry(o, out, err);
    if (ex_cmd->parsed()) return cmd_examples(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace latmorph::cli
