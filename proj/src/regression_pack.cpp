#include "latmorph/regression_pack.hpp"

#include <sstream>

#include "latmorph/dot_diagram.hpp"
#include "latmorph/error.hpp"
#include "latmorph/io.hpp"
#include "latmorph/morphology.hpp"
#include "latmorph/oracle.hpp"

namespace latmorph {

Json parse_pack(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid fixture pack: ") + e.what());
  }
}

Json embedded_pack() { return parse_pack(embedded_pack_text()); }

bool PackReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const PackEntryResult& e) { return e.passed; });
}

std::string PackReport::summary() const {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << (e.passed ? "ok    " : "FAIL  ") << e.kind << ' ' << e.name << '\n';
    for (const auto& d : e.diffs) out << "        " << d << '\n';
  }
  out << counterexample_entries << " counterexample entries, " << sequence_entries << " sequence entries, "
      << (passed() ? "all match" : "mismatches found") << '\n';
  return out.str();
}

namespace {

PixelSet pixels_from_json(const Json& j) {
  if (j.contains("rect")) {
    return PixelSet::rectangle(point_from_json(j["rect"].at("lo")), point_from_json(j["rect"].at("hi")));
  }
  return PixelSet(point_set_from_json(j.at("points")));
}

std::string b(bool v) { return v ? "true" : "false"; }

class Differ {
 public:
  explicit Differ(PackEntryResult& r) : r_(r) {}

  void flag(const std::string& what, bool expected, bool got) {
    if (expected != got) fail(what + ": expected " + b(expected) + ", got " + b(got));
  }
  void fail(const std::string& msg) {
    r_.passed = false;
    r_.diffs.push_back(msg);
  }
  void grid(const std::string& what, const Image& expected, const Image& got) {
    if (!(expected.domain() == got.domain())) {
      fail(what + ": domain differs");
      return;
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (expected[i] != got[i]) {
        fail(what + ": pixel " + got.domain()[i].to_string() + " expected " + format_value(expected[i]) + ", got " +
             format_value(got[i]));
      }
    }
  }

 private:
  PackEntryResult& r_;
};

void check_counterexample_at(Differ& d, const std::string& what, const Json& exp, const InclusionReport& r) {
  const Point x = point_from_json(exp.at("x"));
  const Point b2 = point_from_json(exp.at("b2"));
  const auto& c = r.counterexample;
  if (!c || !c->x || *c->x != x || c->element != b2) {
    const std::string got = c && c->x ? "x=" + c->x->to_string() + " b2=" + c->element.to_string() : "none";
    d.fail(what + ": expected x=" + x.to_string() + " b2=" + b2.to_string() + ", got " + got);
  }
}

void run_counterexample(const Json& e, PackEntryResult& res, unsigned jobs) {
  Differ d(res);
  const auto b1 = parse_structuring_element(e.at("b1").get<std::string>());
  const auto b2 = parse_structuring_element(e.at("b2").get<std::string>());
  const PixelSet p = pixels_from_json(e.at("pixels"));
  const Json& x = e.at("expect");

  if (x.contains("subset")) d.flag("subset", x["subset"], b1.points().is_subset_of(b2.points()));
  if (x.contains("positive")) {
    const auto r = check_positive(b1, b2, p);
    d.flag("positive", x["positive"], r.verdict);
    if (x.contains("positive_at")) check_counterexample_at(d, "positive counterexample", x["positive_at"], r);
  }
  if (x.contains("negative")) {
    const auto r = check_negative(b1, b2, p);
    d.flag("negative", x["negative"], r.verdict);
    if (x.contains("negative_at")) check_counterexample_at(d, "negative counterexample", x["negative_at"], r);
  }
  if (x.contains("shift")) d.flag("shift inclusion", x["shift"], check_shift_inclusion(b1, b2, p).verdict);
  if (x.contains("whole_space")) {
    const auto r = check_whole_space(b1, b2);
    d.flag("whole space", x["whole_space"], r.verdict);
    if (x.contains("whole_space_at")) {
      const Point want = point_from_json(x["whole_space_at"]);
      if (!r.counterexample || r.counterexample->element != want) {
        d.fail("whole space counterexample: expected b2=" + want.to_string());
      }
    }
  }
  if (x.contains("weak_positive")) d.flag("weak positive", x["weak_positive"], check_weak_positive(b1, b2, p).verdict);
  if (x.contains("weak_negative")) d.flag("weak negative", x["weak_negative"], check_weak_negative(b1, b2, p).verdict);

  if (x.contains("oracle")) {
    const Json& o = x["oracle"];
    const PixelSet op = o.contains("pixels") ? pixels_from_json(o["pixels"]) : p;
    OracleOptions opts;
    opts.cap = o.value("cap", kDefaultOracleCap);
    opts.jobs = jobs;
    const auto v = property_holds(b1, b2, op, opts);
    if (o.contains("opening")) d.flag("oracle opening", o["opening"], v.holds_opening);
    if (o.contains("closing")) d.flag("oracle closing", o["closing"], v.holds_closing);
  }

  if (e.contains("image")) {
    const Image g = parse_masked_grid(e["image"].get<std::string>());
    if (!(g.domain() == p)) d.fail("image domain does not match the pixel set");
    if (x.contains("grids")) {
      const Json& gr = x["grids"];
      auto cmp = [&](const char* key, const Image& got) {
        if (gr.contains(key)) d.grid(key, parse_masked_grid(gr[key].get<std::string>()), got);
      };
      cmp("erosion_b1", erosion(g, b1));
      cmp("opening_b1", opening(g, b1));
      cmp("erosion_b2", erosion(g, b2));
      cmp("opening_b2", opening(g, b2));
    }
    if (x.contains("violation_at")) {
      const Point q = point_from_json(x["violation_at"]);
      if (!opening_violated_at(g, b1, b2, q)) d.fail("no opening violation at " + q.to_string());
    }
  }
}

void run_sequence(const Json& e, PackEntryResult& res) {
  Differ d(res);
  std::vector<StructuringElement> seq;
  for (const auto& s : e.at("elements")) seq.push_back(parse_structuring_element(s.get<std::string>()));
  const Relation rel = e.value("relation", std::string("S")) == "WS" ? Relation::WeakShift : Relation::Shift;
  if (e.value("scope", std::string("whole-space")) != "whole-space") {
    d.fail("only whole-space sequence entries are supported");
    return;
  }
  const auto reports = verify_sequence(seq, Scope::whole_space(2), rel);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!reports[i].verdict) d.fail("pair " + std::to_string(i) + " -> " + std::to_string(i + 1) + " not nested");
  }
  d.flag("sequence verdict", e.value("verdict", true), all_hold(reports));
}

}  // namespace

PackReport run_pack(const Json& pack, unsigned jobs) {
  PackReport rep;
  for (const auto& e : pack.value("counterexamples", Json::array())) {
    PackEntryResult r{e.value("name", std::string("?")), "counterexample", true, {}};
    try {
      run_counterexample(e, r, jobs);
    } catch (const std::exception& ex) {
      r.passed = false;
      r.diffs.push_back(std::string("error: ") + ex.what());
    }
    rep.entries.push_back(std::move(r));
    ++rep.counterexample_entries;
  }
  for (const auto& e : pack.value("sequences", Json::array())) {
    PackEntryResult r{e.value("name", std::string("?")), "sequence", true, {}};
    try {
      run_sequence(e, r);
    } catch (const std::exception& ex) {
      r.passed = false;
      r.diffs.push_back(std::string("error: ") + ex.what());
    }
    rep.entries.push_back(std::move(r));
    ++rep.sequence_entries;
  }
  return rep;
}

std::vector<PackCase> pack_cases(const Json& pack) {
  std::vector<PackCase> out;
  for (const auto& e : pack.value("counterexamples", Json::array())) {
    PackCase c{e.at("name").get<std::string>(), parse_structuring_element(e.at("b1").get<std::string>()),
               parse_structuring_element(e.at("b2").get<std::string>()), pixels_from_json(e.at("pixels")),
               std::nullopt};
    if (e.contains("image")) c.image = parse_masked_grid(e["image"].get<std::string>());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::pair<std::string, std::vector<StructuringElement>>> pack_sequences(const Json& pack) {
  std::vector<std::pair<std::string, std::vector<StructuringElement>>> out;
  for (const auto& e : pack.value("sequences", Json::array())) {
    std::vector<StructuringElement> seq;
    for (const auto& s : e.at("elements")) seq.push_back(parse_structuring_element(s.get<std::string>()));
    out.emplace_back(e.at("name").get<std::string>(), std::move(seq));
  }
  return out;
}

std::vector<AuditInstance> audit_corpus(const Json& pack) {
  std::vector<AuditInstance> out;
  for (auto& c : pack_cases(pack)) out.push_back(AuditInstance{c.name, c.b1, c.b2, c.pixels});
  return out;
}

}  // namespace latmorph
