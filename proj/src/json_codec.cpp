#include "latmorph/json_codec.hpp"

#include "latmorph/error.hpp"
#include "latmorph/io.hpp"
#include "latmorph/morphology.hpp"

namespace latmorph {

Json to_json(const Point& p) {
  Json a = Json::array();
  for (std::size_t i = 0; i < p.dimension(); ++i) a.push_back(p[i]);
  return a;
}

Json to_json(const PointSet& s) {
  Json a = Json::array();
  for (const Point& p : s) a.push_back(to_json(p));
  return a;
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a point is a non-empty array of integers");
  std::vector<Point::Coord> c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("point coordinates must be integers");
    c.push_back(v.get<Point::Coord>());
  }
  return Point(std::span<const Point::Coord>(c));
}

PointSet point_set_from_json(const Json& j, std::size_t dimension) {
  if (!j.is_array()) throw ParseError("a point set is an array of points");
  std::vector<Point> pts;
  for (const auto& e : j) pts.push_back(point_from_json(e));
  if (pts.empty()) {
    if (dimension == 0) throw ParseError("empty point set without a known dimension");
    return PointSet(dimension);
  }
  return PointSet(std::move(pts));
}

Json to_json(const Image& g) {
  Json values = Json::array();
  for (double v : g.values()) values.push_back(v);
  return Json{{"domain", to_json(g.domain().points())}, {"values", values}, {"zero_set", to_json(zero_set(g))}};
}

std::string sign_name(Sign s) {
  switch (s) {
    case Sign::Positive:
      return "+";
    case Sign::Negative:
      return "-";
    case Sign::Both:
      return "both";
  }
  return "?";
}

std::string relation_name(Relation r) { return r == Relation::Shift ? "S" : "WS"; }

namespace {

std::string kind_name(Counterexample::Kind k) {
  switch (k) {
    case Counterexample::Kind::NotSubset:
      return "not-subset";
    case Counterexample::Kind::Positive:
      return "positive";
    case Counterexample::Kind::Negative:
      return "negative";
  }
  return "?";
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json oracle_cex(const std::optional<OracleCounterexample>& c) {
  if (!c) return nullptr;
  return Json{{"index", c->index},
              {"pixel", to_json(c->pixel)},
              {"image", c->image.domain().dimension() == 2 ? Json(format_masked_grid(c->image)) : Json(nullptr)},
              {"values", to_json(c->image)["values"]}};
}

}  // namespace

Json to_json(const InclusionReport& r) {
  Json mode{{"relation", relation_name(r.mode.relation)},
            {"sign", sign_name(r.mode.sign)},
            {"scope", r.mode.whole_space ? "whole-space" : "restricted"}};

  Json witness = nullptr;
  if (r.verdict) {
    witness = Json::array();
    for (const auto& w : r.witness) {
      if (w.x) {
        witness.push_back(Json::array({sign_name(w.sign), to_json(*w.x), to_json(w.b2), to_json(w.b1)}));
      } else {
        witness.push_back(Json::array({to_json(w.b2), to_json(w.b1)}));
      }
    }
  }

  Json cex = nullptr;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    cex = Json{{"kind", kind_name(c.kind)}, {"x", c.x ? to_json(*c.x) : Json(nullptr)}};
    cex[c.kind == Counterexample::Kind::NotSubset ? "b1" : "b2"] = to_json(c.element);
  }

  Json translates = nullptr;
  if (r.mode.whole_space && r.mode.relation == Relation::Shift && r.verdict) {
    translates = Json::array();
    for (const Point& v : r.translates) translates.push_back(to_json(v));
  }

  return Json{{"verdict", r.verdict},
              {"mode", mode},
              {"witness", witness},
              {"counterexample", cex},
              {"translates", translates},
              {"stats",
               {{"subset", optional_bool(r.subset)},
                {"positive", optional_bool(r.positive)},
                {"negative", optional_bool(r.negative)},
                {"tuples_evaluated", r.tuples_evaluated}}}};
}

Json to_json(const PropertyVerdict& v) {
  return Json{{"holds_opening", v.holds_opening},
              {"holds_closing", v.holds_closing},
              {"images_checked", v.images_checked},
              {"opening_counterexample", oracle_cex(v.opening_counterexample)},
              {"closing_counterexample", oracle_cex(v.closing_counterexample)}};
}

Json to_json(const EquivalenceResult& r) {
  return Json{{"agrees", r.agrees},
              {"weak_opening", r.weak_opening},
              {"weak_closing", r.weak_closing},
              {"oracle", to_json(r.oracle)}};
}

Json to_json(const ImplicationMatrix& m) {
  Json claims = Json::array();
  for (const auto& c : m.claims) {
    claims.push_back(Json{{"label", c.label},
                          {"from", relation_kind_name(c.from)},
                          {"to", relation_kind_name(c.to)},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"falsified_by", c.falsified_by ? Json(*c.falsified_by) : Json(nullptr)}});
  }
  Json instances = Json::array();
  for (const auto& v : m.instances) {
    instances.push_back(Json{{"name", v.name},
                             {"S,M", v.shift_whole},
                             {"S,P", v.shift_restricted},
                             {"WS,M", v.weak_whole},
                             {"WS,P", v.weak_restricted}});
  }
  return Json{{"consistent", m.consistent()}, {"claims", claims}, {"instances", instances}};
}

Json to_json(const GranulometryResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(Json{{"step", s.index}, {"zero_pixels", s.zero_pixels}});
  Json verification = Json::array();
  for (const auto& v : r.verification) verification.push_back(to_json(v));
  return Json{{"mode", r.mode == FilterMode::Opening ? "opening" : "closing"},
              {"verified", r.verified},
              {"forced", r.forced},
              {"monotone", r.monotone()},
              {"curve", steps},
              {"verification", verification}};
}

SequenceRecipe recipe_from_json(const Json& j) {
  try {
    SequenceRecipe r;
    r.kind = parse_recipe_kind(j.at("kind").get<std::string>());
    const Json params = j.value("params", Json::object());
    switch (r.kind) {
      case RecipeKind::TranslateUnion: {
        r.base = StructuringElement(point_set_from_json(params.at("base")));
        for (const auto& step : params.value("steps", Json::array())) {
          std::vector<Point> vs;
          for (const auto& v : step) vs.push_back(point_from_json(v));
          r.steps.push_back(std::move(vs));
        }
        break;
      }
      case RecipeKind::RectangleChain:
        for (const auto& b : params.at("rectangles")) {
          r.rectangles.push_back(Box{point_from_json(b.at("lo")), point_from_json(b.at("hi"))});
        }
        break;
      case RecipeKind::SquareIteration:
        r.n = params.at("n").get<int>();
        break;
      case RecipeKind::L1Chain:
        r.omega_max = params.at("omega_max").get<int>();
        r.dimension = params.value("dimension", std::size_t{2});
        break;
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid recipe: ") + e.what());
  }
}

Json to_json(const SequenceRecipe& r) {
  Json params = Json::object();
  switch (r.kind) {
    case RecipeKind::TranslateUnion: {
      params["base"] = r.base ? to_json(r.base->points()) : Json(nullptr);
      Json steps = Json::array();
      for (const auto& vs : r.steps) {
        Json s = Json::array();
        for (const Point& v : vs) s.push_back(to_json(v));
        steps.push_back(s);
      }
      params["steps"] = steps;
      break;
    }
    case RecipeKind::RectangleChain: {
      Json rects = Json::array();
      for (const Box& b : r.rectangles) rects.push_back(Json{{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}});
      params["rectangles"] = rects;
      break;
    }
    case RecipeKind::SquareIteration:
      params["n"] = r.n;
      break;
    case RecipeKind::L1Chain:
      params["omega_max"] = r.omega_max;
      params["dimension"] = r.dimension;
      break;
  }
  return Json{{"kind", recipe_kind_name(r.kind)},
              {"params", params},
              {"guarantee", guarantee_name(r.guarantee())},
              {"note", r.guarantee_note()}};
}

Json sequence_to_json(std::span<const StructuringElement> seq) {
  Json a = Json::array();
  for (const auto& b : seq) a.push_back(to_json(b.points()));
  return a;
}

}  // namespace latmorph
