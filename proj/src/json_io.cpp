#include "w22/json_io.hpp"

#include "w22/errors.hpp"

namespace w22 {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string \"p/q\", got " + j.dump());
}

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return Json{{"offset", s.offset().str()}, {"coeffs", coeffs}, {"order", s.order()}};
}

QSeries qseries_from_json(const Json& j) {
  try {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    if (j.contains("order") && j.at("order").get<std::size_t>() + 1 != coeffs.size()) {
      throw ParseError("series order does not match the number of coefficients");
    }
    Rational offset = j.contains("offset") ? rational_from_json(j.at("offset")) : Rational(0);
    if (coeffs.empty()) throw ParseError("series has no coefficients");
    return QSeries(offset, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad series record: ") + e.what());
  }
}

Json to_json(const Monomial& m) { return Json{{"w", m.w}, {"l", m.l}}; }

Json to_json(const ModuleVector& v) {
  Json out = Json::array();
  for (const auto& [m, x] : v.terms()) out.push_back(Json::array({to_json(m), x.str()}));
  return out;
}

Json to_json(const HighestWeight& w) {
  return Json{{"c", w.c.str()}, {"h1", w.h1.str()}, {"h2", w.h2.str()}};
}

Json to_json(const GramMatrix& g) {
  Json basis = Json::array();
  for (const auto& m : g.basis) basis.push_back(to_json(m));
  Json rows = Json::array();
  for (const auto& row : g.entries) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  Json radical = Json::array();
  for (const auto& v : radical_basis(g)) radical.push_back(to_json(v));
  return Json{{"weight", to_json(g.module.weight())},
              {"vacuum", g.module.vacuum()},
              {"level", g.level},
              {"basis", basis},
              {"matrix", rows},
              {"determinant", det_gram(g).str()},
              {"radical", radical}};
}

Json to_json(const IrreducibilityDecision& d) {
  Json out{{"irreducible", d.irreducible}, {"witness_m", nullptr}, {"trivial_vacuum", d.trivial_vacuum}};
  if (d.witness_m) out["witness_m"] = *d.witness_m;
  return out;
}

Json to_json(const GrowthReport& r) {
  return Json{{"classification", to_string(r.classification)},
              {"checkpoints", r.checkpoints},
              {"exponent_track", r.exponent_track},
              {"sqrt_track", r.sqrt_track},
              {"window", Json{{"begin", r.window_begin}, {"end", r.window_end}}},
              {"thresholds", Json{{"window_checkpoints", r.config.window},
                                  {"poly_spread", r.config.poly_spread},
                                  {"super_rel_spread", r.config.super_rel_spread},
                                  {"checkpoint_ratio", r.config.checkpoint_ratio},
                                  {"first_checkpoint", r.config.first_checkpoint},
                                  {"min_coeffs", r.config.min_coeffs}}}};
}

Json to_json(const MinimalPair& p) { return Json::array({p.s, p.t}); }

Json to_json(const std::vector<PairSolution>& sols) {
  Json out = Json::array();
  for (const auto& [a, b] : sols) out.push_back(Json::array({to_json(a), to_json(b)}));
  return out;
}

Json to_json(const CurvePoint& p) {
  auto coord = [](const std::optional<Rational>& v) { return v ? Json(v->str()) : Json("inf"); };
  Json out{{"x", coord(p.x)}, {"y", coord(p.y)}, {"finite", p.finite()}};
  if (p.finite()) out["on_curve"] = on_curve(p);
  return out;
}

Json to_json(const NoncongruentResult& r) {
  auto entry = [](const NoncongruentEntry& e) {
    Json j{{"pair", to_json(e.pair)}, {"charge", e.charge.str()}, {"multiple", nullptr}};
    if (e.multiple) j["multiple"] = *e.multiple;
    return j;
  };
  Json examined = Json::array(), collisions = Json::array();
  for (const auto& e : r.examined) examined.push_back(entry(e));
  for (const auto& e : r.collisions) collisions.push_back(entry(e));
  return Json{{"k", r.k}, {"modulus", r.modulus}, {"collisions", collisions}, {"examined", examined}};
}

namespace {

Vec2 vec2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a coordinate pair, got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json vec2_json(const Vec2& v) { return Json::array({v.a.str(), v.b.str()}); }

}  // namespace

CommAlgebra2 comm_algebra_from_json(const Json& j) {
  try {
    std::array<std::string, 2> labels{"e1", "e2"};
    if (j.contains("basis")) {
      const auto& b = j.at("basis");
      if (!b.is_array() || b.size() != 2) throw ParseError("\"basis\" must list two labels");
      labels = {b[0].get<std::string>(), b[1].get<std::string>()};
    }
    const auto& p = j.at("products");
    const auto& f = j.at("form");
    if (!p.is_array() || p.size() != 2 || !f.is_array() || f.size() != 2) {
      throw ParseError("\"products\" and \"form\" must be 2x2 arrays");
    }
    CommAlgebra2::Table table;
    CommAlgebra2::Form form;
    for (int i = 0; i < 2; ++i) {
      if (!p[i].is_array() || p[i].size() != 2 || !f[i].is_array() || f[i].size() != 2) {
        throw ParseError("\"products\" and \"form\" must be 2x2 arrays");
      }
      for (int k = 0; k < 2; ++k) {
        table[i][k] = vec2_from_json(p[i][k]);
        form[i][k] = rational_from_json(f[i][k]);
      }
    }
    return CommAlgebra2::make(labels, table, form);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad algebra record: ") + e.what());
  }
}

Json to_json(const CommAlgebra2& a) {
  Json products = Json::array(), form = Json::array();
  for (int i = 0; i < 2; ++i) {
    products.push_back(Json::array({vec2_json(a.products()[i][0]), vec2_json(a.products()[i][1])}));
    form.push_back(Json::array({a.form_matrix()[i][0].str(), a.form_matrix()[i][1].str()}));
  }
  return Json{{"basis", Json::array({a.labels()[0], a.labels()[1]})}, {"products", products}, {"form", form}};
}

Json to_json(const GriessVerdict& v, const CommAlgebra2& a) {
  if (v.kind == GriessVerdict::Kind::radical) {
    return Json{{"kind", "radical"}, {"c", v.c.str()}, {"nilpotent", vec2_json(v.nilpotent)},
                {"nilpotent_text", a.str(v.nilpotent)}};
  }
  return Json{{"kind", "semisimple"},
              {"c", v.c.str()},
              {"c1", v.c1.str()},
              {"c2", v.c2.str()},
              {"idempotents", Json::array({vec2_json(v.p1), vec2_json(v.p2)})}};
}

Json to_json(const PipelineResult& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) {
    trace.push_back(Json{{"step", s.step}, {"claim", s.claim}, {"paper_anchor", s.anchor}, {"outcome", s.outcome}});
  }
  Json mods = Json::array();
  for (const auto& [h1, h2] : r.surviving_modules) mods.push_back(Json::array({h1.str(), h2.str()}));
  return Json{{"verdict", r.verdict}, {"hypotheses_met", r.hypotheses_met}, {"surviving_modules", mods},
              {"trace", trace}};
}

}  // namespace w22
