#include "classify/classify.hpp"
#include "polycore/parse.hpp"

namespace sextic {

namespace {

using nlohmann::json;

json quad_json(const QuadExt& q) {
  return {{"a", to_string(q.a())}, {"b", to_string(q.b())}, {"text", q.to_string()}};
}

json completion_json(const SquareCompletion& c) {
  return {{"core", format(c.core)},
          {"scale", to_string(c.scale)},
          {"remainder", format(c.remainder)},
          {"substitution", c.substitution}};
}

json mp2_json(const Mp2Analysis& m) {
  json j = {{"a", json::array({to_string(m.a2), to_string(m.a1), to_string(m.a0)})},
            {"b", json::array({to_string(m.b2), to_string(m.b1), to_string(m.b0)})},
            {"y_flipped", m.y_flipped},
            {"is_square", m.is_square},
            {"verdict", m.verdict}};
  if (m.alpha1) {
    j["alpha1"] = {{"value", to_string(m.alpha1->value)}, {"under_sqrt", m.alpha1->under_sqrt}};
    j["alpha2"] = {{"value", to_string(m.alpha2->value)}, {"under_sqrt", m.alpha2->under_sqrt}};
    j["rho"] = to_string(m.rho);
    j["A"] = to_string(m.A);
    j["b_divisible"] = m.b_divisible;
  }
  if (m.completion) {
    j["beta1"] = to_string(m.beta1);
    j["beta2"] = to_string(m.beta2);
    j["completion"] = completion_json(*m.completion);
    j["B"] = format(m.b_layer);
    j["B_vanishes"] = m.b_vanishes;
    if (m.quartic) j["quartic"] = format(*m.quartic);
    if (!m.quartic_failure.empty()) j["quartic_failure"] = m.quartic_failure;
  }
  return j;
}

json mp3_json(const Mp3Analysis& m) {
  static const char* names[] = {"anisotropic", "degenerate", "weighted-cubic", "shape"};
  json j = {{"branch", names[static_cast<int>(m.branch)]}, {"verdict", m.verdict}};
  if (m.branch == Mp3Branch::Anisotropic || m.branch == Mp3Branch::Degenerate) {
    j["theta"] = to_string(m.theta);
  }
  if (m.branch == Mp3Branch::WeightedCubic) {
    json u = json::array();
    for (int i = 0; i < 4; ++i) u.push_back(to_string(m.lead_cubic[i]));
    j["lead_cubic"] = {{"u3_u2_u1_u0", u}};
  }
  if (m.shape) {
    json L = json::array();
    for (const auto& [p, q] : m.shape->L) L.push_back(json::array({to_string(p), to_string(q)}));
    j["shape"] = {{"a2", to_string(m.shape->a2)},
                  {"a1", to_string(m.shape->a1)},
                  {"a0", to_string(m.shape->a0)},
                  {"L", L},
                  {"G", format(m.shape->G)}};
  }
  if (m.square) {
    const auto& s = *m.square;
    json sq = {{"is_square", s.is_square}, {"verdict", s.verdict}, {"x_flipped", s.x_flipped}};
    if (s.is_square) {
      sq["a"] = to_string(s.a);
      sq["alpha2"] = "1";
      sq["alpha1"] = to_string(s.alpha1);
      json betas = json::array();
      for (int i = 1; i <= 5; ++i) betas.push_back(to_string(s.beta[i]));
      sq["beta"] = betas;
    }
    if (s.failed_layer) sq["failed_layer"] = "L" + std::to_string(*s.failed_layer + 1);
    if (s.completion) {
      sq["completion"] = completion_json(*s.completion);
      sq["remainder_small"] = s.remainder_small;
    }
    j["square"] = sq;
  }
  if (m.ecform) {
    const auto& e = *m.ecform;
    json res = json::array();
    for (const auto& [X, Y] : e.substitution.residues) res.push_back(json::array({to_string(X), to_string(Y)}));
    j["ecform"] = {{"a", to_string(e.a)},
                   {"b1", to_string(e.b1)},
                   {"b0", to_string(e.b0)},
                   {"G", format(e.G)},
                   {"substitution", e.substitution.to_string()},
                   {"integrality_modulus", to_string(e.substitution.modulus)},
                   {"integral_residues", res}};
  }
  return j;
}

json recommended(const ClassificationReport& r) {
  json out = json::array();
  switch (r.route) {
    case Route::MP0:
    case Route::NotASextic:
      out.push_back("density");
      out.push_back("witness");
      break;
    case Route::MP3:
      out.push_back("witness");
      if (r.mp3 && r.mp3->ecform) out.push_back(r.mp3->ecform->b1 != 0 ? "curve rouse" : "curve danilov");
      break;
    default:
      out.push_back("witness");
      out.push_back("density");
  }
  return out;
}

}  // namespace

json to_json(const ClassificationReport& r) {
  json j;
  j["schema"] = "1";
  j["polynomial"] = to_json(r.input);
  j["text"] = format(r.input);
  j["degree"] = r.degree;
  j["route"] = to_string(r.route);
  json profile = json::array();
  for (const auto& [m, d] : r.profile) profile.push_back(json::array({m, d}));
  j["profile"] = profile;
  j["definiteness"] = r.degree == 6 ? to_string(r.definiteness) : "n/a";
  json conds = json::array();
  for (const auto& c : r.conditions) {
    conds.push_back({{"name", c.name},
                     {"value", c.value},
                     {"divisor", c.divisor},
                     {"dividend", c.dividend},
                     {"quotient", c.quotient},
                     {"remainder", c.remainder},
                     {"detail", c.detail}});
  }
  j["conditions"] = conds;
  const auto& u = r.normalization;
  j["normalization"] = {{"matrix", json::array({json::array({to_string(u.p), to_string(u.q)}),
                                                    json::array({to_string(u.r), to_string(u.s)})})},
                        {"polynomial", format(r.normalized)}};
  json shape = json::object();
  if (r.mp1_cubic) {
    shape["mp1_cubic"] = {{"f", format(r.mp1_cubic->f)}, {"a", to_string(r.mp1_cubic->a)}};
    if (r.mp1_cubic->completion) shape["mp1_cubic"]["completion"] = completion_json(*r.mp1_cubic->completion);
  }
  if (r.quadratic) {
    const auto& q = *r.quadratic;
    json vk = json::array(), wk = json::array();
    for (const auto& c : q.v_k) vk.push_back(quad_json(c));
    for (const auto& c : q.w_k) wk.push_back(quad_json(c));
    shape["quadratic"] = {{"k", q.k},
                          {"transformation", q.transformation},
                          {"v_k", vk},
                          {"w_k", wk},
                          {"vk_is_square", q.vk_is_square},
                          {"verdict", q.verdict}};
    if (q.beta) shape["quadratic"]["beta"] = quad_json(*q.beta);
    if (q.wk_at_beta) shape["quadratic"]["wk_at_beta"] = quad_json(*q.wk_at_beta);
  }
  if (r.mp2) shape["mp2"] = mp2_json(*r.mp2);
  if (r.mp3) shape["mp3"] = mp3_json(*r.mp3);
  j["shape"] = shape;
  if (r.composed) {
    j["composed"] = {{"outer", r.composed->outer.to_string('t')}, {"inner", format(r.composed->inner)}};
  } else {
    j["composed"] = nullptr;
  }
  j["notes"] = r.notes;
  j["recommended"] = recommended(r);
  return j;
}

}  // namespace sextic
