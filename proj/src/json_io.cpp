#include "gcl/json_io.hpp"

#include "gcl/error.hpp"

namespace gcl {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail("ParseError", std::string("missing field '") + key + "'");
  return j.at(key);
}

Group group_of(const json& j) {
  const json& g = field(j, "group");
  if (g.is_string()) return parse_group(g.get<std::string>());
  if (g.is_number_integer()) return parse_group(std::to_string(g.get<long long>()));
  fail("ParseError", "group must be a string such as \"2,4\"");
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail("ParseError", "scalars are strings like \"1/2\" or \"1+eps\"");
}

Rat rational_of(const json& v) { return parse_rational(scalar_text(v)); }

}  // namespace

json ray_to_json(const Ray& e) {
  json values = json::object();
  const auto& pairs = e.group.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p)
    values[e.group.pair_str(pairs[p].first, pairs[p].second)] = e.values[p];
  return {{"group", e.group.str()}, {"values", values}};
}

Ray ray_from_json(const json& j) {
  Group g = group_of(j);
  PairValues pv(g.pairs().size());
  const json& vals = field(j, "values");
  if (!vals.is_object()) fail("ParseError", "values must be an object");
  for (auto it = vals.begin(); it != vals.end(); ++it) {
    auto [m, n] = g.parse_pair(it.key());
    int p = g.pair_index(m, n);
    if (p < 0) fail("ParseError", "pair " + it.key() + " involves 0");
    if (!it.value().is_number_integer()) fail("ParseError", "ray values must be integers");
    pv[p] = it.value().get<long long>();
  }
  return ray_from_partial_values(g, pv);
}

json ring_to_json(const Ring& r) {
  switch (r.kind()) {
    case Ring::Kind::Rational: return {{"kind", "Q"}};
    case Ring::Kind::PrimeField: return {{"kind", "Fp"}, {"p", r.p()}};
    case Ring::Kind::Dual: return {{"kind", "dual"}};
  }
  return {};
}

Ring ring_from_json(const json& j) {
  if (j.is_string()) return Ring::parse(j.get<std::string>());
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "Fp") return Ring::prime_field(field(j, "p").get<long long>());
  return Ring::parse(kind);
}

json algebra_to_json(const MGradedAlgebra& a) {
  json psi = json::object();
  const auto& pairs = a.group.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p)
    psi[a.group.pair_str(pairs[p].first, pairs[p].second)] = a.psi[p].str();
  return {{"group", a.group.str()}, {"ring", ring_to_json(a.ring)}, {"psi", psi}};
}

MGradedAlgebra algebra_from_json(const json& j) {
  Group g = group_of(j);
  Ring r = ring_from_json(field(j, "ring"));
  std::vector<std::optional<Scalar>> table(g.pairs().size());
  const json& psi = field(j, "psi");
  for (auto it = psi.begin(); it != psi.end(); ++it) {
    auto [m, n] = g.parse_pair(it.key());
    int p = g.pair_index(m, n);
    if (p < 0) fail("ParseError", "pair " + it.key() + " involves 0");
    table[p] = r.parse_scalar(scalar_text(it.value()));
  }
  return algebra_from_table(g, r, table);
}

json s3_to_json(const S3CoverData& x) {
  json params = json::object();
  auto vals = x.params();
  for (std::size_t i = 0; i < vals.size(); ++i) params[S3CoverData::names()[i]] = vals[i].str();
  return {{"ring", ring_to_json(x.ring)}, {"params", params}};
}

S3CoverData s3_from_json(const json& j) {
  Ring r = ring_from_json(field(j, "ring"));
  const json& params = field(j, "params");
  std::vector<Scalar> vals;
  for (auto& name : S3CoverData::names()) vals.push_back(r.parse_scalar(scalar_text(field(params, name.c_str()))));
  return S3CoverData::from_params(r, vals);
}

json triple_to_json(const TripleCoverData& t) {
  return {{"ring", ring_to_json(t.ring)},
          {"params", {{"a", t.a.str()}, {"b", t.b.str()}, {"c", t.c.str()}, {"e", t.e.str()}}}};
}

TripleCoverData triple_from_json(const json& j) {
  Ring r = ring_from_json(field(j, "ring"));
  const json& p = field(j, "params");
  auto get = [&](const char* k) { return r.parse_scalar(scalar_text(field(p, k))); };
  return {r, get("a"), get("b"), get("c"), get("e")};
}

SurfaceNumbers surface_numbers_from_json(const json& j) {
  SurfaceNumbers s;
  if (j.is_null()) return s;
  if (!j.is_object()) fail("ParseError", "surface inputs must be an object");
  std::pair<const char*, Rat*> slots[] = {{"KY2", &s.KY2},   {"c1sq", &s.c1sq}, {"c1K", &s.c1K},
                                          {"c2", &s.c2},     {"D2", &s.D2},     {"DK", &s.DK},
                                          {"chiOY", &s.chiOY}, {"pgY", &s.pgY}, {"h2F", &s.h2F},
                                          {"h2LD", &s.h2LD}};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (auto& [k, ptr] : slots)
      if (it.key() == k) {
        *ptr = rational_of(it.value());
        known = true;
      }
    if (!known) fail("ParseError", "unknown surface input '" + it.key() + "'");
  }
  return s;
}

json surface_invariants_to_json(const SurfaceInvariants& s) {
  return {{"KX2", rational_str(s.KX2)},
          {"pgX", rational_str(s.pgX)},
          {"chiOX", rational_str(s.chiOX)},
          {"Y0count", s.Y0count.str()}};
}

json hdata_to_json(const Group& g, const HData& d) {
  json H = json::array(), hm = json::object();
  for (int x : d.H) H.push_back(g.element_str(x));
  for (int m = 0; m < g.size(); ++m) hm[g.element_str(m)] = d.h_m[m];
  return {{"H", H}, {"h_m", hm}, {"h", d.h}};
}

json presentation_to_json(const RMPresentation& p) {
  json vars = json::array(), rels = json::array();
  for (auto [m, n] : p.variables) vars.push_back(p.group.pair_str(m, n));
  auto mono = [&](const std::vector<int>& idx) {
    json o = json::object();
    for (int i : idx) {
      std::string k = p.group.pair_str(p.variables[i].first, p.variables[i].second);
      o[k] = o.contains(k) ? o[k].get<int>() + 1 : 1;
    }
    return o;
  };
  for (auto& r : p.relations) rels.push_back({{"lhs", mono(r.lhs)}, {"rhs", mono(r.rhs)}});
  return {{"group", p.group.str()}, {"variables", vars}, {"relations", rels}};
}

json witness_to_json(const Group& g, const ReducibilityWitness& w) {
  auto side = [&](const std::vector<std::pair<int, int>>& ps) {
    json o = json::object();
    for (auto [x, y] : ps) {
      std::string k = g.pair_str(x, y);
      o[k] = o.contains(k) ? o[k].get<int>() + 1 : 1;
    }
    return o;
  };
  return {{"m", g.element_str(w.m)}, {"n", g.element_str(w.n)}, {"t", g.element_str(w.t)},
          {"a", g.element_str(w.a)}, {"alpha", side(w.alpha_pairs)}, {"beta", side(w.beta_pairs)}};
}

json sigma_to_json(const SigmaTuple& chi) {
  return {{"r", chi.r}, {"alpha", chi.alpha}, {"N", chi.N}, {"qbar", chi.qbar},
          {"target", chi.phi.target().str()}, {"phi", chi.phi.str()}};
}

json qbar_invariants_to_json(const QbarInvariants& v) {
  return {{"r", v.r}, {"alpha", v.alpha}, {"N", v.N}, {"qbar", v.qbar}, {"qhat", v.qhat},
          {"qprime", v.qprime}, {"z", v.z}, {"x", v.x}, {"y", v.y}, {"w", v.w}, {"f", v.f}};
}

}  // namespace gcl
