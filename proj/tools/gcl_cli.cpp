#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gcl/catalog.hpp"
#include "gcl/error.hpp"
#include "gcl/graded_algebra.hpp"
#include "gcl/json_io.hpp"
#include "gcl/presentation.hpp"
#include "gcl/s3.hpp"

using namespace gcl;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inline JSON if it starts with '{', otherwise a file path.
json load_json(const std::string& source) {
  std::string text;
  auto first = source.find_first_not_of(" \t\n");
  if (first != std::string::npos && source[first] == '{') {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read " + source);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("ParseError", e.what());
  }
}

std::vector<long long> int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      fail("ParseError", "not an integer list: " + text);
    }
  }
  return out;
}

std::vector<std::string> scalar_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

json rays_json(const std::vector<Ray>& rays) {
  json a = json::array();
  for (auto& e : rays) a.push_back(ray_to_json(e));
  return a;
}

json violations_json(const Group& g, const std::vector<Violation>& vs) {
  json a = json::array();
  for (auto& v : vs) a.push_back({g.element_str(v.m), g.element_str(v.n), g.element_str(v.t)});
  return a;
}

std::string render_table(const json& out) {
  std::string s;
  if (out.is_array()) {
    for (auto& row : out) s += row.dump() + "\n";
  } else if (out.is_object()) {
    for (auto it = out.begin(); it != out.end(); ++it) s += it.key() + "\t" + it.value().dump() + "\n";
  } else {
    s = out.dump() + "\n";
  }
  return s;
}

struct Options {
  std::string group, ray, algebra, data, inputs, ring = "q", twist, tuple, phi, kind, params;
  std::string a = "1", b = "0", m, n;
  std::string format = "json";
  long long beta = 0, N = 0, fuel = 0;
  int max_order = kDefaultMaxOrder;
  bool all_predicates = false, modulo_duality = false;
};

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("GCL_MAX_ORDER")) {
    try {
      o.max_order = std::stoi(env);
    } catch (const std::logic_error&) {
      std::cerr << "GCL_MAX_ORDER must be an integer\n";
      return 2;
    }
  }

  CLI::App app{"Computations with graded covers of finite abelian groups and S3 cover data"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-order", o.max_order, "bound on |M| for enumerations");
  app.add_option("--fuel", o.fuel, "rewriting fuel (0 = default)");

  std::string command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&command, parent, name] { command = parent->get_name() + " " + name; });
    c->fallthrough();
    return c;
  };
  auto need_group = [&](CLI::App* c) { c->add_option("--group", o.group, "cyclic orders, e.g. 2,4")->required(); };

  CLI::App* group = app.add_subcommand("group", "finite abelian groups");
  group->require_subcommand(1);
  group->fallthrough();
  need_group(leaf(group, "info", "elements and invariants"));

  CLI::App* rays = app.add_subcommand("rays", "extremal rays of the dual monoid");
  rays->require_subcommand(1);
  rays->fallthrough();
  need_group(leaf(rays, "enumerate", "all extremal rays"));
  auto* rcheck = leaf(rays, "check", "predicates on a ray");
  rcheck->add_option("--ray", o.ray, "ray JSON file or inline JSON")->required();
  rcheck->add_flag("--all-predicates", o.all_predicates);
  leaf(rays, "h", "H, h_m and h of a ray")->add_option("--ray", o.ray)->required();
  leaf(rays, "e", "e-invariant of a ray")->add_option("--ray", o.ray)->required();

  CLI::App* catalog = app.add_subcommand("catalog", "named ray families");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  need_group(leaf(catalog, "pardini", "rays of surjections onto cyclic groups"));
  auto* omega = leaf(catalog, "omega", "d_q, Omega and q-hat");
  omega->add_option("--beta", o.beta)->required();
  omega->add_option("--n", o.N)->required();
  auto* sigma = leaf(catalog, "sigma", "the tuple set and its duality");
  need_group(sigma);
  sigma->add_flag("--modulo-duality", o.modulo_duality);
  need_group(leaf(catalog, "theta2", "smooth sequences with h <= 2"));
  auto* dray = leaf(catalog, "delta-ray", "Delta ray of one tuple");
  need_group(dray);
  dray->add_option("--tuple", o.tuple, "r,alpha,N,qbar")->required();
  dray->add_option("--phi", o.phi, "generator images separated by ';'")->required();

  CLI::App* alg = app.add_subcommand("algebra", "M-graded algebras");
  alg->require_subcommand(1);
  alg->fallthrough();
  auto* fr = leaf(alg, "from-ray", "algebra 0^E twisted by lambda");
  fr->add_option("--ray", o.ray)->required();
  fr->add_option("--ring", o.ring, "q, fp:P or dual");
  fr->add_option("--twist", o.twist, "lambda_m for m != 0, comma separated");
  leaf(alg, "verify", "associativity scan")->add_option("--algebra", o.algebra)->required();
  leaf(alg, "h", "H, h_m and h")->add_option("--algebra", o.algebra)->required();
  leaf(alg, "torsor", "torsor test")->add_option("--algebra", o.algebra)->required();
  auto* uni = leaf(alg, "universal", "universal algebra in two degrees");
  uni->add_option("--tuple", o.tuple, "r,alpha,N,qbar")->required();
  uni->add_option("--a", o.a);
  uni->add_option("--b", o.b);
  uni->add_option("--ring", o.ring);
  auto* qb = leaf(alg, "qbar", "recover (z, qbar, lambda)");
  qb->add_option("--algebra", o.algebra)->required();
  qb->add_option("--m", o.m)->required();
  qb->add_option("--n", o.n)->required();

  CLI::App* pres = app.add_subcommand("presentation", "binomial presentation");
  pres->require_subcommand(1);
  pres->fallthrough();
  need_group(leaf(pres, "relations", "variables and relations"));
  need_group(leaf(pres, "witness", "universal reducibility witness"));
  need_group(leaf(pres, "is-polynomial", "is the presentation free of relations"));

  CLI::App* s3 = app.add_subcommand("s3", "S3 cover local data");
  s3->require_subcommand(1);
  s3->fallthrough();
  leaf(s3, "verify", "violated equations")->add_option("--data", o.data)->required();
  auto* chart = leaf(s3, "chart", "chart constructors");
  chart->add_option("--kind", o.kind, "ualpha, ubeta or uomega")
      ->required()
      ->check(CLI::IsMember({"ualpha", "ubeta", "uomega"}));
  chart->add_option("--params", o.params, "comma separated")->required();
  chart->add_option("--ring", o.ring);
  leaf(s3, "torsor", "torsor test and discriminant")->add_option("--data", o.data)->required();
  leaf(s3, "components", "component membership")->add_option("--data", o.data)->required();
  leaf(s3, "quotient", "triple cover of the sigma-invariants")->add_option("--data", o.data)->required();
  leaf(s3, "invariants", "surface invariants")->add_option("--inputs", o.inputs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json inputs = json::object();
  auto echo = [&](const char* key, const std::string& v) {
    if (!v.empty()) inputs[key] = v;
  };
  echo("group", o.group);
  echo("ray", o.ray);
  echo("algebra", o.algebra);
  echo("data", o.data);
  echo("inputs", o.inputs);
  echo("tuple", o.tuple);
  echo("phi", o.phi);
  echo("kind", o.kind);
  echo("params", o.params);
  echo("twist", o.twist);
  echo("m", o.m);
  echo("n", o.n);

  try {
    json out;
    if (command == "group info") {
      Group g = parse_group(o.group);
      json elems = json::array();
      for (int x = 0; x < g.size(); ++x)
        elems.push_back({{"element", g.element_str(x)}, {"order", g.order_of(x)}});
      out = {{"orders", g.orders()}, {"size", g.size()}, {"exponent", g.exponent()}, {"elements", elems}};
    } else if (command == "rays enumerate") {
      out = rays_json(enumerate_extremal_rays(parse_group(o.group), o.max_order));
    } else if (command == "rays check") {
      Ray e = ray_from_json(load_json(o.ray));
      out = {{"valid", true}, {"normalized", is_normalized(e)}, {"extremal", is_extremal(e)}};
      if (o.all_predicates) {
        json supp = json::array();
        for (auto [m, n] : support(e)) supp.push_back(e.group.pair_str(m, n));
        out["support"] = supp;
        out["smooth_extremal"] = is_smooth_extremal(e);
        out["codim1_regular"] = is_codim1_regular(e);
        out["e_invariant"] = e_invariant(e);
        out["h"] = h_of_ray(e).h;
      }
    } else if (command == "rays h") {
      Ray e = ray_from_json(load_json(o.ray));
      out = hdata_to_json(e.group, h_of_ray(e));
    } else if (command == "rays e") {
      out = e_invariant(ray_from_json(load_json(o.ray)));
    } else if (command == "catalog pardini") {
      out = json::array();
      for (auto& phi : phi_maps(parse_group(o.group)))
        out.push_back({{"d", phi.target().size()}, {"phi", phi.str()}, {"ray", ray_to_json(pardini_ray(phi))}});
    } else if (command == "catalog omega") {
      if (o.N < 2 || o.beta < 0 || o.beta >= o.N) fail("InvalidInput", "need N > 1 and 0 <= beta < N");
      json d = json::array(), qh = json::object();
      for (long long q = 0; q <= o.N; ++q) d.push_back(d_q(o.beta, o.N, q));
      auto om = omega_set(o.beta, o.N);
      for (long long q : om) qh[std::to_string(q)] = q_hat(o.beta, o.N, q);
      out = {{"d", d}, {"omega", om}, {"qhat", qh}};
    } else if (command == "catalog sigma") {
      Group g = parse_group(o.group);
      auto tuples = o.modulo_duality ? sigma_modulo_duality(g, o.max_order) : sigma_enumerate(g, o.max_order);
      out = json::array();
      for (auto& chi : tuples) out.push_back(sigma_to_json(chi));
    } else if (command == "catalog theta2") {
      out = json::array();
      for (auto& seq : theta2(parse_group(o.group), o.max_order)) out.push_back(rays_json(seq));
    } else if (command == "catalog delta-ray") {
      Group g = parse_group(o.group);
      auto t = int_list(o.tuple);
      if (t.size() != 4) fail("InvalidInput", "tuple is r,alpha,N,qbar");
      auto target = two_generator_group(t[0], t[1], t[2]).group;
      SigmaTuple chi{t[0], t[1], t[2], t[3], parse_hom(g, target, o.phi)};
      if (!chi.phi.is_surjective()) fail("NotSurjective", "phi is not onto");
      out = ray_to_json(delta_ray(chi));
    } else if (command == "algebra from-ray") {
      Ray e = ray_from_json(load_json(o.ray));
      Ring ring = Ring::parse(o.ring);
      std::optional<TorsorTwist> tw;
      if (!o.twist.empty()) {
        auto vals = scalar_list(o.twist);
        if (static_cast<int>(vals.size()) != e.group.size() - 1)
          fail("InvalidTwist", "twist needs one value per nonzero element");
        tw = trivial_twist(e.group, ring);
        for (std::size_t i = 0; i < vals.size(); ++i) tw->values[i + 1] = ring.parse_scalar(vals[i]);
      }
      out = algebra_to_json(from_ray(e.group, ring, e, tw));
    } else if (command == "algebra verify") {
      auto a = algebra_from_json(load_json(o.algebra));
      auto v = verify(a);
      out = {{"ok", v.empty()}, {"violations", violations_json(a.group, v)}};
    } else if (command == "algebra h") {
      auto a = algebra_from_json(load_json(o.algebra));
      out = hdata_to_json(a.group, h_data(a));
    } else if (command == "algebra torsor") {
      out = is_torsor(algebra_from_json(load_json(o.algebra)));
    } else if (command == "algebra universal") {
      auto t = int_list(o.tuple);
      if (t.size() != 4) fail("InvalidInput", "tuple is r,alpha,N,qbar");
      Ring ring = Ring::parse(o.ring);
      auto u = universal_two_gen_algebra(t[0], t[1], t[2], t[3], ring.parse_scalar(o.a), ring.parse_scalar(o.b),
                                         o.fuel);
      const Group& g = u.algebra.group;
      json basis = json::object(), expo = json::object();
      for (int l = 0; l < g.size(); ++l) basis[g.element_str(l)] = {u.basis.table[l].first, u.basis.table[l].second};
      for (std::size_t p = 0; p < g.pairs().size(); ++p)
        expo[g.pair_str(g.pairs()[p].first, g.pairs()[p].second)] = {u.exponents[p].first, u.exponents[p].second};
      out = {{"invariants", qbar_invariants_to_json(u.basis.inv)},
             {"e1", g.element_str(u.basis.pres.e1)},
             {"e2", g.element_str(u.basis.pres.e2)},
             {"basis", basis},
             {"exponents", expo},
             {"algebra", algebra_to_json(u.algebra)}};
    } else if (command == "algebra qbar") {
      auto a = algebra_from_json(load_json(o.algebra));
      auto r = qbar_of(a, a.group.parse_element(o.m), a.group.parse_element(o.n));
      out = {{"r", r.pres.r}, {"alpha", r.pres.alpha}, {"N", r.pres.N},
             {"z", r.z},      {"qbar", r.qbar},         {"lambda", r.lambda.str()}};
    } else if (command == "presentation relations") {
      out = presentation_to_json(rm_presentation(parse_group(o.group)));
    } else if (command == "presentation witness") {
      Group g = parse_group(o.group);
      auto w = reducibility_witness(g);
      out = w ? witness_to_json(g, *w) : json(nullptr);
    } else if (command == "presentation is-polynomial") {
      out = is_polynomial_presentation(parse_group(o.group));
    } else if (command == "s3 verify") {
      auto v = verify_s3(s3_from_json(load_json(o.data)));
      out = {{"ok", v.empty()}, {"violations", v}};
    } else if (command == "s3 chart") {
      Ring ring = Ring::parse(o.ring);
      auto p = scalar_list(o.params);
      std::vector<Scalar> s;
      for (auto& x : p) s.push_back(ring.parse_scalar(x));
      if (o.kind == "uomega") {
        if (s.size() != 4) fail("InvalidInput", "uomega takes a,b,c,e");
        out = s3_to_json(from_triple_cover(TripleCoverData{ring, s[0], s[1], s[2], s[3]}));
      } else {
        if (s.size() != 3) fail("InvalidInput", o.kind + " takes three parameters");
        out = s3_to_json(o.kind == "ualpha" ? u_alpha_chart(s[0], s[1], s[2]) : u_beta_chart(s[0], s[1], s[2]));
      }
    } else if (command == "s3 torsor") {
      auto x = s3_from_json(load_json(o.data));
      out = {{"torsor", is_torsor_s3(x)}, {"discriminant", discriminant(x).str()}};
    } else if (command == "s3 components") {
      auto c = component_membership(s3_from_json(load_json(o.data)));
      out = {{"main", c.main}, {"second", c.second}};
    } else if (command == "s3 quotient") {
      out = triple_to_json(quotient_by_sigma(s3_from_json(load_json(o.data))));
    } else if (command == "s3 invariants") {
      json in = o.inputs.empty() ? json(nullptr) : load_json(o.inputs);
      out = surface_invariants_to_json(surface_invariants(surface_numbers_from_json(in)));
    } else {
      throw UsageError("unknown command");
    }

    if (o.format == "table") {
      std::cout << render_table(out);
    } else {
      json result = {{"command", command}, {"inputs", inputs}, {"output", out}, {"version", kVersion}};
      std::cout << result.dump(2) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
