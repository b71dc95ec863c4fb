#include "gcl/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gcl/error.hpp"
#include "gcl/intmat.hpp"
#include "gcl/numeric.hpp"

namespace gcl {

struct Group::Tables {
  int size = 1;
  std::vector<int> add;  // size * size
  std::vector<int> neg;
  std::vector<int> order;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pair_lookup;  // size * size
};

Group::Group() : Group(std::vector<int>{}) {}

Group::Group(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  long long size = 1;
  for (int o : orders_) {
    if (o <= 1) fail("InvalidOrder", "cyclic order must be at least 2, got " + std::to_string(o));
    size *= o;
    if (size > 4096) fail("TooLarge", "group order above 4096 is not supported");
  }
  auto t = std::make_shared<Tables>();
  int n = static_cast<int>(size);
  t->size = n;
  std::vector<std::vector<int>> res(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> r(orders_.size());
    int rem = x;
    for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i) {
      r[i] = rem % orders_[i];
      rem /= orders_[i];
    }
    res[x] = std::move(r);
  }
  auto idx = [&](const std::vector<int>& r) {
    int x = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) x = x * orders_[i] + r[i];
    return x;
  };
  t->add.resize(static_cast<std::size_t>(n) * n);
  t->neg.resize(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) r[i] = (orders_[i] - res[x][i]) % orders_[i];
    t->neg[x] = idx(r);
    for (int y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < orders_.size(); ++i) r[i] = (res[x][i] + res[y][i]) % orders_[i];
      t->add[static_cast<std::size_t>(x) * n + y] = idx(r);
    }
  }
  t->order.resize(n);
  for (int x = 0; x < n; ++x) {
    int k = 1, acc = x;
    while (acc != 0) {
      acc = t->add[static_cast<std::size_t>(acc) * n + x];
      ++k;
    }
    t->order[x] = k;
  }
  t->pair_lookup.assign(static_cast<std::size_t>(n) * n, -1);
  for (int m = 1; m < n; ++m)
    for (int k = m; k < n; ++k) {
      int id = static_cast<int>(t->pairs.size());
      t->pairs.emplace_back(m, k);
      t->pair_lookup[static_cast<std::size_t>(m) * n + k] = id;
      t->pair_lookup[static_cast<std::size_t>(k) * n + m] = id;
    }
  tables_ = std::move(t);
}

int Group::size() const { return tables_->size; }

int Group::exponent() const {
  int e = 1;
  for (int o : orders_) e = std::lcm(e, o);
  return e;
}

std::vector<int> Group::residues(int x) const {
  std::vector<int> r(orders_.size());
  for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i) {
    r[i] = x % orders_[i];
    x /= orders_[i];
  }
  return r;
}

int Group::index(const std::vector<int>& residues) const {
  if (residues.size() != orders_.size()) fail("InvalidElement", "wrong number of residues");
  int x = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (residues[i] < 0 || residues[i] >= orders_[i]) fail("InvalidElement", "residue out of range");
    x = x * orders_[i] + residues[i];
  }
  return x;
}

int Group::add(int x, int y) const { return tables_->add[static_cast<std::size_t>(x) * size() + y]; }
int Group::neg(int x) const { return tables_->neg[x]; }
int Group::order_of(int x) const { return tables_->order[x]; }

int Group::mul(long long k, int x) const {
  long long o = order_of(x);
  long long kk = mod_ll(k, o);
  int acc = 0;
  for (long long i = 0; i < kk; ++i) acc = add(acc, x);
  return acc;
}

const std::vector<std::pair<int, int>>& Group::pairs() const { return tables_->pairs; }

int Group::pair_index(int m, int n) const {
  return tables_->pair_lookup[static_cast<std::size_t>(m) * size() + n];
}

std::string Group::str() const {
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(orders_[i]);
  }
  return s;
}

std::string Group::element_str(int x) const {
  if (orders_.empty()) return "0";
  auto r = residues(x);
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(r[i]);
  }
  return s;
}

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

static int parse_small_int(const std::string& s) {
  if (s.empty()) fail("ParseError", "empty integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail("ParseError", "bad integer '" + s + "'");
  }
  if (pos != s.size()) fail("ParseError", "bad integer '" + s + "'");
  return static_cast<int>(v);
}

int Group::parse_element(const std::string& text) const {
  if (orders_.empty()) {
    if (text == "0" || text.empty()) return 0;
    fail("InvalidElement", "trivial group has only 0");
  }
  auto parts = split(text, '.');
  if (parts.size() != orders_.size())
    fail("InvalidElement", "element '" + text + "' does not match group " + str());
  std::vector<int> r;
  for (auto& p : parts) r.push_back(parse_small_int(p));
  return index(r);
}

std::string Group::pair_str(int m, int n) const {
  if (m > n) std::swap(m, n);
  return element_str(m) + "," + element_str(n);
}

std::pair<int, int> Group::parse_pair(const std::string& text) const {
  auto parts = split(text, ',');
  if (parts.size() != 2) fail("ParseError", "pair key '" + text + "' must be 'm,n'");
  int m = parse_element(parts[0]), n = parse_element(parts[1]);
  if (m > n) std::swap(m, n);
  return {m, n};
}

Group make_group(const std::vector<int>& orders) { return Group(orders); }

Group parse_group(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t.push_back(c);
  if (t.empty() || t == "trivial" || t == "1" || t == "0") return Group();
  std::vector<int> orders;
  for (auto& p : split(t, ',')) orders.push_back(parse_small_int(p));
  return Group(orders);
}

Element element(const Group& g, const std::vector<int>& residues) { return {g, g.index(residues)}; }

static void same_group(const Element& x, const Element& y) {
  if (x.group != y.group) fail("GroupMismatch", "elements of " + x.group.str() + " and " + y.group.str());
}

Element add(const Element& x, const Element& y) {
  same_group(x, y);
  return {x.group, x.group.add(x.index, y.index)};
}
Element neg(const Element& x) { return {x.group, x.group.neg(x.index)}; }
int order_of(const Element& x) { return x.group.order_of(x.index); }

Hom::Hom(Group source, Group target, std::vector<int> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
  const auto& ls = source_.orders();
  if (images_.size() != ls.size()) fail("InvalidHom", "one image per cyclic factor required");
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (images_[i] < 0 || images_[i] >= target_.size()) fail("InvalidHom", "image out of range");
    if (target_.mul(ls[i], images_[i]) != 0) fail("InvalidHom", "generator image order does not divide l_i");
  }
  map_.resize(source_.size());
  for (int x = 0; x < source_.size(); ++x) {
    auto r = source_.residues(x);
    int acc = 0;
    for (std::size_t i = 0; i < r.size(); ++i) acc = target_.add(acc, target_.mul(r[i], images_[i]));
    map_[x] = acc;
  }
}

bool Hom::is_surjective() const {
  std::vector<char> hit(target_.size(), 0);
  for (int v : map_) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::string Hom::str() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ";";
    s += target_.element_str(images_[i]);
  }
  return s;
}

Hom compose(const Hom& outer, const Hom& inner) {
  if (inner.target() != outer.source()) fail("GroupMismatch", "composition of incompatible homs");
  std::vector<int> imgs;
  for (int x : inner.generator_images()) imgs.push_back(outer(x));
  return Hom(inner.source(), outer.target(), imgs);
}

Hom parse_hom(const Group& source, const Group& target, const std::string& text) {
  std::vector<int> imgs;
  if (!source.orders().empty())
    for (auto& p : split(text, ';')) imgs.push_back(target.parse_element(p));
  return Hom(source, target, imgs);
}

std::vector<Hom> all_homs(const Group& source, const Group& target) {
  const auto& ls = source.orders();
  std::vector<std::vector<int>> cands(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (int x = 0; x < target.size(); ++x)
      if (target.mul(ls[i], x) == 0) cands[i].push_back(x);
  std::vector<Hom> out;
  std::vector<std::size_t> pos(ls.size(), 0);
  while (true) {
    std::vector<int> imgs;
    for (std::size_t i = 0; i < ls.size(); ++i) imgs.push_back(cands[i][pos[i]]);
    out.emplace_back(source, target, imgs);
    int i = static_cast<int>(ls.size()) - 1;
    while (i >= 0 && ++pos[i] == cands[i].size()) pos[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<Hom> surjections(const Group& source, const Group& target) {
  std::vector<Hom> out;
  if (target.size() > source.size() || source.size() % target.size() != 0) return out;
  for (auto& h : all_homs(source, target))
    if (h.is_surjective()) out.push_back(h);
  return out;
}

std::vector<Hom> surjections_onto_cyclic(const Group& g, int d) {
  if (d <= 1) fail("InvalidTarget", "target order must exceed 1");
  return surjections(g, Group({d}));
}

void check_presentation(long long r, long long alpha, long long N) {
  if (r <= 0 || N <= 1 || alpha < 0 || alpha >= N)
    fail("InvalidPresentation", "need r > 0, N > 1, 0 <= alpha < N");
  if (r * N > 4096) fail("TooLarge", "rN above 4096");
}

TwoGenGroup two_generator_group(long long r, long long alpha, long long N) {
  check_presentation(r, alpha, N);
  IntMatrix rel = {{Int(r), Int(-alpha)}, {Int(0), Int(N)}};
  SmithForm s = smith_normal_form(rel);
  std::vector<int> orders;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < 2; ++i) {
    long long d = to_ll(s.D[i][i]);
    if (d > 1) {
      orders.push_back(static_cast<int>(d));
      kept.push_back(i);
    }
  }
  Group g(orders);
  auto image = [&](std::size_t row) {
    std::vector<int> res;
    for (std::size_t k = 0; k < kept.size(); ++k)
      res.push_back(static_cast<int>(mod_ll(to_ll(s.V[row][kept[k]]), orders[k])));
    return g.index(res);
  };
  TwoGenGroup out{g, image(0), image(1)};
  if (orders.size() == 1) {
    // Fix the cyclic labelling so that e2 = |M|/N = r.
    long long L = orders[0];
    long long k = g.residues(out.e2)[0];
    for (long long u = 1; u < L; ++u) {
      if (gcd_ll(u, L) != 1 || mod_ll(u * k, L) != mod_ll(r, L)) continue;
      out.e1 = g.mul(u, out.e1);
      out.e2 = g.mul(u, out.e2);
      break;
    }
  }
  return out;
}

TwoGenPresentation two_gen_type(const Group& g, int m, int n) {
  long long N = g.order_of(n);
  std::vector<int> pos(g.size(), -1);
  for (int i = 0, acc = 0; i < N; ++i, acc = g.add(acc, n)) pos[acc] = i;
  long long r = 1;
  int acc = m;
  while (pos[acc] < 0) {
    acc = g.add(acc, m);
    ++r;
  }
  if (r * N != g.size()) fail("NotGenerating", "the two elements do not generate the group");
  return {r, pos[acc], N};
}

std::vector<Hom> surjections_onto_two_gen(const Group& g, const TwoGenPresentation& pres) {
  return surjections(g, two_generator_group(pres.r, pres.alpha, pres.N).group);
}

std::vector<std::vector<int>> abelian_group_types(int order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 1) {
      out.push_back(cur);
      return;
    }
    int start = cur.empty() ? 2 : cur.back();
    for (int d = start; d <= rem; ++d) {
      if (rem % d != 0 || (!cur.empty() && d % cur.back() != 0)) continue;
      cur.push_back(d);
      self(self, rem / d);
      cur.pop_back();
    }
  };
  if (order >= 1) rec(rec, order);
  return out;
}

std::vector<Group> groups_up_to_order(int max_order) {
  std::vector<Group> out;
  for (int n = 1; n <= max_order; ++n)
    for (auto& t : abelian_group_types(n)) out.emplace_back(t);
  return out;
}

}  // namespace gcl
