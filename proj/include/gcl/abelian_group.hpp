#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gcl {

// Finite abelian group given as a product of cyclic factors.  Elements are
// addressed by their index in the lexicographic enumeration of residue tuples
// (first factor most significant); index 0 is the identity.
class Group {
 public:
  Group();  // trivial group
  explicit Group(std::vector<int> cyclic_orders);

  const std::vector<int>& orders() const { return orders_; }
  int size() const;
  int exponent() const;

  std::vector<int> residues(int x) const;
  int index(const std::vector<int>& residues) const;

  int add(int x, int y) const;
  int neg(int x) const;
  int sub(int x, int y) const { return add(x, neg(y)); }
  int mul(long long k, int x) const;
  int order_of(int x) const;

  // Canonical unordered pairs {m, n}, m <= n, both nonzero.
  const std::vector<std::pair<int, int>>& pairs() const;
  int pair_index(int m, int n) const;  // -1 if m or n is 0

  std::string str() const;  // "2,4"; "" for the trivial group
  std::string element_str(int x) const;  // "1.3"
  int parse_element(const std::string& text) const;
  std::string pair_str(int m, int n) const;  // "1,3"
  std::pair<int, int> parse_pair(const std::string& text) const;

  bool operator==(const Group& other) const { return orders_ == other.orders_; }
  bool operator!=(const Group& other) const { return !(*this == other); }

 private:
  struct Tables;
  std::vector<int> orders_;
  std::shared_ptr<const Tables> tables_;
};

Group make_group(const std::vector<int>& orders);
Group parse_group(const std::string& text);

// Element carrying its group, for callers that want mismatch checking.
struct Element {
  Group group;
  int index = 0;
  std::vector<int> residues() const { return group.residues(index); }
  std::string str() const { return group.element_str(index); }
  bool operator==(const Element& o) const { return group == o.group && index == o.index; }
};

Element element(const Group& g, const std::vector<int>& residues);
Element add(const Element& x, const Element& y);
Element neg(const Element& x);
int order_of(const Element& x);

class Hom {
 public:
  Hom(Group source, Group target, std::vector<int> generator_images);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  const std::vector<int>& generator_images() const { return images_; }
  int operator()(int x) const { return map_[x]; }
  bool is_surjective() const;
  std::string str() const;  // generator images joined by ';'

  bool operator==(const Hom& o) const {
    return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
  }

 private:
  Group source_, target_;
  std::vector<int> images_;
  std::vector<int> map_;
};

Hom compose(const Hom& outer, const Hom& inner);
Hom parse_hom(const Group& source, const Group& target, const std::string& text);

std::vector<Hom> all_homs(const Group& source, const Group& target);
std::vector<Hom> surjections(const Group& source, const Group& target);
std::vector<Hom> surjections_onto_cyclic(const Group& g, int d);

struct TwoGenPresentation {
  long long r = 0, alpha = 0, N = 0;
  bool operator==(const TwoGenPresentation&) const = default;
};

struct TwoGenGroup {
  Group group;
  int e1 = 0, e2 = 0;
};

void check_presentation(long long r, long long alpha, long long N);
TwoGenGroup two_generator_group(long long r, long long alpha, long long N);
TwoGenPresentation two_gen_type(const Group& g, int m, int n);
std::vector<Hom> surjections_onto_two_gen(const Group& g, const TwoGenPresentation& pres);

// Invariant-factor lists d1 | d2 | ... of all abelian groups of the given order.
std::vector<std::vector<int>> abelian_group_types(int order);
std::vector<Group> groups_up_to_order(int max_order);  // includes the trivial group

}  // namespace gcl
