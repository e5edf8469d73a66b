#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <optional>
#include <vector>

#include "braidforge/limits.hpp"

namespace braidforge {

// Coordinates of a group element, one residue per cyclic factor.
using Element = std::vector<int64_t>;

// Product of cyclic groups Z/n_1 x ... x Z/n_k. Groups built with the public
// constructor are in invariant-factor form; `cyclic_product` allows an
// arbitrary presentation, which canonical_form then normalizes.
//
// Elements are indexed in lexicographic order of their coordinate vectors
// (coordinate 0 most significant), so index order and lex order agree.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int64_t> invariant_factors);
  static FinAbGroup cyclic_product(std::vector<int64_t> orders);

  const std::vector<int64_t>& orders() const { return orders_; }
  size_t rank() const { return orders_.size(); }
  int64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  int64_t exponent() const;

  Element zero() const { return Element(orders_.size(), 0); }
  Element generator(size_t i) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(int64_t n, const Element& a) const;
  int64_t element_order(const Element& a) const;
  bool contains(const Element& a) const;

  int64_t index_of(const Element& a) const;
  Element element_at(int64_t index) const;
  std::vector<Element> elements() const;

  int64_t add_index(int64_t a, int64_t b) const;
  int64_t sub_index(int64_t a, int64_t b) const;
  int64_t neg_index(int64_t a) const;
  int64_t scale_index(int64_t n, int64_t a) const;
  int64_t order_of_index(int64_t a) const;

  bool operator==(const FinAbGroup& other) const { return orders_ == other.orders_; }

 private:
  std::vector<int64_t> orders_;
  int64_t order_ = 1;
};

std::string to_string(const FinAbGroup& g);
std::string to_string(const Element& e);

// Sorted list of member indices inside the parent group.
class Subgroup {
 public:
  Subgroup() = default;
  // Members must be sorted, duplicate free and closed; use make_subgroup or span
  // for checked construction.
  Subgroup(FinAbGroup parent, std::vector<int64_t> members);

  const FinAbGroup& parent() const { return parent_; }
  const std::vector<int64_t>& members() const { return members_; }
  int64_t size() const { return static_cast<int64_t>(members_.size()); }
  bool contains_index(int64_t idx) const;
  bool contains(const Element& e) const { return contains_index(parent_.index_of(e)); }
  std::vector<Element> elements() const;
  std::vector<Element> generators() const;
  std::vector<char> mask() const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_subset_of(const Subgroup& other) const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_ && parent_ == other.parent_; }

 private:
  FinAbGroup parent_;
  std::vector<int64_t> members_;
};

// Size first, then lexicographic member list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

Subgroup trivial_subgroup(const FinAbGroup& g);
Subgroup whole_group(const FinAbGroup& g);
Subgroup span(const FinAbGroup& g, const std::vector<Element>& gens);
Subgroup span_indices(const FinAbGroup& g, const std::vector<int64_t>& gens);
Subgroup make_subgroup(const FinAbGroup& g, const std::vector<Element>& elements);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup meet(const Subgroup& a, const Subgroup& b);

class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(FinAbGroup source, FinAbGroup target, std::vector<Element> images);
  static GroupHom identity(const FinAbGroup& g);

  const FinAbGroup& source() const { return source_; }
  const FinAbGroup& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& x) const;
  int64_t apply_index(int64_t x) const;
  // this o first
  GroupHom after(const GroupHom& first) const;
  Subgroup kernel() const;
  Subgroup image() const;
  bool is_bijective() const;
  GroupHom inverse() const;

  bool operator==(const GroupHom& other) const;

 private:
  FinAbGroup source_, target_;
  std::vector<Element> images_;
};

struct CanonicalForm {
  FinAbGroup group;
  GroupHom iso;  // from the input presentation to `group`
};

CanonicalForm canonical_form(const std::vector<int64_t>& orders);

// A finite abelian group identified in canonical form, together with the
// embedding of its generators into an ambient group.
struct Identified {
  FinAbGroup group;
  std::vector<int64_t> generator_images;  // ambient index of each canonical generator
  // Ambient index of each element of `group`, in `group` index order.
  std::vector<int64_t> element_images;
};

// Identifies A/B for subgroups B <= A of g. Representatives of the canonical
// generators are chosen lexicographically.
Identified identify_quotient(const FinAbGroup& g, const Subgroup& a, const Subgroup& b);
Identified identify(const Subgroup& h);

struct Quotient {
  FinAbGroup group;
  GroupHom projection;
  std::vector<int64_t> section;  // ambient representative of each quotient element
};

Quotient quotient(const FinAbGroup& g, const Subgroup& h);

std::vector<Subgroup> subgroups(const FinAbGroup& g, const Limits& limits = {});
std::vector<int64_t> prime_divisors(int64_t n);
Subgroup sylow(const FinAbGroup& g, int64_t p);

// Enumerates bijective homomorphisms src -> dst (both in canonical form) by
// backtracking over generator images in lex order. `allowed(i, y)` filters
// candidate images for generator i; `compatible(i, y, j, x)` checks a new
// image y of generator i against an earlier image x of generator j < i.
// The visitor receives target indices of the generator images and returns
// false to stop.
struct IsoConstraints {
  std::function<bool(size_t, int64_t)> allowed;
  std::function<bool(size_t, int64_t, size_t, int64_t)> compatible;
};
void search_isomorphisms(const FinAbGroup& src, const FinAbGroup& dst, const IsoConstraints& constraints,
                         const std::function<bool(const std::vector<int64_t>&)>& visit);

std::vector<GroupHom> automorphisms(const FinAbGroup& g, const Limits& limits = {});

// Canonical groups of the given order, one per isomorphism class.
std::vector<FinAbGroup> groups_of_order(int64_t n);

// Identifies a finite abelian group given by its multiplication table on
// 0..k-1. Returns the group and, for each table element, its index there;
// absent when the table is not an abelian group table.
struct IdentifiedTable {
  FinAbGroup group;
  std::vector<int64_t> index;
};
std::optional<IdentifiedTable> identify_table(const std::vector<std::vector<int64_t>>& mul);

}  // namespace braidforge
