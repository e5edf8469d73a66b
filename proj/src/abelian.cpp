#include "braidforge/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "braidforge/error.hpp"
#include "numtheory.hpp"

namespace braidforge {

FinAbGroup::FinAbGroup(std::vector<int64_t> invariant_factors) : orders_(std::move(invariant_factors)) {
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 2) fail(ErrorKind::InvalidPresentation, "invariant factor below 2");
    if (i + 1 < orders_.size() && orders_[i + 1] % orders_[i] != 0)
      fail(ErrorKind::InvalidPresentation, "invariant factors must form a divisibility chain");
    order_ *= orders_[i];
  }
}

FinAbGroup FinAbGroup::cyclic_product(std::vector<int64_t> orders) {
  FinAbGroup g;
  for (int64_t n : orders)
    if (n < 2) fail(ErrorKind::InvalidPresentation, "cyclic factor order below 2");
  g.orders_ = std::move(orders);
  for (int64_t n : g.orders_) g.order_ *= n;
  return g;
}

int64_t FinAbGroup::exponent() const {
  int64_t e = 1;
  for (int64_t n : orders_) e = std::lcm(e, n);
  return e;
}

Element FinAbGroup::generator(size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

Element FinAbGroup::add(const Element& a, const Element& b) const {
  Element r(orders_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
  return r;
}

Element FinAbGroup::sub(const Element& a, const Element& b) const {
  Element r(orders_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = nt::mod(a[i] - b[i], orders_[i]);
  return r;
}

Element FinAbGroup::neg(const Element& a) const { return sub(zero(), a); }

Element FinAbGroup::scale(int64_t n, const Element& a) const {
  Element r(orders_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = nt::mod(nt::mod(n, orders_[i]) * a[i], orders_[i]);
  return r;
}

int64_t FinAbGroup::element_order(const Element& a) const {
  int64_t o = 1;
  for (size_t i = 0; i < a.size(); ++i) o = std::lcm(o, orders_[i] / std::gcd(orders_[i], a[i]));
  return o;
}

bool FinAbGroup::contains(const Element& a) const {
  if (a.size() != orders_.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] >= orders_[i]) return false;
  return true;
}

int64_t FinAbGroup::index_of(const Element& a) const {
  int64_t idx = 0;
  for (size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + a[i];
  return idx;
}

Element FinAbGroup::element_at(int64_t index) const {
  Element e(orders_.size());
  for (size_t i = orders_.size(); i-- > 0;) {
    e[i] = index % orders_[i];
    index /= orders_[i];
  }
  return e;
}

std::vector<Element> FinAbGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

int64_t FinAbGroup::add_index(int64_t a, int64_t b) const {
  int64_t idx = 0, place = 1;
  for (size_t i = orders_.size(); i-- > 0;) {
    int64_t n = orders_[i];
    idx += ((a % n + b % n) % n) * place;
    place *= n;
    a /= n;
    b /= n;
  }
  return idx;
}

int64_t FinAbGroup::sub_index(int64_t a, int64_t b) const { return add_index(a, neg_index(b)); }

int64_t FinAbGroup::neg_index(int64_t a) const {
  int64_t idx = 0, place = 1;
  for (size_t i = orders_.size(); i-- > 0;) {
    int64_t n = orders_[i];
    idx += ((n - a % n) % n) * place;
    place *= n;
    a /= n;
  }
  return idx;
}

int64_t FinAbGroup::scale_index(int64_t k, int64_t a) const {
  int64_t idx = 0, place = 1;
  for (size_t i = orders_.size(); i-- > 0;) {
    int64_t n = orders_[i];
    idx += nt::mod(nt::mod(k, n) * (a % n), n) * place;
    place *= n;
    a /= n;
  }
  return idx;
}

int64_t FinAbGroup::order_of_index(int64_t a) const { return element_order(element_at(a)); }

std::string to_string(const FinAbGroup& g) {
  if (g.is_trivial()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < g.rank(); ++i) os << (i ? " x " : "") << "Z/" << g.orders()[i];
  return os.str();
}

std::string to_string(const Element& e) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- subgroups

Subgroup::Subgroup(FinAbGroup parent, std::vector<int64_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {}

bool Subgroup::contains_index(int64_t idx) const { return std::binary_search(members_.begin(), members_.end(), idx); }

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(members_.size());
  for (int64_t m : members_) out.push_back(parent_.element_at(m));
  return out;
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> out;
  for (int64_t idx : identify(*this).generator_images) out.push_back(parent_.element_at(idx));
  return out;
}

std::vector<char> Subgroup::mask() const {
  std::vector<char> m(parent_.order(), 0);
  for (int64_t x : members_) m[x] = 1;
  return m;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

Subgroup trivial_subgroup(const FinAbGroup& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const FinAbGroup& g) {
  std::vector<int64_t> all(g.order());
  for (int64_t i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

namespace {

// Replaces the closed set `members` (with mask) by members + <x>.
void extend_by(const FinAbGroup& g, std::vector<int64_t>& members, std::vector<char>& mask, int64_t x) {
  if (mask[x]) return;
  std::vector<int64_t> layer = members;
  for (;;) {
    std::vector<int64_t> next;
    next.reserve(layer.size());
    for (int64_t s : layer) {
      int64_t y = g.add_index(s, x);
      if (!mask[y]) {
        mask[y] = 1;
        next.push_back(y);
      }
    }
    if (next.empty()) break;
    members.insert(members.end(), next.begin(), next.end());
    layer = std::move(next);
  }
}

int64_t order_modulo(const FinAbGroup& g, int64_t x, const std::vector<char>& mask) {
  int64_t k = 1, y = x;
  while (!mask[y]) {
    y = g.add_index(y, x);
    ++k;
  }
  return k;
}

}  // namespace

Subgroup span_indices(const FinAbGroup& g, const std::vector<int64_t>& gens) {
  std::vector<int64_t> members{0};
  std::vector<char> mask(g.order(), 0);
  mask[0] = 1;
  for (int64_t x : gens) extend_by(g, members, mask, x);
  std::sort(members.begin(), members.end());
  return Subgroup(g, std::move(members));
}

Subgroup span(const FinAbGroup& g, const std::vector<Element>& gens) {
  std::vector<int64_t> idx;
  for (const Element& e : gens) {
    if (!g.contains(e)) fail(ErrorKind::NotASubgroup, "generator " + to_string(e) + " not in " + to_string(g));
    idx.push_back(g.index_of(e));
  }
  return span_indices(g, idx);
}

Subgroup make_subgroup(const FinAbGroup& g, const std::vector<Element>& elements) {
  std::vector<int64_t> idx;
  for (const Element& e : elements) {
    if (!g.contains(e)) fail(ErrorKind::NotASubgroup, "element " + to_string(e) + " not in " + to_string(g));
    idx.push_back(g.index_of(e));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.empty() || idx.front() != 0) fail(ErrorKind::NotASubgroup, "subset does not contain zero");
  for (int64_t a : idx)
    for (int64_t b : idx)
      if (!std::binary_search(idx.begin(), idx.end(), g.sub_index(a, b)))
        fail(ErrorKind::NotASubgroup, "subset not closed under subtraction");
  return Subgroup(g, std::move(idx));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<char> mask(a.parent().order(), 0);
  std::vector<int64_t> out;
  for (int64_t x : a.members())
    for (int64_t y : b.members()) {
      int64_t z = a.parent().add_index(x, y);
      if (!mask[z]) {
        mask[z] = 1;
        out.push_back(z);
      }
    }
  std::sort(out.begin(), out.end());
  return Subgroup(a.parent(), std::move(out));
}

Subgroup meet(const Subgroup& a, const Subgroup& b) {
  std::vector<int64_t> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

// ---------------------------------------------------------------- homs

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.rank()) fail(ErrorKind::InvalidPresentation, "one image per source generator required");
  for (size_t i = 0; i < images_.size(); ++i) {
    if (!target_.contains(images_[i])) fail(ErrorKind::InvalidPresentation, "image outside the target group");
    if (target_.scale(source_.orders()[i], images_[i]) != target_.zero())
      fail(ErrorKind::InvalidPresentation, "generator order does not annihilate its image");
  }
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
  std::vector<Element> imgs;
  for (size_t i = 0; i < g.rank(); ++i) imgs.push_back(g.generator(i));
  return GroupHom(g, g, std::move(imgs));
}

Element GroupHom::apply(const Element& x) const {
  Element r = target_.zero();
  for (size_t i = 0; i < images_.size(); ++i) r = target_.add(r, target_.scale(x[i], images_[i]));
  return r;
}

int64_t GroupHom::apply_index(int64_t x) const { return target_.index_of(apply(source_.element_at(x))); }

GroupHom GroupHom::after(const GroupHom& first) const {
  if (!(first.target_ == source_)) fail(ErrorKind::InvalidPresentation, "composition of incompatible homomorphisms");
  std::vector<Element> imgs;
  for (const Element& e : first.images_) imgs.push_back(apply(e));
  return GroupHom(first.source_, target_, std::move(imgs));
}

Subgroup GroupHom::kernel() const {
  std::vector<int64_t> out;
  for (int64_t i = 0; i < source_.order(); ++i)
    if (apply_index(i) == 0) out.push_back(i);
  return Subgroup(source_, std::move(out));
}

Subgroup GroupHom::image() const { return span(target_, images_); }

bool GroupHom::is_bijective() const { return source_.order() == target_.order() && kernel().is_trivial(); }

GroupHom GroupHom::inverse() const {
  if (!is_bijective()) fail(ErrorKind::InvalidPresentation, "inverse of a non-bijective homomorphism");
  std::vector<int64_t> preimage(target_.order());
  for (int64_t i = 0; i < source_.order(); ++i) preimage[apply_index(i)] = i;
  std::vector<Element> imgs;
  for (size_t j = 0; j < target_.rank(); ++j)
    imgs.push_back(source_.element_at(preimage[target_.index_of(target_.generator(j))]));
  return GroupHom(target_, source_, std::move(imgs));
}

bool GroupHom::operator==(const GroupHom& other) const {
  return source_ == other.source_ && target_ == other.target_ && images_ == other.images_;
}

// ---------------------------------------------------------------- canonical form

CanonicalForm canonical_form(const std::vector<int64_t>& orders) {
  FinAbGroup source = FinAbGroup::cyclic_product(orders);
  // prime -> list of (exponent, input index), largest exponent first
  std::map<int64_t, std::vector<std::pair<int, size_t>>> parts;
  for (size_t i = 0; i < orders.size(); ++i)
    for (auto [p, e] : nt::factorize(orders[i])) parts[p].emplace_back(e, i);
  size_t slots = 0;
  for (auto& [p, list] : parts) {
    // ties go to the later factor so canonical input maps identically
    std::sort(list.begin(), list.end(), [](auto& a, auto& b) { return a.first != b.first ? a.first > b.first : a.second > b.second; });
    slots = std::max(slots, list.size());
  }
  // slot j holds the j-th largest prime power of each prime; slot 0 is the largest factor
  std::vector<int64_t> slot_order(slots, 1);
  for (auto& [p, list] : parts)
    for (size_t j = 0; j < list.size(); ++j) slot_order[j] *= nt::ipow(p, list[j].first);
  std::vector<int64_t> canon(slot_order.rbegin(), slot_order.rend());
  FinAbGroup target(canon);

  std::vector<Element> images(orders.size(), target.zero());
  for (auto& [p, list] : parts) {
    for (size_t j = 0; j < list.size(); ++j) {
      auto [e, i] = list[j];
      int64_t pa = nt::ipow(p, e);
      int64_t u = nt::inverse_mod(orders[i] / pa, pa);
      size_t k = slots - 1 - j;
      int64_t d = slot_order[j];
      images[i][k] = nt::mod(images[i][k] + u * (d / pa), d);
    }
  }
  return {target, GroupHom(source, target, std::move(images))};
}

// ---------------------------------------------------------------- identification

Identified identify_quotient(const FinAbGroup& g, const Subgroup& a, const Subgroup& b) {
  if (!b.is_subset_of(a)) fail(ErrorKind::NotASubgroup, "quotient of a subgroup by a non-contained subgroup");
  std::vector<char> in_b = b.mask();
  int64_t n = a.size() / b.size();
  // per prime: (representative, order mod everything chosen before), nonincreasing order
  std::vector<std::vector<std::pair<int64_t, int64_t>>> per_prime;
  for (auto [p, e] : nt::factorize(n)) {
    std::vector<int64_t> candidates;
    std::vector<int64_t> order_mod_b;
    for (int64_t x : a.members()) {
      int64_t o = order_modulo(g, x, in_b);
      if (o > 1 && nt::is_prime_power_of(o, p)) {
        candidates.push_back(x);
        order_mod_b.push_back(o);
      }
    }
    std::vector<int64_t> s_members = b.members();
    std::vector<char> s_mask = in_b;
    int64_t target = b.size() * nt::ipow(p, e);
    std::vector<std::pair<int64_t, int64_t>> reps;
    while (static_cast<int64_t>(s_members.size()) < target) {
      std::vector<int64_t> om(candidates.size());
      int64_t best = 1;
      for (size_t c = 0; c < candidates.size(); ++c) {
        om[c] = order_modulo(g, candidates[c], s_mask);
        best = std::max(best, om[c]);
      }
      int64_t pick = -1;
      for (size_t c = 0; c < candidates.size(); ++c)
        if (om[c] == best && order_mod_b[c] == best) {
          pick = candidates[c];
          break;
        }
      if (pick < 0 || best == 1) fail(ErrorKind::ClassificationBug, "no lift of maximal order while identifying a group");
      reps.emplace_back(pick, best);
      extend_by(g, s_members, s_mask, pick);
    }
    per_prime.push_back(std::move(reps));
  }
  size_t slots = 0;
  for (auto& r : per_prime) slots = std::max(slots, r.size());
  std::vector<int64_t> slot_order(slots, 1), slot_rep(slots, 0);
  for (auto& reps : per_prime)
    for (size_t j = 0; j < reps.size(); ++j) {
      slot_order[j] *= reps[j].second;
      slot_rep[j] = g.add_index(slot_rep[j], reps[j].first);
    }
  Identified out;
  out.group = FinAbGroup(std::vector<int64_t>(slot_order.rbegin(), slot_order.rend()));
  out.generator_images.assign(slot_rep.rbegin(), slot_rep.rend());
  out.element_images.resize(out.group.order());
  for (int64_t i = 0; i < out.group.order(); ++i) {
    Element c = out.group.element_at(i);
    int64_t acc = 0;
    for (size_t k = 0; k < c.size(); ++k) acc = g.add_index(acc, g.scale_index(c[k], out.generator_images[k]));
    out.element_images[i] = acc;
  }
  return out;
}

Identified identify(const Subgroup& h) { return identify_quotient(h.parent(), h, trivial_subgroup(h.parent())); }

Quotient quotient(const FinAbGroup& g, const Subgroup& h) {
  if (!(h.parent() == g)) fail(ErrorKind::NotASubgroup, "subgroup belongs to a different group");
  Identified id = identify_quotient(g, whole_group(g), h);
  auto coset_key = [&](int64_t x) {
    int64_t best = g.order();
    for (int64_t m : h.members()) best = std::min(best, g.add_index(x, m));
    return best;
  };
  std::map<int64_t, int64_t> key_to_q;
  for (int64_t i = 0; i < id.group.order(); ++i) key_to_q[coset_key(id.element_images[i])] = i;
  std::vector<Element> imgs;
  for (size_t i = 0; i < g.rank(); ++i)
    imgs.push_back(id.group.element_at(key_to_q.at(coset_key(g.index_of(g.generator(i))))));
  return {id.group, GroupHom(g, id.group, std::move(imgs)), id.element_images};
}

// ---------------------------------------------------------------- enumeration

std::vector<Subgroup> subgroups(const FinAbGroup& g, const Limits& limits) {
  if (g.order() > limits.enum_guard)
    fail(ErrorKind::EnumerationLimit, "|G| = " + std::to_string(g.order()) + " exceeds enumeration guard");
  std::set<std::vector<int64_t>> seen;
  std::vector<Subgroup> cyclic;
  for (int64_t x = 0; x < g.order(); ++x) {
    Subgroup c = span_indices(g, {x});
    if (seen.insert(c.members()).second) cyclic.push_back(c);
  }
  std::vector<Subgroup> all = cyclic;
  for (size_t i = 0; i < all.size(); ++i) {
    for (const Subgroup& c : cyclic) {
      if (c.is_subset_of(all[i])) continue;
      Subgroup j = join(all[i], c);
      if (seen.insert(j.members()).second) {
        all.push_back(std::move(j));
        if (static_cast<int64_t>(all.size()) > limits.max_subgroups)
          fail(ErrorKind::EnumerationLimit, "subgroup count exceeds cap");
      }
    }
  }
  std::sort(all.begin(), all.end(), subgroup_less);
  return all;
}

std::vector<int64_t> prime_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (auto [p, e] : nt::factorize(n)) out.push_back(p);
  return out;
}

Subgroup sylow(const FinAbGroup& g, int64_t p) {
  std::vector<int64_t> out;
  for (int64_t x = 0; x < g.order(); ++x)
    if (nt::is_prime_power_of(g.order_of_index(x), p)) out.push_back(x);
  return Subgroup(g, std::move(out));
}

void search_isomorphisms(const FinAbGroup& src, const FinAbGroup& dst, const IsoConstraints& constraints,
                         const std::function<bool(const std::vector<int64_t>&)>& visit) {
  if (src.orders() != dst.orders()) return;
  const size_t k = src.rank();
  std::vector<std::vector<int64_t>> candidates(k);
  for (size_t i = 0; i < k; ++i)
    for (int64_t y = 0; y < dst.order(); ++y)
      if (dst.order_of_index(y) == src.orders()[i] && (!constraints.allowed || constraints.allowed(i, y)))
        candidates[i].push_back(y);

  std::vector<int64_t> images(k);
  bool stop = false;
  std::function<void(size_t, std::vector<int64_t>&, std::vector<char>&)> rec = [&](size_t i, std::vector<int64_t>& members,
                                                                                  std::vector<char>& mask) {
    if (i == k) {
      stop = !visit(images);
      return;
    }
    for (int64_t y : candidates[i]) {
      if (order_modulo(dst, y, mask) != src.orders()[i]) continue;
      bool ok = true;
      if (constraints.compatible)
        for (size_t j = 0; j < i && ok; ++j) ok = constraints.compatible(i, y, j, images[j]);
      if (!ok) continue;
      images[i] = y;
      std::vector<int64_t> m2 = members;
      std::vector<char> mask2 = mask;
      extend_by(dst, m2, mask2, y);
      rec(i + 1, m2, mask2);
      if (stop) return;
    }
  };
  std::vector<int64_t> members{0};
  std::vector<char> mask(dst.order(), 0);
  mask[0] = 1;
  rec(0, members, mask);
}

std::vector<GroupHom> automorphisms(const FinAbGroup& g, const Limits& limits) {
  if (g.order() > limits.aut_guard)
    fail(ErrorKind::EnumerationLimit, "|G| = " + std::to_string(g.order()) + " exceeds automorphism guard");
  std::vector<GroupHom> out;
  search_isomorphisms(g, g, {}, [&](const std::vector<int64_t>& imgs) {
    std::vector<Element> e;
    for (int64_t y : imgs) e.push_back(g.element_at(y));
    out.emplace_back(g, g, std::move(e));
    if (static_cast<int64_t>(out.size()) > limits.max_automorphisms)
      fail(ErrorKind::EnumerationLimit, "automorphism count exceeds cap");
    return true;
  });
  return out;
}

std::vector<FinAbGroup> groups_of_order(int64_t n) {
  std::vector<FinAbGroup> out;
  std::vector<int64_t> chain;
  // invariant factor chains d_1 | d_2 | ... with product n
  auto rec = [&](auto&& self, int64_t remaining, int64_t last) -> void {
    if (remaining == 1) {
      out.emplace_back(chain);
      return;
    }
    for (int64_t d = 2; d <= remaining; ++d) {
      if (remaining % d != 0 || d % last != 0) continue;
      chain.push_back(d);
      self(self, remaining / d, d);
      chain.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

std::optional<IdentifiedTable> identify_table(const std::vector<std::vector<int64_t>>& mul) {
  const int64_t k = static_cast<int64_t>(mul.size());
  if (k == 0) return std::nullopt;
  int64_t e = -1;
  for (int64_t x = 0; x < k && e < 0; ++x) {
    bool unit = true;
    for (int64_t y = 0; y < k && unit; ++y) unit = mul[x][y] == y && mul[y][x] == y;
    if (unit) e = x;
  }
  if (e < 0) return std::nullopt;
  for (int64_t x = 0; x < k; ++x)
    for (int64_t y = 0; y < k; ++y) {
      if (mul[x][y] < 0 || mul[x][y] >= k || mul[x][y] != mul[y][x]) return std::nullopt;
      for (int64_t z = 0; z < k; ++z)
        if (mul[mul[x][y]][z] != mul[x][mul[y][z]]) return std::nullopt;
    }
  auto power = [&](int64_t x, int64_t n) {
    int64_t acc = e;
    for (int64_t i = 0; i < n; ++i) acc = mul[acc][x];
    return acc;
  };
  auto order_of = [&](int64_t x) {
    int64_t n = 1;
    for (int64_t acc = x; acc != e; acc = mul[acc][x]) ++n;
    return n;
  };
  for (const FinAbGroup& g : groups_of_order(k)) {
    const size_t r = g.rank();
    std::vector<int64_t> imgs(r);
    std::optional<IdentifiedTable> found;
    auto rec = [&](auto&& self, size_t i) -> void {
      if (found) return;
      if (i == r) {
        std::vector<int64_t> table_of(k), index(k, -1);
        for (int64_t idx = 0; idx < k; ++idx) {
          Element c = g.element_at(idx);
          int64_t acc = e;
          for (size_t j = 0; j < r; ++j) acc = mul[acc][power(imgs[j], c[j])];
          if (index[acc] >= 0) return;
          index[acc] = idx;
          table_of[idx] = acc;
        }
        for (int64_t a = 0; a < k; ++a)
          for (int64_t b = 0; b < k; ++b)
            if (mul[table_of[a]][table_of[b]] != table_of[g.add_index(a, b)]) return;
        found = IdentifiedTable{g, std::move(index)};
        return;
      }
      for (int64_t t = 0; t < k; ++t)
        if (order_of(t) == g.orders()[i]) {
          imgs[i] = t;
          self(self, i + 1);
        }
    };
    rec(rec, 0);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace braidforge
