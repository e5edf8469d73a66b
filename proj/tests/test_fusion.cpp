#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "braidforge/error.hpp"
#include "braidforge/fusion.hpp"

using namespace braidforge;

namespace {

FusionRing s3_characters() {
  FusionTable t(3, std::vector<std::vector<int64_t>>(3, std::vector<int64_t>(3, 0)));
  for (size_t j = 0; j < 3; ++j) t[0][j][j] = t[j][0][j] = 1;
  t[1][1][0] = 1;
  t[1][2][2] = t[2][1][2] = 1;
  t[2][2][0] = t[2][2][1] = t[2][2][2] = 1;
  return FusionRing::validate({"1", "sgn", "V"}, 0, {0, 1, 2}, t);
}

// Subsets containing the unit that are closed under products, by trying all of them.
std::set<std::vector<size_t>> brute_force_subrings(const FusionRing& r) {
  std::set<std::vector<size_t>> out;
  const size_t n = r.rank();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    if (!(mask >> r.unit() & 1)) continue;
    bool closed = true;
    for (size_t a = 0; a < n && closed; ++a)
      for (size_t b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1))
          for (size_t k = 0; k < n; ++k)
            if (r.n(a, b, k) && !(mask >> k & 1)) closed = false;
    if (!closed) continue;
    std::vector<size_t> s;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.insert(s);
  }
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::SchemaError;
}

}  // namespace

TEST_CASE("ring validation") {
  CHECK_NOTHROW(ising_ring());
  CHECK_NOTHROW(pointed_ring(FinAbGroup({3})));
  auto t = ising_ring().table();
  t[2][2][1] = 2;
  CHECK(kind_of([&] { FusionRing::validate({"1", "delta", "X"}, 0, {0, 1, 2}, t); }) == ErrorKind::AssociativityFail);
  auto u = ising_ring().table();
  u[0][1][1] = 0;
  CHECK(kind_of([&] { FusionRing::validate({"1", "delta", "X"}, 0, {0, 1, 2}, u); }) == ErrorKind::UnitFail);
  CHECK(kind_of([&] { FusionRing::validate({"1", "delta", "X"}, 0, {0, 2, 1}, ising_ring().table()); }) ==
        ErrorKind::DualityFail);
}

TEST_CASE("FP dimensions") {
  auto is = fp_dims(ising_ring());
  CHECK(std::abs(is.fpdim[0] - 1) < 1e-9);
  CHECK(std::abs(is.fpdim[1] - 1) < 1e-9);
  CHECK(std::abs(is.fpdim[2] - std::sqrt(2.0)) < 1e-9);
  CHECK(std::abs(is.total - 4) < 1e-9);
  auto pt = fp_dims(pointed_ring(FinAbGroup({2, 4})));
  for (double d : pt.fpdim) CHECK(std::abs(d - 1) < 1e-9);
  CHECK(std::abs(pt.total - 8) < 1e-9);
  auto s3 = fp_dims(s3_characters());
  CHECK(std::abs(s3.fpdim[2] - 2) < 1e-9);
  CHECK(std::abs(s3.total - 6) < 1e-9);
  auto ii = fp_dims(tensor_product(ising_ring(), ising_ring()));
  CHECK(std::abs(ii.total - 16) < 1e-9);
}

TEST_CASE("generated subrings") {
  auto r = ising_ring();
  CHECK(subring_generated(r, {1}).indices == std::vector<size_t>{0, 1});
  CHECK(subring_generated(r, {2}).indices == std::vector<size_t>{0, 1, 2});
  CHECK(subring_generated(r, {}).indices == std::vector<size_t>{0});
}

TEST_CASE("subring lattices agree with brute force") {
  std::vector<FusionRing> rings{ising_ring(), s3_characters(), pointed_ring(FinAbGroup({2, 2})),
                                pointed_ring(FinAbGroup({6})), tensor_product(ising_ring(), ising_ring()),
                                tensor_product(ising_ring(), s3_characters()), pointed_ring(FinAbGroup())};
  for (const auto& r : rings) {
    auto l = all_subrings(r);
    std::set<std::vector<size_t>> got;
    for (const auto& s : l.subrings) {
      got.insert(s.indices);
      CHECK(subring_generated(r, s.indices) == s);
      for (size_t i : s.indices) CHECK(s.contains(r.dual(i)));
    }
    CHECK(got == brute_force_subrings(r));
    CHECK(l.modular);
  }
  CHECK(all_subrings(ising_ring()).subrings.size() == 3);
  CHECK(all_subrings(pointed_ring(FinAbGroup({2, 2}))).subrings.size() == 5);
  CHECK(all_subrings(pointed_ring(FinAbGroup())).subrings.size() == 1);
  Limits tight;
  tight.rank_guard = 4;
  CHECK_THROWS_AS(all_subrings(tensor_product(ising_ring(), ising_ring()), tight), Error);
}

TEST_CASE("adjoint subring and universal grading") {
  CHECK(adjoint_subring(ising_ring()).indices == std::vector<size_t>{0, 1});
  CHECK(adjoint_subring(pointed_ring(FinAbGroup({4}))).indices == std::vector<size_t>{0});
  CHECK(adjoint_subring(s3_characters()).size() == 3);

  auto g = universal_grading(ising_ring());
  CHECK(g.group == FinAbGroup({2}));
  CHECK(g.deg[0] == Element{0});
  CHECK(g.deg[1] == Element{0});
  CHECK(g.deg[2] == Element{1});
  CHECK(g.faithful());

  auto p = universal_grading(pointed_ring(FinAbGroup({2, 4})));
  CHECK(p.group == FinAbGroup({2, 4}));
  CHECK(p.faithful());
  CHECK(universal_grading(s3_characters()).group.order() == 1);

  auto ii = tensor_product(ising_ring(), ising_ring());
  auto gi = universal_grading(ii);
  CHECK(gi.group == FinAbGroup({2, 2}));
  CHECK(gi.component(gi.group.zero()) == adjoint_subring(ii).indices);
  CHECK(gi.respected_by(ii));
}

TEST_CASE("pointed and integral parts") {
  auto r = ising_ring();
  CHECK(pointed_part(r).indices == std::vector<size_t>{0, 1});
  CHECK(integral_part(r).indices == std::vector<size_t>{0, 1});
  auto sq = fp_square_grading(r);
  CHECK(sq.squarefree == std::vector<int64_t>{1, 1, 2});
  CHECK(sq.primes == std::vector<int64_t>{2});

  auto pt = pointed_ring(FinAbGroup({3}));
  CHECK(pointed_part(pt).size() == 3);
  CHECK(integral_part(pt).size() == 3);
  CHECK(fp_square_grading(pt).grading.group.order() == 1);

  auto ii = tensor_product(r, r);
  auto ip = integral_part(ii);
  CHECK(ip.size() == 5);
  auto d = fp_dims(ii);
  double dim = 0;
  for (size_t i : ip.indices) dim += d.fpdim[i] * d.fpdim[i];
  CHECK(std::abs(dim - 8) < 1e-9);
  CHECK(pointed_part(ii).size() == 4);
}
