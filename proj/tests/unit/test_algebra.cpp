#include <doctest.h>

#include <random>

#include "leibniz/catalog.hpp"
#include "leibniz/shape.hpp"
#include "oracles.hpp"

using namespace leibniz;

namespace {

const PrimeField F2(2), F3(3), F5(5);

FpSubspace span_of(const PrimeField& f, std::size_t n, std::vector<FpVec> vs) {
  return FpSubspace::from_vectors(f, n, vs);
}

FpVec random_vec(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  FpVec v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % f.modulus());
  return v;
}

}  // namespace

TEST_CASE("brackets in the cyclic solvable table") {
  auto L = cyclic_solvable(3, F3);
  const FpVec a{1, 0, 0}, a2{0, 1, 0}, a3{0, 0, 1};
  CHECK(bracket(L, a, a) == a2);
  CHECK(bracket(L, a3, a) == a3);
  CHECK(bracket(L, a, a2) == FpVec{0, 0, 0});
  CHECK_THROWS_AS(bracket(L, FpVec{1, 0}, a), InputError);
  CHECK_THROWS_AS(bracket(L, FpVec{1, 0, 3}, a), InputError);
}

TEST_CASE("identity checks") {
  auto H = heisenberg_lie(F3);
  CHECK(check_right_leibniz(H.tensor()));
  CHECK(check_left_leibniz(H.tensor()));
  CHECK(is_symmetric(H));

  auto C2 = cyclic_nilpotent(2, F3);
  CHECK(check_right_leibniz(C2.tensor()));
  CHECK(check_left_leibniz(C2.tensor()) == oracle::left_leibniz_elementwise(C2));
  CHECK(is_symmetric(C2));

  // the triple (a, y, y) gives [a,[y,y]] = 0 against [[a,y],y] + [y,[a,y]] = a
  auto N2 = almost_abelian_nonlie(2, F3);
  CHECK(check_right_leibniz(N2.tensor()));
  CHECK(check_left_leibniz(N2.tensor()) == oracle::left_leibniz_elementwise(N2));
  CHECK_FALSE(is_symmetric(N2));

  StructureTensor<PrimeField> bad(F3, 1);
  bad.set(0, 0, 0, 1);
  CHECK_FALSE(check_right_leibniz(bad));
  try {
    LeibnizAlgebra<PrimeField>("bad", bad);
    FAIL("expected a NotLeibnizError");
  } catch (const NotLeibnizError& e) {
    CHECK(e.triple() == std::array<std::size_t, 3>{0, 0, 0});
  }
}

TEST_CASE("basis identity check agrees with element triples") {
  std::mt19937_64 rng(3);
  int accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    StructureTensor<PrimeField> t(F2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) t.set(i, j, k, static_cast<std::uint32_t>(rng() % 2));
    if (!check_right_leibniz(t)) continue;
    ++accepted;
    LeibnizAlgebra<PrimeField> L("t", t);
    CHECK(oracle::right_leibniz_elementwise(L));
    CHECK(check_left_leibniz(L) == oracle::left_leibniz_elementwise(L));
  }
  CHECK(accepted > 0);
}

TEST_CASE("is_lie") {
  CHECK(is_lie(abelian(3, F5)));
  CHECK(is_lie(heisenberg_lie(F2)));
  CHECK_FALSE(is_lie(cyclic_nilpotent(2, F3)));
  CHECK_FALSE(is_lie(almost_abelian_nonlie(2, F2)));
  CHECK(is_lie(almost_abelian_lie(3, F3)));
}

TEST_CASE("right multiplication matrices") {
  auto A = abelian(3, F3);
  CHECK(right_mult_matrix(A, FpVec{1, 2, 1}) == Matrix<PrimeField>(F3, 3, 3));

  auto N = almost_abelian_nonlie(2, F3);
  auto Ry = right_mult_matrix(N, FpVec{0, 1});
  CHECK(Ry(0, 0) == 1);  // [a, y] = a
  CHECK(Ry(1, 0) == 0);
  CHECK(Ry(0, 1) == 0);  // [y, y] = 0
  CHECK(Ry(1, 1) == 0);

  auto C = cyclic_nilpotent(3, F3);
  Matrix<PrimeField> shift(F3, 3, 3);
  shift(1, 0) = 1;
  shift(2, 1) = 1;
  CHECK(right_mult_matrix(C, FpVec{1, 0, 0}) == shift);
}

TEST_CASE("right multiplications are derivations") {
  std::mt19937_64 rng(17);
  for (const auto& L : {cyclic_solvable(3, F3), family_sqrt(2, 2, F5), symmetric_iv(2, F3), family_nonlie_ii(2, 1, F2)})
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_vec(L.field(), L.dim(), rng);
      for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
          auto y = L.basis_vector(i), z = L.basis_vector(j);
          auto lhs = bracket(L, bracket(L, y, z), x);
          auto r1 = bracket(L, bracket(L, y, x), z);
          auto r2 = bracket(L, y, bracket(L, z, x));
          FpVec rhs(L.dim());
          for (std::size_t k = 0; k < L.dim(); ++k) rhs[k] = L.field().add(r1[k], r2[k]);
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("product spaces") {
  auto A = abelian(3, F2);
  CHECK(product_space(A, A.whole(), A.whole()).is_zero());
  auto N = almost_abelian_nonlie(2, F3);
  CHECK(product_space(N, N.whole(), N.whole()) == span_of(F3, 2, {{1, 0}}));
  auto H = heisenberg_lie(F3);
  CHECK(product_space(H, H.whole(), H.whole()) == span_of(F3, 3, {{0, 0, 1}}));
}

TEST_CASE("subalgebra closure") {
  auto C = cyclic_nilpotent(3, F3);
  CHECK(subalgebra_closure(C, std::vector<FpVec>{{1, 0, 0}}).is_full());
  CHECK(subalgebra_closure(C, std::vector<FpVec>{{0, 1, 0}}) == span_of(F3, 3, {{0, 1, 0}}));
  auto A = abelian(3, F5);
  std::vector<FpVec> s{{1, 2, 0}, {0, 0, 3}};
  CHECK(subalgebra_closure(A, s) == span_of(F5, 3, s));
}

TEST_CASE("closure is a closure operator and matches the element oracle") {
  std::mt19937_64 rng(23);
  std::vector<FpAlgebra> algebras{cyclic_solvable(4, F2), heisenberg_lie(F3), family_nonlie_ii(2, 2, F2),
                                  family_sqrt(2, 1, F3), cyclic_nilpotent(4, F3)};
  for (const auto& L : algebras)
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<FpVec> gens(rng() % 3);
      for (auto& g : gens) g = random_vec(L.field(), L.dim(), rng);
      auto S = subalgebra_closure(L, gens);
      CHECK(oracle::elements(S) == oracle::closure(L, gens));
      for (const auto& g : gens) CHECK(S.contains(g));
      CHECK(subalgebra_closure(L, S) == S);
      CHECK(is_subalgebra(L, S));
      auto more = gens;
      more.push_back(random_vec(L.field(), L.dim(), rng));
      CHECK(subspace_leq(S, subalgebra_closure(L, more)));
    }
}

TEST_CASE("series, nilpotency and solvability") {
  auto A = abelian(2, F3);
  CHECK(nilpotency(A).holds);
  CHECK(nilpotency(A).index == 1);

  auto C = cyclic_nilpotent(3, F3);
  auto lcs = lower_central_series(C);
  REQUIRE(lcs.size() == 4);
  CHECK(lcs[1] == span_of(F3, 3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(lcs[2] == span_of(F3, 3, {{0, 0, 1}}));
  CHECK(lcs[3].is_zero());
  CHECK(nilpotency(C).index == 3);
  CHECK(nilpotency(cyclic_nilpotent(4, F2)).index == 4);

  auto S = cyclic_solvable(2, F3);
  CHECK_FALSE(is_nilpotent(S));
  auto s_lcs = lower_central_series(S);
  CHECK(s_lcs.back() == span_of(F3, 2, {{0, 1}}));
  CHECK(solvability(S).holds);
  CHECK(solvability(S).index == 2);

  auto Z = abelian(0, F2);
  CHECK(nilpotency(Z).holds);
  CHECK(nilpotency(Z).index == 0);
  CHECK(solvability(Z).index == 0);
}

TEST_CASE("Leibniz kernel") {
  CHECK(leibniz_kernel(abelian(3, F3)).is_zero());
  CHECK(leibniz_kernel(almost_abelian_nonlie(2, F3)) == span_of(F3, 2, {{1, 0}}));
  CHECK(leibniz_kernel(cyclic_nilpotent(3, F3)) == span_of(F3, 3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(leibniz_kernel(symmetric_iv(1, F3)) == span_of(F3, 3, {{0, 0, 1}}));
}

TEST_CASE("kernel laws and squares on the catalog") {
  for (std::uint32_t p : {2U, 3U}) {
    PrimeField f(p);
    for (const auto& L : {cyclic_solvable(3, f), cyclic_nilpotent(3, f), almost_abelian_nonlie(3, f),
                          family_nonlie_ii(2, 1, f), heisenberg_lie(f), extraspecial_plus_center(1, f)}) {
      auto I = leibniz_kernel(L);
      CHECK(is_ideal(L, I));
      CHECK(is_lie(quotient(L, I).algebra));
      CHECK(product_space(L, L.whole(), I).is_zero());
      CHECK(I.is_zero() == is_lie(L));
      // I is spanned by the squares of all elements
      std::vector<FpVec> squares;
      for (const auto& x : oracle::all_vectors(p, L.dim())) squares.push_back(oracle::mul(L, x, x));
      CHECK(oracle::elements(I) == oracle::span(p, L.dim(), squares));
    }
  }
}

TEST_CASE("square-zero subalgebra") {
  auto J = square_zero_subalgebra(abelian(2, F3));
  CHECK(J.J.is_full());
  CHECK(J.set_is_subspace == true);

  auto N = square_zero_subalgebra(almost_abelian_nonlie(2, F3));
  CHECK(N.J.is_full());
  CHECK(N.set_is_subspace == false);
  CHECK(N.square_zero_count == 5);  // Fa and Fy share 0

  auto C = square_zero_subalgebra(cyclic_nilpotent(2, F3));
  CHECK(C.J == span_of(F3, 2, {{0, 1}}));
  CHECK(C.set_is_subspace == true);

  CHECK(square_zero_subalgebra(heisenberg_lie(F2)).J.is_full());

  RationalField q;
  auto LQ = almost_abelian_nonlie(2, q);
  CHECK_THROWS_AS(square_zero_subalgebra(LQ), UnsupportedFieldError);
  auto lower = square_zero_closure_of(LQ, {{q.one(), q.zero()}});
  CHECK(lower.lower_bound);
  CHECK(lower.J.dim() == 1);
  CHECK_THROWS_AS(square_zero_closure_of(cyclic_nilpotent(2, q), {{q.one(), q.zero()}}), InputError);
}

TEST_CASE("center") {
  CHECK(center(abelian(3, F2)).is_full());
  CHECK(center(heisenberg_lie(F3)) == span_of(F3, 3, {{0, 0, 1}}));
  CHECK(center(almost_abelian_nonlie(2, F3)).is_zero());
  CHECK(center(symmetric_iv(2, F5)) == span_of(F5, 4, {{0, 0, 0, 1}}));
}

TEST_CASE("ideals and the largest ideal inside a subspace") {
  auto H = heisenberg_lie(F3);
  CHECK(is_ideal(H, span_of(F3, 3, {{0, 0, 1}})));
  CHECK_FALSE(is_ideal(H, span_of(F3, 3, {{1, 0, 0}})));
  CHECK(largest_ideal_in(H, H.whole()).is_full());

  auto S = cyclic_solvable(2, F3);
  auto W = span_of(F3, 2, {{2, 1}});  // a^2 - a
  auto got = largest_ideal_in(S, W);
  // brute force: the largest ideal among all subspaces of W
  FpSubspace best = S.none();
  for (const auto& U : all_subspaces(F3, 2))
    if (subspace_leq(U, W) && oracle::is_ideal(S, oracle::elements(U)) && U.dim() > best.dim()) best = U;
  CHECK(got == best);

  std::mt19937_64 rng(8);
  for (const auto& L : {cyclic_solvable(3, F2), family_sqrt(2, 2, F3), symmetric_iv(1, F5)})
    for (const auto& U : all_subspaces(L.field(), L.dim())) {
      if (rng() % 3) continue;
      auto I = largest_ideal_in(L, U);
      FpSubspace ref = L.none();
      for (const auto& V : all_subspaces(L.field(), L.dim()))
        if (subspace_leq(V, U) && V.dim() > ref.dim() && oracle::is_ideal(L, oracle::elements(V))) ref = V;
      CHECK(I == ref);
    }
}

TEST_CASE("quotients") {
  auto N = almost_abelian_nonlie(2, F3);
  auto Q = quotient(N, leibniz_kernel(N));
  CHECK(Q.algebra.dim() == 1);
  CHECK(product_space(Q.algebra, Q.algebra.whole(), Q.algebra.whole()).is_zero());

  auto H = heisenberg_lie(F2);
  auto QH = quotient(H, center(H));
  CHECK(QH.algebra.dim() == 2);
  CHECK(product_space(QH.algebra, QH.algebra.whole(), QH.algebra.whole()).is_zero());

  auto C = cyclic_solvable(3, F3);
  CHECK(quotient(C, leibniz_kernel(C)).algebra.dim() == 1);
  CHECK_THROWS_AS(quotient(H, span_of(F2, 3, {{1, 0, 0}})), InputError);
}

TEST_CASE("quotient brackets do not depend on representatives") {
  std::mt19937_64 rng(99);
  for (const auto& L : {cyclic_solvable(4, F3), family_nonlie_ii(2, 2, F3), symmetric_iv(2, F3)}) {
    for (const auto& K : {leibniz_kernel(L), center(L), product_space(L, L.whole(), L.whole())}) {
      if (!is_ideal(L, K)) continue;
      auto Q = quotient(L, K);
      const auto ks = K.basis_vectors();
      for (int trial = 0; trial < 100; ++trial) {
        auto qx = random_vec(L.field(), Q.algebra.dim(), rng);
        auto qy = random_vec(L.field(), Q.algebra.dim(), rng);
        auto x = Q.lift(qx), y = Q.lift(qy);
        for (const auto& k : ks) {
          auto c = static_cast<std::uint32_t>(rng() % L.field().modulus());
          auto d = static_cast<std::uint32_t>(rng() % L.field().modulus());
          for (std::size_t i = 0; i < L.dim(); ++i) {
            x[i] = L.field().add(x[i], L.field().mul(c, k[i]));
            y[i] = L.field().add(y[i], L.field().mul(d, k[i]));
          }
        }
        CHECK(Q.project(K, bracket(L, x, y)) == bracket(Q.algebra, qx, qy));
      }
    }
  }
}

TEST_CASE("supersolvability") {
  CHECK(is_supersolvable(abelian(3, F2)));
  CHECK(is_supersolvable(cyclic_solvable(3, F3)));
  CHECK(is_supersolvable(heisenberg_lie(F2)));
  CHECK_THROWS_AS(is_supersolvable(abelian(2, RationalField{})), UnsupportedFieldError);
}

TEST_CASE("shape classification") {
  CHECK(classify_shape(abelian(2, F3)).tag == ShapeTag::abelian);
  auto lie = classify_shape(almost_abelian_lie(3, F3));
  CHECK(lie.tag == ShapeTag::almost_abelian_lie);
  CHECK(*lie.A == span_of(F3, 3, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(classify_shape(almost_abelian_nonlie(3, F5)).tag == ShapeTag::almost_abelian_nonlie);
  auto ex = classify_shape(cyclic_nilpotent(2, F3));
  CHECK(ex.tag == ShapeTag::extraspecial);
  CHECK(ex.extraspecial_by_assumption);
  CHECK(classify_shape(heisenberg_lie(F3)).tag == ShapeTag::extraspecial);
  CHECK(classify_shape(cyclic_solvable(3, F3)).tag == ShapeTag::other);
  CHECK(classify_shape(almost_abelian_lie(3, RationalField{})).tag == ShapeTag::almost_abelian_lie);

  std::mt19937_64 rng(4);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    PrimeField f(p);
    for (std::size_t n : {2U, 3U}) {
      auto lie_alg = almost_abelian_lie(n, f), nonlie_alg = almost_abelian_nonlie(n, f);
      for (int trial = 0; trial < 10; ++trial) {
        auto P = random_invertible(f, n, rng);
        auto a = classify_shape(change_of_basis(lie_alg, P));
        auto b = classify_shape(change_of_basis(nonlie_alg, P));
        // over F_2 the Lie and non-Lie conditions differ only through [y, a]
        CHECK(a.tag == ShapeTag::almost_abelian_lie);
        CHECK(b.tag == ShapeTag::almost_abelian_nonlie);
        auto M = change_of_basis(nonlie_alg, P);
        REQUIRE(b.y);
        CHECK(is_zero_vector(f, bracket(M, *b.y, *b.y)));
        for (const auto& v : b.A->basis_vectors()) CHECK(bracket(M, v, *b.y) == v);
      }
    }
  }
}

TEST_CASE("change of basis") {
  auto C = cyclic_solvable(3, F3);
  CHECK(change_of_basis(C, Matrix<PrimeField>::identity(F3, 3)).tensor() == C.tensor());
  Matrix<PrimeField> perm(F3, 3, 3);
  perm(0, 2) = perm(1, 0) = perm(2, 1) = 1;
  CHECK(change_of_basis(abelian(3, F3), perm).tensor() == abelian(3, F3).tensor());
  CHECK_THROWS_AS(change_of_basis(C, Matrix<PrimeField>(F3, 3, 3)), InputError);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto M = change_of_basis(C, random_invertible(F3, 3, rng));
    CHECK(leibniz_kernel(M).dim() == leibniz_kernel(C).dim());
    CHECK(is_nilpotent(M) == is_nilpotent(C));
    CHECK(solvability(M).index == solvability(C).index);
    CHECK(square_zero_subalgebra(M).J.dim() == square_zero_subalgebra(C).J.dim());
  }
}

TEST_CASE("rational algebras") {
  RationalField q;
  auto L = family_sqrt(2, 1, q);
  CHECK(check_right_leibniz(L.tensor()));
  CHECK(leibniz_kernel(L).dim() == 1);
  CHECK(solvability(L).holds);
  Matrix<RationalField> P(q, 3, 3);
  P(0, 0) = q.parse("1/2");
  P(1, 1) = q.parse("3");
  P(2, 2) = q.parse("-7/5");
  P(0, 2) = q.parse("2/3");
  auto M = change_of_basis(L, P);
  CHECK(leibniz_kernel(M).dim() == 1);
  CHECK(classify_shape(quotient(M, leibniz_kernel(M)).algebra).tag ==
        classify_shape(quotient(L, leibniz_kernel(L)).algebra).tag);
}
