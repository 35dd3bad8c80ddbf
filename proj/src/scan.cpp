#include "leibniz/scan.hpp"

namespace leibniz {

namespace {

void require_scan_budget(const FpAlgebra& L, const Budget& budget) {
  if (power_saturating(L.field().modulus(), L.dim()) > budget.max_vectors)
    throw BudgetError("element scan of " + L.field().name() + "^" + std::to_string(L.dim()) +
                      " exceeds the vector budget of " + std::to_string(budget.max_vectors));
}

// Quadratic form x -> x^2 as n(n+1)/2 coefficient vectors.
struct SquareForm {
  std::size_t n;
  std::vector<FpVec> coeff;  // index (i, j), i <= j

  explicit SquareForm(const FpAlgebra& L) : n(L.dim()) {
    const auto& f = L.field();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        FpVec v(n);
        for (std::size_t k = 0; k < n; ++k)
          v[k] = i == j ? L.constant(i, i, k) : f.add(L.constant(i, j, k), L.constant(j, i, k));
        coeff.push_back(std::move(v));
      }
  }

  bool squares_to_zero(const PrimeField& f, const FpVec& x) const {
    for (std::size_t k = 0; k < n; ++k) {
      std::uint32_t acc = 0;
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++idx) {
          if (x[i] == 0 || x[j] == 0 || coeff[idx][k] == 0) continue;
          acc = f.add(acc, f.mul(f.mul(x[i], x[j]), coeff[idx][k]));
        }
      if (acc != 0) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<FpVec> square_zero_elements(const FpAlgebra& L, const Budget& budget) {
  require_scan_budget(L, budget);
  SquareForm form(L);
  std::vector<FpVec> out;
  for_each_vector(L.field(), L.dim(), [&](const FpVec& x) {
    if (form.squares_to_zero(L.field(), x)) out.push_back(x);
  });
  return out;
}

SquareZeroResult<PrimeField> square_zero_subalgebra(const FpAlgebra& L, const Budget& budget) {
  auto elems = square_zero_elements(L, budget);
  FpSubspace span = L.none();
  for (const auto& x : elems)
    if (!span.contains(x)) span = subspace_extend(span, {x});
  auto J = subalgebra_closure(L, span);
  const bool is_subspace = power_saturating(L.field().modulus(), span.dim()) == elems.size();
  return {std::move(J), is_subspace, static_cast<std::uint64_t>(elems.size()), false};
}

SquareZeroResult<RationalField> square_zero_subalgebra(const QAlgebra&, const Budget&) {
  throw UnsupportedFieldError(
      "J needs an exhaustive element scan and is only computed over prime fields; "
      "supply explicit square-zero witnesses for a lower bound");
}

std::vector<FpVec> projective_points(const PrimeField& f, std::size_t n, const Budget& budget) {
  if (power_saturating(f.modulus(), n) > budget.max_vectors)
    throw BudgetError("line scan exceeds the vector budget");
  std::vector<FpVec> out;
  for_each_vector(f, n, [&](const FpVec& x) {
    auto lead = std::find_if(x.begin(), x.end(), [](std::uint32_t v) { return v != 0; });
    if (lead != x.end() && *lead == 1) out.push_back(x);
  });
  return out;
}

bool is_supersolvable(const FpAlgebra& L, const Budget& budget) {
  if (L.dim() <= 1) return true;
  for (const auto& v : projective_points(L.field(), L.dim(), budget)) {
    auto line = FpSubspace::from_vectors(L.field(), L.dim(), {v});
    if (!is_ideal(L, line)) continue;
    // Every chief series has the same factor dimensions, so any 1-dim ideal will do.
    return is_supersolvable(quotient(L, line).algebra, budget);
  }
  return false;
}

bool is_supersolvable(const QAlgebra&, const Budget&) {
  throw UnsupportedFieldError("supersolvability is only decided over prime fields");
}

std::optional<FpVec> find_generator(const FpAlgebra& L, const Budget& budget) {
  if (L.dim() == 0) return std::nullopt;
  for (const auto& v : projective_points(L.field(), L.dim(), budget))
    if (subalgebra_closure(L, std::vector<FpVec>{v}).is_full()) return v;
  return std::nullopt;
}

}  // namespace leibniz
