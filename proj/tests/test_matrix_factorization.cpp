#include "doctest.h"

#include "adehk/catalog.hpp"
#include "adehk/error.hpp"
#include "adehk/groebner.hpp"
#include "adehk/matrix_factorization.hpp"

using namespace adehk;

namespace {

const std::vector<int> kE8Weights{15, 10, 6};

std::vector<ZPoly> polys(std::initializer_list<const char*> texts) {
  std::vector<ZPoly> out;
  for (const char* t : texts) out.push_back(ZPoly::parse(t));
  return out;
}

bool equal_up_to_sign(const std::vector<ZPoly>& a, const std::vector<ZPoly>& b) {
  if (a == b) return true;
  std::vector<ZPoly> neg;
  for (const auto& f : b) neg.push_back(-f);
  return a == neg;
}

/// psi_J v reduced modulo F over F_p.
bool in_kernel_mod_F(const PolyMatrix& psi_j, const std::vector<ZPoly>& v, const ZPoly& F,
                     const std::vector<int>& weights, std::uint32_t p) {
  const auto gb = buchberger({PolyFp(F, p, 3)}, WeightedOrder(weights));
  for (const auto& row : psi_j) {
    ZPoly s;
    for (std::size_t j = 0; j < row.size(); ++j) s = s + row[j] * v[j];
    if (!normal_form(PolyFp(s, p, 3), gb).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("the size-4 E8 factorization") {
  const MatFac mf = example_e8_size4();
  const MfVerdict v = verify(mf);
  CHECK(v.valid);
  CHECK(v.reduced);
  CHECK(verify_mod(mf, 7).valid);
  CHECK(coker_rank(mf) == 2);
  CHECK(mat_mul(mf.phi, mf.psi) == scalar_identity(4, mf.F));
}

TEST_CASE("trivial and perturbed factorizations") {
  const ZPoly F = ZPoly::parse("X^2+Y^3+Z^5");
  const MatFac trivial{{{F}}, {{ZPoly(1)}}, F};
  CHECK(verify(trivial).valid);
  CHECK_FALSE(verify(trivial).reduced);
  CHECK(coker_rank(trivial) == 1);
  MatFac flipped = example_e8_size4();
  flipped.phi[0][1] = -flipped.phi[0][1];
  CHECK_FALSE(verify(flipped).valid);
  MatFac ragged = example_e8_size4();
  ragged.psi.pop_back();
  CHECK_THROWS_AS(verify(ragged), std::invalid_argument);
  const MatFac mf = example_e8_size4();
  const MatFac twice{block_sum(mf.phi, mf.phi), block_sum(mf.psi, mf.psi), mf.F};
  CHECK(verify(twice).valid);
  CHECK(coker_rank(twice) == 4);
  const MatFac bad{{{ZPoly::parse("X")}}, {{ZPoly::parse("X")}}, F};
  CHECK_THROWS_AS(coker_rank(bad), InconsistencyError);
}

TEST_CASE("kernel vectors of column-deleted psi") {
  const MatFac mf = example_e8_size4();
  const auto k = [&](std::vector<int> cols) { return kernel_vector(select_columns(mf.psi, cols), mf.F, kE8Weights, 10007); };
  CHECK(equal_up_to_sign(k({2, 3, 4}), polys({"Z", "-Y", "X"})));
  CHECK(equal_up_to_sign(k({1, 3, 4}), polys({"Z", "X", "Y^2"})));
  CHECK(equal_up_to_sign(k({1, 2, 4}), polys({"Y", "X", "-Z^4"})));
  CHECK(equal_up_to_sign(k({1, 2, 3}), polys({"X", "-Y^2", "-Z^4"})));
  const PolyMatrix square = parse_matrix("[[X, 0], [0, Y]]");
  CHECK_THROWS_AS(kernel_vector(square, mf.F, kE8Weights, 10007), InconsistencyError);
  CHECK_THROWS_AS(kernel_vector(select_columns(mf.psi, {2, 3, 4}), mf.F, kE8Weights, 4), std::invalid_argument);
  CHECK_THROWS_AS(select_columns(mf.psi, {5}), std::out_of_range);
}

TEST_CASE("column choices") {
  const MatFac mf = example_e8_size4();
  for (int drop = 1; drop <= 4; ++drop) {
    std::vector<int> cols;
    for (int c = 1; c <= 4; ++c)
      if (c != drop) cols.push_back(c);
    CHECK_MESSAGE(column_choice_check(select_columns(mf.psi, cols), mf.F, kE8Weights, 7), "drop " << drop);
  }
  PolyMatrix zero_col = select_columns(mf.psi, {2, 3, 4});
  for (auto& row : zero_col) row[0] = ZPoly();
  CHECK_FALSE(column_choice_check(zero_col, mf.F, kE8Weights, 7));
}

TEST_CASE("the duality witness") {
  const MatFac mf = example_e8_size4();
  const PolyMatrix a = example_e8_alpha();
  CHECK(mat_mul(a, mf.phi) == mat_mul(transpose(mf.phi), a));
  CHECK(mat_mul(a, mf.psi) == mat_mul(transpose(mf.psi), a));
  CHECK(determinant(a) == ZPoly(1));
}

TEST_CASE("property: shipped factorizations are valid, reduced, of catalog rank") {
  const auto shipped = shipped_matrix_factorizations();
  CHECK(shipped.size() >= 10);
  for (const auto& s : shipped) {
    const MfVerdict v = verify(s.mf);
    CHECK_MESSAGE(v.valid, s.name);
    CHECK_MESSAGE(v.reduced, s.name);
    CHECK_MESSAGE(coker_rank(s.mf) == s.rank, s.name);
    for (const auto& m : catalog(s.ring))
      if (m.index == s.catalog_index) CHECK_MESSAGE(m.rank == s.rank, s.name);
  }
}

TEST_CASE("property: kernel vectors lie in the kernel modulo F") {
  // psi^J keeps rank + 1 columns.
  for (const auto& s : shipped_matrix_factorizations()) {
    const int n = static_cast<int>(s.mf.size());
    const std::vector<int> w(s.ring.weights.begin(), s.ring.weights.end());
    for (std::uint32_t p : {7u, 11u}) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> cols;
        for (int c = 0; c < n; ++c)
          if (mask & (1u << c)) cols.push_back(c + 1);
        if (static_cast<int>(cols.size()) != s.rank + 1) continue;
        const PolyMatrix pj = select_columns(s.mf.psi, cols);
        const auto v = kernel_vector(pj, s.mf.F, w, p);
        REQUIRE(v.size() == cols.size());
        bool nonzero = false;
        for (const auto& f : v) nonzero = nonzero || !f.is_zero();
        CHECK(nonzero);
        CHECK_MESSAGE(in_kernel_mod_F(pj, v, s.mf.F, w, p), s.name << " mask " << mask << " p=" << p);
      }
    }
  }
}

TEST_CASE("matrix text format") {
  const PolyMatrix m = parse_matrix("[[X, -Y^2], [Z^4, 0]]");
  CHECK(m.size() == 2);
  CHECK(m[0][1] == ZPoly::parse("-Y^2"));
  CHECK(parse_matrix(matrix_str(m)) == m);
  CHECK_THROWS_AS(parse_matrix("[[X, Y], [Z]]"), ParseError);
  CHECK_THROWS_AS(parse_matrix("[[X, Y]"), ParseError);
  CHECK_THROWS_AS(parse_matrix("[X]"), ParseError);
  CHECK_THROWS_AS(parse_matfac("[[X]]", ZPoly::parse("X")), ParseError);
  CHECK_THROWS_AS(parse_matfac("foo = [[X]] psi = [[X]]", ZPoly::parse("X^2")), ParseError);
  const MatFac mf = parse_matfac("phi = [[X]]; psi = [[X]]", ZPoly::parse("X^2"));
  CHECK(verify(mf).valid);
}
