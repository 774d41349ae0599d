#include <doctest.h>

#include "gpd/numeric.hpp"
#include "gpd/qlinalg.hpp"
#include "gpd/rational.hpp"

using namespace gpd;

TEST_CASE("rational strings round-trip") {
  CHECK(rational_to_string(rational_of(3, 2)) == "3/2");
  CHECK(rational_to_string(rational_of(-4, 2)) == "-2");
  CHECK(rational_from_string("7/21") == rational_of(1, 3));
  CHECK(rational_from_string("-5") == rational_of(-5));
  CHECK_THROWS(rational_from_string("1/0"));
  CHECK_THROWS(rational_from_string("abc"));
}

TEST_CASE("gaussian strings round-trip") {
  auto rt = [](const std::string& s) { return gaussian_to_string(gaussian_from_string(s)); };
  CHECK(rt("3/2+1/2i") == "3/2+1/2i");
  CHECK(rt("-1") == "-1");
  CHECK(rt("i") == "i");
  CHECK(rt("-i") == "-i");
  CHECK(rt("2-3i") == "2-3i");
  CHECK(rt("1/2i") == "1/2i");
  GaussianRational z = gaussian_from_string("3/5+4/5i");
  CHECK(z.norm2() == rational_of(1));
  CHECK((z * z.conj()) == GaussianRational(rational_of(1)));
}

TEST_CASE("gaussian arithmetic") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(rational_of(-1)));
  GaussianRational z(rational_of(1, 2), rational_of(-1, 3));
  CHECK(z * gaussian_inverse(z) == GaussianRational(rational_of(1)));
  CHECK_THROWS(gaussian_inverse(GaussianRational()));
}

TEST_CASE("rank and kernel") {
  QMatrix m(3, 3);
  m.at(0, 0) = GaussianRational(1);
  m.at(0, 1) = GaussianRational(2);
  m.at(1, 1) = GaussianRational::i();
  m.at(2, 0) = GaussianRational(1);
  m.at(2, 1) = GaussianRational(2);
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  for (const auto& v : ker) {
    QVec image = m.apply(v);
    for (const auto& c : image) CHECK(c.is_zero());
  }
}

TEST_CASE("row echelon kernel matches dense kernel") {
  // x + y + z = 0 and x - y = 0.
  RowEchelon re(3);
  re.add_row(QVec{GaussianRational(1), GaussianRational(1), GaussianRational(1)});
  re.add_row(QVec{GaussianRational(1), GaussianRational(-1), GaussianRational(0)});
  re.add_row(QVec{GaussianRational(2), GaussianRational(0), GaussianRational(1)});  // dependent
  CHECK(re.rank() == 2);
  auto ker = re.kernel_basis();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == ker[0][1]);
  CHECK(ker[0][2] == GaussianRational(-2) * ker[0][0]);
}

TEST_CASE("exact positive definiteness") {
  QMatrix q(2, 2);
  q.at(0, 0) = GaussianRational(2);
  q.at(1, 1) = GaussianRational(1);
  q.at(0, 1) = GaussianRational::i();
  q.at(1, 0) = -GaussianRational::i();
  REQUIRE(q.is_hermitian());
  CHECK(is_positive_definite(q));  // det = 2 - 1 = 1 > 0
  q.at(0, 0) = GaussianRational(rational_of(1, 2));
  CHECK_FALSE(is_positive_definite(q));  // det = 1/2 - 1 < 0
}

TEST_CASE("hermitian eigenvalues and gram norms") {
  QMatrix t(2, 2);
  t.at(0, 1) = GaussianRational(1);
  // Nilpotent shift: spectral norm 1 under the standard gram.
  CHECK(spectral_norm(to_complex(t)) == doctest::Approx(1.0).epsilon(1e-12));
  QMatrix q = QMatrix::identity(2);
  q.at(0, 0) = GaussianRational(4);
  // With <e0,e0> = 4 the operator e0 -> 0, e1 -> e0 has norm ||e0||/||e1|| = 2.
  CHECK(operator_norm_with_gram(to_complex(t), q) == doctest::Approx(2.0).epsilon(1e-12));
}
