#include <catch2/catch_amalgamated.hpp>

#include "minkhad/matrix.hpp"
#include "minkhad/parse.hpp"

using namespace minkhad;

namespace {
const FieldSpec kQ = FieldSpec::q();
Matrix M(const std::string& s, FieldSpec f = kQ) { return parse_matrix(s, f); }
}  // namespace

TEST_CASE("rank by exact elimination") {
  CHECK(rank(M("1,2;2,4")) == 1);
  CHECK(rank(M("1,2;3,4")) == 2);
  CHECK(rank(M("1,2,0,1;-1,1,0,0;0,1,1,2")) == 3);
  CHECK(rank(Matrix::ones(4, 5, kQ)) == 1);
  CHECK(rank(Matrix::identity(6, kQ)) == 6);
  CHECK(rank(Matrix(3, 3, kQ)) == 0);
  // fractions that would break floating point
  CHECK(rank(M("1/3,1/7;1/21,1/49")) == 1);
}

TEST_CASE("inverse and identity") {
  Matrix a = M("2,1;1,1");
  Matrix ai = inverse(a);
  CHECK(a * ai == Matrix::identity(2, kQ));
  CHECK(ai * a == Matrix::identity(2, kQ));
  CHECK_THROWS_AS(inverse(M("1,2;2,4")), std::domain_error);
  Matrix p = M("2,1;1,1", FieldSpec::fp(7));
  CHECK(p * inverse(p) == Matrix::identity(2, FieldSpec::fp(7)));
}

TEST_CASE("hadamard product and entrywise inverse") {
  Matrix a = M("1,2;3,4"), b = M("5,6;7,8");
  CHECK(hadamard(a, b) == M("5,12;21,32"));
  CHECK(hadamard(M("1,2;3,4"), M("2,0;1,1")) == M("2,0;3,4"));
  CHECK(hadamard(a, Matrix::ones(2, 2, kQ)) == a);
  CHECK(rank(hadamard(M("1,2;2,4"), M("3,3;6,6"))) <= 1);  // rank-1 times rank-1
  CHECK(hadamard_inverse(hadamard_inverse(M("2,4;1,1/3"))) == M("2,4;1,1/3"));
  CHECK(hadamard_inverse(Matrix::ones(3, 2, kQ)) == Matrix::ones(3, 2, kQ));
  CHECK(hadamard(a, hadamard_inverse(a)) == Matrix::ones(2, 2, kQ));
  CHECK_THROWS_AS(hadamard_inverse(M("1,0;2,3")), std::domain_error);
  CHECK_THROWS_AS(hadamard(a, Matrix::ones(3, 2, kQ)), std::invalid_argument);
}

TEST_CASE("rank of a Hadamard product is submultiplicative") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    FieldSpec f = trial % 2 ? FieldSpec::fp(32003) : kQ;
    std::size_t m = 2 + rng.below(4), n = 2 + rng.below(4);
    std::size_t ra = 1 + rng.below(std::min(m, n));
    std::size_t rb = 1 + rng.below(std::min(m, n));
    // products of thin factors have rank at most the inner dimension
    Matrix a = random_matrix(m, ra, f, rng) * random_matrix(ra, n, f, rng);
    Matrix b = random_matrix(m, rb, f, rng) * random_matrix(rb, n, f, rng);
    REQUIRE(rank(hadamard(a, b)) <= rank(a) * rank(b));
  }
}

TEST_CASE("kronecker structure") {
  Matrix a = M("1,2;3,4"), b = M("0,1;1,0");
  Matrix k = kronecker(a, b);
  CHECK(k.rows() == 4);
  CHECK(k == M("0,1,0,2;1,0,2,0;0,3,0,4;3,0,4,0"));
  CHECK(rank(k) == rank(a) * rank(b));
  Rng rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    FieldSpec f = trial % 2 ? FieldSpec::fp(65537) : kQ;
    std::size_t m = 1 + rng.below(4), n = 1 + rng.below(4);
    Matrix x = random_matrix(m, n, f, rng);
    Matrix y = random_matrix(m, n, f, rng);
    REQUIRE(kronecker_restriction_check(x, y));
  }
}

TEST_CASE("matrix literal round trip") {
  for (auto s : {"1,2,0,1;-1,1,0,0;0,1,1,2", "1/2,-3/4;5,0", "7"}) {
    Matrix m = M(s);
    CHECK(parse_matrix(m.str(), kQ) == m);
  }
}

TEST_CASE("seeded random matrices are reproducible") {
  Rng a(99), b(99);
  Matrix x = random_matrix(4, 4, kQ, a);
  Matrix y = random_matrix(4, 4, kQ, b);
  CHECK(x == y);
  Rng c(1);
  Matrix nz = random_matrix(8, 8, FieldSpec::fp(7), c, /*nonzero=*/true);
  for (auto& e : nz.entries()) CHECK(!e.is_zero());
}
