#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stag/linsys.hpp"
#include "stag/matrix.hpp"

using namespace stag;

namespace {

Matrix mat(Field f, std::size_t r, std::size_t c, std::vector<std::int64_t> v) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(v[i * c + j]);
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q") {
    Field q = Field::Q();
    Scalar a = q.from_int(3) / q.from_int(7);
    CHECK(a.to_string() == "3/7");
    CHECK((a * a.inverse()).is_one());
    CHECK((a - a).is_zero());
    CHECK((q.from_int(1) / q.from_int(2) + q.from_int(1) / q.from_int(3)).to_string() == "5/6");
}

TEST_CASE("scalar arithmetic over Fp") {
    Field f13 = Field::Fp(13);
    Scalar a = f13.from_int(5);
    CHECK((a.inverse() * a).is_one());
    CHECK(f13.from_int(-1) == f13.from_int(12));
    CHECK((f13.from_int(7) * f13.from_int(2)).residue() == 1);
    CHECK_THROWS_AS((void)Field::Fp(15), std::invalid_argument);
    CHECK_THROWS_AS((void)(f13.from_int(1) + Field::Q().one()), std::invalid_argument);
    CHECK_THROWS_AS((void)f13.zero().inverse(), std::domain_error);
}

TEST_CASE("solve_linear basics") {
    Field q = Field::Q();
    Matrix id3 = Matrix::identity(q, 3);
    Matrix b = mat(q, 3, 1, {1, 2, 3});
    auto x = solve_linear(id3, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    // inconsistent: second row is twice the first but rhs is not
    Matrix a = mat(q, 2, 2, {1, 2, 2, 4});
    CHECK(!solve_linear(a, mat(q, 2, 1, {1, 3})).has_value());
    // consistent rank-1 system has the canonical solution (1, 0)
    auto y = solve_linear(a, mat(q, 2, 1, {1, 2}));
    REQUIRE(y.has_value());
    CHECK(*y == mat(q, 2, 1, {1, 0}));
}

TEST_CASE("kernel bases are canonical") {
    Field q = Field::Q();
    CHECK(Matrix::identity(q, 3).kernel_basis().cols() == 0);
    Matrix z(q, 1, 2);
    CHECK(z.kernel_basis() == mat(q, 2, 2, {1, 0, 0, 1}));
    Matrix a = mat(q, 2, 2, {1, 2, 2, 4});
    CHECK(a.kernel_basis() == mat(q, 2, 1, {-2, 1}));
    CHECK(a.rank() == 1);
    CHECK(a.nullity() == 1);
}

TEST_CASE("rank depends on the field") {
    // over F_2 the rows coincide, over Q they are independent
    Matrix aq = mat(Field::Q(), 2, 2, {1, 1, 3, 1});
    Matrix a2 = mat(Field::Fp(2), 2, 2, {1, 1, 3, 1});
    CHECK(aq.rank() == 2);
    CHECK(a2.rank() == 1);
}

TEST_CASE("rank-nullity and repeatability") {
    Field f5 = Field::Fp(5);
    Matrix a = mat(f5, 3, 4, {1, 2, 3, 4, 2, 4, 1, 3, 3, 1, 4, 2});
    CHECK(a.rank() + a.nullity() == 4);
    CHECK(a.kernel_basis() == a.kernel_basis());
    Matrix k = a.kernel_basis();
    CHECK((a * k).is_zero());
}

TEST_CASE("stack and product helpers") {
    Field q = Field::Q();
    Matrix a = mat(q, 2, 2, {1, 2, 3, 4});
    Matrix b = mat(q, 2, 2, {0, 1, 1, 0});
    CHECK(a.hstack(b).cols() == 4);
    CHECK(a.vstack(b).rows() == 4);
    CHECK(a.transpose().at(0, 1) == q.from_int(3));
    CHECK(Matrix::direct_sum(a, b).rank() == 4);
    Matrix kr = Matrix::kronecker(Matrix::identity(q, 2), b);
    CHECK(kr.rows() == 4);
    CHECK(kr.at(0, 1) == q.from_int(1));
    CHECK(kr.at(2, 3) == q.from_int(1));
    CHECK(kr.at(0, 3) == q.from_int(0));
    CHECK((a * Matrix::identity(q, 2)) == a);
    CHECK((a - a).is_zero());
}

TEST_CASE("cokernel projection") {
    Field q = Field::Q();
    Matrix a = mat(q, 3, 2, {1, 0, 0, 1, 1, 1});  // rank 2 in k^3
    Matrix p = cokernel_projection(a);
    CHECK(p.rows() == 1);
    CHECK(p.cols() == 3);
    CHECK((p * a).is_zero());
    CHECK(p.rank() == 1);
    // full-rank square map has zero cokernel
    CHECK(cokernel_projection(Matrix::identity(q, 2)).rows() == 0);
    // zero map: cokernel is everything
    Matrix pz = cokernel_projection(Matrix(q, 2, 1));
    CHECK(pz.rows() == 2);
    CHECK(pz.rank() == 2);
}

TEST_CASE("matrix-unknown linear systems") {
    Field q = Field::Q();
    // solve A·U = B for a 2x2 unknown U
    Matrix a = mat(q, 2, 2, {2, 0, 0, 3});
    Matrix b = mat(q, 2, 2, {4, 2, 3, 9});
    LinearSystem sys(q);
    std::size_t u = sys.add_unknown(2, 2);
    sys.add_constraint({{u, a, Matrix::identity(q, 2)}}, -b);
    auto sol = sys.solve();
    REQUIRE(sol.has_value());
    CHECK(a * sys.extract(*sol, u) == b);

    // commutant of a diagonal matrix with distinct entries is 2-dimensional
    LinearSystem comm(q);
    std::size_t v = comm.add_unknown(2, 2);
    comm.add_constraint({{v, a, Matrix::identity(q, 2)},
                         {v, -Matrix::identity(q, 2), a}},
                        Matrix(q, 2, 2));
    CHECK(comm.nullspace().cols() == 2);

    // inconsistent system
    LinearSystem bad(q);
    std::size_t w = bad.add_unknown(1, 1);
    Matrix zero11(q, 1, 1);
    bad.add_constraint({{w, zero11, zero11}}, mat(q, 1, 1, {1}));
    CHECK(!bad.solve().has_value());
}
