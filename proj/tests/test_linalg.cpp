#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asf/linalg.hpp"

using namespace asf;

TEST_CASE("rref and rank")
{
	QMat a = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(0), Rat(1), Rat(1)}};
	CHECK(qrank(a) == 2);
	QMat id = qmat_identity(3);
	CHECK(qrank(id) == 3);
}

TEST_CASE("kernel basis")
{
	QMat a = {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}};
	QMat k = kernel_basis(a);
	REQUIRE(k.size() == 1);
	for (auto const &row : a)
		CHECK(qdot(row, k[0]) == 0);
}

TEST_CASE("solve")
{
	QMat a = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
	QVec b = {Rat(5), Rat(10)};
	auto x = solve(a, b);
	REQUIRE(x.has_value());
	CHECK(qdot(a[0], *x) == 5);
	CHECK(qdot(a[1], *x) == 10);

	QMat sing = {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
	QVec bad = {Rat(0), Rat(1)};
	CHECK(!solve(sing, bad).has_value());
}

TEST_CASE("projector decomposition")
{
	// ℚ^2 = span(e1+e2) ⊕ span(e1−e2); project onto the second along the first
	QMat left = {{Rat(1), Rat(1)}};
	QMat mid = {{Rat(1), Rat(-1)}};
	QMat p = projector_onto(left, mid, {}, 2);
	QVec v = {Rat(3), Rat(1)};
	QVec pv = qmat_apply(p, v);
	CHECK(pv == QVec{Rat(1), Rat(-1)});
	// idempotent
	CHECK(qmat_apply(p, pv) == pv);
}

TEST_CASE("hnf rows with transform")
{
	ZMat a = {{Int(2), Int(4)}, {Int(1), Int(3)}};
	ZMat u;
	ZMat h = hnf_rows(a, &u);
	// transform rows reproduce the HNF rows
	for (size_t i = 0; i < h.size(); ++i)
		for (int j = 0; j < 2; ++j)
		{
			Int s = 0;
			for (size_t k = 0; k < a.size(); ++k)
				s += u[i][k] * a[k][j];
			CHECK(s == h[i][j]);
		}
	// lattice index: det = 2
	CHECK(h[0][0] * h[1][1] == 2);
}

TEST_CASE("integer kernel")
{
	ZMat a = {{Int(1), Int(1), Int(-2)}};
	ZMat k = integer_kernel(a);
	REQUIRE(k.size() == 2);
	for (auto const &row : k)
		CHECK(row[0] + row[1] - 2 * row[2] == 0);
	// (1,1,1) must be an integer combination of the kernel basis
	auto c = integer_coords(k, ZVec{Int(1), Int(1), Int(1)});
	CHECK(c.has_value());
}

TEST_CASE("primitive vector")
{
	CHECK(primitive(QVec{Rat(2), Rat(4)}) == ZVec{Int(1), Int(2)});
	CHECK(primitive(QVec{Rat(1, 2), Rat(3, 2)}) == ZVec{Int(1), Int(3)});
}

TEST_CASE("row span intersection")
{
	QMat a = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
	QMat b = {{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
	QMat c = intersect_row_spans(a, b);
	REQUIRE(c.size() == 1);
	CHECK(in_row_span(a, c[0]));
	CHECK(in_row_span(b, c[0]));
}
