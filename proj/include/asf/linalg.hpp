#pragma once
#include "asf/rational.hpp"
#include <optional>

namespace asf {

// -- exact rational linear algebra (row-major matrices) --

QVec qvec_zero(size_t n);
QVec qvec_add(QVec const &a, QVec const &b);
QVec qvec_sub(QVec const &a, QVec const &b);
QVec qvec_scale(Rat const &c, QVec const &a);
Rat qdot(QVec const &a, QVec const &b);
bool qvec_is_zero(QVec const &a);

QMat qmat_identity(size_t n);
QMat qmat_mul(QMat const &a, QMat const &b);
QVec qmat_apply(QMat const &a, QVec const &x); // a * x (x column)
QMat qmat_transpose(QMat const &a);

// in-place reduced row echelon form; returns rank, records pivot columns
int rref(QMat &m, std::vector<int> *pivots = nullptr);
int qrank(QMat m);

// basis of {x : a x = 0}, rows of result
QMat kernel_basis(QMat const &a);
// one solution of a x = b, if any
std::optional<QVec> solve(QMat const &a, QVec const &b);
// does v lie in the row span of rows?
bool in_row_span(QMat const &rows, QVec const &v);
// basis (rows) of the intersection of two row spans
QMat intersect_row_spans(QMat const &a, QMat const &b);
// inverse of a square matrix (throws if singular)
QMat qmat_inverse(QMat const &a);

// projector onto span(mid) along span(left)+span(right); bases given as rows,
// left ++ mid ++ right must be a basis of the full space
QMat projector_onto(QMat const &left, QMat const &mid, QMat const &right, size_t dim);

// -- integer lattice routines --

// row-style Hermite reduction: returns a ℤ-basis (rows) of the lattice
// generated by the rows of a; if transform != nullptr, records U with
// (basis rows) = U * (input rows)
ZMat hnf_rows(ZMat a, ZMat *transform = nullptr);

// basis (rows) of {x ∈ ℤ^n : a x = 0}
ZMat integer_kernel(ZMat const &a);

// scale a rational vector to the primitive integer vector on the same ray
ZVec primitive(QVec const &v);

// is v an integer combination of the rows of basis? (basis rows independent)
std::optional<ZVec> integer_coords(ZMat const &basis, ZVec const &v);
std::optional<ZVec> integer_coords_q(QMat const &basis, QVec const &v);

} // namespace asf
