#include "asf/linalg.hpp"
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace asf {

std::string to_string(Rat const &x)
{
	std::ostringstream ss;
	ss << x;
	return ss.str();
}

QVec qvec_zero(size_t n) { return QVec(n, Rat(0)); }

QVec qvec_add(QVec const &a, QVec const &b)
{
	assert(a.size() == b.size());
	QVec r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return r;
}

QVec qvec_sub(QVec const &a, QVec const &b)
{
	assert(a.size() == b.size());
	QVec r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] - b[i];
	return r;
}

QVec qvec_scale(Rat const &c, QVec const &a)
{
	QVec r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = c * a[i];
	return r;
}

Rat qdot(QVec const &a, QVec const &b)
{
	assert(a.size() == b.size());
	Rat s = 0;
	for (size_t i = 0; i < a.size(); ++i)
		s += a[i] * b[i];
	return s;
}

bool qvec_is_zero(QVec const &a)
{
	for (auto &x : a)
		if (x != 0)
			return false;
	return true;
}

QMat qmat_identity(size_t n)
{
	QMat m(n, qvec_zero(n));
	for (size_t i = 0; i < n; ++i)
		m[i][i] = 1;
	return m;
}

QMat qmat_mul(QMat const &a, QMat const &b)
{
	size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
	QMat r(n, qvec_zero(m));
	for (size_t i = 0; i < n; ++i)
	{
		assert(a[i].size() == k);
		for (size_t j = 0; j < k; ++j)
		{
			if (a[i][j] == 0)
				continue;
			for (size_t l = 0; l < m; ++l)
				r[i][l] += a[i][j] * b[j][l];
		}
	}
	return r;
}

QVec qmat_apply(QMat const &a, QVec const &x)
{
	QVec r(a.size(), Rat(0));
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = qdot(a[i], x);
	return r;
}

QMat qmat_transpose(QMat const &a)
{
	size_t n = a.size(), m = n ? a[0].size() : 0;
	QMat r(m, qvec_zero(n));
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < m; ++j)
			r[j][i] = a[i][j];
	return r;
}

int rref(QMat &m, std::vector<int> *pivots)
{
	if (pivots)
		pivots->clear();
	size_t rows = m.size(), cols = rows ? m[0].size() : 0;
	size_t r = 0;
	for (size_t c = 0; c < cols && r < rows; ++c)
	{
		size_t p = r;
		while (p < rows && m[p][c] == 0)
			++p;
		if (p == rows)
			continue;
		std::swap(m[p], m[r]);
		Rat inv = Rat(1) / m[r][c];
		for (size_t j = c; j < cols; ++j)
			m[r][j] *= inv;
		for (size_t i = 0; i < rows; ++i)
		{
			if (i == r || m[i][c] == 0)
				continue;
			Rat f = m[i][c];
			for (size_t j = c; j < cols; ++j)
				m[i][j] -= f * m[r][j];
		}
		if (pivots)
			pivots->push_back((int)c);
		++r;
	}
	return (int)r;
}

int qrank(QMat m) { return rref(m); }

QMat kernel_basis(QMat const &a)
{
	size_t cols = a.empty() ? 0 : a[0].size();
	QMat m = a;
	std::vector<int> piv;
	int rank = rref(m, &piv);
	std::vector<bool> is_pivot(cols, false);
	for (int c : piv)
		is_pivot[c] = true;
	QMat ker;
	for (size_t c = 0; c < cols; ++c)
	{
		if (is_pivot[c])
			continue;
		QVec v = qvec_zero(cols);
		v[c] = 1;
		for (int i = 0; i < rank; ++i)
			v[piv[i]] = -m[i][c];
		ker.push_back(std::move(v));
	}
	return ker;
}

std::optional<QVec> solve(QMat const &a, QVec const &b)
{
	size_t rows = a.size(), cols = rows ? a[0].size() : 0;
	QMat m = a;
	for (size_t i = 0; i < rows; ++i)
		m[i].push_back(b[i]);
	std::vector<int> piv;
	int rank = rref(m, &piv);
	QVec x = qvec_zero(cols);
	for (int i = 0; i < rank; ++i)
	{
		if (piv[i] == (int)cols)
			return std::nullopt; // inconsistent
		x[piv[i]] = m[i][cols];
	}
	return x;
}

bool in_row_span(QMat const &rows, QVec const &v)
{
	if (qvec_is_zero(v))
		return true;
	QMat a = qmat_transpose(rows);
	return solve(a, v).has_value();
}

QMat intersect_row_spans(QMat const &a, QMat const &b)
{
	// x in both spans: x = u·a = w·b; solve [aᵀ | -bᵀ] on stacked coords
	size_t dim = a.empty() ? (b.empty() ? 0 : b[0].size()) : a[0].size();
	if (a.empty() || b.empty())
		return {};
	QMat sys(dim, qvec_zero(a.size() + b.size()));
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < dim; ++j)
			sys[j][i] = a[i][j];
	for (size_t i = 0; i < b.size(); ++i)
		for (size_t j = 0; j < dim; ++j)
			sys[j][a.size() + i] = -b[i][j];
	QMat ker = kernel_basis(sys);
	QMat out;
	for (auto &k : ker)
	{
		QVec x = qvec_zero(dim);
		for (size_t i = 0; i < a.size(); ++i)
			x = qvec_add(x, qvec_scale(k[i], a[i]));
		if (!qvec_is_zero(x))
			out.push_back(std::move(x));
	}
	// reduce to a basis
	QMat red = out;
	std::vector<int> piv;
	rref(red, &piv);
	QMat basis;
	for (size_t i = 0; i < piv.size(); ++i)
		basis.push_back(red[i]);
	return basis;
}

QMat qmat_inverse(QMat const &a)
{
	size_t n = a.size();
	QMat m = a;
	for (size_t i = 0; i < n; ++i)
	{
		assert(m[i].size() == n);
		for (size_t j = 0; j < n; ++j)
			m[i].push_back(i == j ? Rat(1) : Rat(0));
	}
	int rank = rref(m);
	if (rank != (int)n)
		throw std::runtime_error("qmat_inverse: singular matrix");
	QMat r(n, qvec_zero(n));
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j)
			r[i][j] = m[i][n + j];
	return r;
}

QMat projector_onto(QMat const &left, QMat const &mid, QMat const &right, size_t dim)
{
	QMat basis;
	for (auto &v : left)
		basis.push_back(v);
	for (auto &v : mid)
		basis.push_back(v);
	for (auto &v : right)
		basis.push_back(v);
	if (basis.size() != dim)
		throw std::runtime_error("projector_onto: bases do not fill the space");
	// columns of B are the basis vectors; P = B diag(0,I,0) B⁻¹
	QMat bt = qmat_transpose(basis);
	QMat binv = qmat_inverse(bt);
	QMat sel = QMat(dim, qvec_zero(dim));
	for (size_t i = left.size(); i < left.size() + mid.size(); ++i)
		sel[i][i] = 1;
	return qmat_mul(bt, qmat_mul(sel, binv));
}

// ---- integer routines ----

ZMat hnf_rows(ZMat a, ZMat *transform)
{
	size_t rows = a.size(), cols = rows ? a[0].size() : 0;
	ZMat u;
	if (transform)
	{
		u.assign(rows, ZVec(rows, Int(0)));
		for (size_t i = 0; i < rows; ++i)
			u[i][i] = 1;
	}
	size_t r = 0;
	for (size_t c = 0; c < cols && r < rows; ++c)
	{
		// gcd-reduce column c below row r
		while (true)
		{
			size_t p = rows;
			for (size_t i = r; i < rows; ++i)
				if (a[i][c] != 0 && (p == rows || abs(a[i][c]) < abs(a[p][c])))
					p = i;
			if (p == rows)
				break;
			std::swap(a[p], a[r]);
			if (transform)
				std::swap(u[p], u[r]);
			bool done = true;
			for (size_t i = r + 1; i < rows; ++i)
			{
				if (a[i][c] == 0)
					continue;
				Int q = a[i][c] / a[r][c];
				for (size_t j = 0; j < cols; ++j)
					a[i][j] -= q * a[r][j];
				if (transform)
					for (size_t j = 0; j < rows; ++j)
						u[i][j] -= q * u[r][j];
				if (a[i][c] != 0)
					done = false;
			}
			if (done)
				break;
		}
		if (a[r][c] == 0)
			continue;
		if (a[r][c] < 0)
		{
			for (size_t j = 0; j < cols; ++j)
				a[r][j] = -a[r][j];
			if (transform)
				for (size_t j = 0; j < rows; ++j)
					u[r][j] = -u[r][j];
		}
		// reduce the rows above
		for (size_t i = 0; i < r; ++i)
		{
			Int q = a[i][c] / a[r][c];
			if (a[i][c] % a[r][c] < 0)
				q -= 1;
			if (q == 0)
				continue;
			for (size_t j = 0; j < cols; ++j)
				a[i][j] -= q * a[r][j];
			if (transform)
				for (size_t j = 0; j < rows; ++j)
					u[i][j] -= q * u[r][j];
		}
		++r;
	}
	a.resize(r);
	if (transform)
	{
		u.resize(r);
		*transform = std::move(u);
	}
	return a;
}

ZMat integer_kernel(ZMat const &a)
{
	// kernel of x ↦ a x over ℤ: Hermite-reduce the rows of aᵀ, tracking the
	// transform; the transform rows mapping to zero rows give the kernel
	size_t rows = a.size(), cols = rows ? a[0].size() : 0;
	if (cols == 0)
		return {};
	ZMat at(cols, ZVec(rows, Int(0)));
	for (size_t i = 0; i < rows; ++i)
		for (size_t j = 0; j < cols; ++j)
			at[j][i] = a[i][j];
	// full reduction without dropping zero rows
	ZMat u(cols, ZVec(cols, Int(0)));
	for (size_t i = 0; i < cols; ++i)
		u[i][i] = 1;
	size_t r = 0;
	for (size_t c = 0; c < rows && r < cols; ++c)
	{
		while (true)
		{
			size_t p = cols;
			for (size_t i = r; i < cols; ++i)
				if (at[i][c] != 0 && (p == cols || abs(at[i][c]) < abs(at[p][c])))
					p = i;
			if (p == cols)
				break;
			std::swap(at[p], at[r]);
			std::swap(u[p], u[r]);
			bool done = true;
			for (size_t i = r + 1; i < cols; ++i)
			{
				if (at[i][c] == 0)
					continue;
				Int q = at[i][c] / at[r][c];
				for (size_t j = 0; j < rows; ++j)
					at[i][j] -= q * at[r][j];
				for (size_t j = 0; j < cols; ++j)
					u[i][j] -= q * u[r][j];
				if (at[i][c] != 0)
					done = false;
			}
			if (done)
				break;
		}
		if (at[r][c] != 0)
			++r;
	}
	ZMat ker;
	for (size_t i = r; i < cols; ++i)
		ker.push_back(u[i]);
	return hnf_rows(ker);
}

ZVec primitive(QVec const &v)
{
	Int l = 1;
	for (auto &x : v)
		l = lcm(l, denominator(x));
	ZVec w(v.size());
	Int g = 0;
	for (size_t i = 0; i < v.size(); ++i)
	{
		w[i] = numerator(v[i]) * (l / denominator(v[i]));
		g = gcd(g, w[i]);
	}
	if (g == 0)
		throw std::runtime_error("primitive: zero vector");
	for (auto &x : w)
		x /= g;
	return w;
}

std::optional<ZVec> integer_coords(ZMat const &basis, ZVec const &v)
{
	QMat a(v.size(), qvec_zero(basis.size()));
	for (size_t i = 0; i < basis.size(); ++i)
		for (size_t j = 0; j < v.size(); ++j)
			a[j][i] = Rat(basis[i][j]);
	auto x = solve(a, to_q(v));
	if (!x)
		return std::nullopt;
	// must be exact: check residual and integrality
	for (auto &c : *x)
		if (denominator(c) != 1)
			return std::nullopt;
	QVec chk = qvec_zero(v.size());
	for (size_t i = 0; i < basis.size(); ++i)
		chk = qvec_add(chk, qvec_scale((*x)[i], to_q(basis[i])));
	if (chk != to_q(v))
		return std::nullopt;
	return to_z_exact(*x);
}

std::optional<ZVec> integer_coords_q(QMat const &basis, QVec const &v)
{
	QMat a(v.size(), qvec_zero(basis.size()));
	for (size_t i = 0; i < basis.size(); ++i)
		for (size_t j = 0; j < v.size(); ++j)
			a[j][i] = basis[i][j];
	auto x = solve(a, v);
	if (!x)
		return std::nullopt;
	for (auto &c : *x)
		if (denominator(c) != 1)
			return std::nullopt;
	QVec chk = qvec_zero(v.size());
	for (size_t i = 0; i < basis.size(); ++i)
		chk = qvec_add(chk, qvec_scale((*x)[i], basis[i]));
	if (chk != v)
		return std::nullopt;
	return to_z_exact(*x);
}

} // namespace asf
