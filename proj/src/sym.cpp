#include "asf/sym.hpp"
#include <functional>
#include <map>
#include <stdexcept>

namespace asf {

std::vector<std::vector<int>> sym_monomials(int rank, int n)
{
	std::vector<std::vector<int>> out;
	if (n < 0)
		return out;
	std::vector<int> cur(rank, 0);
	std::function<void(int, int)> rec = [&](int pos, int left) {
		if (pos == rank - 1)
		{
			cur[pos] = left;
			out.push_back(cur);
			return;
		}
		for (int e = 0; e <= left; ++e)
		{
			cur[pos] = e;
			rec(pos + 1, left - e);
		}
	};
	if (rank == 0)
	{
		if (n == 0)
			out.push_back({});
		return out;
	}
	rec(0, n);
	return out;
}

int sym_dim(int rank, int n)
{
	if (n < 0)
		return 0;
	if (rank == 0)
		return n == 0 ? 1 : 0;
	// C(n + rank − 1, rank − 1)
	Int b = binomial(n + rank - 1, rank - 1);
	return (int)b;
}

int sym_index(std::vector<std::vector<int>> const &monos, std::vector<int> const &m)
{
	for (size_t i = 0; i < monos.size(); ++i)
		if (monos[i] == m)
			return (int)i;
	throw std::runtime_error("sym_index: monomial not found");
}

QMat derivation(QVec const &chi, int rank, int n)
{
	auto src = sym_monomials(rank, n);
	auto tgt = sym_monomials(rank, n - 1);
	QMat d(tgt.size(), qvec_zero(src.size()));
	for (size_t j = 0; j < src.size(); ++j)
		for (int i = 0; i < rank; ++i)
		{
			if (src[j][i] == 0 || chi[i] == 0)
				continue;
			auto m = src[j];
			m[i] -= 1;
			d[sym_index(tgt, m)][j] += Rat(src[j][i]) * chi[i];
		}
	return d;
}

QMat ker_power_derivation(QVec const &alpha, int rank, int d, int n)
{
	// matrix of ∂_α^d : 𝒮_n → 𝒮_{n−d}
	QMat m = qmat_identity(sym_dim(rank, n));
	for (int k = 0; k < d; ++k)
		m = qmat_mul(derivation(alpha, rank, n - k), m);
	if (m.empty()) // target is zero: everything is in the kernel
		return qmat_identity(sym_dim(rank, n));
	return kernel_basis(m);
}

Int binomial(int n, int k)
{
	if (k < 0 || k > n)
		return 0;
	Int r = 1;
	for (int i = 0; i < k; ++i)
	{
		r *= (n - i);
		r /= (i + 1);
	}
	return r;
}

} // namespace asf
