#include "asf/sl2.hpp"
#include <algorithm>
#include <stdexcept>

namespace asf {

std::map<int, int> sl2_cells(Sl2Truncation const &t)
{
	std::map<int, int> cells;
	for (int n = -t.n_bb; n <= t.n_b; ++n)
	{
		if (n >= 0)
			cells[n] = 2 * n - std::max({0, n - t.n_bb, 2 * n - t.d});
		else
		{
			// lower-triangular chart mirror of the Prop 9.2 count: the cell
			// at n < 0 sits inside ε𝒪/ε^{2|n|}𝒪, losing one parameter to
			// the chart overlap, whence the extra lower bound 1
			int a = -n;
			cells[n] = 2 * a - std::max({1, a - t.n_b, 2 * a - t.d});
		}
	}
	return cells;
}

BettiTable sl2_betti(Sl2Truncation const &t)
{
	BettiTable b;
	auto cells = sl2_cells(t);
	for (auto const &[n, dim] : cells)
	{
		if ((int)b.b.size() <= dim)
			b.b.resize(dim + 1, Int(0));
		b.b[dim] += 1;
	}
	return b;
}

MomentGraph sl2_moment_graph(Sl2Truncation const &t)
{
	MomentGraph g;
	for (int l = -t.n_bb; l <= t.n_b; ++l)
		g.vertices.push_back(l);
	for (int l = -t.n_bb; l <= t.n_b; ++l)
		for (int m = l + 1; m <= t.n_b; ++m)
			if (m - l <= t.d)
				g.edges.emplace_back(l, m, l + m);
	return g;
}

Sl2Gkm sl2_gkm(Sl2Truncation const &t)
{
	// ambient per 𝒮-degree s: one copy of ℚ per index n ∈ [−n_B, n_B̄]
	// (the §9.5 chart coordinates); relations Σ_k (−1)^k C(d′,k) e_{n+k} ⊗ v^s
	// whenever s < d′ ≤ d and −n_B ≤ n ≤ n + d′ ≤ n_B̄
	Sl2Gkm out;
	int m = t.n_b + t.n_bb;
	if (m < 0)
	{
		out.quotient_dims = {};
		out.betti.b = {};
		return out;
	}
	int npts = m + 1;
	auto idx = [&](int n) { return n + t.n_b; };
	std::vector<QMat> rrefs;
	std::vector<std::vector<int>> freecols;
	int cutoff = t.d + 1;
	for (int s = 0; s <= cutoff; ++s)
	{
		QMat rel;
		for (int dp = s + 1; dp <= t.d; ++dp) // need s < d′ for a nonzero kernel
			for (int n = -t.n_b; n + dp <= t.n_bb; ++n)
			{
				QVec v = qvec_zero(npts);
				for (int k = 0; k <= dp; ++k)
					v[idx(n + k)] += Rat(binomial(dp, k)) * (k % 2 ? -1 : 1);
				rel.push_back(std::move(v));
			}
		std::vector<int> piv;
		if (!rel.empty())
		{
			int r = rref(rel, &piv);
			rel.resize(r);
		}
		std::vector<char> isp(npts, 0);
		for (int p : piv)
			isp[p] = 1;
		std::vector<int> fc;
		for (int c = 0; c < npts; ++c)
			if (!isp[c])
				fc.push_back(c);
		out.quotient_dims.push_back(Int(fc.size()));
		rrefs.push_back(rel);
		freecols.push_back(fc);
	}
	// 𝒟^+-annihilator: ∂(v^s) = s·v^{s−1} identifies L_s with
	// ker(quotient_s → quotient_{s−1}) under the identity on indices
	auto project = [&](int s, QVec v) {
		for (size_t i = 0; i < rrefs[s].size(); ++i)
		{
			// pivot of row i is the first nonzero column
			int p = 0;
			while (rrefs[s][i][p] == 0)
				++p;
			if (v[p] != 0)
				v = qvec_sub(v, qvec_scale(v[p], rrefs[s][i]));
		}
		QVec q(freecols[s].size());
		for (size_t j = 0; j < freecols[s].size(); ++j)
			q[j] = v[freecols[s][j]];
		return q;
	};
	for (int s = 0; s <= cutoff; ++s)
	{
		if (s == 0)
		{
			out.betti.b.push_back(out.quotient_dims[0]);
			continue;
		}
		QMat map(freecols[s - 1].size(), qvec_zero(freecols[s].size()));
		for (size_t j = 0; j < freecols[s].size(); ++j)
		{
			QVec w = qvec_zero(npts);
			w[freecols[s][j]] = 1; // ∂ acts as s·(same index); s ≠ 0 cancels in rank
			QVec q = project(s - 1, w);
			for (size_t r = 0; r < q.size(); ++r)
				map[r][j] = q[r];
		}
		out.betti.b.push_back(Int((int)freecols[s].size() - qrank(map)));
	}
	while (out.betti.b.size() > 1 && out.betti.b.back() == 0)
		out.betti.b.pop_back();
	return out;
}

std::vector<Int> sl2_point_count(Sl2Truncation const &t)
{
	auto b = sl2_betti(t);
	return b.b;
}

BettiTable sl2_closed_form(int d, int m)
{
	BettiTable b;
	if (m < 0)
		return b;
	if (m < d)
	{
		for (int i = 0; i <= m; ++i)
			b.b.push_back(Int(1));
		return b;
	}
	for (int i = 0; i < d; ++i)
		b.b.push_back(Int(1));
	b.b.push_back(Int(m - d + 1));
	return b;
}

} // namespace asf
