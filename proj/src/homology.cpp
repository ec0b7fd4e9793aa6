#include "asf/homology.hpp"
#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace asf {

ValuationProfile constant_profile(RootDatum const &datum, int s)
{
	ValuationProfile p;
	p.vals.assign(datum.roots.size(), s);
	p.equivalued = true;
	return p;
}

ValuationProfile profile_from_positive(RootDatum const &datum,
                                       std::vector<int> const &positive_vals)
{
	if (positive_vals.size() != datum.positive.size())
		throw std::runtime_error("profile_from_positive: size mismatch");
	ValuationProfile p;
	p.vals.assign(datum.roots.size(), 0);
	for (size_t i = 0; i < datum.positive.size(); ++i)
	{
		p.vals[datum.positive[i]] = positive_vals[i];
		p.vals[datum.neg[datum.positive[i]]] = positive_vals[i];
	}
	p.equivalued = true;
	for (int v : p.vals)
		if (v != p.vals[0])
			p.equivalued = false;
	return p;
}

QVec HomologyPresentation::project(int n, QVec v) const
{
	auto const &dp = degrees[n];
	for (size_t i = 0; i < dp.rel_rref.size(); ++i)
	{
		Rat c = v[dp.pivots[i]];
		if (c != 0)
			v = qvec_sub(v, qvec_scale(c, dp.rel_rref[i]));
	}
	QVec out(dp.free_cols.size());
	for (size_t j = 0; j < dp.free_cols.size(); ++j)
		out[j] = v[dp.free_cols[j]];
	return out;
}

Int BettiTable::total() const
{
	Int t = 0;
	for (auto const &x : b)
		t += x;
	return t;
}

std::string BettiTable::to_json(std::vector<std::string> const &assumptions) const
{
	nlohmann::json j;
	j["betti"] = nlohmann::json::array();
	j["trace_poly"] = nlohmann::json::array();
	for (auto const &x : b)
	{
		j["betti"].push_back(x.convert_to<long long>());
		j["trace_poly"].push_back(x.convert_to<long long>());
	}
	j["assumptions"] = assumptions;
	return j.dump();
}

static bool in_gamma(Fan const &fan, TorusDivisor const &d, ZVec const &lam)
{
	for (size_t r = 0; r < fan.rays.size(); ++r)
		if (fan.eval_ray((int)r, to_q(lam)) + d.n[r] < 0)
			return false;
	return true;
}

QMat relation_space(Fan const &fan, std::vector<LatticePoint> const &reps,
                    TorusDivisor const &d, int alpha_root, int dd, int n)
{
	RootDatum const &g = *fan.g;
	int rank = g.rank;
	ZVec const &av = g.coroots[alpha_root];
	QVec alpha = to_q(g.roots[alpha_root]);
	int sdim = sym_dim(rank, n);
	QMat ker = ker_power_derivation(alpha, rank, dd, n);

	std::map<ZVec, int> rep_of;
	for (size_t i = 0; i < reps.size(); ++i)
		rep_of[reps[i].lift] = (int)i;

	QMat out;
	for (auto const &lp : reps)
	{
		// admissibility: λ, λ+α^∨, …, λ+dα^∨ all in Γ(D)
		std::vector<int> chain;
		bool ok = true;
		for (int k = 0; k <= dd && ok; ++k)
		{
			ZVec mu = lp.lift;
			for (int x = 0; x < rank; ++x)
				mu[x] += k * av[x];
			auto it = rep_of.find(mu);
			if (it == rep_of.end() || !in_gamma(fan, d, mu))
				ok = false;
			else
				chain.push_back(it->second);
		}
		if (!ok)
			continue;
		for (auto const &f : ker)
		{
			QVec v = qvec_zero(reps.size() * sdim);
			for (int k = 0; k <= dd; ++k)
			{
				Rat c = Rat(binomial(dd, k)) * (k % 2 ? -1 : 1);
				for (int m = 0; m < sdim; ++m)
					v[chain[k] * sdim + m] += c * f[m];
			}
			out.push_back(std::move(v));
		}
	}
	return out;
}

HomologyPresentation equivariant_homology(Fan const &fan, TorusDivisor const &d,
                                          ValuationProfile const &prof,
                                          std::vector<int> const &h_pos_roots)
{
	if (!fan.s_lattice.empty())
		throw std::runtime_error("equivariant_homology: X_*(S) ≠ 0, use the Laurent engine");
	HomologyPresentation pres;
	pres.fan = &fan;
	pres.d = d;
	pres.prof = prof;
	pres.h_pos_roots = h_pos_roots;
	pres.reps = gamma_basis(fan, d);
	int total_prof = 0;
	for (int a : h_pos_roots)
		total_prof += prof(a);
	pres.cutoff = total_prof + 1;

	int rank = fan.g->rank;
	for (int n = 0; n <= pres.cutoff; ++n)
	{
		DegreePiece dp;
		dp.ambient_dim = (int)pres.reps.size() * sym_dim(rank, n);
		QMat rel;
		for (int a : h_pos_roots)
			for (int dd = 1; dd <= prof(a); ++dd)
			{
				auto rs = relation_space(fan, pres.reps, d, a, dd, n);
				rel.insert(rel.end(), rs.begin(), rs.end());
			}
		if (!rel.empty())
		{
			int r = rref(rel, &dp.pivots);
			rel.resize(r);
		}
		dp.rel_rref = std::move(rel);
		std::vector<char> is_piv(dp.ambient_dim, 0);
		for (int p : dp.pivots)
			is_piv[p] = 1;
		for (int c = 0; c < dp.ambient_dim; ++c)
			if (!is_piv[c])
				dp.free_cols.push_back(c);
		pres.degrees.push_back(std::move(dp));
	}
	return pres;
}

BettiTable ordinary_homology(HomologyPresentation const &pres)
{
	int rank = pres.fan->g->rank;
	BettiTable t;
	for (int n = 0; n <= pres.cutoff; ++n)
	{
		auto const &dp = pres.degrees[n];
		if (n == 0)
		{
			t.b.push_back(dp.quotient_dim());
			continue;
		}
		int sdim = sym_dim(rank, n);
		// joint kernel of the induced 1⊗∂_χ over a basis of X^*(T)
		QMat sys;
		for (int ci = 0; ci < rank; ++ci)
		{
			QVec chi = qvec_zero(rank);
			chi[ci] = 1;
			QMat der = derivation(chi, rank, n); // target rows × source cols
			QMat block(pres.degrees[n - 1].free_cols.size(),
			           qvec_zero(dp.free_cols.size()));
			for (size_t j = 0; j < dp.free_cols.size(); ++j)
			{
				int rep = dp.free_cols[j] / sdim;
				int mono = dp.free_cols[j] % sdim;
				QVec w = qvec_zero(pres.degrees[n - 1].ambient_dim);
				for (size_t ti = 0; ti < der.size(); ++ti)
					if (der[ti][mono] != 0)
						w[rep * sym_dim(rank, n - 1) + (int)ti] += der[ti][mono];
				QVec q = pres.project(n - 1, w);
				for (size_t r = 0; r < q.size(); ++r)
					block[r][j] = q[r];
			}
			sys.insert(sys.end(), block.begin(), block.end());
		}
		if (sys.empty())
			t.b.push_back(dp.quotient_dim());
		else
			t.b.push_back(Int((int)dp.free_cols.size() - qrank(sys)));
	}
	while (t.b.size() > 1 && t.b.back() == 0)
		t.b.pop_back();
	return t;
}

} // namespace asf
