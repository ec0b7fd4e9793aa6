#include "asf/endoscopy.hpp"
#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace asf {

static Rat frac_part(Rat x)
{
	Int num = numerator(x);
	Int den = denominator(x);
	Int q = num / den;
	Rat f = x - Rat(q);
	if (f < 0)
		f += 1;
	return f;
}

static bool is_integral(Rat const &x) { return frac_part(x) == 0; }

int torus_point_order(TorusPoint const &s)
{
	Int n = 1;
	for (auto const &x : s.value)
		n = lcm(n, Int(denominator(frac_part(x))));
	return n.convert_to<int>();
}

static Rat pair_point(TorusPoint const &s, ZVec const &mu)
{
	Rat t = 0;
	for (size_t i = 0; i < mu.size(); ++i)
		t += s.value[i] * Rat(mu[i]);
	return t;
}

std::vector<int> centralizer_subsystem(RootDatum const &datum, TorusPoint const &s)
{
	std::vector<int> out;
	for (size_t r = 0; r < datum.roots.size(); ++r)
		if (is_integral(pair_point(s, datum.coroots[r])))
			out.push_back((int)r);
	return out;
}

// basis of (ℤ-span of the coroots of sys) ∩ s_lattice
static ZMat coroot_s_intersection(RootDatum const &datum, std::vector<int> const &sys,
                                  ZMat const &s_lattice)
{
	if (sys.empty() || s_lattice.empty())
		return {};
	ZMat a;
	for (int r : sys)
		a.push_back(datum.coroots[r]);
	a = hnf_rows(a);
	// solve xᵀa = yᵀb over ℤ: kernel of the stacked transpose
	ZMat m(datum.rank, ZVec(a.size() + s_lattice.size(), Int(0)));
	for (size_t j = 0; j < a.size(); ++j)
		for (int i = 0; i < datum.rank; ++i)
			m[i][j] = a[j][i];
	for (size_t j = 0; j < s_lattice.size(); ++j)
		for (int i = 0; i < datum.rank; ++i)
			m[i][a.size() + j] = -s_lattice[j][i];
	ZMat ker = integer_kernel(m);
	ZMat out;
	for (auto const &k : ker)
	{
		ZVec v(datum.rank, Int(0));
		for (size_t j = 0; j < a.size(); ++j)
			for (int i = 0; i < datum.rank; ++i)
				v[i] += k[j] * a[j][i];
		out.push_back(std::move(v));
	}
	return out;
}

// can s′ ∈ s·Ker(T̂ → Ŝ) have all of sys in its centralizer? (ℚ/ℤ is
// divisible, so the congruences are solvable iff they are consistent on
// ℤ(sys^∨) ∩ X_*(S))
static bool realizable(RootDatum const &datum, std::vector<int> const &sys,
                       ZMat const &s_lattice, TorusPoint const &s)
{
	for (auto const &b : coroot_s_intersection(datum, sys, s_lattice))
		if (!is_integral(pair_point(s, b)))
			return false;
	return true;
}

static bool closed_symmetric(RootDatum const &datum, std::vector<int> const &sys)
{
	for (int a : sys)
		for (int b : sys)
		{
			ZVec sum = datum.roots[a];
			for (int i = 0; i < datum.rank; ++i)
				sum[i] += datum.roots[b][i];
			int idx = datum.root_index(sum);
			if (idx >= 0 && !std::binary_search(sys.begin(), sys.end(), idx))
				return false;
		}
	return true;
}

static std::vector<int> map_system(RootDatum const &datum, std::vector<int> const &sys,
                                   ZMat const &tau)
{
	std::vector<int> out;
	for (int r : sys)
	{
		ZVec im(datum.rank, Int(0));
		for (int i = 0; i < datum.rank; ++i)
			for (int j = 0; j < datum.rank; ++j)
				im[i] += tau[i][j] * datum.coroots[r][j];
		int idx = -1;
		for (size_t k = 0; k < datum.coroots.size(); ++k)
			if (datum.coroots[k] == im)
			{
				idx = (int)k;
				break;
			}
		if (idx < 0)
			throw std::runtime_error("strata: τ does not preserve the coroots");
		out.push_back(idx);
	}
	std::sort(out.begin(), out.end());
	return out;
}

EndoscopicStratum strata(RootDatum const &datum, Fan const &fan, TorusPoint const &s,
                         ZMat const *tau_on_costar)
{
	auto const &pos = datum.positive;
	std::vector<std::vector<int>> found;
	for (size_t mask = 0; mask < (size_t(1) << pos.size()); ++mask)
	{
		std::vector<int> sys;
		for (size_t i = 0; i < pos.size(); ++i)
			if (mask & (size_t(1) << i))
			{
				sys.push_back(pos[i]);
				sys.push_back(datum.neg[pos[i]]);
			}
		std::sort(sys.begin(), sys.end());
		if (!closed_symmetric(datum, sys))
			continue;
		if (!realizable(datum, sys, fan.s_lattice, s))
			continue;
		found.push_back(std::move(sys));
	}
	EndoscopicStratum st;
	for (auto const &a : found)
	{
		bool maximal = true;
		for (auto const &b : found)
			if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
				maximal = false;
		if (maximal)
			st.systems.push_back(a);
	}
	std::sort(st.systems.begin(), st.systems.end());
	for (auto const &sys : st.systems)
	{
		auto im = tau_on_costar ? map_system(datum, sys, *tau_on_costar) : sys;
		auto it = std::find(st.systems.begin(), st.systems.end(), im);
		if (it == st.systems.end())
			throw std::runtime_error("strata: τ does not permute the maximal systems");
		st.tau.push_back((int)(it - st.systems.begin()));
	}
	return st;
}

std::vector<int> stratum_subsystem(RootDatum const &datum, EndoscopicStratum const &st,
                                   std::vector<int> const &i_set)
{
	std::vector<int> out;
	if (i_set.empty())
	{
		for (size_t r = 0; r < datum.roots.size(); ++r)
			out.push_back((int)r);
		return out;
	}
	out = st.systems[i_set[0]];
	for (size_t k = 1; k < i_set.size(); ++k)
	{
		std::vector<int> next;
		std::set_intersection(out.begin(), out.end(), st.systems[i_set[k]].begin(),
		                      st.systems[i_set[k]].end(), std::back_inserter(next));
		out = std::move(next);
	}
	return out;
}

int subsystem_codim_degree(RootDatum const &datum, std::vector<int> const &sys,
                           ValuationProfile const &prof)
{
	int d = 0;
	for (int a : datum.positive)
		if (!std::binary_search(sys.begin(), sys.end(), a))
			d += prof(a);
	return d;
}

TransferFactor transfer_factor(RootDatum const &datum, std::vector<int> const &h,
                               std::vector<int> const &hp, ValuationProfile const &prof)
{
	if (!std::includes(h.begin(), h.end(), hp.begin(), hp.end()))
		throw std::runtime_error("transfer_factor: systems not nested");
	TransferFactor tf;
	for (int a : datum.positive)
		if (std::binary_search(h.begin(), h.end(), a) &&
		    !std::binary_search(hp.begin(), hp.end(), a))
		{
			tf.roots.push_back(a);
			tf.exps.push_back(prof(a));
			tf.degree += prof(a);
		}
	return tf;
}

QMat transfer_matrix(RootDatum const &datum, TransferFactor const &delta, int n)
{
	int rank = datum.rank;
	int m = n;
	QMat acc = qmat_identity(sym_dim(rank, n));
	for (size_t i = 0; i < delta.roots.size(); ++i)
	{
		QVec alpha = to_q(datum.roots[delta.roots[i]]);
		for (int e = 0; e < delta.exps[i]; ++e)
		{
			if (m == 0)
				throw std::runtime_error("transfer_matrix: degree below zero");
			acc = qmat_mul(derivation(alpha, rank, m), acc);
			--m;
		}
	}
	return acc;
}

QMat apply_transfer(TransferFactor const &delta, HomologyPresentation const &src,
                    HomologyPresentation const &dst, int n)
{
	int rank = src.fan->g->rank;
	int m = n - delta.degree;
	if (m < 0)
		throw std::runtime_error("apply_transfer: target degree negative");
	QMat dm = transfer_matrix(*src.fan->g, delta, n);
	int sdim = sym_dim(rank, n), tdim = sym_dim(rank, m);
	size_t nr = src.reps.size();
	auto ambient = [&](QVec const &v) {
		QVec w = qvec_zero(nr * tdim);
		for (size_t rep = 0; rep < nr; ++rep)
			for (int mono = 0; mono < sdim; ++mono)
			{
				if (v[rep * sdim + mono] == 0)
					continue;
				for (int t = 0; t < tdim; ++t)
					w[rep * tdim + t] += dm[t][mono] * v[rep * sdim + mono];
			}
		return w;
	};
	for (auto const &row : src.degrees[n].rel_rref)
		if (!in_row_span(dst.degrees[m].rel_rref, ambient(row)))
			throw std::runtime_error("apply_transfer: relations do not map into relations");
	auto const &fc = src.degrees[n].free_cols;
	QMat out(dst.degrees[m].free_cols.size(), qvec_zero(fc.size()));
	for (size_t j = 0; j < fc.size(); ++j)
	{
		QVec v = qvec_zero(nr * sdim);
		v[fc[j]] = 1;
		QVec q = dst.project(m, ambient(v));
		for (size_t r = 0; r < q.size(); ++r)
			out[r][j] = q[r];
	}
	return out;
}

KoszulComplex koszul_complex(RootDatum const &datum, EndoscopicStratum const &st,
                             std::vector<int> const &j_set, std::vector<int> const &i_set,
                             ValuationProfile const &prof, int n)
{
	int rank = datum.rank;
	auto shift = [&](std::vector<int> k) {
		std::vector<int> jk = j_set;
		jk.insert(jk.end(), k.begin(), k.end());
		std::sort(jk.begin(), jk.end());
		return subsystem_codim_degree(datum, stratum_subsystem(datum, st, jk), prof) -
		       subsystem_codim_degree(datum, stratum_subsystem(datum, st, j_set), prof);
	};
	auto sys_of = [&](std::vector<int> k) {
		std::vector<int> jk = j_set;
		jk.insert(jk.end(), k.begin(), k.end());
		std::sort(jk.begin(), jk.end());
		return stratum_subsystem(datum, st, jk);
	};
	KoszulComplex kc;
	int len = (int)i_set.size();
	kc.terms.resize(len + 1);
	for (size_t mask = 0; mask < (size_t(1) << len); ++mask)
	{
		std::vector<int> k;
		for (int b = 0; b < len; ++b)
			if (mask & (size_t(1) << b))
				k.push_back(i_set[b]);
		kc.terms[k.size()].push_back(k);
	}
	for (auto &t : kc.terms)
		std::sort(t.begin(), t.end());
	auto term_dim = [&](std::vector<int> const &k) {
		int m = n - shift(k);
		return m < 0 ? 0 : sym_dim(rank, m);
	};
	auto term_offset = [&](int pos, std::vector<int> const &k) {
		int off = 0;
		for (auto const &kk : kc.terms[pos])
		{
			if (kk == k)
				return off;
			off += term_dim(kk);
		}
		throw std::runtime_error("koszul_complex: term not found");
	};
	for (int pos = 0; pos < len; ++pos)
	{
		int rows = 0, cols = 0;
		for (auto const &k : kc.terms[pos + 1])
			rows += term_dim(k);
		for (auto const &k : kc.terms[pos])
			cols += term_dim(k);
		QMat mat(rows, qvec_zero(cols));
		for (auto const &k : kc.terms[pos])
		{
			int m = n - shift(k);
			if (m < 0)
				continue;
			for (int i : i_set)
			{
				if (std::binary_search(k.begin(), k.end(), i))
					continue;
				std::vector<int> ki = k;
				ki.insert(std::lower_bound(ki.begin(), ki.end(), i), i);
				int sign = 1;
				for (int x : k)
					if (x < i)
						sign = -sign;
				TransferFactor tf = transfer_factor(datum, sys_of(k), sys_of(ki), prof);
				if (n - shift(ki) < 0)
					continue;
				QMat dm = transfer_matrix(datum, tf, m);
				int co = term_offset(pos, k), ro = term_offset(pos + 1, ki);
				for (size_t r = 0; r < dm.size(); ++r)
					for (size_t c = 0; c < dm[r].size(); ++c)
						mat[ro + r][co + c] += Rat(sign) * dm[r][c];
			}
		}
		kc.diff.push_back(std::move(mat));
	}
	for (int pos = 0; pos + 1 < len; ++pos)
	{
		if (kc.diff[pos].empty() || kc.diff[pos + 1].empty())
			continue;
		QMat dd = qmat_mul(kc.diff[pos + 1], kc.diff[pos]);
		for (auto const &row : dd)
			for (auto const &x : row)
				if (x != 0)
					throw std::runtime_error("koszul_complex: d∘d ≠ 0");
	}
	return kc;
}

LaurentHomology laurent_homology(Fan const &fan, TorusDivisor const &d,
                                 ValuationProfile const &prof,
                                 std::vector<int> const &h_pos_roots, CycField const &f)
{
	if (fan.s_lattice.size() != 1)
		throw std::runtime_error("laurent_homology: needs rank-1 X_*(S)");
	RootDatum const &g = *fan.g;
	int rank = g.rank;
	LaurentHomology lh;
	lh.F = &f;
	lh.fan = &fan;
	lh.d = d;
	lh.h_pos_roots = h_pos_roots;
	lh.prof = prof;
	lh.reps = gamma_basis(fan, d);
	int total_prof = 0;
	for (int a : h_pos_roots)
		total_prof += prof(a);
	lh.cutoff = total_prof + 1;

	for (int n = 0; n <= lh.cutoff; ++n)
	{
		int sdim = sym_dim(rank, n);
		LModule mod;
		mod.F = &f;
		mod.ambient = (int)lh.reps.size() * sdim;
		mod.rel.assign(mod.ambient, std::vector<LP>());
		auto add_column = [&](std::vector<LP> col) {
			for (int i = 0; i < mod.ambient; ++i)
				mod.rel[i].push_back(std::move(col[i]));
		};
		for (int a : h_pos_roots)
			for (int dd = 1; dd <= prof(a); ++dd)
			{
				ZVec const &av = g.coroots[a];
				QMat ker = ker_power_derivation(to_q(g.roots[a]), rank, dd, n);
				for (auto const &lp : lh.reps)
				{
					std::vector<std::pair<int, int>> chain; // (rep index, u-exponent)
					bool ok = true;
					for (int k = 0; k <= dd && ok; ++k)
					{
						ZVec mu = lp.lift;
						for (int x = 0; x < rank; ++x)
							mu[x] += k * av[x];
						auto sp = split_off_s(fan, lh.reps, mu);
						if (!sp)
							ok = false;
						else
							chain.push_back({sp->first,
							                 sp->second[0].convert_to<int>()});
					}
					if (!ok)
						continue;
					for (auto const &fv : ker)
					{
						std::vector<LP> col(mod.ambient, lp_zero(f));
						for (int k = 0; k <= dd; ++k)
						{
							Rat c = Rat(binomial(dd, k)) * (k % 2 ? -1 : 1);
							LP term = lp_mul(lp_const(f, cyc(f, c)),
							                 lp_u(f, chain[k].second));
							for (int m = 0; m < sdim; ++m)
								if (fv[m] != 0)
								{
									int idx = chain[k].first * sdim + m;
									col[idx] = lp_add(
									    col[idx],
									    lp_mul(term, lp_const(f, cyc(f, fv[m]))));
								}
						}
						add_column(std::move(col));
					}
				}
			}
		lh.equivariant.push_back(std::move(mod));
	}

	for (int n = 0; n <= lh.cutoff; ++n)
	{
		if (n == 0)
		{
			lh.ordinary.push_back(lh.equivariant[0]);
			continue;
		}
		int sdim = sym_dim(rank, n), tdim = sym_dim(rank, n - 1);
		int nr = (int)lh.reps.size();
		// stacked ∂_χ over the coordinate characters, into ⊕ rank copies
		LMat phi(rank * nr * tdim, std::vector<LP>(nr * sdim, lp_zero(f)));
		for (int ci = 0; ci < rank; ++ci)
		{
			QVec chi = qvec_zero(rank);
			chi[ci] = 1;
			QMat der = derivation(chi, rank, n);
			for (int rep = 0; rep < nr; ++rep)
				for (int mono = 0; mono < sdim; ++mono)
					for (size_t t = 0; t < der.size(); ++t)
						if (der[t][mono] != 0)
							phi[ci * nr * tdim + rep * tdim + (int)t]
							   [rep * sdim + mono] =
							    lp_const(f, cyc(f, der[t][mono]));
		}
		LModule tgt;
		tgt.F = &f;
		tgt.ambient = rank * nr * tdim;
		int prev_rel = lh.equivariant[n - 1].rel.empty()
		                   ? 0
		                   : (int)lh.equivariant[n - 1].rel[0].size();
		tgt.rel.assign(tgt.ambient, std::vector<LP>(rank * prev_rel, lp_zero(f)));
		for (int ci = 0; ci < rank; ++ci)
			for (int i = 0; i < nr * tdim; ++i)
				for (int j = 0; j < prev_rel; ++j)
					tgt.rel[ci * nr * tdim + i][ci * prev_rel + j] =
					    lh.equivariant[n - 1].rel[i][j];
		lh.ordinary.push_back(kernel_module(phi, lh.equivariant[n], tgt, nullptr));
	}
	return lh;
}

LMat apply_transfer_laurent(TransferFactor const &delta, LaurentHomology const &src,
                            LaurentHomology const &dst, int n)
{
	RootDatum const &g = *src.fan->g;
	int rank = g.rank;
	int m = n - delta.degree;
	if (m < 0)
		throw std::runtime_error("apply_transfer_laurent: target degree negative");
	CycField const &f = *src.F;
	QMat dm = transfer_matrix(g, delta, n);
	int sdim = sym_dim(rank, n), tdim = sym_dim(rank, m);
	int nr = (int)src.reps.size();
	LMat phi(nr * tdim, std::vector<LP>(nr * sdim, lp_zero(f)));
	for (int rep = 0; rep < nr; ++rep)
		for (int mono = 0; mono < sdim; ++mono)
			for (int t = 0; t < tdim; ++t)
				if (dm[t][mono] != 0)
					phi[rep * tdim + t][rep * sdim + mono] =
					    lp_const(f, cyc(f, dm[t][mono]));
	// relation compatibility: φ·rel_src ⊆ column span of rel_dst
	int nrel = src.equivariant[n].rel.empty() ? 0 : (int)src.equivariant[n].rel[0].size();
	for (int j = 0; j < nrel; ++j)
	{
		std::vector<LP> im(nr * tdim, lp_zero(f));
		for (int i = 0; i < nr * tdim; ++i)
			for (int k = 0; k < nr * sdim; ++k)
				im[i] = lp_add(im[i],
				               lp_mul(phi[i][k], src.equivariant[n].rel[k][j]));
		if (!in_column_span(dst.equivariant[m].rel, im))
			throw std::runtime_error(
			    "apply_transfer_laurent: relations do not map into relations");
	}
	return phi;
}

Cyc kappa_character(Fan const &fan, TorusPoint const &kappa, CycField const &f)
{
	if (fan.s_lattice.size() != 1)
		throw std::runtime_error("kappa_character: needs rank-1 X_*(S)");
	Rat t = frac_part(pair_point(kappa, fan.s_lattice[0]));
	Rat scaled = t * Rat(f.N);
	if (denominator(scaled) != 1)
		throw std::runtime_error("kappa_character: κ order does not divide N");
	return zeta(f, Int(numerator(scaled)).convert_to<int>());
}

std::vector<Int> tor_trace(LaurentHomology const &lh, Cyc const &c)
{
	std::vector<Int> out;
	for (auto const &mod : lh.ordinary)
	{
		auto [t0, t1] = tor_truncated(mod, c, lh.cutoff + 6);
		if (t0 != tor_dim_snf(mod, c, 0) || t1 != tor_dim_snf(mod, c, 1))
			throw std::runtime_error("tor_trace: truncation and Smith form disagree");
		out.push_back(Int(t0 - t1));
	}
	while (out.size() > 1 && out.back() == 0)
		out.pop_back();
	return out;
}

} // namespace asf
