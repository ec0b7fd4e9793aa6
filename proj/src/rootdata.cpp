#include "asf/rootdata.hpp"
#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

namespace asf {

Rat pairing(QVec const &chi, QVec const &lam) { return qdot(chi, lam); }

bool RootDatum::is_positive(int i) const
{
	return std::find(positive.begin(), positive.end(), i) != positive.end();
}

int RootDatum::root_index(ZVec const &alpha) const
{
	for (size_t i = 0; i < roots.size(); ++i)
		if (roots[i] == alpha)
			return (int)i;
	return -1;
}

int RootDatum::frob_root(int i) const
{
	// τ acts on X_* by frob; on X^* by the inverse transpose
	QMat f(rank, qvec_zero(rank));
	for (int a = 0; a < rank; ++a)
		for (int b = 0; b < rank; ++b)
			f[a][b] = Rat(frob[a][b]);
	QMat finv_t = qmat_transpose(qmat_inverse(f));
	QVec img = qmat_apply(finv_t, to_q(roots[i]));
	int j = root_index(to_z_exact(img));
	if (j < 0)
		throw std::runtime_error("frobenius does not normalize the root set");
	return j;
}

static ZVec reflect_costar(ZVec const &lam, ZVec const &alpha, ZVec const &alpha_v)
{
	// s_α(λ) = λ - ⟨α,λ⟩ α^∨
	Int c = 0;
	for (size_t i = 0; i < lam.size(); ++i)
		c += alpha[i] * lam[i];
	ZVec r = lam;
	for (size_t i = 0; i < lam.size(); ++i)
		r[i] -= c * alpha_v[i];
	return r;
}

static ZVec reflect_star(ZVec const &chi, ZVec const &alpha, ZVec const &alpha_v)
{
	Int c = 0;
	for (size_t i = 0; i < chi.size(); ++i)
		c += chi[i] * alpha_v[i];
	ZVec r = chi;
	for (size_t i = 0; i < chi.size(); ++i)
		r[i] -= c * alpha[i];
	return r;
}

RootDatum build_root_datum(int rank, ZMat const &simple_roots, ZMat const &simple_coroots,
                           ZMat const &frobenius)
{
	RootDatum d;
	d.rank = rank;
	if (frobenius.empty())
	{
		d.frob.assign(rank, ZVec(rank, Int(0)));
		for (int i = 0; i < rank; ++i)
			d.frob[i][i] = 1;
	}
	else
		d.frob = frobenius;

	// generate the root set by closing under simple reflections
	std::vector<std::pair<ZVec, ZVec>> pairs;
	for (size_t i = 0; i < simple_roots.size(); ++i)
		pairs.emplace_back(simple_roots[i], simple_coroots[i]);
	for (size_t i = 0; i < pairs.size(); ++i)
		for (size_t s = 0; s < simple_roots.size(); ++s)
		{
			ZVec nr = reflect_star(pairs[i].first, simple_roots[s], simple_coroots[s]);
			ZVec nc = reflect_costar(pairs[i].second, simple_roots[s], simple_coroots[s]);
			bool known = false;
			for (auto &p : pairs)
				if (p.first == nr)
				{
					known = true;
					if (p.second != nc)
						throw std::runtime_error("inconsistent coroot closure");
					break;
				}
			if (!known)
				pairs.emplace_back(std::move(nr), std::move(nc));
		}
	for (auto &p : pairs)
	{
		d.roots.push_back(p.first);
		d.coroots.push_back(p.second);
	}
	for (size_t i = 0; i < simple_roots.size(); ++i)
		d.simple.push_back(d.root_index(simple_roots[i]));
	for (size_t i = 0; i < d.roots.size(); ++i)
	{
		ZVec m = d.roots[i];
		for (auto &x : m)
			x = -x;
		int j = d.root_index(m);
		if (j < 0)
			throw std::runtime_error("root set not symmetric");
		d.neg.push_back(j);
	}
	// sanity: ⟨α, α^∨⟩ = 2
	for (size_t i = 0; i < d.roots.size(); ++i)
	{
		Int c = 0;
		for (int j = 0; j < rank; ++j)
			c += d.roots[i][j] * d.coroots[i][j];
		if (c != 2)
			throw std::runtime_error("pairing(α, α^∨) != 2");
	}
	// positivity: expansion in simple roots has nonnegative coefficients
	{
		QMat sys(rank, qvec_zero(d.simple.size()));
		for (size_t i = 0; i < d.simple.size(); ++i)
			for (int j = 0; j < rank; ++j)
				sys[j][i] = Rat(d.roots[d.simple[i]][j]);
		for (size_t i = 0; i < d.roots.size(); ++i)
		{
			auto x = solve(sys, to_q(d.roots[i]));
			if (!x)
				throw std::runtime_error("root outside the span of simple roots");
			bool pos = true;
			for (auto &c : *x)
				if (c < 0)
					pos = false;
			if (pos)
				d.positive.push_back((int)i);
		}
	}
	// Weyl group by BFS over simple reflections
	{
		std::vector<QMat> gens_c, gens_s;
		for (int s : d.simple)
		{
			QMat mc = qmat_identity(rank), ms = qmat_identity(rank);
			for (int a = 0; a < rank; ++a)
				for (int b = 0; b < rank; ++b)
				{
					mc[a][b] -= Rat(d.coroots[s][a] * d.roots[s][b]);
					ms[a][b] -= Rat(d.roots[s][a] * d.coroots[s][b]);
				}
			gens_c.push_back(mc);
			gens_s.push_back(ms);
		}
		d.weyl_costar.push_back(qmat_identity(rank));
		d.weyl_star.push_back(qmat_identity(rank));
		for (size_t i = 0; i < d.weyl_costar.size(); ++i)
			for (size_t g = 0; g < gens_c.size(); ++g)
			{
				QMat nc = qmat_mul(gens_c[g], d.weyl_costar[i]);
				bool known = false;
				for (auto &w : d.weyl_costar)
					if (w == nc)
					{
						known = true;
						break;
					}
				if (!known)
				{
					d.weyl_costar.push_back(nc);
					d.weyl_star.push_back(qmat_mul(gens_s[g], d.weyl_star[i]));
				}
			}
	}
	// frobenius must have finite order and normalize the roots
	{
		QMat f(rank, qvec_zero(rank));
		for (int a = 0; a < rank; ++a)
			for (int b = 0; b < rank; ++b)
				f[a][b] = Rat(d.frob[a][b]);
		QMat p = f;
		int ord = 1;
		while (p != qmat_identity(rank))
		{
			p = qmat_mul(p, f);
			if (++ord > 64)
				throw std::runtime_error("frobenius order too large");
		}
		for (size_t i = 0; i < d.roots.size(); ++i)
			d.frob_root((int)i);
	}
	return d;
}

RootDatum root_datum_from_json(std::string const &text)
{
	auto j = nlohmann::json::parse(text);
	int rank = j.at("rank").get<int>();
	auto read_mat = [&](char const *key) {
		ZMat m;
		if (!j.contains(key))
			return m;
		for (auto &row : j.at(key))
		{
			ZVec r;
			for (auto &x : row)
				r.push_back(Int(x.get<long long>()));
			m.push_back(r);
		}
		return m;
	};
	return build_root_datum(rank, read_mat("simple_roots"), read_mat("simple_coroots"),
	                        read_mat("frobenius"));
}

RootDatum sl2_datum()
{
	return build_root_datum(1, {{Int(2)}}, {{Int(1)}});
}

RootDatum sl3_datum()
{
	// coroot basis of X_*, fundamental-weight basis of X^*
	return build_root_datum(2, {{Int(2), Int(-1)}, {Int(-1), Int(2)}},
	                        {{Int(1), Int(0)}, {Int(0), Int(1)}});
}

RootDatum product_datum(RootDatum const &a, RootDatum const &b)
{
	int rank = a.rank + b.rank;
	ZMat sr, sc;
	auto pad = [&](ZVec const &v, bool first) {
		ZVec r(rank, Int(0));
		for (size_t i = 0; i < v.size(); ++i)
			r[first ? i : a.rank + i] = v[i];
		return r;
	};
	for (int s : a.simple)
	{
		sr.push_back(pad(a.roots[s], true));
		sc.push_back(pad(a.coroots[s], true));
	}
	for (int s : b.simple)
	{
		sr.push_back(pad(b.roots[s], false));
		sc.push_back(pad(b.coroots[s], false));
	}
	return build_root_datum(rank, sr, sc);
}

std::vector<int> ParabolicSubgroup::all_roots() const
{
	std::vector<int> r = levi_roots;
	r.insert(r.end(), nilrad.begin(), nilrad.end());
	std::sort(r.begin(), r.end());
	return r;
}

bool ParabolicSubgroup::contains(ParabolicSubgroup const &p) const
{
	auto mine = all_roots(), theirs = p.all_roots();
	return std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end());
}

LeviSubgroup make_levi(RootDatum const &datum, std::vector<int> levi_roots)
{
	std::sort(levi_roots.begin(), levi_roots.end());
	LeviSubgroup m;
	m.datum = &datum;
	m.levi_roots = levi_roots;

	QMat coroot_span;
	for (int i : levi_roots)
		coroot_span.push_back(to_q(datum.coroots[i]));
	{
		QMat red = coroot_span;
		std::vector<int> piv;
		int r = rref(red, &piv);
		red.resize(r);
		m.a_TM = red;
	}
	QMat all_root_rows;
	for (size_t i = 0; i < datum.roots.size(); ++i)
		all_root_rows.push_back(to_q(datum.roots[i]));
	m.a_G = all_root_rows.empty() ? qmat_identity(datum.rank) : kernel_basis(all_root_rows);

	// a_M = {x : α(x)=0, α ∈ Φ^M};  a_M^G = a_M ∩ span(Φ^∨)
	QMat levi_root_rows;
	for (int i : levi_roots)
		levi_root_rows.push_back(to_q(datum.roots[i]));
	QMat a_M = levi_root_rows.empty() ? qmat_identity(datum.rank) : kernel_basis(levi_root_rows);
	QMat all_coroot_span;
	for (size_t i = 0; i < datum.coroots.size(); ++i)
		all_coroot_span.push_back(to_q(datum.coroots[i]));
	{
		QMat red = all_coroot_span;
		std::vector<int> piv;
		int r = rref(red, &piv);
		red.resize(r);
		all_coroot_span = red;
	}
	m.a_MG = all_coroot_span.empty() ? QMat{} : intersect_row_spans(a_M, all_coroot_span);

	m.proj_MG = projector_onto(m.a_TM, m.a_MG, m.a_G, datum.rank);

	// (a_M^G)^* = {χ : χ(α^∨)=0, α∈Φ^M} ∩ span(Φ)
	QMat levi_coroot_rows;
	for (int i : levi_roots)
		levi_coroot_rows.push_back(to_q(datum.coroots[i]));
	QMat ann = levi_coroot_rows.empty() ? qmat_identity(datum.rank) : kernel_basis(levi_coroot_rows);
	QMat root_span;
	{
		QMat red = all_root_rows;
		std::vector<int> piv;
		int r = rref(red, &piv);
		red.resize(r);
		root_span = red;
	}
	m.dual_MG = root_span.empty() ? QMat{} : intersect_row_spans(ann, root_span);
	return m;
}

std::vector<LeviSubgroup> enumerate_levis(RootDatum const &datum)
{
	// every Levi root set is Φ ∩ (annihilator of a rational subspace cut by
	// roots); enumerate subsets of the positive roots as cutting sets
	std::set<std::vector<int>> seen;
	std::vector<LeviSubgroup> out;
	size_t npos = datum.positive.size();
	for (size_t mask = 0; mask < (size_t(1) << npos); ++mask)
	{
		QMat cut;
		for (size_t i = 0; i < npos; ++i)
			if (mask & (size_t(1) << i))
				cut.push_back(to_q(datum.roots[datum.positive[i]]));
		QMat v = cut.empty() ? qmat_identity(datum.rank) : kernel_basis(cut);
		std::vector<int> levi;
		for (size_t i = 0; i < datum.roots.size(); ++i)
		{
			bool vanish = true;
			for (auto &row : v)
				if (qdot(to_q(datum.roots[i]), row) != 0)
					vanish = false;
			if (vanish)
				levi.push_back((int)i);
		}
		if (seen.insert(levi).second)
			out.push_back(make_levi(datum, levi));
	}
	std::sort(out.begin(), out.end(), [](LeviSubgroup const &a, LeviSubgroup const &b) {
		if (a.levi_roots.size() != b.levi_roots.size())
			return a.levi_roots.size() < b.levi_roots.size();
		return a.levi_roots < b.levi_roots;
	});
	return out;
}

static std::vector<ParabolicSubgroup> all_parabolics_containing_T(RootDatum const &datum)
{
	std::vector<ParabolicSubgroup> out;
	std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
	size_t nsimple = datum.simple.size();
	for (auto const &w : datum.weyl_star)
	{
		// w-positive system and its simple roots
		std::vector<int> wpos, wsimple;
		for (int i : datum.positive)
		{
			QVec img = qmat_apply(w, to_q(datum.roots[i]));
			wpos.push_back(datum.root_index(to_z_exact(img)));
		}
		for (int s : datum.simple)
		{
			QVec img = qmat_apply(w, to_q(datum.roots[s]));
			wsimple.push_back(datum.root_index(to_z_exact(img)));
		}
		for (size_t mask = 0; mask < (size_t(1) << nsimple); ++mask)
		{
			// Levi generated by the chosen w-simple roots = roots in their span
			QMat span;
			for (size_t i = 0; i < nsimple; ++i)
				if (mask & (size_t(1) << i))
					span.push_back(to_q(datum.roots[wsimple[i]]));
			std::vector<int> levi;
			for (size_t i = 0; i < datum.roots.size(); ++i)
				if (span.empty() ? false : in_row_span(span, to_q(datum.roots[i])))
					levi.push_back((int)i);
			std::vector<int> nil;
			for (int i : wpos)
				if (std::find(levi.begin(), levi.end(), i) == levi.end())
					nil.push_back(i);
			std::sort(levi.begin(), levi.end());
			std::sort(nil.begin(), nil.end());
			if (seen.insert({levi, nil}).second)
				out.push_back(ParabolicSubgroup{levi, nil});
		}
	}
	return out;
}

std::vector<ParabolicSubgroup> enumerate_parabolics(LeviSubgroup const &M)
{
	std::vector<ParabolicSubgroup> out;
	for (auto &p : all_parabolics_containing_T(*M.datum))
		if (std::includes(p.levi_roots.begin(), p.levi_roots.end(), M.levi_roots.begin(),
		                  M.levi_roots.end()))
			out.push_back(p);
	std::sort(out.begin(), out.end(), [](ParabolicSubgroup const &a, ParabolicSubgroup const &b) {
		if (a.levi_roots != b.levi_roots)
			return a.levi_roots < b.levi_roots;
		return a.nilrad < b.nilrad;
	});
	return out;
}

std::vector<ParabolicSubgroup> minimal_parabolics(LeviSubgroup const &M)
{
	std::vector<ParabolicSubgroup> out;
	for (auto &p : enumerate_parabolics(M))
		if (p.levi_roots == M.levi_roots)
			out.push_back(p);
	return out;
}

QMat levi_projector(RootDatum const &datum, std::vector<int> const &m_roots,
                    std::vector<int> const &l_roots)
{
	// Φ^L ⊆ Φ^M; the projector onto a_M^G along a_T^M ⊕ a_G, whose
	// restriction to a_L^G is the tower map p_M^L (a_T^L ⊆ a_T^M makes
	// the composition p_M^L ∘ p_L^G collapse to p_M^G)
	if (!std::includes(m_roots.begin(), m_roots.end(), l_roots.begin(), l_roots.end()))
		throw std::runtime_error("levi_projector: L not contained in M");
	LeviSubgroup m = make_levi(datum, m_roots);
	return projector_onto(m.a_TM, m.a_MG, m.a_G, datum.rank);
}

static int canonical_borel(RootDatum const &datum, ParabolicSubgroup const &P)
{
	// first Weyl element whose positive system contains Φ^{N_P} and a
	// positive system of Φ^{M_P} (any positive system containing Φ^{N_P}
	// automatically splits Φ^{M_P} into halves)
	for (size_t wi = 0; wi < datum.weyl_star.size(); ++wi)
	{
		std::set<int> wpos;
		for (int i : datum.positive)
			wpos.insert(datum.root_index(to_z_exact(qmat_apply(datum.weyl_star[wi], to_q(datum.roots[i])))));
		bool ok = true;
		for (int i : P.nilrad)
			if (!wpos.count(i))
				ok = false;
		if (ok)
			return (int)wi;
	}
	throw std::runtime_error("no Borel inside parabolic");
}

std::vector<int> delta_of_parabolic(RootDatum const &datum, ParabolicSubgroup const &P)
{
	int wi = canonical_borel(datum, P);
	std::vector<int> out;
	for (int s : datum.simple)
	{
		int i = datum.root_index(to_z_exact(qmat_apply(datum.weyl_star[wi], to_q(datum.roots[s]))));
		if (std::find(P.nilrad.begin(), P.nilrad.end(), i) != P.nilrad.end())
			out.push_back(i);
	}
	return out;
}

QVec dominant_translate(RootDatum const &datum, ParabolicSubgroup const &P, QVec const &lam)
{
	int wi = canonical_borel(datum, P);
	std::vector<int> wpos;
	for (int i : datum.positive)
		wpos.push_back(datum.root_index(to_z_exact(qmat_apply(datum.weyl_star[wi], to_q(datum.roots[i])))));
	for (auto const &w : datum.weyl_costar)
	{
		QVec mu = qmat_apply(w, lam);
		bool dom = true;
		for (int i : wpos)
			if (qdot(to_q(datum.roots[i]), mu) < 0)
			{
				dom = false;
				break;
			}
		if (dom)
			return mu;
	}
	throw std::runtime_error("no dominant translate"); // unreachable
}

} // namespace asf
