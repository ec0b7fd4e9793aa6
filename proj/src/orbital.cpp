#include "asf/orbital.hpp"
#include <algorithm>
#include <stdexcept>

namespace asf {

Int weight(Fan const &fan, TorusDivisor const &D, TorusDivisor const &dx)
{
	return Int(lattice_points(polytope(fan, divisor_add(D, divisor_neg(dx)))).size());
}

Int eval_poly(std::vector<Int> const &poly, Int const &q)
{
	Int v = 0;
	for (size_t i = poly.size(); i-- > 0;)
		v = v * q + poly[i];
	return v;
}

std::vector<Int> fit_int_polynomial(std::vector<std::pair<Int, Int>> const &pts)
{
	if (pts.size() < 2)
		throw std::runtime_error("fit_int_polynomial: need a fit point and a witness");
	size_t n = pts.size() - 1;
	QMat vand(n, qvec_zero(n));
	QVec rhs(n);
	for (size_t i = 0; i < n; ++i)
	{
		Rat p = 1;
		for (size_t j = 0; j < n; ++j)
		{
			vand[i][j] = p;
			p *= Rat(pts[i].first);
		}
		rhs[i] = Rat(pts[i].second);
	}
	auto sol = solve(vand, rhs);
	if (!sol)
		throw std::runtime_error("fit_int_polynomial: singular system");
	std::vector<Int> poly;
	for (auto const &c : *sol)
	{
		if (denominator(c) != 1)
			throw std::runtime_error("fit_int_polynomial: non-integer coefficient");
		poly.push_back(numerator(c));
	}
	while (poly.size() > 1 && poly.back() == 0)
		poly.pop_back();
	if (eval_poly(poly, pts.back().first) != pts.back().second)
		throw std::runtime_error("fit_int_polynomial: witness evaluation mismatch");
	return poly;
}

static Rat frac_part(Rat x)
{
	Int q = numerator(x) / denominator(x);
	Rat f = x - Rat(q);
	if (f < 0)
		f += 1;
	return f;
}

int transfer_sign(RootDatum const &datum, ValuationProfile const &prof, ZMat const &tau,
                  TorusPoint const &s)
{
	int sign = 1;
	for (int a : datum.positive)
	{
		ZVec im(datum.rank, Int(0));
		for (int i = 0; i < datum.rank; ++i)
			for (int j = 0; j < datum.rank; ++j)
				im[i] += tau[i][j] * datum.coroots[a][j];
		if (im != datum.coroots[datum.neg[a]])
			continue; // not a symmetric orbit
		Rat v = 0;
		for (int i = 0; i < datum.rank; ++i)
			v += s.value[i] * Rat(datum.coroots[a][i]);
		if (frac_part(v) == 0)
			continue; // α^∨(s) = 1
		if (prof(a) % 2)
			sign = -sign;
	}
	return sign;
}

OrbitalResult orbital_integral_lefschetz(Fan const &fan, TorusDivisor const &D,
                                         ValuationProfile const &prof,
                                         std::vector<int> const &h_pos,
                                         TorusPoint const *kappa)
{
	OrbitalResult res;
	res.assumptions = {"purity", "split torus constants mu = 1",
	                   "large characteristic: val(2) = 0"};
	if (fan.s_lattice.empty())
	{
		if (kappa)
		{
			// κ factors through the trivial component group
			TorusPoint k = *kappa;
			if (torus_point_order(k) != 1)
				res.assumptions.push_back(
				    "kappa restricted to S = 0 is trivial");
		}
		HomologyPresentation pres = equivariant_homology(fan, D, prof, h_pos);
		res.poly = ordinary_homology(pres).b;
		return res;
	}
	int order = kappa ? torus_point_order(*kappa) : 1;
	static std::map<int, CycField> fields;
	int N = order % 2 ? 2 * order : order; // keep −1 available
	if (!fields.count(N))
		fields.emplace(N, make_cyc_field(N));
	CycField const &f = fields.at(N);
	LaurentHomology lh = laurent_homology(fan, D, prof, h_pos, f);
	Cyc c = cyc(f, Rat(1));
	if (kappa)
		c = kappa_character(fan, *kappa, f);
	res.poly = tor_trace(lh, c);
	return res;
}

Int orbital_integral_bruteforce(RootDatum const &g, Fan const &fan, GammaData const &gamma,
                                TorusDivisor const &D, Fq const &f)
{
	return enumerate_truncated_fiber(g, fan, gamma, D, f).count;
}

static std::vector<Int> poly_shift(std::vector<Int> const &p, int k)
{
	std::vector<Int> out(p.size() + k, Int(0));
	for (size_t i = 0; i < p.size(); ++i)
		out[i + k] = p[i];
	return out;
}

static void poly_acc(std::vector<Int> &a, std::vector<Int> const &b, Int const &c)
{
	if (a.size() < b.size())
		a.resize(b.size(), Int(0));
	for (size_t i = 0; i < b.size(); ++i)
		a[i] += c * b[i];
}

static std::vector<Int> poly_trim(std::vector<Int> p)
{
	while (p.size() > 1 && p.back() == 0)
		p.pop_back();
	return p;
}

FlReport fundamental_lemma_check(RootDatum const &g, Fan const &fan,
                                 ValuationProfile const &prof, TorusPoint const &kappa,
                                 std::vector<TorusDivisor> const &family)
{
	FlReport rep;
	rep.assumptions = {"purity", "split gamma: all D-sets singletons",
	                   "split torus constants mu = 1",
	                   "large characteristic: val(2) = 0"};
	if (!prof.equivalued)
		rep.assumptions.push_back("non-equivalued profile: purity unproved");
	rep.strata = strata(g, fan, kappa);
	for (auto const &sys : rep.strata.systems)
		rep.d_i.push_back(subsystem_codim_degree(g, sys, prof));

	ZMat id(g.rank, ZVec(g.rank, Int(0)));
	for (int i = 0; i < g.rank; ++i)
		id[i][i] = 1;
	int dk = transfer_sign(g, prof, id, kappa);

	int ns = (int)rep.strata.systems.size();
	if (ns > 20)
		throw std::runtime_error("fundamental_lemma_check: stratum too large");
	for (auto const &D : family)
	{
		FlInstance inst;
		inst.d = D;
		auto side = [&](std::vector<int> const &i_set) {
			std::vector<int> sys = stratum_subsystem(g, rep.strata, i_set);
			std::vector<int> pos;
			for (int r : g.positive)
				if (std::binary_search(sys.begin(), sys.end(), r))
					pos.push_back(r);
			return orbital_integral_lefschetz(fan, D, prof, pos, &kappa).poly;
		};
		inst.lhs = poly_trim([&] {
			std::vector<Int> p = side({});
			for (auto &x : p)
				x *= dk;
			return p;
		}());
		std::vector<Int> rhs;
		for (int mask = 1; mask < (1 << ns); ++mask)
		{
			std::vector<int> i_set;
			for (int b = 0; b < ns; ++b)
				if (mask & (1 << b))
					i_set.push_back(b);
			// split case: τ = id fixes every I
			int d_i = subsystem_codim_degree(
			    g, stratum_subsystem(g, rep.strata, i_set), prof);
			Int sgn = (i_set.size() % 2) ? 1 : -1;
			poly_acc(rhs, poly_shift(side(i_set), d_i), sgn);
		}
		inst.rhs = poly_trim(rhs);
		inst.equal = inst.lhs == inst.rhs;
		rep.hypotheses_met = rep.hypotheses_met && true;
		rep.instances.push_back(std::move(inst));
	}
	return rep;
}

} // namespace asf
