#include "asf/bruteforce.hpp"
#include <algorithm>
#include <climits>
#include <stdexcept>

#include <fmt/format.h>

namespace asf {

// -- 𝔽_q --

namespace {

std::vector<int> fp_poly_mod(std::vector<int> a, std::vector<int> const &m, int p)
{
	// m monic
	while (a.size() >= m.size())
	{
		int lead = a.back();
		if (lead != 0)
			for (size_t i = 0; i < m.size(); ++i)
			{
				int &x = a[a.size() - m.size() + i];
				x = ((x - lead * m[i]) % p + p) % p;
			}
		a.pop_back();
	}
	return a;
}

std::vector<int> fp_poly_mul(std::vector<int> const &a, std::vector<int> const &b, int p)
{
	if (a.empty() || b.empty())
		return {};
	std::vector<int> c(a.size() + b.size() - 1, 0);
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < b.size(); ++j)
			c[i + j] = (c[i + j] + a[i] * b[j]) % p;
	return c;
}

bool fp_poly_divides(std::vector<int> const &d, std::vector<int> const &a, int p)
{
	// d monic; does d | a?
	auto r = fp_poly_mod(a, d, p);
	for (int x : r)
		if (x != 0)
			return false;
	return true;
}

std::vector<int> find_irreducible(int p, int k)
{
	// monic degree-k polynomial with no monic factor of degree ≤ k/2
	int total = 1;
	for (int i = 0; i < k; ++i)
		total *= p;
	for (int code = 0; code < total; ++code)
	{
		std::vector<int> m(k + 1, 0);
		m[k] = 1;
		int c = code;
		for (int i = 0; i < k; ++i)
		{
			m[i] = c % p;
			c /= p;
		}
		bool irred = true;
		for (int deg = 1; irred && 2 * deg <= k; ++deg)
		{
			int sub = 1;
			for (int i = 0; i < deg; ++i)
				sub *= p;
			for (int dc = 0; irred && dc < sub; ++dc)
			{
				std::vector<int> f(deg + 1, 0);
				f[deg] = 1;
				int cc = dc;
				for (int i = 0; i < deg; ++i)
				{
					f[i] = cc % p;
					cc /= p;
				}
				if (fp_poly_divides(f, m, p))
					irred = false;
			}
		}
		if (irred)
			return m;
	}
	throw std::runtime_error("find_irreducible: none found");
}

} // namespace

Fq make_fq(int q)
{
	if (q < 2)
		throw std::runtime_error("make_fq: q < 2");
	int p = 2;
	while (q % p != 0)
		++p;
	int k = 0, t = q;
	while (t > 1)
	{
		if (t % p != 0)
			throw std::runtime_error("make_fq: q is not a prime power");
		t /= p;
		++k;
	}
	Fq f;
	f.p = p;
	f.k = k;
	f.q = q;
	auto decode = [&](int x) {
		std::vector<int> v(k);
		for (int i = 0; i < k; ++i)
		{
			v[i] = x % p;
			x /= p;
		}
		return v;
	};
	auto encode = [&](std::vector<int> const &v) {
		int x = 0;
		for (int i = k - 1; i >= 0; --i)
			x = x * p + (i < (int)v.size() ? v[i] : 0);
		return x;
	};
	std::vector<int> mod = k > 1 ? find_irreducible(p, k) : std::vector<int>{};
	f.add_table.resize(q * q);
	f.mul_table.resize(q * q);
	f.neg_table.resize(q);
	f.inv_table.assign(q, 0);
	for (int a = 0; a < q; ++a)
	{
		auto va = decode(a);
		std::vector<int> vn(k);
		for (int i = 0; i < k; ++i)
			vn[i] = (p - va[i]) % p;
		f.neg_table[a] = encode(vn);
		for (int b = 0; b < q; ++b)
		{
			auto vb = decode(b);
			std::vector<int> vs(k);
			for (int i = 0; i < k; ++i)
				vs[i] = (va[i] + vb[i]) % p;
			f.add_table[a * q + b] = encode(vs);
			auto vm = fp_poly_mul(va, vb, p);
			if (k > 1)
				vm = fp_poly_mod(vm, mod, p);
			else if (!vm.empty())
				vm[0] %= p;
			f.mul_table[a * q + b] = encode(vm);
		}
	}
	for (int a = 1; a < q; ++a)
		for (int b = 1; b < q; ++b)
			if (f.mul_table[a * q + b] == 1)
				f.inv_table[a] = b;
	return f;
}

// -- truncated series --

FqSeries ser_zero(int w) { return {w, std::vector<int>(2 * w, 0)}; }

FqSeries ser_mono(int w, int coef, int exp)
{
	FqSeries s = ser_zero(w);
	int i = exp + w;
	if (i < 0 || i >= 2 * w)
	{
		if (coef != 0)
			throw std::runtime_error("ser_mono: exponent outside the precision window");
		return s;
	}
	s.c[i] = coef;
	return s;
}

FqSeries ser_add(Fq const &f, FqSeries const &a, FqSeries const &b)
{
	FqSeries s = ser_zero(a.w);
	for (int i = 0; i < 2 * a.w; ++i)
		s.c[i] = fq_add(f, a.c[i], b.c[i]);
	return s;
}

FqSeries ser_neg(Fq const &f, FqSeries const &a)
{
	FqSeries s = a;
	for (auto &x : s.c)
		x = fq_neg(f, x);
	return s;
}

FqSeries ser_mul(Fq const &f, FqSeries const &a, FqSeries const &b)
{
	int w = a.w;
	FqSeries s = ser_zero(w);
	for (int i = 0; i < 2 * w; ++i)
	{
		if (a.c[i] == 0)
			continue;
		for (int j = 0; j < 2 * w; ++j)
		{
			if (b.c[j] == 0)
				continue;
			int idx = i + j - w;
			int v = fq_mul(f, a.c[i], b.c[j]);
			if (idx < 0 || idx >= 2 * w)
				throw std::runtime_error("ser_mul: precision exhausted");
			s.c[idx] = fq_add(f, s.c[idx], v);
		}
	}
	return s;
}

bool ser_is_zero(FqSeries const &a)
{
	for (int x : a.c)
		if (x != 0)
			return false;
	return true;
}

int ser_val(FqSeries const &a)
{
	for (int i = 0; i < 2 * a.w; ++i)
		if (a.c[i] != 0)
			return i - a.w;
	return INT_MAX;
}

// -- matrices --

TruncatedLaurentMatrix tlm_identity(Fq const &f, int w, int nblocks)
{
	TruncatedLaurentMatrix m;
	m.F = &f;
	m.w = w;
	m.blocks.resize(nblocks);
	for (auto &b : m.blocks)
	{
		b.e = {ser_mono(w, 1, 0), ser_zero(w), ser_zero(w), ser_mono(w, 1, 0)};
	}
	return m;
}

Sl2Block block_mul(Fq const &f, Sl2Block const &a, Sl2Block const &b)
{
	Sl2Block r;
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			r.e[2 * i + j] =
			    ser_add(f, ser_mul(f, a.e[2 * i], b.e[j]),
			            ser_mul(f, a.e[2 * i + 1], b.e[2 + j]));
	return r;
}

Sl2Block block_inverse(Fq const &f, Sl2Block const &a)
{
	return {{a.e[3], ser_neg(f, a.e[1]), ser_neg(f, a.e[2]), a.e[0]}};
}

TruncatedLaurentMatrix tlm_mul(TruncatedLaurentMatrix const &a,
                               TruncatedLaurentMatrix const &b)
{
	TruncatedLaurentMatrix r = a;
	for (size_t j = 0; j < a.blocks.size(); ++j)
		r.blocks[j] = block_mul(*a.F, a.blocks[j], b.blocks[j]);
	return r;
}

bool ad_integral(TruncatedLaurentMatrix const &x, GammaData const &gamma)
{
	Fq const &f = *x.F;
	for (size_t j = 0; j < x.blocks.size(); ++j)
	{
		FqSeries a = ser_mono(x.w, 1, gamma.d[j]);
		Sl2Block g = {{a, ser_zero(x.w), ser_zero(x.w), ser_neg(f, a)}};
		Sl2Block ad = block_mul(f, block_mul(f, block_inverse(f, x.blocks[j]), g),
		                        x.blocks[j]);
		for (auto const &e : ad.e)
			if (!ser_is_zero(e) && ser_val(e) < 0)
				return false;
	}
	return true;
}

namespace {

// a ray functional of an SL(2)-product fan is ±e_j^*: block index and sign
std::pair<int, int> ray_block(Fan const &fan, int r)
{
	ZVec const &g = fan.rays[r].gen;
	int j = -1, s = 0;
	for (size_t i = 0; i < g.size(); ++i)
		if (g[i] != 0)
		{
			if (j >= 0 || (g[i] != 1 && g[i] != -1))
				throw std::runtime_error(
				    "bruteforce: fan ray is not an SL(2)-product weight");
			j = (int)i;
			s = g[i] > 0 ? 1 : -1;
		}
	if (j < 0)
		throw std::runtime_error("bruteforce: zero ray generator");
	return {j, s};
}

int row_height(Fq const &, Sl2Block const &b, int sign)
{
	// sign +: bottom row (Lemma 9.1's −min(val c, val d)); sign −: top row
	int v0 = ser_val(b.e[sign > 0 ? 2 : 0]);
	int v1 = ser_val(b.e[sign > 0 ? 3 : 1]);
	int v = std::min(v0, v1);
	if (v == INT_MAX)
		throw std::runtime_error("bruteforce: singular block row");
	return -v;
}

} // namespace

TorusDivisor truncation_divisor_of_point(TruncatedLaurentMatrix const &x, Fan const &fan)
{
	TorusDivisor d;
	d.n.resize(fan.rays.size());
	for (size_t r = 0; r < fan.rays.size(); ++r)
	{
		auto [j, s] = ray_block(fan, (int)r);
		d.n[r] = Rat(row_height(*x.F, x.blocks[j], s));
	}
	return d;
}

ZVec cartan_invariant(TruncatedLaurentMatrix const &x)
{
	ZVec mu(x.blocks.size());
	for (size_t j = 0; j < x.blocks.size(); ++j)
	{
		int v = INT_MAX;
		for (auto const &e : x.blocks[j].e)
			v = std::min(v, ser_val(e));
		if (v == INT_MAX)
			throw std::runtime_error("cartan_invariant: zero block");
		mu[j] = Int(-v);
	}
	return mu;
}

int recommended_precision(Fan const &fan, TorusDivisor const &d, GammaData const &gamma)
{
	int maxn = 0;
	for (auto const &x : d.n)
	{
		Int c = numerator(x) / denominator(x);
		int a = abs(c).convert_to<int>() + 1;
		maxn = std::max(maxn, a);
	}
	int maxd = 0;
	for (int x : gamma.d)
		maxd = std::max(maxd, x);
	return 2 * (maxn + maxd + (int)gamma.d.size()) + 4;
}

namespace {

struct BlockDomain
{
	int lmin = 0, lmax = 0;
	bool free_block = false; // inside M: normalized to the l = 0 cell
};

int rat_floor(Rat const &x)
{
	Int n = numerator(x), d = denominator(x);
	Int q = n / d;
	if (q * d > n)
		q -= 1;
	return q.convert_to<int>();
}

void check_sl2_product(RootDatum const &g)
{
	if ((int)g.roots.size() != 2 * g.rank)
		throw std::runtime_error(
		    "bruteforce: enumeration is restricted to products of SL(2)");
	for (int j = 0; j < g.rank; ++j)
	{
		ZVec cv(g.rank, Int(0));
		cv[j] = 1;
		bool found = false;
		for (auto const &c : g.coroots)
			if (c == cv)
				found = true;
		if (!found)
			throw std::runtime_error(
			    "bruteforce: enumeration is restricted to products of SL(2)");
	}
}

} // namespace

FiberEnumeration enumerate_truncated_fiber(RootDatum const &g, Fan const &fan,
                                           GammaData const &gamma, TorusDivisor const &D,
                                           Fq const &f)
{
	check_sl2_product(g);
	int nb = g.rank;
	if ((int)gamma.d.size() != nb)
		throw std::runtime_error("enumerate_truncated_fiber: γ block count mismatch");
	int w = recommended_precision(fan, D, gamma);

	std::vector<BlockDomain> dom(nb);
	std::vector<int> pos_ray(nb, -1), neg_ray(nb, -1);
	for (size_t r = 0; r < fan.rays.size(); ++r)
	{
		auto [j, s] = ray_block(fan, (int)r);
		(s > 0 ? pos_ray : neg_ray)[j] = (int)r;
	}
	for (int j = 0; j < nb; ++j)
	{
		if ((pos_ray[j] < 0) != (neg_ray[j] < 0))
			throw std::runtime_error("enumerate_truncated_fiber: half-truncated block");
		if (pos_ray[j] < 0)
			dom[j].free_block = true; // h_B = 0 fundamental-domain slice
		else
		{
			dom[j].lmax = rat_floor(D.n[pos_ray[j]]);
			dom[j].lmin = -rat_floor(D.n[neg_ray[j]]);
		}
	}

	double bound = 1;
	for (int j = 0; j < nb; ++j)
	{
		double cells = dom[j].free_block ? 1 : double(dom[j].lmax - dom[j].lmin + 1);
		if (cells < 0)
			cells = 0;
		double bs = 1;
		for (int i = 0; i < gamma.d[j]; ++i)
			bs *= f.q;
		bound *= cells * bs;
	}
	if (bound > 2e7)
		throw std::runtime_error(fmt::format(
		    "enumerate_truncated_fiber: infeasible size, bound {:.3g}", bound));

	FiberEnumeration out;
	// per-block candidate cells (l, b-digits on ε^{2l−d}..ε^{2l−1})
	std::vector<std::vector<std::pair<int, std::vector<int>>>> cand(nb);
	for (int j = 0; j < nb; ++j)
	{
		int lo = dom[j].free_block ? 0 : dom[j].lmin;
		int hi = dom[j].free_block ? 0 : dom[j].lmax;
		for (int l = lo; l <= hi; ++l)
		{
			std::vector<int> dig(gamma.d[j], 0);
			for (;;)
			{
				cand[j].push_back({l, dig});
				int i = 0;
				while (i < (int)dig.size() && ++dig[i] == f.q)
					dig[i++] = 0;
				if (i == (int)dig.size())
					break;
			}
		}
	}

	std::vector<int> idx(nb, 0);
	for (int j = 0; j < nb; ++j)
		if (cand[j].empty())
			return out;
	for (;;)
	{
		TruncatedLaurentMatrix x = tlm_identity(f, w, nb);
		std::string cell;
		for (int j = 0; j < nb; ++j)
		{
			auto const &[l, dig] = cand[j][idx[j]];
			FqSeries b = ser_zero(w);
			for (int i = 0; i < (int)dig.size(); ++i)
				b = ser_add(f, b, ser_mono(w, dig[i], 2 * l - gamma.d[j] + i));
			x.blocks[j].e[0] = ser_mono(w, 1, l);
			x.blocks[j].e[1] = ser_mul(f, b, ser_mono(w, 1, -l));
			x.blocks[j].e[2] = ser_zero(w);
			x.blocks[j].e[3] = ser_mono(w, 1, -l);
			cell += (j ? "," : "") + std::to_string(l);
		}
		if (ad_integral(x, gamma) &&
		    divisor_leq(truncation_divisor_of_point(x, fan), D))
		{
			out.per_cell[cell] += 1;
			out.count += 1;
			out.points.push_back(std::move(x));
		}
		int j = 0;
		while (j < nb && ++idx[j] == (int)cand[j].size())
			idx[j++] = 0;
		if (j == nb)
			break;
	}
	return out;
}

bool cartan_strata_check(RootDatum const &g, Fan const &fan, GammaData const &gamma,
                         TorusDivisor const &D, Fq const &f)
{
	int maxd = 0;
	for (int x : gamma.d)
		maxd = std::max(maxd, x);
	Rat big(0);
	for (auto const &x : D.n)
		big = std::max(big, Rat(abs(x)));
	big += maxd + 2;
	TorusDivisor Dbig;
	Dbig.n.assign(fan.rays.size(), big);

	FiberEnumeration all = enumerate_truncated_fiber(g, fan, gamma, Dbig, f);
	Polytope P = polytope(fan, D);
	for (auto const &x : all.points)
	{
		bool in_fiber = divisor_leq(truncation_divisor_of_point(x, fan), D);
		QVec mu = to_q(cartan_invariant(x));
		bool in_strata = false;
		for (auto const &wm : g.weyl_costar)
			if (polytope_contains(P, qmat_apply(fan.m.proj_MG, qmat_apply(wm, mu))))
				in_strata = true;
		if (in_fiber != in_strata)
			return false;
	}
	return true;
}

} // namespace asf
