#include "asf/laurent.hpp"
#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asf {

LP lp_normalize(LP p)
{
	size_t a = 0, b = p.c.size();
	while (a < b && p.c[a].is_zero())
		++a;
	while (b > a && p.c[b - 1].is_zero())
		--b;
	LP q;
	q.F = p.F;
	if (a == b)
	{
		q.lo = 0;
		return q;
	}
	q.lo = p.lo + (int)a;
	q.c.assign(p.c.begin() + a, p.c.begin() + b);
	return q;
}

LP lp_zero(CycField const &f)
{
	LP p;
	p.F = &f;
	return p;
}

LP lp_const(CycField const &f, Cyc const &x)
{
	LP p;
	p.F = &f;
	p.lo = 0;
	p.c = {x};
	return lp_normalize(p);
}

LP lp_u(CycField const &f, int k)
{
	LP p;
	p.F = &f;
	p.lo = k;
	p.c = {cyc(f, Rat(1))};
	return p;
}

bool lp_is_zero(LP const &p) { return p.c.empty(); }

bool lp_eq(LP const &a, LP const &b)
{
	return lp_is_zero(lp_sub(a, b));
}

int lp_span(LP const &p) { return p.c.empty() ? -1 : (int)p.c.size() - 1; }

LP lp_add(LP const &a, LP const &b)
{
	if (a.c.empty())
		return b;
	if (b.c.empty())
		return a;
	int lo = std::min(a.lo, b.lo);
	int hi = std::max(a.lo + (int)a.c.size(), b.lo + (int)b.c.size());
	LP r;
	r.F = a.F;
	r.lo = lo;
	r.c.assign(hi - lo, cyc(*a.F, Rat(0)));
	for (size_t i = 0; i < a.c.size(); ++i)
		r.c[a.lo - lo + i] = r.c[a.lo - lo + i] + a.c[i];
	for (size_t i = 0; i < b.c.size(); ++i)
		r.c[b.lo - lo + i] = r.c[b.lo - lo + i] + b.c[i];
	return lp_normalize(r);
}

LP lp_neg(LP const &a)
{
	LP r = a;
	for (auto &x : r.c)
		x = -x;
	return r;
}

LP lp_sub(LP const &a, LP const &b) { return lp_add(a, lp_neg(b)); }

LP lp_mul(LP const &a, LP const &b)
{
	if (a.c.empty() || b.c.empty())
		return lp_zero(*(a.F ? a.F : b.F));
	LP r;
	r.F = a.F;
	r.lo = a.lo + b.lo;
	r.c.assign(a.c.size() + b.c.size() - 1, cyc(*a.F, Rat(0)));
	for (size_t i = 0; i < a.c.size(); ++i)
		for (size_t j = 0; j < b.c.size(); ++j)
			r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
	return lp_normalize(r);
}

LP lp_pow(LP const &a, int n)
{
	LP r = lp_const(*a.F, cyc(*a.F, Rat(1)));
	for (int i = 0; i < n; ++i)
		r = lp_mul(r, a);
	return r;
}

LP lp_divmod(LP const &a, LP const &b, LP *rem)
{
	if (lp_is_zero(b))
		throw std::runtime_error("lp_divmod: division by zero");
	LP r = a, q = lp_zero(*b.F);
	while (!lp_is_zero(r) && lp_span(r) >= lp_span(b))
	{
		Cyc c = r.c.back() * cyc_inv(b.c.back());
		int k = (r.lo + (int)r.c.size()) - (b.lo + (int)b.c.size());
		LP t;
		t.F = b.F;
		t.lo = k;
		t.c = {c};
		q = lp_add(q, t);
		r = lp_sub(r, lp_mul(t, b));
	}
	if (rem)
		*rem = r;
	return q;
}

Cyc lp_eval(LP const &p, Cyc const &x)
{
	if (p.c.empty())
		return cyc(*x.F, Rat(0));
	// Horner over the coefficient window, then shift by u^lo
	Cyc acc = cyc(*x.F, Rat(0));
	for (size_t i = p.c.size(); i-- > 0;)
		acc = acc * x + p.c[i];
	Cyc shift = cyc(*x.F, Rat(1));
	if (p.lo >= 0)
		for (int i = 0; i < p.lo; ++i)
			shift = shift * x;
	else
	{
		Cyc xi = cyc_inv(x);
		for (int i = 0; i < -p.lo; ++i)
			shift = shift * xi;
	}
	return acc * shift;
}

std::string to_string(LP const &p)
{
	if (p.c.empty())
		return "0";
	std::ostringstream os;
	for (size_t i = 0; i < p.c.size(); ++i)
	{
		if (p.c[i].is_zero())
			continue;
		if (os.tellp() > 0)
			os << " + ";
		os << "(" << to_string(p.c[i]) << ")u^" << p.lo + (int)i;
	}
	return os.str();
}

LMat lmat_identity(CycField const &f, int n)
{
	LMat m(n, std::vector<LP>(n, lp_zero(f)));
	for (int i = 0; i < n; ++i)
		m[i][i] = lp_const(f, cyc(f, Rat(1)));
	return m;
}

LMat lmat_mul(LMat const &a, LMat const &b)
{
	if (a.empty() || b.empty())
		return {};
	LMat r(a.size(), std::vector<LP>(b[0].size(), lp_zero(*a[0][0].F)));
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t k = 0; k < b.size(); ++k)
		{
			if (lp_is_zero(a[i][k]))
				continue;
			for (size_t j = 0; j < b[0].size(); ++j)
				r[i][j] = lp_add(r[i][j], lp_mul(a[i][k], b[k][j]));
		}
	return r;
}

Snf snf(LMat const &a0)
{
	Snf res;
	res.s = a0;
	int m = (int)a0.size();
	int n = m ? (int)a0[0].size() : 0;
	if (m == 0 || n == 0)
		return res;
	CycField const &f = *a0[0][0].F;
	res.u = lmat_identity(f, m);
	res.v = lmat_identity(f, n);
	auto &s = res.s;
	auto row_sub = [&](int dst, int src, LP const &q) { // row dst −= q·row src
		for (int j = 0; j < n; ++j)
			s[dst][j] = lp_sub(s[dst][j], lp_mul(q, s[src][j]));
		for (int j = 0; j < m; ++j)
			res.u[dst][j] = lp_sub(res.u[dst][j], lp_mul(q, res.u[src][j]));
	};
	auto col_sub = [&](int dst, int src, LP const &q) {
		for (int i = 0; i < m; ++i)
			s[i][dst] = lp_sub(s[i][dst], lp_mul(q, s[i][src]));
		for (int i = 0; i < n; ++i)
			res.v[i][dst] = lp_sub(res.v[i][dst], lp_mul(q, res.v[i][src]));
	};
	auto row_swap = [&](int x, int y) {
		std::swap(s[x], s[y]);
		std::swap(res.u[x], res.u[y]);
	};
	auto col_swap = [&](int x, int y) {
		for (int i = 0; i < m; ++i)
			std::swap(s[i][x], s[i][y]);
		for (int i = 0; i < n; ++i)
			std::swap(res.v[i][x], res.v[i][y]);
	};
	int t = 0;
	while (t < m && t < n)
	{
		// find nonzero entry of minimal span in the remaining block
		int bi = -1, bj = -1, best = -1;
		for (int i = t; i < m; ++i)
			for (int j = t; j < n; ++j)
				if (!lp_is_zero(s[i][j]) && (best < 0 || lp_span(s[i][j]) < best))
				{
					best = lp_span(s[i][j]);
					bi = i;
					bj = j;
				}
		if (bi < 0)
			break;
		row_swap(t, bi);
		col_swap(t, bj);
		bool dirty = false;
		for (int i = t + 1; i < m; ++i)
		{
			if (lp_is_zero(s[i][t]))
				continue;
			LP r;
			LP q = lp_divmod(s[i][t], s[t][t], &r);
			row_sub(i, t, q);
			if (!lp_is_zero(s[i][t]))
				dirty = true;
		}
		for (int j = t + 1; j < n; ++j)
		{
			if (lp_is_zero(s[t][j]))
				continue;
			LP r;
			LP q = lp_divmod(s[t][j], s[t][t], &r);
			col_sub(j, t, q);
			if (!lp_is_zero(s[t][j]))
				dirty = true;
		}
		if (dirty)
			continue; // smaller-span entries appeared, redo the pivot hunt
		++t;
	}
	for (int i = 0; i < std::min(m, n); ++i)
		if (!lp_is_zero(s[i][i]))
			res.diag.push_back(s[i][i]);
	return res;
}

LMat syzygies(LMat const &a)
{
	int m = (int)a.size();
	int n = m ? (int)a[0].size() : 0;
	if (n == 0)
		return {};
	CycField const &f = *a[0][0].F;
	Snf sf = snf(a);
	int r = (int)sf.diag.size();
	// kernel basis: v columns past the rank
	LMat k(n, std::vector<LP>(n - r, lp_zero(f)));
	for (int j = r; j < n; ++j)
		for (int i = 0; i < n; ++i)
			k[i][j - r] = sf.v[i][j];
	return k;
}

std::optional<std::vector<LP>> lsolve(LMat const &a, std::vector<LP> const &b)
{
	int m = (int)a.size();
	int n = m ? (int)a[0].size() : 0;
	CycField const &f = *b[0].F;
	if (n == 0)
	{
		for (auto const &x : b)
			if (!lp_is_zero(x))
				return std::nullopt;
		return std::vector<LP>{};
	}
	Snf sf = snf(a);
	// y solves s·y = u·b; x = v·y
	std::vector<LP> ub(m, lp_zero(f));
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			ub[i] = lp_add(ub[i], lp_mul(sf.u[i][j], b[j]));
	std::vector<LP> y(n, lp_zero(f));
	int r = (int)sf.diag.size();
	for (int i = 0; i < m; ++i)
	{
		if (i < r)
		{
			LP rem;
			LP q = lp_divmod(ub[i], sf.s[i][i], &rem);
			if (!lp_is_zero(rem))
				return std::nullopt;
			y[i] = q;
		}
		else if (!lp_is_zero(ub[i]))
			return std::nullopt;
	}
	std::vector<LP> x(n, lp_zero(f));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			x[i] = lp_add(x[i], lp_mul(sf.v[i][j], y[j]));
	return x;
}

bool in_column_span(LMat const &a, std::vector<LP> const &b)
{
	return lsolve(a, b).has_value();
}

bool module_is_zero(LModule const &m)
{
	for (int i = 0; i < m.ambient; ++i)
	{
		std::vector<LP> e(m.ambient, lp_zero(*m.F));
		e[i] = lp_const(*m.F, cyc(*m.F, Rat(1)));
		if (!in_column_span(m.rel, e))
			return false;
	}
	return true;
}

std::optional<int> annihilated_by_power(LModule const &m, LP const &nabla, int maxpow)
{
	for (int j = 0; j <= maxpow; ++j)
	{
		LP nj = lp_pow(nabla, j);
		bool all = true;
		for (int i = 0; i < m.ambient && all; ++i)
		{
			std::vector<LP> e(m.ambient, lp_zero(*m.F));
			e[i] = nj;
			if (!in_column_span(m.rel, e))
				all = false;
		}
		if (all)
			return j;
	}
	return std::nullopt;
}

static LMat hstack(LMat const &a, LMat const &b)
{
	if (a.empty())
		return b;
	if (b.empty())
		return a;
	LMat r = a;
	for (size_t i = 0; i < r.size(); ++i)
		r[i].insert(r[i].end(), b[i].begin(), b[i].end());
	return r;
}

LModule kernel_module(LMat const &phi, LModule const &m1, LModule const &m2, LMat *gens)
{
	CycField const &f = *m1.F;
	// preimage of im(rel2): syzygies of [phi | rel2], first ambient1 coords
	LMat stacked = hstack(phi, m2.rel);
	LMat syz = syzygies(stacked);
	int k = syz.empty() ? 0 : (int)syz[0].size();
	LMat p(m1.ambient, std::vector<LP>(k, lp_zero(f)));
	for (int i = 0; i < m1.ambient; ++i)
		for (int j = 0; j < k; ++j)
			p[i][j] = syz[i][j];
	if (gens)
		*gens = p;
	// relations among the p-columns modulo im(rel1)
	LMat pr = hstack(p, m1.rel);
	LMat syz2 = syzygies(pr);
	int k2 = syz2.empty() ? 0 : (int)syz2[0].size();
	LModule ker;
	ker.F = &f;
	ker.ambient = k;
	ker.rel.assign(k, std::vector<LP>(k2, lp_zero(f)));
	for (int i = 0; i < k; ++i)
		for (int j = 0; j < k2; ++j)
			ker.rel[i][j] = syz2[i][j];
	return ker;
}

LModule coker_module(LMat const &phi, LModule const &m2)
{
	LModule c;
	c.F = m2.F;
	c.ambient = m2.ambient;
	c.rel = hstack(m2.rel, phi);
	return c;
}

int tor_dim_snf(LModule const &m, Cyc const &c, int p)
{
	Snf sf = snf(m.rel);
	int vanish = 0;
	for (auto const &d : sf.diag)
		if (lp_eval(d, c).is_zero())
			++vanish;
	int free_rank = m.ambient - (int)sf.diag.size();
	if (p == 0)
		return free_rank + vanish;
	if (p == 1)
		return vanish;
	return 0;
}

// expand p(u) in Cyc[t]/t^K around u = c + t
static std::vector<Cyc> lp_expand(LP const &p, Cyc const &c, int K)
{
	CycField const &f = *c.F;
	std::vector<Cyc> out(K, cyc(f, Rat(0)));
	if (lp_is_zero(p))
		return out;
	// powers of (c + t) and of (c + t)^{-1}
	auto mul_t = [&](std::vector<Cyc> const &a, std::vector<Cyc> const &b) {
		std::vector<Cyc> r(K, cyc(f, Rat(0)));
		for (int i = 0; i < K; ++i)
			for (int j = 0; j + i < K; ++j)
				r[i + j] = r[i + j] + a[i] * b[j];
		return r;
	};
	std::vector<Cyc> base(K, cyc(f, Rat(0)));
	base[0] = c;
	if (K > 1)
		base[1] = cyc(f, Rat(1));
	std::vector<Cyc> binv(K, cyc(f, Rat(0)));
	{ // (c + t)^{-1} = c^{-1} Σ (−t/c)^j
		Cyc ci = cyc_inv(c);
		Cyc pw = ci;
		for (int j = 0; j < K; ++j)
		{
			binv[j] = pw * (j % 2 ? -cyc(f, Rat(1)) : cyc(f, Rat(1)));
			pw = pw * ci;
		}
	}
	std::vector<Cyc> shift(K, cyc(f, Rat(0)));
	shift[0] = cyc(f, Rat(1));
	int e = p.lo;
	for (int i = 0; i < std::abs(e); ++i)
		shift = mul_t(shift, e > 0 ? base : binv);
	std::vector<Cyc> acc(K, cyc(f, Rat(0)));
	for (size_t i = p.c.size(); i-- > 0;)
	{
		acc = mul_t(acc, base);
		acc[0] = acc[0] + p.c[i];
	}
	return mul_t(acc, shift);
}

int cmat_rref(CMat &a, std::vector<int> *pivots)
{
	if (pivots)
		pivots->clear();
	int rows = (int)a.size();
	int cols = rows ? (int)a[0].size() : 0;
	int r = 0;
	for (int c = 0; c < cols && r < rows; ++c)
	{
		int p = -1;
		for (int i = r; i < rows; ++i)
			if (!a[i][c].is_zero())
			{
				p = i;
				break;
			}
		if (p < 0)
			continue;
		std::swap(a[r], a[p]);
		Cyc inv = cyc_inv(a[r][c]);
		for (int j = 0; j < cols; ++j)
			a[r][j] = a[r][j] * inv;
		for (int i = 0; i < rows; ++i)
		{
			if (i == r || a[i][c].is_zero())
				continue;
			Cyc f = a[i][c];
			for (int j = 0; j < cols; ++j)
				a[i][j] = a[i][j] - f * a[r][j];
		}
		if (pivots)
			pivots->push_back(c);
		++r;
	}
	return r;
}

int cmat_rank(CMat a) { return cmat_rref(a, nullptr); }

CMat cmat_kernel(CMat const &a0)
{
	CMat a = a0;
	std::vector<int> piv;
	int r = cmat_rref(a, &piv);
	int cols = a.empty() ? 0 : (int)a[0].size();
	if (cols == 0)
		return {};
	CycField const &f = *a0[0][0].F;
	std::vector<char> isp(cols, 0);
	for (int p : piv)
		isp[p] = 1;
	CMat k;
	for (int c = 0; c < cols; ++c)
	{
		if (isp[c])
			continue;
		std::vector<Cyc> v(cols, cyc(f, Rat(0)));
		v[c] = cyc(f, Rat(1));
		for (int i = 0; i < r; ++i)
			v[piv[i]] = -a[i][c];
		k.push_back(std::move(v));
	}
	return k;
}

// quotient model of M ⊗ 𝒜/t^K: relation span and free coordinates
struct Trunc
{
	CMat rref; // rows spanning the relation subspace, reduced
	std::vector<int> pivots;
	std::vector<int> free_cols;
	int dim() const { return (int)free_cols.size(); }
};

static Trunc truncate_module(LModule const &m, Cyc const &c, int K)
{
	CycField const &f = *m.F;
	int nrel = m.rel.empty() ? 0 : (int)m.rel[0].size();
	int amb = m.ambient * K;
	CMat rel;
	for (int j = 0; j < nrel; ++j)
	{
		// the relation column and its t-shifts span its image mod t^K
		std::vector<std::vector<Cyc>> col(m.ambient);
		for (int i = 0; i < m.ambient; ++i)
			col[i] = lp_expand(m.rel[i][j], c, K);
		for (int s = 0; s < K; ++s)
		{
			std::vector<Cyc> v(amb, cyc(f, Rat(0)));
			for (int i = 0; i < m.ambient; ++i)
				for (int d = 0; d + s < K; ++d)
					v[i * K + d + s] = col[i][d];
			rel.push_back(std::move(v));
		}
	}
	Trunc t;
	if (!rel.empty())
	{
		int r = cmat_rref(rel, &t.pivots);
		rel.resize(r);
	}
	t.rref = std::move(rel);
	std::vector<char> isp(amb, 0);
	for (int p : t.pivots)
		isp[p] = 1;
	for (int x = 0; x < amb; ++x)
		if (!isp[x])
			t.free_cols.push_back(x);
	return t;
}

static std::vector<Cyc> trunc_project(Trunc const &t, std::vector<Cyc> v, CycField const &f)
{
	for (size_t i = 0; i < t.rref.size(); ++i)
	{
		Cyc cf = v[t.pivots[i]];
		if (cf.is_zero())
			continue;
		for (size_t j = 0; j < v.size(); ++j)
			v[j] = v[j] - cf * t.rref[i][j];
	}
	std::vector<Cyc> q(t.free_cols.size(), cyc(f, Rat(0)));
	for (size_t j = 0; j < t.free_cols.size(); ++j)
		q[j] = v[t.free_cols[j]];
	return q;
}

std::pair<int, int> tor_truncated(LModule const &m, Cyc const &c, int max_power)
{
	CycField const &f = *m.F;
	// Tor_0 = dim coker at K = 1
	Trunc t1 = truncate_module(m, c, 1);
	int tor0 = t1.dim();
	// Tor_1 = stabilized dim of image(ker(t | M_{K+1}) → ker(t | M_K))
	auto image_dim = [&](int K) {
		Trunc big = truncate_module(m, c, K + 1);
		Trunc sml = truncate_module(m, c, K);
		int ambB = m.ambient * (K + 1);
		// multiplication-by-t on the big quotient, in its free basis
		CMat mat(big.dim(), std::vector<Cyc>(big.dim(), cyc(f, Rat(0))));
		for (int j = 0; j < big.dim(); ++j)
		{
			std::vector<Cyc> v(ambB, cyc(f, Rat(0)));
			int fc = big.free_cols[j];
			int i = fc / (K + 1), d = fc % (K + 1);
			if (d + 1 < K + 1)
				v[i * (K + 1) + d + 1] = cyc(f, Rat(1));
			auto q = trunc_project(big, v, f);
			for (int r = 0; r < big.dim(); ++r)
				mat[r][j] = q[r];
		}
		CMat ker = big.dim() ? cmat_kernel(mat) : CMat{};
		// push kernel vectors through M_{K+1} → M_K and measure the image
		CMat img;
		for (auto const &kv : ker)
		{
			std::vector<Cyc> v(m.ambient * K, cyc(f, Rat(0)));
			for (int j = 0; j < big.dim(); ++j)
			{
				if (kv[j].is_zero())
					continue;
				int fc = big.free_cols[j];
				int i = fc / (K + 1), d = fc % (K + 1);
				if (d < K)
					v[i * K + d] = v[i * K + d] + kv[j];
			}
			img.push_back(trunc_project(sml, v, f));
		}
		return img.empty() ? 0 : cmat_rank(img);
	};
	// free rank from the generic rank of rel: bad specializations are roots of
	// a nonzero maximal minor, of u-degree ≤ min(m,n)·maxspan, so sampling
	// one more distinct point than that hits a generic one
	int nrel = m.rel.empty() ? 0 : (int)m.rel[0].size();
	int grank = 0;
	if (nrel > 0)
	{
		int maxspan = 0;
		for (auto const &row : m.rel)
			for (auto const &e : row)
				maxspan = std::max(maxspan, lp_span(e));
		int bound = std::min(m.ambient, nrel) * maxspan + 1;
		for (int s = 0; s < bound && grank < std::min(m.ambient, nrel); ++s)
		{
			Cyc pt = cyc(f, Rat(s + 2));
			CMat ev(m.ambient, std::vector<Cyc>(nrel, cyc(f, Rat(0))));
			for (int i = 0; i < m.ambient; ++i)
				for (int j = 0; j < nrel; ++j)
					ev[i][j] = lp_eval(m.rel[i][j], pt);
			grank = std::max(grank, cmat_rank(ev));
		}
	}
	int tor1 = tor0 - (m.ambient - grank);
	// certificate: the (monotone) image dims must reach the predicted value
	for (int K = 1; K <= max_power; ++K)
		if (image_dim(K) == tor1)
			return {tor0, tor1};
	throw std::runtime_error("tor_truncated: no stabilization within the power bound");
}

} // namespace asf
