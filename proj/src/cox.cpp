#include "asf/cox.hpp"
#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace asf {

CoxRing make_cox(Fan const &fan, int variant)
{
	CoxRing a;
	a.fan = &fan;
	a.variant = variant;
	for (int i = 0; i < fan.g->rank; ++i)
	{
		QVec e = qvec_zero(fan.g->rank);
		e[i] = 1;
		a.principal.push_back(to_z_exact(divisor_of_cocharacter(fan, e).n));
	}
	return a;
}

bool same_class(CoxRing const &a, TorusDivisor const &d1, TorusDivisor const &d2)
{
	QVec diffq = qvec_sub(d1.n, d2.n);
	for (auto &x : diffq)
		if (denominator(x) != 1)
			return false;
	return integer_coords(a.principal, to_z_exact(diffq)).has_value();
}

GradedPieceBasis graded_piece(CoxRing const &a, TorusDivisor const &d, bool mod_s)
{
	Fan const &fan = *a.fan;
	if (!mod_s && !fan.s_lattice.empty())
		throw std::runtime_error("graded_piece: infinite basis (X_*(S) ≠ 0 without mod-S)");
	GradedPieceBasis out;
	out.deg = d;
	out.mod_s = mod_s;
	out.basis = gamma_basis(fan, d);
	if (a.variant != 0 && !fan.s_lattice.empty())
		for (auto &lp : out.basis) // alternate non-canonical section
			for (size_t i = 0; i < lp.lift.size(); ++i)
				lp.lift[i] += fan.s_lattice[0][i];
	return out;
}

Int Cohomology::euler() const
{
	Int e = 0;
	int sign = 1;
	for (auto const &x : h)
	{
		e += sign * x;
		sign = -sign;
	}
	return e;
}

// per-weight Čech complex of the cover by maximal-cone charts
static std::vector<Int> weight_cohomology(Fan const &fan, QVec const &bound, QVec const &lam)
{
	int nc = (int)fan.maximal.size();
	// chart set membership is upward closed in the subset order
	std::vector<char> present(size_t(1) << nc, 0);
	for (int mask = 1; mask < (1 << nc); ++mask)
	{
		bool ok = true;
		for (size_t r = 0; r < fan.rays.size() && ok; ++r)
		{
			bool in_all = true;
			for (int c = 0; c < nc && in_all; ++c)
				if (mask & (1 << c))
				{
					auto const &cr = fan.cones[fan.maximal[c]].rays;
					if (std::find(cr.begin(), cr.end(), (int)r) == cr.end())
						in_all = false;
				}
			if (in_all && fan.eval_ray((int)r, lam) + bound[r] < 0)
				ok = false;
		}
		present[mask] = ok;
	}
	// cochain groups per simplex dimension
	std::vector<std::vector<int>> level(nc);
	std::vector<int> pos(size_t(1) << nc, -1);
	for (int mask = 1; mask < (1 << nc); ++mask)
		if (present[mask])
		{
			int k = __builtin_popcount(mask) - 1;
			pos[mask] = (int)level[k].size();
			level[k].push_back(mask);
		}
	std::vector<Int> h(nc, Int(0));
	std::vector<int> rank_d(nc, 0);
	for (int k = 0; k + 1 < nc; ++k)
	{
		if (level[k].empty() || level[k + 1].empty())
		{
			rank_d[k] = 0;
			continue;
		}
		QMat d(level[k].size(), qvec_zero(level[k + 1].size()));
		for (size_t row = 0; row < level[k].size(); ++row)
		{
			int mask = level[k][row];
			for (int c = 0; c < nc; ++c)
			{
				if (mask & (1 << c))
					continue;
				int up = mask | (1 << c);
				if (pos[up] < 0)
					continue; // upward closure makes this unreachable
				int sgn = __builtin_popcount(mask & ((1 << c) - 1)) % 2 ? -1 : 1;
				d[row][pos[up]] = sgn;
			}
		}
		rank_d[k] = qrank(d);
	}
	for (int k = 0; k < nc; ++k)
	{
		Int dim = (Int)level[k].size();
		h[k] = dim - rank_d[k] - (k > 0 ? rank_d[k - 1] : 0);
	}
	return h;
}

// candidate weight box: arrangement vertices of {ϖ_σ(λ) = −n_σ} in Λ
// coordinates, padded; the outer shell is asserted cohomologically trivial
static void weight_box(Fan const &fan, QVec const &bound, std::vector<Int> &lo,
                       std::vector<Int> &hi)
{
	int k = (int)fan.lambda_basis.size();
	lo.assign(k, Int(0));
	hi.assign(k, Int(0));
	bool first = true;
	std::vector<int> idx(k);
	auto consider = [&](QVec const &c) {
		for (int j = 0; j < k; ++j)
		{
			Int fl = numerator(c[j]) / denominator(c[j]) - 1;
			Int ce = fl + 2;
			if (first)
			{
				lo[j] = fl;
				hi[j] = ce;
			}
			else
			{
				lo[j] = std::min(lo[j], fl);
				hi[j] = std::max(hi[j], ce);
			}
		}
		first = false;
	};
	// all size-k ray subsets with independent generators
	int nr = (int)fan.rays.size();
	std::vector<int> sel(k);
	std::function<void(int, int)> rec = [&](int start, int depth) {
		if (depth == k)
		{
			QMat m(k, qvec_zero(k));
			QVec rhs(k);
			for (int i = 0; i < k; ++i)
			{
				for (int j = 0; j < k; ++j)
					m[i][j] = qdot(to_q(fan.rays[sel[i]].gen), fan.lambda_basis[j]);
				rhs[i] = -bound[sel[i]];
			}
			if (auto c = solve(m, rhs))
				consider(*c);
			return;
		}
		for (int i = start; i < nr; ++i)
		{
			sel[depth] = i;
			rec(i + 1, depth + 1);
		}
	};
	if (k > 0)
		rec(0, 0);
	if (first)
		consider(qvec_zero(k));
	for (int j = 0; j < k; ++j)
	{
		lo[j] -= 2;
		hi[j] += 2;
	}
}

Cohomology sheaf_cohomology(CoxRing const &a, TorusDivisor const &d)
{
	Fan const &fan = *a.fan;
	if (!fan.s_lattice.empty())
		throw std::runtime_error("sheaf_cohomology: unbounded weights (X_*(S) ≠ 0)");
	int nc = (int)fan.maximal.size();
	Cohomology out;
	out.h.assign(nc, Int(0));
	int k = (int)fan.lambda_basis.size();
	if (k == 0)
	{
		auto h = weight_cohomology(fan, d.n, qvec_zero(fan.g->rank));
		out.h = h;
		return out;
	}
	std::vector<Int> lo, hi;
	weight_box(fan, d.n, lo, hi);
	std::vector<Int> idx = lo;
	while (true)
	{
		QVec lam = qvec_zero(fan.g->rank);
		for (int j = 0; j < k; ++j)
			lam = qvec_add(lam, qvec_scale(Rat(idx[j]), fan.lambda_basis[j]));
		auto h = weight_cohomology(fan, d.n, lam);
		bool shell = false;
		for (int j = 0; j < k; ++j)
			if (idx[j] == lo[j] || idx[j] == hi[j])
				shell = true;
		for (int i = 0; i < nc; ++i)
		{
			if (shell && h[i] != 0)
				throw std::runtime_error("sheaf_cohomology: weight box too small");
			out.h[i] += h[i];
		}
		int j = 0;
		while (j < k)
		{
			idx[j] += 1;
			if (idx[j] <= hi[j])
				break;
			idx[j] = lo[j];
			++j;
		}
		if (j == k)
			break;
	}
	return out;
}

GradedModule module_from_json(CoxRing const &a, std::string const &text)
{
	Fan const &fan = *a.fan;
	auto j = nlohmann::json::parse(text);
	GradedModule m;
	auto read_divisor = [&](nlohmann::json const &obj) {
		TorusDivisor d = zero_divisor(fan);
		for (auto const &[key, val] : obj.items())
		{
			int r = fan.ray_index(key);
			if (r < 0)
				throw std::runtime_error("module_from_json: unknown ray " + key);
			d.n[r] = Rat(val.get<long long>());
		}
		return d;
	};
	for (auto const &g : j.at("generators"))
		m.gens.push_back(read_divisor(g.at("degree")));
	for (auto const &r : j.at("relations"))
	{
		m.rels.push_back(read_divisor(r.at("degree")));
		std::vector<std::vector<ModuleTerm>> row;
		for (auto const &cell : r.at("entries"))
		{
			std::vector<ModuleTerm> terms;
			for (auto const &t : cell)
			{
				ModuleTerm mt;
				mt.coeff = Rat(t.at(0).get<long long>());
				for (auto const &x : t.at(1))
					mt.lambda.push_back(Int(x.get<long long>()));
				terms.push_back(std::move(mt));
			}
			row.push_back(std::move(terms));
		}
		if (row.size() != m.gens.size())
			throw std::runtime_error("module_from_json: ragged relation row");
		m.entry.push_back(std::move(row));
	}
	return m;
}

ModuleCohomology module_sheaf_cohomology(CoxRing const &a, GradedModule const &m,
                                         TorusDivisor const &d)
{
	Fan const &fan = *a.fan;
	if (!fan.s_lattice.empty())
		throw std::runtime_error("module_sheaf_cohomology: X_*(S) ≠ 0 unsupported here");
	ModuleCohomology out;
	int ng = (int)m.gens.size(), nr = (int)m.rels.size();

	// graded piece L[D] = coker of the relation matrix on monomial bases
	std::vector<std::vector<LatticePoint>> f1(ng), f2(nr);
	std::map<std::pair<int, ZVec>, int> f1_index;
	int f1_dim = 0, f2_dim = 0;
	for (int i = 0; i < ng; ++i)
	{
		f1[i] = gamma_basis(fan, divisor_add(d, divisor_neg(m.gens[i])));
		for (auto const &lp : f1[i])
			f1_index[{i, lp.lift}] = f1_dim++;
	}
	for (int jr = 0; jr < nr; ++jr)
	{
		f2[jr] = gamma_basis(fan, divisor_add(d, divisor_neg(m.rels[jr])));
		f2_dim += (int)f2[jr].size();
	}
	QMat rel(f2_dim, qvec_zero(f1_dim));
	int col = 0;
	for (int jr = 0; jr < nr; ++jr)
		for (auto const &mu : f2[jr])
		{
			for (int i = 0; i < ng; ++i)
				for (auto const &t : m.entry[jr][i])
				{
					ZVec tgt = mu.lift;
					for (size_t x = 0; x < tgt.size(); ++x)
						tgt[x] += t.lambda[x];
					auto it = f1_index.find({i, tgt});
					if (it == f1_index.end())
						throw std::runtime_error("module_sheaf_cohomology: target monomial "
						                         "escapes the graded piece");
					rel[col][it->second] += t.coeff;
				}
			++col;
		}
	out.piece_dim = Int(f1_dim - qrank(rel));

	// injectivity certificate for the free cover via random specialization
	std::mt19937 rng(987654);
	std::uniform_int_distribution<int> pick(1, 10007);
	bool injective = false;
	for (int attempt = 0; attempt < 3 && !injective; ++attempt)
	{
		QVec yval(fan.rays.size());
		for (auto &v : yval)
			v = Rat(pick(rng));
		QMat spec(nr, qvec_zero(ng));
		bool ok = true;
		for (int jr = 0; jr < nr && ok; ++jr)
			for (int i = 0; i < ng && ok; ++i)
				for (auto const &t : m.entry[jr][i])
				{
					// exponent of y^{λ + R_j − G_i} per ray
					QVec expo = qvec_add(divisor_of_cocharacter(fan, to_q(t.lambda)).n,
					                     qvec_sub(m.rels[jr].n, m.gens[i].n));
					Rat mono = 1;
					for (size_t r = 0; r < expo.size(); ++r)
					{
						if (denominator(expo[r]) != 1 || expo[r] < 0)
						{
							ok = false;
							break;
						}
						for (Int e = 0; e < numerator(expo[r]); ++e)
							mono *= yval[r];
					}
					if (ok)
						spec[jr][i] += t.coeff * mono;
				}
		if (ok && qrank(spec) == nr)
			injective = true;
	}
	out.injective_cover = injective;

	// sheaf cohomology of the free terms
	int nc = (int)fan.maximal.size();
	std::vector<Int> h1(nc, Int(0)), h2(nc, Int(0));
	for (int i = 0; i < ng; ++i)
	{
		auto c = sheaf_cohomology(a, divisor_add(d, divisor_neg(m.gens[i])));
		for (int x = 0; x < nc; ++x)
			h1[x] += c.h[x];
	}
	for (int jr = 0; jr < nr; ++jr)
	{
		auto c = sheaf_cohomology(a, divisor_add(d, divisor_neg(m.rels[jr])));
		for (int x = 0; x < nc; ++x)
			h2[x] += c.h[x];
	}
	if (injective && (nc < 2 || h2[1] == 0))
		out.h0 = h1[0] - h2[0];
	out.vanishing.assign(nc, false);
	for (int i = 1; i < nc; ++i)
		out.vanishing[i] = injective && h1[i] == 0 && (i + 1 >= nc || h2[i + 1] == 0);
	return out;
}

} // namespace asf
