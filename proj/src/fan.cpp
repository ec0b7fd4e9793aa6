#include "asf/fan.hpp"
#include <algorithm>
#include <map>
#include <stdexcept>

namespace asf {

static Int rat_floor(Rat const &x)
{
	Int q = numerator(x) / denominator(x);
	if (numerator(x) % denominator(x) < 0)
		q -= 1;
	return q;
}

static Int rat_ceil(Rat const &x) { return -rat_floor(-x); }

int Fan::ray_index(std::string const &id_) const
{
	for (size_t i = 0; i < rays.size(); ++i)
		if (rays[i].id == id_)
			return (int)i;
	return -1;
}

Rat Fan::eval_ray(int ray, QVec const &lam) const
{
	return qdot(to_q(rays[ray].gen), lam);
}

Fan build_fan(RootDatum const &datum, LeviSubgroup const &M)
{
	Fan f;
	f.g = &datum;
	f.m = M;
	f.dim = (int)M.a_MG.size();
	auto pars = enumerate_parabolics(M);

	for (auto const &q : pars)
	{
		LeviSubgroup mq = make_levi(datum, q.levi_roots);
		if ((int)mq.a_MG.size() != 1)
			continue; // rays come from maximal proper Levis
		// the line (a_{M_Q}^G)^*, oriented nonnegatively on Φ^{N_Q}
		if (mq.dual_MG.size() != 1)
			throw std::runtime_error("build_fan: ray dual space not a line");
		QVec dir = mq.dual_MG[0];
		Rat sign = 0;
		for (int i : q.nilrad)
		{
			sign = qdot(dir, to_q(datum.coroots[i]));
			if (sign != 0)
				break;
		}
		if (sign == 0)
			throw std::runtime_error("build_fan: cannot orient ray");
		if (sign < 0)
			dir = qvec_scale(Rat(-1), dir);
		Ray r;
		r.par = q;
		r.gen = primitive(dir);
		std::string id = "N";
		for (size_t k = 0; k < q.nilrad.size(); ++k)
			id += (k ? "." : "") + std::to_string(q.nilrad[k]);
		r.id = id;
		f.rays.push_back(std::move(r));
	}

	for (auto const &p : pars)
	{
		FanCone c;
		c.par = p;
		for (size_t i = 0; i < f.rays.size(); ++i)
			if (f.rays[i].par.contains(p))
				c.rays.push_back((int)i);
		if (p.levi_roots == M.levi_roots)
		{
			// maximal cones are simplicial with ray generators a basis
			if ((int)c.rays.size() != f.dim)
				throw std::runtime_error("build_fan: maximal cone not simplicial");
			QMat gens;
			for (int i : c.rays)
				gens.push_back(to_q(f.rays[i].gen));
			if (qrank(gens) != f.dim)
				throw std::runtime_error("build_fan: dependent ray generators");
			f.maximal.push_back((int)f.cones.size());
		}
		f.cones.push_back(std::move(c));
	}

	// X_*(S): integer kernel of the ray evaluations
	if (f.rays.empty())
	{
		f.s_lattice.assign(datum.rank, ZVec(datum.rank, Int(0)));
		for (int i = 0; i < datum.rank; ++i)
			f.s_lattice[i][i] = 1;
	}
	else
	{
		ZMat rows;
		for (auto const &r : f.rays)
			rows.push_back(r.gen);
		f.s_lattice = integer_kernel(rows);
	}

	// Λ = p_M^G(X_*(T)) with tracked preimages
	{
		QMat img;
		for (int i = 0; i < datum.rank; ++i)
		{
			QVec e = qvec_zero(datum.rank);
			e[i] = 1;
			img.push_back(qmat_apply(M.proj_MG, e));
		}
		Int den = 1;
		for (auto &row : img)
			for (auto &x : row)
				den = lcm(den, denominator(x));
		ZMat zimg(datum.rank, ZVec(datum.rank, Int(0)));
		for (int i = 0; i < datum.rank; ++i)
			for (int j = 0; j < datum.rank; ++j)
				zimg[i][j] = numerator(img[i][j]) * (den / denominator(img[i][j]));
		ZMat u;
		ZMat h = hnf_rows(zimg, &u);
		for (size_t i = 0; i < h.size(); ++i)
		{
			bool zero = true;
			for (auto &x : h[i])
				if (x != 0)
					zero = false;
			if (zero)
				continue;
			QVec b(datum.rank);
			for (int j = 0; j < datum.rank; ++j)
				b[j] = Rat(h[i][j], den);
			f.lambda_basis.push_back(b);
			f.lambda_preimage.push_back(u[i]);
		}
	}
	return f;
}

TorusDivisor zero_divisor(Fan const &fan) { return TorusDivisor{qvec_zero(fan.rays.size())}; }

TorusDivisor divisor_add(TorusDivisor const &a, TorusDivisor const &b)
{
	return TorusDivisor{qvec_add(a.n, b.n)};
}

TorusDivisor divisor_neg(TorusDivisor const &a) { return TorusDivisor{qvec_scale(Rat(-1), a.n)}; }

bool divisor_is_integral(TorusDivisor const &d)
{
	for (auto &x : d.n)
		if (denominator(x) != 1)
			return false;
	return true;
}

bool divisor_leq(TorusDivisor const &a, TorusDivisor const &b)
{
	for (size_t i = 0; i < a.n.size(); ++i)
		if (a.n[i] > b.n[i])
			return false;
	return true;
}

bool divisor_tau_stable(Fan const &fan, TorusDivisor const &d)
{
	// τ permutes rays via the X^*-action on generators
	QMat frob(fan.g->rank, qvec_zero(fan.g->rank));
	for (int a = 0; a < fan.g->rank; ++a)
		for (int b = 0; b < fan.g->rank; ++b)
			frob[a][b] = Rat(fan.g->frob[a][b]);
	QMat on_star = qmat_transpose(qmat_inverse(frob));
	for (size_t i = 0; i < fan.rays.size(); ++i)
	{
		ZVec img = to_z_exact(qmat_apply(on_star, to_q(fan.rays[i].gen)));
		bool found = false;
		for (size_t j = 0; j < fan.rays.size(); ++j)
			if (fan.rays[j].gen == img)
			{
				found = true;
				if (d.n[i] != d.n[j])
					return false;
			}
		if (!found)
			return false;
	}
	return true;
}

TorusDivisor divisor_of_cocharacter(Fan const &fan, QVec const &lam)
{
	TorusDivisor d = zero_divisor(fan);
	for (size_t i = 0; i < fan.rays.size(); ++i)
		d.n[i] = fan.eval_ray((int)i, lam);
	return d;
}

QMat cone_dual_basis(Fan const &fan, int max_cone)
{
	FanCone const &c = fan.cones[max_cone];
	int k = (int)c.rays.size();
	QMat const &basis = fan.m.a_MG; // rows
	// v_i = Σ_j x_ij b_j with ϖ_{σ_l}(v_i) = δ_{il}
	QMat sys(k, qvec_zero(k));
	for (int l = 0; l < k; ++l)
		for (int j = 0; j < k; ++j)
			sys[l][j] = qdot(to_q(fan.rays[c.rays[l]].gen), basis[j]);
	QMat inv = qmat_inverse(sys);
	QMat out;
	for (int i = 0; i < k; ++i)
	{
		QVec v = qvec_zero(fan.g->rank);
		for (int j = 0; j < k; ++j)
			v = qvec_add(v, qvec_scale(inv[j][i], basis[j]));
		out.push_back(std::move(v));
	}
	return out;
}

// adjacent maximal-cone pairs: (index into fan.maximal) × 2 plus the
// non-shared ray position within the first cone
struct AdjacentPair
{
	int p, q;
	int extra_ray_pos; // position in cones[maximal[p]].rays not shared with q
};

static std::vector<AdjacentPair> adjacent_pairs(Fan const &fan)
{
	std::vector<AdjacentPair> out;
	for (size_t a = 0; a < fan.maximal.size(); ++a)
		for (size_t b = 0; b < fan.maximal.size(); ++b)
		{
			if (a == b)
				continue;
			auto const &ra = fan.cones[fan.maximal[a]].rays;
			auto const &rb = fan.cones[fan.maximal[b]].rays;
			std::vector<int> extra;
			for (size_t i = 0; i < ra.size(); ++i)
				if (std::find(rb.begin(), rb.end(), ra[i]) == rb.end())
					extra.push_back((int)i);
			if (extra.size() == 1)
				out.push_back({(int)a, (int)b, extra[0]});
		}
	return out;
}

bool is_orthogonal_family(Fan const &fan, OrthogonalFamily const &fam)
{
	if (fam.points.size() != fan.maximal.size())
		return false;
	for (auto const &p : fam.points)
		if (!fan.m.a_MG.empty() ? !in_row_span(fan.m.a_MG, p) : !qvec_is_zero(p))
			return false;
	for (auto const &ap : adjacent_pairs(fan))
	{
		QVec diff = qvec_sub(fam.points[ap.p], fam.points[ap.q]);
		QMat dual = cone_dual_basis(fan, fan.maximal[ap.p]);
		QVec alpha_v = dual[ap.extra_ray_pos];
		// diff must be a multiple of alpha_v
		QMat span{alpha_v};
		if (!qvec_is_zero(diff) && !in_row_span(span, diff))
			return false;
	}
	return true;
}

static Rat wall_scalar(Fan const &fan, OrthogonalFamily const &fam, AdjacentPair const &ap)
{
	QVec diff = qvec_sub(fam.points[ap.p], fam.points[ap.q]);
	QMat dual = cone_dual_basis(fan, fan.maximal[ap.p]);
	QVec alpha_v = dual[ap.extra_ray_pos];
	for (size_t i = 0; i < alpha_v.size(); ++i)
		if (alpha_v[i] != 0)
			return diff[i] / alpha_v[i];
	throw std::runtime_error("wall_scalar: zero coroot direction");
}

bool family_positive(Fan const &fan, OrthogonalFamily const &fam)
{
	for (auto const &ap : adjacent_pairs(fan))
		if (wall_scalar(fan, fam, ap) < 0)
			return false;
	return true;
}

TorusDivisor family_to_divisor(Fan const &fan, OrthogonalFamily const &fam)
{
	if (!is_orthogonal_family(fan, fam))
		throw std::runtime_error("family_to_divisor: family is not (G,M)-orthogonal");
	TorusDivisor d = zero_divisor(fan);
	for (size_t s = 0; s < fan.rays.size(); ++s)
	{
		bool set = false;
		for (size_t mi = 0; mi < fan.maximal.size(); ++mi)
		{
			auto const &cr = fan.cones[fan.maximal[mi]].rays;
			if (std::find(cr.begin(), cr.end(), (int)s) == cr.end())
				continue;
			Rat v = fan.eval_ray((int)s, fam.points[mi]);
			if (!set)
			{
				d.n[s] = v;
				set = true;
			}
			else if (d.n[s] != v)
				throw std::runtime_error("family_to_divisor: ill-defined coefficient");
		}
		if (!set)
			throw std::runtime_error("family_to_divisor: ray in no maximal cone");
	}
	return d;
}

OrthogonalFamily divisor_to_family(Fan const &fan, TorusDivisor const &d)
{
	OrthogonalFamily fam;
	for (int mi : fan.maximal)
	{
		QMat dual = cone_dual_basis(fan, mi);
		QVec mu = qvec_zero(fan.g->rank);
		auto const &cr = fan.cones[mi].rays;
		for (size_t i = 0; i < cr.size(); ++i)
			mu = qvec_add(mu, qvec_scale(d.n[cr[i]], dual[i]));
		fam.points.push_back(std::move(mu));
	}
	return fam;
}

OrthogonalFamily dominant_family(Fan const &fan, QVec const &lam)
{
	OrthogonalFamily fam;
	for (int mi : fan.maximal)
	{
		QVec mu = dominant_translate(*fan.g, fan.cones[mi].par, lam);
		fam.points.push_back(qmat_apply(fan.m.proj_MG, mu));
	}
	return fam;
}

Regularity regularity(Fan const &fan, OrthogonalFamily const &fam)
{
	Regularity r;
	bool d_set = false, delta_set = false;
	r.d = 0;
	r.delta = 0;
	for (size_t mi = 0; mi < fan.maximal.size(); ++mi)
	{
		auto const &par = fan.cones[fan.maximal[mi]].par;
		for (int ai : delta_of_parabolic(*fan.g, par))
		{
			Rat v = qdot(to_q(fan.g->roots[ai]), fam.points[mi]);
			if (!d_set || v < r.d)
			{
				r.d = v;
				d_set = true;
			}
		}
	}
	for (auto const &ap : adjacent_pairs(fan))
	{
		auto const &pp = fan.cones[fan.maximal[ap.p]].par;
		auto const &pq = fan.cones[fan.maximal[ap.q]].par;
		auto dp = delta_of_parabolic(*fan.g, pp);
		auto dq = delta_of_parabolic(*fan.g, pq);
		for (int ai : dp)
		{
			int nai = fan.g->neg[ai];
			if (std::find(dq.begin(), dq.end(), nai) == dq.end())
				continue;
			Rat v = qdot(to_q(fan.g->roots[ai]), qvec_sub(fam.points[ap.p], fam.points[ap.q]));
			if (!delta_set || v < r.delta)
			{
				r.delta = v;
				delta_set = true;
			}
		}
	}
	r.positive = family_positive(fan, fam);
	r.very_positive = d_set ? r.d >= 0 : true;
	if (r.very_positive && delta_set && d_set && r.delta < 2 * r.d)
		throw std::runtime_error("regularity: δ < 2d with d ≥ 0");
	return r;
}

Polytope polytope(Fan const &fan, TorusDivisor const &d)
{
	Polytope p;
	p.fan = &fan;
	p.bound = d.n;
	auto fam = divisor_to_family(fan, d);
	p.vertices = fam.points;
	return p;
}

bool polytope_contains(Polytope const &p, QVec const &x)
{
	for (size_t i = 0; i < p.fan->rays.size(); ++i)
		if (p.fan->eval_ray((int)i, x) > p.bound[i])
			return false;
	return true;
}

bool hull_contains(Polytope const &p, QVec const &x)
{
	Fan const &fan = *p.fan;
	int k = fan.dim;
	// coordinates in the a_M^G basis
	auto coords = [&](QVec const &v) -> QVec {
		QMat a(fan.g->rank, qvec_zero(k));
		for (int j = 0; j < k; ++j)
			for (int i = 0; i < fan.g->rank; ++i)
				a[i][j] = fan.m.a_MG[j][i];
		auto c = solve(a, v);
		if (!c)
			throw std::runtime_error("hull_contains: point outside a_M^G");
		return *c;
	};
	if (k == 0)
		return qvec_is_zero(x);
	std::vector<QVec> vc;
	for (auto const &v : p.vertices)
		vc.push_back(coords(v));
	QVec xc = coords(x);
	if (k == 1)
	{
		Rat lo = vc[0][0], hi = vc[0][0];
		for (auto const &v : vc)
		{
			lo = std::min(lo, v[0]);
			hi = std::max(hi, v[0]);
		}
		return lo <= xc[0] && xc[0] <= hi;
	}
	if (k == 2)
	{
		// exact 2d convex hull membership: x is inside iff it is not strictly
		// on the positive side of every supporting line of some orientation
		auto cross = [](QVec const &o, QVec const &a, QVec const &b) {
			return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
		};
		// gift-wrap the hull
		std::vector<QVec> pts = vc;
		std::sort(pts.begin(), pts.end(), [](QVec const &a, QVec const &b) {
			return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
		});
		pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
		if (pts.size() == 1)
			return xc == pts[0];
		std::vector<QVec> hull;
		for (int pass = 0; pass < 2; ++pass)
		{
			size_t start = hull.size();
			for (auto const &q : pts)
			{
				while (hull.size() >= start + 2 &&
				       cross(hull[hull.size() - 2], hull[hull.size() - 1], q) <= 0)
					hull.pop_back();
				hull.push_back(q);
			}
			hull.pop_back();
			std::reverse(pts.begin(), pts.end());
		}
		if (hull.size() < 3)
		{
			// degenerate segment
			QVec a = hull[0], b = hull.size() > 1 ? hull[1] : hull[0];
			if (cross(a, b, xc) != 0)
				return false;
			Rat t0 = std::min(a[0], b[0]), t1 = std::max(a[0], b[0]);
			Rat s0 = std::min(a[1], b[1]), s1 = std::max(a[1], b[1]);
			return t0 <= xc[0] && xc[0] <= t1 && s0 <= xc[1] && xc[1] <= s1;
		}
		for (size_t i = 0; i < hull.size(); ++i)
			if (cross(hull[i], hull[(i + 1) % hull.size()], xc) < 0)
				return false;
		return true;
	}
	throw std::runtime_error("hull_contains: dim > 2 not supported");
}

std::vector<LatticePoint> lattice_points(Polytope const &p)
{
	Fan const &fan = *p.fan;
	int k = (int)fan.lambda_basis.size();
	std::vector<LatticePoint> out;
	if (k == 0)
	{
		QVec zero = qvec_zero(fan.g->rank);
		if (polytope_contains(p, zero))
			out.push_back({zero, ZVec(fan.g->rank, Int(0))});
		return out;
	}
	// vertex coordinates in the Λ basis give the bounding box
	QMat a(fan.g->rank, qvec_zero(k));
	for (int j = 0; j < k; ++j)
		for (int i = 0; i < fan.g->rank; ++i)
			a[i][j] = fan.lambda_basis[j][i];
	std::vector<Int> lo(k), hi(k);
	bool first = true;
	for (auto const &v : p.vertices)
	{
		auto c = solve(a, v);
		if (!c)
			throw std::runtime_error("lattice_points: vertex outside Λ⊗ℚ");
		for (int j = 0; j < k; ++j)
		{
			Int fl = rat_floor((*c)[j]), ce = rat_ceil((*c)[j]);
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
	}
	if (first)
		return out;
	std::vector<Int> idx = lo;
	while (true)
	{
		QVec x = qvec_zero(fan.g->rank);
		ZVec lift(fan.g->rank, Int(0));
		for (int j = 0; j < k; ++j)
		{
			x = qvec_add(x, qvec_scale(Rat(idx[j]), fan.lambda_basis[j]));
			for (int i = 0; i < fan.g->rank; ++i)
				lift[i] += idx[j] * fan.lambda_preimage[j][i];
		}
		if (polytope_contains(p, x))
			out.push_back({x, lift});
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

std::vector<LatticePoint> gamma_basis(Fan const &fan, TorusDivisor const &d)
{
	auto pts = lattice_points(polytope(fan, d));
	for (auto &lp : pts)
	{
		lp.point = qvec_scale(Rat(-1), lp.point);
		for (auto &x : lp.lift)
			x = -x;
	}
	std::sort(pts.begin(), pts.end(),
	          [](LatticePoint const &a, LatticePoint const &b) { return a.lift < b.lift; });
	return pts;
}

std::optional<std::pair<int, ZVec>> split_off_s(Fan const &fan,
                                                std::vector<LatticePoint> const &reps,
                                                ZVec const &mu)
{
	QVec pr = qmat_apply(fan.m.proj_MG, to_q(mu));
	for (size_t i = 0; i < reps.size(); ++i)
	{
		if (reps[i].point != pr)
			continue;
		ZVec diff(mu.size());
		for (size_t j = 0; j < mu.size(); ++j)
			diff[j] = mu[j] - reps[i].lift[j];
		auto c = integer_coords(fan.s_lattice, diff);
		if (!c)
			return std::nullopt;
		return std::make_pair((int)i, *c);
	}
	return std::nullopt;
}

} // namespace asf
