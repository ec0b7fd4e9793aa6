#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "asf/orbital.hpp"
#include "asf/sl2.hpp"

using namespace asf;

static TorusDivisor ray_divisor(Fan const &fan, int coord, int n_pos, int n_neg)
{
	TorusDivisor d;
	d.n.resize(fan.rays.size());
	for (size_t r = 0; r < fan.rays.size(); ++r)
		d.n[r] = fan.rays[r].gen[coord] > 0 ? Rat(n_pos) : Rat(n_neg);
	return d;
}

TEST_CASE("weights are lattice-point counts")
{
	RootDatum g = sl2_datum();
	Fan ft = build_fan(g, make_levi(g, {}));
	TorusDivisor zero = zero_divisor(ft);
	// D = D_B + 2 D_B̄, x = t_0: the window −2 ≤ l ≤ 1
	CHECK(weight(ft, ray_divisor(ft, 0, 1, 2), zero) == 4);
	// translation by λ in the Λ-lattice leaves the weight unchanged
	for (int l = -2; l <= 2; ++l)
	{
		TorusDivisor shifted = divisor_add(
		    ray_divisor(ft, 0, 1, 2), divisor_of_cocharacter(ft, {Rat(l)}));
		CHECK(weight(ft, shifted, divisor_of_cocharacter(ft, {Rat(l)})) == 4);
	}
	// M = G: no rays, v_D ≡ 1
	Fan fg = build_fan(g, make_levi(g, {0, 1}));
	CHECK(weight(fg, zero_divisor(fg), zero_divisor(fg)) == 1);
}

TEST_CASE("integer polynomial interpolation with witness")
{
	// 1 + 2q + 3q² through four points, fifth as witness
	auto p = [](Int q) { return 1 + 2 * q + 3 * q * q; };
	std::vector<std::pair<Int, Int>> pts;
	for (Int q : {2, 3, 5, 7, 11})
		pts.push_back({q, p(q)});
	CHECK(fit_int_polynomial(pts) == std::vector<Int>{1, 2, 3});
	pts.back().second += 1;
	CHECK_THROWS(fit_int_polynomial(pts));
}

TEST_CASE("transfer sign")
{
	RootDatum g = sl2_datum();
	ZMat id = {{Int(1)}}, minus = {{Int(-1)}};
	TorusPoint sm, s1;
	sm.value = {Rat(1, 2)};
	s1.value = {Rat(0)};
	for (int d = 1; d <= 3; ++d)
	{
		ValuationProfile prof = constant_profile(g, d);
		CHECK(transfer_sign(g, prof, id, sm) == 1);    // split: no symmetric orbit
		CHECK(transfer_sign(g, prof, minus, s1) == 1); // α^∨(s) = 1 excluded
		CHECK(transfer_sign(g, prof, minus, sm) == (d % 2 ? -1 : 1));
	}
}

TEST_CASE("dual-mode orbital integrals agree on the SL(2) torus grid")
{
	RootDatum g = sl2_datum();
	Fan fan = build_fan(g, make_levi(g, {}));
	for (int d = 1; d <= 2; ++d)
		for (int nb = 0; nb <= 3; ++nb)
			for (int nbb = 0; nb + nbb <= 3; ++nbb)
			{
				TorusDivisor D = ray_divisor(fan, 0, nb, nbb);
				OrbitalResult lef = orbital_integral_lefschetz(
				    fan, D, constant_profile(g, d), {g.positive[0]});
				std::vector<std::pair<Int, Int>> pts;
				for (int q : {5, 7, 11, 13})
				{
					Fq f = make_fq(q);
					Int cnt = orbital_integral_bruteforce(g, fan, {{d}},
					                                      D, f);
					CHECK(cnt == eval_poly(lef.poly, q));
					pts.push_back({q, cnt});
				}
				if (lef.poly.size() <= 4)
					CHECK(fit_int_polynomial(pts) == lef.poly);
			}
	// frozen example: d = 1, D = D_B + D_B̄ at q = 5 → 11
	Fq f5 = make_fq(5);
	CHECK(orbital_integral_bruteforce(g, fan, {{1}}, ray_divisor(fan, 0, 1, 1), f5) ==
	      11);
}

TEST_CASE("kappa orbital for SL(2), M = G")
{
	RootDatum g = sl2_datum();
	Fan fan = build_fan(g, make_levi(g, {0, 1}));
	TorusPoint km;
	km.value = {Rat(1, 2)};
	for (int d = 1; d <= 2; ++d)
	{
		OrbitalResult lef = orbital_integral_lefschetz(
		    fan, zero_divisor(fan), constant_profile(g, d), {g.positive[0]}, &km);
		std::vector<Int> expect(d + 1, Int(0));
		expect[d] = 1;
		CHECK(lef.poly == expect);
		// signed brute-force count over the h_B = 0 fundamental domain: all
		// arithmetic classes vanish there, so the κ-sum is the plain count
		Fq f = make_fq(5);
		CHECK(orbital_integral_bruteforce(g, fan, {{d}}, zero_divisor(fan), f) ==
		      eval_poly(lef.poly, 5));
	}
}

TEST_CASE("fundamental lemma: SL(2) tautological and endoscopic instances")
{
	RootDatum g = sl2_datum();
	// M = T: 𝓔 = {Φ^G}, the identity reads J = J
	Fan ft = build_fan(g, make_levi(g, {}));
	TorusPoint km;
	km.value = {Rat(1, 2)};
	{
		FlReport rep = fundamental_lemma_check(
		    g, ft, constant_profile(g, 1), km,
		    {ray_divisor(ft, 0, 1, 1), ray_divisor(ft, 0, 2, 1)});
		REQUIRE(rep.strata.systems.size() == 1);
		CHECK(rep.strata.systems[0].size() == g.roots.size());
		for (auto const &inst : rep.instances)
			CHECK(inst.equal);
	}
	// M = G, κ = −1: LHS = RHS = q^d
	Fan fg = build_fan(g, make_levi(g, {0, 1}));
	for (int d = 1; d <= 2; ++d)
	{
		FlReport rep = fundamental_lemma_check(g, fg, constant_profile(g, d), km,
		                                       {zero_divisor(fg)});
		REQUIRE(rep.strata.systems.size() == 1);
		CHECK(rep.strata.systems[0].empty());
		CHECK(rep.d_i == std::vector<int>{d});
		REQUIRE(rep.instances.size() == 1);
		std::vector<Int> qd(d + 1, Int(0));
		qd[d] = 1;
		CHECK(rep.instances[0].lhs == qd);
		CHECK(rep.instances[0].rhs == qd);
		CHECK(rep.instances[0].equal);
	}
}

TEST_CASE("fundamental lemma: SL(2)xSL(2), M = TxSL(2), kappa = (1,-1)")
{
	RootDatum g = sl2_datum();
	RootDatum gg = product_datum(g, g);
	int a1 = -1, a2 = -1;
	for (size_t i = 0; i < gg.coroots.size(); ++i)
	{
		if (gg.coroots[i] == ZVec{Int(1), Int(0)})
			a1 = (int)i;
		if (gg.coroots[i] == ZVec{Int(0), Int(1)})
			a2 = (int)i;
	}
	std::vector<int> lroots = {a2, gg.neg[a2]};
	std::sort(lroots.begin(), lroots.end());
	Fan fm = build_fan(gg, make_levi(gg, lroots));
	TorusPoint kappa;
	kappa.value = {Rat(0), Rat(1, 2)};
	ValuationProfile prof = constant_profile(gg, 1);

	std::vector<TorusDivisor> family;
	for (int m = 1; m <= 4; ++m)
	{
		TorusDivisor D;
		D.n.assign(fm.rays.size(), Rat(m));
		family.push_back(D);
	}
	FlReport rep = fundamental_lemma_check(gg, fm, prof, kappa, family);
	REQUIRE(rep.strata.systems.size() == 1);
	std::vector<int> pm1 = {a1, gg.neg[a1]};
	std::sort(pm1.begin(), pm1.end());
	CHECK(rep.strata.systems[0] == pm1);
	CHECK(rep.d_i == std::vector<int>{1}); // d_I = prof(α₂)

	Fq f5 = make_fq(5);
	for (int m = 1; m <= 4; ++m)
	{
		auto const &inst = rep.instances[m - 1];
		CHECK(inst.equal);
		// factorization: truncated SL(2) count times q^{d₂}
		std::vector<Int> sl2 = sl2_point_count({m, m, 1});
		std::vector<Int> expect(sl2.size() + 1, Int(0));
		for (size_t i = 0; i < sl2.size(); ++i)
			expect[i + 1] = sl2[i];
		CHECK(inst.lhs == expect);
		// brute-force witness at q = 5
		CHECK(eval_poly(inst.lhs, 5) ==
		      orbital_integral_bruteforce(gg, fm, {{1, 1}}, family[m - 1], f5));
	}
}
