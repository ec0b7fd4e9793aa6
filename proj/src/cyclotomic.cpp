#include "asf/cyclotomic.hpp"
#include <sstream>
#include <stdexcept>

namespace asf {

using Poly = std::vector<Rat>; // little-endian coefficients

static void trim(Poly &p)
{
	while (!p.empty() && p.back() == 0)
		p.pop_back();
}

// quotient of exact division a / b (throws if not exact when required)
static Poly poly_divmod(Poly a, Poly const &b, Poly *rem)
{
	trim(a);
	Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
	while (a.size() >= b.size())
	{
		Rat c = a.back() / b.back();
		int shift = (int)(a.size() - b.size());
		q[shift] = c;
		for (size_t i = 0; i < b.size(); ++i)
			a[shift + i] -= c * b[i];
		trim(a);
	}
	if (rem)
		*rem = a;
	return q;
}

static Poly cyclotomic_poly(int n)
{
	// x^n − 1 divided by Φ_d for proper divisors d
	Poly p(n + 1, Rat(0));
	p[0] = -1;
	p[n] = 1;
	for (int d = 1; d < n; ++d)
		if (n % d == 0)
		{
			Poly rem;
			p = poly_divmod(p, cyclotomic_poly(d), &rem);
			if (!rem.empty())
				throw std::runtime_error("cyclotomic_poly: inexact division");
		}
	return p;
}

CycField make_cyc_field(int N)
{
	if (N < 1)
		throw std::runtime_error("make_cyc_field: N < 1");
	CycField f;
	f.N = N;
	f.modulus = cyclotomic_poly(N);
	f.deg = (int)f.modulus.size() - 1;
	return f;
}

bool Cyc::is_zero() const
{
	for (auto const &x : c)
		if (x != 0)
			return false;
	return true;
}

Cyc cyc(CycField const &f, Rat const &x)
{
	Cyc a;
	a.F = &f;
	a.c.assign(f.deg, Rat(0));
	a.c[0] = x;
	return a;
}

Cyc zeta(CycField const &f, int power)
{
	power %= f.N;
	if (power < 0)
		power += f.N;
	// reduce x^power mod Φ_N
	Poly p(power + 1, Rat(0));
	p[power] = 1;
	Poly rem;
	poly_divmod(p, f.modulus, &rem);
	Cyc a = cyc(f, Rat(0));
	for (size_t i = 0; i < rem.size(); ++i)
		a.c[i] = rem[i];
	return a;
}

Cyc operator+(Cyc const &a, Cyc const &b)
{
	Cyc r = a;
	for (int i = 0; i < a.F->deg; ++i)
		r.c[i] += b.c[i];
	return r;
}

Cyc operator-(Cyc const &a, Cyc const &b)
{
	Cyc r = a;
	for (int i = 0; i < a.F->deg; ++i)
		r.c[i] -= b.c[i];
	return r;
}

Cyc operator-(Cyc const &a)
{
	Cyc r = a;
	for (auto &x : r.c)
		x = -x;
	return r;
}

Cyc operator*(Cyc const &a, Cyc const &b)
{
	Poly p(2 * a.F->deg - 1, Rat(0));
	for (int i = 0; i < a.F->deg; ++i)
		for (int j = 0; j < a.F->deg; ++j)
			p[i + j] += a.c[i] * b.c[j];
	Poly rem;
	poly_divmod(p, a.F->modulus, &rem);
	Cyc r = cyc(*a.F, Rat(0));
	for (size_t i = 0; i < rem.size(); ++i)
		r.c[i] = rem[i];
	return r;
}

Cyc cyc_inv(Cyc const &a)
{
	if (a.is_zero())
		throw std::runtime_error("cyc_inv: division by zero");
	// extended Euclid in ℚ[x]: s·a + t·Φ = gcd (a unit)
	Poly r0 = a.F->modulus, r1(a.c.begin(), a.c.end());
	trim(r1);
	Poly s0 = {Rat(0)}, s1 = {Rat(1)}; // coefficients of a
	while (true)
	{
		Poly rem;
		Poly q = poly_divmod(r0, r1, &rem);
		trim(rem);
		if (rem.empty())
			break;
		// s2 = s0 − q·s1
		Poly s2 = s0;
		if (s2.size() < q.size() + s1.size())
			s2.resize(q.size() + s1.size() - 1, Rat(0));
		for (size_t i = 0; i < q.size(); ++i)
			for (size_t j = 0; j < s1.size(); ++j)
				s2[i + j] -= q[i] * s1[j];
		trim(s2);
		r0 = r1;
		r1 = rem;
		s0 = s1;
		s1 = s2;
	}
	if (r1.size() != 1)
		throw std::runtime_error("cyc_inv: element not invertible (Φ_N reducible factor?)");
	Cyc inv = cyc(*a.F, Rat(0));
	Poly rem;
	poly_divmod(s1, a.F->modulus, &rem);
	for (size_t i = 0; i < rem.size(); ++i)
		inv.c[i] = rem[i] / r1[0];
	return inv;
}

std::string to_string(Cyc const &a)
{
	std::ostringstream os;
	bool any = false;
	for (int i = 0; i < a.F->deg; ++i)
	{
		if (a.c[i] == 0)
			continue;
		if (any)
			os << " + ";
		os << to_string(a.c[i]);
		if (i > 0)
			os << "·ζ^" << i;
		any = true;
	}
	if (!any)
		os << "0";
	return os.str();
}

} // namespace asf
