#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace asf {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>; // row-major
using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;

inline QVec to_q(ZVec const &v)
{
	QVec r(v.size());
	for (size_t i = 0; i < v.size(); ++i)
		r[i] = Rat(v[i]);
	return r;
}

inline ZVec to_z_exact(QVec const &v)
{
	ZVec r(v.size());
	for (size_t i = 0; i < v.size(); ++i)
	{
		if (denominator(v[i]) != 1)
			throw std::runtime_error("to_z_exact: non-integer entry");
		r[i] = numerator(v[i]);
	}
	return r;
}

std::string to_string(Rat const &x);

} // namespace asf
