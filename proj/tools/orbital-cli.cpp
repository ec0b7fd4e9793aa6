#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "asf/cox.hpp"
#include "asf/orbital.hpp"
#include "asf/sl2.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace asf;
using nlohmann::json;

namespace {

std::string slurp(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot read " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

json parse_spec(std::string const &spec)
{
	// inline JSON or a file path
	if (!spec.empty() && (spec[0] == '{' || spec[0] == '['))
		return json::parse(spec);
	return json::parse(slurp(spec));
}

RootDatum load_group(std::string const &path) { return root_datum_from_json(slurp(path)); }

std::vector<int> parse_levi(RootDatum const &g, std::string const &spec)
{
	if (spec == "T" || spec.empty())
		return {};
	std::vector<int> out;
	if (spec == "G")
	{
		for (size_t i = 0; i < g.roots.size(); ++i)
			out.push_back((int)i);
		return out;
	}
	// comma-separated simple-root positions generating the Levi
	QMat span;
	std::stringstream ss(spec);
	std::string tok;
	while (std::getline(ss, tok, ','))
		span.push_back(to_q(g.roots[g.simple.at(std::stoi(tok))]));
	rref(span);
	for (size_t i = 0; i < g.roots.size(); ++i)
		if (in_row_span(span, to_q(g.roots[i])))
			out.push_back((int)i);
	return out;
}

ValuationProfile parse_profile(RootDatum const &g, std::string const &spec)
{
	std::vector<int> vals;
	std::stringstream ss(spec);
	std::string tok;
	while (std::getline(ss, tok, ','))
		vals.push_back(std::stoi(tok));
	if (vals.size() == 1)
		return constant_profile(g, vals[0]);
	return profile_from_positive(g, vals);
}

TorusDivisor parse_divisor(Fan const &fan, json const &j)
{
	TorusDivisor d;
	d.n.assign(fan.rays.size(), Rat(0));
	for (auto const &[key, val] : j.items())
	{
		int r = fan.ray_index(key);
		if (r < 0)
			throw std::runtime_error("unknown ray id " + key);
		d.n[r] = Rat(val.get<long long>());
	}
	return d;
}

Rat parse_rat(std::string const &tok)
{
	auto slash = tok.find('/');
	if (slash == std::string::npos)
		return Rat(std::stoll(tok));
	return Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
}

TorusPoint parse_character(RootDatum const &g, std::string const &spec)
{
	TorusPoint s;
	std::stringstream ss(spec);
	std::string tok;
	while (std::getline(ss, tok, ','))
		s.value.push_back(parse_rat(tok));
	if ((int)s.value.size() != g.rank)
		throw std::runtime_error("character spec has wrong rank");
	return s;
}

json divisor_to_json(Fan const &fan, TorusDivisor const &d)
{
	json j = json::object();
	for (size_t r = 0; r < fan.rays.size(); ++r)
		j[fan.rays[r].id] = to_string(d.n[r]);
	return j;
}

void emit(json const &j, std::string const &out_path, bool csv,
          std::vector<std::pair<std::string, std::string>> const &csv_rows)
{
	if (csv)
	{
		for (auto const &[k, v] : csv_rows)
			std::cout << k << "," << v << "\n";
		return;
	}
	if (!out_path.empty())
	{
		std::ofstream out(out_path);
		out << j.dump(2) << "\n";
	}
	else
		std::cout << j.dump(2) << "\n";
}

std::vector<long long> to_ll(std::vector<Int> const &v)
{
	std::vector<long long> out;
	for (auto const &x : v)
		out.push_back(x.convert_to<long long>());
	return out;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact engine for truncated affine Springer fibers"};
	app.require_subcommand(1);

	std::string group, levi = "T", profile = "1", divisor, gamma, schar, kappa;
	std::string divisor_family, json_out;
	int qval = 5;
	bool csv = false;
	app.add_flag("--csv", csv, "CSV output");

	auto add_common = [&](CLI::App *c) {
		c->add_option("--group", group)->required();
		c->add_option("--levi", levi);
	};

	CLI::App *betti = app.add_subcommand("betti", "Betti numbers of a truncated fiber");
	add_common(betti);
	betti->add_option("--profile", profile);
	betti->add_option("--divisor", divisor)->required();
	betti->add_option("--json", json_out);

	CLI::App *toric = app.add_subcommand("toric-cohomology", "sheaf cohomology on Y_Sigma");
	add_common(toric);
	toric->add_option("--divisor", divisor)->required();

	CLI::App *enumc = app.add_subcommand("enumerate", "finite-field point count");
	add_common(enumc);
	enumc->add_option("--gamma", gamma)->required();
	enumc->add_option("--divisor", divisor)->required();
	enumc->add_option("--q", qval)->required();

	CLI::App *strc = app.add_subcommand("strata", "endoscopic strata");
	add_common(strc);
	strc->add_option("--s", schar)->required();

	CLI::App *flc = app.add_subcommand("fl-check", "weighted fundamental lemma instances");
	add_common(flc);
	flc->add_option("--profile", profile);
	flc->add_option("--kappa", kappa)->required();
	flc->add_option("--divisor-family", divisor_family)->required();

	CLI11_PARSE(app, argc, argv);

	try
	{
		RootDatum g = load_group(group);
		Fan fan = build_fan(g, make_levi(g, parse_levi(g, levi)));

		if (betti->parsed())
		{
			ValuationProfile prof = parse_profile(g, profile);
			TorusDivisor D = parse_divisor(fan, parse_spec(divisor));
			OrbitalResult res =
			    orbital_integral_lefschetz(fan, D, prof, g.positive);
			BettiTable bt;
			bt.b = res.poly;
			json j = json::parse(bt.to_json(res.assumptions));
			std::vector<std::pair<std::string, std::string>> rows;
			for (size_t i = 0; i < bt.b.size(); ++i)
				rows.push_back({std::to_string(2 * i), bt.b[i].str()});
			emit(j, json_out, csv, rows);
		}
		else if (toric->parsed())
		{
			CoxRing a = make_cox(fan);
			TorusDivisor D = parse_divisor(fan, parse_spec(divisor));
			Cohomology h = sheaf_cohomology(a, D);
			json j;
			j["h"] = to_ll(h.h);
			j["euler"] = h.euler().convert_to<long long>();
			j["assumptions"] = json::array();
			std::vector<std::pair<std::string, std::string>> rows;
			for (size_t i = 0; i < h.h.size(); ++i)
				rows.push_back({std::to_string(i), h.h[i].str()});
			emit(j, "", csv, rows);
		}
		else if (enumc->parsed())
		{
			TorusDivisor D = parse_divisor(fan, parse_spec(divisor));
			GammaData gd;
			{
				std::stringstream ss(gamma);
				std::string tok;
				while (std::getline(ss, tok, ','))
					gd.d.push_back(std::stoi(tok));
			}
			Fq f = make_fq(qval);
			FiberEnumeration e = enumerate_truncated_fiber(g, fan, gd, D, f);
			json j;
			j["q"] = qval;
			j["count"] = e.count.convert_to<long long>();
			j["per_cell"] = json::object();
			std::vector<std::pair<std::string, std::string>> rows;
			for (auto const &[cell, n] : e.per_cell)
			{
				j["per_cell"][cell] = n.convert_to<long long>();
				rows.push_back({cell, n.str()});
			}
			j["assumptions"] = {"split gamma", "large characteristic: val(2) = 0"};
			emit(j, "", csv, rows);
		}
		else if (strc->parsed())
		{
			TorusPoint s = parse_character(g, schar);
			EndoscopicStratum st = strata(g, fan, s, &g.frob);
			ValuationProfile prof = parse_profile(g, profile);
			json j;
			j["n"] = st.systems.size();
			j["systems"] = st.systems;
			j["tau_action"] = st.tau;
			j["d_I"] = json::object();
			std::vector<std::pair<std::string, std::string>> rows;
			for (size_t mask = 1; mask < (size_t(1) << st.systems.size()); ++mask)
			{
				std::vector<int> i_set;
				std::string key;
				for (size_t b = 0; b < st.systems.size(); ++b)
					if (mask & (size_t(1) << b))
					{
						i_set.push_back((int)b);
						key += (key.empty() ? "" : ",") +
						       std::to_string(b);
					}
				int d = subsystem_codim_degree(
				    g, stratum_subsystem(g, st, i_set), prof);
				j["d_I"][key] = d;
				rows.push_back({key, std::to_string(d)});
			}
			j["assumptions"] = {"d_I computed for the constant profile 1"};
			emit(j, "", csv, rows);
		}
		else if (flc->parsed())
		{
			ValuationProfile prof = parse_profile(g, profile);
			TorusPoint k = parse_character(g, kappa);
			std::vector<TorusDivisor> family;
			for (auto const &dj : parse_spec(divisor_family))
				family.push_back(parse_divisor(fan, dj));
			FlReport rep = fundamental_lemma_check(g, fan, prof, k, family);
			json j;
			j["strata"] = rep.strata.systems;
			j["d_I"] = rep.d_i;
			j["hypotheses_met"] = rep.hypotheses_met;
			j["instances"] = json::array();
			bool all = true;
			std::vector<std::pair<std::string, std::string>> rows;
			for (auto const &inst : rep.instances)
			{
				json ji;
				ji["divisor"] = divisor_to_json(fan, inst.d);
				ji["lhs"] = to_ll(inst.lhs);
				ji["rhs"] = to_ll(inst.rhs);
				ji["equal"] = inst.equal;
				j["instances"].push_back(ji);
				all = all && inst.equal;
				rows.push_back({ji["divisor"].dump(),
				                inst.equal ? "equal" : "DIFFER"});
			}
			j["all_equal"] = all;
			j["assumptions"] = rep.assumptions;
			emit(j, "", csv, rows);
		}
	}
	catch (std::exception const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
