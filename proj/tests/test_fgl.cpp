#include "doctest.h"

#include "formal/fgl.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace formal;

namespace
{

/// Oracle: lowest total degree where F(F(x,y),z) and F(x,F(y,z)) differ, for
/// a polynomial F, by exact trivariate expansion. -1 if they agree to n.
int associativity_failure_degree(TruncSeries2 const &F, int n)
{
	auto R = F.ring();
	auto rxy = RingSpec::polynomial(R, {"x", "y"});
	auto rxyz = RingSpec::polynomial(R, {"x", "y", "z"});
	Element f = oracle::embed(F, rxy, "x", "y");
	Element fxy = oracle::substitute(f, rxyz, {rxyz.var("x"), rxyz.var("y")});
	Element fyz = oracle::substitute(f, rxyz, {rxyz.var("y"), rxyz.var("z")});
	Element left = oracle::substitute(f, rxyz, {fxy, rxyz.var("z")});
	Element right = oracle::substitute(f, rxyz, {rxyz.var("x"), fyz});
	Element diff = left - right;
	int lowest = -1;
	for (auto const &t : diff.poly().terms)
	{
		int d = t.exps[0] + t.exps[1] + t.exps[2];
		if (d <= n && (lowest < 0 || d < lowest))
			lowest = d;
	}
	return lowest;
}

std::vector<Axiom> axioms(FglCheck const &c)
{
	std::vector<Axiom> out;
	for (auto const &v : c.violations)
		out.push_back(v.axiom);
	return out;
}

} // namespace

TEST_CASE("fgl_validate examples")
{
	auto Q = RingSpec::rationals();
	auto mult = fgl_validate(TruncSeries2::parse(Q, 10, "x + y + x*y"));
	CHECK(mult.valid());

	auto bad = fgl_validate(TruncSeries2::parse(Q, 10, "x + y + x^2"));
	REQUIRE_FALSE(bad.valid());
	CHECK(bad.first().axiom == Axiom::Unit);
	CHECK(bad.first().degree == 2);
	CHECK(bad.first().message.rfind("unit axiom fails at degree 2", 0) == 0);

	auto F3 = RingSpec::prime_field(3);
	auto F = TruncSeries2::parse(F3, 4, "x + y + 2*x*y + x^2*y");
	auto check = fgl_validate(F);
	REQUIRE_FALSE(check.valid());
	auto found = axioms(check);
	CHECK(found == std::vector<Axiom>{Axiom::Commutativity, Axiom::Associativity});
	int oracle_degree = associativity_failure_degree(F, 4);
	CHECK(oracle_degree == 3);
	CHECK(check.violations[1].degree == oracle_degree);
	CHECK(check.violations[1].index == std::vector<int>{1, 1, 1});
	CHECK(check.violations[0].degree == 3);
}

TEST_CASE("associativity check agrees with trivariate expansion")
{
	std::mt19937_64 rng(5);
	for (auto R : {RingSpec::rationals(), RingSpec::prime_field(5)})
	{
		for (int k = 0; k < 10; ++k)
		{
			// commutative, unital perturbations of the multiplicative law
			auto F = TruncSeries2::parse(R, 5, "x + y + x*y");
			int d = 2 + static_cast<int>(rng() % 3);
			int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(d - 1));
			Element c = R.from_rational(1 + static_cast<int>(rng() % 3));
			F.set(i, d - i, F.coeff(i, d - i) + c);
			if (2 * i != d)
				F.set(d - i, i, F.coeff(d - i, i) + c);
			auto check = fgl_validate(F);
			int expected = associativity_failure_degree(F, 5);
			if (expected < 0)
				CHECK(check.valid());
			else
			{
				REQUIRE_FALSE(check.valid());
				CHECK(check.first().axiom == Axiom::Associativity);
				CHECK(check.first().degree == expected);
			}
		}
	}
}

TEST_CASE("fgl_construct examples")
{
	auto Q = RingSpec::rationals();
	CHECK(fgl_from_log(TruncSeries1::identity(Q, 6)) == fgl_additive(Q, 6));
	auto log1p = TruncSeries1::parse(Q, 6, "t - 1/2*t^2 + 1/3*t^3 - 1/4*t^4 + 1/5*t^5 - 1/6*t^6");
	CHECK(fgl_from_log(log1p) == fgl_multiplicative(Q, 6));

	auto lorentz = fgl_from_log(TruncSeries1::parse(Q, 5, "t + 1/3*t^3 + 1/5*t^5"));
	// oracle: (x+y) * (1 - xy + (xy)^2) truncated at total degree 5
	auto qxy = RingSpec::polynomial(Q, {"x", "y"});
	Element expected = oracle::truncated(qxy.parse("(x + y)*(1 - x*y + x^2*y^2)"), 2, 5);
	CHECK(oracle::embed(lorentz.series(), qxy, "x", "y") == expected);
	CHECK(lorentz.series().to_string() == "x + y - x^2*y - x*y^2 + x^3*y^2 + x^2*y^3");
	CHECK(fgl_validate(lorentz.series()).valid());
	CHECK(fgl_validate(fgl_additive(Q, 10).series()).valid());

	CHECK_THROWS_AS(fgl_from_log(TruncSeries1::identity(RingSpec::prime_field(3), 4)), AlgebraError);
	CHECK_THROWS_AS(fgl_from_log(TruncSeries1::parse(Q, 4, "2*t")), AlgebraError);
}

TEST_CASE("fgl_transform examples")
{
	auto Q = RingSpec::rationals();
	auto add = fgl_additive(Q, 4);
	CHECK(fgl_transform(add, CoordinateChange(TruncSeries1::identity(Q, 4))) == add);

	auto g = TruncSeries1::parse(Q, 4, "t + t^3");
	auto Fg = fgl_transform(add, CoordinateChange(g));
	// oracle: gbar by fixed-point iteration, then expand g(gbar(x) + gbar(y))
	auto qt = RingSpec::polynomial(Q, {"t"});
	Element gbar = oracle::reverse_by_iteration(qt.parse("t + t^3"), 4, 1);
	CHECK(gbar == qt.parse("t - t^3"));
	auto qxy = RingSpec::polynomial(Q, {"x", "y"});
	Element gx = oracle::substitute(gbar, qxy, {qxy.var("x")});
	Element gy = oracle::substitute(gbar, qxy, {qxy.var("y")});
	Element s = gx + gy;
	Element expected = oracle::truncated(s + s.pow(3), 2, 4);
	CHECK(expected == qxy.parse("x + y + 3*x^2*y + 3*x*y^2"));
	CHECK(oracle::embed(Fg.series(), qxy, "x", "y") == expected);

	auto mult = fgl_multiplicative(Q, 6);
	auto half = fgl_transform(mult, CoordinateChange(TruncSeries1::parse(Q, 6, "2*t")));
	CHECK(half.series() == TruncSeries2::parse(Q, 6, "x + y + 1/2*x*y"));

	auto zx = RingSpec::polynomial(RingSpec::localized_integers({2}), {"x"});
	CHECK_THROWS_AS(CoordinateChange(TruncSeries1::parse(zx, 4, "3*t")), AlgebraError);
}

TEST_CASE("fgl_formal_inverse examples")
{
	auto Q = RingSpec::rationals();
	CHECK(fgl_formal_inverse(fgl_additive(Q, 6)) == TruncSeries1::parse(Q, 6, "-t"));
	CHECK(fgl_formal_inverse(fgl_multiplicative(Q, 4)) ==
	      TruncSeries1::parse(Q, 4, "-t + t^2 - t^3 + t^4"));

	int N = 7;
	CoordinateChange g(TruncSeries1::parse(Q, N, "t + t^2"));
	auto F = fgl_transform(fgl_additive(Q, N), g);
	auto iota = fgl_formal_inverse(F);
	// conjugation: iota = g(-gbar(t))
	auto conj = ps_compose(g.series(), ps_neg(g.inverse_series()));
	CHECK(iota == conj);
	auto t = TruncSeries1::identity(Q, N);
	CHECK(ps_subst_diag(F.series(), t, iota).is_zero());
	CHECK(ps_subst_diag(F.series(), iota, t).is_zero());
}

TEST_CASE("iso_check examples")
{
	auto Q = RingSpec::rationals();
	int N = 6;
	auto add = fgl_additive(Q, N);
	auto t = TruncSeries1::identity(Q, N);
	CHECK(iso_check(t, add, add).kind == IsoKind::StrictIso);
	auto g = TruncSeries1::parse(Q, N, "t + t^2");
	CHECK(iso_check(g, add, fgl_transform(add, CoordinateChange(g))).kind == IsoKind::StrictIso);
	CHECK(iso_check(TruncSeries1::parse(Q, N, "2*t"), add, add).kind == IsoKind::GeneralIso);
	auto r = iso_check(g, add, add);
	CHECK(r.kind == IsoKind::NotIso);
	CHECK(r.failing_degree == 2);
	auto z = RingSpec::localized_integers({2});
	CHECK(iso_check(TruncSeries1::parse(z, N, "3*t"), fgl_additive(z, N), fgl_additive(z, N)).kind ==
	      IsoKind::NotIso);
}

TEST_CASE("fgl properties on random samples")
{
	std::mt19937_64 rng(17);
	auto qc = RingSpec::polynomial(RingSpec::rationals(), {"c"});
	std::vector<RingSpec> rings = {RingSpec::rationals(), RingSpec::prime_field(3),
	                               RingSpec::prime_field(7), RingSpec::localized_integers({2, 3}),
	                               qc};
	int N = 7;
	for (auto const &R : rings)
	{
		std::vector<FormalGroupLaw> bases = {fgl_additive(R, N), fgl_multiplicative(R, N)};
		for (int k = 0; k < 6; ++k)
		{
			auto const &F0 = bases[static_cast<size_t>(k) % 2];
			CoordinateChange g(formal::testing::random_coordinate(R, N, rng));
			CoordinateChange h(formal::testing::random_coordinate(R, N, rng));
			auto F = fgl_transform(F0, g);
			CHECK(fgl_validate(F.series()).valid());
			auto hg = CoordinateChange(ps_compose(h.series(), g.series()));
			CHECK(fgl_transform(F, h) == fgl_transform(F0, hg));
			CHECK(fgl_transform(F, g.inverse()) == F0);
			auto iota = fgl_formal_inverse(F);
			auto t = TruncSeries1::identity(R, N);
			CHECK(ps_subst_diag(F.series(), t, iota).is_zero());
			CHECK(ps_subst_diag(F.series(), iota, t).is_zero());
			CHECK(iso_check(g.series(), F0, F).kind != IsoKind::NotIso);
		}
	}
}
