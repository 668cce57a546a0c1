#include "doctest.h"

#include "formal/ring.hpp"
#include "support.hpp"

using namespace formal;
using formal::testing::brute_force_unit;
using formal::testing::enumerate;
using formal::testing::random_element;

namespace
{

RingSpec qx_mod_x2_plus_1()
{
	auto qx = RingSpec::polynomial(RingSpec::rationals(), {"x"});
	return RingSpec::quotient(qx, {}, {qx.parse("x^2 + 1")});
}

RingSpec f3_mod(std::string const &rel)
{
	auto fx = RingSpec::polynomial(RingSpec::prime_field(3), {"x"});
	return RingSpec::quotient(fx, {}, {fx.parse(rel)});
}

} // namespace

TEST_CASE("nf_reduce examples")
{
	auto ring = qx_mod_x2_plus_1();
	CHECK(nf_reduce(ring, "x^3").to_string() == "-x");
	CHECK(nf_reduce(ring, "x^3") == -ring.var("x"));

	auto zx = RingSpec::polynomial(RingSpec::localized_integers({2}), {"x"});
	CHECK(nf_reduce(zx, "x+0") == zx.var("x"));

	auto f3 = RingSpec::prime_field(3);
	CHECK(nf_reduce(f3, "7").to_string() == "1");
}

TEST_CASE("nf_reduce errors")
{
	auto zx = RingSpec::polynomial(RingSpec::localized_integers({2}), {"x"});
	CHECK_THROWS_AS(nf_reduce(zx, "y"), AlgebraError);
	try
	{
		nf_reduce(zx, "x + y");
	}
	catch (AlgebraError const &e)
	{
		CHECK(e.kind() == ErrorKind::UnknownVariable);
	}
	try
	{
		RingSpec::prime_field(2);
		FAIL("characteristic 2 accepted");
	}
	catch (AlgebraError const &e)
	{
		CHECK(e.kind() == ErrorKind::InvalidRing);
	}
	CHECK_THROWS_AS(RingSpec::prime_field(9), AlgebraError);
	CHECK_THROWS_AS(RingSpec::localized_integers({3}), AlgebraError);
	// 1/3 is not in Z[1/2]
	CHECK_THROWS_AS(nf_reduce(zx, "1/3"), AlgebraError);
	CHECK(nf_reduce(zx, "x/2").to_string() == "1/2*x");
}

TEST_CASE("zero ring is rejected with a distinct error")
{
	auto qx = RingSpec::polynomial(RingSpec::rationals(), {"x"});
	try
	{
		RingSpec::quotient(qx, {}, {qx.parse("x"), qx.parse("x + 1")});
		FAIL("zero ring accepted");
	}
	catch (AlgebraError const &e)
	{
		CHECK(e.kind() == ErrorKind::ZeroRing);
	}
	auto f3x = RingSpec::polynomial(RingSpec::prime_field(3), {"x"});
	InvertedSet inv;
	inv.elements.push_back(f3x.parse("3"));
	CHECK_THROWS_AS(RingSpec::quotient(f3x, inv, {}), AlgebraError);
}

TEST_CASE("is_unit examples")
{
	auto z6 = RingSpec::localized_integers({2, 3});
	CHECK(is_unit(z6.parse("12")) == UnitStatus::Unit);
	CHECK(is_unit(z6.parse("10")) == UnitStatus::NotUnit);
	auto zx = RingSpec::polynomial(RingSpec::localized_integers({2}), {"x"});
	CHECK(is_unit(zx.var("x")) == UnitStatus::NotUnit);

	// x^2 = 1 in F3[x]/(x^2 - 1), so x is its own inverse
	auto ring = f3_mod("x^2 - 1");
	CHECK(is_unit(ring.var("x")) == UnitStatus::Unit);
	CHECK(brute_force_unit(ring.var("x"), enumerate(ring)));
	CHECK(is_unit(ring.parse("x + 1")) == UnitStatus::NotUnit);
	CHECK(ring.var("x").inverse() == ring.var("x"));
}

TEST_CASE("is_unit agrees with brute force on finite rings")
{
	for (auto rel : {"x^2 - 1", "x^2 + 1", "x^3 - x", "x^2", "x^3 + 2*x + 1"})
	{
		auto ring = f3_mod(rel);
		auto all = enumerate(ring);
		CHECK(all.size() == ring.cardinality()->get_ui());
		for (auto const &e : all)
		{
			bool unit = is_unit(e) == UnitStatus::Unit;
			CHECK_MESSAGE(unit == brute_force_unit(e, all), rel, " element ", e.to_string());
			if (unit)
				CHECK((e * e.inverse()).is_one());
		}
	}
	// two relations, one depending on the other
	auto f5 = RingSpec::polynomial(RingSpec::prime_field(5), {"x", "y"});
	auto ring = RingSpec::quotient(f5, {}, {f5.parse("x^2 - 2"), f5.parse("y^2 - x*y - 1")});
	auto all = enumerate(ring);
	CHECK(all.size() == 625);
	for (size_t i = 0; i < all.size(); i += 7)
		CHECK((is_unit(all[i]) == UnitStatus::Unit) == brute_force_unit(all[i], all));
}

TEST_CASE("localisation by variables and declared units")
{
	auto zxy = RingSpec::polynomial(RingSpec::localized_integers({2}), {"x", "y"});
	InvertedSet inv;
	inv.elements = {zxy.parse("x"), zxy.parse("3*y")};
	auto ring = RingSpec::quotient(zxy, inv, {});
	CHECK(ring.core() == Core::localized_integers({2, 3}));
	CHECK(ring.is_laurent(0));
	CHECK(is_unit(ring.parse("6*x^2*y")) == UnitStatus::Unit);
	CHECK(is_unit(ring.parse("x + y")) == UnitStatus::NotUnit);
	CHECK(ring.parse("x^-1 * x").is_one());
	CHECK(ring.parse("1/x").to_string() == "x^-1");

	// inverted variable that then leads a relation must be a unit there
	auto q = RingSpec::quotient(zxy, {{zxy.parse("y")}, {}}, {zxy.parse("x"), zxy.parse("y - 1")});
	CHECK(q.parse("y").is_one());
	try
	{
		RingSpec::quotient(zxy, {{zxy.parse("y")}, {}}, {zxy.parse("y^2 - 3")});
		FAIL("non-unit accepted");
	}
	catch (AlgebraError const &e)
	{
		CHECK(e.kind() == ErrorKind::UnsupportedLocalisation);
	}
}

TEST_CASE("characteristic relation turns Z-type cores into prime fields")
{
	auto zx = RingSpec::polynomial(RingSpec::localized_integers({2}), {"x"});
	auto ring = RingSpec::quotient(zx, {}, {zx.parse("3"), zx.parse("x^2 + 1")});
	CHECK(ring.core() == Core::prime_field(3));
	CHECK(ring.cardinality() == 9);
	CHECK(ring.parse("x^2").to_string() == "2");
	CHECK(zx.classify_relation(zx.parse("9")) == RelationKind::NonTriangular);
	CHECK(zx.classify_relation(zx.parse("6")) == RelationKind::Characteristic);
	CHECK(zx.classify_relation(zx.parse("1/2")) == RelationKind::Unit);
	CHECK(zx.classify_relation(zx.parse("3*x - 1")) == RelationKind::NonTriangular);
	CHECK(zx.classify_relation(zx.parse("x^2 - 3")) == RelationKind::Triangular);
	CHECK(zx.classify_relation(zx.parse("0")) == RelationKind::Zero);
}

TEST_CASE("relations may mention variables that lead later relations")
{
	auto qxy = RingSpec::polynomial(RingSpec::rationals(), {"x", "y"});
	auto ring = RingSpec::quotient(qxy, {}, {qxy.parse("x - y^3"), qxy.parse("y^2 - 2")});
	CHECK(ring.parse("x").to_string() == "2*y");
	CHECK(ring.parse("x^2").to_string() == "8");
	CHECK(ring.rank() == 2);
}

TEST_CASE("ring axioms and idempotence on random samples")
{
	std::mt19937_64 rng(7);
	auto qxy = RingSpec::polynomial(RingSpec::rationals(), {"x", "y"});
	auto z6t = RingSpec::polynomial(RingSpec::localized_integers({2, 3}), {"t"});
	std::vector<RingSpec> rings = {
	    RingSpec::rationals(),
	    RingSpec::localized_integers({2, 3}),
	    RingSpec::prime_field(7),
	    qxy,
	    RingSpec::quotient(qxy, {{qxy.parse("y")}, {}}, {qxy.parse("x^2 - y*x + 3")}),
	    f3_mod("x^3 + 2*x + 1"),
	    RingSpec::quotient(z6t, {}, {z6t.parse("t^2 - t - 1")}),
	};
	for (auto const &ring : rings)
	{
		for (int i = 0; i < 40; ++i)
		{
			auto a = random_element(ring, rng);
			auto b = random_element(ring, rng);
			auto c = random_element(ring, rng);
			CHECK((a + b) + c == a + (b + c));
			CHECK((a * b) * c == a * (b * c));
			CHECK(a * b == b * a);
			CHECK(a * (b + c) == a * b + a * c);
			CHECK(a * ring.one() == a);
			CHECK(a + ring.zero() == a);
			CHECK((a - a).is_zero());
			CHECK(ring.make(a.poly()) == a);
			CHECK(ring.parse(a.to_string()) == a);
		}
	}
}
