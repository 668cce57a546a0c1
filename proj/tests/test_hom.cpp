#include "doctest.h"

#include "formal/hom.hpp"
#include "support.hpp"

using namespace formal;

TEST_CASE("hom_apply examples")
{
	auto zx = RingSpec::polynomial(RingSpec::localized_integers({2}), {"x"});
	auto f3 = RingSpec::prime_field(3);
	RingHom h(zx, f3, {f3.parse("2")});
	CHECK(hom_apply(h, zx.parse("x^2 + x")).is_zero());
	// oracle: 2^2 + 2 = 6, reduced mod 3
	CHECK(hom_apply(h, zx.parse("x^2 + x")) == f3.from_rational(6));

	auto qxy = RingSpec::polynomial(RingSpec::rationals(), {"x", "y"});
	auto id = RingHom::identity(qxy);
	auto e = qxy.parse("x^3 - 1/2*x*y + 7");
	CHECK(hom_apply(id, e) == e);

	RingHom swap(qxy, qxy, {qxy.var("y"), qxy.var("x")});
	CHECK(hom_apply(swap, qxy.parse("x - y")) == qxy.parse("y - x"));
}

TEST_CASE("invalid homomorphisms are rejected")
{
	auto qx = RingSpec::polynomial(RingSpec::rationals(), {"x"});
	auto quot = RingSpec::quotient(qx, {}, {qx.parse("x^2 + 1")});
	auto q = RingSpec::rationals();
	try
	{
		RingHom(quot, q, {q.parse("1")});
		FAIL("relation not killed");
	}
	catch (AlgebraError const &e)
	{
		CHECK(e.kind() == ErrorKind::InvalidHom);
	}
	auto lx = RingSpec::quotient(qx, {{qx.var("x")}, {}}, {});
	CHECK_THROWS_AS(RingHom(lx, q, {q.zero()}), AlgebraError);
	RingHom ok(lx, q, {q.parse("2")});
	CHECK(ok.apply(lx.parse("x^-1 + x")) == q.parse("5/2"));
	// Q does not map to F3
	CHECK_THROWS_AS(RingHom(q, RingSpec::prime_field(3), {}), AlgebraError);
	// Z[1/6] does not map to F3 but Z[1/2] does
	auto f3 = RingSpec::prime_field(3);
	CHECK_THROWS_AS(RingHom(RingSpec::localized_integers({2, 3}), f3, {}), AlgebraError);
	CHECK(RingHom(RingSpec::localized_integers({2}), f3, {}).apply(
	          RingSpec::localized_integers({2}).parse("1/2")) == f3.parse("2"));
}

TEST_CASE("homomorphisms preserve sums and products on samples")
{
	std::mt19937_64 rng(11);
	auto zxy = RingSpec::polynomial(RingSpec::localized_integers({2, 3}), {"x", "y"});
	auto f5t = RingSpec::polynomial(RingSpec::prime_field(5), {"t"});
	auto target = RingSpec::quotient(f5t, {}, {f5t.parse("t^2 - 2")});
	RingHom h(zxy, target, {target.parse("t + 1"), target.parse("3*t")});
	for (int i = 0; i < 50; ++i)
	{
		auto a = formal::testing::random_element(zxy, rng);
		auto b = formal::testing::random_element(zxy, rng);
		CHECK(h.apply(a * b) == h.apply(a) * h.apply(b));
		CHECK(h.apply(a + b) == h.apply(a) + h.apply(b));
	}
	CHECK(h.apply(zxy.one()).is_one());
	CHECK(h.apply(zxy.zero()).is_zero());
}
