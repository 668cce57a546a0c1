#include "doctest.h"

#include "formal/lrq.hpp"
#include "support.hpp"

using namespace formal;
using namespace formal::testing;

namespace
{

LRQPresentation present(RingSpec const &base, std::vector<std::string> const &inverted,
                        std::vector<std::string> const &sequence)
{
	LRQPresentation P = LRQPresentation::identity(base);
	for (auto const &s : inverted)
		P.inverted.elements.push_back(base.parse(s));
	for (auto const &s : sequence)
		P.sequence.push_back(base.parse(s));
	return P;
}

/// Every generator of `two_step` maps to the same normal form in `combined`,
/// and random elements agree after mapping.
void check_agree(RingSpec const &combined, RingSpec const &two_step, std::mt19937_64 &rng)
{
	REQUIRE(combined.vars() == two_step.vars());
	std::vector<Element> there, back;
	for (size_t v = 0; v < combined.vars().size(); ++v)
	{
		there.push_back(combined.var(static_cast<int>(v)));
		back.push_back(two_step.var(static_cast<int>(v)));
	}
	RingHom f(two_step, combined, there), g(combined, two_step, back);
	for (size_t v = 0; v < combined.vars().size(); ++v)
	{
		CHECK(f.apply(two_step.var(static_cast<int>(v))) == combined.var(static_cast<int>(v)));
		CHECK(g.apply(combined.var(static_cast<int>(v))) == two_step.var(static_cast<int>(v)));
	}
	for (int i = 0; i < 5; ++i)
	{
		auto e = random_element(two_step, rng);
		CHECK(g.apply(f.apply(e)) == e);
	}
}

} // namespace

TEST_CASE("lrq_validate examples")
{
	auto R = RingSpec::polynomial(RingSpec::localized_integers({2}), {"x1", "x2"});
	auto ok = lrq_validate(present(R, {}, {"x1", "x2"}));
	CHECK(ok.verdict == Verdict::Accept);
	REQUIRE(ok.result);
	CHECK(ok.result->cardinality() == std::nullopt);
	CHECK(ok.steps.size() == 2);

	auto twice = lrq_validate(present(R, {}, {"x1", "x1"}));
	CHECK(twice.verdict == Verdict::Reject);
	CHECK(twice.failing_step == 1);

	// x is a zero-divisor in F3[x]/(x^2); the oracle enumerates all 9 elements
	auto F = RingSpec::polynomial(RingSpec::prime_field(3), {"x"});
	auto quot = RingSpec::quotient(F, {}, {F.parse("x^2")});
	auto all = enumerate(quot);
	CHECK(all.size() == 9);
	CHECK(brute_force_zero_divisor(quot.parse("x"), all));
	auto bad = lrq_validate(present(F, {}, {"x^2", "x"}));
	CHECK(bad.verdict == Verdict::Reject);
	CHECK(bad.failing_step == 1);
	CHECK(bad.steps.back().method == "finite");
}

TEST_CASE("lrq_validate finite rings agree with enumeration")
{
	// every element x^2 + b*x + c appended to F3[x]/(x^3 - x - 1)-style rings
	auto F = RingSpec::polynomial(RingSpec::prime_field(3), {"x", "y"});
	auto first = F.parse("x^2 + 1");
	auto quot = RingSpec::quotient(F, {}, {first});
	auto all = enumerate(RingSpec::quotient(F, {}, {first, F.parse("y^2")}));
	for (auto const &e : all)
	{
		if (e.is_zero())
			continue;
		auto P = LRQPresentation::identity(F);
		P.sequence = {first, F.parse("y^2"), F.make(e.poly())};
		auto v = lrq_validate(P);
		bool zd = brute_force_zero_divisor(e, all);
		bool unit = brute_force_unit(e, all);
		CAPTURE(e.to_string());
		CHECK(v.verdict != Verdict::Unknown);
		// regular non-units do not exist in a finite ring
		CHECK((v.verdict == Verdict::Reject) == (zd || unit));
	}
	(void)quot;
}

TEST_CASE("lrq_validate localisations and unknown outcomes")
{
	auto Z2 = RingSpec::localized_integers({2});
	auto R = RingSpec::polynomial(Z2, {"x", "y"});
	// inverting x then killing x gives the zero ring
	CHECK(lrq_validate(present(R, {"x"}, {"x"})).verdict == Verdict::Reject);
	// 2 is a unit in Z[1/2]
	CHECK(lrq_validate(present(R, {}, {"2"})).verdict == Verdict::Reject);
	// 3 over Z[1/2]: characteristic step, result F_3[x,y]
	auto p3 = lrq_validate(present(R, {}, {"3", "x^2 + 1"}));
	CHECK(p3.verdict == Verdict::Accept);
	REQUIRE(p3.result);
	CHECK(p3.result->core().prime() == 3);
	// x*y over Z[1/2][x,y]/(x - 1) is regular but not triangular
	auto xy = lrq_validate(present(R, {}, {"x^2 - 2", "x*y"}));
	CHECK(xy.verdict != Verdict::Reject);
	CHECK(xy.steps.size() == 2);
	// x*y in Z[1/2][x,y] is regular; the follow-up step is undecided
	auto stuck = lrq_validate(present(R, {}, {"x*y + x", "y"}));
	CHECK(stuck.verdict == Verdict::Unknown);
	CHECK(stuck.failing_step == 1);
	// x^2 - 2 then x: x is a unit modulo x^2 - 2 over Z[1/2]
	CHECK(lrq_validate(present(R, {}, {"x^2 - 2", "x"})).verdict == Verdict::Reject);
}

TEST_CASE("same_quotient and clear_to_base")
{
	auto Z2 = RingSpec::localized_integers({2});
	auto R = RingSpec::polynomial(Z2, {"x", "y"});
	auto a = present(R, {}, {"x - 1", "y - 2"}).result();
	auto b = present(R, {}, {"y - 2", "x - y + 1"}).result();
	CHECK(same_quotient(a, b));
	CHECK_FALSE(same_quotient(a, present(R, {}, {"x"}).result()));

	auto loc = present(R, {"x", "3"}, {}).result();
	auto e = loc.parse("1/3*x^-2*y + x");
	auto [lift, unit] = clear_to_base(e, R);
	CHECK(lift.ring() == R);
	CHECK(unit.unit_status() == UnitStatus::Unit);
	CHECK(loc.make(lift.poly()) == e * unit);
	CHECK(lift == R.parse("y + 3*x^3"));
}

TEST_CASE("lrq_compose examples")
{
	std::mt19937_64 rng(11);
	auto Z2 = RingSpec::localized_integers({2});
	auto R = RingSpec::polynomial(Z2, {"x", "y"});

	// identity inner: outer relabelled over the base
	auto outer0 = present(R, {"y"}, {"x - 1"});
	auto c0 = lrq_compose(outer0, LRQPresentation::identity(R));
	CHECK(c0.presentation.base == R);
	CHECK(c0.presentation.sequence == outer0.sequence);
	CHECK(same_quotient(c0.presentation.result(), outer0.result()));

	auto inner = present(R, {}, {"x"});
	auto mid = inner.result();
	auto outer = present(mid, {"y"}, {"y - 1"});
	auto c = lrq_compose(outer, inner);
	REQUIRE(c.presentation.inverted.elements.size() == 1);
	CHECK(c.presentation.inverted.elements[0] == R.parse("y"));
	CHECK(c.presentation.sequence == std::vector<Element>{R.parse("x"), R.parse("y - 1")});
	auto combined = c.presentation.result();
	CHECK(lrq_validate(c.presentation).verdict == Verdict::Accept);
	check_agree(combined, outer.result(), rng);
	CHECK(combined.var("x").is_zero());
	CHECK(combined.var("y").is_one());

	auto linner = present(R, {"x"}, {});
	auto louter = present(linner.result(), {"y"}, {});
	auto lc = lrq_compose(louter, linner);
	CHECK(lc.presentation.inverted.elements == std::vector<Element>{R.parse("x"), R.parse("y")});
	CHECK(lc.presentation.sequence.empty());
	auto lr = lc.presentation.result();
	auto two = louter.result();
	CHECK(lr.parse("y^-1*x^-1").poly() == two.parse("y^-1*x^-1").poly());
	check_agree(lr, two, rng);
}

TEST_CASE("lrq_compose clears declared-invertible factors")
{
	std::mt19937_64 rng(12);
	auto R = RingSpec::polynomial(RingSpec::localized_integers({2}), {"x", "y"});
	auto inner = present(R, {"x"}, {});
	auto mid = inner.result();
	auto outer = present(mid, {"3*x"}, {"x^-1*y - 1/2"});
	auto c = lrq_compose(outer, inner);
	REQUIRE(c.presentation.sequence.size() == 1);
	CHECK(c.presentation.sequence[0] == R.parse("y - 1/2*x"));
	CHECK(c.factors[0] == mid.parse("x"));
	CHECK(c.presentation.inverted.elements[1] == R.parse("3*x"));
	check_agree(c.presentation.result(), outer.result(), rng);
}

TEST_CASE("lrq_compose agrees with the two-step quotient on random pairs")
{
	std::mt19937_64 rng(2024);
	for (int trial = 0; trial < 20; ++trial)
	{
		auto pair = random_lrq_pair(rng);
		CAPTURE(trial);
		REQUIRE(lrq_validate(pair.inner).verdict == Verdict::Accept);
		REQUIRE(lrq_validate(pair.outer).verdict == Verdict::Accept);
		auto c = lrq_compose(pair.outer, pair.inner);
		CHECK(lrq_validate(c.presentation).verdict == Verdict::Accept);
		check_agree(c.presentation.result(), pair.outer.result(), rng);
	}
}

TEST_CASE("lrq_tensor examples")
{
	auto Z2 = RingSpec::localized_integers({2});
	auto Rx = RingSpec::polynomial(Z2, {"x"});
	auto Ry = RingSpec::polynomial(Z2, {"y"});
	auto P = present(Rx, {}, {"x - 1"});

	auto id = lrq_tensor(P, LRQPresentation::identity(Z2));
	CHECK(id.presentation.base == P.base);
	CHECK(id.presentation.sequence == P.sequence);
	CHECK(id.renamed.empty());

	auto t = lrq_tensor(P, present(Ry, {}, {"y - 2"}));
	auto joint = RingSpec::polynomial(Z2, {"x", "y"});
	CHECK(t.presentation.base == joint);
	CHECK(t.presentation.sequence == std::vector<Element>{joint.parse("x - 1"), joint.parse("y - 2")});
	auto r = t.presentation.result();
	CHECK(r.var("x").is_one());
	CHECK(r.var("y") == r.from_rational(2));

	auto F = RingSpec::prime_field(3);
	auto t9 = lrq_tensor(present(RingSpec::polynomial(F, {"x"}), {}, {"x^2 + 1"}),
	                     present(RingSpec::polynomial(F, {"y"}), {}, {"y - 1"}));
	auto f9 = t9.presentation.result();
	CHECK(lrq_validate(t9.presentation).verdict == Verdict::Accept);
	auto all = enumerate(f9);
	CHECK(all.size() == 9);
	for (auto const &e : all)
		CHECK(e.is_zero() != brute_force_unit(e, all));

	// colliding names are renamed
	auto tc = lrq_tensor(P, present(Rx, {}, {"x + 1"}));
	CHECK(tc.renamed.at("x") == "x_2");
	CHECK(tc.presentation.base.vars() == std::vector<std::string>{"x", "x_2"});

	CHECK_THROWS_AS(lrq_tensor(P, LRQPresentation::identity(F)), AlgebraError);
}

TEST_CASE("lrq_tensor with identity is the identity up to renaming")
{
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 10; ++trial)
	{
		auto pair = random_lrq_pair(rng);
		auto core = RingSpec::from_core(pair.inner.base.core());
		auto t = lrq_tensor(pair.inner, LRQPresentation::identity(core));
		CHECK(t.presentation.base == pair.inner.base);
		CHECK(t.presentation.sequence == pair.inner.sequence);
		CHECK(t.presentation.inverted.elements == pair.inner.inverted.elements);
		auto u = lrq_tensor(LRQPresentation::identity(RingSpec::polynomial(core, {"x1"})), pair.inner);
		CHECK(u.renamed.at("x1") == "x1_2");
		CHECK(lrq_validate(u.presentation).verdict == Verdict::Accept);
	}
}

TEST_CASE("sequence order within a triangular block does not matter")
{
	std::mt19937_64 rng(8);
	for (int trial = 0; trial < 10; ++trial)
	{
		auto pair = random_lrq_pair(rng);
		auto P = pair.inner;
		auto Q = P;
		std::reverse(Q.sequence.begin(), Q.sequence.end());
		auto vq = lrq_validate(Q);
		REQUIRE(vq.verdict == Verdict::Accept);
		check_agree(P.result(), *vq.result, rng);
	}
}

TEST_CASE("free_module_certificate examples")
{
	auto F = RingSpec::prime_field(3);
	auto A = LRQPresentation::identity(F);

	FreeAlgebra self;
	self.basis = {"1"};
	self.table = {{{F.one()}}};
	CHECK(free_module_certificate(A, self).accepted);

	auto Fa = RingSpec::polynomial(F, {"a"});
	auto F9 = RingSpec::quotient(Fa, {}, {Fa.parse("a^2 + 1")});
	FreeAlgebra B;
	B.basis = {"1", "a"};
	B.table = {{{F.one(), F.zero()}, {F.zero(), F.one()}},
	           {{F.zero(), F.one()}, {F.from_rational(-1), F.zero()}}};
	B.declared = F9;
	B.basis_elements = {F9.one(), F9.var("a")};
	B.structure = RingHom(F, F9, {});
	auto ok = free_module_certificate(A, B);
	CHECK(ok.accepted);
	CAPTURE(ok.message);

	auto bad = B;
	bad.table[1][1] = {F.zero(), F.one()};
	auto v = free_module_certificate(A, bad);
	CHECK_FALSE(v.accepted);
	CHECK(v.triple == std::vector<int>{1, 1, -1});

	// associativity failure located by triple
	FreeAlgebra na;
	na.basis = {"1", "a", "b"};
	auto z = F.zero(), o = F.one();
	na.table = {{{o, z, z}, {z, o, z}, {z, z, o}},
	            {{z, o, z}, {z, z, o}, {z, z, z}},
	            {{z, z, o}, {z, z, z}, {o, z, z}}};
	auto nv = free_module_certificate(A, na);
	CHECK_FALSE(nv.accepted);
	CHECK(nv.triple.size() == 3);
	CHECK(nv.triple[2] >= 0);

	// {1, 2a} is not a basis over F3 only if 2 = 0; {1, a, a} fails the dimension count
	FreeAlgebra dup = B;
	dup.basis_elements = {F9.one(), F9.var("a") * F9.from_rational(2)};
	dup.table[1][1] = {F.from_rational(-4), F.zero()};
	CHECK(free_module_certificate(A, dup).accepted);
}
