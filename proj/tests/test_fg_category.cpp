#include "doctest.h"

#include "formal/fg_category.hpp"
#include "support.hpp"

using namespace formal;

TEST_CASE("to_alg_system examples")
{
	auto Q = RingSpec::rationals();
	auto mult = fgl_multiplicative(Q, 6);
	FGObject single(Q, mult, {});
	auto S0 = to_alg_system(single);
	CHECK(S0.laws == std::vector<FormalGroupLaw>{mult});
	CHECK(S0.isos.empty());

	int N = 4;
	auto add = fgl_additive(Q, N);
	CoordinateChange h1(TruncSeries1::parse(Q, N, "t + t^2"));
	auto S = to_alg_system(FGObject(Q, add, {h1}));
	CHECK(S.laws[1] == fgl_transform(add, h1));
	CHECK(S.isos[0] == TruncSeries1::parse(Q, N, "t - t^2 + 2*t^3 - 5*t^4"));
	CHECK(iso_check(S.isos[0], S.laws[1], S.laws[0]).kind == IsoKind::StrictIso);

	auto S2 = to_alg_system(FGObject(Q, mult, {CoordinateChange(TruncSeries1::parse(Q, 6, "2*t"))}));
	CHECK(S2.laws[1].series() == TruncSeries2::parse(Q, 6, "x + y + 1/2*x*y"));
	CHECK(S2.isos[0] == TruncSeries1::parse(Q, 6, "1/2*t"));
	CHECK(iso_check(S2.isos[0], S2.laws[1], S2.laws[0]).kind == IsoKind::GeneralIso);
}

TEST_CASE("from_alg_system examples")
{
	auto Q = RingSpec::rationals();
	auto mult = fgl_multiplicative(Q, 5);
	CHECK(from_alg_system(Q, AlgSystem{{mult}, {}}).r() == 0);

	int N = 4;
	auto add = fgl_additive(Q, N);
	CoordinateChange h1(TruncSeries1::parse(Q, N, "t + t^2"));
	auto back = from_alg_system(Q, to_alg_system(FGObject(Q, add, {h1})));
	CHECK(back.coords[0].series() == TruncSeries1::parse(Q, N, "t + t^2"));

	auto lin = from_alg_system(Q, AlgSystem{{add, add}, {TruncSeries1::parse(Q, N, "2*t")}});
	CHECK(lin.coords[0].series() == TruncSeries1::parse(Q, N, "1/2*t"));

	// f_0 = t + t^2 is not an isomorphism between additive laws
	CHECK_THROWS_AS(from_alg_system(Q, AlgSystem{{add, add}, {TruncSeries1::parse(Q, N, "t + t^2")}}),
	                AlgebraError);
}

TEST_CASE("morphism_check examples")
{
	auto Q = RingSpec::rationals();
	int N = 6;
	auto X = FGObject(Q, fgl_multiplicative(Q, N), {});
	CHECK(morphism_check(RingHom::identity(Q), X, X).accepted);
	auto Y = FGObject(Q, fgl_additive(Q, N), {});
	auto res = morphism_check(RingHom::identity(Q), X, Y);
	CHECK_FALSE(res.accepted);
	CHECK(res.condition == "law0");
	CHECK(res.index == std::make_pair(1, 1));

	auto qc = RingSpec::polynomial(Q, {"c"});
	auto Yc = FGObject(qc, fgl_require(TruncSeries2::parse(qc, N, "x + y + c*x*y")), {});
	RingHom phi(qc, Q, {Q.one()});
	CHECK(morphism_check(phi, X, Yc).accepted);
	// naturality of the classifying table
	auto mapped = map_table(phi, classify_map(Yc));
	auto direct = classify_map(X);
	for (auto const &[idx, v] : direct.law)
		CHECK(mapped.law.at(idx) == v);

	auto X1 = FGObject(Q, fgl_multiplicative(Q, N), {CoordinateChange(TruncSeries1::identity(Q, N))});
	CHECK_THROWS_AS(morphism_check(RingHom::identity(Q), X1, X), AlgebraError);
	auto X2 = FGObject(Q, fgl_multiplicative(Q, N),
	                   {CoordinateChange(TruncSeries1::parse(Q, N, "t + t^3"))});
	auto r2 = morphism_check(RingHom::identity(Q), X1, X2);
	CHECK_FALSE(r2.accepted);
	CHECK(r2.condition == "coordinate 1");
}

TEST_CASE("classify_map examples")
{
	auto Q = RingSpec::rationals();
	auto mult = classify_map(FGObject(Q, fgl_multiplicative(Q, 4), {}));
	CHECK(mult.law.size() == 6); // (1,1),(1,2),(2,1),(1,3),(2,2),(3,1)
	for (auto const &[idx, v] : mult.law)
		CHECK(v == (idx == std::make_pair(1, 1) ? Q.one() : Q.zero()));
	for (auto const &[idx, v] : classify_map(FGObject(Q, fgl_additive(Q, 4), {})).law)
		CHECK(v.is_zero());
	auto F = fgl_transform(fgl_additive(Q, 4), CoordinateChange(TruncSeries1::parse(Q, 4, "t + t^3")));
	for (auto const &[idx, v] : classify_map(FGObject(Q, F, {})).law)
	{
		bool three = idx == std::make_pair(2, 1) || idx == std::make_pair(1, 2);
		CHECK(v == Q.from_rational(three ? 3 : 0));
	}
}

TEST_CASE("permute_coordinates examples")
{
	auto Q = RingSpec::rationals();
	int N = 5;
	auto add = fgl_additive(Q, N);
	CoordinateChange h1(TruncSeries1::parse(Q, N, "t + t^2"));
	FGObject X(Q, add, {h1});
	CHECK(permute_coordinates(X, {0, 1}) == X);
	auto swapped = permute_coordinates(X, {1, 0});
	CHECK(swapped.law0 == fgl_transform(add, h1));
	CHECK(swapped.coords[0].series() == ps_reverse(h1.series()));
	CHECK(permute_coordinates(swapped, {1, 0}) == X);
	CHECK_THROWS_AS(permute_coordinates(X, {0, 0}), AlgebraError);
}

TEST_CASE("fg_category properties on random objects")
{
	std::mt19937_64 rng(23);
	auto qc = RingSpec::polynomial(RingSpec::rationals(), {"c"});
	std::vector<RingSpec> rings = {RingSpec::rationals(), RingSpec::prime_field(5),
	                               RingSpec::localized_integers({2, 3}), qc};
	int N = 6;
	for (auto const &R : rings)
		for (int k = 0; k < 4; ++k)
		{
			int r = static_cast<int>(rng() % 4);
			auto X = formal::testing::random_object(R, N, r, rng);
			auto S = to_alg_system(X);
			CHECK(from_alg_system(R, S) == X);
			CHECK(to_alg_system(from_alg_system(R, S)) == S);
			for (size_t i = 0; i < S.isos.size(); ++i)
				CHECK(iso_check(S.isos[i], S.laws[i + 1], S.laws[i]).kind != IsoKind::NotIso);
			CHECK(morphism_check(RingHom::identity(R), X, X).accepted);

			std::vector<int> sigma(static_cast<size_t>(r + 1)), tau(sigma.size());
			for (int i = 0; i <= r; ++i)
				sigma[static_cast<size_t>(i)] = tau[static_cast<size_t>(i)] = i;
			std::shuffle(sigma.begin(), sigma.end(), rng);
			std::shuffle(tau.begin(), tau.end(), rng);
			std::vector<int> inverse(sigma.size()), composite(sigma.size());
			for (size_t i = 0; i < sigma.size(); ++i)
			{
				inverse[static_cast<size_t>(sigma[i])] = static_cast<int>(i);
				composite[i] = sigma[static_cast<size_t>(tau[i])];
			}
			auto Xs = permute_coordinates(X, sigma);
			CHECK(permute_coordinates(Xs, inverse) == X);
			CHECK(permute_coordinates(Xs, tau) == permute_coordinates(X, composite));
		}
}
