#include <functional>
#include <random>

#include "formal/certify.hpp"
#include "formal/cli.hpp"
#include "formal/fg_category.hpp"

namespace formal::cli
{

using nlohmann::json;

namespace
{

struct Sampler
{
	std::mt19937_64 rng;

	int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

	Element coeff(RingSpec const &R)
	{
		Rational q = small(-3, 3);
		auto const &core = R.core();
		if (core.kind() == Core::Kind::Rationals && small(0, 2) == 0)
			q /= small(1, 4);
		if (core.kind() == Core::Kind::LocalizedIntegers && small(0, 2) == 0)
			q /= static_cast<long>(core.inverted_primes()[static_cast<size_t>(small(0, static_cast<int>(core.inverted_primes().size()) - 1))]);
		Element e = R.from_rational(core.normalize(q));
		for (size_t v = 0; v < R.vars().size(); ++v)
			if (small(0, 1))
				e = e + R.var(static_cast<int>(v)) * R.from_rational(core.normalize(Rational(small(-2, 2))));
		return e;
	}

	Element unit(RingSpec const &R)
	{
		for (;;)
		{
			auto e = coeff(R);
			if (!e.is_zero() && e.unit_status() == UnitStatus::Unit)
				return e;
		}
	}

	/// g with g(0) = 0, g'(0) a unit and nonzero terms up to `degree`.
	TruncSeries1 coordinate(RingSpec const &R, int order, int degree)
	{
		TruncSeries1 g(R, order);
		g.set(1, unit(R));
		for (int n = 2; n <= std::min(order, degree); ++n)
			g.set(n, coeff(R));
		return g;
	}

	FGObject object(RingSpec const &R, int order, int r)
	{
		auto law0 = small(0, 1) ? fgl_additive(R, order) : fgl_multiplicative(R, order);
		law0 = fgl_transform(law0, CoordinateChange(coordinate(R, order, order)));
		std::vector<CoordinateChange> coords;
		for (int i = 0; i < r; ++i)
			coords.emplace_back(coordinate(R, order, order));
		return FGObject(R, law0, coords);
	}
};

RingSpec f9()
{
	auto F = RingSpec::polynomial(RingSpec::prime_field(3), {"a"});
	return RingSpec::quotient(F, {}, {F.parse("a^2 + 1")});
}

struct Suite
{
	char const *name;
	int cases;
	std::function<bool(Sampler &, int)> check;
};

} // namespace

Report self_test(Options const &options)
{
	Sampler s{std::mt19937_64(options.seed)};
	std::vector<RingSpec> rings{RingSpec::rationals(), RingSpec::prime_field(3), RingSpec::prime_field(5),
	                            RingSpec::localized_integers({2, 3})};
	auto pick = [&](Sampler &smp) { return rings[static_cast<size_t>(smp.small(0, static_cast<int>(rings.size()) - 1))]; };
	int N = std::min(options.order, 8);

	std::vector<Suite> suites{
	    {"formal group law axioms", 12,
	     [&](Sampler &smp, int) {
		     auto R = pick(smp);
		     auto F = fgl_transform(fgl_multiplicative(R, N), CoordinateChange(smp.coordinate(R, N, N)));
		     return fgl_validate(F.series()).valid();
	     }},
	    {"reversion roundtrip", 25,
	     [&](Sampler &smp, int) {
		     auto R = pick(smp);
		     auto g = smp.coordinate(R, N, N);
		     auto h = ps_reverse(g);
		     auto id = TruncSeries1::identity(R, N);
		     return ps_compose(g, h) == id && ps_compose(h, g) == id;
	     }},
	    {"transform composition", 10,
	     [&](Sampler &smp, int) {
		     auto R = pick(smp);
		     auto F = fgl_additive(R, N);
		     auto g = CoordinateChange(smp.coordinate(R, N, N));
		     auto h = CoordinateChange(smp.coordinate(R, N, N));
		     return fgl_transform(fgl_transform(F, g), h) ==
		            fgl_transform(F, CoordinateChange(ps_compose(h.series(), g.series())));
	     }},
	    {"algebra system roundtrip", 10,
	     [&](Sampler &smp, int) {
		     auto R = pick(smp);
		     auto X = smp.object(R, N, smp.small(0, 3));
		     auto S = to_alg_system(X);
		     auto back = from_alg_system(R, S);
		     return back == X && to_alg_system(back) == S;
	     }},
	    {"permutation action", 8,
	     [&](Sampler &smp, int) {
		     auto R = pick(smp);
		     auto X = smp.object(R, N, 2);
		     std::vector<int> sigma{0, 1, 2}, tau{0, 1, 2};
		     std::shuffle(sigma.begin(), sigma.end(), smp.rng);
		     std::shuffle(tau.begin(), tau.end(), smp.rng);
		     std::vector<int> st(3);
		     for (int i = 0; i < 3; ++i)
			     st[static_cast<size_t>(i)] = sigma[static_cast<size_t>(tau[static_cast<size_t>(i)])];
		     return permute_coordinates(permute_coordinates(X, sigma), tau) == permute_coordinates(X, st);
	     }},
	    {"goodness certificates", 8,
	     [&](Sampler &smp, int k) {
		     std::vector<RingSpec> targets{RingSpec::rationals(), RingSpec::prime_field(3), f9(),
		                                   RingSpec::localized_integers({2, 3})};
		     auto T = targets[static_cast<size_t>(k) % targets.size()];
		     int order = 4;
		     auto X = smp.object(T, order, smp.small(0, 2));
		     auto S = MPSurrogate::standard(RingSpec::localized_integers({2}), order, X.r());
		     auto images = surrogate_images(S, classify_map(X));
		     images.resize(S.mp_gens.size(), T.zero());
		     auto base = standard_presentation(T, S.base_ring(), images, options.degree_bound);
		     auto cert = certify_good(X, S, base, options.degree_bound);
		     return cert.validation.verdict == Verdict::Accept;
	     }},
	};

	json results = json::array();
	bool ok = true;
	for (auto const &suite : suites)
	{
		int failures = 0;
		std::string first_error;
		for (int k = 0; k < suite.cases; ++k)
		{
			try
			{
				if (!suite.check(s, k))
					++failures;
			}
			catch (std::exception const &e)
			{
				++failures;
				if (first_error.empty())
					first_error = e.what();
			}
		}
		json entry{{"suite", suite.name}, {"cases", suite.cases}, {"failures", failures}, {"passed", failures == 0}};
		if (!first_error.empty())
			entry["firstError"] = first_error;
		ok = ok && failures == 0;
		results.push_back(entry);
	}
	json doc{{"command", "self-test"},
	         {"anchor", "invariant suites"},
	         {"options", {{"order", options.order}, {"degreeBound", options.degree_bound}, {"seed", options.seed}}},
	         {"result", {{"suites", results}}}};
	int code = ok ? kOk : kViolation;
	doc["exitCode"] = code;
	doc["outcome"] = ok ? "success" : "violation";
	return {doc, code};
}

} // namespace formal::cli
