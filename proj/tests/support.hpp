// Shared generators and brute-force oracles for the test suites.
#ifndef FORMAL_TESTS_SUPPORT_HPP
#define FORMAL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "formal/ring.hpp"
#include "formal/fg_category.hpp"
#include "formal/lrq.hpp"
#include "formal/series.hpp"

namespace formal::testing
{

/// Every element of a finite ring, by enumerating F_p-combinations of the
/// standard monomials. Independent of the ring's own unit/zero-divisor logic.
inline std::vector<Element> enumerate(RingSpec const &ring)
{
	auto basis = ring.standard_monomials();
	unsigned long p = ring.core().prime();
	std::vector<Element> out;
	std::vector<unsigned long> digits(basis.size(), 0);
	for (;;)
	{
		Poly poly;
		for (size_t i = 0; i < basis.size(); ++i)
			if (digits[i])
				poly.terms.push_back(Term{basis[i], Rational(digits[i])});
		out.push_back(ring.make(poly));
		size_t i = 0;
		while (i < digits.size() && ++digits[i] == p)
			digits[i++] = 0;
		if (i == digits.size())
			break;
	}
	return out;
}

inline bool brute_force_unit(Element const &e, std::vector<Element> const &all)
{
	for (auto const &b : all)
		if ((e * b).is_one())
			return true;
	return false;
}

inline bool brute_force_zero_divisor(Element const &e, std::vector<Element> const &all)
{
	for (auto const &b : all)
		if (!b.is_zero() && (e * b).is_zero())
			return true;
	return false;
}

/// Small random coefficient that lies in the core of `ring`.
inline Rational random_coeff(RingSpec const &ring, std::mt19937_64 &rng, int bound = 3)
{
	std::uniform_int_distribution<int> num(-bound, bound);
	Rational q = num(rng);
	auto const &core = ring.core();
	if (core.kind() == Core::Kind::Rationals && rng() % 3 == 0)
		q /= Rational(1 + static_cast<int>(rng() % 4));
	else if (core.kind() == Core::Kind::LocalizedIntegers && rng() % 3 == 0)
		q /= Rational(static_cast<long>(core.inverted_primes()[rng() % core.inverted_primes().size()]));
	return core.normalize(q);
}

/// Random element: combination of up to `terms` standard monomials times
/// small powers of the free variables.
inline Element random_element(RingSpec const &ring, std::mt19937_64 &rng, int terms = 3)
{
	auto basis = ring.standard_monomials();
	auto free = ring.free_vars();
	Poly poly;
	int n = 1 + static_cast<int>(rng() % terms);
	for (int i = 0; i < n; ++i)
	{
		Exponents e = basis[rng() % basis.size()];
		for (int v : free)
			e[v] = static_cast<int>(rng() % 3) - (ring.is_laurent(v) ? 1 : 0);
		poly.terms.push_back(Term{e, random_coeff(ring, rng)});
	}
	return ring.make(poly);
}

/// Random series whose coefficients below degree `from` are zero.
inline TruncSeries1 random_series(RingSpec const &ring, int order, std::mt19937_64 &rng, int from)
{
	TruncSeries1 s(ring, order);
	for (int n = from; n <= order; ++n)
		if (rng() % 4 != 0)
			s.set(n, random_element(ring, rng, 2));
	return s;
}

/// Random unit of the core (nonzero small integer times inverted primes).
inline Rational random_unit(RingSpec const &ring, std::mt19937_64 &rng)
{
	auto const &core = ring.core();
	for (;;)
	{
		Rational q = random_coeff(ring, rng, 4);
		if (q != 0 && core.is_unit(q))
			return q;
	}
}

/// Random coordinate change: g(0) = 0, g'(0) a unit of the core.
inline TruncSeries1 random_coordinate(RingSpec const &ring, int order, std::mt19937_64 &rng)
{
	auto s = random_series(ring, order, rng, 2);
	s.set(1, ring.from_rational(random_unit(ring, rng)));
	return s;
}

/// Random object: a transformed additive or multiplicative law with r
/// random coordinates.
inline FGObject random_object(RingSpec const &ring, int order, int r, std::mt19937_64 &rng)
{
	auto law = rng() % 2 ? fgl_additive(ring, order) : fgl_multiplicative(ring, order);
	law = fgl_transform(law, CoordinateChange(random_coordinate(ring, order, rng)));
	std::vector<CoordinateChange> coords;
	for (int i = 0; i < r; ++i)
		coords.emplace_back(random_coordinate(ring, order, rng));
	return FGObject(ring, law, coords);
}


/// Random core among Q, Z[1/2], Z[1/6], F_3, F_5.
inline RingSpec random_core(std::mt19937_64 &rng)
{
	switch (rng() % 5)
	{
	case 0: return RingSpec::rationals();
	case 1: return RingSpec::localized_integers({2});
	case 2: return RingSpec::localized_integers({2, 3});
	case 3: return RingSpec::prime_field(3);
	default: return RingSpec::prime_field(5);
	}
}

struct LrqPair
{
	LRQPresentation inner;
	LRQPresentation outer; // over inner.result()
};

/// Triangular inner/outer presentations over core[x1..x4]. Inner leads two
/// variables, outer leads a third; the fourth stays free and may be inverted.
inline LrqPair random_lrq_pair(std::mt19937_64 &rng)
{
	auto core = random_core(rng);
	std::vector<std::string> names{"x1", "x2", "x3", "x4"};
	auto base = RingSpec::polynomial(core, names);
	std::vector<int> perm{0, 1, 2, 3};
	std::shuffle(perm.begin(), perm.end(), rng);
	int a = perm[0], b = perm[1], c = -1, w = perm[3];
	auto mono = [&](Exponents e, Rational q) {
		Poly p;
		p.terms.push_back(Term{std::move(e), q});
		return p;
	};
	auto unit = [&](RingSpec const &R) {
		Rational q = 0;
		while (q == 0 || R.core().is_unit(q) == false)
			q = random_coeff(R, rng, 2);
		return q;
	};
	// `lowest` bounds the exponent of the first variable only
	auto tail = [&](RingSpec const &R, std::vector<int> const &vars, int lowest) {
		Poly p;
		int n = static_cast<int>(rng() % 3);
		for (int i = 0; i < n; ++i)
		{
			Exponents e(4, 0);
			for (int v : vars)
				e[v] = (v == vars[0] ? lowest : 0) + static_cast<int>(rng() % 3);
			p.terms.push_back(Term{e, random_coeff(R, rng)});
		}
		return p;
	};

	LrqPair out{LRQPresentation::identity(base), LRQPresentation::identity(base)};
	bool invert_w = rng() % 2 == 0;
	if (invert_w)
	{
		Exponents e(4, 0);
		e[w] = 1;
		out.inner.inverted.elements.push_back(base.make(mono(e, 1)));
	}
	// b's relation uses only w, a's relation may use b
	Exponents eb(4, 0);
	eb[b] = 1 + static_cast<int>(rng() % 2);
	Poly pb = mono(eb, unit(base));
	base.normalize(pb);
	Poly tb = tail(base, {w}, 0);
	out.inner.sequence.push_back(base.make(base.add(pb, tb)));
	Exponents ea(4, 0);
	ea[a] = 1 + static_cast<int>(rng() % 2);
	Poly ta = tail(base, {w, b}, 0);
	Poly pa = mono(ea, 1);
	out.inner.sequence.push_back(base.make(base.add(pa, ta)));

	auto mid = out.inner.result();
	// the lead choice is the ring's; pick w and c among the variables left free
	auto free = mid.free_vars();
	if (!mid.is_laurent(w) || std::find(free.begin(), free.end(), w) == free.end())
	{
		std::shuffle(free.begin(), free.end(), rng);
		w = free[0];
	}
	c = free[0] == w ? free[1] : free[0];
	a = mid.leading_vars()[0];
	out.outer = LRQPresentation::identity(mid);
	bool invert_3 = core.core().kind() == Core::Kind::LocalizedIntegers && !core.core().is_unit(3) && rng() % 2 == 0;
	if (invert_3)
		out.outer.inverted.elements.push_back(mid.from_rational(3));
	Exponents ew(4, 0);
	ew[w] = 1;
	if (!mid.is_laurent(w) && rng() % 2 == 0)
		out.outer.inverted.elements.push_back(mid.make(mono(ew, 1)));
	Exponents ec(4, 0);
	ec[c] = 1 + static_cast<int>(rng() % 2);
	Poly pc = mono(ec, unit(mid));
	// keep the outer relation triangular in c: a may enter only if its normal form avoids c
	std::vector<int> tail_vars{w};
	auto a_form = mid.var(a).poly().terms;
	if (std::none_of(a_form.begin(), a_form.end(), [&](Term const &t) { return t.exps[c] != 0; }))
		tail_vars.push_back(a);
	Poly tc = tail(mid, tail_vars, mid.is_laurent(w) ? -1 : 0);
	out.outer.sequence.push_back(mid.make(pc) + mid.make(tc));
	return out;
}

} // namespace formal::testing

#endif
