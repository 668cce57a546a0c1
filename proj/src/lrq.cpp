#include "formal/lrq.hpp"

#include <algorithm>

#include "fp_linalg.hpp"

namespace formal
{

char const *to_string(Verdict v)
{
	switch (v)
	{
	case Verdict::Accept: return "accept";
	case Verdict::Reject: return "reject";
	case Verdict::Unknown: return "unknown";
	}
	return "?";
}

LRQPresentation LRQPresentation::identity(RingSpec const &base) { return {base, {}, {}}; }

RingSpec LRQPresentation::result() const { return RingSpec::quotient(base, inverted, sequence); }

namespace
{

std::optional<unsigned long> combine_markers(std::optional<unsigned long> a,
                                             std::optional<unsigned long> b)
{
	if (!a)
		return b;
	if (!b)
		return a;
	// integers prime to p and to q (p != q) together generate every nonzero integer
	return *a == *b ? *a : 0UL;
}

/// Lead variable of the relation added when going from `before` to `after`.
std::string new_lead(RingSpec const &before, RingSpec const &after)
{
	auto old = before.leading_vars();
	for (int v : after.leading_vars())
		if (std::find(old.begin(), old.end(), v) == old.end())
			return after.vars()[static_cast<size_t>(v)];
	return "";
}

struct FiniteCheck
{
	bool zero_divisor;
	Element witness; // annihilator, or inverse
};

FiniteCheck finite_check(RingSpec const &ring, Element const &e)
{
	auto m = ring.multiplication_matrix(e.poly());
	std::uint64_t p = ring.core().prime();
	std::vector<fp::Vec> rows;
	for (auto const &row : *m)
	{
		fp::Vec r;
		for (auto const &entry : row)
		{
			Rational c = entry.is_zero() ? Rational(0) : entry.terms[0].coeff;
			r.push_back(c.get_num().get_ui() % p);
		}
		rows.push_back(std::move(r));
	}
	if (auto x = fp::kernel_vector(rows, p))
	{
		auto basis = ring.standard_monomials();
		Poly b;
		for (size_t i = 0; i < basis.size(); ++i)
			if ((*x)[i] != 0)
				b.terms.push_back(Term{basis[i], Rational(static_cast<unsigned long>((*x)[i]))});
		Element w = ring.make(b);
		if (!(e * w).is_zero())
			fail(ErrorKind::InvalidArgument, "internal: annihilator witness check failed");
		return {true, w};
	}
	return {false, e.inverse()};
}

} // namespace

LRQValidation lrq_validate(LRQPresentation const &P)
{
	LRQValidation out{Verdict::Accept, -1, "", {}, std::nullopt};
	InvertedSet upfront;
	upfront.integers_prime_to = P.inverted.integers_prime_to;
	bool deferred = false;
	for (auto const &e : P.inverted.elements)
	{
		require_same_ring(e.ring(), P.base, "inverted element");
		if (e.poly().terms.size() == 1)
			upfront.elements.push_back(e);
		else
			deferred = true;
	}
	std::optional<RingSpec> ring;
	try
	{
		ring = RingSpec::quotient(P.base, upfront, {});
	}
	catch (AlgebraError const &err)
	{
		if (err.kind() == ErrorKind::ZeroRing)
			out.verdict = Verdict::Reject;
		else if (err.kind() == ErrorKind::UnsupportedLocalisation ||
		         err.kind() == ErrorKind::UnitUnknown)
			out.verdict = Verdict::Unknown;
		else
			throw;
		out.reason = std::string("localisation: ") + err.what();
		return out;
	}

	bool stuck = false;   // the running quotient is no longer representable
	int first_unknown = -1;
	auto unknown = [&](int k, StepReport step) {
		step.outcome = Verdict::Unknown;
		if (first_unknown < 0)
		{
			first_unknown = k;
			out.reason = "step " + std::to_string(k + 1) + ": " + step.detail;
		}
		out.steps.push_back(std::move(step));
	};
	auto reject = [&](int k, StepReport step) {
		step.outcome = Verdict::Reject;
		out.verdict = Verdict::Reject;
		out.failing_step = k;
		out.reason = "step " + std::to_string(k + 1) + " (" + step.element + "): " + step.detail;
		out.steps.push_back(std::move(step));
	};
	// zero-divisors before localising at deferred elements may become regular
	auto reject_or_unknown = [&](int k, StepReport step) {
		if (deferred)
		{
			step.detail += " before inverting the non-monomial elements";
			unknown(k, std::move(step));
		}
		else
			reject(k, std::move(step));
	};

	for (size_t i = 0; i < P.sequence.size(); ++i)
	{
		int k = static_cast<int>(i);
		require_same_ring(P.sequence[i].ring(), P.base, "sequence element");
		StepReport step{k, P.sequence[i].to_string(), "", Verdict::Accept, ""};
		if (stuck)
		{
			step.method = "skipped";
			step.detail = "preceding quotient is not a triangular quotient";
			unknown(k, std::move(step));
			continue;
		}
		Element e = ring->make(P.sequence[i].poly());
		switch (ring->classify_relation(e))
		{
		case RelationKind::Zero:
			step.method = "zero";
			step.detail = "reduces to 0 modulo the preceding elements, a zero-divisor";
			reject(k, std::move(step));
			return out;
		case RelationKind::Unit:
			step.method = "unit";
			step.detail = "is a unit, so the quotient is the zero ring";
			reject(k, std::move(step));
			return out;
		case RelationKind::Characteristic:
		case RelationKind::Triangular:
		{
			bool characteristic = ring->classify_relation(e) == RelationKind::Characteristic;
			step.method = characteristic ? "characteristic" : "triangular";
			try
			{
				auto next = RingSpec::quotient(*ring, {}, {e});
				step.detail = characteristic
				                  ? "prime " + std::to_string(next.core().prime()) + " over an integral core"
				                  : "monic in " + new_lead(*ring, next);
				ring = next;
				out.steps.push_back(std::move(step));
			}
			catch (AlgebraError const &err)
			{
				if (err.kind() != ErrorKind::UnsupportedLocalisation &&
				    err.kind() != ErrorKind::UnitUnknown)
					throw;
				step.detail = err.what();
				stuck = true;
				unknown(k, std::move(step));
			}
			break;
		}
		case RelationKind::NonTriangular:
		{
			if (ring->cardinality())
			{
				step.method = "finite";
				auto fc = finite_check(*ring, e);
				if (fc.zero_divisor)
				{
					step.detail = "zero-divisor: (" + e.to_string() + ")*(" + fc.witness.to_string() + ") = 0";
					reject_or_unknown(k, std::move(step));
				}
				else
				{
					step.detail = "unit with inverse " + fc.witness.to_string() +
					              ", so the quotient is the zero ring";
					reject(k, std::move(step));
				}
				if (out.verdict == Verdict::Reject)
					return out;
				stuck = true;
				break;
			}
			step.method = "determinant";
			switch (ring->regularity(e.poly()))
			{
			case Regularity::ZeroDivisor:
				step.detail = "multiplication matrix has determinant 0: a zero-divisor";
				reject_or_unknown(k, std::move(step));
				if (out.verdict == Verdict::Reject)
					return out;
				stuck = true;
				break;
			case Regularity::Unknown:
				step.detail = "rank too large to decide regularity";
				stuck = true;
				unknown(k, std::move(step));
				break;
			case Regularity::Regular:
				switch (e.unit_status())
				{
				case UnitStatus::Unit:
					step.detail = "is a unit, so the quotient is the zero ring";
					reject(k, std::move(step));
					return out;
				case UnitStatus::Unknown:
					step.detail = "regular, but unit status undecidable";
					stuck = true;
					unknown(k, std::move(step));
					break;
				case UnitStatus::NotUnit:
					step.detail = "nonzero determinant: regular (quotient not triangular)";
					out.steps.push_back(std::move(step));
					stuck = true;
					break;
				}
				break;
			}
			break;
		}
		}
	}
	if (first_unknown >= 0)
	{
		out.verdict = Verdict::Unknown;
		out.failing_step = first_unknown;
		return out;
	}
	if (stuck)
	{
		out.reason = "every element is regular; the final quotient is not a triangular quotient";
		return out;
	}
	try
	{
		out.result = P.result();
	}
	catch (AlgebraError const &err)
	{
		if (err.kind() == ErrorKind::ZeroRing)
			out.verdict = Verdict::Reject;
		else if (err.kind() == ErrorKind::UnsupportedLocalisation ||
		         err.kind() == ErrorKind::UnitUnknown)
			out.verdict = Verdict::Unknown;
		else
			throw;
		out.reason = std::string("final quotient: ") + err.what();
		return out;
	}
	out.reason = "every element is regular modulo its predecessors";
	return out;
}

bool same_quotient(RingSpec const &a, RingSpec const &b)
{
	if (a.vars() != b.vars())
		return false;
	std::vector<Element> ab, ba;
	for (size_t v = 0; v < a.vars().size(); ++v)
	{
		ab.push_back(b.var(static_cast<int>(v)));
		ba.push_back(a.var(static_cast<int>(v)));
	}
	try
	{
		RingHom(a, b, ab);
		RingHom(b, a, ba);
	}
	catch (AlgebraError const &)
	{
		return false;
	}
	return true;
}

std::pair<Element, Element> clear_to_base(Element const &e, RingSpec const &base)
{
	auto const &R = e.ring();
	if (R.vars() != base.vars())
		fail(ErrorKind::RingMismatch, "cannot lift from " + R.describe() + " to " + base.describe());
	size_t n = R.vars().size();
	Exponents shift(n, 0);
	Integer d = 1;
	for (auto const &t : e.poly().terms)
	{
		for (size_t v = 0; v < n; ++v)
			shift[v] = std::max(shift[v], -t.exps[v]);
		Integer den = t.coeff.get_den();
		if (den == 1)
			continue;
		for (unsigned long q : prime_factors(den))
		{
			if (base.core().is_unit(Rational(q)))
				continue;
			while (mpz_divisible_ui_p(den.get_mpz_t(), q))
			{
				den /= q;
				if (!mpz_divisible_ui_p(d.get_mpz_t(), q))
					d *= q;
			}
		}
	}
	// d must absorb the largest power of each prime appearing in a denominator
	for (auto const &t : e.poly().terms)
	{
		Rational c = t.coeff * Rational(d);
		while (!base.core().contains(c))
		{
			Integer den = c.get_den();
			Integer g = 1;
			for (unsigned long q : prime_factors(den))
				if (!base.core().is_unit(Rational(q)))
					g *= q;
			d *= g;
			c = t.coeff * Rational(d);
		}
	}
	Poly raw;
	for (auto const &t : e.poly().terms)
	{
		Exponents x = t.exps;
		for (size_t v = 0; v < n; ++v)
			x[v] += shift[v];
		Rational c = t.coeff * Rational(d);
		if (R.core().kind() == Core::Kind::PrimeField && base.core().kind() != Core::Kind::PrimeField)
		{
			// symmetric residue
			long p = static_cast<long>(R.core().prime());
			long v = static_cast<long>(c.get_num().get_si() % p);
			c = 2 * v > p ? v - p : v;
		}
		raw.terms.push_back(Term{std::move(x), c});
	}
	Poly u;
	u.terms.push_back(Term{shift, Rational(d)});
	Element unit = R.make(u);
	Element lift = base.make(raw);
	return {lift, unit};
}

Composition lrq_compose(LRQPresentation const &outer, LRQPresentation const &inner)
{
	auto vi = lrq_validate(inner);
	if (vi.verdict != Verdict::Accept || !vi.result)
		fail(ErrorKind::InvalidArgument, "inner presentation does not validate: " + vi.reason);
	require_same_ring(outer.base, *vi.result, "outer presentation base");
	auto vo = lrq_validate(outer);
	if (vo.verdict != Verdict::Accept)
		fail(ErrorKind::InvalidArgument, "outer presentation does not validate: " + vo.reason);

	Composition c{LRQPresentation{inner.base, inner.inverted, inner.sequence}, {}};
	c.presentation.inverted.integers_prime_to =
	    combine_markers(inner.inverted.integers_prime_to, outer.inverted.integers_prime_to);
	for (auto const &e : outer.inverted.elements)
		c.presentation.inverted.elements.push_back(clear_to_base(e, inner.base).first);
	for (auto const &e : outer.sequence)
	{
		auto [lift, unit] = clear_to_base(e, inner.base);
		c.presentation.sequence.push_back(lift);
		c.factors.push_back(unit);
	}
	return c;
}

namespace
{

bool is_plain_polynomial(RingSpec const &R)
{
	if (!R.relations().empty())
		return false;
	for (size_t v = 0; v < R.vars().size(); ++v)
		if (R.is_laurent(static_cast<int>(v)))
			return false;
	return R.kind() == RingSpec::Kind::PolynomialRing || R.vars().empty();
}

} // namespace

Tensor lrq_tensor(LRQPresentation const &P, LRQPresentation const &Q)
{
	if (!is_plain_polynomial(P.base) || !is_plain_polynomial(Q.base))
		fail(ErrorKind::InvalidArgument, "tensor needs presentations over polynomial rings");
	if (!(P.base.core() == Q.base.core()))
		fail(ErrorKind::RingMismatch, "coefficient rings differ: " + P.base.core().describe() +
		                                  " vs " + Q.base.core().describe());
	Tensor t{LRQPresentation::identity(P.base), {}};
	std::vector<std::string> vars = P.base.vars();
	std::vector<std::string> qnames;
	for (auto const &v : Q.base.vars())
	{
		std::string name = v;
		for (int k = 2; std::find(vars.begin(), vars.end(), name) != vars.end(); ++k)
			name = v + "_" + std::to_string(k);
		if (name != v)
			t.renamed[v] = name;
		vars.push_back(name);
		qnames.push_back(name);
	}
	auto joint = RingSpec::polynomial(RingSpec::from_core(P.base.core()), vars);
	std::vector<Element> pimg, qimg;
	for (auto const &v : P.base.vars())
		pimg.push_back(joint.var(v));
	for (auto const &v : qnames)
		qimg.push_back(joint.var(v));
	RingHom hp(P.base, joint, pimg), hq(Q.base, joint, qimg);

	auto &out = t.presentation;
	out.base = joint;
	out.inverted.integers_prime_to =
	    combine_markers(P.inverted.integers_prime_to, Q.inverted.integers_prime_to);
	for (auto const &e : P.inverted.elements)
		out.inverted.elements.push_back(hp.apply(e));
	for (auto const &e : Q.inverted.elements)
		out.inverted.elements.push_back(hq.apply(e));
	for (auto const &e : P.sequence)
		out.sequence.push_back(hp.apply(e));
	for (auto const &e : Q.sequence)
		out.sequence.push_back(hq.apply(e));
	return t;
}

FreeModuleCheck free_module_certificate(LRQPresentation const &A, FreeAlgebra const &B)
{
	RingSpec R = A.result();
	size_t n = B.basis.size();
	auto violation = [](std::vector<int> triple, std::string msg) {
		return FreeModuleCheck{false, std::move(triple), std::move(msg)};
	};
	auto I = [](size_t i) { return static_cast<int>(i); };
	if (n == 0 || B.unit >= n)
		return violation({-1, -1, -1}, "basis is empty or the unit index is out of range");
	if (B.table.size() != n)
		return violation({-1, -1, -1}, "multiplication table has the wrong number of rows");
	for (size_t i = 0; i < n; ++i)
	{
		if (B.table[i].size() != n)
			return violation({I(i), -1, -1}, "multiplication table row has the wrong length");
		for (size_t j = 0; j < n; ++j)
		{
			if (B.table[i][j].size() != n)
				return violation({I(i), I(j), -1}, "product does not close over the basis");
			for (auto const &c : B.table[i][j])
				if (c.ring() != R)
					return violation({I(i), I(j), -1}, "coefficient outside the result ring");
		}
	}
	auto basis_vec = [&](size_t k) {
		std::vector<Element> v(n, R.zero());
		v[k] = R.one();
		return v;
	};
	// product of e_i with a coefficient vector
	auto times = [&](std::vector<Element> const &u, size_t k, bool left) {
		std::vector<Element> acc(n, R.zero());
		for (size_t l = 0; l < n; ++l)
		{
			if (u[l].is_zero())
				continue;
			auto const &prod = left ? B.table[k][l] : B.table[l][k];
			for (size_t m = 0; m < n; ++m)
				acc[m] = acc[m] + u[l] * prod[m];
		}
		return acc;
	};
	for (size_t j = 0; j < n; ++j)
		if (B.table[B.unit][j] != basis_vec(j) || B.table[j][B.unit] != basis_vec(j))
			return violation({I(B.unit), I(j), -1}, "unit law fails for " + B.basis[j]);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = i + 1; j < n; ++j)
			if (B.table[i][j] != B.table[j][i])
				return violation({I(i), I(j), -1},
				                 "not commutative: " + B.basis[i] + "*" + B.basis[j]);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j)
			for (size_t k = 0; k < n; ++k)
				if (times(B.table[i][j], k, false) != times(B.table[j][k], i, true))
					return violation({I(i), I(j), I(k)}, "not associative: (" + B.basis[i] + "*" +
					                                         B.basis[j] + ")*" + B.basis[k]);
	if (!B.declared)
		return FreeModuleCheck{true, {}, "table is unital, commutative and associative"};

	auto const &D = *B.declared;
	if (!B.structure || B.basis_elements.size() != n)
		return violation({-1, -1, -1}, "declared ring needs a structure map and basis elements");
	auto const &phi = *B.structure;
	require_same_ring(phi.source(), R, "structure map source");
	require_same_ring(phi.target(), D, "structure map target");
	if (!B.basis_elements[B.unit].is_one())
		return violation({I(B.unit), -1, -1}, "declared unit basis element is not 1");
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j)
		{
			Element expect = D.zero();
			for (size_t k = 0; k < n; ++k)
				expect = expect + phi.apply(B.table[i][j][k]) * B.basis_elements[k];
			if (B.basis_elements[i] * B.basis_elements[j] != expect)
				return violation({I(i), I(j), -1}, "table disagrees with the declared ring: " +
				                                       B.basis[i] + "*" + B.basis[j] + " = " +
				                                       (B.basis_elements[i] * B.basis_elements[j]).to_string());
		}
	// freeness, decided by dimension count over F_p for finite rings
	auto card_r = R.cardinality();
	auto card_d = D.cardinality();
	if (!card_r || !card_d)
		return FreeModuleCheck{true, {}, "table consistent with the declared ring; freeness not checked (infinite rings)"};
	std::uint64_t p = D.core().prime();
	auto dbasis = D.standard_monomials();
	auto rbasis = R.standard_monomials();
	fp::Span span(p, dbasis.size());
	for (size_t i = 0; i < n; ++i)
		for (auto const &m : rbasis)
		{
			Poly mono;
			mono.terms.push_back(Term{m, 1});
			Element v = phi.apply(R.make(mono)) * B.basis_elements[i];
			fp::Vec vec(dbasis.size(), 0);
			for (auto const &t : v.poly().terms)
			{
				auto it = std::lower_bound(dbasis.begin(), dbasis.end(), t.exps);
				vec[static_cast<size_t>(it - dbasis.begin())] = t.coeff.get_num().get_ui() % p;
			}
			span.insert(vec);
		}
	if (span.size() != rbasis.size() * n || span.size() != dbasis.size())
		return violation({-1, -1, -1}, "basis does not freely span the declared ring");
	return FreeModuleCheck{true, {}, "free with the given basis; table consistent with the declared ring"};
}

} // namespace formal
