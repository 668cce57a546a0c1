#include "formal/certify.hpp"

#include "field_tower.hpp"

namespace formal
{

namespace
{

constexpr size_t kFieldCheckLimit = 100000;

/// Part of the denominator of q made of primes that are not units in `core`.
Integer uncleared_denominator(Rational const &q, Core const &core)
{
	Integer d = 1;
	Integer den = q.get_den();
	if (den == 1)
		return d;
	for (unsigned long p : prime_factors(den))
		if (!core.is_unit(Rational(p)))
			while (mpz_divisible_ui_p(den.get_mpz_t(), p))
			{
				den /= p;
				d *= p;
			}
	return d;
}

RingHom embed_by_name(RingSpec const &from, RingSpec const &to)
{
	std::vector<Element> images;
	for (auto const &v : from.vars())
		images.push_back(to.var(v));
	return RingHom(from, to, images);
}

/// The target as a free algebra over the subfield generated so far.
FreeAlgebra build_extension(detail::FieldTower const &tower, RingSpec const &target,
                            RingSpec const &result, RingHom const &to_target)
{
	unsigned long p = tower.prime();
	size_t n = tower.field_dimension();
	FreeAlgebra B;
	fp::Span span(p, n);
	std::vector<std::pair<size_t, size_t>> index; // (basis element, subfield basis)
	auto add = [&](Element const &e, std::string name) {
		size_t before = span.size();
		for (size_t l = 0; l < tower.dimension(); ++l)
			if (span.insert(tower.vec(tower.basis()[l] * e)))
				index.emplace_back(B.basis_elements.size(), l);
		if (span.size() == before)
			return;
		B.basis.push_back(std::move(name));
		B.basis_elements.push_back(e);
	};
	add(target.one(), "1");
	for (auto const &m : target.standard_monomials())
	{
		Poly mono;
		mono.terms.push_back(Term{m, 1});
		Element e = target.make(mono);
		add(e, e.to_string());
	}
	size_t k = B.basis.size();
	B.table.assign(k, std::vector<std::vector<Element>>(k));
	for (size_t i = 0; i < k; ++i)
		for (size_t j = 0; j < k; ++j)
		{
			auto combo = span.solve(tower.vec(B.basis_elements[i] * B.basis_elements[j]));
			std::vector<detail::Word> parts(k);
			for (size_t c = 0; c < combo->size(); ++c)
			{
				if ((*combo)[c] == 0)
					continue;
				auto [slot, l] = index[c];
				for (auto const &[e, coeff] : tower.basis_words()[l])
				{
					auto padded = e;
					padded.resize(tower.names().size(), 0);
					long &dst = parts[slot][padded];
					dst = detail::symmetric(static_cast<std::uint64_t>(
					                            ((dst + coeff * detail::symmetric((*combo)[c], p)) %
					                                 static_cast<long>(p) +
					                             static_cast<long>(p))),
					                        p);
				}
			}
			for (size_t slot = 0; slot < k; ++slot)
				B.table[i][j].push_back(detail::word_element(result, tower.names(), parts[slot]));
		}
	B.declared = target;
	B.structure = to_target;
	return B;
}

void check_witnesses(RingHom const &to, RingHom const &from)
{
	auto const &res = to.source();
	auto const &tgt = to.target();
	for (size_t v = 0; v < res.vars().size(); ++v)
		if (from.apply(to.apply(res.var(static_cast<int>(v)))) != res.var(static_cast<int>(v)))
			fail(ErrorKind::InvalidArgument, "witness maps do not fix " + res.vars()[v]);
	for (size_t v = 0; v < tgt.vars().size(); ++v)
		if (to.apply(from.apply(tgt.var(static_cast<int>(v)))) != tgt.var(static_cast<int>(v)))
			fail(ErrorKind::InvalidArgument, "witness maps do not fix " + tgt.vars()[v]);
}

} // namespace

MPSurrogate MPSurrogate::standard(RingSpec const &core, int N, int r)
{
	MPSurrogate S{core, {}, {}};
	for (int d = 2; d <= N; ++d)
		for (int i = 1; 2 * i <= d; ++i)
			S.mp_gens.push_back("a" + std::to_string(i) + "_" + std::to_string(d - i));
	for (int j = 1; j <= r; ++j)
	{
		std::vector<std::string> block;
		for (int k = 1; k <= N; ++k)
			block.push_back("u" + std::to_string(j) + "_" + std::to_string(k));
		S.u_blocks.push_back(std::move(block));
	}
	return S;
}

RingSpec MPSurrogate::base_ring() const { return RingSpec::polynomial(core, mp_gens); }

RingSpec MPSurrogate::full_ring() const
{
	auto names = mp_gens;
	for (auto const &block : u_blocks)
		names.insert(names.end(), block.begin(), block.end());
	return RingSpec::polynomial(core, names);
}

std::vector<std::pair<int, int>> MPSurrogate::law_indices() const
{
	std::vector<std::pair<int, int>> out;
	for (int d = 2; out.size() < mp_gens.size(); ++d)
		for (int i = 1; 2 * i <= d && out.size() < mp_gens.size(); ++i)
			out.emplace_back(i, d - i);
	return out;
}

std::vector<Element> surrogate_images(MPSurrogate const &S, ClassifyingTable const &table)
{
	std::vector<Element> out;
	for (auto const &idx : S.law_indices())
	{
		auto it = table.law.find(idx);
		if (it == table.law.end())
			fail(ErrorKind::InvalidArgument, "the classifying table has no coefficient a" +
			                                     std::to_string(idx.first) + "_" + std::to_string(idx.second) +
			                                     "; raise the truncation order");
		out.push_back(it->second);
	}
	if (static_cast<size_t>(S.r()) > table.isos.size())
		fail(ErrorKind::InvalidArgument, "surrogate has more u-blocks than the object has coordinates");
	for (size_t j = 0; j < S.u_blocks.size(); ++j)
	{
		auto const &f = table.isos[j];
		if (static_cast<int>(S.u_blocks[j].size()) > f.order())
			fail(ErrorKind::InvalidArgument, "u-block " + std::to_string(j + 1) + " exceeds the truncation order");
		for (size_t k = 0; k < S.u_blocks[j].size(); ++k)
			out.push_back(f.coeff(static_cast<int>(k) + 1));
	}
	return out;
}

StandardPresentation standard_presentation(RingSpec const &target, RingSpec const &base,
                                           std::vector<Element> const &images, int degree_bound)
{
	if (base.kind() != RingSpec::Kind::PolynomialRing || !base.relations().empty() ||
	    base.core().kind() != Core::Kind::LocalizedIntegers)
		fail(ErrorKind::InvalidArgument, "generator ring must be a polynomial ring over Z[1/2]");
	for (size_t v = 0; v < base.vars().size(); ++v)
		if (base.is_laurent(static_cast<int>(v)))
			fail(ErrorKind::InvalidArgument, "generator ring must not invert variables");
	if (images.size() != base.vars().size())
		fail(ErrorKind::InvalidArgument, "expected " + std::to_string(base.vars().size()) + " images, got " +
		                                     std::to_string(images.size()));
	for (auto const &a : images)
		require_same_ring(a.ring(), target, "generator image");

	StandardPresentation out{LRQPresentation::identity(base), target, images, "", std::nullopt, std::nullopt,
	                         std::nullopt};
	auto &P = out.presentation;
	auto const &core = target.core();
	std::optional<detail::FieldTower> tower;
	if (target.vars().empty() && core.kind() != Core::Kind::PrimeField)
	{
		std::vector<Integer> witnesses;
		switch (core.kind())
		{
		case Core::Kind::LocalizedIntegers:
		{
			out.kind = "localized-integers";
			Integer n = 1;
			for (unsigned long p : core.inverted_primes())
				if (!base.core().is_unit(Rational(p)))
					n *= p;
			if (n != 1)
				P.inverted.elements.push_back(base.from_rational(Rational(n)));
			break;
		}
		case Core::Kind::LocalAtPrime:
			out.kind = "local";
			P.inverted.integers_prime_to = core.prime();
			break;
		default:
			out.kind = "rationals";
			P.inverted.integers_prime_to = 0UL;
			break;
		}
		for (size_t k = 0; k < images.size(); ++k)
		{
			Rational a = *images[k].constant_value();
			Integer d = uncleared_denominator(a, base.core());
			if (d != 1 && out.kind != "localized-integers" &&
			    std::find(witnesses.begin(), witnesses.end(), d) == witnesses.end())
			{
				witnesses.push_back(d);
				P.inverted.elements.push_back(base.from_rational(Rational(d)));
			}
			P.sequence.push_back(base.var(static_cast<int>(k)) * base.from_rational(Rational(d)) -
			                     base.from_rational(a * Rational(d)));
		}
	}
	else if (core.kind() == Core::Kind::PrimeField && target.free_vars().empty())
	{
		if (!detail::is_finite_field(target, kFieldCheckLimit))
			fail(ErrorKind::InvalidArgument, target.describe() + " is not a field");
		out.kind = "finite-field";
		unsigned long p = core.prime();
		P.inverted.integers_prime_to = p;
		P.sequence.push_back(base.from_rational(Rational(p)));
		tower.emplace(target, degree_bound);
		for (size_t k = 0; k < images.size(); ++k)
			P.sequence.push_back(
			    detail::word_element(base, tower->names(), tower->adjoin(base.vars()[k], images[k]).lift));
	}
	else
		fail(ErrorKind::InvalidArgument,
		     target.describe() + " is not a supported standard ring (Z[1/2n], Z_(p), Q or a finite field)");

	auto v = lrq_validate(P);
	if (v.verdict != Verdict::Accept || !v.result)
		fail(ErrorKind::InvalidArgument, "standard presentation failed to validate: " + v.reason);
	RingSpec result = *v.result;
	std::vector<Element> to_images;
	for (auto const &a : images)
		to_images.push_back(a);
	out.to_target = RingHom(result, target, to_images);
	if (!tower)
		out.from_target = RingHom(target, result, {});
	else if (tower->dimension() == tower->field_dimension())
	{
		std::vector<Element> from_images;
		for (size_t v2 = 0; v2 < target.vars().size(); ++v2)
			from_images.push_back(
			    detail::word_element(result, tower->names(), tower->preimage(target.var(static_cast<int>(v2)))));
		out.from_target = RingHom(target, result, from_images);
	}
	else
		out.extension = build_extension(*tower, target, result, *out.to_target);
	if (out.from_target)
		check_witnesses(*out.to_target, *out.from_target);
	return out;
}

GoodnessCertificate certify_good(FGObject const &X, MPSurrogate const &S,
                                 StandardPresentation const &base, int degree_bound)
{
	auto const &target = X.base;
	require_same_ring(base.target, target, "standard presentation target");
	if (base.presentation.base.vars() != S.mp_gens)
		fail(ErrorKind::InvalidArgument, "presentation generators differ from the surrogate's mp generators");
	auto images = surrogate_images(S, classify_map(X));
	for (size_t k = 0; k < S.mp_gens.size(); ++k)
		if (images[k] != base.images[k])
			fail(ErrorKind::InvalidArgument, "image of " + S.mp_gens[k] + " is " + base.images[k].to_string() +
			                                     " but the classifying map sends it to " + images[k].to_string());

	GoodnessCertificate cert{S, base.presentation, base.presentation, {}, lrq_validate(base.presentation),
	                         base.to_target, base.from_target, base.extension};
	if (S.r() == 0)
		return cert;

	// inverted slots must map to units
	size_t slot = S.mp_gens.size();
	for (auto const &block : S.u_blocks)
	{
		if (!block.empty() && images[slot].unit_status() != UnitStatus::Unit)
			fail(ErrorKind::NotAUnit, "inverted generator " + block[0] + " (generator " + std::to_string(slot + 1) +
			                              ") maps to " + images[slot].to_string() + ", which is not a unit");
		slot += block.size();
	}

	auto full = S.full_ring();
	auto embed = embed_by_name(base.presentation.base, full);
	LRQPresentation inner = LRQPresentation::identity(full);
	inner.inverted.integers_prime_to = base.presentation.inverted.integers_prime_to;
	for (auto const &e : base.presentation.inverted.elements)
		inner.inverted.elements.push_back(embed.apply(e));
	for (auto const &block : S.u_blocks)
		if (!block.empty())
			inner.inverted.elements.push_back(full.var(block[0]));
	for (auto const &e : base.presentation.sequence)
		inner.sequence.push_back(embed.apply(e));
	auto mid = inner.result();

	LRQPresentation outer = LRQPresentation::identity(mid);
	std::optional<detail::FieldTower> tower;
	bool finite = target.core().kind() == Core::Kind::PrimeField;
	if (finite)
	{
		tower.emplace(target, degree_bound);
		for (size_t k = 0; k < S.mp_gens.size(); ++k)
			tower->adjoin(S.mp_gens[k], images[k]);
	}
	size_t k = S.mp_gens.size();
	for (auto const &block : S.u_blocks)
		for (auto const &u : block)
		{
			if (finite)
				outer.sequence.push_back(detail::word_element(mid, tower->names(), tower->adjoin(u, images[k]).lift));
			else
				outer.sequence.push_back(mid.var(u) - mid.from_rational(*images[k].constant_value()));
			++k;
		}

	auto comp = lrq_compose(outer, inner);
	cert.lifted = comp.presentation;
	cert.aux_sequence.assign(cert.lifted.sequence.end() - static_cast<long>(outer.sequence.size()),
	                         cert.lifted.sequence.end());
	cert.validation = lrq_validate(cert.lifted);
	cert.to_target.reset();
	cert.from_target.reset();
	cert.extension.reset();
	if (cert.validation.verdict != Verdict::Accept || !cert.validation.result)
		return cert;

	auto const &res = *cert.validation.result;
	cert.to_target = RingHom(res, target, images);
	if (!finite)
		cert.from_target = RingHom(target, res, {});
	else if (tower->dimension() == tower->field_dimension())
	{
		std::vector<Element> from_images;
		for (size_t v = 0; v < target.vars().size(); ++v)
			from_images.push_back(
			    detail::word_element(res, tower->names(), tower->preimage(target.var(static_cast<int>(v)))));
		cert.from_target = RingHom(target, res, from_images);
	}
	else
		cert.extension = build_extension(*tower, target, res, *cert.to_target);
	if (cert.from_target)
		check_witnesses(*cert.to_target, *cert.from_target);
	return cert;
}

GoodnessCertificate certify_good(FGObject const &X, MPSurrogate const &S, LRQPresentation const &base)
{
	auto v = lrq_validate(base);
	if (v.verdict != Verdict::Accept || !v.result)
		fail(ErrorKind::InvalidArgument, "base presentation does not validate: " + v.reason);
	auto const &R = *v.result;
	if (!R.free_vars().empty() || R.standard_monomials().size() != 1)
		fail(ErrorKind::InvalidArgument, "base result ring is not its own core; supply a standard presentation");
	if (!X.base.vars().empty() || !(X.base.core() == R.core()))
		fail(ErrorKind::RingMismatch, "base presentation presents " + R.core().describe() + ", not " +
		                                  X.base.describe());
	StandardPresentation sp{base, X.base, {}, "constant", std::nullopt, std::nullopt, std::nullopt};
	for (size_t k = 0; k < R.vars().size(); ++k)
	{
		auto c = R.var(static_cast<int>(k)).constant_value();
		sp.images.push_back(X.base.from_rational(c ? *c : Rational(0)));
	}
	sp.to_target = RingHom(R, X.base, sp.images);
	sp.from_target = RingHom(X.base, R, {});
	return certify_good(X, S, sp);
}

} // namespace formal
