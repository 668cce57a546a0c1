#include "formal/hom.hpp"

namespace formal
{

RingHom::RingHom(RingSpec source, RingSpec target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
	auto const &vars = source_.vars();
	if (images_.size() != vars.size())
		fail(ErrorKind::InvalidHom, "expected " + std::to_string(vars.size()) + " images, got " +
		                                std::to_string(images_.size()));
	if (!source_.core().maps_into(target_.core()))
		fail(ErrorKind::InvalidHom, "no map of coefficient rings " + source_.core().describe() +
		                                " -> " + target_.core().describe());
	for (auto const &img : images_)
		require_same_ring(img.ring(), target_, "homomorphism image");
	inverse_images_.reserve(vars.size());
	for (size_t v = 0; v < vars.size(); ++v)
	{
		if (!source_.is_laurent(static_cast<int>(v)))
		{
			inverse_images_.push_back(target_.zero());
			continue;
		}
		switch (images_[v].unit_status())
		{
		case UnitStatus::Unit: inverse_images_.push_back(images_[v].inverse()); break;
		case UnitStatus::NotUnit:
			fail(ErrorKind::InvalidHom, "inverted variable " + vars[v] + " maps to the non-unit " +
			                                images_[v].to_string());
		case UnitStatus::Unknown:
			fail(ErrorKind::UnitUnknown,
			     "cannot decide whether the image of " + vars[v] + " is a unit");
		}
	}
	for (auto const &rel : source_.relations())
	{
		Element img = apply_poly(rel.poly);
		if (!img.is_zero())
			fail(ErrorKind::InvalidHom, "relation with leading variable " +
			                                source_.vars()[rel.lead] + " maps to " +
			                                img.to_string() + ", not 0");
	}
}

RingHom RingHom::identity(RingSpec const &ring)
{
	std::vector<Element> images;
	for (size_t v = 0; v < ring.vars().size(); ++v)
		images.push_back(ring.var(static_cast<int>(v)));
	return RingHom(ring, ring, std::move(images));
}

RingHom RingHom::from_table(RingSpec const &source, RingSpec const &target,
                            std::map<std::string, Element> const &images)
{
	std::vector<Element> ordered;
	for (auto const &v : source.vars())
	{
		auto it = images.find(v);
		if (it == images.end())
			fail(ErrorKind::InvalidHom, "no image given for variable " + v);
		ordered.push_back(it->second);
	}
	for (auto const &[name, img] : images)
		if (source.var_index(name) < 0)
			fail(ErrorKind::UnknownVariable, "image given for unknown variable " + name);
	return RingHom(source, target, std::move(ordered));
}

Element RingHom::apply_poly(Poly const &p) const
{
	// cache powers per variable
	std::vector<std::vector<Element>> pos(images_.size()), neg(images_.size());
	auto power = [&](size_t v, int e) -> Element const & {
		auto &cache = e > 0 ? pos[v] : neg[v];
		Element const &base = e > 0 ? images_[v] : inverse_images_[v];
		int n = e > 0 ? e : -e;
		if (cache.empty())
			cache.push_back(target_.one());
		while (static_cast<int>(cache.size()) <= n)
			cache.push_back(cache.back() * base);
		return cache[n];
	};
	Element acc = target_.zero();
	for (auto const &t : p.terms)
	{
		Element term = target_.from_rational(t.coeff);
		for (size_t v = 0; v < t.exps.size() && !term.is_zero(); ++v)
			if (t.exps[v] != 0)
			{
				if (t.exps[v] < 0 && !source_.is_laurent(static_cast<int>(v)))
					fail(ErrorKind::NotInRing, "negative power of " + source_.vars()[v]);
				term = term * power(v, t.exps[v]);
			}
		acc = acc + term;
	}
	return acc;
}

Element RingHom::apply(Element const &e) const
{
	require_same_ring(e.ring(), source_, "homomorphism argument");
	return apply_poly(e.poly());
}

Element hom_apply(RingHom const &h, Element const &e) { return h.apply(e); }

} // namespace formal
