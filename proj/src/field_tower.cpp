#include "field_tower.hpp"

#include <algorithm>

namespace formal::detail
{

long symmetric(std::uint64_t c, unsigned long p)
{
	long v = static_cast<long>(c % p);
	return 2 * v > static_cast<long>(p) ? v - static_cast<long>(p) : v;
}

FieldTower::FieldTower(RingSpec field, int degree_bound)
    : field_(std::move(field)), bound_(degree_bound), p_(field_.core().prime()),
      monomials_(field_.standard_monomials()), span_(p_, monomials_.size())
{
	if (field_.core().kind() != Core::Kind::PrimeField || !field_.free_vars().empty())
		fail(ErrorKind::InvalidArgument, field_.describe() + " is not a finite field");
	basis_.push_back(field_.one());
	words_.push_back(Word{{{}, 1}});
	span_.insert(vec(field_.one()));
}

fp::Vec FieldTower::vec(Element const &e) const
{
	require_same_ring(e.ring(), field_, "tower element");
	fp::Vec v(monomials_.size(), 0);
	for (auto const &t : e.poly().terms)
	{
		auto it = std::lower_bound(monomials_.begin(), monomials_.end(), t.exps);
		v[static_cast<size_t>(it - monomials_.begin())] = t.coeff.get_num().get_ui() % p_;
	}
	return v;
}

Element FieldTower::value(fp::Vec const &v) const
{
	Poly p;
	for (size_t i = 0; i < v.size(); ++i)
		if (v[i] % p_ != 0)
			p.terms.push_back(Term{monomials_[i], Rational(static_cast<unsigned long>(v[i] % p_))});
	return field_.make(p);
}

namespace
{

std::vector<int> padded(std::vector<int> e, size_t n)
{
	e.resize(n, 0);
	return e;
}

void add_term(Word &w, std::vector<int> const &e, long c, unsigned long p)
{
	long &slot = w[e];
	slot = symmetric(static_cast<std::uint64_t>(((slot + c) % static_cast<long>(p) + static_cast<long>(p))), p);
	if (slot == 0)
		w.erase(e);
}

} // namespace

FieldTower::Step FieldTower::adjoin(std::string const &name, Element const &a)
{
	require_same_ring(a.ring(), field_, "tower generator value");
	size_t k = names_.size();
	names_.push_back(name);
	for (auto &w : words_)
	{
		Word padded_word;
		for (auto const &[e, c] : w)
			padded_word[padded(e, k + 1)] = c;
		w = std::move(padded_word);
	}
	// candidates b_l a^i, indexed (l, i) in insertion order
	fp::Span span(p_, monomials_.size());
	std::vector<std::pair<size_t, int>> index;
	for (size_t l = 0; l < basis_.size(); ++l)
	{
		span.insert(vec(basis_[l]));
		index.emplace_back(l, 0);
	}
	Element power = field_.one();
	for (int d = 1;; ++d)
	{
		if (d > bound_)
			fail(ErrorKind::DegreeBoundExceeded, "minimal polynomial of " + name + " over the current subfield exceeds degree " +
			                                         std::to_string(bound_));
		power = power * a;
		std::vector<Element> layer;
		for (auto const &b : basis_)
			layer.push_back(b * power);
		if (auto combo = span.solve(vec(power)))
		{
			Step step{d, {}};
			std::vector<int> top(k + 1, 0);
			top[k] = d;
			step.lift[top] = 1;
			for (size_t j = 0; j < combo->size(); ++j)
			{
				if ((*combo)[j] == 0)
					continue;
				auto [l, i] = index[j];
				for (auto const &[e, c] : words_[l])
				{
					auto f = e;
					f[k] += i;
					add_term(step.lift, f, -c * symmetric((*combo)[j], p_), p_);
				}
			}
			// the new subfield has basis b_l a^i, i < d
			std::vector<Element> nb;
			std::vector<Word> nw;
			Element ai = field_.one();
			for (int i = 0; i < d; ++i)
			{
				for (size_t l = 0; l < basis_.size(); ++l)
				{
					nb.push_back(basis_[l] * ai);
					Word w;
					for (auto const &[e, c] : words_[l])
					{
						auto f = e;
						f[k] += i;
						w[f] = c;
					}
					nw.push_back(std::move(w));
				}
				ai = ai * a;
			}
			basis_ = std::move(nb);
			words_ = std::move(nw);
			span_ = fp::Span(p_, monomials_.size());
			for (auto const &b : basis_)
				span_.insert(vec(b));
			return step;
		}
		for (size_t l = 0; l < layer.size(); ++l)
		{
			span.insert(vec(layer[l]));
			index.emplace_back(l, d);
		}
	}
}

bool FieldTower::contains(Element const &value) const { return span_.solve(vec(value)).has_value(); }

Word FieldTower::preimage(Element const &v) const
{
	auto combo = span_.solve(vec(v));
	if (!combo)
		fail(ErrorKind::InvalidArgument, v.to_string() + " is not in the subfield generated so far");
	Word w;
	for (size_t j = 0; j < combo->size(); ++j)
		if ((*combo)[j] != 0)
			for (auto const &[e, c] : words_[j])
				add_term(w, padded(e, names_.size()), c * symmetric((*combo)[j], p_), p_);
	return w;
}

Element word_element(RingSpec const &ring, std::vector<std::string> const &names, Word const &w)
{
	std::vector<int> at;
	for (auto const &n : names)
	{
		int v = ring.var_index(n);
		if (v < 0)
			fail(ErrorKind::UnknownVariable, "no variable " + n + " in " + ring.describe());
		at.push_back(v);
	}
	Poly p;
	for (auto const &[e, c] : w)
	{
		Exponents x(ring.vars().size(), 0);
		for (size_t i = 0; i < e.size(); ++i)
			x[static_cast<size_t>(at[i])] += e[i];
		p.terms.push_back(Term{std::move(x), Rational(c)});
	}
	return ring.make(p);
}

bool is_finite_field(RingSpec const &ring, size_t limit)
{
	auto card = ring.cardinality();
	if (!card || ring.core().kind() != Core::Kind::PrimeField)
		return false;
	if (*card > static_cast<unsigned long>(limit))
		fail(ErrorKind::DegreeBoundExceeded, ring.describe() + " is too large to confirm it is a field");
	// a finite ring is a field iff multiplication by every nonzero element is injective
	auto basis = ring.standard_monomials();
	unsigned long p = ring.core().prime();
	std::vector<unsigned long> digits(basis.size(), 0);
	for (;;)
	{
		size_t i = 0;
		while (i < digits.size() && ++digits[i] == p)
			digits[i++] = 0;
		if (i == digits.size())
			return true;
		Poly poly;
		for (size_t j = 0; j < basis.size(); ++j)
			if (digits[j])
				poly.terms.push_back(Term{basis[j], Rational(digits[j])});
		if (ring.regularity(ring.make(poly).poly()) != Regularity::Regular)
			return false;
	}
}

} // namespace formal::detail
