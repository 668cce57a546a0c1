#include "formal/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ring_impl.hpp"

namespace formal
{

char const *to_string(RelationKind kind)
{
	switch (kind)
	{
	case RelationKind::Zero: return "zero";
	case RelationKind::Unit: return "unit";
	case RelationKind::Characteristic: return "characteristic";
	case RelationKind::Triangular: return "triangular";
	case RelationKind::NonTriangular: return "non-triangular";
	}
	return "?";
}

char const *to_string(Regularity r)
{
	switch (r)
	{
	case Regularity::Regular: return "regular";
	case Regularity::ZeroDivisor: return "zero-divisor";
	case Regularity::Unknown: return "unknown";
	}
	return "?";
}

bool operator==(Poly const &a, Poly const &b)
{
	if (a.terms.size() != b.terms.size())
		return false;
	for (size_t i = 0; i < a.terms.size(); ++i)
		if (a.terms[i].exps != b.terms[i].exps || a.terms[i].coeff != b.terms[i].coeff)
			return false;
	return true;
}

bool InvertedSet::empty() const { return elements.empty() && !integers_prime_to; }

namespace detail
{

namespace
{

bool exps_less(Term const &a, Term const &b) { return a.exps < b.exps; }

Exponents add_exps(Exponents const &a, Exponents const &b)
{
	Exponents r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return r;
}

// Sort by exponents and merge equal monomials; coefficients untouched.
void sort_merge(std::vector<Term> &terms)
{
	std::sort(terms.begin(), terms.end(), exps_less);
	size_t out = 0;
	for (size_t i = 0; i < terms.size(); ++i)
	{
		if (out > 0 && terms[out - 1].exps == terms[i].exps)
			terms[out - 1].coeff += terms[i].coeff;
		else
		{
			if (out != i)
				terms[out] = std::move(terms[i]);
			++out;
		}
	}
	terms.resize(out);
}

} // namespace

void reduce_coefficients(Impl const &ring, Poly &p)
{
	size_t out = 0;
	for (size_t i = 0; i < p.terms.size(); ++i)
	{
		ring.core.reduce_in_place(p.terms[i].coeff);
		if (p.terms[i].coeff != 0)
		{
			if (out != i)
				p.terms[out] = std::move(p.terms[i]);
			++out;
		}
	}
	p.terms.resize(out);
}

bool is_constant(Poly const &p)
{
	if (p.terms.size() > 1)
		return false;
	if (p.terms.empty())
		return true;
	for (int e : p.terms[0].exps)
		if (e != 0)
			return false;
	return true;
}

void reduce_by_relations(Impl const &ring, Poly &p)
{
	if (ring.rels.empty())
		return;
	auto reducer = [&](Exponents const &e) -> int {
		for (size_t j = 0; j < ring.rels.size(); ++j)
			if (e[ring.rels[j].lead] >= ring.rels[j].degree)
				return static_cast<int>(j);
		return -1;
	};
	bool any = false;
	for (auto const &t : p.terms)
		if (reducer(t.exps) >= 0)
		{
			any = true;
			break;
		}
	if (!any)
		return;

	// Irreducible monomials go straight to `done`; reducible ones are
	// expanded until nothing reducible is left.
	std::map<Exponents, Rational> work, done;
	auto deposit = [&](Exponents e, Rational c) {
		auto &target = reducer(e) >= 0 ? work : done;
		Rational &slot = target[e];
		slot += c;
		ring.core.reduce_in_place(slot);
		if (slot == 0)
			target.erase(e);
	};
	for (auto &t : p.terms)
		deposit(std::move(t.exps), std::move(t.coeff));
	while (!work.empty())
	{
		auto it = std::prev(work.end());
		auto const &rel = ring.rels[reducer(it->first)];
		Exponents shift = it->first;
		shift[rel.lead] -= rel.degree;
		Rational c = it->second;
		work.erase(it);
		for (auto const &t : rel.poly.terms)
			if (t.exps[rel.lead] != rel.degree) // skip the monic leading term
				deposit(add_exps(shift, t.exps), -c * t.coeff);
	}
	p.terms.clear();
	for (auto &[e, c] : done)
		p.terms.push_back(Term{e, c});
}

void normalize(Impl const &ring, Poly &p)
{
	sort_merge(p.terms);
	reduce_coefficients(ring, p);
	reduce_by_relations(ring, p);
}

void add_product(Impl const &ring, Poly &acc, Poly const &a, Poly const &b)
{
	if (a.is_zero() || b.is_zero())
		return;
	if (ring.vars.empty())
	{
		if (acc.terms.empty())
			acc.terms.push_back(Term{{}, a.terms[0].coeff * b.terms[0].coeff});
		else
			acc.terms[0].coeff += a.terms[0].coeff * b.terms[0].coeff;
		return;
	}
	acc.terms.reserve(acc.terms.size() + a.terms.size() * b.terms.size());
	for (auto const &x : a.terms)
		for (auto const &y : b.terms)
			acc.terms.push_back(Term{add_exps(x.exps, y.exps), x.coeff * y.coeff});
	sort_merge(acc.terms);
}

Poly add(Impl const &ring, Poly const &a, Poly const &b, int sign)
{
	Poly r;
	r.terms.reserve(a.terms.size() + b.terms.size());
	size_t i = 0, j = 0;
	while (i < a.terms.size() || j < b.terms.size())
	{
		if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].exps < b.terms[j].exps))
			r.terms.push_back(a.terms[i++]);
		else if (i == a.terms.size() || b.terms[j].exps < a.terms[i].exps)
		{
			r.terms.push_back(b.terms[j++]);
			if (sign < 0)
				r.terms.back().coeff = -r.terms.back().coeff;
		}
		else
		{
			Rational c = a.terms[i].coeff;
			if (sign < 0)
				c -= b.terms[j].coeff;
			else
				c += b.terms[j].coeff;
			r.terms.push_back(Term{a.terms[i].exps, std::move(c)});
			++i;
			++j;
		}
	}
	reduce_coefficients(ring, r);
	return r;
}

Poly mul(Impl const &ring, Poly const &a, Poly const &b)
{
	Poly r;
	add_product(ring, r, a, b);
	normalize(ring, r);
	return r;
}

Poly constant(Impl const &ring, Rational const &q)
{
	Poly p;
	Rational c = ring.core.normalize(q);
	if (c != 0)
		p.terms.push_back(Term{Exponents(ring.vars.size(), 0), c});
	return p;
}

std::vector<Exponents> standard_monomials(Impl const &ring)
{
	std::vector<Exponents> out{Exponents(ring.vars.size(), 0)};
	for (auto const &rel : ring.rels)
	{
		std::vector<Exponents> next;
		for (auto const &e : out)
			for (int d = 0; d < rel.degree; ++d)
			{
				Exponents f = e;
				f[rel.lead] = d;
				next.push_back(std::move(f));
			}
		out = std::move(next);
	}
	std::sort(out.begin(), out.end());
	return out;
}

namespace
{

// Units of core[free vars][laurent^-1] (a domain): unit times a Laurent
// monomial.
bool is_free_part_unit(Impl const &ring, Poly const &p)
{
	if (p.terms.size() != 1)
		return false;
	auto const &t = p.terms[0];
	for (size_t v = 0; v < t.exps.size(); ++v)
		if (t.exps[v] != 0 && !ring.laurent[v])
			return false;
	return ring.core.is_unit(t.coeff);
}

Poly free_part_inverse(Impl const &ring, Poly const &p)
{
	auto const &t = p.terms[0];
	Exponents e(t.exps.size());
	for (size_t v = 0; v < e.size(); ++v)
		e[v] = -t.exps[v];
	Poly r;
	r.terms.push_back(Term{std::move(e), ring.core.inverse(t.coeff)});
	return r;
}

constexpr size_t kMaxRank = 64;

} // namespace

std::optional<std::vector<std::vector<Poly>>> multiplication_matrix(Impl const &ring,
                                                                     Poly const &p)
{
	auto basis = standard_monomials(ring);
	if (basis.size() > kMaxRank)
		return std::nullopt;
	std::vector<int> leads;
	for (auto const &rel : ring.rels)
		leads.push_back(rel.lead);
	auto lead_part = [&](Exponents const &e) {
		Exponents l(e.size(), 0);
		for (int v : leads)
			l[v] = e[v];
		return l;
	};
	std::map<Exponents, size_t> index;
	for (size_t i = 0; i < basis.size(); ++i)
		index[basis[i]] = i;

	size_t n = basis.size();
	std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
	for (size_t col = 0; col < n; ++col)
	{
		Poly mono;
		mono.terms.push_back(Term{basis[col], 1});
		Poly prod = mul(ring, p, mono);
		for (auto const &t : prod.terms)
		{
			Exponents l = lead_part(t.exps);
			Exponents rest = t.exps;
			for (int v : leads)
				rest[v] = 0;
			m[index.at(l)][col].terms.push_back(Term{std::move(rest), t.coeff});
		}
	}
	for (auto &row : m)
		for (auto &entry : row)
			std::sort(entry.terms.begin(), entry.terms.end(), exps_less);
	return m;
}

std::vector<Poly> characteristic_polynomial(Impl const &ring,
                                            std::vector<std::vector<Poly>> const &a)
{
	// Berkowitz: division-free, valid over any commutative ring.
	size_t n = a.size();
	Poly one = constant(ring, 1);
	std::vector<Poly> v{one, add(ring, Poly{}, a[n - 1][n - 1], -1)};
	for (size_t k = n - 1; k-- > 0;)
	{
		size_t m = n - 1 - k;
		std::vector<Poly> t(m + 2);
		t[0] = one;
		t[1] = add(ring, Poly{}, a[k][k], -1);
		std::vector<Poly> w(m);
		for (size_t i = 0; i < m; ++i)
			w[i] = a[k + 1 + i][k];
		for (size_t step = 0; step < m; ++step)
		{
			Poly dot;
			for (size_t i = 0; i < m; ++i)
				add_product(ring, dot, a[k][k + 1 + i], w[i]);
			normalize(ring, dot);
			t[step + 2] = add(ring, Poly{}, dot, -1);
			if (step + 1 < m)
			{
				std::vector<Poly> next(m);
				for (size_t r = 0; r < m; ++r)
				{
					for (size_t c = 0; c < m; ++c)
						add_product(ring, next[r], a[k + 1 + r][k + 1 + c], w[c]);
					normalize(ring, next[r]);
				}
				w = std::move(next);
			}
		}
		std::vector<Poly> nv(m + 2);
		for (size_t i = 0; i < m + 2; ++i)
		{
			for (size_t j = 0; j <= std::min(i, m); ++j)
				add_product(ring, nv[i], t[i - j], v[j]);
			normalize(ring, nv[i]);
		}
		v = std::move(nv);
	}
	return v;
}

UnitStatus unit_status(Impl const &ring, Poly const &p)
{
	if (p.is_zero())
		return UnitStatus::NotUnit;
	if (ring.rels.empty())
		return is_free_part_unit(ring, p) ? UnitStatus::Unit : UnitStatus::NotUnit;
	if (is_constant(p))
		return ring.core.is_unit(p.terms[0].coeff) ? UnitStatus::Unit : UnitStatus::NotUnit;
	auto m = multiplication_matrix(ring, p);
	if (!m)
		return UnitStatus::Unknown;
	auto chi = characteristic_polynomial(ring, *m);
	return is_free_part_unit(ring, chi.back()) ? UnitStatus::Unit : UnitStatus::NotUnit;
}

Poly inverse(Impl const &ring, Poly const &p)
{
	auto status = unit_status(ring, p);
	if (status == UnitStatus::Unknown)
		fail(ErrorKind::UnitUnknown, "unit status undecidable (rank too large)");
	if (status == UnitStatus::NotUnit)
		fail(ErrorKind::NotAUnit, "element is not a unit");
	if (ring.rels.empty())
		return free_part_inverse(ring, p);
	if (is_constant(p))
		return constant(ring, ring.core.inverse(p.terms[0].coeff));
	// Cayley-Hamilton: chi(p) = 0, so p * q(p) = -chi_n.
	auto chi = characteristic_polynomial(ring, *multiplication_matrix(ring, p));
	size_t n = chi.size() - 1;
	Poly q = chi[0];
	for (size_t i = 1; i < n; ++i)
		q = add(ring, mul(ring, q, p), chi[i], +1);
	Poly scale = free_part_inverse(ring, chi[n]);
	Poly r = mul(ring, q, scale);
	return add(ring, Poly{}, r, -1);
}

} // namespace detail

using detail::Impl;

// ---------------------------------------------------------------------------
// Quotient construction

class QuotientBuilder
{
  public:
	explicit QuotientBuilder(RingSpec const &base) : base_(base), st_(*base.impl_)
	{
		st_.kind = RingSpec::Kind::TriangularQuotient;
		st_.base = base;
		st_.inverted = InvertedSet{};
		st_.raw_relations.clear();
		st_.deferred_vars.clear();
		st_.deferred_elements.clear();
	}

	void invert(InvertedSet const &inv)
	{
		st_.inverted = inv;
		if (inv.integers_prime_to)
			st_.core = st_.core.invert_prime_complement(*inv.integers_prime_to);
		for (auto const &e : inv.elements)
		{
			require_same_ring(e.ring(), base_, "inverted element");
			if (e.is_zero())
				fail(ErrorKind::ZeroRing, "inverting 0 gives the zero ring");
			auto const &p = e.poly();
			if (p.terms.size() != 1)
			{
				st_.deferred_elements.push_back(p);
				continue;
			}
			st_.core = st_.core.invert_integer(p.terms[0].coeff.get_num());
			auto const &exps = p.terms[0].exps;
			for (size_t v = 0; v < exps.size(); ++v)
			{
				if (exps[v] <= 0)
					continue;
				if (st_.lead_rel[v] >= 0)
					st_.deferred_vars.push_back(static_cast<int>(v));
				else
					st_.laurent[v] = true;
			}
		}
		// coefficients of inherited relations stay valid: the core only grew
	}

	RelationKind add(Element const &raw, bool apply)
	{
		require_same_ring(raw.ring(), base_, "relation");
		Poly r = convert(raw.poly());
		detail::normalize(st_, r);
		if (r.is_zero())
			return RelationKind::Zero;
		if (detail::is_constant(r))
		{
			Rational const &c = r.terms[0].coeff;
			if (st_.core.is_unit(c))
				return RelationKind::Unit;
			if (auto p = st_.core.characteristic_prime(c))
			{
				if (apply)
				{
					apply_characteristic(*p);
					st_.raw_relations.push_back(raw);
				}
				return RelationKind::Characteristic;
			}
			return RelationKind::NonTriangular;
		}
		if (r.terms.size() == 1 && detail::unit_status(st_, r) == UnitStatus::Unit)
			return RelationKind::Unit;
		auto chosen = choose_lead(r);
		if (!chosen)
			return RelationKind::NonTriangular;
		if (apply)
		{
			install(*chosen);
			st_.raw_relations.push_back(raw);
		}
		return RelationKind::Triangular;
	}

	RingSpec finish()
	{
		for (int v : st_.deferred_vars)
		{
			Poly x;
			Exponents e(st_.vars.size(), 0);
			e[v] = 1;
			x.terms.push_back(Term{e, 1});
			detail::normalize(st_, x);
			check_unit(x, "variable " + st_.vars[v]);
		}
		for (auto const &raw : st_.deferred_elements)
		{
			Poly p = convert(raw);
			detail::normalize(st_, p);
			check_unit(p, "inverted element");
		}
		st_.deferred_vars.clear();
		st_.deferred_elements.clear();
		st_.key = compute_key();
		return RingSpec(std::make_shared<Impl const>(st_));
	}

  private:
	struct Choice
	{
		int var;
		int degree;
		Poly monic;
	};

	Poly convert(Poly const &p) const
	{
		Poly r = p;
		for (auto &t : r.terms)
		{
			if (st_.core.kind() == Core::Kind::PrimeField)
				st_.core.reduce_in_place(t.coeff);
			else
				t.coeff = st_.core.normalize(t.coeff);
		}
		return r;
	}

	void check_unit(Poly const &p, std::string const &what) const
	{
		switch (detail::unit_status(st_, p))
		{
		case UnitStatus::Unit: return;
		case UnitStatus::Unknown:
			fail(ErrorKind::UnitUnknown, what + ": unit status undecidable");
		case UnitStatus::NotUnit:
			fail(ErrorKind::UnsupportedLocalisation,
			     what + " is inverted but is neither a free monomial nor a unit of the quotient");
		}
	}

	void apply_characteristic(unsigned long p)
	{
		st_.core = Core::prime_field(p);
		for (auto &rel : st_.rels)
			detail::reduce_coefficients(st_, rel.poly);
	}

	static bool contains_var(Poly const &p, int v, int skip_lead = -1)
	{
		for (auto const &t : p.terms)
			if (t.exps[v] != 0 && v != skip_lead)
				return true;
		return false;
	}

	std::vector<int> depends_on(Poly const &p, int own_lead) const
	{
		std::vector<int> deps;
		for (size_t j = 0; j < st_.rels.size(); ++j)
			if (st_.rels[j].lead != own_lead && contains_var(p, st_.rels[j].lead))
				deps.push_back(static_cast<int>(j));
		return deps;
	}

	std::optional<Choice> choose_lead(Poly const &r)
	{
		std::optional<Choice> best;
		std::tuple<int, int, int, int> best_rank{};
		for (size_t vi = 0; vi < st_.vars.size(); ++vi)
		{
			int v = static_cast<int>(vi);
			if (st_.lead_rel[v] >= 0 || !contains_var(r, v))
				continue;
			bool negative = false;
			int degree = 0;
			for (auto const &t : r.terms)
			{
				negative |= t.exps[v] < 0;
				degree = std::max(degree, t.exps[v]);
			}
			std::vector<int> users;
			for (size_t j = 0; j < st_.rels.size(); ++j)
			{
				for (auto const &t : st_.rels[j].poly.terms)
					negative |= t.exps[v] < 0;
				if (contains_var(st_.rels[j].poly, v))
					users.push_back(static_cast<int>(j));
			}
			if (negative)
				continue;
			if (!users.empty() && reaches(depends_on(r, -1), users))
				continue;

			Poly lead_coeff;
			for (auto const &t : r.terms)
				if (t.exps[v] == degree)
				{
					Term u = t;
					u.exps[v] = 0;
					lead_coeff.terms.push_back(std::move(u));
				}
			if (detail::unit_status(st_, lead_coeff) != UnitStatus::Unit)
				continue;
			Poly monic = detail::mul(st_, r, detail::inverse(st_, lead_coeff));
			if (!is_monic(monic, v, degree))
				continue;

			// inverted variables lead only as a last resort
			std::tuple<int, int, int, int> rank{st_.laurent[v] ? 1 : 0, degree, users.empty() ? 0 : 1, -v};
			if (!best || rank < best_rank)
			{
				best = Choice{v, degree, std::move(monic)};
				best_rank = rank;
			}
		}
		return best;
	}

	static bool is_monic(Poly const &p, int v, int degree)
	{
		int top = 0;
		for (auto const &t : p.terms)
		{
			if (t.exps[v] > degree)
				return false;
			if (t.exps[v] == degree)
			{
				++top;
				for (size_t w = 0; w < t.exps.size(); ++w)
					if (static_cast<int>(w) != v && t.exps[w] != 0)
						return false;
				if (t.coeff != 1)
					return false;
			}
		}
		return top == 1;
	}

	// Whether any relation in `targets` is reachable from `start` along
	// "contains the leading variable of" edges.
	bool reaches(std::vector<int> const &start, std::vector<int> const &targets) const
	{
		std::set<int> seen;
		std::vector<int> stack = start;
		while (!stack.empty())
		{
			int j = stack.back();
			stack.pop_back();
			if (!seen.insert(j).second)
				continue;
			if (std::find(targets.begin(), targets.end(), j) != targets.end())
				return true;
			for (int k : depends_on(st_.rels[j].poly, st_.rels[j].lead))
				stack.push_back(k);
		}
		return false;
	}

	void install(Choice const &c)
	{
		st_.rels.push_back(RingSpec::Relation{c.var, c.degree, c.monic});
		st_.lead_rel[c.var] = static_cast<int>(st_.rels.size() - 1);
		if (st_.laurent[c.var])
		{
			st_.laurent[c.var] = false;
			st_.deferred_vars.push_back(c.var);
		}
		for (size_t j = 0; j + 1 < st_.rels.size(); ++j)
		{
			auto &rel = st_.rels[j];
			if (!contains_var(rel.poly, c.var))
				continue;
			Poly lead, tail;
			for (auto const &t : rel.poly.terms)
				(t.exps[rel.lead] == rel.degree ? lead : tail).terms.push_back(t);
			detail::reduce_by_relations(st_, tail);
			rel.poly = detail::add(st_, lead, tail, +1);
		}
	}

	std::string compute_key() const
	{
		std::string k = "(" + base_.key() + ")[1/";
		for (size_t i = 0; i < st_.inverted.elements.size(); ++i)
			k += (i ? "," : "") + st_.inverted.elements[i].to_string();
		if (st_.inverted.integers_prime_to)
			k += ";prime-to:" + std::to_string(*st_.inverted.integers_prime_to);
		k += "]/(";
		for (size_t i = 0; i < st_.raw_relations.size(); ++i)
			k += (i ? "," : "") + st_.raw_relations[i].to_string();
		return k + ")";
	}

	RingSpec base_;
	Impl st_;
};

// ---------------------------------------------------------------------------
// RingSpec

namespace
{

std::shared_ptr<Impl const> core_impl(Core const &core, RingSpec::Kind kind)
{
	auto impl = std::make_shared<Impl>(Impl{kind, core, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}});
	impl->key = core.key();
	return impl;
}

} // namespace

RingSpec RingSpec::rationals() { return from_core(Core::rationals()); }
RingSpec RingSpec::localized_integers(std::vector<unsigned long> primes)
{
	return from_core(Core::localized_integers(std::move(primes)));
}
RingSpec RingSpec::local_at_prime(unsigned long p) { return from_core(Core::local_at_prime(p)); }
RingSpec RingSpec::prime_field(unsigned long p) { return from_core(Core::prime_field(p)); }

RingSpec RingSpec::from_core(Core const &core)
{
	Kind kind = Kind::Rationals;
	switch (core.kind())
	{
	case Core::Kind::Rationals: kind = Kind::Rationals; break;
	case Core::Kind::LocalizedIntegers: kind = Kind::LocalizedIntegers; break;
	case Core::Kind::LocalAtPrime: kind = Kind::LocalAtPrime; break;
	case Core::Kind::PrimeField: kind = Kind::PrimeField; break;
	}
	return RingSpec(core_impl(core, kind));
}

namespace
{

bool valid_identifier(std::string const &s)
{
	if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
		return false;
	return std::all_of(s.begin(), s.end(), [](char c) {
		return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
	});
}

} // namespace

RingSpec RingSpec::polynomial(RingSpec const &base, std::vector<std::string> vars)
{
	Impl st = *base.impl_;
	st.kind = Kind::PolynomialRing;
	st.base = base;
	st.inverted = InvertedSet{};
	st.raw_relations.clear();
	for (auto const &v : vars)
	{
		if (!valid_identifier(v))
			fail(ErrorKind::InvalidRing, "invalid variable name '" + v + "'");
		if (std::find(st.vars.begin(), st.vars.end(), v) != st.vars.end())
			fail(ErrorKind::InvalidRing, "duplicate variable '" + v + "'");
		st.vars.push_back(v);
		st.laurent.push_back(false);
		st.lead_rel.push_back(-1);
	}
	size_t n = st.vars.size();
	for (auto &rel : st.rels)
		for (auto &t : rel.poly.terms)
			t.exps.resize(n, 0);
	std::string k = "(" + base.key() + ")[";
	for (size_t i = 0; i < vars.size(); ++i)
		k += (i ? "," : "") + vars[i];
	st.key = k + "]";
	return RingSpec(std::make_shared<Impl const>(std::move(st)));
}

RingSpec RingSpec::quotient(RingSpec const &base, InvertedSet const &inverted,
                            std::vector<Element> const &relations)
{
	if (inverted.empty() && relations.empty())
		return base;
	QuotientBuilder b(base);
	b.invert(inverted);
	for (size_t i = 0; i < relations.size(); ++i)
	{
		auto kind = b.add(relations[i], true);
		if (kind == RelationKind::Unit)
			fail(ErrorKind::ZeroRing, "relation " + std::to_string(i + 1) + " (" +
			                              relations[i].to_string() +
			                              ") is a unit: the quotient is the zero ring");
		if (kind == RelationKind::Zero || kind == RelationKind::NonTriangular)
			fail(ErrorKind::NotTriangular, "relation " + std::to_string(i + 1) + " (" +
			                                   relations[i].to_string() + ") is " +
			                                   to_string(kind));
	}
	return b.finish();
}

RelationKind RingSpec::classify_relation(Element const &e) const
{
	QuotientBuilder b(*this);
	return b.add(e, false);
}

RingSpec::Kind RingSpec::kind() const { return impl_->kind; }
Core const &RingSpec::core() const { return impl_->core; }
std::vector<std::string> const &RingSpec::vars() const { return impl_->vars; }
int RingSpec::var_index(std::string const &name) const
{
	auto const &v = impl_->vars;
	auto it = std::find(v.begin(), v.end(), name);
	return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}
bool RingSpec::is_laurent(int var) const { return impl_->laurent.at(var); }
std::vector<RingSpec::Relation> const &RingSpec::relations() const { return impl_->rels; }

std::vector<int> RingSpec::leading_vars() const
{
	std::vector<int> out;
	for (auto const &rel : impl_->rels)
		out.push_back(rel.lead);
	return out;
}

std::vector<int> RingSpec::free_vars() const
{
	std::vector<int> out;
	for (size_t v = 0; v < impl_->vars.size(); ++v)
		if (impl_->lead_rel[v] < 0)
			out.push_back(static_cast<int>(v));
	return out;
}

std::optional<RingSpec> RingSpec::base() const { return impl_->base; }
InvertedSet const &RingSpec::inverted() const { return impl_->inverted; }
std::vector<Element> const &RingSpec::raw_relations() const { return impl_->raw_relations; }

std::optional<Integer> RingSpec::cardinality() const
{
	if (impl_->core.kind() != Core::Kind::PrimeField || !free_vars().empty())
		return std::nullopt;
	Integer size;
	mpz_ui_pow_ui(size.get_mpz_t(), impl_->core.prime(), rank().get_ui());
	return size;
}

Integer RingSpec::rank() const
{
	Integer r = 1;
	for (auto const &rel : impl_->rels)
		r *= rel.degree;
	return r;
}

std::vector<Exponents> RingSpec::standard_monomials() const
{
	return detail::standard_monomials(*impl_);
}

Element RingSpec::zero() const { return Element(*this, Poly{}); }
Element RingSpec::one() const { return from_rational(1); }
Element RingSpec::from_rational(Rational const &q) const
{
	return Element(*this, detail::constant(*impl_, q));
}

Element RingSpec::var(int index) const
{
	if (index < 0 || index >= static_cast<int>(impl_->vars.size()))
		fail(ErrorKind::UnknownVariable, "variable index " + std::to_string(index));
	Poly p;
	Exponents e(impl_->vars.size(), 0);
	e[index] = 1;
	p.terms.push_back(Term{std::move(e), 1});
	detail::normalize(*impl_, p);
	return Element(*this, std::move(p));
}

Element RingSpec::var(std::string const &name) const
{
	int i = var_index(name);
	if (i < 0)
		fail(ErrorKind::UnknownVariable, "unknown variable '" + name + "' in " + describe());
	return var(i);
}

Element RingSpec::make(Poly poly) const
{
	for (auto &t : poly.terms)
	{
		if (t.exps.size() != impl_->vars.size())
			fail(ErrorKind::InvalidArgument, "exponent vector has wrong length");
		t.coeff = impl_->core.kind() == Core::Kind::PrimeField ? t.coeff
		                                                        : impl_->core.normalize(t.coeff);
		for (size_t v = 0; v < t.exps.size(); ++v)
			if (t.exps[v] < 0 && !impl_->laurent[v])
				fail(ErrorKind::NotInRing,
				     "negative power of non-inverted variable " + impl_->vars[v]);
	}
	detail::normalize(*impl_, poly);
	return Element(*this, std::move(poly));
}

std::string const &RingSpec::key() const { return impl_->key; }

std::string RingSpec::describe() const { return impl_->key; }

bool operator==(RingSpec const &a, RingSpec const &b)
{
	return a.impl_ == b.impl_ || a.impl_->key == b.impl_->key;
}

Poly RingSpec::add(Poly const &a, Poly const &b) const { return detail::add(*impl_, a, b, +1); }
Poly RingSpec::sub(Poly const &a, Poly const &b) const { return detail::add(*impl_, a, b, -1); }
Poly RingSpec::neg(Poly const &a) const { return detail::add(*impl_, Poly{}, a, -1); }
Poly RingSpec::mul(Poly const &a, Poly const &b) const { return detail::mul(*impl_, a, b); }

Poly RingSpec::scale(Poly const &a, Rational const &c) const
{
	Poly r = a;
	for (auto &t : r.terms)
		t.coeff *= c;
	detail::reduce_coefficients(*impl_, r);
	return r;
}

void RingSpec::add_product(Poly &acc, Poly const &a, Poly const &b) const
{
	detail::add_product(*impl_, acc, a, b);
}

void RingSpec::normalize(Poly &p) const { detail::normalize(*impl_, p); }
Poly RingSpec::constant(Rational const &q) const { return detail::constant(*impl_, q); }
UnitStatus RingSpec::unit_status(Poly const &p) const { return detail::unit_status(*impl_, p); }
Poly RingSpec::inverse(Poly const &p) const { return detail::inverse(*impl_, p); }

Regularity RingSpec::regularity(Poly const &p) const
{
	if (p.is_zero())
		return Regularity::ZeroDivisor;
	if (impl_->rels.empty())
		return Regularity::Regular;
	auto m = detail::multiplication_matrix(*impl_, p);
	if (!m)
		return Regularity::Unknown;
	auto chi = detail::characteristic_polynomial(*impl_, *m);
	return chi.back().is_zero() ? Regularity::ZeroDivisor : Regularity::Regular;
}

std::optional<std::vector<std::vector<Poly>>> RingSpec::multiplication_matrix(Poly const &p) const
{
	return detail::multiplication_matrix(*impl_, p);
}

void require_same_ring(RingSpec const &a, RingSpec const &b, char const *what)
{
	if (a != b)
		fail(ErrorKind::RingMismatch,
		     std::string(what) + ": ring mismatch (" + a.describe() + " vs " + b.describe() + ")");
}

// ---------------------------------------------------------------------------
// Element

bool Element::is_one() const { return poly_ == ring_.constant(1); }

std::optional<Rational> Element::constant_value() const
{
	if (poly_.is_zero())
		return Rational(0);
	if (!detail::is_constant(poly_))
		return std::nullopt;
	return poly_.terms[0].coeff;
}

Element Element::pow(int n) const
{
	if (n < 0)
		return inverse().pow(-n);
	Poly result = ring_.constant(1);
	Poly base = poly_;
	while (n > 0)
	{
		if (n & 1)
			result = ring_.mul(result, base);
		n >>= 1;
		if (n)
			base = ring_.mul(base, base);
	}
	return Element(ring_, std::move(result));
}

Element operator+(Element const &a, Element const &b)
{
	require_same_ring(a.ring_, b.ring_, "+");
	return Element(a.ring_, a.ring_.add(a.poly_, b.poly_));
}

Element operator-(Element const &a, Element const &b)
{
	require_same_ring(a.ring_, b.ring_, "-");
	return Element(a.ring_, a.ring_.sub(a.poly_, b.poly_));
}

Element operator*(Element const &a, Element const &b)
{
	require_same_ring(a.ring_, b.ring_, "*");
	return Element(a.ring_, a.ring_.mul(a.poly_, b.poly_));
}

Element operator-(Element const &a) { return Element(a.ring_, a.ring_.neg(a.poly_)); }

bool operator==(Element const &a, Element const &b)
{
	return a.ring_ == b.ring_ && a.poly_ == b.poly_;
}

UnitStatus is_unit(Element const &e) { return e.unit_status(); }

Element nf_reduce(RingSpec const &ring, std::string const &raw) { return ring.parse(raw); }

} // namespace formal
