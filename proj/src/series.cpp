#include "formal/series.hpp"

#include <algorithm>
#include <map>

#include "formal/hom.hpp"

namespace formal
{

namespace
{

void check_order(int order)
{
	if (order < 1)
		fail(ErrorKind::InvalidArgument, "truncation order must be at least 1");
}

bool has_constant_term(Poly const &c0) { return !c0.is_zero(); }

void require_no_constant(Poly const &c0, char const *what)
{
	if (has_constant_term(c0))
		fail(ErrorKind::NonzeroConstantTerm, std::string(what) + " has a nonzero constant term");
}

/// Append "coeff*mono" to a sum being printed.
void append_term(std::string &out, Element const &c, std::string const &mono)
{
	if (c.is_zero())
		return;
	auto value = c.constant_value();
	std::string body;
	bool negative = false;
	if (value)
	{
		Rational q = *value;
		negative = q < 0;
		if (negative)
			q = -q;
		if (mono.empty())
			body = to_decimal(q);
		else
			body = q == 1 ? mono : to_decimal(q) + "*" + mono;
	}
	else if (c.poly().terms.size() == 1)
	{
		body = c.to_string();
		negative = body[0] == '-';
		if (negative)
			body.erase(0, 1);
		if (!mono.empty())
			body += "*" + mono;
	}
	else
		body = mono.empty() ? "(" + c.to_string() + ")" : "(" + c.to_string() + ")*" + mono;
	if (out.empty())
		out = negative ? "-" + body : body;
	else
		out += (negative ? " - " : " + ") + body;
}

std::string power(std::string const &var, int n)
{
	if (n == 0)
		return "";
	return n == 1 ? var : var + "^" + std::to_string(n);
}

/// Split an element of ring[extra vars] into coefficient polys of `ring`
/// indexed by the exponents of the trailing variables.
template <class Store>
void split_trailing(RingSpec const &ring, Element const &e, Store store)
{
	size_t n = ring.vars().size();
	std::map<std::vector<int>, Poly> parts;
	for (auto const &t : e.poly().terms)
	{
		std::vector<int> tail(t.exps.begin() + static_cast<long>(n), t.exps.end());
		for (int d : tail)
			if (d < 0)
				fail(ErrorKind::Parse, "negative power of a series variable");
		Exponents head(t.exps.begin(), t.exps.begin() + static_cast<long>(n));
		parts[tail].terms.push_back(Term{head, t.coeff});
	}
	for (auto &[tail, poly] : parts)
		store(tail, ring.make(std::move(poly)));
}

} // namespace

// ---------------------------------------------------------------- univariate

TruncSeries1::TruncSeries1(RingSpec ring, int order)
    : ring_(std::move(ring)), order_(order), c_(static_cast<size_t>(order >= 0 ? order + 1 : 0))
{
	check_order(order);
}

TruncSeries1 TruncSeries1::from_coeffs(RingSpec const &ring, int order,
                                       std::vector<Element> const &coeffs)
{
	TruncSeries1 s(ring, order);
	for (size_t n = 0; n < coeffs.size() && static_cast<int>(n) <= order; ++n)
		s.set(static_cast<int>(n), coeffs[n]);
	return s;
}

TruncSeries1 TruncSeries1::parse(RingSpec const &ring, int order, std::string const &text,
                                 std::string const &var)
{
	auto ext = RingSpec::polynomial(ring, {var});
	Element e = ext.parse(text);
	TruncSeries1 s(ring, order);
	split_trailing(ring, e, [&](std::vector<int> const &tail, Element const &c) {
		if (tail[0] <= order)
			s.set(tail[0], c);
	});
	return s;
}

TruncSeries1 TruncSeries1::identity(RingSpec const &ring, int order)
{
	TruncSeries1 s(ring, order);
	s.set_raw(1, ring.constant(1));
	return s;
}

Element TruncSeries1::coeff(int n) const
{
	if (n < 0 || n > order_)
		return ring_.zero();
	return Element(ring_, c_[static_cast<size_t>(n)]);
}

void TruncSeries1::set(int n, Element const &value)
{
	require_same_ring(value.ring(), ring_, "series coefficient");
	c_.at(static_cast<size_t>(n)) = value.poly();
}

TruncSeries1 TruncSeries1::truncate(int order) const
{
	TruncSeries1 s(ring_, std::min(order, order_));
	std::copy(c_.begin(), c_.begin() + s.order_ + 1, s.c_.begin());
	return s;
}

bool TruncSeries1::is_zero() const
{
	return std::all_of(c_.begin(), c_.end(), [](Poly const &p) { return p.is_zero(); });
}

std::string TruncSeries1::to_string(std::string const &var) const
{
	std::string out;
	for (int n = 0; n <= order_; ++n)
		append_term(out, coeff(n), power(var, n));
	return out.empty() ? "0" : out;
}

bool operator==(TruncSeries1 const &a, TruncSeries1 const &b)
{
	return a.order_ == b.order_ && a.ring_ == b.ring_ && a.c_ == b.c_;
}

// ----------------------------------------------------------------- bivariate

TruncSeries2::TruncSeries2(RingSpec ring, int order)
    : ring_(std::move(ring)), order_(order), c_(order >= 0 ? index(0, order + 1) : 0)
{
	check_order(order);
}

TruncSeries2 TruncSeries2::parse(RingSpec const &ring, int order, std::string const &text,
                                 std::string const &x, std::string const &y)
{
	auto ext = RingSpec::polynomial(ring, {x, y});
	Element e = ext.parse(text);
	TruncSeries2 s(ring, order);
	split_trailing(ring, e, [&](std::vector<int> const &tail, Element const &c) {
		if (tail[0] + tail[1] <= order)
			s.set(tail[0], tail[1], c);
	});
	return s;
}

TruncSeries2 TruncSeries2::x(RingSpec const &ring, int order)
{
	TruncSeries2 s(ring, order);
	s.set_raw(1, 0, ring.constant(1));
	return s;
}

TruncSeries2 TruncSeries2::y(RingSpec const &ring, int order)
{
	TruncSeries2 s(ring, order);
	s.set_raw(0, 1, ring.constant(1));
	return s;
}

Element TruncSeries2::coeff(int i, int j) const
{
	if (i < 0 || j < 0 || i + j > order_)
		return ring_.zero();
	return Element(ring_, c_[index(i, j)]);
}

void TruncSeries2::set(int i, int j, Element const &value)
{
	require_same_ring(value.ring(), ring_, "series coefficient");
	if (i < 0 || j < 0 || i + j > order_)
		fail(ErrorKind::InvalidArgument, "coefficient index beyond the truncation order");
	c_[index(i, j)] = value.poly();
}

TruncSeries2 TruncSeries2::truncate(int order) const
{
	TruncSeries2 s(ring_, std::min(order, order_));
	std::copy(c_.begin(), c_.begin() + static_cast<long>(index(0, s.order_ + 1)), s.c_.begin());
	return s;
}

TruncSeries2 TruncSeries2::swapped() const
{
	TruncSeries2 s(ring_, order_);
	for (int d = 0; d <= order_; ++d)
		for (int j = 0; j <= d; ++j)
			s.c_[index(d - j, j)] = c_[index(j, d - j)];
	return s;
}

bool TruncSeries2::is_zero() const
{
	return std::all_of(c_.begin(), c_.end(), [](Poly const &p) { return p.is_zero(); });
}

std::string TruncSeries2::to_string(std::string const &x, std::string const &y) const
{
	std::string out;
	for (int d = 0; d <= order_; ++d)
		for (int j = 0; j <= d; ++j)
		{
			std::string mono = power(x, d - j);
			std::string py = power(y, j);
			if (!py.empty())
				mono = mono.empty() ? py : mono + "*" + py;
			append_term(out, coeff(d - j, j), mono);
		}
	return out.empty() ? "0" : out;
}

bool operator==(TruncSeries2 const &a, TruncSeries2 const &b)
{
	return a.order_ == b.order_ && a.ring_ == b.ring_ && a.c_ == b.c_;
}

// ---------------------------------------------------------------- arithmetic

namespace
{

template <class S>
RingSpec const &common_ring(S const &a, S const &b)
{
	require_same_ring(a.ring(), b.ring(), "series operand");
	return a.ring();
}

} // namespace

TruncSeries1 ps_add(TruncSeries1 const &a, TruncSeries1 const &b)
{
	auto const &R = common_ring(a, b);
	TruncSeries1 s(R, std::min(a.order(), b.order()));
	for (int n = 0; n <= s.order(); ++n)
		s.set_raw(n, R.add(a.raw(n), b.raw(n)));
	return s;
}

TruncSeries1 ps_sub(TruncSeries1 const &a, TruncSeries1 const &b)
{
	auto const &R = common_ring(a, b);
	TruncSeries1 s(R, std::min(a.order(), b.order()));
	for (int n = 0; n <= s.order(); ++n)
		s.set_raw(n, R.sub(a.raw(n), b.raw(n)));
	return s;
}

TruncSeries1 ps_neg(TruncSeries1 const &a)
{
	TruncSeries1 s(a.ring(), a.order());
	for (int n = 0; n <= s.order(); ++n)
		s.set_raw(n, a.ring().neg(a.raw(n)));
	return s;
}

TruncSeries1 ps_scale(TruncSeries1 const &a, Element const &c)
{
	require_same_ring(a.ring(), c.ring(), "scalar");
	TruncSeries1 s(a.ring(), a.order());
	for (int n = 0; n <= s.order(); ++n)
		s.set_raw(n, a.ring().mul(a.raw(n), c.poly()));
	return s;
}

TruncSeries2 ps_add(TruncSeries2 const &a, TruncSeries2 const &b)
{
	auto const &R = common_ring(a, b);
	TruncSeries2 s(R, std::min(a.order(), b.order()));
	for (int d = 0; d <= s.order(); ++d)
		for (int j = 0; j <= d; ++j)
			s.set_raw(d - j, j, R.add(a.raw(d - j, j), b.raw(d - j, j)));
	return s;
}

TruncSeries2 ps_sub(TruncSeries2 const &a, TruncSeries2 const &b)
{
	auto const &R = common_ring(a, b);
	TruncSeries2 s(R, std::min(a.order(), b.order()));
	for (int d = 0; d <= s.order(); ++d)
		for (int j = 0; j <= d; ++j)
			s.set_raw(d - j, j, R.sub(a.raw(d - j, j), b.raw(d - j, j)));
	return s;
}

TruncSeries2 ps_scale(TruncSeries2 const &a, Element const &c)
{
	require_same_ring(a.ring(), c.ring(), "scalar");
	TruncSeries2 s(a.ring(), a.order());
	for (int d = 0; d <= s.order(); ++d)
		for (int j = 0; j <= d; ++j)
			s.set_raw(d - j, j, a.ring().mul(a.raw(d - j, j), c.poly()));
	return s;
}

TruncSeries1 ps_mul(TruncSeries1 const &a, TruncSeries1 const &b)
{
	auto const &R = common_ring(a, b);
	int N = std::min(a.order(), b.order());
	TruncSeries1 s(R, N);
	for (int n = 0; n <= N; ++n)
	{
		Poly acc;
		for (int i = 0; i <= n; ++i)
			if (!a.raw(i).is_zero() && !b.raw(n - i).is_zero())
				R.add_product(acc, a.raw(i), b.raw(n - i));
		R.normalize(acc);
		s.set_raw(n, std::move(acc));
	}
	return s;
}

TruncSeries2 ps_mul(TruncSeries2 const &a, TruncSeries2 const &b)
{
	auto const &R = common_ring(a, b);
	int N = std::min(a.order(), b.order());
	std::vector<Poly> acc(TruncSeries2::index(0, N + 1));
	for (int d1 = 0; d1 <= N; ++d1)
		for (int j1 = 0; j1 <= d1; ++j1)
		{
			Poly const &p = a.raw(d1 - j1, j1);
			if (p.is_zero())
				continue;
			for (int d2 = 0; d1 + d2 <= N; ++d2)
				for (int j2 = 0; j2 <= d2; ++j2)
				{
					Poly const &q = b.raw(d2 - j2, j2);
					if (!q.is_zero())
						R.add_product(acc[TruncSeries2::index(d1 - j1 + d2 - j2, j1 + j2)], p, q);
				}
		}
	TruncSeries2 s(R, N);
	for (int d = 0; d <= N; ++d)
		for (int j = 0; j <= d; ++j)
		{
			Poly &p = acc[TruncSeries2::index(d - j, j)];
			R.normalize(p);
			s.set_raw(d - j, j, std::move(p));
		}
	return s;
}

TruncSeries1 ps_compose(TruncSeries1 const &outer, TruncSeries1 const &inner)
{
	auto const &R = common_ring(outer, inner);
	require_no_constant(inner.raw(0), "inner series");
	int N = std::min(outer.order(), inner.order());
	TruncSeries1 acc(R, N);
	for (int n = N; n >= 0; --n)
	{
		if (n < N)
			acc = ps_mul(acc, inner);
		acc.set_raw(0, R.add(acc.raw(0), outer.raw(n)));
	}
	return acc;
}

TruncSeries2 ps_compose(TruncSeries1 const &outer, TruncSeries2 const &inner)
{
	require_same_ring(outer.ring(), inner.ring(), "series operand");
	auto const &R = outer.ring();
	require_no_constant(inner.raw(0, 0), "inner series");
	int N = std::min(outer.order(), inner.order());
	TruncSeries2 acc(R, N);
	for (int n = N; n >= 0; --n)
	{
		if (n < N)
			acc = ps_mul(acc, inner);
		acc.set_raw(0, 0, R.add(acc.raw(0, 0), outer.raw(n)));
	}
	return acc;
}

TruncSeries1 ps_reverse(TruncSeries1 const &g)
{
	auto const &R = g.ring();
	require_no_constant(g.raw(0), "series to reverse");
	Element a1 = g.coeff(1);
	switch (a1.unit_status())
	{
	case UnitStatus::Unit: break;
	case UnitStatus::NotUnit:
		fail(ErrorKind::NotAUnit, "linear coefficient " + a1.to_string() + " is not a unit");
	case UnitStatus::Unknown:
		fail(ErrorKind::UnitUnknown,
		     "cannot decide whether linear coefficient " + a1.to_string() + " is a unit");
	}
	Poly inv = R.inverse(a1.poly());
	int N = g.order();
	TruncSeries1 h(R, N);
	h.set_raw(1, inv);
	for (int n = 2; n <= N; ++n)
	{
		// with h_n = 0, [t^n] g(h) = c; the true h_n contributes a1 * h_n
		Poly c = ps_compose(g.truncate(n), h.truncate(n)).raw(n);
		h.set_raw(n, R.neg(R.mul(c, inv)));
	}
	return h;
}

namespace
{

std::vector<TruncSeries1> powers(TruncSeries1 const &u, int N)
{
	std::vector<TruncSeries1> out;
	out.push_back(TruncSeries1(u.ring(), N));
	out[0].set_raw(0, u.ring().constant(1));
	for (int i = 1; i <= N; ++i)
		out.push_back(ps_mul(out.back(), u));
	return out;
}

std::vector<TruncSeries2> powers(TruncSeries2 const &u, int N)
{
	std::vector<TruncSeries2> out;
	out.push_back(TruncSeries2(u.ring(), N));
	out[0].set_raw(0, 0, u.ring().constant(1));
	for (int i = 1; i <= N; ++i)
		out.push_back(ps_mul(out.back(), u));
	return out;
}

} // namespace

TruncSeries2 ps_subst2(TruncSeries2 const &F, TruncSeries1 const &u, TruncSeries1 const &v)
{
	require_same_ring(F.ring(), u.ring(), "substituted series");
	require_same_ring(F.ring(), v.ring(), "substituted series");
	require_no_constant(u.raw(0), "first substituted series");
	require_no_constant(v.raw(0), "second substituted series");
	auto const &R = F.ring();
	int N = std::min({F.order(), u.order(), v.order()});
	auto U = powers(u.truncate(N), N);
	auto V = powers(v.truncate(N), N);
	std::vector<Poly> acc(TruncSeries2::index(0, N + 1));
	for (int d = 0; d <= N; ++d)
		for (int j = 0; j <= d; ++j)
		{
			int i = d - j;
			Poly const &a = F.raw(i, j);
			if (a.is_zero())
				continue;
			for (int k = i; k <= N; ++k)
			{
				if (U[i].raw(k).is_zero())
					continue;
				Poly t = R.mul(a, U[i].raw(k));
				for (int l = j; k + l <= N; ++l)
					if (!V[j].raw(l).is_zero())
						R.add_product(acc[TruncSeries2::index(k, l)], t, V[j].raw(l));
			}
		}
	TruncSeries2 s(R, N);
	for (int d = 0; d <= N; ++d)
		for (int j = 0; j <= d; ++j)
		{
			Poly &p = acc[TruncSeries2::index(d - j, j)];
			R.normalize(p);
			s.set_raw(d - j, j, std::move(p));
		}
	return s;
}

TruncSeries2 ps_subst2(TruncSeries2 const &F, TruncSeries2 const &u, TruncSeries2 const &v)
{
	require_same_ring(F.ring(), u.ring(), "substituted series");
	require_same_ring(F.ring(), v.ring(), "substituted series");
	require_no_constant(u.raw(0, 0), "first substituted series");
	require_no_constant(v.raw(0, 0), "second substituted series");
	auto const &R = F.ring();
	int N = std::min({F.order(), u.order(), v.order()});
	auto U = powers(u.truncate(N), N);
	auto V = powers(v.truncate(N), N);
	TruncSeries2 acc(R, N);
	for (int i = 0; i <= N; ++i)
	{
		// W_i = sum_j a_ij V^j
		TruncSeries2 w(R, N);
		bool any = false;
		for (int j = 0; i + j <= N; ++j)
			if (!F.raw(i, j).is_zero())
			{
				w = ps_add(w, ps_scale(V[j], F.coeff(i, j)));
				any = true;
			}
		if (any)
			acc = ps_add(acc, ps_mul(U[i], w));
	}
	return acc;
}

TruncSeries1 ps_subst_diag(TruncSeries2 const &F, TruncSeries1 const &u, TruncSeries1 const &v)
{
	require_same_ring(F.ring(), u.ring(), "substituted series");
	require_same_ring(F.ring(), v.ring(), "substituted series");
	require_no_constant(u.raw(0), "first substituted series");
	require_no_constant(v.raw(0), "second substituted series");
	auto const &R = F.ring();
	int N = std::min({F.order(), u.order(), v.order()});
	auto U = powers(u.truncate(N), N);
	auto V = powers(v.truncate(N), N);
	TruncSeries1 acc(R, N);
	for (int i = 0; i <= N; ++i)
	{
		TruncSeries1 w(R, N);
		bool any = false;
		for (int j = 0; i + j <= N; ++j)
			if (!F.raw(i, j).is_zero())
			{
				w = ps_add(w, ps_scale(V[j], F.coeff(i, j)));
				any = true;
			}
		if (any)
			acc = ps_add(acc, ps_mul(U[i], w));
	}
	return acc;
}

TruncSeries1 ps_map(RingHom const &h, TruncSeries1 const &s)
{
	require_same_ring(s.ring(), h.source(), "mapped series");
	TruncSeries1 out(h.target(), s.order());
	for (int n = 0; n <= s.order(); ++n)
		out.set(n, h.apply(s.coeff(n)));
	return out;
}

TruncSeries2 ps_map(RingHom const &h, TruncSeries2 const &s)
{
	require_same_ring(s.ring(), h.source(), "mapped series");
	TruncSeries2 out(h.target(), s.order());
	for (int d = 0; d <= s.order(); ++d)
		for (int j = 0; j <= d; ++j)
			out.set(d - j, j, h.apply(s.coeff(d - j, j)));
	return out;
}

} // namespace formal
