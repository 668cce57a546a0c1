#ifndef FORMAL_SERIES_HPP
#define FORMAL_SERIES_HPP

#include <string>
#include <vector>

#include "formal/ring.hpp"

namespace formal
{

/// c_0 + c_1 t + ... + c_N t^N, terms of degree > N discarded.
class TruncSeries1
{
  public:
	TruncSeries1(RingSpec ring, int order); // zero series
	/// Missing coefficients are zero; coefficients beyond the order are dropped.
	static TruncSeries1 from_coeffs(RingSpec const &ring, int order,
	                                std::vector<Element> const &coeffs);
	/// Parse "t + t^2 - 1/2*t^3"-style text in the variable `var`.
	static TruncSeries1 parse(RingSpec const &ring, int order, std::string const &text,
	                          std::string const &var = "t");
	static TruncSeries1 identity(RingSpec const &ring, int order); // t

	RingSpec const &ring() const { return ring_; }
	int order() const { return order_; }
	Element coeff(int n) const;
	Poly const &raw(int n) const { return c_.at(n); }
	void set(int n, Element const &value);
	void set_raw(int n, Poly value) { c_.at(n) = std::move(value); }
	/// Same coefficients, truncated to a smaller order.
	TruncSeries1 truncate(int order) const;
	bool is_zero() const;

	std::string to_string(std::string const &var = "t") const;

	friend bool operator==(TruncSeries1 const &a, TruncSeries1 const &b);
	friend bool operator!=(TruncSeries1 const &a, TruncSeries1 const &b) { return !(a == b); }

  private:
	RingSpec ring_;
	int order_;
	std::vector<Poly> c_;
};

/// Sum of c_ij x^i y^j over i + j <= N.
class TruncSeries2
{
  public:
	TruncSeries2(RingSpec ring, int order);
	/// Parse text in the variables x and y (names configurable).
	static TruncSeries2 parse(RingSpec const &ring, int order, std::string const &text,
	                          std::string const &x = "x", std::string const &y = "y");
	static TruncSeries2 x(RingSpec const &ring, int order);
	static TruncSeries2 y(RingSpec const &ring, int order);

	RingSpec const &ring() const { return ring_; }
	int order() const { return order_; }
	Element coeff(int i, int j) const;
	Poly const &raw(int i, int j) const { return c_.at(index(i, j)); }
	void set(int i, int j, Element const &value);
	void set_raw(int i, int j, Poly value) { c_.at(index(i, j)) = std::move(value); }
	TruncSeries2 truncate(int order) const;
	/// x <-> y
	TruncSeries2 swapped() const;
	bool is_zero() const;

	std::string to_string(std::string const &x = "x", std::string const &y = "y") const;

	static size_t index(int i, int j)
	{
		size_t d = static_cast<size_t>(i + j);
		return d * (d + 1) / 2 + static_cast<size_t>(j);
	}

	friend bool operator==(TruncSeries2 const &a, TruncSeries2 const &b);
	friend bool operator!=(TruncSeries2 const &a, TruncSeries2 const &b) { return !(a == b); }

  private:
	RingSpec ring_;
	int order_;
	std::vector<Poly> c_;
};

TruncSeries1 ps_add(TruncSeries1 const &a, TruncSeries1 const &b);
TruncSeries1 ps_sub(TruncSeries1 const &a, TruncSeries1 const &b);
TruncSeries1 ps_neg(TruncSeries1 const &a);
TruncSeries1 ps_scale(TruncSeries1 const &a, Element const &c);
TruncSeries2 ps_add(TruncSeries2 const &a, TruncSeries2 const &b);
TruncSeries2 ps_sub(TruncSeries2 const &a, TruncSeries2 const &b);
TruncSeries2 ps_scale(TruncSeries2 const &a, Element const &c);

TruncSeries1 ps_mul(TruncSeries1 const &a, TruncSeries1 const &b);
TruncSeries2 ps_mul(TruncSeries2 const &a, TruncSeries2 const &b);

/// outer(inner(t)); inner must have zero constant term.
TruncSeries1 ps_compose(TruncSeries1 const &outer, TruncSeries1 const &inner);
/// outer(inner(x, y)); inner must have zero constant term.
TruncSeries2 ps_compose(TruncSeries1 const &outer, TruncSeries2 const &inner);

/// Compositional inverse: g(rev(t)) = rev(g(t)) = t. Requires g(0) = 0 and
/// g'(0) a unit.
TruncSeries1 ps_reverse(TruncSeries1 const &g);

/// F(u(x), v(y)).
TruncSeries2 ps_subst2(TruncSeries2 const &F, TruncSeries1 const &u, TruncSeries1 const &v);
/// F(u(x,y), v(x,y)).
TruncSeries2 ps_subst2(TruncSeries2 const &F, TruncSeries2 const &u, TruncSeries2 const &v);
/// F(u(t), v(t)).
TruncSeries1 ps_subst_diag(TruncSeries2 const &F, TruncSeries1 const &u, TruncSeries1 const &v);

/// Coefficient-wise image of a series under a ring homomorphism.
class RingHom;
TruncSeries1 ps_map(RingHom const &h, TruncSeries1 const &s);
TruncSeries2 ps_map(RingHom const &h, TruncSeries2 const &s);

} // namespace formal

#endif
