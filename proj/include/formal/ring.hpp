#ifndef FORMAL_RING_HPP
#define FORMAL_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "formal/core.hpp"

namespace formal
{

/// Exponent vector over a ring's variables. Negative entries only occur for
/// inverted variables that lead no relation (Laurent variables).
using Exponents = std::vector<int>;

struct Term
{
	Exponents exps;
	Rational coeff;
};

/// Sparse polynomial: terms sorted by exponent vector (lexicographic), no
/// zero coefficients. The raw representation behind Element; rings interpret
/// and normalise it.
struct Poly
{
	std::vector<Term> terms;

	bool is_zero() const { return terms.empty(); }
	friend bool operator==(Poly const &, Poly const &);
};

class Element;

/// The localisation data of a quotient: explicit elements plus, optionally,
/// "every integer prime to q" (q == 0 meaning every nonzero integer).
struct InvertedSet
{
	std::vector<Element> elements;
	std::optional<unsigned long> integers_prime_to;

	bool empty() const;
};

enum class RelationKind
{
	Zero,           // reduces to 0
	Unit,           // quotient would be the zero ring
	Characteristic, // an odd prime over an integral core
	Triangular,     // monic in a fresh leading variable
	NonTriangular,
};

char const *to_string(RelationKind kind);

enum class Regularity
{
	Regular,
	ZeroDivisor,
	Unknown, // rank too large to decide
};

char const *to_string(Regularity r);

/// An immutable, shareable description of a coefficient ring together with
/// its normal-form machinery.
///
/// Every ring is (core)[vars][laurent^-1] / (triangular relations), where the
/// relations are monic in distinct leading variables and form a Groebner
/// basis, so reduction gives unique normal forms. RingSpec is a cheap handle;
/// copies share the same implementation.
class RingSpec
{
  public:
	enum class Kind
	{
		Rationals,
		LocalizedIntegers,
		LocalAtPrime,
		PrimeField,
		PolynomialRing,
		TriangularQuotient,
	};

	struct Relation
	{
		int lead;
		int degree;
		Poly poly; // monic in `lead`, tail reduced
	};

	static RingSpec rationals();
	static RingSpec localized_integers(std::vector<unsigned long> primes);
	static RingSpec local_at_prime(unsigned long p);
	static RingSpec prime_field(unsigned long p);
	static RingSpec from_core(Core const &core);
	/// Adjoin free variables to any ring.
	static RingSpec polynomial(RingSpec const &base, std::vector<std::string> vars);
	/// (S^-1 base)/(relations). Relations are added in order; each must
	/// classify as Triangular or Characteristic in the ring built so far.
	static RingSpec quotient(RingSpec const &base, InvertedSet const &inverted,
	                         std::vector<Element> const &relations);

	Kind kind() const;
	Core const &core() const;
	std::vector<std::string> const &vars() const;
	int var_index(std::string const &name) const; // -1 if absent
	bool is_laurent(int var) const;
	std::vector<Relation> const &relations() const;
	/// Variables that lead a relation / lead none.
	std::vector<int> leading_vars() const;
	std::vector<int> free_vars() const;

	/// Construction data (for serialisation and homomorphism checks).
	std::optional<RingSpec> base() const;
	InvertedSet const &inverted() const;
	std::vector<Element> const &raw_relations() const;

	/// Whether the ring has finitely many elements, and how many.
	std::optional<Integer> cardinality() const;
	/// Rank over the free part: product of leading degrees.
	Integer rank() const;
	/// Standard monomials in the leading variables (a basis over
	/// core[free vars]).
	std::vector<Exponents> standard_monomials() const;

	Element zero() const;
	Element one() const;
	Element from_rational(Rational const &q) const;
	Element var(std::string const &name) const;
	Element var(int index) const;
	Element parse(std::string const &text) const;
	Element make(Poly poly) const; // normalises

	/// Classify a candidate relation against this ring (see RelationKind).
	RelationKind classify_relation(Element const &e) const;

	std::string const &key() const;
	std::string describe() const;

	friend bool operator==(RingSpec const &a, RingSpec const &b);
	friend bool operator!=(RingSpec const &a, RingSpec const &b) { return !(a == b); }

	// Low-level kernel used by series code. Inputs must be normal forms of
	// this ring unless stated otherwise.
	Poly add(Poly const &a, Poly const &b) const;
	Poly sub(Poly const &a, Poly const &b) const;
	Poly neg(Poly const &a) const;
	Poly mul(Poly const &a, Poly const &b) const;
	Poly scale(Poly const &a, Rational const &c) const;
	/// acc += a*b without reduction; call normalize(acc) afterwards.
	void add_product(Poly &acc, Poly const &a, Poly const &b) const;
	/// Normalise coefficients and reduce modulo the relations.
	void normalize(Poly &p) const;
	Poly constant(Rational const &q) const;
	UnitStatus unit_status(Poly const &p) const;
	Poly inverse(Poly const &p) const; // throws NotAUnit / UnitUnknown
	/// Whether multiplication by p is injective. Decided by the determinant of
	/// the multiplication matrix over core[free vars], which is a domain.
	Regularity regularity(Poly const &p) const;
	/// Matrix of multiplication by p on the standard monomials; entries lie in
	/// core[free vars] (as polys of this ring). nullopt above the rank cap.
	std::optional<std::vector<std::vector<Poly>>> multiplication_matrix(Poly const &p) const;

	struct Impl;

  private:
	explicit RingSpec(std::shared_ptr<Impl const> impl) : impl_(std::move(impl)) {}
	std::shared_ptr<Impl const> impl_;
	friend class QuotientBuilder;
};

/// A normal-form element of a RingSpec.
class Element
{
  public:
	Element(RingSpec ring, Poly poly) : ring_(std::move(ring)), poly_(std::move(poly)) {}

	RingSpec const &ring() const { return ring_; }
	Poly const &poly() const { return poly_; }

	bool is_zero() const { return poly_.is_zero(); }
	bool is_one() const;
	/// The value when the element is a constant (no variables).
	std::optional<Rational> constant_value() const;
	UnitStatus unit_status() const { return ring_.unit_status(poly_); }
	Element inverse() const { return Element(ring_, ring_.inverse(poly_)); }
	Element pow(int n) const;

	std::string to_string() const;

	friend Element operator+(Element const &a, Element const &b);
	friend Element operator-(Element const &a, Element const &b);
	friend Element operator*(Element const &a, Element const &b);
	friend Element operator-(Element const &a);
	friend bool operator==(Element const &a, Element const &b);
	friend bool operator!=(Element const &a, Element const &b) { return !(a == b); }

  private:
	RingSpec ring_;
	Poly poly_;
};

/// Decision procedure for units (see RingSpec::unit_status).
UnitStatus is_unit(Element const &e);
/// The normal form of `raw` (which may use any variables of the ring).
Element nf_reduce(RingSpec const &ring, std::string const &raw);

void require_same_ring(RingSpec const &a, RingSpec const &b, char const *what);

} // namespace formal

#endif
