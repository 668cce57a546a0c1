#ifndef FORMAL_FGL_HPP
#define FORMAL_FGL_HPP

#include <optional>
#include <string>
#include <vector>

#include "formal/series.hpp"

namespace formal
{

enum class Axiom
{
	Unit,          // F(x,0) = x and F(0,y) = y
	Commutativity, // F(x,y) = F(y,x)
	Associativity, // F(F(x,y),z) = F(x,F(y,z))
};

char const *to_string(Axiom axiom);

/// A bivariate series satisfying the formal group law axioms to its order.
class FormalGroupLaw
{
  public:
	/// Wrap a series already known to satisfy the axioms (e.g. produced by a
	/// transform of a valid law). Use fgl_validate for untrusted input.
	static FormalGroupLaw unchecked(TruncSeries2 series) { return FormalGroupLaw(std::move(series)); }

	TruncSeries2 const &series() const { return F_; }
	RingSpec const &ring() const { return F_.ring(); }
	int order() const { return F_.order(); }
	Element coeff(int i, int j) const { return F_.coeff(i, j); }

	friend bool operator==(FormalGroupLaw const &a, FormalGroupLaw const &b) { return a.F_ == b.F_; }
	friend bool operator!=(FormalGroupLaw const &a, FormalGroupLaw const &b) { return !(a == b); }

  private:
	explicit FormalGroupLaw(TruncSeries2 series) : F_(std::move(series)) {}
	TruncSeries2 F_;
};

/// A failed axiom at the lowest total degree where it fails. `index` is
/// (i,j) for unit/commutativity and (a,b,c) for associativity; `lhs` and
/// `rhs` are the two coefficients that should agree.
struct AxiomViolation
{
	Axiom axiom;
	int degree;
	std::vector<int> index;
	Element lhs;
	Element rhs;
	std::string message;
};

struct FglCheck
{
	std::optional<FormalGroupLaw> law;             // set iff every axiom holds
	std::vector<AxiomViolation> violations;        // one per violated axiom, in check order
	bool associativity_checked = true;             // false when F has a constant term

	bool valid() const { return law.has_value(); }
	AxiomViolation const &first() const { return violations.front(); }
};

/// Checks unit, commutativity, associativity, in that order.
FglCheck fgl_validate(TruncSeries2 const &F);
/// fgl_validate, throwing InvalidArgument with the first violation.
FormalGroupLaw fgl_require(TruncSeries2 const &F);

FormalGroupLaw fgl_additive(RingSpec const &ring, int order);
FormalGroupLaw fgl_multiplicative(RingSpec const &ring, int order);
/// exp(log(x) + log(y)) with exp the reverse of `log`. Needs coefficients in
/// a Q-algebra, log(0) = 0 and log'(0) = 1.
FormalGroupLaw fgl_from_log(TruncSeries1 const &log);

/// An invertible substitution g with g(0) = 0 and g'(0) a unit.
class CoordinateChange
{
  public:
	/// Throws NonzeroConstantTerm / NotAUnit / UnitUnknown.
	explicit CoordinateChange(TruncSeries1 g);

	TruncSeries1 const &series() const { return g_; }
	TruncSeries1 const &inverse_series() const { return inverse_; }
	CoordinateChange inverse() const { return CoordinateChange(inverse_, g_); }
	RingSpec const &ring() const { return g_.ring(); }
	int order() const { return g_.order(); }

  private:
	CoordinateChange(TruncSeries1 g, TruncSeries1 inverse)
	    : g_(std::move(g)), inverse_(std::move(inverse))
	{}
	TruncSeries1 g_;
	TruncSeries1 inverse_;
};

/// F^g(x,y) = g(F(gbar(x), gbar(y))): the law in the coordinate g(old).
FormalGroupLaw fgl_transform(FormalGroupLaw const &F, CoordinateChange const &g);

/// iota with F(x, iota(x)) = 0.
TruncSeries1 fgl_formal_inverse(FormalGroupLaw const &F);

enum class IsoKind
{
	NotIso,
	StrictIso,
	GeneralIso,
};

char const *to_string(IsoKind kind);

struct IsoResult
{
	IsoKind kind;
	std::optional<int> failing_degree; // first degree where f(F(x,y)) != G(f(x),f(y))
	std::string reason;
};

/// Whether f(source(x,y)) = target(f(x), f(y)) with f'(0) a unit.
/// Throws UnitUnknown when f'(0) cannot be decided.
IsoResult iso_check(TruncSeries1 const &f, FormalGroupLaw const &source,
                    FormalGroupLaw const &target);

} // namespace formal

#endif
