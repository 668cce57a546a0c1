#include "formal/fgl.hpp"

#include <algorithm>

namespace formal
{

char const *to_string(Axiom axiom)
{
	switch (axiom)
	{
	case Axiom::Unit: return "unit";
	case Axiom::Commutativity: return "commutativity";
	case Axiom::Associativity: return "associativity";
	}
	return "?";
}

char const *to_string(IsoKind kind)
{
	switch (kind)
	{
	case IsoKind::NotIso: return "not_iso";
	case IsoKind::StrictIso: return "strict_iso";
	case IsoKind::GeneralIso: return "general_iso";
	}
	return "?";
}

namespace
{

std::string index_string(std::vector<int> const &idx)
{
	std::string s = "(";
	for (size_t k = 0; k < idx.size(); ++k)
		s += (k ? "," : "") + std::to_string(idx[k]);
	return s + ")";
}

AxiomViolation violation(Axiom axiom, std::vector<int> idx, Element lhs, Element rhs,
                         std::string const &what)
{
	int degree = 0;
	for (int i : idx)
		degree += i;
	std::string msg = std::string(to_string(axiom)) + " axiom fails at degree " +
	                  std::to_string(degree) + ", " + what + " " + index_string(idx) + ": " +
	                  lhs.to_string() + " != " + rhs.to_string();
	return AxiomViolation{axiom, degree, std::move(idx), std::move(lhs), std::move(rhs), msg};
}

std::optional<AxiomViolation> check_unit(TruncSeries2 const &F)
{
	auto const &R = F.ring();
	for (int d = 0; d <= F.order(); ++d)
	{
		Element expected = d == 1 ? R.one() : R.zero();
		if (F.coeff(d, 0) != expected)
			return violation(Axiom::Unit, {d, 0}, F.coeff(d, 0), expected,
			                 "coefficient of x^i y^j in F(x,0) - x at");
		if (F.coeff(0, d) != expected)
			return violation(Axiom::Unit, {0, d}, F.coeff(0, d), expected,
			                 "coefficient of x^i y^j in F(0,y) - y at");
	}
	return std::nullopt;
}

std::optional<AxiomViolation> check_commutativity(TruncSeries2 const &F)
{
	for (int d = 0; d <= F.order(); ++d)
		for (int i = d; 2 * i > d; --i)
			if (F.coeff(i, d - i) != F.coeff(d - i, i))
				return violation(Axiom::Commutativity, {i, d - i}, F.coeff(i, d - i),
				                 F.coeff(d - i, i), "coefficients a_ij vs a_ji at");
	return std::nullopt;
}

/// Compares [x^a y^b z^c] of F(F(x,y),z) and F(x,F(y,z)) without forming
/// trivariate series: with P_i = F^i,
///   F(F(x,y),z) = sum_{i,c} a_ic P_i(x,y) z^c,
///   F(x,F(y,z)) = sum_{a,j} a_aj x^a P_j(y,z).
std::optional<AxiomViolation> check_associativity(TruncSeries2 const &F)
{
	auto const &R = F.ring();
	int N = F.order();
	std::vector<TruncSeries2> P;
	P.push_back(TruncSeries2(R, N));
	P[0].set_raw(0, 0, R.constant(1));
	for (int i = 1; i <= N; ++i)
		P.push_back(ps_mul(P.back(), F));
	for (int d = 0; d <= N; ++d)
		for (int a = d; a >= 0; --a)
			for (int b = d - a; b >= 0; --b)
			{
				int c = d - a - b;
				Poly left, right;
				for (int i = 0; i <= a + b; ++i)
					if (!F.raw(i, c).is_zero() && !P[i].raw(a, b).is_zero())
						R.add_product(left, F.raw(i, c), P[i].raw(a, b));
				for (int j = 0; j <= b + c; ++j)
					if (!F.raw(a, j).is_zero() && !P[j].raw(b, c).is_zero())
						R.add_product(right, F.raw(a, j), P[j].raw(b, c));
				R.normalize(left);
				R.normalize(right);
				if (!(left == right))
					return violation(Axiom::Associativity, {a, b, c}, Element(R, left),
					                 Element(R, right),
					                 "coefficient of x^a y^b z^c in F(F(x,y),z) vs F(x,F(y,z)) at");
			}
	return std::nullopt;
}

} // namespace

FglCheck fgl_validate(TruncSeries2 const &F)
{
	FglCheck out;
	if (auto v = check_unit(F))
		out.violations.push_back(*v);
	if (auto v = check_commutativity(F))
		out.violations.push_back(*v);
	if (F.raw(0, 0).is_zero())
	{
		if (auto v = check_associativity(F))
			out.violations.push_back(*v);
	}
	else
		out.associativity_checked = false;
	if (out.violations.empty())
		out.law = FormalGroupLaw::unchecked(F);
	return out;
}

FormalGroupLaw fgl_require(TruncSeries2 const &F)
{
	auto check = fgl_validate(F);
	if (!check.valid())
		fail(ErrorKind::InvalidArgument, "not a formal group law: " + check.first().message);
	return *check.law;
}

FormalGroupLaw fgl_additive(RingSpec const &ring, int order)
{
	return FormalGroupLaw::unchecked(TruncSeries2::parse(ring, order, "x + y"));
}

FormalGroupLaw fgl_multiplicative(RingSpec const &ring, int order)
{
	return FormalGroupLaw::unchecked(TruncSeries2::parse(ring, order, "x + y + x*y"));
}

FormalGroupLaw fgl_from_log(TruncSeries1 const &log)
{
	auto const &R = log.ring();
	if (R.core().kind() != Core::Kind::Rationals)
		fail(ErrorKind::InvalidArgument,
		     "logarithms need a Q-algebra; " + R.describe() + " is not one");
	if (!log.raw(0).is_zero())
		fail(ErrorKind::NonzeroConstantTerm, "logarithm has a nonzero constant term");
	if (!log.coeff(1).is_one())
		fail(ErrorKind::InvalidArgument, "logarithm must have linear coefficient 1");
	auto exp = ps_reverse(log);
	auto sum = ps_subst2(TruncSeries2::parse(R, log.order(), "x + y"), log, log);
	return FormalGroupLaw::unchecked(ps_compose(exp, sum));
}

CoordinateChange::CoordinateChange(TruncSeries1 g) : g_(std::move(g)), inverse_(ps_reverse(g_)) {}

FormalGroupLaw fgl_transform(FormalGroupLaw const &F, CoordinateChange const &g)
{
	require_same_ring(F.ring(), g.ring(), "coordinate change");
	auto const &gbar = g.inverse_series();
	return FormalGroupLaw::unchecked(ps_compose(g.series(), ps_subst2(F.series(), gbar, gbar)));
}

TruncSeries1 fgl_formal_inverse(FormalGroupLaw const &F)
{
	auto const &R = F.ring();
	int N = F.order();
	auto x = TruncSeries1::identity(R, N);
	TruncSeries1 iota(R, N);
	iota.set_raw(1, R.constant(-1));
	for (int n = 2; n <= N; ++n)
	{
		// a_01 = 1, so iota_n enters [t^n] F(t, iota) linearly with coefficient 1
		Poly c = ps_subst_diag(F.series().truncate(n), x.truncate(n), iota.truncate(n)).raw(n);
		iota.set_raw(n, R.neg(c));
	}
	return iota;
}

IsoResult iso_check(TruncSeries1 const &f, FormalGroupLaw const &source,
                    FormalGroupLaw const &target)
{
	require_same_ring(f.ring(), source.ring(), "isomorphism");
	require_same_ring(f.ring(), target.ring(), "isomorphism");
	if (!f.raw(0).is_zero())
		fail(ErrorKind::NonzeroConstantTerm, "isomorphism has a nonzero constant term");
	Element f1 = f.coeff(1);
	switch (f1.unit_status())
	{
	case UnitStatus::Unit: break;
	case UnitStatus::NotUnit:
		return IsoResult{IsoKind::NotIso, 1, "linear coefficient " + f1.to_string() + " is not a unit"};
	case UnitStatus::Unknown:
		fail(ErrorKind::UnitUnknown, "cannot decide whether " + f1.to_string() + " is a unit");
	}
	auto lhs = ps_compose(f, source.series());
	auto rhs = ps_subst2(target.series(), f, f);
	int N = std::min(lhs.order(), rhs.order());
	for (int d = 0; d <= N; ++d)
		for (int j = 0; j <= d; ++j)
			if (lhs.coeff(d - j, j) != rhs.coeff(d - j, j))
				return IsoResult{IsoKind::NotIso, d,
				                 "f(F(x,y)) and G(f(x),f(y)) differ at x^" + std::to_string(d - j) +
				                     " y^" + std::to_string(j)};
	if (f1.is_one())
		return IsoResult{IsoKind::StrictIso, std::nullopt, "linear coefficient 1"};
	return IsoResult{IsoKind::GeneralIso, std::nullopt,
	                 "linear coefficient " + f1.to_string() + " is a unit other than 1"};
}

} // namespace formal
