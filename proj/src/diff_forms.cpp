#include "formal/diff_forms.hpp"

namespace formal
{

char const *to_string(Grading grading)
{
	return grading == Grading::Cohomological ? "cohomological" : "homological";
}

std::string FormElement::to_string() const
{
	return "(" + coeff.to_string() + ")*d" + basis + "^" + std::to_string(twist);
}

FormElement form_mul(FormElement const &a, FormElement const &b)
{
	if (a.basis != b.basis)
		fail(ErrorKind::InvalidArgument,
		     "forms in bases d" + a.basis + " and d" + b.basis + "; change basis first");
	require_same_ring(a.ring(), b.ring(), "form coefficient");
	return FormElement{a.twist + b.twist, a.coeff * b.coeff, a.basis};
}

FormElement form_change_basis(FormElement const &z, CoordinateChange const &g,
                              std::string const &new_basis)
{
	require_same_ring(z.ring(), g.ring(), "coordinate change");
	// g'(0) is a unit because g is reversible
	Element g1 = g.series().coeff(1);
	return FormElement{z.twist, z.coeff * g1.pow(-z.twist), new_basis};
}

int form_degree(FormElement const &z, Grading grading)
{
	return grading == Grading::Cohomological ? -2 * z.twist : 2 * z.twist;
}

int regrade(int degree) { return -degree; }

FormElement form_in_degree(int degree, Grading grading, Element const &coeff,
                           std::string const &basis)
{
	int cohomological = grading == Grading::Cohomological ? degree : regrade(degree);
	if (cohomological % 2 != 0)
	{
		if (!coeff.is_zero())
			fail(ErrorKind::InvalidArgument,
			     "degree " + std::to_string(degree) + " is odd; only 0 lives there");
		return FormElement{0, coeff, basis};
	}
	return FormElement{-cohomological / 2, coeff, basis};
}

} // namespace formal
