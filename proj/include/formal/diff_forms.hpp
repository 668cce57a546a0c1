#ifndef FORMAL_DIFF_FORMS_HPP
#define FORMAL_DIFF_FORMS_HPP

#include <string>

#include "formal/fgl.hpp"

namespace formal
{

/// coeff * dx^{(x)m}: a homogeneous element of the graded ring of twisted
/// powers of the cotangent line, in cohomological degree -2m.
struct FormElement
{
	int twist;
	Element coeff;
	std::string basis; // name of the coordinate x

	RingSpec const &ring() const { return coeff.ring(); }
	std::string to_string() const;

	friend bool operator==(FormElement const &a, FormElement const &b)
	{
		return a.twist == b.twist && a.basis == b.basis && a.coeff == b.coeff;
	}
};

enum class Grading
{
	Cohomological,
	Homological,
};

/// Twists add, coefficients multiply. Throws InvalidArgument on a basis mismatch.
FormElement form_mul(FormElement const &a, FormElement const &b);

/// Re-express z in the basis dy^{(x)m} for y = g(x): dy = g'(0) dx, so the
/// coefficient is multiplied by g'(0)^{-m}.
FormElement form_change_basis(FormElement const &z, CoordinateChange const &g,
                              std::string const &new_basis);

/// Degree of z in the requested grading: -2m cohomologically, 2m homologically.
int form_degree(FormElement const &z, Grading grading);
/// Convert a degree between the gradings (D_k = D^{-k}).
int regrade(int degree);
/// The element coeff * dx^{(x)m} sitting in degree k of the given grading.
/// Odd degrees hold only 0, so a nonzero coefficient there throws InvalidArgument.
FormElement form_in_degree(int degree, Grading grading, Element const &coeff,
                           std::string const &basis);

char const *to_string(Grading grading);

} // namespace formal

#endif
