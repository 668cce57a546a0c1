#ifndef FORMAL_LRQ_HPP
#define FORMAL_LRQ_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formal/hom.hpp"

namespace formal
{

/// (S^-1 base)/(sequence): a localised quotient by a finite sequence.
struct LRQPresentation
{
	RingSpec base;
	InvertedSet inverted;
	std::vector<Element> sequence;

	/// The presentation with nothing inverted and an empty sequence.
	static LRQPresentation identity(RingSpec const &base);
	/// The presented ring. Throws when it is not a triangular quotient.
	RingSpec result() const;
};

enum class Verdict
{
	Accept,
	Reject,
	Unknown,
};

char const *to_string(Verdict v);

struct StepReport
{
	int index;          // position in the sequence
	std::string element;
	std::string method; // triangular | characteristic | zero | unit | finite | determinant | skipped
	Verdict outcome;
	std::string detail; // witness or reason
};

struct LRQValidation
{
	Verdict verdict;
	int failing_step = -1; // first rejecting (or undecided) step; -1 for the localisation
	std::string reason;
	std::vector<StepReport> steps;
	std::optional<RingSpec> result; // when accepted and triangular
};

/// Decides whether each sequence element is a non-zero-divisor modulo its
/// predecessors in S^-1 base, and that the final quotient is nonzero.
LRQValidation lrq_validate(LRQPresentation const &P);

/// Whether the identity on variables induces mutually inverse maps between
/// two quotients of the same polynomial variables.
bool same_quotient(RingSpec const &a, RingSpec const &b);

/// e * u for a unit u of ring such that e * u has no negative powers and
/// coefficients in `base`'s core. Returns (lift, u).
std::pair<Element, Element> clear_to_base(Element const &e, RingSpec const &base);

struct Composition
{
	LRQPresentation presentation;
	std::vector<Element> factors; // unit multipliers used per lifted outer element
};

/// An LRQ of an LRQ: `outer` presents over inner.result(). Both must validate.
Composition lrq_compose(LRQPresentation const &outer, LRQPresentation const &inner);

struct Tensor
{
	LRQPresentation presentation;
	std::map<std::string, std::string> renamed; // second factor: old -> new
};

/// Presentation of A (x) B over the joint polynomial ring. Bases must be
/// polynomial rings over the same coefficient ring.
Tensor lrq_tensor(LRQPresentation const &P, LRQPresentation const &Q);

/// A finite-basis algebra over the result ring of a presentation. table[i][j]
/// lists the coefficients of e_i * e_j in the basis. Optionally the algebra
/// is a known ring `declared` with basis elements and a structure map.
struct FreeAlgebra
{
	std::vector<std::string> basis;
	size_t unit = 0; // index of the basis element equal to 1
	std::vector<std::vector<std::vector<Element>>> table;
	std::optional<RingSpec> declared;
	std::vector<Element> basis_elements; // in `declared`
	std::optional<RingHom> structure;    // result ring -> declared
};

struct FreeModuleCheck
{
	bool accepted;
	std::vector<int> triple; // offending basis indices; -1 marks an unused slot
	std::string message;
};

FreeModuleCheck free_module_certificate(LRQPresentation const &A, FreeAlgebra const &B);

} // namespace formal

#endif
