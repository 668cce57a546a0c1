#ifndef FORMAL_ERROR_HPP
#define FORMAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace formal
{

enum class ErrorKind
{
	InvalidRing,             // e.g. PrimeField(2), composite modulus
	ZeroRing,                // construction collapses to 1 = 0
	UnknownVariable,
	Parse,
	RingMismatch,
	NotInRing,               // coefficient not representable in the ring
	NotAUnit,
	UnitUnknown,             // unit status undecidable at desk scale
	NonzeroConstantTerm,
	NotTriangular,
	UnsupportedLocalisation,
	InvalidHom,
	InvalidArgument,
	DegreeBoundExceeded,
};

char const *to_string(ErrorKind kind);

/// All library failures carry a kind so callers (the CLI in particular) can
/// map them to outcomes without parsing messages.
class AlgebraError : public std::runtime_error
{
  public:
	AlgebraError(ErrorKind kind, std::string const &what)
	    : std::runtime_error(what), kind_(kind)
	{}

	ErrorKind kind() const noexcept { return kind_; }

  private:
	ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string const &what)
{
	throw AlgebraError(kind, what);
}

} // namespace formal

#endif
