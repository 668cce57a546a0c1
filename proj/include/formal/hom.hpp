#ifndef FORMAL_HOM_HPP
#define FORMAL_HOM_HPP

#include <map>
#include <string>
#include <vector>

#include "formal/ring.hpp"

namespace formal
{

/// A ring homomorphism given by the images of the source variables.
/// Coefficients map through the canonical map of cores. Construction checks
/// that every relation of the source dies and every inverted variable maps
/// to a unit; failures throw InvalidHom (or UnitUnknown).
class RingHom
{
  public:
	RingHom(RingSpec source, RingSpec target, std::vector<Element> images);

	static RingHom identity(RingSpec const &ring);
	/// Images by variable name; every source variable must be listed.
	static RingHom from_table(RingSpec const &source, RingSpec const &target,
	                          std::map<std::string, Element> const &images);

	RingSpec const &source() const { return source_; }
	RingSpec const &target() const { return target_; }
	std::vector<Element> const &images() const { return images_; }

	Element apply(Element const &e) const;
	/// Evaluate a raw polynomial in the source variables (not reduced in the
	/// source); coefficients must lie in the source core.
	Element apply_poly(Poly const &p) const;

  private:
	RingSpec source_;
	RingSpec target_;
	std::vector<Element> images_;
	std::vector<Element> inverse_images_; // for Laurent variables, else unused
};

Element hom_apply(RingHom const &h, Element const &e);

} // namespace formal

#endif
