// Subfields of a finite field generated degree by degree, with monic lifts
// of minimal polynomials over the integers.
#ifndef FORMAL_SRC_FIELD_TOWER_HPP
#define FORMAL_SRC_FIELD_TOWER_HPP

#include <map>
#include <string>
#include <vector>

#include "formal/ring.hpp"
#include "fp_linalg.hpp"

namespace formal::detail
{

/// Polynomial in the tower generators; exponent vectors index names().
/// Coefficients are symmetric residues mod p.
using Word = std::map<std::vector<int>, long>;

class FieldTower
{
  public:
	/// `field` must be a finite field (core F_p, no free variables).
	FieldTower(RingSpec field, int degree_bound);

	struct Step
	{
		int degree;
		Word lift; // monic in the new generator
	};
	/// Adjoin a generator with the given value; returns the monic lift of
	/// its minimal polynomial over the current subfield.
	Step adjoin(std::string const &name, Element const &value);
	/// Word whose value is `value`; throws InvalidArgument outside the subfield.
	Word preimage(Element const &value) const;
	bool contains(Element const &value) const;

	std::vector<std::string> const &names() const { return names_; }
	size_t dimension() const { return basis_.size(); }
	size_t field_dimension() const { return monomials_.size(); }
	std::vector<Element> const &basis() const { return basis_; }
	std::vector<Word> const &basis_words() const { return words_; }
	unsigned long prime() const { return p_; }

	fp::Vec vec(Element const &e) const;
	Element value(fp::Vec const &v) const;

  private:
	RingSpec field_;
	int bound_;
	unsigned long p_;
	std::vector<Exponents> monomials_;
	std::vector<std::string> names_;
	std::vector<Element> basis_; // F_p-basis of the subfield
	std::vector<Word> words_;    // basis_[l] as a monomial in the generators
	fp::Span span_;
};

/// Symmetric residue of c mod p.
long symmetric(std::uint64_t c, unsigned long p);

/// The element of `ring` (which has every tower generator as a variable)
/// represented by a word.
Element word_element(RingSpec const &ring, std::vector<std::string> const &names, Word const &w);

/// Whether a finite ring is a field, by enumeration up to `limit` elements.
bool is_finite_field(RingSpec const &ring, size_t limit);

} // namespace formal::detail

#endif
