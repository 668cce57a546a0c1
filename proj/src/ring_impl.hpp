#ifndef FORMAL_SRC_RING_IMPL_HPP
#define FORMAL_SRC_RING_IMPL_HPP

#include <optional>
#include <string>
#include <vector>

#include "formal/ring.hpp"

namespace formal
{

struct RingSpec::Impl
{
	Kind kind;
	Core core;
	std::vector<std::string> vars;
	std::vector<bool> laurent;
	std::vector<Relation> rels;
	std::vector<int> lead_rel; // per variable: index into rels, or -1
	std::optional<RingSpec> base;
	InvertedSet inverted;
	std::vector<Element> raw_relations;
	std::string key;
	// only used while a quotient is being built
	std::vector<int> deferred_vars;
	std::vector<Poly> deferred_elements;
};

namespace detail
{

using Impl = RingSpec::Impl;

void reduce_coefficients(Impl const &ring, Poly &p);
void reduce_by_relations(Impl const &ring, Poly &p);
void normalize(Impl const &ring, Poly &p);
bool is_constant(Poly const &p);
void add_product(Impl const &ring, Poly &acc, Poly const &a, Poly const &b);
Poly add(Impl const &ring, Poly const &a, Poly const &b, int sign);
Poly mul(Impl const &ring, Poly const &a, Poly const &b);
Poly constant(Impl const &ring, Rational const &q);
std::vector<Exponents> standard_monomials(Impl const &ring);
std::optional<std::vector<std::vector<Poly>>> multiplication_matrix(Impl const &ring,
                                                                     Poly const &p);
/// Coefficients of det(t*I - A), leading coefficient first.
std::vector<Poly> characteristic_polynomial(Impl const &ring,
                                            std::vector<std::vector<Poly>> const &a);
UnitStatus unit_status(Impl const &ring, Poly const &p);
Poly inverse(Impl const &ring, Poly const &p);

} // namespace detail

} // namespace formal

#endif
