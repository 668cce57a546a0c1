#ifndef FORMAL_CERTIFY_HPP
#define FORMAL_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "formal/fg_category.hpp"
#include "formal/lrq.hpp"

namespace formal
{

/// Finite stand-in for pi_0 MP(r): core[mp_gens][u-blocks], with the first
/// generator of every u-block inverted. Generators map to classifying
/// coefficients by position: mp_gens follow the law coefficients a_ij
/// (i <= j) ordered by (i + j, i); u_blocks[j][k] is the degree k + 1
/// coefficient of the isomorphism f_j.
struct MPSurrogate
{
	RingSpec core;
	std::vector<std::string> mp_gens;
	std::vector<std::vector<std::string>> u_blocks;

	/// Generators a{i}_{j} for i + j <= N and u{j}_{k} for k <= N.
	static MPSurrogate standard(RingSpec const &core, int N, int r);

	int r() const { return static_cast<int>(u_blocks.size()); }
	/// core[mp_gens]
	RingSpec base_ring() const;
	/// core[mp_gens, u-blocks]; the inversions are carried by presentations.
	RingSpec full_ring() const;
	/// Law coefficient indices (i, j) of mp_gens, in order.
	std::vector<std::pair<int, int>> law_indices() const;
};

/// Images of the surrogate generators under the classifying map of X:
/// first the mp_gens, then every u-block in order.
std::vector<Element> surrogate_images(MPSurrogate const &S, ClassifyingTable const &table);

/// A standard ring O_S presented as an LRQ of core[gens] along given
/// generator images.
struct StandardPresentation
{
	LRQPresentation presentation;
	RingSpec target;
	std::vector<Element> images;
	/// "localized-integers", "local", "rationals" or "finite-field".
	std::string kind;
	/// result -> target, generators to their images.
	std::optional<RingHom> to_target;
	/// target -> result, present when the images generate the target.
	std::optional<RingHom> from_target;
	/// The target as a free algebra over the result (subfield case).
	std::optional<FreeAlgebra> extension;
};

/// `base` is a polynomial ring over Z[1/2] whose variables are the
/// generators; images[k] is the image of variable k in `target`.
/// Targets: Z[1/2n], Z_(p), Q, and finite fields F_p[vars]/(relations).
StandardPresentation standard_presentation(RingSpec const &target, RingSpec const &base,
                                           std::vector<Element> const &images,
                                           int degree_bound = 64);

struct GoodnessCertificate
{
	MPSurrogate surrogate;
	LRQPresentation base_presentation;
	/// Over the surrogate full ring.
	LRQPresentation lifted;
	/// Elements v_k appended for the u-generators, over the full ring.
	std::vector<Element> aux_sequence;
	LRQValidation validation;
	std::optional<RingHom> to_target;
	std::optional<RingHom> from_target;
	std::optional<FreeAlgebra> extension;
};

/// Extends a presentation of O_S = X.base over the mp generators to one of
/// O_S over the full surrogate. Throws NotAUnit naming the offending
/// generator if an inverted slot's image is not a unit.
GoodnessCertificate certify_good(FGObject const &X, MPSurrogate const &S,
                                 StandardPresentation const &base, int degree_bound = 64);

/// Variant for presentations whose result ring is its own core (rank 1, no
/// free variables), where every image is a constant.
GoodnessCertificate certify_good(FGObject const &X, MPSurrogate const &S,
                                 LRQPresentation const &base);

} // namespace formal

#endif
