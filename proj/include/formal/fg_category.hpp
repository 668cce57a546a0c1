#ifndef FORMAL_FG_CATEGORY_HPP
#define FORMAL_FG_CATEGORY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formal/fgl.hpp"
#include "formal/hom.hpp"

namespace formal
{

/// A formal group over `base` with coordinates x_0..x_r, stored as the law
/// of x_0 and substitutions h_i with x_i = h_i(x_0).
struct FGObject
{
	RingSpec base;
	FormalGroupLaw law0;
	std::vector<CoordinateChange> coords; // h_1..h_r

	/// Checks that every piece lives over `base`.
	FGObject(RingSpec base, FormalGroupLaw law0, std::vector<CoordinateChange> coords);

	int r() const { return static_cast<int>(coords.size()); }
	int order() const { return law0.order(); }
	/// h_i for 0 <= i <= r (h_0 = t).
	TruncSeries1 coordinate(int i) const;

	friend bool operator==(FGObject const &a, FGObject const &b);
	friend bool operator!=(FGObject const &a, FGObject const &b) { return !(a == b); }
};

/// Laws F_0..F_r with isomorphisms f_i: F_{i+1} -> F_i, x_i = f_i(x_{i+1}).
struct AlgSystem
{
	std::vector<FormalGroupLaw> laws;
	std::vector<TruncSeries1> isos;

	friend bool operator==(AlgSystem const &a, AlgSystem const &b)
	{
		return a.laws == b.laws && a.isos == b.isos;
	}
};

AlgSystem to_alg_system(FGObject const &X);
/// Inverse of to_alg_system. Throws InvalidArgument if some f_i is not an
/// isomorphism F_{i+1} -> F_i.
FGObject from_alg_system(RingSpec const &base, AlgSystem const &S);

struct MorphismResult
{
	bool accepted;
	/// "law0" or "coordinate i" for the first failing condition.
	std::string condition;
	std::optional<std::pair<int, int>> index; // first differing coefficient
	std::string message;
};

/// phi: Y.base -> X.base. Accepts iff phi maps Y's law and coordinates
/// coefficient-wise onto X's. Throws InvalidArgument on an r mismatch.
MorphismResult morphism_check(RingHom const &phi, FGObject const &X, FGObject const &Y);

/// Images of the surrogate generators: coefficients a_ij (i,j >= 1,
/// i+j <= N) of F_0 and the coefficient lists of the isomorphisms f_i.
struct ClassifyingTable
{
	std::map<std::pair<int, int>, Element> law;
	std::vector<TruncSeries1> isos;
};

ClassifyingTable classify_map(FGObject const &X);
ClassifyingTable map_table(RingHom const &phi, ClassifyingTable const &table);

/// Coordinate i of the result is x_{sigma[i]} of X. sigma is a permutation
/// of 0..r; throws InvalidArgument otherwise.
FGObject permute_coordinates(FGObject const &X, std::vector<int> const &sigma);

} // namespace formal

#endif
