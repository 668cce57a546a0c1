#include "formal/fg_category.hpp"

#include <algorithm>

namespace formal
{

FGObject::FGObject(RingSpec base_, FormalGroupLaw law0_, std::vector<CoordinateChange> coords_)
    : base(std::move(base_)), law0(std::move(law0_)), coords(std::move(coords_))
{
	require_same_ring(law0.ring(), base, "law of x_0");
	for (auto const &h : coords)
		require_same_ring(h.ring(), base, "coordinate");
}

TruncSeries1 FGObject::coordinate(int i) const
{
	if (i == 0)
		return TruncSeries1::identity(base, order());
	return coords.at(static_cast<size_t>(i - 1)).series();
}

bool operator==(FGObject const &a, FGObject const &b)
{
	if (a.base != b.base || a.law0 != b.law0 || a.coords.size() != b.coords.size())
		return false;
	for (size_t i = 0; i < a.coords.size(); ++i)
		if (a.coords[i].series() != b.coords[i].series())
			return false;
	return true;
}

AlgSystem to_alg_system(FGObject const &X)
{
	AlgSystem S;
	S.laws.push_back(X.law0);
	for (auto const &h : X.coords)
		S.laws.push_back(fgl_transform(X.law0, h));
	for (int i = 0; i < X.r(); ++i)
	{
		auto const &next = X.coords[static_cast<size_t>(i)];
		S.isos.push_back(ps_compose(X.coordinate(i), next.inverse_series()));
	}
	return S;
}

FGObject from_alg_system(RingSpec const &base, AlgSystem const &S)
{
	if (S.laws.empty() || S.isos.size() + 1 != S.laws.size())
		fail(ErrorKind::InvalidArgument, "a system needs r+1 laws and r isomorphisms");
	for (size_t i = 0; i < S.isos.size(); ++i)
	{
		auto res = iso_check(S.isos[i], S.laws[i + 1], S.laws[i]);
		if (res.kind == IsoKind::NotIso)
			fail(ErrorKind::InvalidArgument, "f_" + std::to_string(i) + " is not an isomorphism F_" +
			                                     std::to_string(i + 1) + " -> F_" +
			                                     std::to_string(i) + ": " + res.reason);
	}
	std::vector<CoordinateChange> coords;
	TruncSeries1 h = TruncSeries1::identity(base, S.laws[0].order());
	for (auto const &f : S.isos)
	{
		h = ps_compose(ps_reverse(f), h);
		coords.emplace_back(h);
	}
	return FGObject(base, S.laws[0], std::move(coords));
}

namespace
{

std::optional<std::pair<int, int>> first_difference(TruncSeries1 const &a, TruncSeries1 const &b)
{
	int N = std::max(a.order(), b.order());
	for (int n = 0; n <= N; ++n)
		if (a.coeff(n) != b.coeff(n))
			return std::make_pair(n, 0);
	return std::nullopt;
}

std::optional<std::pair<int, int>> first_difference(TruncSeries2 const &a, TruncSeries2 const &b)
{
	int N = std::max(a.order(), b.order());
	for (int d = 0; d <= N; ++d)
		for (int j = 0; j <= d; ++j)
			if (a.coeff(d - j, j) != b.coeff(d - j, j))
				return std::make_pair(d - j, j);
	return std::nullopt;
}

} // namespace

MorphismResult morphism_check(RingHom const &phi, FGObject const &X, FGObject const &Y)
{
	if (X.r() != Y.r())
		fail(ErrorKind::InvalidArgument, "objects have different numbers of coordinates (" +
		                                     std::to_string(X.r()) + " vs " +
		                                     std::to_string(Y.r()) + ")");
	require_same_ring(phi.source(), Y.base, "morphism source");
	require_same_ring(phi.target(), X.base, "morphism target");
	auto law = ps_map(phi, Y.law0.series());
	if (auto idx = first_difference(law, X.law0.series()))
		return MorphismResult{false, "law0", idx,
		                      "image of the law of y_0 differs from the law of x_0 at x^" +
		                          std::to_string(idx->first) + " y^" + std::to_string(idx->second)};
	for (int i = 1; i <= X.r(); ++i)
	{
		auto h = ps_map(phi, Y.coordinate(i));
		if (auto idx = first_difference(h, X.coordinate(i)))
			return MorphismResult{false, "coordinate " + std::to_string(i), idx,
			                      "image of h_" + std::to_string(i) + " differs at t^" +
			                          std::to_string(idx->first)};
	}
	return MorphismResult{true, "", std::nullopt, "accepted"};
}

ClassifyingTable classify_map(FGObject const &X)
{
	ClassifyingTable T;
	int N = X.order();
	for (int d = 2; d <= N; ++d)
		for (int i = 1; i < d; ++i)
			T.law.emplace(std::make_pair(i, d - i), X.law0.coeff(i, d - i));
	T.isos = to_alg_system(X).isos;
	return T;
}

ClassifyingTable map_table(RingHom const &phi, ClassifyingTable const &table)
{
	ClassifyingTable out;
	for (auto const &[idx, value] : table.law)
		out.law.emplace(idx, phi.apply(value));
	for (auto const &f : table.isos)
		out.isos.push_back(ps_map(phi, f));
	return out;
}

FGObject permute_coordinates(FGObject const &X, std::vector<int> const &sigma)
{
	int r = X.r();
	std::vector<int> sorted = sigma;
	std::sort(sorted.begin(), sorted.end());
	bool ok = static_cast<int>(sigma.size()) == r + 1;
	for (int i = 0; ok && i <= r; ++i)
		ok = sorted[static_cast<size_t>(i)] == i;
	if (!ok)
		fail(ErrorKind::InvalidArgument, "not a permutation of 0.." + std::to_string(r));
	CoordinateChange h0(X.coordinate(sigma[0]));
	auto law0 = fgl_transform(X.law0, h0);
	std::vector<CoordinateChange> coords;
	for (int i = 1; i <= r; ++i)
		coords.emplace_back(ps_compose(X.coordinate(sigma[static_cast<size_t>(i)]), h0.inverse_series()));
	return FGObject(X.base, law0, std::move(coords));
}

} // namespace formal
