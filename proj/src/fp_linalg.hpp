// Dense linear algebra over F_p for finite-ring certificates.
#ifndef FORMAL_SRC_FP_LINALG_HPP
#define FORMAL_SRC_FP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace formal::fp
{

using Vec = std::vector<std::uint64_t>;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// Incrementally maintained row-echelon basis of a subspace of F_p^n, with
/// each basis row remembering its combination of the inserted vectors.
class Span
{
  public:
	Span(std::uint64_t p, size_t dim) : p_(p), dim_(dim) {}

	size_t size() const { return rows_.size(); }
	/// Insert v as vector number count(). Returns false, leaving the span
	/// unchanged, if v is already in it.
	bool insert(Vec const &v);
	/// Coefficients c with sum c_i * inserted_i = v, or nullopt.
	std::optional<Vec> solve(Vec const &v) const;
	size_t count() const { return inserted_; }

  private:
	/// Reduce v against the rows; returns the combination used.
	Vec reduce(Vec &v) const;

	std::uint64_t p_;
	size_t dim_;
	size_t inserted_ = 0;
	std::vector<Vec> rows_;   // echelon rows
	std::vector<size_t> piv_; // pivot column per row
	std::vector<Vec> combo_;  // row = sum combo_[r][i] * inserted_i
};

/// A nonzero x with m x = 0 (m is rows x cols), or nullopt if m is injective.
std::optional<Vec> kernel_vector(std::vector<Vec> const &m, std::uint64_t p);

} // namespace formal::fp

#endif
