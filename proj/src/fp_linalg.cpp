#include "fp_linalg.hpp"

namespace formal::fp
{

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
	return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p)
{
	// Fermat: a^(p-2)
	std::uint64_t r = 1, e = p - 2;
	while (e)
	{
		if (e & 1)
			r = mul(r, a, p);
		a = mul(a, a, p);
		e >>= 1;
	}
	return r;
}

Vec Span::reduce(Vec &v) const
{
	Vec combo(inserted_ + 1, 0);
	for (size_t r = 0; r < rows_.size(); ++r)
	{
		std::uint64_t c = v[piv_[r]];
		if (c == 0)
			continue;
		// rows are normalised to pivot 1
		for (size_t k = 0; k < dim_; ++k)
			v[k] = (v[k] + p_ - mul(c, rows_[r][k], p_)) % p_;
		for (size_t i = 0; i < combo_[r].size(); ++i)
			combo[i] = (combo[i] + mul(c, combo_[r][i], p_)) % p_;
	}
	return combo;
}

bool Span::insert(Vec const &v0)
{
	Vec v = v0;
	Vec used = reduce(v);
	size_t pivot = dim_;
	for (size_t k = 0; k < dim_; ++k)
		if (v[k] != 0)
		{
			pivot = k;
			break;
		}
	if (pivot == dim_)
		return false;
	size_t me = inserted_++;
	// new row = (v0 - sum used_i inserted_i) / v[pivot]
	std::uint64_t s = inv(v[pivot], p_);
	for (auto &x : v)
		x = mul(x, s, p_);
	Vec combo(inserted_, 0);
	for (size_t i = 0; i < used.size() && i < me; ++i)
		combo[i] = mul((p_ - used[i]) % p_, s, p_);
	combo[me] = s;
	// keep earlier rows reduced at the new pivot
	for (size_t r = 0; r < rows_.size(); ++r)
	{
		std::uint64_t c = rows_[r][pivot];
		if (c == 0)
			continue;
		for (size_t k = 0; k < dim_; ++k)
			rows_[r][k] = (rows_[r][k] + p_ - mul(c, v[k], p_)) % p_;
		combo_[r].resize(inserted_, 0);
		for (size_t i = 0; i < inserted_; ++i)
			combo_[r][i] = (combo_[r][i] + p_ - mul(c, combo[i], p_)) % p_;
	}
	rows_.push_back(std::move(v));
	piv_.push_back(pivot);
	combo_.push_back(std::move(combo));
	return true;
}

std::optional<Vec> Span::solve(Vec const &v0) const
{
	Vec v = v0;
	Vec used = reduce(v);
	for (auto x : v)
		if (x != 0)
			return std::nullopt;
	used.resize(inserted_);
	return used;
}

std::optional<Vec> kernel_vector(std::vector<Vec> const &m, std::uint64_t p)
{
	size_t rows = m.size();
	size_t cols = rows ? m[0].size() : 0;
	// columns as vectors; a dependency among columns is a kernel vector
	Span span(p, rows);
	for (size_t c = 0; c < cols; ++c)
	{
		Vec col(rows);
		for (size_t r = 0; r < rows; ++r)
			col[r] = m[r][c] % p;
		if (auto sol = span.solve(col))
		{
			Vec x(cols, 0);
			for (size_t i = 0; i < sol->size(); ++i)
				x[i] = (*sol)[i];
			x[c] = (x[c] + p - 1) % p;
			return x;
		}
		span.insert(col);
	}
	return std::nullopt;
}

} // namespace formal::fp
