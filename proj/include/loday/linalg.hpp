#pragma once

#include "loday/graded.hpp"

#include <optional>
#include <vector>

namespace loday {

/// Dense rational matrix, just big enough for the exact linear algebra the
/// checks need (span membership, metric inversion).
class RatMatrix
{
  public:
	RatMatrix(int rows, int cols)
	    : rows_(rows), cols_(cols), data_((size_t)rows * (size_t)cols, Rational(0))
	{
	}

	int rows() const { return rows_; }
	int cols() const { return cols_; }

	Rational &at(int r, int c) { return data_[(size_t)r * (size_t)cols_ + (size_t)c]; }
	Rational const &at(int r, int c) const
	{
		return data_[(size_t)r * (size_t)cols_ + (size_t)c];
	}

	static RatMatrix identity(int n)
	{
		RatMatrix m(n, n);
		for (int i = 0; i < n; ++i)
			m.at(i, i) = 1;
		return m;
	}

	/// In-place reduction to row echelon form; returns the rank.
	int row_reduce()
	{
		int rank = 0;
		for (int col = 0; col < cols_ && rank < rows_; ++col)
		{
			int pivot = -1;
			for (int r = rank; r < rows_; ++r)
				if (at(r, col) != 0)
				{
					pivot = r;
					break;
				}
			if (pivot < 0)
				continue;
			if (pivot != rank)
				for (int c = 0; c < cols_; ++c)
					std::swap(at(pivot, c), at(rank, c));
			Rational inv = Rational(1) / at(rank, col);
			for (int c = col; c < cols_; ++c)
				at(rank, c) *= inv;
			for (int r = 0; r < rows_; ++r)
				if (r != rank && at(r, col) != 0)
				{
					Rational f = at(r, col);
					for (int c = col; c < cols_; ++c)
						at(r, c) -= f * at(rank, c);
				}
			++rank;
		}
		return rank;
	}

	/// Inverse of a square matrix, or nullopt when singular.
	std::optional<RatMatrix> inverse() const
	{
		if (rows_ != cols_)
			return std::nullopt;
		RatMatrix aug(rows_, 2 * cols_);
		for (int r = 0; r < rows_; ++r)
		{
			for (int c = 0; c < cols_; ++c)
				aug.at(r, c) = at(r, c);
			aug.at(r, cols_ + r) = 1;
		}
		if (aug.row_reduce() != rows_)
			return std::nullopt;
		// Rank-complete echelon form of [A|I] has I on the left.
		RatMatrix inv(rows_, cols_);
		for (int r = 0; r < rows_; ++r)
			for (int c = 0; c < cols_; ++c)
				inv.at(r, c) = aug.at(r, cols_ + c);
		return inv;
	}

	bool operator==(RatMatrix const &o) const
	{
		return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
	}

  private:
	int rows_, cols_;
	std::vector<Rational> data_;
};

/// Does target lie in the column span of the given vectors?
inline bool in_span(std::vector<std::vector<Rational>> const &columns,
                    std::vector<Rational> const &target)
{
	size_t dim = target.size();
	RatMatrix m((int)dim, (int)columns.size() + 1);
	for (int c = 0; c < (int)columns.size(); ++c)
	{
		if (columns[(size_t)c].size() != dim)
			throw Error("in_span: dimension mismatch");
		for (int r = 0; r < (int)dim; ++r)
			m.at(r, c) = columns[(size_t)c][(size_t)r];
	}
	RatMatrix without = m;
	for (int r = 0; r < (int)dim; ++r)
		m.at(r, (int)columns.size()) = target[(size_t)r];
	// Column span contains the target iff augmenting does not raise the rank.
	return without.row_reduce() == m.row_reduce();
}

} // namespace loday
