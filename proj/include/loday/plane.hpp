#pragma once

#include "loday/element.hpp"

namespace loday {

/// The double space of an n-dimensional algebra with its canonical
/// symplectic form: letters p_1..p_n (the algebra side) followed by
/// q^1..q^n (the dual side), with omega(p_i, q^j) = delta and
/// omega(q^j, p_i) = -delta, zero on p,p and q,q pairs.
class SymplecticPlane
{
  public:
	SymplecticPlane(int n, Parity regime) : n_(n)
	{
		if (n < 1)
			throw Error("symplectic plane: dimension must be positive");
		std::vector<std::string> names;
		std::vector<Parity> parities;
		for (int i = 1; i <= n; ++i)
		{
			names.push_back("p" + std::to_string(i));
			parities.push_back(regime);
		}
		for (int i = 1; i <= n; ++i)
		{
			names.push_back("q" + std::to_string(i));
			parities.push_back(regime);
		}
		basis_ = make_basis(GradedBasis(std::move(names), std::move(parities)));
	}

	BasisPtr const &basis() const { return basis_; }
	int half() const { return n_; }
	int dim() const { return 2 * n_; }

	int p(int i) const
	{
		check_half(i);
		return i;
	}
	int q(int i) const
	{
		check_half(i);
		return n_ + i;
	}
	bool is_p(int letter) const { return letter < n_; }
	bool is_q(int letter) const { return letter >= n_; }
	/// The base-algebra index of a plane letter.
	int base_index(int letter) const { return is_p(letter) ? letter : letter - n_; }
	/// The conjugate letter: p_i <-> q^i.
	int dual(int letter) const
	{
		return is_p(letter) ? letter + n_ : letter - n_;
	}

	Rational omega(int a, int b) const
	{
		if (is_p(a) && is_q(b) && base_index(a) == base_index(b))
			return 1;
		if (is_q(a) && is_p(b) && base_index(a) == base_index(b))
			return -1;
		return 0;
	}

	/// Bilinear extension to linear elements over the plane basis.
	Rational omega(Element const &x, Element const &y) const
	{
		require_same_basis(x.basis(), basis_);
		require_same_basis(y.basis(), basis_);
		Rational r = 0;
		for (auto const &[u, a] : x.terms())
		{
			if (u.size() != 1)
				throw Error("omega: operands must be linear");
			for (auto const &[v, b] : y.terms())
			{
				if (v.size() != 1)
					throw Error("omega: operands must be linear");
				r += a * b * omega(u[0], v[0]);
			}
		}
		return r;
	}

	bool operator==(SymplecticPlane const &o) const
	{
		return n_ == o.n_ && *basis_ == *o.basis_;
	}

  private:
	void check_half(int i) const
	{
		if (i < 0 || i >= n_)
			throw Error("symplectic plane: index out of range");
	}

	int n_;
	BasisPtr basis_;
};

} // namespace loday
