#pragma once

#include "loday/rational.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace loday {

struct Error : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

enum class Parity : unsigned char
{
	even = 0,
	odd = 1,
};

/// An ordered set of named generators, each with a fixed parity.
class GradedBasis
{
  public:
	GradedBasis(std::vector<std::string> names, std::vector<Parity> parities)
	    : names_(std::move(names)), parities_(std::move(parities))
	{
		if (names_.empty())
			throw Error("basis: generator list is empty");
		if (names_.size() != parities_.size())
			throw Error("basis: parity assignment is not total");
		std::set<std::string> seen(names_.begin(), names_.end());
		if (seen.size() != names_.size())
			throw Error("basis: generator names are not unique");
	}

	static GradedBasis all_even(std::vector<std::string> names)
	{
		std::vector<Parity> p(names.size(), Parity::even);
		return GradedBasis(std::move(names), std::move(p));
	}
	static GradedBasis all_odd(std::vector<std::string> names)
	{
		std::vector<Parity> p(names.size(), Parity::odd);
		return GradedBasis(std::move(names), std::move(p));
	}

	/// "e1".."en", all even (the default naming for abstract algebras).
	static GradedBasis standard(int dim, Parity parity = Parity::even,
	                            std::string const &prefix = "e")
	{
		if (dim < 1)
			throw Error("basis: dimension must be positive");
		std::vector<std::string> names;
		for (int i = 1; i <= dim; ++i)
			names.push_back(prefix + std::to_string(i));
		std::vector<Parity> p(names.size(), parity);
		return GradedBasis(std::move(names), std::move(p));
	}

	int dim() const { return (int)names_.size(); }
	Parity parity(int i) const
	{
		assert(0 <= i && i < dim());
		return parities_[(size_t)i];
	}
	bool odd(int i) const { return parity(i) == Parity::odd; }
	std::string const &name(int i) const
	{
		assert(0 <= i && i < dim());
		return names_[(size_t)i];
	}
	std::optional<int> index_of(std::string_view name) const
	{
		auto it = std::find(names_.begin(), names_.end(), name);
		if (it == names_.end())
			return std::nullopt;
		return (int)(it - names_.begin());
	}

	bool operator==(GradedBasis const &other) const
	{
		return names_ == other.names_ && parities_ == other.parities_;
	}

  private:
	std::vector<std::string> names_;
	std::vector<Parity> parities_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

inline BasisPtr make_basis(GradedBasis b)
{
	return std::make_shared<const GradedBasis>(std::move(b));
}

inline void require_same_basis(BasisPtr const &a, BasisPtr const &b)
{
	assert(a && b);
	if (a != b && !(*a == *b))
		throw Error("operands live over different bases");
}

/// A monomial of the tensor algebra: a finite sequence of generator indices.
/// The empty word exists only as the neutral operand of the shuffle product.
struct Word
{
	std::vector<int> letters;

	Word() = default;
	explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
	Word(std::initializer_list<int> ls) : letters(ls) {}

	int size() const { return (int)letters.size(); }
	bool empty() const { return letters.empty(); }
	int operator[](int i) const { return letters[(size_t)i]; }

	Word sub(int from, int to) const // half-open [from, to)
	{
		assert(0 <= from && from <= to && to <= size());
		return Word(std::vector<int>(letters.begin() + from, letters.begin() + to));
	}
	Word concat(Word const &other) const
	{
		Word r = *this;
		r.letters.insert(r.letters.end(), other.letters.begin(), other.letters.end());
		return r;
	}
	Word append(int letter) const
	{
		Word r = *this;
		r.letters.push_back(letter);
		return r;
	}
	Word reversed() const
	{
		Word r = *this;
		std::reverse(r.letters.begin(), r.letters.end());
		return r;
	}

	bool operator==(Word const &o) const { return letters == o.letters; }
};

/// Canonical total order on words: by length, then lexicographic.
struct WordLess
{
	bool operator()(Word const &a, Word const &b) const
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a.letters < b.letters;
	}
};

inline void validate_word(GradedBasis const &basis, Word const &w)
{
	for (int l : w.letters)
		if (l < 0 || l >= basis.dim())
			throw Error("word: letter index out of range");
}

/// Number of odd letters mod 2; the parity of the monomial.
inline Parity word_parity(GradedBasis const &basis, Word const &w)
{
	int odd = 0;
	for (int l : w.letters)
		if (basis.odd(l))
			odd ^= 1;
	return odd ? Parity::odd : Parity::even;
}

/// Koszul sign of a rearrangement. perm[k] is the original slot of the
/// element now in position k; parities are indexed by original slot.
/// Each inversion of two odd slots contributes a factor -1.
inline int koszul_sign(std::span<const int> perm, std::span<const Parity> parities)
{
	if (perm.size() != parities.size())
		throw Error("koszul_sign: permutation/parity length mismatch");
	int sign = 1;
	for (size_t a = 0; a < perm.size(); ++a)
		for (size_t b = a + 1; b < perm.size(); ++b)
			if (perm[a] > perm[b] && parities[(size_t)perm[a]] == Parity::odd &&
			    parities[(size_t)perm[b]] == Parity::odd)
				sign = -sign;
	return sign;
}

/// Sign of the full reversal of a word: (-1)^{k(k-1)/2} with k odd letters.
inline int reversal_sign(GradedBasis const &basis, Word const &w)
{
	long k = 0;
	for (int l : w.letters)
		if (basis.odd(l))
			++k;
	return (k * (k - 1) / 2) % 2 ? -1 : 1;
}

} // namespace loday
