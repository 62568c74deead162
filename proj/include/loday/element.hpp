#pragma once

#include "loday/graded.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace loday {

/// Sparse formal linear combination of words with rational coefficients.
/// Terms are kept normalized: no zero coefficients, words in canonical order.
/// This is the universal value type for tensor algebras and pairings.
class Element
{
  public:
	using Terms = std::map<Word, Rational, WordLess>;

	explicit Element(BasisPtr basis) : basis_(std::move(basis)) { assert(basis_); }

	static Element zero(BasisPtr basis) { return Element(std::move(basis)); }

	static Element from_word(BasisPtr basis, Word w, Rational coeff = 1)
	{
		validate_word(*basis, w);
		Element e(std::move(basis));
		e.add_term(std::move(w), std::move(coeff));
		return e;
	}

	static Element from_letter(BasisPtr basis, int letter, Rational coeff = 1)
	{
		return from_word(std::move(basis), Word{letter}, std::move(coeff));
	}

	BasisPtr const &basis() const { return basis_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	int term_count() const { return (int)terms_.size(); }

	Rational coeff(Word const &w) const
	{
		auto it = terms_.find(w);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	void add_term(Word w, Rational c)
	{
		if (c == 0)
			return;
		auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(c));
		if (!inserted)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	Element &operator+=(Element const &other)
	{
		require_same_basis(basis_, other.basis_);
		for (auto const &[w, c] : other.terms_)
			add_term(w, c);
		return *this;
	}
	Element &operator-=(Element const &other)
	{
		require_same_basis(basis_, other.basis_);
		for (auto const &[w, c] : other.terms_)
			add_term(w, -c);
		return *this;
	}
	Element &operator*=(Rational const &s)
	{
		if (s == 0)
			terms_.clear();
		else
			for (auto &[w, c] : terms_)
				c *= s;
		return *this;
	}

	friend Element operator+(Element a, Element const &b) { return a += b; }
	friend Element operator-(Element a, Element const &b) { return a -= b; }
	friend Element operator*(Rational const &s, Element a) { return a *= s; }
	friend Element operator-(Element a)
	{
		for (auto &[w, c] : a.terms_)
			c = -c;
		return a;
	}

	bool operator==(Element const &other) const
	{
		return (basis_ == other.basis_ || *basis_ == *other.basis_) &&
		       terms_ == other.terms_;
	}

	/// The smallest/largest word length appearing; 0 if zero.
	int min_length() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }
	int max_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

	/// True when every term has the given length.
	bool homogeneous(int length) const
	{
		for (auto const &[w, c] : terms_)
			if (w.size() != length)
				return false;
		return true;
	}

	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::ostringstream os;
		bool first = true;
		for (auto const &[w, c] : terms_)
		{
			Rational a = c < 0 ? Rational(-c) : c;
			os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
			first = false;
			if (a != 1)
				os << to_string(a) << "*";
			for (int k = 0; k < w.size(); ++k)
				os << (k ? "." : "") << basis_->name(w[k]);
		}
		return os.str();
	}

  private:
	BasisPtr basis_;
	Terms terms_;
};

/// Normalized sum of scaled elements over one shared basis.
inline Element linear_combine(std::vector<std::pair<Rational, Element>> const &pairs)
{
	if (pairs.empty())
		throw Error("linear_combine: empty input");
	Element acc = Element::zero(pairs.front().second.basis());
	for (auto const &[s, e] : pairs)
	{
		require_same_basis(acc.basis(), e.basis());
		for (auto const &[w, c] : e.terms())
			acc.add_term(w, s * c);
	}
	return acc;
}

/// Tensor transposition: each word maps to its reversal, with the Koszul
/// sign of the full reversal. A linear involution.
inline Element transpose(Element const &x)
{
	Element r = Element::zero(x.basis());
	for (auto const &[w, c] : x.terms())
		r.add_term(w.reversed(), Rational(reversal_sign(*x.basis(), w)) * c);
	return r;
}

/// Concatenation product of tensor words, extended bilinearly.
inline Element concat_product(Element const &x, Element const &y)
{
	require_same_basis(x.basis(), y.basis());
	Element r = Element::zero(x.basis());
	for (auto const &[u, a] : x.terms())
		for (auto const &[v, b] : y.terms())
			r.add_term(u.concat(v), a * b);
	return r;
}

/// Graded commutator with respect to concatenation:
/// [x, y] = x (x) y - (-1)^{|x||y|} y (x) x, per word pair.
inline Element graded_commutator(Element const &x, Element const &y)
{
	require_same_basis(x.basis(), y.basis());
	auto const &basis = *x.basis();
	Element r = Element::zero(x.basis());
	for (auto const &[u, a] : x.terms())
		for (auto const &[v, b] : y.terms())
		{
			r.add_term(u.concat(v), a * b);
			int sign = (word_parity(basis, u) == Parity::odd &&
			            word_parity(basis, v) == Parity::odd)
			               ? -1
			               : 1;
			r.add_term(v.concat(u), Rational(-sign) * a * b);
		}
	return r;
}

/// Right-normalized free Lie word [x_1,[x_2,...,[x_{n-1},x_n]]] on letters.
inline Element lie_word(BasisPtr const &basis, Word const &letters)
{
	if (letters.empty())
		throw Error("lie_word: empty word");
	validate_word(*basis, letters);
	Element r = Element::from_letter(basis, letters[letters.size() - 1]);
	for (int k = letters.size() - 2; k >= 0; --k)
		r = graded_commutator(Element::from_letter(basis, letters[k]), r);
	return r;
}

/// Element of the tensor square: linear combination of pairs of words.
/// Used for the cofree coproduct and the coderivation law.
class PairElement
{
  public:
	struct PairLess
	{
		bool operator()(std::pair<Word, Word> const &a,
		                std::pair<Word, Word> const &b) const
		{
			WordLess less;
			if (less(a.first, b.first))
				return true;
			if (less(b.first, a.first))
				return false;
			return less(a.second, b.second);
		}
	};
	using Terms = std::map<std::pair<Word, Word>, Rational, PairLess>;

	explicit PairElement(BasisPtr basis) : basis_(std::move(basis)) {}

	BasisPtr const &basis() const { return basis_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(Word left, Word right, Rational c)
	{
		if (c == 0)
			return;
		auto key = std::make_pair(std::move(left), std::move(right));
		auto [it, inserted] = terms_.try_emplace(std::move(key), std::move(c));
		if (!inserted)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	PairElement &operator+=(PairElement const &other)
	{
		require_same_basis(basis_, other.basis_);
		for (auto const &[p, c] : other.terms_)
			add_term(p.first, p.second, c);
		return *this;
	}
	PairElement &operator-=(PairElement const &other)
	{
		require_same_basis(basis_, other.basis_);
		for (auto const &[p, c] : other.terms_)
			add_term(p.first, p.second, -c);
		return *this;
	}

	bool operator==(PairElement const &other) const
	{
		return (basis_ == other.basis_ || *basis_ == *other.basis_) &&
		       terms_ == other.terms_;
	}

  private:
	BasisPtr basis_;
	Terms terms_;
};

} // namespace loday
