#pragma once

#include "loday/linalg.hpp"
#include "loday/zinbiel.hpp"

#include <functional>

namespace loday {

/// Structure constants of a binary bracket [e_i, e_j] = sum_k C_ij^k e_k.
/// The table is a formal input; whether it satisfies the Leibniz identity
/// is a separate check. Absent entries are zero.
class LeibnizTable
{
  public:
	explicit LeibnizTable(int dim)
	    : basis_(make_basis(GradedBasis::standard(dim)))
	{
	}
	explicit LeibnizTable(BasisPtr basis) : basis_(std::move(basis)) {}

	BasisPtr const &basis() const { return basis_; }
	int dim() const { return basis_->dim(); }

	void set(int i, int j, int k, Rational c)
	{
		check_index(i);
		check_index(j);
		check_index(k);
		if (c == 0)
			constants_.erase({i, j, k});
		else
			constants_[{i, j, k}] = std::move(c);
	}
	void add(int i, int j, int k, Rational c)
	{
		set(i, j, k, constant(i, j, k) + c);
	}

	Rational constant(int i, int j, int k) const
	{
		auto it = constants_.find({i, j, k});
		return it == constants_.end() ? Rational(0) : it->second;
	}

	std::map<std::tuple<int, int, int>, Rational> const &constants() const
	{
		return constants_;
	}

	Element generator(int i) const { return Element::from_letter(basis_, i); }

	/// Bracket of two linear combinations of generators.
	Element bracket(Element const &x, Element const &y) const
	{
		require_same_basis(x.basis(), basis_);
		require_same_basis(y.basis(), basis_);
		Element r = Element::zero(basis_);
		for (auto const &[u, a] : x.terms())
		{
			if (u.size() != 1)
				throw Error("bracket: operands must be linear");
			for (auto const &[v, b] : y.terms())
			{
				if (v.size() != 1)
					throw Error("bracket: operands must be linear");
				for (int k = 0; k < dim(); ++k)
				{
					Rational c = constant(u[0], v[0], k);
					if (c != 0)
						r.add_term(Word{k}, a * b * c);
				}
			}
		}
		return r;
	}

	bool is_abelian() const { return constants_.empty(); }

  private:
	void check_index(int i) const
	{
		if (i < 0 || i >= dim())
			throw Error("leibniz table: index out of range");
	}

	BasisPtr basis_;
	std::map<std::tuple<int, int, int>, Rational> constants_;
};

struct LeibnizCheckResult
{
	bool pass = true;
	int i = -1, j = -1, k = -1;
	std::string residual; // [i,[j,k]] - [[i,j],k] - [j,[i,k]] at the failure

	explicit operator bool() const { return pass; }
};

/// Exhaustive check of [x1,[x2,x3]] = [[x1,x2],x3] + [x2,[x1,x3]] on basis
/// triples; reports the first failing triple with its residual.
inline LeibnizCheckResult leibniz_identity_check(LeibnizTable const &t)
{
	for (int i = 0; i < t.dim(); ++i)
		for (int j = 0; j < t.dim(); ++j)
			for (int k = 0; k < t.dim(); ++k)
			{
				Element ei = t.generator(i), ej = t.generator(j), ek = t.generator(k);
				Element res = t.bracket(ei, t.bracket(ej, ek)) -
				              t.bracket(t.bracket(ei, ej), ek) -
				              t.bracket(ej, t.bracket(ei, ek));
				if (!res.is_zero())
					return {false, i, j, k, res.str()};
			}
	return {};
}

/// An arity-i multilinear map from words of length i to linear elements,
/// identified with a coderivation of the cofree Zinbiel coalgebra. The
/// formal parity is arity+1 mod 2. Absent table rows are zero.
class BarCochain
{
  public:
	BarCochain(BasisPtr basis, int arity) : basis_(std::move(basis)), arity_(arity)
	{
		if (arity_ < 1)
			throw Error("bar cochain: arity must be at least 1");
	}

	BasisPtr const &basis() const { return basis_; }
	int arity() const { return arity_; }
	/// Formal parity tag: 0 = even, 1 = odd; always arity+1 mod 2.
	int parity() const { return (arity_ + 1) & 1; }
	bool is_zero() const { return table_.empty(); }

	void set(Word w, Element value)
	{
		if (w.size() != arity_)
			throw Error("bar cochain: argument length differs from arity");
		validate_word(*basis_, w);
		require_same_basis(value.basis(), basis_);
		if (!value.is_zero() && !value.homogeneous(1))
			throw Error("bar cochain: values must be linear");
		if (value.is_zero())
			table_.erase(w);
		else
			table_[std::move(w)] = std::move(value);
	}

	Element value(Word const &w) const
	{
		assert(w.size() == arity_);
		auto it = table_.find(w);
		return it == table_.end() ? Element::zero(basis_) : it->second;
	}

	/// Multilinear application to an element whose words have length arity.
	Element apply(Element const &x) const
	{
		require_same_basis(x.basis(), basis_);
		Element r = Element::zero(basis_);
		for (auto const &[w, c] : x.terms())
		{
			if (w.size() != arity_)
				throw Error("bar cochain: word length differs from arity");
			Element v = value(w);
			v *= c;
			r += v;
		}
		return r;
	}

	/// Partial application fixing the first argument.
	BarCochain fix_first(int letter) const
	{
		if (arity_ < 2)
			throw Error("bar cochain: cannot fix an argument of a unary map");
		BarCochain r(basis_, arity_ - 1);
		for (auto const &[w, v] : table_)
			if (w[0] == letter)
			{
				Word rest = w.sub(1, arity_);
				r.set(rest, v);
			}
		return r;
	}

	std::map<Word, Element, WordLess> const &table() const { return table_; }

	bool operator==(BarCochain const &o) const
	{
		return arity_ == o.arity_ && (basis_ == o.basis_ || *basis_ == *o.basis_) &&
		       table_ == o.table_;
	}

	/// The binary cochain of a bracket table, over a chosen carrier basis
	/// (typically the odd copy of the table's basis).
	static BarCochain from_bracket(LeibnizTable const &t, BasisPtr carrier)
	{
		if (carrier->dim() != t.dim())
			throw Error("from_bracket: dimension mismatch");
		BarCochain b(carrier, 2);
		for (int i = 0; i < t.dim(); ++i)
			for (int j = 0; j < t.dim(); ++j)
			{
				Element v = Element::zero(carrier);
				for (int k = 0; k < t.dim(); ++k)
				{
					Rational c = t.constant(i, j, k);
					if (c != 0)
						v.add_term(Word{k}, c);
				}
				if (!v.is_zero())
					b.set(Word{i, j}, v);
			}
		return b;
	}

  private:
	BasisPtr basis_;
	int arity_;
	std::map<Word, Element, WordLess> table_;
};

namespace detail {

/// One j-slice of the coderivation extension: terms whose pass-through
/// prefix has length j.
inline Element coderivation_slice(BarCochain const &B, Word const &w, int j)
{
	auto const &basis = *B.basis();
	int const n = w.size(), i = B.arity();
	Element r = Element::zero(B.basis());
	int const head = i + j - 1; // letters subject to the unshuffle
	std::vector<Parity> parities((size_t)head);
	for (int k = 0; k < head; ++k)
		parities[(size_t)k] = basis.parity(w[k]);
	int const formal = ((B.arity() + 1) * j) % 2 ? -1 : 1;
	for_each_subset(head, j, [&](std::span<const int> prefix) {
		std::vector<int> perm;
		perm.reserve((size_t)head);
		std::vector<char> in_prefix((size_t)head, 0);
		for (int s : prefix)
			in_prefix[(size_t)s] = 1;
		Word front, args;
		for (int s : prefix)
		{
			perm.push_back(s);
			front.letters.push_back(w[s]);
		}
		for (int k = 0; k < head; ++k)
			if (!in_prefix[(size_t)k])
			{
				perm.push_back(k);
				args.letters.push_back(w[k]);
			}
		args.letters.push_back(w[head]);
		int sign = koszul_sign(perm, parities) * formal;
		Element v = B.value(args);
		if (v.is_zero())
			return;
		Word tail = w.sub(i + j, n);
		for (auto const &[lw, lc] : v.terms())
			r.add_term(front.concat(lw).concat(tail), Rational(sign) * lc);
	});
	return r;
}

} // namespace detail

/// The unique coderivation extending an arity-i map to longer words: the
/// signed sum over prefix unshuffles, the map consuming a block that ends
/// at a moving pivot letter. Words shorter than the arity go to zero.
inline Element extend_coderivation(BarCochain const &B, Word const &w)
{
	validate_word(*B.basis(), w);
	int const n = w.size(), i = B.arity();
	Element r = Element::zero(B.basis());
	if (n < i)
		return r; // by convention; callers that care treat this as flagged
	for (int j = 0; j + i <= n; ++j)
		r += detail::coderivation_slice(B, w, j);
	return r;
}

inline Element extend_coderivation(BarCochain const &B, Element const &x)
{
	require_same_basis(x.basis(), B.basis());
	Element r = Element::zero(B.basis());
	for (auto const &[w, c] : x.terms())
	{
		Element t = extend_coderivation(B, w);
		t *= c;
		r += t;
	}
	return r;
}

/// Graded commutator of coderivations, corestricted to its generator:
/// arity i+j-1, with sign (-1)^{|B1||B2|} on the reversed composition.
inline BarCochain cochain_commutator(BarCochain const &B1, BarCochain const &B2)
{
	require_same_basis(B1.basis(), B2.basis());
	auto const &basis = B1.basis();
	int const i = B1.arity(), j = B2.arity();
	int const m = i + j - 1;
	int const sign = (B1.parity() && B2.parity()) ? -1 : 1;
	BarCochain r(basis, m);
	std::vector<int> w((size_t)m, 0);
	int const d = basis->dim();
	while (true)
	{
		Word word{std::vector<int>(w)};
		Element v = B1.apply(extend_coderivation(B2, word)) -
		            Rational(sign) * B2.apply(extend_coderivation(B1, word));
		if (!v.is_zero())
			r.set(word, v);
		int pos = m - 1;
		while (pos >= 0 && w[(size_t)pos] == d - 1)
			w[(size_t)pos--] = 0;
		if (pos < 0)
			break;
		++w[(size_t)pos];
	}
	return r;
}

/// The differential [B, -] of a square-zero binary cochain.
inline BarCochain lp_differential(BarCochain const &B, BarCochain const &A)
{
	if (B.arity() != 2)
		throw Error("differential: generator must be binary");
	BarCochain bb = cochain_commutator(B, B);
	if (!bb.is_zero())
		throw Error("differential: [B,B] != 0, not a complex");
	return cochain_commutator(B, A);
}

/// Applies the coderivation extension of B to a right-normalized Lie word.
inline Element apply_to_lie_word(BarCochain const &B, Word const &letters)
{
	if (letters.size() < B.arity())
		throw Error("apply_to_lie_word: fewer letters than the arity");
	return extend_coderivation(B, lie_word(B.basis(), letters));
}

/// The same value computed by the recursion
///   B[x1,...,xn] = B_{x1}[x2,...,xn] + (-1)^{|B|} [x1, B[x2,...,xn]],
/// peeling the first letter until the map saturates. A fully saturated
/// map contributes its value bracketed against the remaining Lie word.
inline Element lie_word_recursion(BarCochain const &B, Word const &letters)
{
	auto const &basis = B.basis();
	int const n = letters.size(), i = B.arity();
	if (n < i)
		throw Error("lie word recursion: fewer letters than the arity");
	if (n == i)
		return B.apply(lie_word(basis, letters));
	Element first = Element::zero(basis);
	Word rest = letters.sub(1, n);
	if (i == 1)
	{
		// Saturated immediately: bracket the value against the tail word.
		first = graded_commutator(B.value(Word{letters[0]}), lie_word(basis, rest));
	}
	else
	{
		first = lie_word_recursion(B.fix_first(letters[0]), rest);
	}
	Element second = graded_commutator(Element::from_letter(basis, letters[0]),
	                                   lie_word_recursion(B, rest));
	if (B.parity())
		second *= Rational(-1);
	return first + second;
}

/// Is x a linear combination of right-normalized Lie words of length n?
inline bool in_lie_span(Element const &x, int n)
{
	auto const &basis = x.basis();
	if (x.is_zero())
		return true;
	if (!x.homogeneous(n))
		return false;
	int const d = basis->dim();
	// All words of length n, in canonical order, as coordinates.
	std::vector<Word> all;
	std::vector<int> w((size_t)n, 0);
	while (true)
	{
		all.push_back(Word{std::vector<int>(w)});
		int pos = n - 1;
		while (pos >= 0 && w[(size_t)pos] == d - 1)
			w[(size_t)pos--] = 0;
		if (pos < 0)
			break;
		++w[(size_t)pos];
	}
	std::map<Word, int, WordLess> coord;
	for (int c = 0; c < (int)all.size(); ++c)
		coord[all[(size_t)c]] = c;
	auto to_vec = [&](Element const &e) {
		std::vector<Rational> v(all.size(), Rational(0));
		for (auto const &[word, c] : e.terms())
			v[(size_t)coord.at(word)] = c;
		return v;
	};
	std::vector<std::vector<Rational>> columns;
	for (auto const &word : all)
		columns.push_back(to_vec(lie_word(basis, word)));
	return in_span(columns, to_vec(x));
}

} // namespace loday
