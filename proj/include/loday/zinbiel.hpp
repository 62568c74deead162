#pragma once

#include "loday/element.hpp"

#include <optional>
#include <tuple>
#include <variant>

namespace loday {

namespace detail {

/// Enumerates all size-k index subsets of {0,...,n-1} in lexicographic order.
inline void for_each_subset(int n, int k, auto &&fn)
{
	std::vector<int> pick((size_t)k);
	for (int i = 0; i < k; ++i)
		pick[(size_t)i] = i;
	if (k > n)
		return;
	while (true)
	{
		fn(std::span<const int>(pick));
		int i = k - 1;
		while (i >= 0 && pick[(size_t)i] == n - k + i)
			--i;
		if (i < 0)
			break;
		++pick[(size_t)i];
		for (int j = i + 1; j < k; ++j)
			pick[(size_t)j] = pick[(size_t)j - 1] + 1;
	}
}

} // namespace detail

/// Shuffle product on words: the sum over all interleavings keeping the
/// internal orders, each with its Koszul sign. The empty word is neutral.
inline Element shuffle_words(BasisPtr const &basis, Word const &x, Word const &y)
{
	validate_word(*basis, x);
	validate_word(*basis, y);
	int const a = x.size(), b = y.size(), n = a + b;
	Element r = Element::zero(basis);
	if (n == 0)
		throw Error("shuffle: both operands empty");
	// Choose the output positions of the x-letters; walk once per choice.
	detail::for_each_subset(n, a, [&](std::span<const int> xpos) {
		Word w;
		w.letters.reserve((size_t)n);
		int xi = 0, yi = 0, oddx_left = 0, sign = 1;
		for (int l : x.letters)
			if (basis->odd(l))
				++oddx_left;
		for (int pos = 0; pos < n; ++pos)
		{
			if (xi < a && xpos[(size_t)xi] == pos)
			{
				if (basis->odd(x[xi]))
					--oddx_left;
				w.letters.push_back(x[xi++]);
			}
			else
			{
				// y_j crosses every x-letter not yet placed.
				if (basis->odd(y[yi]) && (oddx_left & 1))
					sign = -sign;
				w.letters.push_back(y[yi++]);
			}
		}
		r.add_term(std::move(w), Rational(sign));
	});
	return r;
}

/// Bilinear extension of the shuffle to elements (empty words allowed no-
/// where; use the word overload for the neutral case).
inline Element shuffle(Element const &x, Element const &y)
{
	require_same_basis(x.basis(), y.basis());
	Element r = Element::zero(x.basis());
	for (auto const &[u, a] : x.terms())
		for (auto const &[v, b] : y.terms())
		{
			Element s = shuffle_words(x.basis(), u, v);
			s *= a * b;
			r += s;
		}
	return r;
}

/// Half-shuffle product of the free Zinbiel algebra on tensor words:
/// x * y = sh(x, y minus last letter) (x) (last letter of y).
inline Element zinbiel_product_words(BasisPtr const &basis, Word const &x, Word const &y)
{
	if (x.empty() || y.empty())
		throw Error("zinbiel product: empty word operand");
	validate_word(*basis, x);
	validate_word(*basis, y);
	int const b = y.size();
	Word head = y.sub(0, b - 1);
	int last = y[b - 1];
	Element sh = head.empty() ? Element::from_word(basis, x)
	                          : shuffle_words(basis, x, head);
	Element r = Element::zero(basis);
	for (auto const &[w, c] : sh.terms())
		r.add_term(w.append(last), c);
	return r;
}

inline Element zinbiel_product(Element const &x, Element const &y)
{
	require_same_basis(x.basis(), y.basis());
	Element r = Element::zero(x.basis());
	for (auto const &[u, a] : x.terms())
		for (auto const &[v, b] : y.terms())
		{
			Element t = zinbiel_product_words(x.basis(), u, v);
			t *= a * b;
			r += t;
		}
	return r;
}

/// Coproduct of the cofree Zinbiel coalgebra: sum over splittings of the
/// first n-1 letters into two increasing blocks, the last letter pinned to
/// the right factor, each splitting signed by its Koszul sign.
inline PairElement cofree_coproduct(BasisPtr const &basis, Word const &w)
{
	validate_word(*basis, w);
	if (w.empty())
		throw Error("coproduct: empty word");
	int const n = w.size();
	PairElement r(basis);
	std::vector<Parity> parities((size_t)n - 1);
	for (int k = 0; k + 1 < n; ++k)
		parities[(size_t)k] = basis->parity(w[k]);
	for (int i = 1; i <= n - 1; ++i)
	{
		detail::for_each_subset(n - 1, i, [&](std::span<const int> left) {
			std::vector<int> perm;
			perm.reserve((size_t)n - 1);
			std::vector<char> in_left((size_t)n - 1, 0);
			for (int s : left)
				in_left[(size_t)s] = 1;
			Word wl, wr;
			for (int s : left)
			{
				perm.push_back(s);
				wl.letters.push_back(w[s]);
			}
			for (int k = 0; k + 1 < n; ++k)
				if (!in_left[(size_t)k])
				{
					perm.push_back(k);
					wr.letters.push_back(w[k]);
				}
			wr.letters.push_back(w[n - 1]);
			int sign = koszul_sign(perm, parities);
			r.add_term(std::move(wl), std::move(wr), Rational(sign));
		});
	}
	return r;
}

inline PairElement cofree_coproduct(Element const &x)
{
	PairElement r(x.basis());
	for (auto const &[w, c] : x.terms())
	{
		PairElement d = cofree_coproduct(x.basis(), w);
		for (auto const &[p, s] : d.terms())
			r.add_term(p.first, p.second, c * s);
	}
	return r;
}

/// An abstract finite-dimensional Zinbiel algebra given by product
/// constants e_i * e_j = sum_k Z_ij^k e_k. Entries absent from the table
/// are zero. The carrier basis is even.
class ZinbielTable
{
  public:
	explicit ZinbielTable(BasisPtr basis) : basis_(std::move(basis))
	{
		for (int i = 0; i < basis_->dim(); ++i)
			if (basis_->odd(i))
				throw Error("zinbiel table: carrier basis must be even");
	}

	static ZinbielTable zero(int dim)
	{
		return ZinbielTable(make_basis(GradedBasis::standard(dim)));
	}

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

	Rational constant(int i, int j, int k) const
	{
		auto it = constants_.find({i, j, k});
		return it == constants_.end() ? Rational(0) : it->second;
	}

	std::map<std::tuple<int, int, int>, Rational> const &constants() const
	{
		return constants_;
	}

	/// Product of two linear combinations of generators (length-1 words).
	Element product(Element const &x, Element const &y) const
	{
		require_same_basis(x.basis(), basis_);
		require_same_basis(y.basis(), basis_);
		Element r = Element::zero(basis_);
		for (auto const &[u, a] : x.terms())
		{
			if (u.size() != 1)
				throw Error("zinbiel table: operands must be linear");
			for (auto const &[v, b] : y.terms())
			{
				if (v.size() != 1)
					throw Error("zinbiel table: operands must be linear");
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

	Element generator(int i) const { return Element::from_letter(basis_, i); }

  private:
	void check_index(int i) const
	{
		if (i < 0 || i >= dim())
			throw Error("zinbiel table: index out of range");
	}

	BasisPtr basis_;
	std::map<std::tuple<int, int, int>, Rational> constants_;
};

/// Outcome of an exhaustive identity check over basis tuples.
struct TableCheckResult
{
	bool pass = true;
	int i = -1, j = -1, k = -1; // first failing triple when !pass
	std::string lhs, rhs;       // printed values of both sides

	explicit operator bool() const { return pass; }
};

/// Exhaustively checks x1*(x2*x3) = (x1*x2 + x2*x1)*x3 on basis triples.
inline TableCheckResult zinbiel_axiom_check(ZinbielTable const &t)
{
	for (int i = 0; i < t.dim(); ++i)
		for (int j = 0; j < t.dim(); ++j)
			for (int k = 0; k < t.dim(); ++k)
			{
				Element ei = t.generator(i), ej = t.generator(j), ek = t.generator(k);
				Element lhs = t.product(ei, t.product(ej, ek));
				Element rhs = t.product(t.product(ei, ej) + t.product(ej, ei), ek);
				if (!(lhs == rhs))
					return {false, i, j, k, lhs.str(), rhs.str()};
			}
	return {};
}

/// A linear map from the generators of a source basis into either a free
/// Zinbiel algebra or a table algebra; carries its unique Zinbiel-morphism
/// lift to the whole tensor algebra.
class LinearMap
{
  public:
	LinearMap(BasisPtr source, BasisPtr free_target, std::vector<Element> images)
	    : source_(std::move(source)), target_(std::move(free_target)),
	      images_(std::move(images))
	{
		validate();
	}
	LinearMap(BasisPtr source, ZinbielTable const *table, std::vector<Element> images)
	    : source_(std::move(source)), target_(table), images_(std::move(images))
	{
		validate();
		auto check = zinbiel_axiom_check(*table);
		if (!check.pass)
			throw Error("universal lift: target fails the Zinbiel axiom at (" +
			            std::to_string(check.i + 1) + "," + std::to_string(check.j + 1) +
			            "," + std::to_string(check.k + 1) + "): " + check.lhs +
			            " != " + check.rhs);
	}

	BasisPtr const &source() const { return source_; }

	Element image(int generator) const { return images_[(size_t)generator]; }

	/// The universal lift on a word: the left-normalized product
	/// (...(f(x1)*f(x2))*...)*f(xn) in the target algebra.
	Element lift(Word const &w) const
	{
		validate_word(*source_, w);
		if (w.empty())
			throw Error("universal lift: empty word");
		Element acc = images_[(size_t)w[0]];
		for (int k = 1; k < w.size(); ++k)
			acc = multiply(acc, images_[(size_t)w[k]]);
		return acc;
	}

	Element lift(Element const &x) const
	{
		require_same_basis(x.basis(), source_);
		Element r = Element::zero(target_basis());
		for (auto const &[w, c] : x.terms())
		{
			Element t = lift(w);
			t *= c;
			r += t;
		}
		return r;
	}

	Element multiply(Element const &a, Element const &b) const
	{
		if (auto const *table = std::get_if<ZinbielTable const *>(&target_))
			return (*table)->product(a, b);
		return zinbiel_product(a, b);
	}

	BasisPtr target_basis() const
	{
		if (auto const *table = std::get_if<ZinbielTable const *>(&target_))
			return (*table)->basis();
		return std::get<BasisPtr>(target_);
	}

  private:
	void validate() const
	{
		if ((int)images_.size() != source_->dim())
			throw Error("linear map: image not defined on every generator");
		for (auto const &img : images_)
			require_same_basis(img.basis(), target_basis());
	}

	BasisPtr source_;
	std::variant<BasisPtr, ZinbielTable const *> target_;
	std::vector<Element> images_;
};

} // namespace loday
