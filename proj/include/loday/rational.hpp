#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace loday {

/// Exact arbitrary-precision rational scalar. Always kept in canonical
/// reduced form with positive denominator (guaranteed by the backend).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p", "-p" or "p/q" with optional sign on the numerator.
/// Returns nullopt on malformed input or zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text)
{
	if (text.empty())
		return std::nullopt;
	auto is_int = [](std::string_view s) {
		if (!s.empty() && (s[0] == '+' || s[0] == '-'))
			s.remove_prefix(1);
		if (s.empty())
			return false;
		for (char c : s)
			if (c < '0' || c > '9')
				return false;
		return true;
	};
	auto slash = text.find('/');
	try
	{
		if (slash == std::string_view::npos)
		{
			if (!is_int(text))
				return std::nullopt;
			return Rational(Integer(std::string(text)));
		}
		auto num = text.substr(0, slash);
		auto den = text.substr(slash + 1);
		if (!is_int(num) || !is_int(den))
			return std::nullopt;
		Integer d{std::string(den)};
		if (d == 0)
			return std::nullopt;
		return Rational(Integer(std::string(num)), d);
	}
	catch (std::exception const &)
	{
		return std::nullopt;
	}
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(Rational const &r)
{
	std::ostringstream os;
	if (denominator(r) == 1)
		os << numerator(r);
	else
		os << numerator(r) << '/' << denominator(r);
	return os.str();
}

} // namespace loday
