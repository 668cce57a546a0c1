// Text syntax for ring elements: + - * / ^, parentheses, integer literals and
// variable names. Division is by units only; negative powers invert.

#include <algorithm>
#include <cctype>
#include <numeric>

#include "formal/ring.hpp"

namespace formal
{

namespace
{

class Parser
{
  public:
	Parser(RingSpec const &ring, std::string const &text) : ring_(ring), s_(text) {}

	Element parse()
	{
		Element e = expr();
		skip();
		if (pos_ != s_.size())
			error("unexpected '" + std::string(1, s_[pos_]) + "'");
		return e;
	}

  private:
	[[noreturn]] void error(std::string const &msg) const
	{
		fail(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
	}

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool accept(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c)
		{
			++pos_;
			return true;
		}
		return false;
	}

	Element expr()
	{
		Element acc = accept('-') ? -term() : (accept('+'), term());
		for (;;)
		{
			if (accept('+'))
				acc = acc + term();
			else if (accept('-'))
				acc = acc - term();
			else
				return acc;
		}
	}

	Element term()
	{
		Element acc = power();
		for (;;)
		{
			if (accept('*'))
				acc = acc * power();
			else if (accept('/'))
			{
				Element d = power();
				if (d.is_zero())
					error("division by zero");
				acc = acc * d.inverse();
			}
			else
				return acc;
		}
	}

	Element power()
	{
		Element base = atom();
		if (!accept('^'))
			return base;
		bool paren = accept('(');
		bool negative = accept('-');
		skip();
		size_t start = pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			++pos_;
		if (start == pos_)
			error("expected an integer exponent");
		long n = std::stol(s_.substr(start, pos_ - start));
		if (paren && !accept(')'))
			error("expected ')'");
		return base.pow(static_cast<int>(negative ? -n : n));
	}

	Element atom()
	{
		skip();
		if (pos_ >= s_.size())
			error("unexpected end of input");
		char c = s_[pos_];
		if (c == '(')
		{
			++pos_;
			Element e = expr();
			if (!accept(')'))
				error("expected ')'");
			return e;
		}
		if (c == '-')
		{
			++pos_;
			return -power();
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			return ring_.from_rational(Rational(Integer(s_.substr(start, pos_ - start))));
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			size_t start = pos_;
			while (pos_ < s_.size() &&
			       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
				++pos_;
			std::string name = s_.substr(start, pos_ - start);
			if (ring_.var_index(name) < 0)
				fail(ErrorKind::UnknownVariable,
				     "unknown variable '" + name + "' in " + ring_.describe());
			return ring_.var(name);
		}
		error("unexpected '" + std::string(1, c) + "'");
	}

	RingSpec const &ring_;
	std::string const &s_;
	size_t pos_ = 0;
};

int total_degree(Exponents const &e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string monomial(std::vector<std::string> const &vars, Exponents const &e)
{
	std::string out;
	for (size_t v = 0; v < e.size(); ++v)
	{
		if (e[v] == 0)
			continue;
		if (!out.empty())
			out += "*";
		out += vars[v];
		if (e[v] != 1)
			out += "^" + std::to_string(e[v]);
	}
	return out;
}

} // namespace

Element RingSpec::parse(std::string const &text) const { return Parser(*this, text).parse(); }

std::string Element::to_string() const
{
	auto const &terms = poly_.terms;
	if (terms.empty())
		return "0";
	std::vector<Term const *> order;
	for (auto const &t : terms)
		order.push_back(&t);
	std::sort(order.begin(), order.end(), [](Term const *a, Term const *b) {
		int da = total_degree(a->exps), db = total_degree(b->exps);
		if (da != db)
			return da > db;
		return a->exps > b->exps;
	});
	std::string out;
	for (size_t i = 0; i < order.size(); ++i)
	{
		Rational c = order[i]->coeff;
		bool negative = c < 0;
		if (negative)
			c = -c;
		if (i == 0)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		std::string mono = monomial(ring_.vars(), order[i]->exps);
		if (mono.empty())
			out += to_decimal(c);
		else if (c == 1)
			out += mono;
		else
			out += to_decimal(c) + "*" + mono;
	}
	return out;
}

} // namespace formal
