#include "formal/core.hpp"

#include <algorithm>

namespace formal
{

char const *to_string(ErrorKind kind)
{
	switch (kind)
	{
	case ErrorKind::InvalidRing: return "invalid ring";
	case ErrorKind::ZeroRing: return "zero ring";
	case ErrorKind::UnknownVariable: return "unknown variable";
	case ErrorKind::Parse: return "parse error";
	case ErrorKind::RingMismatch: return "ring mismatch";
	case ErrorKind::NotInRing: return "not in ring";
	case ErrorKind::NotAUnit: return "not a unit";
	case ErrorKind::UnitUnknown: return "unit status unknown";
	case ErrorKind::NonzeroConstantTerm: return "nonzero constant term";
	case ErrorKind::NotTriangular: return "not triangular";
	case ErrorKind::UnsupportedLocalisation: return "unsupported localisation";
	case ErrorKind::InvalidHom: return "invalid ring homomorphism";
	case ErrorKind::InvalidArgument: return "invalid argument";
	case ErrorKind::DegreeBoundExceeded: return "degree bound exceeded";
	}
	return "error";
}

char const *to_string(UnitStatus status)
{
	switch (status)
	{
	case UnitStatus::Unit: return "unit";
	case UnitStatus::NotUnit: return "not_unit";
	case UnitStatus::Unknown: return "unknown";
	}
	return "unknown";
}

bool is_prime(unsigned long n)
{
	if (n < 2)
		return false;
	Integer z = n;
	return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::vector<unsigned long> prime_factors(Integer const &n)
{
	if (n == 0)
		fail(ErrorKind::InvalidArgument, "prime_factors of 0");
	Integer m = abs(n);
	std::vector<unsigned long> out;
	for (unsigned long d = 2; d < 1000000 && m > 1; ++d)
	{
		if (Integer d2 = Integer(d) * d; d2 > m)
			break;
		if (mpz_divisible_ui_p(m.get_mpz_t(), d))
		{
			out.push_back(d);
			while (mpz_divisible_ui_p(m.get_mpz_t(), d))
				m /= d;
		}
	}
	if (m > 1)
	{
		if (!m.fits_ulong_p() || mpz_probab_prime_p(m.get_mpz_t(), 30) == 0)
			fail(ErrorKind::UnsupportedLocalisation,
			     "cannot factor " + n.get_str() + " at desk scale");
		out.push_back(m.get_ui());
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::string to_decimal(Rational const &q) { return q.get_str(10); }

Rational parse_rational(std::string const &text)
{
	Rational q;
	if (text.empty() || q.set_str(text, 10) != 0)
		fail(ErrorKind::Parse, "not a rational number: '" + text + "'");
	if (q.get_den() == 0)
		fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
	q.canonicalize();
	return q;
}

namespace
{

// Strip every factor of `primes` from |n|.
Integer strip(Integer n, std::vector<unsigned long> const &primes)
{
	n = abs(n);
	for (unsigned long p : primes)
		while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p))
			n /= p;
	return n;
}

Integer mod_p(Integer const &a, unsigned long p)
{
	Integer r;
	mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
	return r;
}

} // namespace

Core Core::rationals() { return Core(Kind::Rationals, {}, 0); }

Core Core::localized_integers(std::vector<unsigned long> primes)
{
	std::sort(primes.begin(), primes.end());
	primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
	for (unsigned long p : primes)
		if (!is_prime(p))
			fail(ErrorKind::InvalidRing, std::to_string(p) + " is not prime");
	if (!std::binary_search(primes.begin(), primes.end(), 2ul))
		fail(ErrorKind::InvalidRing, "localized integers must invert 2");
	return Core(Kind::LocalizedIntegers, std::move(primes), 0);
}

Core Core::local_at_prime(unsigned long p)
{
	if (p == 2 || !is_prime(p))
		fail(ErrorKind::InvalidRing, "local ring needs an odd prime, got " + std::to_string(p));
	return Core(Kind::LocalAtPrime, {}, p);
}

Core Core::prime_field(unsigned long p)
{
	if (p == 2)
		fail(ErrorKind::InvalidRing, "characteristic 2 is not allowed: 2 must be a unit");
	if (!is_prime(p))
		fail(ErrorKind::InvalidRing, std::to_string(p) + " is not prime");
	return Core(Kind::PrimeField, {}, p);
}

bool Core::contains(Rational const &q) const
{
	Integer const &den = q.get_den();
	switch (kind_)
	{
	case Kind::Rationals: return true;
	case Kind::LocalizedIntegers: return strip(den, primes_) == 1;
	case Kind::LocalAtPrime:
	case Kind::PrimeField: return !mpz_divisible_ui_p(den.get_mpz_t(), p_);
	}
	return false;
}

Rational Core::normalize(Rational const &q) const
{
	if (!contains(q))
		fail(ErrorKind::NotInRing, to_decimal(q) + " is not an element of " + describe());
	Rational r = q;
	reduce_in_place(r);
	return r;
}

void Core::reduce_in_place(Rational &q) const
{
	if (kind_ != Kind::PrimeField)
		return;
	if (q.get_den() == 1)
	{
		q = Rational(mod_p(q.get_num(), p_));
		return;
	}
	Integer inv;
	Integer den = mod_p(q.get_den(), p_);
	Integer pz = p_;
	mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
	q = Rational(mod_p(q.get_num() * inv, p_));
}

bool Core::is_unit(Rational const &q) const
{
	if (q == 0)
		return false;
	Integer const &num = q.get_num();
	switch (kind_)
	{
	case Kind::Rationals: return true;
	case Kind::LocalizedIntegers: return strip(num, primes_) == 1;
	case Kind::LocalAtPrime: return !mpz_divisible_ui_p(num.get_mpz_t(), p_);
	case Kind::PrimeField: return mod_p(num, p_) != 0;
	}
	return false;
}

Rational Core::inverse(Rational const &q) const
{
	if (!is_unit(q))
		fail(ErrorKind::NotAUnit, to_decimal(q) + " is not a unit in " + describe());
	Rational r = 1 / q;
	reduce_in_place(r);
	return r;
}

Core Core::invert_integer(Integer const &c) const
{
	if (c == 0)
		fail(ErrorKind::ZeroRing, "inverting 0 gives the zero ring");
	switch (kind_)
	{
	case Kind::Rationals: return *this;
	case Kind::PrimeField:
		if (mod_p(c, p_) == 0)
			fail(ErrorKind::ZeroRing, "inverting a multiple of the characteristic gives the zero ring");
		return *this;
	case Kind::LocalAtPrime:
		if (mpz_divisible_ui_p(c.get_mpz_t(), p_))
			return rationals();
		return *this;
	case Kind::LocalizedIntegers:
	{
		auto primes = primes_;
		for (unsigned long p : prime_factors(c))
			primes.push_back(p);
		return localized_integers(std::move(primes));
	}
	}
	return *this;
}

Core Core::invert_prime_complement(unsigned long q) const
{
	if (q != 0 && !is_prime(q))
		fail(ErrorKind::InvalidArgument, std::to_string(q) + " is not prime");
	switch (kind_)
	{
	case Kind::Rationals: return *this;
	case Kind::PrimeField:
		if (q != p_)
			fail(ErrorKind::ZeroRing, "inverting the characteristic gives the zero ring");
		return *this;
	case Kind::LocalAtPrime: return q == p_ ? *this : rationals();
	case Kind::LocalizedIntegers:
		if (q == 0 || std::binary_search(primes_.begin(), primes_.end(), q))
			return rationals();
		return local_at_prime(q);
	}
	return *this;
}

std::optional<unsigned long> Core::characteristic_prime(Rational const &c) const
{
	if (!is_integral_type() || c == 0 || is_unit(c))
		return std::nullopt;
	// c is in the ring, so its denominator is a unit; only the numerator matters.
	Integer rest = abs(c.get_num());
	if (kind_ == Kind::LocalizedIntegers)
		rest = strip(rest, primes_);
	else
	{
		int k = 0;
		while (mpz_divisible_ui_p(rest.get_mpz_t(), p_))
		{
			rest /= p_;
			++k;
		}
		return k == 1 ? std::optional<unsigned long>(p_) : std::nullopt;
	}
	if (!rest.fits_ulong_p() || !is_prime(rest.get_ui()))
		return std::nullopt;
	return rest.get_ui();
}

bool Core::maps_into(Core const &target) const
{
	switch (kind_)
	{
	case Kind::PrimeField: return target.kind_ == Kind::PrimeField && target.p_ == p_;
	case Kind::Rationals: return target.kind_ == Kind::Rationals;
	case Kind::LocalAtPrime:
		return target.kind_ == Kind::Rationals ||
		       (target.kind_ == Kind::LocalAtPrime && target.p_ == p_) ||
		       (target.kind_ == Kind::PrimeField && target.p_ == p_);
	case Kind::LocalizedIntegers:
		switch (target.kind_)
		{
		case Kind::Rationals: return true;
		case Kind::LocalizedIntegers:
			return std::includes(target.primes_.begin(), target.primes_.end(), primes_.begin(),
			                     primes_.end());
		case Kind::LocalAtPrime:
		case Kind::PrimeField:
			return !std::binary_search(primes_.begin(), primes_.end(), target.p_);
		}
	}
	return false;
}

std::string Core::key() const
{
	switch (kind_)
	{
	case Kind::Rationals: return "Q";
	case Kind::PrimeField: return "F" + std::to_string(p_);
	case Kind::LocalAtPrime: return "Z(" + std::to_string(p_) + ")";
	case Kind::LocalizedIntegers:
	{
		std::string s = "Z[1/";
		for (size_t i = 0; i < primes_.size(); ++i)
			s += (i ? "," : "") + std::to_string(primes_[i]);
		return s + "]";
	}
	}
	return "?";
}

std::string Core::describe() const { return key(); }

} // namespace formal
