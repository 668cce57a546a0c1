#ifndef FORMAL_CORE_HPP
#define FORMAL_CORE_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "formal/error.hpp"

namespace formal
{

using Integer = mpz_class;
using Rational = mpq_class;

enum class UnitStatus
{
	Unit,
	NotUnit,
	Unknown,
};

char const *to_string(UnitStatus status);

/// The coefficient domain underneath every ring: a localisation of the
/// integers or a prime field of odd characteristic. 2 is always a unit.
///
/// Coefficients are stored as canonical rationals; for PrimeField they are
/// integers in [0, p).
class Core
{
  public:
	enum class Kind
	{
		Rationals,
		LocalizedIntegers, // Z[1/S] for a finite prime set S containing 2
		LocalAtPrime,      // Z_(p): every prime except p inverted
		PrimeField,
	};

	static Core rationals();
	static Core localized_integers(std::vector<unsigned long> primes);
	static Core local_at_prime(unsigned long p);
	static Core prime_field(unsigned long p);

	Kind kind() const { return kind_; }
	std::vector<unsigned long> const &inverted_primes() const { return primes_; }
	/// The distinguished prime of LocalAtPrime / PrimeField, 0 otherwise.
	unsigned long prime() const { return p_; }
	unsigned long characteristic() const { return kind_ == Kind::PrimeField ? p_ : 0; }
	bool is_field() const { return kind_ == Kind::Rationals || kind_ == Kind::PrimeField; }
	bool is_integral_type() const
	{
		return kind_ == Kind::LocalizedIntegers || kind_ == Kind::LocalAtPrime;
	}

	bool contains(Rational const &q) const;
	/// Canonical representative; throws NotInRing if q is not in the ring.
	Rational normalize(Rational const &q) const;
	/// In-place variant for values produced by ring operations (skips the
	/// membership check, which is closed under +, -, *).
	void reduce_in_place(Rational &q) const;
	bool is_unit(Rational const &q) const;
	Rational inverse(Rational const &q) const;

	/// The ring with the integer c additionally inverted. Throws ZeroRing if
	/// c becomes 0.
	Core invert_integer(Integer const &c) const;
	/// Invert every integer prime to q (q == 0: every nonzero integer).
	Core invert_prime_complement(unsigned long q) const;
	/// If c is p times a unit for an odd prime p that is not inverted, p.
	std::optional<unsigned long> characteristic_prime(Rational const &c) const;
	/// Whether the canonical map from this ring into `target` exists.
	bool maps_into(Core const &target) const;

	std::string key() const;
	std::string describe() const;

	friend bool operator==(Core const &a, Core const &b)
	{
		return a.kind_ == b.kind_ && a.p_ == b.p_ && a.primes_ == b.primes_;
	}

  private:
	Core(Kind kind, std::vector<unsigned long> primes, unsigned long p)
	    : kind_(kind), primes_(std::move(primes)), p_(p)
	{}

	Kind kind_;
	std::vector<unsigned long> primes_;
	unsigned long p_;
};

bool is_prime(unsigned long n);
/// Prime factors of |n| (n != 0), ascending and without repetition.
/// Throws UnsupportedLocalisation when a cofactor cannot be split by trial
/// division and is not a probable prime.
std::vector<unsigned long> prime_factors(Integer const &n);

std::string to_decimal(Rational const &q);
Rational parse_rational(std::string const &text);

} // namespace formal

#endif
