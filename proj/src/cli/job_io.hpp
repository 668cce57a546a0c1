// JSON decoding of job inputs and encoding of results.
#ifndef FORMAL_SRC_CLI_JOB_IO_HPP
#define FORMAL_SRC_CLI_JOB_IO_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "formal/certify.hpp"
#include "formal/cli.hpp"
#include "formal/diff_forms.hpp"
#include "formal/lrq.hpp"

namespace formal::cli
{

/// Malformed job: exit code 2.
class InputError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

struct Ctx
{
	int order;
	int degree_bound;
};

Ctx read_options(nlohmann::json const &options, Options const &defaults);

/// Reads the fields of one JSON object, rejecting fields nobody asked for.
class Reader
{
  public:
	Reader(nlohmann::json const &j, std::string where);

	std::string string(std::string const &key);
	int integer(std::string const &key);
	std::vector<std::string> strings(std::string const &key);
	std::vector<int> integers(std::string const &key);

	RingSpec ring(std::string const &key);
	Element element(std::string const &key, RingSpec const &ring);
	std::vector<Element> elements(std::string const &key, RingSpec const &ring);
	/// An expression in t, or an array of coefficient strings by degree.
	TruncSeries1 series(std::string const &key, RingSpec const &ring, int order);
	/// Raw bivariate series: "additive", "multiplicative", "log: <series>",
	/// an expression in x and y, or a table {"i,j": coefficient}.
	TruncSeries2 law_series(std::string const &key, RingSpec const &ring, int order);
	/// law_series, required to satisfy the axioms.
	FormalGroupLaw law(std::string const &key, RingSpec const &ring, int order);
	/// {"ring", "law", "coordinates"}
	FGObject object(std::string const &key, int order);
	/// {"<var>": "<image>"} for every source variable.
	RingHom hom(std::string const &key, RingSpec const &source, RingSpec const &target);
	/// {"twist", "coeff", "basisCoord"}
	FormElement form(std::string const &key, RingSpec const &ring);
	Grading grading(std::string const &key);
	/// {"base", "inverted", "invertPrimeTo", "sequence"}
	LRQPresentation presentation(std::string const &key);
	/// {"inverted", "invertPrimeTo", "sequence"} over a given base.
	LRQPresentation presentation_over(std::string const &key, RingSpec const &base);

	/// Throws InputError naming the first unread field.
	void finish() const;

  private:
	nlohmann::json const &need(std::string const &key);
	nlohmann::json const *maybe(std::string const &key);
	std::string at(std::string const &key) const { return where_ + "." + key; }

	nlohmann::json const &j_;
	std::string where_;
	std::set<std::string> used_;
};

/// Coefficient strings c_0..c_N.
nlohmann::json series_json(TruncSeries1 const &s);
/// {"i,j": c_ij} over the nonzero coefficients.
nlohmann::json law_json(TruncSeries2 const &F);
nlohmann::json ring_json(RingSpec const &R);
nlohmann::json presentation_json(LRQPresentation const &P);
nlohmann::json validation_json(LRQValidation const &v);
nlohmann::json hom_json(RingHom const &h);
nlohmann::json extension_json(FreeAlgebra const &B);
nlohmann::json object_json(FGObject const &X);
nlohmann::json violation_json(AxiomViolation const &v);
nlohmann::json form_json(FormElement const &f);

} // namespace formal::cli

#endif
