#include "job_io.hpp"

#include <regex>

namespace formal::cli
{

using nlohmann::json;

Ctx read_options(json const &options, Options const &defaults)
{
	if (!options.is_object())
		throw InputError("options must be an object");
	Ctx ctx{defaults.order, defaults.degree_bound};
	for (auto const &[key, value] : options.items())
	{
		if (!value.is_number_integer())
			throw InputError("option " + key + " must be an integer");
		if (key == "order")
			ctx.order = value.get<int>();
		else if (key == "degreeBound")
			ctx.degree_bound = value.get<int>();
		else
			throw InputError("unknown option '" + key + "'");
	}
	if (ctx.order < 1 || ctx.order > 64)
		throw InputError("order must lie in 1..64");
	if (ctx.degree_bound < 1)
		throw InputError("degreeBound must be positive");
	return ctx;
}

Reader::Reader(json const &j, std::string where) : j_(j), where_(std::move(where))
{
	if (!j_.is_object())
		throw InputError(where_ + " must be an object");
}

json const &Reader::need(std::string const &key)
{
	if (!j_.contains(key))
		throw InputError("missing field " + at(key));
	used_.insert(key);
	return j_.at(key);
}

json const *Reader::maybe(std::string const &key)
{
	if (!j_.contains(key))
		return nullptr;
	used_.insert(key);
	return &j_.at(key);
}

void Reader::finish() const
{
	for (auto const &[key, value] : j_.items())
		if (!used_.count(key))
			throw InputError("unknown field " + at(key));
}

std::string Reader::string(std::string const &key)
{
	auto const &v = need(key);
	if (!v.is_string())
		throw InputError(at(key) + " must be a string");
	return v.get<std::string>();
}

int Reader::integer(std::string const &key)
{
	auto const &v = need(key);
	if (!v.is_number_integer())
		throw InputError(at(key) + " must be an integer");
	return v.get<int>();
}

namespace
{

std::vector<std::string> string_list(json const &v, std::string const &where)
{
	if (!v.is_array())
		throw InputError(where + " must be an array of strings");
	std::vector<std::string> out;
	for (auto const &s : v)
	{
		if (!s.is_string())
			throw InputError(where + " must be an array of strings");
		out.push_back(s.get<std::string>());
	}
	return out;
}

Core parse_core(std::string const &text)
{
	std::smatch m;
	if (text == "Q")
		return Core::rationals();
	if (std::regex_match(text, m, std::regex(R"(F_?(\d+))")))
		return Core::prime_field(std::stoul(m[1]));
	if (std::regex_match(text, m, std::regex(R"(Z_\((\d+)\))")))
		return Core::local_at_prime(std::stoul(m[1]));
	if (std::regex_match(text, m, std::regex(R"(Z\[(1/\d+(,\s*1/\d+)*)\])")))
	{
		std::vector<unsigned long> primes;
		std::string list = m[1];
		std::regex item(R"(1/(\d+))");
		for (auto it = std::sregex_iterator(list.begin(), list.end(), item); it != std::sregex_iterator(); ++it)
		{
			Integer n((*it)[1].str());
			if (n < 2)
				throw InputError("cannot invert " + n.get_str() + " in core " + text);
			for (unsigned long p : prime_factors(n))
				primes.push_back(p);
		}
		return Core::localized_integers(primes);
	}
	throw InputError("unrecognised core '" + text + "' (use Q, Fp, Z_(p) or Z[1/n,...])");
}

std::optional<unsigned long> prime_to(json const *v, std::string const &where)
{
	if (!v)
		return std::nullopt;
	if (!v->is_string() || !std::regex_match(v->get<std::string>(), std::regex(R"(\d+)")))
		throw InputError(where + " must be a decimal string");
	return std::stoul(v->get<std::string>());
}

} // namespace

std::vector<std::string> Reader::strings(std::string const &key) { return string_list(need(key), at(key)); }

std::vector<int> Reader::integers(std::string const &key)
{
	auto const &v = need(key);
	if (!v.is_array())
		throw InputError(at(key) + " must be an array of integers");
	std::vector<int> out;
	for (auto const &x : v)
	{
		if (!x.is_number_integer())
			throw InputError(at(key) + " must be an array of integers");
		out.push_back(x.get<int>());
	}
	return out;
}

RingSpec Reader::ring(std::string const &key)
{
	Reader r(need(key), at(key));
	auto core = RingSpec::from_core(parse_core(r.string("core")));
	std::vector<std::string> vars;
	if (auto v = r.maybe("vars"))
		vars = string_list(*v, r.at("vars"));
	RingSpec base = vars.empty() ? core : RingSpec::polynomial(core, vars);
	InvertedSet inv;
	inv.integers_prime_to = prime_to(r.maybe("invertPrimeTo"), r.at("invertPrimeTo"));
	std::vector<Element> rels;
	if (auto v = r.maybe("inverted"))
		for (auto const &s : string_list(*v, r.at("inverted")))
			inv.elements.push_back(base.parse(s));
	if (auto v = r.maybe("relations"))
		for (auto const &s : string_list(*v, r.at("relations")))
			rels.push_back(base.parse(s));
	r.finish();
	return RingSpec::quotient(base, inv, rels);
}

Element Reader::element(std::string const &key, RingSpec const &ring) { return ring.parse(string(key)); }

std::vector<Element> Reader::elements(std::string const &key, RingSpec const &ring)
{
	std::vector<Element> out;
	for (auto const &s : strings(key))
		out.push_back(ring.parse(s));
	return out;
}

namespace
{

TruncSeries1 series_from(json const &v, std::string const &where, RingSpec const &ring, int order)
{
	if (v.is_string())
		return TruncSeries1::parse(ring, order, v.get<std::string>());
	auto coeffs = string_list(v, where);
	if (coeffs.size() > static_cast<size_t>(order) + 1)
		throw InputError(where + " has more coefficients than order + 1");
	TruncSeries1 s(ring, order);
	for (size_t k = 0; k < coeffs.size(); ++k)
		s.set(static_cast<int>(k), ring.parse(coeffs[k]));
	return s;
}

TruncSeries2 table_from(json const &v, std::string const &where, RingSpec const &ring, int order)
{
	TruncSeries2 F(ring, order);
	std::regex key(R"((\d+),(\d+))");
	for (auto const &[k, c] : v.items())
	{
		std::smatch m;
		if (!std::regex_match(k, m, key) || !c.is_string())
			throw InputError(where + " entries must be \"i,j\": \"coefficient\"");
		int i = std::stoi(m[1]), j = std::stoi(m[2]);
		if (i + j > order)
			throw InputError(where + "." + k + " exceeds the order");
		F.set(i, j, ring.parse(c.get<std::string>()));
	}
	return F;
}

} // namespace

TruncSeries1 Reader::series(std::string const &key, RingSpec const &ring, int order)
{
	return series_from(need(key), at(key), ring, order);
}

TruncSeries2 Reader::law_series(std::string const &key, RingSpec const &ring, int order)
{
	auto const &v = need(key);
	if (v.is_object())
		return table_from(v, at(key), ring, order);
	auto text = string(key);
	if (text == "additive")
		return fgl_additive(ring, order).series();
	if (text == "multiplicative")
		return fgl_multiplicative(ring, order).series();
	if (text.rfind("log:", 0) == 0)
		return fgl_from_log(TruncSeries1::parse(ring, order, text.substr(4))).series();
	return TruncSeries2::parse(ring, order, text);
}

FormalGroupLaw Reader::law(std::string const &key, RingSpec const &ring, int order)
{
	return fgl_require(law_series(key, ring, order));
}

FGObject Reader::object(std::string const &key, int order)
{
	Reader r(need(key), at(key));
	auto ring = r.ring("ring");
	auto F = r.law("law", ring, order);
	std::vector<CoordinateChange> coords;
	if (auto v = r.maybe("coordinates"))
	{
		if (!v->is_array())
			throw InputError(r.at("coordinates") + " must be an array");
		for (size_t i = 0; i < v->size(); ++i)
			coords.emplace_back(series_from((*v)[i], r.at("coordinates") + "[" + std::to_string(i) + "]", ring, order));
	}
	r.finish();
	return FGObject(ring, F, coords);
}

RingHom Reader::hom(std::string const &key, RingSpec const &source, RingSpec const &target)
{
	auto const &v = need(key);
	if (!v.is_object())
		throw InputError(at(key) + " must map variable names to images");
	std::map<std::string, Element> images;
	for (auto const &[name, image] : v.items())
	{
		if (!image.is_string())
			throw InputError(at(key) + "." + name + " must be a string");
		images.emplace(name, target.parse(image.get<std::string>()));
	}
	return RingHom::from_table(source, target, images);
}

FormElement Reader::form(std::string const &key, RingSpec const &ring)
{
	Reader r(need(key), at(key));
	FormElement f{r.integer("twist"), r.element("coeff", ring), r.string("basisCoord")};
	r.finish();
	return f;
}

Grading Reader::grading(std::string const &key)
{
	auto g = string(key);
	if (g == "cohomological")
		return Grading::Cohomological;
	if (g == "homological")
		return Grading::Homological;
	throw InputError(at(key) + " must be cohomological or homological");
}

namespace
{

void read_localisation(Reader &r, json const *inverted, json const *marker, std::string const &where,
                       LRQPresentation &P)
{
	P.inverted.integers_prime_to = prime_to(marker, where + ".invertPrimeTo");
	if (inverted)
		for (auto const &s : string_list(*inverted, where + ".inverted"))
			P.inverted.elements.push_back(P.base.parse(s));
	(void)r;
}

} // namespace

LRQPresentation Reader::presentation(std::string const &key)
{
	Reader r(need(key), at(key));
	auto P = LRQPresentation::identity(r.ring("base"));
	read_localisation(r, r.maybe("inverted"), r.maybe("invertPrimeTo"), at(key), P);
	if (auto v = r.maybe("sequence"))
		for (auto const &s : string_list(*v, r.at("sequence")))
			P.sequence.push_back(P.base.parse(s));
	r.finish();
	return P;
}

LRQPresentation Reader::presentation_over(std::string const &key, RingSpec const &base)
{
	Reader r(need(key), at(key));
	auto P = LRQPresentation::identity(base);
	read_localisation(r, r.maybe("inverted"), r.maybe("invertPrimeTo"), at(key), P);
	if (auto v = r.maybe("sequence"))
		for (auto const &s : string_list(*v, r.at("sequence")))
			P.sequence.push_back(P.base.parse(s));
	r.finish();
	return P;
}

json ring_json(RingSpec const &R) { return json{{"description", R.describe()}, {"vars", R.vars()}}; }

json presentation_json(LRQPresentation const &P)
{
	json j;
	j["base"] = ring_json(P.base);
	j["inverted"] = json::array();
	for (auto const &e : P.inverted.elements)
		j["inverted"].push_back(e.to_string());
	if (P.inverted.integers_prime_to)
		j["invertPrimeTo"] = std::to_string(*P.inverted.integers_prime_to);
	j["sequence"] = json::array();
	for (auto const &e : P.sequence)
		j["sequence"].push_back(e.to_string());
	return j;
}

json validation_json(LRQValidation const &v)
{
	json j;
	j["verdict"] = to_string(v.verdict);
	j["reason"] = v.reason;
	if (v.failing_step >= 0)
		j["failingStep"] = v.failing_step + 1;
	j["steps"] = json::array();
	for (auto const &s : v.steps)
		j["steps"].push_back(json{{"step", s.index + 1},
		                          {"element", s.element},
		                          {"method", s.method},
		                          {"outcome", to_string(s.outcome)},
		                          {"detail", s.detail}});
	if (v.result)
	{
		j["result"] = ring_json(*v.result);
		if (auto card = v.result->cardinality())
			j["result"]["cardinality"] = card->get_str();
	}
	return j;
}

json hom_json(RingHom const &h)
{
	json images = json::object();
	for (size_t v = 0; v < h.source().vars().size(); ++v)
		images[h.source().vars()[v]] = h.images()[v].to_string();
	return json{{"source", h.source().describe()}, {"target", h.target().describe()}, {"images", images}};
}

json extension_json(FreeAlgebra const &B)
{
	json table = json::array();
	for (auto const &row : B.table)
	{
		json r = json::array();
		for (auto const &entry : row)
		{
			json coeffs = json::array();
			for (auto const &c : entry)
				coeffs.push_back(c.to_string());
			r.push_back(coeffs);
		}
		table.push_back(r);
	}
	return json{{"basis", B.basis}, {"unit", B.unit}, {"table", table}};
}

json series_json(TruncSeries1 const &s)
{
	json out = json::array();
	for (int k = 0; k <= s.order(); ++k)
		out.push_back(s.coeff(k).to_string());
	return out;
}

json law_json(TruncSeries2 const &F)
{
	json out = json::object();
	for (int d = 0; d <= F.order(); ++d)
		for (int i = 0; i <= d; ++i)
			if (!F.coeff(i, d - i).is_zero())
				out[std::to_string(i) + "," + std::to_string(d - i)] = F.coeff(i, d - i).to_string();
	return out;
}

json object_json(FGObject const &X)
{
	json coords = json::array();
	for (auto const &h : X.coords)
		coords.push_back(series_json(h.series()));
	return json{{"ring", X.base.describe()}, {"law", law_json(X.law0.series())}, {"coordinates", coords}};
}

json violation_json(AxiomViolation const &v)
{
	return json{{"axiom", to_string(v.axiom)}, {"degree", v.degree},       {"index", v.index},
	            {"lhs", v.lhs.to_string()},    {"rhs", v.rhs.to_string()}, {"message", v.message}};
}

json form_json(FormElement const &f)
{
	return json{{"twist", f.twist}, {"coeff", f.coeff.to_string()}, {"basisCoord", f.basis}, {"text", f.to_string()}};
}

} // namespace formal::cli
