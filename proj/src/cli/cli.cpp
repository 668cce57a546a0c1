#include "formal/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "formal/certify.hpp"
#include "formal/diff_forms.hpp"
#include "formal/fg_category.hpp"
#include "formal/lrq.hpp"
#include "job_io.hpp"

namespace formal::cli
{

using nlohmann::json;

namespace
{

/// A mathematical outcome that is reported rather than thrown.
struct Outcome
{
	json result;
	int exit_code = kOk;
};

// ---- commands ----

Outcome check_fgl(Reader &in, Ctx const &ctx)
{
	auto ring = in.ring("ring");
	auto F = in.law_series("law", ring, ctx.order);
	in.finish();
	auto check = fgl_validate(F);
	Outcome out;
	out.result["valid"] = check.valid();
	out.result["associativityChecked"] = check.associativity_checked;
	out.result["violations"] = json::array();
	for (auto const &v : check.violations)
		out.result["violations"].push_back(violation_json(v));
	if (!check.valid())
	{
		out.result["firstFailure"] = violation_json(check.first());
		out.exit_code = kViolation;
	}
	return out;
}

Outcome transform(Reader &in, Ctx const &ctx)
{
	auto ring = in.ring("ring");
	auto F = in.law("law", ring, ctx.order);
	auto g = CoordinateChange(in.series("coordinate", ring, ctx.order));
	in.finish();
	auto G = fgl_transform(F, g);
	Outcome out;
	out.result["law"] = law_json(G.series());
	out.result["lawText"] = G.series().to_string();
	out.result["coordinateInverse"] = series_json(g.inverse_series());
	out.result["coordinateInverseText"] = g.inverse_series().to_string();
	out.result["valid"] = fgl_validate(G.series()).valid();
	return out;
}

Outcome reverse(Reader &in, Ctx const &ctx)
{
	auto ring = in.ring("ring");
	auto g = in.series("series", ring, ctx.order);
	in.finish();
	auto h = ps_reverse(g);
	auto id = TruncSeries1::identity(ring, ctx.order);
	Outcome out;
	out.result["reverse"] = series_json(h);
	out.result["reverseText"] = h.to_string();
	out.result["leftComposite"] = ps_compose(g, h) == id;
	out.result["rightComposite"] = ps_compose(h, g) == id;
	return out;
}

Outcome quillen(Reader &in, Ctx const &ctx)
{
	auto X = in.object("object", ctx.order);
	in.finish();
	auto S = to_alg_system(X);
	auto back = from_alg_system(X.base, S);
	Outcome out;
	out.result["laws"] = json::array();
	for (auto const &F : S.laws)
		out.result["laws"].push_back(law_json(F.series()));
	out.result["isos"] = json::array();
	for (auto const &f : S.isos)
		out.result["isos"].push_back(series_json(f));
	out.result["objectRoundtrip"] = back == X;
	out.result["systemRoundtrip"] = to_alg_system(back) == S;
	if (!(back == X) || !(to_alg_system(back) == S))
		out.exit_code = kViolation;
	return out;
}

Outcome morphism(Reader &in, Ctx const &ctx)
{
	auto X = in.object("target", ctx.order);
	auto Y = in.object("source", ctx.order);
	auto phi = in.hom("map", Y.base, X.base);
	in.finish();
	auto res = morphism_check(phi, X, Y);
	Outcome out;
	out.result["accepted"] = res.accepted;
	if (!res.accepted)
	{
		json where{{"condition", res.condition}, {"message", res.message}};
		if (res.index)
			where["index"] = {res.index->first, res.index->second};
		out.result["firstFailure"] = where;
		out.exit_code = kViolation;
	}
	return out;
}

Outcome classify(Reader &in, Ctx const &ctx)
{
	auto X = in.object("object", ctx.order);
	in.finish();
	auto T = classify_map(X);
	Outcome out;
	json law = json::object();
	for (auto const &[idx, value] : T.law)
		law[std::to_string(idx.first) + "," + std::to_string(idx.second)] = value.to_string();
	out.result["law"] = law;
	out.result["isos"] = json::array();
	for (auto const &f : T.isos)
		out.result["isos"].push_back(series_json(f));
	auto S = MPSurrogate::standard(RingSpec::localized_integers({2}), ctx.order, X.r());
	json images = json::object();
	auto values = surrogate_images(S, T);
	auto full = S.full_ring().vars();
	for (size_t k = 0; k < full.size(); ++k)
		images[full[k]] = values[k].to_string();
	out.result["surrogateImages"] = images;
	return out;
}

Outcome forms(Reader &in, Ctx const &ctx)
{
	auto ring = in.ring("ring");
	auto op = in.string("operation");
	Outcome out;
	if (op == "multiply")
	{
		auto a = in.form("left", ring);
		auto b = in.form("right", ring);
		in.finish();
		out.result["product"] = form_json(form_mul(a, b));
	}
	else if (op == "change-basis")
	{
		auto a = in.form("form", ring);
		auto g = CoordinateChange(in.series("coordinate", ring, ctx.order));
		auto name = in.string("newBasis");
		in.finish();
		out.result["form"] = form_json(form_change_basis(a, g, name));
	}
	else if (op == "degree")
	{
		auto a = in.form("form", ring);
		in.finish();
		out.result["cohomological"] = form_degree(a, Grading::Cohomological);
		out.result["homological"] = form_degree(a, Grading::Homological);
	}
	else if (op == "in-degree")
	{
		int degree = in.integer("degree");
		auto grading = in.grading("grading");
		auto coeff = in.element("coeff", ring);
		auto basis = in.string("basisCoord");
		in.finish();
		out.result["form"] = form_json(form_in_degree(degree, grading, coeff, basis));
		out.result["regraded"] = regrade(degree);
	}
	else
		throw InputError("operation must be multiply, change-basis, degree or in-degree");
	return out;
}

int verdict_exit(Verdict v)
{
	switch (v)
	{
	case Verdict::Accept: return kOk;
	case Verdict::Reject: return kViolation;
	case Verdict::Unknown: return kUnknown;
	}
	return kUnknown;
}

Outcome lrq_validate_cmd(Reader &in, Ctx const &)
{
	auto P = in.presentation("presentation");
	in.finish();
	auto v = lrq_validate(P);
	return {validation_json(v), verdict_exit(v.verdict)};
}

Outcome lrq_compose_cmd(Reader &in, Ctx const &)
{
	auto inner = in.presentation("inner");
	auto inner_check = lrq_validate(inner);
	if (inner_check.verdict != Verdict::Accept || !inner_check.result)
		return {json{{"inner", validation_json(inner_check)}}, verdict_exit(inner_check.verdict) == kOk
		                                                           ? kUnknown
		                                                           : verdict_exit(inner_check.verdict)};
	auto outer = in.presentation_over("outer", *inner_check.result);
	in.finish();
	auto outer_check = lrq_validate(outer);
	if (outer_check.verdict != Verdict::Accept)
		return {json{{"outer", validation_json(outer_check)}}, verdict_exit(outer_check.verdict)};
	auto c = lrq_compose(outer, inner);
	auto v = lrq_validate(c.presentation);
	Outcome out;
	out.result["presentation"] = presentation_json(c.presentation);
	out.result["clearingFactors"] = json::array();
	for (auto const &f : c.factors)
		out.result["clearingFactors"].push_back(f.to_string());
	out.result["validation"] = validation_json(v);
	bool agree = v.result && same_quotient(*v.result, outer.result());
	out.result["agreesWithTwoStep"] = agree;
	out.exit_code = v.verdict != Verdict::Accept ? verdict_exit(v.verdict) : agree ? kOk : kViolation;
	return out;
}

Outcome lrq_tensor_cmd(Reader &in, Ctx const &)
{
	auto P = in.presentation("left");
	auto Q = in.presentation("right");
	in.finish();
	auto t = lrq_tensor(P, Q);
	auto v = lrq_validate(t.presentation);
	Outcome out;
	out.result["presentation"] = presentation_json(t.presentation);
	out.result["renamed"] = t.renamed;
	out.result["validation"] = validation_json(v);
	if (v.result)
		if (auto card = v.result->cardinality())
			out.result["cardinality"] = card->get_str();
	out.exit_code = verdict_exit(v.verdict);
	return out;
}

json standard_json(StandardPresentation const &sp)
{
	json j;
	j["kind"] = sp.kind;
	j["presentation"] = presentation_json(sp.presentation);
	if (sp.from_target)
		j["fromTarget"] = hom_json(*sp.from_target);
	if (sp.extension)
		j["extension"] = extension_json(*sp.extension);
	return j;
}

Outcome standard_present(Reader &in, Ctx const &ctx)
{
	auto target = in.ring("target");
	auto gens = in.strings("gens");
	auto base = RingSpec::polynomial(RingSpec::localized_integers({2}), gens);
	auto images = in.elements("images", target);
	in.finish();
	auto sp = standard_presentation(target, base, images, ctx.degree_bound);
	Outcome out;
	out.result = standard_json(sp);
	auto v = lrq_validate(sp.presentation);
	out.result["validation"] = validation_json(v);
	if (sp.extension)
	{
		auto fm = free_module_certificate(sp.presentation, *sp.extension);
		out.result["freeModule"] = json{{"accepted", fm.accepted}, {"message", fm.message}};
	}
	out.exit_code = verdict_exit(v.verdict);
	return out;
}

Outcome certify_good_cmd(Reader &in, Ctx const &ctx)
{
	auto X = in.object("object", ctx.order);
	in.finish();
	auto S = MPSurrogate::standard(RingSpec::localized_integers({2}), ctx.order, X.r());
	auto images = surrogate_images(S, classify_map(X));
	images.resize(S.mp_gens.size(), X.base.zero());
	auto base = standard_presentation(X.base, S.base_ring(), images, ctx.degree_bound);
	auto cert = certify_good(X, S, base, ctx.degree_bound);
	Outcome out;
	json surrogate;
	surrogate["mpGens"] = S.mp_gens;
	surrogate["uBlocks"] = S.u_blocks;
	out.result["surrogate"] = surrogate;
	out.result["basePresentation"] = standard_json(base);
	out.result["liftedPresentation"] = presentation_json(cert.lifted);
	out.result["auxSequence"] = json::array();
	for (auto const &v : cert.aux_sequence)
		out.result["auxSequence"].push_back(v.to_string());
	out.result["validation"] = validation_json(cert.validation);
	if (cert.to_target)
		out.result["toTarget"] = hom_json(*cert.to_target);
	if (cert.from_target)
		out.result["fromTarget"] = hom_json(*cert.from_target);
	if (cert.extension)
	{
		out.result["extension"] = extension_json(*cert.extension);
		auto fm = free_module_certificate(cert.lifted, *cert.extension);
		out.result["freeModule"] = json{{"accepted", fm.accepted}, {"message", fm.message}};
		if (!fm.accepted)
			out.exit_code = kViolation;
	}
	if (cert.validation.verdict != Verdict::Accept)
		out.exit_code = verdict_exit(cert.validation.verdict);
	return out;
}

Outcome permute(Reader &in, Ctx const &ctx)
{
	auto X = in.object("object", ctx.order);
	auto sigma = in.integers("sigma");
	in.finish();
	auto Y = permute_coordinates(X, sigma);
	Outcome out;
	out.result["object"] = object_json(Y);
	return out;
}

struct Command
{
	char const *anchor;
	std::function<Outcome(Reader &, Ctx const &)> run;
};

std::map<std::string, Command> const &commands()
{
	static std::map<std::string, Command> const table{
	    {"check-fgl", {"formal group law axioms", check_fgl}},
	    {"transform", {"coordinate change of a formal group law", transform}},
	    {"reverse", {"reversion of a power series", reverse}},
	    {"quillen", {"formal groups with several coordinates as algebra systems", quillen}},
	    {"morphism", {"morphisms of formal groups with coordinates", morphism}},
	    {"classify", {"classifying map to the surrogate generators", classify}},
	    {"forms", {"graded ring of differential forms", forms}},
	    {"lrq-validate", {"localised regular quotient", lrq_validate_cmd}},
	    {"lrq-compose", {"localised regular quotient of a localised regular quotient", lrq_compose_cmd}},
	    {"lrq-tensor", {"tensor product of presentations", lrq_tensor_cmd}},
	    {"standard-present", {"standard rings as localised regular quotients", standard_present}},
	    {"certify-good", {"multirealisability certificate", certify_good_cmd}},
	    {"permute", {"permutation action on coordinates", permute}},
	};
	return table;
}

int error_exit(ErrorKind kind)
{
	switch (kind)
	{
	case ErrorKind::InvalidRing:
	case ErrorKind::UnknownVariable:
	case ErrorKind::Parse:
	case ErrorKind::RingMismatch:
	case ErrorKind::NotInRing: return kInputError;
	case ErrorKind::UnitUnknown:
	case ErrorKind::UnsupportedLocalisation:
	case ErrorKind::DegreeBoundExceeded: return kUnknown;
	default: return kViolation;
	}
}

char const *outcome_name(int code)
{
	switch (code)
	{
	case kOk: return "success";
	case kViolation: return "violation";
	case kInputError: return "input-error";
	default: return "unknown";
	}
}

Report finish_report(json document, int code)
{
	document["exitCode"] = code;
	document["outcome"] = outcome_name(code);
	return {std::move(document), code};
}

} // namespace

Report run(json const &job, Options const &defaults)
{
	json doc;
	try
	{
		if (!job.is_object())
			throw InputError("job must be a JSON object");
		for (auto const &[key, value] : job.items())
			if (key != "schemaVersion" && key != "command" && key != "inputs" && key != "options")
				throw InputError("unknown job field '" + key + "'");
		if (!job.contains("schemaVersion") || job["schemaVersion"] != kSchemaVersion)
			throw InputError("schemaVersion must be " + std::to_string(kSchemaVersion));
		if (!job.contains("command") || !job["command"].is_string())
			throw InputError("missing command");
		std::string name = job["command"];
		doc["command"] = name;
		auto it = commands().find(name);
		if (it == commands().end())
			throw InputError("unknown command '" + name + "'");
		doc["anchor"] = it->second.anchor;
		Ctx ctx = read_options(job.value("options", json::object()), defaults);
		doc["options"] = json{{"degreeBound", ctx.degree_bound}, {"order", ctx.order}};
		json inputs = job.value("inputs", json::object());
		doc["inputs"] = inputs;
		Reader reader(inputs, "inputs");
		auto out = it->second.run(reader, ctx);
		doc["result"] = out.result;
		return finish_report(std::move(doc), out.exit_code);
	}
	catch (InputError const &e)
	{
		doc["error"] = json{{"kind", "input"}, {"message", e.what()}};
		return finish_report(std::move(doc), kInputError);
	}
	catch (AlgebraError const &e)
	{
		doc["error"] = json{{"kind", to_string(e.kind())}, {"message", e.what()}};
		return finish_report(std::move(doc), error_exit(e.kind()));
	}
}

Report run_file(std::string const &path, Options const &defaults)
{
	std::ifstream file(path);
	if (!file)
		return finish_report(json{{"error", {{"kind", "input"}, {"message", "cannot read " + path}}}}, kInputError);
	json job;
	try
	{
		job = json::parse(file);
	}
	catch (json::parse_error const &e)
	{
		return finish_report(json{{"error", {{"kind", "input"}, {"message", e.what()}}}}, kInputError);
	}
	return run(job, defaults);
}

std::string render(Report const &report) { return report.document.dump(2) + "\n"; }

} // namespace formal::cli
