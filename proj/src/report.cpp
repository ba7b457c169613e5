#include "extvan/report.hpp"

namespace extvan {

ReportJson poly_to_json(const Poly& p) {
    ReportJson arr = ReportJson::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

Poly poly_from_json(const ReportJson& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(Rat::from_string(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

ReportJson window_to_json(const SeriesWindow& w) {
    ReportJson j;
    j["start"] = w.start;
    j["terms"] = w.terms;
    return j;
}

SeriesWindow window_from_json(const ReportJson& j) {
    SeriesWindow w;
    w.start = j.at("start").get<std::int64_t>();
    w.terms = j.at("terms").get<std::vector<std::int64_t>>();
    return w;
}

ReportJson report_to_json(const VanishingReport& r) {
    ReportJson j;
    j["verdict"] = verdict_name(r.verdict);
    j["period"] = r.period;
    j["nonvanishing_residues"] = r.nonvanishing_residues;
    j["m0"] = r.m0;
    j["provenance"] = provenance_name(r.provenance);
    j["minimal_period"] = r.minimal_period;
    j["note"] = r.note;
    return j;
}

VanishingReport report_from_json(const ReportJson& j) {
    VanishingReport r;
    std::string verdict = j.at("verdict").get<std::string>();
    r.verdict = verdict == "EventuallyZero" ? Verdict::EventuallyZero
                                            : Verdict::PeriodicNonvanishing;
    r.period = j.at("period").get<std::int64_t>();
    r.nonvanishing_residues = j.at("nonvanishing_residues").get<std::vector<std::int64_t>>();
    r.m0 = j.at("m0").get<std::int64_t>();
    std::string prov = j.at("provenance").get<std::string>();
    r.provenance = prov == "both"              ? Provenance::Both
                   : prov == "regular-element" ? Provenance::RegularElement
                                               : Provenance::QuasiPolynomial;
    r.minimal_period = j.at("minimal_period").get<std::int64_t>();
    r.note = j.value("note", "");
    return r;
}

ReportJson analysis_to_json(const AnalysisResult& res) {
    ReportJson j;
    j["acting_degrees"] = res.acting_degrees;
    j["even_degrees"] = res.even_degrees;
    ReportJson fit;
    fit["numerator"] = poly_to_json(res.gf.numerator);
    fit["denominator_degrees"] = res.gf.denominator_degrees;
    j["fit"] = fit;
    ReportJson red;
    red["poly_part"] = poly_to_json(res.reduced.poly_part);
    red["numerator"] = poly_to_json(res.reduced.numerator);
    red["denominator"] = poly_to_json(res.reduced.denominator);
    j["reduced"] = red;
    ReportJson qp;
    qp["period"] = res.qp.period;
    qp["valid_from"] = res.qp.valid_from;
    ReportJson comps = ReportJson::array();
    for (const auto& g : res.qp.components) comps.push_back(poly_to_json(g));
    qp["components"] = comps;
    j["quasi_polynomial"] = qp;
    j["report"] = report_to_json(res.report);
    return j;
}

bool reverify_report_document(const ReportJson& doc) {
    VanishingReport rep = report_from_json(doc.at("analysis").at("report"));
    if (!doc.contains("verification") || doc.at("verification").is_null()) return true;
    const auto& v = doc.at("verification");
    SeriesWindow holdout = window_from_json(v.at("holdout"));
    VerifyResult res = verify_verdict(rep, holdout);
    return res.pass == v.at("pass").get<bool>();
}

}  // namespace extvan
