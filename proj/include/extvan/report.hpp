#ifndef EXTVAN_REPORT_HPP
#define EXTVAN_REPORT_HPP

#include <json.hpp>

#include "extvan/quasipoly.hpp"
#include "extvan/vanishing.hpp"

namespace extvan {

using ReportJson = nlohmann::ordered_json;

/* JSON building blocks for the analysis report. Coefficients are emitted
 * as strings so rationals of any size survive a round trip. */
ReportJson poly_to_json(const Poly& p);
Poly poly_from_json(const ReportJson& j);
ReportJson window_to_json(const SeriesWindow& w);
SeriesWindow window_from_json(const ReportJson& j);
ReportJson report_to_json(const VanishingReport& r);
VanishingReport report_from_json(const ReportJson& j);
ReportJson analysis_to_json(const AnalysisResult& res);

/* Re-runs the holdout verification stored inside a report document;
 * reloading and re-verifying must reproduce pass/fail exactly. */
bool reverify_report_document(const ReportJson& doc);

}  // namespace extvan

#endif
