#ifndef EXTVAN_PIPELINE_HPP
#define EXTVAN_PIPELINE_HPP

#include "extvan/config.hpp"
#include "extvan/report.hpp"

namespace extvan {

struct AnalyzeOutcome {
    ReportJson document;
    std::string text_summary;
};

/* Full analysis pipeline for one configuration: build the algebra and
 * modules, compute the Ext window, choose the acting-ring degrees, fit,
 * classify, optionally search for a regular element, verify the holdout,
 * and assemble the report document. */
AnalyzeOutcome run_analyze(const RunConfig& cfg, bool include_timing = false);

// CSV "n,dim" of Ext^n(M, N) for n = 0..n_max
std::string run_ext_csv(const RunConfig& cfg);

// CSV "n,generators" of the resolution of M
std::string run_resolve_csv(const RunConfig& cfg);

// maps an Error to the documented process exit code
int exit_code_for(const Error& e);

}  // namespace extvan

#endif
